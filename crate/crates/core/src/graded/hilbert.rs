use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::poly::Monomial;

use super::module::GradedModule;
use super::resolution::BettiTable;

/// `H(z) = z^shift · f(z) / (1 − z)^dim` with `f(1) ≠ 0`, or the zero series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertSeries {
    pub numerator: Vec<i64>,
    pub shift: i64,
    /// Pole order at `z = 1`; `-1` for the zero module.
    pub dim: i64,
}

/// Integer polynomial helpers, coefficients indexed by degree.
fn trim(mut p: Vec<i64>) -> Vec<i64> {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub_shifted(a: &[i64], b: &[i64], k: usize) -> Vec<i64> {
    let mut out = a.to_vec();
    if out.len() < b.len() + k {
        out.resize(b.len() + k, 0);
    }
    for (j, y) in b.iter().enumerate() {
        out[j + k] -= y;
    }
    trim(out)
}

fn minimal_monomials(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|m| m.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Numerator `K(S/L)` of the Hilbert series of `S/L` over `(1 − z)^n`.
pub fn monomial_numerator(gens: &[Monomial]) -> Vec<i64> {
    let gens = minimal_monomials(gens.to_vec());
    if gens.is_empty() {
        return vec![1];
    }
    let coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if coprime {
        return gens.iter().fold(vec![1], |acc, m| {
            let mut f = vec![0; m.degree() as usize + 1];
            f[0] = 1;
            f[m.degree() as usize] -= 1;
            poly_mul(&acc, &f)
        });
    }
    let (pivot, rest) = gens.split_last().unwrap();
    let colon: Vec<Monomial> = rest
        .iter()
        .map(|g| pivot.quotient_of(&g.lcm(pivot)).unwrap())
        .collect();
    let a = monomial_numerator(rest);
    let b = monomial_numerator(&colon);
    poly_sub_shifted(&a, &b, pivot.degree() as usize)
}

impl HilbertSeries {
    pub fn zero() -> Self {
        HilbertSeries {
            numerator: Vec::new(),
            shift: 0,
            dim: -1,
        }
    }

    /// Cancel `(1 − z)` factors from `z^shift · num / (1 − z)^n`.
    pub fn from_uncancelled(num: Vec<i64>, shift: i64, n: usize) -> Self {
        let mut num = trim(num);
        let mut shift = shift;
        if num.is_empty() {
            return HilbertSeries::zero();
        }
        let lead_zeros = num.iter().take_while(|c| **c == 0).count();
        num.drain(..lead_zeros);
        shift += lead_zeros as i64;
        let mut d = n as i64;
        while d > 0 && num.iter().sum::<i64>() == 0 {
            // synthetic division by (1 − z)
            let mut q = Vec::with_capacity(num.len() - 1);
            let mut acc = 0;
            for c in &num[..num.len() - 1] {
                acc += c;
                q.push(acc);
            }
            num = trim(q);
            d -= 1;
        }
        HilbertSeries {
            numerator: num,
            shift,
            dim: d,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_empty()
    }

    /// `e = f(1)`.
    pub fn multiplicity(&self) -> i64 {
        self.numerator.iter().sum()
    }

    /// Hilbert function values `H(0), …, H(upto − 1)`.
    pub fn values(&self, upto: usize) -> Vec<i64> {
        // expand 1/(1 − z)^dim as binomial series, then shift
        let mut series = vec![0i64; upto];
        if self.is_zero() {
            return series;
        }
        let d = self.dim.max(0) as usize;
        let mut denom = vec![0i64; upto];
        if upto > 0 {
            denom[0] = 1;
        }
        for _ in 0..d {
            for k in 1..upto {
                denom[k] += denom[k - 1];
            }
        }
        for (i, c) in self.numerator.iter().enumerate() {
            for (k, s) in denom.iter().enumerate() {
                let idx = i as i64 + k as i64 + self.shift;
                if idx >= 0 && (idx as usize) < upto {
                    series[idx as usize] += c * s;
                }
            }
        }
        series
    }

    pub fn value(&self, k: usize) -> i64 {
        self.values(k + 1)[k]
    }

    /// The numerator as a map `degree ↦ coefficient`, shift applied.
    pub fn numerator_terms(&self) -> BTreeMap<i64, i64> {
        self.numerator
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(i, c)| (i as i64 + self.shift, *c))
            .collect()
    }
}

pub(crate) fn fmt_ratio(num: &BTreeMap<i64, i64>, den: &BTreeMap<i64, i64>) -> String {
    let wrap = |t: &BTreeMap<i64, i64>| {
        if t.len() > 1 {
            format!("({})", fmt_zpoly(t))
        } else {
            fmt_zpoly(t)
        }
    };
    if den.len() == 1 && den.get(&0) == Some(&1) {
        fmt_zpoly(num)
    } else {
        format!("{}/{}", wrap(num), wrap(den))
    }
}

pub(crate) fn fmt_zpoly(terms: &BTreeMap<i64, i64>) -> String {
    let mut s = String::new();
    for (k, (e, c)) in terms.iter().enumerate() {
        let (neg, a) = (*c < 0, c.unsigned_abs());
        if k == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let mon = match e {
            0 => String::new(),
            1 => "z".to_string(),
            _ => format!("z^{e}"),
        };
        if mon.is_empty() {
            s.push_str(&a.to_string());
        } else if a == 1 {
            s.push_str(&mon);
        } else {
            s.push_str(&format!("{a}*{mon}"));
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.numerator_terms();
        let num = if terms.len() > 1 {
            format!("({})", fmt_zpoly(&terms))
        } else {
            fmt_zpoly(&terms)
        };
        match self.dim {
            d if d <= 0 => write!(f, "{}", fmt_zpoly(&terms)),
            1 => write!(f, "{num}/(1 - z)"),
            d => write!(f, "{num}/(1 - z)^{d}"),
        }
    }
}

/// Hilbert series of a graded module, from the leading terms of a standard
/// basis of its relations (plus the defining ideal).
pub fn hilbert_series(m: &GradedModule) -> Result<HilbertSeries> {
    let layout = m.layout();
    let n = m.ring().nvars();
    if layout.rank == 0 {
        return Ok(HilbertSeries::zero());
    }
    let sb = m.ring().submodule_basis(layout, m.relations())?;
    let mut per_comp: Vec<Vec<Monomial>> = vec![Vec::new(); layout.rank];
    for (mon, c) in sb.leading_monomials() {
        per_comp[c].push(mon);
    }
    let lo = *layout.twists.iter().min().unwrap();
    let mut total: Vec<i64> = Vec::new();
    for (c, gens) in per_comp.iter().enumerate() {
        let k = monomial_numerator(gens);
        let off = (layout.twists[c] - lo) as usize;
        if total.len() < k.len() + off {
            total.resize(k.len() + off, 0);
        }
        for (i, x) in k.iter().enumerate() {
            total[i + off] += x;
        }
    }
    Ok(HilbertSeries::from_uncancelled(total, lo, n))
}

/// `Σ_i (−1)^i Σ_j β_{i,j} z^j / (1 − z)^n` from a finite resolution over
/// the polynomial ring in `n` variables.
pub fn series_from_betti(betti: &BettiTable, n: usize) -> HilbertSeries {
    let mut terms: BTreeMap<i64, i64> = BTreeMap::new();
    for (i, row) in &betti.entries {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        for (j, b) in row {
            *terms.entry(*j).or_default() += sign * *b as i64;
        }
    }
    terms.retain(|_, c| *c != 0);
    let Some((&lo, _)) = terms.iter().next() else {
        return HilbertSeries::zero();
    };
    let hi = *terms.keys().next_back().unwrap();
    let mut num = vec![0; (hi - lo) as usize + 1];
    for (j, c) in terms {
        num[(j - lo) as usize] = c;
    }
    HilbertSeries::from_uncancelled(num, lo, n)
}
