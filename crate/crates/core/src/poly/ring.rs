use std::cmp::Ordering;
use std::sync::Arc;

use super::field::{Coeff, PrimeField};
use super::monomial::Monomial;
use super::order::OrderSpec;
use crate::error::{Error, Result};

/// A single term `c·x^a·e_comp` of a free-module element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Coeff,
    pub mon: Monomial,
    pub comp: usize,
}

/// Sparse polynomial, terms strictly decreasing under the ring order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<(Coeff, Monomial)>,
}

/// Sparse element of a free module `k[x]^r`, terms strictly decreasing
/// under the module order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ModuleElement {
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Coeff, Monomial)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Coeff, Monomial)> {
        self.terms.first()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(_, m)| m.degree()).min()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(_, m)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.min_degree() == self.max_degree()
    }

    /// Coefficient of the constant monomial.
    pub fn constant_term(&self) -> Coeff {
        self.terms
            .iter()
            .find(|(_, m)| m.is_one())
            .map(|(c, _)| *c)
            .unwrap_or(0)
    }

    /// Sum of the terms of exactly the given degree.
    pub fn homogeneous_part(&self, d: u32) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(_, m)| m.degree() == d)
                .cloned()
                .collect(),
        }
    }

    /// Drop all terms of degree `>= t`.
    pub fn truncate_below(&self, t: u32) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(_, m)| m.degree() < t)
                .cloned()
                .collect(),
        }
    }
}

impl ModuleElement {
    pub fn zero() -> Self {
        ModuleElement { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn components(&self) -> impl Iterator<Item = usize> + '_ {
        let mut seen: Vec<usize> = self.terms.iter().map(|t| t.comp).collect();
        seen.sort_unstable();
        seen.dedup();
        seen.into_iter()
    }

    pub fn max_comp(&self) -> Option<usize> {
        self.terms.iter().map(|t| t.comp).max()
    }

    /// Minimal and maximal shifted degree among the terms.
    pub fn degree_range(&self, order: &OrderSpec) -> Option<(i64, i64)> {
        let mut it = self.terms.iter().map(|t| order.weighted_degree(&t.mon, t.comp));
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), d| (lo.min(d), hi.max(d))))
    }

    pub fn is_homogeneous(&self, order: &OrderSpec) -> bool {
        self.degree_range(order).map_or(true, |(a, b)| a == b)
    }

    pub fn has_unit_entry(&self) -> bool {
        self.terms.iter().any(|t| t.mon.is_one())
    }

    pub(crate) fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub(crate) fn from_sorted_terms(terms: Vec<Term>) -> Self {
        ModuleElement { terms }
    }
}

/// Arithmetic context: coefficient field, variable names and active order.
#[derive(Clone, Debug)]
pub struct PolyRing {
    field: PrimeField,
    names: Arc<Vec<String>>,
    order: OrderSpec,
}

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.names == other.names && self.order == other.order
    }
}

impl PolyRing {
    pub fn new(field: PrimeField, names: Vec<String>, order: OrderSpec) -> Self {
        PolyRing {
            field,
            names: Arc::new(names),
            order,
        }
    }

    /// Variables named `x1..xn`.
    pub fn with_nvars(field: PrimeField, n: usize, order: OrderSpec) -> Self {
        PolyRing::new(field, (1..=n).map(|i| format!("x{i}")).collect(), order)
    }

    pub fn with_order(&self, order: OrderSpec) -> PolyRing {
        PolyRing {
            field: self.field,
            names: self.names.clone(),
            order,
        }
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn order(&self) -> &OrderSpec {
        &self.order
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    #[inline]
    pub fn cmp_terms(&self, a: &Term, b: &Term) -> Ordering {
        self.order.cmp_module(&a.mon, a.comp, &b.mon, b.comp)
    }

    // ----- polynomials -----

    pub fn poly(&self, terms: impl IntoIterator<Item = (i64, Monomial)>) -> Polynomial {
        let f = self.field;
        self.poly_from_coeffs(terms.into_iter().map(|(c, m)| (f.from_i64(c), m)).collect())
    }

    pub fn poly_from_coeffs(&self, mut terms: Vec<(Coeff, Monomial)>) -> Polynomial {
        terms.sort_by(|a, b| self.order.cmp_monomials(&b.1, &a.1));
        let mut out: Vec<(Coeff, Monomial)> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            match out.last_mut() {
                Some(last) if last.1 == m => last.0 = self.field.add(last.0, c),
                _ => out.push((c, m)),
            }
            if out.last().map_or(false, |t| t.0 == 0) {
                out.pop();
            }
        }
        Polynomial { terms: out }
    }

    pub fn constant(&self, c: i64) -> Polynomial {
        self.poly([(c, Monomial::one(self.nvars()))])
    }

    pub fn one(&self) -> Polynomial {
        self.constant(1)
    }

    pub fn var(&self, i: usize) -> Polynomial {
        self.poly([(1, Monomial::var(self.nvars(), i))])
    }

    pub fn monomial_poly(&self, m: Monomial) -> Polynomial {
        self.poly([(1, m)])
    }

    /// Re-sort a polynomial built under another order.
    pub fn resort_poly(&self, p: &Polynomial) -> Polynomial {
        self.poly_from_coeffs(p.terms.clone())
    }

    fn merge_polys(&self, a: &Polynomial, b: &Polynomial, scale_b: Coeff, shift_b: Option<&Monomial>) -> Polynomial {
        let f = self.field;
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        let bterm = |j: usize| -> (Coeff, Monomial) {
            let (c, m) = &b.terms[j];
            let m = match shift_b {
                Some(s) => m.mul(s),
                None => m.clone(),
            };
            (f.mul(*c, scale_b), m)
        };
        while i < a.terms.len() || j < b.terms.len() {
            if j >= b.terms.len() {
                out.push(a.terms[i].clone());
                i += 1;
                continue;
            }
            let bt = bterm(j);
            if i >= a.terms.len() {
                if bt.0 != 0 {
                    out.push(bt);
                }
                j += 1;
                continue;
            }
            match self.order.cmp_monomials(&a.terms[i].1, &bt.1) {
                Ordering::Greater => {
                    out.push(a.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    if bt.0 != 0 {
                        out.push(bt);
                    }
                    j += 1;
                }
                Ordering::Equal => {
                    let c = f.add(a.terms[i].0, bt.0);
                    if c != 0 {
                        out.push((c, bt.1));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial { terms: out }
    }

    pub fn padd(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        self.merge_polys(a, b, 1, None)
    }

    pub fn psub(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        self.merge_polys(a, b, self.field.neg(1), None)
    }

    pub fn pneg(&self, a: &Polynomial) -> Polynomial {
        self.pscale(a, self.field.neg(1))
    }

    pub fn pscale(&self, a: &Polynomial, c: Coeff) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: a
                .terms
                .iter()
                .map(|(x, m)| (self.field.mul(*x, c), m.clone()))
                .collect(),
        }
    }

    pub fn pmul_term(&self, a: &Polynomial, c: Coeff, m: &Monomial) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: a
                .terms
                .iter()
                .map(|(x, n)| (self.field.mul(*x, c), n.mul(m)))
                .collect(),
        }
    }

    pub fn pmul(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        let mut terms = Vec::with_capacity(a.terms.len() * b.terms.len());
        for (ca, ma) in &a.terms {
            for (cb, mb) in &b.terms {
                terms.push((self.field.mul(*ca, *cb), ma.mul(mb)));
            }
        }
        self.poly_from_coeffs(terms)
    }

    pub fn ppow(&self, a: &Polynomial, e: u32) -> Polynomial {
        let mut r = self.one();
        for _ in 0..e {
            r = self.pmul(&r, a);
        }
        r
    }

    /// `(ν(f), in(f))`: lowest total degree of the support and the sum of
    /// the terms of that degree.
    pub fn poly_order_and_initial_form(&self, f: &Polynomial) -> Result<(u32, Polynomial)> {
        let nu = f.min_degree().ok_or(Error::ZeroOrder)?;
        Ok((nu, f.homogeneous_part(nu)))
    }

    // ----- module elements -----

    pub fn element_from_terms(&self, mut terms: Vec<Term>) -> ModuleElement {
        terms.sort_by(|a, b| self.cmp_terms(b, a));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.mon == t.mon && last.comp == t.comp => {
                    last.coeff = self.field.add(last.coeff, t.coeff)
                }
                _ => out.push(t),
            }
            if out.last().map_or(false, |t| t.coeff == 0) {
                out.pop();
            }
        }
        ModuleElement { terms: out }
    }

    pub fn resort_element(&self, v: &ModuleElement) -> ModuleElement {
        self.element_from_terms(v.terms.clone())
    }

    pub fn unit_vector(&self, comp: usize) -> ModuleElement {
        ModuleElement {
            terms: vec![Term {
                coeff: 1,
                mon: Monomial::one(self.nvars()),
                comp,
            }],
        }
    }

    /// The column whose entry in component `i` is `entries[i]`.
    pub fn column(&self, entries: &[Polynomial]) -> ModuleElement {
        self.column_with_offset(entries, 0)
    }

    pub fn column_with_offset(&self, entries: &[Polynomial], offset: usize) -> ModuleElement {
        let terms = entries
            .iter()
            .enumerate()
            .flat_map(|(i, p)| {
                p.terms.iter().map(move |(c, m)| Term {
                    coeff: *c,
                    mon: m.clone(),
                    comp: i + offset,
                })
            })
            .collect();
        self.element_from_terms(terms)
    }

    pub fn poly_times_unit(&self, p: &Polynomial, comp: usize) -> ModuleElement {
        let terms = p
            .terms
            .iter()
            .map(|(c, m)| Term {
                coeff: *c,
                mon: m.clone(),
                comp,
            })
            .collect();
        self.element_from_terms(terms)
    }

    /// Entry of `v` in component `comp`, as a polynomial.
    pub fn entry(&self, v: &ModuleElement, comp: usize) -> Polynomial {
        self.poly_from_coeffs(
            v.terms
                .iter()
                .filter(|t| t.comp == comp)
                .map(|t| (t.coeff, t.mon.clone()))
                .collect(),
        )
    }

    pub fn entries(&self, v: &ModuleElement, rank: usize) -> Vec<Polynomial> {
        let mut buckets: Vec<Vec<(Coeff, Monomial)>> = vec![Vec::new(); rank];
        for t in &v.terms {
            buckets[t.comp].push((t.coeff, t.mon.clone()));
        }
        buckets.into_iter().map(|b| self.poly_from_coeffs(b)).collect()
    }

    /// `a + c·m·b`, merged in one pass.
    pub fn add_scaled(&self, a: &ModuleElement, c: Coeff, m: &Monomial, b: &ModuleElement) -> ModuleElement {
        let f = self.field;
        if c == 0 || b.is_zero() {
            return a.clone();
        }
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        let mut next_b: Option<Term> = b.terms.first().map(|t| Term {
            coeff: f.mul(t.coeff, c),
            mon: t.mon.mul(m),
            comp: t.comp,
        });
        loop {
            let Some(bt) = next_b.as_ref() else {
                out.extend_from_slice(&a.terms[i..]);
                break;
            };
            if i >= a.terms.len() {
                out.push(bt.clone());
                out.extend(b.terms[j + 1..].iter().map(|t| Term {
                    coeff: f.mul(t.coeff, c),
                    mon: t.mon.mul(m),
                    comp: t.comp,
                }));
                break;
            }
            let mut advance_b = false;
            match self.cmp_terms(&a.terms[i], bt) {
                Ordering::Greater => {
                    out.push(a.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(bt.clone());
                    advance_b = true;
                }
                Ordering::Equal => {
                    let s = f.add(a.terms[i].coeff, bt.coeff);
                    if s != 0 {
                        out.push(Term {
                            coeff: s,
                            mon: bt.mon.clone(),
                            comp: bt.comp,
                        });
                    }
                    i += 1;
                    advance_b = true;
                }
            }
            if advance_b {
                j += 1;
                next_b = b.terms.get(j).map(|t| Term {
                    coeff: f.mul(t.coeff, c),
                    mon: t.mon.mul(m),
                    comp: t.comp,
                });
            }
        }
        ModuleElement { terms: out }
    }

    pub fn vadd(&self, a: &ModuleElement, b: &ModuleElement) -> ModuleElement {
        self.add_scaled(a, 1, &Monomial::one(self.nvars()), b)
    }

    pub fn vsub(&self, a: &ModuleElement, b: &ModuleElement) -> ModuleElement {
        self.add_scaled(a, self.field.neg(1), &Monomial::one(self.nvars()), b)
    }

    pub fn vscale(&self, a: &ModuleElement, c: Coeff) -> ModuleElement {
        if c == 0 {
            return ModuleElement::zero();
        }
        ModuleElement {
            terms: a
                .terms
                .iter()
                .map(|t| Term {
                    coeff: self.field.mul(t.coeff, c),
                    mon: t.mon.clone(),
                    comp: t.comp,
                })
                .collect(),
        }
    }

    pub fn vmul_term(&self, a: &ModuleElement, c: Coeff, m: &Monomial) -> ModuleElement {
        if c == 0 {
            return ModuleElement::zero();
        }
        ModuleElement {
            terms: a
                .terms
                .iter()
                .map(|t| Term {
                    coeff: self.field.mul(t.coeff, c),
                    mon: t.mon.mul(m),
                    comp: t.comp,
                })
                .collect(),
        }
    }

    pub fn vmul_poly(&self, a: &ModuleElement, p: &Polynomial) -> ModuleElement {
        let mut terms = Vec::with_capacity(a.terms.len() * p.terms.len());
        for (c, m) in &p.terms {
            for t in &a.terms {
                terms.push(Term {
                    coeff: self.field.mul(t.coeff, *c),
                    mon: t.mon.mul(m),
                    comp: t.comp,
                });
            }
        }
        self.element_from_terms(terms)
    }

    /// Apply a column-major matrix to a coefficient column: `Σ_r v_r · cols[r]`.
    pub fn apply_columns(&self, cols: &[ModuleElement], v: &ModuleElement) -> ModuleElement {
        let mut terms = Vec::new();
        for t in &v.terms {
            for s in &cols[t.comp].terms {
                terms.push(Term {
                    coeff: self.field.mul(t.coeff, s.coeff),
                    mon: t.mon.mul(&s.mon),
                    comp: s.comp,
                });
            }
        }
        self.element_from_terms(terms)
    }

    /// Relabel components through `map` (entries mapped to `None` must be absent).
    pub fn remap_components(&self, v: &ModuleElement, map: impl Fn(usize) -> Option<usize>) -> ModuleElement {
        let terms = v
            .terms
            .iter()
            .filter_map(|t| {
                map(t.comp).map(|c| Term {
                    coeff: t.coeff,
                    mon: t.mon.clone(),
                    comp: c,
                })
            })
            .collect();
        self.element_from_terms(terms)
    }

    /// Make the leading coefficient one.
    pub fn monic(&self, v: &ModuleElement) -> ModuleElement {
        match v.leading() {
            Some(t) if t.coeff != 1 => self.vscale(v, self.field.inv(t.coeff)),
            _ => v.clone(),
        }
    }

    /// `(ν(v), in(v))` for a free module with zero twists: minimal total
    /// degree over all components and the terms attaining it.
    pub fn order_and_initial_form(&self, v: &ModuleElement) -> Result<(u32, ModuleElement)> {
        let nu = v
            .terms
            .iter()
            .map(|t| t.mon.degree())
            .min()
            .ok_or(Error::ZeroOrder)?;
        Ok((
            nu,
            ModuleElement {
                terms: v
                    .terms
                    .iter()
                    .filter(|t| t.mon.degree() == nu)
                    .cloned()
                    .collect(),
            },
        ))
    }

    /// Lowest shifted-degree part of an element (twists from the order).
    pub fn lowest_form(&self, v: &ModuleElement) -> ModuleElement {
        let Some((lo, _)) = v.degree_range(&self.order) else {
            return ModuleElement::zero();
        };
        ModuleElement {
            terms: v
                .terms
                .iter()
                .filter(|t| self.order.weighted_degree(&t.mon, t.comp) == lo)
                .cloned()
                .collect(),
        }
    }

    // ----- display -----

    fn fmt_terms<'a>(&self, terms: impl Iterator<Item = (Coeff, &'a Monomial)>) -> String {
        let mut s = String::new();
        for (i, (c, m)) in terms.enumerate() {
            let sc = self.field.to_signed(c);
            let neg = sc < 0;
            let abs = sc.unsigned_abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                s.push_str(&abs.to_string());
            } else if abs == 1 {
                s.push_str(&m.fmt_with(&self.names));
            } else {
                s.push_str(&format!("{}*{}", abs, m.fmt_with(&self.names)));
            }
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }

    pub fn fmt_poly(&self, p: &Polynomial) -> String {
        self.fmt_terms(p.terms.iter().map(|(c, m)| (*c, m)))
    }

    pub fn fmt_element(&self, v: &ModuleElement, rank: usize) -> String {
        let entries = self.entries(v, rank);
        let parts: Vec<String> = entries.iter().map(|p| self.fmt_poly(p)).collect();
        format!("[{}]", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::order::OrderSpec;

    fn ring3(order: OrderSpec) -> PolyRing {
        PolyRing::new(
            PrimeField::default(),
            vec!["X".into(), "Y".into(), "Z".into()],
            order,
        )
    }

    #[test]
    fn order_and_initial_form_examples() {
        let r = ring3(OrderSpec::local());
        let (x, y, z) = (r.var(0), r.var(1), r.var(2));
        let f = r.psub(&r.pmul(&x, &z), &r.ppow(&y, 3));
        let (nu, inf) = r.poly_order_and_initial_form(&f).unwrap();
        assert_eq!(nu, 2);
        assert_eq!(inf, r.pmul(&x, &z));

        let g = r.psub(&r.ppow(&x, 4), &r.pmul(&y, &z));
        let (nu, inf) = r.poly_order_and_initial_form(&g).unwrap();
        assert_eq!(nu, 2);
        assert_eq!(inf, r.pneg(&r.pmul(&y, &z)));

        let col = r.column(&[x.clone(), r.ppow(&y, 2)]);
        let (nu, inf) = r.order_and_initial_form(&col).unwrap();
        assert_eq!(nu, 1);
        assert_eq!(inf, r.column(&[x, Polynomial::zero()]));

        assert!(matches!(
            r.poly_order_and_initial_form(&Polynomial::zero()),
            Err(Error::ZeroOrder)
        ));
    }

    #[test]
    fn local_leading_term_has_minimal_degree() {
        let r = ring3(OrderSpec::local());
        let f = r.padd(&r.ppow(&r.var(0), 5), &r.ppow(&r.var(1), 4));
        assert_eq!(f.leading().unwrap().1, Monomial::new([0, 4, 0]));
        let g = ring3(OrderSpec::global()).resort_poly(&f);
        assert_eq!(g.leading().unwrap().1, Monomial::new([5, 0, 0]));
    }

    #[test]
    fn add_scaled_cancels_leading_terms() {
        let r = ring3(OrderSpec::global());
        let a = r.column(&[r.padd(&r.var(0), &r.var(1)), r.var(2)]);
        let b = r.column(&[r.var(0), Polynomial::zero()]);
        let d = r.add_scaled(&a, r.field().neg(1), &Monomial::one(3), &b);
        assert_eq!(d, r.column(&[r.var(1), r.var(2)]));
        let back = r.vadd(&d, &b);
        assert_eq!(back, a);
    }

    #[test]
    fn formatting_uses_signed_coefficients() {
        let r = ring3(OrderSpec::global());
        let f = r.psub(&r.pmul(&r.var(0), &r.var(2)), &r.pscale(&r.ppow(&r.var(1), 3), 2));
        assert_eq!(r.fmt_poly(&f), "-2*Y^3 + X*Z");
        assert_eq!(r.fmt_poly(&Polynomial::zero()), "0");
    }
}
