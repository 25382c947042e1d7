use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use crate::error::{Error, Result};
use crate::poly::{Coeff, ModuleElement, Monomial, OrderSpec, PolyRing, Polynomial};

#[derive(Clone, Debug)]
struct Entry {
    v: ModuleElement,
    lm: Monomial,
    comp: usize,
    lc: Coeff,
    ecart: i64,
    sugar: i64,
    mask: u64,
    background: bool,
}

fn max_weighted_degree(order: &OrderSpec, v: &ModuleElement) -> i64 {
    v.terms()
        .iter()
        .map(|t| order.weighted_degree(&t.mon, t.comp))
        .max()
        .unwrap_or(0)
}

fn ecart_of(order: &OrderSpec, v: &ModuleElement) -> i64 {
    match v.leading() {
        Some(t) => max_weighted_degree(order, v) - order.weighted_degree(&t.mon, t.comp),
        None => 0,
    }
}

impl Entry {
    fn new(order: &OrderSpec, v: ModuleElement, background: bool) -> Entry {
        let lead = v.leading().expect("basis entries are nonzero").clone();
        Entry {
            ecart: ecart_of(order, &v),
            sugar: max_weighted_degree(order, &v),
            mask: lead.mon.support_mask(),
            lm: lead.mon,
            comp: lead.comp,
            lc: lead.coeff,
            v,
            background,
        }
    }

    #[inline]
    fn divides(&self, m: &Monomial, comp: usize, mask: u64) -> bool {
        self.comp == comp && self.mask & !mask == 0 && self.lm.divides(m)
    }
}

/// Result of a normal-form computation.
///
/// For local orders the remainder is a weak normal form: it equals `u·f`
/// minus an element of the submodule for some unit `u` with `u(0) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub remainder: ModuleElement,
    pub up_to_unit: bool,
}

/// `h - (lc(h)/lc(g))·(lm(h)/lm(g))·g`, cancelling the leading term of `h`.
fn reduce_step(ring: &PolyRing, h: &ModuleElement, g: &Entry) -> ModuleElement {
    let lead = h.leading().expect("nonzero");
    let f = ring.field();
    let c = f.neg(f.div(lead.coeff, g.lc));
    let m = g.lm.quotient_of(&lead.mon).expect("reducer divides");
    ring.add_scaled(h, c, &m, &g.v)
}

fn find_reducer<'a>(
    entries: impl Iterator<Item = &'a Entry>,
    m: &Monomial,
    comp: usize,
) -> Option<&'a Entry> {
    let mask = m.support_mask();
    let mut best: Option<&Entry> = None;
    for e in entries {
        if e.divides(m, comp, mask) && best.map_or(true, |b| e.ecart < b.ecart) {
            best = Some(e);
            if e.ecart == 0 {
                break;
            }
        }
    }
    best
}

/// Top reduction for global orders; with `full`, every term is reduced.
fn reduce_global(ring: &PolyRing, entries: &[Entry], f: &ModuleElement, full: bool) -> ModuleElement {
    let mut h = f.clone();
    let mut done = Vec::new();
    while let Some(lead) = h.leading() {
        match find_reducer(entries.iter(), &lead.mon, lead.comp) {
            Some(g) => h = reduce_step(ring, &h, g),
            None if full => {
                let mut terms = h.into_terms();
                done.push(terms.remove(0));
                h = ModuleElement::from_sorted_terms(terms);
            }
            None => break,
        }
    }
    if done.is_empty() {
        h
    } else {
        done.extend(h.into_terms());
        ModuleElement::from_sorted_terms(done)
    }
}

/// Mora's normal form: reducers of minimal ecart, intermediate results
/// join the reducer set when their ecart is smaller than the chosen one.
fn reduce_mora(ring: &PolyRing, entries: &[Entry], f: &ModuleElement) -> ModuleElement {
    let order = ring.order();
    let mut extra: Vec<Entry> = Vec::new();
    let mut h = f.clone();
    loop {
        let Some(lead) = h.leading() else {
            return h;
        };
        let eh = ecart_of(order, &h);
        let g = find_reducer(entries.iter().chain(extra.iter()), &lead.mon, lead.comp).cloned();
        let Some(g) = g else {
            return h;
        };
        if g.ecart > eh {
            extra.push(Entry::new(order, h.clone(), false));
        }
        h = reduce_step(ring, &h, &g);
    }
}

fn reduce(ring: &PolyRing, entries: &[Entry], f: &ModuleElement, full: bool) -> ModuleElement {
    if ring.order().is_local() {
        reduce_mora(ring, entries, f)
    } else {
        reduce_global(ring, entries, f, full)
    }
}

fn spoly(ring: &PolyRing, a: &Entry, b: &Entry) -> ModuleElement {
    let l = a.lm.lcm(&b.lm);
    let f = ring.field();
    let ma = a.lm.quotient_of(&l).unwrap();
    let mb = b.lm.quotient_of(&l).unwrap();
    let left = ring.vmul_term(&a.v, f.inv(a.lc), &ma);
    ring.add_scaled(&left, f.neg(f.inv(b.lc)), &mb, &b.v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Job {
    Pair(usize, usize),
    Input(usize),
}

struct Engine<'a> {
    ring: &'a PolyRing,
    rank1: bool,
    entries: Vec<Entry>,
    pending: HashSet<(usize, usize)>,
    heap: BinaryHeap<Reverse<(i64, u8, usize, Job)>>,
    seq: usize,
}

impl<'a> Engine<'a> {
    fn push(&mut self, sugar: i64, kind: u8, job: Job) {
        self.heap.push(Reverse((sugar, kind, self.seq, job)));
        self.seq += 1;
    }

    fn add(&mut self, v: ModuleElement, background: bool) {
        let order = self.ring.order();
        let e = Entry::new(order, v, background);
        let n = self.entries.len();
        let mut new_pairs = Vec::new();
        for (i, o) in self.entries.iter().enumerate() {
            if o.comp != e.comp || (o.background && background) {
                continue;
            }
            if self.rank1 && !order.is_local() && o.lm.is_coprime(&e.lm) {
                continue;
            }
            let l = o.lm.lcm(&e.lm);
            let s = (o.sugar + (l.degree() - o.lm.degree()) as i64)
                .max(e.sugar + (l.degree() - e.lm.degree()) as i64);
            new_pairs.push((s, i));
        }
        self.entries.push(e);
        for (s, i) in new_pairs {
            self.pending.insert((i, n));
            self.push(s, 1, Job::Pair(i, n));
        }
    }

    fn chain_redundant(&self, i: usize, j: usize) -> bool {
        let (a, b) = (&self.entries[i], &self.entries[j]);
        let l = a.lm.lcm(&b.lm);
        let mask = l.support_mask();
        self.entries.iter().enumerate().any(|(k, e)| {
            k != i
                && k != j
                && e.divides(&l, a.comp, mask)
                && !self.pending.contains(&(i.min(k), i.max(k)))
                && !self.pending.contains(&(j.min(k), j.max(k)))
        })
    }

    /// Process the queue; returns indices of inputs that did not reduce to zero.
    fn run(&mut self, inputs: &[ModuleElement]) -> Vec<usize> {
        let order = self.ring.order().clone();
        for (k, f) in inputs.iter().enumerate() {
            if !f.is_zero() {
                self.push(max_weighted_degree(&order, f), 2, Job::Input(k));
            }
        }
        let mut kept = Vec::new();
        while let Some(Reverse((_, _, _, job))) = self.heap.pop() {
            let h = match job {
                Job::Pair(i, j) => {
                    self.pending.remove(&(i, j));
                    if self.chain_redundant(i, j) {
                        continue;
                    }
                    let s = spoly(self.ring, &self.entries[i], &self.entries[j]);
                    reduce(self.ring, &self.entries, &s, false)
                }
                Job::Input(k) => {
                    let h = reduce(self.ring, &self.entries, &inputs[k], false);
                    if !h.is_zero() {
                        kept.push(k);
                    }
                    h
                }
            };
            if !h.is_zero() {
                self.add(h, false);
            }
        }
        kept
    }
}

/// A standard basis of `N + I·F` inside a free module `F` of given rank,
/// where `I` is an optional defining ideal of the base ring.
#[derive(Clone, Debug)]
pub struct StandardBasis {
    ring: PolyRing,
    rank: usize,
    entries: Vec<Entry>,
    certified: bool,
}

fn check_vars(ring: &PolyRing, gens: &[ModuleElement]) -> Result<()> {
    for g in gens {
        if let Some(t) = g.leading() {
            if t.mon.nvars() != ring.nvars() {
                return Err(Error::VariableMismatch(t.mon.nvars(), ring.nvars()));
            }
        }
    }
    Ok(())
}

fn background_for(ring: &PolyRing, rank: usize, modulus: Option<&StandardBasis>) -> Result<Vec<ModuleElement>> {
    let Some(q) = modulus else {
        return Ok(Vec::new());
    };
    if q.rank != 1 {
        return Err(Error::Precondition("modulus must be an ideal basis".into()));
    }
    if q.ring.nvars() != ring.nvars() {
        return Err(Error::VariableMismatch(q.ring.nvars(), ring.nvars()));
    }
    let mut out = Vec::new();
    for c in 0..rank {
        for e in &q.entries {
            out.push(ring.remap_components(&e.v, |_| Some(c)));
        }
    }
    Ok(out)
}

fn compute(
    ring: &PolyRing,
    rank: usize,
    gens: &[ModuleElement],
    modulus: Option<&StandardBasis>,
) -> Result<(StandardBasis, Vec<usize>)> {
    check_vars(ring, gens)?;
    let background = background_for(ring, rank, modulus)?;
    let mut engine = Engine {
        ring,
        rank1: rank == 1 && modulus.is_none(),
        entries: Vec::new(),
        pending: HashSet::new(),
        heap: BinaryHeap::new(),
        seq: 0,
    };
    for b in background {
        if !b.is_zero() {
            engine.add(b, true);
        }
    }
    let kept = engine.run(gens);
    let mut sb = StandardBasis {
        ring: ring.clone(),
        rank,
        entries: engine.entries,
        certified: true,
    };
    sb.minimize();
    Ok((sb, kept))
}

/// Standard basis of the submodule generated by `gens` (plus `I·F` when a
/// modulus is given). Buchberger for global orders, Mora for local ones.
pub fn standard_basis(
    ring: &PolyRing,
    rank: usize,
    gens: &[ModuleElement],
    modulus: Option<&StandardBasis>,
) -> Result<StandardBasis> {
    compute(ring, rank, gens, modulus).map(|(sb, _)| sb)
}

/// Standard basis of an ideal.
pub fn ideal_basis(ring: &PolyRing, gens: &[Polynomial]) -> Result<StandardBasis> {
    let cols: Vec<ModuleElement> = gens.iter().map(|g| ring.poly_times_unit(g, 0)).collect();
    standard_basis(ring, 1, &cols, None)
}

/// For homogeneous generators under a global order: a standard basis and
/// the indices of a minimal generating subset (graded Nakayama), chosen
/// degree by degree in input order.
pub fn minimal_generators(
    ring: &PolyRing,
    rank: usize,
    gens: &[ModuleElement],
    modulus: Option<&StandardBasis>,
) -> Result<(StandardBasis, Vec<usize>)> {
    if ring.order().is_local() {
        return Err(Error::Precondition("graded minimal generators need a global order".into()));
    }
    for (i, g) in gens.iter().enumerate() {
        if !g.is_homogeneous(ring.order()) {
            return Err(Error::NonHomogeneous(format!("generator {i}")));
        }
    }
    compute(ring, rank, gens, modulus)
}

impl StandardBasis {
    fn minimize(&mut self) {
        let n = self.entries.len();
        let mut keep = vec![true; n];
        for i in 0..n {
            for j in 0..n {
                if i == j || !keep[j] {
                    continue;
                }
                let (a, b) = (&self.entries[i], &self.entries[j]);
                if b.comp == a.comp && b.lm.divides(&a.lm) && (b.lm != a.lm || j < i) {
                    keep[i] = false;
                    break;
                }
            }
        }
        let mut entries: Vec<Entry> = self
            .entries
            .drain(..)
            .zip(keep)
            .filter_map(|(e, k)| k.then_some(e))
            .collect();
        if !self.ring.order().is_local() {
            for i in 0..entries.len() {
                let others: Vec<Entry> = entries
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != i)
                    .map(|(_, e)| e.clone())
                    .collect();
                let lead = entries[i].v.leading().unwrap().clone();
                let tail = ModuleElement::from_sorted_terms(entries[i].v.terms()[1..].to_vec());
                let tail = reduce_global(&self.ring, &others, &tail, true);
                let mut terms = vec![lead];
                terms.extend(tail.into_terms());
                let v = self.ring.monic(&ModuleElement::from_sorted_terms(terms));
                let bg = entries[i].background;
                entries[i] = Entry::new(self.ring.order(), v, bg);
            }
        }
        self.entries = entries;
    }

    /// The same ideal basis spread over every component of a free module
    /// of the given rank, i.e. a standard basis of `I·F`.
    pub fn extended_to_rank(&self, ring: &PolyRing, rank: usize) -> Result<StandardBasis> {
        let bg = background_for(ring, rank, Some(self))?;
        Ok(StandardBasis {
            ring: ring.clone(),
            rank,
            entries: bg
                .into_iter()
                .filter(|v| !v.is_zero())
                .map(|v| Entry::new(ring.order(), v, true))
                .collect(),
            certified: self.certified,
        })
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_certified(&self) -> bool {
        self.certified
    }

    /// All basis elements, including those coming from the modulus.
    pub fn elements(&self) -> Vec<ModuleElement> {
        self.entries.iter().map(|e| e.v.clone()).collect()
    }

    /// Basis elements not inherited from the modulus.
    pub fn generators(&self) -> Vec<ModuleElement> {
        self.entries
            .iter()
            .filter(|e| !e.background)
            .map(|e| e.v.clone())
            .collect()
    }

    /// Elements as polynomials (rank-one bases).
    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.entries.iter().map(|e| self.ring.entry(&e.v, 0)).collect()
    }

    pub fn leading_monomials(&self) -> Vec<(Monomial, usize)> {
        self.entries.iter().map(|e| (e.lm.clone(), e.comp)).collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains_unit(&self) -> bool {
        self.entries.iter().any(|e| e.lm.is_one())
    }

    pub fn normal_form(&self, f: &ModuleElement) -> NormalForm {
        let f = self.ring.resort_element(f);
        NormalForm {
            remainder: reduce(&self.ring, &self.entries, &f, true),
            up_to_unit: self.ring.order().is_local(),
        }
    }

    pub fn reduce(&self, f: &ModuleElement) -> ModuleElement {
        self.normal_form(f).remainder
    }

    pub fn reduce_poly(&self, f: &Polynomial) -> Polynomial {
        let r = self.reduce(&self.ring.poly_times_unit(f, 0));
        self.ring.entry(&r, 0)
    }

    pub fn contains(&self, f: &ModuleElement) -> bool {
        self.reduce(f).is_zero()
    }

    /// Re-check that every S-pair of the basis reduces to zero.
    pub fn certify(&self) -> bool {
        let n = self.entries.len();
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = (&self.entries[i], &self.entries[j]);
                if a.comp != b.comp || (a.background && b.background) {
                    continue;
                }
                let s = spoly(&self.ring, a, b);
                if !reduce(&self.ring, &self.entries, &s, false).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PrimeField;

    fn ring(names: &[&str], order: OrderSpec) -> PolyRing {
        PolyRing::new(
            PrimeField::default(),
            names.iter().map(|s| s.to_string()).collect(),
            order,
        )
    }

    #[test]
    fn reduced_global_basis_of_small_ideal() {
        let r = ring(&["x", "y"], OrderSpec::global());
        let (x, y) = (r.var(0), r.var(1));
        let sb = ideal_basis(&r, &[r.padd(&r.pmul(&x, &x), &y), y.clone()]).unwrap();
        let mut polys = sb.polynomials();
        polys.sort_by_key(|p| p.max_degree());
        assert_eq!(polys, vec![y, r.pmul(&x, &x)]);
        assert!(sb.certify());
    }

    #[test]
    fn single_monomial_is_its_own_basis() {
        for order in [OrderSpec::global(), OrderSpec::local()] {
            let r = ring(&["x", "y"], order);
            let sb = ideal_basis(&r, &[r.var(0)]).unwrap();
            assert_eq!(sb.polynomials(), vec![r.var(0)]);
            let nf = sb.reduce_poly(&r.var(1));
            assert_eq!(nf, r.var(1));
        }
    }

    #[test]
    fn local_basis_sees_units() {
        let r = ring(&["x"], OrderSpec::local());
        let x = r.var(0);
        let f = r.padd(&x, &r.pmul(&x, &x));
        let sb = ideal_basis(&r, &[f]).unwrap();
        assert!(sb.reduce_poly(&x).is_zero());
    }
}
