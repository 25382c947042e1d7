use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::local::{LocalModule, LocalRing};
use crate::poly::{monomials_of_degree, Coeff, ModuleElement, Monomial, OrderSpec, PolyRing, Polynomial, PrimeField, Term};

use super::linalg::Echelon;

pub const DEFAULT_SIZE_BOUND: usize = 20000;

/// Finite model of `F/(I·F + rel + mᵗF)` over `k[x]`, `F = k[x]^rank`.
///
/// Coordinates are the monomials `x^a·e_c` of degree `< t`, ordered by
/// degree first; the relation space is kept in reduced echelon form, so a
/// reduced vector has support on standard monomials only and its lowest
/// nonzero degree is its order.
#[derive(Clone, Debug)]
pub struct TruncatedModel {
    ring: PolyRing,
    rank: usize,
    t: u32,
    ambient: Vec<(Monomial, usize)>,
    index: HashMap<(Monomial, usize), usize>,
    degree_start: Vec<usize>,
    relations: Echelon,
    basis: Vec<usize>,
    layer_dims: Vec<usize>,
}

/// Hilbert function values and minimal generator counts by degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDims {
    pub hilbert: Vec<usize>,
    pub generators: Vec<usize>,
}

impl GradedDims {
    pub fn generator_degrees(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for (j, &c) in self.generators.iter().enumerate() {
            out.extend(std::iter::repeat(j as u32).take(c));
        }
        out
    }

    pub fn total_generators(&self) -> usize {
        self.generators.iter().sum()
    }
}

/// A subspace of a model, in reduced coordinates.
#[derive(Clone, Debug)]
pub struct Subspace {
    echelon: Echelon,
    pivot_degrees: Vec<u32>,
}

impl Subspace {
    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    /// Dimension of the part lying in `m^j` of the model.
    pub fn dim_from(&self, j: u32) -> usize {
        self.pivot_degrees.iter().filter(|&&d| d >= j).count()
    }

    /// Basis of the part lying in `m^j` of the model.
    pub fn rows_from(&self, j: u32) -> Vec<Vec<Coeff>> {
        self.echelon
            .rows()
            .iter()
            .zip(&self.pivot_degrees)
            .filter(|(_, &d)| d >= j)
            .map(|(r, _)| r.clone())
            .collect()
    }

    /// Rows whose lowest degree is exactly `j`.
    pub fn rows_at(&self, j: u32) -> Vec<Vec<Coeff>> {
        self.echelon
            .rows()
            .iter()
            .zip(&self.pivot_degrees)
            .filter(|(_, &d)| d == j)
            .map(|(r, _)| r.clone())
            .collect()
    }

    pub fn contains(&self, v: &[Coeff]) -> bool {
        self.echelon.contains(v)
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.pivot_degrees.iter().copied().min()
    }
}

/// Build the model of `F/(I·F + rel + mᵗF)`.
pub fn build_model(
    field: PrimeField,
    names: Vec<String>,
    ideal: &[Polynomial],
    rank: usize,
    relations: &[ModuleElement],
    t: u32,
) -> Result<TruncatedModel> {
    build_model_with_bound(field, names, ideal, rank, relations, t, DEFAULT_SIZE_BOUND)
}

pub fn build_model_with_bound(
    field: PrimeField,
    names: Vec<String>,
    ideal: &[Polynomial],
    rank: usize,
    relations: &[ModuleElement],
    t: u32,
    bound: usize,
) -> Result<TruncatedModel> {
    if t == 0 {
        return Err(Error::OracleWindow("truncation must be at least 1".into()));
    }
    let ring = PolyRing::new(field, names, OrderSpec::global());
    let n = ring.nvars();
    let per_comp = binomial(n as u64 + t as u64 - 1, n as u64);
    let size = per_comp.saturating_mul(rank as u64);
    if size > bound as u64 {
        return Err(Error::ModelTooLarge { size: size as usize, bound });
    }
    let mut ambient = Vec::with_capacity(size as usize);
    let mut degree_start = Vec::with_capacity(t as usize + 1);
    let mut by_degree = Vec::with_capacity(t as usize);
    for d in 0..t {
        degree_start.push(ambient.len());
        let mons = monomials_of_degree(n, d);
        for c in 0..rank {
            for m in &mons {
                ambient.push((m.clone(), c));
            }
        }
        by_degree.push(mons);
    }
    degree_start.push(ambient.len());
    let index = ambient.iter().enumerate().map(|(i, k)| (k.clone(), i)).collect();
    let mut model = TruncatedModel {
        ring,
        rank,
        t,
        ambient,
        index,
        degree_start,
        relations: Echelon::new(field, size as usize),
        basis: Vec::new(),
        layer_dims: Vec::new(),
    };
    let mut rels = Echelon::new(field, model.ambient.len());
    for g in ideal {
        let Some(low) = g.min_degree() else { continue };
        for c in 0..rank {
            let terms: Vec<Term> = g
                .terms()
                .iter()
                .map(|(a, m)| Term { coeff: *a, mon: m.clone(), comp: c })
                .collect();
            model.insert_multiples(&mut rels, &terms, low, 0, &by_degree);
        }
    }
    for v in relations {
        let Some(low) = v.terms().iter().map(|t| t.mon.degree()).min() else { continue };
        model.insert_multiples(&mut rels, v.terms(), low, 0, &by_degree);
    }
    model.basis = (0..model.ambient.len()).filter(|&i| !rels.is_pivot(i)).collect();
    model.layer_dims = (0..t as usize)
        .map(|d| {
            model
                .basis
                .iter()
                .filter(|&&i| i >= model.degree_start[d] && i < model.degree_start[d + 1])
                .count()
        })
        .collect();
    model.relations = rels;
    Ok(model)
}

impl TruncatedModel {
    /// Model of `R/mᵗ`.
    pub fn for_ring(r: &LocalRing, t: u32) -> Result<Self> {
        build_model(*r.field(), r.names().to_vec(), r.ideal(), 1, &[], t)
    }

    /// Model of `F/mᵗF` over `R`; submodules of `F` are studied inside it.
    pub fn for_free(m: &LocalModule, t: u32) -> Result<Self> {
        let r = m.ring();
        build_model(*r.field(), r.names().to_vec(), r.ideal(), m.rank(), &[], t)
    }

    /// Model of `M/mᵗM`.
    pub fn for_module(m: &LocalModule, t: u32) -> Result<Self> {
        let r = m.ring();
        build_model(*r.field(), r.names().to_vec(), r.ideal(), m.rank(), m.generators(), t)
    }

    fn insert_multiples(&self, rels: &mut Echelon, terms: &[Term], low: u32, min_mult: u32, by_degree: &[Vec<Monomial>]) {
        for d in min_mult..self.t.saturating_sub(low) {
            for mu in &by_degree[d as usize] {
                let v = self.dense_product(terms, mu);
                rels.insert(v);
            }
        }
    }

    fn dense_product(&self, terms: &[Term], mu: &Monomial) -> Vec<Coeff> {
        let f = self.field();
        let mut v = vec![0; self.ambient.len()];
        for term in terms {
            if term.mon.degree() + mu.degree() >= self.t {
                continue;
            }
            let key = (term.mon.mul(mu), term.comp);
            if let Some(&i) = self.index.get(&key) {
                v[i] = f.add(v[i], term.coeff);
            }
        }
        v
    }

    pub fn field(&self) -> PrimeField {
        *self.ring.field()
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn truncation(&self) -> u32 {
        self.t
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ambient_len(&self) -> usize {
        self.ambient.len()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Dimension of `mⁱ/mⁱ⁺¹` of the modelled object, `i < t`.
    pub fn layer_dims(&self) -> &[usize] {
        &self.layer_dims
    }

    /// Standard monomials of the model, ascending by degree.
    pub fn basis(&self) -> Vec<(Monomial, usize)> {
        self.basis.iter().map(|&i| self.ambient[i].clone()).collect()
    }

    fn degree_of(&self, col: usize) -> u32 {
        self.ambient[col].0.degree()
    }

    /// Dense reduced coordinates of `μ·v` truncated at `t`.
    fn reduce_terms(&self, terms: &[Term], mu: &Monomial) -> Vec<Coeff> {
        let mut v = self.dense_product(terms, mu);
        self.relations.reduce(&mut v);
        v
    }

    pub fn reduce_element(&self, v: &ModuleElement) -> Vec<Coeff> {
        self.reduce_terms(v.terms(), &Monomial::one(self.ring.nvars()))
    }

    pub fn reduce_poly(&self, p: &Polynomial) -> Vec<Coeff> {
        let terms: Vec<Term> = p
            .terms()
            .iter()
            .map(|(a, m)| Term { coeff: *a, mon: m.clone(), comp: 0 })
            .collect();
        self.reduce_terms(&terms, &Monomial::one(self.ring.nvars()))
    }

    /// Lowest degree of a nonzero coordinate; `None` when the vector vanishes.
    pub fn vector_order(&self, v: &[Coeff]) -> Option<u32> {
        v.iter().position(|c| *c != 0).map(|i| self.degree_of(i))
    }

    /// `ν` of an element of `F`, or `None` when it lies in `I·F + rel + mᵗF`.
    pub fn order(&self, v: &ModuleElement) -> Option<u32> {
        self.vector_order(&self.reduce_element(v))
    }

    pub fn order_poly(&self, p: &Polynomial) -> Option<u32> {
        self.vector_order(&self.reduce_poly(p))
    }

    pub fn is_member(&self, v: &ModuleElement) -> bool {
        self.order(v).is_none()
    }

    /// Do `v` and the homogeneous form `w` of degree `d` agree modulo
    /// `m^{d+1}`, that is, is `w` the initial form of `v`?
    pub fn same_initial_form(&self, v: &ModuleElement, w: &ModuleElement, d: u32) -> bool {
        let f = self.field();
        let a = self.reduce_element(v);
        let b = self.reduce_element(w);
        let diff: Vec<Coeff> = a.iter().zip(&b).map(|(x, y)| f.sub(*x, *y)).collect();
        let nonzero_a = self.vector_order(&a) == Some(d);
        nonzero_a && self.vector_order(&diff).map_or(true, |o| o > d)
    }

    /// Restriction of a vector to the coordinates of degree `d`.
    pub fn layer(&self, v: &[Coeff], d: u32) -> Vec<Coeff> {
        let d = d as usize;
        let mut out = vec![0; v.len()];
        if d < self.degree_start.len() - 1 {
            let (a, b) = (self.degree_start[d], self.degree_start[d + 1]);
            out[a..b].copy_from_slice(&v[a..b]);
        }
        out
    }

    /// Multiplication by the variable `x_k` followed by reduction.
    pub fn multiply_var(&self, v: &[Coeff], k: usize) -> Vec<Coeff> {
        let xk = Monomial::var(self.ring.nvars(), k);
        let terms = self.terms_of(v);
        self.reduce_terms(&terms, &xk)
    }

    fn terms_of(&self, v: &[Coeff]) -> Vec<Term> {
        v.iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(i, c)| Term { coeff: *c, mon: self.ambient[i].0.clone(), comp: self.ambient[i].1 })
            .collect()
    }

    /// The element of `k[x]^rank` whose coordinates are `v`.
    pub fn to_element(&self, v: &[Coeff]) -> ModuleElement {
        self.ring.element_from_terms(self.terms_of(v))
    }

    /// Span of `μ·g` for the generators `g` and monomials `μ` of degree at
    /// least `min_mult`, inside this model.
    pub fn span(&self, gens: &[ModuleElement], min_mult: u32) -> Subspace {
        let mut e = Echelon::new(self.field(), self.ambient.len());
        for g in gens {
            let Some(low) = g.terms().iter().map(|t| t.mon.degree()).min() else { continue };
            for d in min_mult..self.t.saturating_sub(low) {
                for mu in monomials_of_degree(self.ring.nvars(), d) {
                    e.insert(self.reduce_terms(g.terms(), &mu));
                }
            }
        }
        let pivot_degrees = e.pivots().iter().map(|&p| self.degree_of(p)).collect();
        Subspace { echelon: e, pivot_degrees }
    }

    /// Hilbert function and generator counts of the graded object whose
    /// degree `j` piece is spanned by `layer(j)`, for `j ≤ upto`.
    fn graded_counts(&self, upto: u32, layer: impl Fn(u32) -> Vec<Vec<Coeff>>) -> GradedDims {
        let mut hilbert = Vec::new();
        let mut generators = Vec::new();
        let mut previous: Vec<Vec<Coeff>> = Vec::new();
        for j in 0..=upto {
            let current = layer(j);
            let here = current.len();
            let mut image = Echelon::new(self.field(), self.ambient.len());
            for w in &previous {
                for k in 0..self.ring.nvars() {
                    image.insert(self.layer(&self.multiply_var(w, k), j));
                }
            }
            hilbert.push(here);
            generators.push(here - image.rank());
            previous = current;
        }
        GradedDims { hilbert, generators }
    }

    /// Graded dimensions of the associated graded object of the model itself.
    pub fn graded_dims(&self, upto: u32) -> Result<GradedDims> {
        if upto >= self.t {
            return Err(Error::OracleWindow(format!(
                "degree {upto} is not below the truncation {}",
                self.t
            )));
        }
        Ok(self.graded_counts(upto, |j| {
            self.basis
                .iter()
                .filter(|&&i| self.degree_of(i) == j)
                .map(|&i| {
                    let mut v = vec![0; self.ambient.len()];
                    v[i] = 1;
                    v
                })
                .collect()
        }))
    }

    /// Graded dimensions of `N*` for `N` generated by `gens`, degrees `≤ upto`.
    pub fn nstar_dims(&self, gens: &[ModuleElement], upto: u32) -> Result<GradedDims> {
        self.check_window(gens, upto)?;
        let w = self.span(gens, 0);
        Ok(self.graded_counts(upto, |j| w.rows_at(j).iter().map(|r| self.layer(r, j)).collect()))
    }

    /// Minimal number of generators of `N`, read as `dim N/mN`.
    pub fn mu(&self, gens: &[ModuleElement]) -> Result<usize> {
        self.check_window(gens, 1)?;
        Ok(self.span(gens, 0).dim() - self.span(gens, 1).dim())
    }

    /// The validity window `t ≥ i + D + 2`, where `D` bounds both the written
    /// degrees of the generators and their orders in the model; a generator
    /// that vanishes in the model fails the window.
    pub fn check_window(&self, gens: &[ModuleElement], i: u32) -> Result<()> {
        let written = window_truncation(gens, i);
        let mut need = written;
        for g in gens {
            match self.order(g) {
                Some(o) => need = need.max(i + o + 2),
                None if g.is_zero() => {}
                None => {
                    return Err(Error::OracleWindow(format!(
                        "a generator vanishes below truncation {}",
                        self.t
                    )))
                }
            }
        }
        if self.t < need {
            return Err(Error::OracleWindow(format!(
                "layer {i} needs truncation at least {need}, have {}",
                self.t
            )));
        }
        Ok(())
    }
}

/// Truncation from the written degrees alone: `i + maxGenDegree + 2`.
pub fn window_truncation(gens: &[ModuleElement], i: u32) -> u32 {
    let top = gens
        .iter()
        .flat_map(|g| g.terms().iter().map(|t| t.mon.degree()))
        .max()
        .unwrap_or(0);
    i + top + 2
}

/// Smallest truncation `≥ t0` whose model passes the window at layer `i`.
pub fn fit_truncation(
    gens: &[ModuleElement],
    i: u32,
    t0: u32,
    build: impl Fn(u32) -> Result<TruncatedModel>,
) -> Result<u32> {
    let mut t = t0.max(window_truncation(gens, i));
    loop {
        let model = build(t)?;
        if model.check_window(gens, i).is_ok() {
            return Ok(t);
        }
        let orders: Option<Vec<u32>> = gens.iter().filter(|g| !g.is_zero()).map(|g| model.order(g)).collect();
        t = match orders {
            Some(o) => t.max(i + o.into_iter().max().unwrap_or(0) + 2),
            None => t + 1,
        }
        .max(t + 1);
    }
}

/// Basis of the image of `N ∩ mⁱF` in `F/mᵗF`.
pub fn filtration_intersection(model: &TruncatedModel, gens: &[ModuleElement], i: u32) -> Result<Vec<Vec<Coeff>>> {
    model.check_window(gens, i)?;
    Ok(model.span(gens, 0).rows_from(i))
}

/// Comparison of `N ∩ mʲF` with `m^{j−s}N` inside a model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerComparison {
    pub j: u32,
    pub intersection_dim: usize,
    pub power_dim: usize,
    pub witness: Option<ModuleElement>,
}

impl LayerComparison {
    pub fn holds(&self) -> bool {
        self.intersection_dim == self.power_dim
    }
}

pub fn compare_layer(model: &TruncatedModel, gens: &[ModuleElement], s: u32, j: u32) -> Result<LayerComparison> {
    model.check_window(gens, j)?;
    let whole = model.span(gens, 0);
    let power = model.span(gens, j.saturating_sub(s));
    let inter = whole.rows_from(j);
    let witness = inter.iter().find(|r| !power.contains(r)).map(|r| model.to_element(r));
    Ok(LayerComparison {
        j,
        intersection_dim: inter.len(),
        power_dim: power.dim_from(j),
        witness,
    })
}

/// Run `f` at truncations `t` and `t + 1` and insist on identical answers.
pub fn stable<T: PartialEq + std::fmt::Debug>(t: u32, f: impl Fn(u32) -> Result<T>) -> Result<T> {
    let a = f(t)?;
    let b = f(t + 1)?;
    if a != b {
        return Err(Error::OracleWindow(format!(
            "answer changed between truncation {t} and {}: {a:?} vs {b:?}",
            t + 1
        )));
    }
    Ok(a)
}

fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n - k.min(n));
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::DEFAULT_CHARACTERISTIC;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn semigroup() -> LocalRing {
        let f = PrimeField::new(DEFAULT_CHARACTERISTIC.into()).unwrap();
        let r = PolyRing::new(f, names(&["X", "Y", "Z"]), OrderSpec::local());
        let m = |e: [u16; 3]| Monomial::new(e);
        let ideal = vec![
            r.poly([(1, m([1, 0, 1])), (-1, m([0, 3, 0]))]),
            r.poly([(1, m([0, 1, 1])), (-1, m([4, 0, 0]))]),
            r.poly([(1, m([0, 0, 2])), (-1, m([3, 2, 0]))]),
        ];
        LocalRing::from_ring(&r, ideal).unwrap()
    }

    #[test]
    fn univariate_model() {
        let f = PrimeField::new(7).unwrap();
        let m = build_model(f, names(&["x"]), &[], 1, &[], 3).unwrap();
        assert_eq!(m.dim(), 3);
        assert_eq!(m.layer_dims(), &[1, 1, 1]);
        let one = build_model(f, names(&["x"]), &[], 1, &[], 1).unwrap();
        assert_eq!(one.dim(), 1);
    }

    #[test]
    fn semigroup_layers() {
        let m = TruncatedModel::for_ring(&semigroup(), 5).unwrap();
        assert_eq!(m.layer_dims(), &[1, 3, 3, 4, 4]);
        assert_eq!(m.dim(), 15);
    }

    #[test]
    fn semigroup_orders() {
        let rr = semigroup();
        let r = rr.ring();
        let x = r.var(0);
        let xz = r.pmul(&x, &r.var(2));
        let m3 = TruncatedModel::for_ring(&rr, 3).unwrap();
        let m4 = TruncatedModel::for_ring(&rr, 4).unwrap();
        assert_eq!(m3.order_poly(&x), Some(1));
        assert_eq!(m3.order_poly(&xz), None);
        assert_eq!(m4.order_poly(&xz), Some(3));
    }

    #[test]
    fn size_bound_is_enforced() {
        let f = PrimeField::new(7).unwrap();
        let err = build_model_with_bound(f, names(&["a", "b", "c"]), &[], 2, &[], 10, 50).unwrap_err();
        assert!(matches!(err, Error::ModelTooLarge { .. }));
    }

    #[test]
    fn nstar_of_x_in_semigroup_ring() {
        let rr = semigroup();
        let m = LocalModule::new(rr.clone(), 1, vec![rr.ring().poly_times_unit(&rr.ring().var(0), 0)]).unwrap();
        let gens = m.generators().to_vec();
        let model = TruncatedModel::for_free(&m, 8).unwrap();
        let dims = model.nstar_dims(&gens, 5).unwrap();
        assert_eq!(dims.generator_degrees(), vec![1, 3]);
        assert_eq!(model.mu(&gens).unwrap(), 1);
        assert!(compare_layer(&model, &gens, 1, 2).unwrap().holds());
        let c3 = compare_layer(&model, &gens, 1, 3).unwrap();
        assert!(!c3.holds());
        assert!(c3.witness.is_some());
        assert!(filtration_intersection(&model, &gens, 7).is_err());
    }

    #[test]
    fn free_module_generators() {
        let rr = LocalRing::regular(PrimeField::new(5).unwrap(), names(&["x", "y"]));
        let m = LocalModule::free(rr, 3);
        let model = TruncatedModel::for_module(&m, 4).unwrap();
        let dims = model.graded_dims(3).unwrap();
        assert_eq!(dims.generators, vec![3, 0, 0, 0]);
        assert_eq!(dims.hilbert, vec![3, 6, 9, 12]);
    }

    #[test]
    fn stability_wrapper_detects_change() {
        assert_eq!(stable(3, |t| Ok(t / 10)).unwrap(), 0);
        assert!(stable(3, |t| Ok(t)).is_err());
    }
}
