use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use crate::error::{Error, Result};

/// Whether larger or smaller total degree leads.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Flavor {
    /// Degree reverse lexicographic: higher degree leads (a well-order).
    Global,
    /// Negative degree reverse lexicographic: lower degree leads, so the
    /// leading term of `f` sits in its lowest-degree form.
    Local,
    /// Degree first, then the higher power of the last variable, then
    /// reverse lex. On homogenizations it induces the local order.
    Lazard,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ModuleRule {
    /// Shifted degree first, then reverse lex, then position.
    TermOverPosition,
    /// Position first, then the monomial order.
    PositionOverTerm,
}

/// A monomial order on `k[x]` and on free modules `k[x]^r`.
///
/// Ties between monomials of equal degree are broken reverse
/// lexicographically with variables in declared order; for module terms the
/// component with the smaller index is the larger one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrderSpec {
    pub flavor: Flavor,
    pub rule: ModuleRule,
    /// Per-component degree shifts; missing entries count as zero.
    pub shifts: Vec<i64>,
}

impl OrderSpec {
    pub fn global() -> Self {
        OrderSpec {
            flavor: Flavor::Global,
            rule: ModuleRule::TermOverPosition,
            shifts: Vec::new(),
        }
    }

    pub fn local() -> Self {
        OrderSpec {
            flavor: Flavor::Local,
            rule: ModuleRule::TermOverPosition,
            shifts: Vec::new(),
        }
    }

    pub fn lazard() -> Self {
        OrderSpec {
            flavor: Flavor::Lazard,
            rule: ModuleRule::TermOverPosition,
            shifts: Vec::new(),
        }
    }

    pub fn with_rule(mut self, rule: ModuleRule) -> Self {
        self.rule = rule;
        self
    }

    pub fn with_shifts(mut self, shifts: Vec<i64>) -> Self {
        self.shifts = shifts;
        self
    }

    pub fn is_local(&self) -> bool {
        self.flavor == Flavor::Local
    }

    #[inline]
    pub fn shift(&self, comp: usize) -> i64 {
        self.shifts.get(comp).copied().unwrap_or(0)
    }

    /// Degree of a module monomial: monomial degree plus component shift.
    #[inline]
    pub fn weighted_degree(&self, m: &Monomial, comp: usize) -> i64 {
        m.degree() as i64 + self.shift(comp)
    }

    #[inline]
    fn cmp_degrees(&self, da: i64, db: i64) -> Ordering {
        match self.flavor {
            Flavor::Global | Flavor::Lazard => da.cmp(&db),
            Flavor::Local => db.cmp(&da),
        }
    }

    #[inline]
    fn tie(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.flavor {
            Flavor::Lazard => {
                let last = |m: &Monomial| m.exps().last().copied().unwrap_or(0);
                last(a).cmp(&last(b)).then_with(|| Self::revlex(a, b))
            }
            _ => Self::revlex(a, b),
        }
    }

    #[inline]
    fn revlex(a: &Monomial, b: &Monomial) -> Ordering {
        for (ea, eb) in a.exps().iter().zip(b.exps()).rev() {
            if ea != eb {
                // smaller exponent in the last differing variable is larger
                return eb.cmp(ea);
            }
        }
        Ordering::Equal
    }

    /// Monomial comparison without checks; callers guarantee equal arity.
    #[inline]
    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_degrees(a.degree() as i64, b.degree() as i64)
            .then_with(|| self.tie(a, b))
    }

    /// Checked monomial comparison.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(Error::VariableMismatch(a.nvars(), b.nvars()));
        }
        Ok(self.cmp_monomials(a, b))
    }

    /// Comparison of module monomials `a·e_ca` and `b·e_cb`.
    #[inline]
    pub fn cmp_module(&self, a: &Monomial, ca: usize, b: &Monomial, cb: usize) -> Ordering {
        match self.rule {
            ModuleRule::TermOverPosition => self
                .cmp_degrees(self.weighted_degree(a, ca), self.weighted_degree(b, cb))
                .then_with(|| self.tie(a, b))
                .then_with(|| cb.cmp(&ca)),
            ModuleRule::PositionOverTerm => {
                cb.cmp(&ca).then_with(|| self.cmp_monomials(a, b))
            }
        }
    }

    /// Checked module comparison.
    pub fn compare_module(
        &self,
        a: (&Monomial, usize),
        b: (&Monomial, usize),
    ) -> Result<Ordering> {
        if a.0.nvars() != b.0.nvars() {
            return Err(Error::VariableMismatch(a.0.nvars(), b.0.nvars()));
        }
        Ok(self.cmp_module(a.0, a.1, b.0, b.1))
    }
}
