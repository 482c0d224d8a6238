//! Krull dimension and height of `K[P]` from an initial ideal.
//!
//! The quotient by a monomial ideal has dimension equal to the largest set
//! of variables containing no generator support. Its complement is a
//! minimum hitting set of the supports, found by branch and bound.

use serde::{Deserialize, Serialize};

use crate::algebra::{buchberger, inner_minors, Budget, GroebnerBasis, Monomial, OrderSpec, Ring};
use crate::error::{Error, Result};
use crate::polyomino::Polyomino;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    nvars: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Keeps only minimal generators (sorted, deduplicated).
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> MonomialIdeal {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        all.sort_by_key(|m| (m.degree(), m.clone()));
        all.dedup();
        let mut minimal: Vec<Monomial> = Vec::new();
        for m in all {
            if !minimal.iter().any(|g| g.divides(&m)) {
                minimal.push(m);
            }
        }
        minimal.sort();
        MonomialIdeal { nvars, generators: minimal }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(Monomial::is_squarefree)
    }

    fn supports(&self) -> Result<Vec<u128>> {
        if self.nvars > 128 {
            return Err(Error::TooManyVariables(self.nvars));
        }
        Ok(self.generators.iter().map(|g| g.support().iter().fold(0u128, |acc, &v| acc | 1 << v)).collect())
    }
}

/// Initial ideal of `I_P` for the given order, with the basis it came from.
pub fn initial_ideal(p: &Polyomino, spec: &OrderSpec, budget: Budget) -> Result<(MonomialIdeal, GroebnerBasis)> {
    let ring = Ring::of(p);
    let order = spec.build(&ring)?;
    let gb = buchberger(&inner_minors(p, &ring), &order, budget)?;
    Ok((MonomialIdeal::new(ring.len(), gb.initial_terms()), gb))
}

struct HittingSet {
    sets: Vec<u128>,
    best: u32,
    best_set: u128,
}

impl HittingSet {
    fn solve(&mut self, chosen: u128, forbidden: u128, count: u32) {
        let mut pivot: Option<u128> = None;
        let mut bound = 0;
        let mut packed = 0u128;
        for &s in &self.sets {
            if s & chosen != 0 {
                continue;
            }
            let allowed = s & !forbidden;
            if allowed == 0 {
                return;
            }
            if pivot.is_none_or(|p| allowed.count_ones() < p.count_ones()) {
                pivot = Some(allowed);
            }
            if allowed & packed == 0 {
                packed |= allowed;
                bound += 1;
            }
        }
        let Some(mut pivot) = pivot else {
            if count < self.best {
                self.best = count;
                self.best_set = chosen;
            }
            return;
        };
        if count + bound >= self.best {
            return;
        }
        let mut forbidden = forbidden;
        while pivot != 0 {
            let bit = pivot & pivot.wrapping_neg();
            pivot &= pivot - 1;
            self.solve(chosen | bit, forbidden, count + 1);
            forbidden |= bit;
        }
    }
}

/// A largest set of variables containing no generator support.
pub fn max_independent_set(j: &MonomialIdeal) -> Result<Vec<usize>> {
    let sets = j.supports()?;
    let n = j.nvars();
    let all = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    let mut h = HittingSet { sets, best: n as u32 + 1, best_set: all };
    h.solve(0, 0, 0);
    Ok((0..n).filter(|&v| h.best_set & (1 << v) == 0).collect())
}

/// Krull dimension of `S / J`.
pub fn monomial_quotient_dim(j: &MonomialIdeal) -> Result<usize> {
    Ok(max_independent_set(j)?.len())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionReport {
    pub vertices: usize,
    pub rank: usize,
    pub dim: usize,
    pub height: usize,
    pub order: String,
}

pub fn dimension_report(p: &Polyomino, spec: &OrderSpec, budget: Budget) -> Result<DimensionReport> {
    let (j, _) = initial_ideal(p, spec, budget)?;
    let dim = monomial_quotient_dim(&j)?;
    Ok(DimensionReport { vertices: j.nvars(), rank: p.rank(), dim, height: j.nvars() - dim, order: spec.id() })
}

pub fn krull_dim(p: &Polyomino, spec: &OrderSpec, budget: Budget) -> Result<usize> {
    Ok(dimension_report(p, spec, budget)?.dim)
}

pub fn height(p: &Polyomino, spec: &OrderSpec, budget: Budget) -> Result<usize> {
    Ok(dimension_report(p, spec, budget)?.height)
}
