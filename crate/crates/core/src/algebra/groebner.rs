//! Buchberger's algorithm restricted to pure-difference binomials.
//!
//! The S-polynomial of `a - b` and `c - d` with `L = lcm(a, c)` is
//! `(L/a) b - (L/c) d`, and dividing a monomial by a pure-difference
//! binomial yields a monomial, so all arithmetic stays on exponent vectors.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::monomial::{Binomial, Monomial};
use super::order::MonomialOrder;
use crate::error::{Error, Result};

/// Step budget for Buchberger. One step is one processed pair or one
/// rewrite during reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_steps: u64,
}

impl Budget {
    pub const DEFAULT_STEPS: u64 = 200_000_000;

    pub fn unlimited() -> Budget {
        Budget { max_steps: u64::MAX }
    }

    /// The default, overridden by the `POLY_BUDGET` environment variable.
    pub fn from_env() -> Budget {
        let max_steps = std::env::var("POLY_BUDGET").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(Self::DEFAULT_STEPS);
        Budget { max_steps }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_steps: Self::DEFAULT_STEPS }
    }
}

/// Oriented binomials (`plus` is the initial term) with cached divisibility
/// signatures of their initial terms.
struct Reducer {
    elements: Vec<Binomial>,
    signatures: Vec<u128>,
    alive: Vec<bool>,
}

impl Reducer {
    fn new() -> Self {
        Reducer { elements: Vec::new(), signatures: Vec::new(), alive: Vec::new() }
    }

    fn push(&mut self, b: Binomial) -> usize {
        self.signatures.push(b.plus.signature());
        self.elements.push(b);
        self.alive.push(true);
        self.elements.len() - 1
    }

    fn find_divisor(&self, m: &Monomial, skip: Option<usize>) -> Option<usize> {
        let sig = m.signature();
        (0..self.elements.len()).find(|&i| {
            self.alive[i] && Some(i) != skip && self.signatures[i] & !sig == 0 && self.elements[i].plus.divides(m)
        })
    }

    /// Normal form of a monomial. `steps` counts rewrites against `limit`.
    fn reduce(&self, mut m: Monomial, skip: Option<usize>, steps: &mut u64, limit: u64) -> Result<Monomial, u64> {
        while let Some(i) = self.find_divisor(&m, skip) {
            *steps += 1;
            if *steps > limit {
                return Err(*steps);
            }
            let g = &self.elements[i];
            m = m.div(&g.plus).mul(&g.minus);
        }
        Ok(m)
    }
}

/// A reduced Gröbner basis together with its order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    pub elements: Vec<Binomial>,
    pub order: MonomialOrder,
}

/// Outcome of [`GroebnerBasis::certify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certification {
    pub pairs_checked: usize,
    pub failures: Vec<(usize, usize)>,
    pub reduced: bool,
}

impl Certification {
    pub fn ok(&self) -> bool {
        self.failures.is_empty() && self.reduced
    }
}

pub fn s_pair(f: &Binomial, g: &Binomial) -> Binomial {
    let l = f.plus.lcm(&g.plus);
    Binomial::new(l.div(&f.plus).mul(&f.minus), l.div(&g.plus).mul(&g.minus))
}

/// Normal form of a monomial modulo oriented binomials.
pub fn normal_form_monomial(m: &Monomial, basis: &[Binomial], order: &MonomialOrder) -> Monomial {
    let mut r = Reducer::new();
    for b in basis {
        r.push(order.orient(b.clone()));
    }
    r.reduce(m.clone(), None, &mut 0, u64::MAX).expect("unlimited")
}

/// Normal form of a binomial: `NF(plus) - NF(minus)`, or `None` when the two
/// sides meet.
pub fn normal_form(b: &Binomial, basis: &[Binomial], order: &MonomialOrder) -> Option<Binomial> {
    let mut r = Reducer::new();
    for g in basis {
        r.push(order.orient(g.clone()));
    }
    let p = r.reduce(b.plus.clone(), None, &mut 0, u64::MAX).expect("unlimited");
    let q = r.reduce(b.minus.clone(), None, &mut 0, u64::MAX).expect("unlimited");
    (p != q).then(|| Binomial::new(p, q))
}

#[derive(PartialEq, Eq, PartialOrd, Ord)]
struct PairKey {
    degree: u32,
    key: Vec<i128>,
    i: usize,
    j: usize,
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
///
/// Pairs are processed by the normal strategy: least lcm degree, then least
/// lcm in the order, then by index. Pairs with coprime initial terms are
/// skipped. On budget exhaustion the error carries the basis built so far.
pub fn buchberger(gens: &[Binomial], order: &MonomialOrder, budget: Budget) -> Result<GroebnerBasis> {
    let mut r = Reducer::new();
    let mut heap: BinaryHeap<Reverse<PairKey>> = BinaryHeap::new();
    let mut steps = 0u64;
    let limit = budget.max_steps;

    let partial = |r: &Reducer, steps: u64| Error::GroebnerBudget { steps, partial: r.elements.clone() };

    let add = |r: &mut Reducer, heap: &mut BinaryHeap<Reverse<PairKey>>, b: Binomial| {
        let j = r.push(b);
        for i in 0..j {
            if !r.alive[i] {
                continue;
            }
            let (f, g) = (&r.elements[i], &r.elements[j]);
            if f.plus.is_coprime(&g.plus) {
                continue;
            }
            let l = f.plus.lcm(&g.plus);
            heap.push(Reverse(PairKey { degree: l.degree(), key: order.key(&l), i, j }));
        }
    };

    for g in gens {
        if g.plus.nvars() != order.nvars() || g.minus.nvars() != order.nvars() {
            return Err(Error::Invalid("generator lives in a different ring".into()));
        }
        let p = r.reduce(g.plus.clone(), None, &mut steps, limit).map_err(|s| partial(&r, s))?;
        let q = r.reduce(g.minus.clone(), None, &mut steps, limit).map_err(|s| partial(&r, s))?;
        if p != q {
            add(&mut r, &mut heap, order.orient(Binomial::new(p, q)));
        }
    }

    while let Some(Reverse(pair)) = heap.pop() {
        steps += 1;
        if steps > limit {
            return Err(partial(&r, steps));
        }
        if !r.alive[pair.i] || !r.alive[pair.j] {
            continue;
        }
        let s = s_pair(&r.elements[pair.i], &r.elements[pair.j]);
        let p = r.reduce(s.plus, None, &mut steps, limit).map_err(|s| partial(&r, s))?;
        let q = r.reduce(s.minus, None, &mut steps, limit).map_err(|s| partial(&r, s))?;
        if p != q {
            add(&mut r, &mut heap, order.orient(Binomial::new(p, q)));
        }
    }

    // Minimalize: drop elements whose initial term is divisible by that of
    // another live element (the earlier one wins on equality).
    let n = r.elements.len();
    for i in 0..n {
        let lt = r.elements[i].plus.clone();
        let dominated = (0..n).any(|j| {
            j != i && r.alive[j] && r.elements[j].plus.divides(&lt) && (r.elements[j].plus != lt || j < i)
        });
        if dominated {
            r.alive[i] = false;
        }
    }
    // Interreduce trailing terms.
    let mut out = Vec::new();
    for i in 0..n {
        if !r.alive[i] {
            continue;
        }
        let g = r.elements[i].clone();
        let tail = r.reduce(g.minus, None, &mut steps, limit).map_err(|s| partial(&r, s))?;
        out.push(Binomial::new(g.plus, tail));
    }
    out.sort_by_key(|a| order.key(&a.plus));
    Ok(GroebnerBasis { elements: out, order: order.clone() })
}

impl GroebnerBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn initial_terms(&self) -> Vec<Monomial> {
        self.elements.iter().map(|b| b.plus.clone()).collect()
    }

    pub fn normal_form_monomial(&self, m: &Monomial) -> Monomial {
        normal_form_monomial(m, &self.elements, &self.order)
    }

    /// Ideal membership of a binomial.
    pub fn contains(&self, b: &Binomial) -> bool {
        normal_form(b, &self.elements, &self.order).is_none()
    }

    /// Checks every S-pair (no criteria) reduces to zero and that the basis
    /// is reduced: initial terms in front, no term divisible by another
    /// element's initial term.
    pub fn certify(&self) -> Certification {
        let mut r = Reducer::new();
        for g in &self.elements {
            r.push(g.clone());
        }
        let n = self.elements.len();
        let mut failures = Vec::new();
        let mut pairs_checked = 0;
        for i in 0..n {
            for j in i + 1..n {
                pairs_checked += 1;
                let s = s_pair(&self.elements[i], &self.elements[j]);
                let p = r.reduce(s.plus, None, &mut 0, u64::MAX).expect("unlimited");
                let q = r.reduce(s.minus, None, &mut 0, u64::MAX).expect("unlimited");
                if p != q {
                    failures.push((i, j));
                }
            }
        }
        let reduced = self.elements.iter().enumerate().all(|(i, g)| {
            self.order.compare(&g.plus, &g.minus).is_gt()
                && r.find_divisor(&g.plus, Some(i)).is_none()
                && r.find_divisor(&g.minus, None).is_none()
        });
        Certification { pairs_checked, failures, reduced }
    }
}
