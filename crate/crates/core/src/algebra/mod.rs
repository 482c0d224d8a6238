//! Monomials, pure-difference binomials, inner 2-minors, monomial orders and
//! a binomial Buchberger engine.

pub mod groebner;
pub mod monomial;
pub mod order;

pub use groebner::{buchberger, normal_form, normal_form_monomial, s_pair, Budget, Certification, GroebnerBasis};
pub use monomial::{Binomial, Monomial, Ring};
pub use order::{MonomialOrder, OrderSpec};

use crate::lattice::{corners, Diagonal, Interval};
use crate::polyomino::Polyomino;

/// The inner 2-minor of `iv`: diagonal product minus anti-diagonal product.
pub fn minor(ring: &Ring, iv: &Interval) -> crate::error::Result<Binomial> {
    let c = corners(iv)?;
    let d = c.get(Diagonal::Main);
    let a = c.get(Diagonal::Anti);
    ring.binomial(&[d.first(), d.second()], &[a.first(), a.second()])
}

/// One minor per inner interval, in the interval order.
pub fn inner_minors(p: &Polyomino, ring: &Ring) -> Vec<Binomial> {
    p.inner_intervals().iter().map(|iv| minor(ring, iv).expect("inner intervals are proper and inside the ring")).collect()
}
