//! Polyominoes, their inner 2-minor ideals, and the tools to check
//! dimension and König-type statements about them on concrete instances.
//!
//! Layers, bottom up: [`lattice`] geometry, [`polyomino`] combinatorics,
//! [`configurations`] recognizers, [`algebra`] (binomial Gröbner bases),
//! [`dimension`], [`koenig`] certificates, and the [`workbench`] that
//! enumerates instances and drives the conjecture harness.

pub mod algebra;
pub mod configurations;
pub mod dimension;
pub mod error;
pub mod koenig;
pub mod lattice;
pub mod par;
pub mod polyomino;
pub mod shapes;
pub mod workbench;

pub use error::{Error, Result};
pub use lattice::{Cell, Interval, Point};
pub use polyomino::{parse_polyomino, Polyomino};
