use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::Point;
use crate::polyomino::Polyomino;

/// The polynomial ring `K[x_v : v in V]`: variables are indexed by their
/// position in the vertex list sorted by the point order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring {
    vertices: Vec<Point>,
    index: HashMap<Point, usize>,
}

impl Ring {
    pub fn new(points: impl IntoIterator<Item = Point>) -> Ring {
        let mut vertices: Vec<Point> = points.into_iter().collect();
        vertices.sort();
        vertices.dedup();
        let index = vertices.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        Ring { vertices, index }
    }

    pub fn of(p: &Polyomino) -> Ring {
        Ring::new(p.vertices().iter().copied())
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn var(&self, p: Point) -> Result<usize> {
        self.index.get(&p).copied().ok_or(Error::UnknownVertex(p))
    }

    pub fn point(&self, var: usize) -> Point {
        self.vertices[var]
    }

    /// Product of the given vertices (with multiplicity).
    pub fn monomial(&self, points: &[Point]) -> Result<Monomial> {
        let mut m = Monomial::one(self.len());
        for &p in points {
            m.exps[self.var(p)?] += 1;
        }
        Ok(m)
    }

    pub fn binomial(&self, plus: &[Point], minus: &[Point]) -> Result<Binomial> {
        Ok(Binomial::new(self.monomial(plus)?, self.monomial(minus)?))
    }

    pub fn variable_name(&self, var: usize) -> String {
        let p = self.vertices[var];
        format!("x({},{})", p.x, p.y)
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (v, &e) in m.exps.iter().enumerate() {
            let name = self.variable_name(v);
            match e {
                0 => {}
                1 => parts.push(name),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    /// `x(a.x,a.y)*x(b.x,b.y) - x(c.x,c.y)*x(d.x,d.y)`
    pub fn format_binomial(&self, b: &Binomial) -> String {
        format!("{} - {}", self.format_monomial(&b.plus), self.format_monomial(&b.minus))
    }

    /// Inverse of [`Ring::variable_name`].
    pub fn parse_variable(&self, name: &str) -> Result<usize> {
        let bad = || Error::Invalid(format!("bad variable name {name:?}"));
        let inner = name.trim().strip_prefix("x(").and_then(|s| s.strip_suffix(')')).ok_or_else(bad)?;
        let (x, y) = inner.split_once(',').ok_or_else(bad)?;
        let p = Point::new(x.trim().parse().map_err(|_| bad())?, y.trim().parse().map_err(|_| bad())?);
        self.var(p)
    }
}

/// Exponent vector over a fixed [`Ring`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Monomial {
    pub exps: Vec<u16>,
}

impl Monomial {
    pub fn one(n: usize) -> Monomial {
        Monomial { exps: vec![0; n] }
    }

    pub fn from_vars(n: usize, vars: &[usize]) -> Monomial {
        let mut m = Monomial::one(n);
        for &v in vars {
            m.exps[v] += 1;
        }
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn support(&self) -> Vec<usize> {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i).collect()
    }

    /// Lossy 128-bit signature of the support: if `a` divides `b` then
    /// `a.signature() & !b.signature() == 0`.
    pub fn signature(&self) -> u128 {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).fold(0, |acc, (i, _)| acc | 1u128 << (i % 128))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect() }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a + b).collect() }
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a - b).collect() }
    }
}

/// The pure-difference binomial `plus - minus`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Binomial {
    pub plus: Monomial,
    pub minus: Monomial,
}

impl Binomial {
    pub fn new(plus: Monomial, minus: Monomial) -> Binomial {
        Binomial { plus, minus }
    }

    pub fn is_zero(&self) -> bool {
        self.plus == self.minus
    }

    /// `minus - plus`
    pub fn negated(&self) -> Binomial {
        Binomial { plus: self.minus.clone(), minus: self.plus.clone() }
    }

    /// Coefficient map on monomials (`+1` on `plus`, `-1` on `minus`).
    pub fn terms(&self) -> [(&Monomial, i8); 2] {
        [(&self.plus, 1), (&self.minus, -1)]
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { format!("x{i}") } else { format!("x{i}^{e}") })
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", self.plus, self.minus)
    }
}
