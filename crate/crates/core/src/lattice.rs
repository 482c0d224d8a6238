//! Integer-lattice geometry: points, intervals, cells and the dihedral
//! symmetries of the square grid.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point of Z². The derived ordering is lexicographic in `(x, y)`, which is
/// exactly the vertex order used as the base variable order of the algebra
/// layer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(i32, i32)", into = "(i32, i32)")]
pub struct Point {
    pub x: i32,
    pub y: i32,
}

impl Point {
    pub const fn new(x: i32, y: i32) -> Self {
        Self { x, y }
    }

    pub const fn offset(self, dx: i32, dy: i32) -> Self {
        Self::new(self.x + dx, self.y + dy)
    }

    /// Componentwise `self <= other`.
    pub fn le_componentwise(self, other: Point) -> bool {
        self.x <= other.x && self.y <= other.y
    }
}

impl From<(i32, i32)> for Point {
    fn from((x, y): (i32, i32)) -> Self {
        Self::new(x, y)
    }
}

impl From<Point> for (i32, i32) {
    fn from(p: Point) -> Self {
        (p.x, p.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// The lattice interval `[lo, hi]`, i.e. all points between `lo` and `hi`
/// componentwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(Point, Point)", into = "(Point, Point)")]
pub struct Interval {
    pub lo: Point,
    pub hi: Point,
}

impl From<(Point, Point)> for Interval {
    fn from((lo, hi): (Point, Point)) -> Self {
        Interval { lo, hi }
    }
}

impl From<Interval> for (Point, Point) {
    fn from(iv: Interval) -> Self {
        (iv.lo, iv.hi)
    }
}

impl Interval {
    /// Builds `[lo, hi]`; requires `lo <= hi` componentwise.
    pub fn new(lo: Point, hi: Point) -> Result<Self> {
        if !lo.le_componentwise(hi) {
            return Err(Error::Invalid(format!("interval bounds {lo} and {hi} are not ordered")));
        }
        Ok(Self { lo, hi })
    }

    pub fn is_proper(&self) -> bool {
        self.lo.x < self.hi.x && self.lo.y < self.hi.y
    }

    pub fn width(&self) -> i32 {
        self.hi.x - self.lo.x
    }

    pub fn height(&self) -> i32 {
        self.hi.y - self.lo.y
    }

    pub fn contains(&self, p: Point) -> bool {
        self.lo.le_componentwise(p) && p.le_componentwise(self.hi)
    }

    /// Whether `other` lies inside `self` as a point set.
    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.contains(other.lo) && self.contains(other.hi)
    }

    /// Intersection of the two point sets, if non-empty.
    pub fn intersection(&self, other: &Interval) -> Option<Interval> {
        let lo = Point::new(self.lo.x.max(other.lo.x), self.lo.y.max(other.lo.y));
        let hi = Point::new(self.hi.x.min(other.hi.x), self.hi.y.min(other.hi.y));
        lo.le_componentwise(hi).then_some(Interval { lo, hi })
    }

    /// The cells of the associated cell interval, row by row.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (self.lo.x..self.hi.x).flat_map(move |x| (self.lo.y..self.hi.y).map(move |y| Cell::new(x, y)))
    }

    /// The four corners of the four-element boundary of a proper interval.
    pub fn corner_points(&self) -> [Point; 4] {
        [
            self.lo,
            Point::new(self.hi.x, self.lo.y),
            Point::new(self.lo.x, self.hi.y),
            self.hi,
        ]
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

/// An unordered pair of points, stored sorted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PointPair(Point, Point);

impl PointPair {
    pub fn new(a: Point, b: Point) -> Self {
        if a <= b {
            Self(a, b)
        } else {
            Self(b, a)
        }
    }

    pub fn first(&self) -> Point {
        self.0
    }

    pub fn second(&self) -> Point {
        self.1
    }

    pub fn contains(&self, p: Point) -> bool {
        self.0 == p || self.1 == p
    }

    /// The member that is not `p`; `p` must belong to the pair.
    pub fn partner(&self, p: Point) -> Point {
        if self.0 == p {
            self.1
        } else {
            self.0
        }
    }
}

/// Diagonal and anti-diagonal corners of a proper interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CornerPair {
    pub diagonal: PointPair,
    pub antidiagonal: PointPair,
}

/// Which corner pair of an interval is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Diagonal {
    #[serde(rename = "diag")]
    Main,
    #[serde(rename = "antidiag")]
    Anti,
}

impl Diagonal {
    pub fn other(self) -> Self {
        match self {
            Diagonal::Main => Diagonal::Anti,
            Diagonal::Anti => Diagonal::Main,
        }
    }
}

impl CornerPair {
    pub fn get(&self, which: Diagonal) -> PointPair {
        match which {
            Diagonal::Main => self.diagonal,
            Diagonal::Anti => self.antidiagonal,
        }
    }
}

/// Diagonal and anti-diagonal corners of a proper interval.
pub fn corners(iv: &Interval) -> Result<CornerPair> {
    if !iv.is_proper() {
        return Err(Error::NotProper(*iv));
    }
    Ok(CornerPair {
        diagonal: PointPair::new(iv.lo, iv.hi),
        antidiagonal: PointPair::new(Point::new(iv.lo.x, iv.hi.y), Point::new(iv.hi.x, iv.lo.y)),
    })
}

/// A unit cell, identified by its lower-left corner.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(i32, i32)", into = "(i32, i32)")]
pub struct Cell {
    pub ll: Point,
}

impl Cell {
    pub const fn new(x: i32, y: i32) -> Self {
        Self { ll: Point::new(x, y) }
    }

    pub fn offset(self, dx: i32, dy: i32) -> Self {
        Self { ll: self.ll.offset(dx, dy) }
    }

    pub fn interval(&self) -> Interval {
        Interval { lo: self.ll, hi: self.ll.offset(1, 1) }
    }

    pub fn lower_left(&self) -> Point {
        self.ll
    }

    pub fn lower_right(&self) -> Point {
        self.ll.offset(1, 0)
    }

    pub fn upper_left(&self) -> Point {
        self.ll.offset(0, 1)
    }

    pub fn upper_right(&self) -> Point {
        self.ll.offset(1, 1)
    }

    /// The four edge-neighbours: east, north, west, south.
    pub fn neighbors(&self) -> [Cell; 4] {
        [self.offset(1, 0), self.offset(0, 1), self.offset(-1, 0), self.offset(0, -1)]
    }

    /// The eight cells sharing at least one vertex with `self`.
    pub fn vertex_neighbors(&self) -> impl Iterator<Item = Cell> + '_ {
        (-1..=1).flat_map(move |dx| {
            (-1..=1).filter(move |&dy| dx != 0 || dy != 0).map(move |dy| self.offset(dx, dy))
        })
    }

    pub fn is_edge_adjacent(&self, other: &Cell) -> bool {
        (self.ll.x - other.ll.x).abs() + (self.ll.y - other.ll.y).abs() == 1
    }
}

impl From<(i32, i32)> for Cell {
    fn from((x, y): (i32, i32)) -> Self {
        Self::new(x, y)
    }
}

impl From<Cell> for (i32, i32) {
    fn from(c: Cell) -> Self {
        (c.ll.x, c.ll.y)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ll)
    }
}

/// The vertex set of a cell in the order lower-left, lower-right, upper-left,
/// upper-right.
pub fn cell_vertices(c: Cell) -> [Point; 4] {
    [c.lower_left(), c.lower_right(), c.upper_left(), c.upper_right()]
}

/// Horizontal or vertical.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Horizontal,
    Vertical,
}

impl Orientation {
    /// Unit step along the orientation.
    pub fn step(self) -> (i32, i32) {
        match self {
            Orientation::Horizontal => (1, 0),
            Orientation::Vertical => (0, 1),
        }
    }
}

/// One of the eight symmetries of the square lattice fixing the origin.
///
/// Index `0..4` are the rotations by `k * 90°`; `4..8` are those rotations
/// composed with the reflection `(x, y) -> (-x, y)` applied first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dihedral(u8);

impl Dihedral {
    pub const IDENTITY: Dihedral = Dihedral(0);

    pub fn all() -> impl Iterator<Item = Dihedral> {
        (0..8).map(Dihedral)
    }

    pub fn index(self) -> u8 {
        self.0
    }

    pub fn is_reflection(self) -> bool {
        self.0 >= 4
    }

    pub fn apply(self, p: Point) -> Point {
        let (mut x, y) = (p.x, p.y);
        if self.is_reflection() {
            x = -x;
        }
        match self.0 % 4 {
            0 => Point::new(x, y),
            1 => Point::new(-y, x),
            2 => Point::new(-x, -y),
            _ => Point::new(y, -x),
        }
    }

    pub fn inverse(self) -> Dihedral {
        if self.is_reflection() {
            self
        } else {
            Dihedral((4 - self.0) % 4)
        }
    }

    /// Image of a cell: the cell whose point set is the image of `c`.
    pub fn apply_cell(self, c: Cell) -> Cell {
        let a = self.apply(c.lower_left());
        let b = self.apply(c.upper_right());
        Cell::new(a.x.min(b.x), a.y.min(b.y))
    }

    pub fn apply_interval(self, iv: &Interval) -> Interval {
        let a = self.apply(iv.lo);
        let b = self.apply(iv.hi);
        Interval {
            lo: Point::new(a.x.min(b.x), a.y.min(b.y)),
            hi: Point::new(a.x.max(b.x), a.y.max(b.y)),
        }
    }
}
