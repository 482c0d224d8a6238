//! The [`Polyomino`] type and its first-order combinatorics.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{cell_vertices, Cell, Dihedral, Interval, Orientation, Point};

/// A finite, non-empty, edge-connected set of cells.
///
/// Immutable after [`Polyomino::build`]; cells are kept sorted so every
/// derived list is deterministic.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "PolyominoRepr", into = "PolyominoRepr")]
pub struct Polyomino {
    cells: Vec<Cell>,
    lookup: HashSet<Cell>,
    vertices: Vec<Point>,
}

#[derive(Serialize, Deserialize)]
struct PolyominoRepr {
    cells: Vec<Cell>,
}

impl TryFrom<PolyominoRepr> for Polyomino {
    type Error = Error;

    fn try_from(r: PolyominoRepr) -> Result<Self> {
        Polyomino::build(r.cells)
    }
}

impl From<Polyomino> for PolyominoRepr {
    fn from(p: Polyomino) -> Self {
        PolyominoRepr { cells: p.cells }
    }
}

impl PartialEq for Polyomino {
    fn eq(&self, other: &Self) -> bool {
        self.cells == other.cells
    }
}

impl Eq for Polyomino {}

impl std::hash::Hash for Polyomino {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.cells.hash(state)
    }
}

impl PartialOrd for Polyomino {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Polyomino {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.rank(), &self.cells).cmp(&(other.rank(), &other.cells))
    }
}

/// A maximal straight run of at least two cells.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Block {
    pub first: Cell,
    pub last: Cell,
    pub orientation: Orientation,
    pub maximal: bool,
}

impl Block {
    pub fn rank(&self) -> usize {
        (self.last.ll.x - self.first.ll.x + self.last.ll.y - self.first.ll.y) as usize + 1
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.interval().cells().collect::<Vec<_>>().into_iter()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.first.ll.le_componentwise(c.ll) && c.ll.le_componentwise(self.last.ll)
    }

    /// The lattice interval spanned by the block's vertices.
    pub fn interval(&self) -> Interval {
        Interval { lo: self.first.ll, hi: self.last.upper_right() }
    }

    pub fn vertices(&self) -> BTreeSet<Point> {
        let iv = self.interval();
        (iv.lo.x..=iv.hi.x).flat_map(|x| (iv.lo.y..=iv.hi.y).map(move |y| Point::new(x, y))).collect()
    }
}

/// A run of unit edges of cells of the polyomino along one lattice line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeInterval {
    pub start: Point,
    pub end: Point,
    pub orientation: Orientation,
    pub maximal: bool,
}

impl EdgeInterval {
    /// Whether `p` lies on the segment.
    pub fn contains(&self, p: Point) -> bool {
        match self.orientation {
            Orientation::Horizontal => p.y == self.start.y && self.start.x <= p.x && p.x <= self.end.x,
            Orientation::Vertical => p.x == self.start.x && self.start.y <= p.y && p.y <= self.end.y,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub rank: usize,
    pub vertex_count: usize,
    pub simple: bool,
    pub holes: Vec<Polyomino>,
    pub thin: bool,
}

impl Polyomino {
    /// Validates a cell set: non-empty and edge-connected. Duplicates are
    /// dropped.
    pub fn build(cells: impl IntoIterator<Item = Cell>) -> Result<Self> {
        let set: BTreeSet<Cell> = cells.into_iter().collect();
        if set.is_empty() {
            return Err(Error::Empty);
        }
        let lookup: HashSet<Cell> = set.iter().copied().collect();
        let components = components_of(&lookup);
        if components.len() > 1 {
            return Err(Error::Disconnected { components });
        }
        let cells: Vec<Cell> = set.into_iter().collect();
        let vertices: BTreeSet<Point> = cells.iter().flat_map(|&c| cell_vertices(c)).collect();
        Ok(Self { cells, lookup, vertices: vertices.into_iter().collect() })
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.lookup.contains(&c)
    }

    pub fn rank(&self) -> usize {
        self.cells.len()
    }

    /// `V(P)`, sorted lexicographically.
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// `E(P)` as sorted unit segments.
    pub fn edges(&self) -> BTreeSet<(Point, Point)> {
        self.cells
            .iter()
            .flat_map(|c| {
                [
                    (c.lower_left(), c.upper_left()),
                    (c.upper_left(), c.upper_right()),
                    (c.lower_right(), c.upper_right()),
                    (c.lower_left(), c.lower_right()),
                ]
            })
            .collect()
    }

    /// Whether the unit segment from `a` to `a + step` is an edge of some cell.
    pub fn has_unit_edge(&self, a: Point, orientation: Orientation) -> bool {
        let c = Cell { ll: a };
        match orientation {
            Orientation::Horizontal => self.contains(c) || self.contains(c.offset(0, -1)),
            Orientation::Vertical => self.contains(c) || self.contains(c.offset(-1, 0)),
        }
    }

    /// Cell-coordinate bounding box `(min, max)` of lower-left corners.
    pub fn cell_bounds(&self) -> (Point, Point) {
        let mut lo = self.cells[0].ll;
        let mut hi = lo;
        for c in &self.cells {
            lo = Point::new(lo.x.min(c.ll.x), lo.y.min(c.ll.y));
            hi = Point::new(hi.x.max(c.ll.x), hi.y.max(c.ll.y));
        }
        (lo, hi)
    }

    pub fn edge_neighbors(&self, c: Cell) -> impl Iterator<Item = Cell> + '_ {
        c.neighbors().into_iter().filter(move |n| self.contains(*n))
    }

    pub fn translate(&self, dx: i32, dy: i32) -> Polyomino {
        self.map_cells(|c| c.offset(dx, dy))
    }

    pub fn transform(&self, t: Dihedral) -> Polyomino {
        self.map_cells(|c| t.apply_cell(c))
    }

    fn map_cells(&self, f: impl Fn(Cell) -> Cell) -> Polyomino {
        Polyomino::build(self.cells.iter().map(|&c| f(c))).expect("lattice symmetries preserve connectivity")
    }

    /// Translate so the least lower-left coordinates are `(0, 0)`.
    pub fn normalized(&self) -> Polyomino {
        let (lo, _) = self.cell_bounds();
        if lo == Point::new(0, 0) {
            self.clone()
        } else {
            self.translate(-lo.x, -lo.y)
        }
    }

    /// Lexicographically least normalized image under the eight lattice
    /// symmetries.
    pub fn dihedral_canonical(&self) -> Polyomino {
        Dihedral::all().map(|t| self.transform(t).normalized()).min_by(|a, b| a.cells.cmp(&b.cells)).unwrap()
    }

    pub fn is_thin(&self) -> bool {
        !self.cells.iter().any(|c| {
            self.contains(c.offset(1, 0)) && self.contains(c.offset(0, 1)) && self.contains(c.offset(1, 1))
        })
    }

    /// Holes via flood fill of the complement inside the bounding box padded
    /// by one ring of cells: components that avoid the ring are holes.
    pub fn holes(&self) -> Vec<Polyomino> {
        let (lo, hi) = self.cell_bounds();
        let (x0, y0, x1, y1) = (lo.x - 1, lo.y - 1, hi.x + 1, hi.y + 1);
        let mut seen: HashSet<Cell> = HashSet::new();
        let mut holes = Vec::new();
        for x in x0..=x1 {
            for y in y0..=y1 {
                let start = Cell::new(x, y);
                if self.contains(start) || seen.contains(&start) {
                    continue;
                }
                let mut queue = VecDeque::from([start]);
                seen.insert(start);
                let mut component = Vec::new();
                let mut touches_ring = false;
                while let Some(c) = queue.pop_front() {
                    component.push(c);
                    if c.ll.x == x0 || c.ll.x == x1 || c.ll.y == y0 || c.ll.y == y1 {
                        touches_ring = true;
                    }
                    for n in c.neighbors() {
                        let inside = (x0..=x1).contains(&n.ll.x) && (y0..=y1).contains(&n.ll.y);
                        if inside && !self.contains(n) && seen.insert(n) {
                            queue.push_back(n);
                        }
                    }
                }
                if !touches_ring {
                    holes.push(Polyomino::build(component).expect("flood-fill components are connected"));
                }
            }
        }
        holes.sort();
        holes
    }

    pub fn is_simple(&self) -> bool {
        self.holes().is_empty()
    }

    pub fn classify(&self) -> ClassificationReport {
        let holes = self.holes();
        ClassificationReport {
            rank: self.rank(),
            vertex_count: self.vertices.len(),
            simple: holes.is_empty(),
            holes,
            thin: self.is_thin(),
        }
    }

    /// All proper intervals whose cells all belong to the polyomino, sorted
    /// by `(lo, hi)`.
    pub fn inner_intervals(&self) -> Vec<Interval> {
        let mut out = Vec::new();
        for &c in &self.cells {
            let (x0, y0) = (c.ll.x, c.ll.y);
            let mut w = 1;
            while self.contains(Cell::new(x0 + w - 1, y0)) {
                let mut h = 1;
                while (0..w).all(|i| self.contains(Cell::new(x0 + i, y0 + h - 1))) {
                    out.push(Interval { lo: c.ll, hi: Point::new(x0 + w, y0 + h) });
                    h += 1;
                }
                w += 1;
            }
        }
        out.sort();
        out
    }

    pub fn is_inner_interval(&self, iv: &Interval) -> bool {
        iv.is_proper() && iv.cells().all(|c| self.contains(c))
    }

    /// Maximal blocks (straight runs of rank at least two) in one orientation.
    pub fn maximal_blocks(&self, orientation: Orientation) -> Vec<Block> {
        let (dx, dy) = orientation.step();
        let mut out = Vec::new();
        for &c in &self.cells {
            if self.contains(c.offset(-dx, -dy)) {
                continue;
            }
            let mut last = c;
            while self.contains(last.offset(dx, dy)) {
                last = last.offset(dx, dy);
            }
            if last != c {
                out.push(Block { first: c, last, orientation, maximal: true });
            }
        }
        out.sort();
        out
    }

    /// Maximal edge intervals in one orientation, sorted by start point.
    pub fn maximal_edge_intervals(&self, orientation: Orientation) -> Vec<EdgeInterval> {
        let (dx, dy) = orientation.step();
        let starts: BTreeSet<Point> = self
            .vertices
            .iter()
            .copied()
            .filter(|&v| self.has_unit_edge(v, orientation) && !self.has_unit_edge(v.offset(-dx, -dy), orientation))
            .collect();
        starts
            .into_iter()
            .map(|start| {
                let mut end = start;
                while self.has_unit_edge(end, orientation) {
                    end = end.offset(dx, dy);
                }
                EdgeInterval { start, end, orientation, maximal: true }
            })
            .collect()
    }

    /// The maximal edge interval containing both points, if any.
    pub fn common_edge_interval(&self, a: Point, b: Point) -> Option<EdgeInterval> {
        let orientation = if a.y == b.y {
            Orientation::Horizontal
        } else if a.x == b.x {
            Orientation::Vertical
        } else {
            return None;
        };
        self.maximal_edge_intervals(orientation).into_iter().find(|e| e.contains(a) && e.contains(b))
    }
}

impl fmt::Display for Polyomino {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.cells.iter().map(|c| format!("{} {}", c.ll.x, c.ll.y)).collect();
        write!(f, "{{{}}}", parts.join("; "))
    }
}

fn components_of(cells: &HashSet<Cell>) -> Vec<Vec<Cell>> {
    let mut order: Vec<Cell> = cells.iter().copied().collect();
    order.sort();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for start in order {
        if !seen.insert(start) {
            continue;
        }
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(c) = stack.pop() {
            for n in c.neighbors() {
                if cells.contains(&n) && seen.insert(n) {
                    comp.push(n);
                    stack.push(n);
                }
            }
        }
        comp.sort();
        out.push(comp);
    }
    out
}

/// Parses the line-oriented `x y` format (`#` comments, blank lines ignored)
/// or, when the text starts with `{`, the JSON form `{"cells":[[x,y],...]}`.
pub fn parse_polyomino(text: &str) -> Result<Polyomino> {
    if text.trim_start().starts_with('{') {
        let repr: PolyominoRepr = serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), message: e.to_string() })?;
        return Polyomino::build(repr.cells);
    }
    let mut cells = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let nums: Vec<&str> = line.split_whitespace().collect();
        let parse = |s: &str| {
            s.parse::<i32>().map_err(|e| Error::Parse { line: idx + 1, message: format!("bad coordinate {s:?}: {e}") })
        };
        if nums.len() != 2 {
            return Err(Error::Parse { line: idx + 1, message: format!("expected two integers, got {line:?}") });
        }
        cells.push(Cell::new(parse(nums[0])?, parse(nums[1])?));
    }
    Polyomino::build(cells)
}

/// Line-oriented text form accepted by [`parse_polyomino`].
pub fn format_polyomino(p: &Polyomino) -> String {
    p.cells().iter().map(|c| format!("{} {}\n", c.ll.x, c.ll.y)).collect()
}
