//! Structural recognizers on polyominoes: closed paths, L-configurations,
//! ladders, zig-zag walks and the hooked block patterns found in zig-zag
//! closed paths.

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{cell_vertices, corners, Cell, Dihedral, Interval, Orientation, Point};
use crate::polyomino::{Block, Polyomino};

/// Unit step between edge-adjacent cells.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    North,
    South,
    East,
    West,
}

impl Direction {
    pub fn between(from: Cell, to: Cell) -> Option<Direction> {
        match (to.ll.x - from.ll.x, to.ll.y - from.ll.y) {
            (0, 1) => Some(Direction::North),
            (0, -1) => Some(Direction::South),
            (1, 0) => Some(Direction::East),
            (-1, 0) => Some(Direction::West),
            _ => None,
        }
    }

    pub fn is_horizontal(self) -> bool {
        matches!(self, Direction::East | Direction::West)
    }

    pub fn is_orthogonal(self, other: Direction) -> bool {
        self.is_horizontal() != other.is_horizontal()
    }
}

/// The cyclic cell sequence `A_1, ..., A_n` witnessing a closed path.
///
/// Canonical form: starts at the least cell and moves first to its smaller
/// neighbour.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedPathSequence {
    pub cells: Vec<Cell>,
}

impl ClosedPathSequence {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// `A_i` with cyclic indexing.
    pub fn at(&self, i: isize) -> Cell {
        let n = self.cells.len() as isize;
        self.cells[i.rem_euclid(n) as usize]
    }

    /// Direction of the step `A_i -> A_{i+1}`.
    pub fn step(&self, i: isize) -> Direction {
        Direction::between(self.at(i), self.at(i + 1)).expect("consecutive cells are adjacent")
    }

    /// Whether the path changes direction at `A_i`.
    pub fn turns_at(&self, i: isize) -> bool {
        self.step(i - 1) != self.step(i)
    }

    /// Indices of the cells where the path changes direction.
    pub fn changes_of_direction(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.turns_at(i as isize)).collect()
    }

    /// Start indices `i` such that `A_i, ..., A_{i+3}` turn at both middle
    /// cells (a skew tetromino run along the path).
    pub fn four_cell_configurations(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.turns_at(i as isize + 1) && self.turns_at(i as isize + 2)).collect()
    }

    /// Whether every change of direction at `A_k` is the middle of an
    /// L-configuration `A_{k-2}, ..., A_{k+2}`.
    pub fn l_configuration_at_every_change(&self) -> bool {
        self.changes_of_direction().into_iter().all(|k| {
            let k = k as isize;
            !self.turns_at(k - 1) && !self.turns_at(k + 1)
        })
    }

    /// Rotate (and possibly reverse) the labelling so `A_start` becomes `A_1`.
    pub fn relabeled(&self, start: usize, reversed: bool) -> ClosedPathSequence {
        let n = self.len() as isize;
        let cells = (0..n)
            .map(|k| if reversed { self.at(start as isize - k) } else { self.at(start as isize + k) })
            .collect();
        ClosedPathSequence { cells }
    }
}

/// Recognizes closed paths: every cell has exactly two neighbours, the
/// adjacency graph is one cycle of length greater than five, and cells at
/// cyclic distance greater than two share no vertex.
pub fn closed_path_sequence(p: &Polyomino) -> Option<ClosedPathSequence> {
    let n = p.rank();
    if n <= 5 {
        return None;
    }
    let mut nbrs: HashMap<Cell, [Cell; 2]> = HashMap::with_capacity(n);
    for &c in p.cells() {
        let ns: Vec<Cell> = p.edge_neighbors(c).collect();
        if ns.len() != 2 {
            return None;
        }
        let (a, b) = if ns[0] < ns[1] { (ns[0], ns[1]) } else { (ns[1], ns[0]) };
        nbrs.insert(c, [a, b]);
    }
    let start = p.cells()[0];
    let mut seq = vec![start];
    let mut prev = start;
    let mut cur = nbrs[&start][0];
    while cur != start {
        seq.push(cur);
        let [a, b] = nbrs[&cur];
        let next = if a == prev { b } else { a };
        prev = cur;
        cur = next;
        if seq.len() > n {
            return None;
        }
    }
    if seq.len() != n {
        return None;
    }
    let index: HashMap<Cell, usize> = seq.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    for (i, c) in seq.iter().enumerate() {
        for other in c.vertex_neighbors() {
            if let Some(&j) = index.get(&other) {
                let d = i.abs_diff(j);
                if d.min(n - d) > 2 {
                    return None;
                }
            }
        }
    }
    Some(ClosedPathSequence { cells: seq })
}

pub fn is_closed_path(p: &Polyomino) -> bool {
    closed_path_sequence(p).is_some()
}

/// Five cells `C_1..C_5` with `C_1,C_2,C_3` and `C_3,C_4,C_5` running in
/// orthogonal straight lines.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LConfiguration {
    pub cells: [Cell; 5],
}

/// All L-configurations of `p`, each listed once (up to reversal), sorted.
pub fn find_l_configurations(p: &Polyomino) -> Vec<LConfiguration> {
    const UNIT: [(i32, i32); 4] = [(1, 0), (0, 1), (-1, 0), (0, -1)];
    let mut out = BTreeSet::new();
    for &corner in p.cells() {
        for a in UNIT {
            for b in UNIT {
                if (a.0 == 0) == (b.0 == 0) {
                    continue;
                }
                let seq = [
                    corner.offset(2 * a.0, 2 * a.1),
                    corner.offset(a.0, a.1),
                    corner,
                    corner.offset(b.0, b.1),
                    corner.offset(2 * b.0, 2 * b.1),
                ];
                if seq.iter().all(|&c| p.contains(c)) {
                    let mut rev = seq;
                    rev.reverse();
                    out.insert(LConfiguration { cells: seq.min(rev) });
                }
            }
        }
    }
    out.into_iter().collect()
}

/// A chain of same-orientation maximal blocks, consecutive ones sharing
/// exactly two vertices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Ladder {
    pub blocks: Vec<Block>,
    /// `{a_i, b_i}`: the vertices shared by block `i` and block `i + 1`.
    pub steps: Vec<(Point, Point)>,
}

fn shared_vertices(a: &Block, b: &Block) -> Vec<Point> {
    let vb = b.vertices();
    a.vertices().into_iter().filter(|v| vb.contains(v)).collect()
}

/// All ladders of `p` with at least `min_steps` blocks that cannot be
/// extended at either end, each listed once up to reversal.
pub fn find_ladders(p: &Polyomino, min_steps: usize) -> Vec<Ladder> {
    let mut out = BTreeSet::new();
    for orientation in [Orientation::Horizontal, Orientation::Vertical] {
        let blocks = p.maximal_blocks(orientation);
        let n = blocks.len();
        let mut step: HashMap<(usize, usize), (Point, Point)> = HashMap::new();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    let s = shared_vertices(&blocks[i], &blocks[j]);
                    if s.len() == 2 && s[0] != s[1] {
                        step.insert((i, j), (s[0], s[1]));
                    }
                }
            }
        }
        let same_edge_interval = |s: (Point, Point), t: (Point, Point)| {
            p.common_edge_interval(s.0, s.1).is_some_and(|e| e.contains(t.0) && e.contains(t.1))
        };
        // valid successor of a chain ending ... -> prev -> last
        let extendable = |chain: &[usize], next: usize| -> bool {
            let last = *chain.last().unwrap();
            if chain.contains(&next) || !step.contains_key(&(last, next)) {
                return false;
            }
            if chain.len() >= 2 {
                let prev = chain[chain.len() - 2];
                if same_edge_interval(step[&(prev, last)], step[&(last, next)]) {
                    return false;
                }
            }
            true
        };
        let mut stack: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
        while let Some(chain) = stack.pop() {
            let nexts: Vec<usize> = (0..n).filter(|&j| extendable(&chain, j)).collect();
            if nexts.is_empty() {
                let mut rev = chain.clone();
                rev.reverse();
                let backward_stuck = (0..n).all(|j| !extendable(&rev, j));
                if backward_stuck && chain.len() >= min_steps {
                    let key = if chain <= rev { chain } else { rev };
                    let ladder = Ladder {
                        blocks: key.iter().map(|&i| blocks[i]).collect(),
                        steps: key.windows(2).map(|w| step[&(w[0], w[1])]).collect(),
                    };
                    out.insert(ladder);
                }
            } else {
                for j in nexts {
                    let mut c = chain.clone();
                    c.push(j);
                    stack.push(c);
                }
            }
        }
    }
    out.into_iter().collect()
}

/// One link `I_i` of a zig-zag walk: the interval, the entry vertex `v_i`,
/// its opposite corner `z_i`, and the two remaining corners `u_i`, `v_{i+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ZigZagLink {
    pub interval: Interval,
    pub v: Point,
    pub z: Point,
    pub u: Point,
    pub next: Point,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZigZagWalk {
    pub links: Vec<ZigZagLink>,
}

/// Limits for the zig-zag search. `max_length` caps the number of intervals
/// in a walk (it can never exceed the number of inner intervals).
#[derive(Clone, Copy, Debug)]
pub struct ZigZagLimits {
    pub max_length: Option<usize>,
    pub max_nodes: u64,
}

impl Default for ZigZagLimits {
    fn default() -> Self {
        Self { max_length: None, max_nodes: 50_000_000 }
    }
}

struct ZigZagSearch<'a> {
    p: &'a Polyomino,
    intervals: Vec<Interval>,
    by_corner: HashMap<Point, Vec<usize>>,
    shared_interval: HashSet<(Point, Point)>,
    max_len: usize,
    nodes: u64,
    max_nodes: u64,
    stop_at_first: bool,
    seen: HashSet<Vec<Interval>>,
    found: Vec<ZigZagWalk>,
}

fn adjacent_corners(iv: &Interval, v: Point) -> [Point; 2] {
    let h = if v.x == iv.lo.x { iv.hi.x } else { iv.lo.x };
    let w = if v.y == iv.lo.y { iv.hi.y } else { iv.lo.y };
    [Point::new(h, v.y), Point::new(v.x, w)]
}

fn opposite_corner(iv: &Interval, v: Point) -> Point {
    Point::new(iv.lo.x + iv.hi.x - v.x, iv.lo.y + iv.hi.y - v.y)
}

impl<'a> ZigZagSearch<'a> {
    fn new(p: &'a Polyomino, limits: ZigZagLimits, stop_at_first: bool) -> Self {
        let intervals = p.inner_intervals();
        let mut by_corner: HashMap<Point, Vec<usize>> = HashMap::new();
        let mut shared_interval = HashSet::new();
        for (i, iv) in intervals.iter().enumerate() {
            for c in iv.corner_points() {
                by_corner.entry(c).or_default().push(i);
            }
            let pts: Vec<Point> =
                (iv.lo.x..=iv.hi.x).flat_map(|x| (iv.lo.y..=iv.hi.y).map(move |y| Point::new(x, y))).collect();
            for &a in &pts {
                for &b in &pts {
                    shared_interval.insert((a, b));
                }
            }
        }
        let max_len = limits.max_length.unwrap_or(intervals.len()).min(intervals.len());
        Self {
            p,
            intervals,
            by_corner,
            shared_interval,
            max_len,
            nodes: 0,
            max_nodes: limits.max_nodes,
            stop_at_first,
            seen: HashSet::new(),
            found: Vec::new(),
        }
    }

    fn run(&mut self) -> Result<()> {
        for start in 0..self.intervals.len() {
            let iv = self.intervals[start];
            for v in iv.corner_points() {
                let mut used = vec![false; self.intervals.len()];
                used[start] = true;
                let mut links = Vec::new();
                self.extend(start, start, v, &mut used, &mut links)?;
                if self.stop_at_first && !self.found.is_empty() {
                    return Ok(());
                }
            }
        }
        Ok(())
    }

    fn extend(
        &mut self,
        start: usize,
        cur: usize,
        v: Point,
        used: &mut [bool],
        links: &mut Vec<ZigZagLink>,
    ) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Error::SearchBudget { what: "zig-zag walk search", nodes: self.nodes });
        }
        let iv = self.intervals[cur];
        let z = opposite_corner(&iv, v);
        if links.iter().any(|l| self.shared_interval.contains(&(l.z, z))) {
            return Ok(());
        }
        let adj = adjacent_corners(&iv, v);
        for (next, u) in [(adj[0], adj[1]), (adj[1], adj[0])] {
            if self.p.common_edge_interval(v, next).is_none() {
                continue;
            }
            links.push(ZigZagLink { interval: iv, v, z, u, next });
            let first = links[0];
            if links.len() >= 3 && next == first.v && iv.intersection(&first.interval) == Some(Interval { lo: next, hi: next }) {
                self.record(links);
                if self.stop_at_first {
                    links.pop();
                    return Ok(());
                }
            }
            if links.len() < self.max_len {
                let candidates = self.by_corner.get(&next).cloned().unwrap_or_default();
                for cand in candidates {
                    if cand < start || used[cand] {
                        continue;
                    }
                    let civ = self.intervals[cand];
                    if iv.intersection(&civ) != Some(Interval { lo: next, hi: next }) {
                        continue;
                    }
                    used[cand] = true;
                    self.extend(start, cand, next, used, links)?;
                    used[cand] = false;
                    if self.stop_at_first && !self.found.is_empty() {
                        links.pop();
                        return Ok(());
                    }
                }
            }
            links.pop();
        }
        Ok(())
    }

    fn record(&mut self, links: &[ZigZagLink]) {
        let ivs: Vec<Interval> = links.iter().map(|l| l.interval).collect();
        let mut rev = ivs.clone();
        rev.reverse();
        let rot = |s: &[Interval]| {
            let k = (0..s.len()).min_by_key(|&i| s[i]).unwrap();
            let mut r = s[k..].to_vec();
            r.extend_from_slice(&s[..k]);
            r
        };
        let key = rot(&ivs).min(rot(&rev));
        if self.seen.insert(key) {
            self.found.push(ZigZagWalk { links: links.to_vec() });
        }
    }
}

/// All zig-zag walks of `p` up to rotation and reversal of the interval
/// sequence. Running out of nodes is an error, never a silent truncation.
pub fn find_zigzag_walks(p: &Polyomino, limits: ZigZagLimits) -> Result<Vec<ZigZagWalk>> {
    let mut s = ZigZagSearch::new(p, limits, false);
    s.run()?;
    Ok(s.found)
}

/// Whether `p` has at least one zig-zag walk.
pub fn has_zigzag_walk(p: &Polyomino, limits: ZigZagLimits) -> Result<bool> {
    let mut s = ZigZagSearch::new(p, limits, true);
    s.run()?;
    Ok(!s.found.is_empty())
}

/// Checks the three defining conditions of a zig-zag walk directly.
pub fn is_zigzag_walk(p: &Polyomino, walk: &ZigZagWalk) -> bool {
    let l = walk.links.len();
    if l < 3 {
        return false;
    }
    let inner = p.inner_intervals();
    let distinct: HashSet<Interval> = walk.links.iter().map(|k| k.interval).collect();
    if distinct.len() != l || !walk.links.iter().all(|k| inner.contains(&k.interval)) {
        return false;
    }
    for (i, k) in walk.links.iter().enumerate() {
        let Ok(cp) = corners(&k.interval) else { return false };
        let pairs_ok = (cp.diagonal == crate::lattice::PointPair::new(k.v, k.z)
            && cp.antidiagonal == crate::lattice::PointPair::new(k.u, k.next))
            || (cp.antidiagonal == crate::lattice::PointPair::new(k.v, k.z)
                && cp.diagonal == crate::lattice::PointPair::new(k.u, k.next));
        let nk = &walk.links[(i + 1) % l];
        let point = Interval { lo: k.next, hi: k.next };
        if !pairs_ok || nk.v != k.next || k.interval.intersection(&nk.interval) != Some(point) {
            return false;
        }
        if p.common_edge_interval(k.v, k.next).is_none() {
            return false;
        }
    }
    for i in 0..l {
        for j in 0..l {
            if i != j && inner.iter().any(|iv| iv.contains(walk.links[i].z) && iv.contains(walk.links[j].z)) {
                return false;
            }
        }
    }
    true
}

/// Closed-path primality criterion: an L-configuration or a ladder of at
/// least three steps.
pub fn is_prime_closed_path(p: &Polyomino) -> Result<bool> {
    if closed_path_sequence(p).is_none() {
        return Err(Error::NotClosedPath);
    }
    Ok(!find_l_configurations(p).is_empty() || !find_ladders(p, 3).is_empty())
}

/// Which corner of the middle cell the hooking vertex is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GammaKind {
    /// hooking vertex at the upper-left corner of the middle cell
    Gamma,
    /// upper-right
    Tau,
    /// lower-right
    W,
    /// lower-left
    Zeta,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GammaLikePath {
    pub kind: GammaKind,
    pub horizontal: Block,
    pub vertical: Block,
    pub middle: Cell,
    pub hooking: Point,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SkewKind {
    /// horizontal blocks, the upper one continuing to the right
    LU,
    /// horizontal blocks, the upper one continuing to the left
    LD,
    /// vertical blocks, the right one continuing upwards
    DU,
    /// vertical blocks, the right one continuing downwards
    UD,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SkewPath {
    pub kind: SkewKind,
    pub blocks: [Block; 2],
    pub hooking: (Point, Point),
}

const HOOKED_BLOCK_MIN_RANK: usize = 4;

fn block_from_cells(cells: &[Cell]) -> Block {
    let first = *cells.iter().min().unwrap();
    let last = *cells.iter().max().unwrap();
    let orientation = if first.ll.y == last.ll.y { Orientation::Horizontal } else { Orientation::Vertical };
    Block { first, last, orientation, maximal: true }
}

fn run(p: &Polyomino, from: Cell, dx: i32, dy: i32) -> Vec<Cell> {
    let mut out = vec![from];
    let mut c = from.offset(dx, dy);
    while p.contains(c) {
        out.push(c);
        c = c.offset(dx, dy);
    }
    out
}

/// Γ-, τ-, W- and ζ-paths of `p`: two maximal blocks of rank greater than
/// three meeting in a single vertex `w`, and a middle cell filling the
/// corner at `w`. The four kinds are the orbits of the Γ template under the
/// lattice symmetries, told apart by which corner of the middle cell `w` is.
pub fn find_gamma_like_paths(p: &Polyomino) -> Vec<GammaLikePath> {
    let mut out = BTreeSet::new();
    for t in Dihedral::all() {
        let q = p.transform(t);
        let back = t.inverse();
        for &d in q.cells() {
            let up = d.offset(0, 1);
            let left = d.offset(-1, 0);
            if !q.contains(up) || !q.contains(left) || q.contains(up.offset(-1, 0)) || q.contains(left.offset(0, 1)) {
                continue;
            }
            let b1 = run(&q, up, 1, 0);
            let b2 = run(&q, left, 0, -1);
            if b1.len() < HOOKED_BLOCK_MIN_RANK || b2.len() < HOOKED_BLOCK_MIN_RANK {
                continue;
            }
            let cells1: Vec<Cell> = b1.iter().map(|&c| back.apply_cell(c)).collect();
            let cells2: Vec<Cell> = b2.iter().map(|&c| back.apply_cell(c)).collect();
            let (blk1, blk2) = (block_from_cells(&cells1), block_from_cells(&cells2));
            let (horizontal, vertical) =
                if blk1.orientation == Orientation::Horizontal { (blk1, blk2) } else { (blk2, blk1) };
            let middle = back.apply_cell(d);
            let hooking = back.apply(d.upper_left());
            let kind = if hooking == middle.upper_left() {
                GammaKind::Gamma
            } else if hooking == middle.upper_right() {
                GammaKind::Tau
            } else if hooking == middle.lower_right() {
                GammaKind::W
            } else {
                GammaKind::Zeta
            };
            out.insert(GammaLikePath { kind, horizontal, vertical, middle, hooking });
        }
    }
    out.into_iter().collect()
}

/// Skew paths of `p`: two parallel maximal blocks of rank greater than three
/// sharing exactly one unit edge, at the end of one of them.
pub fn find_skew_paths(p: &Polyomino) -> Vec<SkewPath> {
    let mut out = BTreeSet::new();
    for t in Dihedral::all() {
        let q = p.transform(t);
        let back = t.inverse();
        for &d1 in q.cells() {
            let above = d1.offset(0, 1);
            if q.contains(d1.offset(1, 0)) || !q.contains(above) || q.contains(above.offset(-1, 0)) {
                continue;
            }
            let b1 = run(&q, d1, -1, 0);
            let b2 = run(&q, above, 1, 0);
            if b1.len() < HOOKED_BLOCK_MIN_RANK || b2.len() < HOOKED_BLOCK_MIN_RANK {
                continue;
            }
            let cells1: Vec<Cell> = b1.iter().map(|&c| back.apply_cell(c)).collect();
            let cells2: Vec<Cell> = b2.iter().map(|&c| back.apply_cell(c)).collect();
            let (x, y) = (block_from_cells(&cells1), block_from_cells(&cells2));
            let blocks = if x <= y { [x, y] } else { [y, x] };
            let a = back.apply(d1.upper_right());
            let b = back.apply(d1.upper_left());
            let hooking = if a <= b { (a, b) } else { (b, a) };
            let kind = match blocks[0].orientation {
                Orientation::Horizontal => {
                    let (lower, upper) = if blocks[0].first.ll.y < blocks[1].first.ll.y {
                        (blocks[0], blocks[1])
                    } else {
                        (blocks[1], blocks[0])
                    };
                    if upper.last.ll.x > lower.last.ll.x {
                        SkewKind::LU
                    } else {
                        SkewKind::LD
                    }
                }
                Orientation::Vertical => {
                    let (left, right) = if blocks[0].first.ll.x < blocks[1].first.ll.x {
                        (blocks[0], blocks[1])
                    } else {
                        (blocks[1], blocks[0])
                    };
                    if right.last.ll.y > left.last.ll.y {
                        SkewKind::DU
                    } else {
                        SkewKind::UD
                    }
                }
            };
            out.insert(SkewPath { kind, blocks, hooking });
        }
    }
    out.into_iter().collect()
}

/// Cells of the polyomino touching `v`.
pub fn cells_at_vertex(p: &Polyomino, v: Point) -> Vec<Cell> {
    [Cell { ll: v }, Cell { ll: v.offset(-1, 0) }, Cell { ll: v.offset(0, -1) }, Cell { ll: v.offset(-1, -1) }]
        .into_iter()
        .filter(|c| p.contains(*c))
        .collect()
}

/// Number of distinct vertices of the path cells; a closed path of `n`
/// cells has `2n`.
pub fn path_vertex_count(seq: &ClosedPathSequence) -> usize {
    seq.cells.iter().flat_map(|&c| cell_vertices(c)).collect::<HashSet<_>>().len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes;

    fn cells(v: &[(i32, i32)]) -> Vec<Cell> {
        v.iter().map(|&c| Cell::from(c)).collect()
    }

    #[test]
    fn ring_closed_path_sequence() {
        let seq = closed_path_sequence(&shapes::ring(3, 3)).unwrap();
        assert_eq!(seq.len(), 8);
        assert_eq!(seq.cells[0], Cell::new(0, 0));
        assert_eq!(seq.cells[1], Cell::new(0, 1));
        assert_eq!(path_vertex_count(&seq), 16);
    }

    #[test]
    fn non_closed_paths() {
        assert!(closed_path_sequence(&shapes::square(2, 2)).is_none());
        assert!(closed_path_sequence(&shapes::square(3, 3)).is_none());
        assert!(closed_path_sequence(&shapes::bar(6)).is_none());
    }

    #[test]
    fn l_configurations() {
        let found = find_l_configurations(&shapes::ring(3, 3));
        assert!(found.contains(&LConfiguration { cells: cells(&[(0, 0), (1, 0), (2, 0), (2, 1), (2, 2)]).try_into().unwrap() }));
        assert_eq!(found.len(), 4);
        assert!(find_l_configurations(&shapes::bar(5)).is_empty());
        assert!(find_l_configurations(&shapes::staircase(3)).is_empty());
    }

    #[test]
    fn staircase_ladder() {
        let ladders = find_ladders(&shapes::staircase(3), 3);
        assert_eq!(ladders.len(), 1);
        let l = &ladders[0];
        assert_eq!(l.blocks.len(), 3);
        let firsts: Vec<Cell> = l.blocks.iter().map(|b| b.first).collect();
        assert_eq!(firsts, cells(&[(0, 0), (1, 1), (2, 2)]));
        let p = |x, y| Point::new(x, y);
        assert_eq!(l.steps, vec![(p(1, 1), p(2, 1)), (p(2, 2), p(3, 2))]);
    }

    #[test]
    fn no_ladders() {
        assert!(find_ladders(&shapes::ring(3, 3), 3).is_empty());
        assert!(find_ladders(&shapes::domino(), 2).is_empty());
    }

    #[test]
    fn zigzag_absent_in_small_shapes() {
        let lim = ZigZagLimits::default();
        assert!(find_zigzag_walks(&shapes::ring(3, 3), lim).unwrap().is_empty());
        assert!(find_zigzag_walks(&shapes::square(2, 2), lim).unwrap().is_empty());
    }

    #[test]
    fn zigzag_budget_is_reported() {
        let lim = ZigZagLimits { max_length: None, max_nodes: 3 };
        assert!(matches!(find_zigzag_walks(&shapes::ring(3, 3), lim), Err(Error::SearchBudget { .. })));
    }

    #[test]
    fn prime_criterion_examples() {
        assert!(is_prime_closed_path(&shapes::ring(3, 3)).unwrap());
        assert!(matches!(is_prime_closed_path(&shapes::square(2, 2)), Err(Error::NotClosedPath)));
    }

    #[test]
    fn gamma_path_detection() {
        let g = find_gamma_like_paths(&shapes::gamma_path());
        assert_eq!(g.len(), 1);
        assert_eq!(g[0].kind, GammaKind::Gamma);
        assert_eq!(g[0].middle, Cell::new(0, -1));
        assert_eq!(g[0].hooking, Point::new(0, 0));
        assert!(find_gamma_like_paths(&shapes::ring(3, 3)).is_empty());
        assert!(find_gamma_like_paths(&shapes::domino()).is_empty());
        for t in Dihedral::all() {
            assert_eq!(find_gamma_like_paths(&shapes::gamma_path().transform(t)).len(), 1);
        }
    }

    #[test]
    fn skew_path_detection() {
        let p = Polyomino::build(cells(&[(0, 0), (1, 0), (2, 0), (3, 0), (3, 1), (4, 1), (5, 1), (6, 1)])).unwrap();
        let s = find_skew_paths(&p);
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].kind, SkewKind::LU);
        assert_eq!(s[0].hooking, (Point::new(3, 1), Point::new(4, 1)));
        let kinds: BTreeSet<SkewKind> =
            Dihedral::all().map(|t| find_skew_paths(&p.transform(t))[0].kind).collect();
        assert_eq!(kinds.len(), 4);
    }
}
