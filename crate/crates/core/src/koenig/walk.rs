//! The walk construction for closed paths.
//!
//! Walk the cell cycle `A_1, ..., A_n`. At `A_i` pick an unused inner
//! interval containing `A_i` and one of its corner pairs, label one corner
//! `i` and the other `i'`, and finally order the variables
//! `x_1 > ... > x_n > x_1' > ... > x_n'`. A pick is admissible when both
//! corners are still unlabelled and no corner of the opposite pair already
//! carries an unprimed label: then `x_i` is the largest of the four corners
//! and the chosen pair is the initial term.
//!
//! Starts are tried at four-cell configurations first, then at
//! L-configurations around a change of direction, then anywhere, in both
//! directions. Picks are first confined to intervals made of the cells next
//! to `A_i`, which is where the local case analysis lives; only when that
//! fails are longer intervals allowed, and after that a cell may contribute
//! no pick or two. Choices are explored depth first under a node cap. The
//! result is always verified and a failure falls back to the complete
//! search, which is reported.

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::search::{search_certificate, SearchLimits, SearchOutcome};
use super::{verify_certificate_with_height, InitialSelection, KoenigCertificate, SelectionEntry};
use crate::configurations::{closed_path_sequence, ClosedPathSequence};
use crate::error::{Error, Result};
use crate::lattice::{corners, Cell, Diagonal, Interval, Point};
use crate::polyomino::Polyomino;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Seed {
    /// `A_1..A_4` is a four-cell configuration
    FourCell,
    /// `A_1..A_5` is an L-configuration
    LConfiguration,
    /// neither was found; the walk starts at the least cell
    Plain,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkOutcome {
    pub certificate: KoenigCertificate,
    /// The cycle in walk order, starting at the seed.
    pub cells: Vec<Cell>,
    pub seed: Seed,
    /// `(unprimed, primed)` vertex of each step.
    pub labels: Vec<(Point, Point)>,
    /// Set when the walk failed and the certificate came from the search.
    pub fallback: bool,
}

struct Walk<'a> {
    p: &'a Polyomino,
    seq: ClosedPathSequence,
    intervals: Vec<Interval>,
    used: Vec<bool>,
    /// 0 = unlabelled, 1 = unprimed, 2 = primed
    state: std::collections::HashMap<Point, u8>,
    entries: Vec<SelectionEntry>,
    labels: Vec<(Point, Point)>,
    nodes: u64,
    max_nodes: u64,
    /// allow a cell to contribute zero or two picks
    flexible: bool,
    /// last position in the walk of a cell inside each interval
    reach: Vec<usize>,
    /// picks must lie within this many cells of `A_i` along the walk
    window: Option<usize>,
    /// intervals having each vertex as a corner
    cornered: std::collections::HashMap<Point, Vec<usize>>,
}

impl Walk<'_> {
    fn future_incidence(&self, v: Point, i: usize) -> usize {
        self.seq.cells[i + 1..].iter().filter(|c| c.interval().contains(v)).count()
    }

    /// Admissible picks at cell `i`, most promising first.
    fn picks(&self, i: usize) -> Result<Vec<(usize, Diagonal, Point, Point)>> {
        let cell = self.seq.cells[i].interval();
        let label = |v: Point| self.state.get(&v).copied().unwrap_or(0);
        let mut picks = Vec::new();
        for (k, iv) in self.intervals.iter().enumerate() {
            if self.used[k] || !iv.contains_interval(&cell) || !self.local(k, i) {
                continue;
            }
            let c = corners(iv)?;
            for d in [Diagonal::Main, Diagonal::Anti] {
                let (a, b) = (c.get(d).first(), c.get(d).second());
                let other = c.get(d.other());
                if label(a) == 0 && label(b) == 0 && label(other.first()) != 1 && label(other.second()) != 1 {
                    let (fa, fb) = (self.future_incidence(a, i), self.future_incidence(b, i));
                    let (u, p) = if fa <= fb { (a, b) } else { (b, a) };
                    let area = iv.width() * iv.height();
                    picks.push((area, k, 0, d, u, p));
                    picks.push((area, k, 1, d, p, u));
                }
            }
        }
        picks.sort_by_key(|&(area, k, alt, ..)| (alt, area, k));
        Ok(picks.into_iter().map(|(_, k, _, d, u, p)| (k, d, u, p)).collect())
    }

    fn local(&self, k: usize, i: usize) -> bool {
        let Some(r) = self.window else { return true };
        let iv = &self.intervals[k];
        let cells = (iv.width() * iv.height()) as usize;
        let near = (-(r as isize)..=r as isize).filter(|&d| iv.contains_interval(&self.seq.at(i as isize + d).interval())).count();
        near == cells
    }

    /// Every unlabelled vertex must still be a corner of an unused interval
    /// reaching a cell after `i`.
    fn coverable(&self, i: usize) -> bool {
        self.cornered.iter().all(|(v, ks)| {
            self.state.contains_key(v) || ks.iter().any(|&k| !self.used[k] && self.reach[k] > i)
        })
    }

    fn apply(&mut self, (k, d, unprimed, primed): (usize, Diagonal, Point, Point)) {
        self.used[k] = true;
        self.state.insert(unprimed, 1);
        self.state.insert(primed, 2);
        self.entries.push(SelectionEntry { interval: self.intervals[k], initial: d });
        self.labels.push((unprimed, primed));
    }

    fn undo(&mut self, (k, _, unprimed, primed): (usize, Diagonal, Point, Point)) {
        self.labels.pop();
        self.entries.pop();
        self.state.remove(&unprimed);
        self.state.remove(&primed);
        self.used[k] = false;
    }

    /// Cell `i` contributes one pick. In flexible mode it may also contribute
    /// none or two as long as the total can still reach one pick per cell.
    fn step(&mut self, i: usize) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Error::SearchBudget { what: "walk order", nodes: self.nodes });
        }
        let n = self.seq.len();
        if i == n {
            return Ok(self.labels.len() == n);
        }
        let have = self.labels.len();
        let remaining = n - i;
        for pick in self.picks(i)? {
            if have + 1 > n {
                break;
            }
            self.apply(pick);
            if self.coverable(i) && self.step(i + 1)? {
                return Ok(true);
            }
            self.undo(pick);
        }
        if !self.flexible {
            return Ok(false);
        }
        if have + 2 * (remaining - 1) >= n && self.coverable(i)
            && self.step(i + 1)? {
                return Ok(true);
            }
        if have + 2 <= n {
            for first in self.picks(i)? {
                self.apply(first);
                for second in self.picks(i)? {
                    if second.0 <= first.0 {
                        continue;
                    }
                    self.apply(second);
                    if self.coverable(i) && self.step(i + 1)? {
                        return Ok(true);
                    }
                    self.undo(second);
                }
                self.undo(first);
            }
        }
        Ok(false)
    }
}

fn seed_of(seq: &ClosedPathSequence) -> Seed {
    if seq.turns_at(1) && seq.turns_at(2) {
        Seed::FourCell
    } else if seq.turns_at(2) && !seq.turns_at(1) && !seq.turns_at(3) {
        Seed::LConfiguration
    } else {
        Seed::Plain
    }
}

/// Starting points in order of preference: four-cell configurations, then
/// L-configurations, then everything else, each in both directions.
fn starts(seq: &ClosedPathSequence) -> Vec<(ClosedPathSequence, Seed)> {
    let mut all: Vec<(ClosedPathSequence, Seed)> = [false, true]
        .into_iter()
        .flat_map(|rev| (0..seq.len()).map(move |k| seq.relabeled(k, rev)))
        .map(|s| {
            let seed = seed_of(&s);
            (s, seed)
        })
        .collect();
    all.sort_by_key(|(_, seed)| *seed as u8);
    all
}

// The walk either succeeds quickly or not at all; past these node counts
// the complete search is cheaper.
const STRICT_NODES: u64 = 20_000;
const FLEXIBLE_NODES: u64 = 200_000;

fn run_walk<'a>(
    p: &'a Polyomino,
    seq: &ClosedPathSequence,
    window: Option<usize>,
    flexible: bool,
    max_nodes: u64,
) -> Result<Option<Walk<'a>>> {
    let intervals = p.inner_intervals();
    let reach = intervals
        .iter()
        .map(|iv| seq.cells.iter().rposition(|c| iv.contains_interval(&c.interval())).unwrap_or(0))
        .collect();
    let mut cornered: std::collections::HashMap<Point, Vec<usize>> = Default::default();
    for (k, iv) in intervals.iter().enumerate() {
        let c = corners(iv)?;
        for d in [Diagonal::Main, Diagonal::Anti] {
            for v in [c.get(d).first(), c.get(d).second()] {
                cornered.entry(v).or_default().push(k);
            }
        }
    }
    let mut walk = Walk {
        window,
        reach,
        cornered,
        p,
        seq: seq.clone(),
        used: vec![false; intervals.len()],
        intervals,
        state: Default::default(),
        entries: Vec::new(),
        labels: Vec::new(),
        nodes: 0,
        max_nodes,
        flexible,
    };
    match walk.step(0) {
        Ok(true) => Ok(Some(walk)),
        Ok(false) => Ok(None),
        Err(e) if e.is_budget() => Ok(None),
        Err(e) => Err(e),
    }
}

fn certify_walk(walk: &Walk<'_>) -> Option<KoenigCertificate> {
    let order: Vec<Point> = walk.labels.iter().map(|l| l.0).chain(walk.labels.iter().map(|l| l.1)).collect();
    let total = order.len();
    let weights: Vec<(Point, BigInt)> =
        order.iter().enumerate().map(|(pos, &v)| (v, BigInt::one() << (total - 1 - pos))).collect();
    let selection = InitialSelection { entries: walk.entries.clone() };
    let mut certificate = KoenigCertificate::from_weights(walk.p, selection, &weights);
    certificate.vertex_order = order;
    verify_certificate_with_height(walk.p, &certificate, walk.seq.len()).passed().then_some(certificate)
}

/// Runs the walk on a closed path; see the module docs. `limits` caps both
/// the walk and the fallback search.
pub fn walk_order(p: &Polyomino, limits: SearchLimits) -> Result<WalkOutcome> {
    let seq = closed_path_sequence(p).ok_or(Error::NotClosedPath)?;
    let n = seq.len();
    let candidates = starts(&seq);
    let local = [Some(1), Some(2)].into_iter().flat_map(|w| candidates.iter().map(move |c| (c, w, false, STRICT_NODES)));
    let strict = candidates.iter().map(|c| (c, None, false, STRICT_NODES));
    let flexible = candidates.iter().take(2).map(|c| (c, None, true, FLEXIBLE_NODES));
    for ((s, seed), window, flex, cap) in local.chain(strict).chain(flexible) {
        if let Some(walk) = run_walk(p, s, window, flex, cap.min(limits.max_nodes))? {
            if let Some(certificate) = certify_walk(&walk) {
                return Ok(WalkOutcome { certificate, cells: walk.seq.cells, seed: *seed, labels: walk.labels, fallback: false });
            }
        }
    }
    let (first, seed) = candidates.into_iter().next().expect("closed paths are non-empty");
    match search_certificate(p, n, limits)? {
        SearchOutcome::Found { certificate, .. } => {
            Ok(WalkOutcome { certificate, cells: first.cells, seed, labels: Vec::new(), fallback: true })
        }
        SearchOutcome::Exhausted { nodes } => {
            Err(Error::Invalid(format!("no König certificate exists for this closed path (searched {nodes} nodes)")))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes;

    #[test]
    fn ring_walk_is_verified() {
        let p = shapes::ring(3, 3);
        let out = walk_order(&p, SearchLimits::default()).unwrap();
        assert!(!out.fallback);
        assert_eq!(out.seed, Seed::LConfiguration);
        assert_eq!(out.labels.len(), 8);
        assert!(verify_certificate_with_height(&p, &out.certificate, 8).passed());
        // x_1 > ... > x_8 > x_1' > ... > x_8'
        let expected: Vec<Point> = out.labels.iter().map(|l| l.0).chain(out.labels.iter().map(|l| l.1)).collect();
        assert_eq!(out.certificate.vertex_order, expected);
    }

    #[test]
    fn bar_is_not_a_closed_path() {
        assert!(matches!(walk_order(&shapes::bar(5), SearchLimits::default()), Err(Error::NotClosedPath)));
    }
}
