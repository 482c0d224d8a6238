//! Polyomino enumeration by cell growth with canonical-form dedup, plus a
//! dedicated cycle enumerator for closed paths.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::configurations::closed_path_sequence;
use crate::lattice::Cell;
use crate::par::{self, Execution};
use crate::polyomino::Polyomino;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Filters {
    pub closed_path: bool,
    pub thin: bool,
    pub non_simple: bool,
    pub simple: bool,
}

impl Filters {
    /// Parses a comma-separated list of `closed-path`, `thin`, `non-simple`,
    /// `simple`.
    pub fn parse(spec: &str) -> Result<Filters, String> {
        let mut f = Filters::default();
        for part in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            match part {
                "closed-path" => f.closed_path = true,
                "thin" => f.thin = true,
                "non-simple" => f.non_simple = true,
                "simple" => f.simple = true,
                other => return Err(format!("unknown filter {other:?}")),
            }
        }
        Ok(f)
    }

    pub fn accepts(&self, p: &Polyomino) -> bool {
        (!self.thin || p.is_thin())
            && (!self.simple || p.is_simple())
            && (!self.non_simple || !p.is_simple())
            && (!self.closed_path || closed_path_sequence(p).is_some())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Dedup {
    /// fixed polyominoes
    Translation,
    /// free polyominoes
    #[default]
    Dihedral,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationConfig {
    pub max_rank: usize,
    pub filters: Filters,
    pub dedup: Dedup,
}

impl EnumerationConfig {
    pub fn new(max_rank: usize) -> Self {
        EnumerationConfig { max_rank, filters: Filters::default(), dedup: Dedup::Dihedral }
    }

    pub fn with_filters(mut self, filters: Filters) -> Self {
        self.filters = filters;
        self
    }

    pub fn with_dedup(mut self, dedup: Dedup) -> Self {
        self.dedup = dedup;
        self
    }
}

pub fn canonical(p: &Polyomino, dedup: Dedup) -> Polyomino {
    match dedup {
        Dedup::Translation => p.normalized(),
        Dedup::Dihedral => p.dihedral_canonical(),
    }
}

fn children(p: &Polyomino, dedup: Dedup, thin_only: bool) -> Vec<Polyomino> {
    let mut frontier: BTreeSet<Cell> = BTreeSet::new();
    for c in p.cells() {
        for n in c.neighbors() {
            if !p.contains(n) {
                frontier.insert(n);
            }
        }
    }
    let mut out = Vec::with_capacity(frontier.len());
    for n in frontier {
        let q = Polyomino::build(p.cells().iter().copied().chain([n])).expect("adding a neighbour keeps connectivity");
        if thin_only && !q.is_thin() {
            continue;
        }
        out.push(canonical(&q, dedup));
    }
    out
}

/// Every polyomino of rank `1..=max_rank` up to the chosen dedup that passes
/// the filters, ordered by rank then cells.
pub fn enumerate(config: &EnumerationConfig, exec: Execution) -> Vec<Polyomino> {
    if config.filters.closed_path {
        let f = Filters { closed_path: false, ..config.filters };
        return enumerate_closed_paths(config.max_rank, config.dedup).into_iter().filter(|p| f.accepts(p)).collect();
    }
    let mut out = Vec::new();
    if config.max_rank == 0 {
        return out;
    }
    let mut level: Vec<Polyomino> = vec![Polyomino::build([Cell::new(0, 0)]).expect("single cell")];
    for rank in 1..=config.max_rank {
        out.extend(level.iter().filter(|p| config.filters.accepts(p)).cloned());
        if rank == config.max_rank {
            break;
        }
        let grown = par::map(&level, exec, |p| children(p, config.dedup, config.filters.thin));
        let next: BTreeSet<Polyomino> = grown.into_iter().flatten().collect();
        level = next.into_iter().collect();
    }
    out
}

struct CycleSearch {
    max_rank: usize,
    path: Vec<Cell>,
    on_path: HashSet<Cell>,
    found: BTreeSet<Polyomino>,
    dedup: Dedup,
}

const ORIGIN: Cell = Cell::new(0, 0);

impl CycleSearch {
    fn extend(&mut self) {
        let last = *self.path.last().unwrap();
        for next in last.neighbors() {
            if next <= ORIGIN || self.on_path.contains(&next) {
                continue;
            }
            let closing = next == Cell::new(1, 0);
            let len = self.path.len() + 1;
            if len > self.max_rank || (closing && len <= 5) {
                continue;
            }
            // no edge contact with earlier cells, except the origin when closing
            if next.neighbors().iter().any(|n| *n != last && self.on_path.contains(n) && !(closing && *n == ORIGIN)) {
                continue;
            }
            // vertex contact only within two steps, or with A_1/A_2 late in the walk
            let i = self.path.len();
            if self.path.iter().enumerate().any(|(j, c)| j > 1 && i - j > 2 && shares_vertex(*c, next)) {
                continue;
            }
            let home = (next.ll.x - 1).abs() + next.ll.y.abs();
            if len + home as usize > self.max_rank {
                continue;
            }
            self.path.push(next);
            self.on_path.insert(next);
            if closing {
                let p = Polyomino::build(self.path.iter().copied()).expect("path is connected");
                if closed_path_sequence(&p).is_some() {
                    self.found.insert(canonical(&p, self.dedup));
                }
            } else {
                self.extend();
            }
            self.on_path.remove(&next);
            self.path.pop();
        }
    }
}

fn shares_vertex(a: Cell, b: Cell) -> bool {
    (a.ll.x - b.ll.x).abs() <= 1 && (a.ll.y - b.ll.y).abs() <= 1
}

/// Closed paths of rank at most `max_rank`, found as cell cycles starting
/// at their least cell and leaving it upwards.
pub fn enumerate_closed_paths(max_rank: usize, dedup: Dedup) -> Vec<Polyomino> {
    if max_rank < 6 {
        return Vec::new();
    }
    let mut s = CycleSearch {
        max_rank,
        path: vec![ORIGIN, Cell::new(0, 1)],
        on_path: [ORIGIN, Cell::new(0, 1)].into_iter().collect(),
        found: BTreeSet::new(),
        dedup,
    };
    s.extend();
    s.found.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes;

    fn count(max_rank: usize, dedup: Dedup) -> Vec<usize> {
        let all = enumerate(&EnumerationConfig::new(max_rank).with_dedup(dedup), Execution::Sequential);
        (1..=max_rank).map(|r| all.iter().filter(|p| p.rank() == r).count()).collect()
    }

    #[test]
    fn known_counts() {
        assert_eq!(count(5, Dedup::Translation), vec![1, 2, 6, 19, 63]);
        assert_eq!(count(6, Dedup::Dihedral), vec![1, 1, 2, 5, 12, 35]);
    }

    #[test]
    fn closed_paths_up_to_eight() {
        let found = enumerate_closed_paths(8, Dedup::Dihedral);
        assert_eq!(found, vec![shapes::ring(3, 3).dihedral_canonical()]);
        let fixed = enumerate_closed_paths(8, Dedup::Translation);
        assert_eq!(fixed, vec![shapes::ring(3, 3).normalized()]);
    }

    #[test]
    fn filters_parse() {
        let f = Filters::parse("thin,non-simple").unwrap();
        assert!(f.thin && f.non_simple && !f.simple && !f.closed_path);
        assert!(Filters::parse("bogus").is_err());
    }

    #[test]
    fn no_holes_at_rank_two() {
        let f = Filters { non_simple: true, ..Default::default() };
        assert!(enumerate(&EnumerationConfig::new(2).with_filters(f), Execution::Sequential).is_empty());
    }
}
