//! Complete backtracking search for König certificates.
//!
//! Chosen initial terms are squarefree quadrics with pairwise disjoint
//! supports, so a certificate with `h` entries pairs off `2h` vertices. The
//! search walks the vertices in the point order: the least undecided vertex
//! is either matched, through the corner pair of an unused inner interval,
//! to a later undecided vertex, or left out (at most `|V| - 2h` times, never
//! for closed paths). Every partial selection must stay weight feasible.

use num_bigint::BigInt;

use super::feasibility::{strict_feasibility, Feasibility};
use super::{weight_feasible, InitialSelection, KoenigCertificate, SelectionEntry};
use crate::error::{Error, Result};
use crate::lattice::{corners, Diagonal, Interval, Point};
use crate::polyomino::Polyomino;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_nodes: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { max_nodes: 5_000_000 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found { certificate: KoenigCertificate, nodes: u64 },
    /// No selection of `h` inner minors works.
    Exhausted { nodes: u64 },
}

impl SearchOutcome {
    pub fn certificate(&self) -> Option<&KoenigCertificate> {
        match self {
            SearchOutcome::Found { certificate, .. } => Some(certificate),
            SearchOutcome::Exhausted { .. } => None,
        }
    }

    pub fn nodes(&self) -> u64 {
        match self {
            SearchOutcome::Found { nodes, .. } | SearchOutcome::Exhausted { nodes } => *nodes,
        }
    }
}

struct Match {
    partner: usize,
    interval: usize,
    diagonal: Diagonal,
}

struct Search {
    intervals: Vec<Interval>,
    options: Vec<Vec<Match>>,
    decided: Vec<bool>,
    used: Vec<bool>,
    entries: Vec<SelectionEntry>,
    h: usize,
    skips_left: usize,
    nodes: u64,
    limits: SearchLimits,
}

impl Search {
    fn feasible(&self) -> Result<bool> {
        let sel = InitialSelection { entries: self.entries.clone() };
        Ok(weight_feasible(&sel)?.1.is_feasible())
    }

    fn dfs(&mut self) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.limits.max_nodes {
            return Err(Error::SearchBudget { what: "König certificate search", nodes: self.nodes });
        }
        if self.entries.len() == self.h {
            return Ok(true);
        }
        let Some(v) = self.decided.iter().position(|&d| !d) else {
            return Ok(false);
        };
        self.decided[v] = true;
        for k in 0..self.options[v].len() {
            let Match { partner, interval, diagonal } = self.options[v][k];
            if self.decided[partner] || self.used[interval] {
                continue;
            }
            self.decided[partner] = true;
            self.used[interval] = true;
            self.entries.push(SelectionEntry { interval: self.intervals[interval], initial: diagonal });
            if self.feasible()? && self.dfs()? {
                return Ok(true);
            }
            self.entries.pop();
            self.used[interval] = false;
            self.decided[partner] = false;
        }
        if self.skips_left > 0 {
            self.skips_left -= 1;
            if self.dfs()? {
                return Ok(true);
            }
            self.skips_left += 1;
        }
        self.decided[v] = false;
        Ok(false)
    }
}

/// Searches for `h` inner minors with a weight-realizable, pairwise coprime
/// choice of initial terms. Explores matches in the order (vertex, partner,
/// interval) and returns the first certificate found.
pub fn search_certificate(p: &Polyomino, h: usize, limits: SearchLimits) -> Result<SearchOutcome> {
    let vertices = p.vertices();
    let n = vertices.len();
    if 2 * h > n {
        return Ok(SearchOutcome::Exhausted { nodes: 0 });
    }
    let intervals = p.inner_intervals();
    let var = |q: Point| vertices.binary_search(&q).expect("corners of inner intervals are vertices");
    let mut options: Vec<Vec<Match>> = (0..n).map(|_| Vec::new()).collect();
    for (k, iv) in intervals.iter().enumerate() {
        let c = corners(iv)?;
        for d in [Diagonal::Main, Diagonal::Anti] {
            let pair = c.get(d);
            let (a, b) = (var(pair.first()), var(pair.second()));
            options[a.min(b)].push(Match { partner: a.max(b), interval: k, diagonal: d });
        }
    }
    for o in &mut options {
        o.sort_by_key(|o| (o.partner, o.interval));
    }
    let mut s = Search {
        used: vec![false; intervals.len()],
        intervals,
        options,
        decided: vec![false; n],
        entries: Vec::new(),
        h,
        skips_left: n - 2 * h,
        nodes: 0,
        limits,
    };
    if !s.dfs()? {
        return Ok(SearchOutcome::Exhausted { nodes: s.nodes });
    }
    let selection = InitialSelection { entries: s.entries };
    let certificate = certificate_for(p, selection)?;
    Ok(SearchOutcome::Found { certificate, nodes: s.nodes })
}

/// Turns a feasible selection into a certificate with integer weights.
pub(crate) fn certificate_for(p: &Polyomino, selection: InitialSelection) -> Result<KoenigCertificate> {
    let (vs, f) = weight_feasible(&selection)?;
    let Feasibility::Feasible(w) = f else {
        return Err(Error::Invalid("selection is not weight feasible".into()));
    };
    let weights: Vec<(Point, BigInt)> = vs.into_iter().zip(w).collect();
    Ok(KoenigCertificate::from_weights(p, selection, &weights))
}

/// Independent oracle: tries every `h`-subset of inner minors with every
/// initial choice. Returns whether some choice is pairwise coprime and
/// weight feasible. Exponential; meant for tiny instances.
pub fn brute_force_verdict(p: &Polyomino, h: usize) -> Result<bool> {
    let vertices = p.vertices();
    if vertices.len() > 128 {
        return Err(Error::TooManyVariables(vertices.len()));
    }
    let bit = |q: Point| 1u128 << vertices.binary_search(&q).expect("vertex");
    let intervals = p.inner_intervals();
    let masks: Vec<[u128; 2]> = intervals
        .iter()
        .map(|iv| {
            let c = corners(iv).expect("proper");
            [Diagonal::Main, Diagonal::Anti].map(|d| bit(c.get(d).first()) | bit(c.get(d).second()))
        })
        .collect();
    let m = intervals.len();
    if h > m {
        return Ok(false);
    }
    let mut idx: Vec<usize> = (0..h).collect();
    loop {
        for choice in 0u64..(1u64 << h) {
            let mut union = 0u128;
            let mut disjoint = true;
            for (t, &i) in idx.iter().enumerate() {
                let mask = masks[i][(choice >> t & 1) as usize];
                if union & mask != 0 {
                    disjoint = false;
                    break;
                }
                union |= mask;
            }
            if !disjoint {
                continue;
            }
            let entries = idx
                .iter()
                .enumerate()
                .map(|(t, &i)| SelectionEntry {
                    interval: intervals[i],
                    initial: if choice >> t & 1 == 0 { Diagonal::Main } else { Diagonal::Anti },
                })
                .collect();
            let sel = InitialSelection { entries };
            let vs: Vec<Point> = vertices.to_vec();
            if strict_feasibility(&sel.rows(&vs)?)?.is_feasible() {
                return Ok(true);
            }
        }
        let mut k = h;
        while k > 0 && idx[k - 1] == k - 1 + m - h {
            k -= 1;
        }
        if k == 0 {
            return Ok(false);
        }
        let k = k - 1;
        idx[k] += 1;
        for t in k + 1..h {
            idx[t] = idx[t - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::koenig::verify_certificate_with_height;
    use crate::shapes;

    #[test]
    fn ring_has_certificate_partitioning_vertices() {
        let p = shapes::ring(3, 3);
        let out = search_certificate(&p, 8, SearchLimits::default()).unwrap();
        let cert = out.certificate().expect("found");
        assert_eq!(cert.selection.len(), 8);
        assert!(verify_certificate_with_height(&p, cert, 8).passed());
        let mut covered: Vec<Point> = cert.selection.entries.iter().flat_map(|e| e.pairs().unwrap().0).collect();
        covered.sort();
        assert_eq!(covered, p.vertices());
    }

    #[test]
    fn square_tetromino_verdict_matches_oracle() {
        let q = shapes::square(2, 2);
        let out = search_certificate(&q, 4, SearchLimits::default()).unwrap();
        assert_eq!(out.certificate().is_some(), brute_force_verdict(&q, 4).unwrap());
        if let Some(cert) = out.certificate() {
            assert!(verify_certificate_with_height(&q, cert, 4).passed());
        }
    }

    #[test]
    fn too_large_height_is_exhausted() {
        let q = shapes::square(2, 2);
        assert!(matches!(search_certificate(&q, 5, SearchLimits::default()).unwrap(), SearchOutcome::Exhausted { .. }));
        assert!(!brute_force_verdict(&q, 5).unwrap());
    }

    #[test]
    fn small_simple_shapes_agree_with_oracle() {
        for p in [shapes::single(), shapes::domino(), shapes::bar(3), shapes::staircase(2)] {
            let h = p.rank();
            let found = search_certificate(&p, h, SearchLimits::default()).unwrap().certificate().is_some();
            assert_eq!(found, brute_force_verdict(&p, h).unwrap(), "{p}");
        }
    }

    #[test]
    fn node_cap_is_a_budget_error() {
        let r = search_certificate(&shapes::ring(3, 3), 8, SearchLimits { max_nodes: 2 });
        assert!(matches!(r, Err(Error::SearchBudget { .. })));
    }
}
