//! König-type certificates: `h` inner 2-minors with an initial-term choice
//! realizable by a monomial order and pairwise coprime initial terms.

pub mod feasibility;
pub mod search;
pub mod walk;

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

pub use feasibility::{check_feasible, check_infeasible, strict_feasibility, Feasibility};
pub use search::{brute_force_verdict, search_certificate, SearchLimits, SearchOutcome};
pub use walk::{walk_order, WalkOutcome};

use crate::algebra::{Budget, OrderSpec};
use crate::configurations::closed_path_sequence;
use crate::error::{Error, Result};
use crate::lattice::{corners, Diagonal, Interval, Point};
use crate::polyomino::Polyomino;

/// One chosen minor: the inner interval and which corner pair is meant to
/// be the initial term.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SelectionEntry {
    pub interval: Interval,
    pub initial: Diagonal,
}

impl SelectionEntry {
    /// (chosen pair, other pair)
    pub fn pairs(&self) -> Result<([Point; 2], [Point; 2])> {
        let c = corners(&self.interval)?;
        let a = c.get(self.initial);
        let b = c.get(self.initial.other());
        Ok(([a.first(), a.second()], [b.first(), b.second()]))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct InitialSelection {
    pub entries: Vec<SelectionEntry>,
}

impl InitialSelection {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Difference vectors `e_chosen - e_other` over the given vertex list.
    pub fn rows(&self, vertices: &[Point]) -> Result<Vec<Vec<i64>>> {
        let index: BTreeMap<Point, usize> = vertices.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let var = |p: Point| index.get(&p).copied().ok_or(Error::UnknownVertex(p));
        self.entries
            .iter()
            .map(|e| {
                let (chosen, other) = e.pairs()?;
                let mut row = vec![0i64; vertices.len()];
                for p in chosen {
                    row[var(p)?] += 1;
                }
                for p in other {
                    row[var(p)?] -= 1;
                }
                Ok(row)
            })
            .collect()
    }
}

/// Vertices of every corner of the selection, sorted.
fn selection_vertices(sel: &InitialSelection) -> Result<Vec<Point>> {
    let mut set = BTreeSet::new();
    for e in &sel.entries {
        let (a, b) = e.pairs()?;
        set.extend(a);
        set.extend(b);
    }
    Ok(set.into_iter().collect())
}

/// Weight feasibility of a selection: integer weights on the corners of the
/// selection making every chosen pair strictly heavier, or a certificate
/// that none exist.
pub fn weight_feasible(sel: &InitialSelection) -> Result<(Vec<Point>, Feasibility)> {
    let vertices = selection_vertices(sel)?;
    let rows = sel.rows(&vertices)?;
    Ok((vertices, strict_feasibility(&rows)?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoenigCertificate {
    pub selection: InitialSelection,
    pub weights: Vec<(Point, BigRational)>,
    /// A total order of the vertices, largest first, compatible with the
    /// weights.
    pub vertex_order: Vec<Point>,
}

impl KoenigCertificate {
    /// Builds the certificate from integer weights on some vertices (others
    /// weigh zero); the vertex order sorts by weight, then by the point
    /// order, largest first.
    pub fn from_weights(p: &Polyomino, selection: InitialSelection, weights: &[(Point, BigInt)]) -> KoenigCertificate {
        let map: BTreeMap<Point, BigInt> = weights.iter().cloned().collect();
        let mut full: Vec<(Point, BigRational)> = p
            .vertices()
            .iter()
            .map(|&v| (v, BigRational::from_integer(map.get(&v).cloned().unwrap_or_default())))
            .collect();
        full.sort_by_key(|a| a.0);
        let mut vertex_order: Vec<Point> = p.vertices().to_vec();
        let weight_of = |v: &Point| map.get(v).cloned().unwrap_or_default();
        vertex_order.sort_by(|a, b| weight_of(b).cmp(&weight_of(a)).then(b.cmp(a)));
        KoenigCertificate { selection, weights: full, vertex_order }
    }

    /// The order witnessed by the certificate: its weights refined by the
    /// listed vertex order.
    pub fn order_spec(&self) -> OrderSpec {
        OrderSpec::Weights {
            weights: self.weights.clone(),
            tiebreak: Box::new(OrderSpec::Vertices { order: self.vertex_order.clone() }),
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<KoenigCertificate> {
        Ok(serde_json::from_str(text)?)
    }
}

impl TryFrom<&KoenigCertificate> for CertificateJson {
    type Error = Error;

    fn try_from(c: &KoenigCertificate) -> Result<Self> {
        let weights = c
            .weights
            .iter()
            .map(|(p, w)| {
                let num = w.numer().to_i64().ok_or(Error::Overflow("weight numerator"))?;
                let den = w.denom().to_i64().ok_or(Error::Overflow("weight denominator"))?;
                Ok((format!("x({},{})", p.x, p.y), num, den))
            })
            .collect::<Result<_>>()?;
        Ok(CertificateJson { entries: c.selection.entries.clone(), weights, vertex_order: c.vertex_order.clone() })
    }
}

impl TryFrom<CertificateJson> for KoenigCertificate {
    type Error = Error;

    fn try_from(json: CertificateJson) -> Result<Self> {
        let weights = json
            .weights
            .into_iter()
            .map(|(name, num, den)| {
                let bad = || Error::Invalid(format!("bad weight entry {name:?}"));
                let inner = name.trim().strip_prefix("x(").and_then(|s| s.strip_suffix(')')).ok_or_else(bad)?;
                let (x, y) = inner.split_once(',').ok_or_else(bad)?;
                let p = Point::new(x.trim().parse().map_err(|_| bad())?, y.trim().parse().map_err(|_| bad())?);
                if den == 0 {
                    return Err(bad());
                }
                Ok((p, BigRational::new(num.into(), den.into())))
            })
            .collect::<Result<_>>()?;
        Ok(KoenigCertificate {
            selection: InitialSelection { entries: json.entries },
            weights,
            vertex_order: json.vertex_order,
        })
    }
}

impl Serialize for KoenigCertificate {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CertificateJson::try_from(self).map_err(serde::ser::Error::custom)?.serialize(s)
    }
}

impl<'de> Deserialize<'de> for KoenigCertificate {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        KoenigCertificate::try_from(CertificateJson::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct CertificateJson {
    entries: Vec<SelectionEntry>,
    weights: Vec<(String, i64, i64)>,
    vertex_order: Vec<Point>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Check {
    /// every entry is an inner 2-minor, no repeats
    InnerMinors,
    /// entry count equals the height
    Count,
    /// chosen monomials pairwise coprime
    Coprime,
    /// weight inequalities strict, vertex order compatible
    Weights,
    /// entries linearly independent
    Independent,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Check::InnerMinors => "(a) inner minors",
            Check::Count => "(b) count",
            Check::Coprime => "(c) coprime initial terms",
            Check::Weights => "(d) weights",
            Check::Independent => "(e) linear independence",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check: Check,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub height: usize,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed(&self) -> Vec<Check> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.check).collect()
    }
}

/// Height the verifier expects: the rank for closed paths, the computed
/// height otherwise.
pub fn expected_height(p: &Polyomino, budget: Budget) -> Result<usize> {
    if closed_path_sequence(p).is_some() {
        Ok(p.rank())
    } else {
        crate::dimension::height(p, &OrderSpec::Lex1, budget)
    }
}

pub fn verify_certificate(p: &Polyomino, cert: &KoenigCertificate, budget: Budget) -> Result<VerificationReport> {
    Ok(verify_certificate_with_height(p, cert, expected_height(p, budget)?))
}

pub fn verify_certificate_with_height(p: &Polyomino, cert: &KoenigCertificate, height: usize) -> VerificationReport {
    let entries = &cert.selection.entries;
    let mut checks = Vec::new();
    let result = |check, failure: Option<String>| CheckResult {
        check,
        passed: failure.is_none(),
        detail: failure.unwrap_or_else(|| "ok".into()),
    };

    let mut seen = HashSet::new();
    let bad_minor = entries.iter().enumerate().find_map(|(i, e)| {
        if !p.is_inner_interval(&e.interval) {
            Some(format!("entry {i}: {} is not an inner interval", e.interval))
        } else if !seen.insert(e.interval) {
            Some(format!("entry {i}: {} repeats an earlier minor", e.interval))
        } else {
            None
        }
    });
    let minors_ok = bad_minor.is_none();
    checks.push(result(Check::InnerMinors, bad_minor));

    let count = (entries.len() != height).then(|| format!("{} entries, height {height}", entries.len()));
    checks.push(result(Check::Count, count));

    let pairs: Vec<([Point; 2], [Point; 2])> = entries.iter().filter_map(|e| e.pairs().ok()).collect();
    let mut clash = None;
    'outer: for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            if let Some(v) = pairs[i].0.iter().find(|v| pairs[j].0.contains(v)) {
                clash = Some(format!("entries {i} and {j} share {v}"));
                break 'outer;
            }
        }
    }
    checks.push(result(Check::Coprime, clash));

    checks.push(result(Check::Weights, weight_failure(p, cert, &pairs)));

    let indep = if !minors_ok {
        Some("skipped: entries are not distinct inner minors".into())
    } else {
        let r = independence_rank(&pairs);
        (r != pairs.len()).then(|| format!("rank {r} < {} entries", pairs.len()))
    };
    checks.push(result(Check::Independent, indep));

    VerificationReport { height, checks }
}

fn weight_failure(p: &Polyomino, cert: &KoenigCertificate, pairs: &[([Point; 2], [Point; 2])]) -> Option<String> {
    let mut w: BTreeMap<Point, BigRational> = BTreeMap::new();
    for (v, x) in &cert.weights {
        if p.vertices().binary_search(v).is_err() {
            return Some(format!("weight on non-vertex {v}"));
        }
        if w.insert(*v, x.clone()).is_some() {
            return Some(format!("vertex {v} weighted twice"));
        }
    }
    let weight = |v: &Point| w.get(v).cloned().unwrap_or_else(BigRational::zero);
    for (i, (chosen, other)) in pairs.iter().enumerate() {
        let a: BigRational = chosen.iter().map(weight).sum();
        let b: BigRational = other.iter().map(weight).sum();
        if a <= b {
            return Some(format!("entry {i}: chosen weight {a} not above {b}"));
        }
    }
    let order = &cert.vertex_order;
    let distinct: BTreeSet<Point> = order.iter().copied().collect();
    if order.len() != p.vertices().len() || distinct.len() != order.len() || !order.iter().all(|v| p.vertices().binary_search(v).is_ok()) {
        return Some("vertex order is not a permutation of the vertices".into());
    }
    if let Some(k) = order.windows(2).position(|s| weight(&s[0]) < weight(&s[1])) {
        return Some(format!("vertex order increases in weight at position {k}"));
    }
    None
}

/// Exact rank of the minors as vectors over the degree-2 monomials.
fn independence_rank(pairs: &[([Point; 2], [Point; 2])]) -> usize {
    let mut columns: BTreeMap<[Point; 2], usize> = BTreeMap::new();
    for (a, b) in pairs {
        for m in [*a, *b] {
            let next = columns.len();
            columns.entry(m).or_insert(next);
        }
    }
    let mut rows: Vec<Vec<BigRational>> = pairs
        .iter()
        .map(|(a, b)| {
            let mut r = vec![BigRational::zero(); columns.len()];
            r[columns[a]] += BigRational::from_integer(1.into());
            r[columns[b]] -= BigRational::from_integer(1.into());
            r
        })
        .collect();
    let mut rank = 0;
    for col in 0..columns.len() {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else { continue };
        rows.swap(rank, pivot);
        let pr = rows[rank].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let f = &rows[r][col] / &pr[col];
                for c in col..columns.len() {
                    let d = &f * &pr[c];
                    rows[r][c] -= d;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes;

    fn entry(lo: (i32, i32), hi: (i32, i32), initial: Diagonal) -> SelectionEntry {
        SelectionEntry { interval: Interval::new(lo.into(), hi.into()).unwrap(), initial }
    }

    #[test]
    fn one_entry_is_feasible() {
        let sel = InitialSelection { entries: vec![entry((0, 0), (1, 1), Diagonal::Main)] };
        let (_, f) = weight_feasible(&sel).unwrap();
        assert!(f.is_feasible());
    }

    #[test]
    fn opposite_choices_are_infeasible() {
        let sel = InitialSelection {
            entries: vec![entry((0, 0), (1, 1), Diagonal::Main), entry((0, 0), (1, 1), Diagonal::Anti)],
        };
        let (vs, f) = weight_feasible(&sel).unwrap();
        match f {
            Feasibility::Infeasible(y) => assert!(check_infeasible(&sel.rows(&vs).unwrap(), &y)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn empty_selection() {
        let (_, f) = weight_feasible(&InitialSelection::default()).unwrap();
        assert_eq!(f, Feasibility::Feasible(vec![]));
    }

    #[test]
    fn json_round_trip() {
        let p = shapes::ring(3, 3);
        let cert = search_certificate(&p, 8, SearchLimits::default()).unwrap().certificate().unwrap().clone();
        let back = KoenigCertificate::from_json(&cert.to_json().unwrap()).unwrap();
        assert_eq!(back, cert);
        assert!(cert.to_json().unwrap().contains("\"initial\": \"diag\"") || cert.to_json().unwrap().contains("\"antidiag\""));
    }

    #[test]
    fn verifier_rejects_shared_vertex_and_wrong_count() {
        let p = shapes::ring(3, 3);
        let cert = search_certificate(&p, 8, SearchLimits::default()).unwrap().certificate().unwrap().clone();
        assert!(verify_certificate_with_height(&p, &cert, 8).passed());

        let mut short = cert.clone();
        short.selection.entries.pop();
        assert_eq!(verify_certificate_with_height(&p, &short, 8).failed(), vec![Check::Count]);

        // replace one entry by a minor sharing a chosen vertex with another
        let mut clash = cert.clone();
        let first = clash.selection.entries[0];
        let (chosen, _) = first.pairs().unwrap();
        let other = p
            .inner_intervals()
            .into_iter()
            .flat_map(|iv| [Diagonal::Main, Diagonal::Anti].map(|d| SelectionEntry { interval: iv, initial: d }))
            .find(|e| e.interval != first.interval && e.pairs().unwrap().0.contains(&chosen[0]))
            .unwrap();
        clash.selection.entries[1] = other;
        assert!(verify_certificate_with_height(&p, &clash, 8).failed().contains(&Check::Coprime));
    }

    #[test]
    fn verifier_rejects_bad_weights_and_non_minors() {
        let p = shapes::ring(3, 3);
        let cert = search_certificate(&p, 8, SearchLimits::default()).unwrap().certificate().unwrap().clone();
        let mut flat = cert.clone();
        flat.weights.iter_mut().for_each(|(_, w)| *w = BigRational::zero());
        assert!(verify_certificate_with_height(&p, &flat, 8).failed().contains(&Check::Weights));

        let mut outside = cert;
        outside.selection.entries[0].interval = Interval::new(Point::new(0, 0), Point::new(3, 3)).unwrap();
        assert!(verify_certificate_with_height(&p, &outside, 8).failed().contains(&Check::InnerMinors));
    }

    #[test]
    fn dependent_entries_have_lower_rank() {
        let a = [Point::new(0, 0), Point::new(1, 1)];
        let b = [Point::new(0, 1), Point::new(1, 0)];
        assert_eq!(independence_rank(&[(a, b), (b, a)]), 1);
        assert_eq!(independence_rank(&[(a, b)]), 1);
    }
}
