//! Exact feasibility of homogeneous strict systems `A w > 0`.
//!
//! Fourier–Motzkin elimination over `i128` rows. Each derived row carries the
//! non-negative multipliers expressing it in terms of the input rows, which
//! serves two purposes: Chernikov's redundancy rule (a row built from more
//! than `k + 1` inputs after `k` eliminations is implied by the others) and a
//! Gordan certificate `y >= 0, y != 0, y^T A = 0` when a row vanishes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Feasibility {
    /// A strictly feasible point with integer entries.
    Feasible(Vec<BigInt>),
    /// Non-negative multipliers, one per input row, combining them to zero.
    Infeasible(Vec<i128>),
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Row {
    coeffs: Vec<i128>,
    mult: Vec<i128>,
}

fn gcd_all(values: impl Iterator<Item = i128>) -> i128 {
    values.fold(0i128, |g, v| g.gcd(&v))
}

impl Row {
    fn normalize(&mut self) {
        let g = gcd_all(self.coeffs.iter().chain(self.mult.iter()).copied());
        if g > 1 {
            self.coeffs.iter_mut().for_each(|c| *c /= g);
            self.mult.iter_mut().for_each(|c| *c /= g);
        }
    }

    fn support(&self) -> usize {
        self.mult.iter().filter(|&&m| m != 0).count()
    }

    /// `a * self + b * other` with `a, b > 0`.
    fn combine(&self, a: i128, other: &Row, b: i128) -> Result<Row> {
        let lin = |x: &[i128], y: &[i128]| -> Result<Vec<i128>> {
            x.iter()
                .zip(y)
                .map(|(&p, &q)| {
                    p.checked_mul(a)
                        .and_then(|p| q.checked_mul(b).and_then(|q| p.checked_add(q)))
                        .ok_or(Error::Overflow("Fourier-Motzkin elimination"))
                })
                .collect()
        };
        let mut r = Row { coeffs: lin(&self.coeffs, &other.coeffs)?, mult: lin(&self.mult, &other.mult)? };
        r.normalize();
        Ok(r)
    }
}

/// Decides whether some `w` satisfies `row . w > 0` for every row.
///
/// All rows must have the same length. Both outcomes are checkable with
/// [`check_feasible`] and [`check_infeasible`].
pub fn strict_feasibility(rows: &[Vec<i64>]) -> Result<Feasibility> {
    let m = rows.len();
    let Some(n) = rows.first().map(Vec::len) else {
        return Ok(Feasibility::Feasible(Vec::new()));
    };
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::Invalid("rows of different lengths".into()));
    }
    let mut current: Vec<Row> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut mult = vec![0; m];
            mult[i] = 1;
            let mut row = Row { coeffs: r.iter().map(|&c| c as i128).collect(), mult };
            row.normalize();
            row
        })
        .collect();
    let mut stages: Vec<Vec<Row>> = Vec::with_capacity(n);
    for k in 0..n {
        if let Some(zero) = current.iter().find(|r| r.coeffs.iter().all(|&c| c == 0)) {
            return Ok(Feasibility::Infeasible(zero.mult.clone()));
        }
        let (mut pos, mut neg, mut next) = (Vec::new(), Vec::new(), Vec::new());
        for r in &current {
            match r.coeffs[k].signum() {
                1 => pos.push(r),
                -1 => neg.push(r),
                _ => next.push(r.clone()),
            }
        }
        for p in &pos {
            for q in &neg {
                let r = p.combine(-q.coeffs[k], q, p.coeffs[k])?;
                if r.support() <= k + 2 {
                    next.push(r);
                }
            }
        }
        next.sort_by(|a, b| a.coeffs.cmp(&b.coeffs).then_with(|| a.mult.cmp(&b.mult)));
        next.dedup_by(|a, b| a.coeffs == b.coeffs);
        stages.push(std::mem::replace(&mut current, next));
    }
    if let Some(zero) = current.first() {
        return Ok(Feasibility::Infeasible(zero.mult.clone()));
    }

    let mut w = vec![BigRational::zero(); n];
    for k in (0..n).rev() {
        let mut lower: Option<BigRational> = None;
        let mut upper: Option<BigRational> = None;
        for r in &stages[k] {
            let a = r.coeffs[k];
            if a == 0 {
                continue;
            }
            let rest: BigRational =
                (k + 1..n).map(|j| BigRational::from_integer(r.coeffs[j].into()) * &w[j]).sum();
            let bound = -rest / BigRational::from_integer(a.into());
            if a > 0 {
                if lower.as_ref().is_none_or(|l| bound > *l) {
                    lower = Some(bound);
                }
            } else if upper.as_ref().is_none_or(|u| bound < *u) {
                upper = Some(bound);
            }
        }
        w[k] = match (lower, upper) {
            (Some(l), Some(u)) => (l + u) / BigRational::from_integer(2.into()),
            (Some(l), None) => l.floor() + BigRational::one(),
            (None, Some(u)) => u.ceil() - BigRational::one(),
            (None, None) => BigRational::zero(),
        };
    }
    Ok(Feasibility::Feasible(integral(&w)))
}

/// Scales a rational vector by a positive factor to coprime integers.
fn integral(w: &[BigRational]) -> Vec<BigInt> {
    let denom = w.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = w.iter().map(|x| x.numer() * (&denom / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        ints
    } else {
        ints.into_iter().map(|x| x / &g).collect()
    }
}

pub fn check_feasible(rows: &[Vec<i64>], w: &[BigInt]) -> bool {
    rows.iter().all(|r| {
        r.len() == w.len() && r.iter().zip(w).map(|(&a, x)| BigInt::from(a) * x).sum::<BigInt>().is_positive()
    })
}

pub fn check_infeasible(rows: &[Vec<i64>], y: &[i128]) -> bool {
    if y.len() != rows.len() || y.iter().any(|&v| v < 0) || y.iter().all(|&v| v == 0) {
        return false;
    }
    let n = rows.first().map_or(0, Vec::len);
    (0..n).all(|j| rows.iter().zip(y).map(|(r, &v)| BigInt::from(r[j]) * BigInt::from(v)).sum::<BigInt>().is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solve_and_check(rows: &[Vec<i64>]) -> bool {
        match strict_feasibility(rows).unwrap() {
            Feasibility::Feasible(w) => {
                assert!(check_feasible(rows, &w), "{rows:?} {w:?}");
                true
            }
            Feasibility::Infeasible(y) => {
                assert!(check_infeasible(rows, &y), "{rows:?} {y:?}");
                false
            }
        }
    }

    #[test]
    fn single_inequality() {
        assert!(solve_and_check(&[vec![1, 1, -1, -1]]));
    }

    #[test]
    fn contradictory_pair() {
        assert!(!solve_and_check(&[vec![1, 1, -1, -1], vec![-1, -1, 1, 1]]));
    }

    #[test]
    fn empty_system() {
        assert_eq!(strict_feasibility(&[]).unwrap(), Feasibility::Feasible(vec![]));
    }

    #[test]
    fn cyclic_chain_is_infeasible() {
        // w0 > w1 > w2 > w0
        assert!(!solve_and_check(&[vec![1, -1, 0], vec![0, 1, -1], vec![-1, 0, 1]]));
        assert!(solve_and_check(&[vec![1, -1, 0], vec![0, 1, -1], vec![1, 0, -1]]));
    }

    #[test]
    fn zero_row_is_infeasible() {
        assert!(!solve_and_check(&[vec![0, 0]]));
    }

    #[test]
    fn one_sided_bounds() {
        assert!(solve_and_check(&[vec![2, 0], vec![0, -3], vec![1, 1]]));
    }

    #[test]
    fn random_systems_self_certify() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(1..6);
            let m = rng.gen_range(1..8);
            let rows: Vec<Vec<i64>> = (0..m).map(|_| (0..n).map(|_| rng.gen_range(-2..=2)).collect()).collect();
            solve_and_check(&rows);
        }
    }
}
