use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::monomial::{Binomial, Monomial, Ring};
use crate::error::{Error, Result};
use crate::lattice::Point;

/// A monomial order on a ring with `n` variables: lexicographic with respect
/// to a ranking of the variables, optionally refined from a weight vector
/// (weights are compared first, the ranking breaks ties).
///
/// Arbitrary (even negative) weights are accepted. That is only a well-order
/// on homogeneous input, which is all this crate feeds it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    ranking: Vec<usize>,
    weights: Option<Vec<i128>>,
    rational: Option<Vec<BigRational>>,
}

impl MonomialOrder {
    /// Lex order with `ranking[0]` the largest variable.
    pub fn lex(ranking: Vec<usize>) -> Result<MonomialOrder> {
        let n = ranking.len();
        let mut seen = vec![false; n];
        for &v in &ranking {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::Invalid(format!("ranking is not a permutation of 0..{n}")));
            }
        }
        Ok(MonomialOrder { ranking, weights: None, rational: None })
    }

    /// Lex order induced by the point order: the larger point is the larger
    /// variable.
    pub fn lex1(n: usize) -> MonomialOrder {
        MonomialOrder { ranking: (0..n).rev().collect(), weights: None, rational: None }
    }

    /// Weight order with lex tiebreak. Weights are scaled to integers.
    pub fn weighted(weights: Vec<BigRational>, tiebreak: MonomialOrder) -> Result<MonomialOrder> {
        if weights.len() != tiebreak.ranking.len() {
            return Err(Error::Invalid("weight vector length differs from the number of variables".into()));
        }
        let denom = weights.iter().fold(BigInt::from(1), |acc, w| num_integer::lcm(acc, w.denom().clone()));
        let scaled = weights
            .iter()
            .map(|w| (w.numer() * (&denom / w.denom())).to_i128().ok_or(Error::Overflow("weight scaling")))
            .collect::<Result<Vec<i128>>>()?;
        Ok(MonomialOrder { ranking: tiebreak.ranking, weights: Some(scaled), rational: Some(weights) })
    }

    pub fn nvars(&self) -> usize {
        self.ranking.len()
    }

    /// Variables from largest to smallest (the tiebreak order for weights).
    pub fn ranking(&self) -> &[usize] {
        &self.ranking
    }

    pub fn weights(&self) -> Option<&[BigRational]> {
        self.rational.as_deref()
    }

    fn weight(&self, m: &Monomial) -> i128 {
        match &self.weights {
            Some(w) => m.exps.iter().zip(w).map(|(&e, &w)| e as i128 * w).sum(),
            None => 0,
        }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        if self.weights.is_some() {
            match self.weight(a).cmp(&self.weight(b)) {
                Ordering::Equal => {}
                other => return other,
            }
        }
        for &v in &self.ranking {
            match a.exps[v].cmp(&b.exps[v]) {
                Ordering::Equal => {}
                other => return other,
            }
        }
        Ordering::Equal
    }

    /// A sort key whose natural order agrees with [`MonomialOrder::compare`].
    pub fn key(&self, m: &Monomial) -> Vec<i128> {
        let mut k = Vec::with_capacity(self.ranking.len() + 1);
        if self.weights.is_some() {
            k.push(self.weight(m));
        }
        k.extend(self.ranking.iter().map(|&v| m.exps[v] as i128));
        k
    }

    pub fn initial_term<'a>(&self, b: &'a Binomial) -> &'a Monomial {
        if self.compare(&b.plus, &b.minus) == Ordering::Less {
            &b.minus
        } else {
            &b.plus
        }
    }

    /// `b` or `-b`, whichever has its initial term in front.
    pub fn orient(&self, b: Binomial) -> Binomial {
        if self.compare(&b.plus, &b.minus) == Ordering::Less {
            b.negated()
        } else {
            b
        }
    }
}

/// Serializable description of a monomial order, resolved against a
/// [`Ring`] by [`OrderSpec::build`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
#[derive(Default)]
pub enum OrderSpec {
    /// Lex with the larger point as the larger variable.
    #[default]
    Lex1,
    /// Lex with the smaller point as the larger variable.
    Lex1Rev,
    /// Members of `y` outrank non-members; the point order decides within
    /// each class.
    YSet { y: Vec<Point> },
    /// Explicit ranking, largest first; must list every vertex.
    Vertices { order: Vec<Point> },
    /// Exact weights (missing vertices weigh zero) refined by `tiebreak`.
    Weights { weights: Vec<(Point, BigRational)>, tiebreak: Box<OrderSpec> },
}


impl OrderSpec {
    pub fn build(&self, ring: &Ring) -> Result<MonomialOrder> {
        let n = ring.len();
        match self {
            OrderSpec::Lex1 => Ok(MonomialOrder::lex1(n)),
            OrderSpec::Lex1Rev => MonomialOrder::lex((0..n).collect()),
            OrderSpec::YSet { y } => {
                let mut member = vec![false; n];
                for &p in y {
                    member[ring.var(p)?] = true;
                }
                let ranking = (0..n).rev().filter(|&v| member[v]).chain((0..n).rev().filter(|&v| !member[v])).collect();
                MonomialOrder::lex(ranking)
            }
            OrderSpec::Vertices { order } => {
                let ranking = order.iter().map(|&p| ring.var(p)).collect::<Result<Vec<_>>>()?;
                if ranking.len() != n {
                    return Err(Error::Invalid(format!("vertex order lists {} of {n} vertices", ranking.len())));
                }
                MonomialOrder::lex(ranking)
            }
            OrderSpec::Weights { weights, tiebreak } => {
                let mut w = vec![BigRational::zero(); n];
                for (p, value) in weights {
                    w[ring.var(*p)?] = value.clone();
                }
                MonomialOrder::weighted(w, tiebreak.build(ring)?)
            }
        }
    }

    /// Short identifier used in CLI output and harness records.
    pub fn id(&self) -> String {
        match self {
            OrderSpec::Lex1 => "lex1".into(),
            OrderSpec::Lex1Rev => "lex1rev".into(),
            OrderSpec::YSet { y } => {
                let pts: Vec<String> = y.iter().map(|p| format!("{},{}", p.x, p.y)).collect();
                format!("yset:{}", pts.join(";"))
            }
            OrderSpec::Vertices { .. } => "vertices".into(),
            OrderSpec::Weights { tiebreak, .. } => format!("weights+{}", tiebreak.id()),
        }
    }

    /// Parses `x,y;x,y;...` into a Y-set order.
    pub fn parse_yset(spec: &str) -> Result<OrderSpec> {
        let mut y = Vec::new();
        for part in spec.split(';').map(str::trim).filter(|s| !s.is_empty()) {
            let bad = || Error::Invalid(format!("bad point {part:?} in Y-set"));
            let (a, b) = part.split_once(',').ok_or_else(bad)?;
            y.push(Point::new(a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?));
        }
        Ok(OrderSpec::YSet { y })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u16]) -> Monomial {
        Monomial { exps: exps.to_vec() }
    }

    #[test]
    fn leading_variable_wins() {
        // x_a > x_b > x_c > x_d as variables 0..4
        let o = MonomialOrder::lex(vec![0, 1, 2, 3]).unwrap();
        assert_eq!(o.compare(&m(&[1, 0, 0, 1]), &m(&[0, 1, 1, 0])), Ordering::Greater);
        assert_eq!(o.compare(&m(&[1, 1, 0, 0]), &m(&[1, 1, 0, 0])), Ordering::Equal);
    }

    #[test]
    fn weight_sums_decide_first() {
        let w: Vec<BigRational> = [0, 0, 1, 1].iter().map(|&x| BigRational::from_integer(x.into())).collect();
        let o = MonomialOrder::weighted(w, MonomialOrder::lex(vec![0, 1, 2, 3]).unwrap()).unwrap();
        assert_eq!(o.compare(&m(&[1, 1, 0, 0]), &m(&[0, 0, 1, 1])), Ordering::Less);
    }

    #[test]
    fn initial_terms() {
        let b = Binomial::new(m(&[1, 1, 0, 0]), m(&[0, 0, 1, 1]));
        let a_first = MonomialOrder::lex(vec![0, 1, 2, 3]).unwrap();
        let c_first = MonomialOrder::lex(vec![2, 0, 1, 3]).unwrap();
        assert_eq!(a_first.initial_term(&b), &b.plus);
        assert_eq!(c_first.initial_term(&b), &b.minus);
    }

    #[test]
    fn cell_minor_under_point_order() {
        let ring = Ring::new([(0, 0), (1, 0), (0, 1), (1, 1)].map(Point::from));
        let b = ring.binomial(&[Point::new(0, 0), Point::new(1, 1)], &[Point::new(0, 1), Point::new(1, 0)]).unwrap();
        let o = OrderSpec::Lex1.build(&ring).unwrap();
        assert_eq!(o.initial_term(&b), &b.plus);
        assert_eq!(o.ranking()[0], ring.var(Point::new(1, 1)).unwrap());
    }

    #[test]
    fn yset_members_outrank() {
        let ring = Ring::new([(0, 0), (1, 0), (0, 1), (1, 1)].map(Point::from));
        let o = OrderSpec::YSet { y: vec![Point::new(0, 0)] }.build(&ring).unwrap();
        assert_eq!(ring.point(o.ranking()[0]), Point::new(0, 0));
        assert_eq!(ring.point(o.ranking()[1]), Point::new(1, 1));
    }

    #[test]
    fn key_matches_compare() {
        let o = MonomialOrder::lex(vec![2, 0, 1]).unwrap();
        let (a, b) = (m(&[2, 0, 1]), m(&[0, 3, 1]));
        assert_eq!(o.key(&a).cmp(&o.key(&b)), o.compare(&a, &b));
    }

    #[test]
    fn rejects_bad_ranking() {
        assert!(MonomialOrder::lex(vec![0, 0, 1]).is_err());
    }
}
