//! Membership certificates for Newton polyhedra.
//!
//! Both kinds re-verify with plain rational arithmetic against the ideal;
//! no solver state is needed.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::{ratio_str, RationalPoint};
use crate::error::Result;
use crate::lattice::{contains_monomial, ExponentVector, MonomialIdeal};

/// One term `weight · generator` of a convex combination.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedGenerator(
    pub ExponentVector,
    #[serde(with = "ratio_str")] pub BigRational,
);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum MembershipCertificate {
    /// `point = Σ weightₖ·gₖ + slack` with convex weights and `slack ≥ 0`.
    /// Multiplying through by `denominator` writes `d·point` as a sum of
    /// `d` generators plus a lattice vector.
    Inside {
        point: ExponentVector,
        weights: Vec<WeightedGenerator>,
        slack: RationalPoint,
        #[serde(with = "bigint_num")]
        denominator: BigInt,
    },
    /// `w ≥ 0` with `w·g ≥ 1` for every generator and `w·point < 1`.
    Outside {
        point: ExponentVector,
        #[serde(with = "ratio_list")]
        w: RationalPoint,
    },
}

impl MembershipCertificate {
    pub fn is_inside(&self) -> bool {
        matches!(self, Self::Inside { .. })
    }

    pub fn point(&self) -> &ExponentVector {
        match self {
            Self::Inside { point, .. } | Self::Outside { point, .. } => point,
        }
    }

    pub fn denominator(&self) -> Option<&BigInt> {
        match self {
            Self::Inside { denominator, .. } => Some(denominator),
            Self::Outside { .. } => None,
        }
    }

    /// Builds an inside certificate, filling in the common denominator.
    pub fn inside(
        point: ExponentVector,
        weights: Vec<WeightedGenerator>,
        slack: RationalPoint,
    ) -> Self {
        let denominator = weights
            .iter()
            .fold(BigInt::one(), |acc, w| acc.lcm(w.1.denom()));
        Self::Inside {
            point,
            weights,
            slack,
            denominator,
        }
    }

    /// Checks the certificate against `ideal` from scratch.
    pub fn verify(&self, ideal: &MonomialIdeal) -> Result<bool> {
        match self {
            Self::Inside {
                point,
                weights,
                slack,
                denominator,
            } => verify_inside(ideal, point, weights, slack, denominator),
            Self::Outside { point, w } => verify_outside(ideal, point, w),
        }
    }
}

fn verify_inside(
    ideal: &MonomialIdeal,
    point: &ExponentVector,
    weights: &[WeightedGenerator],
    slack: &RationalPoint,
    denominator: &BigInt,
) -> Result<bool> {
    let n = ideal.dim();
    if point.dim() != n || slack.dim() != n || weights.is_empty() {
        return Ok(false);
    }
    if !slack.is_nonnegative() || !denominator.is_positive() {
        return Ok(false);
    }
    let mut total = BigRational::zero();
    let mut combo = slack.clone();
    for WeightedGenerator(g, c) in weights {
        if g.dim() != n || c.is_negative() || !contains_monomial(ideal, g)? {
            return Ok(false);
        }
        total += c;
        combo = combo.add(&RationalPoint::from(g).scaled(c));
    }
    if !total.is_one() || combo != RationalPoint::from(point) {
        return Ok(false);
    }
    // d·α = Σ (d·cₖ)·gₖ + d·slack with every d·cₖ a nonnegative integer.
    let d = BigRational::from_integer(denominator.clone());
    let integral = weights.iter().all(|w| (&w.1 * &d).is_integer())
        && slack.scaled(&d).coords().iter().all(|c| c.is_integer());
    Ok(integral)
}

fn verify_outside(ideal: &MonomialIdeal, point: &ExponentVector, w: &RationalPoint) -> Result<bool> {
    let n = ideal.dim();
    if point.dim() != n || w.dim() != n || !w.is_nonnegative() {
        return Ok(false);
    }
    let one = BigRational::one();
    let separates = ideal.generators().iter().all(|g| w.dot_int(g) >= one);
    Ok(separates && w.dot_int(point) < one)
}

mod bigint_num {
    use super::*;

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
        match v.to_u64() {
            Some(u) => s.serialize_u64(u),
            None => s.collect_str(v),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigInt, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        match v {
            serde_json::Value::Number(n) => n
                .as_u64()
                .map(BigInt::from)
                .ok_or_else(|| serde::de::Error::custom("denominator must be a positive integer")),
            serde_json::Value::String(s) => s.parse().map_err(serde::de::Error::custom),
            _ => Err(serde::de::Error::custom("bad denominator")),
        }
    }
}

mod ratio_list {
    use super::*;
    use crate::newton::rational::parse_rational;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(v: &RationalPoint, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.dim()))?;
        for c in v.coords() {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<RationalPoint, D::Error> {
        let items = Vec::<String>::deserialize(d)?;
        items
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()
            .map(RationalPoint::new)
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::newton::rational::parse_rational;

    fn q(s: &str) -> BigRational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn json_shapes() {
        let inside = MembershipCertificate::inside(
            "1,1".parse().unwrap(),
            vec![
                WeightedGenerator("2,0".parse().unwrap(), q("1/2")),
                WeightedGenerator("0,2".parse().unwrap(), q("1/2")),
            ],
            RationalPoint::zero(2),
        );
        let js = serde_json::to_string(&inside).unwrap();
        assert_eq!(
            js,
            r#"{"verdict":"inside","point":"1,1","weights":[["2,0","1/2"],["0,2","1/2"]],"slack":"0,0","denominator":2}"#
        );
        let back: MembershipCertificate = serde_json::from_str(&js).unwrap();
        assert_eq!(back, inside);

        let outside = MembershipCertificate::Outside {
            point: "1,0".parse().unwrap(),
            w: "1/2,1/2".parse().unwrap(),
        };
        let js = serde_json::to_string(&outside).unwrap();
        assert_eq!(js, r#"{"verdict":"outside","point":"1,0","w":["1/2","1/2"]}"#);
        assert_eq!(serde_json::from_str::<MembershipCertificate>(&js).unwrap(), outside);
    }

    #[test]
    fn tampered_certificates_fail() {
        let ideal: MonomialIdeal = "2,0;0,2".parse().unwrap();
        let good = MembershipCertificate::Outside {
            point: "1,0".parse().unwrap(),
            w: "1/2,1/2".parse().unwrap(),
        };
        assert!(good.verify(&ideal).unwrap());
        let bad = MembershipCertificate::Outside {
            point: "1,1".parse().unwrap(),
            w: "1/2,1/2".parse().unwrap(),
        };
        assert!(!bad.verify(&ideal).unwrap());

        let wrong_sum = MembershipCertificate::inside(
            "1,1".parse().unwrap(),
            vec![WeightedGenerator("2,0".parse().unwrap(), q("1/2"))],
            "0,1".parse().unwrap(),
        );
        assert!(!wrong_sum.verify(&ideal).unwrap());
        let not_a_member = MembershipCertificate::inside(
            "1,1".parse().unwrap(),
            vec![WeightedGenerator("1,1".parse().unwrap(), q("1"))],
            RationalPoint::zero(2),
        );
        assert!(!not_a_member.verify(&ideal).unwrap());
    }
}
