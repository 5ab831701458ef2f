//! Truncated power series with exact rational coefficients.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::rational::{parse_rational, rat_string, Rational};

/// Coefficients for powers `0..=order`; arithmetic never claims anything
/// beyond the truncation order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least the constant term");
        PowerSeries { coeffs }
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); order + 1];
        coeffs[0] = c;
        PowerSeries { coeffs }
    }

    /// Truncation order `N`: coefficients are valid for powers `0..=N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> Rational {
        assert!(n <= self.order(), "coefficient {n} beyond truncation order {}", self.order());
        self.coeffs[n].clone()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> PowerSeries {
        let keep = order.min(self.order());
        PowerSeries {
            coeffs: self.coeffs[..=keep].to_vec(),
        }
    }

    pub fn scale(&self, c: &Rational) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn add(&self, other: &PowerSeries) -> PowerSeries {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|i| &self.coeffs[i] + &other.coeffs[i])
            .collect();
        PowerSeries { coeffs }
    }

    pub fn sub(&self, other: &PowerSeries) -> PowerSeries {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|i| &self.coeffs[i] - &other.coeffs[i])
            .collect();
        PowerSeries { coeffs }
    }

    /// Cauchy product, truncated to the smaller order of the factors.
    pub fn mul(&self, other: &PowerSeries) -> PowerSeries {
        let order = self.order().min(other.order());
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        PowerSeries { coeffs }
    }

    /// `(1 - x)^alpha` for rational `alpha`, via the generalized binomial
    /// recurrence `c_{k+1} = c_k (k - alpha) / (k + 1)`.
    pub fn binomial_one_minus_x(alpha: &Rational, order: usize) -> PowerSeries {
        let mut coeffs = Vec::with_capacity(order + 1);
        coeffs.push(Rational::one());
        for k in 0..order {
            let k_rat = Rational::from_integer(BigInt::from(k));
            let next = coeffs[k].clone() * (&k_rat - alpha)
                / (k_rat + Rational::one());
            coeffs.push(next);
        }
        PowerSeries { coeffs }
    }

    /// `ln(1 - x) = -sum_{k>=1} x^k / k`.
    pub fn log_one_minus_x(order: usize) -> PowerSeries {
        let mut coeffs = vec![Rational::zero()];
        for k in 1..=order {
            coeffs.push(Rational::new(BigInt::from(-1), BigInt::from(k)));
        }
        PowerSeries { coeffs }
    }

    /// `x / (1 - x)^2 = sum_{n>=1} n x^n`.
    pub fn x_over_one_minus_x_squared(order: usize) -> PowerSeries {
        let coeffs = (0..=order)
            .map(|n| Rational::from_integer(BigInt::from(n)))
            .collect();
        PowerSeries { coeffs }
    }
}

impl Serialize for PowerSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.coeffs
            .iter()
            .map(rat_string)
            .collect::<Vec<_>>()
            .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PowerSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(deserializer)?;
        if strings.is_empty() {
            return Err(D::Error::custom("a series carries at least the constant term"));
        }
        let coeffs = strings
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        Ok(PowerSeries { coeffs })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};
    use proptest::prelude::*;

    #[test]
    fn named_expansions_match_hand_series() {
        let geom = PowerSeries::x_over_one_minus_x_squared(4);
        assert_eq!(
            geom.coeffs(),
            &[rat_int(0), rat_int(1), rat_int(2), rat_int(3), rat_int(4)]
        );
        let log = PowerSeries::log_one_minus_x(3);
        assert_eq!(log.coeffs(), &[rat_int(0), rat_int(-1), rat(-1, 2), rat(-1, 3)]);
        // alpha = 1 - 2a with a = 3/2, i.e. (1-x)^{-2} = 1 + 2x + 3x^2 + 4x^3
        let binom = PowerSeries::binomial_one_minus_x(&rat_int(-2), 3);
        assert_eq!(binom.coeffs(), &[rat_int(1), rat_int(2), rat_int(3), rat_int(4)]);
    }

    #[test]
    fn mul_truncates_to_smaller_order() {
        let f = PowerSeries::from_coeffs(vec![rat_int(1), rat_int(1)]);
        let g = PowerSeries::from_coeffs(vec![rat_int(1), rat_int(1)]);
        let prod = f.mul(&g);
        assert_eq!(prod.order(), 1);
        assert_eq!(prod.coeffs(), &[rat_int(1), rat_int(2)]);
        // identity element
        let one = PowerSeries::constant(rat_int(1), 1);
        assert_eq!(f.mul(&one), f);
    }

    #[test]
    fn serialization_round_trip() {
        let s = PowerSeries::from_coeffs(vec![rat_int(1), rat(-2, 3)]);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"["1","-2/3"]"#);
        let back: PowerSeries = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<PowerSeries>("[]").is_err());
    }

    #[test]
    fn cross_term_used_in_half_case_generating_function() {
        // coefficient of x^2 in (x/(1-x)^2) * (-ln(1-x)) is 1
        let f = PowerSeries::x_over_one_minus_x_squared(4);
        let g = PowerSeries::log_one_minus_x(4).scale(&rat_int(-1));
        assert_eq!(f.mul(&g).coeff(2), rat_int(1));
    }

    prop_compose! {
        fn arb_series()(coeffs in prop::collection::vec((-20i64..20, 1i64..8), 1..7)) -> PowerSeries {
            PowerSeries::from_coeffs(coeffs.into_iter().map(|(n, d)| rat(n, d)).collect())
        }
    }

    proptest! {
        #[test]
        fn mul_is_commutative_and_associative_up_to_truncation(
            f in arb_series(), g in arb_series(), h in arb_series()
        ) {
            prop_assert_eq!(f.mul(&g), g.mul(&f));
            let order = f.order().min(g.order()).min(h.order());
            let left = f.mul(&g).mul(&h).truncate(order);
            let right = f.mul(&g.mul(&h)).truncate(order);
            prop_assert_eq!(left, right);
        }
    }
}
