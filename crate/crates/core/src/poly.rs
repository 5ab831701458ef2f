//! Dense univariate polynomials over exact rationals.
//!
//! Coefficients are stored lowest degree first with no trailing zeros;
//! the zero polynomial is the empty vector and its degree is `None`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::rational::{parse_rational, rat_string, rat_to_f64, Rational};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct DensePoly {
    coeffs: Vec<Rational>,
}

impl DensePoly {
    pub fn zero() -> Self {
        DensePoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        DensePoly::constant(Rational::one())
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        DensePoly {
            coeffs: vec![Rational::zero(), Rational::one()],
        }
    }

    pub fn constant(c: Rational) -> Self {
        DensePoly::from_coeffs(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        DensePoly::from_coeffs(coeffs)
    }

    /// Builds from coefficients (lowest degree first), trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        DensePoly { coeffs }
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        DensePoly::from_coeffs(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Floating-point evaluation (coefficients converted individually).
    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + rat_to_f64(c);
        }
        acc
    }

    /// First derivative.
    pub fn derivative(&self) -> DensePoly {
        if self.coeffs.len() <= 1 {
            return DensePoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, c)| {
                if c.is_zero() {
                    Rational::zero()
                } else {
                    c * Rational::from_integer(BigInt::from(j))
                }
            })
            .collect();
        DensePoly::from_coeffs(coeffs)
    }

    /// `order`-th derivative (`order == 0` is the identity).
    pub fn derivative_n(&self, order: usize) -> DensePoly {
        let mut p = self.clone();
        for _ in 0..order {
            if p.is_zero() {
                break;
            }
            p = p.derivative();
        }
        p
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &Rational) -> DensePoly {
        if c.is_zero() || self.is_zero() {
            return DensePoly::zero();
        }
        DensePoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `x^k` in place and returns the result.
    pub fn mul_xpow(mut self, k: usize) -> DensePoly {
        if self.is_zero() || k == 0 {
            return self;
        }
        let old_len = self.coeffs.len();
        self.coeffs
            .resize(old_len + k, Rational::zero());
        for i in (0..old_len).rev() {
            self.coeffs.swap(i + k, i);
        }
        self
    }

    pub fn pow(&self, k: usize) -> DensePoly {
        let mut acc = DensePoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division: returns `(quotient, remainder)` with
    /// `self = q * divisor + r` and `deg r < deg divisor`.
    /// Panics if `divisor` is zero.
    pub fn divrem(&self, divisor: &DensePoly) -> (DensePoly, DensePoly) {
        let d_deg = divisor.degree().expect("division by zero polynomial");
        let d_lead = divisor.leading_coeff().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(d_deg)];
        while rem.len() > d_deg {
            let r_deg = rem.len() - 1;
            let factor = rem.last().unwrap() / &d_lead;
            if !factor.is_zero() {
                let shift = r_deg - d_deg;
                for (i, dc) in divisor.coeffs.iter().enumerate() {
                    let delta = dc * &factor;
                    rem[shift + i] -= delta;
                }
                quot[shift] = factor;
            }
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
            if rem.is_empty() {
                break;
            }
        }
        (DensePoly::from_coeffs(quot), DensePoly { coeffs: rem })
    }

    /// Monic greatest common divisor (constant 1 for coprime inputs).
    pub fn gcd(&self, other: &DensePoly) -> DensePoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        match a.leading_coeff() {
            Some(lc) if !lc.is_one() => {
                let inv = Rational::one() / lc;
                a.scale(&inv)
            }
            _ => a,
        }
    }

    /// Rescales by a positive rational so that coefficients become
    /// coprime integers. Signs of values at every point are preserved.
    pub fn primitive_integer_scaled(&self) -> DensePoly {
        if self.is_zero() {
            return DensePoly::zero();
        }
        let mut denom_lcm = BigInt::one();
        for c in &self.coeffs {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&denom_lcm / c.denom()))
            .collect();
        let mut content = BigInt::zero();
        for v in &ints {
            content = content.gcd(v);
        }
        // content > 0 since the polynomial is nonzero
        DensePoly {
            coeffs: ints
                .into_iter()
                .map(|v| Rational::from_integer(v / &content))
                .collect(),
        }
    }

    /// Coefficient strings `num/den`, lowest degree first (serialization form).
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(rat_string).collect()
    }

    pub fn from_coeff_strings(strings: &[String]) -> Result<DensePoly, crate::rational::ParseRationalError> {
        let coeffs = strings
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(DensePoly::from_coeffs(coeffs))
    }
}

impl fmt::Debug for DensePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for DensePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if j == 0 {
                write!(f, "{}", rat_string(&mag))?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}*", rat_string(&mag))?;
                }
                if j == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{j}")?;
                }
            }
        }
        Ok(())
    }
}

impl Serialize for DensePoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.coeff_strings().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for DensePoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(deserializer)?;
        DensePoly::from_coeff_strings(&strings).map_err(D::Error::custom)
    }
}

impl Add for &DensePoly {
    type Output = DensePoly;
    fn add(self, rhs: &DensePoly) -> DensePoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (i, c) in short.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        DensePoly::from_coeffs(coeffs)
    }
}

impl Sub for &DensePoly {
    type Output = DensePoly;
    fn sub(self, rhs: &DensePoly) -> DensePoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl SubAssign<&DensePoly> for DensePoly {
    fn sub_assign(&mut self, rhs: &DensePoly) {
        if rhs.is_zero() {
            return;
        }
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Rational::zero());
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            self.coeffs[i] -= c;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl Neg for &DensePoly {
    type Output = DensePoly;
    fn neg(self) -> DensePoly {
        DensePoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &DensePoly {
    type Output = DensePoly;
    fn mul(self, rhs: &DensePoly) -> DensePoly {
        if self.is_zero() || rhs.is_zero() {
            return DensePoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        DensePoly::from_coeffs(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};
    use proptest::prelude::*;

    fn r2_at(a: &Rational) -> DensePoly {
        // (a+1)x^2 - a
        DensePoly::from_coeffs(vec![
            -a.clone(),
            Rational::zero(),
            a + Rational::one(),
        ])
    }

    #[test]
    fn eval_matches_hand_values() {
        // R_2 with a = 1/3 at x = 1 evaluates to 1
        let p = r2_at(&rat(1, 3));
        assert_eq!(p.eval(&rat_int(1)), rat_int(1));
        // zero polynomial evaluates to 0 anywhere
        assert_eq!(DensePoly::zero().eval(&rat(7, 3)), rat_int(0));
        // R_3 with a = 1 is 4x^3 - 3x; at x = 1/2 it gives -1
        let r3 = DensePoly::from_i64_coeffs(&[0, -3, 0, 4]);
        assert_eq!(r3.eval(&rat(1, 2)), rat_int(-1));
    }

    #[test]
    fn derivative_examples() {
        // d/dx of (a+1)x^2 - a at a = 2 is 6x
        let p = r2_at(&rat_int(2));
        assert_eq!(p.derivative(), DensePoly::from_i64_coeffs(&[0, 6]));
        // order 0 is the identity
        assert_eq!(p.derivative_n(0), p);
        // second derivative of x^3 is 6x
        let cube = DensePoly::monomial(Rational::one(), 3);
        assert_eq!(cube.derivative_n(2), DensePoly::from_i64_coeffs(&[0, 6]));
    }

    #[test]
    fn divrem_and_gcd() {
        let p = DensePoly::from_i64_coeffs(&[-1, 0, 1]); // x^2 - 1
        let d = DensePoly::from_i64_coeffs(&[-1, 1]); // x - 1
        let (q, r) = p.divrem(&d);
        assert_eq!(q, DensePoly::from_i64_coeffs(&[1, 1]));
        assert!(r.is_zero());
        let g = p.gcd(&d);
        assert_eq!(g, d);
        // coprime polynomials have gcd 1
        let h = p.gcd(&DensePoly::from_i64_coeffs(&[1, 1, 1]));
        assert_eq!(h, DensePoly::one());
    }

    #[test]
    fn primitive_scaling_preserves_roots_and_signs() {
        let p = DensePoly::from_coeffs(vec![rat(2, 3), rat(-4, 9), rat(8, 3)]);
        let q = p.primitive_integer_scaled();
        assert_eq!(q, DensePoly::from_i64_coeffs(&[6, -4, 24]).primitive_integer_scaled());
        let x = rat(5, 7);
        assert_eq!(p.eval(&x).is_negative(), q.eval(&x).is_negative());
    }

    #[test]
    fn serialization_round_trip() {
        let p = DensePoly::from_coeffs(vec![rat(-1, 2), rat_int(0), rat(3, 2)]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"["-1/2","0","3/2"]"#);
        let back: DensePoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }

    prop_compose! {
        fn arb_rational()(n in -40i64..40, d in 1i64..12) -> Rational {
            rat(n, d)
        }
    }

    prop_compose! {
        fn arb_poly()(coeffs in prop::collection::vec(arb_rational(), 0..7)) -> DensePoly {
            DensePoly::from_coeffs(coeffs)
        }
    }

    proptest! {
        #[test]
        fn derivative_agrees_with_termwise_expansion(p in arb_poly(), x in arb_rational()) {
            // independent route: differentiate term by term and sum powers directly
            let mut expect = Rational::zero();
            for (j, c) in p.coeffs().iter().enumerate().skip(1) {
                let mut pow = Rational::one();
                for _ in 0..(j - 1) {
                    pow *= &x;
                }
                expect += c * Rational::from_integer(BigInt::from(j)) * pow;
            }
            prop_assert_eq!(p.derivative().eval(&x), expect);
        }

        #[test]
        fn mul_distributes_over_eval(p in arb_poly(), q in arb_poly(), x in arb_rational()) {
            let lhs = (&p * &q).eval(&x);
            let rhs = p.eval(&x) * q.eval(&x);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn divrem_reconstructs(p in arb_poly(), d in arb_poly()) {
            prop_assume!(!d.is_zero());
            let (q, r) = p.divrem(&d);
            let back = &(&q * &d) + &r;
            prop_assert_eq!(back, p);
            if let (Some(rd), Some(dd)) = (r.degree(), d.degree()) {
                prop_assert!(rd < dd);
            }
        }
    }
}
