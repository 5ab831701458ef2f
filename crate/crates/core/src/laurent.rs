//! Laurent polynomials in `z` with rational coefficients.
//!
//! The map `x = (z + 1/z)/2` sends `cos t`-polynomials to their Fourier
//! side: the coefficient of `z^k` in the image of `p` is the weight the
//! trigonometric polynomial `p(cos t)` puts on `e^{ikt}`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::Zero;
use serde::Serialize;
use serde::Serializer;

use crate::poly::DensePoly;
use crate::rational::{rat_string, Rational};

/// Finite two-sided coefficient map `k -> c_k`; zero entries are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn from_map(coeffs: BTreeMap<i64, Rational>) -> Self {
        let coeffs = coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        LaurentPoly { coeffs }
    }

    pub fn coeff(&self, k: i64) -> Rational {
        self.coeffs.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Iterates `(exponent, coefficient)` in increasing exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    /// Smallest and largest exponents with nonzero coefficient.
    pub fn support_bounds(&self) -> Option<(i64, i64)> {
        let min = self.coeffs.keys().next()?;
        let max = self.coeffs.keys().next_back()?;
        Some((*min, *max))
    }

    pub fn is_symmetric(&self) -> bool {
        self.coeffs.iter().all(|(k, c)| self.coeff(-k) == *c)
    }

    /// Sum of all coefficients (the value at `z = 1`).
    pub fn coeff_sum(&self) -> Rational {
        self.coeffs.values().sum()
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let map: BTreeMap<String, String> = self
            .coeffs
            .iter()
            .map(|(k, c)| (k.to_string(), rat_string(c)))
            .collect();
        map.serialize(serializer)
    }
}

/// Expands `p((z + 1/z)/2)` exactly.
///
/// The result is always symmetric (`c_k = c_{-k}`), and for a degree-`n`
/// input its support lies in `{-n, ..., n}` with exponents congruent to
/// the degrees present in `p` mod 2.
pub fn cos_substitution(p: &DensePoly) -> LaurentPoly {
    let mut coeffs: BTreeMap<i64, Rational> = BTreeMap::new();
    for (j, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        // c * 2^{-j} * sum_i C(j, i) z^{j - 2i}
        let scale = Rational::new(BigInt::from(1), BigInt::from(2u32).pow(j as u32));
        for i in 0..=j {
            let weight = &scale * Rational::from_integer(binomial(BigInt::from(j), BigInt::from(i)));
            let entry = coeffs.entry(j as i64 - 2 * i as i64).or_insert_with(Rational::zero);
            *entry += c * weight;
        }
    }
    LaurentPoly::from_map(coeffs)
}
