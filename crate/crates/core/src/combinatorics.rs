//! Eulerian numbers and polynomials, the integer triangle `T(n,k)`
//! attached to the `a = -1` specialization, and the identities tying
//! them together.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::poly::DensePoly;
use crate::rational::{rat_to_f64, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CombinatoricsError {
    #[error("Eulerian number A({n},{k}) requires 1 <= k <= n")]
    EulerianOutOfRange { n: usize, k: i64 },
    #[error("the generating-function identity requires |y| < 1/4")]
    DomainError,
}

/// Triangular table of Eulerian numbers `A(n,k)`, `1 <= k <= n`,
/// `A(n,k) = k A(n-1,k) + (n-k+1) A(n-1,k-1)`, rows summing to `n!`.
#[derive(Debug, Clone)]
pub struct EulerianTable {
    rows: Vec<Vec<BigInt>>,
}

impl EulerianTable {
    /// Builds rows `1..=max_n`.
    pub fn with_rows(max_n: usize) -> Self {
        assert!(max_n >= 1);
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max_n);
        rows.push(vec![BigInt::one()]);
        for n in 2..=max_n {
            let prev = &rows[n - 2];
            let mut row = Vec::with_capacity(n);
            for k in 1..=n {
                let stay = if k <= prev.len() {
                    &prev[k - 1] * BigInt::from(k)
                } else {
                    BigInt::zero()
                };
                let carry = if k >= 2 {
                    &prev[k - 2] * BigInt::from(n - k + 1)
                } else {
                    BigInt::zero()
                };
                row.push(stay + carry);
            }
            rows.push(row);
        }
        EulerianTable { rows }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.rows[n - 1]
    }

    pub fn value(&self, n: usize, k: usize) -> &BigInt {
        &self.rows[n - 1][k - 1]
    }
}

/// Exact Eulerian number `A(n,k)` for `1 <= k <= n`.
pub fn eulerian(n: usize, k: i64) -> Result<BigInt, CombinatoricsError> {
    if n < 1 || k < 1 || k > n as i64 {
        return Err(CombinatoricsError::EulerianOutOfRange { n, k });
    }
    Ok(EulerianTable::with_rows(n).value(n, k as usize).clone())
}

/// The central Eulerian number `A(2n-1, n)` through the alternating sum
/// `sum_{k=0}^{n} (-1)^k (n-k)^{2n-1} C(2n, k)`.
pub fn central_eulerian_altsum(n: usize) -> BigInt {
    assert!(n >= 1);
    let mut total = BigInt::zero();
    for k in 0..=n {
        let base = BigInt::from(n - k);
        let term = base.pow((2 * n - 1) as u32) * binomial(BigInt::from(2 * n), BigInt::from(k));
        if k % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Triangle `T(1,0) = 1`, `T(n,k) = (k+1) T(n-1,k) + (2n-4k) T(n-1,k-1)`
/// for `n >= 2`, `0 <= k <= floor((n-1)/2)`. Out-of-range entries are 0.
#[derive(Debug, Clone)]
pub struct TriangleT {
    rows: Vec<Vec<BigInt>>,
}

impl TriangleT {
    pub fn with_rows(max_n: usize) -> Self {
        assert!(max_n >= 1);
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max_n);
        rows.push(vec![BigInt::one()]);
        for n in 2..=max_n {
            let prev = &rows[n - 2];
            let width = (n - 1) / 2 + 1;
            let mut row = Vec::with_capacity(width);
            for k in 0..width {
                let stay = if k < prev.len() {
                    &prev[k] * BigInt::from(k + 1)
                } else {
                    BigInt::zero()
                };
                let carry = if k >= 1 && k - 1 < prev.len() {
                    &prev[k - 1] * BigInt::from(2 * n as i64 - 4 * k as i64)
                } else {
                    BigInt::zero()
                };
                row.push(stay + carry);
            }
            rows.push(row);
        }
        TriangleT { rows }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.rows[n - 1]
    }

    pub fn value(&self, n: usize, k: i64) -> BigInt {
        if n < 1 || k < 0 {
            return BigInt::zero();
        }
        self.rows[n - 1]
            .get(k as usize)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }
}

/// Single triangle entry; out-of-range `k` (or `n = 0`) yields 0.
pub fn triangle_t(n: usize, k: i64) -> BigInt {
    if n < 1 {
        return BigInt::zero();
    }
    TriangleT::with_rows(n).value(n, k)
}

/// `U_n(y) = sum_k T(n,k) y^k`.
pub fn u_poly(n: usize) -> DensePoly {
    assert!(n >= 1);
    let triangle = TriangleT::with_rows(n);
    let coeffs = triangle
        .row(n)
        .iter()
        .map(|t| Rational::from_integer(t.clone()))
        .collect();
    DensePoly::from_coeffs(coeffs)
}

/// Eulerian polynomial `A_n(x) = sum_{k=0}^{n-1} A(n, k+1) x^k`.
pub fn eulerian_poly(n: usize) -> DensePoly {
    assert!(n >= 1);
    let table = EulerianTable::with_rows(n);
    let coeffs = table
        .row(n)
        .iter()
        .map(|v| Rational::from_integer(v.clone()))
        .collect();
    DensePoly::from_coeffs(coeffs)
}

/// Checks `(1+x)^{2n-2} U_{2n-1}(x/(1+x)^2) = A_{2n-1}(x)` exactly.
///
/// The left side expands termwise to
/// `sum_k T(2n-1,k) x^k (1+x)^{2n-2-2k}`, a genuine polynomial because
/// the triangle row satisfies `2k <= 2n - 2`.
pub fn verify_u_a_identity(n: usize) -> bool {
    assert!(n >= 1);
    let triangle = TriangleT::with_rows(2 * n - 1);
    let one_plus_x = DensePoly::from_i64_coeffs(&[1, 1]);
    let mut lhs = DensePoly::zero();
    for (k, t) in triangle.row(2 * n - 1).iter().enumerate() {
        let base = one_plus_x.pow(2 * n - 2 - 2 * k);
        let term = base
            .mul_xpow(k)
            .scale(&Rational::from_integer(t.clone()));
        lhs = &lhs + &term;
    }
    lhs == eulerian_poly(2 * n - 1)
}

/// Floating-point probe of the closed-form exponential generating
/// function of the `U` family: compares the truncated sum
/// `sum_{n=1}^{N} U_n(y) z^n / n!` against
/// `C(y)(2 - C(y)) / (exp(-z sqrt(1-4y)) + 1 - C(y)) - C(y)` where
/// `C` is the Catalan generating function, and returns the absolute
/// residual. The only floating-point operation in this module.
pub fn verify_u_gf(y: &Rational, z: f64, terms: usize) -> Result<f64, CombinatoricsError> {
    if y.abs() >= Rational::new(BigInt::one(), BigInt::from(4)) {
        return Err(CombinatoricsError::DomainError);
    }
    let y_f = rat_to_f64(y);
    let triangle = TriangleT::with_rows(terms.max(1));
    let mut left = 0.0f64;
    let mut z_pow_over_fact = 1.0f64;
    for n in 1..=terms {
        z_pow_over_fact *= z / n as f64;
        // exact evaluation of U_n at y, converted once
        let mut u_at_y = Rational::zero();
        let mut y_pow = Rational::one();
        for t in triangle.row(n) {
            u_at_y += Rational::from_integer(t.clone()) * &y_pow;
            y_pow *= y;
        }
        left += rat_to_f64(&u_at_y) * z_pow_over_fact;
    }
    let root = (1.0 - 4.0 * y_f).sqrt();
    let catalan = if y_f == 0.0 { 1.0 } else { (1.0 - root) / (2.0 * y_f) };
    let right = catalan * (2.0 - catalan) / ((-z * root).exp() + 1.0 - catalan) - catalan;
    Ok((left - right).abs())
}

/// OEIS-style b-file text: one `index value` pair per line, running
/// index starting at 1, triangle flattened in reading order.
pub fn b_file_triangle_t(max_n: usize) -> String {
    let triangle = TriangleT::with_rows(max_n);
    let mut out = String::new();
    let mut index = 1usize;
    for n in 1..=max_n {
        for v in triangle.row(n) {
            out.push_str(&format!("{index} {v}\n"));
            index += 1;
        }
    }
    out
}

/// Flattened Eulerian triangle as a b-file.
pub fn b_file_eulerian(max_n: usize) -> String {
    let table = EulerianTable::with_rows(max_n);
    let mut out = String::new();
    let mut index = 1usize;
    for n in 1..=max_n {
        for v in table.row(n) {
            out.push_str(&format!("{index} {v}\n"));
            index += 1;
        }
    }
    out
}

/// Central Eulerian numbers `A(2n-1, n)` as a b-file.
pub fn b_file_central_eulerian(max_n: usize) -> String {
    let mut out = String::new();
    for n in 1..=max_n {
        out.push_str(&format!("{n} {}\n", central_eulerian_altsum(n)));
    }
    out
}

/// Exact binomial coefficient as a rational (convenience for the
/// distribution formulas).
pub fn binomial_rational(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    Rational::from_integer(binomial(BigInt::from(n), BigInt::from(k)))
}
