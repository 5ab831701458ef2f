//! The sequence `R_n'(1)` — the second moment of the walk's position —
//! by recurrence, closed form, generating function, and generic
//! polynomial differentiation, plus its growth-regime diagnostics.
//!
//! The recurrence `R_{n+1}'(1) = 1 + R_n'(1)(1 + 2a/n)`, `R_1'(1) = 1`,
//! follows from differentiating the defining polynomial recurrence at
//! `x = 1`; it is the ground truth the other three routes are checked
//! against.

use num_traits::{One, Zero};
use serde::Serialize;
use statrs::function::gamma::gamma;
use thiserror::Error;

use crate::elephant::elephant_poly;
use crate::rational::{rat, rat_int, rat_string, rat_to_f64, Rational};
use crate::series::PowerSeries;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MomentError {
    #[error("the closed form has a removable singularity at a = 1/2; use the harmonic form")]
    SingularParameter,
}

/// Growth regime of `R_n'(1)`, split at `a = 1/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    SubHalf,
    Half,
    SuperHalf,
}

pub fn regime_of(a: &Rational) -> Regime {
    let half = rat(1, 2);
    match a.cmp(&half) {
        std::cmp::Ordering::Less => Regime::SubHalf,
        std::cmp::Ordering::Equal => Regime::Half,
        std::cmp::Ordering::Greater => Regime::SuperHalf,
    }
}

/// `R_n'(1)` by iterating the defining recurrence.
pub fn second_moment_recurrence(n: usize, a: &Rational) -> Rational {
    assert!(n >= 1);
    let mut value = Rational::one();
    for m in 1..n {
        let factor = rat_int(1) + (a * rat_int(2)) / rat_int(m as i64);
        value = rat_int(1) + value * factor;
    }
    value
}

/// `R_n'(1)` in closed form for `a != 1/2`:
/// `(n - q_n) / (1 - 2a)` with `q_n = prod_{j=0}^{n-1} (2a + j) / (n-1)!`
/// (the rising-factorial form of `Gamma(n + 2a) / (Gamma(2a) Gamma(n))`).
///
/// Note the index convention: the numerator pairs `Gamma(n+1)` with
/// `Gamma(n+2a)`. The variant pairing `Gamma(n+2)` with `Gamma(n+1+2a)`
/// reproduces the value at index `n + 1` rather than `n` (it gives
/// `2(a+1)` at `n = 1`, which is `R_2'(1)`); the recurrence oracle pins
/// the convention used here.
pub fn second_moment_closed(n: usize, a: &Rational) -> Result<Rational, MomentError> {
    assert!(n >= 1);
    let two_a = a * rat_int(2);
    if two_a.is_one() {
        return Err(MomentError::SingularParameter);
    }
    let mut rising = Rational::one();
    for j in 0..n {
        rising *= &two_a + rat_int(j as i64);
    }
    let mut fact = Rational::one();
    for j in 2..n {
        fact *= rat_int(j as i64);
    }
    let q = rising / fact;
    Ok((rat_int(n as i64) - q) / (rat_int(1) - two_a))
}

/// `R_n'(1)` at the critical memory `a = 1/2`: exactly `n H_n`.
pub fn second_moment_at_half(n: usize) -> Rational {
    assert!(n >= 1);
    let mut harmonic = Rational::zero();
    for k in 1..=n {
        harmonic += rat(1, k as i64);
    }
    rat_int(n as i64) * harmonic
}

/// Truncated generating function of `R_n'(1)`: the coefficient of `x^n`
/// equals [`second_moment_recurrence`] for `1 <= n <= order`.
///
/// Away from the critical memory this is
/// `x/(1-x)^2 * (1 - 2a (1-x)^{1-2a}) / (1 - 2a)`; at `a = 1/2` it is
/// `x/(1-x)^2 * (1 - ln(1-x))`.
pub fn second_moment_series(a: &Rational, order: usize) -> PowerSeries {
    assert!(order >= 1);
    let base = PowerSeries::x_over_one_minus_x_squared(order);
    let two_a = a * rat_int(2);
    if two_a.is_one() {
        let log_part = PowerSeries::constant(Rational::one(), order)
            .sub(&PowerSeries::log_one_minus_x(order));
        base.mul(&log_part)
    } else {
        let exponent = rat_int(1) - &two_a;
        let binom = PowerSeries::binomial_one_minus_x(&exponent, order);
        let numer = PowerSeries::constant(Rational::one(), order).sub(&binom.scale(&two_a));
        base.mul(&numer.scale(&(Rational::one() / exponent)))
    }
}

/// Exact `R_n^{(order)}(1)` by generic polynomial differentiation.
pub fn derivative_at_one(n: usize, a: &Rational, order: usize) -> Rational {
    elephant_poly(n, a).derivative_n(order).eval(&rat_int(1))
}

/// Predicted leading term of `R_n'(1)` in the regime of `a`:
/// `n/(1-2a)` below critical, `n ln n` at critical,
/// `n^{2a} / ((2a-1) Gamma(2a))` above. The gamma factor is the one
/// floating-point ingredient.
pub fn predicted_leading_term(n: usize, a: &Rational) -> f64 {
    let n_f = n as f64;
    let a_f = rat_to_f64(a);
    match regime_of(a) {
        Regime::SubHalf => n_f / (1.0 - 2.0 * a_f),
        Regime::Half => n_f * n_f.ln(),
        Regime::SuperHalf => n_f.powf(2.0 * a_f) / ((2.0 * a_f - 1.0) * gamma(2.0 * a_f)),
    }
}

/// `R_n'(1)` divided by its predicted leading term; tends to 1.
pub fn asymptotic_ratio(n: usize, a: &Rational) -> f64 {
    assert!(n >= 2);
    let value = if regime_of(a) == Regime::Half {
        second_moment_at_half(n)
    } else {
        second_moment_recurrence(n, a)
    };
    rat_to_f64(&value) / predicted_leading_term(n, a)
}

/// One row of the moment table.
#[derive(Debug, Clone, Serialize)]
pub struct MomentRecord {
    pub n: usize,
    pub a: String,
    pub value_num: String,
    pub value_den: String,
    pub value_float: f64,
    pub regime: Regime,
    pub predicted_leading: f64,
    /// `value / predicted_leading`; absent at `n = 1` where the
    /// critical-regime prediction degenerates.
    pub ratio: Option<f64>,
}

pub fn moment_table(a: &Rational, max_n: usize) -> Vec<MomentRecord> {
    assert!(max_n >= 1);
    let regime = regime_of(a);
    let mut records = Vec::with_capacity(max_n);
    let mut value = Rational::one();
    for n in 1..=max_n {
        if n > 1 {
            let m = n - 1;
            let factor = rat_int(1) + (a * rat_int(2)) / rat_int(m as i64);
            value = rat_int(1) + &value * factor;
        }
        let predicted = predicted_leading_term(n, a);
        let value_float = rat_to_f64(&value);
        records.push(MomentRecord {
            n,
            a: rat_string(a),
            value_num: value.numer().to_string(),
            value_den: value.denom().to_string(),
            value_float,
            regime,
            predicted_leading: predicted,
            ratio: (n >= 2).then(|| value_float / predicted),
        });
    }
    records
}

pub fn moment_table_csv(records: &[MomentRecord]) -> String {
    let mut out =
        String::from("n,a,value_num,value_den,value_float,predicted_leading,ratio\n");
    for r in records {
        let ratio = r.ratio.map(|x| x.to_string()).unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.n, r.a, r.value_num, r.value_den, r.value_float, r.predicted_leading, ratio
        ));
    }
    out
}
