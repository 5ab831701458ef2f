//! The elephant polynomial family `R_n` and its relatives `S_n`, `T_n`,
//! `V_n`, plus the structural checks (degree/parity/leading-coefficient
//! laws, the non-orthogonality resultant, special-case closed forms).
//!
//! `R_1(x) = x` and `R_{n+1}(x) = x R_n(x) - (a/n)(1 - x^2) R_n'(x)`,
//! where `a` is the memory parameter. `R_n(cos t)` is the characteristic
//! function of the walk's position at time `n` when `a = 2p - 1`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::combinatorics::TriangleT;
use crate::poly::DensePoly;
use crate::rational::{rat_int, rat_string, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ElephantError {
    #[error("the a = -1 closed form is defined for n >= 2 (got n = {0})")]
    ClosedFormIndexTooSmall(usize),
}

/// Exact `R_n` for any rational memory parameter `a`. Requires `n >= 1`.
pub fn elephant_poly(n: usize, a: &Rational) -> DensePoly {
    assert!(n >= 1, "elephant polynomials start at index 1");
    let mut r = DensePoly::x();
    for m in 1..n {
        let s = a / rat_int(m as i64);
        let shifted = r.clone().mul_xpow(1);
        if s.is_zero() {
            r = shifted;
            continue;
        }
        // s * (1 - x^2) * r'
        let scaled = r.derivative().scale(&s);
        let correction = &scaled - &scaled.clone().mul_xpow(2);
        let mut next = shifted;
        next -= &correction;
        r = next;
    }
    r
}

/// `S_n(x) = (-i)^n R_n(ix)` as a real polynomial.
///
/// Because nonzero coefficients of `R_n` sit at indices `j` with
/// `j = n (mod 2)`, the transform acts coefficientwise as
/// `c_j -> (-1)^{(n-j)/2} c_j`. The recurrence
/// `S_{n+1} = x S_n + (a/n)(1 + x^2) S_n'` is kept as an independent
/// oracle in [`crate::reference`].
pub fn s_poly(n: usize, a: &Rational) -> DensePoly {
    let r = elephant_poly(n, a);
    let coeffs = r
        .coeffs()
        .iter()
        .enumerate()
        .map(|(j, c)| {
            if c.is_zero() {
                return Rational::zero();
            }
            debug_assert!(j % 2 == n % 2, "parity violated in R_{n}");
            if ((n - j) / 2) % 2 == 1 {
                -c
            } else {
                c.clone()
            }
        })
        .collect();
    DensePoly::from_coeffs(coeffs)
}

/// The limit family `T_1(x) = x`, `T_{n+1}(x) = (x^2 - 1) T_n'(x) / n`.
pub fn t_limit_poly(n: usize) -> DensePoly {
    assert!(n >= 1);
    let mut t = DensePoly::x();
    for m in 1..n {
        let d = t.derivative();
        let grown = d.clone().mul_xpow(2);
        t = (&grown - &d).scale(&(Rational::one() / rat_int(m as i64)));
    }
    t
}

/// Derivative polynomials of tanh: `V_0(x) = x`,
/// `V_{n+1}(x) = (1 - x^2) V_n'(x)`; the n-th derivative of tanh equals
/// `V_n(tanh x)`.
pub fn v_tanh_poly(n: usize) -> DensePoly {
    let mut v = DensePoly::x();
    for _ in 0..n {
        let d = v.derivative();
        v = &d - &d.clone().mul_xpow(2);
    }
    v
}

/// Closed form at `a = -1/2`: `((x-1)/2)^n + ((x+1)/2)^n`.
pub fn closed_form_a_minus_half(n: usize) -> DensePoly {
    assert!(n >= 1);
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let minus = DensePoly::from_coeffs(vec![-half.clone(), half.clone()]);
    let plus = DensePoly::from_coeffs(vec![half.clone(), half]);
    &minus.pow(n) + &plus.pow(n)
}

/// Closed form at `a = -1` for `n >= 2`:
/// `(2x)^{n-2} U_{n-1}(1/(4x^2)) / (n-1)!`, assembled termwise so the
/// result is an honest polynomial (the triangle has `2k <= n - 2`).
pub fn closed_form_a_minus_one(n: usize) -> Result<DensePoly, ElephantError> {
    if n < 2 {
        return Err(ElephantError::ClosedFormIndexTooSmall(n));
    }
    let mut fact = BigInt::one();
    for j in 2..n {
        fact *= BigInt::from(j);
    }
    let triangle = TriangleT::with_rows(n - 1);
    let mut coeffs = vec![Rational::zero(); n - 1];
    for k in 0..=(n - 2) / 2 {
        let t = triangle.value(n - 1, k as i64);
        if t.is_zero() {
            continue;
        }
        let power = n - 2 - 2 * k;
        coeffs[power] = Rational::new(t * BigInt::from(2u32).pow(power as u32), fact.clone());
    }
    Ok(DensePoly::from_coeffs(coeffs))
}

/// Recovers `T_n` as the top `a`-coefficient of `R_n`.
///
/// For fixed `x`-power, the coefficient of `R_n` is a polynomial of
/// degree at most `n - 1` in `a`; sampling at the nodes `0, 1, ..., n-1`
/// and taking the top divided difference yields its `a^{n-1}`
/// coefficient exactly.
pub fn leading_coeff_in_a(n: usize) -> DensePoly {
    assert!(n >= 1);
    let nodes: Vec<Rational> = (0..n).map(|i| rat_int(i as i64)).collect();
    let samples: Vec<DensePoly> = nodes.iter().map(|a| elephant_poly(n, a)).collect();
    // weight_i = 1 / prod_{j != i} (node_i - node_j)
    let weights: Vec<Rational> = (0..n)
        .map(|i| {
            let mut denom = Rational::one();
            for j in 0..n {
                if j != i {
                    denom *= &nodes[i] - &nodes[j];
                }
            }
            Rational::one() / denom
        })
        .collect();
    let mut top = DensePoly::zero();
    for (sample, w) in samples.iter().zip(&weights) {
        top = &top + &sample.scale(w);
    }
    top
}

/// Resultant of two polynomials of degree at most 2, by the 4x4
/// Sylvester determinant with both treated as (possibly degenerate)
/// quadratics.
pub fn resultant_deg2(p: &DensePoly, q: &DensePoly) -> Rational {
    assert!(p.degree().unwrap_or(0) <= 2 && q.degree().unwrap_or(0) <= 2);
    let m = [
        [p.coeff(2), p.coeff(1), p.coeff(0), Rational::zero()],
        [Rational::zero(), p.coeff(2), p.coeff(1), p.coeff(0)],
        [q.coeff(2), q.coeff(1), q.coeff(0), Rational::zero()],
        [Rational::zero(), q.coeff(2), q.coeff(1), q.coeff(0)],
    ];
    det4(&m)
}

fn det4(m: &[[Rational; 4]; 4]) -> Rational {
    let mut det = Rational::zero();
    for (col, sign) in [(0usize, 1i64), (1, -1), (2, 1), (3, -1)] {
        if m[0][col].is_zero() {
            continue;
        }
        let mut minor: [[Rational; 3]; 3] =
            std::array::from_fn(|_| std::array::from_fn(|_| Rational::zero()));
        #[allow(clippy::needless_range_loop)]
        for r in 1..4 {
            let mut cc = 0;
            for c in 0..4 {
                if c == col {
                    continue;
                }
                minor[r - 1][cc] = m[r][c].clone();
                cc += 1;
            }
        }
        det += &m[0][col] * rat_int(sign) * det3(&minor);
    }
    det
}

fn det3(m: &[[Rational; 3]; 3]) -> Rational {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
        - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

/// One sample's worth of the non-orthogonality certificate.
#[derive(Debug, Clone, Serialize)]
pub struct NonorthogonalitySample {
    pub a: String,
    pub resultant: String,
    pub expected: String,
    pub matches: bool,
    /// `a` in {0, 1}: the resultant vanishes and the family is genuinely
    /// orthogonal (monomials, Chebyshev).
    pub orthogonal_case: bool,
    /// The three-term identity `R_{n+1} = (a+1)x R_n - a R_{n-1}` holds
    /// exactly for n = 1 and n = 2 (with `R_0 = 1`).
    pub low_degree_identity_ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct NonorthogonalityReport {
    pub samples: Vec<NonorthogonalitySample>,
    /// Seven distinct samples pin down the degree-6 identity
    /// `Res(R_4 - (a+1)x R_3, R_2) = a^4 (a-1)^2 / 9` as polynomials in `a`.
    pub identity_certified: bool,
    pub all_match: bool,
}

/// Certifies that the family satisfies no three-term recurrence of
/// orthogonal type: the defect `D = R_4 - (a+1)x R_3` has degree <= 2
/// but its resultant with `R_2` is `a^4 (a-1)^2 / 9`, nonzero away from
/// `a` in {0, 1}.
pub fn verify_nonorthogonality(a_samples: &[Rational]) -> NonorthogonalityReport {
    let mut samples = Vec::with_capacity(a_samples.len());
    let mut all_match = true;
    for a in a_samples {
        let r0 = DensePoly::one();
        let r1 = elephant_poly(1, a);
        let r2 = elephant_poly(2, a);
        let r3 = elephant_poly(3, a);
        let r4 = elephant_poly(4, a);
        let a_plus_one_x =
            DensePoly::from_coeffs(vec![Rational::zero(), a + Rational::one()]);

        let defect = &r4 - &(&a_plus_one_x * &r3);
        assert!(defect.degree().unwrap_or(0) <= 2);
        let resultant = resultant_deg2(&defect, &r2);
        let expected = a.pow(4) * (a - Rational::one()).pow(2) / rat_int(9);
        let matches = resultant == expected;
        all_match &= matches;

        let id1 = &(&a_plus_one_x * &r1) - &r0.scale(a);
        let id2 = &(&a_plus_one_x * &r2) - &r1.scale(a);
        let low_degree_identity_ok = id1 == r2 && id2 == r3;
        all_match &= low_degree_identity_ok;

        samples.push(NonorthogonalitySample {
            a: rat_string(a),
            resultant: rat_string(&resultant),
            expected: rat_string(&expected),
            matches,
            orthogonal_case: a.is_zero() || a.is_one(),
            low_degree_identity_ok,
        });
    }
    let mut distinct = a_samples.to_vec();
    distinct.sort();
    distinct.dedup();
    NonorthogonalityReport {
        samples,
        identity_certified: distinct.len() >= 7,
        all_match,
    }
}

/// Which polynomial family a serialized record belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Family {
    R,
    S,
    T,
    V,
    U,
}

impl Family {
    pub fn needs_parameter(self) -> bool {
        matches!(self, Family::R | Family::S)
    }
}

impl std::str::FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "R" | "r" => Ok(Family::R),
            "S" | "s" => Ok(Family::S),
            "T" | "t" => Ok(Family::T),
            "V" | "v" => Ok(Family::V),
            "U" | "u" => Ok(Family::U),
            other => Err(format!("unknown family `{other}` (expected R, S, T, V, or U)")),
        }
    }
}

/// A constructed family member, in the JSON emission layout
/// `{family, n, a, coeffs}`.
#[derive(Debug, Clone, Serialize)]
pub struct PolyFamily {
    pub family: Family,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<String>,
    pub coeffs: Vec<String>,
    #[serde(skip)]
    pub poly: DensePoly,
}

impl PolyFamily {
    pub fn build(family: Family, n: usize, a: Option<&Rational>) -> Result<PolyFamily, String> {
        if family.needs_parameter() != a.is_some() {
            return Err(if family.needs_parameter() {
                format!("family {family:?} requires a memory parameter a")
            } else {
                format!("family {family:?} takes no memory parameter")
            });
        }
        if family != Family::V && n == 0 {
            return Err(format!("family {family:?} starts at n = 1"));
        }
        let poly = match family {
            Family::R => elephant_poly(n, a.unwrap()),
            Family::S => s_poly(n, a.unwrap()),
            Family::T => t_limit_poly(n),
            Family::V => v_tanh_poly(n),
            Family::U => crate::combinatorics::u_poly(n),
        };
        Ok(PolyFamily {
            family,
            n,
            a: a.map(rat_string),
            coeffs: poly.coeff_strings(),
            poly,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::reference;
    use num_traits::Signed;

    #[test]
    fn first_polynomials_match_symbolic_expansion() {
        // R_2 = (a+1)x^2 - a at a = 1/2
        assert_eq!(
            elephant_poly(2, &rat(1, 2)),
            DensePoly::from_coeffs(vec![rat(-1, 2), rat(0, 1), rat(3, 2)])
        );
        // a = 0 collapses to monomials
        assert_eq!(elephant_poly(5, &rat(0, 1)), DensePoly::monomial(Rational::one(), 5));
        // a = 1 gives Chebyshev: R_4 = 8x^4 - 8x^2 + 1
        assert_eq!(
            elephant_poly(4, &rat(1, 1)),
            DensePoly::from_i64_coeffs(&[1, 0, -8, 0, 8])
        );
        // a = -1/2: R_4 = (x^4 + 6x^2 + 1)/8
        assert_eq!(
            elephant_poly(4, &rat(-1, 2)),
            DensePoly::from_coeffs(vec![rat(1, 8), rat(0, 1), rat(6, 8), rat(0, 1), rat(1, 8)])
        );
    }

    #[test]
    fn imaginary_transform_examples() {
        // S_2 at a = -1 is the constant -1
        assert_eq!(s_poly(2, &rat(-1, 1)), DensePoly::from_i64_coeffs(&[-1]));
        // S_1 = x for any a
        assert_eq!(s_poly(1, &rat(17, 5)), DensePoly::x());
        // S_2 at a = -1/2 is (x^2 - 1)/2
        assert_eq!(
            s_poly(2, &rat(-1, 2)),
            DensePoly::from_coeffs(vec![rat(-1, 2), rat(0, 1), rat(1, 2)])
        );
    }

    #[test]
    fn s_poly_matches_recurrence_oracle_up_to_n_40() {
        for a in [rat(-1, 2), rat(-1, 1), rat(-3, 2), rat(2, 7)] {
            for n in 1..=40 {
                assert_eq!(s_poly(n, &a), reference::s_poly_by_recurrence(n, &a), "n={n} a={a}");
            }
        }
    }

    #[test]
    fn limit_family_small_cases() {
        assert_eq!(t_limit_poly(1), DensePoly::x());
        assert_eq!(t_limit_poly(2), DensePoly::from_i64_coeffs(&[-1, 0, 1]));
        assert_eq!(t_limit_poly(3), DensePoly::from_i64_coeffs(&[0, -1, 0, 1]));
    }

    #[test]
    fn tanh_family_small_cases() {
        assert_eq!(v_tanh_poly(0), DensePoly::x());
        assert_eq!(v_tanh_poly(1), DensePoly::from_i64_coeffs(&[1, 0, -1]));
        assert_eq!(v_tanh_poly(2), DensePoly::from_i64_coeffs(&[0, -2, 0, 2]));
        assert_eq!(v_tanh_poly(3), DensePoly::from_i64_coeffs(&[-2, 0, 8, 0, -6]));
    }

    #[test]
    fn closed_form_minus_half_examples() {
        assert_eq!(closed_form_a_minus_half(1), DensePoly::x());
        assert_eq!(
            closed_form_a_minus_half(2),
            DensePoly::from_coeffs(vec![rat(1, 2), rat(0, 1), rat(1, 2)])
        );
        assert_eq!(
            closed_form_a_minus_half(3),
            DensePoly::from_coeffs(vec![rat(0, 1), rat(3, 4), rat(0, 1), rat(1, 4)])
        );
    }

    #[test]
    fn closed_form_minus_one_examples() {
        assert!(closed_form_a_minus_one(1).is_err());
        assert_eq!(closed_form_a_minus_one(2).unwrap(), DensePoly::one());
        assert_eq!(closed_form_a_minus_one(3).unwrap(), DensePoly::x());
        assert_eq!(
            closed_form_a_minus_one(4).unwrap(),
            DensePoly::from_coeffs(vec![rat(1, 3), rat(0, 1), rat(2, 3)])
        );
    }

    #[test]
    fn closed_forms_agree_with_recurrence() {
        for n in 1..=25 {
            assert_eq!(elephant_poly(n, &rat(-1, 2)), closed_form_a_minus_half(n), "n={n}");
        }
        for n in 2..=25 {
            assert_eq!(
                elephant_poly(n, &rat(-1, 1)),
                closed_form_a_minus_one(n).unwrap(),
                "n={n}"
            );
        }
        for n in 1..=25 {
            assert_eq!(elephant_poly(n, &rat(1, 1)), reference::chebyshev_first_kind(n), "n={n}");
        }
    }

    #[test]
    fn top_a_coefficient_examples() {
        assert_eq!(leading_coeff_in_a(1), DensePoly::x());
        assert_eq!(leading_coeff_in_a(2), DensePoly::from_i64_coeffs(&[-1, 0, 1]));
        assert_eq!(leading_coeff_in_a(3), DensePoly::from_i64_coeffs(&[0, -1, 0, 1]));
    }

    #[test]
    fn limit_identities_hold_to_n_15() {
        for n in 1..=15 {
            let t = t_limit_poly(n);
            let mut fact = Rational::one();
            for j in 2..n {
                fact *= rat_int(j as i64);
            }
            let sign = if (n - 1) % 2 == 1 { rat_int(-1) } else { rat_int(1) };
            let via_v = v_tanh_poly(n - 1).scale(&(sign / fact));
            assert_eq!(t, via_v, "T_{n} vs signed V_{}", n - 1);
            assert_eq!(t, leading_coeff_in_a(n), "T_{n} vs interpolation");
        }
    }

    #[test]
    fn nonorthogonality_certificate() {
        let samples: Vec<Rational> = [
            rat(0, 1),
            rat(1, 1),
            rat(2, 1),
            rat(-3, 1),
            rat(-1, 2),
            rat(1, 3),
            rat(5, 1),
            rat(7, 2),
        ]
        .to_vec();
        let report = verify_nonorthogonality(&samples);
        assert!(report.all_match);
        assert!(report.identity_certified);
        // a = 2 gives 16/9
        let s = report.samples.iter().find(|s| s.a == "2").unwrap();
        assert_eq!(s.resultant, "16/9");
        assert!(!s.orthogonal_case);
        // orthogonal cases vanish
        for val in ["0", "1"] {
            let s = report.samples.iter().find(|s| s.a == val).unwrap();
            assert_eq!(s.resultant, "0");
            assert!(s.orthogonal_case);
        }
    }

    #[test]
    fn structural_invariants_on_a_grid() {
        let grid = [
            rat(-1, 1),
            rat(-1, 2),
            rat(-1, 4),
            rat(0, 1),
            rat(1, 4),
            rat(1, 2),
            rat(1, 1),
            rat(2, 1),
            rat(10, 1),
        ];
        for a in &grid {
            for n in 1..=40usize {
                let r = elephant_poly(n, a);
                // values at +-1
                assert_eq!(r.eval(&rat_int(1)), rat_int(1));
                let expect = if n % 2 == 0 { rat_int(1) } else { rat_int(-1) };
                assert_eq!(r.eval(&rat_int(-1)), expect);
                // parity
                for (j, c) in r.coeffs().iter().enumerate() {
                    if j % 2 != n % 2 {
                        assert!(c.is_zero(), "parity break at n={n} j={j}");
                    }
                }
                // degree and leading coefficient
                if *a == rat(-1, 1) {
                    if n >= 2 {
                        assert_eq!(r.degree(), Some(n - 2));
                        let mut fact = Rational::one();
                        for j in 2..n {
                            fact *= rat_int(j as i64);
                        }
                        let expect = Rational::new(BigInt::from(2u32).pow((n - 2) as u32), BigInt::one()) / fact;
                        assert_eq!(r.leading_coeff().unwrap(), &expect);
                    }
                } else {
                    assert_eq!(r.degree(), Some(n));
                    let expect = (a + Rational::one()).pow((n - 1) as i32);
                    assert_eq!(r.leading_coeff().unwrap(), &expect);
                }
                // sign pattern
                let nonzero: Vec<&Rational> =
                    r.coeffs().iter().rev().filter(|c| !c.is_zero()).collect();
                if a > &rat(0, 1) {
                    for (i, c) in nonzero.iter().enumerate() {
                        let want_positive = i % 2 == 0;
                        assert_eq!(c.is_positive(), want_positive, "alternation n={n} a={a}");
                    }
                } else if a >= &rat(-1, 1) {
                    for c in &nonzero {
                        assert!(c.is_positive(), "nonnegative coefficients n={n} a={a}");
                    }
                }
            }
        }
    }

    #[test]
    fn bounded_on_the_unit_interval_for_probabilistic_parameters() {
        let a_grid = [rat(-1, 1), rat(-1, 2), rat(-1, 4), rat(0, 1), rat(1, 4), rat(3, 4), rat(1, 1)];
        for a in &a_grid {
            for n in [1usize, 2, 3, 5, 9, 14] {
                let r = elephant_poly(n, a);
                for k in 0..64i64 {
                    let x = rat(-63 + 2 * k, 63);
                    assert!(r.eval(&x).abs() <= rat_int(1), "n={n} a={a} x={x}");
                }
            }
        }
    }
}
