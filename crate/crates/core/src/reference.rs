//! Independent reference constructions.
//!
//! Everything here deliberately avoids the production code paths it is
//! used to check: Chebyshev polynomials come from the classical
//! three-term recurrence, the `S` family from its own differential
//! recurrence rather than the coefficient sign rule, Eulerian rows from
//! brute-force descent counting, and the `U` family from the
//! differential recurrence rather than the integer triangle.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::poly::DensePoly;
use crate::rational::{rat_int, Rational};

/// Chebyshev polynomial of the first kind via `T_{n+1} = 2x T_n - T_{n-1}`.
pub fn chebyshev_first_kind(n: usize) -> DensePoly {
    let mut prev = DensePoly::one();
    let mut cur = DensePoly::x();
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &cur.clone().mul_xpow(1).scale(&rat_int(2)) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `S` family from `S_1 = x`, `S_{m+1} = x S_m + (a/m)(1 + x^2) S_m'`.
pub fn s_poly_by_recurrence(n: usize, a: &Rational) -> DensePoly {
    assert!(n >= 1);
    let mut s = DensePoly::x();
    for m in 1..n {
        let scaled = s.derivative().scale(&(a / rat_int(m as i64)));
        let term = &scaled + &scaled.clone().mul_xpow(2);
        s = &s.clone().mul_xpow(1) + &term;
    }
    s
}

/// `U` family from `U_1 = 1`,
/// `U_m = (2my + 1 - 4y) U_{m-1} + y(1 - 4y) U_{m-1}'`.
pub fn u_poly_by_differential_recurrence(n: usize) -> DensePoly {
    assert!(n >= 1);
    let mut u = DensePoly::one();
    for m in 2..=n {
        let linear = DensePoly::from_i64_coeffs(&[1, 2 * m as i64 - 4]);
        let weight = DensePoly::from_i64_coeffs(&[0, 1, -4]); // y(1 - 4y)
        u = &(&linear * &u) + &(&weight * &u.derivative());
    }
    u
}

/// Row `n` of the Eulerian triangle by enumerating permutations of
/// `{1..n}` and counting descents: entry `k-1` is the number of
/// permutations with exactly `k - 1` descents. Practical for `n <= 8`.
pub fn eulerian_row_by_descents(n: usize) -> Vec<BigInt> {
    assert!(n >= 1);
    let mut row = vec![BigInt::from(0u32); n];
    let mut items: Vec<usize> = (1..=n).collect();
    permute(&mut items, 0, &mut |perm| {
        let descents = perm.windows(2).filter(|w| w[0] > w[1]).count();
        row[descents] += 1u32;
    });
    row
}

fn permute(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

/// The `a = -1/2` closed form in its shifted-binomial shape:
/// `2^{1-n} sum_k C(n, 2k) x^{n-2k}` (every other entry of a Pascal row).
pub fn minus_half_closed_form_binomial(n: usize) -> DensePoly {
    assert!(n >= 1);
    let scale = Rational::new(BigInt::one(), BigInt::from(2u32).pow((n - 1) as u32));
    let mut coeffs = vec![Rational::zero(); n + 1];
    for k in 0..=n / 2 {
        coeffs[n - 2 * k] =
            &scale * Rational::from_integer(binomial(BigInt::from(n), BigInt::from(2 * k)));
    }
    DensePoly::from_coeffs(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn chebyshev_small_cases() {
        assert_eq!(chebyshev_first_kind(0), DensePoly::one());
        assert_eq!(chebyshev_first_kind(1), DensePoly::x());
        assert_eq!(chebyshev_first_kind(2), DensePoly::from_i64_coeffs(&[-1, 0, 2]));
        assert_eq!(chebyshev_first_kind(5), DensePoly::from_i64_coeffs(&[0, 5, 0, -20, 0, 16]));
    }

    #[test]
    fn eulerian_brute_force_row_three() {
        let row = eulerian_row_by_descents(3);
        assert_eq!(row, vec![BigInt::from(1u32), BigInt::from(4u32), BigInt::from(1u32)]);
    }

    #[test]
    fn shifted_binomial_form_matches_power_form() {
        for n in 1..=20 {
            assert_eq!(
                minus_half_closed_form_binomial(n),
                crate::elephant::closed_form_a_minus_half(n),
                "n={n}"
            );
        }
    }

    #[test]
    fn s_recurrence_small_case() {
        // S_2 = x*x + a(1+x^2)*1 = (1+a)x^2 + a at a = -1/2: (x^2 - 1)/2
        assert_eq!(
            s_poly_by_recurrence(2, &rat(-1, 2)),
            DensePoly::from_coeffs(vec![rat(-1, 2), rat(0, 1), rat(1, 2)])
        );
    }
}
