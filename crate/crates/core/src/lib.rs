//! Exact-arithmetic library for the polynomial family attached to the
//! one-dimensional elephant random walk.
//!
//! Everything outside the explicitly float-valued helpers (asymptotic
//! ratios, Monte Carlo frequencies, numeric generating-function probes)
//! is computed over arbitrary-precision rationals.
//!
//! ```
//! use elephant_core::elephant::elephant_poly;
//! use elephant_core::erw::{exact_distribution_dp, ErwParams};
//! use elephant_core::{parse_rational, rat, rat_int};
//!
//! // R_4 at a = -1/2 is (x^4 + 6x^2 + 1)/8, and R_4(1) = 1
//! let a = parse_rational("-1/2").unwrap();
//! let r4 = elephant_poly(4, &a);
//! assert_eq!(r4.coeff(2), rat(3, 4));
//! assert_eq!(r4.eval(&rat_int(1)), rat_int(1));
//!
//! // the exact law of the walk's position at time 4 for p = 0
//! let params = ErwParams::new(rat_int(-1)).unwrap();
//! let law = exact_distribution_dp(4, &params);
//! assert_eq!(law.prob(0), rat(2, 3));
//! assert_eq!(law.prob(2), rat(1, 6));
//! ```

pub mod combinatorics;
pub mod elephant;
pub mod erw;
pub mod laurent;
pub mod moments;
pub mod poly;
pub mod rational;
pub mod reference;
pub mod roots;
pub mod series;
pub mod verify;

pub use laurent::LaurentPoly;
pub use poly::DensePoly;
pub use rational::{parse_rational, rat, rat_int, rat_to_f64, Rational};
pub use series::PowerSeries;
