//! Certified real-root isolation over exact rationals, and interlacing
//! verification between consecutive family members.
//!
//! All certification arithmetic is exact: Sturm variation counts decide
//! how many roots an interval holds, bisection endpoints are rationals,
//! and signs come from exact evaluation. Floating point appears only in
//! the display form of interval midpoints.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::poly::DensePoly;
use crate::rational::{rat_string, rat_to_f64, Rational};

/// Per-interval bisection cap during interlacing refinement.
pub const REFINEMENT_CAP: usize = 200;

/// Default isolation width `2^-40`.
pub fn default_width() -> Rational {
    Rational::new(BigInt::from(1), BigInt::from(2u64).pow(40))
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RootError {
    /// `gcd(p, p')` is nonconstant: a repeated root. Surfaced loudly —
    /// callers must not deflate it away.
    #[error("polynomial is not squarefree (repeated real or complex root)")]
    NonSquarefree,
    #[error("isolation domain is empty or reversed")]
    InvalidDomain,
    #[error("polynomial vanishes at a domain endpoint")]
    DomainEndpointIsRoot,
    #[error("interlacing refinement exceeded {budget} bisections for one interval")]
    RefinementBudgetExceeded { budget: usize },
    #[error("interlacing violated: {detail}")]
    InterlacingViolated { detail: String },
}

/// Where to look for roots.
#[derive(Debug, Clone)]
pub enum Domain {
    /// Open interval `(lo, hi)`; the endpoints must not be roots.
    Interval(Rational, Rational),
    /// Whole real line (reduced internally to a Cauchy bound box).
    AllReals,
}

/// A rational interval certified to contain exactly one simple root,
/// with the exact signs of the polynomial at its endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsolatingInterval {
    pub lo: Rational,
    pub hi: Rational,
    pub sign_lo: i8,
    pub sign_hi: i8,
}

impl IsolatingInterval {
    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(BigInt::from(2))
    }
}

/// A certified root location: either hit exactly or bracketed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootLocation {
    Exact(Rational),
    Bracketed(IsolatingInterval),
}

impl RootLocation {
    fn lo(&self) -> &Rational {
        match self {
            RootLocation::Exact(r) => r,
            RootLocation::Bracketed(iv) => &iv.lo,
        }
    }

    fn hi(&self) -> &Rational {
        match self {
            RootLocation::Exact(r) => r,
            RootLocation::Bracketed(iv) => &iv.hi,
        }
    }

    /// Approximate position for display output.
    pub fn midpoint_f64(&self) -> f64 {
        match self {
            RootLocation::Exact(r) => rat_to_f64(r),
            RootLocation::Bracketed(iv) => rat_to_f64(&iv.midpoint()),
        }
    }
}

/// The certified roots of one polynomial, sorted in increasing order.
#[derive(Debug, Clone)]
pub struct RootList {
    poly: DensePoly,
    locations: Vec<RootLocation>,
}

impl RootList {
    pub fn count(&self) -> usize {
        self.locations.len()
    }

    pub fn locations(&self) -> &[RootLocation] {
        &self.locations
    }

    pub fn intervals(&self) -> impl Iterator<Item = &IsolatingInterval> {
        self.locations.iter().filter_map(|loc| match loc {
            RootLocation::Bracketed(iv) => Some(iv),
            RootLocation::Exact(_) => None,
        })
    }

    pub fn exact_roots(&self) -> impl Iterator<Item = &Rational> {
        self.locations.iter().filter_map(|loc| match loc {
            RootLocation::Exact(r) => Some(r),
            RootLocation::Bracketed(_) => None,
        })
    }

    /// One sign-bisection step on the chosen location. Returns `false`
    /// when the location is already exact and cannot shrink.
    fn refine_once(&mut self, idx: usize) -> bool {
        let loc = &mut self.locations[idx];
        let iv = match loc {
            RootLocation::Exact(_) => return false,
            RootLocation::Bracketed(iv) => iv,
        };
        let mid = iv.midpoint();
        let value = self.poly.eval(&mid);
        if value.is_zero() {
            *loc = RootLocation::Exact(mid);
            return true;
        }
        let sign = rational_sign(&value);
        if sign == iv.sign_lo {
            iv.lo = mid;
        } else {
            iv.hi = mid;
        }
        true
    }
}

fn rational_sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Canonical Sturm chain: `p, p'`, then negated Euclidean remainders
/// down to a constant. Remainders are rescaled (positively) to coprime
/// integer coefficients to keep their size in check; this preserves
/// every sign the chain is queried for.
pub fn sturm_sequence(p: &DensePoly) -> Vec<DensePoly> {
    assert!(!p.is_zero(), "Sturm chain of the zero polynomial");
    let mut chain = vec![p.clone()];
    if p.degree() == Some(0) {
        return chain;
    }
    chain.push(p.derivative());
    loop {
        let len = chain.len();
        let (_, rem) = chain[len - 2].divrem(&chain[len - 1]);
        if rem.is_zero() {
            break;
        }
        chain.push((-&rem).primitive_integer_scaled());
    }
    chain
}

/// Number of sign changes of the chain values at `x` (zeros skipped).
pub fn sign_variations_at(chain: &[DensePoly], x: &Rational) -> usize {
    let mut variations = 0;
    let mut last = 0i8;
    for poly in chain {
        let sign = rational_sign(&poly.eval(x));
        if sign == 0 {
            continue;
        }
        if last != 0 && sign != last {
            variations += 1;
        }
        last = sign;
    }
    variations
}

/// `1 + max |c_j / c_deg|`: every root lies strictly inside `(-B, B)`.
pub fn cauchy_root_bound(p: &DensePoly) -> Rational {
    let lead = p.leading_coeff().expect("bound of the zero polynomial").abs();
    let mut max = Rational::zero();
    for c in p.coeffs() {
        let ratio = c.abs() / &lead;
        if ratio > max {
            max = ratio;
        }
    }
    max + Rational::from_integer(BigInt::from(1))
}

/// Isolates every real root of `p` in `domain` into disjoint rational
/// intervals of length at most `width` (roots hit exactly during
/// bisection are reported exactly instead).
///
/// Requires `p` nonzero and squarefree; a nonconstant `gcd(p, p')`
/// yields [`RootError::NonSquarefree`].
pub fn isolate_roots(
    p: &DensePoly,
    domain: Domain,
    width: &Rational,
) -> Result<RootList, RootError> {
    assert!(!p.is_zero(), "cannot isolate roots of the zero polynomial");
    assert!(width.is_positive(), "isolation width must be positive");
    if p.degree() == Some(0) {
        return Ok(RootList {
            poly: p.clone(),
            locations: Vec::new(),
        });
    }
    let gcd = p.gcd(&p.derivative());
    if gcd.degree() > Some(0) {
        return Err(RootError::NonSquarefree);
    }
    let (lo, hi) = match domain {
        Domain::AllReals => {
            let bound = cauchy_root_bound(p);
            (-&bound, bound)
        }
        Domain::Interval(lo, hi) => (lo, hi),
    };
    if lo >= hi {
        return Err(RootError::InvalidDomain);
    }
    if p.eval(&lo).is_zero() || p.eval(&hi).is_zero() {
        return Err(RootError::DomainEndpointIsRoot);
    }
    let chain = sturm_sequence(p);
    let variations_lo = sign_variations_at(&chain, &lo);
    let variations_hi = sign_variations_at(&chain, &hi);
    let total = variations_lo - variations_hi;

    let mut locations = Vec::with_capacity(total);
    let mut stack = vec![(lo, hi, variations_lo, variations_hi)];
    let two = Rational::from_integer(BigInt::from(2));
    while let Some((l, h, vl, vh)) = stack.pop() {
        let count = vl - vh;
        if count == 0 {
            continue;
        }
        if count == 1 {
            let (mut l, mut h) = (l, h);
            let sign_lo = rational_sign(&p.eval(&l));
            loop {
                if &h - &l <= *width {
                    let sign_hi = rational_sign(&p.eval(&h));
                    debug_assert!(sign_lo != 0 && sign_hi == -sign_lo);
                    locations.push(RootLocation::Bracketed(IsolatingInterval {
                        lo: l,
                        hi: h,
                        sign_lo,
                        sign_hi,
                    }));
                    break;
                }
                let mid = (&l + &h) / &two;
                let value = p.eval(&mid);
                if value.is_zero() {
                    locations.push(RootLocation::Exact(mid));
                    break;
                }
                if rational_sign(&value) == sign_lo {
                    l = mid;
                } else {
                    h = mid;
                }
            }
            continue;
        }
        let mid = (&l + &h) / &two;
        if p.eval(&mid).is_zero() {
            // exact root at the split point: carve out a certified gap
            // around it, then recurse on the two outer pieces
            let mut delta = (&h - &l) / Rational::from_integer(BigInt::from(4));
            loop {
                let left = &mid - &delta;
                let right = &mid + &delta;
                if !p.eval(&left).is_zero() && !p.eval(&right).is_zero() {
                    let v_left = sign_variations_at(&chain, &left);
                    let v_right = sign_variations_at(&chain, &right);
                    if v_left - v_right == 1 {
                        locations.push(RootLocation::Exact(mid.clone()));
                        stack.push((l, left, vl, v_left));
                        stack.push((right, h, v_right, vh));
                        break;
                    }
                }
                delta /= &two;
            }
        } else {
            let v_mid = sign_variations_at(&chain, &mid);
            stack.push((l, mid.clone(), vl, v_mid));
            stack.push((mid, h, v_mid, vh));
        }
    }

    locations.sort_by(position_order);
    assert_eq!(locations.len(), total, "isolation lost or duplicated a root");
    Ok(RootList {
        poly: p.clone(),
        locations,
    })
}

fn position_order(a: &RootLocation, b: &RootLocation) -> Ordering {
    a.lo().cmp(b.lo()).then_with(|| a.hi().cmp(b.hi()))
}

/// Which interlacing regime the pair of lists is checked under.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InterlacingMode {
    /// Roots must additionally stay inside the open interval `(-1, 1)`.
    StrictOpenInterval,
    /// No location constraint beyond interlacing itself.
    WholeLine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessSide {
    Lower,
    Upper,
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessEntry {
    pub side: WitnessSide,
    pub position: f64,
}

/// Outcome of a successful interlacing certification.
#[derive(Debug, Clone, Serialize)]
pub struct InterlacingReport {
    pub lower_count: usize,
    pub upper_count: usize,
    /// One of the lists was empty, so the interlacing statement is
    /// vacuous at this step (happens in the degenerate degree pattern).
    pub vacuous: bool,
    pub refinement_steps: usize,
    pub witness: Vec<WitnessEntry>,
}

/// Certifies that the roots of `lower` and `upper` strictly interlace.
///
/// Both lists are refined (re-bisected) until every root location of
/// one list is disjoint from every location of the other; the merged
/// order must then alternate sides, beginning and ending with `upper`,
/// which therefore must hold exactly one more root. An empty list makes
/// the claim vacuous and is reported as such.
pub fn check_interlacing(
    lower: &mut RootList,
    upper: &mut RootList,
    mode: InterlacingMode,
) -> Result<InterlacingReport, RootError> {
    if lower.count() == 0 || upper.count() == 0 {
        return Ok(InterlacingReport {
            lower_count: lower.count(),
            upper_count: upper.count(),
            vacuous: true,
            refinement_steps: 0,
            witness: Vec::new(),
        });
    }
    for r in lower.exact_roots() {
        if upper.exact_roots().any(|s| s == r) {
            return Err(RootError::InterlacingViolated {
                detail: format!("common root at {}", rat_string(r)),
            });
        }
    }
    if upper.count() != lower.count() + 1 {
        return Err(RootError::InterlacingViolated {
            detail: format!(
                "root counts {} and {} cannot strictly alternate",
                lower.count(),
                upper.count()
            ),
        });
    }

    let mut refinement_steps = 0usize;
    let lower_total = lower.count();
    let mut budgets = vec![0usize; lower_total + upper.count()];
    while let Some((lower_idx, upper_idx)) = find_unordered_pair(lower, upper) {
        if let (RootLocation::Exact(r), RootLocation::Exact(_)) =
            (&lower.locations[lower_idx], &upper.locations[upper_idx])
        {
            // refinement can surface a shared rational root late
            return Err(RootError::InterlacingViolated {
                detail: format!("common root at {}", rat_string(r)),
            });
        }
        let mut progressed = false;
        if budgets[lower_idx] < REFINEMENT_CAP && lower.refine_once(lower_idx) {
            budgets[lower_idx] += 1;
            refinement_steps += 1;
            progressed = true;
        }
        if budgets[lower_total + upper_idx] < REFINEMENT_CAP && upper.refine_once(upper_idx) {
            budgets[lower_total + upper_idx] += 1;
            refinement_steps += 1;
            progressed = true;
        }
        if !progressed {
            return Err(RootError::RefinementBudgetExceeded {
                budget: REFINEMENT_CAP,
            });
        }
    }

    // merged order is now well defined
    let mut merged: Vec<(WitnessSide, &RootLocation)> = lower
        .locations
        .iter()
        .map(|loc| (WitnessSide::Lower, loc))
        .chain(upper.locations.iter().map(|loc| (WitnessSide::Upper, loc)))
        .collect();
    merged.sort_by(|a, b| position_order(a.1, b.1));

    for pair in merged.windows(2) {
        if pair[0].0 == pair[1].0 {
            return Err(RootError::InterlacingViolated {
                detail: format!(
                    "adjacent roots from the same polynomial near {} and {}",
                    rat_string(pair[0].1.lo()),
                    rat_string(pair[1].1.lo())
                ),
            });
        }
    }
    debug_assert_eq!(merged.first().map(|e| e.0), Some(WitnessSide::Upper));
    debug_assert_eq!(merged.last().map(|e| e.0), Some(WitnessSide::Upper));

    if mode == InterlacingMode::StrictOpenInterval {
        let one = Rational::from_integer(BigInt::from(1));
        for (_, loc) in &merged {
            if loc.lo() < &(-&one) || loc.hi() > &one {
                return Err(RootError::InterlacingViolated {
                    detail: format!(
                        "root location [{}, {}] escapes (-1, 1)",
                        rat_string(loc.lo()),
                        rat_string(loc.hi())
                    ),
                });
            }
        }
    }

    let witness = merged
        .iter()
        .map(|(side, loc)| WitnessEntry {
            side: *side,
            position: loc.midpoint_f64(),
        })
        .collect();
    Ok(InterlacingReport {
        lower_count: lower.count(),
        upper_count: upper.count(),
        vacuous: false,
        refinement_steps,
        witness,
    })
}

/// First cross-list pair whose root positions cannot yet be ordered.
fn find_unordered_pair(lower: &RootList, upper: &RootList) -> Option<(usize, usize)> {
    for (i, a) in lower.locations.iter().enumerate() {
        for (j, b) in upper.locations.iter().enumerate() {
            let ordered = match (a, b) {
                (RootLocation::Exact(r), RootLocation::Exact(s)) => r != s,
                (RootLocation::Exact(r), RootLocation::Bracketed(iv)) => {
                    !(&iv.lo < r && r < &iv.hi)
                }
                (RootLocation::Bracketed(iv), RootLocation::Exact(r)) => {
                    !(&iv.lo < r && r < &iv.hi)
                }
                (RootLocation::Bracketed(a), RootLocation::Bracketed(b)) => {
                    a.hi <= b.lo || b.hi <= a.lo
                }
            };
            if !ordered {
                return Some((i, j));
            }
        }
    }
    None
}
