//! Exact and simulated distributions of the one-dimensional elephant
//! random walk (first step symmetric, memory parameter `a = 2p - 1`).
//!
//! The conditional step law is
//! `P(X_{m+1} = +1 | history) = (1 + a S_m / m) / 2`, which makes the
//! pair (time, position) Markov; three independent constructions of the
//! law of `S_n` are provided (forward DP, characteristic-function
//! extraction, path enumeration) plus closed forms for the four special
//! memory values.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::combinatorics::{binomial_rational, EulerianTable};
use crate::elephant::elephant_poly;
use crate::laurent::cos_substitution;
use crate::rational::{rat, rat_int, rat_string, rat_to_f64, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ErwError {
    #[error("memory parameter a = {a} outside [-1, 1]: transition probabilities leave [0, 1]")]
    InvalidMemory { a: String },
    #[error("characteristic-function coefficient at k = {k} is negative")]
    NegativeCoefficient { k: i64 },
    #[error("k = {k} has wrong parity for time n = {n}")]
    ParityViolation { n: usize, k: i64 },
    #[error("k = {k} outside the support at time n = {n}")]
    SupportViolation { n: usize, k: i64 },
    #[error("path enumeration is capped at n = {cap} (requested {n})")]
    SizeCapExceeded { n: usize, cap: usize },
}

/// Validated walk parameters: `|a| <= 1`, first step parameter fixed at 1/2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ErwParams {
    a: Rational,
}

impl ErwParams {
    pub fn new(a: Rational) -> Result<Self, ErwError> {
        if a.abs() > rat_int(1) {
            return Err(ErwError::InvalidMemory { a: rat_string(&a) });
        }
        Ok(ErwParams { a })
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    /// The memory probability `p = (1 + a) / 2`.
    pub fn p(&self) -> Rational {
        (&self.a + rat_int(1)) / rat_int(2)
    }
}

/// Exact probability mass function of `S_n` on `{-n, ..., n}`.
///
/// Only nonzero masses are stored; the support respects the parity of
/// `n`, the masses are nonnegative, sum to exactly 1, and are symmetric
/// in `k` (the first step is unbiased).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistributionTable {
    n: usize,
    probs: BTreeMap<i64, Rational>,
}

impl DistributionTable {
    /// Builds a table from raw masses; explicit zeros are dropped.
    pub fn from_probs(n: usize, probs: BTreeMap<i64, Rational>) -> Self {
        let probs = probs.into_iter().filter(|(_, p)| !p.is_zero()).collect();
        DistributionTable { n, probs }
    }

    pub fn time(&self) -> usize {
        self.n
    }

    pub fn prob(&self, k: i64) -> Rational {
        self.probs.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.probs.iter().map(|(k, p)| (*k, p))
    }

    pub fn support(&self) -> Vec<i64> {
        self.probs.keys().copied().collect()
    }

    /// Checks every structural invariant, returning the first violation.
    pub fn validate(&self) -> Result<(), String> {
        let mut total = Rational::zero();
        for (k, p) in &self.probs {
            if p.is_negative() {
                return Err(format!("negative mass at k = {k}"));
            }
            if (k.rem_euclid(2)) as usize != self.n % 2 {
                return Err(format!("parity violation at k = {k}"));
            }
            if k.unsigned_abs() as usize > self.n {
                return Err(format!("support escapes [-n, n] at k = {k}"));
            }
            if self.prob(-k) != *p {
                return Err(format!("asymmetry at k = {k}"));
            }
            total += p;
        }
        if !total.is_one() {
            return Err(format!("total mass {} instead of 1", rat_string(&total)));
        }
        Ok(())
    }

    /// Exact total-variation distance to another exact table.
    pub fn tv_exact(&self, other: &DistributionTable) -> Rational {
        let mut keys: Vec<i64> = self.probs.keys().chain(other.probs.keys()).copied().collect();
        keys.sort_unstable();
        keys.dedup();
        let mut sum = Rational::zero();
        for k in keys {
            sum += (self.prob(k) - other.prob(k)).abs();
        }
        sum / rat_int(2)
    }

    /// Total-variation distance to an empirical frequency table.
    pub fn tv_distance_empirical(&self, empirical: &EmpiricalTable) -> f64 {
        let mut keys: Vec<i64> = self.probs.keys().copied().collect();
        keys.extend(empirical.counts.keys().copied());
        keys.sort_unstable();
        keys.dedup();
        let mut sum = 0.0;
        for k in keys {
            sum += (rat_to_f64(&self.prob(k)) - empirical.freq(k)).abs();
        }
        sum / 2.0
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,prob_num,prob_den,prob_float\n");
        for (k, p) in &self.probs {
            out.push_str(&format!(
                "{k},{},{},{}\n",
                p.numer(),
                p.denom(),
                rat_to_f64(p)
            ));
        }
        out
    }

    pub fn to_json_rows(&self) -> Vec<DistRow> {
        self.probs
            .iter()
            .map(|(k, p)| DistRow {
                k: *k,
                prob_num: p.numer().to_string(),
                prob_den: p.denom().to_string(),
                prob_float: rat_to_f64(p),
            })
            .collect()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DistRow {
    pub k: i64,
    pub prob_num: String,
    pub prob_den: String,
    pub prob_float: f64,
}

/// Law of `S_n` by exact forward dynamic programming over
/// (time, position).
pub fn exact_distribution_dp(n: usize, params: &ErwParams) -> DistributionTable {
    assert!(n >= 1);
    let a = params.a();
    let half = rat(1, 2);
    let mut probs: BTreeMap<i64, Rational> = BTreeMap::new();
    probs.insert(1, half.clone());
    probs.insert(-1, half.clone());
    for m in 1..n {
        let m_rat = rat_int(m as i64);
        let mut next: BTreeMap<i64, Rational> = BTreeMap::new();
        for (s, p) in &probs {
            let drift = a * rat_int(*s) / &m_rat;
            let up = &half * (rat_int(1) + &drift);
            let down = &half * (rat_int(1) - &drift);
            debug_assert!(!up.is_negative() && !down.is_negative());
            if !up.is_zero() {
                *next.entry(s + 1).or_insert_with(Rational::zero) += p * up;
            }
            if !down.is_zero() {
                *next.entry(s - 1).or_insert_with(Rational::zero) += p * down;
            }
        }
        probs = next;
    }
    DistributionTable::from_probs(n, probs)
}

/// Law of `S_n` read off the characteristic function: the coefficient
/// of `z^k` in `R_n((z + 1/z)/2)` is `P(S_n = k)`.
pub fn distribution_from_charfun(
    n: usize,
    params: &ErwParams,
) -> Result<DistributionTable, ErwError> {
    assert!(n >= 1);
    let fourier = cos_substitution(&elephant_poly(n, params.a()));
    let mut probs = BTreeMap::new();
    for (k, c) in fourier.iter() {
        if c.is_negative() {
            return Err(ErwError::NegativeCoefficient { k });
        }
        probs.insert(k, c.clone());
    }
    Ok(DistributionTable::from_probs(n, probs))
}

/// Law of `S_n` by enumerating all `2^n` sign paths with their exact
/// conditional probabilities. Capped at `n <= 14`.
pub fn brute_force_distribution(
    n: usize,
    params: &ErwParams,
) -> Result<DistributionTable, ErwError> {
    const CAP: usize = 14;
    assert!(n >= 1);
    if n > CAP {
        return Err(ErwError::SizeCapExceeded { n, cap: CAP });
    }
    let a = params.a();
    let half = rat(1, 2);
    let mut probs: BTreeMap<i64, Rational> = BTreeMap::new();
    for mask in 0u32..(1u32 << n) {
        let mut weight = half.clone();
        let mut position: i64 = if mask & 1 == 1 { 1 } else { -1 };
        let mut valid = true;
        for m in 1..n {
            let step_up = (mask >> m) & 1 == 1;
            let drift = a * rat_int(position) / rat_int(m as i64);
            let p_step = if step_up {
                &half * (rat_int(1) + &drift)
            } else {
                &half * (rat_int(1) - &drift)
            };
            if p_step.is_zero() {
                valid = false;
                break;
            }
            weight *= p_step;
            position += if step_up { 1 } else { -1 };
        }
        if valid {
            *probs.entry(position).or_insert_with(Rational::zero) += weight;
        }
    }
    Ok(DistributionTable::from_probs(n, probs))
}

/// The four memory values with classical closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedFormCase {
    /// `p = 0` (`a = -1`): Eulerian numbers.
    PZero,
    /// `p = 1/4` (`a = -1/2`): halved binomial lattice.
    PQuarter,
    /// `p = 1/2` (`a = 0`): simple random walk.
    PHalf,
    /// `p = 1` (`a = 1`): two-point law at the extremes.
    POne,
}

impl ClosedFormCase {
    pub fn a(self) -> Rational {
        match self {
            ClosedFormCase::PZero => rat_int(-1),
            ClosedFormCase::PQuarter => rat(-1, 2),
            ClosedFormCase::PHalf => rat_int(0),
            ClosedFormCase::POne => rat_int(1),
        }
    }

    pub fn from_a(a: &Rational) -> Option<Self> {
        [
            ClosedFormCase::PZero,
            ClosedFormCase::PQuarter,
            ClosedFormCase::PHalf,
            ClosedFormCase::POne,
        ]
        .into_iter()
        .find(|case| case.a() == *a)
    }
}

/// The closed-form value of `P(S_n = k)` for the given special case.
pub fn closed_form_dist(n: usize, k: i64, case: ClosedFormCase) -> Result<Rational, ErwError> {
    assert!(n >= 1);
    if k.rem_euclid(2) as usize != n % 2 {
        return Err(ErwError::ParityViolation { n, k });
    }
    let in_range = |limit: i64| k.abs() <= limit;
    match case {
        ClosedFormCase::PQuarter => {
            // C(2n, n+k) / 2^{2n-1}
            if !in_range(n as i64) {
                return Err(ErwError::SupportViolation { n, k });
            }
            let num = binomial_rational(2 * n, (n as i64 + k) as usize);
            Ok(num / Rational::from_integer(BigInt::from(2u32).pow((2 * n - 1) as u32)))
        }
        ClosedFormCase::PZero => {
            // A(n-1, (n+k)/2) / (n-1)!  for n >= 2, |k| <= n-2
            if n < 2 || !in_range(n as i64 - 2) {
                return Err(ErwError::SupportViolation { n, k });
            }
            let idx = ((n as i64 + k) / 2) as usize;
            let table = EulerianTable::with_rows(n - 1);
            let mut fact = BigInt::one();
            for j in 2..n {
                fact *= BigInt::from(j);
            }
            Ok(Rational::new(table.value(n - 1, idx).clone(), fact))
        }
        ClosedFormCase::PHalf => {
            if !in_range(n as i64) {
                return Err(ErwError::SupportViolation { n, k });
            }
            let num = binomial_rational(n, ((n as i64 + k) / 2) as usize);
            Ok(num / Rational::from_integer(BigInt::from(2u32).pow(n as u32)))
        }
        ClosedFormCase::POne => {
            if !in_range(n as i64) {
                return Err(ErwError::SupportViolation { n, k });
            }
            if k.unsigned_abs() as usize == n {
                Ok(rat(1, 2))
            } else {
                Ok(Rational::zero())
            }
        }
    }
}

/// `P(S_time = 0)` exactly; odd times vanish identically.
pub fn return_probability(time: usize, params: &ErwParams) -> Rational {
    assert!(time >= 1);
    if time % 2 == 1 {
        return Rational::zero();
    }
    exact_distribution_dp(time, params).prob(0)
}

/// Name of the deterministic generator used by the simulators.
pub const RNG_NAME: &str = "chacha8";

/// Monte Carlo settings. The same `(samples, seed)` against the same
/// walk reproduces output bit for bit: trajectory `i` draws from a
/// ChaCha8 stream keyed by `seed` with stream index `i`, so the result
/// is independent of thread scheduling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct McConfig {
    pub samples: usize,
    pub seed: u64,
}

/// Empirical endpoint frequencies from simulation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmpiricalTable {
    n: usize,
    samples: u64,
    counts: BTreeMap<i64, u64>,
}

impl EmpiricalTable {
    pub fn time(&self) -> usize {
        self.n
    }

    pub fn samples(&self) -> u64 {
        self.samples
    }

    pub fn count(&self, k: i64) -> u64 {
        self.counts.get(&k).copied().unwrap_or(0)
    }

    pub fn freq(&self, k: i64) -> f64 {
        self.count(k) as f64 / self.samples as f64
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.counts.iter().map(|(k, c)| (*k, *c))
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,count,freq\n");
        for (k, c) in &self.counts {
            out.push_str(&format!("{k},{c},{}\n", *c as f64 / self.samples as f64));
        }
        out
    }

    pub fn to_json_rows(&self) -> Vec<EmpiricalRow> {
        self.counts
            .iter()
            .map(|(k, c)| EmpiricalRow {
                k: *k,
                count: *c,
                freq: *c as f64 / self.samples as f64,
            })
            .collect()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EmpiricalRow {
    pub k: i64,
    pub count: u64,
    pub freq: f64,
}

fn trajectory_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// One trajectory by the literal mechanism: store the step history,
/// pick a uniform past time, copy its step with probability `p`.
pub fn sample_trajectory(n: usize, p: f64, rng: &mut ChaCha8Rng) -> i64 {
    let mut steps: Vec<i8> = Vec::with_capacity(n);
    steps.push(if rng.gen_bool(0.5) { 1 } else { -1 });
    for m in 1..n {
        let k = rng.gen_range(0..m);
        let copy = rng.gen_bool(p);
        let step = if copy { steps[k] } else { -steps[k] };
        steps.push(step);
    }
    steps.iter().map(|&s| s as i64).sum()
}

/// Simulates the walk by the history mechanism; deterministic under a
/// fixed [`McConfig`] and parallelized across trajectories.
pub fn simulate(n: usize, params: &ErwParams, cfg: &McConfig) -> EmpiricalTable {
    assert!(n >= 1 && cfg.samples >= 1);
    let p = rat_to_f64(&params.p());
    let counts = (0..cfg.samples as u64)
        .into_par_iter()
        .fold(BTreeMap::new, |mut acc: BTreeMap<i64, u64>, i| {
            let mut rng = trajectory_rng(cfg.seed, i);
            *acc.entry(sample_trajectory(n, p, &mut rng)).or_insert(0) += 1;
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, c) in b {
                *a.entry(k).or_insert(0) += c;
            }
            a
        });
    EmpiricalTable {
        n,
        samples: cfg.samples as u64,
        counts,
    }
}

/// Simulates via the equivalent conditional-law shortcut (only the
/// current position is tracked). Kept as an internal consistency twin
/// for [`simulate`].
pub fn simulate_shortcut(n: usize, params: &ErwParams, cfg: &McConfig) -> EmpiricalTable {
    assert!(n >= 1 && cfg.samples >= 1);
    let a = rat_to_f64(params.a());
    let counts = (0..cfg.samples as u64)
        .into_par_iter()
        .fold(BTreeMap::new, |mut acc: BTreeMap<i64, u64>, i| {
            let mut rng = trajectory_rng(cfg.seed, i);
            let mut s: i64 = if rng.gen_bool(0.5) { 1 } else { -1 };
            for m in 1..n {
                let up = (0.5 * (1.0 + a * s as f64 / m as f64)).clamp(0.0, 1.0);
                s += if rng.gen_bool(up) { 1 } else { -1 };
            }
            *acc.entry(s).or_insert(0) += 1;
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, c) in b {
                *a.entry(k).or_insert(0) += c;
            }
            a
        });
    EmpiricalTable {
        n,
        samples: cfg.samples as u64,
        counts,
    }
}

/// Raw per-trajectory endpoints in trajectory order (the sample stream
/// behind [`simulate`]).
pub fn simulate_endpoints(n: usize, params: &ErwParams, cfg: &McConfig) -> Vec<i64> {
    assert!(n >= 1 && cfg.samples >= 1);
    let p = rat_to_f64(&params.p());
    (0..cfg.samples as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = trajectory_rng(cfg.seed, i);
            sample_trajectory(n, p, &mut rng)
        })
        .collect()
}

/// Evaluates the characteristic function at the diffusive scaling point:
/// `R_n(cos(t / sqrt(n)))`, with the polynomial built exactly and the
/// evaluation done in floating point. Converges to `exp(-t^2/2)` in the
/// sub-critical regime.
pub fn clt_probe(n: usize, params: &ErwParams, t: f64) -> f64 {
    assert!(n >= 1);
    let poly = elephant_poly(n, params.a());
    poly.eval_f64((t / (n as f64).sqrt()).cos())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(num: i64, den: i64) -> ErwParams {
        ErwParams::new(rat(num, den)).unwrap()
    }

    #[test]
    fn rejects_invalid_memory() {
        assert!(ErwParams::new(rat(3, 2)).is_err());
        assert!(ErwParams::new(rat(-5, 4)).is_err());
        assert!(ErwParams::new(rat_int(1)).is_ok());
        assert!(ErwParams::new(rat_int(-1)).is_ok());
    }

    #[test]
    fn dp_small_cases() {
        // n = 2: P(S_2 = +-2) = (1+a)/4, P(S_2 = 0) = (1-a)/2
        let table = exact_distribution_dp(2, &params(1, 3));
        assert_eq!(table.prob(2), rat(1, 3));
        assert_eq!(table.prob(-2), rat(1, 3));
        assert_eq!(table.prob(0), rat(1, 3));
        // a = -1/2: P(S_2 = 0) = 3/4
        let table = exact_distribution_dp(2, &params(-1, 2));
        assert_eq!(table.prob(0), rat(3, 4));
        // a = 1: all mass at the extremes
        let table = exact_distribution_dp(7, &params(1, 1));
        assert_eq!(table.prob(7), rat(1, 2));
        assert_eq!(table.prob(-7), rat(1, 2));
        assert_eq!(table.prob(5), rat_int(0));
        table.validate().unwrap();
    }

    #[test]
    fn charfun_small_cases() {
        let table = distribution_from_charfun(2, &params(-1, 2)).unwrap();
        assert_eq!(table.prob(-2), rat(1, 8));
        assert_eq!(table.prob(0), rat(3, 4));
        assert_eq!(table.prob(2), rat(1, 8));
        let table = distribution_from_charfun(1, &params(7, 10)).unwrap();
        assert_eq!(table.prob(1), rat(1, 2));
        assert_eq!(table.prob(-1), rat(1, 2));
        // a = -1, n = 4: Eulerian row (1, 4, 1)/3!
        let table = distribution_from_charfun(4, &params(-1, 1)).unwrap();
        assert_eq!(table.prob(0), rat(2, 3));
        assert_eq!(table.prob(2), rat(1, 6));
        assert_eq!(table.prob(-2), rat(1, 6));
    }

    #[test]
    fn three_constructions_agree() {
        let grid = [
            rat_int(-1),
            rat(-3, 5),
            rat(-1, 4),
            rat_int(0),
            rat(2, 7),
            rat(1, 2),
            rat_int(1),
        ];
        for a in grid {
            let p = ErwParams::new(a.clone()).unwrap();
            for n in 1..=12 {
                let dp = exact_distribution_dp(n, &p);
                dp.validate().unwrap();
                let cf = distribution_from_charfun(n, &p).unwrap();
                let bf = brute_force_distribution(n, &p).unwrap();
                assert_eq!(dp, cf, "dp vs charfun n={n} a={a}");
                assert_eq!(dp, bf, "dp vs brute n={n} a={a}");
            }
        }
    }

    #[test]
    fn brute_force_cap() {
        assert_eq!(
            brute_force_distribution(15, &params(0, 1)).unwrap_err(),
            ErwError::SizeCapExceeded { n: 15, cap: 14 }
        );
    }

    #[test]
    fn closed_forms_match_dp() {
        for n in 1..=20usize {
            let quarter = params(-1, 2);
            let dp = exact_distribution_dp(n, &quarter);
            for k in (-(n as i64)..=n as i64).filter(|k| k.rem_euclid(2) as usize == n % 2) {
                assert_eq!(
                    closed_form_dist(n, k, ClosedFormCase::PQuarter).unwrap(),
                    dp.prob(k),
                    "p=1/4 n={n} k={k}"
                );
            }
        }
        for n in 2..=20usize {
            let zero_p = params(-1, 1);
            let dp = exact_distribution_dp(n, &zero_p);
            for k in (-(n as i64)..=n as i64).filter(|k| k.rem_euclid(2) as usize == n % 2) {
                if k.abs() <= n as i64 - 2 {
                    assert_eq!(
                        closed_form_dist(n, k, ClosedFormCase::PZero).unwrap(),
                        dp.prob(k),
                        "p=0 n={n} k={k}"
                    );
                } else {
                    assert!(dp.prob(k).is_zero(), "mass outside support n={n} k={k}");
                }
            }
        }
        // simple random walk and the frozen p=1 law
        assert_eq!(
            closed_form_dist(3, 1, ClosedFormCase::PHalf).unwrap(),
            rat(3, 8)
        );
        assert_eq!(closed_form_dist(1, 1, ClosedFormCase::PQuarter).unwrap(), rat(1, 2));
        assert_eq!(closed_form_dist(4, 0, ClosedFormCase::PZero).unwrap(), rat(2, 3));
        assert_eq!(closed_form_dist(5, 5, ClosedFormCase::POne).unwrap(), rat(1, 2));
        assert_eq!(closed_form_dist(5, 3, ClosedFormCase::POne).unwrap(), rat_int(0));
    }

    #[test]
    fn closed_form_rejects_bad_arguments() {
        assert_eq!(
            closed_form_dist(4, 1, ClosedFormCase::PQuarter).unwrap_err(),
            ErwError::ParityViolation { n: 4, k: 1 }
        );
        assert_eq!(
            closed_form_dist(4, 4, ClosedFormCase::PZero).unwrap_err(),
            ErwError::SupportViolation { n: 4, k: 4 }
        );
        assert_eq!(
            closed_form_dist(4, 6, ClosedFormCase::PHalf).unwrap_err(),
            ErwError::SupportViolation { n: 4, k: 6 }
        );
    }

    #[test]
    fn return_probabilities() {
        assert_eq!(return_probability(3, &params(2, 5)), rat_int(0));
        // a = -1/2, time 4: C(8,4)/2^7 = 35/64
        assert_eq!(return_probability(4, &params(-1, 2)), rat(35, 64));
        // a = -1, time 4: 2/3
        assert_eq!(return_probability(4, &params(-1, 1)), rat(2, 3));
    }

    #[test]
    fn simulation_is_reproducible_and_concentrates_at_p_one() {
        let cfg = McConfig { samples: 1000, seed: 7 };
        let one = params(1, 1);
        let emp = simulate(5, &one, &cfg);
        assert_eq!(emp.count(5) + emp.count(-5), 1000);
        let emp2 = simulate(5, &one, &cfg);
        assert_eq!(emp, emp2);
        let endpoints = simulate_endpoints(5, &one, &cfg);
        assert!(endpoints.iter().all(|&s| s.abs() == 5));
    }

    #[test]
    fn simulation_recovers_the_binomial_law_at_zero_memory() {
        let cfg = McConfig {
            samples: 1_000_000,
            seed: 1,
        };
        let p = params(0, 1);
        let emp = simulate(20, &p, &cfg);
        let tv = exact_distribution_dp(20, &p).tv_distance_empirical(&emp);
        assert!(tv < 0.01, "tv {tv}");
    }

    #[test]
    fn history_and_shortcut_samplers_agree_in_law() {
        let cfg = McConfig { samples: 200_000, seed: 11 };
        let p = params(2, 5);
        let exact = exact_distribution_dp(12, &p);
        let hist = simulate(12, &p, &cfg);
        let short = simulate_shortcut(12, &p, &cfg);
        assert!(exact.tv_distance_empirical(&hist) < 0.01);
        assert!(exact.tv_distance_empirical(&short) < 0.01);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        prop_compose! {
            fn arb_memory()(num in -12i64..=12, den in 12i64..=24) -> Rational {
                rat(num, den) // |a| <= 1 by construction
            }
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]
            #[test]
            fn random_memory_laws_are_valid_and_construction_independent(
                a in arb_memory(), n in 1usize..=10
            ) {
                let params = ErwParams::new(a).unwrap();
                let dp = exact_distribution_dp(n, &params);
                prop_assert!(dp.validate().is_ok());
                prop_assert_eq!(&dp, &distribution_from_charfun(n, &params).unwrap());
                prop_assert_eq!(&dp, &brute_force_distribution(n, &params).unwrap());
            }
        }
    }

    #[test]
    fn clt_probe_normalization() {
        // t = 0 hits R_n(1) = 1 (exact for monomials, rounded through
        // f64 Horner for coefficients of mixed sign)
        assert_eq!(clt_probe(25, &params(0, 1), 0.0), 1.0);
        assert!((clt_probe(25, &params(3, 4), 0.0) - 1.0).abs() < 1e-9);
    }

    #[test]
    fn clt_probe_approaches_gaussian_at_larger_argument() {
        let gap = (clt_probe(10_000, &params(0, 1), 2.0) - (-2.0f64).exp()).abs();
        assert!(gap < 1e-2, "gap {gap}");
    }
}
