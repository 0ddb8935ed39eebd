//! The Plancherel distribution on m-tuples of Young diagrams, exact
//! rational distributions of the colored LIS length, and the Monte Carlo
//! harness for its scaled limit.
//!
//! Exact distributions use rational arithmetic end to end; floats appear
//! only when a CDF is exported or compared against the limit law.

use std::collections::BTreeMap;

use num::bigint::Sign;
use num::{BigInt, BigRational, BigUint, One, Signed, Zero};
use rand::Rng;

use crate::error::Error;
use crate::partitions::{dim_1, partitions_of};
use crate::permutations::{lis_colored, sample_colored};
use crate::quotient::{core_and_quotient, is_decomposable, PartitionTuple};
use crate::rng::{run_workers, split_count, worker_rng};
use crate::Result;

/// Guard for exact enumeration of diagrams with mn boxes.
pub const EXACT_BOX_LIMIT: usize = 40;

/// An exact probability mass function over integer values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactDistribution {
    pmf: BTreeMap<usize, BigRational>,
}

impl ExactDistribution {
    /// Builds a distribution from (value, mass) pairs, accumulating repeats.
    /// Fails unless the masses are nonnegative and sum to exactly 1.
    pub fn from_masses<I>(masses: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, BigRational)>,
    {
        let mut pmf: BTreeMap<usize, BigRational> = BTreeMap::new();
        for (value, mass) in masses {
            if mass.is_negative() {
                return Err(Error::invalid("distribution", "negative mass"));
            }
            *pmf.entry(value).or_insert_with(BigRational::zero) += mass;
        }
        pmf.retain(|_, mass| !mass.is_zero());
        let total: BigRational = pmf.values().cloned().sum();
        if !total.is_one() {
            return Err(Error::invalid(
                "distribution",
                format!("total mass {total} != 1"),
            ));
        }
        Ok(ExactDistribution { pmf })
    }

    /// Uniform empirical distribution of an exhaustive list of values.
    pub fn from_values<I>(values: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        let mut total = 0usize;
        for v in values {
            *counts.entry(v).or_insert(0) += 1;
            total += 1;
        }
        if total == 0 {
            return Err(Error::invalid("distribution", "no values"));
        }
        let denom = BigInt::from(total);
        Self::from_masses(counts.into_iter().map(|(v, c)| {
            (v, BigRational::new(BigInt::from(c), denom.clone()))
        }))
    }

    /// The probability of each value, ascending by value.
    pub fn pmf(&self) -> impl Iterator<Item = (usize, &BigRational)> {
        self.pmf.iter().map(|(&v, p)| (v, p))
    }

    /// P{X = value}.
    pub fn mass(&self, value: usize) -> BigRational {
        self.pmf.get(&value).cloned().unwrap_or_else(BigRational::zero)
    }

    /// P{X <= value}, exact.
    pub fn cdf_le(&self, value: usize) -> BigRational {
        self.pmf
            .range(..=value)
            .map(|(_, p)| p.clone())
            .sum()
    }

    pub fn min_value(&self) -> usize {
        *self.pmf.keys().next().expect("nonempty")
    }

    pub fn max_value(&self) -> usize {
        *self.pmf.keys().next_back().expect("nonempty")
    }
}

/// Exact Plancherel weight of an m-tuple with total size n:
/// `(m^n n!)^{-1} (n!/(n_1! ... n_m!))^2 dim_1^2(lambda_1) ... dim_1^2(lambda_m)`.
pub fn plancherel_weight(tuple: &PartitionTuple, n: usize) -> BigRational {
    assert_eq!(tuple.total_size(), n, "tuple size must equal n");
    let m = tuple.m();
    let mut multinomial = factorial(n);
    for &s in &tuple.sizes() {
        multinomial /= factorial(s);
    }
    let mut numerator = multinomial.clone() * multinomial;
    for comp in tuple.components() {
        let d = dim_1(comp);
        numerator *= d.clone() * d;
    }
    let denominator = BigUint::from(m).pow(n as u32) * factorial(n);
    ratio(numerator, denominator)
}

fn factorial(n: usize) -> BigUint {
    let mut f = BigUint::from(1u32);
    for k in 2..=n {
        f *= BigUint::from(k);
    }
    f
}

fn ratio(num: BigUint, den: BigUint) -> BigRational {
    BigRational::new(
        BigInt::from_biguint(Sign::Plus, num),
        BigInt::from_biguint(Sign::Plus, den),
    )
}

/// Sizes of the m components of a Plancherel-random tuple: a fair
/// multinomial sample, realized as n independent uniform color draws.
pub fn split_sizes<R: Rng + ?Sized>(n: usize, m: usize, rng: &mut R) -> Vec<usize> {
    assert!(m >= 1);
    let mut counts = vec![0usize; m];
    for _ in 0..n {
        counts[rng.random_range(0..m)] += 1;
    }
    counts
}

/// Exact distribution of the LIS length of a uniform m-colored permutation
/// of order n, computed by iterating the m-decomposable diagrams with mn
/// boxes and accumulating `(m^n n!)^{-1} dim_m^2(lambda)` at width(lambda).
///
/// Refuses when `mn` exceeds [`EXACT_BOX_LIMIT`]. Construction fails unless
/// the weights sum to exactly 1, so every successful call re-proves the
/// squared-dimension identity as a side effect.
pub fn exact_l_distribution(n: usize, m: usize) -> Result<ExactDistribution> {
    assert!(m >= 1);
    let boxes = m
        .checked_mul(n)
        .filter(|&b| b <= EXACT_BOX_LIMIT)
        .ok_or(Error::GuardExceeded {
            requested: m as u128 * n as u128,
            limit: EXACT_BOX_LIMIT as u128,
        })?;
    let denominator = BigUint::from(m).pow(n as u32) * factorial(n);
    let mut masses: Vec<(usize, BigRational)> = Vec::new();
    for lambda in partitions_of(boxes) {
        if !is_decomposable(&lambda, m) {
            continue;
        }
        let (_, quotient) = core_and_quotient(&lambda, m);
        let d = crate::quotient::dim_m_formula(&quotient);
        masses.push((lambda.width(), ratio(d.clone() * d, denominator.clone())));
    }
    ExactDistribution::from_masses(masses)
}

/// Which normalization the scaled LIS samples use.
///
/// Both describe the same limit statement and give identical KS statistics;
/// they differ only in where the factor m^{2/3} sits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scaling {
    /// `(L - 2 sqrt(mn)) / (m^{2/3} (mn)^{1/6})`; the limit CDF is F(x)^m.
    Abstract,
    /// `(L - 2 sqrt(mn)) / (mn)^{1/6}`; the limit CDF is F(m^{-2/3}x)^m.
    Theorem,
}

impl Scaling {
    /// Scales a raw LIS length.
    pub fn scale(&self, l: usize, n: usize, m: usize) -> f64 {
        let mn = (m * n) as f64;
        let centered = l as f64 - 2.0 * mn.sqrt();
        match self {
            Scaling::Abstract => centered / ((m as f64).powf(2.0 / 3.0) * mn.powf(1.0 / 6.0)),
            Scaling::Theorem => centered / mn.powf(1.0 / 6.0),
        }
    }

    /// The limit CDF paired with this scaling, expressed through the
    /// composite law G_m(y) = F(m^{-2/3} y)^m.
    pub fn limit_cdf(&self, tw: &crate::tracywidom::PainleveSolution, m: usize, x: f64) -> f64 {
        match self {
            Scaling::Abstract => tw.limit_cdf((m as f64).powf(2.0 / 3.0) * x, m),
            Scaling::Theorem => tw.limit_cdf(x, m),
        }
    }
}

/// An empirical distribution: sorted samples with a right-continuous step
/// CDF.
#[derive(Clone, Debug)]
pub struct EmpiricalDistribution {
    samples: Vec<f64>,
}

impl EmpiricalDistribution {
    pub fn from_samples(mut samples: Vec<f64>) -> Self {
        assert!(!samples.is_empty(), "need at least one sample");
        samples.sort_by(f64::total_cmp);
        EmpiricalDistribution { samples }
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Sorted sample values.
    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    /// Right-continuous empirical CDF.
    pub fn cdf(&self, x: f64) -> f64 {
        let idx = self.samples.partition_point(|&s| s <= x);
        idx as f64 / self.samples.len() as f64
    }

    /// Sup-norm distance between the empirical CDF and `cdf`, both evaluated
    /// at the sample points.
    pub fn ks_distance<F: Fn(f64) -> f64>(&self, cdf: F) -> f64 {
        let n = self.samples.len() as f64;
        let mut worst = 0.0f64;
        for (i, &x) in self.samples.iter().enumerate() {
            let last_of_tie = i + 1 == self.samples.len() || self.samples[i + 1] != x;
            if last_of_tie {
                let diff = ((i + 1) as f64 / n - cdf(x)).abs();
                worst = worst.max(diff);
            }
        }
        worst
    }
}

/// Draws `count` uniform m-colored permutations of order n and returns the
/// empirical distribution of the scaled LIS length. Deterministic for a
/// fixed generator state.
pub fn sample_scaled_l<R: Rng + ?Sized>(
    n: usize,
    m: usize,
    count: usize,
    scaling: Scaling,
    rng: &mut R,
) -> EmpiricalDistribution {
    let mut samples = Vec::with_capacity(count);
    for _ in 0..count {
        let pi = sample_colored(n, m, rng);
        samples.push(scaling.scale(lis_colored(&pi), n, m));
    }
    EmpiricalDistribution::from_samples(samples)
}

/// Parallel variant of [`sample_scaled_l`]: worker w draws its share from
/// ChaCha stream w of `master_seed`; the pooled result is identical for a
/// fixed (seed, workers) pair regardless of scheduling.
pub fn sample_scaled_l_par(
    n: usize,
    m: usize,
    count: usize,
    scaling: Scaling,
    master_seed: u64,
    workers: usize,
) -> EmpiricalDistribution {
    let shares = split_count(count, workers);
    let chunks = run_workers(workers, |w| {
        let mut rng = worker_rng(master_seed, w as u64);
        let mut part = Vec::with_capacity(shares[w]);
        for _ in 0..shares[w] {
            let pi = sample_colored(n, m, &mut rng);
            part.push(scaling.scale(lis_colored(&pi), n, m));
        }
        part
    });
    EmpiricalDistribution::from_samples(chunks.concat())
}

/// Per-color widths of `count` uniform colored permutations, each scaled as
/// `(l_p - 2 sqrt(n/m)) / (n/m)^{1/6}`. Row layout: one m-vector per draw.
pub fn joint_component_samples<R: Rng + ?Sized>(
    n: usize,
    m: usize,
    count: usize,
    rng: &mut R,
) -> Vec<Vec<f64>> {
    let nm = n as f64 / m as f64;
    let center = 2.0 * nm.sqrt();
    let denom = nm.powf(1.0 / 6.0);
    let mut rows = Vec::with_capacity(count);
    for _ in 0..count {
        let pi = sample_colored(n, m, rng);
        rows.push(
            pi.per_color_lis()
                .into_iter()
                .map(|l| (l as f64 - center) / denom)
                .collect(),
        );
    }
    rows
}

/// Parallel variant of [`joint_component_samples`] with the same
/// determinism contract as [`sample_scaled_l_par`].
pub fn joint_component_samples_par(
    n: usize,
    m: usize,
    count: usize,
    master_seed: u64,
    workers: usize,
) -> Vec<Vec<f64>> {
    let shares = split_count(count, workers);
    run_workers(workers, |w| {
        let mut rng = worker_rng(master_seed, w as u64);
        joint_component_samples(n, m, shares[w], &mut rng)
    })
    .concat()
}
