//! Haar-distributed unitary matrices and Monte Carlo estimates of the trace
//! moments that encode the exact LIS distributions.
//!
//! The sampler draws a complex Ginibre matrix, orthonormalizes it with
//! Householder reflections, and multiplies each column by the phase of the
//! corresponding triangular diagonal entry; the resulting law is exactly
//! Haar. Small dense sizes only (k up to a few dozen), so traces of powers
//! are accumulated by repeated multiplication.

use num::complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::rng::{run_workers, split_count, worker_rng};

/// A dense k x k complex matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix {
    k: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(k: usize) -> Self {
        ComplexMatrix {
            k,
            data: vec![Complex64::new(0.0, 0.0); k * k],
        }
    }

    pub fn identity(k: usize) -> Self {
        let mut m = Self::zeros(k);
        for i in 0..k {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    pub fn mul(&self, other: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.k, other.k);
        let k = self.k;
        let mut out = ComplexMatrix::zeros(k);
        for i in 0..k {
            for l in 0..k {
                let a = self[(i, l)];
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..k {
                    out[(i, j)] += a * other[(l, j)];
                }
            }
        }
        out
    }

    pub fn adjoint(&self) -> ComplexMatrix {
        let k = self.k;
        let mut out = ComplexMatrix::zeros(k);
        for i in 0..k {
            for j in 0..k {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.k).map(|i| self[(i, i)]).sum()
    }

    /// Frobenius norm of `self * self^* - I`; near machine precision for
    /// Haar samples.
    pub fn unitarity_residual(&self) -> f64 {
        let prod = self.mul(&self.adjoint());
        let mut sum = 0.0;
        for i in 0..self.k {
            for j in 0..self.k {
                let expect = if i == j { 1.0 } else { 0.0 };
                sum += (prod[(i, j)] - expect).norm_sqr();
            }
        }
        sum.sqrt()
    }
}

impl std::ops::Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.k + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.k + j]
    }
}

/// A Haar-distributed element of U(k).
pub fn haar_sample<R: Rng + ?Sized>(k: usize, rng: &mut R) -> ComplexMatrix {
    assert!(k >= 1);
    let mut a = ComplexMatrix::zeros(k);
    let scale = 0.5f64.sqrt();
    for i in 0..k {
        for j in 0..k {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            a[(i, j)] = Complex64::new(re * scale, im * scale);
        }
    }
    let (q, diag) = householder_qr(a);
    // phase correction: scale column j by r_jj / |r_jj|
    let mut u = q;
    for j in 0..k {
        let phase = diag[j] / diag[j].norm();
        for i in 0..k {
            u[(i, j)] *= phase;
        }
    }
    u
}

/// Householder QR. Returns Q (unitary) and the diagonal of R.
fn householder_qr(mut a: ComplexMatrix) -> (ComplexMatrix, Vec<Complex64>) {
    let k = a.dim();
    let mut q = ComplexMatrix::identity(k);
    for col in 0..k {
        // Householder vector for the trailing column segment
        let mut norm2 = 0.0;
        for i in col..k {
            norm2 += a[(i, col)].norm_sqr();
        }
        let norm = norm2.sqrt();
        if norm == 0.0 {
            continue;
        }
        let x0 = a[(col, col)];
        let phase = if x0.norm() == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            x0 / x0.norm()
        };
        // v = x + e^{i arg(x0)} ||x|| e_1 avoids cancellation
        let mut v = vec![Complex64::new(0.0, 0.0); k - col];
        v[0] = x0 + phase * norm;
        for i in col + 1..k {
            v[i - col] = a[(i, col)];
        }
        let vnorm2: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        if vnorm2 == 0.0 {
            continue;
        }
        let beta = 2.0 / vnorm2;
        // apply H = I - beta v v^* from the left to the trailing block of A
        for j in col..k {
            let mut dot = Complex64::new(0.0, 0.0);
            for i in col..k {
                dot += v[i - col].conj() * a[(i, j)];
            }
            let dot = dot * beta;
            for i in col..k {
                let adj = v[i - col] * dot;
                a[(i, j)] -= adj;
            }
        }
        // accumulate Q <- Q H (apply H from the right)
        for i in 0..k {
            let mut dot = Complex64::new(0.0, 0.0);
            for j in col..k {
                dot += q[(i, j)] * v[j - col];
            }
            let dot = dot * beta;
            for j in col..k {
                q[(i, j)] -= dot * v[j - col].conj();
            }
        }
    }
    let diag = (0..k).map(|i| a[(i, i)]).collect();
    (q, diag)
}

/// Trace of U^j by iterated multiplication.
pub fn trace_power(u: &ComplexMatrix, j: usize) -> Complex64 {
    assert!(j >= 1);
    let mut power = u.clone();
    for _ in 1..j {
        power = power.mul(u);
    }
    power.trace()
}

/// Monte Carlo mean with standard error.
#[derive(Clone, Copy, Debug)]
pub struct MomentEstimate {
    pub mean: f64,
    pub std_error: f64,
    pub samples: usize,
}

impl MomentEstimate {
    /// Signed deviation of the mean from `target` in standard-error units.
    /// With a zero standard error a nonzero deviation maps to infinity.
    pub fn z_score(&self, target: f64) -> f64 {
        let diff = self.mean - target;
        if self.std_error == 0.0 {
            if diff.abs() < 1e-9 {
                0.0
            } else {
                f64::INFINITY * diff.signum()
            }
        } else {
            diff / self.std_error
        }
    }
}

/// Streaming mean / variance accumulator (Welford), mergeable across
/// workers in a fixed order.
#[derive(Clone, Copy, Debug, Default)]
pub struct Welford {
    count: usize,
    mean: f64,
    m2: f64,
}

impl Welford {
    pub fn push(&mut self, x: f64) {
        self.count += 1;
        let delta = x - self.mean;
        self.mean += delta / self.count as f64;
        self.m2 += delta * (x - self.mean);
    }

    pub fn merge(&mut self, other: &Welford) {
        if other.count == 0 {
            return;
        }
        if self.count == 0 {
            *self = *other;
            return;
        }
        let total = self.count + other.count;
        let delta = other.mean - self.mean;
        self.mean += delta * other.count as f64 / total as f64;
        self.m2 += other.m2
            + delta * delta * (self.count as f64 * other.count as f64) / total as f64;
        self.count = total;
    }

    pub fn estimate(&self) -> MomentEstimate {
        let variance = if self.count > 1 {
            self.m2 / (self.count as f64 - 1.0)
        } else {
            0.0
        };
        MomentEstimate {
            mean: self.mean,
            std_error: (variance / self.count as f64).sqrt(),
            samples: self.count,
        }
    }
}

/// Monte Carlo estimate of `E |Tr(U^m)^n|^2` over Haar-distributed
/// U in U(k). The target value is `m^n n! P{L_n <= k}` for the LIS length
/// of a uniform m-colored permutation of order n.
pub fn moment_colored(
    k: usize,
    m: usize,
    n: usize,
    count: usize,
    master_seed: u64,
    workers: usize,
) -> MomentEstimate {
    moment_over_haar(k, count, master_seed, workers, move |u| {
        complex_pow(trace_power(u, m), n).norm_sqr()
    })
}

/// Monte Carlo estimate of `E |Tr(U^2)^n Tr(U)|^2`; the target is
/// `2^n n! P{L^odd_n <= k}` for signed permutations.
pub fn moment_odd(
    k: usize,
    n: usize,
    count: usize,
    master_seed: u64,
    workers: usize,
) -> MomentEstimate {
    moment_over_haar(k, count, master_seed, workers, move |u| {
        (complex_pow(trace_power(u, 2), n) * trace_power(u, 1)).norm_sqr()
    })
}

fn moment_over_haar<F>(
    k: usize,
    count: usize,
    master_seed: u64,
    workers: usize,
    statistic: F,
) -> MomentEstimate
where
    F: Fn(&ComplexMatrix) -> f64 + Sync,
{
    let shares = split_count(count, workers);
    let partials = run_workers(workers, |w| {
        let mut rng = worker_rng(master_seed, w as u64);
        let mut acc = Welford::default();
        for _ in 0..shares[w] {
            let u = haar_sample(k, &mut rng);
            acc.push(statistic(&u));
        }
        acc
    });
    let mut acc = Welford::default();
    for part in &partials {
        acc.merge(part);
    }
    acc.estimate()
}

fn complex_pow(z: Complex64, n: usize) -> Complex64 {
    let mut out = Complex64::new(1.0, 0.0);
    for _ in 0..n {
        out *= z;
    }
    out
}
