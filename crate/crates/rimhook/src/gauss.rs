//! Gauss-Legendre nodes and weights on [-1, 1], by Newton iteration on the
//! Legendre recurrence.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    static CACHE: OnceLock<Mutex<HashMap<usize, (Vec<f64>, Vec<f64>)>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return hit.clone();
    }
    let rule = compute(n);
    cache.lock().unwrap().insert(n, rule.clone());
    rule
}

fn compute(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n {
        // Chebyshev-like initial guess, then Newton
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre(n, x);
            dp = d;
            let step = p / d;
            x -= step;
            if step.abs() < 1e-15 {
                break;
            }
        }
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    nodes.reverse();
    weights.reverse();
    (nodes, weights)
}

/// P_n(x) and P_n'(x) via the three-term recurrence.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Integrates `f` over [a, b] with one n-point panel.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, n: usize) -> f64 {
    let (nodes, weights) = gauss_legendre(n);
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    nodes
        .iter()
        .zip(&weights)
        .map(|(&x, &w)| w * f(mid + half * x))
        .sum::<f64>()
        * half
}

/// Composite rule: `panels` equal panels of an n-point rule.
pub fn integrate_composite<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    n: usize,
    panels: usize,
) -> f64 {
    let width = (b - a) / panels as f64;
    (0..panels)
        .map(|p| {
            let lo = a + p as f64 * width;
            integrate(&f, lo, lo + width, n)
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_order_rules_are_exact_on_polynomials() {
        // n-point rule integrates degree 2n-1 exactly; the odd power
        // contributes zero, the constant contributes 2
        for n in 1..=8 {
            let deg = (2 * n - 1) as i32;
            let value = integrate(|x| x.powi(deg) + 1.0, -1.0, 1.0, n);
            assert!((value - 2.0).abs() < 1e-13, "n={n}");
        }
        // and even powers: x^2 over [-1,1] is 2/3 with n >= 2
        let value = integrate(|x| x * x, -1.0, 1.0, 2);
        assert!((value - 2.0 / 3.0).abs() < 1e-14);
    }

    #[test]
    fn nodes_are_symmetric_and_weights_sum_to_two() {
        for n in [16, 32, 64, 128] {
            let (nodes, weights) = gauss_legendre(n);
            let wsum: f64 = weights.iter().sum();
            assert!((wsum - 2.0).abs() < 1e-12);
            for i in 0..n {
                assert!((nodes[i] + nodes[n - 1 - i]).abs() < 1e-12);
            }
            for w in weights {
                assert!(w > 0.0);
            }
        }
    }

    #[test]
    fn integrates_smooth_functions() {
        let value = integrate(|x| x.exp(), 0.0, 1.0, 20);
        assert!((value - (1f64.exp() - 1.0)).abs() < 1e-14);
        let value = integrate_composite(|x| x.sin(), 0.0, std::f64::consts::PI, 10, 8);
        assert!((value - 2.0).abs() < 1e-13);
    }
}
