//! The m-core / m-quotient decomposition of Young diagrams, realizing the
//! rim hook lattice as the m-fold product of the Young lattice, together with
//! the two independent routes to the m-dimension (number of m-rim hook
//! tableaux): the closed multinomial formula over the quotient and the
//! memoized removal recursion.

use std::collections::HashMap;
use std::fmt;

use num::BigUint;

use crate::error::Error;
use crate::partitions::{dim_1, Partition};
use crate::Result;

/// An ordered m-tuple of Young diagrams: the quotient image of an
/// m-decomposable partition.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PartitionTuple {
    components: Vec<Partition>,
}

impl PartitionTuple {
    /// Builds a tuple; panics on an empty component list.
    pub fn new(components: Vec<Partition>) -> Self {
        assert!(!components.is_empty(), "tuple needs at least one component");
        PartitionTuple { components }
    }

    /// All-empty tuple with `m` slots.
    pub fn empty(m: usize) -> Self {
        PartitionTuple::new(vec![Partition::empty(); m])
    }

    pub fn m(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn component(&self, k: usize) -> &Partition {
        &self.components[k]
    }

    /// Sum of component sizes. The partition this tuple combines to has
    /// `m * total_size` boxes.
    pub fn total_size(&self) -> usize {
        self.components.iter().map(|p| p.size()).sum()
    }

    /// Component sizes `(|lambda_1|, ..., |lambda_m|)`.
    pub fn sizes(&self) -> Vec<usize> {
        self.components.iter().map(|p| p.size()).collect()
    }
}

impl fmt::Display for PartitionTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for c in &self.components {
            if !first {
                write!(f, ";")?;
            }
            write!(f, "{c}")?;
            first = false;
        }
        Ok(())
    }
}

/// Beta-numbers (first-column hook lengths of the zero-padded partition)
/// distributed over m runners. The pad count is the least multiple of m that
/// covers all rows, which pins the quotient component labeling: runner r
/// feeds component r+1.
pub struct Abacus {
    m: usize,
    /// Bead levels per runner, ascending. A bead at level q on runner r is
    /// the beta-number m*q + r.
    runners: Vec<Vec<usize>>,
}

impl Abacus {
    /// Distributes the beta-numbers of `lambda` over `m` runners.
    pub fn from_partition(lambda: &Partition, m: usize) -> Self {
        assert!(m >= 1);
        let rows = lambda.rows();
        let t = rows.len().div_ceil(m) * m;
        let mut runners = vec![Vec::new(); m];
        for i in 0..t {
            let beta = lambda.row(i) + (t - 1 - i);
            runners[beta % m].push(beta / m);
        }
        for r in &mut runners {
            r.sort_unstable();
        }
        Abacus { m, runners }
    }

    /// Reconstructs the partition whose beta-numbers these beads are.
    pub fn to_partition(&self) -> Partition {
        let mut betas: Vec<usize> = Vec::new();
        for (r, levels) in self.runners.iter().enumerate() {
            betas.extend(levels.iter().map(|&q| self.m * q + r));
        }
        partition_from_betas(&betas)
    }

    /// Whether every runner's beads occupy the lowest levels. Equivalent to
    /// the core being empty.
    pub fn is_flush(&self) -> bool {
        self.runners
            .iter()
            .all(|levels| levels.iter().enumerate().all(|(i, &q)| q == i))
    }

    /// The core: each runner's beads slid down to the lowest levels.
    pub fn core(&self) -> Partition {
        let mut betas = Vec::new();
        for (r, levels) in self.runners.iter().enumerate() {
            for q in 0..levels.len() {
                betas.push(self.m * q + r);
            }
        }
        partition_from_betas(&betas)
    }

    /// The quotient: runner r read as the beta-numbers of component r+1.
    pub fn quotient(&self) -> PartitionTuple {
        let components = self
            .runners
            .iter()
            .map(|levels| {
                let mut parts: Vec<usize> = levels
                    .iter()
                    .enumerate()
                    .map(|(i, &q)| q - i)
                    .filter(|&p| p > 0)
                    .collect();
                parts.sort_unstable_by(|a, b| b.cmp(a));
                Partition::new(parts)
            })
            .collect();
        PartitionTuple::new(components)
    }
}

fn partition_from_betas(betas: &[usize]) -> Partition {
    let mut bs = betas.to_vec();
    bs.sort_unstable_by(|a, b| b.cmp(a));
    let t = bs.len();
    let rows: Vec<usize> = bs
        .iter()
        .enumerate()
        .map(|(i, &b)| b - (t - 1 - i))
        .filter(|&r| r > 0)
        .collect();
    Partition::new(rows)
}

/// The m-core and m-quotient of `lambda`. The map is injective and satisfies
/// `|lambda| = |core| + m * total_size(quotient)`; for m = 1 the core is
/// empty and the quotient is `(lambda)` itself.
pub fn core_and_quotient(lambda: &Partition, m: usize) -> (Partition, PartitionTuple) {
    let abacus = Abacus::from_partition(lambda, m);
    (abacus.core(), abacus.quotient())
}

/// Whether `lambda` is reachable from the empty diagram by m-rim-hook
/// additions, i.e. has empty m-core.
pub fn is_decomposable(lambda: &Partition, m: usize) -> bool {
    if lambda.size() % m != 0 {
        return false;
    }
    Abacus::from_partition(lambda, m).is_flush()
}

/// Inverse of [`core_and_quotient`] on decomposable partitions: the unique
/// partition with empty m-core and the given quotient.
pub fn combine(quotient: &PartitionTuple) -> Partition {
    let m = quotient.m();
    // Each runner carries the same bead count s; any s covering the longest
    // component works, since adding a flush bead to every runner leaves the
    // quotient unchanged.
    let s = quotient
        .components()
        .iter()
        .map(|p| p.num_rows())
        .max()
        .unwrap()
        .max(1);
    let mut betas = Vec::with_capacity(m * s);
    for (r, comp) in quotient.components().iter().enumerate() {
        for i in 0..s {
            let level = comp.row(i) + (s - 1 - i);
            betas.push(m * level + r);
        }
    }
    partition_from_betas(&betas)
}

/// All partitions obtained from `lambda` by removing one m-rim hook (a
/// connected border strip of m boxes). Complete and duplicate-free.
///
/// Works directly on the diagram: a removable strip spanning rows i..=j eats
/// the suffix of each row, forcing `mu_k = lambda_{k+1} - 1` for i <= k < j
/// and leaving `mu_j = lambda_i + (j - i) - m` boxes in the bottom row.
pub fn removable_rim_hooks(lambda: &Partition, m: usize) -> Vec<Partition> {
    assert!(m >= 1);
    let rows = lambda.rows();
    let mut out = Vec::new();
    for i in 0..rows.len() {
        for j in i..rows.len() {
            let v = rows[i] as isize + (j - i) as isize - m as isize;
            let upper = rows[j] as isize - 1;
            if v > upper {
                break; // grows with j while the cap shrinks
            }
            let lower = if j + 1 < rows.len() { rows[j + 1] } else { 0 } as isize;
            if v < lower {
                continue;
            }
            let mut mu = Vec::with_capacity(rows.len());
            mu.extend_from_slice(&rows[..i]);
            for k in i..j {
                mu.push(rows[k + 1] - 1);
            }
            mu.push(v as usize);
            mu.extend_from_slice(&rows[j + 1..]);
            while mu.last() == Some(&0) {
                mu.pop();
            }
            out.push(Partition::new(mu));
        }
    }
    out
}

/// The m-dimension via the closed formula over the quotient: the multinomial
/// coefficient of the component sizes times the product of `dim_1` values.
/// Equals `dim_m(combine(quotient))`.
pub fn dim_m_formula(quotient: &PartitionTuple) -> BigUint {
    let sizes = quotient.sizes();
    let total: usize = sizes.iter().sum();
    let mut value = factorial(total);
    for &s in &sizes {
        value /= factorial(s);
    }
    for comp in quotient.components() {
        value *= dim_1(comp);
    }
    value
}

fn factorial(n: usize) -> BigUint {
    let mut f = BigUint::from(1u32);
    for k in 2..=n {
        f *= BigUint::from(k);
    }
    f
}

/// Memo for the removal recursion, reusable across calls with the same m.
/// The cache is bounded; entries beyond the cap are recomputed on demand.
pub struct DimMemo {
    m: usize,
    cache: HashMap<Partition, BigUint>,
    cap: usize,
}

impl DimMemo {
    pub fn new(m: usize) -> Self {
        assert!(m >= 1);
        DimMemo {
            m,
            cache: HashMap::new(),
            cap: 1 << 20,
        }
    }

    /// Number of m-rim-hook tableaux of shape `lambda`: counts removal chains
    /// down to the empty diagram. 0 when `lambda` is not m-decomposable.
    pub fn dim(&mut self, lambda: &Partition) -> BigUint {
        if lambda.is_empty() {
            return BigUint::from(1u32);
        }
        if lambda.size() % self.m != 0 {
            return BigUint::from(0u32);
        }
        if let Some(v) = self.cache.get(lambda) {
            return v.clone();
        }
        let mut total = BigUint::from(0u32);
        for mu in removable_rim_hooks(lambda, self.m) {
            total += self.dim(&mu);
        }
        if self.cache.len() < self.cap {
            self.cache.insert(lambda.clone(), total.clone());
        }
        total
    }
}

/// The m-dimension by chain counting over rim hook removals; independent
/// oracle for [`dim_m_formula`].
pub fn dim_m_removal(lambda: &Partition, m: usize) -> BigUint {
    DimMemo::new(m).dim(lambda)
}

/// `m * max_k w(lambda_k) - w(lambda)` for a decomposable `lambda` with
/// quotient `(lambda_1, ..., lambda_m)`. Always lies in `{0, ..., m-1}`.
pub fn width_defect(lambda: &Partition, m: usize) -> Result<usize> {
    if !is_decomposable(lambda, m) {
        return Err(Error::NotDecomposable {
            partition: lambda.to_string(),
            m,
        });
    }
    let (_, quotient) = core_and_quotient(lambda, m);
    let max_width = quotient
        .components()
        .iter()
        .map(|p| p.width())
        .max()
        .unwrap();
    Ok(m * max_width - lambda.width())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_of;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn core_and_quotient_examples() {
        let (core, quot) = core_and_quotient(&p("2,2"), 2);
        assert!(core.is_empty());
        assert_eq!(quot, PartitionTuple::new(vec![p("1"), p("1")]));

        let (core, quot) = core_and_quotient(&p("3,1"), 2);
        assert!(core.is_empty());
        let mut sizes = quot.sizes();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![0, 2]);
        assert_eq!(quot, PartitionTuple::new(vec![p("2"), p("-")]));

        // m = 1 is the identity decomposition
        for n in 0..=8 {
            for lam in partitions_of(n) {
                let (core, quot) = core_and_quotient(&lam, 1);
                assert!(core.is_empty());
                assert_eq!(quot.components(), &[lam]);
            }
        }
    }

    #[test]
    fn size_bookkeeping() {
        for n in 0..=12 {
            for lam in partitions_of(n) {
                for m in 2..=4 {
                    let (core, quot) = core_and_quotient(&lam, m);
                    assert_eq!(lam.size(), core.size() + m * quot.total_size());
                }
            }
        }
    }

    #[test]
    fn decomposability_examples() {
        assert!(!is_decomposable(&p("1"), 2));
        assert!(is_decomposable(&p("3,1"), 2));
        // Every hook shape of size m is a single m-rim hook, so all three
        // partitions of 3 are 3-decomposable; (4,2) is a genuine 3-core.
        assert!(is_decomposable(&p("2,1"), 3));
        assert!(is_decomposable(&p("3"), 3));
        assert!(is_decomposable(&p("1,1,1"), 3));
        assert!(!is_decomposable(&p("4,2"), 3));
        assert!(core_and_quotient(&p("4,2"), 3).1.total_size() == 0);
        assert_eq!(core_and_quotient(&p("4,2"), 3).0, p("4,2"));
    }

    #[test]
    fn combine_examples_and_round_trip() {
        assert_eq!(combine(&PartitionTuple::empty(3)), Partition::empty());
        assert_eq!(
            combine(&PartitionTuple::new(vec![p("1"), p("1")])),
            p("2,2")
        );
        for n in 0..=16 {
            for lam in partitions_of(n) {
                for m in 2..=4 {
                    if is_decomposable(&lam, m) {
                        let (_, quot) = core_and_quotient(&lam, m);
                        assert_eq!(combine(&quot), lam, "m={m}");
                    }
                }
            }
        }
    }

    #[test]
    fn removable_hook_examples() {
        let mut hooks = removable_rim_hooks(&p("2,2"), 2);
        hooks.sort();
        assert_eq!(hooks, vec![p("1,1"), p("2")]);
        assert_eq!(removable_rim_hooks(&p("3,1"), 2), vec![p("1,1")]);
        assert!(removable_rim_hooks(&Partition::empty(), 2).is_empty());
        assert_eq!(removable_rim_hooks(&p("1,1,1,1"), 2), vec![p("1,1")]);
    }

    /// Brute-force border strip check: mu inside lambda, |lambda/mu| = m,
    /// skew cells edge-connected and free of 2x2 blocks.
    fn is_border_strip_removal(lambda: &Partition, mu: &Partition, m: usize) -> bool {
        if !lambda.contains(mu) || lambda.size() != mu.size() + m {
            return false;
        }
        let mut cells = Vec::new();
        for i in 0..lambda.num_rows() {
            for j in mu.row(i)..lambda.row(i) {
                cells.push((i, j));
            }
        }
        for &(i, j) in &cells {
            if cells.contains(&(i + 1, j))
                && cells.contains(&(i, j + 1))
                && cells.contains(&(i + 1, j + 1))
            {
                return false;
            }
        }
        // connectivity by flood fill
        let mut seen = vec![false; cells.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(idx) = stack.pop() {
            let (i, j) = cells[idx];
            for (k, &(a, b)) in cells.iter().enumerate() {
                if !seen[k]
                    && ((a == i && b.abs_diff(j) == 1) || (b == j && a.abs_diff(i) == 1))
                {
                    seen[k] = true;
                    stack.push(k);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    #[test]
    fn removable_hooks_match_brute_force() {
        for n in 0..=11 {
            for lam in partitions_of(n) {
                for m in 1..=4 {
                    if n < m {
                        continue;
                    }
                    let mut fast = removable_rim_hooks(&lam, m);
                    fast.sort();
                    fast.dedup();
                    assert_eq!(fast.len(), removable_rim_hooks(&lam, m).len());
                    let mut brute: Vec<Partition> = partitions_of(n - m)
                        .filter(|mu| is_border_strip_removal(&lam, mu, m))
                        .collect();
                    brute.sort();
                    assert_eq!(fast, brute, "lambda={lam} m={m}");
                }
            }
        }
    }

    #[test]
    fn dim_formula_examples() {
        assert_eq!(
            dim_m_formula(&PartitionTuple::new(vec![p("1"), p("1")])),
            BigUint::from(2u32)
        );
        assert_eq!(
            dim_m_formula(&PartitionTuple::new(vec![p("2"), p("-")])),
            BigUint::from(1u32)
        );
        assert_eq!(dim_m_formula(&PartitionTuple::empty(4)), BigUint::from(1u32));
    }

    #[test]
    fn dim_removal_examples() {
        assert_eq!(dim_m_removal(&p("2,2"), 2), BigUint::from(2u32));
        assert_eq!(dim_m_removal(&p("1,1,1,1"), 2), BigUint::from(1u32));
        // sum of squared 2-dimensions over |lambda| = 4 is 2^2 * 2!
        let total: BigUint = partitions_of(4)
            .map(|lam| {
                let d = dim_m_removal(&lam, 2);
                d.clone() * d
            })
            .sum();
        assert_eq!(total, BigUint::from(8u32));
    }

    #[test]
    fn width_defect_examples() {
        assert_eq!(width_defect(&p("2,2"), 2).unwrap(), 0);
        assert_eq!(width_defect(&p("3,1"), 2).unwrap(), 1);
        for m in 1..=4 {
            assert_eq!(width_defect(&Partition::empty(), m).unwrap(), 0);
        }
        assert!(matches!(
            width_defect(&p("1"), 2),
            Err(Error::NotDecomposable { .. })
        ));
    }
}
