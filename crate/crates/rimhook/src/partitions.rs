//! Young diagrams: construction, enumeration, conjugation, and the number of
//! standard Young tableaux (`dim_1`).

use std::fmt;
use std::str::FromStr;

use num::BigUint;

use crate::error::Error;

/// A Young diagram, stored as weakly decreasing positive row lengths.
///
/// The empty diagram is a first-class value: it has size 0 and width 0, and
/// every operation accepts it. Serializes as comma-separated row lengths
/// (`"3,1"`), with `"-"` for the empty diagram.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    rows: Vec<usize>,
}

impl Partition {
    /// The empty diagram.
    pub fn empty() -> Self {
        Partition { rows: Vec::new() }
    }

    /// Builds a partition from row lengths.
    ///
    /// Panics if the rows are not weakly decreasing or contain a zero;
    /// use [`Partition::from_str`] for unvalidated input.
    pub fn new(rows: Vec<usize>) -> Self {
        assert!(
            rows.windows(2).all(|w| w[0] >= w[1]),
            "partition rows must be weakly decreasing"
        );
        assert!(
            rows.last().is_none_or(|&r| r > 0),
            "partition rows must be positive"
        );
        Partition { rows }
    }

    /// Row lengths, longest first.
    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    /// Length of the longest row (0 for the empty diagram).
    pub fn width(&self) -> usize {
        self.rows.first().copied().unwrap_or(0)
    }

    /// Number of rows.
    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Row length at `i`, 0 beyond the last row.
    pub fn row(&self, i: usize) -> usize {
        self.rows.get(i).copied().unwrap_or(0)
    }

    /// The transposed diagram: column lengths become row lengths.
    pub fn conjugate(&self) -> Partition {
        let mut cols = Vec::with_capacity(self.width());
        for j in 0..self.width() {
            cols.push(self.rows.iter().take_while(|&&r| r > j).count());
        }
        Partition { rows: cols }
    }

    /// Whether `self` contains `other` as a diagram.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.num_rows()).all(|i| self.row(i) >= other.row(i))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "-");
        }
        let mut first = true;
        for r in &self.rows {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Partition::empty());
        }
        let mut rows = Vec::new();
        for part in s.split(',') {
            let r: usize = part
                .trim()
                .parse()
                .map_err(|_| Error::invalid("partition", format!("bad row length {part:?}")))?;
            if r == 0 {
                return Err(Error::invalid("partition", "row lengths must be positive"));
            }
            rows.push(r);
        }
        if !rows.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::invalid(
                "partition",
                format!("rows not weakly decreasing in {s:?}"),
            ));
        }
        Ok(Partition { rows })
    }
}

/// Iterates over all partitions of `n` in lexicographically descending order
/// of row vectors: `(n)` first, `(1,1,...,1)` last. For `n = 0` yields the
/// empty diagram once.
pub fn partitions_of(n: usize) -> Partitions {
    Partitions {
        next: Some(if n == 0 {
            Vec::new()
        } else {
            vec![n]
        }),
    }
}

/// Iterator produced by [`partitions_of`].
pub struct Partitions {
    next: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        self.next = successor(&current);
        Some(Partition {
            rows: current,
        })
    }
}

/// Next partition in descending lexicographic order, or None after (1,...,1).
fn successor(rows: &[usize]) -> Option<Vec<usize>> {
    // Find the last part exceeding 1; everything after it is a tail of 1s.
    let i = rows.iter().rposition(|&r| r > 1)?;
    let total: usize = rows[i] + (rows.len() - i - 1);
    let cap = rows[i] - 1;
    let mut next = rows[..i].to_vec();
    let mut rem = total;
    while rem >= cap {
        next.push(cap);
        rem -= cap;
    }
    if rem > 0 {
        next.push(rem);
    }
    Some(next)
}

/// Number of standard Young tableaux of shape `lambda` (paths from the empty
/// diagram to `lambda` in the Young lattice), by the hook length formula:
/// `|lambda|! / prod(hooks)`.
pub fn dim_1(lambda: &Partition) -> BigUint {
    let n = lambda.size();
    if n == 0 {
        return BigUint::from(1u32);
    }
    let conj = lambda.conjugate();
    let mut numerator = BigUint::from(1u32);
    for k in 2..=n {
        numerator *= BigUint::from(k);
    }
    let mut denominator = BigUint::from(1u32);
    for (i, &len) in lambda.rows().iter().enumerate() {
        for j in 0..len {
            let hook = (len - j) + (conj.row(j) - i) - 1;
            denominator *= BigUint::from(hook);
        }
    }
    // The hook length formula always divides exactly.
    numerator / denominator
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    /// Partition counting via the Euler pentagonal-number recurrence;
    /// independent oracle for the enumeration stream.
    fn pentagonal_count(n: usize) -> u64 {
        let mut p = vec![0i64; n + 1];
        p[0] = 1;
        for i in 1..=n {
            let mut sum = 0i64;
            let mut k = 1i64;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > i {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                sum += sign * p[i - g1];
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= i {
                    sum += sign * p[i - g2];
                }
                k += 1;
            }
            p[i] = sum;
        }
        p[n] as u64
    }

    /// Path-count recursion for dim_1: sum over diagrams obtained by removing
    /// one corner box. Exponential without the memo; test oracle only.
    fn dim_1_paths(lambda: &Partition, memo: &mut HashMap<Partition, BigUint>) -> BigUint {
        if lambda.is_empty() {
            return BigUint::from(1u32);
        }
        if let Some(v) = memo.get(lambda) {
            return v.clone();
        }
        let mut total = BigUint::from(0u32);
        let rows = lambda.rows();
        for i in 0..rows.len() {
            let removable = i + 1 == rows.len() || rows[i + 1] < rows[i];
            if removable {
                let mut smaller = rows.to_vec();
                smaller[i] -= 1;
                if smaller[i] == 0 {
                    smaller.pop();
                }
                total += dim_1_paths(&Partition::new(smaller), memo);
            }
        }
        memo.insert(lambda.clone(), total.clone());
        total
    }

    #[test]
    fn enumeration_of_zero_and_four() {
        let zero: Vec<Partition> = partitions_of(0).collect();
        assert_eq!(zero, vec![Partition::empty()]);

        let four: Vec<Partition> = partitions_of(4).collect();
        let expected: Vec<Partition> = ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        assert_eq!(four, expected);
    }

    #[test]
    fn enumeration_count_matches_pentagonal_recurrence() {
        assert_eq!(partitions_of(10).count() as u64, 42);
        for n in 0..=20 {
            assert_eq!(
                partitions_of(n).count() as u64,
                pentagonal_count(n),
                "p({n})"
            );
        }
    }

    #[test]
    fn enumeration_is_strictly_descending_lex() {
        for n in [6, 9, 12] {
            let all: Vec<Partition> = partitions_of(n).collect();
            for w in all.windows(2) {
                assert!(w[0].rows() > w[1].rows());
            }
            for p in &all {
                assert_eq!(p.size(), n);
            }
        }
    }

    #[test]
    fn dim_1_basics() {
        assert_eq!(dim_1(&Partition::empty()), BigUint::from(1u32));
        assert_eq!(dim_1(&"2,2".parse().unwrap()), BigUint::from(2u32));
        // sum of squares over |lambda| = 4 is 4!
        let total: BigUint = partitions_of(4).map(|p| dim_1(&p) * dim_1(&p)).sum();
        assert_eq!(total, BigUint::from(24u32));
    }

    #[test]
    fn dim_1_square_sum_is_factorial_up_to_20() {
        let mut factorial = BigUint::from(1u32);
        for n in 1..=20usize {
            factorial *= BigUint::from(n);
            let total: BigUint = partitions_of(n).map(|p| dim_1(&p) * dim_1(&p)).sum();
            assert_eq!(total, factorial, "n = {n}");
        }
    }

    #[test]
    fn hook_formula_matches_path_recursion() {
        let mut memo = HashMap::new();
        for n in 0..=14 {
            for p in partitions_of(n) {
                assert_eq!(dim_1(&p), dim_1_paths(&p, &mut memo), "shape {p}");
            }
        }
    }

    #[test]
    fn conjugate_examples_and_involution() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        let p: Partition = "3,1".parse().unwrap();
        assert_eq!(p.conjugate(), "2,1,1".parse().unwrap());
        let sq: Partition = "2,2".parse().unwrap();
        assert_eq!(sq.conjugate(), sq);
        for n in 0..=12 {
            for p in partitions_of(n) {
                assert_eq!(p.conjugate().conjugate(), p);
            }
        }
    }

    #[test]
    fn dim_1_is_conjugation_invariant() {
        for n in 0..=16 {
            for p in partitions_of(n) {
                assert_eq!(dim_1(&p), dim_1(&p.conjugate()), "shape {p}");
            }
        }
    }

    #[test]
    fn serialization_round_trip() {
        for n in 0..=10 {
            for p in partitions_of(n) {
                let back: Partition = p.to_string().parse().unwrap();
                assert_eq!(back, p);
            }
        }
        assert!("2,3".parse::<Partition>().is_err());
        assert!("1,0".parse::<Partition>().is_err());
        assert!("x".parse::<Partition>().is_err());
        assert_eq!("-".parse::<Partition>().unwrap(), Partition::empty());
    }
}
