//! Colored and signed permutations and their longest-increasing-subsequence
//! statistics.
//!
//! An increasing subsequence of a colored permutation is monochromatic: its
//! positions carry a single color p and increasing first coordinates. With k
//! entries of color p (out of m colors) its length is `m(k-1) + p`, and the
//! statistic of interest is the maximum over all increasing subsequences.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::Error;
use crate::partitions::Partition;
use crate::quotient::{combine, PartitionTuple};
use crate::Result;

/// Guard for exhaustive enumerations.
pub const ENUMERATION_LIMIT: u128 = 10_000_000;

/// Length of the longest strictly increasing subsequence, by patience
/// sorting with binary search. Entries must be pairwise distinct.
pub fn lis_plain<T: Ord>(seq: &[T]) -> usize {
    let mut tails: Vec<&T> = Vec::new();
    for v in seq {
        let idx = tails.partition_point(|&t| t < v);
        if idx == tails.len() {
            tails.push(v);
        } else {
            tails[idx] = v;
        }
    }
    tails.len()
}

/// The insertion shape of the full RSK row-bumping algorithm applied to a
/// sequence of distinct values. Its width is `lis_plain(seq)`.
pub fn rsk_shape(seq: &[usize]) -> Partition {
    let mut tableau: Vec<Vec<usize>> = Vec::new();
    for &value in seq {
        let mut v = value;
        let mut placed = false;
        for row in &mut tableau {
            let idx = row.partition_point(|&u| u < v);
            if idx == row.len() {
                row.push(v);
                placed = true;
                break;
            }
            std::mem::swap(&mut row[idx], &mut v);
        }
        if !placed {
            tableau.push(vec![v]);
        }
    }
    Partition::new(tableau.iter().map(|r| r.len()).collect())
}

/// A permutation of {1..n} with one of m colors attached to each point.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ColoredPermutation {
    sigma: Vec<usize>,
    colors: Vec<usize>,
    m: usize,
}

impl ColoredPermutation {
    /// Validates that `sigma` is a bijection of {1..n} and colors lie in
    /// {1..m}.
    pub fn new(sigma: Vec<usize>, colors: Vec<usize>, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::invalid("colored permutation", "m must be >= 1"));
        }
        if sigma.len() != colors.len() {
            return Err(Error::invalid(
                "colored permutation",
                format!("{} images vs {} colors", sigma.len(), colors.len()),
            ));
        }
        let n = sigma.len();
        let mut seen = vec![false; n];
        for &v in &sigma {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::invalid(
                    "colored permutation",
                    format!("images are not a bijection of 1..={n}"),
                ));
            }
            seen[v - 1] = true;
        }
        if colors.iter().any(|&c| c == 0 || c > m) {
            return Err(Error::invalid(
                "colored permutation",
                format!("colors must lie in 1..={m}"),
            ));
        }
        Ok(ColoredPermutation { sigma, colors, m })
    }

    pub fn n(&self) -> usize {
        self.sigma.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// The subsequence of images carrying color `p`.
    pub fn color_subword(&self, p: usize) -> Vec<usize> {
        self.sigma
            .iter()
            .zip(&self.colors)
            .filter(|&(_, &c)| c == p)
            .map(|(&v, _)| v)
            .collect()
    }

    /// Plain LIS length of each color subword, index p-1 for color p
    /// (0 where the color is absent).
    pub fn per_color_lis(&self) -> Vec<usize> {
        let mut words: Vec<Vec<usize>> = vec![Vec::new(); self.m];
        for (&v, &c) in self.sigma.iter().zip(&self.colors) {
            words[c - 1].push(v);
        }
        words.iter().map(|w| lis_plain(w)).collect()
    }
}

/// Length of the longest increasing subsequence of a colored permutation:
/// `max over present colors p of m(k_p - 1) + p` where `k_p` is the LIS of
/// the color-p subword. 0 for the empty permutation.
pub fn lis_colored(pi: &ColoredPermutation) -> usize {
    let m = pi.m();
    pi.per_color_lis()
        .iter()
        .enumerate()
        .filter(|&(_, &k)| k > 0)
        .map(|(idx, &k)| m * (k - 1) + idx + 1)
        .max()
        .unwrap_or(0)
}

/// The common shape of the rim hook tableau pair attached to `pi`: the
/// per-color RSK shapes assembled as a quotient tuple (color p in slot p)
/// and combined into a single mn-box diagram. Its width is `lis_colored(pi)`.
pub fn shape_of_colored(pi: &ColoredPermutation) -> Partition {
    let mut words: Vec<Vec<usize>> = vec![Vec::new(); pi.m()];
    for (&v, &c) in pi.sigma.iter().zip(&pi.colors) {
        words[c - 1].push(v);
    }
    let tuple = PartitionTuple::new(words.iter().map(|w| rsk_shape(w)).collect());
    combine(&tuple)
}

/// Uniform sample from S_n^(m): a uniform permutation plus independent
/// uniform colors.
pub fn sample_colored<R: Rng + ?Sized>(n: usize, m: usize, rng: &mut R) -> ColoredPermutation {
    assert!(m >= 1);
    let mut sigma: Vec<usize> = (1..=n).collect();
    sigma.shuffle(rng);
    let colors: Vec<usize> = (0..n).map(|_| rng.random_range(1..=m)).collect();
    ColoredPermutation { sigma, colors, m }
}

/// An element of the hyperoctahedral group H_n: a permutation of
/// {-n..-1, 1..n} commuting with negation, stored as `|sigma|` on {1..n}
/// plus the signs of `sigma(1), ..., sigma(n)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignedPermutation {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl SignedPermutation {
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        if perm.len() != signs.len() {
            return Err(Error::invalid(
                "signed permutation",
                format!("{} images vs {} signs", perm.len(), signs.len()),
            ));
        }
        let n = perm.len();
        let mut seen = vec![false; n];
        for &v in &perm {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::invalid(
                    "signed permutation",
                    format!("images are not a bijection of 1..={n}"),
                ));
            }
            seen[v - 1] = true;
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::invalid("signed permutation", "signs must be +1 or -1"));
        }
        Ok(SignedPermutation { perm, signs })
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    /// `sigma(x)` for x in {-n..-1, 1..n}.
    pub fn image(&self, x: i64) -> i64 {
        let i = x.unsigned_abs() as usize;
        let v = (self.perm[i - 1] as i64) * (self.signs[i - 1] as i64);
        if x > 0 {
            v
        } else {
            -v
        }
    }

    /// The word `sigma(-n), ..., sigma(-1), sigma(1), ..., sigma(n)` read in
    /// the natural order of {-n..-1, 1..n}.
    pub fn even_word(&self) -> Vec<i64> {
        let n = self.n() as i64;
        let mut word = Vec::with_capacity(2 * self.n());
        for x in -n..=n {
            if x != 0 {
                word.push(self.image(x));
            }
        }
        word
    }

    /// The even word with sigma(0) = 0 inserted at the central position.
    pub fn odd_word(&self) -> Vec<i64> {
        let mut word = self.even_word();
        word.insert(self.n(), 0);
        word
    }
}

/// LIS length over the 2n-point realization of H_n.
pub fn l_even(sigma: &SignedPermutation) -> usize {
    lis_plain(&sigma.even_word())
}

/// LIS length over the (2n+1)-point realization (0 fixed at the center).
/// Always equals `l_even` or `l_even + 1`.
pub fn l_odd(sigma: &SignedPermutation) -> usize {
    lis_plain(&sigma.odd_word())
}

/// All colored permutations of S_n^(m), each exactly once, permutations in
/// lexicographic order and color words in odometer order within each.
/// Refuses when `m^n * n!` exceeds [`ENUMERATION_LIMIT`].
pub fn enumerate_colored(n: usize, m: usize) -> Result<ColoredEnumeration> {
    let count = colored_count(n, m).ok_or(Error::GuardExceeded {
        requested: u128::MAX,
        limit: ENUMERATION_LIMIT,
    })?;
    if count > ENUMERATION_LIMIT {
        return Err(Error::GuardExceeded {
            requested: count,
            limit: ENUMERATION_LIMIT,
        });
    }
    Ok(ColoredEnumeration {
        sigma: Some((1..=n).collect()),
        colors: vec![1; n],
        colors_fresh: true,
        m,
    })
}

fn colored_count(n: usize, m: usize) -> Option<u128> {
    let mut count: u128 = 1;
    for k in 1..=n {
        count = count.checked_mul(k as u128)?;
        count = count.checked_mul(m as u128)?;
    }
    Some(count)
}

/// Iterator produced by [`enumerate_colored`].
pub struct ColoredEnumeration {
    sigma: Option<Vec<usize>>,
    colors: Vec<usize>,
    colors_fresh: bool,
    m: usize,
}

impl Iterator for ColoredEnumeration {
    type Item = ColoredPermutation;

    fn next(&mut self) -> Option<ColoredPermutation> {
        let sigma = self.sigma.as_ref()?;
        if !self.colors_fresh {
            // advance the color odometer; on wrap, advance the permutation
            let mut pos = self.colors.len();
            loop {
                if pos == 0 {
                    let mut next = sigma.clone();
                    if !next_permutation(&mut next) {
                        self.sigma = None;
                        return None;
                    }
                    self.sigma = Some(next);
                    break;
                }
                pos -= 1;
                if self.colors[pos] < self.m {
                    self.colors[pos] += 1;
                    break;
                }
                self.colors[pos] = 1;
            }
        }
        self.colors_fresh = false;
        Some(ColoredPermutation {
            sigma: self.sigma.as_ref()?.clone(),
            colors: self.colors.clone(),
            m: self.m,
        })
    }
}

/// All signed permutations of H_n, each exactly once. Refuses when
/// `2^n * n!` exceeds [`ENUMERATION_LIMIT`].
pub fn enumerate_signed(n: usize) -> Result<impl Iterator<Item = SignedPermutation>> {
    Ok(enumerate_colored(n, 2)?.map(|pi| SignedPermutation {
        perm: pi.sigma,
        signs: pi.colors.iter().map(|&c| if c == 1 { 1 } else { -1 }).collect(),
    }))
}

/// In-place lexicographic successor; false once at the last permutation.
fn next_permutation(perm: &mut [usize]) -> bool {
    if perm.len() < 2 {
        return false;
    }
    let mut i = perm.len() - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = perm.len() - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// Exponential brute force over all subsets; oracle for patience sorting.
    fn lis_brute(seq: &[usize]) -> usize {
        let n = seq.len();
        let mut best = 0;
        for mask in 0u32..(1 << n) {
            let picked: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| seq[i]).collect();
            if picked.windows(2).all(|w| w[0] < w[1]) {
                best = best.max(picked.len());
            }
        }
        best
    }

    #[test]
    fn lis_plain_basics() {
        let id: Vec<usize> = (1..=9).collect();
        assert_eq!(lis_plain(&id), 9);
        assert_eq!(lis_plain(&[2usize, 1]), 1);
        assert_eq!(lis_plain::<usize>(&[]), 0);
    }

    #[test]
    fn lis_plain_matches_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..1000 {
            let n = rng.random_range(1..=10);
            let mut seq: Vec<usize> = (1..=n).collect();
            seq.shuffle(&mut rng);
            assert_eq!(lis_plain(&seq), lis_brute(&seq), "{seq:?}");
        }
    }

    #[test]
    fn rsk_width_is_lis() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..200 {
            let n = rng.random_range(1..=12);
            let mut seq: Vec<usize> = (1..=n).collect();
            seq.shuffle(&mut rng);
            let shape = rsk_shape(&seq);
            assert_eq!(shape.width(), lis_plain(&seq));
            assert_eq!(shape.size(), n);
        }
        assert_eq!(rsk_shape(&[]), Partition::empty());
    }

    #[test]
    fn lis_colored_examples() {
        // single point of color p has length p
        for m in 1..=4 {
            for p in 1..=m {
                let pi = ColoredPermutation::new(vec![1], vec![p], m).unwrap();
                assert_eq!(lis_colored(&pi), p);
            }
        }
        let pi = ColoredPermutation::new(vec![2, 3, 1], vec![1, 1, 2], 2).unwrap();
        assert_eq!(lis_colored(&pi), 3);
        let pi = ColoredPermutation::new(vec![1, 2], vec![2, 2], 2).unwrap();
        assert_eq!(lis_colored(&pi), 4);
    }

    /// Enumerates every increasing subsequence directly from the definition.
    fn lis_colored_brute(pi: &ColoredPermutation) -> usize {
        let n = pi.n();
        let m = pi.m();
        let mut best = 0;
        for mask in 1u32..(1 << n) {
            let idx: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            let color = pi.colors()[idx[0]];
            if idx.iter().any(|&i| pi.colors()[i] != color) {
                continue;
            }
            let vals: Vec<usize> = idx.iter().map(|&i| pi.sigma()[i]).collect();
            if vals.windows(2).all(|w| w[0] < w[1]) {
                best = best.max(m * (vals.len() - 1) + color);
            }
        }
        best
    }

    #[test]
    fn lis_colored_matches_subsequence_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..300 {
            let n = rng.random_range(1..=7);
            let m = rng.random_range(1..=3);
            let pi = sample_colored(n, m, &mut rng);
            assert_eq!(lis_colored(&pi), lis_colored_brute(&pi));
        }
    }

    #[test]
    fn s22_table() {
        let values: Vec<usize> = enumerate_colored(2, 2)
            .unwrap()
            .map(|pi| lis_colored(&pi))
            .collect();
        let mut sorted = values.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![1, 2, 2, 2, 2, 2, 3, 4]);
    }

    #[test]
    fn enumeration_counts_and_guard() {
        assert_eq!(enumerate_colored(1, 3).unwrap().count(), 3);
        assert_eq!(enumerate_colored(3, 2).unwrap().count(), 48);
        assert_eq!(enumerate_signed(2).unwrap().count(), 8);
        assert_eq!(enumerate_colored(0, 2).unwrap().count(), 1);
        match enumerate_colored(12, 3) {
            Err(Error::GuardExceeded { requested, limit }) => {
                // 12! * 3^12
                assert_eq!(requested, 254_561_089_305_600);
                assert_eq!(limit, ENUMERATION_LIMIT);
            }
            _ => panic!("guard should trip"),
        }
    }

    #[test]
    fn enumeration_is_duplicate_free() {
        let all: Vec<ColoredPermutation> = enumerate_colored(3, 3).unwrap().collect();
        assert_eq!(all.len(), 162);
        for (i, a) in all.iter().enumerate() {
            for b in &all[i + 1..] {
                assert!(a != b);
            }
        }
    }

    #[test]
    fn signed_words_and_l_statistics() {
        let plus = SignedPermutation::new(vec![1], vec![1]).unwrap();
        assert_eq!(plus.even_word(), vec![-1, 1]);
        assert_eq!(plus.odd_word(), vec![-1, 0, 1]);
        assert_eq!(l_even(&plus), 2);
        assert_eq!(l_odd(&plus), 3);

        let minus = SignedPermutation::new(vec![1], vec![-1]).unwrap();
        assert_eq!(minus.even_word(), vec![1, -1]);
        assert_eq!(minus.odd_word(), vec![1, 0, -1]);
        assert_eq!(l_even(&minus), 1);
        assert_eq!(l_odd(&minus), 1);
    }

    #[test]
    fn odd_minus_even_is_zero_or_one() {
        for n in 1..=5 {
            for sigma in enumerate_signed(n).unwrap() {
                let diff = l_odd(&sigma) - l_even(&sigma);
                assert!(diff <= 1, "{:?}", sigma);
            }
        }
    }

    #[test]
    fn shape_of_colored_examples() {
        // n=1, m=2: color 1 gives the vertical domino, color 2 the horizontal
        let pi = ColoredPermutation::new(vec![1], vec![1], 2).unwrap();
        assert_eq!(shape_of_colored(&pi), "1,1".parse().unwrap());
        let pi = ColoredPermutation::new(vec![1], vec![2], 2).unwrap();
        assert_eq!(shape_of_colored(&pi), "2".parse().unwrap());

        let pi = ColoredPermutation::new(vec![1, 2], vec![2, 2], 2).unwrap();
        let lam = shape_of_colored(&pi);
        assert_eq!(lam.width(), 4);
        assert_eq!(lam.size(), 4);
    }

    #[test]
    fn shape_width_equals_lis_small() {
        for (n, m) in [(4, 2), (3, 3)] {
            for pi in enumerate_colored(n, m).unwrap() {
                let lam = shape_of_colored(&pi);
                assert_eq!(lam.size(), m * n);
                assert_eq!(lam.width(), lis_colored(&pi), "{pi:?}");
            }
        }
    }

    #[test]
    fn sampler_is_seed_deterministic() {
        let mut a = ChaCha8Rng::seed_from_u64(42);
        let mut b = ChaCha8Rng::seed_from_u64(42);
        let x = sample_colored(50, 3, &mut a);
        let y = sample_colored(50, 3, &mut b);
        assert_eq!(x, y);
        assert_eq!(sample_colored(1, 1, &mut a), ColoredPermutation::new(vec![1], vec![1], 1).unwrap());
    }

    #[test]
    fn sampler_uniform_on_s22() {
        // chi-square style check: each of the 8 elements within 4 standard
        // errors of 1/8 over 1e5 draws
        let mut rng = ChaCha8Rng::seed_from_u64(1234);
        let all: Vec<ColoredPermutation> = enumerate_colored(2, 2).unwrap().collect();
        let mut counts = vec![0usize; all.len()];
        let draws = 100_000;
        for _ in 0..draws {
            let pi = sample_colored(2, 2, &mut rng);
            let idx = all.iter().position(|a| *a == pi).unwrap();
            counts[idx] += 1;
        }
        let p = 1.0 / 8.0;
        let se = (p * (1.0 - p) / draws as f64).sqrt();
        for &c in &counts {
            let freq = c as f64 / draws as f64;
            assert!((freq - p).abs() < 4.0 * se, "freq {freq} vs {p}");
        }
    }

    #[test]
    fn max_color_lis_consistency_with_width_defect_range() {
        // m * max_p k_p - lis_colored in {0, ..., m-1}
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let n = rng.random_range(1..=20);
            let m = rng.random_range(1..=5);
            let pi = sample_colored(n, m, &mut rng);
            let kmax = pi.per_color_lis().into_iter().max().unwrap();
            let defect = m * kmax - lis_colored(&pi);
            assert!(defect < m);
        }
    }
}
