//! Ground subsets as bitmasks, with lexicographic `k`-subset enumeration.

use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

/// Largest supported ground set. Everything downstream enumerates subsets,
/// so larger grounds are rejected rather than silently crawling.
pub const MAX_GROUND: usize = 20;

/// A subset of a ground set `0..n` with `n <= MAX_GROUND`, as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset(u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_bits(bits: u32) -> Self {
        Subset(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn from_elems(elems: &[usize]) -> Self {
        let mut bits = 0u32;
        for &e in elems {
            debug_assert!(e < MAX_GROUND);
            bits |= 1 << e;
        }
        Subset(bits)
    }

    pub fn singleton(e: usize) -> Self {
        Subset(1 << e)
    }

    pub fn full(n: usize) -> Self {
        Subset(((1u64 << n) - 1) as u32)
    }

    pub fn contains(self, e: usize) -> bool {
        self.0 >> e & 1 == 1
    }

    pub fn with(self, e: usize) -> Self {
        Subset(self.0 | 1 << e)
    }

    pub fn without(self, e: usize) -> Self {
        Subset(self.0 & !(1 << e))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn complement(self, n: usize) -> Self {
        Subset(!self.0 & Subset::full(n).0)
    }

    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Elements in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let e = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(e)
            }
        })
    }

    pub fn elems(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl BitOr for Subset {
    type Output = Subset;
    fn bitor(self, rhs: Subset) -> Subset {
        Subset(self.0 | rhs.0)
    }
}

impl BitAnd for Subset {
    type Output = Subset;
    fn bitand(self, rhs: Subset) -> Subset {
        Subset(self.0 & rhs.0)
    }
}

impl Sub for Subset {
    type Output = Subset;
    fn sub(self, rhs: Subset) -> Subset {
        Subset(self.0 & !rhs.0)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

pub fn binomial(n: usize, k: usize) -> u64 {
    // Pascal table over the supported range; subset ranking hits this on
    // every chirotope evaluation.
    static TABLE: std::sync::OnceLock<Vec<[u64; MAX_GROUND + 1]>> = std::sync::OnceLock::new();
    if n > MAX_GROUND {
        return binomial_slow(n, k);
    }
    let table = TABLE.get_or_init(|| {
        let mut t = vec![[0u64; MAX_GROUND + 1]; MAX_GROUND + 1];
        for i in 0..=MAX_GROUND {
            t[i][0] = 1;
            for j in 1..=i {
                t[i][j] = t[i - 1][j - 1] + if j <= i - 1 { t[i - 1][j] } else { 0 };
            }
        }
        t
    });
    if k > n {
        0
    } else {
        table[n][k]
    }
}

fn binomial_slow(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

/// Rank of a sorted `k`-subset in the lexicographic order of all
/// `k`-subsets of `0..n` (by their sorted element tuples).
pub fn subset_rank(n: usize, elems: &[usize]) -> usize {
    let k = elems.len();
    let mut rank = 0u64;
    let mut prev = 0usize;
    for (i, &e) in elems.iter().enumerate() {
        for v in prev..e {
            rank += binomial(n - 1 - v, k - 1 - i);
        }
        prev = e + 1;
    }
    rank as usize
}

/// All `k`-subsets of `0..n` in lexicographic order of sorted tuples.
pub fn k_subsets(n: usize, k: usize) -> KSubsets {
    KSubsets {
        n,
        k,
        current: None,
        done: k > n,
    }
}

pub struct KSubsets {
    n: usize,
    k: usize,
    current: Option<Vec<usize>>,
    done: bool,
}

impl Iterator for KSubsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        match &mut self.current {
            None => {
                let first: Vec<usize> = (0..self.k).collect();
                self.current = Some(first.clone());
                Some(first)
            }
            Some(cur) => {
                // rightmost position that can still move up
                let mut i = self.k;
                loop {
                    if i == 0 {
                        self.done = true;
                        return None;
                    }
                    i -= 1;
                    if cur[i] < self.n - self.k + i {
                        break;
                    }
                }
                cur[i] += 1;
                for j in i + 1..self.k {
                    cur[j] = cur[j - 1] + 1;
                }
                Some(cur.clone())
            }
        }
    }
}

/// All subsets of `0..n`, in ascending bitmask order.
pub fn all_subsets(n: usize) -> impl Iterator<Item = Subset> {
    (0u64..1 << n).map(|bits| Subset(bits as u32))
}

/// Sorts `tuple` in place, reporting whether the permutation used was odd.
/// Returns `None` when the tuple has a repeated entry.
pub(crate) fn sort_with_parity(tuple: &mut [usize]) -> Option<bool> {
    let mut odd = false;
    for i in 1..tuple.len() {
        let mut j = i;
        while j > 0 && tuple[j - 1] > tuple[j] {
            tuple.swap(j - 1, j);
            odd = !odd;
            j -= 1;
        }
        if j > 0 && tuple[j - 1] == tuple[j] {
            return None;
        }
    }
    Some(odd)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn lex_order_matches_rank() {
        for (i, s) in k_subsets(6, 3).enumerate() {
            assert_eq!(subset_rank(6, &s), i);
        }
        assert_eq!(k_subsets(6, 3).count(), binomial(6, 3) as usize);
    }

    #[test]
    fn lex_order_is_tuple_order() {
        // {0,1,4} precedes {1,2,3} in sorted-tuple order even though its
        // bitmask is numerically larger.
        let all: Vec<Vec<usize>> = k_subsets(5, 3).collect();
        let a = all.iter().position(|s| s == &[0, 1, 4]).unwrap();
        let b = all.iter().position(|s| s == &[1, 2, 3]).unwrap();
        assert!(a < b);
    }

    #[test]
    fn parity_counting() {
        let mut t = vec![2, 0, 1];
        assert_eq!(sort_with_parity(&mut t), Some(false));
        assert_eq!(t, vec![0, 1, 2]);
        let mut t = vec![1, 0];
        assert_eq!(sort_with_parity(&mut t), Some(true));
        let mut t = vec![1, 1];
        assert_eq!(sort_with_parity(&mut t), None);
    }

    proptest! {
        #[test]
        fn rank_is_injective_and_dense(n in 1usize..9, seed in 0u64..500) {
            let k = (seed as usize % n).max(1).min(n);
            let subsets: Vec<Vec<usize>> = k_subsets(n, k).collect();
            for (i, s) in subsets.iter().enumerate() {
                prop_assert_eq!(subset_rank(n, s), i);
            }
            prop_assert_eq!(subsets.len() as u64, binomial(n, k));
        }

        #[test]
        fn subset_roundtrip(bits in 0u32..(1 << 12)) {
            let s = Subset::from_bits(bits);
            prop_assert_eq!(Subset::from_elems(&s.elems()), s);
            prop_assert_eq!(s.len(), s.elems().len());
        }
    }
}
