//! Unordered pairs of strand labels and sets of them.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An unordered pair `{i, j}` of labels in `[n]`, stored with `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Pair {
    pub i: usize,
    pub j: usize,
}

impl Pair {
    /// Builds the pair from two distinct labels in either order.
    pub fn new(a: usize, b: usize) -> Pair {
        assert!(a != b, "pair needs distinct labels");
        if a < b {
            Pair { i: a, j: b }
        } else {
            Pair { i: b, j: a }
        }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.i == x || self.j == x
    }

    pub fn meets(&self, other: &Pair) -> usize {
        [other.i, other.j].iter().filter(|x| self.contains(**x)).count()
    }

    /// The label of `self` not in `other`, when they share exactly one label.
    pub fn other_than(&self, shared_with: &Pair) -> Option<usize> {
        if self.meets(shared_with) != 1 {
            return None;
        }
        if shared_with.contains(self.i) {
            Some(self.j)
        } else {
            Some(self.i)
        }
    }

    /// Image under a permutation given as a 1-based map (`perm[x-1]` is the image of `x`).
    pub fn permute(&self, perm: &[usize]) -> Pair {
        Pair::new(perm[self.i - 1], perm[self.j - 1])
    }

    /// Position in the lexicographic list of all pairs of `[n]`.
    pub fn index(&self, n: usize) -> usize {
        let (i, j) = (self.i, self.j);
        (i - 1) * (2 * n - i) / 2 + (j - i - 1)
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// All pairs of `[n]` in lexicographic order.
pub fn all_pairs(n: usize) -> Vec<Pair> {
    let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(Pair { i, j });
        }
    }
    out
}

pub fn num_pairs(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Binomial coefficient in machine integers; callers stay far below overflow.
pub fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for t in 0..k {
        acc = acc * (n - t) as u128 / (t + 1) as u128;
    }
    acc as usize
}

/// A set of pairs of `[n]`, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PairSubset {
    pub n: usize,
    pub pairs: BTreeSet<Pair>,
}

impl PairSubset {
    pub fn empty(n: usize) -> PairSubset {
        PairSubset { n, pairs: BTreeSet::new() }
    }

    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = Pair>) -> Result<PairSubset> {
        let pairs: BTreeSet<Pair> = pairs.into_iter().collect();
        if let Some(p) = pairs.iter().find(|p| p.j > n || p.i == 0) {
            return Err(Error::Invalid(format!("pair {p} outside [{n}]")));
        }
        Ok(PairSubset { n, pairs })
    }

    /// `I_3 = {13, 23}` inside `[n]`.
    pub fn i3(n: usize) -> PairSubset {
        PairSubset::from_pairs(n, [Pair::new(1, 3), Pair::new(2, 3)]).expect("n >= 3")
    }

    /// `I_4 = {13, 23, 14, 24}` inside `[n]`.
    pub fn i4(n: usize) -> PairSubset {
        PairSubset::from_pairs(
            n,
            [Pair::new(1, 3), Pair::new(2, 3), Pair::new(1, 4), Pair::new(2, 4)],
        )
        .expect("n >= 4")
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, p: &Pair) -> bool {
        self.pairs.contains(p)
    }

    /// Labels touched by some pair.
    pub fn support(&self) -> BTreeSet<usize> {
        self.pairs.iter().flat_map(|p| [p.i, p.j]).collect()
    }

    /// True when the union of the pairs is exactly `[m]`.
    pub fn is_full_for(&self, m: usize) -> bool {
        self.support() == (1..=m).collect()
    }

    pub fn permute(&self, perm: &[usize]) -> PairSubset {
        PairSubset { n: self.n, pairs: self.pairs.iter().map(|p| p.permute(perm)).collect() }
    }

    pub fn with_n(&self, n: usize) -> PairSubset {
        PairSubset { n, pairs: self.pairs.clone() }
    }

    /// Bit mask over the lexicographic pair indexing.
    pub fn mask(&self) -> u64 {
        self.pairs.iter().fold(0u64, |acc, p| acc | (1u64 << p.index(self.n)))
    }

    pub fn from_mask(n: usize, mask: u64) -> PairSubset {
        let pairs = all_pairs(n)
            .into_iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, p)| p)
            .collect();
        PairSubset { n, pairs }
    }

    /// Parses `{13,23}` style (single-digit labels) or `{(1,3),(2,3)}`.
    pub fn parse(n: usize, s: &str) -> Result<PairSubset> {
        let body = s.trim().trim_start_matches('{').trim_end_matches('}');
        let mut pairs = Vec::new();
        if body.contains('(') {
            for chunk in body.split(')') {
                let chunk = chunk.trim().trim_start_matches(',').trim().trim_start_matches('(');
                if chunk.is_empty() {
                    continue;
                }
                let nums: Vec<&str> = chunk.split(',').collect();
                if nums.len() != 2 {
                    return Err(Error::Parse(format!("bad pair `{chunk}`")));
                }
                let a = parse_label(nums[0])?;
                let b = parse_label(nums[1])?;
                if a == b {
                    return Err(Error::Parse(format!("degenerate pair `{chunk}`")));
                }
                pairs.push(Pair::new(a, b));
            }
        } else {
            for tok in body.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                let digits: Vec<usize> = tok
                    .chars()
                    .map(|c| c.to_digit(10).map(|d| d as usize))
                    .collect::<Option<_>>()
                    .ok_or_else(|| Error::Parse(format!("bad pair `{tok}`")))?;
                if digits.len() != 2 || digits[0] == digits[1] {
                    return Err(Error::Parse(format!("bad pair `{tok}`")));
                }
                pairs.push(Pair::new(digits[0], digits[1]));
            }
        }
        PairSubset::from_pairs(n, pairs)
    }
}

fn parse_label(s: &str) -> Result<usize> {
    s.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad label `{s}`")))
}

impl fmt::Display for PairSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_index_is_lexicographic() {
        for n in 2..8 {
            for (k, p) in all_pairs(n).iter().enumerate() {
                assert_eq!(p.index(n), k);
            }
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binom(5, 2), 10);
        assert_eq!(binom(4, 4), 1);
        assert_eq!(binom(3, 4), 0);
        assert_eq!(binom(40, 20), 137846528820);
    }

    #[test]
    fn subsets_parse_and_print() {
        let i3 = PairSubset::i3(4);
        assert_eq!(i3.to_string(), "{(1,3),(2,3)}");
        assert_eq!(PairSubset::parse(4, "{13,23}").unwrap(), i3);
        assert_eq!(PairSubset::parse(4, "{(1,3),(2,3)}").unwrap(), i3);
        assert!(i3.is_full_for(3));
        assert!(!i3.is_full_for(4));
        assert_eq!(PairSubset::from_mask(4, i3.mask()), i3);
        assert!(PairSubset::parse(3, "{14}").is_err());
    }
}
