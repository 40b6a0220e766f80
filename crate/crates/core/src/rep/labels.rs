use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde_json::{json, Value};

use super::characters::{hook_dimension, padded};
use crate::braid::{BraidWord, Letter};
use crate::error::{Error, Result};
use crate::pairs::PairSubset;

/// The one-dimensional `I`-isotypic representations carried by labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RhoTag {
    Trivial,
    Rho3,
    Rho4,
}

impl fmt::Display for RhoTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", match self {
            RhoTag::Trivial => "triv",
            RhoTag::Rho3 => "rho3",
            RhoTag::Rho4 => "rho4",
        })
    }
}

/// `V_n(rho, lambda)`: induced from `V_m(rho)` on the first `m` strands and the
/// Specht module of the padded partition `lambda` on the rest.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IrrepLabel {
    pub m: usize,
    pub i: PairSubset,
    pub rho: RhoTag,
    /// Tail of the padded partition; empty means `(0)`.
    pub lambda: Vec<usize>,
}

impl IrrepLabel {
    pub fn new(rho: RhoTag, lambda: &[usize]) -> IrrepLabel {
        let (m, i) = match rho {
            RhoTag::Trivial => (0, PairSubset::empty(0)),
            RhoTag::Rho3 => (3, PairSubset::i3(3)),
            RhoTag::Rho4 => (4, PairSubset::i4(4)),
        };
        IrrepLabel { m, i, rho, lambda: lambda.iter().copied().filter(|&p| p > 0).collect() }
    }

    /// The labels occurring in `H_1`, in a fixed order.
    pub fn constituents() -> Vec<IrrepLabel> {
        vec![
            IrrepLabel::new(RhoTag::Trivial, &[]),
            IrrepLabel::new(RhoTag::Trivial, &[1]),
            IrrepLabel::new(RhoTag::Trivial, &[2]),
            IrrepLabel::new(RhoTag::Rho3, &[]),
            IrrepLabel::new(RhoTag::Rho4, &[]),
        ]
    }

    /// Whether the label names a representation of `Z_n`.
    pub fn applies(&self, n: usize) -> bool {
        self.m <= n && padded(&self.lambda, n - self.m).is_some()
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        let ok_i = self.i.is_full_for(self.m)
            && match self.rho {
                RhoTag::Trivial => self.m == 0 && self.i.is_empty(),
                RhoTag::Rho3 => self.m == 3 && self.i.pairs == PairSubset::i3(3).pairs,
                RhoTag::Rho4 => self.m == 4 && self.i.pairs == PairSubset::i4(4).pairs,
            };
        if !ok_i {
            return Err(Error::Invalid(format!("inconsistent label {self}")));
        }
        if !self.applies(n) {
            return Err(Error::Invalid(format!("label {self} is not a representation for n = {n}")));
        }
        Ok(())
    }

    pub fn partition(&self, n: usize) -> Option<Vec<usize>> {
        padded(&self.lambda, n.checked_sub(self.m)?)
    }

    /// `I` as a subset of pairs of `[n]`.
    pub fn subset(&self, n: usize) -> PairSubset {
        self.i.with_n(n)
    }

    pub fn to_json(&self) -> Value {
        let pairs: Vec<String> = self.i.pairs.iter().map(|p| format!("({},{})", p.i, p.j)).collect();
        let lambda = if self.lambda.is_empty() { vec![0] } else { self.lambda.clone() };
        json!({ "m": self.m, "I": pairs, "rho": self.rho.to_string(), "lambda": lambda })
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lambda = if self.lambda.is_empty() { "0".to_string() } else {
            self.lambda.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
        };
        let rho = match self.rho {
            RhoTag::Trivial => "1",
            RhoTag::Rho3 => "rho3",
            RhoTag::Rho4 => "rho4",
        };
        write!(f, "V({rho},({lambda}))")
    }
}

/// The `S_n`-orbit of `i`, each member with a braid word carrying `i` onto it.
pub fn subset_orbit(i: &PairSubset) -> BTreeMap<PairSubset, BraidWord> {
    let n = i.n;
    let mut out = BTreeMap::new();
    out.insert(i.clone(), BraidWord::identity(n));
    let mut queue = VecDeque::from([i.clone()]);
    while let Some(cur) = queue.pop_front() {
        let w = out[&cur].clone();
        for k in 1..n {
            let s = BraidWord::new(n, vec![Letter::sigma(k)]).expect("k < n");
            let next = cur.permute(&s.permutation());
            if !out.contains_key(&next) {
                out.insert(next.clone(), s.mul(&w));
                queue.push_back(next);
            }
        }
    }
    out
}

/// `[Z_n : Z_n^I] * dim(rho) * dim(lambda)`.
pub fn constituent_dimension(label: &IrrepLabel, n: usize) -> Result<u128> {
    label.validate(n)?;
    let orbit = subset_orbit(&label.subset(n)).len() as u128;
    let lambda = label.partition(n).expect("validated");
    Ok(orbit * hook_dimension(&lambda))
}

/// Restriction to `PZ_n`: each conjugate `g(I)` with multiplicity `dim(rho) dim(lambda)`.
pub fn branching(label: &IrrepLabel, n: usize) -> Result<Vec<(PairSubset, u128)>> {
    label.validate(n)?;
    let mult = hook_dimension(&label.partition(n).expect("validated"));
    Ok(subset_orbit(&label.subset(n)).into_keys().map(|s| (s, mult)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::h1::dim_h1;
    use crate::pairs::binom;

    #[test]
    fn dimensions() {
        let c = IrrepLabel::constituents();
        for n in 4..=7 {
            assert_eq!(constituent_dimension(&c[0], n).unwrap(), 1);
            assert_eq!(constituent_dimension(&c[3], n).unwrap(), 3 * binom(n, 3) as u128);
            assert_eq!(constituent_dimension(&c[4], n).unwrap(), 3 * binom(n, 4) as u128);
            let total: u128 = c.iter().map(|l| constituent_dimension(l, n).unwrap()).sum();
            assert_eq!(total, dim_h1(n) as u128);
        }
        assert!(!c[2].applies(3));
        assert!(!c[4].applies(3));
    }

    #[test]
    fn orbit_words() {
        for i in [PairSubset::i3(5), PairSubset::i4(5)] {
            for (j, w) in subset_orbit(&i) {
                assert_eq!(i.permute(&w.permutation()), j);
            }
        }
    }

    #[test]
    fn branching_rules() {
        let c = IrrepLabel::constituents();
        let b = branching(&c[4], 4).unwrap();
        assert_eq!(b.len(), 3);
        assert!(b.iter().all(|(_, m)| *m == 1));
        assert_eq!(branching(&c[3], 5).unwrap().len(), 30);
        let b = branching(&c[1], 5).unwrap();
        assert_eq!(b, vec![(PairSubset::empty(5), 4)]);
    }
}
