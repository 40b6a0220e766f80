use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::braid::PureBraidWord;
use crate::error::{Error, Result};
use crate::linalg::{format_q, QVec, Q};
use crate::pairs::{binom, Pair};

/// `3 C(n,4) + 3 C(n,3) + C(n,2)`.
pub fn dim_h1(n: usize) -> usize {
    3 * binom(n, 4) + 3 * binom(n, 3) + binom(n, 2)
}

/// A member of the canonical basis `S = S1 ∪ S2 ∪ S3`.
///
/// Variants follow the listing order: for `i<j<k`, S2 variants are
/// `T_ik t_ij`, `T_jk t_ik`, `T_ij t_jk`; for `i<j<k<l`, S3 variants are
/// `T_il T_jk t_ij`, `T_ij T_kl t_ik`, `T_ik T_jl t_il`. The derived order is
/// the canonical basis order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum BasisSymbol {
    S1 { i: usize, j: usize },
    S2 { i: usize, j: usize, k: usize, variant: u8 },
    S3 { i: usize, j: usize, k: usize, l: usize, variant: u8 },
}

impl BasisSymbol {
    pub fn target(&self) -> Pair {
        match *self {
            BasisSymbol::S1 { i, j } => Pair::new(i, j),
            BasisSymbol::S2 { i, j, k, variant } => match variant {
                0 => Pair::new(i, j),
                1 => Pair::new(i, k),
                _ => Pair::new(j, k),
            },
            BasisSymbol::S3 { i, j, k, l, variant } => match variant {
                0 => Pair::new(i, j),
                1 => Pair::new(i, k),
                _ => Pair::new(i, l),
            },
        }
    }

    /// The prefix twists as written, leftmost first.
    pub fn twists(&self) -> Vec<Pair> {
        match *self {
            BasisSymbol::S1 { .. } => vec![],
            BasisSymbol::S2 { i, j, k, variant } => match variant {
                0 => vec![Pair::new(i, k)],
                1 => vec![Pair::new(j, k)],
                _ => vec![Pair::new(i, j)],
            },
            BasisSymbol::S3 { i, j, k, l, variant } => match variant {
                0 => vec![Pair::new(i, l), Pair::new(j, k)],
                1 => vec![Pair::new(i, j), Pair::new(k, l)],
                _ => vec![Pair::new(i, k), Pair::new(j, l)],
            },
        }
    }

    /// Labels outside the target carried by the prefix, sorted.
    pub fn extras(&self) -> Vec<usize> {
        let t = self.target();
        let mut e: Vec<usize> = self.twists().iter().filter_map(|p| p.other_than(&t)).collect();
        e.sort_unstable();
        e
    }

    pub fn max_label(&self) -> usize {
        match *self {
            BasisSymbol::S1 { j, .. } => j,
            BasisSymbol::S2 { k, .. } => k,
            BasisSymbol::S3 { l, .. } => l,
        }
    }

    /// The basis symbol `u_E t_target`, when that monomial is canonical.
    pub fn from_monomial(target: Pair, extras: &[usize]) -> Option<BasisSymbol> {
        match extras.len() {
            0 => Some(BasisSymbol::S1 { i: target.i, j: target.j }),
            1 => {
                let x = extras[0];
                if target.contains(x) {
                    return None;
                }
                let mut t = [target.i, target.j, x];
                t.sort_unstable();
                let [i, j, k] = t;
                let variant = if x == k { 0 } else if x == j { 1 } else { 2 };
                Some(BasisSymbol::S2 { i, j, k, variant })
            }
            2 => {
                let (x, y) = (extras[0], extras[1]);
                if x == y || target.contains(x) || target.contains(y) {
                    return None;
                }
                let mut t = [target.i, target.j, x, y];
                t.sort_unstable();
                let [i, j, k, l] = t;
                if target.i != i {
                    return None;
                }
                let variant = if target.j == j { 0 } else if target.j == k { 1 } else { 2 };
                Some(BasisSymbol::S3 { i, j, k, l, variant })
            }
            _ => None,
        }
    }

    /// Defining word `P A_t^2 P^{-1}` with `P` the product of the prefix twists.
    pub fn word(&self, n: usize) -> Result<PureBraidWord> {
        let mut prefix = PureBraidWord::identity(n);
        for p in self.twists() {
            prefix = prefix.mul(&PureBraidWord::generator(n, p.i, p.j, 1)?);
        }
        let t = self.target();
        Ok(prefix.conjugate(&PureBraidWord::generator(n, t.i, t.j, 2)?))
    }
}

impl fmt::Display for BasisSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = self.target();
        let tw = self.twists();
        if !tw.is_empty() {
            for p in tw {
                write!(f, "T({},{})", p.i, p.j)?;
            }
            write!(f, "*")?;
        }
        write!(f, "t({},{})", t.i, t.j)
    }
}

/// All basis symbols for `n` strands in canonical order.
pub fn enumerate_basis(n: usize) -> Vec<BasisSymbol> {
    let mut s1 = Vec::new();
    let mut s2 = Vec::new();
    let mut s3 = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            s1.push(BasisSymbol::S1 { i, j });
            for k in j + 1..=n {
                for variant in 0..3 {
                    s2.push(BasisSymbol::S2 { i, j, k, variant });
                }
                for l in k + 1..=n {
                    for variant in 0..3 {
                        s3.push(BasisSymbol::S3 { i, j, k, l, variant });
                    }
                }
            }
        }
    }
    s1.sort();
    s2.sort();
    s3.sort();
    s1.into_iter().chain(s2).chain(s3).collect()
}

/// Sparse rational vector over the basis `S` for `n` strands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct H1Vector {
    pub n: usize,
    coeffs: BTreeMap<BasisSymbol, Q>,
}

impl H1Vector {
    pub fn zero(n: usize) -> H1Vector {
        H1Vector { n, coeffs: BTreeMap::new() }
    }

    pub fn symbol(n: usize, s: BasisSymbol) -> H1Vector {
        let mut v = H1Vector::zero(n);
        v.add_term(s, &Q::one());
        v
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (BasisSymbol, Q)>) -> H1Vector {
        let mut v = H1Vector::zero(n);
        for (s, c) in terms {
            v.add_term(s, &c);
        }
        v
    }

    pub fn add_term(&mut self, s: BasisSymbol, c: &Q) {
        assert!(s.max_label() <= self.n, "symbol {s} outside {} strands", self.n);
        if c.is_zero() {
            return;
        }
        let drop = {
            let e = self.coeffs.entry(s).or_insert_with(Q::zero);
            *e += c;
            e.is_zero()
        };
        if drop {
            self.coeffs.remove(&s);
        }
    }

    pub fn coeff(&self, s: &BasisSymbol) -> Q {
        self.coeffs.get(s).cloned().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisSymbol, &Q)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &H1Vector) -> H1Vector {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (s, c) in &other.coeffs {
            out.add_term(*s, c);
        }
        out
    }

    pub fn scale(&self, c: &Q) -> H1Vector {
        H1Vector::from_terms(self.n, self.coeffs.iter().map(|(s, x)| (*s, x * c)))
    }

    pub fn sub(&self, other: &H1Vector) -> H1Vector {
        self.add(&other.scale(&-Q::one()))
    }

    /// Same symbols read with more strands.
    pub fn with_strands(&self, n: usize) -> Result<H1Vector> {
        if let Some(s) = self.coeffs.keys().find(|s| s.max_label() > n) {
            return Err(Error::Invalid(format!("symbol {s} needs more than {n} strands")));
        }
        Ok(H1Vector { n, coeffs: self.coeffs.clone() })
    }

    pub fn to_qvec(&self, index: &impl Fn(&BasisSymbol) -> usize) -> QVec {
        self.coeffs.iter().map(|(s, c)| (index(s), c.clone())).collect()
    }

    /// JSON object `symbol -> "p/q"` in canonical order.
    pub fn to_json(&self) -> serde_json::Value {
        let mut m = serde_json::Map::new();
        for (s, c) in &self.coeffs {
            m.insert(s.to_string(), serde_json::Value::String(format_q(c)));
        }
        serde_json::Value::Object(m)
    }
}

impl fmt::Display for H1Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|(s, c)| format!("{} {}", format_q(c), s)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        let dims: Vec<usize> = (1..=7).map(dim_h1).collect();
        assert_eq!(dims, vec![0, 1, 6, 21, 55, 120, 231]);
        for n in 1..=7 {
            assert_eq!(enumerate_basis(n).len(), dim_h1(n));
        }
    }

    #[test]
    fn three_strand_basis() {
        let names: Vec<String> = enumerate_basis(3).iter().map(|s| s.to_string()).collect();
        assert_eq!(names, ["t(1,2)", "t(1,3)", "t(2,3)", "T(1,3)*t(1,2)", "T(2,3)*t(1,3)", "T(1,2)*t(2,3)"]);
    }

    #[test]
    fn monomials_round_trip() {
        for s in enumerate_basis(6) {
            assert_eq!(BasisSymbol::from_monomial(s.target(), &s.extras()), Some(s));
        }
        // Target avoiding the minimum is not canonical.
        assert_eq!(BasisSymbol::from_monomial(Pair::new(3, 4), &[1, 2]), None);
    }

    #[test]
    fn four_strand_s3_names() {
        let names: Vec<String> = enumerate_basis(4).iter().skip(18).map(|s| s.to_string()).collect();
        assert_eq!(names, ["T(1,4)T(2,3)*t(1,2)", "T(1,2)T(3,4)*t(1,3)", "T(1,3)T(2,4)*t(1,4)"]);
    }
}
