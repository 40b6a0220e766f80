//! Braid words, pure braid words, Burau matrices at `t = -1`, winding numbers
//! and the Artin conjugation table.
//!
//! Words compose right to left: in `uv` the factor `v` happens first. The Burau
//! map is a homomorphism for this convention, `burau(uv) = burau(u) burau(v)`,
//! with `sigma_i` acting on columns `i, i+1` by the block `[[2, -1], [1, 0]]`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{q_frac, Q};
use crate::pairs::{Pair, PairSubset};

/// One letter `s_i` or its inverse `S_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    pub index: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn sigma(index: usize) -> Letter {
        Letter { index, inverse: false }
    }

    pub fn sigma_inv(index: usize) -> Letter {
        Letter { index, inverse: true }
    }

    pub fn inv(self) -> Letter {
        Letter { index: self.index, inverse: !self.inverse }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    pub n: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn identity(n: usize) -> BraidWord {
        BraidWord { n, letters: Vec::new() }
    }

    pub fn new(n: usize, letters: Vec<Letter>) -> Result<BraidWord> {
        if let Some(l) = letters.iter().find(|l| l.index == 0 || l.index >= n) {
            return Err(Error::IndexOutOfRange { index: l.index, n });
        }
        Ok(BraidWord { n, letters })
    }

    /// Word from signed indices: `+i` is `s_i`, `-i` is `S_i`.
    pub fn from_signed(n: usize, signed: &[i32]) -> Result<BraidWord> {
        let letters = signed
            .iter()
            .map(|&s| Letter { index: s.unsigned_abs() as usize, inverse: s < 0 })
            .collect();
        BraidWord::new(n, letters)
    }

    pub fn sigma(n: usize, i: usize) -> Result<BraidWord> {
        BraidWord::new(n, vec![Letter::sigma(i)])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord { n: self.n, letters: self.letters.iter().rev().map(|l| l.inv()).collect() }
    }

    /// The product `self * other` (so `other` acts first).
    pub fn mul(&self, other: &BraidWord) -> BraidWord {
        assert_eq!(self.n, other.n, "strand counts differ");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { n: self.n, letters }
    }

    pub fn pow(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = BraidWord::identity(self.n);
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// `self * w * self^{-1}`.
    pub fn conjugate(&self, w: &BraidWord) -> BraidWord {
        self.mul(w).mul(&self.inverse())
    }

    /// Cancels adjacent inverse letters.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord { n: self.n, letters: out }
    }

    /// Induced permutation, 1-based: `perm[a-1]` is the final position of the
    /// strand that starts at position `a` (letters are read right to left).
    pub fn permutation(&self) -> Vec<usize> {
        let mut pos: Vec<usize> = (1..=self.n).collect();
        for l in self.letters.iter().rev() {
            for p in pos.iter_mut() {
                if *p == l.index {
                    *p = l.index + 1;
                } else if *p == l.index + 1 {
                    *p = l.index;
                }
            }
        }
        pos
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().iter().enumerate().all(|(a, p)| *p == a + 1)
    }

    /// Same word read with more strands (standard inclusion `B_n -> B_{n'}`).
    pub fn with_strands(&self, n: usize) -> Result<BraidWord> {
        BraidWord::new(n, self.letters.clone())
    }

    /// Shifts every generator index by `offset` inside `n` strands.
    pub fn shifted(&self, offset: usize, n: usize) -> Result<BraidWord> {
        BraidWord::new(n, self.letters.iter().map(|l| Letter { index: l.index + offset, inverse: l.inverse }).collect())
    }

    /// Parses `"s1 S2 s1"`; letters may also be written without spaces (`"s1S2"`).
    /// The empty string (or `"e"`) is the identity.
    pub fn parse(n: usize, s: &str) -> Result<BraidWord> {
        let mut letters = Vec::new();
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if chars.iter().collect::<String>() == "e" {
            return Ok(BraidWord::identity(n));
        }
        let mut k = 0;
        while k < chars.len() {
            let inverse = match chars[k] {
                's' => false,
                'S' => true,
                c => return Err(Error::Parse(format!("unexpected `{c}` in braid word"))),
            };
            k += 1;
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let digits: String = chars[start..k].iter().collect();
            let index = digits.parse::<usize>().map_err(|_| Error::Parse("missing generator index".into()))?;
            letters.push(Letter { index, inverse });
        }
        BraidWord::new(n, letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> =
            self.letters.iter().map(|l| format!("{}{}", if l.inverse { "S" } else { "s" }, l.index)).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// A word in the Artin generators `A_{ij}` with integer exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PureBraidWord {
    pub n: usize,
    letters: Vec<(Pair, i64)>,
}

impl PureBraidWord {
    pub fn identity(n: usize) -> PureBraidWord {
        PureBraidWord { n, letters: Vec::new() }
    }

    pub fn new(n: usize, letters: Vec<(Pair, i64)>) -> Result<PureBraidWord> {
        if let Some((p, _)) = letters.iter().find(|(p, _)| p.j > n || p.i == 0) {
            return Err(Error::IndexOutOfRange { index: p.j, n });
        }
        Ok(PureBraidWord { n, letters }.normalized())
    }

    /// `A_{ij}^k`.
    pub fn generator(n: usize, i: usize, j: usize, k: i64) -> Result<PureBraidWord> {
        PureBraidWord::new(n, vec![(Pair::new(i, j), k)])
    }

    pub fn letters(&self) -> &[(Pair, i64)] {
        &self.letters
    }

    /// Merges equal neighbours and drops zero exponents.
    fn normalized(self) -> PureBraidWord {
        let mut out: Vec<(Pair, i64)> = Vec::with_capacity(self.letters.len());
        for (p, k) in self.letters {
            if k == 0 {
                continue;
            }
            match out.last_mut() {
                Some((q, e)) if *q == p => {
                    *e += k;
                    if *e == 0 {
                        out.pop();
                    }
                }
                _ => out.push((p, k)),
            }
        }
        PureBraidWord { n: self.n, letters: out }
    }

    pub fn inverse(&self) -> PureBraidWord {
        PureBraidWord { n: self.n, letters: self.letters.iter().rev().map(|(p, k)| (*p, -k)).collect() }
    }

    pub fn mul(&self, other: &PureBraidWord) -> PureBraidWord {
        assert_eq!(self.n, other.n, "strand counts differ");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        PureBraidWord { n: self.n, letters }.normalized()
    }

    pub fn pow(&self, k: i64) -> PureBraidWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = PureBraidWord::identity(self.n);
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    pub fn conjugate(&self, w: &PureBraidWord) -> PureBraidWord {
        self.mul(w).mul(&self.inverse())
    }

    /// `[x, y] = x y x^{-1} y^{-1}`.
    pub fn commutator(x: &PureBraidWord, y: &PureBraidWord) -> PureBraidWord {
        x.mul(y).mul(&x.inverse()).mul(&y.inverse())
    }

    /// Expansion `A_{ij} = s_{j-1} ... s_{i+1} s_i^2 S_{i+1} ... S_{j-1}`.
    pub fn to_braid_word(&self) -> BraidWord {
        let mut letters = Vec::new();
        for (p, k) in &self.letters {
            let a = artin_generator_letters(*p);
            let unit: Vec<Letter> = if *k > 0 { a } else { a.iter().rev().map(|l| l.inv()).collect() };
            for _ in 0..k.unsigned_abs() {
                letters.extend_from_slice(&unit);
            }
        }
        BraidWord { n: self.n, letters }
    }

    /// Exponent sum of each generator, in lexicographic pair order.
    pub fn exponent_sums(&self) -> Vec<i64> {
        let mut out = vec![0; crate::pairs::num_pairs(self.n)];
        for (p, k) in &self.letters {
            out[p.index(self.n)] += k;
        }
        out
    }

    /// Parses `"A(1,2)^2 A(1,3)^-1 A(2,3)"`; `"e"` or empty is the identity.
    pub fn parse(n: usize, s: &str) -> Result<PureBraidWord> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() || compact == "e" {
            return Ok(PureBraidWord::identity(n));
        }
        let mut letters = Vec::new();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let body = rest.strip_prefix("A(").ok_or_else(|| Error::Parse(format!("expected `A(` at `{rest}`")))?;
            let close = body.find(')').ok_or_else(|| Error::Parse("unclosed generator".into()))?;
            let (a, b) = body[..close].split_once(',').ok_or_else(|| Error::Parse("generator needs two labels".into()))?;
            let a: usize = a.parse().map_err(|_| Error::Parse(format!("bad label `{a}`")))?;
            let b: usize = b.parse().map_err(|_| Error::Parse(format!("bad label `{b}`")))?;
            if a == b {
                return Err(Error::Parse("generator labels must differ".into()));
            }
            rest = &body[close + 1..];
            let mut k = 1i64;
            if let Some(r) = rest.strip_prefix('^') {
                let end = r.char_indices().find(|(i, c)| !(c.is_ascii_digit() || (*i == 0 && *c == '-'))).map_or(r.len(), |(i, _)| i);
                k = r[..end].parse().map_err(|_| Error::Parse("bad exponent".into()))?;
                rest = &r[end..];
            }
            letters.push((Pair::new(a, b), k));
        }
        PureBraidWord::new(n, letters)
    }
}

impl fmt::Display for PureBraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|(p, k)| if *k == 1 { format!("A({},{})", p.i, p.j) } else { format!("A({},{})^{}", p.i, p.j, k) })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

fn artin_generator_letters(p: Pair) -> Vec<Letter> {
    let (i, j) = (p.i, p.j);
    let mut out = Vec::new();
    for k in (i + 1..j).rev() {
        out.push(Letter::sigma(k));
    }
    out.push(Letter::sigma(i));
    out.push(Letter::sigma(i));
    for k in i + 1..j {
        out.push(Letter::sigma_inv(k));
    }
    out
}

/// The full twist `T_d` as a pure word: `A12 (A13 A23) (A14 A24 A34) ...`.
pub fn full_twist(n: usize) -> PureBraidWord {
    let mut letters = Vec::new();
    for j in 2..=n {
        for i in 1..j {
            letters.push((Pair::new(i, j), 1));
        }
    }
    PureBraidWord { n, letters }
}

/// Half twist `s_{ij}` exchanging points `i < j` along the arc above the
/// intermediate points: `(s_{j-1} ... s_{i+1}) s_i (s_{j-1} ... s_{i+1})^{-1}`.
pub fn half_twist(n: usize, i: usize, j: usize) -> Result<BraidWord> {
    let outer = BraidWord::new(n, (i + 1..j).rev().map(Letter::sigma).collect())?;
    Ok(outer.conjugate(&BraidWord::new(n, vec![Letter::sigma(i)])?))
}

/// Integral Burau matrix at `t = -1`, optionally reduced mod `m` (`m = 0` keeps integers).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BurauMatrix {
    pub n: usize,
    pub modulus: u64,
    /// Row-major entries; residues in `[0, m)` when `m > 0`.
    pub entries: Vec<BigInt>,
}

impl BurauMatrix {
    pub fn identity(n: usize, modulus: u64) -> BurauMatrix {
        let mut entries = vec![BigInt::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = BigInt::one();
        }
        BurauMatrix { n, modulus, entries }.reduced()
    }

    fn reduced(mut self) -> BurauMatrix {
        if self.modulus > 0 {
            let m = BigInt::from(self.modulus);
            for x in self.entries.iter_mut() {
                *x = x.mod_floor(&m);
            }
        }
        self
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.n + c]
    }

    /// Right multiplication by the matrix of one letter (column operation).
    fn mul_letter(&mut self, l: Letter) {
        let n = self.n;
        let (a, b) = (l.index - 1, l.index);
        for r in 0..n {
            let x = self.entries[r * n + a].clone();
            let y = self.entries[r * n + b].clone();
            let (na, nb) = if l.inverse {
                // block [[0, 1], [-1, 2]]
                (-&y, &x + &y * 2)
            } else {
                // block [[2, -1], [1, 0]]
                (&x * 2 + &y, -x)
            };
            self.entries[r * n + a] = na;
            self.entries[r * n + b] = nb;
        }
    }

    pub fn mul(&self, other: &BurauMatrix) -> BurauMatrix {
        let n = self.n;
        let mut entries = vec![BigInt::zero(); n * n];
        for r in 0..n {
            for k in 0..n {
                let x = &self.entries[r * n + k];
                if x.is_zero() {
                    continue;
                }
                for c in 0..n {
                    entries[r * n + c] += x * &other.entries[k * n + c];
                }
            }
        }
        BurauMatrix { n, modulus: self.modulus, entries }.reduced()
    }

    pub fn is_identity(&self) -> bool {
        *self == BurauMatrix::identity(self.n, self.modulus)
    }

    pub fn to_rows(&self) -> Vec<Vec<String>> {
        (0..self.n).map(|r| (0..self.n).map(|c| self.get(r, c).to_string()).collect()).collect()
    }
}

pub fn burau_mod(w: &BraidWord, m: u64) -> BurauMatrix {
    let mut acc = BurauMatrix::identity(w.n, m);
    for &l in w.letters() {
        acc.mul_letter(l);
        if m > 0 {
            acc = acc.reduced();
        }
    }
    acc
}

/// `w ∈ B_n[m]`, the kernel of Burau at `t = -1` reduced mod `m`.
pub fn level_membership(w: &BraidWord, m: u64) -> Result<bool> {
    if m == 0 {
        return Err(Error::Invalid("level must be at least 1".into()));
    }
    Ok(burau_mod(w, m).is_identity())
}

/// Winding numbers `xi_{ab}` for all pairs of strands, labelled by starting
/// position; each crossing contributes `±1/2`.
pub fn winding_all(w: &BraidWord) -> Vec<Vec<Q>> {
    let n = w.n;
    let mut twice = vec![vec![0i64; n + 1]; n + 1];
    // strand_at[p] = label of the strand currently at position p.
    let mut strand_at: Vec<usize> = (0..=n).collect();
    for l in w.letters().iter().rev() {
        let (a, b) = (strand_at[l.index], strand_at[l.index + 1]);
        let s = if l.inverse { -1 } else { 1 };
        twice[a][b] += s;
        twice[b][a] += s;
        strand_at.swap(l.index, l.index + 1);
    }
    twice.iter().map(|row| row.iter().map(|x| q_frac(*x, 2)).collect()).collect()
}

/// `xi_{ij}(w)`: total winding of strands `i` and `j`.
pub fn winding(w: &BraidWord, i: usize, j: usize) -> Result<Q> {
    if i == j || i == 0 || j == 0 || i > w.n || j > w.n {
        return Err(Error::Invalid(format!("strand pair ({i},{j}) invalid for {} strands", w.n)));
    }
    Ok(winding_all(w)[i][j].clone())
}

/// `(omega_k, rho_k)` for `k ∈ {3, 4}`; `omega_3 = xi13 + xi23`,
/// `omega_4 = xi13 + xi14 + xi23 + xi24`, `rho_k = (-1)^{omega_k}`.
pub fn omega_rho(w: &BraidWord, k: usize) -> Result<(i64, i8)> {
    let i = match k {
        3 => PairSubset::i3(w.n.max(3)),
        4 => PairSubset::i4(w.n.max(4)),
        _ => return Err(Error::Invalid(format!("omega_k is defined for k = 3, 4, not {k}"))),
    };
    if w.n < k {
        return Err(Error::Invalid(format!("omega_{k} needs at least {k} strands")));
    }
    let perm = w.permutation();
    if i.permute(&perm) != i {
        return Err(Error::NotInStabilizer { k });
    }
    let xi = winding_all(w);
    let total = i.pairs.iter().fold(Q::zero(), |acc, p| acc + &xi[p.i][p.j]);
    if !total.is_integer() {
        return Err(Error::NotInStabilizer { k });
    }
    let omega: i64 = total.to_integer().try_into().map_err(|_| Error::Invalid("winding overflow".into()))?;
    let rho = if omega.rem_euclid(2) == 0 { 1 } else { -1 };
    Ok((omega, rho))
}

/// `s_k A_{ij} s_k^{-1} = W A_{cd} W^{-1}`: returns `(W, {c,d})` with `W` empty or one generator.
pub fn conj_generator(k: usize, p: Pair) -> (Option<Pair>, Pair) {
    let (i, j) = (p.i, p.j);
    if k == i && j == i + 1 {
        (None, p)
    } else if k + 1 == i {
        (Some(Pair::new(k, i)), Pair::new(k, j))
    } else if k == i {
        (None, Pair::new(i + 1, j))
    } else if k + 1 == j {
        (Some(Pair::new(j - 1, j)), Pair::new(i, j - 1))
    } else if k == j {
        (None, Pair::new(i, j + 1))
    } else {
        (None, p)
    }
}

/// `s_k w s_k^{-1}` rewritten in Artin generators.
pub fn conj_pure(k: usize, w: &PureBraidWord) -> Result<PureBraidWord> {
    if k == 0 || k >= w.n {
        return Err(Error::IndexOutOfRange { index: k, n: w.n });
    }
    let mut letters = Vec::new();
    for (p, e) in w.letters() {
        let (outer, inner) = conj_generator(k, *p);
        match outer {
            Some(o) => {
                letters.push((o, 1));
                letters.push((inner, *e));
                letters.push((o, -1));
            }
            None => letters.push((inner, *e)),
        }
    }
    PureBraidWord::new(w.n, letters)
}

/// Freely reduced word in the free group `F_n` (letters `±1..=±n`).
pub type FreeWord = Vec<i32>;

fn free_push(out: &mut FreeWord, x: i32) {
    if out.last() == Some(&-x) {
        out.pop();
    } else {
        out.push(x);
    }
}

fn substitute(word: &FreeWord, images: &[FreeWord]) -> FreeWord {
    let mut out = FreeWord::new();
    for &x in word {
        let img = &images[x.unsigned_abs() as usize];
        if x > 0 {
            for &y in img {
                free_push(&mut out, y);
            }
        } else {
            for &y in img.iter().rev() {
                free_push(&mut out, -y);
            }
        }
    }
    out
}

/// Images of the free generators under the Artin automorphism of `w`.
///
/// The Artin representation is faithful, so two braid words are equal in
/// `B_n` exactly when these images agree.
pub fn artin_images(w: &BraidWord) -> Vec<FreeWord> {
    let n = w.n as i32;
    let mut images: Vec<FreeWord> = (0..=n).map(|x| vec![x]).collect();
    for l in w.letters().iter().rev() {
        let i = l.index as i32;
        let mut gen: Vec<FreeWord> = (0..=n).map(|x| vec![x]).collect();
        if l.inverse {
            gen[i as usize] = vec![i + 1];
            gen[i as usize + 1] = vec![-(i + 1), i, i + 1];
        } else {
            gen[i as usize] = vec![i, i + 1, -i];
            gen[i as usize + 1] = vec![i];
        }
        for x in 1..=n as usize {
            images[x] = substitute(&images[x], &gen);
        }
    }
    images
}

/// Equality in `B_n`, decided through the Artin action on the free group.
pub fn braid_equal(u: &BraidWord, v: &BraidWord) -> bool {
    u.n == v.n && artin_images(u) == artin_images(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn bw(n: usize, s: &str) -> BraidWord {
        BraidWord::parse(n, s).unwrap()
    }

    fn ints(m: &BurauMatrix) -> Vec<i64> {
        m.entries.iter().map(|x| x.to_i64().unwrap()).collect()
    }

    #[test]
    fn burau_examples() {
        assert!(burau_mod(&BraidWord::identity(3), 4).is_identity());
        assert_eq!(ints(&burau_mod(&bw(2, "s1"), 4)), vec![2, 3, 1, 0]);
        assert!(burau_mod(&bw(2, "s1 s1"), 2).is_identity());
        assert_eq!(ints(&burau_mod(&bw(2, "s1"), 0)), vec![2, -1, 1, 0]);
        assert!(burau_mod(&bw(3, "s1 S1 s2 S2"), 0).is_identity());
    }

    #[test]
    fn level_examples() {
        assert!(!level_membership(&bw(2, "s1"), 2).unwrap());
        assert!(level_membership(&bw(2, "s1 s1"), 2).unwrap());
        assert!(level_membership(&bw(2, "s1 s1 s1 s1"), 4).unwrap());
        assert!(!level_membership(&bw(2, "s1 s1"), 4).unwrap());
    }

    #[test]
    fn parse_and_display() {
        let w = bw(4, "s1S2 s3");
        assert_eq!(w.to_string(), "s1 S2 s3");
        assert!(BraidWord::parse(3, "s3").is_err());
        assert!(BraidWord::parse(3, "x1").is_err());
        let p = PureBraidWord::parse(4, "A(1,2)^2 A(1,3)^-1 A(2,4)").unwrap();
        assert_eq!(p.to_string(), "A(1,2)^2 A(1,3)^-1 A(2,4)");
        assert_eq!(PureBraidWord::parse(3, "A(1,2) A(1,2)^-1").unwrap(), PureBraidWord::identity(3));
    }

    #[test]
    fn winding_examples() {
        assert_eq!(winding(&bw(2, "s1"), 1, 2).unwrap(), q_frac(1, 2));
        assert_eq!(winding(&bw(2, "s1 s1"), 1, 2).unwrap(), q_frac(1, 1));
        let a23 = PureBraidWord::generator(3, 2, 3, 1).unwrap().to_braid_word();
        assert_eq!(winding(&a23, 1, 3).unwrap(), q_frac(0, 1));
        for n in 2..6 {
            for p in crate::pairs::all_pairs(n) {
                let w = PureBraidWord::generator(n, p.i, p.j, 1).unwrap().to_braid_word();
                let xi = winding_all(&w);
                for r in crate::pairs::all_pairs(n) {
                    let expect = if r == p { 1 } else { 0 };
                    assert_eq!(xi[r.i][r.j], q_frac(expect, 1), "xi_{r} of A_{p}");
                }
            }
        }
    }

    #[test]
    fn omega_examples() {
        let w = |s: &str| PureBraidWord::parse(4, s).unwrap().to_braid_word();
        assert_eq!(omega_rho(&w("A(1,2)"), 3).unwrap(), (0, 1));
        assert_eq!(omega_rho(&w("A(1,3)"), 3).unwrap(), (1, -1));
        assert_eq!(omega_rho(&w("A(1,3) A(2,4)"), 4).unwrap(), (2, 1));
        assert_eq!(omega_rho(&bw(4, "s2"), 3), Err(Error::NotInStabilizer { k: 3 }));
        assert!(omega_rho(&bw(4, "s1"), 3).is_ok());
        assert!(omega_rho(&bw(4, "s2 s1 s3 s2"), 4).is_ok());
    }

    #[test]
    fn conjugation_table_examples() {
        let p = |s: &str| PureBraidWord::parse(4, s).unwrap();
        assert_eq!(conj_pure(1, &p("A(1,2)")).unwrap(), p("A(1,2)"));
        assert_eq!(conj_pure(1, &p("A(1,4)")).unwrap(), p("A(2,4)"));
        assert_eq!(conj_pure(1, &p("A(2,3)")).unwrap(), p("A(1,2) A(1,3) A(1,2)^-1"));
    }

    #[test]
    fn conjugation_table_is_exact_in_the_braid_group() {
        for n in 2..=6 {
            for k in 1..n {
                for pr in crate::pairs::all_pairs(n) {
                    let a = PureBraidWord::generator(n, pr.i, pr.j, 1).unwrap();
                    let lhs = BraidWord::sigma(n, k).unwrap().conjugate(&a.to_braid_word());
                    let rhs = conj_pure(k, &a).unwrap().to_braid_word();
                    assert!(braid_equal(&lhs, &rhs), "s{k} A{pr} s{k}^-1, n = {n}");
                    assert_eq!(burau_mod(&lhs, 4), burau_mod(&rhs, 4));
                }
            }
        }
    }

    #[test]
    fn full_twist_matches_garside_square() {
        for n in 2..=5 {
            let mut delta = BraidWord::identity(n);
            let row = BraidWord::new(n, (1..n).map(Letter::sigma).collect()).unwrap();
            for _ in 0..n {
                delta = delta.mul(&row);
            }
            assert!(braid_equal(&delta, &full_twist(n).to_braid_word()), "n = {n}");
        }
    }

    #[test]
    fn artin_detects_braid_relations() {
        assert!(braid_equal(&bw(3, "s1 s2 s1"), &bw(3, "s2 s1 s2")));
        assert!(braid_equal(&bw(4, "s1 s3"), &bw(4, "s3 s1")));
        assert!(!braid_equal(&bw(3, "s1 s2"), &bw(3, "s2 s1")));
        assert!(!braid_equal(&bw(2, "s1 s1"), &BraidWord::identity(2)));
    }

    #[test]
    fn half_twist_squares_to_artin_generator() {
        for (i, j) in [(1, 3), (1, 4), (2, 4)] {
            let h = half_twist(4, i, j).unwrap();
            let a = PureBraidWord::generator(4, i, j, 1).unwrap().to_braid_word();
            assert!(braid_equal(&h.mul(&h), &a));
        }
    }
}
