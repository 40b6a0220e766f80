//! Detection maps to the abelianizations of the double covers.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_traits::Zero;
use serde_json::{json, Value};

use crate::braid::PureBraidWord;
use crate::error::{Error, Result};
use crate::h1::{forgetful, BasisSymbol, H1Space, H1Vector};
use crate::linalg::{format_q, q, Echelon, QVec, Q};
use crate::pairs::{all_pairs, Pair};

/// A marked point of a cover: `idx` or `idx'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label {
    pub primed: bool,
    pub idx: usize,
}

impl Label {
    pub fn plain(idx: usize) -> Label {
        Label { primed: false, idx }
    }

    pub fn prime(idx: usize) -> Label {
        Label { primed: true, idx }
    }

    pub fn swap_prime(self) -> Label {
        Label { primed: !self.primed, idx: self.idx }
    }

    pub fn parse(s: &str) -> Result<Label> {
        let s = s.trim();
        let (body, primed) = match s.strip_suffix('\'') {
            Some(b) => (b, true),
            None => (s, false),
        };
        let idx = body.parse().map_err(|_| Error::Parse(format!("bad label `{s}`")))?;
        Ok(Label { primed, idx })
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.idx, if self.primed { "'" } else { "" })
    }
}

/// Which map: the abelianization of `PB_n`, an `(i,inf)`-cover or an `(i,j)`-cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cover {
    Base,
    Infinity(usize),
    Pair(Pair),
}

impl Cover {
    pub fn all(n: usize) -> Vec<Cover> {
        let mut out = vec![Cover::Base];
        out.extend((1..=n).map(Cover::Infinity));
        out.extend(all_pairs(n).into_iter().map(Cover::Pair));
        out
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        let ok = match *self {
            Cover::Base => true,
            Cover::Infinity(i) => (1..=n).contains(&i),
            Cover::Pair(p) => p.j <= n,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Invalid(format!("cover {self} needs labels in [{n}]")))
        }
    }

    /// Marked points of the cover.
    pub fn labels(&self, n: usize) -> Vec<Label> {
        let mut out: Vec<Label> = (1..=n).map(Label::plain).collect();
        match *self {
            Cover::Base => {}
            Cover::Infinity(i) => out.extend((1..=n).filter(|&x| x != i).map(Label::prime)),
            Cover::Pair(p) => out.extend((1..=n).filter(|&x| !p.contains(x)).map(Label::prime)),
        }
        out
    }

    fn finite_ends(&self) -> Vec<usize> {
        match *self {
            Cover::Base => vec![],
            Cover::Infinity(i) => vec![i],
            Cover::Pair(p) => vec![p.i, p.j],
        }
    }

    /// `(i, j)` with `j = usize::MAX` for infinity.
    fn ends(&self) -> (usize, usize) {
        match *self {
            Cover::Base => (0, 0),
            Cover::Infinity(i) => (i, usize::MAX),
            Cover::Pair(p) => (p.i, p.j),
        }
    }

    pub fn parse(s: &str) -> Result<Cover> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t == "base" {
            return Ok(Cover::Base);
        }
        let body = t
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("bad cover `{s}`")))?;
        let (a, b) = body.split_once(',').ok_or_else(|| Error::Parse(format!("bad cover `{s}`")))?;
        let a: usize = a.parse().map_err(|_| Error::Parse(format!("bad cover `{s}`")))?;
        if b == "inf" || b == "∞" {
            return Ok(Cover::Infinity(a));
        }
        let b: usize = b.parse().map_err(|_| Error::Parse(format!("bad cover `{s}`")))?;
        if a == b || a == 0 || b == 0 {
            return Err(Error::Parse(format!("bad cover `{s}`")));
        }
        Ok(Cover::Pair(Pair::new(a, b)))
    }
}

impl fmt::Display for Cover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cover::Base => write!(f, "base"),
            Cover::Infinity(i) => write!(f, "({i},inf)"),
            Cover::Pair(p) => write!(f, "({},{})", p.i, p.j),
        }
    }
}

/// Rational combination of label pairs `(a b)` with `a < b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairVector {
    pub cover: Cover,
    pub entries: BTreeMap<(Label, Label), Q>,
}

impl PairVector {
    pub fn zero(cover: Cover) -> PairVector {
        PairVector { cover, entries: BTreeMap::new() }
    }

    pub fn add_pair(&mut self, a: Label, b: Label, c: &Q) {
        assert_ne!(a, b, "a pair needs two labels");
        let key = if a < b { (a, b) } else { (b, a) };
        let e = self.entries.entry(key).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.entries.remove(&key);
        }
    }

    pub fn get(&self, a: Label, b: Label) -> Q {
        let key = if a < b { (a, b) } else { (b, a) };
        self.entries.get(&key).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add(&self, other: &PairVector) -> PairVector {
        let mut out = self.clone();
        for ((a, b), c) in &other.entries {
            out.add_pair(*a, *b, c);
        }
        out
    }

    pub fn scale(&self, c: &Q) -> PairVector {
        let mut out = PairVector::zero(self.cover);
        if !c.is_zero() {
            out.entries = self.entries.iter().map(|(k, x)| (*k, x * c)).collect();
        }
        out
    }

    pub fn sub(&self, other: &PairVector) -> PairVector {
        self.add(&other.scale(&q(-1)))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Applies a permutation of labels.
    pub fn relabel(&self, f: impl Fn(Label) -> Label) -> PairVector {
        let mut out = PairVector::zero(self.cover);
        for ((a, b), c) in &self.entries {
            out.add_pair(f(*a), f(*b), c);
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let entries: serde_json::Map<String, Value> = self
            .entries
            .iter()
            .map(|((a, b), c)| {
                let v = match crate::linalg::to_i64(c) {
                    Some(x) => json!(x),
                    None => json!(format_q(c)),
                };
                (format!("({a},{b})"), v)
            })
            .collect();
        json!({ "cover": self.cover.to_string(), "entries": entries })
    }
}

impl fmt::Display for PairVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.entries.iter().map(|((a, b), c)| format!("{}({a}{b})", format_q(c))).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `(a_1 ... a_k)`: the sum of all pairs from the set.
pub fn subset_symbol(cover: Cover, labels: &BTreeSet<Label>) -> PairVector {
    let mut out = PairVector::zero(cover);
    let v: Vec<Label> = labels.iter().copied().collect();
    for (x, a) in v.iter().enumerate() {
        for b in &v[x + 1..] {
            out.add_pair(*a, *b, &q(1));
        }
    }
    out
}

/// `delta_ab = (ab) + (a'b') - (ab') - (a'b)`.
pub fn delta(cover: Cover, a: usize, b: usize) -> PairVector {
    let mut out = PairVector::zero(cover);
    out.add_pair(Label::plain(a), Label::plain(b), &q(1));
    out.add_pair(Label::prime(a), Label::prime(b), &q(1));
    out.add_pair(Label::plain(a), Label::prime(b), &q(-1));
    out.add_pair(Label::prime(a), Label::plain(b), &q(-1));
    out
}

fn set(labels: impl IntoIterator<Item = Label>) -> BTreeSet<Label> {
    labels.into_iter().collect()
}

/// How a pair `{k, l}` sits relative to the arc of a cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Position {
    MeetsLow,
    MeetsHigh,
    Equal,
    Linked,
    /// Nested or separated: the pair and the arc do not cross.
    Unlinked,
}

pub fn position(cover: Cover, p: Pair) -> Position {
    let (i, j) = cover.ends();
    let (k, l) = (p.i, p.j);
    let hits: Vec<usize> = cover.finite_ends().into_iter().filter(|x| p.contains(*x)).collect();
    match hits.as_slice() {
        [x] if *x == k => Position::MeetsLow,
        [_] => Position::MeetsHigh,
        [_, _] => Position::Equal,
        _ => {
            if (i < k && k < j && j < l) || (k < i && i < l && l < j) {
                Position::Linked
            } else {
                Position::Unlinked
            }
        }
    }
}

/// Image of `tau_kl` (the square of an Artin generator) under the cover map.
pub fn psi_square(cover: Cover, n: usize, p: Pair) -> PairVector {
    if cover == Cover::Base {
        let mut out = PairVector::zero(cover);
        out.add_pair(Label::plain(p.i), Label::plain(p.j), &q(2));
        return out;
    }
    let (k, l) = (p.i, p.j);
    let two = q(2);
    let (kk, ll) = (Label::plain(k), Label::plain(l));
    match position(cover, p) {
        Position::MeetsLow => subset_symbol(cover, &set([kk, ll, ll.swap_prime()])),
        Position::MeetsHigh => subset_symbol(cover, &set([kk, kk.swap_prime(), ll])),
        Position::Unlinked => {
            let mut out = PairVector::zero(cover);
            out.add_pair(kk, ll, &two);
            out.add_pair(kk.swap_prime(), ll.swap_prime(), &two);
            out
        }
        Position::Linked => {
            let mut out = PairVector::zero(cover);
            out.add_pair(kk, ll.swap_prime(), &two);
            out.add_pair(kk.swap_prime(), ll, &two);
            out
        }
        Position::Equal => {
            let rest: Vec<Label> = (1..=n).filter(|x| !p.contains(*x)).map(Label::prime).collect();
            let big = subset_symbol(cover, &set(rest.iter().copied().chain([kk, ll])));
            let small = subset_symbol(cover, &set(rest));
            big.add(&small).scale(&two)
        }
    }
}

/// The label permutation induced by `T_kl` on a cover, as an involution.
pub fn iota(cover: Cover, p: Pair) -> impl Fn(Label) -> Label {
    let swap = match position(cover, p) {
        _ if cover == Cover::Base => None,
        Position::MeetsLow => Some(p.j),
        Position::MeetsHigh => Some(p.i),
        _ => None,
    };
    move |x: Label| if Some(x.idx) == swap { x.swap_prime() } else { x }
}

fn symbol_image(cover: Cover, n: usize, s: &BasisSymbol) -> PairVector {
    let mut v = psi_square(cover, n, s.target());
    for p in s.twists().iter().rev() {
        v = v.relabel(iota(cover, *p));
    }
    v
}

pub fn psi_cover(cover: Cover, v: &H1Vector) -> Result<PairVector> {
    cover.validate(v.n)?;
    let mut out = PairVector::zero(cover);
    for (s, c) in v.terms() {
        out = out.add(&symbol_image(cover, v.n, s).scale(c));
    }
    Ok(out)
}

pub fn psi_base(v: &H1Vector) -> PairVector {
    psi_cover(Cover::Base, v).expect("base cover is always valid")
}

/// Base map on a pure braid word: exponent sums of the Artin generators.
pub fn psi_base_word(w: &PureBraidWord) -> PairVector {
    let mut out = PairVector::zero(Cover::Base);
    for (p, e) in w.letters() {
        out.add_pair(Label::plain(p.i), Label::plain(p.j), &q(*e));
    }
    out
}

/// Combinatorial data of a curve relative to the arc of a cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CurveSplit {
    /// Exactly one finite end of the arc is enclosed.
    OneInside,
    /// No end enclosed; the enclosed labels split by crossing parity.
    Disjoint { a1: BTreeSet<usize>, a2: BTreeSet<usize> },
    /// Both ends enclosed; outside labels split by crossing parity to the boundary.
    Contains { b: BTreeSet<usize>, c: BTreeSet<usize> },
}

fn primes(s: &BTreeSet<usize>) -> impl Iterator<Item = Label> + '_ {
    s.iter().map(|x| Label::prime(*x))
}

fn plains(s: &BTreeSet<usize>) -> impl Iterator<Item = Label> + '_ {
    s.iter().map(|x| Label::plain(*x))
}

/// Image of `T_c^2` for a curve enclosing the labels `a`.
pub fn psi_general_curve(cover: Cover, n: usize, a: &BTreeSet<usize>, split: &CurveSplit) -> Result<PairVector> {
    cover.validate(n)?;
    if a.iter().any(|x| *x == 0 || *x > n) {
        return Err(Error::Invalid(format!("curve labels must lie in [{n}]")));
    }
    let mismatch = |m: &str| Err(Error::CaseMismatch(m.to_string()));
    if cover == Cover::Base {
        return Ok(subset_symbol(cover, &set(plains(a))).scale(&q(2)));
    }
    let ends: Vec<usize> = cover.finite_ends().into_iter().filter(|x| a.contains(x)).collect();
    let two = q(2);
    match split {
        CurveSplit::OneInside => {
            let [e] = ends.as_slice() else { return mismatch("curve must enclose exactly one end of the arc") };
            let mut rest = a.clone();
            rest.remove(e);
            Ok(subset_symbol(cover, &set(plains(a).chain(primes(&rest)))))
        }
        CurveSplit::Disjoint { a1, a2 } => {
            if !ends.is_empty() {
                return mismatch("curve encloses an end of the arc");
            }
            if !a1.is_disjoint(a2) || &a1.union(a2).copied().collect::<BTreeSet<_>>() != a {
                return mismatch("parts must partition the enclosed labels");
            }
            let x = subset_symbol(cover, &set(plains(a1).chain(primes(a2))));
            let y = subset_symbol(cover, &set(primes(a1).chain(plains(a2))));
            Ok(x.add(&y).scale(&two))
        }
        CurveSplit::Contains { b, c } => {
            let Cover::Pair(p) = cover else { return mismatch("an (i,inf) arc cannot be enclosed") };
            if ends.len() != 2 {
                return mismatch("curve must enclose both ends of the arc");
            }
            let outside: BTreeSet<usize> = (1..=n).filter(|x| !a.contains(x)).collect();
            if !b.is_disjoint(c) || b.union(c).copied().collect::<BTreeSet<_>>() != outside {
                return mismatch("parts must partition the outside labels");
            }
            let inner: BTreeSet<usize> = a.iter().copied().filter(|x| !p.contains(*x)).collect();
            let x = subset_symbol(cover, &set(plains(a).chain(plains(c)).chain(primes(b)).chain(primes(&inner))));
            let y = subset_symbol(cover, &set(plains(c).chain(primes(b))));
            Ok(x.add(&y).scale(&two))
        }
    }
}

/// Curve data for the round curve around `k` and `l`.
pub fn two_point_split(cover: Cover, n: usize, p: Pair) -> CurveSplit {
    let one = |x: usize| BTreeSet::from([x]);
    match position(cover, p) {
        Position::MeetsLow | Position::MeetsHigh => CurveSplit::OneInside,
        Position::Equal => CurveSplit::Contains { b: (1..=n).filter(|x| !p.contains(*x)).collect(), c: BTreeSet::new() },
        Position::Linked => CurveSplit::Disjoint { a1: one(p.i), a2: one(p.j) },
        Position::Unlinked => CurveSplit::Disjoint { a1: BTreeSet::from([p.i, p.j]), a2: BTreeSet::new() },
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependenceReport {
    pub n: usize,
    pub dim: usize,
    pub rank: usize,
    /// Number of (forgetful projection, cover) maps stacked.
    pub maps: usize,
}

impl IndependenceReport {
    pub fn passed(&self) -> bool {
        self.rank == self.dim
    }
}

fn subsets_of_size(n: usize, m: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            cur.push(x);
            go(x + 1, n, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, m, &mut Vec::new(), &mut out);
    out
}

/// Rank of all forgetful projections to 2..=4 strands followed by every cover map.
pub fn independence_certificate(n: usize) -> Result<IndependenceReport> {
    if n < 2 {
        return Err(Error::Invalid("independence certificate needs n >= 2".into()));
    }
    let space = H1Space::shared(n);
    let mut keys: HashMap<(usize, Cover, Label, Label), usize> = HashMap::new();
    let mut projections = Vec::new();
    for m in 2..=n.min(4) {
        projections.extend(subsets_of_size(n, m));
    }
    let maps = projections.iter().map(|k| Cover::all(k.len()).len()).sum();
    let mut e = Echelon::new();
    for s in space.basis() {
        let v = H1Vector::symbol(n, *s);
        let mut row = QVec::new();
        for (pi, keep) in projections.iter().enumerate() {
            let w = forgetful(&v, keep)?;
            for cover in Cover::all(keep.len()) {
                for ((a, b), c) in psi_cover(cover, &w)?.entries {
                    let next = keys.len();
                    let id = *keys.entry((pi, cover, a, b)).or_insert(next);
                    row.insert(id, c);
                }
            }
        }
        e.insert(row);
    }
    Ok(IndependenceReport { n, dim: space.dim(), rank: e.rank(), maps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::h1::{act, commutator_class, reduce_str, tau_boundary, Generator};

    fn pv(cover: Cover, items: &[(&str, &str, i64)]) -> PairVector {
        let mut out = PairVector::zero(cover);
        for (a, b, c) in items {
            out.add_pair(Label::parse(a).unwrap(), Label::parse(b).unwrap(), &q(*c));
        }
        out
    }

    fn red(n: usize, s: &str) -> H1Vector {
        reduce_str(n, s).unwrap()
    }

    #[test]
    fn subset_symbols() {
        let s = subset_symbol(Cover::Base, &set([1, 2, 3].map(Label::plain)));
        assert_eq!(s, pv(Cover::Base, &[("1", "2", 1), ("1", "3", 1), ("2", "3", 1)]));
        assert!(subset_symbol(Cover::Base, &BTreeSet::new()).is_zero());
        assert!(subset_symbol(Cover::Base, &set([Label::plain(4)])).is_zero());
    }

    #[test]
    fn base_map() {
        assert_eq!(psi_base(&red(3, "t(1,2)")), pv(Cover::Base, &[("1", "2", 2)]));
        assert!(psi_base(&red(3, "(1-T(1,3))*t(1,2)")).is_zero());
        for n in 2..=5 {
            let all = subset_symbol(Cover::Base, &set((1..=n).map(Label::plain))).scale(&q(2));
            assert_eq!(psi_base(&tau_boundary(n).unwrap()), all);
        }
    }

    #[test]
    fn square_cases() {
        let c = Cover::Infinity(1);
        assert_eq!(psi_square(c, 3, Pair::new(2, 3)), pv(c, &[("2", "3", 2), ("2'", "3'", 2)]));
        let c = Cover::Pair(Pair::new(1, 3));
        assert_eq!(psi_square(c, 3, Pair::new(1, 2)), pv(c, &[("1", "2", 1), ("1", "2'", 1), ("2", "2'", 1)]));
        let c = Cover::Pair(Pair::new(1, 2));
        let got = psi_square(c, 4, Pair::new(1, 2));
        let rest = set([Label::prime(3), Label::prime(4)]);
        let want = subset_symbol(c, &set(rest.iter().copied().chain([Label::plain(1), Label::plain(2)])))
            .add(&subset_symbol(c, &rest))
            .scale(&q(2));
        assert_eq!(got, want);
        for cover in Cover::all(4) {
            let labels = cover.labels(4);
            for p in all_pairs(4) {
                for (a, b) in psi_square(cover, 4, p).entries.keys() {
                    assert!(labels.contains(a) && labels.contains(b), "{cover} {p:?}");
                }
            }
        }
    }

    #[test]
    fn iota_cases() {
        let f = iota(Cover::Infinity(1), Pair::new(1, 2));
        assert_eq!(f(Label::plain(2)), Label::prime(2));
        assert_eq!(f(Label::plain(1)), Label::plain(1));
        let g = iota(Cover::Pair(Pair::new(1, 2)), Pair::new(3, 4));
        assert_eq!(g(Label::plain(3)), Label::plain(3));
        let h = iota(Cover::Pair(Pair::new(1, 2)), Pair::new(2, 3));
        assert_eq!(h(Label::prime(3)), Label::plain(3));
    }

    #[test]
    fn cover_examples() {
        let c = Cover::Infinity(1);
        assert_eq!(psi_cover(c, &red(3, "T(1,2)*t(2,3)")).unwrap(), pv(c, &[("2", "3'", 2), ("2'", "3", 2)]));
        let c = Cover::Infinity(3);
        assert_eq!(psi_cover(c, &red(3, "(1-T(1,3))*t(1,2)")).unwrap(), delta(c, 1, 2).scale(&q(2)));
        let c = Cover::Pair(Pair::new(1, 2));
        let v = red(4, "(1-T(1,4))(1-T(2,3))*t(1,2)");
        assert_eq!(psi_cover(c, &v).unwrap(), delta(c, 3, 4).scale(&q(4)));
        let c = Cover::Infinity(1);
        let want = pv(c, &[("2", "3", 2), ("2'", "3'", 2), ("2'", "3", -2), ("2", "3'", -2)]);
        assert_eq!(psi_cover(c, &red(3, "(1-T(1,2))*t(2,3)")).unwrap(), want);
        let c = Cover::Pair(Pair::new(1, 2));
        let got = psi_cover(c, &red(5, "T(2,3)*t(1,2)")).unwrap();
        let want = subset_symbol(c, &set([Label::plain(1), Label::plain(2), Label::plain(3), Label::prime(4), Label::prime(5)]))
            .add(&subset_symbol(c, &set([Label::plain(3), Label::prime(4), Label::prime(5)])))
            .scale(&q(2));
        assert_eq!(got, want);
    }

    #[test]
    fn commutators_vanish_on_base() {
        for n in 3..=5 {
            for (i, j, k) in [(1, 2, 3), (1, 2, n), (2, 3, n)] {
                if j < k {
                    assert!(psi_base(&commutator_class(n, i, j, k).unwrap()).is_zero());
                }
            }
        }
    }

    #[test]
    fn naturality() {
        for n in 2..=5 {
            let space = H1Space::shared(n);
            for s in space.basis() {
                let v = H1Vector::symbol(n, *s);
                for p in all_pairs(n) {
                    let moved = act(&Generator::Twist(p), &v).unwrap();
                    for cover in Cover::all(n) {
                        let lhs = psi_cover(cover, &moved).unwrap();
                        let rhs = psi_cover(cover, &v).unwrap().relabel(iota(cover, p));
                        assert_eq!(lhs, rhs, "n={n} {s} T{p:?} {cover}");
                    }
                }
            }
        }
    }

    #[test]
    fn general_curve_two_points() {
        for n in 2..=6 {
            for cover in Cover::all(n) {
                for p in all_pairs(n) {
                    let a = BTreeSet::from([p.i, p.j]);
                    let got = psi_general_curve(cover, n, &a, &two_point_split(cover, n, p)).unwrap();
                    assert_eq!(got, psi_square(cover, n, p), "n={n} {cover} {p:?}");
                }
            }
        }
    }

    #[test]
    fn general_curve_examples() {
        let c = Cover::Infinity(2);
        assert!(psi_general_curve(c, 3, &BTreeSet::from([2]), &CurveSplit::OneInside).unwrap().is_zero());
        let a = BTreeSet::from([1, 3]);
        let d = CurveSplit::Disjoint { a1: a.clone(), a2: BTreeSet::new() };
        let c = Cover::Pair(Pair::new(2, 4));
        let want = subset_symbol(c, &set(plains(&a))).add(&subset_symbol(c, &set(primes(&a)))).scale(&q(2));
        assert_eq!(psi_general_curve(c, 4, &a, &d).unwrap(), want);
        let bad = psi_general_curve(Cover::Infinity(1), 3, &BTreeSet::from([1, 2]), &d);
        assert!(matches!(bad, Err(Error::CaseMismatch(_))));
    }

    #[test]
    fn independence() {
        for (n, d) in [(2, 1), (3, 6), (4, 21), (5, 55)] {
            let r = independence_certificate(n).unwrap();
            assert_eq!((r.dim, r.rank), (d, d));
        }
    }

    #[test]
    fn json_shape() {
        let v = psi_cover(Cover::Infinity(1), &red(3, "T(1,2)*t(2,3)")).unwrap();
        assert_eq!(v.to_json().to_string(), r#"{"cover":"(1,inf)","entries":{"(2,3')":2,"(3,2')":2}}"#);
        assert_eq!(Cover::parse("(1,inf)").unwrap(), Cover::Infinity(1));
        assert_eq!(Cover::parse("(2,1)").unwrap(), Cover::Pair(Pair::new(1, 2)));
    }
}
