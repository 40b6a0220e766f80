//! Exact sparse linear algebra over `Q` and Smith normal form over `Z`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

/// Sparse vector: index -> nonzero coefficient.
pub type QVec = BTreeMap<usize, Q>;

pub fn q(x: i64) -> Q {
    Q::from_integer(BigInt::from(x))
}

pub fn q_frac(a: i64, b: i64) -> Q {
    Q::new(BigInt::from(a), BigInt::from(b))
}

/// Canonical string: `p` for integers, `p/q` otherwise, lowest terms, sign on `p`.
pub fn format_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    match s.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().map_err(|_| bad())?;
            let b: BigInt = b.trim().parse().map_err(|_| bad())?;
            if b.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(a, b))
        }
        None => Ok(Q::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// `target += c * src`, dropping entries that cancel.
pub fn add_scaled(target: &mut QVec, src: &QVec, c: &Q) {
    if c.is_zero() {
        return;
    }
    for (k, x) in src {
        add_entry(target, *k, &(x * c));
    }
}

pub fn add_entry(target: &mut QVec, k: usize, x: &Q) {
    if x.is_zero() {
        return;
    }
    let remove = match target.get_mut(&k) {
        Some(v) => {
            *v += x;
            v.is_zero()
        }
        None => {
            target.insert(k, x.clone());
            false
        }
    };
    if remove {
        target.remove(&k);
    }
}

pub fn scale(v: &QVec, c: &Q) -> QVec {
    if c.is_zero() {
        return QVec::new();
    }
    v.iter().map(|(k, x)| (*k, x * c)).collect()
}

pub fn unit(k: usize) -> QVec {
    let mut v = QVec::new();
    v.insert(k, Q::one());
    v
}

/// Square sparse matrix stored by columns; `cols[j]` is the image of `e_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    pub dim: usize,
    pub cols: Vec<QVec>,
}

impl SparseMatrix {
    pub fn identity(dim: usize) -> SparseMatrix {
        SparseMatrix { dim, cols: (0..dim).map(unit).collect() }
    }

    pub fn from_columns(dim: usize, cols: Vec<QVec>) -> SparseMatrix {
        assert_eq!(cols.len(), dim);
        SparseMatrix { dim, cols }
    }

    pub fn apply(&self, v: &QVec) -> QVec {
        let mut out = QVec::new();
        for (k, x) in v {
            add_scaled(&mut out, &self.cols[*k], x);
        }
        out
    }

    /// Matrix product `self * other` (apply `other` first).
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        SparseMatrix { dim: self.dim, cols: other.cols.iter().map(|c| self.apply(c)).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.cols.iter().enumerate().all(|(j, c)| c.len() == 1 && c.get(&j).is_some_and(|x| x.is_one()))
    }

    pub fn entry(&self, row: usize, col: usize) -> Q {
        self.cols[col].get(&row).cloned().unwrap_or_else(Q::zero)
    }

    pub fn trace(&self) -> Q {
        (0..self.dim).map(|j| self.entry(j, j)).fold(Q::zero(), |a, b| a + b)
    }

    /// Dense rows of canonical rational strings, for serialization.
    pub fn to_dense_strings(&self) -> Vec<Vec<String>> {
        (0..self.dim)
            .map(|r| (0..self.dim).map(|c| format_q(&self.entry(r, c))).collect())
            .collect()
    }
}

/// Row echelon form built incrementally; each stored row has leading coefficient 1.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    rows: Vec<QVec>,
    pivot_row: BTreeMap<usize, usize>,
}

impl Echelon {
    pub fn new() -> Echelon {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &usize> {
        self.pivot_row.keys()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row.contains_key(&col)
    }

    /// Reduces `v` until no pivot column carries a nonzero entry.
    pub fn reduce(&self, mut v: QVec) -> QVec {
        let mut cursor = 0usize;
        loop {
            let next = v.range(cursor..).map(|(c, _)| *c).find(|c| self.pivot_row.contains_key(c));
            let Some(c) = next else { return v };
            let coef = v.remove(&c).expect("present");
            let row = &self.rows[self.pivot_row[&c]];
            for (k, x) in row.range(c + 1..) {
                add_entry(&mut v, *k, &-(x * &coef));
            }
            cursor = c + 1;
        }
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: QVec) -> bool {
        let r = self.reduce(v);
        let Some((&lead, lc)) = r.iter().next() else { return false };
        let inv = lc.recip();
        let row = scale(&r, &inv);
        self.pivot_row.insert(lead, self.rows.len());
        self.rows.push(row);
        true
    }

    pub fn contains(&self, v: &QVec) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    /// Fully reduced basis: each row is zero in every other row's pivot column.
    /// Rows are returned in increasing pivot order together with their pivot.
    pub fn rref(&self) -> Vec<(usize, QVec)> {
        let mut out: Vec<(usize, QVec)> = Vec::with_capacity(self.rows.len());
        let order: Vec<(usize, usize)> = self.pivot_row.iter().map(|(c, r)| (*c, *r)).collect();
        // Back substitution from the last pivot.
        let mut done: BTreeMap<usize, QVec> = BTreeMap::new();
        for &(c, r) in order.iter().rev() {
            let mut row = self.rows[r].clone();
            let later: Vec<usize> = row.range(c + 1..).map(|(k, _)| *k).filter(|k| done.contains_key(k)).collect();
            for k in later {
                let coef = row.get(&k).cloned().unwrap_or_else(Q::zero);
                if !coef.is_zero() {
                    let src = done[&k].clone();
                    add_scaled(&mut row, &src, &-coef);
                }
            }
            done.insert(c, row);
        }
        for (c, row) in done {
            out.push((c, row));
        }
        out
    }
}

pub fn rank_of(vectors: impl IntoIterator<Item = QVec>) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

/// Basis of a subspace in fully reduced form, able to read coordinates.
#[derive(Debug, Clone)]
pub struct SubspaceBasis {
    pub rows: Vec<(usize, QVec)>,
}

impl SubspaceBasis {
    pub fn span(vectors: impl IntoIterator<Item = QVec>) -> SubspaceBasis {
        let mut e = Echelon::new();
        for v in vectors {
            e.insert(v);
        }
        SubspaceBasis { rows: e.rref() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn vectors(&self) -> impl Iterator<Item = &QVec> {
        self.rows.iter().map(|(_, v)| v)
    }

    /// Coordinates of `v`, assumed to lie in the span.
    pub fn coords(&self, v: &QVec) -> Vec<Q> {
        self.rows.iter().map(|(p, _)| v.get(p).cloned().unwrap_or_else(Q::zero)).collect()
    }
}

/// Inverse of a dense square rational matrix (rows), or `None` if singular.
pub fn invert_dense(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m.to_vec();
    let mut inv: Vec<Vec<Q>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        inv.swap(col, piv);
        let f = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &f;
        }
        for x in inv[col].iter_mut() {
            *x *= &f;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..n {
                    let t = &a[col][c] * &f;
                    a[r][c] -= t;
                    let t = &inv[col][c] * &f;
                    inv[r][c] -= t;
                }
            }
        }
    }
    Some(inv)
}

/// Result of a Smith normal form computation of a relation matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    /// Number of columns (generators).
    pub cols: usize,
    /// Rank of the relation matrix.
    pub rank: usize,
    /// Nonzero invariant factors in divisibility order, including the 1s.
    pub invariant_factors: Vec<BigInt>,
}

impl SmithForm {
    pub fn free_rank(&self) -> usize {
        self.cols - self.rank
    }

    /// Invariant factors different from 1: the torsion of the cokernel.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariant_factors.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

/// Smith normal form of an integer matrix given by sparse rows over `cols` columns.
///
/// Unit pivots are eliminated sparsely first; the leftover block goes through a
/// dense elimination with minimal-absolute-value pivoting.
pub fn smith_normal_form(rows: Vec<BTreeMap<usize, BigInt>>, cols: usize) -> SmithForm {
    let mut rows: Vec<Option<BTreeMap<usize, BigInt>>> =
        rows.into_iter().map(|r| Some(r.into_iter().filter(|(_, x)| !x.is_zero()).collect())).collect();
    let mut col_rows: HashMap<usize, BTreeSet<usize>> = HashMap::new();
    for (r, row) in rows.iter().enumerate() {
        for c in row.as_ref().unwrap().keys() {
            col_rows.entry(*c).or_default().insert(r);
        }
    }
    let mut units = 0usize;
    loop {
        let mut progressed = false;
        for r in 0..rows.len() {
            let Some(row) = rows[r].as_ref() else { continue };
            if row.is_empty() {
                rows[r] = None;
                continue;
            }
            let pick = row
                .iter()
                .filter(|(_, x)| x.abs().is_one())
                .min_by_key(|(c, _)| col_rows.get(*c).map_or(0, |s| s.len()))
                .map(|(c, x)| (*c, x.clone()));
            let Some((pc, pv)) = pick else { continue };
            let pivot = rows[r].take().expect("alive");
            for c in pivot.keys() {
                if let Some(s) = col_rows.get_mut(c) {
                    s.remove(&r);
                }
            }
            let others: Vec<usize> = col_rows.get(&pc).map(|s| s.iter().copied().collect()).unwrap_or_default();
            for o in others {
                let orow = rows[o].as_mut().expect("indexed rows are alive");
                let f = &orow[&pc] * &pv; // pv = ±1, so f / pv = f * pv
                for (c, x) in &pivot {
                    let e = orow.entry(*c).or_insert_with(BigInt::zero);
                    *e -= x * &f;
                    if e.is_zero() {
                        orow.remove(c);
                        if let Some(s) = col_rows.get_mut(c) {
                            s.remove(&o);
                        }
                    } else {
                        col_rows.entry(*c).or_default().insert(o);
                    }
                }
            }
            units += 1;
            progressed = true;
        }
        if !progressed {
            break;
        }
    }
    let rest: Vec<BTreeMap<usize, BigInt>> = rows.into_iter().flatten().filter(|r| !r.is_empty()).collect();
    let mut used_cols: Vec<usize> = rest.iter().flat_map(|r| r.keys().copied()).collect::<BTreeSet<_>>().into_iter().collect();
    used_cols.sort_unstable();
    let col_pos: HashMap<usize, usize> = used_cols.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    let mut dense: Vec<Vec<BigInt>> = rest
        .iter()
        .map(|r| {
            let mut v = vec![BigInt::zero(); used_cols.len()];
            for (c, x) in r {
                v[col_pos[c]] = x.clone();
            }
            v
        })
        .collect();
    let mut diag = dense_smith(&mut dense);
    diag.retain(|d| !d.is_zero());
    let mut factors: Vec<BigInt> = vec![BigInt::one(); units];
    factors.extend(diag);
    let factors = normalize_invariants(factors);
    SmithForm { cols, rank: factors.len(), invariant_factors: factors }
}

fn dense_smith(a: &mut [Vec<BigInt>]) -> Vec<BigInt> {
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    let mut diag = Vec::new();
    let mut t = 0;
    while t < m.min(n) {
        // Minimal nonzero absolute value in the trailing block.
        let mut best: Option<(usize, usize)> = None;
        for (r, row) in a.iter().enumerate().skip(t) {
            for (c, x) in row.iter().enumerate().skip(t) {
                if !x.is_zero() && best.is_none_or(|(br, bc)| x.abs() < a[br][bc].abs()) {
                    best = Some((r, c));
                }
            }
        }
        let Some((br, bc)) = best else { break };
        a.swap(t, br);
        for row in a.iter_mut() {
            row.swap(t, bc);
        }
        let mut clean = true;
        for r in t + 1..m {
            if a[r][t].is_zero() {
                continue;
            }
            let f = a[r][t].div_floor(&a[t][t]);
            for c in t..n {
                let d = &a[t][c] * &f;
                a[r][c] -= d;
            }
            if !a[r][t].is_zero() {
                clean = false;
            }
        }
        for c in t + 1..n {
            if a[t][c].is_zero() {
                continue;
            }
            let f = a[t][c].div_floor(&a[t][t]);
            for row in a.iter_mut().skip(t) {
                let d = &row[t] * &f;
                row[c] -= d;
            }
            if !a[t][c].is_zero() {
                clean = false;
            }
        }
        if !clean {
            continue;
        }
        // Divisibility: fold in any row whose entries are not multiples of the pivot.
        let p = a[t][t].clone();
        let bad = (t + 1..m).find(|&r| (t + 1..n).any(|c| !(&a[r][c] % &p).is_zero()));
        if let Some(r) = bad {
            for c in t..n {
                let x = a[r][c].clone();
                a[t][c] += x;
            }
            continue;
        }
        diag.push(p.abs());
        t += 1;
    }
    diag
}

/// Rewrites a list of nonzero diagonal entries as a divisibility chain.
fn normalize_invariants(diag: Vec<BigInt>) -> Vec<BigInt> {
    let mut d: Vec<BigInt> = diag.into_iter().map(|x| x.abs()).collect();
    let len = d.len();
    for i in 0..len {
        for j in i + 1..len {
            let g = d[i].gcd(&d[j]);
            let l = d[i].lcm(&d[j]);
            d[i] = g;
            d[j] = l;
        }
    }
    d
}

/// Convenience for small integer conversions in reports.
pub fn to_i64(x: &Q) -> Option<i64> {
    if x.is_integer() {
        x.numer().to_i64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(entries: &[(usize, i64)]) -> QVec {
        entries.iter().map(|(k, x)| (*k, q(*x))).filter(|(_, x)| !x.is_zero()).collect()
    }

    #[test]
    fn rational_strings_round_trip() {
        for s in ["0", "3", "-7", "1/2", "-3/4"] {
            assert_eq!(format_q(&parse_q(s).unwrap()), s);
        }
        assert_eq!(format_q(&parse_q("4/8").unwrap()), "1/2");
        assert!(parse_q("1/0").is_err());
    }

    #[test]
    fn echelon_rank_and_reduce() {
        let mut e = Echelon::new();
        assert!(e.insert(v(&[(0, 1), (1, 2)])));
        assert!(e.insert(v(&[(1, 1), (2, 1)])));
        assert!(!e.insert(v(&[(0, 1), (1, 3), (2, 1)])));
        assert_eq!(e.rank(), 2);
        assert!(e.reduce(v(&[(0, 2), (1, 4)])).is_empty());
        let rref = e.rref();
        assert_eq!(rref.len(), 2);
        assert!(rref[0].1.get(&1).is_none());
    }

    #[test]
    fn subspace_coordinates() {
        let b = SubspaceBasis::span([v(&[(0, 1), (2, 1)]), v(&[(1, 1), (2, -1)])]);
        let target = v(&[(0, 3), (1, 2), (2, 1)]);
        assert_eq!(b.coords(&target), vec![q(3), q(2)]);
    }

    #[test]
    fn dense_inverse() {
        let m = vec![vec![q(2), q(1)], vec![q(1), q(1)]];
        let inv = invert_dense(&m).unwrap();
        assert_eq!(inv, vec![vec![q(1), q(-1)], vec![q(-1), q(2)]]);
        assert!(invert_dense(&[vec![q(1), q(2)], vec![q(2), q(4)]]).is_none());
    }

    fn irow(entries: &[(usize, i64)]) -> BTreeMap<usize, BigInt> {
        entries.iter().map(|(k, x)| (*k, BigInt::from(*x))).collect()
    }

    #[test]
    fn smith_examples() {
        // Z^3 / <(2,4,4), (-6,6,12), (10,-4,-16)> has invariants 2, 6, 12.
        let s = smith_normal_form(
            vec![irow(&[(0, 2), (1, 4), (2, 4)]), irow(&[(0, -6), (1, 6), (2, 12)]), irow(&[(0, 10), (1, -4), (2, -16)])],
            3,
        );
        assert_eq!(s.invariant_factors, vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
        assert_eq!(s.free_rank(), 0);
        let s = smith_normal_form(vec![irow(&[(0, 1), (1, 1)]), irow(&[(1, 4)])], 3);
        assert_eq!(s.torsion(), vec![BigInt::from(4)]);
        assert_eq!(s.free_rank(), 1);
    }
}
