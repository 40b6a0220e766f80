use std::collections::BTreeMap;

use num_traits::Zero;

use crate::braid::{BraidWord, Letter, PureBraidWord};
use crate::error::{Error, Result};
use crate::h1::{H1Space, H1Vector};
use crate::linalg::{add_scaled, invert_dense, q_frac, scale, unit, Echelon, QVec, SparseMatrix, SubspaceBasis, Q};
use crate::pairs::{all_pairs, Pair, PairSubset};
use crate::zn::PZnElement;

/// A finite-dimensional rational `Z_n`-module given by the action of the `s_k^{±1}`.
pub trait ZnModule {
    fn strands(&self) -> usize;
    fn dim(&self) -> usize;
    fn apply_letter(&self, l: Letter, v: &QVec) -> QVec;

    /// Rightmost letter acts first.
    fn apply_word(&self, w: &BraidWord, v: &QVec) -> QVec {
        let mut cur = v.clone();
        for &l in w.letters().iter().rev() {
            cur = self.apply_letter(l, &cur);
        }
        cur
    }

    fn word_matrix(&self, w: &BraidWord) -> SparseMatrix {
        SparseMatrix::from_columns(self.dim(), (0..self.dim()).map(|j| self.apply_word(w, &unit(j))).collect())
    }

    fn twist_matrix(&self, p: Pair) -> SparseMatrix {
        let w = PureBraidWord::new(self.strands(), vec![(p, 1)]).expect("pair in range").to_braid_word();
        self.word_matrix(&w)
    }

    /// Trace of `w` on an invariant subspace.
    fn trace_on(&self, basis: &SubspaceBasis, w: &BraidWord) -> Q {
        let mut t = Q::zero();
        for (k, v) in basis.vectors().enumerate() {
            let img = self.apply_word(w, v);
            t += &basis.coords(&img)[k];
        }
        t
    }

    fn trace(&self, w: &BraidWord) -> Q {
        (0..self.dim()).map(|j| self.apply_word(w, &unit(j)).get(&j).cloned().unwrap_or_else(Q::zero)).sum()
    }
}

impl ZnModule for H1Space {
    fn strands(&self) -> usize {
        self.n
    }

    fn dim(&self) -> usize {
        H1Space::dim(self)
    }

    fn apply_letter(&self, l: Letter, v: &QVec) -> QVec {
        H1Space::apply_letter(self, l, v)
    }

    fn twist_matrix(&self, p: Pair) -> SparseMatrix {
        H1Space::twist_matrix(self, p)
    }
}

/// A module given by explicit matrices for `s_1, ..., s_{n-1}`.
#[derive(Debug, Clone)]
pub struct MatrixModule {
    pub n: usize,
    pub dim: usize,
    sigma: Vec<SparseMatrix>,
    sigma_inv: Vec<SparseMatrix>,
}

impl MatrixModule {
    pub fn new(n: usize, sigma: Vec<SparseMatrix>) -> Result<MatrixModule> {
        if sigma.len() + 1 != n.max(1) {
            return Err(Error::Invalid(format!("need {} generator matrices", n.saturating_sub(1))));
        }
        let dim = sigma.first().map_or(1, |m| m.dim);
        let mut sigma_inv = Vec::new();
        for m in &sigma {
            let dense: Vec<Vec<Q>> = (0..dim).map(|r| (0..dim).map(|c| m.entry(r, c)).collect()).collect();
            let inv = invert_dense(&dense).ok_or_else(|| Error::Invalid("generator matrix is singular".into()))?;
            let cols = (0..dim)
                .map(|c| (0..dim).filter(|&r| !inv[r][c].is_zero()).map(|r| (r, inv[r][c].clone())).collect())
                .collect();
            sigma_inv.push(SparseMatrix::from_columns(dim, cols));
        }
        Ok(MatrixModule { n, dim, sigma, sigma_inv })
    }

    /// The one-dimensional trivial module.
    pub fn trivial(n: usize) -> MatrixModule {
        MatrixModule::new(n, vec![SparseMatrix::identity(1); n.saturating_sub(1)]).expect("identity matrices")
    }
}

impl ZnModule for MatrixModule {
    fn strands(&self) -> usize {
        self.n
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn apply_letter(&self, l: Letter, v: &QVec) -> QVec {
        if l.inverse {
            self.sigma_inv[l.index - 1].apply(v)
        } else {
            self.sigma[l.index - 1].apply(v)
        }
    }
}

/// `(-1)^{|I ∩ support(g)|}`.
pub fn rho_character(i: &PairSubset, g: &PZnElement) -> Result<i8> {
    if i.n != g.n {
        return Err(Error::Invalid(format!("subset on {} strands, element on {}", i.n, g.n)));
    }
    let hits = g.support().iter().filter(|p| i.contains(p)).count();
    Ok(if hits % 2 == 0 { 1 } else { -1 })
}

/// Simultaneous eigenspaces of the twist involutions, keyed by the set of pairs acting by -1.
#[derive(Debug, Clone)]
pub struct IsotypicReport {
    pub n: usize,
    pub blocks: BTreeMap<PairSubset, SubspaceBasis>,
}

impl IsotypicReport {
    pub fn dim(&self, i: &PairSubset) -> usize {
        self.blocks.get(i).map_or(0, |b| b.dim())
    }

    pub fn total_dim(&self) -> usize {
        self.blocks.values().map(|b| b.dim()).sum()
    }

    pub fn block(&self, i: &PairSubset) -> Option<&SubspaceBasis> {
        self.blocks.get(i)
    }
}

pub fn isotypic_decomposition<M: ZnModule + ?Sized>(module: &M) -> Result<IsotypicReport> {
    let n = module.strands();
    let dim = module.dim();
    let twists: Vec<(Pair, SparseMatrix)> = all_pairs(n).into_iter().map(|p| (p, module.twist_matrix(p))).collect();
    for (p, m) in &twists {
        if !m.mul(m).is_identity() {
            return Err(Error::NonInvolutive(format!("T({},{})", p.i, p.j)));
        }
    }
    for (a, (_, x)) in twists.iter().enumerate() {
        for (_, y) in &twists[a + 1..] {
            if x.mul(y) != y.mul(x) {
                return Err(Error::Invalid("twist actions do not commute".into()));
            }
        }
    }
    let half = q_frac(1, 2);
    let mut blocks: Vec<(Vec<Pair>, Vec<QVec>)> = vec![(vec![], (0..dim).map(unit).collect())];
    for (p, m) in &twists {
        let mut next = Vec::new();
        for (set, vecs) in blocks {
            for sign in [1i64, -1] {
                let part = vecs.iter().map(|v| {
                    let mut w = scale(v, &half);
                    add_scaled(&mut w, &m.apply(v), &(&half * Q::from_integer(sign.into())));
                    w
                });
                let span = SubspaceBasis::span(part);
                if span.dim() > 0 {
                    let mut s = set.clone();
                    if sign < 0 {
                        s.push(*p);
                    }
                    next.push((s, span.vectors().cloned().collect()));
                }
            }
        }
        blocks = next;
    }
    let blocks = blocks
        .into_iter()
        .map(|(set, vecs)| (PairSubset::from_pairs(n, set).expect("pairs in range"), SubspaceBasis::span(vecs)))
        .collect();
    Ok(IsotypicReport { n, blocks })
}

/// Span of the `Z_n`-orbit of `seed`.
pub fn orbit_submodule(seed: &H1Vector) -> SubspaceBasis {
    let space = H1Space::shared(seed.n);
    let mut e = Echelon::new();
    let mut queue = vec![space.vec_to_q(seed)];
    let mut found = Vec::new();
    while let Some(v) = queue.pop() {
        if v.is_empty() || !e.insert(v.clone()) {
            continue;
        }
        for k in 1..seed.n {
            queue.push(space.sigma_matrix(k).apply(&v));
        }
        found.push(v);
    }
    SubspaceBasis::span(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rho_values() {
        let i3 = PairSubset::i3(3);
        assert_eq!(rho_character(&i3, &PZnElement::generator(3, Pair::new(1, 3))).unwrap(), -1);
        assert_eq!(rho_character(&i3, &PZnElement::generator(3, Pair::new(1, 2))).unwrap(), 1);
        let g = PZnElement::generator(3, Pair::new(1, 3)).add(&PZnElement::generator(3, Pair::new(2, 3)));
        assert_eq!(rho_character(&PairSubset::empty(3), &g).unwrap(), 1);
        assert_eq!(rho_character(&i3, &g).unwrap(), 1);
    }

    #[test]
    fn trivial_module() {
        let r = isotypic_decomposition(&MatrixModule::trivial(4)).unwrap();
        assert_eq!(r.blocks.len(), 1);
        assert_eq!(r.dim(&PairSubset::empty(4)), 1);
    }

    #[test]
    fn non_involutive() {
        let two = SparseMatrix::from_columns(1, vec![QVec::from([(0, Q::from_integer(2.into()))])]);
        let m = MatrixModule::new(2, vec![two]).unwrap();
        assert!(matches!(isotypic_decomposition(&m), Err(Error::NonInvolutive(_))));
    }
}
