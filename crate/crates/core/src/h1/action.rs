use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::One;

use crate::braid::{conj_generator, BraidWord, Letter};
use crate::error::{Error, Result};
use crate::linalg::{q_frac, QVec, SparseMatrix, Q};
use crate::pairs::{all_pairs, num_pairs, Pair};

use super::basis::{enumerate_basis, BasisSymbol, H1Vector};
use super::expr::{Factor, ModuleExpression};
use super::reduce::reduce;

/// Something that acts on `H_1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generator {
    Sigma(usize),
    SigmaInv(usize),
    Twist(Pair),
    Word(BraidWord),
}

impl Generator {
    /// `s3`, `S3`, `T(1,2)`, or any braid word such as `s1 S2 s1`.
    pub fn parse(n: usize, s: &str) -> Result<Generator> {
        let t = s.trim();
        if let Some(body) = t.strip_prefix("T(").and_then(|b| b.strip_suffix(')')) {
            let nums: Vec<usize> = body
                .split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad twist `{t}`"))))
                .collect::<Result<_>>()?;
            if nums.len() != 2 || nums[0] == nums[1] || nums[0] == 0 {
                return Err(Error::Parse(format!("bad twist `{t}`")));
            }
            return Ok(Generator::Twist(Pair::new(nums[0], nums[1])));
        }
        let w = BraidWord::parse(n, t)?;
        Ok(match w.letters() {
            [l] if l.inverse => Generator::SigmaInv(l.index),
            [l] => Generator::Sigma(l.index),
            _ => Generator::Word(w),
        })
    }
}

/// `s_k` applied to one basis symbol: conjugate the defining word and reduce.
pub fn sigma_on_symbol(n: usize, k: usize, s: &BasisSymbol) -> H1Vector {
    let mut perm: Vec<usize> = (1..=n).collect();
    perm.swap(k - 1, k);
    let mut prefix: Vec<Factor> = s.twists().iter().map(|p| Factor::Twist(p.permute(&perm))).collect();
    let (outer, target) = conj_generator(k, s.target());
    if let Some(w) = outer {
        prefix.push(Factor::Twist(w));
    }
    let e = ModuleExpression::term(n, Q::one(), prefix, target).expect("labels in range");
    reduce(&e)
}

/// `T_p` applied to one basis symbol.
pub fn twist_on_symbol(n: usize, p: Pair, s: &BasisSymbol) -> H1Vector {
    let mut prefix = vec![Factor::Twist(p)];
    prefix.extend(s.twists().into_iter().map(Factor::Twist));
    let e = ModuleExpression::term(n, Q::one(), prefix, s.target()).expect("labels in range");
    reduce(&e)
}

/// `H_1(B_n[4]; Q)` with its basis and cached generator matrices.
#[derive(Debug)]
pub struct H1Space {
    pub n: usize,
    basis: Vec<BasisSymbol>,
    index: HashMap<BasisSymbol, usize>,
    sigma: Vec<SparseMatrix>,
    sigma_inv: Vec<SparseMatrix>,
}

static SPACES: OnceLock<Mutex<HashMap<usize, Arc<H1Space>>>> = OnceLock::new();

impl H1Space {
    pub fn new(n: usize) -> H1Space {
        let basis = enumerate_basis(n);
        let index: HashMap<BasisSymbol, usize> = basis.iter().enumerate().map(|(k, s)| (*s, k)).collect();
        let dim = basis.len();
        let mut space = H1Space { n, basis, index, sigma: Vec::new(), sigma_inv: Vec::new() };
        for k in 1..n {
            let cols: Vec<QVec> =
                space.basis.iter().map(|s| space.vec_to_q(&sigma_on_symbol(n, k, s))).collect();
            let m = SparseMatrix::from_columns(dim, cols);
            // s_k^4 lies in B_n[4], so s_k^{-1} acts as s_k^3.
            let inv = m.mul(&m).mul(&m);
            space.sigma.push(m);
            space.sigma_inv.push(inv);
        }
        space
    }

    /// Process-wide cached instance.
    pub fn shared(n: usize) -> Arc<H1Space> {
        let cache = SPACES.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(s) = cache.lock().expect("cache lock").get(&n) {
            return s.clone();
        }
        let s = Arc::new(H1Space::new(n));
        cache.lock().expect("cache lock").entry(n).or_insert(s).clone()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisSymbol] {
        &self.basis
    }

    pub fn index_of(&self, s: &BasisSymbol) -> usize {
        self.index[s]
    }

    pub fn vec_to_q(&self, v: &H1Vector) -> QVec {
        v.to_qvec(&|s| self.index[s])
    }

    pub fn q_to_vec(&self, v: &QVec) -> H1Vector {
        H1Vector::from_terms(self.n, v.iter().map(|(k, c)| (self.basis[*k], c.clone())))
    }

    pub fn sigma_matrix(&self, k: usize) -> &SparseMatrix {
        &self.sigma[k - 1]
    }

    pub fn sigma_inv_matrix(&self, k: usize) -> &SparseMatrix {
        &self.sigma_inv[k - 1]
    }

    pub fn twist_matrix(&self, p: Pair) -> SparseMatrix {
        let cols = self.basis.iter().map(|s| self.vec_to_q(&twist_on_symbol(self.n, p, s))).collect();
        SparseMatrix::from_columns(self.dim(), cols)
    }

    pub fn apply_letter(&self, l: Letter, v: &QVec) -> QVec {
        if l.inverse {
            self.sigma_inv[l.index - 1].apply(v)
        } else {
            self.sigma[l.index - 1].apply(v)
        }
    }

    /// Action of a word; the rightmost letter acts first.
    pub fn apply_word(&self, w: &BraidWord, v: &QVec) -> QVec {
        let mut cur = v.clone();
        for &l in w.letters().iter().rev() {
            cur = self.apply_letter(l, &cur);
        }
        cur
    }

    fn check(&self, g: &Generator) -> Result<()> {
        let bad = |index| Err(Error::IndexOutOfRange { index, n: self.n });
        match g {
            Generator::Sigma(k) | Generator::SigmaInv(k) if *k == 0 || *k >= self.n => bad(*k),
            Generator::Twist(p) if p.j > self.n => bad(p.j),
            Generator::Word(w) if w.n != self.n => Err(Error::Invalid("word has a different strand count".into())),
            _ => Ok(()),
        }
    }

    pub fn generator_matrix(&self, g: &Generator) -> Result<SparseMatrix> {
        self.check(g)?;
        Ok(match g {
            Generator::Sigma(k) => self.sigma[k - 1].clone(),
            Generator::SigmaInv(k) => self.sigma_inv[k - 1].clone(),
            Generator::Twist(p) => self.twist_matrix(*p),
            Generator::Word(w) => {
                let cols = (0..self.dim()).map(|j| self.apply_word(w, &crate::linalg::unit(j))).collect();
                SparseMatrix::from_columns(self.dim(), cols)
            }
        })
    }

    pub fn act(&self, g: &Generator, v: &H1Vector) -> Result<H1Vector> {
        self.check(g)?;
        if v.n != self.n {
            return Err(Error::Invalid("vector has a different strand count".into()));
        }
        let x = self.vec_to_q(v);
        let y = match g {
            Generator::Sigma(k) => self.sigma[k - 1].apply(&x),
            Generator::SigmaInv(k) => self.sigma_inv[k - 1].apply(&x),
            Generator::Twist(p) => {
                let mut out = H1Vector::zero(self.n);
                for (s, c) in v.terms() {
                    out = out.add(&twist_on_symbol(self.n, *p, s).scale(c));
                }
                return Ok(out);
            }
            Generator::Word(w) => self.apply_word(w, &x),
        };
        Ok(self.q_to_vec(&y))
    }
}

/// `act(g, v)` on the shared space for `v.n` strands.
pub fn act(g: &Generator, v: &H1Vector) -> Result<H1Vector> {
    H1Space::shared(v.n).act(g, v)
}

pub fn generator_matrix(g: &Generator, n: usize) -> Result<SparseMatrix> {
    H1Space::shared(n).generator_matrix(g)
}

/// `2^{-C(n,2)} (1+T_12)...(1+T_{n-1,n}) sum_{i<j} t_ij`, reduced.
pub fn tau_boundary(n: usize) -> Result<H1Vector> {
    if n < 2 {
        return Err(Error::Invalid("the boundary class needs n >= 2".into()));
    }
    let prefix: Vec<Factor> = all_pairs(n).into_iter().map(Factor::OnePlus).collect();
    let c = Q::new(1.into(), num_bigint::BigInt::from(1u8) << num_pairs(n));
    let mut e = ModuleExpression::zero(n);
    for t in all_pairs(n) {
        e.push(c.clone(), prefix.clone(), t)?;
    }
    Ok(reduce(&e))
}

/// `1/2 ((1-T_ik) t_ij + (1-T_ij) t_ik - (1-T_ij) t_jk)`.
pub fn commutator_expression(n: usize, i: usize, j: usize, k: usize) -> Result<ModuleExpression> {
    if !(i < j && j < k && k <= n && i >= 1) {
        return Err(Error::Invalid(format!("need 1 <= i < j < k <= n, got ({i},{j},{k}) with n = {n}")));
    }
    let half = q_frac(1, 2);
    let mut e = ModuleExpression::zero(n);
    e.push(half.clone(), vec![Factor::OneMinus(Pair::new(i, k))], Pair::new(i, j))?;
    e.push(half.clone(), vec![Factor::OneMinus(Pair::new(i, j))], Pair::new(i, k))?;
    e.push(-half, vec![Factor::OneMinus(Pair::new(i, j))], Pair::new(j, k))?;
    Ok(e)
}

pub fn commutator_class(n: usize, i: usize, j: usize, k: usize) -> Result<H1Vector> {
    Ok(reduce(&commutator_expression(n, i, j, k)?))
}

/// Forgets the strands outside `keep`, relabelling the survivors in order.
pub fn forgetful(v: &H1Vector, keep: &[usize]) -> Result<H1Vector> {
    let mut keep: Vec<usize> = keep.to_vec();
    keep.sort_unstable();
    keep.dedup();
    if keep.len() < 2 {
        return Err(Error::Invalid("forgetful map needs at least two kept strands".into()));
    }
    if keep.iter().any(|&x| x == 0 || x > v.n) {
        return Err(Error::Invalid(format!("kept strands must lie in [{}]", v.n)));
    }
    let m = keep.len();
    let relabel = |x: usize| keep.iter().position(|&y| y == x).map(|p| p + 1);
    let mut e = ModuleExpression::zero(m);
    for (s, c) in v.terms() {
        let t = s.target();
        let (Some(a), Some(b)) = (relabel(t.i), relabel(t.j)) else { continue };
        let prefix: Vec<Factor> = s
            .twists()
            .iter()
            .filter_map(|p| Some(Factor::Twist(Pair::new(relabel(p.i)?, relabel(p.j)?))))
            .collect();
        e.push(c.clone(), prefix, Pair::new(a, b))?;
    }
    Ok(reduce(&e))
}

/// The inclusion `H_1(B_n[4]) -> H_1(B_{n+1}[4])` on symbols.
pub fn stabilization_map(v: &H1Vector) -> H1Vector {
    v.with_strands(v.n + 1).expect("more strands always fit")
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::h1::reduce::reduce_str;

    fn sym(n: usize, s: &str) -> H1Vector {
        reduce_str(n, s).unwrap()
    }

    #[test]
    fn twist_examples() {
        let t13 = Generator::Twist(Pair::new(1, 3));
        let v = act(&t13, &sym(3, "t(1,2)")).unwrap();
        assert_eq!(v, sym(3, "T(1,3)*t(1,2)"));
        assert_eq!(act(&t13, &v).unwrap(), sym(3, "t(1,2)"));
    }

    #[test]
    fn sigma_square_is_twist() {
        for n in 2..=5 {
            let sp = H1Space::shared(n);
            for k in 1..n {
                let s = sp.sigma_matrix(k);
                assert_eq!(s.mul(s), sp.twist_matrix(Pair::new(k, k + 1)), "n = {n}, k = {k}");
            }
        }
    }

    #[test]
    fn braid_relations_hold() {
        for n in 3..=5 {
            let sp = H1Space::shared(n);
            for k in 1..n {
                for l in k + 1..n {
                    let (a, b) = (sp.sigma_matrix(k), sp.sigma_matrix(l));
                    if l == k + 1 {
                        assert_eq!(a.mul(b).mul(a), b.mul(a).mul(b), "n = {n}, {k} {l}");
                    } else {
                        assert_eq!(a.mul(b), b.mul(a));
                    }
                }
            }
        }
    }

    #[test]
    fn boundary_examples() {
        assert_eq!(tau_boundary(2).unwrap(), sym(2, "t(1,2)"));
        let expect = sym(3, "1/2 (1+T(1,3))*t(1,2) + 1/2 (1+T(1,2))*t(2,3) + 1/2 (1+T(1,2))*t(1,3)");
        assert_eq!(tau_boundary(3).unwrap(), expect);
        for n in 2..=5 {
            let tb = tau_boundary(n).unwrap();
            for k in 1..n {
                assert_eq!(act(&Generator::Sigma(k), &tb).unwrap(), tb);
            }
        }
    }

    #[test]
    fn commutator_example() {
        let c = commutator_class(3, 1, 2, 3).unwrap();
        let expect = sym(3, "1/2 t(1,2) - 1/2 T(1,3)*t(1,2) + 1/2 t(1,3) - 1/2 T(1,2)*t(1,3) - 1/2 t(2,3) + 1/2 T(1,2)*t(2,3)");
        assert_eq!(c, expect);
        assert_eq!(commutator_class(5, 1, 2, 3).unwrap(), c.with_strands(5).unwrap());
    }

    #[test]
    fn forgetful_examples() {
        assert!(forgetful(&sym(5, "t(4,5)"), &[1, 2, 3]).unwrap().is_zero());
        assert_eq!(forgetful(&sym(5, "T(1,3)*t(1,2)"), &[1, 2, 3]).unwrap(), sym(3, "T(1,3)*t(1,2)"));
        assert_eq!(forgetful(&sym(3, "T(1,3)*t(1,2)"), &[1, 2]).unwrap(), sym(2, "t(1,2)"));
    }

    #[test]
    fn stabilization_is_equivariant() {
        for n in 2..=4 {
            let small = H1Space::shared(n);
            for s in small.basis() {
                let v = H1Vector::symbol(n, *s);
                for k in 1..n {
                    let lhs = act(&Generator::Sigma(k), &stabilization_map(&v)).unwrap();
                    let rhs = stabilization_map(&act(&Generator::Sigma(k), &v).unwrap());
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
