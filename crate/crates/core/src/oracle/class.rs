use std::collections::HashMap;
use std::sync::Arc;

use num_traits::Zero;

use super::presentation::{pb_presentation, pure_to_letters};
use super::schreier::{SchreierSystem, SUBGROUP_BOUND, SUBGROUP_HARD_BOUND};
use crate::braid::PureBraidWord;
use crate::error::{Error, Result};
use crate::h1::{reduce, H1Space, H1Vector, ModuleExpression};
use crate::linalg::{add_entry, invert_dense, Echelon, QVec, Q};

/// Word-to-class map into `H_1(PB_n[4]; Q)` computed from the subgroup presentation.
#[derive(Debug, Clone)]
pub struct Oracle {
    pub n: usize,
    sys: SchreierSystem,
    relations: Echelon,
    free_pos: HashMap<usize, usize>,
}

impl Oracle {
    pub fn build(n: usize, allow_large: bool) -> Result<Oracle> {
        let bound = if allow_large { SUBGROUP_HARD_BOUND } else { SUBGROUP_BOUND };
        if n > bound {
            return Err(Error::bound("oracle strand count", n, bound));
        }
        let sys = SchreierSystem::new(n);
        let base = pb_presentation(n)?;
        let mut relations = Echelon::new();
        for c in 0..sys.table.index() as u32 {
            for r in &base.relators {
                let (_, w) = sys.rewrite(c, r);
                relations.insert(exponents(&w));
            }
        }
        let free_pos = (0..sys.num_generators())
            .filter(|k| !relations.is_pivot(*k))
            .enumerate()
            .map(|(p, k)| (k, p))
            .collect();
        Ok(Oracle { n, sys, relations, free_pos })
    }

    pub fn rank(&self) -> usize {
        self.free_pos.len()
    }

    pub fn schreier(&self) -> &SchreierSystem {
        &self.sys
    }

    /// Class of a signed-letter word in the Artin generators.
    pub fn class_letters(&self, word: &[i32]) -> Result<QVec> {
        if self.sys.table.coset_of(word) != 0 {
            return Err(Error::NotInSubgroup);
        }
        let (_, w) = self.sys.rewrite(0, word);
        let reduced = self.relations.reduce(exponents(&w));
        Ok(reduced.into_iter().map(|(k, x)| (self.free_pos[&k], x)).collect())
    }

    pub fn class(&self, w: &PureBraidWord) -> Result<QVec> {
        if w.n != self.n {
            return Err(Error::Invalid(format!("word on {} strands, oracle on {}", w.n, self.n)));
        }
        self.class_letters(&pure_to_letters(w))
    }

    pub fn class_of_combination(&self, terms: &[(Q, PureBraidWord)]) -> Result<QVec> {
        let mut out = QVec::new();
        for (c, w) in terms {
            for (k, x) in self.class(w)? {
                add_entry(&mut out, k, &(x * c));
            }
        }
        Ok(out)
    }

    pub fn relation_check(&self, lhs: &[(Q, PureBraidWord)], rhs: &[(Q, PureBraidWord)]) -> Result<bool> {
        Ok(self.class_of_combination(lhs)? == self.class_of_combination(rhs)?)
    }
}

fn exponents(w: &[i32]) -> QVec {
    let mut v = QVec::new();
    for &x in w {
        add_entry(&mut v, x.unsigned_abs() as usize - 1, &Q::from_integer(x.signum().into()));
    }
    v
}

/// The linear map sending each basis symbol to the class of its defining word.
#[derive(Debug, Clone)]
pub struct OracleIsomorphism {
    pub oracle: Oracle,
    pub space: Arc<H1Space>,
    inverse: Vec<Vec<Q>>,
}

impl OracleIsomorphism {
    /// Fails with `Invalid` when the symbol classes do not form a basis of the oracle's space.
    pub fn build(oracle: Oracle) -> Result<OracleIsomorphism> {
        let space = H1Space::shared(oracle.n);
        let dim = space.dim();
        if oracle.rank() != dim {
            return Err(Error::Invalid(format!("oracle rank {} but basis size {}", oracle.rank(), dim)));
        }
        let mut m = vec![vec![Q::zero(); dim]; dim];
        for (col, s) in space.basis().iter().enumerate() {
            for (row, x) in oracle.class(&s.word(oracle.n)?)? {
                m[row][col] = x;
            }
        }
        let inverse = invert_dense(&m).ok_or_else(|| Error::Invalid("symbol classes are dependent".into()))?;
        Ok(OracleIsomorphism { oracle, space, inverse })
    }

    pub fn to_h1(&self, class: &QVec) -> H1Vector {
        let mut v = QVec::new();
        for (r, row) in self.inverse.iter().enumerate() {
            let mut acc = Q::zero();
            for (k, x) in class {
                acc += &row[*k] * x;
            }
            if !acc.is_zero() {
                v.insert(r, acc);
            }
        }
        self.space.q_to_vec(&v)
    }

    pub fn word_class(&self, w: &PureBraidWord) -> Result<H1Vector> {
        Ok(self.to_h1(&self.oracle.class(w)?))
    }

    pub fn expression_class(&self, e: &ModuleExpression) -> Result<H1Vector> {
        Ok(self.to_h1(&self.oracle.class_of_combination(&e.words()?)?))
    }

    /// Whether the rewriting engine and the oracle agree on `e`.
    pub fn certify(&self, e: &ModuleExpression) -> Result<bool> {
        Ok(reduce(e) == self.expression_class(e)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::h1::{commutator_class, dim_h1};

    #[test]
    fn ranks_match_dimension() {
        for n in 2..=4 {
            assert_eq!(Oracle::build(n, false).unwrap().rank(), dim_h1(n), "n = {n}");
        }
    }

    #[test]
    fn membership() {
        let o = Oracle::build(3, false).unwrap();
        let a12 = PureBraidWord::parse(3, "A(1,2)").unwrap();
        assert!(matches!(o.class(&a12), Err(Error::NotInSubgroup)));
    }

    #[test]
    fn lantern_instance() {
        let o = Oracle::build(3, false).unwrap();
        let x = PureBraidWord::parse(3, "A(1,3) A(2,3)").unwrap();
        let sq = PureBraidWord::parse(3, "A(1,2)^2").unwrap();
        let lhs = x.conjugate(&sq);
        assert_eq!(o.class(&lhs).unwrap(), o.class(&sq).unwrap());
    }

    #[test]
    fn commutator_lemma() {
        let iso = OracleIsomorphism::build(Oracle::build(3, false).unwrap()).unwrap();
        let x = PureBraidWord::parse(3, "A(1,2)").unwrap();
        let y = PureBraidWord::parse(3, "A(2,3)").unwrap();
        let c = PureBraidWord::commutator(&x, &y);
        let spelled = ModuleExpression::parse(3, "1/2 (1-T(1,3))*t(1,2) + 1/2 (1-T(1,2))*t(1,3) - 1/2 (1-T(1,2))*t(2,3)").unwrap();
        assert_eq!(iso.word_class(&c).unwrap(), iso.expression_class(&spelled).unwrap());
        assert_eq!(iso.word_class(&c).unwrap(), commutator_class(3, 1, 2, 3).unwrap());
    }

    #[test]
    fn isomorphism_n3() {
        let iso = OracleIsomorphism::build(Oracle::build(3, false).unwrap()).unwrap();
        for s in iso.space.basis().to_vec() {
            assert!(iso.certify(&ModuleExpression::of_symbol(3, &s)).unwrap());
        }
        let e = ModuleExpression::parse(3, "T(1,3)T(2,3)*t(1,2) - (1+T(2,3))*t(1,3)").unwrap();
        assert!(iso.certify(&e).unwrap());
    }
}
