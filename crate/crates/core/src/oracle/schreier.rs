use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::presentation::{free_reduce, pb_presentation, Presentation};
use crate::error::{Error, Result};
use crate::linalg::{smith_normal_form, Echelon, QVec, Q};
use crate::pairs::num_pairs;

/// Default strand bound for the subgroup presentation.
pub const SUBGROUP_BOUND: usize = 4;
/// Hard bound, reachable with `allow_large`.
pub const SUBGROUP_HARD_BOUND: usize = 5;

/// Cosets of the kernel of `PB_n -> F_2^{C(n,2)}`, labelled by bit vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetTable {
    pub n: usize,
    pub generators: usize,
}

impl CosetTable {
    pub fn new(n: usize) -> CosetTable {
        CosetTable { n, generators: num_pairs(n) }
    }

    pub fn index(&self) -> usize {
        1usize << self.generators
    }

    pub fn identity_coset(&self) -> u32 {
        0
    }

    /// Coset reached from `coset` by the signed letter `x`.
    pub fn act(&self, coset: u32, x: i32) -> u32 {
        coset ^ (1u32 << (x.unsigned_abs() - 1))
    }

    pub fn coset_of(&self, word: &[i32]) -> u32 {
        word.iter().fold(0, |c, &x| self.act(c, x))
    }

    /// Transversal word: generators in the support, increasing.
    pub fn representative(&self, coset: u32) -> Vec<i32> {
        (0..self.generators).filter(|g| coset >> g & 1 == 1).map(|g| g as i32 + 1).collect()
    }

    /// `(coset, g)` lies on the spanning tree iff `rep(coset) a_g` is again a representative.
    pub fn is_tree_edge(&self, coset: u32, g: usize) -> bool {
        coset >> g == 0
    }
}

/// Schreier generators: the non-tree edges `(coset, g)`, numbered in order.
#[derive(Debug, Clone)]
pub struct SchreierSystem {
    pub table: CosetTable,
    column: Vec<Option<usize>>,
    edges: Vec<(u32, usize)>,
}

impl SchreierSystem {
    pub fn new(n: usize) -> SchreierSystem {
        let table = CosetTable::new(n);
        let m = table.generators;
        let mut column = vec![None; table.index() * m];
        let mut edges = Vec::new();
        for c in 0..table.index() as u32 {
            for g in 0..m {
                if !table.is_tree_edge(c, g) {
                    column[c as usize * m + g] = Some(edges.len());
                    edges.push((c, g));
                }
            }
        }
        SchreierSystem { table, column, edges }
    }

    pub fn num_generators(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, k: usize) -> (u32, usize) {
        self.edges[k]
    }

    /// Word in `PB_n` for Schreier generator `k`: `rep(c) a_g rep(c a_g)^{-1}`.
    pub fn generator_word(&self, k: usize) -> Vec<i32> {
        let (c, g) = self.edges[k];
        let mut w = self.table.representative(c);
        w.push(g as i32 + 1);
        let back = self.table.representative(c ^ (1 << g));
        w.extend(back.iter().rev().map(|x| -x));
        free_reduce(&w)
    }

    /// Rewrites `word` read from `start`; returns the end coset and the Schreier letters.
    pub fn rewrite(&self, start: u32, word: &[i32]) -> (u32, Vec<i32>) {
        let m = self.table.generators;
        let mut c = start;
        let mut out = Vec::new();
        for &x in word {
            let g = x.unsigned_abs() as usize - 1;
            if x > 0 {
                if let Some(k) = self.column[c as usize * m + g] {
                    out.push(k as i32 + 1);
                }
                c ^= 1 << g;
            } else {
                c ^= 1 << g;
                if let Some(k) = self.column[c as usize * m + g] {
                    out.push(-(k as i32 + 1));
                }
            }
        }
        (c, free_reduce(&out))
    }
}

fn check_bound(n: usize, allow_large: bool) -> Result<()> {
    let bound = if allow_large { SUBGROUP_HARD_BOUND } else { SUBGROUP_BOUND };
    if n > bound {
        return Err(Error::bound("subgroup_presentation strand count", n, bound));
    }
    Ok(())
}

/// Reidemeister-Schreier presentation of the level-4 subgroup of `PB_n`.
pub fn subgroup_presentation(n: usize, allow_large: bool) -> Result<Presentation> {
    check_bound(n, allow_large)?;
    let sys = SchreierSystem::new(n);
    Ok(rewritten_presentation(&sys, &pb_presentation(n)?))
}

fn rewritten_presentation(sys: &SchreierSystem, base: &Presentation) -> Presentation {
    let generators = (0..sys.num_generators())
        .map(|k| {
            let (c, g) = sys.edge(k);
            format!("y{}_{}", c, g + 1)
        })
        .collect();
    let mut relators = Vec::new();
    for c in 0..sys.table.index() as u32 {
        for r in &base.relators {
            let (end, w) = sys.rewrite(c, r);
            debug_assert_eq!(end, c);
            if !w.is_empty() {
                relators.push(w);
            }
        }
    }
    Presentation { generators, relators }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianizationResult {
    pub generators: usize,
    pub matrix_rank: usize,
    pub free_rank: usize,
    /// Invariant factors greater than 1.
    pub elementary_divisors: Vec<BigInt>,
}

impl AbelianizationResult {
    pub fn odd_torsion(&self) -> bool {
        self.elementary_divisors.iter().any(|d| {
            let mut d = d.clone();
            let two = BigInt::from(2);
            while (&d % &two).is_zero() {
                d /= &two;
            }
            !d.is_one()
        })
    }
}

fn exponent_row(r: &[i32]) -> BTreeMap<usize, BigInt> {
    let mut row: BTreeMap<usize, BigInt> = BTreeMap::new();
    for &x in r {
        *row.entry(x.unsigned_abs() as usize - 1).or_insert_with(BigInt::zero) += x.signum();
    }
    row.retain(|_, v| !v.is_zero());
    row
}

/// Integer abelianization via Smith normal form of the exponent-sum matrix.
pub fn abelianization(p: &Presentation) -> AbelianizationResult {
    let rows: Vec<_> = p.relators.iter().map(|r| exponent_row(r)).collect();
    let snf = smith_normal_form(rows, p.generators.len());
    AbelianizationResult {
        generators: p.generators.len(),
        matrix_rank: snf.rank,
        free_rank: snf.free_rank(),
        elementary_divisors: snf.torsion(),
    }
}

/// Rational rank of the abelianization, without Smith form.
pub fn rational_rank(p: &Presentation) -> usize {
    let mut e = Echelon::new();
    for r in &p.relators {
        e.insert(exponent_row(r).into_iter().map(|(k, v)| (k, Q::from_integer(v))).collect::<QVec>());
    }
    p.generators.len() - e.rank()
}
