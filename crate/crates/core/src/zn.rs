//! The finite quotient `Z_n = B_n / B_n[4]` as a group of mod-4 matrices, and
//! its pure part `PZ_n ≅ F_2^{C(n,2)}`.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::braid::{winding_all, BraidWord, Letter, PureBraidWord};
use crate::error::{Error, Result};
use crate::pairs::{all_pairs, num_pairs, Pair};

/// Largest strand count handled by the packed matrix keys.
pub const MAX_STRANDS: usize = 8;
/// Default bound on `n` for full enumeration.
pub const DEFAULT_ENUM_BOUND: usize = 5;
/// Environment variable capping the number of enumerated elements.
pub const MAX_ELEMENTS_ENV: &str = "LEVEL4_MAX_ELEMENTS";

/// Element of `Z_n`: the Burau matrix at `t = -1` reduced mod 4, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ZnElement {
    pub n: usize,
    pub matrix: Vec<u8>,
}

impl ZnElement {
    pub fn identity(n: usize) -> ZnElement {
        let mut matrix = vec![0u8; n * n];
        for i in 0..n {
            matrix[i * n + i] = 1;
        }
        ZnElement { n, matrix }
    }

    /// Right multiplication by one letter.
    fn right_letter(&mut self, l: Letter) {
        let n = self.n;
        let (a, b) = (l.index - 1, l.index);
        for r in 0..n {
            let x = self.matrix[r * n + a];
            let y = self.matrix[r * n + b];
            let (na, nb) = if l.inverse { ((4 - y) % 4, (x + 2 * y) % 4) } else { ((2 * x + y) % 4, (4 - x) % 4) };
            self.matrix[r * n + a] = na;
            self.matrix[r * n + b] = nb;
        }
    }

    /// Left multiplication by one letter (row operation).
    fn left_letter(&mut self, l: Letter) {
        let n = self.n;
        let (a, b) = (l.index - 1, l.index);
        for c in 0..n {
            let x = self.matrix[a * n + c];
            let y = self.matrix[b * n + c];
            let (na, nb) = if l.inverse { (y, (4 - x + 2 * y) % 4) } else { ((2 * x + 3 * y) % 4, x) };
            self.matrix[a * n + c] = na;
            self.matrix[b * n + c] = nb;
        }
    }

    pub fn mul(&self, other: &ZnElement) -> ZnElement {
        let n = self.n;
        let mut matrix = vec![0u8; n * n];
        for r in 0..n {
            for k in 0..n {
                let x = self.matrix[r * n + k];
                if x == 0 {
                    continue;
                }
                for c in 0..n {
                    matrix[r * n + c] = (matrix[r * n + c] + x * other.matrix[k * n + c]) % 4;
                }
            }
        }
        ZnElement { n, matrix }
    }

    /// The mod-2 shadow as a permutation: `perm[a-1]` is the image of `a`.
    pub fn permutation(&self) -> Vec<usize> {
        let n = self.n;
        (0..n).map(|c| (0..n).find(|&r| self.matrix[r * n + c] % 2 == 1).expect("permutation mod 2") + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == ZnElement::identity(self.n)
    }

    pub fn key(&self) -> u128 {
        self.matrix.iter().enumerate().fold(0u128, |acc, (k, x)| acc | ((*x as u128) << (2 * k)))
    }

    pub fn from_key(n: usize, key: u128) -> ZnElement {
        ZnElement { n, matrix: (0..n * n).map(|k| ((key >> (2 * k)) & 3) as u8).collect() }
    }
}

/// Image of a braid word in `Z_n`.
pub fn project(w: &BraidWord) -> ZnElement {
    let mut e = ZnElement::identity(w.n);
    for &l in w.letters() {
        e.right_letter(l);
    }
    e
}

/// Element of `PZ_n`, a bit vector over the pairs of `[n]` in lexicographic order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PZnElement {
    pub n: usize,
    pub bits: u64,
}

impl PZnElement {
    pub fn zero(n: usize) -> PZnElement {
        PZnElement { n, bits: 0 }
    }

    pub fn generator(n: usize, p: Pair) -> PZnElement {
        PZnElement { n, bits: 1 << p.index(n) }
    }

    pub fn add(&self, other: &PZnElement) -> PZnElement {
        PZnElement { n: self.n, bits: self.bits ^ other.bits }
    }

    pub fn support(&self) -> Vec<Pair> {
        all_pairs(self.n).into_iter().filter(|p| self.bits >> p.index(self.n) & 1 == 1).collect()
    }
}

/// Image of a pure word in `PZ_n`: exponent sums mod 2.
pub fn pure_project(w: &PureBraidWord) -> PZnElement {
    let bits = w
        .exponent_sums()
        .iter()
        .enumerate()
        .filter(|(_, e)| e.rem_euclid(2) == 1)
        .fold(0u64, |acc, (k, _)| acc | (1 << k));
    PZnElement { n: w.n, bits }
}

/// Image in `PZ_n` of a braid word in the generators `s_i`, via winding numbers mod 2.
pub fn pure_project_word(w: &BraidWord) -> Result<PZnElement> {
    if !w.is_pure() {
        return Err(Error::NotPure);
    }
    let xi = winding_all(w);
    let mut bits = 0u64;
    for p in all_pairs(w.n) {
        let x = xi[p.i][p.j].to_integer();
        if (x % 2u8) != 0.into() {
            bits |= 1 << p.index(w.n);
        }
    }
    Ok(PZnElement { n: w.n, bits })
}

/// The enumerated group `Z_n` with BFS witness words.
#[derive(Debug, Clone)]
pub struct ZnGroup {
    pub n: usize,
    keys: Vec<u128>,
    index: HashMap<u128, u32>,
    /// `parent[g] = (h, s)` with `g = s * h`; the identity points at itself.
    parent: Vec<(u32, Letter)>,
    depth: Vec<u32>,
}

/// Largest element count allowed by the environment, if set.
pub fn element_cap() -> Option<usize> {
    std::env::var(MAX_ELEMENTS_ENV).ok().and_then(|s| s.trim().parse().ok())
}

/// `n! * 2^{C(n,2)}`.
pub fn zn_order(n: usize) -> u128 {
    let mut f: u128 = 1;
    for k in 2..=n as u128 {
        f *= k;
    }
    f << num_pairs(n)
}

pub fn enumerate_zn(n: usize) -> Result<ZnGroup> {
    enumerate_zn_bounded(n, DEFAULT_ENUM_BOUND)
}

/// Breadth-first enumeration from the identity under left multiplication by
/// `s_i^{±1}`; elements are then sorted by their packed matrix.
pub fn enumerate_zn_bounded(n: usize, bound: usize) -> Result<ZnGroup> {
    if n == 0 {
        return Err(Error::Invalid("Z_n needs n >= 1".into()));
    }
    if n > bound || n > MAX_STRANDS {
        return Err(Error::bound("enumerate_zn strand count", n, bound.min(MAX_STRANDS)));
    }
    let expected = zn_order(n);
    if let Some(cap) = element_cap() {
        if expected > cap as u128 {
            return Err(Error::bound("enumerate_zn element count", expected as usize, cap));
        }
    }
    let letters: Vec<Letter> = (1..n).flat_map(|i| [Letter::sigma(i), Letter::sigma_inv(i)]).collect();
    let id = ZnElement::identity(n);
    let mut bfs_keys: Vec<u128> = vec![id.key()];
    let mut bfs_parent: Vec<(u32, Letter)> = vec![(0, Letter::sigma(1))];
    let mut bfs_depth: Vec<u32> = vec![0];
    let mut seen: HashMap<u128, u32> = HashMap::new();
    seen.insert(id.key(), 0);
    let mut queue = VecDeque::from([0u32]);
    let progress = expected > 100_000;
    while let Some(g) = queue.pop_front() {
        let elem = ZnElement::from_key(n, bfs_keys[g as usize]);
        for &l in &letters {
            let mut h = elem.clone();
            h.left_letter(l);
            let key = h.key();
            if seen.contains_key(&key) {
                continue;
            }
            let idx = bfs_keys.len() as u32;
            seen.insert(key, idx);
            bfs_keys.push(key);
            bfs_parent.push((g, l));
            bfs_depth.push(bfs_depth[g as usize] + 1);
            queue.push_back(idx);
            if progress && bfs_keys.len() % 1_000_000 == 0 {
                eprintln!("enumerate_zn: {} elements", bfs_keys.len());
            }
        }
    }
    // Canonical order by packed matrix.
    let mut order: Vec<u32> = (0..bfs_keys.len() as u32).collect();
    order.sort_by_key(|&k| bfs_keys[k as usize]);
    let mut new_of_old = vec![0u32; order.len()];
    for (new, &old) in order.iter().enumerate() {
        new_of_old[old as usize] = new as u32;
    }
    let keys: Vec<u128> = order.iter().map(|&o| bfs_keys[o as usize]).collect();
    let parent: Vec<(u32, Letter)> =
        order.iter().map(|&o| { let (p, l) = bfs_parent[o as usize]; (new_of_old[p as usize], l) }).collect();
    let depth: Vec<u32> = order.iter().map(|&o| bfs_depth[o as usize]).collect();
    let index: HashMap<u128, u32> = keys.iter().enumerate().map(|(k, key)| (*key, k as u32)).collect();
    Ok(ZnGroup { n, keys, index, parent, depth })
}

impl ZnGroup {
    pub fn order(&self) -> usize {
        self.keys.len()
    }

    pub fn element(&self, g: usize) -> ZnElement {
        ZnElement::from_key(self.n, self.keys[g])
    }

    pub fn index_of(&self, e: &ZnElement) -> Option<usize> {
        self.index.get(&e.key()).map(|&k| k as usize)
    }

    pub fn identity(&self) -> usize {
        self.index_of(&ZnElement::identity(self.n)).expect("identity enumerated")
    }

    /// Witness word: a shortest word in `s_i^{±1}` projecting to element `g`.
    pub fn word(&self, g: usize) -> BraidWord {
        let mut letters = Vec::with_capacity(self.depth[g] as usize);
        let mut cur = g;
        while self.depth[cur] > 0 {
            let (p, l) = self.parent[cur];
            letters.push(l);
            cur = p as usize;
        }
        BraidWord::new(self.n, letters).expect("valid letters")
    }

    pub fn word_length(&self, g: usize) -> usize {
        self.depth[g] as usize
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let e = self.element(a).mul(&self.element(b));
        self.index_of(&e).expect("closed under multiplication")
    }

    /// `s_k^{±1} g s_k^{∓1}`.
    pub fn conj_by_letter(&self, g: usize, l: Letter) -> usize {
        let mut e = self.element(g);
        e.left_letter(l);
        e.right_letter(l.inv());
        self.index_of(&e).expect("closed under conjugation")
    }

    pub fn left_letter(&self, g: usize, l: Letter) -> usize {
        let mut e = self.element(g);
        e.left_letter(l);
        self.index_of(&e).expect("closed under multiplication")
    }

    pub fn inverse(&self, g: usize) -> usize {
        let w = self.word(g).inverse();
        self.index_of(&project(&w)).expect("closed under inverses")
    }

    pub fn permutation(&self, g: usize) -> Vec<usize> {
        self.element(g).permutation()
    }

    /// Conjugacy classes by union-find under conjugation by the generators.
    /// Each class lists its members; the representative has the shortest witness word.
    pub fn conjugacy_classes(&self) -> Vec<ConjugacyClass> {
        let size = self.order();
        let mut uf: Vec<u32> = (0..size as u32).collect();
        fn find(uf: &mut [u32], x: u32) -> u32 {
            let mut r = x;
            while uf[r as usize] != r {
                r = uf[r as usize];
            }
            let mut c = x;
            while uf[c as usize] != r {
                let next = uf[c as usize];
                uf[c as usize] = r;
                c = next;
            }
            r
        }
        for g in 0..size {
            for k in 1..self.n {
                let h = self.conj_by_letter(g, Letter::sigma(k));
                let (a, b) = (find(&mut uf, g as u32), find(&mut uf, h as u32));
                if a != b {
                    uf[a.max(b) as usize] = a.min(b);
                }
            }
        }
        let mut by_root: HashMap<u32, Vec<usize>> = HashMap::new();
        for g in 0..size {
            let r = find(&mut uf, g as u32);
            by_root.entry(r).or_default().push(g);
        }
        let mut classes: Vec<ConjugacyClass> = by_root
            .into_values()
            .map(|members| {
                let rep = *members.iter().min_by_key(|&&g| (self.depth[g], g)).expect("nonempty");
                ConjugacyClass { rep, members }
            })
            .collect();
        classes.sort_by_key(|c| c.members[0]);
        classes
    }
}

#[derive(Debug, Clone)]
pub struct ConjugacyClass {
    pub rep: usize,
    pub members: Vec<usize>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::burau_mod;
    use num_traits::ToPrimitive;

    #[test]
    fn orders_match_formula() {
        for (n, expected) in [(1, 1), (2, 4), (3, 48), (4, 1536)] {
            let g = enumerate_zn(n).unwrap();
            assert_eq!(g.order(), expected);
            assert_eq!(zn_order(n), expected as u128);
        }
    }

    #[test]
    fn bound_is_enforced() {
        assert!(matches!(enumerate_zn(6), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn witness_words_project_back() {
        let g = enumerate_zn(3).unwrap();
        for k in 0..g.order() {
            assert_eq!(project(&g.word(k)), g.element(k));
        }
        assert_eq!(g.word(g.identity()).len(), 0);
    }

    #[test]
    fn projection_agrees_with_burau() {
        let w = BraidWord::parse(4, "s1 S2 s3 s3 S1").unwrap();
        let b = burau_mod(&w, 4);
        let e = project(&w);
        let ints: Vec<u8> = b.entries.iter().map(|x| x.to_u8().unwrap()).collect();
        assert_eq!(ints, e.matrix);
        assert_eq!(e.permutation(), w.permutation());
    }

    #[test]
    fn pure_projection_examples() {
        let a12 = PureBraidWord::generator(3, 1, 2, 1).unwrap();
        assert_eq!(pure_project(&a12), PZnElement::generator(3, Pair::new(1, 2)));
        assert_eq!(pure_project(&a12.pow(2)), PZnElement::zero(3));
        let conj = BraidWord::sigma(3, 1).unwrap().conjugate(&PureBraidWord::generator(3, 1, 3, 1).unwrap().to_braid_word());
        assert_eq!(pure_project_word(&conj).unwrap(), PZnElement::generator(3, Pair::new(2, 3)));
        assert_eq!(project(&conj), project(&PureBraidWord::generator(3, 2, 3, 1).unwrap().to_braid_word()));
        assert_eq!(pure_project_word(&BraidWord::sigma(3, 1).unwrap()), Err(Error::NotPure));
    }

    #[test]
    fn classes_partition_the_group() {
        let g = enumerate_zn(3).unwrap();
        let classes = g.conjugacy_classes();
        assert_eq!(classes.iter().map(|c| c.size()).sum::<usize>(), 48);
        let id = g.identity();
        assert!(classes.iter().any(|c| c.members == vec![id]));
        for c in &classes {
            assert_eq!(48 % c.size(), 0);
        }
    }
}
