use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;

use super::module::isotypic_decomposition;
use crate::braid::{BraidWord, Letter};
use crate::error::{Error, Result};
use crate::h1::H1Space;
use crate::pairs::{all_pairs, num_pairs, Pair, PairSubset};
use crate::zn::{enumerate_zn, project};

/// Strand bound for the torsion-point scan.
pub const TORSION_BOUND: usize = 5;
/// Strand bound for the abelianization of `Z_n`.
pub const ZN_ABELIANIZATION_BOUND: usize = 4;

/// Nontrivial `I` whose `V_I` occurs in `H_1` at least `d` times.
pub fn torsion_points(n: usize, d: usize) -> Result<Vec<PairSubset>> {
    if n > TORSION_BOUND {
        return Err(Error::bound("torsion scan strand count", n, TORSION_BOUND));
    }
    let report = isotypic_decomposition(H1Space::shared(n).as_ref())?;
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << num_pairs(n)) {
        let i = PairSubset::from_mask(n, mask);
        if report.dim(&i) >= d.max(1) {
            out.push(i);
        }
    }
    out.sort();
    Ok(out)
}

/// A component through the identity of the first characteristic variety.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Component {
    Triple([usize; 3]),
    Quadruple([usize; 4]),
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = match self {
            Component::Triple(t) => t.iter().map(|x| x.to_string()).collect(),
            Component::Quadruple(q) => q.iter().map(|x| x.to_string()).collect(),
        };
        write!(f, "V_{}", labels.join(""))
    }
}

/// Coordinates `t_pq = -1` on `I` and `+1` elsewhere.
pub fn torsion_point(i: &PairSubset) -> Vec<(Pair, i8)> {
    all_pairs(i.n).into_iter().map(|p| (p, if i.contains(&p) { -1 } else { 1 })).collect()
}

pub fn on_component(i: &PairSubset, c: &Component) -> bool {
    let t = |p: &Pair| if i.contains(p) { -1i8 } else { 1 };
    let pairs = all_pairs(i.n);
    match c {
        Component::Triple([a, b, d]) => {
            let s: BTreeSet<usize> = [*a, *b, *d].into();
            let prod = t(&Pair::new(*a, *b)) * t(&Pair::new(*a, *d)) * t(&Pair::new(*b, *d));
            prod == 1 && pairs.iter().filter(|p| (s.contains(&p.i) as u8 + s.contains(&p.j) as u8) <= 1).all(|p| t(p) == 1)
        }
        Component::Quadruple(q) => {
            let s: BTreeSet<usize> = q.iter().copied().collect();
            let inside: Vec<Pair> = pairs.iter().copied().filter(|p| s.contains(&p.i) && s.contains(&p.j)).collect();
            let outside_ok = pairs.iter().filter(|p| !(s.contains(&p.i) && s.contains(&p.j))).all(|p| t(p) == 1);
            let complementary_ok = inside.iter().all(|p| {
                let rest: Vec<usize> = s.iter().copied().filter(|x| !p.contains(*x)).collect();
                t(p) == t(&Pair::new(rest[0], rest[1]))
            });
            let prod: i8 = inside.iter().map(t).product();
            outside_ok && complementary_ok && prod == 1
        }
    }
}

/// Components of the form `V_ijk` / `V_ijkl` containing the point of `I`;
/// the empty subset is the identity and lies on all of them.
pub fn cohen_suciu_membership(i: &PairSubset) -> Result<Vec<Component>> {
    let n = i.n;
    let mut all = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                all.push(Component::Triple([a, b, c]));
                for d in c + 1..=n {
                    all.push(Component::Quadruple([a, b, c, d]));
                }
            }
        }
    }
    all.sort();
    let hits: Vec<Component> = all.into_iter().filter(|c| on_component(i, c)).collect();
    if hits.is_empty() {
        return Err(Error::NotOnCentralComponent(i.to_string()));
    }
    Ok(hits)
}

/// Invariant factors of `H_1(Z_n; Z)`.
pub fn zn_abelianization(n: usize) -> Result<Vec<BigInt>> {
    if n > ZN_ABELIANIZATION_BOUND {
        return Err(Error::bound("Z_n abelianization strand count", n, ZN_ABELIANIZATION_BOUND));
    }
    if n < 2 {
        return Ok(vec![]);
    }
    let g = enumerate_zn(n)?;
    let s = |k: usize| BraidWord::new(n, vec![Letter::sigma(k)]).expect("k < n");
    // normal closure of generator commutators
    let mut gens: Vec<usize> = Vec::new();
    for a in 1..n {
        for b in a + 1..n {
            let c = s(a).mul(&s(b)).mul(&s(a).inverse()).mul(&s(b).inverse());
            gens.push(g.index_of(&project(&c)).expect("element"));
        }
    }
    let mut closed: HashSet<usize> = gens.iter().copied().collect();
    let mut queue: VecDeque<usize> = gens.iter().copied().collect();
    while let Some(x) = queue.pop_front() {
        for k in 1..n {
            for l in [Letter::sigma(k), Letter::sigma_inv(k)] {
                let y = g.conj_by_letter(x, l);
                if closed.insert(y) {
                    queue.push_back(y);
                }
            }
        }
    }
    let gens: Vec<usize> = closed.into_iter().collect();
    let id = g.identity();
    let mut sub: HashSet<usize> = HashSet::from([id]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for &h in &gens {
            let y = g.mul(h, x);
            if sub.insert(y) {
                queue.push_back(y);
            }
        }
    }
    let quotient = g.order() / sub.len();
    // order of the image of s_1
    let s1 = g.index_of(&project(&s(1))).expect("element");
    let mut x = s1;
    let mut k = 1;
    while !sub.contains(&x) {
        x = g.mul(s1, x);
        k += 1;
    }
    if k != quotient {
        return Err(Error::Invalid("abelianization is not cyclic on s_1".into()));
    }
    Ok(if quotient == 1 { vec![] } else { vec![BigInt::from(quotient)] })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_examples() {
        let i3 = PairSubset::i3(3);
        assert_eq!(cohen_suciu_membership(&i3).unwrap(), vec![Component::Triple([1, 2, 3])]);
        let i4 = PairSubset::i4(4);
        assert_eq!(cohen_suciu_membership(&i4).unwrap(), vec![Component::Quadruple([1, 2, 3, 4])]);
        assert_eq!(cohen_suciu_membership(&PairSubset::empty(4)).unwrap().len(), 4 + 1);
        let single = PairSubset::from_pairs(3, [Pair::new(1, 2)]).unwrap();
        assert!(matches!(cohen_suciu_membership(&single), Err(Error::NotOnCentralComponent(_))));
    }

    #[test]
    fn abelianization_of_zn() {
        for n in 2..=4 {
            assert_eq!(zn_abelianization(n).unwrap(), vec![BigInt::from(4)], "n = {n}");
        }
    }
}
