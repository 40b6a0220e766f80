//! Rewriting of prefixed targets into the basis `S`.
//!
//! For a fixed target `t_ab` every twist acts through an involution `u_x`
//! (`x` the label it adds to `{a,b}`), or trivially when it is disjoint from
//! or equal to `{a,b}`. Prefixes are kept in the difference basis
//! `D_K = prod_{x in K} (1 - u_x)`, where `(1-u)^2 = 2(1-u)` and every `D_K`
//! with `|K| >= 3` vanishes. A pair `K = {x,y}` is moved to the target
//! containing the least of the four labels with the sign rules
//! `D_{ab}(cd) = D_{cd}(ab)`, `D_{ac}(bd) = -D_{bd}(ac)`, `D_{ad}(bc) = D_{bc}(ad)`
//! for `a<b<c<d` (written `D_K(target)`), then expanded into monomials.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::linalg::{q, Q};
use crate::pairs::Pair;

use super::basis::{BasisSymbol, H1Vector};
use super::expr::{Factor, ModuleExpression};

/// `(target, K as bit mask over labels)` -> coefficient.
pub(crate) type DiffMap = BTreeMap<(Pair, u64), Q>;

fn bits(mask: u64) -> Vec<usize> {
    (0..64).filter(|b| mask >> b & 1 == 1).collect()
}

/// The label a twist adds to the target, or `None` if it acts trivially.
pub(crate) fn twist_label(twist: Pair, target: Pair) -> Option<usize> {
    twist.other_than(&target)
}

fn add(map: &mut BTreeMap<u64, Q>, k: u64, c: Q) {
    if c.is_zero() {
        return;
    }
    let drop = {
        let e = map.entry(k).or_insert_with(Q::zero);
        *e += c;
        e.is_zero()
    };
    if drop {
        map.remove(&k);
    }
}

/// Multiplies a prefix (in difference coordinates) by one factor.
fn apply_factor(state: &BTreeMap<u64, Q>, f: Factor, target: Pair) -> BTreeMap<u64, Q> {
    let mut out = BTreeMap::new();
    let label = twist_label(f.pair(), target);
    for (k, c) in state {
        match (f, label) {
            (Factor::Twist(_), None) => add(&mut out, *k, c.clone()),
            (Factor::OneMinus(_), None) => {}
            (Factor::OnePlus(_), None) => add(&mut out, *k, c * q(2)),
            (_, Some(x)) => {
                let bit = 1u64 << x;
                let has = k & bit != 0;
                let grown = k | bit;
                let keep = grown.count_ones() <= 2;
                match (f, has) {
                    // u D_K = D_K - D_{K+x};  u D_K = -D_K when x in K.
                    (Factor::Twist(_), false) => {
                        add(&mut out, *k, c.clone());
                        if keep {
                            add(&mut out, grown, -c.clone());
                        }
                    }
                    (Factor::Twist(_), true) => add(&mut out, *k, -c.clone()),
                    (Factor::OneMinus(_), false) => {
                        if keep {
                            add(&mut out, grown, c.clone());
                        }
                    }
                    (Factor::OneMinus(_), true) => add(&mut out, *k, c * q(2)),
                    (Factor::OnePlus(_), false) => {
                        add(&mut out, *k, c * q(2));
                        if keep {
                            add(&mut out, grown, -c.clone());
                        }
                    }
                    (Factor::OnePlus(_), true) => {}
                }
            }
        }
    }
    out
}

/// Moves `D_K(target)` with `|K| = 2` to the target holding the minimum label.
pub(crate) fn canonical_pair(target: Pair, k: u64) -> (i64, Pair, u64) {
    if k.count_ones() != 2 {
        return (1, target, k);
    }
    let ks = bits(k);
    let mut all = [target.i, target.j, ks[0], ks[1]];
    all.sort_unstable();
    let [a, b, c, d] = all;
    if target.contains(a) {
        return (1, target, k);
    }
    let m = |x: usize, y: usize| (1u64 << x) | (1u64 << y);
    if target == Pair::new(c, d) {
        (1, Pair::new(a, b), m(c, d))
    } else if target == Pair::new(b, d) {
        (-1, Pair::new(a, c), m(b, d))
    } else {
        (1, Pair::new(a, d), m(b, c))
    }
}

/// Accumulates an expression in canonical difference coordinates.
pub(crate) fn to_diff(e: &ModuleExpression) -> DiffMap {
    let mut acc = DiffMap::new();
    for t in &e.terms {
        if t.coeff.is_zero() {
            continue;
        }
        let mut state = BTreeMap::new();
        state.insert(0u64, t.coeff.clone());
        for f in t.prefix.iter().rev() {
            state = apply_factor(&state, *f, t.target);
            if state.is_empty() {
                break;
            }
        }
        for (k, c) in state {
            let (sign, target, k2) = canonical_pair(t.target, k);
            let key = (target, k2);
            let drop = {
                let entry = acc.entry(key).or_insert_with(Q::zero);
                *entry += c * q(sign);
                entry.is_zero()
            };
            if drop {
                acc.remove(&key);
            }
        }
    }
    acc
}

/// Expands canonical difference coordinates into basis symbols.
pub(crate) fn diff_to_vector(n: usize, d: &DiffMap) -> H1Vector {
    let mut v = H1Vector::zero(n);
    for ((target, k), c) in d {
        let ks = bits(*k);
        let sym = |extras: &[usize]| BasisSymbol::from_monomial(*target, extras).expect("canonical monomial");
        match ks.len() {
            0 => v.add_term(sym(&[]), c),
            1 => {
                v.add_term(sym(&[]), c);
                v.add_term(sym(&[ks[0]]), &-c.clone());
            }
            2 => {
                v.add_term(sym(&[]), c);
                v.add_term(sym(&[ks[0]]), &-c.clone());
                v.add_term(sym(&[ks[1]]), &-c.clone());
                v.add_term(sym(&ks), c);
            }
            _ => unreachable!("degree three and higher vanish"),
        }
    }
    v
}

/// Coordinates of an expression in the basis `S`.
pub fn reduce(e: &ModuleExpression) -> H1Vector {
    diff_to_vector(e.n, &to_diff(e))
}

/// Convenience: parse and reduce.
pub fn reduce_str(n: usize, s: &str) -> crate::Result<H1Vector> {
    Ok(reduce(&ModuleExpression::parse(n, s)?))
}

/// The expression of a vector as a combination of basis-symbol expressions.
pub fn vector_expression(v: &H1Vector) -> ModuleExpression {
    let mut e = ModuleExpression::zero(v.n);
    for (s, c) in v.terms() {
        let mut t = ModuleExpression::of_symbol(v.n, s);
        t.terms[0].coeff = c.clone();
        e = e.plus(t);
    }
    e
}
