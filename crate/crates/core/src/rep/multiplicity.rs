use std::collections::{HashMap, VecDeque};

use num_traits::{ToPrimitive, Zero};

use super::characters::{cycle_type, sn_character};
use super::labels::{subset_orbit, IrrepLabel, RhoTag};
use super::module::{isotypic_decomposition, IsotypicReport, ZnModule};
use crate::braid::{omega_rho, BraidWord, Letter};
use crate::error::{Error, Result};
use crate::linalg::{SubspaceBasis, Q};
use crate::zn::{enumerate_zn, ZnGroup};

/// Largest strand count for the two-stage multiplicity.
pub const MULTIPLICITY_BOUND: usize = 6;
/// Largest strand count for the full-group character computations.
pub const FULL_GROUP_BOUND: usize = 4;

/// Class function on `Z_n`, one value per conjugacy class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterVector {
    pub n: usize,
    /// Witness word and class size per class.
    pub classes: Vec<(BraidWord, usize)>,
    pub values: Vec<i64>,
}

impl CharacterVector {
    pub fn degree(&self) -> i64 {
        self.classes
            .iter()
            .zip(&self.values)
            .find(|((w, _), _)| w.is_empty())
            .map(|(_, v)| *v)
            .unwrap_or(0)
    }

    /// `(1/|G|) sum chi(g) psi(g)`; characters here are real.
    pub fn inner(&self, other: &CharacterVector) -> Q {
        let order: usize = self.classes.iter().map(|(_, s)| s).sum();
        let s: i64 = self.classes.iter().zip(self.values.iter().zip(&other.values)).map(|((_, c), (a, b))| *c as i64 * a * b).sum();
        Q::new(s.into(), (order as i64).into())
    }
}

fn rho_sign(rho: RhoTag, w: &BraidWord) -> Result<i64> {
    Ok(match rho {
        RhoTag::Trivial => 1,
        RhoTag::Rho3 => omega_rho(w, 3)?.1 as i64,
        RhoTag::Rho4 => omega_rho(w, 4)?.1 as i64,
    })
}

/// Character of `V_m(rho) ⊠ V(lambda)` at an element of `Z_n^I` given by a word.
fn inner_character(label: &IrrepLabel, n: usize, w: &BraidWord) -> Result<i64> {
    let perm = w.permutation();
    let tail: Vec<usize> = perm[label.m..].iter().map(|x| x - 1 - label.m).collect();
    let lambda = label.partition(n).expect("validated label");
    let chi = if tail.is_empty() { 1 } else { sn_character(&lambda, &cycle_type(&tail))? };
    Ok(rho_sign(label.rho, w)? * chi)
}

/// Value of the induced character at the element represented by `g`.
pub fn induced_value(label: &IrrepLabel, n: usize, g: &BraidWord) -> Result<i64> {
    let perm = g.permutation();
    let mut total = 0;
    for (j, x) in subset_orbit(&label.subset(n)) {
        if j.permute(&perm) != j {
            continue;
        }
        let h = x.inverse().mul(g).mul(&x);
        total += inner_character(label, n, &h)?;
    }
    Ok(total)
}

fn check_full(n: usize) -> Result<()> {
    if n > FULL_GROUP_BOUND {
        return Err(Error::bound("full-group character strand count", n, FULL_GROUP_BOUND));
    }
    Ok(())
}

/// Conjugacy classes of `Z_n` with witness words.
pub fn class_representatives(group: &ZnGroup) -> Vec<(BraidWord, usize)> {
    group.conjugacy_classes().iter().map(|c| (group.word(c.rep), c.size())).collect()
}

pub fn induced_character(label: &IrrepLabel, n: usize) -> Result<CharacterVector> {
    check_full(n)?;
    label.validate(n)?;
    let group = enumerate_zn(n)?;
    induced_character_on(label, n, &class_representatives(&group))
}

pub fn induced_character_on(label: &IrrepLabel, n: usize, classes: &[(BraidWord, usize)]) -> Result<CharacterVector> {
    let values = classes.iter().map(|(w, _)| induced_value(label, n, w)).collect::<Result<_>>()?;
    Ok(CharacterVector { n, classes: classes.to_vec(), values })
}

/// Character of a module on the given classes.
pub fn module_character<M: ZnModule + ?Sized>(module: &M, classes: &[(BraidWord, usize)]) -> Result<CharacterVector> {
    let n = module.strands();
    let values = classes
        .iter()
        .map(|(w, _)| {
            let t = module.trace(w);
            t.to_integer().to_i64().filter(|_| t.is_integer()).ok_or_else(|| Error::Invalid("non-integral trace".into()))
        })
        .collect::<Result<_>>()?;
    Ok(CharacterVector { n, classes: classes.to_vec(), values })
}

/// Elements of `S_k` acting on strands `offset+1 .. offset+k` of `n`, in BFS order:
/// `(word, parent, generator)` with `word = s_{offset+generator} * word[parent]`.
fn symmetric_words(n: usize, offset: usize, k: usize) -> Vec<(BraidWord, usize, usize)> {
    let start: Vec<usize> = (0..k).collect();
    let mut seen: HashMap<Vec<usize>, usize> = HashMap::from([(start.clone(), 0)]);
    let mut out = vec![(BraidWord::identity(n), 0, 0)];
    let mut queue = VecDeque::from([start]);
    while let Some(p) = queue.pop_front() {
        let at = seen[&p];
        for t in 0..k.saturating_sub(1) {
            let mut q = p.clone();
            for x in q.iter_mut() {
                if *x == t {
                    *x = t + 1;
                } else if *x == t + 1 {
                    *x = t;
                }
            }
            if !seen.contains_key(&q) {
                let s = BraidWord::new(n, vec![Letter::sigma(offset + t + 1)]).expect("index in range");
                let w = s.mul(&out[at].0);
                seen.insert(q.clone(), out.len());
                out.push((w, at, offset + t + 1));
                queue.push_back(q);
            }
        }
    }
    out
}

/// Words in `B_m` (padded to `n` strands) for each element of `Z_m^I`.
fn stabilizer_words(label: &IrrepLabel, n: usize) -> Result<Vec<BraidWord>> {
    if label.m < 2 {
        return Ok(vec![BraidWord::identity(n)]);
    }
    let group = enumerate_zn(label.m)?;
    let mut out = Vec::new();
    for g in 0..group.order() {
        let w = group.word(g);
        if label.i.permute(&w.permutation()) == label.i {
            out.push(w.with_strands(n)?);
        }
    }
    Ok(out)
}

type Dense = Vec<Vec<Q>>;

/// Matrix of `w` on an invariant subspace, in the subspace's coordinates (columns are images).
fn block_matrix<M: ZnModule + ?Sized>(module: &M, block: &SubspaceBasis, w: &BraidWord) -> Dense {
    block.vectors().map(|v| block.coords(&module.apply_word(w, v))).collect()
}

fn compose(a: &Dense, b: &Dense) -> Dense {
    // column-major: (a b)[col j] = a applied to b[col j]
    let d = a.len();
    b.iter()
        .map(|col| {
            let mut out = vec![Q::zero(); d];
            for (k, x) in col.iter().enumerate() {
                if !x.is_zero() {
                    for (r, y) in a[k].iter().enumerate() {
                        if !y.is_zero() {
                            out[r] += x * y;
                        }
                    }
                }
            }
            out
        })
        .collect()
}

fn trace_product(a: &Dense, b: &Dense) -> Q {
    let d = a.len();
    let mut t = Q::zero();
    for i in 0..d {
        for j in 0..d {
            // (a b)_{ii} = sum_j a_{ij} b_{ji}; column-major a[j][i] = a_{ij}
            if !a[j][i].is_zero() && !b[i][j].is_zero() {
                t += &a[j][i] * &b[i][j];
            }
        }
    }
    t
}

/// Multiplicity of the label in the module: restrict to the `I`-isotypic block,
/// on which `Z_n^I` acts through `Z_m^I x S_{n-m}`, and pair characters there.
pub fn multiplicity<M: ZnModule + ?Sized>(label: &IrrepLabel, module: &M) -> Result<u64> {
    let report = isotypic_decomposition(module)?;
    multiplicity_with(label, module, &report)
}

pub fn multiplicity_with<M: ZnModule + ?Sized>(label: &IrrepLabel, module: &M, report: &IsotypicReport) -> Result<u64> {
    let n = module.strands();
    if n > MULTIPLICITY_BOUND {
        return Err(Error::bound("multiplicity strand count", n, MULTIPLICITY_BOUND));
    }
    label.validate(n)?;
    let Some(block) = report.block(&label.subset(n)) else { return Ok(0) };
    let lambda = label.partition(n).expect("validated label");
    let upper: Vec<(i64, Dense)> = stabilizer_words(label, n)?
        .iter()
        .map(|a| Ok((rho_sign(label.rho, a)?, block_matrix(module, block, a))))
        .collect::<Result<_>>()?;
    let lower_words = symmetric_words(n, label.m, n - label.m);
    let mut lower: Vec<(i64, Dense)> = Vec::with_capacity(lower_words.len());
    let letters: HashMap<usize, Dense> = (label.m + 1..n)
        .map(|k| (k, block_matrix(module, block, &BraidWord::new(n, vec![Letter::sigma(k)]).expect("k < n"))))
        .collect();
    for (idx, (w, parent, k)) in lower_words.iter().enumerate() {
        let mat = if idx == 0 { block_matrix(module, block, w) } else { compose(&letters[k], &lower[*parent].1) };
        let tail: Vec<usize> = w.permutation()[label.m..].iter().map(|x| x - 1 - label.m).collect();
        let chi = if tail.is_empty() { 1 } else { sn_character(&lambda, &cycle_type(&tail))? };
        lower.push((chi, mat));
    }
    let mut total = Q::zero();
    for (ca, a) in &upper {
        for (cb, b) in &lower {
            if ca * cb != 0 {
                total += trace_product(a, b) * Q::from_integer((ca * cb).into());
            }
        }
    }
    let count = (upper.len() * lower.len()) as i64;
    let m = total / Q::from_integer(count.into());
    integral(m)
}

fn integral(m: Q) -> Result<u64> {
    if !m.is_integer() || m < Q::zero() {
        return Err(Error::Invalid(format!("multiplicity {m} is not a non-negative integer")));
    }
    Ok(m.to_integer().to_u64().expect("small"))
}

/// Multiplicity through the full-group character inner product.
pub fn multiplicity_full<M: ZnModule + ?Sized>(label: &IrrepLabel, module: &M) -> Result<u64> {
    let n = module.strands();
    check_full(n)?;
    label.validate(n)?;
    let group = enumerate_zn(n)?;
    let classes = class_representatives(&group);
    let chi = induced_character_on(label, n, &classes)?;
    let psi = module_character(module, &classes)?;
    integral(chi.inner(&psi))
}

/// One entry per constituent: `None` where the label does not apply to `n`.
pub fn constituent_multiplicities<M: ZnModule + ?Sized>(module: &M) -> Result<Vec<Option<u64>>> {
    let report = isotypic_decomposition(module)?;
    let n = module.strands();
    IrrepLabel::constituents()
        .iter()
        .map(|l| if l.applies(n) { multiplicity_with(l, module, &report).map(Some) } else { Ok(None) })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::module::MatrixModule;

    #[test]
    fn trivial_module_multiplicities() {
        for n in 2..=4 {
            let m = MatrixModule::trivial(n);
            let got = constituent_multiplicities(&m).unwrap();
            assert_eq!(got[0], Some(1));
            assert!(got[1..].iter().all(|x| x.unwrap_or(0) == 0));
        }
    }

    #[test]
    fn symmetric_word_count() {
        assert_eq!(symmetric_words(5, 2, 3).len(), 6);
        assert_eq!(symmetric_words(4, 0, 4).len(), 24);
        assert_eq!(symmetric_words(4, 4, 0).len(), 1);
    }
}
