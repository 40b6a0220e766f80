use std::fmt;

use crate::braid::{braid_equal, burau_mod, BraidWord, PureBraidWord};
use crate::error::{Error, Result};
use crate::pairs::{all_pairs, Pair};

/// Largest strand count for the pure braid presentation.
pub const PRESENTATION_BOUND: usize = 5;

/// A finite presentation; relator letters are `±(generator index + 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relators: Vec<Vec<i32>>,
}

pub(crate) fn free_reduce(word: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(word.len());
    for &x in word {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

impl Presentation {
    /// Line format: `gen NAME` per generator, then `rel w1 w2 ...` per relator,
    /// inverse letters written with the name upper-cased.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for g in &self.generators {
            s.push_str(&format!("gen {g}\n"));
        }
        for r in &self.relators {
            let letters: Vec<String> = r
                .iter()
                .map(|&x| {
                    let name = &self.generators[x.unsigned_abs() as usize - 1];
                    if x > 0 { name.clone() } else { name.to_uppercase() }
                })
                .collect();
            s.push_str(&format!("rel {}\n", letters.join(" ")));
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Presentation> {
        let mut generators: Vec<String> = Vec::new();
        let mut relators = Vec::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            if let Some(name) = line.strip_prefix("gen ") {
                generators.push(name.trim().to_string());
            } else if let Some(body) = line.strip_prefix("rel") {
                let mut r = Vec::new();
                for tok in body.split_whitespace() {
                    let pos = generators.iter().position(|g| g == tok);
                    let neg = generators.iter().position(|g| g.to_uppercase() == tok && g != tok);
                    match (pos, neg) {
                        (Some(k), _) => r.push(k as i32 + 1),
                        (None, Some(k)) => r.push(-(k as i32 + 1)),
                        _ => return Err(Error::Parse(format!("unknown letter `{tok}`"))),
                    }
                }
                relators.push(free_reduce(&r));
            } else {
                return Err(Error::Parse(format!("bad presentation line `{line}`")));
            }
        }
        Ok(Presentation { generators, relators })
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

fn gen(n: usize, i: usize, j: usize) -> i32 {
    Pair::new(i, j).index(n) as i32 + 1
}

/// The standard presentation of `PB_n` by Artin generators `A_ij`:
/// for `r < s < j` and `i < j`, `A_rs^{-1} A_ij A_rs` equals
/// `A_ij` (separated or nested), `A_rj A_ij A_rj^{-1}` (`s = i`),
/// `A_rj A_sj A_ij A_sj^{-1} A_rj^{-1}` (`i = r`), or
/// `[A_rj, A_sj] A_ij [A_rj, A_sj]^{-1}` (`r < i < s`).
pub fn pb_presentation(n: usize) -> Result<Presentation> {
    if n > PRESENTATION_BOUND {
        return Err(Error::bound("pb_presentation strand count", n, PRESENTATION_BOUND));
    }
    let generators = all_pairs(n).iter().map(|p| format!("a{}{}", p.i, p.j)).collect();
    let mut relators = Vec::new();
    for rs in all_pairs(n) {
        for ij in all_pairs(n) {
            let (r, s, i, j) = (rs.i, rs.j, ij.i, ij.j);
            if s >= j {
                continue;
            }
            let a = |x, y| gen(n, x, y);
            let rhs: Vec<i32> = if s < i || (i < r && s < j) {
                vec![a(i, j)]
            } else if s == i {
                vec![a(r, j), a(i, j), -a(r, j)]
            } else if i == r {
                vec![a(r, j), a(s, j), a(i, j), -a(s, j), -a(r, j)]
            } else {
                // r < i < s < j
                vec![a(r, j), a(s, j), -a(r, j), -a(s, j), a(i, j), a(s, j), a(r, j), -a(s, j), -a(r, j)]
            };
            let mut rel = vec![-a(r, s), a(i, j), a(r, s)];
            rel.extend(rhs.iter().rev().map(|x| -x));
            relators.push(free_reduce(&rel));
        }
    }
    Ok(Presentation { generators, relators })
}

/// Pure word for a signed-letter relator over the Artin generators.
pub fn letters_to_pure(n: usize, word: &[i32]) -> PureBraidWord {
    let pairs = all_pairs(n);
    let letters = word.iter().map(|&x| (pairs[x.unsigned_abs() as usize - 1], x.signum() as i64)).collect();
    PureBraidWord::new(n, letters).expect("letters in range")
}

pub fn pure_to_letters(w: &PureBraidWord) -> Vec<i32> {
    let mut out = Vec::new();
    for (p, e) in w.letters() {
        let g = p.index(w.n) as i32 + 1;
        for _ in 0..e.unsigned_abs() {
            out.push(if *e > 0 { g } else { -g });
        }
    }
    out
}

/// Checks every relator: trivial in `B_n` (free-group action) and under Burau mod 4 and mod 8.
pub fn validate_presentation(n: usize, p: &Presentation) -> Vec<(usize, bool)> {
    p.relators
        .iter()
        .enumerate()
        .map(|(k, r)| {
            let w = letters_to_pure(n, r).to_braid_word();
            let ok = braid_equal(&w, &BraidWord::identity(n))
                && burau_mod(&w, 4).is_identity()
                && burau_mod(&w, 8).is_identity();
            (k, ok)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_presentations() {
        let p2 = pb_presentation(2).unwrap();
        assert_eq!(p2.generators.len(), 1);
        assert!(p2.relators.is_empty());
        let p3 = pb_presentation(3).unwrap();
        assert_eq!(p3.generators.len(), 3);
        assert_eq!(p3.relators.len(), 2);
        assert_eq!(pb_presentation(4).unwrap().relators.len(), 11);
        assert!(pb_presentation(6).is_err());
    }

    #[test]
    fn relators_are_trivial_braids() {
        for n in 2..=5 {
            let p = pb_presentation(n).unwrap();
            for (k, ok) in validate_presentation(n, &p) {
                assert!(ok, "relator {k} for n = {n}: {:?}", p.relators[k]);
            }
        }
    }

    #[test]
    fn text_round_trip() {
        let p = pb_presentation(4).unwrap();
        assert_eq!(Presentation::from_text(&p.to_text()).unwrap(), p);
        assert!(p.to_text().starts_with("gen a12\n"));
    }
}
