//! Seeded random inputs for certificates and the CLI.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::braid::{BraidWord, PureBraidWord};
use crate::h1::{Factor, ModuleExpression};
use crate::linalg::q_frac;
use crate::pairs::all_pairs;

pub type SeededRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random combination of up to `max_terms` prefixed targets, each prefix up to `max_prefix` long.
pub fn random_expression(n: usize, rng: &mut SeededRng, max_terms: usize, max_prefix: usize) -> ModuleExpression {
    let pairs = all_pairs(n);
    let mut e = ModuleExpression::zero(n);
    for _ in 0..rng.gen_range(1..=max_terms) {
        let coeff = q_frac(rng.gen_range(-4..=4), rng.gen_range(1..=2));
        let prefix = (0..rng.gen_range(0..=max_prefix))
            .map(|_| {
                let p = *pairs.choose(rng).expect("pairs");
                match rng.gen_range(0..3) {
                    0 => Factor::Twist(p),
                    1 => Factor::OneMinus(p),
                    _ => Factor::OnePlus(p),
                }
            })
            .collect();
        let target = *pairs.choose(rng).expect("pairs");
        e.push(coeff, prefix, target).expect("labels in range");
    }
    e
}

/// Random word of `len` letters `A_ij^{±1}`.
pub fn random_pure_word(n: usize, rng: &mut SeededRng, len: usize) -> PureBraidWord {
    let pairs = all_pairs(n);
    let letters = (0..len)
        .map(|_| (*pairs.choose(rng).expect("pairs"), if rng.gen_bool(0.5) { 1 } else { -1 }))
        .collect();
    PureBraidWord::new(n, letters).expect("labels in range")
}

/// Random braid word of `len` letters `s_k^{±1}`.
pub fn random_braid_word(n: usize, rng: &mut SeededRng, len: usize) -> BraidWord {
    if n < 2 {
        return BraidWord::identity(n);
    }
    let signed: Vec<i32> = (0..len)
        .map(|_| {
            let k = rng.gen_range(1..n) as i32;
            if rng.gen_bool(0.5) {
                k
            } else {
                -k
            }
        })
        .collect();
    BraidWord::from_signed(n, &signed).expect("letters in range")
}

/// Product of `factors` conjugates `g A_ij^2 g^{-1}` and squares `w^2` of pure words.
pub fn random_level4_word(n: usize, rng: &mut SeededRng, factors: usize) -> BraidWord {
    let pairs = all_pairs(n);
    let mut out = BraidWord::identity(n);
    for _ in 0..factors {
        let piece = if rng.gen_bool(0.5) {
            let p = *pairs.choose(rng).expect("pairs");
            let sq = PureBraidWord::generator(n, p.i, p.j, 2).expect("labels in range").to_braid_word();
            let len = rng.gen_range(0..=6);
            random_braid_word(n, rng, len).conjugate(&sq)
        } else {
            let len = rng.gen_range(1..=4);
            random_pure_word(n, rng, len).to_braid_word().pow(2)
        };
        out = out.mul(&piece);
    }
    out
}
