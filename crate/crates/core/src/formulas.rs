//! Closed-form arithmetic: dimensions, Euler characteristics, Betti tables
//! and the Albanese inequality. Everything is exact; big integers are
//! serialized as decimal strings.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::h1::dim_h1;
use crate::linalg::{format_q, Q};

pub const GENUS_BOUND: u32 = 20;

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub fn pow2(e: u64) -> BigInt {
    BigInt::one() << e
}

/// 3C(n,4) + 3C(n,3) + C(n,2) in big integers.
pub fn dim_h1_big(n: u64) -> BigInt {
    binomial(n, 4) * 3 + binomial(n, 3) * 3 + binomial(n, 2)
}

/// dim H_1(SMod_g[4]; Q) = dim H_1(B_{2g+1}[4]; Q) - 1.
pub fn dim_h1_smod(g: u64) -> BigInt {
    dim_h1_big(2 * g + 1) - 1
}

/// Index of the level-2 subgroup of PMod_{0,n}: 2^(C(n-1,2) - 1).
pub fn level2_index(n: u64) -> BigInt {
    pow2(n_choose_2(n - 1) - 1)
}

fn n_choose_2(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

/// chi(PMod_{0,n}) = (-1)^(n-3) (n-3)!, for n >= 3.
pub fn euler_pmod(n: u64) -> BigInt {
    let f = factorial(n - 3);
    if (n - 3) % 2 == 0 {
        f
    } else {
        -f
    }
}

/// Euler characteristic of the squares subgroup of PMod_{0,n}.
pub fn euler_pmod_level2(n: u64) -> BigInt {
    level2_index(n) * euler_pmod(n)
}

/// chi(SMod_g[4]) via SMod_g[4] = PMod^2_{0,2g+2}.
pub fn euler_smod(g: u64) -> BigInt {
    euler_pmod_level2(2 * g + 2)
}

/// -2^(C(2g+1,2)-1) (2g-1)!, the closed form of [`euler_smod`].
pub fn euler_smod_closed(g: u64) -> BigInt {
    -(pow2(n_choose_2(2 * g + 1) - 1) * factorial(2 * g - 1))
}

pub fn cd_smod(g: u64) -> u64 {
    2 * g - 1
}

pub fn cd_bn(n: u64) -> u64 {
    n - 1
}

pub fn dim_v2l2(g: u64) -> BigInt {
    let g = BigInt::from(g);
    let num = &g * (&g - 1) * (BigInt::from(4) * &g * &g + BigInt::from(4) * &g - 3);
    num / 3
}

fn quartic(g: u64, constant: i64) -> Q {
    let g = BigInt::from(g);
    let g2 = &g * &g;
    let num = BigInt::from(20) * &g2 * &g2 + BigInt::from(12) * &g2 * &g - BigInt::from(5) * &g2
        + BigInt::from(9) * &g
        + BigInt::from(constant);
    Q::new(num, BigInt::from(6))
}

/// (20g^4 + 12g^3 - 5g^2 + 9g)/6.
pub fn torelli_quartic_stated(g: u64) -> Q {
    quartic(g, 0)
}

/// (20g^4 + 12g^3 - 5g^2 + 9g - 6)/6; this one equals [`torelli_sum`].
pub fn torelli_quartic_shifted(g: u64) -> Q {
    quartic(g, -6)
}

/// dim V(2 lambda_2) + dim H_1(SMod_g[4]).
pub fn torelli_sum(g: u64) -> BigInt {
    dim_v2l2(g) + dim_h1_smod(g)
}

#[derive(Clone, Debug, PartialEq)]
pub enum Entry {
    Int(BigInt),
    Rat(Q),
    Bool(bool),
}

impl Entry {
    fn to_json(&self) -> Value {
        match self {
            Entry::Int(x) => Value::String(x.to_string()),
            Entry::Rat(x) => Value::String(format_q(x)),
            Entry::Bool(b) => Value::Bool(*b),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parameter {
    Genus(u64),
    Strands(u64),
}

#[derive(Clone, Debug, PartialEq)]
pub struct FormulaReport {
    pub parameter: Parameter,
    pub values: Vec<(String, Entry)>,
}

impl FormulaReport {
    pub fn get(&self, name: &str) -> Option<&Entry> {
        self.values.iter().find(|(k, _)| k == name).map(|(_, v)| v)
    }

    pub fn int(&self, name: &str) -> Option<BigInt> {
        match self.get(name) {
            Some(Entry::Int(x)) => Some(x.clone()),
            Some(Entry::Rat(x)) if x.is_integer() => Some(x.to_integer()),
            _ => None,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        match self.parameter {
            Parameter::Genus(g) => m.insert("g".into(), json!(g)),
            Parameter::Strands(n) => m.insert("n".into(), json!(n)),
        };
        for (k, v) in &self.values {
            m.insert(k.clone(), v.to_json());
        }
        Value::Object(m)
    }
}

pub fn closed_forms(p: Parameter) -> Result<FormulaReport> {
    let mut values = Vec::new();
    let mut put = |k: &str, v: Entry| values.push((k.to_string(), v));
    match p {
        Parameter::Genus(g) => {
            if g < 1 {
                return Err(Error::Invalid("genus must be at least 1".into()));
            }
            let b1 = dim_h1_smod(g);
            let chi = euler_smod(g);
            let sum = torelli_sum(g);
            let stated = torelli_quartic_stated(g);
            let shifted = torelli_quartic_shifted(g);
            let sum_q = Q::from_integer(sum.clone());
            put("dim_h1_smod", Entry::Int(b1));
            put("euler_smod", Entry::Int(chi.clone()));
            put("euler_smod_closed_form_agrees", Entry::Bool(chi == euler_smod_closed(g)));
            put("cd_smod", Entry::Int(cd_smod(g).into()));
            put("dim_v2l2", Entry::Int(dim_v2l2(g)));
            put("torelli_bound", Entry::Int(sum));
            put("torelli_quartic_stated", Entry::Rat(stated.clone()));
            put("torelli_quartic_shifted", Entry::Rat(shifted.clone()));
            put("torelli_stated_matches", Entry::Bool(stated == sum_q));
            put("torelli_shifted_matches", Entry::Bool(shifted == sum_q));
            put("torelli_constant_mismatch", Entry::Bool(stated != shifted));
        }
        Parameter::Strands(n) => {
            if n < 1 {
                return Err(Error::Invalid("n must be at least 1".into()));
            }
            put("dim_h1", Entry::Int(dim_h1_big(n)));
            put("euler_bn4", Entry::Int(BigInt::zero()));
            put("cd_bn4", Entry::Int(cd_bn(n).into()));
        }
    }
    Ok(FormulaReport { parameter: p, values })
}

fn alternating_sum(b: &[BigInt]) -> BigInt {
    b.iter()
        .enumerate()
        .fold(BigInt::zero(), |acc, (i, x)| if i % 2 == 0 { acc + x } else { acc - x })
}

#[derive(Clone, Debug, PartialEq)]
pub struct BettiTables {
    pub b3: Vec<BigInt>,
    pub pmod05: Vec<BigInt>,
    pub b4: Vec<BigInt>,
    pub mod2_euler: BigInt,
    pub mod2_b1: BigInt,
    pub mod2_b3_offset: BigInt,
    pub mod2_b2_lower: BigInt,
    pub mod2_b3_lower: BigInt,
}

impl BettiTables {
    pub fn euler_checks(&self) -> Vec<(String, bool)> {
        vec![
            ("B3[4]".into(), alternating_sum(&self.b3).is_zero()),
            ("B4[4]".into(), alternating_sum(&self.b4).is_zero()),
            ("PMod2(0,5)".into(), alternating_sum(&self.pmod05) == euler_pmod_level2(5)),
        ]
    }

    pub fn to_json(&self) -> Value {
        let s = |v: &[BigInt]| v.iter().map(|x| Value::String(x.to_string())).collect::<Vec<_>>();
        json!({
            "B3[4]": s(&self.b3),
            "B4[4]": s(&self.b4),
            "PMod2(0,5)": s(&self.pmod05),
            "Mod2[4]": {
                "euler": self.mod2_euler.to_string(),
                "b1": self.mod2_b1.to_string(),
                "b3_minus_b2": self.mod2_b3_offset.to_string(),
                "b2_lower": self.mod2_b2_lower.to_string(),
                "b3_lower": self.mod2_b3_lower.to_string(),
            },
        })
    }
}

/// Betti numbers from Euler characteristic and Kunneth arithmetic.
pub fn betti_tables() -> BettiTables {
    let one = BigInt::one();

    // B_3[4]: cd 2, chi 0.
    let b1 = BigInt::from(dim_h1(3));
    let b2 = &b1 - &one;
    let b3 = vec![one.clone(), b1, b2];

    // B_4[4] = PMod^2_{0,5} x Z; PMod^2_{0,5} has cd 2.
    let p1 = BigInt::from(dim_h1(4)) - &one;
    let p2 = euler_pmod_level2(5) - &one + &p1;
    let pmod05 = vec![one.clone(), p1, p2];
    let mut b4 = vec![BigInt::zero(); pmod05.len() + 1];
    for (j, p) in pmod05.iter().enumerate() {
        b4[j] += p;
        b4[j + 1] += p;
    }

    // Mod_2[4]: cd 3, 1 - b1 + b2 - b3 = chi, and b2 + b1 >= b2(B_4[4]).
    let mod2_euler = euler_smod(2);
    let mod2_b1 = dim_h1_smod(2);
    let mod2_b3_offset = &one - &mod2_b1 - &mod2_euler;
    let mod2_b2_lower = &b4[2] - &mod2_b1;
    let mod2_b3_lower = &mod2_b3_offset + &mod2_b2_lower;

    BettiTables { b3, pmod05, b4, mod2_euler, mod2_b1, mod2_b3_offset, mod2_b2_lower, mod2_b3_lower }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AlbaneseReport {
    pub g: u64,
    pub b1: BigInt,
    pub lhs: Q,
    pub rhs: BigInt,
    pub holds: bool,
    pub lhs_digits: usize,
    pub rhs_digits: usize,
    /// False for g < 7, where nothing is claimed.
    pub in_range: bool,
}

impl AlbaneseReport {
    pub fn to_json(&self) -> Value {
        json!({
            "g": self.g,
            "b1": self.b1.to_string(),
            "lhs": format_q(&self.lhs),
            "rhs": self.rhs.to_string(),
            "holds": self.holds,
            "lhs_digits": self.lhs_digits,
            "rhs_digits": self.rhs_digits,
            "in_range": self.in_range,
        })
    }
}

fn digits(x: &BigInt) -> usize {
    x.abs().to_string().len()
}

/// (1/(g-1)) (2^(C(2g+1,2)-1) (2g-1)! - b1) > C(b1, 2g-1).
pub fn albanese_inequality(g: u64) -> Result<AlbaneseReport> {
    if g < 2 {
        return Err(Error::Invalid("albanese inequality needs g >= 2".into()));
    }
    let b1 = dim_h1_smod(g);
    let chi = -euler_smod(g);
    let lhs = Q::new(&chi - &b1, BigInt::from(g - 1));
    let b1_u: u64 = b1.to_string().parse().map_err(|_| Error::Invalid("b1 too large".into()))?;
    let rhs = binomial(b1_u, 2 * g - 1);
    let holds = lhs > Q::from_integer(rhs.clone());
    let lhs_floor = lhs.numer().div_floor(lhs.denom());
    Ok(AlbaneseReport {
        g,
        lhs_digits: digits(&lhs_floor),
        rhs_digits: digits(&rhs),
        b1,
        lhs,
        rhs,
        holds,
        in_range: g >= 7,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn genus_two() {
        let r = closed_forms(Parameter::Genus(2)).unwrap();
        assert_eq!(r.int("euler_smod"), Some(BigInt::from(-3072)));
        assert_eq!(r.int("dim_h1_smod"), Some(BigInt::from(54)));
        assert_eq!(r.int("cd_smod"), Some(BigInt::from(3)));
        assert_eq!(r.get("euler_smod_closed_form_agrees"), Some(&Entry::Bool(true)));
    }

    #[test]
    fn torelli_genus_three() {
        assert_eq!(dim_v2l2(3), BigInt::from(90));
        assert_eq!(dim_h1_smod(3), BigInt::from(230));
        let r = closed_forms(Parameter::Genus(3)).unwrap();
        assert_eq!(r.int("torelli_bound"), Some(BigInt::from(320)));
        assert_eq!(r.get("torelli_shifted_matches"), Some(&Entry::Bool(true)));
        assert_eq!(r.get("torelli_stated_matches"), Some(&Entry::Bool(false)));
        assert_eq!(r.get("torelli_constant_mismatch"), Some(&Entry::Bool(true)));
        assert_eq!(r.int("torelli_quartic_stated"), Some(BigInt::from(321)));
    }

    #[test]
    fn shifted_quartic_is_the_sum() {
        for g in 1..=GENUS_BOUND as u64 {
            assert_eq!(torelli_quartic_shifted(g), Q::from_integer(torelli_sum(g)), "g={g}");
        }
    }

    #[test]
    fn smod_h1_matches_basis_count() {
        for g in 1..=GENUS_BOUND as u64 {
            let n = (2 * g + 1) as usize;
            assert_eq!(dim_h1_smod(g), BigInt::from(dim_h1(n)) - 1);
            assert_eq!(euler_smod(g), euler_smod_closed(g));
        }
    }

    #[test]
    fn tables() {
        let t = betti_tables();
        assert_eq!(t.b3, big(&[1, 6, 5]));
        assert_eq!(t.pmod05, big(&[1, 20, 83]));
        assert_eq!(t.b4, big(&[1, 21, 103, 83]));
        assert_eq!(t.mod2_euler, BigInt::from(-3072));
        assert_eq!(t.mod2_b3_offset, BigInt::from(3019));
        assert_eq!(t.mod2_b2_lower, BigInt::from(49));
        assert_eq!(t.mod2_b3_lower, BigInt::from(3068));
        assert!(t.euler_checks().iter().all(|(_, ok)| *ok));
        assert_eq!(euler_pmod_level2(5), BigInt::from(64));
    }

    #[test]
    fn albanese() {
        let r = albanese_inequality(7).unwrap();
        assert!(r.holds);
        assert_eq!(r.rhs_digits, 39);
        assert_eq!(r.lhs_digits, 41);
        for g in 8..=GENUS_BOUND as u64 {
            assert!(albanese_inequality(g).unwrap().holds, "g={g}");
        }
        let r2 = albanese_inequality(2).unwrap();
        assert!(!r2.in_range);
        assert!(albanese_inequality(1).is_err());
    }

    #[test]
    fn strands() {
        let r = closed_forms(Parameter::Strands(5)).unwrap();
        assert_eq!(r.int("dim_h1"), Some(BigInt::from(55)));
        assert_eq!(r.int("euler_bn4"), Some(BigInt::zero()));
        assert_eq!(r.int("cd_bn4"), Some(BigInt::from(4)));
    }
}
