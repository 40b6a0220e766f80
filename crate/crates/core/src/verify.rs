//! Named check suites. Each suite returns one line per check; the CLI prints
//! them as JSON and the acceptance test asserts on them.

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::braid::{full_twist, level_membership, PureBraidWord};
use crate::error::{Error, Result};
use crate::formulas::{albanese_inequality, betti_tables, closed_forms, Parameter};
use crate::h1::{commutator_class, dim_h1, enumerate_basis, reduce_str, tau_boundary, H1Space, ModuleExpression};
use crate::linalg::q;
use crate::oracle::{abelianization, subgroup_presentation, Oracle, OracleIsomorphism};
use crate::pairs::{all_pairs, binom, Pair};
use crate::psi::{delta, independence_certificate, iota, psi_base, psi_cover, Cover};
use crate::random::{random_expression, random_level4_word, seeded};
use crate::rep::{
    cohen_suciu_membership, constituent_multiplicities, multiplicity, multiplicity_full, orbit_submodule,
    torsion_points, zn_abelianization, x3, x4, alpha, IrrepLabel, FULL_GROUP_BOUND, MULTIPLICITY_BOUND,
    TORSION_BOUND, ZN_ABELIANIZATION_BOUND,
};
use crate::zn::{enumerate_zn, zn_order};

pub const SUITES: [&str; 8] = ["relations", "action", "oracle", "psi", "decomposition", "group", "torsion", "formulas"];

/// Samples drawn by the randomized checks.
pub const SAMPLES: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub n: usize,
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail}))
            .collect();
        json!({"suite": self.suite, "n": self.n, "seed": self.seed, "passed": self.passed(), "checks": checks})
    }
}

struct Checks(Vec<Check>);

impl Checks {
    fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.0.push(Check { name: name.into(), passed, detail: detail.into() });
    }
}

fn cap(what: &str, n: usize, bound: usize) -> Result<()> {
    if n > bound {
        return Err(Error::bound(what, n, bound));
    }
    Ok(())
}

pub fn run_suite(suite: &str, n: usize, seed: u64) -> Result<SuiteReport> {
    let mut c = Checks(Vec::new());
    match suite {
        "relations" => relations(n, &mut c)?,
        "action" => action(n, seed, &mut c)?,
        "oracle" => oracle(n, seed, &mut c)?,
        "psi" => psi(n, &mut c)?,
        "decomposition" => decomposition(n, &mut c)?,
        "group" => group(n, &mut c)?,
        "torsion" => torsion(n, &mut c)?,
        "formulas" => formulas(&mut c)?,
        other => return Err(Error::UnknownSuite(other.to_string())),
    }
    Ok(SuiteReport { suite: suite.to_string(), n, seed, checks: c.0 })
}

fn quadruples(n: usize) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            for cc in b + 1..=n {
                for d in cc + 1..=n {
                    out.push([a, b, cc, d]);
                }
            }
        }
    }
    out
}

fn triples(n: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            for cc in b + 1..=n {
                out.push([a, b, cc]);
            }
        }
    }
    out
}

/// The three key-lemma combinations on `p < q < r < s`; each reduces to zero.
pub fn key_identities(p: usize, q: usize, r: usize, s: usize) -> [String; 3] {
    [
        format!("(1-T({p},{s}))(1-T({q},{r}))*t({p},{q}) - (1-T({p},{s}))(1-T({q},{r}))*t({r},{s})"),
        format!("(1-T({p},{q}))(1-T({r},{s}))*t({p},{r}) + (1-T({p},{q}))(1-T({r},{s}))*t({q},{s})"),
        format!("(1-T({p},{r}))(1-T({q},{s}))*t({p},{s}) - (1-T({p},{r}))(1-T({q},{s}))*t({q},{r})"),
    ]
}

/// Lantern and commuting identities on the target `t(i,j)`, as `lhs - rhs`.
pub fn lantern_identities(n: usize) -> Vec<String> {
    let mut out = Vec::new();
    for t in all_pairs(n) {
        out.push(format!("T({},{})*t({},{}) - t({},{})", t.i, t.j, t.i, t.j, t.i, t.j));
        for k in (1..=n).filter(|k| !t.contains(*k)) {
            let a = Pair::new(t.i, k);
            let b = Pair::new(t.j, k);
            out.push(format!("T({},{})*t({},{}) - T({},{})*t({},{})", a.i, a.j, t.i, t.j, b.i, b.j, t.i, t.j));
        }
        for p in all_pairs(n).into_iter().filter(|p| p.meets(&t) == 0) {
            out.push(format!("T({},{})*t({},{}) - t({},{})", p.i, p.j, t.i, t.j, t.i, t.j));
        }
    }
    out
}

fn relations(n: usize, c: &mut Checks) -> Result<()> {
    cap("relations suite strand count", n, 6)?;
    let sp = H1Space::shared(n);
    c.push("basis size", sp.dim() == dim_h1(n) && enumerate_basis(n).len() == dim_h1(n), format!("{}", sp.dim()));
    let mut braid_ok = true;
    for k in 1..n {
        for l in k + 1..n {
            let (a, b) = (sp.sigma_matrix(k), sp.sigma_matrix(l));
            braid_ok &= if l == k + 1 { a.mul(b).mul(a) == b.mul(a).mul(b) } else { a.mul(b) == b.mul(a) };
        }
        braid_ok &= sp.sigma_matrix(k).mul(sp.sigma_inv_matrix(k)).is_identity();
    }
    c.push("braid relations", braid_ok, "");
    let mut key_ok = true;
    let mut count = 0;
    for [p, qq, r, s] in quadruples(n) {
        for id in key_identities(p, qq, r, s) {
            key_ok &= reduce_str(n, &id)?.is_zero();
            count += 1;
        }
    }
    c.push("key lemma", key_ok, format!("{count} identities"));
    let lanterns = lantern_identities(n);
    let mut lantern_ok = true;
    for id in &lanterns {
        lantern_ok &= reduce_str(n, id)?.is_zero();
    }
    c.push("lantern and commuting", lantern_ok, format!("{} identities", lanterns.len()));
    Ok(())
}

fn action(n: usize, seed: u64, c: &mut Checks) -> Result<()> {
    cap("action suite strand count", n, 5)?;
    let sp = H1Space::shared(n);
    let pairs = all_pairs(n);
    let square_ok = (1..n).all(|k| sp.sigma_matrix(k).mul(sp.sigma_matrix(k)) == sp.twist_matrix(Pair::new(k, k + 1)));
    c.push("sigma squared is a twist", square_ok, "");
    let twists: Vec<_> = pairs.iter().map(|p| sp.twist_matrix(*p)).collect();
    c.push("twists are involutions", twists.iter().all(|t| t.mul(t).is_identity()), "");
    let mut commute = true;
    for a in &twists {
        for b in &twists {
            commute &= a.mul(b) == b.mul(a);
        }
    }
    c.push("twists commute", commute, "");
    let mut rng = seeded(seed);
    let mut level_ok = true;
    let mut trivial_ok = true;
    for _ in 0..SAMPLES {
        let w = random_level4_word(n, &mut rng, 3);
        level_ok &= level_membership(&w, 4)?;
        for k in 0..sp.dim() {
            let mut v = crate::linalg::QVec::new();
            v.insert(k, q(1));
            if sp.apply_word(&w, &v) != v {
                trivial_ok = false;
            }
        }
    }
    c.push("random words are level 4", level_ok, format!("{SAMPLES} words"));
    c.push("level-4 words act trivially", trivial_ok, format!("{SAMPLES} words"));
    Ok(())
}

fn oracle(n: usize, seed: u64, c: &mut Checks) -> Result<()> {
    cap("oracle suite strand count", n, crate::oracle::SUBGROUP_BOUND)?;
    let o = Oracle::build(n, false)?;
    c.push("rank equals dim", o.rank() == dim_h1(n), format!("rank {}", o.rank()));
    let ab = abelianization(&subgroup_presentation(n, false)?);
    c.push(
        "no odd torsion",
        !ab.odd_torsion() && ab.free_rank == dim_h1(n),
        format!("free rank {}, divisors {:?}", ab.free_rank, ab.elementary_divisors.iter().map(|d| d.to_string()).collect::<Vec<_>>()),
    );
    let iso = OracleIsomorphism::build(o)?;
    let mut rng = seeded(seed);
    let mut agree = 0;
    for _ in 0..SAMPLES {
        if iso.certify(&random_expression(n, &mut rng, 4, 4))? {
            agree += 1;
        }
    }
    c.push("random expressions", agree == SAMPLES, format!("{agree}/{SAMPLES}"));

    let zero: Vec<(crate::Q, PureBraidWord)> = Vec::new();
    let mut ok = true;
    let mut count = 0;
    for [p, qq, r, s] in quadruples(n) {
        for id in key_identities(p, qq, r, s) {
            ok &= iso.oracle.relation_check(&ModuleExpression::parse(n, &id)?.words()?, &zero)?;
            count += 1;
        }
    }
    for id in lantern_identities(n) {
        ok &= iso.oracle.relation_check(&ModuleExpression::parse(n, &id)?.words()?, &zero)?;
        count += 1;
    }
    c.push("key and lantern identities", ok, format!("{count} identities"));

    let mut comm_ok = true;
    for [i, j, k] in triples(n) {
        let x = PureBraidWord::generator(n, i, j, 1)?;
        let y = PureBraidWord::generator(n, j, k, 1)?;
        comm_ok &= iso.word_class(&PureBraidWord::commutator(&x, &y))? == commutator_class(n, i, j, k)?;
    }
    c.push("commutator identities", comm_ok, format!("{} triples", binom(n, 3)));
    let boundary = iso.word_class(&full_twist(n).pow(2))? == tau_boundary(n)?;
    c.push("boundary identity", boundary, "");
    Ok(())
}

/// Rows are covers (i,inf); entry `(sign, a, b)` means `sign * 2 delta_ab`.
const THREE_STRAND_COLUMNS: [&str; 3] = ["(1-T(1,3))*t(1,2)", "(1-T(2,3))*t(1,3)", "(1-T(1,2))*t(2,3)"];
const THREE_STRAND_TABLE: [[Option<(i64, usize, usize)>; 3]; 3] =
    [[None, None, Some((1, 2, 3))], [None, Some((-1, 1, 3)), None], [Some((1, 1, 2)), None, None]];
const FOUR_STRAND_COLUMNS: [&str; 3] = ["(1-T(1,4))(1-T(2,3))*t(1,2)", "(1-T(1,2))(1-T(3,4))*t(1,3)", "(1-T(1,3))(1-T(2,4))*t(1,4)"];
const FOUR_STRAND_DIAGONAL: [(usize, usize); 3] = [(3, 4), (2, 4), (2, 3)];

pub fn three_strand_table_matches() -> Result<bool> {
    let mut ok = true;
    for (r, row) in THREE_STRAND_TABLE.iter().enumerate() {
        let cover = Cover::Infinity(r + 1);
        for (col, entry) in row.iter().enumerate() {
            let got = psi_cover(cover, &reduce_str(3, THREE_STRAND_COLUMNS[col])?)?;
            ok &= match entry {
                None => got.is_zero(),
                Some((s, a, b)) => got == delta(cover, *a, *b).scale(&q(2 * s)),
            };
        }
    }
    Ok(ok)
}

pub fn four_strand_table_matches() -> Result<bool> {
    let mut ok = true;
    for (r, j) in [2, 3, 4].into_iter().enumerate() {
        let cover = Cover::Pair(Pair::new(1, j));
        for (col, e) in FOUR_STRAND_COLUMNS.iter().enumerate() {
            let got = psi_cover(cover, &reduce_str(4, e)?)?;
            ok &= if r == col {
                got == delta(cover, FOUR_STRAND_DIAGONAL[r].0, FOUR_STRAND_DIAGONAL[r].1).scale(&q(4))
            } else {
                got.is_zero()
            };
        }
    }
    Ok(ok)
}

fn psi(n: usize, c: &mut Checks) -> Result<()> {
    cap("psi suite strand count", n, 6)?;
    c.push("three-strand table", three_strand_table_matches()?, "");
    c.push("four-strand table", four_strand_table_matches()?, "");
    let sp = H1Space::shared(n);
    let mut natural = true;
    for s in sp.basis() {
        let v = crate::h1::H1Vector::symbol(n, *s);
        for p in all_pairs(n) {
            let moved = crate::h1::act(&crate::h1::Generator::Twist(p), &v)?;
            for cover in Cover::all(n) {
                natural &= psi_cover(cover, &moved)? == psi_cover(cover, &v)?.relabel(iota(cover, p));
            }
        }
    }
    c.push("naturality", natural, "");
    let mut base_ok = true;
    for [i, j, k] in triples(n) {
        base_ok &= psi_base(&commutator_class(n, i, j, k)?).is_zero();
    }
    c.push("base map kills commutators", base_ok, "");
    let ind = independence_certificate(n)?;
    c.push("independence", ind.passed(), format!("rank {} of {}", ind.rank, ind.dim));
    Ok(())
}

/// Multiplicities of the five constituents, `None` where the label does not apply.
pub fn expected_multiplicities(n: usize) -> Vec<Option<u64>> {
    match n {
        2 => vec![Some(1), Some(0), None, None, None],
        3 => vec![Some(1), Some(1), None, Some(1), None],
        _ => vec![Some(1); 5],
    }
}

fn decomposition(n: usize, c: &mut Checks) -> Result<()> {
    cap("decomposition suite strand count", n, MULTIPLICITY_BOUND)?;
    if n < 2 {
        return Err(Error::Invalid("decomposition needs n >= 2".into()));
    }
    let sp = H1Space::shared(n);
    let got = constituent_multiplicities(sp.as_ref())?;
    let show = |v: &[Option<u64>]| v.iter().map(|m| m.map_or("-".to_string(), |m| m.to_string())).collect::<Vec<_>>().join(",");
    c.push("multiplicities", got == expected_multiplicities(n), format!("({})", show(&got)));
    if n <= FULL_GROUP_BOUND {
        let mut agree = true;
        for l in IrrepLabel::constituents().iter().filter(|l| l.applies(n)) {
            agree &= multiplicity_full(l, sp.as_ref())? == multiplicity(l, sp.as_ref())?;
        }
        c.push("full-group character agrees", agree, "");
    }
    let a = orbit_submodule(&alpha(n, 1, 2)?);
    let mut dims = vec![a.dim()];
    let mut want = vec![binom(n, 2)];
    let mut vectors: Vec<_> = a.vectors().cloned().collect();
    if n >= 3 {
        let b = orbit_submodule(&x3(n)?);
        dims.push(b.dim());
        want.push(3 * binom(n, 3));
        vectors.extend(b.vectors().cloned());
    }
    if n >= 4 {
        let b = orbit_submodule(&x4(n)?);
        dims.push(b.dim());
        want.push(3 * binom(n, 4));
        vectors.extend(b.vectors().cloned());
    }
    c.push("orbit spans", dims == want, format!("{dims:?}"));
    let total = crate::linalg::rank_of(vectors);
    c.push("orbit spans fill H1", total == sp.dim(), format!("{total}"));
    Ok(())
}

fn group(n: usize, c: &mut Checks) -> Result<()> {
    let g = enumerate_zn(n)?;
    c.push("order", g.order() as u128 == zn_order(n), format!("{}", g.order()));
    if (2..=ZN_ABELIANIZATION_BOUND).contains(&n) {
        let ab = zn_abelianization(n)?;
        c.push("abelianization is Z/4", ab == vec![BigInt::from(4)], format!("{:?}", ab.iter().map(|d| d.to_string()).collect::<Vec<_>>()));
    }
    Ok(())
}

fn torsion(n: usize, c: &mut Checks) -> Result<()> {
    cap("torsion suite strand count", n, TORSION_BOUND)?;
    let pts = torsion_points(n, 1)?;
    let want = 3 * binom(n, 3) + 3 * binom(n, 4);
    c.push("d=1 count", pts.len() == want, format!("{} points", pts.len()));
    let mut members = true;
    for p in &pts {
        members &= match cohen_suciu_membership(p) {
            Ok(v) => !v.is_empty(),
            Err(_) => false,
        };
    }
    c.push("points on central components", members, "");
    let two = torsion_points(n, 2)?;
    c.push("no 2-torsion points", two.is_empty(), format!("{} points", two.len()));
    Ok(())
}

fn formulas(c: &mut Checks) -> Result<()> {
    let t = betti_tables();
    let b = |v: &[i64]| v.iter().map(|x| BigInt::from(*x)).collect::<Vec<_>>();
    c.push("B3[4] Betti", t.b3 == b(&[1, 6, 5]), "");
    c.push("B4[4] Betti", t.b4 == b(&[1, 21, 103, 83]), "");
    c.push("Mod2[4] b3 bound", t.mod2_b3_lower == BigInt::from(3068), t.mod2_b3_lower.to_string());
    c.push("Euler identities", t.euler_checks().iter().all(|(_, ok)| *ok), "");
    let g2 = closed_forms(Parameter::Genus(2))?;
    c.push("chi SMod_2[4]", g2.int("euler_smod") == Some(BigInt::from(-3072)), "");
    c.push("b1 SMod_2[4]", g2.int("dim_h1_smod") == Some(BigInt::from(54)), "");
    let g3 = closed_forms(Parameter::Genus(3))?;
    c.push("Torelli bound g=3", g3.int("torelli_bound") == Some(BigInt::from(320)), "");
    let mut all = true;
    for g in 7..=crate::formulas::GENUS_BOUND as u64 {
        all &= albanese_inequality(g)?.holds;
    }
    c.push("Albanese inequality 7..20", all, "");
    let r = albanese_inequality(7)?;
    c.push(
        "Albanese digits g=7",
        (r.rhs_digits - 1).abs_diff(38) <= 1 && (r.lhs_digits - 1).abs_diff(40) <= 1,
        format!("lhs {} digits, rhs {} digits", r.lhs_digits, r.rhs_digits),
    );
    Ok(())
}
