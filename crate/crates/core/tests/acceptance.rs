//! One line per acceptance criterion. All comparisons are exact unless the
//! line states a tolerance.

use std::time::{Duration, Instant};

use num_bigint::BigInt;

use level4::braid::{full_twist, level_membership, PureBraidWord};
use level4::formulas::{albanese_inequality, betti_tables, closed_forms, Parameter};
use level4::h1::{commutator_class, dim_h1, enumerate_basis, tau_boundary, H1Space, ModuleExpression};
use level4::linalg::{q, rank_of, QVec};
use level4::oracle::{abelianization, subgroup_presentation, Oracle, OracleIsomorphism};
use level4::pairs::{all_pairs, binom, Pair};
use level4::psi::independence_certificate;
use level4::random::{random_expression, random_level4_word, seeded};
use level4::rep::{
    alpha, cohen_suciu_membership, constituent_multiplicities, multiplicity, multiplicity_full, orbit_submodule,
    torsion_points, x3, x4, zn_abelianization, IrrepLabel,
};
use level4::verify::{four_strand_table_matches, key_identities, lantern_identities, three_strand_table_matches};
use level4::zn::{enumerate_zn, zn_order};
use level4::Result;

const SAMPLES: usize = 200;
const ORACLE_N4_LIMIT: Duration = Duration::from_secs(120);
const DIGIT_TOLERANCE: usize = 1;

fn formula_dim(n: usize) -> usize {
    3 * binom(n, 4) + 3 * binom(n, 3) + binom(n, 2)
}

fn tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if acc.len() == k {
            out.push(acc.clone());
            return;
        }
        for x in start..=n {
            acc.push(x);
            go(x + 1, n, k, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, k, &mut Vec::new(), &mut out);
    out
}

fn c1() -> Result<(bool, String)> {
    let mut ok = true;
    let mut detail = Vec::new();
    for n in 2..=4 {
        let t = Instant::now();
        let rank = Oracle::build(n, false)?.rank();
        let el = t.elapsed();
        let basis = enumerate_basis(n).len();
        ok &= basis == formula_dim(n) && rank == basis;
        if n == 4 {
            ok &= el < ORACLE_N4_LIMIT;
        }
        detail.push(format!("n={n}: basis {basis}, formula {}, oracle {rank} ({el:.1?})", formula_dim(n)));
    }
    Ok((ok, detail.join("; ")))
}

fn c2() -> Result<(bool, String)> {
    let mut ok = true;
    let mut detail = Vec::new();
    for n in [3, 4] {
        let iso = OracleIsomorphism::build(Oracle::build(n, false)?)?;
        let mut rng = seeded(7 + n as u64);
        let mut agree = 0;
        for _ in 0..SAMPLES {
            if iso.certify(&random_expression(n, &mut rng, 4, 4))? {
                agree += 1;
            }
        }
        let none: Vec<(level4::Q, PureBraidWord)> = Vec::new();
        let mut ids = 0;
        let mut ids_ok = 0;
        let mut check = |passed: bool| {
            ids += 1;
            if passed {
                ids_ok += 1;
            }
        };
        for t in tuples(n, 4) {
            for id in key_identities(t[0], t[1], t[2], t[3]) {
                check(iso.oracle.relation_check(&ModuleExpression::parse(n, &id)?.words()?, &none)?);
            }
        }
        for id in lantern_identities(n) {
            check(iso.oracle.relation_check(&ModuleExpression::parse(n, &id)?.words()?, &none)?);
        }
        for t in tuples(n, 3) {
            let x = PureBraidWord::generator(n, t[0], t[1], 1)?;
            let y = PureBraidWord::generator(n, t[1], t[2], 1)?;
            let lhs = vec![(q(1), PureBraidWord::commutator(&x, &y))];
            let rhs = level4::h1::vector_expression(&commutator_class(n, t[0], t[1], t[2])?).words()?;
            check(iso.oracle.relation_check(&lhs, &rhs)?);
        }
        let lhs = vec![(q(1), full_twist(n).pow(2))];
        let rhs = level4::h1::vector_expression(&tau_boundary(n)?).words()?;
        check(iso.oracle.relation_check(&lhs, &rhs)?);
        ok &= agree == SAMPLES && ids == ids_ok;
        detail.push(format!("n={n}: {agree}/{SAMPLES} expressions, {ids_ok}/{ids} identities"));
    }
    Ok((ok, detail.join("; ")))
}

fn c3() -> Result<(bool, String)> {
    let mut ok = true;
    let mut words = 0;
    for n in 2..=5 {
        let sp = H1Space::shared(n);
        for k in 1..n {
            let s = sp.sigma_matrix(k);
            ok &= s.mul(s) == sp.twist_matrix(Pair::new(k, k + 1));
            for l in k + 1..n {
                let t = sp.sigma_matrix(l);
                ok &= if l == k + 1 { s.mul(t).mul(s) == t.mul(s).mul(t) } else { s.mul(t) == t.mul(s) };
            }
        }
        for p in all_pairs(n) {
            let t = sp.twist_matrix(p);
            ok &= t.mul(&t).is_identity();
        }
        let mut rng = seeded(100 + n as u64);
        for _ in 0..SAMPLES {
            let w = random_level4_word(n, &mut rng, 3);
            ok &= level_membership(&w, 4)?;
            for k in 0..sp.dim() {
                let e: QVec = [(k, q(1))].into_iter().collect();
                ok &= sp.apply_word(&w, &e) == e;
            }
            words += 1;
        }
    }
    Ok((ok, format!("n=2..5, {words} level-4 words")))
}

fn c4() -> Result<(bool, String)> {
    let t3 = three_strand_table_matches()?;
    let t4 = four_strand_table_matches()?;
    let mut ok = t3 && t4;
    let mut ranks = Vec::new();
    for n in 2..=5 {
        let r = independence_certificate(n)?;
        ok &= r.rank == dim_h1(n);
        ranks.push(format!("{}/{}", r.rank, dim_h1(n)));
    }
    Ok((ok, format!("3-strand table {t3}, 4-strand table {t4}, ranks {}", ranks.join(" "))))
}

fn c5() -> Result<(bool, String)> {
    let want: [(usize, Vec<Option<u64>>); 4] = [
        (2, vec![Some(1), Some(0), None, None, None]),
        (3, vec![Some(1), Some(1), None, Some(1), None]),
        (4, vec![Some(1); 5]),
        (5, vec![Some(1); 5]),
    ];
    let mut ok = true;
    let mut detail = Vec::new();
    for (n, w) in want {
        let sp = H1Space::shared(n);
        let got = constituent_multiplicities(sp.as_ref())?;
        ok &= got == w;
        if n <= 4 {
            for l in IrrepLabel::constituents().iter().filter(|l| l.applies(n)) {
                ok &= multiplicity_full(l, sp.as_ref())? == multiplicity(l, sp.as_ref())?;
            }
        }
        let mut spans = vec![orbit_submodule(&alpha(n, 1, 2)?)];
        if n >= 3 {
            spans.push(orbit_submodule(&x3(n)?));
        }
        if n >= 4 {
            spans.push(orbit_submodule(&x4(n)?));
        }
        let dims: Vec<usize> = spans.iter().map(|s| s.dim()).collect();
        let expect: Vec<usize> = [binom(n, 2), 3 * binom(n, 3), 3 * binom(n, 4)].into_iter().take(dims.len()).collect();
        let total = rank_of(spans.iter().flat_map(|s| s.vectors().cloned()));
        ok &= dims == expect && total == dim_h1(n) && dims.iter().sum::<usize>() == dim_h1(n);
        let shown: Vec<String> = got.iter().map(|m| m.map_or("-".into(), |m| m.to_string())).collect();
        detail.push(format!("n={n}: ({}) spans {dims:?}", shown.join(",")));
    }
    Ok((ok, detail.join("; ")))
}

fn c6() -> Result<(bool, String)> {
    let mut ok = true;
    let mut detail = Vec::new();
    for n in 2..=5 {
        let g = enumerate_zn(n)?;
        let want: u128 = (1..=n as u128).product::<u128>() << binom(n, 2);
        ok &= g.order() as u128 == want && zn_order(n) == want;
        let mut d = format!("|Z_{n}|={}", g.order());
        if n <= 4 {
            let ab = zn_abelianization(n)?;
            ok &= ab == vec![BigInt::from(4)];
            d.push_str(&format!(" ab={:?}", ab.iter().map(|x| x.to_string()).collect::<Vec<_>>()));
        }
        detail.push(d);
    }
    Ok((ok, detail.join("; ")))
}

fn c7() -> Result<(bool, String)> {
    let mut ok = true;
    let mut detail = Vec::new();
    for (n, want) in [(3, 3), (4, 15), (5, 45)] {
        let pts = torsion_points(n, 1)?;
        ok &= pts.len() == want;
        for p in &pts {
            ok &= cohen_suciu_membership(p).map(|c| !c.is_empty()).unwrap_or(false);
        }
        let two = torsion_points(n, 2)?;
        ok &= two.is_empty();
        detail.push(format!("n={n}: {} points, {} at d=2", pts.len(), two.len()));
    }
    Ok((ok, detail.join("; ")))
}

fn c8() -> Result<(bool, String)> {
    let t = betti_tables();
    let b = |v: &[i64]| v.iter().map(|x| BigInt::from(*x)).collect::<Vec<_>>();
    let g2 = closed_forms(Parameter::Genus(2))?;
    let mut ok = t.b3 == b(&[1, 6, 5])
        && t.b4 == b(&[1, 21, 103, 83])
        && t.mod2_b3_lower == BigInt::from(3068)
        && g2.int("euler_smod") == Some(BigInt::from(-3072))
        && g2.int("dim_h1_smod") == Some(BigInt::from(54));
    for g in 7..=20 {
        ok &= albanese_inequality(g)?.holds;
    }
    let r = albanese_inequality(7)?;
    // order of magnitude 10^38 vs 10^40
    let (re, le) = (r.rhs_digits - 1, r.lhs_digits - 1);
    ok &= re.abs_diff(38) <= DIGIT_TOLERANCE && le.abs_diff(40) <= DIGIT_TOLERANCE;
    Ok((ok, format!("g=7 rhs ~1e{re}, lhs ~1e{le} (digit tolerance {DIGIT_TOLERANCE}); b3(Mod2[4]) >= {}", t.mod2_b3_lower)))
}

fn c9() -> Result<(bool, String)> {
    let mut ok = true;
    let mut detail = Vec::new();
    for n in 2..=4 {
        let ab = abelianization(&subgroup_presentation(n, false)?);
        ok &= !ab.odd_torsion() && ab.free_rank == dim_h1(n);
        let divs: Vec<String> = ab.elementary_divisors.iter().map(|d| d.to_string()).collect();
        detail.push(format!("n={n}: free rank {}, divisors {divs:?}", ab.free_rank));
    }
    Ok((ok, format!("odd torsion absent only; {}", detail.join("; "))))
}

fn main() {
    let criteria: [(&str, fn() -> Result<(bool, String)>); 9] = [
        ("dimension formula", c1),
        ("rewriting-engine certificate", c2),
        ("group-action soundness", c3),
        ("detection tables", c4),
        ("decomposition", c5),
        ("group structure", c6),
        ("torsion points", c7),
        ("closed-form arithmetic", c8),
        ("no odd torsion", c9),
    ];
    let mut failed = Vec::new();
    for (k, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let (ok, detail) = match f() {
            Ok(r) => r,
            Err(e) => (false, format!("error: {e}")),
        };
        println!("criterion {}: {} {name} [{:.1?}] {detail}", k + 1, if ok { "PASS" } else { "FAIL" }, t.elapsed());
        if !ok {
            failed.push(k + 1);
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
