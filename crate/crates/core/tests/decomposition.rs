use std::time::Instant;

use level4::h1::{dim_h1, H1Space};
use level4::rep::*;

#[test]
fn multiplicity_pattern() {
    let expect: [(usize, [Option<u64>; 5]); 4] = [
        (2, [Some(1), Some(0), None, None, None]),
        (3, [Some(1), Some(1), None, Some(1), None]),
        (4, [Some(1); 5]),
        (5, [Some(1); 5]),
    ];
    for (n, want) in expect {
        let t = Instant::now();
        let space = H1Space::shared(n);
        let got = constituent_multiplicities(space.as_ref()).unwrap();
        eprintln!("n={n} {:?}", t.elapsed());
        assert_eq!(got, want.to_vec(), "n = {n}");
    }
}

#[test]
fn full_group_agrees() {
    for n in 2..=4 {
        let t = Instant::now();
        let space = H1Space::shared(n);
        for l in IrrepLabel::constituents().iter().filter(|l| l.applies(n)) {
            assert_eq!(multiplicity_full(l, space.as_ref()).unwrap(), multiplicity(l, space.as_ref()).unwrap(), "{l} n={n}");
        }
        eprintln!("full n={n} {:?}", t.elapsed());
    }
}

#[test]
fn constituents_orthonormal() {
    for n in [3, 4] {
        let labels: Vec<IrrepLabel> = IrrepLabel::constituents().into_iter().filter(|l| l.applies(n)).collect();
        let chars: Vec<CharacterVector> = labels.iter().map(|l| induced_character(l, n).unwrap()).collect();
        for (a, x) in chars.iter().enumerate() {
            assert_eq!(x.degree() as u128, constituent_dimension(&labels[a], n).unwrap());
            for (b, y) in chars.iter().enumerate() {
                let want = if a == b { 1 } else { 0 };
                assert_eq!(x.inner(y), level4::linalg::q(want), "{} {}", labels[a], labels[b]);
            }
        }
    }
}

#[test]
fn dimension_sum() {
    for n in 2..=5 {
        let space = H1Space::shared(n);
        let mults = constituent_multiplicities(space.as_ref()).unwrap();
        let total: u128 = IrrepLabel::constituents()
            .iter()
            .zip(&mults)
            .filter_map(|(l, m)| m.map(|m| m as u128 * constituent_dimension(l, n).unwrap()))
            .sum();
        assert_eq!(total, dim_h1(n) as u128);
    }
}

mod seeds {
    use level4::braid::omega_rho;
    use level4::h1::{act, Generator, H1Space};
    use level4::linalg::{q, rank_of, Echelon};
    use level4::pairs::{all_pairs, PairSubset};
    use level4::rep::*;
    use level4::zn::enumerate_zn;

    #[test]
    fn orbit_dimensions() {
        assert_eq!(orbit_submodule(&alpha(4, 1, 2).unwrap()).dim(), 6);
        let a = orbit_submodule(&x3(4).unwrap());
        let b = orbit_submodule(&x4(4).unwrap());
        let c = orbit_submodule(&alpha(4, 1, 2).unwrap());
        assert_eq!((a.dim(), b.dim()), (12, 3));
        let all = a.vectors().chain(b.vectors()).chain(c.vectors()).cloned();
        assert_eq!(rank_of(all), 21);
        assert_eq!(orbit_submodule(&x4(5).unwrap()).dim(), 15);
        assert_eq!(orbit_submodule(&x3(3).unwrap()).dim(), 3);
    }

    #[test]
    fn stabilizer_acts_by_rho() {
        for (k, n) in [(3, 3), (3, 4), (4, 4)] {
            let x = if k == 3 { x3(n).unwrap() } else { x4(n).unwrap() };
            let i = if k == 3 { PairSubset::i3(n) } else { PairSubset::i4(n) };
            let group = enumerate_zn(n).unwrap();
            let mut seen = 0;
            for g in 0..group.order() {
                let w = group.word(g);
                if i.permute(&w.permutation()) != i {
                    continue;
                }
                seen += 1;
                let sign = omega_rho(&w, k).unwrap().1;
                assert_eq!(act(&Generator::Word(w), &x).unwrap(), x.scale(&q(sign as i64)));
            }
            assert_eq!(seen, group.order() / subset_orbit(&i).len());
        }
    }

    #[test]
    fn translates_are_isotypic() {
        for (n, x, i) in [(4, x3(4).unwrap(), PairSubset::i3(4)), (4, x4(4).unwrap(), PairSubset::i4(4)), (5, x4(5).unwrap(), PairSubset::i4(5))] {
            let mut e = Echelon::new();
            for (j, word) in subset_orbit(&i) {
                let v = act(&Generator::Word(word), &x).unwrap();
                for p in all_pairs(n) {
                    let sign = if j.contains(&p) { -1 } else { 1 };
                    assert_eq!(act(&Generator::Twist(p), &v).unwrap(), v.scale(&q(sign)));
                }
                assert!(e.insert(H1Space::shared(n).vec_to_q(&v)));
            }
        }
    }

    #[test]
    fn isotypic_dims() {
        let r = isotypic_decomposition(H1Space::shared(3).as_ref()).unwrap();
        assert_eq!(r.dim(&PairSubset::empty(3)), 3);
        for j in subset_orbit(&PairSubset::i3(3)).keys() {
            assert_eq!(r.dim(j), 1);
        }
        assert_eq!(r.blocks.len(), 4);
        let r = isotypic_decomposition(H1Space::shared(4).as_ref()).unwrap();
        assert_eq!(r.dim(&PairSubset::empty(4)), 6);
        assert_eq!(r.blocks.len(), 1 + 12 + 3);
        assert_eq!(r.total_dim(), 21);
    }

    #[test]
    fn torsion() {
        let t3 = torsion_points(3, 1).unwrap();
        assert_eq!(t3.len(), 3);
        assert_eq!(torsion_points(4, 1).unwrap().len(), 15);
        for n in 3..=5 {
            assert!(torsion_points(n, 2).unwrap().is_empty());
            for i in torsion_points(n, 1).unwrap() {
                cohen_suciu_membership(&i).unwrap();
            }
        }
    }
}
