mod common;

use common::{group, h1_by_cocycles, random_lattice, random_unimodular};
use noether_lattice::glattice::{
    direct_sum, dual, flabbiness_report, flabby_resolution, flabby_resolution_with,
    permutation_lattice, subgroups, tate_h0, tate_h_minus1, verify_resolution, PiLattice,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn lattice_strategy(orders: &'static [usize]) -> impl Strategy<Value = PiLattice> {
    (prop::sample::select(orders), any::<u64>()).prop_map(|(n, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_lattice(&mut rng, n)
    })
}

#[test]
fn permutation_lattices_are_flabby_and_coflabby() {
    for n in 1..=12 {
        let g = group(n);
        let orders: Vec<usize> = subgroups(g).iter().map(|s| s.order()).collect();
        for (i, &a) in orders.iter().enumerate() {
            let rep = flabbiness_report(&permutation_lattice(g, &[a]).unwrap());
            assert!(rep.flabby && rep.coflabby, "n={n}, [{a}]");
            for &b in &orders[i..] {
                let rep = flabbiness_report(&permutation_lattice(g, &[a, b]).unwrap());
                assert!(rep.flabby && rep.coflabby, "n={n}, [{a}, {b}]");
            }
        }
    }
}

#[test]
fn regular_representation_is_cohomologically_trivial() {
    for n in 1..=12 {
        let g = group(n);
        let reg = PiLattice::regular(g);
        for s in subgroups(g) {
            assert!(tate_h0(&reg, s).is_trivial(), "n={n} d={}", s.order());
            assert!(tate_h_minus1(&reg, s).is_trivial(), "n={n} d={}", s.order());
        }
    }
}

#[test]
fn h0_of_permutation_summand_is_nonzero() {
    // Ĥ⁰(C_6, Z[C_6/C_2]) = Z/2: cosets fixed only by the whole group
    let g = group(6);
    let l = permutation_lattice(g, &[2]).unwrap();
    assert_eq!(tate_h0(&l, g.whole()).order(), 2.into());
}

#[test]
fn resolution_of_sign_lattice_has_flabby_cokernel() {
    // E differs from Z⁻ but must still be flabby
    let sign = PiLattice::sign(group(2)).unwrap();
    let res = flabby_resolution(&sign);
    assert!(flabbiness_report(&res.e).flabby);
    assert!(!flabbiness_report(&sign).flabby);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn h_minus1_matches_cocycle_route(l in lattice_strategy(&[2, 3])) {
        for s in subgroups(l.group()) {
            prop_assert_eq!(tate_h_minus1(&l, s), h1_by_cocycles(&l, s));
        }
    }

    #[test]
    fn dual_is_an_involution(l in lattice_strategy(&[2, 3, 4, 6])) {
        prop_assert_eq!(dual(&dual(&l)), l);
    }

    #[test]
    fn direct_sum_distributes(a in lattice_strategy(&[4]), b in lattice_strategy(&[4])) {
        let sum = direct_sum(&a, &b).unwrap();
        for s in subgroups(sum.group()) {
            prop_assert_eq!(
                tate_h_minus1(&sum, s),
                tate_h_minus1(&a, s).direct_sum(&tate_h_minus1(&b, s))
            );
            prop_assert_eq!(tate_h0(&sum, s), tate_h0(&a, s).direct_sum(&tate_h0(&b, s)));
        }
    }

    #[test]
    fn resolution_always_verifies(l in lattice_strategy(&[2, 3, 4, 6])) {
        let res = flabby_resolution(&l);
        let report = verify_resolution(&res);
        prop_assert!(report.all_passed(), "{:?}", report);
        prop_assert_eq!(res.q.rank(), res.m.rank() + res.e.rank());
    }

    #[test]
    fn flabbiness_independent_of_generator_choice(l in lattice_strategy(&[2, 3, 4, 6]), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let res = flabby_resolution_with(&l, &mut |_, basis| {
            let (u, _) = random_unimodular(&mut rng, basis.cols(), 4);
            basis.mul(&u)
        });
        prop_assert!(verify_resolution(&res).all_passed());
        let base = flabby_resolution(&l);
        prop_assert_eq!(flabbiness_report(&res.e).flabby, flabbiness_report(&base.e).flabby);
    }
}

#[test]
fn dual_of_permutation_lattice_is_itself() {
    for n in [2, 3, 4, 6, 12] {
        let g = group(n);
        for s in subgroups(g) {
            let l = permutation_lattice(g, &[s.order(), 1]).unwrap();
            assert_eq!(dual(&l), l);
        }
    }
}
