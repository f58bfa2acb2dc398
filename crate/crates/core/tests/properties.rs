mod common;

use common::*;
use proptest::prelude::*;
use reglab_core::families::{GradedFamily, Preset};

fn raw_gen(max_deg: u32) -> impl Strategy<Value = RawGen> {
    (1..=max_deg).prop_flat_map(|d| (Just(d), prop::collection::vec((0..=d, 0..=d, -4i64..5), 1..4)))
}

fn characteristic() -> impl Strategy<Value = u64> {
    prop_oneof![Just(0u64), Just(2), Just(3), Just(32003)]
}

fn prime() -> impl Strategy<Value = u64> {
    prop_oneof![Just(2u64), Just(5), Just(32003)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn reduced_basis_certifies_itself(p in characteristic(), gens in prop::collection::vec(raw_gen(3), 1..4)) {
        let r = ring3(p);
        let i = ideal(&r, gens.iter().map(|g| homogeneous(&r, g)).collect());
        prop_assume!(!i.gens().is_empty());
        prop_assert_eq!(self_certification(&i), Ok(()));
    }

    #[test]
    fn inhomogeneous_basis_certifies_itself(
        p in characteristic(),
        gens in prop::collection::vec(prop::collection::vec((0u32..3, 0u32..3, 0u32..3, -3i64..4), 1..4), 1..4),
    ) {
        let r = ring3(p);
        let i = ideal(&r, gens.iter().map(|t| inhomogeneous(&r, t)).collect());
        prop_assume!(!i.gens().is_empty());
        prop_assert_eq!(self_certification(&i), Ok(()));
    }

    #[test]
    fn reduced_basis_ignores_generator_order(
        p in characteristic(),
        (gens, perm) in prop::collection::vec(raw_gen(3), 1..5)
            .prop_flat_map(|g| { let n = g.len(); (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle()) }),
    ) {
        let r = ring3(p);
        let polys: Vec<_> = gens.iter().map(|g| homogeneous(&r, g)).collect();
        prop_assume!(polys.iter().all(|g| !g.is_zero()));
        prop_assert_eq!(permutation_invariance(&r, &polys, &perm), Ok(()));
    }

    #[test]
    fn initial_ideal_has_the_hilbert_function(p in prime(), gens in prop::collection::vec(raw_gen(4), 1..4), d in 0u32..=20) {
        let r = ring3(p);
        let i = ideal(&r, gens.iter().map(|g| homogeneous(&r, g)).collect());
        prop_assume!(!i.gens().is_empty());
        prop_assert_eq!(macaulay(&i, d), Ok(()));
    }

    #[test]
    fn artinian_regularity_is_top_socle_degree_plus_one(
        pure in prop::array::uniform3(1u32..7),
        extra in prop::collection::vec(prop::array::uniform3(0u32..6).prop_filter("proper", |e| e.iter().sum::<u32>() > 0), 0..5),
    ) {
        let r = ring3(0);
        prop_assert_eq!(artinian_regularity(&artinian_monomial(&r, pure, &extra)), Ok(()));
    }

    #[test]
    fn mprimary_power_regularity_is_subadditive(
        a in 1u32..6, b in 1u32..6,
        extra in prop::collection::vec(prop::array::uniform2(0u32..5).prop_filter("proper", |e| e[0] + e[1] > 0), 0..3),
    ) {
        prop_assert_eq!(subadditivity(&mprimary_powers(a, b, &extra), 8), Ok(()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn hilbert_valuation_identity_three_variables(
        p in characteristic(),
        pure in prop::array::uniform3(1u32..5),
        gens in prop::collection::vec(raw_gen(3), 0..3),
    ) {
        let r = ring3(p);
        let mut polys: Vec<_> = (0..3).map(|v| {
            let mut e = [0u32; 3];
            e[v] = pure[v];
            homogeneous(&r, &(pure[v], vec![(e[0], e[1], 1)]))
        }).collect();
        polys.extend(gens.iter().map(|g| homogeneous(&r, g)));
        let j = ideal(&r, polys);
        for k in 0..=10 {
            prop_assert_eq!(hilbert_valuation(&j, k), Ok(()));
        }
    }
}

#[test]
fn q_power_membership_agrees_exhaustively() {
    assert_eq!(q_power_agreement(40, 8), Ok(()));
}

#[test]
fn preset_mprimary_families_are_subadditive() {
    let fam = GradedFamily::preset(Preset::MPrimaryCounter, 0).unwrap();
    assert_eq!(subadditivity(&fam, 8), Ok(()));
}
