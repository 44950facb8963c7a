use proptest::prelude::*;

use quadform::algebra::BiDegree;
use quadform::chow::{chow_basis, dq_additive_basis_localization, mono_codim, quadric_generator_degrees};
use quadform::hopf::{hopf_admissible, hopf_admissible_mirrored, HopfTriple};
use quadform::motivic::{
    diagonal_power, hopf_via_motivic, restrict_class, DQClass, DQRingSpec, Epsilon, M2Poly, RhoMode,
};

fn spec_strategy() -> impl Strategy<Value = DQRingSpec> {
    (1usize..14, any::<bool>(), any::<bool>()).prop_map(|(n, formal, eps)| {
        let rho = if formal { RhoMode::Formal } else { RhoMode::Zero };
        let epsilon = if eps && formal { Epsilon::Rho } else { Epsilon::Zero };
        DQRingSpec::all_squares(n).with_rho(rho).with_epsilon(epsilon)
    })
}

fn class_from(spec: DQRingSpec, seeds: &[(u32, u32, u32, u32)]) -> DQClass {
    seeds.iter().fold(DQClass::zero(spec), |acc, &(t, m, e, j)| {
        acc.add(&DQClass::monomial(spec, M2Poly::monomial(t % 3, m % 2), e % 2, j % 8)).unwrap()
    })
}

proptest! {
    #[test]
    fn restriction_is_a_ring_map(
        spec in spec_strategy(),
        xs in proptest::collection::vec((0u32..9, 0u32..9, 0u32..9, 0u32..9), 0..5),
        ys in proptest::collection::vec((0u32..9, 0u32..9, 0u32..9, 0u32..9), 0..5),
    ) {
        let x = class_from(spec, &xs);
        let y = class_from(spec, &ys);
        let lhs = restrict_class(&x.mul(&y).unwrap()).unwrap();
        let rhs = restrict_class(&x).unwrap().mul(&restrict_class(&y).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn multiplication_is_associative_and_commutative(
        spec in spec_strategy(),
        xs in proptest::collection::vec((0u32..9, 0u32..9, 0u32..9, 0u32..9), 0..4),
        ys in proptest::collection::vec((0u32..9, 0u32..9, 0u32..9, 0u32..9), 0..4),
        zs in proptest::collection::vec((0u32..9, 0u32..9, 0u32..9, 0u32..9), 0..4),
    ) {
        let (x, y, z) = (class_from(spec, &xs), class_from(spec, &ys), class_from(spec, &zs));
        prop_assert_eq!(x.mul(&y).unwrap(), y.mul(&x).unwrap());
        prop_assert_eq!(x.mul(&y).unwrap().mul(&z).unwrap(), x.mul(&y.mul(&z).unwrap()).unwrap());
    }
}

#[test]
fn both_hopf_ranges_and_the_motivic_verdict_agree() {
    for r in 1..=10u64 {
        for s in 1..=10u64 {
            for n in r.max(s)..=20 {
                let t = HopfTriple::new(r, s, n);
                assert_eq!(hopf_admissible(t), hopf_admissible_mirrored(t));
                assert_eq!(hopf_via_motivic(r as usize, s as usize, n), hopf_admissible(t), "{t:?}");
            }
        }
    }
}

#[test]
fn diagonal_power_is_symmetric_under_swapping_factors() {
    for (r, s, n) in [(3, 5, 6), (4, 7, 9), (2, 6, 7)] {
        let a = diagonal_power(r, s, n).left_degrees();
        let b = diagonal_power(s, r, n).left_degrees();
        let mirrored: Vec<u32> = b.iter().rev().map(|&i| n as u32 - i).collect();
        assert_eq!(a, mirrored);
    }
}

#[test]
fn quadric_generators_match_chow_basis() {
    for m in 0..=20usize {
        let mut from_basis: Vec<BiDegree> = chow_basis(m)
            .into_iter()
            .map(|mono| {
                let c = mono_codim(m, mono) as i64;
                BiDegree::new(2 * c, c)
            })
            .collect();
        let mut listed = quadric_generator_degrees(m);
        from_basis.sort();
        listed.sort();
        assert_eq!(from_basis, listed, "m={m}");
    }
}

#[test]
fn localization_needs_a_positive_ambient_dimension() {
    assert!(dq_additive_basis_localization(0).is_err());
}
