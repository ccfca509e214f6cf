//! Property-based tests: structural laws that must hold on random data.

use proptest::collection::vec;
use proptest::prelude::*;

use orbifolds::covers::orientation_double_cover;
use orbifolds::hitchin::hitchin_dimension_pgl;
use orbifolds::picard::{OrbiCurve, OrbiLineBundle};
use orbifolds::rational::Rational;
use orbifolds::riemannroch::{coarse_rr_oracle, euler_char_sheaf, hitchin_base_dimension};
use orbifolds::signatures::{parse_signature, OrbifoldSignature};

fn arb_signature() -> impl Strategy<Value = OrbifoldSignature> {
    (
        any::<bool>(),
        0..4u32,
        0..3u32,
        vec(2..13u32, 0..6),
        vec(2..13u32, 0..5),
    )
        .prop_filter_map("valid signature", |(orientable, genus, mirrors, cones, corners)| {
            let genus = if orientable { genus } else { genus + 1 };
            let corners = if mirrors == 0 { vec![] } else { corners };
            OrbifoldSignature::new(orientable, genus, mirrors, cones, corners).ok()
        })
}

fn arb_curve() -> impl Strategy<Value = OrbiCurve> {
    (0..6u32, vec(2..13u32, 0..7))
        .prop_map(|(genus, orders)| OrbiCurve::new(genus, orders).unwrap())
}

fn arb_curve_and_bundle() -> impl Strategy<Value = (OrbiCurve, OrbiLineBundle)> {
    arb_curve().prop_flat_map(|curve| {
        let isotropies: Vec<_> = curve.cone_orders().iter().map(|&m| 0..m).collect();
        (-20..=20i64, isotropies).prop_map(move |(coarse, iso)| {
            let bundle = OrbiLineBundle::new(&curve, coarse, iso).unwrap();
            (curve.clone(), bundle)
        })
    })
}

proptest! {
    #[test]
    fn canonicalization_is_idempotent(sig in arb_signature()) {
        let again = OrbifoldSignature::new(
            sig.orientable(),
            sig.genus(),
            sig.mirror_circles(),
            sig.cone_orders().to_vec(),
            sig.corner_orders().to_vec(),
        ).unwrap();
        prop_assert_eq!(&again, &sig);
    }

    #[test]
    fn signature_string_round_trips(sig in arb_signature()) {
        prop_assert_eq!(parse_signature(&sig.to_string()).unwrap(), sig);
    }

    #[test]
    fn chi_denominator_divides_2_lcm(sig in arb_signature()) {
        let chi = sig.orbifold_euler_characteristic();
        let lcm = sig
            .cone_orders()
            .iter()
            .chain(sig.corner_orders())
            .fold(1i64, |acc, &m| num_integer::lcm(acc, i64::from(m)));
        prop_assert_eq!((2 * lcm) % chi.denominator(), 0);
    }

    #[test]
    fn double_cover_doubles_chi(sig in arb_signature()) {
        prop_assume!(!sig.is_orientable_closed());
        let cover = orientation_double_cover(&sig).unwrap();
        prop_assert_eq!(
            cover.orbifold_euler_characteristic(),
            sig.orbifold_euler_characteristic() * 2
        );
    }

    #[test]
    fn tensor_degree_is_additive((curve, a) in arb_curve_and_bundle()) {
        let b = curve.canonical_power(3);
        let ab = a.tensor(&b, &curve).unwrap();
        prop_assert_eq!(
            ab.degree(&curve).unwrap(),
            a.degree(&curve).unwrap() + b.degree(&curve).unwrap()
        );
    }

    #[test]
    fn dual_cancels_to_trivial((curve, a) in arb_curve_and_bundle()) {
        let inv = a.dual(&curve).unwrap();
        prop_assert_eq!(a.tensor(&inv, &curve).unwrap(), curve.trivial_bundle());
        prop_assert_eq!(inv.degree(&curve).unwrap(), -a.degree(&curve).unwrap());
    }

    #[test]
    fn euler_char_matches_coarse_oracle((curve, bundle) in arb_curve_and_bundle()) {
        prop_assert_eq!(
            euler_char_sheaf(&curve, &bundle).unwrap(),
            coarse_rr_oracle(&curve, &bundle).unwrap()
        );
    }

    #[test]
    fn trivial_bundle_has_degree_zero(curve in arb_curve()) {
        prop_assert_eq!(
            curve.trivial_bundle().degree(&curve).unwrap(),
            Rational::from_int(0)
        );
    }
}

/// Covered orbifolds have at least the base's deformation space: the
/// Hitchin dimension of a degree-N cover bounds the base's from above
/// through restriction, so the base dimension never exceeds the cover's.
#[test]
fn cover_dimensions_dominate_base() {
    let base = parse_signature("o0c:2,2,2,2,2,2").unwrap();
    let cover = parse_signature("o2").unwrap();
    for n in 2..=6 {
        assert!(
            hitchin_dimension_pgl(&base, n).unwrap() <= hitchin_dimension_pgl(&cover, n).unwrap()
        );
    }
    let base = parse_signature("o0c:2,3,7").unwrap();
    let cover = parse_signature("o3").unwrap();
    for n in 2..=6 {
        assert!(
            hitchin_dimension_pgl(&base, n).unwrap() <= hitchin_dimension_pgl(&cover, n).unwrap()
        );
    }
}

/// The Hitchin base of a hyperbolic orbi-curve has the complex dimension
/// of half the Hitchin component.
#[test]
fn base_is_half_the_component() {
    for text in ["o0c:2,3,7", "o2", "o3", "o1c:2,2", "o0c:3,3,4"] {
        let sig = parse_signature(text).unwrap();
        let curve = OrbiCurve::from_signature(&sig).unwrap();
        for n in 2..=6u32 {
            assert_eq!(
                2 * hitchin_base_dimension(&curve, n).unwrap(),
                hitchin_dimension_pgl(&sig, n).unwrap(),
                "{text} at n={n}"
            );
        }
    }
}
