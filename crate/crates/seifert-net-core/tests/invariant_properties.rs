//! Property tests for the Seifert-invariant algebra, lens-space
//! equivalences, and the serialized forms of the model types.

use num_rational::Ratio;
use proptest::prelude::*;
use seifert_net_core::{canonical_torus_knot, LensSpace, SeifertInvariants, SeifertSurgery};

fn fiber_pair() -> impl Strategy<Value = (i64, i64)> {
    (1..=9i64, -9..=9i64).prop_filter("coprime", |&(a, b)| num_integer::gcd(a, b) == 1)
}

fn invariants() -> impl Strategy<Value = SeifertInvariants> {
    (-6..=6i64, prop::collection::vec(fiber_pair(), 0..=4))
        .prop_map(|(b, pairs)| SeifertInvariants::new(b, &pairs).unwrap())
}

fn lens_space() -> impl Strategy<Value = LensSpace> {
    (0..=60i64, -60..=60i64)
        .prop_filter("coprime", |&(p, q)| {
            num_integer::gcd(p, q) == 1 && (p != 0 || q.abs() == 1)
        })
        .prop_map(|(p, q)| LensSpace::new(p, q).unwrap())
}

fn torus_surgery() -> impl Strategy<Value = SeifertSurgery> {
    (-12..=12i64, -12..=12i64, -80..=80i64)
        .prop_filter_map("coprime", |(p, q, m)| {
            canonical_torus_knot(p, q)
                .ok()
                .map(|knot| SeifertSurgery::torus(knot, m))
        })
}

proptest! {
    #[test]
    fn normalize_is_idempotent(inv in invariants()) {
        let once = inv.normalize().unwrap();
        prop_assert_eq!(once.normalize().unwrap(), once);
    }

    #[test]
    fn normalize_preserves_euler_number_and_homology(inv in invariants()) {
        let normalized = inv.normalize().unwrap();
        prop_assert_eq!(normalized.euler_number().unwrap(), inv.euler_number().unwrap());
        prop_assert_eq!(
            normalized.first_homology_order().unwrap(),
            inv.first_homology_order().unwrap()
        );
    }

    #[test]
    fn normalized_fibers_are_reduced_and_sorted(inv in invariants()) {
        let normalized = inv.normalize().unwrap();
        let fibers = normalized.fibers();
        for fiber in fibers {
            prop_assert!(fiber.alpha >= 2);
            prop_assert!(0 < fiber.beta && fiber.beta < fiber.alpha);
        }
        let mut sorted = fibers.to_vec();
        sorted.sort();
        prop_assert_eq!(fibers, &sorted[..]);
    }

    #[test]
    fn orientation_reversal_is_an_involution(inv in invariants()) {
        let reversed = inv.reverse_orientation().unwrap();
        prop_assert_eq!(reversed.reverse_orientation().unwrap(), inv.clone());
        prop_assert_eq!(reversed.euler_number().unwrap(), -inv.euler_number().unwrap());
        prop_assert_eq!(
            reversed.first_homology_order().unwrap(),
            inv.first_homology_order().unwrap()
        );
    }

    #[test]
    fn euler_number_vanishing_matches_infinite_homology(inv in invariants()) {
        prop_assert_eq!(
            inv.euler_number().unwrap() == Ratio::new(0, 1),
            inv.first_homology_order().unwrap() == 0
        );
    }

    #[test]
    fn lens_equivalences_are_reflexive_and_symmetric(a in lens_space(), b in lens_space()) {
        prop_assert!(a.oriented_equivalent(&a));
        prop_assert!(a.unoriented_equivalent(&a));
        prop_assert_eq!(a.oriented_equivalent(&b), b.oriented_equivalent(&a));
        prop_assert_eq!(a.unoriented_equivalent(&b), b.unoriented_equivalent(&a));
        if a.oriented_equivalent(&b) {
            prop_assert!(a.unoriented_equivalent(&b));
        }
    }

    #[test]
    fn lens_orientation_reversal_round_trips(a in lens_space()) {
        let reversed = a.reverse_orientation();
        prop_assert_eq!(reversed.reverse_orientation(), a);
        prop_assert!(a.unoriented_equivalent(&reversed));
        prop_assert!(a.oriented_equivalent(&reversed.reverse_orientation()));
    }

    #[test]
    fn lens_parameter_inverse_is_oriented_equivalent(a in lens_space()) {
        let p = a.p() as i64;
        if p > 1 {
            let q = a.q() as i64;
            let inverse = (1..p).find(|&c| (q * c).rem_euclid(p) == 1).unwrap();
            prop_assert!(a.oriented_equivalent(&LensSpace::new(p, inverse).unwrap()));
        }
    }

    #[test]
    fn invariants_round_trip_through_json(inv in invariants()) {
        let json = serde_json::to_string(&inv).unwrap();
        let back: SeifertInvariants = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, inv);
    }

    #[test]
    fn surgeries_round_trip_through_json(surgery in torus_surgery()) {
        let json = serde_json::to_string(&surgery).unwrap();
        let back: SeifertSurgery = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, surgery);
    }

    #[test]
    fn lens_spaces_round_trip_through_json(a in lens_space()) {
        let json = serde_json::to_string(&a).unwrap();
        let back: LensSpace = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, a);
    }
}
