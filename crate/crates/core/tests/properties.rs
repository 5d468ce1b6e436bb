use proptest::prelude::*;
use qkostant::{
    dual_highest_weight, freudenthal, to_dominant_chamber, weyl_dimension, RootSystem, Weight, WeylGroup,
    DEFAULT_WEYL_CAP,
};

const TYPES: [&str; 6] = ["A2", "A3", "B2", "C3", "G2", "D4"];

fn type_and_weight(bound: i64) -> impl Strategy<Value = (RootSystem, Weight)> {
    (0..TYPES.len()).prop_flat_map(move |i| {
        let rs = RootSystem::from_type(TYPES[i].parse().unwrap());
        let n = rs.rank();
        (Just(rs), prop::collection::vec(-bound..=bound, n).prop_map(Weight::new))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn chamber_is_idempotent_and_in_orbit((rs, w) in type_and_weight(4)) {
        let ch = to_dominant_chamber(&rs, &w).unwrap();
        prop_assert!(ch.dominant_rep.is_dominant());
        prop_assert_eq!(ch.element.apply(&w).unwrap(), ch.dominant_rep.clone());
        let again = to_dominant_chamber(&rs, &ch.dominant_rep).unwrap();
        prop_assert_eq!(again.dominant_rep, ch.dominant_rep);
        prop_assert_eq!(again.element.length(), 0);
    }

    #[test]
    fn dual_is_an_involution_preserving_dimension((rs, w) in type_and_weight(2)) {
        let lambda = to_dominant_chamber(&rs, &w).unwrap().dominant_rep;
        let dual = dual_highest_weight(&rs, &lambda).unwrap();
        prop_assert_eq!(dual_highest_weight(&rs, &dual).unwrap(), lambda.clone());
        prop_assert_eq!(weyl_dimension(&rs, &dual).unwrap(), weyl_dimension(&rs, &lambda).unwrap());
    }

    #[test]
    fn characters_are_weyl_invariant((rs, w) in type_and_weight(1)) {
        let lambda = to_dominant_chamber(&rs, &w).unwrap().dominant_rep;
        let ch = freudenthal(&rs, &lambda).unwrap();
        prop_assert_eq!(ch.dimension(), weyl_dimension(&rs, &lambda).unwrap());
        for i in 0..rs.rank() {
            for (mu, m) in ch.iter() {
                prop_assert_eq!(ch.mult(&rs.reflect(i, mu).unwrap()), m);
            }
        }
    }
}

#[test]
fn orbit_of_rho_is_free() {
    for t in TYPES {
        let rs = RootSystem::from_type(t.parse().unwrap());
        let w = WeylGroup::new(&rs, DEFAULT_WEYL_CAP).unwrap();
        let mut images: Vec<Weight> = w.elements().iter().map(|e| e.apply(&rs.rho()).unwrap()).collect();
        images.sort();
        images.dedup();
        assert_eq!(images.len(), w.len(), "{t}");
    }
}
