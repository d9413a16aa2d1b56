use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use rotary::construct::{param_sets, ParamSet};
use rotary::cosetenum::{enumerate_cosets, Presentation};
use rotary::ffield::{enumerate_primitive, PrimePower, PrimitivePoly};
use rotary::grp::{Perm, Word};
use rotary::mapcore::{classify, maps_isomorphic};
use rotary::oracle::{find_isomorphism, RotationSystem};

fn word() -> impl Strategy<Value = Word> {
    prop::collection::vec((any::<bool>(), -6i64..=6), 0..8).prop_map(|letters| {
        Word::from_letters(letters.into_iter().map(|(x, e)| {
            (if x { rotary::grp::Gen::X } else { rotary::grp::Gen::Y }, e)
        }))
    })
}

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn word_text_round_trip(w in word()) {
        let back: Word = w.to_string().parse().unwrap();
        prop_assert_eq!(back, w);
    }

    #[test]
    fn word_inverse_cancels(w in word()) {
        prop_assert!(w.concat(&w.inverse()).is_identity());
    }

    #[test]
    fn relabel_is_an_action(a in perm(9), s in perm(9), u in perm(9)) {
        prop_assert_eq!(a.relabel(&s).relabel(&u), a.relabel(&s.then(&u)));
    }

    /// `⟨x, y | x^a, y^b, [x, y]⟩` is `C_a × C_b`.
    #[test]
    fn abelian_presentations(a in 1i64..12, b in 1i64..12) {
        let p = Presentation::new(vec![Word::x(a), Word::y(b), Word::commutator(&Word::x(1), &Word::y(1))]).unwrap();
        let e = enumerate_cosets(&p, 10_000).unwrap();
        prop_assert_eq!(e.order(), Some((a * b) as u64));
    }

    /// `⟨x, y | x², y^n, (xy)²⟩` is dihedral of order `2n`.
    #[test]
    fn dihedral_presentations(n in 1i64..60) {
        let xy = Word::x(1).concat(&Word::y(1));
        let p = Presentation::new(vec![Word::x(2), Word::y(n), xy.pow(2)]).unwrap();
        let e = enumerate_cosets(&p, 10_000).unwrap();
        prop_assert_eq!(e.order(), Some(2 * n as u64));
    }

    #[test]
    fn param_set_json_round_trip(q in prop::sample::select(vec![2u64, 3, 4, 5, 7, 8, 9, 13, 16]), t in 1u64..9) {
        for ps in param_sets(q, t) {
            prop_assert_eq!(ParamSet::from_json(&ps.to_json()).unwrap(), ps);
        }
    }

    #[test]
    fn primitive_poly_json_round_trip(q in prop::sample::select(vec![2u64, 3, 4, 5, 8, 9, 25, 27, 32, 49])) {
        for mu in enumerate_primitive(PrimePower::from_order(q).unwrap()) {
            prop_assert_eq!(PrimitivePoly::from_json(&mu.to_json()).unwrap(), mu);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Text export and relabelling preserve the map up to isomorphism.
    #[test]
    fn rotation_text_round_trip_and_relabelling(
        pick in prop::sample::select(vec![(2u64, 6u64), (3, 3), (4, 2), (5, 1), (7, 1), (2, 8)]),
        index in 0usize..8,
        seed in any::<u64>(),
    ) {
        let c = classify(pick.0, pick.1).unwrap();
        let map = &c.maps[index % c.maps.len()];
        let rs = map.to_rotation_system().unwrap();
        let back: RotationSystem = rs.to_text().parse().unwrap();
        prop_assert_eq!(&back, &rs);

        let mut images: Vec<u32> = (0..rs.darts() as u32).collect();
        images.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let sigma = Perm::from_images(images).unwrap();
        let rot = Perm::from_images(rs.rotation().to_vec()).unwrap().relabel(&sigma);
        let edge = Perm::from_images(rs.edge().to_vec()).unwrap().relabel(&sigma);
        let moved = RotationSystem::from_permutations(rs.vertices(), rs.multiplicity(), rot.images(), edge.images().to_vec()).unwrap();
        prop_assert!(find_isomorphism(&rs, &moved).is_some());
    }

    /// `H_j` only depends on `j` mod the valency.
    #[test]
    fn wilson_power_is_periodic(
        pick in prop::sample::select(vec![(5u64, 3u64), (7, 1), (8, 2), (4, 4), (2, 12)]),
        index in 0usize..8,
        j in 1i64..40,
    ) {
        let c = classify(pick.0, pick.1).unwrap();
        let map = &c.maps[index % c.maps.len()];
        let n = map.map_type().1 as i64;
        if let Ok(a) = map.wilson_power(j) {
            let b = map.wilson_power(j + n).unwrap();
            prop_assert!(maps_isomorphic(&a, &b));
        }
    }
}
