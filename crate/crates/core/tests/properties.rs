use proptest::prelude::*;

use qpa_core::einfty::{Lift, Squares};
use qpa_core::instances::{builtin, parse_instance, random_finite_crossed_module, to_json, validate, Instance};
use qpa_core::qpa::Brackets;
use qpa_core::trackgroup::{Perm, TrackElem};

fn track(n: usize) -> impl Strategy<Value = TrackElem> {
    (Just(n).prop_flat_map(|n| Just((0..n).collect::<Vec<usize>>()).prop_shuffle()), any::<bool>())
        .prop_map(|(images, w)| TrackElem::from_parts(Perm::new(images).unwrap(), w))
}

fn triple() -> impl Strategy<Value = (TrackElem, TrackElem, TrackElem)> {
    (2usize..=8).prop_flat_map(|n| (track(n), track(n), track(n)))
}

/// `binom(n, 2) mod 2`, computed in i128 so the oracle cannot overflow.
fn binom2_mod2(n: i64) -> i64 {
    let n = n as i128;
    ((n * (n - 1) / 2).rem_euclid(2)) as i64
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn track_products_match_clifford_model((a, b, c) in triple()) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(ab.clifford_image(), a.clifford_image().mul(&b.clifford_image()));
        prop_assert_eq!(ab.mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert!(a.mul(&a.inverse()).unwrap().is_identity());
        prop_assert_eq!(ab.delta(), &a.delta().mul(b.delta()));
        prop_assert_eq!(ab.epsilon(), a.epsilon() * b.epsilon());
    }

    #[test]
    fn omega_is_central((a, _, _) in triple()) {
        let w = TrackElem::omega(a.degree());
        prop_assert_eq!(a.mul(&w).unwrap(), w.mul(&a).unwrap());
        prop_assert_eq!(a.times_omega().times_omega(), a);
    }

    #[test]
    fn words_rebuild_elements((a, _, _) in triple()) {
        prop_assert_eq!(TrackElem::from_word(a.degree(), &a.word()).unwrap(), a);
    }

    #[test]
    fn zsigma_square_is_binomial(n in -1_000_000i64..1_000_000) {
        let inst = builtin("zsigma").unwrap();
        let e = inst.einfty().unwrap().unwrap();
        let sq = Squares::new(e).unwrap();
        let (h0, h1) = (sq.ring().h0(0), sq.ring().h1(0));
        let a = h0.from_ints(&[n]);
        let t = sq.sq1(0, &a, Lift::TauHat).unwrap();
        prop_assert_eq!(&t, &h1.from_ints(&[binom2_mod2(n)]));
        // Sq^ω(a) − Sq(a) = a²·η
        let w = sq.sq1(0, &a, Lift::Omega).unwrap();
        prop_assert_eq!(h1.sub(&w, &t), h1.from_ints(&[n.rem_euclid(2)]));
    }

    #[test]
    fn zsigma_square_of_sum(a in -10_000i64..10_000, b in -10_000i64..10_000) {
        let inst = builtin("zsigma").unwrap();
        let e = inst.einfty().unwrap().unwrap();
        let sq = Squares::new(e).unwrap();
        let (h0, h1) = (sq.ring().h0(0), sq.ring().h1(0));
        let s = |k: i64| sq.sq1(0, &h0.from_ints(&[k]), Lift::TauHat).unwrap();
        let rhs = h1.add(&h1.add(&s(a), &s(b)), &h1.from_ints(&[(a * b).rem_euclid(2)]));
        prop_assert_eq!(s(a + b), rhs);
    }

    #[test]
    fn brackets_in_lambda_z_are_linear(k in -20i64..20, l in -20i64..20) {
        let inst = builtin("lambda-z").unwrap();
        let br = Brackets::algebra(&inst.qpa).unwrap();
        let h0 = br.ring.h0(1);
        let (x, kx, lx) = (h0.from_ints(&[1]), h0.from_ints(&[k]), h0.from_ints(&[l]));
        let m = br.bracket(1, &kx, 1, &x, 1, &lx).unwrap();
        prop_assert!(m.indeterminacy().is_empty());
        prop_assert_eq!(m.representative(), &m.group.from_ints(&[k * l]));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_instances_round_trip(seed in any::<u64>()) {
        let qpa = random_finite_crossed_module(seed, 3).unwrap();
        let inst = Instance::plain(qpa);
        validate(&inst).unwrap();
        let text = to_json(&inst);
        let back = parse_instance(&text).unwrap();
        prop_assert_eq!(to_json(&back), text);
    }

    #[test]
    fn random_generation_is_seeded(seed in any::<u64>()) {
        let a = to_json(&Instance::plain(random_finite_crossed_module(seed, 3).unwrap()));
        let b = to_json(&Instance::plain(random_finite_crossed_module(seed, 3).unwrap()));
        prop_assert_eq!(a, b);
    }
}
