use proptest::prelude::*;

use chromalg::algebra::{
    golden_eval, golden_sign, GoldenNum, GoldenPoint, IntPoly, RatFun, Sign, Var,
};
use chromalg::chromalg::{generate_contexts, phi};
use chromalg::chromatic::{chromatic_dc, chromatic_statesum};
use chromalg::planar::{canonical_key, generate_triangulations, map_code, random_map, RectGraph};
use chromalg::tl::{all_diagrams, TlElement};

fn poly(c: &[i64]) -> IntPoly {
    IntPoly::from_i64(Var::D, c)
}

fn small_poly() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-5i64..=5, 0..5)
}

fn ratfun() -> impl Strategy<Value = RatFun> {
    (small_poly(), small_poly()).prop_filter_map("zero denominator", |(n, d)| {
        RatFun::new(poly(&n), poly(&d)).ok()
    })
}

fn tl_element(n: usize) -> impl Strategy<Value = TlElement> {
    let diagrams = all_diagrams(n, n);
    let k = diagrams.len();
    prop::collection::vec((0..k, -3i64..=3, 0i64..3), 1..5).prop_map(move |ts| {
        let mut e = TlElement::zero(n, n);
        for (i, c, p) in ts {
            let coeff = &RatFun::from_int(Var::D, c) * &RatFun::x_pow(Var::D, p);
            e.add_term(diagrams[i].clone(), &coeff);
        }
        e
    })
}

/// A random rectangle graph with `bottom` and `top` endpoints.
fn rect(bottom: usize, top: usize, seed: u64) -> RectGraph {
    let cs = generate_contexts(bottom, top, 12, 1, seed);
    cs[(seed as usize) % cs.len()].clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn ratfun_field_laws(a in ratfun(), b in ratfun(), c in ratfun()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a - &a), &RatFun::zero(Var::D));
        if !a.is_zero() {
            prop_assert!((&a / &a).is_one());
        }
    }

    #[test]
    fn golden_eval_is_a_ring_map(p in small_poly(), q in small_poly()) {
        let (p, q) = (poly(&p).with_var(Var::Q), poly(&q).with_var(Var::Q));
        for pt in [GoldenPoint::PhiPlus1, GoldenPoint::PhiPlus2] {
            let (ep, eq) = (golden_eval(&p, pt), golden_eval(&q, pt));
            prop_assert_eq!(golden_eval(&(&p * &q), pt), &ep * &eq);
            prop_assert_eq!(golden_eval(&(&p + &q), pt), &ep + &eq);
        }
    }

    #[test]
    fn golden_sign_agrees_with_floats(a in -1000i64..1000, b in -1000i64..1000) {
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        let v = a as f64 + b as f64 * phi;
        let expect = if a == 0 && b == 0 {
            Sign::Zero
        } else if v > 0.0 {
            Sign::Pos
        } else {
            Sign::Neg
        };
        prop_assert_eq!(golden_sign(&GoldenNum::from_ints(a, b)), expect);
    }

    #[test]
    fn tl_multiplication_is_associative(a in tl_element(3), b in tl_element(3), c in tl_element(3)) {
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(a.mul(&b).unwrap().trace(), b.mul(&a).unwrap().trace());
    }

    #[test]
    fn double_dual_is_isomorphic(edges in 1usize..14, seed in any::<u64>()) {
        let m = random_map(edges, seed);
        let dd = m.dual().unwrap().dual().unwrap();
        prop_assert_eq!(canonical_key(&dd), canonical_key(&m));
        prop_assert_eq!(map_code(&dd), map_code(&m));
    }

    #[test]
    fn keys_ignore_dart_labels(seed in any::<u64>(), shift in 1usize..40) {
        let m = random_map(10, seed);
        let n = m.num_darts();
        let perm: Vec<usize> = (0..n).map(|i| (i * 7 + shift) % n).collect();
        prop_assume!(perm.iter().collect::<std::collections::HashSet<_>>().len() == n);
        let r = m.relabel(&perm);
        prop_assert_eq!(canonical_key(&r), canonical_key(&m));
        prop_assert_eq!(map_code(&r), map_code(&m));
    }

    #[test]
    fn deletion_contraction_matches_state_sum(edges in 1usize..12, seed in any::<u64>()) {
        let m = random_map(edges, seed);
        prop_assert_eq!(chromatic_dc(&m).unwrap().poly, chromatic_statesum(&m).unwrap());
    }

    #[test]
    fn generated_triangulations_are_valid(k in 4usize..14, seed in any::<u64>()) {
        for t in generate_triangulations(k, 2, seed).unwrap() {
            prop_assert_eq!(t.num_vertices(), k);
            prop_assert_eq!(t.faces().len(), 2 * k - 4);
            prop_assert!(t.map().is_planar() && t.map().is_connected());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn phi_respects_gluing(k in 0usize..3, m in 0usize..3, l in 0usize..3, s in any::<u64>()) {
        let a = rect(m, k, s);
        let b = rect(l, m, s.wrapping_add(1));
        prop_assert_eq!(phi(&a.glue(&b).unwrap()), phi(&a).mul(&phi(&b)).unwrap());
    }

    #[test]
    fn phi_respects_tensor(s in any::<u64>(), w in 1usize..3) {
        let a = rect(w, w, s);
        let b = rect(1, 1 + 2 * (s as usize % 2), s.wrapping_add(7));
        prop_assert_eq!(phi(&a.tensor(&b)), phi(&a).tensor(&phi(&b)));
    }
}
