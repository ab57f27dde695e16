use deltamat::ground::enumerate_transversals;
use deltamat::invariants::{upoly, upoly_with_pivot, UMethod};
use deltamat::lorentzian::hessian_inertia;
use deltamat::{DeltaMatroid, MultiPoly, Rational, SignedPermutation, ValidationMethod};
use proptest::prelude::*;

fn q(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

fn family(n: usize) -> impl Strategy<Value = DeltaMatroid> {
    let total = 1usize << n;
    proptest::collection::vec(any::<bool>(), total).prop_filter_map("empty family", move |picks| {
        let t = enumerate_transversals(n).unwrap();
        let chosen: Vec<_> = t.into_iter().zip(picks).filter(|(_, p)| *p).map(|(s, _)| s).collect();
        DeltaMatroid::new(n, chosen).ok()
    })
}

fn valid(n: usize) -> impl Strategy<Value = DeltaMatroid> {
    family(n).prop_filter("invalid family", |d| d.validate(ValidationMethod::Exchange).unwrap().is_valid())
}

fn signed_perm(n: usize) -> impl Strategy<Value = SignedPermutation> {
    (Just((1..=n as i64).collect::<Vec<_>>()).prop_shuffle(), proptest::collection::vec(any::<bool>(), n))
        .prop_map(|(perm, signs)| {
            let image = perm.iter().zip(signs).map(|(&p, s)| if s { -p } else { p }).collect();
            SignedPermutation::new(image).unwrap()
        })
}

fn poly() -> impl Strategy<Value = MultiPoly> {
    proptest::collection::vec((0u8..3, 0u8..3, -4i64..5), 0..6).prop_map(|terms| {
        MultiPoly::from_terms(&["u", "v"], terms.into_iter().map(|(a, b, c)| (vec![a, b], q(c)))).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn validators_agree_at_four(d in family(4)) {
        prop_assert_eq!(
            d.validate(ValidationMethod::Exchange).unwrap().is_valid(),
            d.validate(ValidationMethod::Polytope).unwrap().is_valid()
        );
    }

    #[test]
    fn recursion_is_pivot_invariant(d in valid(4), seed in any::<u64>()) {
        let mut state = seed;
        let mut pick = |m: &DeltaMatroid| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as usize % m.ground_size() + 1
        };
        prop_assert_eq!(upoly_with_pivot(&d, &mut pick).unwrap(), upoly(&d, UMethod::Direct).unwrap());
    }

    #[test]
    fn twist_is_a_group_action(d in valid(3), w1 in signed_perm(3), w2 in signed_perm(3)) {
        let lhs = d.twist(&w1).unwrap().twist(&w2).unwrap();
        let rhs = d.twist(&w2.compose(&w1).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn polynomial_text_round_trips(p in poly()) {
        let back: MultiPoly = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn polynomial_ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(a.substitute("v", &MultiPoly::var("v")).unwrap(), a.clone());
        let sum = &a + &b;
        let shift = &MultiPoly::var("v") - &MultiPoly::one(&["v"]);
        prop_assert_eq!(
            sum.substitute("v", &shift).unwrap(),
            &a.substitute("v", &shift).unwrap() + &b.substitute("v", &shift).unwrap()
        );
        let m = a.multiaffine_part("u").unwrap();
        prop_assert_eq!(m.multiaffine_part("u").unwrap(), m.clone());
        for (e, coeff) in m.terms() {
            prop_assert_eq!(&a.coeff(e), coeff);
        }
    }

    #[test]
    fn inertia_is_congruence_invariant(
        entries in proptest::collection::vec(-3i64..4, 6),
        lower in proptest::collection::vec(-2i64..3, 3),
        diag in proptest::collection::vec(prop_oneof![-2i64..0, 1i64..3], 3),
    ) {
        let idx = [[0, 1, 2], [1, 3, 4], [2, 4, 5]];
        let m: Vec<Vec<Rational>> = (0..3).map(|i| (0..3).map(|j| q(entries[idx[i][j]])).collect()).collect();
        let mut s = vec![vec![q(0); 3]; 3];
        for i in 0..3 {
            s[i][i] = q(diag[i]);
        }
        s[1][0] = q(lower[0]);
        s[2][0] = q(lower[1]);
        s[2][1] = q(lower[2]);
        let mul = |a: &Vec<Vec<Rational>>, b: &Vec<Vec<Rational>>| -> Vec<Vec<Rational>> {
            (0..3).map(|i| (0..3).map(|j| (0..3).map(|k| &a[i][k] * &b[k][j]).sum()).collect()).collect()
        };
        let st: Vec<Vec<Rational>> = (0..3).map(|i| (0..3).map(|j| s[j][i].clone()).collect()).collect();
        let congruent = mul(&mul(&st, &m), &s);
        prop_assert_eq!(hessian_inertia(&m).unwrap(), hessian_inertia(&congruent).unwrap());
    }
}
