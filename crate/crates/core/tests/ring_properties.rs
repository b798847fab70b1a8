use hodge_core::su2_model::{build_algebra, validate, ModelParams};
use hodge_core::{FrobeniusAlgebra, LaurentPoly, RingElement, UniPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i64..=3, -3i64..=3, -20i64..=20), 0..6).prop_map(LaurentPoly::from_terms)
}

fn unit_monomial() -> impl Strategy<Value = LaurentPoly> {
    (-5i64..=5, -5i64..=5, prop::bool::ANY)
        .prop_map(|(p, q, neg)| LaurentPoly::monomial(if neg { -1 } else { 1 }, p, q))
}

const POINTS: [(i64, i64); 5] = [(3, 1), (5, 3), (7, 5), (9, 7), (11, 3)];

fn algebra_and_params() -> impl Strategy<Value = (ModelParams, FrobeniusAlgebra)> {
    prop::sample::select(POINTS.to_vec()).prop_map(|(r, s)| {
        let p = validate(r, s).unwrap();
        (p, build_algebra(&p).unwrap())
    })
}

fn element(rank: usize) -> impl Strategy<Value = Vec<LaurentPoly>> {
    prop::collection::vec(
        prop::collection::vec((-1i64..=2, -1i64..=2, -3i64..=3), 0..3).prop_map(LaurentPoly::from_terms),
        rank,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!((&a + &b) + c.clone(), &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a * &b) * c.clone(), &a * &(&b * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn canonical_form_has_no_zero_terms(a in laurent(), b in laurent()) {
        let prod = &a * &b;
        prop_assert!(prod.terms().all(|(_, c)| c != &BigInt::from(0)));
    }

    #[test]
    fn monomial_inverse(m in unit_monomial()) {
        prop_assert!((&m.invert_monomial().unwrap() * &m).is_one());
    }

    #[test]
    fn specialize_is_a_ring_homomorphism(a in laurent(), b in laurent(), u0 in prop::sample::select(vec![-2i64, -1, 1, 2, 3]), v0 in prop::sample::select(vec![-3i64, -1, 1, 2])) {
        let pa: BigRational = a.specialize(u0, v0).unwrap();
        let pb = b.specialize(u0, v0).unwrap();
        prop_assert_eq!((&a * &b).specialize(u0, v0).unwrap(), &pa * &pb);
        prop_assert_eq!((&a + &b).specialize(u0, v0).unwrap(), pa + pb);
    }

    #[test]
    fn text_round_trip(a in laurent()) {
        prop_assert_eq!(a.to_string().parse::<LaurentPoly>().unwrap(), a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn named_basis_round_trip((_, alg) in algebra_and_params(), seed in element(10)) {
        let coeffs: Vec<LaurentPoly> = seed.into_iter().take(alg.rank()).collect();
        let x = alg.from_named_basis(&coeffs);
        prop_assert_eq!(alg.to_named_basis(&x), coeffs);
    }

    #[test]
    fn product_matches_division_path((_, alg) in algebra_and_params(), a in element(10), b in element(10)) {
        let n = alg.rank();
        let a = alg.reduce(&UniPoly::new(a[..n].to_vec()));
        let b = alg.reduce(&UniPoly::new(b[..n].to_vec()));
        let naive = alg.reduce(&(&a.lift() * &b.lift()));
        prop_assert_eq!(alg.mul(&a, &b), naive.clone());
        prop_assert_eq!(alg.mul(&b, &a), naive);
    }

    #[test]
    fn basis_products_associate((_, alg) in algebra_and_params(), j in 0usize..10, k in 0usize..10, l in 0usize..10) {
        let n = alg.rank();
        let (j, k, l) = (j % n, k % n, l % n);
        let b = |i| alg.basis_element(i);
        prop_assert_eq!(alg.mul(&alg.mul(b(j), b(k)), b(l)), alg.mul(b(j), &alg.mul(b(k), b(l))));
    }

    #[test]
    fn unit_is_neutral((_, alg) in algebra_and_params(), a in element(10)) {
        let a = alg.reduce(&UniPoly::new(a[..alg.rank()].to_vec()));
        prop_assert_eq!(alg.mul(&alg.unit(), &a), a);
    }

    #[test]
    fn pairing_is_symmetric((_, alg) in algebra_and_params(), j in 0usize..10, k in 0usize..10) {
        let n = alg.rank();
        let (a, b) = (alg.basis_element(j % n), alg.basis_element(k % n));
        prop_assert_eq!(alg.eta(a, b), alg.eta(b, a));
    }
}

#[test]
fn pairing_is_nondegenerate() {
    for (r, s) in POINTS {
        let alg = build_algebra(&validate(r, s).unwrap()).unwrap();
        let n = alg.rank();
        for j in 0..n {
            for k in 0..n {
                let eta = alg.eta(alg.basis_element(j), alg.basis_element(k));
                if k == alg.involution()[j] {
                    let inv = eta.invert_monomial().expect("unit monomial on the involution pairing");
                    assert!((&inv * &eta).is_one());
                    // Norms are products of weights: never -1.
                    assert!(eta.terms().all(|(_, c)| c == &BigInt::from(1)), "(r,s)=({r},{s}) η = {eta}");
                    assert_eq!(eta.homogeneous_degree(), Some(j as i64), "(r,s)=({r},{s}) k={k}");
                } else {
                    assert!(eta.is_zero(), "(r,s)=({r},{s}) η([{j}],[{k}]) = {eta}");
                }
            }
        }
    }
}

#[test]
fn handle_powers_have_positive_dimension() {
    for (r, s) in POINTS {
        let alg = build_algebra(&validate(r, s).unwrap()).unwrap();
        for g in 0..=5 {
            let e = alg.epsilon(&alg.power(alg.omega(), g));
            let dim = e.specialize_integer(1, 1).unwrap().unwrap();
            assert!(dim > BigInt::from(0), "(r,s)=({r},{s}) g={g}");
        }
        assert_eq!(alg.epsilon(alg.omega()), LaurentPoly::constant(r - 1));
    }
}

#[test]
fn power_agrees_with_repeated_multiplication() {
    let alg = build_algebra(&validate(7, 3).unwrap()).unwrap();
    let x = alg.basis_element(3);
    let mut acc: RingElement = alg.unit();
    for g in 0..7 {
        assert_eq!(alg.power(x, g), acc);
        acc = alg.mul(&acc, x);
    }
}
