mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::Rng;
use skolem_core::skolem::{
    classify, dominant_root_bound, evaluate, lrs_from_loop, minimal_poly, sml_decompose, zero_search, BoundVerdict,
    LinearLoop, LrsSpec,
};
use skolem_core::Error;

fn spec_strategy(max_order: usize, h: i64) -> impl Strategy<Value = LrsSpec> {
    (1..=max_order).prop_flat_map(move |d| {
        (prop::collection::vec(-h..=h, d), prop::collection::vec(-h..=h, d)).prop_filter_map(
            "trailing coefficient must be nonzero",
            |(rec, inits)| LrsSpec::from_i64s(&rec, &inits).ok(),
        )
    })
}

fn unit_spec_strategy(max_order: usize, h: i64) -> impl Strategy<Value = LrsSpec> {
    (1..=max_order).prop_flat_map(move |d| {
        (prop::collection::vec(-h..=h, d - 1), prop::bool::ANY, prop::collection::vec(-h..=h, d)).prop_map(
            |(mut rec, neg, inits)| {
                rec.push(if neg { -1 } else { 1 });
                LrsSpec::from_i64s(&rec, &inits).unwrap()
            },
        )
    })
}

/// Monic palindromic relations of even order, as recurrence coefficients.
fn palindromic_spec_strategy() -> impl Strategy<Value = LrsSpec> {
    (1..=2usize).prop_flat_map(|half| {
        (prop::collection::vec(-3i64..=3, half), prop::collection::vec(-3i64..=3, 2 * half)).prop_map(
            move |(mid, inits)| {
                // char poly x^d - a_{d-1} x^{d-1} - ... - a_0 with high-to-low coefficients palindromic
                let mut c = vec![1i64];
                c.extend(mid.iter().copied());
                let mut full = c.clone();
                full.extend(c.iter().rev().skip(1));
                let rec: Vec<i64> = full[1..].iter().map(|x| -x).collect();
                LrsSpec::from_i64s(&rec, &inits).unwrap()
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn backward_then_forward_reproduces_inits(s in unit_spec_strategy(4, 4)) {
        let d = s.order() as i64;
        let back: Vec<BigInt> = (-d..0).map(|n| evaluate(&s, n).unwrap()).collect();
        let t = LrsSpec::new(s.rec_coeffs().to_vec(), back).unwrap();
        let again = t.forward_terms(2 * s.order());
        prop_assert_eq!(&again[s.order()..], s.inits());
    }

    #[test]
    fn palindromic_relations_are_time_symmetric(s in palindromic_spec_strategy()) {
        let d = s.order() as i64;
        let reversed: Vec<BigInt> = (0..d).map(|k| evaluate(&s, -k).unwrap()).collect();
        let t = LrsSpec::new(s.rec_coeffs().to_vec(), reversed).unwrap();
        let fwd = t.forward_terms(51);
        for (n, x) in fwd.iter().enumerate() {
            prop_assert_eq!(x, &evaluate(&s, -(n as i64)).unwrap());
        }
    }

    #[test]
    fn minimal_polynomial_divides_the_relation(s in spec_strategy(5, 4)) {
        let m = minimal_poly(&s).unwrap();
        prop_assert!(m.is_monic());
        prop_assert!(s.char_poly().div_exact(&m).is_some(), "{} does not divide {}", m, s.char_poly());
    }

    #[test]
    fn decided_zero_sets_match_search(s in spec_strategy(4, 3)) {
        match dominant_root_bound(&s) {
            Ok(BoundVerdict::Decided { zeros, threshold }) => {
                let found = zero_search(&s, threshold.max(40)).unwrap();
                prop_assert_eq!(zeros.nonnegative, found.nonnegative);
            }
            Ok(BoundVerdict::Inconclusive) | Err(Error::PreconditionDominance(_)) => {}
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn classification_never_violates_the_order_seven_bound(s in unit_spec_strategy(7, 2)) {
        let r = classify(&s).unwrap();
        if r.reversible && !r.degenerate && r.order <= 7 {
            prop_assert!(r.dominant_count <= 3);
        }
    }
}

#[test]
fn loop_sequences_match_matrix_powers() {
    let mut g = common::rng(47);
    let mut checked = 0;
    while checked < 40 {
        let a: Vec<Vec<BigInt>> = (0..3).map(|_| (0..3).map(|_| BigInt::from(g.gen_range(-3..=3))).collect()).collect();
        let b: Vec<BigInt> = (0..3).map(|_| BigInt::from(g.gen_range(-3..=3))).collect();
        let w: Vec<BigInt> = (0..3).map(|_| BigInt::from(g.gen_range(-3..=3))).collect();
        let l = LinearLoop::new(a.clone(), b.clone(), w.clone()).unwrap();
        let Ok(spec) = lrs_from_loop(&l) else { continue };
        checked += 1;
        let mut v = w.clone();
        for n in 0..=30 {
            let obs: BigInt = b.iter().zip(&v).map(|(x, y)| x * y).sum();
            assert_eq!(evaluate(&spec, n).unwrap(), obs, "n = {n}");
            v = a.iter().map(|row| row.iter().zip(&v).map(|(x, y)| x * y).sum()).collect();
        }
    }
}

#[test]
fn loop_examples() {
    let big = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
    let l = LinearLoop::new(vec![big(&[1, 1]), big(&[1, 0])], big(&[1, 0]), big(&[0, 1])).unwrap();
    assert_eq!(lrs_from_loop(&l).unwrap(), LrsSpec::from_i64s(&[1, 1], &[0, 1]).unwrap());
    let l = LinearLoop::new(vec![big(&[1, 0]), big(&[0, 1])], big(&[1, 0]), big(&[0, 1])).unwrap();
    let s = lrs_from_loop(&l).unwrap();
    assert!(s.is_zero_sequence());
    assert_eq!(zero_search(&s, 3).unwrap().nonnegative, [0, 1, 2, 3]);
    let l = LinearLoop::new(vec![big(&[0, -1]), big(&[1, 0])], big(&[1, 0]), big(&[1, 0])).unwrap();
    assert_eq!(lrs_from_loop(&l).unwrap(), LrsSpec::from_i64s(&[0, -1], &[1, 0]).unwrap());
}

#[test]
fn sml_examples() {
    let d = sml_decompose(&LrsSpec::from_i64s(&[0, 1], &[2, 0]).unwrap()).unwrap();
    assert_eq!((d.modulus, d.vanishing_residues.as_slice()), (2, &[1][..]));
    let d = sml_decompose(&LrsSpec::from_i64s(&[0, 4], &[2, 0]).unwrap()).unwrap();
    assert_eq!((d.modulus, d.vanishing_residues.as_slice()), (2, &[1][..]));
    let (r, y) = &d.residual[0];
    assert_eq!(*r, 0);
    assert_eq!(y.forward_terms(4), [2, 8, 32, 128].map(BigInt::from));
    assert_eq!(sml_decompose(&LrsSpec::from_i64s(&[1, 1], &[0, 1]).unwrap()).unwrap_err(), Error::NotDegenerate);
}
