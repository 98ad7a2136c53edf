mod common;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::Rng;
use skolem_core::poly::{cyclotomic, is_irreducible, is_squarefree};
use skolem_core::spectral::{
    degeneracy_test, hypothesis_check, ratio_polynomial, search_box, square_mean_relation, two_circle_analysis,
    RadiusRelation, SearchPredicate,
};
use skolem_core::{Error, IntPolynomial};

use common::{Fx, BITS};

fn p(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_high(c)
}

const P1: [i64; 9] = [1, 1, -1, 1, 5, 1, -1, 1, 1];

#[test]
fn ratio_polynomial_examples() {
    assert_eq!(ratio_polynomial(&p(&[1, 0, 1])).unwrap(), p(&[1, 2, 1]));
    assert_eq!(ratio_polynomial(&p(&[1, 0, -2])).unwrap(), p(&[1, 2, 1]));
    assert_eq!(ratio_polynomial(&p(&[1, -5])).unwrap(), IntPolynomial::one());
    assert_eq!(ratio_polynomial(&p(&[1, -2, 1])).unwrap_err(), Error::NotSquarefree);
}

/// Numerically expands `lc * prod (x - l_i / l_j)` and checks it against `r`.
fn matches_ratio_product(f: &IntPolynomial, r: &IntPolynomial) -> bool {
    let z = common::roots(f);
    let mut prod = vec![Fx::int(&BigInt::one())];
    for i in 0..z.len() {
        for j in 0..z.len() {
            if i == j {
                continue;
            }
            let q = z[i].div(&z[j]);
            // multiply by (x - q); coefficients low to high
            let mut next = vec![Fx::zero(); prod.len() + 1];
            for (k, c) in prod.iter().enumerate() {
                next[k + 1] = next[k + 1].add(c);
                next[k] = next[k].sub(&c.mul(&q));
            }
            prod = next;
        }
    }
    if prod.len() != r.degree() + 1 {
        return false;
    }
    let lc = Fx::int(&r.leading());
    let tol = BigInt::from(1) << (BITS - 200);
    prod.iter().zip(r.coeffs()).all(|(c, want)| {
        let got = c.mul(&lc);
        let diff = got.sub(&Fx::int(want));
        diff.re.abs() < tol && diff.im.abs() < tol
    })
}

#[test]
fn ratio_roots_match_numeric_ratios() {
    let mut g = common::rng(31);
    let mut n = 0;
    while n < 60 {
        let d = g.gen_range(1..=5);
        let f = common::random_monic(&mut g, d, 4);
        if !is_squarefree(&f) {
            continue;
        }
        n += 1;
        let r = ratio_polynomial(&f).unwrap();
        assert_eq!(r.degree(), d * d - d);
        assert!(matches_ratio_product(&f, &r), "{f}: {r}");
    }
    let f = &p(&[1, 0, 1]) * &p(&[1, -3, 1]);
    assert!(matches_ratio_product(&f, &ratio_polynomial(&f).unwrap()));
}

#[test]
fn degeneracy_examples() {
    let w = degeneracy_test(&p(&[1, 0, 1])).unwrap();
    assert_eq!(w.len(), 1);
    assert_eq!(w[0].order, 2);
    assert!(degeneracy_test(&p(&[1, -1, -1])).unwrap().is_empty());
    assert!(degeneracy_test(&p(&P1)).unwrap().is_empty());
    assert_eq!(degeneracy_test(&p(&[2, 0, 1])).unwrap_err(), Error::NotMonic);
    assert_eq!(degeneracy_test(&p(&[1, 1, 0])).unwrap_err(), Error::ZeroConstantTerm);
}

#[test]
fn degeneracy_agrees_with_cyclotomic_gcds() {
    let mut g = common::rng(37);
    let mut degenerate = 0;
    for k in 0..120 {
        let f = if k % 3 == 0 {
            let h = common::random_monic(&mut g, 2, 3);
            h.compose(&IntPolynomial::from_i64s(&[0, 0, 1]))
        } else {
            let d = g.gen_range(2..=4);
            common::random_monic(&mut g, d, 4)
        };
        if !is_squarefree(&f) {
            continue;
        }
        let d = f.degree() as u64;
        let r = ratio_polynomial(&f).unwrap();
        let bound = 2 * (d * d - d) * (d * d - d);
        let mut orders: Vec<u64> = (1..=bound).filter(|&n| !r.gcd(&cyclotomic(n)).is_constant()).collect();
        orders.sort_unstable();
        let w = degeneracy_test(&f).unwrap();
        assert_eq!(w.is_empty(), orders.is_empty(), "{f}");
        let mut got: Vec<u64> = w.iter().map(|w| w.order).collect();
        got.sort_unstable();
        got.dedup();
        assert_eq!(got, orders, "{f}");
        degenerate += !orders.is_empty() as usize;
    }
    assert!(degenerate >= 20);
}

#[test]
fn hypothesis_examples() {
    let h = hypothesis_check(&p(&P1)).unwrap();
    assert!(h.h1 && h.h2);
    let h = hypothesis_check(&p(&[1, 1, 1, 1, 1])).unwrap();
    assert!(h.h1 && !h.h2);
    let h = hypothesis_check(&p(&[1, -1, -1])).unwrap();
    assert!(!h.h1 && h.h2);
}

#[test]
fn two_circle_examples() {
    let t = two_circle_analysis(&p(&[1, 0, -1, -1])).unwrap();
    assert_eq!((t.circle_count, t.class_sizes.as_slice()), (2, &[1, 2][..]));
    assert_eq!(t.radius_relation, RadiusRelation::OuterIsInnerPowMinusHalf);
    let t = two_circle_analysis(&p(&P1)).unwrap();
    assert_eq!(t.radius_relation, RadiusRelation::OuterTimesInnerIsOne);
    let t = two_circle_analysis(&p(&[1, 1, 1, 1, 1])).unwrap();
    assert_eq!(t.circle_count, 1);
    assert!(!t.consistent_shape);
    assert_eq!(two_circle_analysis(&p(&[1, 0, -1])).unwrap_err(), Error::NotIrreducible);
    assert_eq!(two_circle_analysis(&p(&[1, 0, -2])).unwrap_err(), Error::NotUnitConstant);
}

#[test]
fn palindromes_off_the_circle_pair_up_radii() {
    let mut g = common::rng(41);
    let mut seen = 0;
    for _ in 0..200 {
        let half = g.gen_range(1..=3usize);
        let mut c = vec![1i64];
        c.extend((0..half).map(|_| g.gen_range(-5..=5)));
        let mut full = c.clone();
        full.extend(c.iter().rev().skip(1));
        let f = p(&full);
        if !is_irreducible(&f).unwrap() {
            continue;
        }
        let t = two_circle_analysis(&f).unwrap();
        if t.circle_count == 2 {
            seen += 1;
            assert_eq!(t.radius_relation, RadiusRelation::OuterTimesInnerIsOne, "{f}");
        }
    }
    assert!(seen >= 10);
}

#[test]
fn square_mean_examples() {
    assert!(square_mean_relation(&p(&[1, -7, 14, -8])).unwrap());
    assert!(!square_mean_relation(&p(&[1, 0, -1, -1])).unwrap());
    assert!(!square_mean_relation(&p(&P1)).unwrap());
    assert!(matches!(square_mean_relation(&p(&[1, 0, -2])), Err(Error::DegreeTooSmall { required: 3, .. })));
    assert_eq!(square_mean_relation(&p(&[1, -3, 3, -1])).unwrap_err(), Error::NotSquarefree);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn square_mean_is_invariant_under_negation(a in -6i64..=6, b in -6i64..=6, c in -6i64..=6) {
        let f = IntPolynomial::from_i64s(&[c, b, a, 1]);
        prop_assume!(!f.constant_term().is_zero() && is_squarefree(&f));
        // -f(-x) is monic again for cubics
        let g = -f.negate_variable();
        prop_assert!(g.is_monic());
        prop_assert_eq!(square_mean_relation(&f).unwrap(), square_mean_relation(&g).unwrap());
    }
}

#[test]
fn search_examples() {
    assert!(search_box(5, 2, &[-1, 1], false, SearchPredicate::H1AndH2).unwrap().is_empty());
    assert!(search_box(2, 1, &[-1, 1], false, SearchPredicate::H1AndH2).unwrap().is_empty());
    let hits = search_box(8, 5, &[1], true, SearchPredicate::H1AndH2).unwrap();
    assert!(hits.contains(&p(&P1)));
    for h in &hits {
        assert!(h.is_palindromic());
        let r = hypothesis_check(h).unwrap();
        assert!(r.h1 && r.h2, "{h}");
    }
    let mut sorted = hits.clone();
    sorted.sort_by(|a, b| a.coeffs().iter().rev().cmp(b.coeffs().iter().rev()));
    assert_eq!(sorted, hits);
}
