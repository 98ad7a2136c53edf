mod common;

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use rand::Rng;
use skolem_core::poly::{cyclotomic, cyclotomic_product_test, is_irreducible, is_squarefree};
use skolem_core::roots::{
    isolate_roots, modulus_compare, modulus_partition, refine_root, separation_bound, DComplex, Dyadic,
};
use skolem_core::{Error, IntPolynomial};

fn p(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_high(c)
}

fn corpus_polys() -> Vec<IntPolynomial> {
    vec![
        p(&[1, 1, -1, 1, 5, 1, -1, 1, 1]),
        p(&[1, 1, -3, 1, 9, 1, -3, 1, 1]),
        p(&[1, 0, 1, 6, 9, 6, 1, 0, 1]),
        p(&[1, -1, -1]),
        p(&[1, 1, 1, 1, 1]),
        p(&[1, 0, -1, -1]),
        p(&[1, 0, 0, 0, -2]),
        p(&[1, -2, 5]),
        &cyclotomic(12) * &p(&[1, -3, 1]),
    ]
}

#[test]
fn isolation_examples() {
    let rs = isolate_roots(&p(&[1, -3])).unwrap();
    assert!(rs.root_box(0).contains(&DComplex::real(Dyadic::from_i64(3))));
    let rs = isolate_roots(&p(&[1, 0, -2])).unwrap();
    assert_eq!(rs.degree(), 2);
    assert!(!rs.root_box(0).overlaps(rs.root_box(1)));
    let oracle = common::roots(&p(&[1, 0, -2]));
    for (i, b) in rs.boxes().iter().enumerate() {
        let z = oracle[common::nearest(&oracle, rs.approximations()[i])].to_c64();
        assert!(b.re_lo().to_f64() <= z.re && z.re <= b.re_hi().to_f64());
    }
    assert_eq!(isolate_roots(&p(&[1, -2, 1])).unwrap_err(), Error::NotSquarefree);
    assert_eq!(isolate_roots(&IntPolynomial::zero()).unwrap_err(), Error::ZeroPolynomial);
}

#[test]
fn refinement_examples() {
    let rs = isolate_roots(&p(&[1, 0, -2])).unwrap();
    let i = (0..2).find(|&i| rs.approximations()[i].re > 0.0).unwrap();
    let eps = Dyadic::pow2(-20);
    let b = refine_root(&rs, i, &eps).unwrap();
    assert!(b.width() <= eps && b.height() <= eps);
    assert!(b.is_subset_of(rs.root_box(i)));
    let s = 2f64.sqrt();
    assert!(b.re_lo().to_f64() <= s && s <= b.re_hi().to_f64());
    let rs = isolate_roots(&p(&[1, -3])).unwrap();
    let b = refine_root(&rs, 0, &Dyadic::pow2(-5)).unwrap();
    assert_eq!(b.width(), Dyadic::zero());
    assert_eq!(b.re_lo().to_f64(), 3.0);
    assert!(matches!(refine_root(&rs, 1, &eps), Err(Error::IndexOutOfRange { .. })));
}

#[test]
fn separation_bounds_are_below_true_gaps() {
    let s = separation_bound(&p(&[1, 0, -2])).unwrap();
    assert!(s.to_f64().unwrap() > 0.0 && s.to_f64().unwrap() <= 2.0 * 2f64.sqrt());
    let s = separation_bound(&p(&[1, -1, 0])).unwrap();
    assert!(s > BigRational::from_integer(BigInt::from(0)) && s <= BigRational::from_integer(BigInt::from(1)));
    assert_eq!(separation_bound(&p(&[1, -2, 1])).unwrap_err(), Error::NotSquarefree);
    let mut g = common::rng(5);
    for _ in 0..30 {
        let d = g.gen_range(2..=5);
        let f = common::random_monic(&mut g, d, 5);
        if !is_squarefree(&f) {
            continue;
        }
        let z = common::roots(&f);
        let gap = (0..z.len())
            .flat_map(|i| (i + 1..z.len()).map(move |j| (i, j)))
            .map(|(i, j)| (z[i].to_c64() - z[j].to_c64()).norm())
            .fold(f64::INFINITY, f64::min);
        assert!(separation_bound(&f).unwrap().to_f64().unwrap() < gap, "{f}");
    }
}

#[test]
fn modulus_examples() {
    let rs = isolate_roots(&p(&[1, -1, -1])).unwrap();
    let phi = (0..2).find(|&i| rs.approximations()[i].re > 0.0).unwrap();
    assert_eq!(modulus_compare(&rs, phi, 1 - phi).unwrap(), Ordering::Greater);
    let rs = isolate_roots(&p(&[1, 0, 1])).unwrap();
    assert_eq!(modulus_compare(&rs, 0, 1).unwrap(), Ordering::Equal);
    let rs = isolate_roots(&p(&[1, 0, -2])).unwrap();
    assert_eq!(modulus_compare(&rs, 0, 1).unwrap(), Ordering::Equal);
    assert!(matches!(modulus_compare(&rs, 0, 2), Err(Error::IndexOutOfRange { .. })));

    let sizes = |c: &[i64]| modulus_partition(&isolate_roots(&p(c)).unwrap()).unwrap().sizes();
    assert_eq!(sizes(&[1, 1, -1, 1, 5, 1, -1, 1, 1]), [4, 4]);
    assert_eq!(sizes(&[1, -1, -1]), [1, 1]);
    assert_eq!(sizes(&[1, 1, 1, 1, 1]), [4]);
}

#[test]
fn boxes_cover_the_roots() {
    for f in corpus_polys() {
        let rs = isolate_roots(&f).unwrap();
        assert_eq!(rs.degree(), f.degree());
        for a in 0..rs.degree() {
            for b in a + 1..rs.degree() {
                assert!(!rs.root_box(a).overlaps(rs.root_box(b)), "{f}: boxes {a} and {b} overlap");
            }
        }
        let z: Vec<Complex64> = rs.boxes().iter().map(|b| {
            let (re, im) = b.center().to_f64();
            Complex64::new(re, im)
        }).collect();
        let c: Vec<f64> = f.coeffs().iter().map(|x| x.to_f64().unwrap()).collect();
        for t in [Complex64::new(0.3, 0.7), Complex64::new(-1.2, 0.1), Complex64::new(2.5, -1.0)] {
            let direct = c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * t + a);
            let product = z.iter().fold(Complex64::new(1.0, 0.0), |acc, r| acc * (t - r));
            assert!((direct - product).norm() <= 1e-9 * direct.norm().max(1.0), "{f} at {t}");
        }
    }
}

#[test]
fn modulus_compare_is_a_total_preorder() {
    for f in corpus_polys() {
        let rs = isolate_roots(&f).unwrap();
        let n = rs.degree();
        let mut cmp = vec![vec![Ordering::Equal; n]; n];
        for i in 0..n {
            for j in 0..n {
                cmp[i][j] = modulus_compare(&rs, i, j).unwrap();
            }
            assert_eq!(cmp[i][rs.conj(i)], Ordering::Equal);
            assert_eq!(rs.conj(rs.conj(i)), i);
        }
        for i in 0..n {
            for j in 0..n {
                assert_eq!(cmp[i][j], cmp[j][i].reverse(), "{f}: antisymmetry at {i},{j}");
                for k in 0..n {
                    if cmp[i][j] != Ordering::Greater && cmp[j][k] != Ordering::Greater {
                        assert_ne!(cmp[i][k], Ordering::Greater, "{f}: transitivity {i},{j},{k}");
                    }
                }
            }
        }
    }
}

#[test]
fn one_unit_class_means_cyclotomic() {
    let one = Dyadic::one();
    let mut candidates: Vec<IntPolynomial> = vec![
        &cyclotomic(5) * &cyclotomic(8),
        cyclotomic(9),
        p(&[1, 0, 0, 0, -2]),
        p(&[1, 0, 1]),
    ];
    let mut g = common::rng(17);
    for _ in 0..200 {
        let d = g.gen_range(1..=4);
        candidates.push(common::random_monic(&mut g, d, 1));
    }
    let mut hits = 0;
    for f in candidates {
        if !is_squarefree(&f) {
            continue;
        }
        let part = modulus_partition(&isolate_roots(&f).unwrap()).unwrap();
        if part.class_count() == 1 && part.classes[0].sq_modulus.contains(&one) {
            hits += 1;
            assert!(cyclotomic_product_test(&f).unwrap(), "{f}");
        }
    }
    assert!(hits >= 3);
}

#[test]
fn units_off_the_circle_have_a_conjugate_inside() {
    let one = Dyadic::one();
    let mut g = common::rng(23);
    let mut seen = 0;
    for _ in 0..300 {
        let d = g.gen_range(2..=6);
        let mut f = common::random_monic(&mut g, d, 3);
        if f.constant_term().abs() != BigInt::from(1) {
            let mut c = f.coeffs().to_vec();
            c[0] = BigInt::from(if g.gen_bool(0.5) { 1 } else { -1 });
            f = IntPolynomial::new(c);
        }
        if !is_irreducible(&f).unwrap() {
            continue;
        }
        let part = modulus_partition(&isolate_roots(&f).unwrap()).unwrap();
        let top = &part.classes[0].sq_modulus;
        if top.lo > one {
            seen += 1;
            let bottom = &part.classes[part.class_count() - 1].sq_modulus;
            assert!(bottom.hi < one, "{f}");
        }
    }
    assert!(seen > 50);
}
