//! Acceptance gate: one pass/fail line per criterion, time limits pinned below.

mod common;

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Signed;
use rand::Rng;

use common::{nearest, random_monic, rng, Fx, BITS};
use skolem_core::galois::{
    frobenius_sample, octic_palindrome_galois, octic_palindrome_galois_relaxed, OcticGroup,
    QuarticGroupTag,
};
use skolem_core::poly::{is_squarefree, power_map};
use skolem_core::roots::{isolate_roots, modulus_compare};
use skolem_core::skolem::{
    dominant_root_bound, evaluate, family_generate, sml_decompose, zero_search, BoundVerdict,
    LrsSpec,
};
use skolem_core::spectral::{
    degeneracy_test, hypothesis_check, search_box, two_circle_analysis, RadiusRelation,
    SearchPredicate,
};
use skolem_core::{Error, IntPolynomial};

const P1: [i64; 9] = [1, 1, -1, 1, 5, 1, -1, 1, 1];
const P2: [i64; 9] = [1, 1, -3, 1, 9, 1, -3, 1, 1];
const P3: [i64; 9] = [1, 0, 1, 6, 9, 6, 1, 0, 1];

/// Numeric tolerance of the oracle comparisons: `2^-TOL_BITS`.
const TOL_BITS: u32 = 300;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn ok<T>(r: skolem_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn c1_galois() -> Check {
    let g1 = ok(octic_palindrome_galois(&IntPolynomial::from_high(&P1)))?;
    ensure(
        g1.full_group == OcticGroup::S4xC2,
        format!("P1 gave {}", g1.full_group),
    )?;
    let g2 = ok(octic_palindrome_galois(&IntPolynomial::from_high(&P2)))?;
    ensure(
        g2.full_group == OcticGroup::A4xC2,
        format!("P2 gave {}", g2.full_group),
    )?;
    let p3 = IntPolynomial::from_high(&P3);
    let relaxed = ok(octic_palindrome_galois_relaxed(&p3))?;
    ensure(
        relaxed.quartic_group == QuarticGroupTag::S4,
        format!("P3 quartic gave {}", relaxed.quartic_group),
    )?;
    ensure(relaxed.full_group.is_none(), "relaxed mode lifted P3")?;
    match octic_palindrome_galois(&p3) {
        Err(Error::PreconditionH1H2 { h1: false, .. }) => {}
        other => return Err(format!("strict mode on P3: {other:?}")),
    }
    Ok("S4xC2, A4xC2; P3 quartic S4, strict rejects on H1".into())
}

fn c2_hypotheses() -> Check {
    for c in [P1, P2] {
        let f = IntPolynomial::from_high(&c);
        let h = ok(hypothesis_check(&f))?;
        ensure(h.h1 && h.h2, format!("{f}: h1={} h2={}", h.h1, h.h2))?;
        let t = ok(two_circle_analysis(&f))?;
        ensure(
            t.circle_count == 2,
            format!("{f}: {} circles", t.circle_count),
        )?;
        ensure(
            t.class_sizes == [4, 4],
            format!("{f}: sizes {:?}", t.class_sizes),
        )?;
        ensure(
            t.radius_relation == RadiusRelation::OuterTimesInnerIsOne,
            format!("{f}: {:?}", t.radius_relation),
        )?;
    }
    Ok("(true, true), 2 circles 4+4, R r = 1 for both".into())
}

fn c3_desk_search() -> Check {
    let mut sizes = Vec::new();
    for degree in [5, 6, 7] {
        let hits = ok(search_box(
            degree,
            2,
            &[-1, 1],
            false,
            SearchPredicate::H1AndH2,
        ))?;
        ensure(
            hits.is_empty(),
            format!("degree {degree}: {} hits, first {:?}", hits.len(), hits.first().map(|h| h.to_string())),
        )?;
        sizes.push(2 * 5usize.pow(degree as u32 - 1));
    }
    Ok(format!(
        "degrees 5, 6, 7 at height 2 empty ({sizes:?} polynomials)"
    ))
}

fn c4_family() -> Check {
    let seed = IntPolynomial::from_high(&P1);
    let fam = ok(family_generate(&seed, 5))?;
    ensure(
        fam.members.len() == 5,
        format!("{} members", fam.members.len()),
    )?;
    let distinct: BTreeSet<Vec<BigInt>> = fam
        .members
        .iter()
        .map(|m| m.poly.coeffs().to_vec())
        .collect();
    ensure(distinct.len() == 5, "members repeat")?;
    for m in &fam.members {
        let f = &m.poly;
        ensure(
            f.degree() == 8 && f.is_monic() && f.is_palindromic(),
            format!("member {f} is not a monic palindromic octic"),
        )?;
        let h = ok(hypothesis_check(f))?;
        ensure(h.h1 && h.h2, format!("member {f}: h1={} h2={}", h.h1, h.h2))?;
    }
    Ok("5 distinct palindromic octics, all (true, true)".into())
}

fn c5_order10() -> Check {
    let hits = ok(search_box(
        10,
        1,
        &[-1, 1],
        false,
        SearchPredicate::Order10PositivityPattern,
    ))?;
    ensure(
        hits.is_empty(),
        format!("{} hits, first {:?}", hits.len(), hits.first().map(|h| h.to_string())),
    )?;
    Ok(format!(
        "degree 10 height 1 empty ({} polynomials)",
        2 * 3usize.pow(9)
    ))
}

fn c6_fibonacci() -> Check {
    let fib = ok(LrsSpec::from_i64s(&[1, 1], &[0, 1]))?;
    let want = [5, -3, 2, -1, 1, 0, 1, 1, 2, 3, 5];
    for (k, n) in (-5..=5).enumerate() {
        let x = ok(evaluate(&fib, n))?;
        ensure(
            x == BigInt::from(want[k]),
            format!("X_{n} = {x}, want {}", want[k]),
        )?;
    }
    match ok(dominant_root_bound(&fib))? {
        BoundVerdict::Decided { zeros, threshold } => {
            ensure(
                zeros.nonnegative == [0],
                format!("zeros {:?}", zeros.nonnegative),
            )?;
            Ok(format!(
                "window matches, Decided({{0}}) with threshold {threshold}"
            ))
        }
        BoundVerdict::Inconclusive => Err("dominant_root_bound inconclusive".into()),
    }
}

fn c7_no_hard_instances() -> Check {
    // exhaustive: coefficients a_1 .. a_{d-1} in [-2, 2], constant +-1
    let mut checked = 0usize;
    for degree in 1..=7usize {
        let free = degree - 1;
        let total = 5usize.pow(free as u32);
        for idx in 0..total {
            for c0 in [-1i64, 1] {
                let mut coeffs = vec![c0];
                let mut r = idx;
                for _ in 0..free {
                    coeffs.push((r % 5) as i64 - 2);
                    r /= 5;
                }
                coeffs.push(1);
                let f = IntPolynomial::from_i64s(&coeffs);
                let h = ok(hypothesis_check(&f))?;
                ensure(!(h.h1 && h.h2), format!("{f} satisfies H1 and H2"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} polynomials, zero violations"))
}

/// Orders of the roots of unity among ratios of distinct roots, numerically.
fn oracle_ratio_orders(f: &IntPolynomial) -> Vec<u64> {
    let z = common::roots(f);
    let d = z.len() as u64;
    let kmax = 2 * (d * d - d) * (d * d - d);
    let tol = BigInt::from(1) << (BITS - TOL_BITS);
    let unit = Fx::int(&BigInt::from(1));
    let mut orders = Vec::new();
    for i in 0..z.len() {
        for j in (i + 1)..z.len() {
            let r = z[i].div(&z[j]);
            if (r.norm_sq() - &unit.re).abs() > tol {
                continue;
            }
            let mut p = r.clone();
            for k in 1..=kmax {
                let e = p.sub(&unit);
                if e.re.abs() < tol && e.im.abs() < tol {
                    orders.push(k);
                    break;
                }
                p = p.mul(&r);
            }
        }
    }
    orders.sort_unstable();
    orders
}

fn c8a_degeneracy_oracle() -> Check {
    let mut g = rng(0x8a);
    let mut degenerate = 0;
    let mut n = 0;
    while n < 500 {
        let f = match n % 4 {
            // h(x^2) and h(x) (x^2 + c) shapes make root-of-unity ratios common
            0 => {
                let h = {
                    let d = g.gen_range(1..=2);
                    random_monic(&mut g, d, 4)
                };
                h.compose(&IntPolynomial::from_i64s(&[0, 0, 1]))
            }
            1 => {
                let h = {
                    let d = g.gen_range(1..=2);
                    random_monic(&mut g, d, 4)
                };
                let k = IntPolynomial::from_i64s(&[g.gen_range(-3..=3), 0, 1]);
                &h * &k
            }
            _ => {
                let d = g.gen_range(2..=4);
                random_monic(&mut g, d, 5)
            }
        };
        if f.degree() > 4 || f.degree() < 2 || !is_squarefree(&f) {
            continue;
        }
        n += 1;
        let mut got: Vec<u64> = ok(degeneracy_test(&f))?.iter().map(|w| w.order).collect();
        got.sort_unstable();
        let want = oracle_ratio_orders(&f);
        ensure(
            got == want,
            format!("{f}: library orders {got:?}, oracle {want:?}"),
        )?;
        if !want.is_empty() {
            degenerate += 1;
        }
    }
    Ok(format!(
        "500 polynomials ({degenerate} degenerate), zero discrepancies"
    ))
}

fn c8b_modulus_oracle() -> Check {
    let mut g = rng(0x8b);
    let tol = BigInt::from(1) << (BITS - TOL_BITS);
    let mut n = 0;
    let mut equal = 0;
    while n < 1000 {
        let f = if n % 5 == 0 {
            // palindromes and even polynomials produce equal moduli off the real axis
            let h = {
                let d = g.gen_range(1..=3);
                random_monic(&mut g, d, 3)
            };
            h.compose(&IntPolynomial::from_i64s(&[0, 0, 1]))
        } else {
            {
                let d = g.gen_range(2..=6);
                random_monic(&mut g, d, 6)
            }
        };
        if f.degree() > 6 || !is_squarefree(&f) {
            continue;
        }
        n += 1;
        let rs = ok(isolate_roots(&f))?;
        let z = common::roots(&f);
        let approx = rs.approximations();
        let i = g.gen_range(0..rs.degree());
        let j = g.gen_range(0..rs.degree());
        let (a, b) = (nearest(&z, approx[i]), nearest(&z, approx[j]));
        let diff = z[a].norm_sq() - z[b].norm_sq();
        let want = if diff.abs() < tol {
            Ordering::Equal
        } else if diff.is_negative() {
            Ordering::Less
        } else {
            Ordering::Greater
        };
        let got = ok(modulus_compare(&rs, i, j))?;
        ensure(
            got == want,
            format!("{f} roots {i},{j}: library {got:?}, oracle {want:?}"),
        )?;
        if want == Ordering::Equal && i != j {
            equal += 1;
        }
    }
    Ok(format!(
        "1000 comparisons ({equal} equal, distinct indices), zero discrepancies"
    ))
}

fn c8c_sml_corpus() -> Check {
    const N: u64 = 500;
    let specs = common::corpus_specs("degenerate_");
    ensure(!specs.is_empty(), "no degenerate corpus specs")?;
    for (name, spec) in &specs {
        let dec = ok(sml_decompose(spec))?;
        let m = dec.modulus;
        let mut zeros: BTreeSet<u64> = BTreeSet::new();
        for &r in &dec.vanishing_residues {
            zeros.extend((r..=N).step_by(m as usize));
        }
        for (r, y) in &dec.residual {
            let reach = (N.saturating_sub(*r)) / m;
            // residuals without a simple dominant root are searched to the same horizon
            let ks = match dominant_root_bound(y) {
                Ok(BoundVerdict::Decided { zeros, .. }) => zeros.nonnegative,
                Ok(BoundVerdict::Inconclusive) | Err(Error::PreconditionDominance(_)) => {
                    ok(zero_search(y, reach))?.nonnegative
                }
                Err(e) => return Err(format!("{name}: residual {r}: {e}")),
            };
            zeros.extend(ks.iter().map(|k| k * m + r).filter(|&n| n <= N));
        }
        let want: BTreeSet<u64> = ok(zero_search(spec, N))?.nonnegative.into_iter().collect();
        ensure(
            zeros == want,
            format!("{name}: decomposition {zeros:?}, search {want:?}"),
        )?;
    }
    Ok(format!(
        "{} degenerate corpus specs agree with zero_search(500)",
        specs.len()
    ))
}

fn c9_power_map_law() -> Check {
    let mut g = rng(9);
    for _ in 0..200 {
        let f = random_monic(&mut g, 4, 6);
        for m in 1..=4u32 {
            for n in 1..=4u32 {
                let lhs = ok(power_map(&ok(power_map(&f, m))?, n))?;
                let rhs = ok(power_map(&f, m * n))?;
                ensure(lhs == rhs, format!("{f}: m={m} n={n}"))?;
            }
        }
    }
    Ok("200 quartics x 16 (m, n) pairs exact".into())
}

/// Cycle types of `S4 x C2` (or `A4 x C2`) acting on `{a_i, 1/a_i}`.
fn cycle_types(alternating: bool) -> BTreeSet<Vec<usize>> {
    fn perms(k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for p in perms(k - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, k - 1);
                out.push(q);
            }
        }
        out
    }
    fn even(p: &[usize]) -> bool {
        let inversions = (0..p.len())
            .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| p[i] > p[j])
            .count();
        inversions % 2 == 0
    }
    let mut types = BTreeSet::new();
    for s in perms(4).into_iter().filter(|p| !alternating || even(p)) {
        for flip in [false, true] {
            // point 2i is a_i, 2i+1 is its inverse
            let act = |x: usize| 2 * s[x / 2] + ((x % 2) ^ flip as usize);
            let mut seen = [false; 8];
            let mut t = Vec::new();
            for start in 0..8 {
                if seen[start] {
                    continue;
                }
                let mut len = 0;
                let mut x = start;
                while !seen[x] {
                    seen[x] = true;
                    x = act(x);
                    len += 1;
                }
                t.push(len);
            }
            t.sort_unstable();
            types.insert(t);
        }
    }
    types
}

fn c10_frobenius() -> Check {
    for (c, group) in [(P1, OcticGroup::S4xC2), (P2, OcticGroup::A4xC2)] {
        let f = IntPolynomial::from_high(&c);
        let report = ok(octic_palindrome_galois(&f))?;
        ensure(
            report.full_group == group,
            format!("{f}: group {}", report.full_group),
        )?;
        let types = cycle_types(group == OcticGroup::A4xC2);
        let primes: Vec<u64> = report.frobenius_samples.iter().map(|s| s.prime).collect();
        ensure(primes.len() == 50, format!("{} samples", primes.len()))?;
        // resample independently of the report
        for s in frobenius_sample(&f, &primes) {
            let d = s.degrees.ok_or(format!("p = {} rejected", s.prime))?;
            ensure(
                types.contains(&d),
                format!(
                    "{f} mod {}: degrees {d:?} not a cycle type of {group}",
                    s.prime
                ),
            )?;
            if group == OcticGroup::A4xC2 {
                ensure(!d.contains(&8), format!("degree-8 factor mod {}", s.prime))?;
            }
        }
    }
    Ok("50 samples embed for both; no degree-8 factor for A4xC2".into())
}

fn main() {
    let criteria: [(&str, Duration, fn() -> Check); 12] = [
        ("1 reference Galois values", Duration::from_secs(10), c1_galois),
        (
            "2 reference hypothesis values",
            Duration::from_secs(10),
            c2_hypotheses,
        ),
        (
            "3 desk-scale search (degrees 5-7)",
            Duration::from_secs(15 * 60),
            c3_desk_search,
        ),
        ("4 power-map family", Duration::from_secs(60), c4_family),
        (
            "5 order-10 positivity pattern",
            Duration::from_secs(15 * 60),
            c5_order10,
        ),
        (
            "6 Fibonacci ground truth",
            Duration::from_secs(5),
            c6_fibonacci,
        ),
        (
            "7 no hard instance of order <= 7",
            Duration::from_secs(15 * 60),
            c7_no_hard_instances,
        ),
        (
            "8a degeneracy vs numeric oracle",
            Duration::from_secs(15 * 60),
            c8a_degeneracy_oracle,
        ),
        (
            "8b modulus order vs numeric oracle",
            Duration::from_secs(15 * 60),
            c8b_modulus_oracle,
        ),
        (
            "8c SML decomposition vs search",
            Duration::from_secs(5 * 60),
            c8c_sml_corpus,
        ),
        (
            "9 power-map composition law",
            Duration::from_secs(5 * 60),
            c9_power_map_law,
        ),
        (
            "10 Frobenius cycle types",
            Duration::from_secs(60),
            c10_frobenius,
        ),
    ];
    let mut failed = 0;
    for (name, limit, check) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let (status, detail) = match result {
            Ok(d) if elapsed <= limit => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; took {elapsed:.1?}, limit {limit:?}")),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("[{status}] criterion {name} ({elapsed:.2?}): {detail}");
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
