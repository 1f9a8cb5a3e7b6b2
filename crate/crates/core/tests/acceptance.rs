//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the lines come out in order and
//! unbuffered; the process fails if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use vcg_core::closed_form::{finite_cohomology, vz_cohomology, Ring};
use vcg_core::group::{validate, CheckedSpec, GroupSpec, ThetaSpec};
use vcg_core::linalg::{cokernel_invariants, determinant, smith_normal_form, FinAb, IntMatrix};
use vcg_core::oracle::{
    bar_cohomology, stated_cup_oracle, Coefficients, Limits, Oracle, DEFAULT_BAR_CELLS,
};
use vcg_core::verify::{self, sample, CheckKind, VerifyConfig};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(t: Instant, limit: Duration) -> Result<Duration, String> {
    let e = t.elapsed();
    ensure(e < limit, || format!("took {e:.1?}, limit {limit:?}"))?;
    Ok(e)
}

fn spec(s: GroupSpec, theta: Option<ThetaSpec>) -> CheckedSpec {
    validate(s, theta).expect("valid spec")
}

fn oracle(s: &CheckedSpec, top: usize) -> Result<Oracle, String> {
    Oracle::new(s, top, Limits::default()).map_err(|e| e.to_string())
}

fn integral(o: &Oracle, n: usize) -> Result<FinAb, String> {
    o.integral(n).map(|h| h.group().clone()).map_err(|e| e.to_string())
}

fn quaternion_groups() -> Outcome {
    let t = Instant::now();
    let q8 = spec(GroupSpec::Quaternion { i: 3 }, None);
    let o = oracle(&q8, 7)?;
    let want = ["Z", "0", "Z_2 ⊕ Z_2", "0", "Z_8", "0", "Z_2 ⊕ Z_2"];
    for (n, w) in want.iter().enumerate() {
        let got = integral(&o, n)?;
        ensure(got.to_string() == *w, || format!("H^{n}(Q_8) = {got}, want {w}"))?;
        if let Ok(bar) = bar_cohomology(o.group(), &Coefficients::Integers, n, DEFAULT_BAR_CELLS) {
            ensure(bar.group() == &got, || format!("bar H^{n}(Q_8) = {}", bar.group()))?;
        }
    }
    let q16 = spec(GroupSpec::Quaternion { i: 4 }, None);
    let h4 = integral(&oracle(&q16, 5)?, 4)?;
    ensure(h4 == FinAb::cyclic(16), || format!("H^4(Q_16) = {h4}"))?;
    let e = within(t, Duration::from_secs(60))?;
    Ok(format!("Q_8: {}; H^4(Q_16) = {h4}; {e:.2?}", want.join(", ")))
}

fn metacyclic_groups() -> Outcome {
    let t = Instant::now();
    let s = spec(GroupSpec::Metacyclic { a: 7, b: 3, r: 2 }, None);
    let o = oracle(&s, 7)?;
    let want = ["Z", "0", "Z_3", "0", "Z_3", "0", "Z_21"];
    for (n, w) in want.iter().enumerate() {
        let formula = finite_cohomology(&s, n as u64).group;
        let got = integral(&o, n)?;
        ensure(formula == got && got.to_string() == *w, || {
            format!("n={n}: formula {formula}, oracle {got}, expected {w}")
        })?;
    }
    let e = within(t, Duration::from_secs(120))?;
    Ok(format!("Z_7 ⋊ Z_3: {}; {e:.2?}", want.join(", ")))
}

fn family_one_groups() -> Outcome {
    let s = spec(
        GroupSpec::Metacyclic { a: 7, b: 3, r: 2 },
        Some(ThetaSpec::metacyclic(0, 2, 1)),
    );
    let o = oracle(&s, 8)?;
    let mut row = Vec::new();
    for n in 0..=7 {
        let formula = vz_cohomology(&s, n as u64);
        let got = o.fz_cohomology(n).map_err(|e| e.to_string())?;
        ensure(formula.group == got, || format!("n={n}: formula {}, oracle {got}", formula.group))?;
        row.push(got.to_string());
    }
    for n in [6, 7] {
        let d = vz_cohomology(&s, n).decomposition();
        ensure(d.starts_with("Z_7 ⊕ Z_3"), || format!("H^{n} decomposes as {d}"))?;
    }
    Ok(format!("n=0..7: {}", row.join(", ")))
}

fn twisted_coefficients() -> Outcome {
    let s = spec(GroupSpec::ZbTimesQ { b: 3, i: 3 }, None);
    let o = oracle(&s, 4)?;
    let mut seen = Vec::new();
    for (j, eps) in [(1u64, 1u64), (2, 5)] {
        let m = o.twisted_coefficients(5, (1, 4, 4), j).map_err(|e| e.to_string())?;
        for p in 0..=3 {
            let got = o.cohomology(&m, p).map_err(|e| e.to_string())?.group().clone();
            let want = if p == 0 { FinAb::cyclic(eps) } else { FinAb::trivial() };
            ensure(got == want, || format!("ε_{j}: H^{p} = {got}, want {want}"))?;
        }
        seen.push(format!("ε_{j}={eps}"));
    }
    Ok(format!("H^p(Z_3 × Q_8; Z̃_5), p=0..3, for {}", seen.join(", ")))
}

fn cup_table() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let specs: Vec<CheckedSpec> = (0..24).map(|_| sample::metacyclic(&mut rng, 50, 10)).collect();
    let (mut compared, mut nonzero) = (0, 0);
    for s in &specs {
        let ring = Ring::twisted(s);
        for (name, rule) in verify::cup_rules() {
            for i in 1..=4 {
                for j in 1..=4 {
                    let (x, y) = rule(i, j);
                    let formula = ring.cup_symbols(x, y).map_err(|e| e.to_string())?;
                    let oracle = stated_cup_oracle(s, x, y).map_err(|e| e.to_string())?;
                    ensure(formula == oracle, || {
                        format!("{}: {name} at i={i}, j={j}: formula {formula}, oracle {oracle}", s.spec)
                    })?;
                    compared += 1;
                    nonzero += usize::from(!formula.is_zero());
                }
            }
        }
    }
    ensure(nonzero > 0, || "every product was zero".to_string())?;
    Ok(format!(
        "{} specs (a ≤ 50) × 14 rules, {compared} products ({nonzero} nonzero), 0 mismatches",
        specs.len()
    ))
}

fn periodicity() -> Outcome {
    let config = VerifyConfig {
        only: Some(CheckKind::Period),
        samples: 20,
        ..VerifyConfig::default()
    };
    let report = verify::run(&config);
    if let Some(c) = report.mismatches().next() {
        return Err(format!("{} / {}: {} vs {}", c.spec, c.item, c.formula, c.oracle));
    }
    ensure(report.summary.skipped == 0 && report.summary.matched >= 40, || {
        format!("{:?}", report.summary)
    })?;
    Ok(format!("{} checks over 20 + 20 sampled specs", report.summary.matched))
}

/// Orders of the summands following `Z_{A_j} ⊕ Z_{B_j}`.
fn third_summand(s: &CheckedSpec, n: u64) -> Vec<u64> {
    vz_cohomology(s, n).summands[2..].iter().map(|x| x.order).collect()
}

fn four_cases() -> Outcome {
    let zq = |i, k, ell| {
        spec(
            GroupSpec::ZaZbQ {
                a: 5,
                b: 3,
                i,
                r: 1,
                r_x: 1,
                r_y: 4,
            },
            Some(ThetaSpec::standard(1, 1, k, ell)),
        )
    };
    // (i, k, ℓ, third summand at n = 2, at n = 4)
    let cases: [(u32, u64, u64, &[u64], &[u64]); 4] = [
        (4, 3, 2, &[2, 2], &[8]),
        (4, 1, 1, &[2], &[16]),
        (3, 3, 0, &[2, 2], &[8]),
        (3, 1, 1, &[2], &[8]),
    ];
    let mut cross = 0;
    for (i, k, ell, two, four) in cases {
        let s = zq(i, k, ell);
        for (n, want) in [(2, two), (4, four)] {
            let got = third_summand(&s, n);
            ensure(got == want, || format!("i={i} k={k} ℓ={ell} n={n}: {got:?}, want {want:?}"))?;
        }
        // the same twist on F = Q_{2^i}, where the third summand is everything
        let q = spec(GroupSpec::Quaternion { i }, Some(ThetaSpec::standard(1, 1, k, ell)));
        let o = oracle(&q, 5)?;
        for (n, want) in [(2usize, two), (4, four)] {
            let got = o.fz_cohomology(n).map_err(|e| e.to_string())?;
            let want = FinAb::from_cyclic_orders(0, want.iter().copied());
            ensure(got == want, || format!("Q_{} k={k} ℓ={ell}: fz H^{n} = {got}, want {want}", 1 << i))?;
            cross += 1;
        }
        if i == 3 {
            let zbq = spec(GroupSpec::ZbTimesQ { b: 3, i }, Some(ThetaSpec::standard(1, 1, k, ell)));
            let o = oracle(&zbq, 5)?;
            for n in [2usize, 4] {
                let got = o.fz_cohomology(n).map_err(|e| e.to_string())?;
                let want = vz_cohomology(&zbq, n as u64).group;
                ensure(got == want, || format!("Z_3 × Q_8 k={k} ℓ={ell}: fz H^{n} = {got}, want {want}"))?;
                cross += 1;
            }
        }
    }
    // an order-3 automorphism of Q_8 fixes nothing in H^2
    let rot = spec(GroupSpec::Quaternion { i: 3 }, Some(ThetaSpec::general((0, 1), (1, 1))));
    let got = oracle(&rot, 3)?.fz_cohomology(2).map_err(|e| e.to_string())?;
    ensure(got.is_trivial() && third_summand(&rot, 2).is_empty(), || {
        format!("order-3 twist on Q_8: fz H^2 = {got}")
    })?;
    Ok(format!("4 cases at n=2,4; {cross} fz cross-checks on Q_8, Q_16, Z_3 × Q_8"))
}

fn random_matrix(rng: &mut ChaCha8Rng) -> IntMatrix {
    let m = rng.gen_range(1..=40);
    // half the cases are square so the determinant check gets exercised
    let n = if rng.gen_bool(0.5) { m } else { rng.gen_range(1..=40) };
    let density = rng.gen_range(0.1..=1.0);
    let rows: Vec<Vec<i64>> = (0..m)
        .map(|_| {
            (0..n)
                .map(|_| if rng.gen_bool(density) { rng.gen_range(-30..=30) } else { 0 })
                .collect()
        })
        .collect();
    IntMatrix::from_rows(&rows)
}

fn linalg_properties() -> Outcome {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut square = 0;
    for case in 0..1000 {
        let a = random_matrix(&mut rng);
        let snf = smith_normal_form(&a);
        ensure(snf.u.mul(&a).mul(&snf.v) == snf.d, || format!("case {case}: UAV ≠ D"))?;
        ensure(snf.d.is_diagonal(), || format!("case {case}: D not diagonal"))?;
        let diag = snf.d.diagonal();
        ensure(diag.iter().all(|x| !x.is_negative()), || format!("case {case}: negative entry"))?;
        let chain = diag.windows(2).all(|w| {
            if w[0].is_zero() {
                w[1].is_zero()
            } else {
                (&w[1] % &w[0]).is_zero()
            }
        });
        ensure(chain, || format!("case {case}: divisibility chain broken"))?;
        for (name, m) in [("U", &snf.u), ("V", &snf.v)] {
            ensure(determinant(m).abs().is_one(), || format!("case {case}: det {name} ≠ ±1"))?;
        }
        if a.rows() == a.cols() {
            let det = determinant(&a).abs();
            if !det.is_zero() {
                square += 1;
                let order = cokernel_invariants(&a).order().unwrap_or_else(BigInt::zero);
                ensure(order == det, || format!("case {case}: |coker| = {order}, |det| = {det}"))?;
            }
        }
    }
    let e = within(t, Duration::from_secs(60))?;
    Ok(format!("1000 matrices ({square} square nonsingular); {e:.2?}"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("quaternion groups", quaternion_groups),
        ("metacyclic groups", metacyclic_groups),
        ("infinite family 1", family_one_groups),
        ("twisted coefficients", twisted_coefficients),
        ("cup table", cup_table),
        ("periodicity", periodicity),
        ("four-case selection", four_cases),
        ("exact-linalg properties", linalg_properties),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("criterion {} [{name}]: PASS ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} [{name}]: FAIL ({why})", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
