//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use nbhd::algebra::{multiplication_map, tensor, AlgebraMap, FpAlgebra, Strategy};
use nbhd::neighbour::{
    decompose_difference, in_dtilde, is_neighbour, is_square_zero_pair, matrix_domain, rewrite_kernel_element, transpose,
    universal_dtilde,
};
use nbhd::verify::{emit_report, run_families, run_suite, CheckVerdict, SuiteConfig, VerificationReport};
use nbhd::{Monomial, Polynomial, RingSpec};

type Outcome = Result<String, String>;

fn all_pass(report: &VerificationReport, family: &str) -> Result<usize, String> {
    let records: Vec<_> = report.family(family).collect();
    if records.is_empty() {
        return Err(format!("no `{family}` records"));
    }
    for r in &records {
        if r.verdict == CheckVerdict::Fail {
            return Err(format!("{}: {}", r.id, r.witness.clone().unwrap_or_default()));
        }
    }
    Ok(records.len())
}

fn count(report: &VerificationReport, id: &str, key: &str) -> u64 {
    report
        .get(id)
        .and_then(|r| r.params.get("counts"))
        .and_then(|c| c.get(key))
        .and_then(|v| v.as_u64())
        .unwrap_or(0)
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let took = start.elapsed();
    if took < limit {
        Ok(())
    } else {
        Err(format!("{what} took {took:?}, limit {limit:?}"))
    }
}

fn squares_counterexample() -> Outcome {
    let start = Instant::now();
    let q = RingSpec::Rationals;
    let c = FpAlgebra::presented(q, &["e1", "e2"], &["e1^2", "e2^2"], Strategy::MonomialDeletion).map_err(|e| e.to_string())?;
    let dom = matrix_domain(q, 2);
    let f = AlgebraMap::parse(&dom, &c, &["e1", "e2"]).map_err(|e| e.to_string())?;
    let g = AlgebraMap::parse(&dom, &c, &["0", "0"]).map_err(|e| e.to_string())?;
    let w = is_neighbour(&f, &g).map_err(|e| e.to_string())?.witness.ok_or("pair reported as neighbours")?;
    if w.value.to_string() != "e1*e2" {
        return Err(format!("witness {w}"));
    }
    for x in f.images() {
        if !(x * x).is_zero() {
            return Err(format!("{x} has nonzero square"));
        }
    }
    within(start, Duration::from_secs(1), "squares-counterexample")?;
    Ok(format!("witness {w}, generator squares vanish, {:?}", start.elapsed()))
}

fn minus_free_agreement(report: &VerificationReport) -> Outcome {
    let n = all_pass(report, "minus-free")?;
    let mut total = 0;
    for r in report.family("minus-free") {
        let ring_total = count(report, &r.id, "neighbour_pairs") + count(report, &r.id, "non_neighbour_pairs");
        if ring_total < 200 {
            return Err(format!("{} saw {ring_total} pairs", r.id));
        }
        total += ring_total;
    }
    Ok(format!("{total} pairs over {n} rings, no disagreement"))
}

fn square_zero_caveat(report: &VerificationReport) -> Outcome {
    let q = report.get("square-zero/Q").ok_or("no rational run")?;
    if q.verdict != CheckVerdict::Pass {
        return Err(format!("over Q: {:?} {:?}", q.verdict, q.witness));
    }
    let z2 = report.get("square-zero/Z2").ok_or("no Z/2 run")?;
    if z2.verdict != CheckVerdict::ExpectedDivergence {
        return Err(format!("over Z/2: {:?} {:?}", z2.verdict, z2.witness));
    }
    // the separation instance itself
    let r = RingSpec::Modular(2);
    let c = FpAlgebra::presented(r, &["e1", "e2"], &["e1^2", "e2^2"], Strategy::MonomialDeletion).map_err(|e| e.to_string())?;
    let dom = matrix_domain(r, 2);
    let f = AlgebraMap::parse(&dom, &c, &["e1", "e2"]).map_err(|e| e.to_string())?;
    let g = AlgebraMap::parse(&dom, &c, &["0", "0"]).map_err(|e| e.to_string())?;
    let sq = is_square_zero_pair(&f, &g).map_err(|e| e.to_string())?;
    let nb = is_neighbour(&f, &g).map_err(|e| e.to_string())?;
    if !sq.holds() || nb.holds() {
        return Err(format!("Z/2 separation: squares {}, neighbour {}", sq.holds(), nb.holds()));
    }
    Ok(format!(
        "agreement over Q on {} pairs; Z/2 separates ({} predicted divergences)",
        count(report, "square-zero/Q", "cases"),
        count(report, "square-zero/Z2", "expected_divergences")
    ))
}

fn universal_property(report: &VerificationReport) -> Outcome {
    let n = all_pass(report, "universal-pair")?;
    let nb: u64 = report.family("universal-pair").map(|r| count(report, &r.id, "neighbour_pairs")).sum();
    let non: u64 = report.family("universal-pair").map(|r| count(report, &r.id, "non_neighbour_pairs")).sum();
    Ok(format!("{nb} neighbour and {non} non-neighbour pairs over {n} rings"))
}

fn multiplicativity() -> Outcome {
    let start = Instant::now();
    let cfg = SuiteConfig::new(42)
        .with_rings(&[RingSpec::Rationals])
        .and_then(|c| c.with_bounds(2, 3, 3))
        .map_err(|e| e.to_string())?;
    let report = run_families(&cfg, &["affine-multiplicative"]).map_err(|e| e.to_string())?;
    let n = all_pass(&report, "affine-multiplicative")?;
    if n != 6 {
        return Err(format!("{n} (p, n) combinations"));
    }
    let pairs: u64 = report.checks.iter().map(|r| count(&report, &r.id, "monomial_pairs")).sum();
    within(start, Duration::from_secs(120), "multiplicativity")?;
    Ok(format!("{pairs} monomial pairs, {:?}", start.elapsed()))
}

fn generic_neighbours_and_extension() -> Outcome {
    let cfg = SuiteConfig::new(42).with_bounds(3, 3, 3).map_err(|e| e.to_string())?;
    let report = run_families(&cfg, &["affine-neighbours", "extension"]).map_err(|e| e.to_string())?;
    let generic = all_pass(&report, "affine-neighbours")?;
    let ext = all_pass(&report, "extension")?;
    for r in report.family("extension") {
        let random = count(&report, &r.id, "members") + count(&report, &r.id, "rejected");
        let universal = count(&report, &r.id, "universal_extensions");
        if random < 200 {
            return Err(format!("{}: {random} random cases", r.id));
        }
        let field = r.params.get("ring").and_then(|v| v.as_str()).is_some_and(|s| s.parse::<RingSpec>().is_ok_and(|r| r.is_field()));
        if field && universal < 200 {
            return Err(format!("{}: {universal} universal cases", r.id));
        }
    }
    Ok(format!("{generic} generic-pair checks, {ext} extension checks"))
}

fn determinant_and_transposition() -> Outcome {
    let u = universal_dtilde(RingSpec::Rationals, 2, 2).map_err(|e| e.to_string())?;
    let a = |i: usize, j: usize| u.entry(i, j);
    let diag = a(0, 0) * a(1, 1);
    let expr = &(&diag - &(a(0, 1) * a(1, 0))) - &(&diag * &u.codomain().from_i64(2));
    if !expr.is_zero() {
        return Err(format!("normal form {expr}"));
    }
    if !in_dtilde(&u).holds() {
        return Err("universal matrix outside D~(2,2)".into());
    }
    let t = in_dtilde(&transpose(&u));
    if !t.holds() {
        return Err(format!("transpose fails: {:?} {:?}", t.ggx.map(|w| w.to_string()), t.ffx.map(|w| w.to_string())));
    }
    Ok("normal form 0; transpose stays in D~(2,2)".into())
}

fn random_poly(rng: &mut ChaCha8Rng, vs: &nbhd::VarSet, ring: RingSpec) -> Polynomial {
    let n = vs.len();
    let terms: Vec<(Monomial, nbhd::Coefficient)> = (0..rng.gen_range(1..=6))
        .map(|_| {
            let mut e = vec![0u32; n];
            let deg = rng.gen_range(0..=4);
            for _ in 0..deg {
                e[rng.gen_range(0..n)] += 1;
            }
            (Monomial::from_exponents(e), ring.from_i64(rng.gen_range(-9..=9)))
        })
        .collect();
    Polynomial::from_terms(vs, ring, terms)
}

fn constructive_proofs() -> Outcome {
    let mut checked = 0;
    for ring in [RingSpec::Rationals, RingSpec::Integers] {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for k in 0..500 {
            let n = rng.gen_range(1..=3);
            let b = matrix_domain(ring, n);
            let p = random_poly(&mut rng, b.varset(), ring);
            // P(Z) - P(Y) against Σ (Z_i - Y_i) Q_i, expanded here
            let d = decompose_difference(&p).map_err(|e| format!("{ring} case {k}: {e}"))?;
            let ys: Vec<Polynomial> = (0..n).map(|i| d.y(i)).collect();
            let zs: Vec<Polynomial> = (0..n).map(|i| d.z(i)).collect();
            let lhs = &p.substitute(&zs).unwrap() - &p.substitute(&ys).unwrap();
            let rhs = (0..n).fold(Polynomial::zero(&d.varset, ring), |acc, i| &acc + &(&(&zs[i] - &ys[i]) * &d.quotients[i]));
            if lhs != rhs {
                return Err(format!("{ring} case {k}: {p} does not re-expand"));
            }
            // x - m(x) ⊗ 1 lies in the kernel
            let bb = tensor(&b, &b).map_err(|e| e.to_string())?;
            let x = bb.algebra.element(&random_poly(&mut rng, bb.algebra.varset(), ring)).map_err(|e| e.to_string())?;
            let m = multiplication_map(&b).map_err(|e| e.to_string())?;
            let t = &x - &bb.inclusions[0].apply(&m.apply(&x).unwrap()).unwrap();
            let terms = rewrite_kernel_element(&b, &t).map_err(|e| format!("{ring} case {k}: {e}"))?;
            let mut total = bb.algebra.zero();
            for term in &terms {
                total = &total + &(&term.coefficient * &term.generator);
            }
            if total != t {
                return Err(format!("{ring} case {k}: kernel rewrite of {t} does not re-expand"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} polynomials and kernel elements re-expand"))
}

fn harness_integrity() -> Outcome {
    let cfg = SuiteConfig::new(42);
    let start = Instant::now();
    let first = run_suite(&cfg);
    within(start, Duration::from_secs(300), "default run")?;
    let elapsed = start.elapsed();
    let second = run_suite(&cfg);
    let a = emit_report(&first, "json").map_err(|e| e.to_string())?;
    let b = emit_report(&second, "json").map_err(|e| e.to_string())?;
    if a != b {
        return Err("two default runs differ".into());
    }
    let inj = first.get("fail-injection").ok_or("no fail-injection record")?;
    if inj.verdict != CheckVerdict::Pass || count(&first, "fail-injection", "flipped") == 0 {
        return Err(format!("fail-injection: {:?} {:?}", inj.verdict, inj.witness));
    }
    if let Some(bad) = first.failures().next() {
        return Err(format!("{} failed: {:?}", bad.id, bad.witness));
    }
    Ok(format!(
        "{} flipped verdicts; {} checks in {elapsed:?}; {} identical bytes",
        count(&first, "fail-injection", "flipped"),
        first.checks.len(),
        a.len()
    ))
}

fn main() {
    let corpus = run_families(&SuiteConfig::new(42), &["minus-free", "square-zero", "universal-pair"]).expect("registered families");
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("1 squares counterexample", Box::new(squares_counterexample)),
        ("2 product and minus-free forms agree", Box::new(|| minus_free_agreement(&corpus))),
        ("3 squares decide iff 2 is a unit", Box::new(|| square_zero_caveat(&corpus))),
        ("4 factorization through (B⊗B)/J^2", Box::new(|| universal_property(&corpus))),
        ("5 multiplicativity of generic combinations", Box::new(multiplicativity)),
        ("6 generic neighbours and row extension", Box::new(generic_neighbours_and_extension)),
        ("7 determinant and transposition in D~(2,2)", Box::new(determinant_and_transposition)),
        ("8 constructive decompositions re-expand", Box::new(constructive_proofs)),
        ("9 fail-injection, runtime and determinism", Box::new(harness_integrity)),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        match std::panic::catch_unwind(std::panic::AssertUnwindSafe(run)) {
            Ok(Ok(detail)) => println!("PASS  {name}: {detail}"),
            Ok(Err(why)) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
            Err(_) => {
                failed += 1;
                println!("FAIL  {name}: panicked");
            }
        }
    }
    println!("{} of {} acceptance criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
