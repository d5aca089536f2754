//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the lines are always printed; exits nonzero if any criterion fails.
//!
//! Runtime limits are checked on the best of a few runs, after a warm-up,
//! to keep scheduler noise out of the verdict.

use std::process::{Command as Process, ExitCode};
use std::time::{Duration, Instant};

use godeaux_core::diophantine::{intersection_identity, solve_cone_case, solve_smooth_quadric_case};
use godeaux_core::picard::{
    divisor_candidates, e8_roots, exceptional_candidates, gram_matrix, partition_orbits, theorem_counts,
};
use godeaux_core::quintic::{enumerate_monomials, family_dimension, torus_rank, CANONICAL_MONOMIALS};
use godeaux_core::suites::{
    counts_suite, diophantine_suite, lattice_suite, monomials_suite, pdo_suite, rr_suite, surface_suite,
};
use godeaux_core::{Budget, CheckEntry, Provenance, ReportFragment, Status, SuiteConfig};

struct Outcome {
    ok: bool,
    detail: String,
}

fn best_of<T>(runs: usize, mut f: impl FnMut() -> T) -> (T, Duration) {
    let mut out = f();
    let mut best = Duration::MAX;
    for _ in 0..runs {
        let start = Instant::now();
        out = f();
        best = best.min(start.elapsed());
    }
    (out, best)
}

fn timed(limit: Duration, elapsed: Duration) -> (bool, String) {
    (elapsed < limit, format!("{elapsed:.2?} < {limit:?}"))
}

/// Computed entries must pass; recorded assumptions may stay undecidable.
fn all_computed_pass(entries: &ReportFragment) -> Result<(), String> {
    let bad: Vec<&CheckEntry> = entries
        .iter()
        .filter(|e| !(e.passed() || (e.status == Status::Undecidable && e.provenance == Provenance::AssumedPublished)))
        .collect();
    if bad.is_empty() {
        Ok(())
    } else {
        Err(bad.iter().map(|e| format!("{}: {} vs {}", e.check_id, e.expected, e.actual)).collect::<Vec<_>>().join("; "))
    }
}

fn entry<'a>(entries: &'a ReportFragment, id: &str) -> Option<&'a CheckEntry> {
    entries.iter().find(|e| e.check_id == id)
}

fn monomial_set() -> Outcome {
    let (entries, t) = best_of(5, monomials_suite);
    let listing: Vec<[u8; 4]> = enumerate_monomials().iter().map(|m| m.0).collect();
    let exact = listing == CANONICAL_MONOMIALS;
    let checks = all_computed_pass(&entries);
    let (fast, timing) = timed(Duration::from_millis(1), t);
    Outcome { ok: exact && checks.is_ok() && fast, detail: format!("{} tuples in order={exact}, {timing}", listing.len()) }
}

fn e8_enumeration() -> Outcome {
    let (entries, t) = best_of(5, lattice_suite);
    let roots = e8_roots();
    let norms = roots.iter().all(|r| r.norm() == -2);
    let checks = all_computed_pass(&entries);
    let det = entry(&entries, "lattice.gram_determinant").map(|e| e.actual.clone()).unwrap_or_default();
    let (fast, timing) = timed(Duration::from_millis(10), t);
    Outcome {
        ok: roots.len() == 240 && norms && gram_matrix().len() == 8 && checks.is_ok() && fast,
        detail: format!("{} roots, |det| = {det}, {timing}", roots.len()),
    }
}

fn divisor_counting() -> Outcome {
    let (entries, t) = best_of(5, counts_suite);
    let candidates = exceptional_candidates();
    let numerics = candidates.iter().all(|e| e.self_intersection() == -2 && e.dot_canonical() == 0);
    let orbits = partition_orbits().expect("orbits of size 10");
    let counts = theorem_counts(&orbits);
    let model_tagged = entry(&entries, "counts.excellent_lower_bound").is_some_and(|e| e.provenance == Provenance::ModelDerived);
    let checks = all_computed_pass(&entries);
    let (fast, timing) = timed(Duration::from_millis(100), t);
    let ok = candidates.len() == 1200
        && numerics
        && orbits.len() == 120
        && orbits.iter().all(|o| o.len() == 10)
        && counts.good_lower_bound == 1080
        && counts.excellent_lower_bound == 840
        && model_tagged
        && checks.is_ok()
        && fast;
    Outcome {
        ok,
        detail: format!(
            "{} candidates, {} orbits, bounds {}/{}, {timing}",
            candidates.len(),
            orbits.len(),
            counts.good_lower_bound,
            counts.excellent_lower_bound
        ),
    }
}

fn numerical_geometry(rr: &ReportFragment) -> Outcome {
    let ids = ["rr.quotient", "rr.b2", "rr.curve_genus", "rr.d_dot_c", "rr.chi_candidates", "rr.noether"];
    let failing: Vec<&str> = ids.iter().copied().filter(|id| !entry(rr, id).is_some_and(CheckEntry::passed)).collect();
    let quotient = entry(rr, "rr.quotient").map(|e| e.actual.clone()).unwrap_or_default();
    Outcome {
        ok: failing.is_empty() && divisor_candidates().len() == 1200,
        detail: format!("quotient {quotient}, failing {failing:?}"),
    }
}

fn hilbert_condition(rr: &ReportFragment) -> Outcome {
    let ids = ["rr.hilbert_condition", "rr.hilbert_condition_classes", "rr.growth"];
    let failing: Vec<&str> = ids.iter().copied().filter(|id| !entry(rr, id).is_some_and(CheckEntry::passed)).collect();
    let pairs = entry(rr, "rr.hilbert_condition").map(|e| e.actual.clone()).unwrap_or_default();
    let growth = entry(rr, "rr.growth").map(|e| e.actual.clone()).unwrap_or_default();
    Outcome { ok: failing.is_empty(), detail: format!("{pairs} of 4800 pairs for n = 0..10, leading {growth}") }
}

fn surface_checks() -> Outcome {
    let config = SuiteConfig { primes: vec![11, 31, 41], ..SuiteConfig::default() };
    let start = Instant::now();
    let entries = surface_suite(&config);
    let t = start.elapsed();
    let per_prime: Vec<&CheckEntry> = entries.iter().filter(|e| e.check_id.starts_with("surface.q")).collect();
    let routes = per_prime.iter().filter(|e| e.check_id.ends_with("route_agreement")).count();
    let checks = all_computed_pass(&entries);
    let (fast, timing) = timed(Duration::from_secs(5), t);
    Outcome {
        // 3 primes x (invariance, free action, smoothness, 4 planes, routes)
        ok: per_prime.len() == 24 && routes == 3 && checks.is_ok() && fast,
        detail: format!("{} per-prime checks, {timing}{}", per_prime.len(), checks.err().map(|e| format!(", {e}")).unwrap_or_default()),
    }
}

fn family_dim() -> Outcome {
    let (dim, rank) = (family_dimension(), torus_rank());
    Outcome { ok: dim == 8 && rank == 3, detail: format!("dimension {dim}, weight rank {rank}") }
}

fn diophantine() -> Outcome {
    let mut quadric = solve_smooth_quadric_case();
    quadric.sort_unstable();
    let mut cone = solve_cone_case();
    cone.sort_unstable();
    let entries = diophantine_suite();
    let ok = quadric == [(0, 3), (2, 5), (3, 0), (5, 2)]
        && cone == [(0, 3), (5, 2)]
        && intersection_identity() == 15
        && all_computed_pass(&entries).is_ok();
    Outcome { ok, detail: format!("{quadric:?}, {cone:?}, 5 x 3 = {}", intersection_identity()) }
}

fn operator_algebra() -> Outcome {
    let config = SuiteConfig { trials: 500, seed: 42, pdo_budget: Budget { precision: 12, d_bound: 6 }, ..SuiteConfig::default() };
    let start = Instant::now();
    let entries = pdo_suite(&config);
    let t = start.elapsed();
    let required = [
        "pdo.associativity",
        "pdo.subadditivity",
        "pdo.order_equality",
        "pdo.order_strict",
        "pdo.symbol_multiplicative",
        "pdo.gamma_additivity",
        "pdo.highest_term",
        "pdo.a1_closure",
        "pdo.normalized_change",
        "pdo.precision_soundness",
    ];
    let failing: Vec<&str> = required.iter().copied().filter(|id| !entry(&entries, id).is_some_and(CheckEntry::passed)).collect();
    let checks = all_computed_pass(&entries);
    let (fast, timing) = timed(Duration::from_secs(30), t);
    Outcome {
        ok: failing.is_empty() && checks.is_ok() && fast,
        detail: format!("500 trials, failing {failing:?}, {timing}"),
    }
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().expect("temp dir");
    let run = |name: &str| {
        let path = dir.path().join(name);
        let status = Process::new(env!("CARGO_BIN_EXE_godeaux-cert"))
            .args(["all", "--no-timestamp", "--json"])
            .arg(&path)
            .output()
            .expect("binary runs")
            .status;
        (status.code(), std::fs::read(&path).unwrap_or_default())
    };
    let (code_a, a) = run("a.json");
    let (code_b, b) = run("b.json");
    let ok = code_a == Some(0) && code_b == Some(0) && !a.is_empty() && a == b;
    Outcome { ok, detail: format!("exit {code_a:?}/{code_b:?}, {} bytes, identical={}", a.len(), a == b) }
}

fn main() -> ExitCode {
    let rr = rr_suite();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("monomial set", Box::new(monomial_set)),
        ("E8 enumeration", Box::new(e8_enumeration)),
        ("divisor counting", Box::new(divisor_counting)),
        ("numerical geometry", Box::new(|| numerical_geometry(&rr))),
        ("pre-spectral Hilbert condition", Box::new(|| hilbert_condition(&rr))),
        ("surface checks", Box::new(surface_checks)),
        ("family dimension", Box::new(family_dim)),
        ("Diophantine systems", Box::new(diophantine)),
        ("operator algebra properties", Box::new(operator_algebra)),
        ("report determinism", Box::new(determinism)),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        if !o.ok {
            failures += 1;
        }
        println!("criterion {:>2} {:<32} {}  ({})", i + 1, name, if o.ok { "PASS" } else { "FAIL" }, o.detail);
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
