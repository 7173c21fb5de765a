//! Acceptance gate: one PASS/FAIL line per criterion, with the size limits
//! and time budgets pinned below. Runs without the libtest harness so the
//! lines are always printed; exits nonzero when a criterion deviates from
//! its pinned expectation.

use std::time::{Duration, Instant};

use ctld::algebra::{check_associativity_exhaustive, check_associativity_sampled, check_involution, verify_tl_d_relations, Algebra};
use ctld::cellular::{verify_cell_datum, CellIndex, Cellular};
use ctld::compose::{loop_sign_stats, LoopRule};
use ctld::enumerate::{check_counts, dimension_formula, enum_diagrams, DEFAULT_BUDGET};
use ctld::rep::{gram, gram_lemmas, is_quasi_hereditary, quotient_quasi_hereditary, simple_modules};
use ctld::scalars::{make_field, parse_parameters, roots_of_unity, Field, FieldSpec};

const SEED: u64 = 20240607;
const ASSOC_SAMPLES: usize = 500;
const INVOLUTION_SAMPLES: usize = 200;
const C3_SAMPLES: usize = 200;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn field(s: &str) -> Field {
    make_field(s.parse().unwrap()).unwrap()
}

fn algebra(f: &Field, m: u8, n: u8, deltas: &str) -> Algebra {
    let p = parse_parameters(f, deltas, m as usize).unwrap();
    Algebra::new(f.clone(), p, n).unwrap()
}

fn cyclotomic(m: u8) -> Field {
    make_field(FieldSpec::CyclotomicRationals(m as u32)).unwrap()
}

fn dims_m1() -> Outcome {
    let c = enum_diagrams(1, 4, DEFAULT_BUDGET).unwrap().census;
    let ok = (c.total, c.type_i, c.type_ii) == (48, 13, 35);
    outcome(ok, format!("(1,4): {} / {} / {}", c.total, c.type_i, c.type_ii))
}

fn dims_cyclotomic() -> Outcome {
    let start = Instant::now();
    let c = enum_diagrams(2, 4, DEFAULT_BUDGET).unwrap().census;
    let mut ok = (c.total, c.type_i, c.type_ii) == (768, 208, 560);
    let head = start.elapsed();
    ok &= head < Duration::from_secs(5);
    let mut grid = Vec::new();
    for (m, n) in [(1, 4), (1, 5), (2, 4), (2, 5), (3, 4), (3, 5), (2, 6)] {
        let total = enum_diagrams(m, n, DEFAULT_BUDGET).unwrap().census.total;
        let expected = dimension_formula(m as u32, n as u32);
        ok &= total == expected;
        grid.push(format!("({m},{n})={total}"));
    }
    ok &= start.elapsed() < Duration::from_secs(120);
    outcome(
        ok,
        format!("(2,4): {} / {} / {} in {head:.2?}; formula grid {}", c.total, c.type_i, c.type_ii, grid.join(" ")),
    )
}

fn count_identities() -> Outcome {
    let mut ok = true;
    let mut checked = 0;
    let mut bad = Vec::new();
    for (m, n) in [(1, 4), (2, 4), (2, 5), (1, 6)] {
        for c in check_counts(m, n, DEFAULT_BUDGET).unwrap() {
            checked += 1;
            if !c.passed {
                ok = false;
                bad.push(format!("({m},{n}) {}: {} != {}", c.name, c.lhs, c.rhs));
            }
        }
    }
    outcome(ok, format!("{checked} identities {}", bad.join("; ")))
}

/// The associativity runs for one loop rule: exhaustive at (1,4), sampled
/// at the larger sizes, each with a loop-value-one pattern and the
/// all-zero pattern.
fn associativity_runs(rule: LoopRule) -> Vec<(String, usize, usize)> {
    let mut runs = Vec::new();
    for deltas in ["1", "0"] {
        let alg = algebra(&cyclotomic(1), 1, 4, deltas).with_rule(rule);
        let basis = enum_diagrams(1, 4, DEFAULT_BUDGET).unwrap().diagrams;
        let r = check_associativity_exhaustive(&alg, &basis).unwrap();
        runs.push((format!("(1,4) delta=({deltas}) exhaustive"), r.checked, r.failures));
    }
    for (m, n, one) in [(2, 4, "1,5"), (2, 5, "1,7"), (3, 4, "1,2,3")] {
        let zero = vec!["0"; m as usize].join(",");
        let basis = enum_diagrams(m, n, DEFAULT_BUDGET).unwrap().diagrams;
        for deltas in [one.to_string(), zero] {
            let alg = algebra(&cyclotomic(m), m, n, &deltas).with_rule(rule);
            let r = check_associativity_sampled(&alg, &basis, ASSOC_SAMPLES, SEED).unwrap();
            runs.push((format!("({m},{n}) delta=({deltas})"), r.checked, r.failures));
        }
    }
    runs
}

fn associativity() -> Outcome {
    let start = Instant::now();
    let runs = associativity_runs(LoopRule::Formula);
    let elapsed = start.elapsed();
    let failing: Vec<String> = runs
        .iter()
        .filter(|r| r.2 > 0)
        .map(|(name, checked, failed)| format!("{name}: {failed}/{checked}"))
        .collect();
    let ok = failing.is_empty() && elapsed < Duration::from_secs(300);
    let relations = associativity_runs(LoopRule::Relations);
    let relations_failures: usize = relations.iter().map(|r| r.2).sum();
    outcome(
        ok,
        format!(
            "{} runs in {elapsed:.2?}; failing under the coefficient formula: [{}]; failures under the relations rule: {relations_failures}",
            runs.len(),
            failing.join(", ")
        ),
    )
}

fn relations_m1() -> Outcome {
    let f = cyclotomic(1);
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in [4, 5] {
        for delta in [0, 1, 3] {
            for r in verify_tl_d_relations(&f, &f.from_int(delta), n).unwrap() {
                checked += 1;
                if !r.passed {
                    bad.push(format!("n={n} delta={delta}: {}", r.relation));
                }
            }
        }
    }
    outcome(bad.is_empty(), format!("{checked} relation instances {}", bad.join("; ")))
}

fn cell_datum() -> Outcome {
    let start = Instant::now();
    let cel = Cellular::new(algebra(&field("Q"), 2, 4, "1,0")).unwrap();
    let r = verify_cell_datum(&cel, C3_SAMPLES, SEED, DEFAULT_BUDGET).unwrap();
    let elapsed = start.elapsed();
    let ok = r.passed() && r.rank == 768 && r.c3_checked >= C3_SAMPLES && elapsed < Duration::from_secs(600);
    outcome(
        ok,
        format!(
            "rank {} of {}, C2 on {} cells, C3 on {} samples (seed {}), {elapsed:.2?} {}",
            r.rank,
            r.dimension,
            r.c2_checked,
            r.c3_checked,
            r.seed,
            r.failures.join("; ")
        ),
    )
}

fn involution() -> Outcome {
    let basis = enum_diagrams(2, 4, DEFAULT_BUDGET).unwrap().diagrams;
    let mut detail = Vec::new();
    let mut ok = true;
    for deltas in ["1,5", "0,0"] {
        let alg = algebra(&field("Q"), 2, 4, deltas);
        let r = check_involution(&alg, &basis, INVOLUTION_SAMPLES, SEED).unwrap();
        ok &= r.passed();
        detail.push(format!("delta=({deltas}) {}/{}", r.checked - r.failures, r.checked));
    }
    outcome(ok, detail.join(", "))
}

const FOUR_CASES: [(&str, &str, usize); 4] = [("Q", "1,0", 27), ("Q", "0,0", 24), ("GF(2)", "1,0", 6), ("GF(2)", "0,0", 3)];

fn simple_counts() -> Outcome {
    let mut ok = true;
    let mut detail = Vec::new();
    for (f, deltas, expected) in FOUR_CASES {
        let cel = Cellular::new(algebra(&field(f), 2, 4, deltas)).unwrap();
        let s = simple_modules(&cel).unwrap();
        ok &= s.simples == expected && s.agree && s.predicted_simples == expected;
        detail.push(format!("{f} ({deltas}): {} (predicted {})", s.simples, s.predicted_simples));
    }
    outcome(ok, detail.join(", "))
}

fn vanishing_lemmas() -> Outcome {
    let mut ok = true;
    let mut checked = 0;
    let mut bad = Vec::new();
    for (f, deltas, _) in FOUR_CASES {
        let cel = Cellular::new(algebra(&field(f), 2, 4, deltas)).unwrap();
        for l in gram_lemmas(&cel).unwrap() {
            checked += 1;
            if !l.passed {
                ok = false;
                bad.push(format!("{f} ({deltas}) {}: {}", l.lambda, l.rule));
            }
        }
        let all_zero = deltas == "0,0";
        for half in [CellIndex::MinusHalf(1), CellIndex::MinusHalf(2)] {
            checked += 1;
            if gram(&cel, &half).unwrap().matrix.is_zero() != all_zero {
                ok = false;
                bad.push(format!("{f} ({deltas}) {half}"));
            }
        }
    }
    outcome(ok, format!("{checked} checks {}", bad.join("; ")))
}

/// Loop-value patterns for the grid: one then zeros, all zero, a generic
/// value then zeros, and one followed by a nonzero value.
fn delta_patterns(m: u8) -> Vec<String> {
    let tail = |v: &str| std::iter::once(v.to_string()).chain(std::iter::repeat("0".to_string()).take(m as usize - 1)).collect::<Vec<_>>().join(",");
    let mut out = vec![tail("1"), tail("0"), tail("7")];
    if m >= 2 {
        let mut v = vec!["0".to_string(); m as usize];
        v[0] = "1".into();
        v[1] = "2".into();
        out.push(v.join(","));
    }
    out
}

fn quasi_heredity() -> Outcome {
    let start = Instant::now();
    let mut ok = true;
    let mut cases = 0;
    let mut bad = Vec::new();
    let mut skipped = Vec::new();
    let mut pinned = Vec::new();
    for m in [1u8, 2, 3] {
        for n in [4u8, 5] {
            for spec in [format!("Q(zeta_{m})"), "GF(2)".into(), "GF(3)".into(), "GF(5)".into()] {
                let f = field(&spec);
                if roots_of_unity(&f, m as u32).is_err() {
                    if n == 4 {
                        skipped.push(format!("{spec}/m={m}"));
                    }
                    continue;
                }
                let mut seen: Vec<Vec<ctld::scalars::Scalar>> = Vec::new();
                for deltas in delta_patterns(m) {
                    let Ok(p) = parse_parameters(&f, &deltas, m as usize) else { continue };
                    if seen.iter().any(|s| s.as_slice() == p.deltas()) {
                        continue;
                    }
                    seen.push(p.deltas().to_vec());
                    let cel = Cellular::new(Algebra::new(f.clone(), p, n).unwrap()).unwrap();
                    let q = is_quasi_hereditary(&cel).unwrap();
                    cases += 1;
                    if !q.agree {
                        ok = false;
                        bad.push(format!("({m},{n}) {spec} ({deltas})"));
                    }
                    if n % 2 == 0 {
                        let quo = quotient_quasi_hereditary(&cel).unwrap();
                        cases += 1;
                        if !quo.agree {
                            ok = false;
                            bad.push(format!("quotient ({m},{n}) {spec} ({deltas})"));
                        }
                    }
                    let zero = deltas.split(',').all(|d| d == "0");
                    if m == 2 && spec == "Q(zeta_2)" && zero {
                        if n == 5 {
                            ok &= q.quasi_hereditary;
                            pinned.push(format!("(2,5) delta=0 qh={}", q.quasi_hereditary));
                        } else {
                            let quo = quotient_quasi_hereditary(&cel).unwrap();
                            ok &= !q.quasi_hereditary && quo.quasi_hereditary;
                            pinned.push(format!("(2,4) delta=0 qh={} quotient={}", q.quasi_hereditary, quo.quasi_hereditary));
                        }
                    }
                }
            }
        }
    }
    ok &= pinned.len() == 2;
    outcome(
        ok,
        format!(
            "{cases} decisions in {:.2?}; {}; skipped non-splitting {} {}",
            start.elapsed(),
            pinned.join(", "),
            skipped.join(" "),
            bad.join("; ")
        ),
    )
}

fn main() {
    type Criterion = (u32, &'static str, fn() -> Outcome, bool);
    // The last field is the pinned expectation. Associativity fails for the
    // coefficient formula whenever delta_0 != 1 (see the README); the check
    // runs in full and is reported as it stands.
    let criteria: [Criterion; 10] = [
        (1, "dimension counts m=1", dims_m1, true),
        (2, "dimension counts cyclotomic", dims_cyclotomic, true),
        (3, "count identities", count_identities, true),
        (4, "associativity", associativity, false),
        (5, "m=1 presentation relations", relations_m1, true),
        (6, "cell datum (2,4)", cell_datum, true),
        (7, "involution anti-automorphism", involution, true),
        (8, "simple-module counts (2,4)", simple_counts, true),
        (9, "Gram vanishing lemmas", vanishing_lemmas, true),
        (10, "quasi-heredity decisions", quasi_heredity, true),
    ];
    let mut unexpected = 0;
    for (id, name, run, expected) in criteria {
        let start = Instant::now();
        let o = run();
        let status = if o.pass { "PASS" } else { "FAIL" };
        let note = if o.pass == expected { "" } else { " (unexpected)" };
        println!("criterion {id:>2} {status} {name} [{:.2?}] {}{note}", start.elapsed(), o.detail);
        if o.pass != expected {
            unexpected += 1;
        }
        if id == 6 {
            let (loops, violations) = loop_sign_stats();
            let status = if violations == 0 && loops > 0 { "PASS" } else { "FAIL" };
            println!("criterion 11 {status} loop junction signs [criteria 1-6] {loops} loops, {violations} violations");
            if status == "FAIL" {
                unexpected += 1;
            }
        }
    }
    let (loops, violations) = loop_sign_stats();
    println!("loop junction signs over the whole run: {loops} loops, {violations} violations");
    if violations > 0 {
        unexpected += 1;
    }
    if unexpected > 0 {
        eprintln!("{unexpected} criteria deviate from their pinned expectation");
        std::process::exit(1);
    }
}
