//! Acceptance criteria, one line each. A criterion passes when every check
//! it selects passes within its time bound.
//!
//! Two criteria fail on exactly the recorded observations below. They are
//! reported as FAIL and the run only errors if a failure changes shape: a
//! new failing check, a different observed value, or a recorded failure
//! that starts passing.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use en_models::suites::{run_suite, Check, Status, SuiteOptions};
use serde_json::{json, Value};

struct Criterion {
    id: u32,
    title: &'static str,
    bound: Duration,
    /// `(suite, check names)`; an empty list takes every check.
    select: &'static [(&'static str, &'static [&'static str])],
}

const CRITERIA: [Criterion; 11] = [
    Criterion {
        id: 1,
        title: "enumeration counts",
        bound: Duration::from_secs(1),
        select: &[
            ("operad-laws", &["two-vertex-counts", "three-vertex-counts", "weight-one-counts"]),
            ("mu-image-11x", &["m1-counts"]),
        ],
    },
    Criterion {
        id: 2,
        title: "sphere posets on two vertices",
        bound: Duration::from_secs(1),
        select: &[("thm-graphs-44", &["sphere-poset-n1", "sphere-poset-n2", "sphere-poset-n3"])],
    },
    Criterion {
        id: 3,
        title: "restriction fibers are wedges of two spheres",
        bound: Duration::from_secs(30),
        select: &[("fiber-wedge-53", &[])],
    },
    Criterion {
        id: 4,
        title: "cycle reduction on extended graphs",
        bound: Duration::from_secs(5),
        select: &[(
            "thm-graphs-44",
            &[
                "cyclic-extended-count",
                "reductions-valid-and-below",
                "reductions-cover",
                "reductions-meet",
                "acyclic-part-contractible",
            ],
        )],
    },
    Criterion {
        id: 5,
        title: "proper-graph criterion and witnesses",
        bound: Duration::from_secs(5),
        select: &[("proper-criterion-57", &[])],
    },
    Criterion {
        id: 6,
        title: "slices of the proper-graph inclusion",
        bound: Duration::from_secs(1),
        select: &[(
            "counterexample-s1",
            &["slice-below-elements", "slice-below-circle", "slice-above-antichain", "slice-above-disconnected"],
        )],
    },
    Criterion {
        id: 7,
        title: "Barratt-Eccles filtration",
        bound: Duration::from_secs(60),
        select: &[("be-section-68", &["gamma-strict", "gamma-g-contractible", "sigma-section"])],
    },
    Criterion {
        id: 8,
        title: "monoidal trees and μ",
        bound: Duration::from_secs(5),
        select: &[("mu-image-11x", &["mu-injective", "mu-order-embedding", "mu-image", "mu-strict"])],
    },
    Criterion {
        id: 9,
        title: "lattice paths",
        bound: Duration::from_secs(120),
        select: &[("lp-contract-13x", &[])],
    },
    Criterion {
        id: 10,
        title: "cube configurations and φ",
        bound: Duration::from_secs(10),
        select: &[("operad-laws", &["phi-lax", "centers-below-phi", "phi-strictly-lax", "phi-needs-extended"])],
    },
    Criterion {
        id: 11,
        title: "Boardman-Vogt retraction",
        bound: Duration::from_secs(10),
        select: &[("bv-retract-82", &["pi-iota", "iota-pi-below", "stratum-grafting"])],
    },
];

/// Failures recorded as disagreements with the published statements:
/// `(criterion, check, observed)`.
fn recorded_failures() -> Vec<(u32, &'static str, Value)> {
    vec![
        (
            3,
            "fiber-union-n2",
            json!({
                "cases": 4,
                "failures": 2,
                "witnesses": [
                    { "g": "c→b(2)", "uncovered": "a→c(2), b→a(2), b→c(1)" },
                    { "g": "b→c(2)", "uncovered": "a→b(2), c→a(2), c→b(1)" }
                ]
            }),
        ),
        (
            3,
            "fiber-union-n3",
            json!({
                "cases": 6,
                "failures": 4,
                "witnesses": [
                    { "g": "c→b(2)", "uncovered": "a→c(3), b→a(3), b→c(1)" },
                    { "g": "c→b(3)", "uncovered": "a→c(3), b→a(3), b→c(1)" },
                    { "g": "b→c(2)", "uncovered": "a→b(3), c→a(3), c→b(1)" },
                    { "g": "b→c(3)", "uncovered": "a→b(3), c→a(3), c→b(1)" }
                ]
            }),
        ),
        (
            6,
            "slice-below-elements",
            json!([
                "a→b(1), a→c(1), b→c(1)",
                "a→b(1), a→c(1), b→c(2)",
                "a→b(1), a→c(1), c→b(1)",
                "a→b(1), a→c(2), c→b(1)",
                "a→b(1), c→a(1), c→b(1)"
            ]),
        ),
        (6, "slice-below-circle", json!([0, 0])),
    ]
}

fn main() -> ExitCode {
    // brute-force oracles replace the frozen expected values
    let opts = SuiteOptions { recompute_oracles: true, ..SuiteOptions::default() };
    let recorded = recorded_failures();
    let mut unexpected = Vec::new();
    let mut passed = 0;
    for c in &CRITERIA {
        let start = Instant::now();
        let mut checks: Vec<Check> = Vec::new();
        for (suite, names) in c.select {
            let report = match run_suite(suite, &opts) {
                Ok(r) => r,
                Err(e) => {
                    println!("criterion {:>2}  FAIL  {}  (error: {e})", c.id, c.title);
                    unexpected.push(format!("criterion {}: {e}", c.id));
                    continue;
                }
            };
            for name in names.iter() {
                if !report.checks.iter().any(|k| k.name == *name) {
                    unexpected.push(format!("criterion {}: no check named {name}", c.id));
                }
            }
            checks.extend(report.checks.into_iter().filter(|k| names.is_empty() || names.contains(&k.name.as_str())));
        }
        let elapsed = start.elapsed();
        let failing: Vec<&Check> = checks.iter().filter(|k| k.status == Status::Fail).collect();
        let in_time = elapsed <= c.bound;
        let ok = failing.is_empty() && in_time && !checks.is_empty();
        passed += usize::from(ok);
        let detail = if failing.is_empty() {
            String::new()
        } else {
            format!("  failing: {}", failing.iter().map(|k| k.name.as_str()).collect::<Vec<_>>().join(", "))
        };
        println!(
            "criterion {:>2}  {}  {:<46} {:>9.3}s / {}s  {} checks{}",
            c.id,
            if ok { "PASS" } else { "FAIL" },
            c.title,
            elapsed.as_secs_f64(),
            c.bound.as_secs(),
            checks.len(),
            detail
        );
        if !in_time {
            unexpected.push(format!("criterion {}: {:?} over the {:?} bound", c.id, elapsed, c.bound));
        }
        for k in &failing {
            match recorded.iter().find(|(id, name, _)| *id == c.id && *name == k.name) {
                Some((_, _, observed)) if *observed == k.observed => {}
                Some(_) => unexpected.push(format!("criterion {}: {} now observes {}", c.id, k.name, k.observed)),
                None => unexpected.push(format!("criterion {}: {} fails, observed {}", c.id, k.name, k.observed)),
            }
        }
        for (_, name, _) in recorded.iter().filter(|(id, _, _)| *id == c.id) {
            if !failing.iter().any(|k| k.name == *name) {
                unexpected.push(format!("criterion {}: recorded failure {name} no longer fails", c.id));
            }
        }
    }
    println!("{passed}/{} criteria pass", CRITERIA.len());
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        for u in &unexpected {
            println!("unexpected: {u}");
        }
        ExitCode::FAILURE
    }
}
