use std::fs;
use std::time::Instant;

use knotsum::braid::{census, markov_variants_with, BraidWord, MarkovBounds};
use knotsum::conventions;
use knotsum::invariant::{
    basis_dimension, coloured_alexander, coloured_jones, lambda_invariant, points,
};
use knotsum::lawrence::{dimension, enumerate_basis, generator_matrix};
use knotsum::oracles::{
    ado_direct, alexander_as_s_poly, alexander_burau, coloured_jones_rmatrix, jones_kauffman,
};
use knotsum::pairing::{verify_delta_with, CurveSystem};
use knotsum::par::Exec;
use knotsum::ring::equal_up_to_unit;
use serde::Serialize;
use serde_json::{json, Value};

use crate::config::{Format, Suite, VerifyArgs};
use crate::Failure;

#[derive(Serialize)]
struct SuiteReport {
    suite: &'static str,
    passed: bool,
    checked: usize,
    failures: Vec<String>,
    #[serde(skip_serializing_if = "Value::is_null")]
    notes: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    ms: Option<u64>,
}

impl SuiteReport {
    fn new(suite: &'static str) -> Self {
        SuiteReport {
            suite,
            passed: true,
            checked: 0,
            failures: Vec::new(),
            notes: Value::Null,
            ms: None,
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.passed = false;
            self.failures.push(what());
        }
    }

    fn fail(&mut self, what: String) {
        self.passed = false;
        self.failures.push(what);
    }
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<u8, Failure> {
    let mut suites = args.suite.clone();
    if suites.is_empty() {
        suites = vec![
            Suite::BraidRelations,
            Suite::Delta,
            Suite::Markov,
            Suite::Oracles,
        ];
    }
    suites.sort();
    suites.dedup();
    let scenario = match &args.scenario {
        Some(p) => {
            let text = fs::read_to_string(p)
                .map_err(|e| Failure::usage(format!("cannot read {}: {e}", p.display())))?;
            Some(CurveSystem::from_json_str(&text).map_err(|e| Failure::usage(e.to_string()))?)
        }
        None => None,
    };

    let mut reports = Vec::new();
    for suite in suites {
        let started = Instant::now();
        let mut r = match suite {
            Suite::BraidRelations => braid_relations(args),
            Suite::Delta => delta(args, scenario.as_ref()),
            Suite::Markov => markov(args),
            Suite::Oracles => oracles(args),
        };
        let ms = started.elapsed().as_millis() as u64;
        if let Some(limit) = args.max_ms {
            if ms > limit {
                r.fail(format!("took {ms} ms, over the --max-ms budget of {limit}"));
            }
        }
        if args.timing {
            r.ms = Some(ms);
        }
        reports.push(r);
    }

    let passed = reports.iter().all(|r| r.passed);
    match args.format {
        Format::Json => println!(
            "{}",
            json!({ "passed": passed, "conventions": conventions::ledger(), "suites": reports })
        ),
        Format::Text | Format::Latex => {
            for r in &reports {
                let status = if r.passed { "PASS" } else { "FAIL" };
                let time = r.ms.map(|ms| format!(" in {ms} ms")).unwrap_or_default();
                println!("{status} {}: {} checks{time}", r.suite, r.checked);
                if !r.notes.is_null() {
                    println!("  note: {}", r.notes);
                }
                for f in &r.failures {
                    println!("  {f}");
                }
            }
            println!(
                "{}",
                if passed {
                    "all suites passed"
                } else {
                    "some suites failed"
                }
            );
        }
    }
    Ok(if passed { 0 } else { 1 })
}

fn strand_range(args: &VerifyArgs, default: std::ops::RangeInclusive<usize>) -> Vec<usize> {
    match args.n {
        Some(n) => vec![n],
        None => default.collect(),
    }
}

fn colour_range(args: &VerifyArgs, default: &[u32]) -> Vec<u32> {
    match args.colour {
        Some(c) => vec![c],
        None => default.to_vec(),
    }
}

fn braid_relations(args: &VerifyArgs) -> SuiteReport {
    let mut r = SuiteReport::new("braid-relations");
    for n in strand_range(args, 2..=4) {
        for m in 0..=3u32 {
            if dimension(n, m) > args.max_dim as u128 {
                r.fail(format!("H_{{{n},{m}}} exceeds --max-dim"));
                continue;
            }
            let space = enumerate_basis(n, m);
            let g = |i: usize, inv: bool| generator_matrix(&space, i, inv);
            for i in 1..n {
                let (Ok(a), Ok(ai)) = (g(i, false), g(i, true)) else {
                    r.fail(format!("σ{i} unavailable on H_{{{n},{m}}}"));
                    continue;
                };
                let inverse = a.mul(&ai).is_ok_and(|p| p.is_identity())
                    && ai.mul(&a).is_ok_and(|p| p.is_identity());
                r.check(inverse, || format!("σ{i}·σ{i}⁻¹ ≠ 1 on H_{{{n},{m}}}"));
                for j in i + 1..n {
                    let Ok(b) = g(j, false) else { continue };
                    let ok = if j == i + 1 {
                        let lhs = a.mul(&b).and_then(|p| p.mul(&a));
                        let rhs = b.mul(&a).and_then(|p| p.mul(&b));
                        matches!((lhs, rhs), (Ok(l), Ok(r)) if l == r)
                    } else {
                        matches!((a.mul(&b), b.mul(&a)), (Ok(l), Ok(r)) if l == r)
                    };
                    r.check(ok, || format!("relation σ{i}, σ{j} fails on H_{{{n},{m}}}"));
                }
            }
        }
    }
    r
}

fn delta(args: &VerifyArgs, scenario: Option<&CurveSystem>) -> SuiteReport {
    let mut r = SuiteReport::new("delta");
    let (ns, colours) = match scenario {
        // A scenario file describes one (n, N); infer it when not given.
        Some(cs) => {
            let n = args.n.unwrap_or(cs.punctures.div_ceil(2));
            let colour = args
                .colour
                .or_else(|| cs.green.first().map(|g| g.points + 1))
                .unwrap_or(2);
            (vec![n], vec![colour])
        }
        None => (strand_range(args, 2..=3), colour_range(args, &[2, 3, 4])),
    };
    for &n in &ns {
        for &colour in &colours {
            if dimension(2 * n - 1, points(n, colour)) > args.max_dim as u128 {
                r.fail(format!("n={n} N={colour} exceeds --max-dim"));
                continue;
            }
            let default;
            let cs = match scenario {
                Some(cs) => cs,
                None => {
                    default = CurveSystem::dual(n, colour);
                    &default
                }
            };
            match verify_delta_with(cs, n, colour, Exec::Parallel) {
                Ok(report) => {
                    r.checked += report.checked;
                    for v in report.violations.iter().take(5) {
                        r.fail(format!(
                            "n={n} N={colour} e={:?}: expected {}",
                            v.e, v.expected
                        ));
                    }
                    if report.violations.len() > 5 {
                        r.fail(format!(
                            "n={n} N={colour}: {} violations in total",
                            report.violations.len()
                        ));
                    }
                }
                Err(e) => r.fail(format!("n={n} N={colour}: {e}")),
            }
        }
    }
    r
}

fn knot(name: &str) -> BraidWord {
    census()
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, b)| b)
        .expect("census knot")
}

fn markov(args: &VerifyArgs) -> SuiteReport {
    let mut r = SuiteReport::new("markov");
    let mut variants = 0;
    let mut lambda_breaks = 0;
    for (offset, name) in ["3_1", "4_1"].into_iter().enumerate() {
        let b = knot(name);
        let bounds = MarkovBounds {
            extra_strands: 2,
            extra_letters: 8,
        };
        let vs = markov_variants_with(&b, 25, args.seed + 10 * offset as u64, bounds);
        for colour in colour_range(args, &[2, 3]) {
            let budget = vs
                .iter()
                .chain([&b])
                .map(|v| basis_dimension(v.strands(), colour))
                .max();
            if budget.unwrap_or(0) > args.max_dim as u128 {
                r.fail(format!("{name} variants at N={colour} exceed --max-dim"));
                continue;
            }
            let base = (
                lambda_invariant(&b, colour),
                coloured_jones(&b, colour),
                coloured_alexander(&b, colour),
            );
            let (Ok(lambda), Ok(jones), Ok(ado)) = base else {
                r.fail(format!("{name} N={colour}: pipeline error"));
                continue;
            };
            for v in &vs {
                variants += 1;
                if lambda_invariant(v, colour).ok().as_ref() != Some(&lambda) {
                    lambda_breaks += 1;
                }
                r.check(
                    coloured_jones(v, colour).ok().as_ref() == Some(&jones),
                    || format!("J_{colour} differs on {name} variant {v}"),
                );
                r.check(
                    coloured_alexander(v, colour).ok().as_ref() == Some(&ado),
                    || format!("Phi_{colour} differs on {name} variant {v}"),
                );
            }
        }
    }
    r.notes = json!({
        "variants": variants,
        "lambda_exactly_invariant": lambda_breaks == 0,
        "lambda_differs_on": lambda_breaks,
    });
    r
}

fn oracles(args: &VerifyArgs) -> SuiteReport {
    let mut r = SuiteReport::new("oracles");
    let colours = colour_range(args, &[2, 3]);
    for (name, b) in census() {
        if colours.contains(&2) {
            let ours = coloured_jones(&b, 2);
            let oracle = jones_kauffman(&b);
            r.check(matches!((&ours, &oracle), (Ok(a), Ok(o)) if a == o), || {
                format!("{name}: J_2 differs from the Kauffman bracket")
            });
            let alex = alexander_burau(&b)
                .and_then(|p| alexander_as_s_poly(&p, conventions::ALEXANDER_T_AS_S_POWER, 4));
            let phi = coloured_alexander(&b, 2);
            r.check(
                matches!((&phi, &alex), (Ok(a), Ok(o)) if equal_up_to_unit(a, o).is_equal()),
                || format!("{name}: Phi_2 differs from the Alexander polynomial"),
            );
        }
    }
    for colour in colours.iter().copied().filter(|&c| c >= 3) {
        for name in ["3_1", "4_1"] {
            let b = knot(name);
            if basis_dimension(b.strands(), colour) > args.max_dim as u128 {
                r.fail(format!("{name} at N={colour} exceeds --max-dim"));
                continue;
            }
            let ours = coloured_jones(&b, colour);
            let oracle = coloured_jones_rmatrix(&b, colour);
            r.check(matches!((&ours, &oracle), (Ok(a), Ok(o)) if a == o), || {
                format!("{name}: J_{colour} differs from the R-matrix state sum")
            });
            let phi = coloured_alexander(&b, colour);
            let direct = ado_direct(&b, colour);
            r.check(
                matches!((&phi, &direct), (Ok(a), Ok(o)) if equal_up_to_unit(a, o).is_equal()),
                || format!("{name}: Phi_{colour} differs from the direct ADO state sum"),
            );
        }
    }
    r
}
