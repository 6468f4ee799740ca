use std::fs;
use std::sync::mpsc;

use knotsum::braid::KnotEntry;
use knotsum::InvariantResult;
use rayon::prelude::*;

use crate::cache;
use crate::config::{BatchArgs, Format, RunConfig};
use crate::render::{obtain, render};
use crate::Failure;

struct LineOutcome {
    text: String,
    hit: bool,
    failed: bool,
}

pub fn cmd_batch(args: &BatchArgs) -> Result<u8, Failure> {
    let table = fs::read_to_string(&args.table)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", args.table.display())))?;
    let lines: Vec<(usize, &str)> = table
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();

    let (tx, rx) = mpsc::channel::<(String, InvariantResult)>();
    let cache_dir = args.output.cache_dir.clone();
    let outcomes: Vec<LineOutcome> = std::thread::scope(|scope| {
        let writer = scope.spawn(move || {
            let mut errors = Vec::new();
            for (key, result) in rx {
                if let Some(dir) = &cache_dir {
                    if let Err(e) = cache::store(dir, &key, &result) {
                        errors.push(format!("cache write failed: {e}"));
                    }
                }
            }
            errors
        });
        let outcomes = lines
            .par_iter()
            .map_with(tx, |tx, &(no, line)| process(args, no, line, tx))
            .collect();
        for e in writer.join().expect("cache writer panicked") {
            eprintln!("warning: {e}");
        }
        outcomes
    });

    let mut stdout = String::new();
    for o in &outcomes {
        stdout.push_str(&o.text);
    }
    print!("{stdout}");
    let hits = outcomes.iter().filter(|o| o.hit).count();
    let failed = outcomes.iter().filter(|o| o.failed).count();
    eprintln!(
        "batch: {} knots, {hits} cache hits, {failed} errors",
        outcomes.len()
    );
    Ok(if failed > 0 { 1 } else { 0 })
}

fn process(
    args: &BatchArgs,
    no: usize,
    line: &str,
    tx: &mut mpsc::Sender<(String, InvariantResult)>,
) -> LineOutcome {
    let entry: Result<KnotEntry, Failure> =
        serde_json::from_str(line).map_err(|e| Failure::usage(format!("malformed entry: {e}")));
    let name = entry.as_ref().ok().map(|e| e.name.clone());
    let result = entry.and_then(|e| {
        let cfg = RunConfig::new(e.braid()?, &args.output, args.force);
        let (computed, key) = obtain(&cfg)?;
        if let Some(k) = key {
            tx.send((k, computed.result.clone()))
                .expect("cache writer alive");
        }
        Ok((cfg, computed))
    });
    match result {
        Ok((cfg, computed)) => LineOutcome {
            text: format_line(name.as_deref().unwrap_or_default(), &computed.result, &cfg),
            hit: computed.cache_hit,
            failed: false,
        },
        Err(f) => LineOutcome {
            text: format_error(args.output.format, no, name.as_deref(), &f.message),
            hit: false,
            failed: true,
        },
    }
}

fn format_line(name: &str, r: &InvariantResult, cfg: &RunConfig) -> String {
    match cfg.format {
        Format::Json => format!(
            "{{\"name\":{},\"result\":{}}}\n",
            serde_json::to_string(name).expect("string serializes"),
            r.to_json_string()
        ),
        Format::Text => {
            let body = render(r, cfg);
            format!("{name}\t{}\n", body.trim_end().replace('\n', "; "))
        }
        Format::Latex => format!("% {name}\n{}", render(r, cfg)),
    }
}

fn format_error(format: Format, no: usize, name: Option<&str>, message: &str) -> String {
    match format {
        Format::Json => format!(
            "{}\n",
            serde_json::json!({ "line": no, "name": name, "error": message })
        ),
        Format::Text => format!("{}\terror (line {no}): {message}\n", name.unwrap_or("?")),
        Format::Latex => format!("% line {no}: error: {message}\n"),
    }
}
