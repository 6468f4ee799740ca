use knotsum::invariant::{basis_dimension, compute};
use knotsum::InvariantResult;

use crate::cache;
use crate::config::{Format, RunConfig, Spec};
use crate::Failure;

/// Result of one computation and whether it came from the cache.
pub struct Computed {
    pub result: InvariantResult,
    pub cache_hit: bool,
}

pub fn check_budget(cfg: &RunConfig) -> Result<(), Failure> {
    let dim = basis_dimension(cfg.braid.strands(), cfg.colour);
    if dim > cfg.max_dim as u128 {
        return Err(Failure::compute(format!(
            "basis dimension {dim} for n={}, N={} exceeds the budget --max-dim {}",
            cfg.braid.strands(),
            cfg.colour,
            cfg.max_dim
        )));
    }
    Ok(())
}

/// Looks the result up in the cache or computes it. Returns the cache key to
/// write back, if any.
pub fn obtain(cfg: &RunConfig) -> Result<(Computed, Option<String>), Failure> {
    check_budget(cfg)?;
    let key = cfg.cache_dir.as_ref().map(|_| cache::key(cfg));
    if let (Some(dir), Some(k)) = (&cfg.cache_dir, &key) {
        if !cfg.force && !cfg.timing {
            if let Some(result) = cache::load(dir, k) {
                return Ok((
                    Computed {
                        result,
                        cache_hit: true,
                    },
                    None,
                ));
            }
        }
    }
    let result = compute(&cfg.braid, cfg.colour, cfg.request())?;
    Ok((
        Computed {
            result,
            cache_hit: false,
        },
        key,
    ))
}

pub fn cmd_compute(cfg: &RunConfig) -> Result<String, Failure> {
    let (computed, key) = obtain(cfg)?;
    if let (Some(dir), Some(k)) = (&cfg.cache_dir, key) {
        cache::store(dir, &k, &computed.result)
            .map_err(|e| Failure::compute(format!("cache write failed: {e}")))?;
    }
    Ok(render(&computed.result, cfg))
}

/// Renders a result. Text output with a single quantity prints only its value.
pub fn render(r: &InvariantResult, cfg: &RunConfig) -> String {
    let n = r.colour;
    let value = |s: Spec, latex: bool| match s {
        Spec::Lambda => r.lambda.render(latex),
        Spec::Jones => r
            .jones
            .as_ref()
            .map_or_else(|| "-".into(), |p| p.render(latex)),
        Spec::Ado => r
            .ado
            .as_ref()
            .map_or_else(|| "-".into(), |p| p.render(latex)),
    };
    match cfg.format {
        Format::Json => format!("{}\n", r.to_json_string()),
        Format::Text if cfg.specs.len() == 1 && r.ms.is_none() => {
            format!("{}\n", value(cfg.specs[0], false))
        }
        Format::Text => {
            let mut out = String::new();
            for &s in &cfg.specs {
                let label = match s {
                    Spec::Lambda => format!("Lambda_{n}"),
                    Spec::Jones => format!("J_{n}"),
                    Spec::Ado => format!("Phi_{n}"),
                };
                out.push_str(&format!("{label} = {}\n", value(s, false)));
            }
            if let Some(ms) = r.ms {
                out.push_str(&format!("ms = {ms}\n"));
            }
            out
        }
        Format::Latex => {
            let mut out = String::new();
            for &s in &cfg.specs {
                let label = match s {
                    Spec::Lambda => format!("\\Lambda_{{{n}}}"),
                    Spec::Jones => format!("J_{{{n}}}"),
                    Spec::Ado => format!("\\Phi_{{{n}}}"),
                };
                out.push_str(&format!("{label} = {}\n", value(s, true)));
            }
            out
        }
    }
}
