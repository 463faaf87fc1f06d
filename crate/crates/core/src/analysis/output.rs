//! CSV and JSON writers for sweep results.
//!
//! CSV is long format: one row per grid point, columns
//! `preset,panel,<axes>,<metrics>`. Panels of one preset may sweep different
//! axes; a column a panel does not have is left empty, as are missing values.
//! Leading `#` lines carry the schema version and each panel's resolved
//! configuration.

use std::io::Write;

use serde::Serialize;

use super::SweepResult;
use crate::error::{Error, Result};
use crate::waveguide::CrossSectionMap;

pub const CSV_SCHEMA_VERSION: u32 = 1;

/// 17 significant digits, round-trips every f64.
fn num(v: f64) -> String {
    format!("{v:.16e}")
}

fn union<'a>(names: impl Iterator<Item = &'a str>) -> Vec<&'a str> {
    let mut out: Vec<&str> = Vec::new();
    for n in names {
        if !out.contains(&n) {
            out.push(n);
        }
    }
    out
}

fn writer<W: Write>(w: W) -> csv::Writer<W> {
    csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(w)
}

fn comment_lines<W: Write>(w: &mut W, kind: &str, meta: &[(String, String)]) -> Result<()> {
    writeln!(w, "# polarix {kind} schema={CSV_SCHEMA_VERSION}")?;
    for (k, v) in meta {
        if k.contains('\n') || v.contains('\n') {
            return Err(Error::Output(format!("metadata `{k}` spans lines")));
        }
        writeln!(w, "# {k}: {v}")?;
    }
    Ok(())
}

/// Writes all panels of one preset as a single CSV table.
pub fn write_csv<W: Write>(results: &[SweepResult], meta: &[(String, String)], mut w: W) -> Result<()> {
    if results.is_empty() {
        return Err(Error::Output("nothing to write".into()));
    }
    comment_lines(&mut w, "sweep", meta)?;
    for r in results {
        writeln!(w, "# config[{}]: {}", r.panel, serde_json::to_string(&r.config)?)?;
    }
    let axes = union(results.iter().flat_map(|r| r.axes.iter().map(|a| a.name.as_str())));
    let metrics = union(results.iter().flat_map(|r| r.metrics.iter().map(|m| m.name.as_str())));

    let mut out = writer(w);
    let mut header = vec!["preset", "panel"];
    header.extend(&axes);
    header.extend(&metrics);
    out.write_record(&header)?;

    for r in results {
        let axis_pos: Vec<Option<usize>> = axes.iter().map(|n| r.axes.iter().position(|a| a.name == *n)).collect();
        let metric_pos: Vec<Option<usize>> =
            metrics.iter().map(|n| r.metrics.iter().position(|m| m.name == *n)).collect();
        for flat in 0..r.len() {
            let idx = r.unravel(flat);
            let mut row = vec![r.preset.clone(), r.panel.clone()];
            row.extend(axis_pos.iter().map(|p| p.map(|k| num(r.axes[k].values[idx[k]])).unwrap_or_default()));
            row.extend(
                metric_pos.iter().map(|p| p.and_then(|k| r.metrics[k].values[flat]).map(num).unwrap_or_default()),
            );
            out.write_record(&row)?;
        }
    }
    out.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct JsonDoc<'a> {
    schema_version: u32,
    preset: &'a str,
    metadata: serde_json::Map<String, serde_json::Value>,
    panels: &'a [SweepResult],
}

/// JSON document with every panel, its axes, metrics and configuration.
pub fn write_json<W: Write>(results: &[SweepResult], meta: &[(String, String)], mut w: W) -> Result<()> {
    let preset = results.first().map(|r| r.preset.as_str()).unwrap_or_default();
    let doc = JsonDoc {
        schema_version: CSV_SCHEMA_VERSION,
        preset,
        metadata: meta.iter().map(|(k, v)| (k.clone(), serde_json::Value::String(v.clone()))).collect(),
        panels: results,
    };
    serde_json::to_writer_pretty(&mut w, &doc)?;
    writeln!(w)?;
    Ok(())
}

/// Cross-section polarization map: columns `x,y,eta,chi,amplitude`.
pub fn modes_csv<W: Write>(map: &CrossSectionMap, meta: &[(String, String)], mut w: W) -> Result<()> {
    comment_lines(&mut w, "modes", meta)?;
    writeln!(w, "# phase_diff: {}", num(map.phase_diff))?;
    let mut out = writer(w);
    out.write_record(["x", "y", "eta", "chi", "amplitude"])?;
    for p in &map.points {
        out.write_record([num(p.x), num(p.y), num(p.angles.eta), num(p.angles.chi), num(p.amplitude)])?;
    }
    out.flush()?;
    Ok(())
}
