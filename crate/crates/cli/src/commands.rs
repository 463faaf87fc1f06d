use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use serde::Deserialize;
use serde_json::json;

use crate::args::{
    DriveArgs, Format, ModelArg, ModesArgs, PhysicsArgs, PoincareArgs, ScatterArgs, SolveArgs, SweepArgs,
};
use crate::UsageError;
use polarix::analysis::{
    self, drive_curves, linspace, modes_csv, poincare_trajectory, run_sweep, write_csv, write_json, Axis, Scenario,
    SweepParam, SweepResult, SweepSpec,
};
use polarix::{
    cross_section_map, dissipation_probability, ellipse_angles, fidelity, full_scattering, ideal_scattering_matrix,
    realize_drive, scatter, solve_controls, Alpha, ControlSolution, DriveRealization, GeometryConfig, JonesState,
    StokesVector,
};

/// Settings shared by every subcommand.
#[derive(Clone)]
pub struct Ctx {
    pub out_dir: PathBuf,
    pub format: Format,
    pub meta: Vec<(String, String)>,
    /// Flags merged over the config file.
    pub physics: PhysicsArgs,
}

impl Ctx {
    fn create(&self, name: &str, ext: &str) -> Result<(PathBuf, BufWriter<File>)> {
        fs::create_dir_all(&self.out_dir).with_context(|| format!("creating {}", self.out_dir.display()))?;
        let path = self.out_dir.join(format!("{name}.{ext}"));
        let f = File::create(&path).with_context(|| format!("creating {}", path.display()))?;
        Ok((path, BufWriter::new(f)))
    }

    fn write_results(&self, name: &str, results: &[SweepResult]) -> Result<()> {
        if matches!(self.format, Format::Csv | Format::Both) {
            let (path, mut w) = self.create(name, "csv")?;
            write_csv(results, &self.meta, &mut w)?;
            w.flush()?;
            println!("wrote {}", path.display());
        }
        if matches!(self.format, Format::Json | Format::Both) {
            let (path, mut w) = self.create(name, "json")?;
            write_json(results, &self.meta, &mut w)?;
            w.flush()?;
            println!("wrote {}", path.display());
        }
        Ok(())
    }
}

/// Flushes round-off below the printed precision so `-0.000000000000` never appears.
fn tidy(x: f64) -> f64 {
    if x.abs() < 5e-13 {
        0.0
    } else {
        x
    }
}

fn parse_state(s: &str) -> Result<JonesState> {
    s.parse::<JonesState>().map_err(|e| UsageError(e.to_string()).into())
}

fn normalized_stokes(s: &JonesState) -> StokesVector {
    let n = s.norm_sqr();
    let v = s.stokes();
    if n > 0.0 {
        StokesVector::new(v.s1 / n, v.s2 / n, v.s3 / n)
    } else {
        v
    }
}

pub fn scatter_cmd(ctx: &Ctx, args: ScatterArgs) -> Result<()> {
    let input = parse_state(&args.input)?;
    let target = args.target.as_deref().map(parse_state).transpose()?;
    let mut scenario = Scenario::default();
    args.physics.over(ctx.physics.clone()).apply(&mut scenario);
    let resolved = scenario.resolve()?;
    let matrix = match args.model {
        ModelArg::Ideal => ideal_scattering_matrix(&resolved.emitter, resolved.drive.alpha),
        ModelArg::Full => full_scattering(&resolved.geometry, &resolved.emitter, &resolved.drive)?.matrix,
    };
    let out = scatter(&matrix, &input);
    let stokes = normalized_stokes(&out);
    let angles = ellipse_angles(&stokes);
    let p_dis = dissipation_probability(&out);
    let f = target.map(|t| fidelity(&out, &t));

    if ctx.format == Format::Csv {
        println!("model       {}", if args.model == ModelArg::Ideal { "ideal" } else { "full" });
        println!("alpha       {}", resolved.drive.alpha);
        println!("theta       {:.12} rad ({:.6} deg)", resolved.emitter.theta, resolved.emitter.theta.to_degrees());
        println!("gamma_e     {}", resolved.emitter.gamma_e);
        println!("input       {input}");
        println!("output      {out}");
        println!("stokes      {:.12} {:.12} {:.12}", tidy(stokes.s1), tidy(stokes.s2), tidy(stokes.s3));
        println!("eta         {:.12} rad ({:.6} deg)", angles.eta, angles.eta.to_degrees());
        println!("chi         {:.12} rad ({:.6} deg)", angles.chi, angles.chi.to_degrees());
        if let Some(f) = f {
            println!("fidelity    {f:.15}");
        }
        println!("p_dis       {p_dis:.15e}");
    } else {
        let doc = json!({
            "scenario": scenario,
            "model": if args.model == ModelArg::Ideal { "ideal" } else { "full" },
            "matrix": matrix,
            "input": input,
            "output": out,
            "stokes": stokes,
            "eta": angles.eta,
            "chi": angles.chi,
            "fidelity": f,
            "p_dis": p_dis,
        });
        println!("{}", serde_json::to_string_pretty(&doc)?);
    }
    Ok(())
}

fn describe(sol: &ControlSolution) -> String {
    let alpha = match sol.alpha {
        Alpha::Finite(a) => format!("{:.12}", tidy(a)),
        Alpha::Infinite => "inf".into(),
    };
    format!(
        "branch{}: alpha={alpha} theta={:.12} rad ({:.6} deg) xi_co={:.12}",
        sol.branch,
        sol.theta,
        sol.theta.to_degrees(),
        tidy(sol.xi_co)
    )
}

pub fn solve_cmd(ctx: &Ctx, args: SolveArgs) -> Result<()> {
    let input = parse_state(&args.input)?;
    let target = parse_state(&args.output)?;
    let (b1, b2) = solve_controls(&input, &target)?;
    let drives: Option<Vec<polarix::Result<DriveRealization>>> = match (args.delta_ge, args.delta_es) {
        (Some(ge), Some(es)) => Some([b1, b2].iter().map(|b| realize_drive(b, ge, es)).collect()),
        _ => None,
    };

    if ctx.format == Format::Csv {
        for (i, b) in [b1, b2].iter().enumerate() {
            println!("{}", describe(b));
            if let Some(d) = &drives {
                match &d[i] {
                    Ok(DriveRealization::Finite { omega_rabi, alpha_check }) => {
                        println!("  omega={omega_rabi:.12} (alpha check {alpha_check})")
                    }
                    Ok(DriveRealization::Eit { delta_es }) => {
                        println!("  two-photon resonance: set delta_es={delta_es} with any omega > 0")
                    }
                    Err(e) => println!("  infeasible: {e}"),
                }
            }
        }
    } else {
        let drive_json = drives.as_ref().map(|d| {
            d.iter()
                .map(|r| match r {
                    Ok(v) => serde_json::to_value(v).unwrap_or_default(),
                    Err(e) => json!({ "kind": "infeasible", "error": e.to_string() }),
                })
                .collect::<Vec<_>>()
        });
        let doc = json!({ "input": input, "target": target, "branches": [b1, b2], "drive": drive_json });
        println!("{}", serde_json::to_string_pretty(&doc)?);
    }

    if let Some(d) = drives {
        if d.iter().all(|r| r.is_err()) {
            // Both branches infeasible: report the first as the failure.
            let err = d.into_iter().find_map(|r| r.err()).expect("checked");
            return Err(err.into());
        }
    }
    Ok(())
}

pub fn drive_cmd(ctx: &Ctx, args: DriveArgs) -> Result<()> {
    if args.count < 2 {
        bail!(UsageError(format!("--count must be >= 2, got {}", args.count)));
    }
    match args.alpha {
        None => {
            let results = run_specs(&analysis::preset("figS3")?, ctx)?;
            ctx.write_results("figS3", &results)
        }
        Some(alpha) => {
            let ge = args.delta_ge.unwrap_or_else(|| vec![0.0]);
            let axis = Axis::range(SweepParam::DeltaEs, args.delta_es_min, args.delta_es_max, args.count);
            let r = drive_curves(alpha, &ge, axis)?;
            ctx.write_results("drive", &[r])
        }
    }
}

pub fn poincare_cmd(ctx: &Ctx, args: PoincareArgs) -> Result<()> {
    if args.count < 2 || !(args.alpha_min < args.alpha_max) {
        bail!(UsageError("need --count >= 2 and --alpha-min < --alpha-max".into()));
    }
    let grid = linspace(args.alpha_min, args.alpha_max, args.count);
    let r = poincare_trajectory(args.theta, &grid)?;
    ctx.write_results("poincare", &[r])
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PanelFile {
    #[serde(default)]
    preset: Option<String>,
    panels: Vec<SweepSpec>,
}

fn load_spec_file(path: &Path) -> Result<(String, Vec<SweepSpec>)> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("sweep").to_string();
    let name_of = |p: &str| if p.is_empty() { stem.clone() } else { p.to_string() };
    if let Ok(multi) = toml::from_str::<PanelFile>(&text) {
        let name = name_of(multi.preset.as_deref().unwrap_or(""));
        let panels = multi
            .panels
            .into_iter()
            .enumerate()
            .map(|(i, mut s)| {
                s.preset = name.clone();
                if s.panel.is_empty() {
                    s.panel = format!("panel{}", i + 1);
                }
                s
            })
            .collect();
        return Ok((name, panels));
    }
    let mut spec: SweepSpec =
        toml::from_str(&text).map_err(|e| UsageError(format!("invalid sweep file {}: {e}", path.display())))?;
    let name = name_of(&spec.preset);
    spec.preset = name.clone();
    if spec.panel.is_empty() {
        spec.panel = "custom".into();
    }
    Ok((name, vec![spec]))
}

fn run_specs(specs: &[SweepSpec], ctx: &Ctx) -> Result<Vec<SweepResult>> {
    specs
        .iter()
        .map(|s| {
            let mut s = s.clone();
            ctx.physics.apply(&mut s.scenario);
            run_sweep(&s).with_context(|| format!("panel {}", s.panel))
        })
        .collect()
}

pub fn sweep_cmd(ctx: &Ctx, args: SweepArgs) -> Result<()> {
    let (name, specs) = if analysis::PRESETS.contains(&args.target.as_str()) {
        (args.target.clone(), analysis::preset(&args.target)?)
    } else if Path::new(&args.target).is_file() {
        load_spec_file(Path::new(&args.target))?
    } else {
        bail!(UsageError(format!(
            "unknown preset `{}` and no such file (presets: {})",
            args.target,
            analysis::PRESETS.join(", ")
        )));
    };
    let ctx = Ctx { physics: args.physics.over(ctx.physics.clone()), ..ctx.clone() };
    let results = run_specs(&specs, &ctx)?;
    ctx.write_results(&name, &results)
}

pub fn modes_cmd(ctx: &Ctx, args: ModesArgs) -> Result<()> {
    let mut g = GeometryConfig::ideal();
    if let Some(a) = args.a.or(ctx.physics.a) {
        g.a = a;
    }
    if let Some(b) = args.b.or(ctx.physics.b) {
        g.b = b;
    }
    let map = cross_section_map(&g, args.phase_diff, args.nx, args.ny)?;
    if matches!(ctx.format, Format::Csv | Format::Both) {
        let (path, mut w) = ctx.create("figS1", "csv")?;
        modes_csv(&map, &ctx.meta, &mut w)?;
        w.flush()?;
        println!("wrote {}", path.display());
    }
    if matches!(ctx.format, Format::Json | Format::Both) {
        let (path, mut w) = ctx.create("figS1", "json")?;
        let meta: serde_json::Map<String, serde_json::Value> =
            ctx.meta.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
        serde_json::to_writer_pretty(
            &mut w,
            &json!({ "schema_version": analysis::CSV_SCHEMA_VERSION, "metadata": meta, "a": g.a, "b": g.b, "map": map }),
        )?;
        writeln!(w)?;
        w.flush()?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
