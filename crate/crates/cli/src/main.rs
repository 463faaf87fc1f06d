// `!(x > 0.0)` style guards are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod args;
mod commands;
mod config;
mod parse;

use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::Result;
use clap::Parser;

use args::{Cli, Command, PhysicsArgs};
use commands::Ctx;

/// Bad flags, inputs or files; maps to exit code 1.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn thread_count(flag: Option<usize>) -> Result<Option<usize>> {
    let n = match flag {
        Some(n) => Some(n),
        None => match std::env::var("POLARIX_THREADS") {
            Ok(v) if !v.trim().is_empty() => {
                Some(v.trim().parse().map_err(|_| UsageError(format!("POLARIX_THREADS=`{v}` is not a thread count")))?)
            }
            _ => None,
        },
    };
    if n == Some(0) {
        anyhow::bail!(UsageError("thread count must be at least 1".into()));
    }
    Ok(n)
}

fn dispatch(cli: Cli, argv: &[String]) -> Result<()> {
    let file = match &cli.config {
        Some(path) => config::load(path).map_err(|e| UsageError(format!("{e:#}")))?,
        None => PhysicsArgs::default(),
    };
    let mut meta = vec![
        ("polarix_version".to_string(), env!("CARGO_PKG_VERSION").to_string()),
        ("command".to_string(), argv[1..].join(" ")),
    ];
    if cli.stamp {
        let secs = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
        meta.push(("generated_unix".to_string(), secs.to_string()));
    }
    let ctx = Ctx { out_dir: cli.out_dir, format: cli.format, meta, physics: file };
    let run = move || match cli.command {
        Command::Scatter(a) => commands::scatter_cmd(&ctx, a),
        Command::Solve(a) => commands::solve_cmd(&ctx, a),
        Command::Drive(a) => commands::drive_cmd(&ctx, a),
        Command::Poincare(a) => commands::poincare_cmd(&ctx, a),
        Command::Sweep(a) => commands::sweep_cmd(&ctx, a),
        Command::Modes(a) => commands::modes_cmd(&ctx, a),
    };
    match thread_count(cli.threads)? {
        Some(n) => rayon::ThreadPoolBuilder::new().num_threads(n).build()?.install(run),
        None => run(),
    }
}

/// 0 success, 1 usage/input error, 2 physically infeasible request.
fn exit_code(err: &anyhow::Error) -> u8 {
    match err.chain().find_map(|e| e.downcast_ref::<polarix::Error>()) {
        Some(e) if e.is_physics() => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match dispatch(cli, &argv) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
