//! Library side of the `graphkit` binary, split out so integration tests can
//! drive commands and the bench harness in-process.

pub mod args;
pub mod bench;
pub mod commands;

use std::fs;
use std::io::Write;

use clap::Parser;
use serde_json::{json, Value};

use crate::args::{Cli, Command, Format};
use crate::bench::{run_bench, BenchConfig};
use crate::commands::{execute, Failure, Outcome};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

fn render(cli: &Cli, out: &Outcome) -> String {
    match cli.format {
        Format::Tsv if !cli.report => out.tsv.clone(),
        Format::Tsv => {
            let mut s = format!("command\t{}\ninput_digest\t{}\nwall_ms\t{:.3}\n", out.command, out.input_digest, out.wall_ms);
            for (k, v) in &out.counters {
                s.push_str(&format!("{k}\t{v}\n"));
            }
            s.push_str(&out.tsv);
            s
        }
        Format::Json if !cli.report => to_line(&out.json),
        Format::Json => to_line(&json!({
            "command": out.command,
            "input_digest": out.input_digest,
            "wall_ms": out.wall_ms,
            "counters": out.counters,
            "result": out.json,
        })),
    }
}

fn to_line(v: &Value) -> String {
    let mut s = serde_json::to_string(v).unwrap();
    s.push('\n');
    s
}

/// Runs one invocation, writing results to `stdout` and diagnostics to
/// `stderr`; returns the process exit code.
pub fn run(argv: &[String], stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{text}");
            } else {
                let _ = write!(stdout, "{text}");
            }
            return code;
        }
    };
    if let Some(t) = cli.threads {
        // fails only if a pool already exists (repeated in-process runs)
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t.max(1)).build_global();
    }

    if let Command::Bench(b) = &cli.command {
        let cfg = BenchConfig { sizes: b.sizes.clone(), seeds: b.seeds.clone(), base_seed: b.seed, capacities: b.capacities };
        let outcome = run_bench(&cfg);
        for r in &outcome.reports {
            let _ = write!(stdout, "{}", to_line(&serde_json::to_value(r).unwrap()));
        }
        for c in &outcome.checks {
            let _ = write!(stdout, "{}", to_line(&json!({ "check": c.name, "passed": c.passed, "detail": c.detail })));
        }
        return if outcome.passed() { EXIT_OK } else { EXIT_DOMAIN };
    }

    match execute(&cli.command) {
        Ok(out) => {
            let text = render(&cli, &out);
            match &out.file {
                Some(path) => {
                    if let Err(e) = fs::write(path, text) {
                        let _ = writeln!(stderr, "error: cannot write {}: {e}", path.display());
                        return EXIT_USAGE;
                    }
                }
                None => {
                    let _ = write!(stdout, "{text}");
                }
            }
            EXIT_OK
        }
        Err(Failure::Unreachable) => {
            let _ = writeln!(stdout, "unreachable");
            EXIT_DOMAIN
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_DOMAIN
        }
        Err(Failure::Usage(e)) => {
            let _ = writeln!(stderr, "error: {e:#}");
            EXIT_USAGE
        }
    }
}
