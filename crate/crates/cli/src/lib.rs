//! Command-line front end: table generation, cross-method verification,
//! and enumeration dumps.
//!
//! Exit codes: 0 = success / all checks passed, 1 = an identity check
//! failed, 2 = usage error (bad flags or a guard tripped).

pub mod render;
pub mod report;
pub mod suites;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use gkp_core::poly::verify_transition;
use gkp_core::rational::{binomial, parse_rational};
use gkp_core::triangle::{AffineWeight, GkpSpec, Triangle};

use render::{render_basis_matrix, render_oracle, render_paths, render_transition_report,
             render_triangle, Format};
use suites::{run_suites, SuiteKind, SuiteOptions};

fn parse_weight(s: &str) -> Result<AffineWeight, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(format!(
            "expected c0,c1,c2 (three comma-separated rationals), got {s:?}"
        ));
    }
    let mut coeffs = Vec::with_capacity(3);
    for p in parts {
        coeffs.push(parse_rational(p).map_err(|e| e.to_string())?);
    }
    Ok(AffineWeight::new(
        coeffs[0].clone(),
        coeffs[1].clone(),
        coeffs[2].clone(),
    ))
}

#[derive(Debug, Parser)]
#[command(
    name = "gkp",
    about = "Exact triangular arrays from affine step weights: tables, \
             cross-validation, paths, descent oracles, basis changes",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format (where the command supports more than one).
    #[arg(long, global = true, value_enum, default_value_t = Format::Md)]
    format: Format,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Seed for the randomized verification grids.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    /// Enumeration size guard (paths listings).
    #[arg(long, global = true)]
    limit: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleKind {
    Stirling,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the triangle T(n,k) for a coefficient pair.
    Table {
        /// East weight as c0,c1,c2 for c0 + c1*k + c2*n.
        #[arg(long, value_parser = parse_weight)]
        a: AffineWeight,
        /// North-East weight as c0,c1,c2.
        #[arg(long, value_parser = parse_weight)]
        b: AffineWeight,
        #[arg(long)]
        nmax: usize,
    },
    /// Run cross-method verification suites; exit 0 iff all checks pass.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteKind::All)]
        suite: SuiteKind,
        /// Depth of the triangles under test (per-suite default if omitted).
        #[arg(long)]
        nmax: Option<usize>,
        /// Random coefficient draws per randomized suite.
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Flip one sign inside a closed form to demonstrate the failure
        /// path; a healthy build must then exit 1.
        #[arg(long, hide = true, default_value_t = false)]
        inject_sign_bug: bool,
    },
    /// List every path to (n,k) with rise abscissas and weights.
    Paths {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// East weight; requires --b.
        #[arg(long, value_parser = parse_weight, requires = "b")]
        a: Option<AffineWeight>,
        /// North-East weight; requires --a.
        #[arg(long, value_parser = parse_weight, requires = "a")]
        b: Option<AffineWeight>,
    },
    /// Brute-force descent statistics over Stirling permutations.
    Oracle {
        #[arg(value_enum)]
        kind: OracleKind,
        /// Letter multiplicity (the r in r-Eulerian).
        #[arg(long, visible_alias = "r")]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// The b = 1 triangle as a factorial-basis transition matrix.
    Basis {
        #[arg(long, value_parser = parse_weight)]
        a: AffineWeight,
        #[arg(long)]
        nmax: usize,
        /// Also verify the expansion identity; exit 1 on failure.
        #[arg(long, default_value_t = false)]
        check: bool,
    },
}

fn emit(out: &Option<PathBuf>, content: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => std::fs::write(path, content)?,
        None => print!("{content}"),
    }
    Ok(())
}

fn usage_error(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    2
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => usage_error(&e.to_string()),
    }
}

fn dispatch(cli: Cli) -> anyhow::Result<i32> {
    match cli.command {
        Command::Table { a, b, nmax } => {
            let spec = GkpSpec::new(a, b);
            let t = Triangle::from_recurrence(&spec, nmax);
            emit(&cli.out, &render_triangle(&t, &spec, cli.format))?;
            Ok(0)
        }
        Command::Verify {
            suite,
            nmax,
            trials,
            inject_sign_bug,
        } => {
            let opts = SuiteOptions {
                seed: cli.seed,
                trials,
                n_max: nmax,
                inject_sign_bug,
            };
            let reports = run_suites(suite, &opts);
            let all_pass = reports.iter().all(|r| r.all_pass());
            let text = match cli.format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&reports)?;
                    s.push('\n');
                    s
                }
                _ => {
                    let mut s = String::new();
                    for r in &reports {
                        s.push_str(&r.render_text(10));
                    }
                    s.push_str(if all_pass {
                        "verify: all suites passed\n"
                    } else {
                        "verify: FAILURES above\n"
                    });
                    s
                }
            };
            emit(&cli.out, &text)?;
            Ok(if all_pass { 0 } else { 1 })
        }
        Command::Paths { n, k, a, b } => {
            if n > 20 {
                return Ok(usage_error("paths listing is limited to n <= 20"));
            }
            if k > n {
                return Ok(usage_error(&format!("k = {k} exceeds n = {n}")));
            }
            let limit = cli.limit.unwrap_or(10_000);
            if binomial(n, k) > limit.into() {
                return Ok(usage_error(&format!(
                    "C({n},{k}) exceeds the listing guard of {limit}; raise --limit"
                )));
            }
            let spec = a.map(|a| GkpSpec::new(a, b.expect("clap enforces the pair")));
            emit(&cli.out, &render_paths(n, k, spec.as_ref()))?;
            Ok(0)
        }
        Command::Oracle { kind, m, n } => {
            let OracleKind::Stirling = kind;
            if m < 1 {
                return Ok(usage_error("multiplicity must be at least 1"));
            }
            if m * n > 16 {
                return Ok(usage_error(
                    "brute-force oracle is limited to m*n <= 16 letters",
                ));
            }
            emit(&cli.out, &render_oracle(m, n))?;
            Ok(0)
        }
        Command::Basis { a, nmax, check } => {
            if nmax > 50 {
                return Ok(usage_error("basis matrices are limited to nmax <= 50"));
            }
            let mut text = render_basis_matrix(&a, nmax);
            let mut code = 0;
            if check {
                let report = verify_transition(&a, nmax);
                text.push_str(&render_transition_report(&report));
                if !report.all_pass() {
                    code = 1;
                }
            }
            emit(&cli.out, &text)?;
            Ok(code)
        }
    }
}
