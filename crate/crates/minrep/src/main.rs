use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use minrep::config::{AlgebraName, CommandKind, FamilyName, Format, RankRange, RunConfig};
use minrep::report::{emit_report, output_path, OUT_DIR_VAR};
use minrep::RunError;

#[derive(Parser, Debug)]
#[command(name = "minrep", version, about = "Exact verification suites for minimal representations, oscillator realizations and dual pairs")]
struct Cli {
    #[command(subcommand)]
    command: Option<Cmd>,
    /// TOML file with any RunConfig keys; flags override it.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Shorthand for --format json.
    #[arg(long, global = true)]
    json: bool,
    /// Byte-stable output: no timings.
    #[arg(long, global = true)]
    stable: bool,
    /// Report file; relative paths are resolved against $MINREP_OUT_DIR.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Largest truncated Fock basis a command may build.
    #[arg(long, global = true)]
    cap: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Minimal-orbit dimension table for all simple types.
    Table1 {
        #[arg(long)]
        a: Option<RankRange>,
        #[arg(long)]
        b: Option<RankRange>,
        #[arg(long)]
        c: Option<RankRange>,
        #[arg(long)]
        d: Option<RankRange>,
    },
    /// Chevalley-Serre and structure relations of an oscillator realization.
    CheckRelations {
        #[arg(long, value_enum)]
        algebra: Option<AlgebraName>,
        #[arg(long)]
        n: Option<u16>,
        /// Also run the quadratic Casimir comparison (so-star, n <= 2).
        #[arg(long)]
        casimir: bool,
        /// Fock cutoff for the matrix image of the nilpotent-cone relation.
        #[arg(long)]
        cutoff: Option<u32>,
    },
    /// Mutual commutants so*(4n) x sp(2) and u(2,2) x u(1).
    CheckDualPair {
        #[arg(long)]
        n: Option<u16>,
    },
    /// Bilocal commutator formula, Frobenius property and commutant types.
    CheckBilocal {
        #[arg(long = "L")]
        l: Option<usize>,
        #[arg(long)]
        trials: Option<u32>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Lowest-weight decomposition of the truncated Fock space.
    Decompose {
        #[arg(long, value_enum)]
        algebra: Option<AlgebraName>,
        #[arg(long)]
        n: Option<u16>,
        #[arg(long)]
        level: Option<u32>,
    },
    /// Harmonic polynomials and the compactification map.
    Harmonics {
        #[arg(long)]
        nmax: Option<u32>,
        #[arg(long)]
        points: Option<u32>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Differential-operator realization of the massless representation.
    Massless {
        #[arg(long)]
        degree: Option<u32>,
        #[arg(long)]
        helicity_max: Option<u32>,
    },
    /// Closure of truncated flavor bilinears with central charge N.
    Closure {
        #[arg(long, value_enum)]
        family: Option<FamilyName>,
        /// Truncated modes K.
        #[arg(long = "K")]
        modes: Option<u16>,
        /// Flavors N.
        #[arg(long = "N")]
        flavors: Option<u16>,
        #[arg(long)]
        level: Option<u32>,
    },
}

fn set<T>(slot: &mut T, v: Option<T>) {
    if let Some(v) = v {
        *slot = v;
    }
}

fn resolve(cli: Cli) -> Result<RunConfig, RunError> {
    let mut cfg = match &cli.config {
        Some(p) => RunConfig::from_file(p)?,
        None => RunConfig::default(),
    };
    set(&mut cfg.format, cli.format);
    if cli.json {
        cfg.format = Format::Json;
    }
    cfg.stable |= cli.stable;
    if cli.output.is_some() {
        cfg.output = cli.output;
    }
    set(&mut cfg.cap, cli.cap);
    let kind = match cli.command {
        None => None,
        Some(Cmd::Table1 { a, b, c, d }) => {
            set(&mut cfg.a_range, a);
            set(&mut cfg.b_range, b);
            set(&mut cfg.c_range, c);
            set(&mut cfg.d_range, d);
            Some(CommandKind::Table1)
        }
        Some(Cmd::CheckRelations { algebra, n, casimir, cutoff }) => {
            set(&mut cfg.algebra, algebra);
            set(&mut cfg.n, n);
            cfg.casimir |= casimir;
            set(&mut cfg.cutoff, cutoff);
            Some(CommandKind::CheckRelations)
        }
        Some(Cmd::CheckDualPair { n }) => {
            set(&mut cfg.n, n);
            Some(CommandKind::CheckDualPair)
        }
        Some(Cmd::CheckBilocal { l, trials, seed }) => {
            set(&mut cfg.l, l);
            set(&mut cfg.trials, trials);
            set(&mut cfg.seed, seed);
            Some(CommandKind::CheckBilocal)
        }
        Some(Cmd::Decompose { algebra, n, level }) => {
            set(&mut cfg.algebra, algebra);
            set(&mut cfg.n, n);
            set(&mut cfg.level, level);
            Some(CommandKind::Decompose)
        }
        Some(Cmd::Harmonics { nmax, points, seed }) => {
            set(&mut cfg.nmax, nmax);
            set(&mut cfg.points, points);
            set(&mut cfg.seed, seed);
            Some(CommandKind::Harmonics)
        }
        Some(Cmd::Massless { degree, helicity_max }) => {
            set(&mut cfg.degree, degree);
            set(&mut cfg.helicity_max, helicity_max);
            Some(CommandKind::Massless)
        }
        Some(Cmd::Closure { family, modes, flavors, level }) => {
            set(&mut cfg.family, family);
            set(&mut cfg.modes, modes);
            set(&mut cfg.flavors, flavors);
            set(&mut cfg.closure_level, level);
            Some(CommandKind::Closure)
        }
    };
    if kind.is_some() {
        cfg.command = kind;
    }
    Ok(cfg)
}

fn execute(cli: Cli) -> Result<bool, RunError> {
    let cfg = resolve(cli)?;
    let report = minrep::run(&cfg)?;
    let out_dir = std::env::var_os(OUT_DIR_VAR).map(PathBuf::from);
    let path = output_path(cfg.output.as_deref(), out_dir.as_deref(), &report.command, cfg.format);
    emit_report(&report, cfg.format, path.as_deref())?;
    if !report.passed() {
        for r in report.failures() {
            eprintln!("FAIL {}: {}", r.id, r.defect.as_deref().unwrap_or("expected failure did not occur"));
        }
    }
    Ok(report.passed())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match std::panic::catch_unwind(|| execute(cli)) {
        Ok(Ok(true)) => ExitCode::SUCCESS,
        Ok(Ok(false)) => ExitCode::from(1),
        Ok(Err(e)) => {
            eprintln!("minrep: {}", e);
            ExitCode::from(e.exit_code() as u8)
        }
        Err(_) => {
            eprintln!("minrep: internal error (panic)");
            ExitCode::from(3)
        }
    }
}
