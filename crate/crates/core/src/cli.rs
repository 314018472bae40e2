//! The `fagnano` command line.
//!
//! Exit statuses: 0 success, 1 inadmissible instance (the message names the
//! violated constraint), 2 I/O, parse or usage error, 3 verification gap
//! above tolerance.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::classic::solve_classic;
use crate::gen::{CaseFilter, Generator};
use crate::geom::Tolerances;
use crate::io::{Instance, InstanceFile, SolutionFile};
use crate::oracle::brute_force_min;
use crate::quad::{solve, Quadrangle};
use crate::svg;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_IO: i32 = 2;
pub const EXIT_GAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "fagnano", version, about = "Minimal-perimeter inscribed triangles")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CaseArg {
    Any,
    A,
    B,
    Reduced,
}

impl From<CaseArg> for CaseFilter {
    fn from(c: CaseArg) -> Self {
        match c {
            CaseArg::Any => CaseFilter::Any,
            CaseArg::A => CaseFilter::CaseA,
            CaseArg::B => CaseFilter::CaseB,
            CaseArg::Reduced => CaseFilter::Reduced,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve a triangle or quadrangle instance and write the solution JSON.
    Solve {
        #[arg(short, long)]
        input: PathBuf,
        /// Defaults to standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compare the constructive solution with the brute-force minimum.
    Verify {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long, default_value_t = 64)]
        grid: usize,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
    /// Write seeded random instances as inst_0001.json, inst_0002.json, ...
    Gen {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        count: usize,
        #[arg(long = "case", value_enum, default_value_t = CaseArg::Any)]
        case: CaseArg,
        #[arg(long)]
        out: PathBuf,
    },
    /// Draw an instance and its solution as SVG.
    Render {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        solution: PathBuf,
        #[arg(short, long, visible_alias = "out")]
        output: PathBuf,
    },
    /// Time the solver and the oracle on random instances.
    Bench {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 64)]
        grid: usize,
    },
}

/// A failed command: exit status plus message.
#[derive(Debug)]
struct Failure(i32, String);

type CmdResult = Result<(), Failure>;

fn io_fail(path: &Path, e: impl std::fmt::Display) -> Failure {
    Failure(EXIT_IO, format!("{}: {e}", path.display()))
}

fn read_instance(path: &Path) -> Result<InstanceFile, Failure> {
    let text = fs::read_to_string(path).map_err(|e| io_fail(path, e))?;
    InstanceFile::from_json(&text).map_err(|e| io_fail(path, e))
}

fn load(path: &Path) -> Result<Instance, Failure> {
    read_instance(path)?
        .to_instance(&Tolerances::DEFAULT)
        .map_err(|e| Failure(if e.is_validation() { EXIT_INVALID } else { EXIT_IO }, e.to_string()))
}

fn solution_for(instance: &Instance) -> Result<SolutionFile, Failure> {
    match instance {
        Instance::Quadrangle(q) => solve(q).map(|s| SolutionFile::from(&s)),
        Instance::Triangle([a, b, c]) => {
            solve_classic(*a, *b, *c, &Tolerances::DEFAULT).map(|s| SolutionFile::from(&s))
        }
    }
    .map_err(|e| Failure(EXIT_INVALID, e.to_string()))
}

fn write_file(path: &Path, contents: &str) -> CmdResult {
    fs::write(path, contents).map_err(|e| io_fail(path, e))
}

fn cmd_solve(input: &Path, output: Option<&Path>, out: &mut dyn Write) -> CmdResult {
    let file = solution_for(&load(input)?)?;
    match output {
        Some(path) => {
            write_file(path, &file.to_json())?;
            let _ = writeln!(out, "{}: perimeter {} (bound {})", file.case, file.perimeter, file.upper_bound);
        }
        None => {
            let _ = out.write_all(file.to_json().as_bytes());
        }
    }
    Ok(())
}

fn cmd_verify(input: &Path, grid: usize, tol: f64, out: &mut dyn Write) -> CmdResult {
    if grid < 8 {
        return Err(Failure(EXIT_IO, format!("--grid must be at least 8, got {grid}")));
    }
    if !(tol.is_finite() && tol >= 0.0) {
        return Err(Failure(EXIT_IO, format!("--tol must be a non-negative number, got {tol}")));
    }
    let q = match load(input)? {
        Instance::Quadrangle(q) => q,
        Instance::Triangle(_) => return Err(Failure(EXIT_IO, "verify needs a quadrangle instance".into())),
    };
    let sol = solve(&q).map_err(|e| Failure(EXIT_INVALID, e.to_string()))?;
    let oracle = brute_force_min(&q, grid);
    let gap = (sol.perimeter - oracle.min_perimeter).abs() / (1.0 + oracle.min_perimeter);
    let _ = writeln!(out, "case:          {}", sol.case);
    let _ = writeln!(out, "constructive:  {:.17e}", sol.perimeter);
    let _ = writeln!(
        out,
        "oracle:        {:.17e} (grid {grid}, {} rounds, converged {})",
        oracle.min_perimeter, oracle.refine_iters, oracle.converged
    );
    let _ = writeln!(out, "relative gap:  {gap:.3e} (tol {tol:e})");
    if gap <= tol {
        Ok(())
    } else {
        Err(Failure(EXIT_GAP, format!("verification failed: gap {gap:e} exceeds tolerance {tol:e}")))
    }
}

fn cmd_gen(seed: u64, count: usize, case: CaseArg, dir: &Path, out: &mut dyn Write) -> CmdResult {
    if count == 0 {
        return Err(Failure(EXIT_IO, "--count must be at least 1".into()));
    }
    fs::create_dir_all(dir).map_err(|e| io_fail(dir, e))?;
    let mut generator = Generator::new(seed, case.into(), 10.0);
    for i in 1..=count {
        let q = generator.next_instance().map_err(|e| Failure(EXIT_INVALID, e.to_string()))?;
        let path = dir.join(format!("inst_{i:04}.json"));
        write_file(&path, &InstanceFile::from_quadrangle(&q).to_json())?;
    }
    let _ = writeln!(out, "wrote {count} instances to {}", dir.display());
    Ok(())
}

fn cmd_render(input: &Path, solution: &Path, output: &Path) -> CmdResult {
    let host = read_instance(input)?.points().map_err(|e| io_fail(input, e))?;
    let text = fs::read_to_string(solution).map_err(|e| io_fail(solution, e))?;
    let sol = SolutionFile::from_json(&text).map_err(|e| io_fail(solution, e))?;
    if sol.vertices.len() != 3 {
        return Err(io_fail(solution, format!("expected 3 vertices, found {}", sol.vertices.len())));
    }
    write_file(output, &svg::render(&host, &sol))
}

fn cmd_bench(seed: u64, count: usize, grid: usize, out: &mut dyn Write) -> CmdResult {
    if grid < 8 || count == 0 {
        return Err(Failure(EXIT_IO, "--grid must be at least 8 and --count at least 1".into()));
    }
    let instances: Vec<Quadrangle> = Generator::new(seed, CaseFilter::Any, 10.0)
        .take(count)
        .collect::<Result<_, _>>()
        .map_err(|e| Failure(EXIT_INVALID, e.to_string()))?;
    let start = Instant::now();
    let mut worst_gap = 0.0f64;
    let mut solutions = Vec::with_capacity(count);
    for q in &instances {
        solutions.push(solve(q).map_err(|e| Failure(EXIT_INVALID, e.to_string()))?);
    }
    let solve_time = start.elapsed();
    let start = Instant::now();
    for (q, s) in instances.iter().zip(&solutions) {
        let o = brute_force_min(q, grid);
        worst_gap = worst_gap.max((s.perimeter - o.min_perimeter).abs() / (1.0 + o.min_perimeter));
    }
    let oracle_time = start.elapsed();
    let per = |d: std::time::Duration| d.as_secs_f64() * 1e6 / count as f64;
    let _ = writeln!(out, "instances:        {count}");
    let _ = writeln!(out, "solve:            {:.2} us/instance", per(solve_time));
    let _ = writeln!(out, "oracle (grid {grid}): {:.2} us/instance", per(oracle_time));
    let _ = writeln!(out, "worst gap:        {worst_gap:.3e}");
    Ok(())
}

/// Runs a parsed command and returns its exit status.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match &cli.command {
        Command::Solve { input, output } => cmd_solve(input, output.as_deref(), out),
        Command::Verify { input, grid, tol } => cmd_verify(input, *grid, *tol, out),
        Command::Gen { seed, count, case, out: dir } => cmd_gen(*seed, *count, *case, dir, out),
        Command::Render { input, solution, output } => cmd_render(input, solution, output),
        Command::Bench { seed, count, grid } => cmd_bench(*seed, *count, *grid, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}
