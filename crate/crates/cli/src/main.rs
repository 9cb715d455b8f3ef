use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Deserialize;

use slls_core::harness::{
    self, export_trace, format_summary, friedman, human, run_experiment_on, sweep, write_json,
    write_runs_csv, write_summary_json, ExperimentConfig, SweepParam,
};
use slls_core::optimizer::SllsConfig;
use slls_core::problems::{catalog, make_problem, oracle::brute_force_clutch, EngineeringId};

#[derive(Parser)]
#[command(name = "slls", version, about = "Snake locomotion swarm optimizer")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every problem in the catalog.
    ListProblems {
        /// Print descriptors as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Solve a problem over several seeded runs.
    Run(RunArgs),
    /// Vary one parameter around the sensitivity baseline.
    Sweep(SweepArgs),
    /// Exhaustive search of a discrete problem.
    Oracle {
        #[arg(long)]
        problem: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Friedman mean ranks of a problems-by-algorithms score table.
    Friedman {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        higher_is_better: bool,
        /// Second table of the same shape used to break ties (lower wins).
        #[arg(long)]
        tie_break: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Every field is optional so a config file can fill the gaps.
#[derive(Args, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RunArgs {
    /// JSON file with any of these options; flags take precedence.
    #[arg(long)]
    #[serde(skip)]
    config: Option<PathBuf>,
    #[arg(long)]
    problem: Option<String>,
    #[arg(long)]
    dim: Option<usize>,
    #[arg(long)]
    snakes: Option<usize>,
    #[arg(long)]
    iters: Option<usize>,
    #[arg(long)]
    gamma: Option<f64>,
    #[arg(long)]
    half_circles: Option<usize>,
    #[arg(long)]
    touch_points: Option<usize>,
    #[arg(long)]
    rcl: Option<f64>,
    #[arg(long)]
    visible: Option<usize>,
    #[arg(long)]
    la_min: Option<f64>,
    #[arg(long)]
    la0: Option<f64>,
    #[arg(long)]
    delta_f: Option<f64>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    runs: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long)]
    trace: Option<PathBuf>,
}

macro_rules! overlay {
    ($dst:ident, $src:ident, $($f:ident),*) => {
        $( if $dst.$f.is_none() { $dst.$f = $src.$f; } )*
    };
}

impl RunArgs {
    /// Fill unset flags from the config file, if any.
    fn merged(mut self) -> Result<Self> {
        let Some(path) = self.config.clone() else {
            return Ok(self);
        };
        let text = std::fs::read_to_string(&path)
            .with_context(|| format!("reading config {}", path.display()))?;
        let file: RunArgs = serde_json::from_str(&text)
            .with_context(|| format!("parsing config {}", path.display()))?;
        overlay!(
            self,
            file,
            problem,
            dim,
            snakes,
            iters,
            gamma,
            half_circles,
            touch_points,
            rcl,
            visible,
            la_min,
            la0,
            delta_f,
            seed,
            runs,
            out,
            csv,
            trace
        );
        Ok(self)
    }

    fn experiment(&self, env_seed: Option<u64>) -> Result<ExperimentConfig> {
        let Some(problem) = self.problem.clone() else {
            bail!("--problem is required (on the command line or in the config file)");
        };
        let d = SllsConfig::default();
        let seed = self.seed.or(env_seed).unwrap_or(d.seed);
        let slls = SllsConfig {
            n_snakes: self.snakes.unwrap_or(d.n_snakes),
            max_iter: self.iters.unwrap_or(d.max_iter),
            gamma: self.gamma.unwrap_or(d.gamma),
            n_half_circles: self.half_circles.unwrap_or(d.n_half_circles),
            n_touch_points: self.touch_points.unwrap_or(d.n_touch_points),
            r_cl: self.rcl.unwrap_or(d.r_cl),
            visible_capacity: self.visible.unwrap_or(d.visible_capacity),
            la_min: self.la_min.unwrap_or(d.la_min),
            la0: self.la0.or(d.la0),
            delta_f: self.delta_f.unwrap_or(d.delta_f),
            seed,
            ..d
        };
        Ok(ExperimentConfig {
            n_runs: self.runs.unwrap_or(30),
            trace: self.trace.is_some(),
            out: self.out.as_ref().map(|p| p.display().to_string()),
            csv: self.csv.as_ref().map(|p| p.display().to_string()),
            trace_path: self.trace.as_ref().map(|p| p.display().to_string()),
            ..ExperimentConfig::new(problem, self.dim, slls)
        })
    }
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(long)]
    problem: String,
    #[arg(long)]
    dim: Option<usize>,
    #[arg(long)]
    param: String,
    #[arg(long, value_delimiter = ',', required = true)]
    values: Vec<f64>,
    #[arg(long, default_value_t = 30)]
    runs: usize,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    out: PathBuf,
}

fn env_seed() -> Result<Option<u64>> {
    match std::env::var("SLLS_SEED") {
        Ok(s) if !s.trim().is_empty() => s
            .trim()
            .parse()
            .map(Some)
            .with_context(|| format!("SLLS_SEED=`{s}` is not an unsigned integer")),
        _ => Ok(None),
    }
}

fn main() -> Result<()> {
    match Cli::parse().command {
        Command::ListProblems { json } => list_problems(json),
        Command::Run(args) => run(args),
        Command::Sweep(args) => run_sweep(args),
        Command::Oracle { problem, out } => oracle(&problem, out.as_deref()),
        Command::Friedman {
            input,
            higher_is_better,
            tie_break,
            out,
        } => rank(
            &input,
            higher_is_better,
            tie_break.as_deref(),
            out.as_deref(),
        ),
    }
}

fn list_problems(json: bool) -> Result<()> {
    let descriptors: Vec<_> = catalog().iter().map(|p| p.descriptor()).collect();
    if json {
        println!("{}", serde_json::to_string_pretty(&descriptors)?);
        return Ok(());
    }
    println!(
        "{:<16} {:<12} {:>4} {:>7} {:>14}  bounds",
        "name", "family", "dim", "g/h", "known best"
    );
    for d in descriptors {
        let same =
            d.lower.windows(2).all(|w| w[0] == w[1]) && d.upper.windows(2).all(|w| w[0] == w[1]);
        let bounds = if same {
            format!("[{}, {}]^{}", d.lower[0], d.upper[0], d.dim)
        } else {
            "per variable".to_string()
        };
        let best = d.known_best.map(human).unwrap_or_else(|| "-".into());
        let gh = format!("{}/{}", d.n_inequality, d.n_equality);
        println!(
            "{:<16} {:<12} {:>4} {:>7} {:>14}  {}{}",
            d.name,
            d.family,
            d.dim,
            gh,
            best,
            bounds,
            if d.maximize { "  (max)" } else { "" }
        );
    }
    Ok(())
}

fn run(args: RunArgs) -> Result<()> {
    let args = args.merged()?;
    let cfg = args.experiment(env_seed()?)?;
    let problem = make_problem(&cfg.problem, cfg.dim)?;
    let (summary, trace) = run_experiment_on(&cfg, &problem)?;
    print!("{}", format_summary(&summary));
    if let Some(path) = &args.out {
        write_summary_json(path, &summary)?;
    }
    if let Some(path) = &args.csv {
        write_runs_csv(path, &summary)?;
    }
    if let (Some(path), Some(trace)) = (&args.trace, trace) {
        let trail = export_trace(&trace, path)?;
        eprintln!(
            "trace written to {} and {}",
            path.display(),
            trail.display()
        );
    }
    Ok(())
}

fn run_sweep(args: SweepArgs) -> Result<()> {
    let param = SweepParam::parse(&args.param)?;
    let seed = args.seed.or(env_seed()?).unwrap_or(0);
    let cfg = ExperimentConfig {
        n_runs: args.runs,
        base_seed: seed,
        ..ExperimentConfig::new(args.problem, args.dim, SllsConfig::sensitivity_baseline())
    };
    let table = sweep(&cfg, param, &args.values)?;
    print!("{}", table.format());
    table.write_csv(&args.out)?;
    Ok(())
}

fn oracle(problem: &str, out: Option<&Path>) -> Result<()> {
    if EngineeringId::parse(problem) != Some(EngineeringId::ClutchBrake) {
        bail!("no exhaustive oracle for `{problem}`; only clutch-brake has a finite design grid");
    }
    let policy = make_problem(problem, None)?.penalty();
    let result = brute_force_clutch(&policy);
    println!(
        "f* = {} at {:?} ({} of {} grid points feasible, {} minimiser(s))",
        human(result.best_f),
        result.best_x,
        result.feasible,
        result.evaluated,
        result.minimizers.len()
    );
    if let Some(path) = out {
        write_json(path, &result)?;
    }
    Ok(())
}

fn rank(
    input: &Path,
    higher_is_better: bool,
    tie_break: Option<&Path>,
    out: Option<&Path>,
) -> Result<()> {
    let table = friedman::read_score_csv(input)?;
    let ranks = match tie_break {
        Some(path) => {
            let secondary = friedman::read_score_csv(path)?;
            harness::friedman_rank_with_tiebreak(
                &table.values,
                &secondary.values,
                !higher_is_better,
            )?
        }
        None => harness::friedman_rank(&table.values, !higher_is_better)?,
    };
    println!("{:<12} {:>10} {:>5}", "algorithm", "mean rank", "rank");
    for ((name, m), o) in table
        .algorithms
        .iter()
        .zip(&ranks.mean_ranks)
        .zip(&ranks.ordinal)
    {
        println!("{name:<12} {m:>10.3} {o:>5}");
    }
    if let Some(path) = out {
        friedman::write_ranks_csv(path, &table.algorithms, &ranks)?;
    }
    Ok(())
}
