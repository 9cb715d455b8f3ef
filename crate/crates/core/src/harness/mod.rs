//! Seeded multi-run experiments, sensitivity sweeps, rankings and file export.

pub mod friedman;
pub mod stats;
pub mod sweep;
pub mod trace;

use std::fmt::Write as _;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::optimizer::{nfe_estimate, run, Diagnostics, SllsConfig, Termination, TraceRecord};
use crate::problems::{make_problem, Problem};

pub use friedman::{friedman_rank, friedman_rank_with_tiebreak, FriedmanRanks, ScoreTable};
pub use stats::{describe, Stats};
pub use sweep::{sweep, SweepParam, SweepTable};
pub use trace::export_trace;

/// One experiment: a problem, an optimizer configuration and a number of
/// independent runs. Run `r` is seeded with `base_seed + r`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentConfig {
    pub problem: String,
    pub dim: Option<usize>,
    pub slls: SllsConfig,
    pub n_runs: usize,
    pub base_seed: u64,
    /// Record a full trace of run 0.
    pub trace: bool,
    pub out: Option<String>,
    pub csv: Option<String>,
    pub trace_path: Option<String>,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            problem: "f1".into(),
            dim: None,
            slls: SllsConfig::default(),
            n_runs: 30,
            base_seed: 0,
            trace: false,
            out: None,
            csv: None,
            trace_path: None,
        }
    }
}

impl ExperimentConfig {
    pub fn new(problem: impl Into<String>, dim: Option<usize>, slls: SllsConfig) -> Self {
        Self {
            problem: problem.into(),
            dim,
            base_seed: slls.seed,
            slls,
            ..Self::default()
        }
    }

    pub fn seed_for(&self, run: usize) -> u64 {
        self.base_seed.wrapping_add(run as u64)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_runs == 0 {
            return Err(Error::InvalidParameter {
                name: "n_runs",
                reason: "must be at least 1".into(),
            });
        }
        self.slls.validate()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub run: usize,
    pub seed: u64,
    /// Best value found, as minimised (penalised, negated for maximisation).
    pub f: f64,
    /// Unpenalised objective at the best point, in the problem's own sense.
    pub objective: f64,
    pub feasible: bool,
    pub x: Vec<f64>,
    pub nfe: u64,
    pub ntm: u64,
    pub iterations: usize,
    pub terminated_by: Termination,
    pub diagnostics: Diagnostics,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentSummary {
    pub problem: String,
    pub dim: usize,
    pub maximize: bool,
    pub n_runs: usize,
    pub base_seed: u64,
    pub config: SllsConfig,
    pub mean: f64,
    pub std: f64,
    pub best: f64,
    pub worst: f64,
    pub best_run: usize,
    pub feasible_runs: usize,
    pub nfe_mean: f64,
    pub nfe_estimate: u64,
    /// n_S * T.
    pub ntm: u64,
    pub runs: Vec<RunRecord>,
}

impl ExperimentSummary {
    pub fn stats(&self) -> Stats {
        Stats {
            mean: self.mean,
            std: self.std,
            best: self.best,
            worst: self.worst,
        }
    }

    pub fn best_record(&self) -> &RunRecord {
        &self.runs[self.best_run]
    }
}

pub fn run_experiment(cfg: &ExperimentConfig) -> Result<ExperimentSummary> {
    let problem = make_problem(&cfg.problem, cfg.dim)?;
    run_experiment_on(cfg, &problem).map(|(s, _)| s)
}

/// Runs every seed of `cfg` on `problem`; also returns run 0's trace when `cfg.trace` is set.
pub fn run_experiment_on(
    cfg: &ExperimentConfig,
    problem: &Problem,
) -> Result<(ExperimentSummary, Option<Vec<TraceRecord>>)> {
    cfg.validate()?;
    let outcomes: Vec<Result<(RunRecord, Option<Vec<TraceRecord>>)>> = (0..cfg.n_runs)
        .into_par_iter()
        .map(|r| single_run(cfg, problem, r, cfg.trace && r == 0))
        .collect();

    let mut runs = Vec::with_capacity(cfg.n_runs);
    let mut trace = None;
    let mut failures = Vec::new();
    for (r, outcome) in outcomes.into_iter().enumerate() {
        match outcome {
            Ok((rec, tr)) => {
                if tr.is_some() {
                    trace = tr;
                }
                runs.push(rec);
            }
            Err(e) => failures.push(format!("run {r} (seed {}): {e}", cfg.seed_for(r))),
        }
    }
    if !failures.is_empty() {
        return Err(Error::ExperimentFailed {
            failed: failures.len(),
            total: cfg.n_runs,
            first: failures.swap_remove(0),
        });
    }
    Ok((summarize(cfg, problem, runs), trace))
}

fn single_run(
    cfg: &ExperimentConfig,
    problem: &Problem,
    r: usize,
    traced: bool,
) -> Result<(RunRecord, Option<Vec<TraceRecord>>)> {
    let slls = SllsConfig {
        seed: cfg.seed_for(r),
        ..cfg.slls.clone()
    };
    let mut trace = Vec::new();
    let result = if traced {
        run(&slls, problem, Some(&mut trace))?
    } else {
        run(&slls, problem, None)?
    };
    let f = result.best.value()?;
    let report = problem.report(&result.best.x)?;
    let rec = RunRecord {
        run: r,
        seed: slls.seed,
        f,
        objective: report.objective,
        feasible: report.feasible,
        x: result.best.x,
        nfe: result.nfe,
        ntm: result.ntm,
        iterations: result.iterations_completed,
        terminated_by: result.terminated_by,
        diagnostics: result.diagnostics,
    };
    Ok((rec, traced.then_some(trace)))
}

fn summarize(cfg: &ExperimentConfig, problem: &Problem, runs: Vec<RunRecord>) -> ExperimentSummary {
    let fs: Vec<f64> = runs.iter().map(|r| r.f).collect();
    let s = describe(&fs).expect("at least one run");
    let best_run = fs
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .map(|(i, _)| i)
        .unwrap_or(0);
    let nfe_mean = runs.iter().map(|r| r.nfe as f64).sum::<f64>() / runs.len() as f64;
    ExperimentSummary {
        problem: problem.name().to_string(),
        dim: problem.dim(),
        maximize: problem.maximize(),
        n_runs: runs.len(),
        base_seed: cfg.base_seed,
        config: SllsConfig {
            seed: cfg.base_seed,
            ..cfg.slls.clone()
        },
        mean: s.mean,
        std: s.std,
        best: s.best,
        worst: s.worst,
        best_run,
        feasible_runs: runs.iter().filter(|r| r.feasible).count(),
        nfe_mean,
        nfe_estimate: nfe_estimate(&cfg.slls),
        ntm: (cfg.slls.n_snakes * cfg.slls.max_iter) as u64,
        runs,
    }
}

pub fn write_summary_json(path: impl AsRef<Path>, summary: &ExperimentSummary) -> Result<()> {
    write_json(path, summary)
}

pub fn write_json<T: Serialize + ?Sized>(path: impl AsRef<Path>, value: &T) -> Result<()> {
    let path = path.as_ref();
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    std::fs::write(path, text).map_err(|e| Error::io(path, e))
}

/// One row per run: `run,seed,f,objective,feasible,nfe,ntm,iterations,terminated_by,x_1..x_d`.
pub fn write_runs_csv(path: impl AsRef<Path>, summary: &ExperimentSummary) -> Result<()> {
    let path = path.as_ref();
    let mut w = csv::Writer::from_path(path).map_err(|e| Error::csv(path, e))?;
    let mut header: Vec<String> = [
        "run",
        "seed",
        "f",
        "objective",
        "feasible",
        "nfe",
        "ntm",
        "iterations",
        "terminated_by",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    header.extend((1..=summary.dim).map(|k| format!("x_{k}")));
    w.write_record(&header).map_err(|e| Error::csv(path, e))?;
    for r in &summary.runs {
        let mut row = vec![
            r.run.to_string(),
            r.seed.to_string(),
            machine(r.f),
            machine(r.objective),
            r.feasible.to_string(),
            r.nfe.to_string(),
            r.ntm.to_string(),
            r.iterations.to_string(),
            match r.terminated_by {
                Termination::MaxIterations => "max_iterations".into(),
                Termination::Converged => "converged".into(),
            },
        ];
        row.extend(r.x.iter().map(|&v| machine(v)));
        w.write_record(&row).map_err(|e| Error::csv(path, e))?;
    }
    w.flush().map_err(|e| Error::io(path, e))
}

/// 17 significant digits.
pub fn machine(v: f64) -> String {
    format!("{v:.16e}")
}

/// 6 significant digits, switching to exponent form for very large or small magnitudes.
pub fn human(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let mag = v.abs().log10().floor() as i32;
    if (-3..6).contains(&mag) {
        let decimals = (5 - mag).max(0) as usize;
        format!("{v:.decimals$}")
    } else {
        format!("{v:.5e}")
    }
}

/// Mean / Std. / Best / Worst / NTM block for the terminal.
pub fn format_summary(summary: &ExperimentSummary) -> String {
    let mut s = String::new();
    let sense = if summary.maximize {
        " (negated: maximisation)"
    } else {
        ""
    };
    let _ = writeln!(
        s,
        "{} dim={} runs={} seed={}{}",
        summary.problem, summary.dim, summary.n_runs, summary.base_seed, sense
    );
    for (label, v) in [
        ("Mean", summary.mean),
        ("Std.", summary.std),
        ("Best", summary.best),
        ("Worst", summary.worst),
    ] {
        let _ = writeln!(s, "  {label:<6}{}", human(v));
    }
    let _ = writeln!(s, "  {:<6}{}", "NTM", summary.ntm);
    let _ = writeln!(s, "  {:<6}{}", "NFE", human(summary.nfe_mean));
    let best = summary.best_record();
    let _ = writeln!(
        s,
        "  best run {} objective {} feasible {}",
        best.run,
        human(best.objective),
        best.feasible
    );
    s
}
