//! One-parameter sensitivity sweeps around the benchmark configuration.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{human, machine, run_experiment_on, ExperimentConfig, ExperimentSummary};
use crate::error::{Error, Result};
use crate::optimizer::SllsConfig;
use crate::problems::make_problem;

/// Minimal amplitudes crossed with the half-circle count.
pub const LA_MIN_LEVELS: [f64; 3] = [1e-30, 1e-15, 1e-3];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepParam {
    NSnakes,
    Gamma,
    MaxIter,
    VisibleCapacity,
    NHalfCircles,
    NTouchPoints,
    RCl,
}

impl SweepParam {
    pub const ALL: [SweepParam; 7] = [
        SweepParam::NSnakes,
        SweepParam::Gamma,
        SweepParam::MaxIter,
        SweepParam::VisibleCapacity,
        SweepParam::NHalfCircles,
        SweepParam::NTouchPoints,
        SweepParam::RCl,
    ];

    pub fn parse(name: &str) -> Result<Self> {
        let p = match name.to_ascii_lowercase().replace('-', "_").as_str() {
            "n_snakes" | "snakes" => SweepParam::NSnakes,
            "gamma" => SweepParam::Gamma,
            "t" | "max_iter" | "iters" => SweepParam::MaxIter,
            "visible_capacity" | "visible" | "m" => SweepParam::VisibleCapacity,
            "n_half_circles" | "half_circles" => SweepParam::NHalfCircles,
            "n_touch_points" | "touch_points" => SweepParam::NTouchPoints,
            "r_cl" | "rcl" => SweepParam::RCl,
            _ => return Err(Error::UnknownParameter(name.to_string())),
        };
        Ok(p)
    }

    pub fn name(self) -> &'static str {
        match self {
            SweepParam::NSnakes => "n_snakes",
            SweepParam::Gamma => "gamma",
            SweepParam::MaxIter => "T",
            SweepParam::VisibleCapacity => "visible_capacity",
            SweepParam::NHalfCircles => "n_half_circles",
            SweepParam::NTouchPoints => "n_touch_points",
            SweepParam::RCl => "r_cl",
        }
    }

    fn is_integer(self) -> bool {
        !matches!(self, SweepParam::Gamma | SweepParam::RCl)
    }

    fn apply(self, cfg: &mut SllsConfig, v: f64) -> Result<()> {
        if self.is_integer() && !(v >= 1.0 && v.fract() == 0.0 && v < 1e9) {
            return Err(Error::InvalidParameter {
                name: "values",
                reason: format!("{} takes positive integers, got {v}", self.name()),
            });
        }
        let n = v as usize;
        match self {
            SweepParam::NSnakes => cfg.n_snakes = n,
            SweepParam::Gamma => cfg.gamma = v,
            SweepParam::MaxIter => cfg.max_iter = n,
            SweepParam::VisibleCapacity => cfg.visible_capacity = n,
            SweepParam::NHalfCircles => cfg.n_half_circles = n,
            SweepParam::NTouchPoints => cfg.n_touch_points = n,
            SweepParam::RCl => cfg.r_cl = v,
        }
        cfg.validate()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepCell {
    /// Set only for the half-circle sweep.
    pub la_min: Option<f64>,
    pub value: f64,
    pub summary: ExperimentSummary,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepTable {
    pub param: SweepParam,
    pub values: Vec<f64>,
    /// Row blocks, in order; empty unless the half-circle count is swept.
    pub la_min_levels: Vec<f64>,
    pub cells: Vec<SweepCell>,
}

/// Runs one experiment per value of `param`, every other parameter held at
/// the sensitivity baseline. Problem, run count and seed come from `cfg`.
pub fn sweep(cfg: &ExperimentConfig, param: SweepParam, values: &[f64]) -> Result<SweepTable> {
    if values.is_empty() {
        return Err(Error::InvalidParameter {
            name: "values",
            reason: "at least one value is required".into(),
        });
    }
    let problem = make_problem(&cfg.problem, cfg.dim)?;
    let levels: Vec<Option<f64>> = if param == SweepParam::NHalfCircles {
        LA_MIN_LEVELS.iter().copied().map(Some).collect()
    } else {
        vec![None]
    };
    let mut cells = Vec::with_capacity(values.len() * levels.len());
    for la_min in &levels {
        for &v in values {
            let mut slls = SllsConfig {
                seed: cfg.base_seed,
                ..SllsConfig::sensitivity_baseline()
            };
            if let Some(l) = la_min {
                slls.la_min = *l;
            }
            param.apply(&mut slls, v)?;
            let exp = ExperimentConfig {
                slls,
                trace: false,
                ..cfg.clone()
            };
            let (summary, _) = run_experiment_on(&exp, &problem)?;
            cells.push(SweepCell {
                la_min: *la_min,
                value: v,
                summary,
            });
        }
    }
    Ok(SweepTable {
        param,
        values: values.to_vec(),
        la_min_levels: levels.into_iter().flatten().collect(),
        cells,
    })
}

impl SweepTable {
    fn blocks(&self) -> impl Iterator<Item = (Option<f64>, &[SweepCell])> {
        let n = self.values.len();
        self.cells.chunks(n).map(|c| (c[0].la_min, c))
    }

    fn rows(cells: &[SweepCell]) -> [(&'static str, Vec<f64>); 4] {
        let pick = |f: fn(&ExperimentSummary) -> f64| cells.iter().map(|c| f(&c.summary)).collect();
        [
            ("Mean", pick(|s| s.mean)),
            ("Std.", pick(|s| s.std)),
            ("Best", pick(|s| s.best)),
            ("Worst", pick(|s| s.worst)),
        ]
    }

    /// `[la_min,]stat,<v1>,<v2>,...` with rows Mean, Std., Best, Worst, NTM per block.
    pub fn write_csv(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        let mut w = csv::Writer::from_path(path).map_err(|e| Error::csv(path, e))?;
        let crossed = !self.la_min_levels.is_empty();
        let mut header = Vec::new();
        if crossed {
            header.push("la_min".to_string());
        }
        header.push("stat".to_string());
        header.extend(
            self.values
                .iter()
                .map(|v| format!("{}={v}", self.param.name())),
        );
        w.write_record(&header).map_err(|e| Error::csv(path, e))?;
        for (la_min, cells) in self.blocks() {
            let lead = la_min.map(|l| format!("{l:e}"));
            for (label, vals) in Self::rows(cells) {
                let mut row: Vec<String> = lead.iter().cloned().collect();
                row.push(label.to_string());
                row.extend(vals.into_iter().map(machine));
                w.write_record(&row).map_err(|e| Error::csv(path, e))?;
            }
            let mut row: Vec<String> = lead.iter().cloned().collect();
            row.push("NTM".to_string());
            row.extend(cells.iter().map(|c| c.summary.ntm.to_string()));
            w.write_record(&row).map_err(|e| Error::csv(path, e))?;
        }
        w.flush().map_err(|e| Error::io(path, e))
    }

    pub fn format(&self) -> String {
        let width = 13;
        let mut s = String::new();
        let _ = write!(s, "{:<16}", self.param.name());
        for v in &self.values {
            let _ = write!(s, "{:>width$}", v);
        }
        s.push('\n');
        for (la_min, cells) in self.blocks() {
            let tag = la_min.map(|l| format!("{l:e} ")).unwrap_or_default();
            for (label, vals) in Self::rows(cells) {
                let _ = write!(s, "{:<16}", format!("{tag}{label}"));
                for v in vals {
                    let _ = write!(s, "{:>width$}", human(v));
                }
                s.push('\n');
            }
            let _ = write!(s, "{:<16}", format!("{tag}NTM"));
            for c in cells {
                let _ = write!(s, "{:>width$}", c.summary.ntm);
            }
            s.push('\n');
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base() -> ExperimentConfig {
        ExperimentConfig {
            n_runs: 2,
            base_seed: 3,
            ..ExperimentConfig::new("f1", Some(2), SllsConfig::default())
        }
    }

    #[test]
    fn parse_names() {
        for p in SweepParam::ALL {
            assert_eq!(SweepParam::parse(p.name()).unwrap(), p);
        }
        assert!(matches!(
            SweepParam::parse("alpha"),
            Err(Error::UnknownParameter(_))
        ));
    }

    #[test]
    fn single_value_is_one_column() {
        let t = sweep(&base(), SweepParam::NSnakes, &[4.0]).unwrap();
        assert_eq!(t.cells.len(), 1);
        assert_eq!(t.cells[0].summary.ntm, 4 * 500);
        assert_eq!(t.cells[0].summary.config.gamma, 6.0);
    }

    #[test]
    fn half_circles_cross_la_min() {
        let mut cfg = base();
        cfg.n_runs = 1;
        let t = sweep(&cfg, SweepParam::NHalfCircles, &[1.0, 3.0]).unwrap();
        assert_eq!(t.cells.len(), 6);
        assert_eq!(t.cells[5].la_min, Some(1e-3));
        assert_eq!(t.cells[5].summary.config.n_half_circles, 3);
        assert_eq!(t.format().lines().count(), 1 + 3 * 5);
    }

    #[test]
    fn rejects_fractional_counts() {
        assert!(sweep(&base(), SweepParam::VisibleCapacity, &[2.5]).is_err());
        assert!(sweep(&base(), SweepParam::RCl, &[1.5]).is_err());
    }
}
