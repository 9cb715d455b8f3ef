//! The swarm driver: initialisation, one iteration of moves, and full runs.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::locomotion::{caterpillar, serpentine};
use crate::memory::{VisibleList, DEFAULT_SELECTION_EPS};
use crate::rng::Rng;
use crate::schedule::{initial_amplitude, Mode, Schedule};
use crate::space::{SearchSpace, Spot};

/// Anything the swarm can minimise.
pub trait Objective: Sync {
    fn name(&self) -> &str;
    fn space(&self) -> &SearchSpace;
    /// Value at `x`. The generator is the run's own stream, for noisy objectives.
    fn evaluate(&self, x: &[f64], rng: &mut Rng) -> Result<f64>;
}

/// Wraps a plain function over a box as an [`Objective`].
pub struct FnObjective<F> {
    name: String,
    space: SearchSpace,
    f: F,
}

impl<F> FnObjective<F>
where
    F: Fn(&[f64]) -> f64 + Sync,
{
    pub fn new(name: impl Into<String>, space: SearchSpace, f: F) -> Self {
        Self {
            name: name.into(),
            space,
            f,
        }
    }
}

impl<F> Objective for FnObjective<F>
where
    F: Fn(&[f64]) -> f64 + Sync,
{
    fn name(&self) -> &str {
        &self.name
    }

    fn space(&self) -> &SearchSpace {
        &self.space
    }

    fn evaluate(&self, x: &[f64], _rng: &mut Rng) -> Result<f64> {
        Ok((self.f)(x))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SllsConfig {
    pub n_snakes: usize,
    pub max_iter: usize,
    pub gamma: f64,
    pub n_half_circles: usize,
    pub n_touch_points: usize,
    pub r_cl: f64,
    pub visible_capacity: usize,
    pub la_min: f64,
    /// Initial amplitude; a fifth of the box diagonal when unset.
    pub la0: Option<f64>,
    /// Stop once the visible list spans less than this. Zero disables the check.
    pub delta_f: f64,
    pub selection_eps: f64,
    pub seed: u64,
}

impl Default for SllsConfig {
    fn default() -> Self {
        Self {
            n_snakes: 20,
            max_iter: 1000,
            gamma: 6.0,
            n_half_circles: 2,
            n_touch_points: 4,
            r_cl: 0.5,
            visible_capacity: 5,
            la_min: 1e-30,
            la0: None,
            delta_f: 0.0,
            selection_eps: DEFAULT_SELECTION_EPS,
            seed: 0,
        }
    }
}

impl SllsConfig {
    /// Baseline used for parameter sensitivity studies: T = 500.
    pub fn sensitivity_baseline() -> Self {
        Self {
            max_iter: 500,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        let positive = |name: &'static str, v: usize| {
            if v == 0 {
                Err(Error::InvalidParameter {
                    name,
                    reason: "must be at least 1".into(),
                })
            } else {
                Ok(())
            }
        };
        positive("n_snakes", self.n_snakes)?;
        positive("max_iter", self.max_iter)?;
        positive("n_half_circles", self.n_half_circles)?;
        positive("n_touch_points", self.n_touch_points)?;
        positive("visible_capacity", self.visible_capacity)?;
        if !(self.r_cl > 0.0 && self.r_cl < 1.0) {
            return Err(Error::InvalidParameter {
                name: "r_cl",
                reason: format!("must lie in (0, 1), got {}", self.r_cl),
            });
        }
        if !(self.delta_f >= 0.0 && self.delta_f.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "delta_f",
                reason: format!("must be non-negative, got {}", self.delta_f),
            });
        }
        if let Some(la0) = self.la0 {
            if !(la0 > 0.0 && la0.is_finite()) {
                return Err(Error::InvalidParameter {
                    name: "la0",
                    reason: format!("must be positive and finite, got {la0}"),
                });
            }
        }
        Ok(())
    }

    pub fn schedule_for(&self, space: &SearchSpace) -> Result<Schedule> {
        let la0 = self
            .la0
            .unwrap_or_else(|| initial_amplitude(space.diagonal()));
        Schedule::new(self.max_iter, self.gamma, la0, self.la_min)
    }
}

/// Expected evaluation budget of a full run, initial swarm included.
pub fn nfe_estimate(cfg: &SllsConfig) -> u64 {
    let base = (cfg.n_snakes * cfg.max_iter) as u64;
    let per_move = if cfg.n_touch_points == 2 * cfg.n_half_circles {
        base * cfg.n_touch_points as u64
    } else {
        let avg = (cfg.n_touch_points + 2 * cfg.n_half_circles) as f64 / 2.0;
        (base as f64 * avg).round() as u64
    };
    per_move + cfg.n_snakes as u64
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostics {
    pub serpentine_moves: u64,
    pub caterpillar_moves: u64,
    /// Serpentine moves abandoned for lack of a usable direction.
    pub degenerate_moves: u64,
    /// Caterpillar moves whose target was the snake's own position.
    pub self_targets: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TraceRecord {
    pub t: usize,
    pub p: f64,
    pub la: f64,
    pub modes: Vec<Mode>,
    /// Touch points of each snake's move, in visiting order.
    pub touch_points: Vec<Vec<Vec<f64>>>,
    pub touch_values: Vec<Vec<f64>>,
    /// Visible-list values after the iteration, best first.
    pub visible: Vec<f64>,
}

pub trait TraceSink {
    fn record(&mut self, record: TraceRecord);
}

impl TraceSink for Vec<TraceRecord> {
    fn record(&mut self, record: TraceRecord) {
        self.push(record);
    }
}

#[derive(Debug, Clone)]
pub struct SwarmState {
    pub positions: Vec<Spot>,
    pub visible: VisibleList,
    pub t: usize,
    pub nfe: u64,
    pub ntm: u64,
    pub rng: Rng,
    pub schedule: Schedule,
    pub diagnostics: Diagnostics,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Termination {
    MaxIterations,
    Converged,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunResult {
    pub best: Spot,
    pub nfe: u64,
    pub ntm: u64,
    pub iterations_completed: usize,
    pub terminated_by: Termination,
    #[serde(skip)]
    pub wall_time: Duration,
    pub diagnostics: Diagnostics,
    /// Best visible value after each completed iteration.
    pub best_history: Vec<f64>,
}

fn evaluate_checked<O: Objective + ?Sized>(problem: &O, x: &[f64], rng: &mut Rng) -> Result<f64> {
    let f = problem.evaluate(x, rng)?;
    if f.is_nan() {
        return Err(Error::NonFiniteObjective {
            problem: problem.name().to_string(),
            x: x.to_vec(),
        });
    }
    Ok(f)
}

fn prepare(space: &SearchSpace, p: &mut [f64]) {
    space.clamp_in_place(p);
    if space.has_discrete() {
        space.snap_in_place(p);
    }
}

pub fn init<O: Objective + ?Sized>(cfg: &SllsConfig, problem: &O) -> Result<SwarmState> {
    cfg.validate()?;
    let space = problem.space();
    let schedule = cfg.schedule_for(space)?;
    let mut rng = Rng::new(cfg.seed);
    let mut visible = VisibleList::with_selection_eps(cfg.visible_capacity, cfg.selection_eps)?;
    let mut positions = Vec::with_capacity(cfg.n_snakes);
    for _ in 0..cfg.n_snakes {
        let mut x = space.sample_uniform(&mut rng);
        prepare(space, &mut x);
        let f = evaluate_checked(problem, &x, &mut rng)?;
        positions.push(Spot::evaluated(x, f));
    }
    visible.seed_initial(positions.iter().cloned())?;
    Ok(SwarmState {
        positions,
        visible,
        t: 1,
        nfe: cfg.n_snakes as u64,
        ntm: 0,
        rng,
        schedule,
        diagnostics: Diagnostics::default(),
    })
}

/// Move every snake once, in index order, updating the visible list as we go.
pub fn step<O: Objective + ?Sized>(
    state: &mut SwarmState,
    cfg: &SllsConfig,
    problem: &O,
    sink: Option<&mut dyn TraceSink>,
) -> Result<()> {
    let space = problem.space();
    let t = state.t as f64;
    let p = state.schedule.learning_efficiency(t);
    let la = state.schedule.amplitude(t);
    let tracing = sink.is_some();
    let mut modes = Vec::with_capacity(if tracing { cfg.n_snakes } else { 0 });
    let mut trace_points = Vec::new();
    let mut trace_values = Vec::new();

    for i in 0..state.positions.len() {
        let mode = state.schedule.choose_mode(t, &mut state.rng);
        let points = match mode {
            Mode::Serpentine => {
                state.diagnostics.serpentine_moves += 1;
                match serpentine(
                    &state.positions[i].x,
                    space,
                    la,
                    cfg.n_half_circles,
                    &mut state.rng,
                ) {
                    Ok(mv) => mv.touch_points,
                    Err(Error::DegenerateMove { .. }) => {
                        state.diagnostics.degenerate_moves += 1;
                        Vec::new()
                    }
                    Err(e) => return Err(e),
                }
            }
            Mode::Caterpillar => {
                state.diagnostics.caterpillar_moves += 1;
                let target = state.visible.select_target(&mut state.rng)?.x.clone();
                if target == state.positions[i].x {
                    state.diagnostics.self_targets += 1;
                }
                caterpillar(&state.positions[i].x, &target, cfg.r_cl, cfg.n_touch_points)?
                    .touch_points
            }
        };

        let mut values = Vec::with_capacity(points.len());
        let mut kept_points = Vec::with_capacity(if tracing { points.len() } else { 0 });
        let mut last = None;
        for mut x in points {
            prepare(space, &mut x);
            let f = evaluate_checked(problem, &x, &mut state.rng)?;
            state.nfe += 1;
            let spot = Spot::evaluated(x, f);
            state.visible.insert(spot.clone())?;
            if tracing {
                values.push(f);
                kept_points.push(spot.x.clone());
            }
            last = Some(spot);
        }
        if let Some(spot) = last {
            state.positions[i] = spot;
        }
        if tracing {
            modes.push(mode);
            trace_points.push(kept_points);
            trace_values.push(values);
        }
    }

    state.ntm += state.positions.len() as u64;
    if let Some(sink) = sink {
        sink.record(TraceRecord {
            t: state.t,
            p,
            la,
            modes,
            touch_points: trace_points,
            touch_values: trace_values,
            visible: state.visible.values().to_vec(),
        });
    }
    state.t += 1;
    Ok(())
}

fn converged(state: &SwarmState, cfg: &SllsConfig) -> bool {
    if cfg.delta_f <= 0.0 {
        return false;
    }
    let v = state.visible.values();
    match (v.first(), v.last()) {
        (Some(best), Some(worst)) => worst - best < cfg.delta_f,
        _ => false,
    }
}

pub fn run<O: Objective + ?Sized>(
    cfg: &SllsConfig,
    problem: &O,
    mut sink: Option<&mut dyn TraceSink>,
) -> Result<RunResult> {
    let started = Instant::now();
    let mut state = init(cfg, problem)?;
    let mut history = Vec::with_capacity(cfg.max_iter);
    let mut terminated_by = Termination::MaxIterations;
    while state.t <= cfg.max_iter {
        let reborrowed: Option<&mut dyn TraceSink> = match sink {
            Some(ref mut s) => Some(&mut **s),
            None => None,
        };
        step(&mut state, cfg, problem, reborrowed)?;
        history.push(state.visible.values()[0]);
        if converged(&state, cfg) {
            terminated_by = Termination::Converged;
            break;
        }
    }
    let best = state.visible.best().cloned().ok_or(Error::EmptyList)?;
    Ok(RunResult {
        best,
        nfe: state.nfe,
        ntm: state.ntm,
        iterations_completed: state.t - 1,
        terminated_by,
        wall_time: started.elapsed(),
        diagnostics: state.diagnostics,
        best_history: history,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problems::make_problem;

    fn sphere2() -> FnObjective<impl Fn(&[f64]) -> f64 + Sync> {
        FnObjective::new(
            "sphere2",
            SearchSpace::uniform(2, -5.0, 5.0).unwrap(),
            |x: &[f64]| x.iter().map(|v| v * v).sum(),
        )
    }

    #[test]
    fn defaults() {
        let c = SllsConfig::default();
        assert_eq!(
            (
                c.n_snakes,
                c.max_iter,
                c.n_half_circles,
                c.n_touch_points,
                c.visible_capacity
            ),
            (20, 1000, 2, 4, 5)
        );
        assert_eq!(
            (c.gamma, c.r_cl, c.la_min, c.delta_f),
            (6.0, 0.5, 1e-30, 0.0)
        );
    }

    #[test]
    fn estimates() {
        let c = SllsConfig::default();
        assert_eq!(nfe_estimate(&c), 80_020);
        let c = SllsConfig {
            max_iter: 15,
            ..SllsConfig::default()
        };
        assert_eq!(nfe_estimate(&c), 1_220);
        let c = SllsConfig {
            n_touch_points: 6,
            ..SllsConfig::default()
        };
        assert_eq!(nfe_estimate(&c), 20 * 1000 * 5 + 20);
    }

    #[test]
    fn init_on_small_box() {
        let p = sphere2();
        let s = init(&SllsConfig::default(), &p).unwrap();
        assert_eq!(s.positions.len(), 20);
        assert_eq!(s.visible.len(), 5);
        assert_eq!((s.nfe, s.t, s.ntm), (20, 1, 0));
        assert!(s.positions.iter().all(|sp| p.space().contains(&sp.x)));

        let few = SllsConfig {
            n_snakes: 3,
            ..SllsConfig::default()
        };
        assert_eq!(init(&few, &p).unwrap().visible.len(), 3);
    }

    #[test]
    fn init_is_deterministic() {
        let p = sphere2();
        let a = init(&SllsConfig::default(), &p).unwrap();
        let b = init(&SllsConfig::default(), &p).unwrap();
        assert_eq!(a.positions, b.positions);
    }

    #[test]
    fn accounting_identity() {
        let p = sphere2();
        let cfg = SllsConfig {
            max_iter: 50,
            n_touch_points: 6,
            seed: 4,
            ..SllsConfig::default()
        };
        let r = run(&cfg, &p, None).unwrap();
        let d = r.diagnostics;
        let tally = (d.serpentine_moves - d.degenerate_moves) * 4 + d.caterpillar_moves * 6 + 20;
        assert_eq!(r.nfe, tally);
        assert_eq!(r.ntm, 20 * 50);
        assert_eq!(r.iterations_completed, 50);
        assert_eq!(r.terminated_by, Termination::MaxIterations);
    }

    #[test]
    fn constant_objective_converges_immediately() {
        let p = FnObjective::new(
            "one",
            SearchSpace::uniform(2, 0.0, 1.0).unwrap(),
            |_: &[f64]| 1.0,
        );
        let cfg = SllsConfig {
            delta_f: 1e-9,
            ..SllsConfig::default()
        };
        let r = run(&cfg, &p, None).unwrap();
        assert_eq!(r.terminated_by, Termination::Converged);
        assert_eq!(r.iterations_completed, 1);
    }

    #[test]
    fn best_history_never_increases() {
        let p = sphere2();
        let cfg = SllsConfig {
            max_iter: 100,
            ..SllsConfig::default()
        };
        let r = run(&cfg, &p, None).unwrap();
        assert!(r.best_history.windows(2).all(|w| w[1] <= w[0]));
        assert_eq!(*r.best_history.last().unwrap(), r.best.f.unwrap());
    }

    #[test]
    fn nan_objective_aborts() {
        let p = FnObjective::new(
            "nan",
            SearchSpace::uniform(1, 0.0, 1.0).unwrap(),
            |_: &[f64]| f64::NAN,
        );
        assert!(matches!(
            run(&SllsConfig::default(), &p, None),
            Err(Error::NonFiniteObjective { .. })
        ));
    }

    #[test]
    fn goldstein_price() {
        let p = make_problem("f18", None).unwrap();
        let r = run(&SllsConfig::default(), &p, None).unwrap();
        assert!((r.best.f.unwrap() - 3.0).abs() < 1e-6, "{:?}", r.best);
    }

    #[test]
    fn trace_has_one_record_per_iteration() {
        let p = sphere2();
        let cfg = SllsConfig {
            max_iter: 7,
            ..SllsConfig::default()
        };
        let mut sink: Vec<TraceRecord> = Vec::new();
        let r = run(&cfg, &p, Some(&mut sink)).unwrap();
        assert_eq!(sink.len(), 7);
        let evaluated: usize = sink
            .iter()
            .flat_map(|rec| rec.touch_values.iter().map(|v| v.len()))
            .sum();
        assert_eq!(evaluated as u64 + 20, r.nfe);
        assert!(sink.iter().all(|rec| rec.modes.len() == 20));
    }

    #[test]
    fn rejects_invalid_config() {
        let p = sphere2();
        let bad = SllsConfig {
            r_cl: 1.5,
            ..SllsConfig::default()
        };
        assert!(init(&bad, &p).is_err());
    }
}
