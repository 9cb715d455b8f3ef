//! Problem catalog: classic benchmarks, composite functions and constrained
//! engineering designs behind one `Problem` type.

pub mod benchmarks;
pub mod composition;
pub mod engineering;
pub mod oracle;
pub mod penalty;

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::optimizer::Objective;
use crate::rng::Rng;
use crate::space::SearchSpace;

pub use benchmarks::BenchmarkId;
pub use composition::{Composition, CompositionId};
pub use engineering::{DesignEval, EngineeringId};
pub use oracle::{brute_force_clutch, ClutchOracle};
pub use penalty::{penalize, ConstraintValue, PenaltyPolicy, Relation};

#[derive(Debug, Clone)]
enum Kind {
    Benchmark(BenchmarkId),
    Composition(Arc<Composition>),
    Engineering(EngineeringId),
}

#[derive(Debug, Clone)]
pub struct Problem {
    name: String,
    space: SearchSpace,
    kind: Kind,
    known_best: Option<f64>,
    penalty: PenaltyPolicy,
    noise: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProblemDescriptor {
    pub name: String,
    pub family: String,
    pub dim: usize,
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
    pub discrete_dims: Vec<usize>,
    pub n_inequality: usize,
    pub n_equality: usize,
    pub known_best: Option<f64>,
    pub maximize: bool,
}

/// Evaluation of a point with everything a report needs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointReport {
    pub x: Vec<f64>,
    pub objective: f64,
    pub penalized: f64,
    pub constraints: Vec<ConstraintValue>,
    pub feasible: bool,
}

pub fn make_benchmark(id: BenchmarkId, dim: usize) -> Result<Problem> {
    let spec = id.spec();
    if dim == 0 || (spec.fixed_dim && dim != spec.default_dim) {
        return Err(Error::InvalidDimension {
            problem: spec.name.to_string(),
            dim,
        });
    }
    let known_best = spec.known_best.map(|k| match k {
        benchmarks::KnownBest::Value(v) => v,
        benchmarks::KnownBest::PerDim(v) => v * dim as f64,
    });
    Ok(Problem {
        name: spec.name.to_string(),
        space: SearchSpace::uniform(dim, spec.lower, spec.upper)?,
        kind: Kind::Benchmark(id),
        known_best,
        penalty: PenaltyPolicy::default(),
        noise: id == BenchmarkId::F7,
    })
}

pub fn make_composition(id: CompositionId) -> Result<Problem> {
    Ok(Problem {
        name: id.name().to_string(),
        space: SearchSpace::uniform(
            composition::COMPOSITION_DIM,
            -composition::COMPOSITION_BOUND,
            composition::COMPOSITION_BOUND,
        )?,
        kind: Kind::Composition(Arc::new(Composition::new(id))),
        known_best: Some(0.0),
        penalty: PenaltyPolicy::default(),
        noise: false,
    })
}

pub fn make_engineering(id: EngineeringId) -> Result<Problem> {
    let (lo, hi) = id.bounds();
    let mut space = SearchSpace::new(lo, hi)?;
    match id {
        EngineeringId::ClutchBrake => {
            space = space
                .with_integers(0, 60, 80)?
                .with_integers(1, 90, 110)?
                .with_discrete(2, vec![1.0, 1.5, 2.0, 2.5, 3.0])?
                .with_discrete(3, (0..=40).map(|k| 600.0 + 10.0 * k as f64).collect())?
                .with_integers(4, 2, 9)?;
        }
        EngineeringId::RollingBearing => {
            space = space.with_integers(2, 4, 50)?;
        }
        _ => {}
    }
    Ok(Problem {
        name: id.name().to_string(),
        space,
        kind: Kind::Engineering(id),
        known_best: None,
        penalty: PenaltyPolicy::default(),
        noise: false,
    })
}

/// Build a problem by catalog name. `dim` only matters for scalable functions.
pub fn make_problem(name: &str, dim: Option<usize>) -> Result<Problem> {
    if let Some(id) = BenchmarkId::parse(name) {
        let d = dim.unwrap_or(id.spec().default_dim);
        return make_benchmark(id, d);
    }
    let fixed = |problem: &str, canonical: usize| match dim {
        Some(d) if d != canonical => Err(Error::InvalidDimension {
            problem: problem.to_string(),
            dim: d,
        }),
        _ => Ok(()),
    };
    if let Some(id) = CompositionId::parse(name) {
        fixed(id.name(), composition::COMPOSITION_DIM)?;
        return make_composition(id);
    }
    if let Some(id) = EngineeringId::parse(name) {
        fixed(id.name(), id.bounds().0.len())?;
        return make_engineering(id);
    }
    Err(Error::UnknownProblem(name.to_string()))
}

/// Every problem in the catalog at its default dimension.
pub fn catalog() -> Vec<Problem> {
    let mut out: Vec<Problem> = BenchmarkId::ALL
        .into_iter()
        .map(|id| make_benchmark(id, id.spec().default_dim).expect("default dims are valid"))
        .collect();
    out.extend(
        CompositionId::ALL
            .into_iter()
            .map(|id| make_composition(id).expect("composition construction")),
    );
    out.extend(
        EngineeringId::ALL
            .into_iter()
            .map(|id| make_engineering(id).expect("engineering construction")),
    );
    out
}

impl Problem {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn space(&self) -> &SearchSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn known_best(&self) -> Option<f64> {
        self.known_best
    }

    pub fn maximize(&self) -> bool {
        matches!(self.kind, Kind::Engineering(id) if id.maximize())
    }

    pub fn is_constrained(&self) -> bool {
        matches!(self.kind, Kind::Engineering(_))
    }

    pub fn penalty(&self) -> PenaltyPolicy {
        self.penalty
    }

    pub fn with_penalty(mut self, policy: PenaltyPolicy) -> Self {
        self.penalty = policy;
        self
    }

    /// Disable the additive noise term (only F7 has one).
    pub fn without_noise(mut self) -> Self {
        self.noise = false;
        self
    }

    pub fn has_noise(&self) -> bool {
        self.noise
    }

    pub fn engineering_id(&self) -> Option<EngineeringId> {
        match self.kind {
            Kind::Engineering(id) => Some(id),
            _ => None,
        }
    }

    pub fn composition(&self) -> Option<&Composition> {
        match &self.kind {
            Kind::Composition(c) => Some(c),
            _ => None,
        }
    }

    pub fn variable_names(&self) -> Vec<String> {
        match self.kind {
            Kind::Engineering(id) => id.variable_names().iter().map(|s| s.to_string()).collect(),
            _ => (1..=self.dim()).map(|i| format!("x_{i}")).collect(),
        }
    }

    fn check_dim(&self, x: &[f64]) -> Result<()> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: x.len(),
            });
        }
        Ok(())
    }

    fn snapped(&self, x: &[f64]) -> Result<Vec<f64>> {
        self.check_dim(x)?;
        if self.space.has_discrete() {
            self.space.snap(x)
        } else {
            Ok(x.to_vec())
        }
    }

    fn design(&self, x: &[f64]) -> Option<DesignEval> {
        match self.kind {
            Kind::Engineering(id) => Some(id.eval(x)),
            _ => None,
        }
    }

    /// Objective in its natural sense at the snapped point, without noise
    /// or penalty.
    pub fn raw_objective(&self, x: &[f64]) -> Result<f64> {
        let x = self.snapped(x)?;
        let v = match &self.kind {
            Kind::Benchmark(id) => id.eval(&x),
            Kind::Composition(c) => c.eval(&x),
            Kind::Engineering(id) => id.eval(&x).objective,
        };
        Ok(v)
    }

    /// Constraint values at the snapped point; empty for unconstrained problems.
    pub fn constraints(&self, x: &[f64]) -> Result<Vec<ConstraintValue>> {
        let x = self.snapped(x)?;
        Ok(self.design(&x).map(|d| d.constraints).unwrap_or_default())
    }

    pub fn is_feasible(&self, x: &[f64]) -> Result<bool> {
        let x = self.snapped(x)?;
        Ok(match self.design(&x) {
            Some(d) => {
                d.extra_violation == 0.0 && d.constraints.iter().all(|c| c.satisfied(&self.penalty))
            }
            None => true,
        })
    }

    /// The scalar actually minimised: penalised, and negated for maximisation.
    pub fn evaluate(&self, x: &[f64], rng: &mut Rng) -> Result<f64> {
        let xs = self.snapped(x)?;
        let v = match &self.kind {
            Kind::Benchmark(id) => {
                let base = id.eval(&xs);
                if self.noise {
                    base + rng.uniform()
                } else {
                    base
                }
            }
            Kind::Composition(c) => c.eval(&xs),
            Kind::Engineering(id) => {
                let d = id.eval(&xs);
                let sign = if id.maximize() { -1.0 } else { 1.0 };
                penalty::penalize_constraints(
                    sign * d.objective,
                    &d.constraints,
                    d.extra_violation,
                    &self.penalty,
                )
            }
        };
        if v.is_nan() {
            return Err(Error::NonFiniteObjective {
                problem: self.name.clone(),
                x: xs,
            });
        }
        Ok(v)
    }

    /// Noise-free penalised value plus constraint detail, for reports.
    pub fn report(&self, x: &[f64]) -> Result<PointReport> {
        let xs = self.snapped(x)?;
        let objective = self.raw_objective(&xs)?;
        let constraints = self.constraints(&xs)?;
        let feasible = self.is_feasible(&xs)?;
        let penalized = match self.design(&xs) {
            Some(d) => {
                let sign = if self.maximize() { -1.0 } else { 1.0 };
                penalty::penalize_constraints(
                    sign * d.objective,
                    &d.constraints,
                    d.extra_violation,
                    &self.penalty,
                )
            }
            None => objective,
        };
        Ok(PointReport {
            x: xs,
            objective,
            penalized,
            constraints,
            feasible,
        })
    }

    pub fn descriptor(&self) -> ProblemDescriptor {
        let family = match self.kind {
            Kind::Benchmark(_) => "benchmark",
            Kind::Composition(_) => "composition",
            Kind::Engineering(_) => "engineering",
        };
        let (n_ineq, n_eq) = match self.kind {
            Kind::Engineering(id) => {
                let mid: Vec<f64> = self
                    .space
                    .lower()
                    .iter()
                    .zip(self.space.upper())
                    .map(|(l, u)| 0.5 * (l + u))
                    .collect();
                let cs = id.eval(&mid).constraints;
                let eq = cs.iter().filter(|c| c.is_equality()).count();
                (cs.len() - eq, eq)
            }
            _ => (0, 0),
        };
        ProblemDescriptor {
            name: self.name.clone(),
            family: family.to_string(),
            dim: self.dim(),
            lower: self.space.lower().to_vec(),
            upper: self.space.upper().to_vec(),
            discrete_dims: (0..self.dim())
                .filter(|&k| !self.space.discrete_set(k).is_empty())
                .collect(),
            n_inequality: n_ineq,
            n_equality: n_eq,
            known_best: self.known_best,
            maximize: self.maximize(),
        }
    }
}

impl Objective for Problem {
    fn name(&self) -> &str {
        &self.name
    }

    fn space(&self) -> &SearchSpace {
        &self.space
    }

    fn evaluate(&self, x: &[f64], rng: &mut Rng) -> Result<f64> {
        Problem::evaluate(self, x, rng)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_names_are_unique() {
        let names: Vec<String> = catalog().iter().map(|p| p.name().to_string()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), names.len());
        assert_eq!(names.len(), 24 + 6 + 7);
    }

    #[test]
    fn fixed_dimension_rejected() {
        assert!(matches!(
            make_problem("f16", Some(3)),
            Err(Error::InvalidDimension { .. })
        ));
        assert!(make_problem("cf1", Some(30)).is_err());
        assert!(make_problem("f1", Some(0)).is_err());
        assert!(matches!(
            make_problem("nope", None),
            Err(Error::UnknownProblem(_))
        ));
    }

    #[test]
    fn known_best_values() {
        assert_eq!(make_problem("f1", None).unwrap().known_best(), Some(0.0));
        let f8 = make_problem("f8", Some(30)).unwrap();
        assert!((f8.known_best().unwrap() - -12569.487).abs() < 1e-3);
        assert_eq!(
            make_problem("f16", None).unwrap().known_best(),
            Some(-1.0316285)
        );
    }

    #[test]
    fn f7_noise_hook() {
        let p = make_problem("f7", None).unwrap();
        let mut rng = Rng::new(3);
        let noisy = p.evaluate(&[0.0; 30], &mut rng).unwrap();
        assert!((0.0..1.0).contains(&noisy));
        let quiet = p.without_noise();
        assert_eq!(quiet.evaluate(&[0.0; 30], &mut rng).unwrap(), 0.0);
    }

    #[test]
    fn clutch_snaps_before_evaluation() {
        let p = make_problem("clutch_brake", None).unwrap();
        let mut rng = Rng::new(0);
        let a = p
            .evaluate(&[70.2, 89.9, 1.2, 812.0, 3.4], &mut rng)
            .unwrap();
        let b = p
            .evaluate(&[70.0, 90.0, 1.0, 810.0, 3.0], &mut rng)
            .unwrap();
        assert_eq!(a, b);
        let snapped = p.space().snap(&[70.0, 90.0, 1.3, 810.0, 3.0]).unwrap();
        assert_eq!(snapped[2], 1.5);
        let tie = p.space().snap(&[70.0, 90.0, 1.25, 810.0, 3.0]).unwrap();
        assert_eq!(tie[2], 1.0);
    }

    #[test]
    fn bearing_is_maximised_by_negation() {
        let p = make_problem("rolling_bearing", None).unwrap();
        let x = [
            125.719, 21.426, 10.749, 0.515, 0.515, 0.404, 0.700, 0.300, 0.020, 0.600,
        ];
        let raw = p.raw_objective(&x).unwrap();
        assert!(p.maximize());
        let v = p.evaluate(&x, &mut Rng::new(0)).unwrap();
        if p.is_feasible(&x).unwrap() {
            assert_eq!(v, -raw);
        } else {
            assert!(v > -raw);
        }
        assert!((raw - 81862.64).abs() < 0.1);
    }

    #[test]
    fn penalised_value_for_infeasible_design() {
        let p = make_problem("speed_reducer", None).unwrap();
        let x = [2.6, 0.7, 17.0, 7.3, 7.8, 2.9, 5.0];
        let raw = p.raw_objective(&x).unwrap();
        let v = p.evaluate(&x, &mut Rng::new(0)).unwrap();
        assert!(v > raw + 1e3);
        assert!(!p.is_feasible(&x).unwrap());
    }

    #[test]
    fn descriptors() {
        let d = make_problem("step_cone", None).unwrap().descriptor();
        assert_eq!((d.n_inequality, d.n_equality), (8, 3));
        let d = make_problem("clutch_brake", None).unwrap().descriptor();
        assert_eq!(d.discrete_dims, vec![0, 1, 2, 3, 4]);
        assert_eq!(make_problem("weierstrass", None).unwrap().dim(), 5);
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let p = make_problem("f1", Some(3)).unwrap();
        assert!(p.evaluate(&[0.0; 2], &mut Rng::new(0)).is_err());
    }
}
