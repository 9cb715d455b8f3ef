//! Snake-inspired swarm optimizer with serpentine and caterpillar locomotion.

pub mod error;
pub mod harness;
pub mod locomotion;
pub mod memory;
pub mod optimizer;
pub mod problems;
pub mod rng;
pub mod schedule;
pub mod space;

pub use error::{Error, Result};
pub use harness::{run_experiment, ExperimentConfig, ExperimentSummary};
pub use locomotion::{caterpillar, serpentine, AuxiliarySource, CaterpillarMove, SerpentineMove};
pub use memory::VisibleList;
pub use optimizer::{run, Objective, RunResult, SllsConfig};
pub use problems::{make_problem, Problem};
pub use rng::Rng;
pub use schedule::{Mode, Schedule};
pub use space::{SearchSpace, Spot};

#[cfg(test)]
mod api_tests {
    use crate::optimizer::{nfe_estimate, FnObjective};
    use crate::space::SearchSpace;
    use crate::{make_problem, run, run_experiment, ExperimentConfig, SllsConfig};

    fn short() -> SllsConfig {
        SllsConfig {
            max_iter: 80,
            ..SllsConfig::default()
        }
    }

    #[test]
    fn closure_objective_runs() {
        let space = SearchSpace::uniform(4, -3.0, 3.0).unwrap();
        let obj = FnObjective::new("shifted", space, |x: &[f64]| {
            x.iter().map(|v| (v - 1.0).powi(2)).sum::<f64>()
        });
        let cfg = short();
        let r = run(&cfg, &obj, None).unwrap();
        assert_eq!(r.nfe, nfe_estimate(&cfg));
        assert!(r.best.value().unwrap() < 1.0);
        assert!(r.best.x.iter().all(|v| (-3.0..=3.0).contains(v)));
    }

    #[test]
    fn best_never_worse_than_initial_swarm() {
        let p = make_problem("f5", Some(10)).unwrap();
        let r = run(&short(), &p, None).unwrap();
        assert!(r.best_history.windows(2).all(|w| w[1] <= w[0]));
    }

    #[test]
    fn experiment_on_constrained_problem_reports_raw_objective() {
        let cfg = ExperimentConfig {
            n_runs: 3,
            ..ExperimentConfig::new("rolling_bearing", None, short())
        };
        let s = run_experiment(&cfg).unwrap();
        assert!(s.maximize);
        for r in &s.runs {
            if r.feasible {
                assert_eq!(r.f, -r.objective);
            } else {
                assert!(r.f > -r.objective);
            }
        }
        assert!(s.best <= s.mean && s.mean <= s.worst);
    }

    #[test]
    fn unknown_problem_is_an_error() {
        assert!(make_problem("no_such_problem", None).is_err());
        assert!(make_problem("f1", Some(0)).is_err());
    }
}
