//! Exhaustive search over the clutch brake's finite design grid.

use serde::{Deserialize, Serialize};

use super::engineering::clutch_brake;
use super::penalty::PenaltyPolicy;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClutchOracle {
    pub best_x: Vec<f64>,
    pub best_f: f64,
    /// Every feasible grid point attaining `best_f`, in enumeration order.
    pub minimizers: Vec<Vec<f64>>,
    pub evaluated: usize,
    pub feasible: usize,
}

impl ClutchOracle {
    pub fn is_minimizer(&self, x: &[f64]) -> bool {
        self.minimizers.iter().any(|m| m.as_slice() == x)
    }
}

pub fn brute_force_clutch(policy: &PenaltyPolicy) -> ClutchOracle {
    let thickness = [1.0, 1.5, 2.0, 2.5, 3.0];
    let mut best_f = f64::INFINITY;
    let mut minimizers: Vec<Vec<f64>> = Vec::new();
    let mut evaluated = 0;
    let mut feasible = 0;

    for ri in 60..=80 {
        for ro in 90..=110 {
            for &t in &thickness {
                for fk in 0..=40 {
                    for z in 2..=9 {
                        let x = [ri as f64, ro as f64, t, 600.0 + 10.0 * fk as f64, z as f64];
                        evaluated += 1;
                        let e = clutch_brake(&x);
                        if !e.constraints.iter().all(|c| c.satisfied(policy)) {
                            continue;
                        }
                        feasible += 1;
                        if e.objective < best_f {
                            best_f = e.objective;
                            minimizers.clear();
                        }
                        if e.objective == best_f {
                            minimizers.push(x.to_vec());
                        }
                    }
                }
            }
        }
    }

    ClutchOracle {
        best_x: minimizers.first().cloned().unwrap_or_default(),
        best_f,
        minimizers,
        evaluated,
        feasible,
    }
}
