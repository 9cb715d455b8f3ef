//! Time-dependent learning efficiency and serpentine amplitude.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Serpentine,
    Caterpillar,
}

impl Mode {
    /// Trace encoding: -1 for serpentine, +1 for caterpillar.
    pub fn code(self) -> i8 {
        match self {
            Mode::Serpentine => -1,
            Mode::Caterpillar => 1,
        }
    }
}

/// Initial amplitude for a box with the given diagonal length.
pub fn initial_amplitude(diagonal: f64) -> f64 {
    diagonal / 5.0
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Schedule {
    pub max_iter: usize,
    pub gamma: f64,
    pub la0: f64,
    pub la_min: f64,
}

impl Schedule {
    pub fn new(max_iter: usize, gamma: f64, la0: f64, la_min: f64) -> Result<Self> {
        if max_iter == 0 {
            return Err(Error::InvalidParameter {
                name: "max_iter",
                reason: "must be at least 1".into(),
            });
        }
        if !(gamma > 0.0 && gamma.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "gamma",
                reason: format!("must be positive and finite, got {gamma}"),
            });
        }
        if !(la_min > 0.0 && la_min.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "la_min",
                reason: format!("must be positive and finite, got {la_min}"),
            });
        }
        if !(la0 >= la_min && la0.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "la0",
                reason: format!("must be finite and at least la_min ({la_min}), got {la0}"),
            });
        }
        Ok(Self {
            max_iter,
            gamma,
            la0,
            la_min,
        })
    }

    /// Logistic learning efficiency P(t), centred on half the budget.
    pub fn learning_efficiency(&self, t: f64) -> f64 {
        let big_t = self.max_iter as f64;
        let k = 2.0 * self.gamma / big_t;
        1.0 / (1.0 + (k * (big_t / 2.0 - t)).exp())
    }

    /// Serpentine amplitude, shrinking from `la0` towards `la_min` as P grows.
    pub fn amplitude(&self, t: f64) -> f64 {
        // Written around 1 - P so that la_min survives when P rounds to 1.
        let big_t = self.max_iter as f64;
        let k = 2.0 * self.gamma / big_t;
        let remaining = 1.0 / (1.0 + (-k * (big_t / 2.0 - t)).exp());
        self.la_min + (self.la0 - self.la_min) * remaining
    }

    pub fn choose_mode(&self, t: f64, rng: &mut Rng) -> Mode {
        self.choose_mode_with(t, rng.uniform())
    }

    pub fn choose_mode_with(&self, t: f64, ran: f64) -> Mode {
        if ran < self.learning_efficiency(t) {
            Mode::Caterpillar
        } else {
            Mode::Serpentine
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sched() -> Schedule {
        Schedule::new(1000, 6.0, 10.0, 1e-30).unwrap()
    }

    #[test]
    fn half_at_midpoint() {
        assert!((sched().learning_efficiency(500.0) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn endpoint_values() {
        let s = sched();
        let expected = 1.0 / (1.0 + 6f64.exp());
        assert!((s.learning_efficiency(0.0) - expected).abs() < 1e-15);
        assert!((s.learning_efficiency(0.0) - 0.0024726).abs() < 1e-7);
        assert!((s.learning_efficiency(1000.0) - (1.0 - expected)).abs() < 1e-12);
    }

    #[test]
    fn symmetric_about_midpoint() {
        let s = sched();
        for t in [0.0, 17.0, 250.0, 499.0] {
            let sum = s.learning_efficiency(t) + s.learning_efficiency(1000.0 - t);
            assert!((sum - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn larger_gamma_is_steeper() {
        let soft = Schedule::new(1000, 2.0, 10.0, 1e-30).unwrap();
        let sharp = Schedule::new(1000, 10.0, 10.0, 1e-30).unwrap();
        assert!(sharp.learning_efficiency(100.0) < soft.learning_efficiency(100.0));
        assert!(sharp.learning_efficiency(900.0) > soft.learning_efficiency(900.0));
    }

    #[test]
    fn amplitude_decreases() {
        let s = sched();
        let mut prev = f64::INFINITY;
        for t in 0..=1000 {
            let a = s.amplitude(t as f64);
            assert!(a <= prev);
            assert!(a >= s.la_min && a <= s.la0);
            prev = a;
        }
    }

    #[test]
    fn amplitude_at_midpoint() {
        let s = Schedule::new(1000, 6.0, 40.0, 1e-30).unwrap();
        assert!((s.amplitude(500.0) - 20.0).abs() < 1e-12);
        assert!((initial_amplitude(200.0) - 40.0).abs() < 1e-15);
    }

    #[test]
    fn forced_draw_picks_mode() {
        let s = sched();
        assert_eq!(s.choose_mode_with(500.0, 0.49), Mode::Caterpillar);
        assert_eq!(s.choose_mode_with(500.0, 0.5), Mode::Serpentine);
        assert_eq!(Mode::Serpentine.code(), -1);
        assert_eq!(Mode::Caterpillar.code(), 1);
    }

    #[test]
    fn rejects_invalid() {
        assert!(Schedule::new(0, 6.0, 1.0, 1e-30).is_err());
        assert!(Schedule::new(10, 0.0, 1.0, 1e-30).is_err());
        assert!(Schedule::new(10, 6.0, 1.0, 0.0).is_err());
        assert!(Schedule::new(10, 6.0, 1e-31, 1e-30).is_err());
    }
}
