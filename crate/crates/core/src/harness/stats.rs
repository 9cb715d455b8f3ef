//! Summary statistics over per-run results.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Stats {
    pub mean: f64,
    /// Sample standard deviation (n - 1 denominator); zero for a single value.
    pub std: f64,
    pub best: f64,
    pub worst: f64,
}

/// Mean, sample std, min and max. `None` for an empty slice.
pub fn describe(values: &[f64]) -> Option<Stats> {
    if values.is_empty() {
        return None;
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let std = if values.len() > 1 {
        let ss: f64 = values.iter().map(|v| (v - mean).powi(2)).sum();
        (ss / (n - 1.0)).sqrt()
    } else {
        0.0
    };
    let best = values.iter().copied().fold(f64::INFINITY, f64::min);
    let worst = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    // Rounding can push the mean of near-equal values a hair outside [min, max].
    Some(Stats {
        mean: mean.clamp(best, worst),
        std,
        best,
        worst,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn single_value() {
        let s = describe(&[4.0]).unwrap();
        assert_eq!((s.mean, s.std, s.best, s.worst), (4.0, 0.0, 4.0, 4.0));
    }

    #[test]
    fn known_sample_std() {
        let s = describe(&[2.0, 4.0, 4.0, 4.0, 5.0, 5.0, 7.0, 9.0]).unwrap();
        assert_eq!(s.mean, 5.0);
        assert!((s.std - (32.0f64 / 7.0).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn empty_is_none() {
        assert!(describe(&[]).is_none());
    }

    proptest! {
        #[test]
        fn ordered(v in prop::collection::vec(-1e6f64..1e6, 1..50)) {
            let s = describe(&v).unwrap();
            prop_assert!(s.best <= s.mean && s.mean <= s.worst);
            prop_assert!(s.std >= 0.0);
        }
    }
}
