//! Search-space box, feasibility repair and the vector geometry used by the
//! locomotion generators.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::Rng;

/// Per-dimension bounds plus optional discrete value sets.
///
/// An empty discrete set means the dimension is continuous.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchSpace {
    lower: Vec<f64>,
    upper: Vec<f64>,
    discrete: Vec<Vec<f64>>,
}

impl SearchSpace {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if lower.is_empty() {
            return Err(Error::InvalidSpace("dimension must be positive".into()));
        }
        if lower.len() != upper.len() {
            return Err(Error::DimensionMismatch {
                expected: lower.len(),
                got: upper.len(),
            });
        }
        for (k, (lo, hi)) in lower.iter().zip(&upper).enumerate() {
            if !(lo.is_finite() && hi.is_finite()) || lo > hi {
                return Err(Error::InvalidSpace(format!(
                    "dimension {k}: bounds [{lo}, {hi}] are not an interval"
                )));
            }
        }
        let discrete = vec![Vec::new(); lower.len()];
        Ok(Self {
            lower,
            upper,
            discrete,
        })
    }

    /// The same interval `[lo, hi]` in every one of `dim` dimensions.
    pub fn uniform(dim: usize, lo: f64, hi: f64) -> Result<Self> {
        Self::new(vec![lo; dim], vec![hi; dim])
    }

    /// Restrict dimension `k` to a finite, strictly ascending set of values
    /// lying inside its bounds.
    pub fn with_discrete(mut self, k: usize, values: Vec<f64>) -> Result<Self> {
        if k >= self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: k + 1,
            });
        }
        if values.is_empty() {
            return Err(Error::InvalidSpace(format!(
                "dimension {k}: discrete set is empty"
            )));
        }
        if values.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSpace(format!(
                "dimension {k}: discrete set is not strictly ascending"
            )));
        }
        if values
            .iter()
            .any(|v| *v < self.lower[k] || *v > self.upper[k])
        {
            return Err(Error::InvalidSpace(format!(
                "dimension {k}: discrete value outside [{}, {}]",
                self.lower[k], self.upper[k]
            )));
        }
        self.discrete[k] = values;
        Ok(self)
    }

    /// Integer-valued dimension `k` covering `lo..=hi`.
    pub fn with_integers(self, k: usize, lo: i64, hi: i64) -> Result<Self> {
        self.with_discrete(k, (lo..=hi).map(|v| v as f64).collect())
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn discrete_set(&self, k: usize) -> &[f64] {
        &self.discrete[k]
    }

    pub fn has_discrete(&self) -> bool {
        self.discrete.iter().any(|s| !s.is_empty())
    }

    /// Euclidean length of the box diagonal.
    pub fn diagonal(&self) -> f64 {
        self.lower
            .iter()
            .zip(&self.upper)
            .map(|(lo, hi)| (hi - lo) * (hi - lo))
            .sum::<f64>()
            .sqrt()
    }

    fn check_dim(&self, len: usize) -> Result<()> {
        if len != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: len,
            });
        }
        Ok(())
    }

    /// Replace every out-of-range component by its nearest bound.
    ///
    /// For a box this is also the Euclidean projection onto the box.
    pub fn clamp(&self, p: &[f64]) -> Result<Vec<f64>> {
        self.check_dim(p.len())?;
        let mut out = p.to_vec();
        self.clamp_in_place(&mut out);
        Ok(out)
    }

    #[inline]
    pub fn clamp_in_place(&self, p: &mut [f64]) {
        debug_assert_eq!(p.len(), self.dim());
        for ((v, lo), hi) in p.iter_mut().zip(&self.lower).zip(&self.upper) {
            if *v < *lo {
                *v = *lo;
            } else if *v > *hi {
                *v = *hi;
            }
        }
    }

    pub fn contains(&self, p: &[f64]) -> bool {
        p.len() == self.dim()
            && p.iter()
                .zip(&self.lower)
                .zip(&self.upper)
                .all(|((v, lo), hi)| *v >= *lo && *v <= *hi)
    }

    /// Draw each component uniformly from its interval.
    pub fn sample_uniform(&self, rng: &mut Rng) -> Vec<f64> {
        self.lower
            .iter()
            .zip(&self.upper)
            .map(|(lo, hi)| rng.uniform_in(*lo, *hi))
            .collect()
    }

    /// Replace each discrete component by the nearest allowed value; ties go
    /// to the lower value. Continuous components are untouched.
    pub fn snap(&self, p: &[f64]) -> Result<Vec<f64>> {
        self.check_dim(p.len())?;
        let mut out = p.to_vec();
        self.snap_in_place(&mut out);
        Ok(out)
    }

    pub fn snap_in_place(&self, p: &mut [f64]) {
        for (v, set) in p.iter_mut().zip(&self.discrete) {
            if !set.is_empty() {
                *v = nearest_in_sorted(set, *v);
            }
        }
    }
}

fn nearest_in_sorted(set: &[f64], v: f64) -> f64 {
    let idx = set.partition_point(|s| *s < v);
    if idx == 0 {
        return set[0];
    }
    if idx == set.len() {
        return set[set.len() - 1];
    }
    let (below, above) = (set[idx - 1], set[idx]);
    if above - v < v - below {
        above
    } else {
        below
    }
}

/// A position together with its objective value once evaluated.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spot {
    pub x: Vec<f64>,
    pub f: Option<f64>,
}

impl Spot {
    pub fn new(x: Vec<f64>) -> Self {
        Self { x, f: None }
    }

    pub fn evaluated(x: Vec<f64>, f: f64) -> Self {
        Self { x, f: Some(f) }
    }

    pub fn value(&self) -> Result<f64> {
        self.f.ok_or(Error::Unevaluated)
    }
}

fn check_same_len(a: &[f64], b: &[f64]) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            got: b.len(),
        });
    }
    Ok(())
}

#[inline]
pub(crate) fn norm_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (y - x) * (y - x))
        .sum::<f64>()
        .sqrt()
}

/// Euclidean distance between two points.
pub fn distance(a: &[f64], b: &[f64]) -> Result<f64> {
    check_same_len(a, b)?;
    Ok(norm_diff(a, b))
}

/// The point at distance `len` from `a` along the ray towards `b`.
///
/// Fails with [`Error::DegenerateDirection`] when `a == b` (or the direction
/// is too short to normalize).
pub fn point_along(a: &[f64], b: &[f64], len: f64) -> Result<Vec<f64>> {
    check_same_len(a, b)?;
    let l = norm_diff(a, b);
    let ratio = len / l;
    if l == 0.0 || !ratio.is_finite() {
        return Err(Error::DegenerateDirection);
    }
    Ok(a.iter().zip(b).map(|(x, y)| x + ratio * (y - x)).collect())
}

/// Reflection of `a` through `center`: `2 * center - a`.
pub fn mirror(a: &[f64], center: &[f64]) -> Result<Vec<f64>> {
    check_same_len(a, center)?;
    Ok(a.iter().zip(center).map(|(x, c)| 2.0 * c - x).collect())
}

pub fn midpoint(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| 0.5 * (x + y)).collect()
}
