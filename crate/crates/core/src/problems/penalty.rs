use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PenaltyPolicy {
    pub rho: f64,
    pub eq_tolerance: f64,
}

impl Default for PenaltyPolicy {
    fn default() -> Self {
        Self {
            rho: 1e6,
            eq_tolerance: 1e-4,
        }
    }
}

impl PenaltyPolicy {
    pub fn new(rho: f64, eq_tolerance: f64) -> Result<Self> {
        if !(rho > 0.0 && rho.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "rho",
                reason: format!("must be positive and finite, got {rho}"),
            });
        }
        if !(eq_tolerance >= 0.0 && eq_tolerance.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "eq_tolerance",
                reason: format!("must be non-negative and finite, got {eq_tolerance}"),
            });
        }
        Ok(Self { rho, eq_tolerance })
    }
}

/// Direction in which a printed constraint value is satisfied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = ">=0")]
    GeZero,
    #[serde(rename = "<=0")]
    LeZero,
    #[serde(rename = "=0")]
    EqZero,
}

/// A constraint evaluated at a point, in the sign convention it is stated in.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstraintValue {
    pub label: String,
    pub value: f64,
    pub relation: Relation,
}

impl ConstraintValue {
    pub fn ge(label: impl Into<String>, value: f64) -> Self {
        Self {
            label: label.into(),
            value,
            relation: Relation::GeZero,
        }
    }

    pub fn le(label: impl Into<String>, value: f64) -> Self {
        Self {
            label: label.into(),
            value,
            relation: Relation::LeZero,
        }
    }

    pub fn eq(label: impl Into<String>, value: f64) -> Self {
        Self {
            label: label.into(),
            value,
            relation: Relation::EqZero,
        }
    }

    pub fn is_equality(&self) -> bool {
        self.relation == Relation::EqZero
    }

    /// Breach of an inequality, zero when satisfied. Equalities return |h|.
    pub fn breach(&self) -> f64 {
        match self.relation {
            Relation::GeZero => (-self.value).max(0.0),
            Relation::LeZero => self.value.max(0.0),
            Relation::EqZero => self.value.abs(),
        }
    }

    pub fn satisfied(&self, policy: &PenaltyPolicy) -> bool {
        match self.relation {
            Relation::EqZero => self.value.abs() <= policy.eq_tolerance,
            _ => self.breach() == 0.0,
        }
    }
}

pub fn penalize(
    raw: f64,
    violations_g: &[f64],
    violations_h: &[f64],
    policy: &PenaltyPolicy,
) -> f64 {
    let g: f64 = violations_g.iter().map(|v| v.max(0.0)).sum();
    let h: f64 = violations_h
        .iter()
        .map(|v| (v.abs() - policy.eq_tolerance).max(0.0))
        .sum();
    let total = g + h;
    if total == 0.0 {
        raw
    } else {
        raw + policy.rho * total
    }
}

/// Penalised value for a set of stated constraints plus any extra breach.
pub fn penalize_constraints(
    raw: f64,
    constraints: &[ConstraintValue],
    extra: f64,
    policy: &PenaltyPolicy,
) -> f64 {
    let mut g: Vec<f64> = Vec::with_capacity(constraints.len() + 1);
    let mut h: Vec<f64> = Vec::new();
    for c in constraints {
        if c.is_equality() {
            h.push(c.value);
        } else {
            g.push(c.breach());
        }
    }
    if extra > 0.0 {
        g.push(extra);
    }
    penalize(raw, &g, &h, policy)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn feasible_is_unchanged() {
        let p = PenaltyPolicy::default();
        assert_eq!(penalize(3.5, &[0.0, 0.0], &[5e-5], &p), 3.5);
    }

    #[test]
    fn one_breach() {
        let p = PenaltyPolicy::default();
        assert!((penalize(1.0, &[0.1], &[], &p) - (1.0 + 1e5)).abs() < 1e-6);
    }

    #[test]
    fn equality_outside_band() {
        let p = PenaltyPolicy::default();
        let v = penalize(0.0, &[], &[-3e-4], &p);
        assert!((v - 200.0).abs() < 1e-9);
    }

    #[test]
    fn directions() {
        assert_eq!(ConstraintValue::ge("g", -2.0).breach(), 2.0);
        assert_eq!(ConstraintValue::ge("g", 2.0).breach(), 0.0);
        assert_eq!(ConstraintValue::le("g", 2.0).breach(), 2.0);
        assert_eq!(ConstraintValue::le("g", -2.0).breach(), 0.0);
        let p = PenaltyPolicy::default();
        assert!(ConstraintValue::eq("h", 5e-5).satisfied(&p));
        assert!(!ConstraintValue::eq("h", 5e-3).satisfied(&p));
    }

    #[test]
    fn rejects_bad_policy() {
        assert!(PenaltyPolicy::new(0.0, 1e-4).is_err());
        assert!(PenaltyPolicy::new(1e6, -1.0).is_err());
    }
}
