//! The visible-spot memory shared by the whole swarm.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::Rng;
use crate::space::Spot;

/// Default offset added after shifting values by the list minimum.
pub const DEFAULT_SELECTION_EPS: f64 = 1e-12;

/// Bounded list of the best spots seen so far, ascending by objective.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VisibleList {
    capacity: usize,
    selection_eps: f64,
    spots: Vec<Spot>,
    values: Vec<f64>,
}

impl VisibleList {
    pub fn new(capacity: usize) -> Result<Self> {
        Self::with_selection_eps(capacity, DEFAULT_SELECTION_EPS)
    }

    pub fn with_selection_eps(capacity: usize, selection_eps: f64) -> Result<Self> {
        if capacity == 0 {
            return Err(Error::InvalidParameter {
                name: "visible_capacity",
                reason: "must be at least 1".into(),
            });
        }
        if !(selection_eps > 0.0 && selection_eps.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "selection_eps",
                reason: format!("must be positive and finite, got {selection_eps}"),
            });
        }
        Ok(Self {
            capacity,
            selection_eps,
            spots: Vec::with_capacity(capacity + 1),
            values: Vec::with_capacity(capacity + 1),
        })
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn selection_eps(&self) -> f64 {
        self.selection_eps
    }

    pub fn len(&self) -> usize {
        self.spots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.spots.is_empty()
    }

    pub fn spots(&self) -> &[Spot] {
        &self.spots
    }

    /// Objective values in list order (ascending).
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn best(&self) -> Option<&Spot> {
        self.spots.first()
    }

    /// Offer a spot to the list. Returns whether it was kept.
    ///
    /// Equal values keep their arrival order, so a newcomer that only ties
    /// the worst entry of a full list is turned away.
    pub fn insert(&mut self, spot: Spot) -> Result<bool> {
        let f = spot.value()?;
        if f.is_nan() {
            return Err(Error::NonFiniteObjective {
                problem: "visible list".into(),
                x: spot.x.clone(),
            });
        }
        if self.spots.len() == self.capacity && f >= self.values[self.capacity - 1] {
            return Ok(false);
        }
        let pos = self.values.partition_point(|&v| v <= f);
        self.values.insert(pos, f);
        self.spots.insert(pos, spot);
        if self.spots.len() > self.capacity {
            self.values.pop();
            self.spots.pop();
        }
        Ok(true)
    }

    /// Fill the list from a batch of evaluated spots, e.g. the initial swarm.
    pub fn seed_initial<I: IntoIterator<Item = Spot>>(&mut self, spots: I) -> Result<()> {
        for s in spots {
            self.insert(s)?;
        }
        Ok(())
    }

    /// Roulette probabilities over the current entries.
    pub fn probabilities(&self) -> Result<Vec<f64>> {
        let min = *self.values.first().ok_or(Error::EmptyList)?;
        let shifted: Vec<f64> = self
            .values
            .iter()
            .map(|v| v - min + self.selection_eps)
            .collect();
        Ok(roulette_probabilities(&shifted))
    }

    /// Index picked by the cumulative rule for a given uniform draw.
    pub fn select_index_with(&self, ran: f64) -> Result<usize> {
        let probs = self.probabilities()?;
        Ok(cumulative_pick(&probs, ran))
    }

    pub fn select_target(&self, rng: &mut Rng) -> Result<&Spot> {
        let idx = self.select_index_with(rng.uniform())?;
        Ok(&self.spots[idx])
    }
}

/// Probabilities proportional to the inverse of strictly positive values.
pub fn roulette_probabilities(shifted: &[f64]) -> Vec<f64> {
    let inv: Vec<f64> = shifted.iter().map(|v| 1.0 / v).collect();
    let total: f64 = inv.iter().sum();
    inv.iter().map(|w| w / total).collect()
}

/// First index whose cumulative probability reaches `ran`.
pub fn cumulative_pick(probs: &[f64], ran: f64) -> usize {
    let mut acc = 0.0;
    for (j, p) in probs.iter().enumerate() {
        acc += p;
        if ran <= acc {
            return j;
        }
    }
    probs.len().saturating_sub(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spot(f: f64, tag: f64) -> Spot {
        Spot::evaluated(vec![tag], f)
    }

    #[test]
    fn keeps_best_in_order() {
        let mut vl = VisibleList::new(3).unwrap();
        for (i, f) in [5.0, 3.0, 8.0, 1.0, 4.0].into_iter().enumerate() {
            vl.insert(spot(f, i as f64)).unwrap();
        }
        assert_eq!(vl.values(), &[1.0, 3.0, 4.0]);
    }

    #[test]
    fn full_list_rejects_equal_to_worst() {
        let mut vl = VisibleList::new(2).unwrap();
        vl.insert(spot(1.0, 0.0)).unwrap();
        vl.insert(spot(2.0, 1.0)).unwrap();
        assert!(!vl.insert(spot(2.0, 2.0)).unwrap());
        assert_eq!(vl.spots()[1].x, vec![1.0]);
    }

    #[test]
    fn incumbent_stays_ahead_on_ties() {
        let mut vl = VisibleList::new(3).unwrap();
        vl.insert(spot(1.0, 0.0)).unwrap();
        vl.insert(spot(1.0, 1.0)).unwrap();
        assert_eq!(vl.spots()[0].x, vec![0.0]);
        assert_eq!(vl.spots()[1].x, vec![1.0]);
    }

    #[test]
    fn unevaluated_spot_is_rejected() {
        let mut vl = VisibleList::new(2).unwrap();
        assert!(vl.insert(Spot::new(vec![0.0])).is_err());
    }

    #[test]
    fn roulette_of_one_and_three() {
        let p = roulette_probabilities(&[1.0, 3.0]);
        assert!((p[0] - 0.75).abs() < 1e-15);
        assert!((p[1] - 0.25).abs() < 1e-15);
    }

    #[test]
    fn cumulative_rule_boundaries() {
        let p = [0.75, 0.25];
        assert_eq!(cumulative_pick(&p, 0.0), 0);
        assert_eq!(cumulative_pick(&p, 0.75), 0);
        assert_eq!(cumulative_pick(&p, 0.7500001), 1);
        assert_eq!(cumulative_pick(&p, 0.9999999), 1);
    }

    #[test]
    fn probabilities_use_shifted_values() {
        let mut vl = VisibleList::with_selection_eps(2, 1.0).unwrap();
        vl.insert(spot(10.0, 0.0)).unwrap();
        vl.insert(spot(12.0, 1.0)).unwrap();
        let p = vl.probabilities().unwrap();
        assert!((p[0] - 0.75).abs() < 1e-15);
    }

    #[test]
    fn negative_values_are_handled() {
        let mut vl = VisibleList::new(3).unwrap();
        for (i, f) in [-12569.5, -12000.0, 0.0].into_iter().enumerate() {
            vl.insert(spot(f, i as f64)).unwrap();
        }
        let p = vl.probabilities().unwrap();
        assert!(p.iter().all(|v| v.is_finite() && *v >= 0.0));
        assert!((p.iter().sum::<f64>() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn empty_list_has_no_target() {
        let vl = VisibleList::new(2).unwrap();
        assert!(matches!(vl.probabilities(), Err(Error::EmptyList)));
    }
}
