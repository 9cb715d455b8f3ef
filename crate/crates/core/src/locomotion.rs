//! Touch-point generators for the two movement modes.
//!
//! A serpentine move with `n` half circles visits `2n` touch points. The last
//! one (the foothold) sits at the requested amplitude from the start along a
//! random direction. The odd points split the start-foothold segment into `n`
//! equal parts, and the even points swing alternately to either side of it.
//!
//! A caterpillar move approaches a target along a straight line, covering a
//! fixed fraction `r_cl` of the remaining distance at each touch point.

use crate::error::{Error, Result};
use crate::rng::Rng;
use crate::space::{midpoint, norm_diff, point_along, SearchSpace};

/// Resamples allowed when an auxiliary point yields no usable direction.
pub const MAX_RESAMPLES: usize = 16;

/// Supplier of the random auxiliary points that steer a serpentine move.
pub trait AuxiliarySource {
    fn next_auxiliary(&mut self, space: &SearchSpace) -> Vec<f64>;
}

impl AuxiliarySource for Rng {
    fn next_auxiliary(&mut self, space: &SearchSpace) -> Vec<f64> {
        space.sample_uniform(self)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SerpentineMove {
    pub start: Vec<f64>,
    /// `X_2 ..= X_{2n+1}` in visiting order; the last entry is the foothold.
    pub touch_points: Vec<Vec<f64>>,
    /// Positions before box repair, same layout as `touch_points`.
    pub raw_points: Vec<Vec<f64>>,
    /// Start-to-foothold distance after repair.
    pub actual_amplitude: f64,
    /// Midpoint between the start and the first on-line point.
    pub pivot: Vec<f64>,
}

impl SerpentineMove {
    pub fn foothold(&self) -> &[f64] {
        self.touch_points
            .last()
            .expect("serpentine move has touch points")
    }
}

/// Build a serpentine move with `n_hc` half circles.
pub fn serpentine<A: AuxiliarySource + ?Sized>(
    start: &[f64],
    space: &SearchSpace,
    amplitude: f64,
    n_hc: usize,
    aux: &mut A,
) -> Result<SerpentineMove> {
    if start.len() != space.dim() {
        return Err(Error::DimensionMismatch {
            expected: space.dim(),
            got: start.len(),
        });
    }
    if !(amplitude > 0.0 && amplitude.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "amplitude",
            reason: format!("must be positive and finite, got {amplitude}"),
        });
    }
    if n_hc == 0 {
        return Err(Error::InvalidParameter {
            name: "n_half_circles",
            reason: "must be at least 1".into(),
        });
    }

    // Foothold along a random direction, repaired into the box. A repair that
    // collapses the foothold onto the start is treated like a zero direction.
    let mut end_raw = None;
    for _ in 0..=MAX_RESAMPLES {
        let guide = aux.next_auxiliary(space);
        let Ok(raw) = point_along(start, &guide, amplitude) else {
            continue;
        };
        let mut end = raw.clone();
        space.clamp_in_place(&mut end);
        if end.as_slice() != start {
            end_raw = Some((end, raw));
            break;
        }
    }
    let Some((end, raw_end)) = end_raw else {
        return Err(Error::DegenerateMove {
            attempts: MAX_RESAMPLES + 1,
        });
    };
    let actual_amplitude = norm_diff(start, &end);

    // points[i] holds X_i; slots 0 and 1 are placeholders / the start.
    let top = 2 * n_hc + 1;
    let mut points: Vec<Vec<f64>> = vec![Vec::new(); top + 1];
    let mut raw: Vec<Vec<f64>> = vec![Vec::new(); top + 1];
    points[1] = start.to_vec();
    raw[1] = start.to_vec();
    points[top] = end;
    raw[top] = raw_end;

    // On-line points X_3, X_5, ..., X_{2n-1}.
    for i in (3..top).step_by(2) {
        let frac = (i - 1) as f64 / (2 * n_hc) as f64;
        let p: Vec<f64> = start
            .iter()
            .zip(&points[top])
            .map(|(s, e)| s + frac * (e - s))
            .collect();
        raw[i] = p.clone();
        points[i] = p;
    }

    // X_2: as far from the pivot as the start is, towards a second random guide.
    let pivot = midpoint(start, &points[3]);
    let radius = norm_diff(start, &pivot);
    let mut second = None;
    for _ in 0..=MAX_RESAMPLES {
        let guide = aux.next_auxiliary(space);
        if let Ok(p) = point_along(&pivot, &guide, radius) {
            second = Some(p);
            break;
        }
    }
    let Some(raw_second) = second else {
        return Err(Error::DegenerateMove {
            attempts: MAX_RESAMPLES + 1,
        });
    };
    let mut x2 = raw_second.clone();
    space.clamp_in_place(&mut x2);
    raw[2] = raw_second;
    points[2] = x2;

    // Remaining off-line points mirror their predecessor through the
    // preceding on-line point, in order.
    for i in (4..top).step_by(2) {
        let r: Vec<f64> = points[i - 2]
            .iter()
            .zip(&points[i - 1])
            .map(|(a, c)| 2.0 * c - a)
            .collect();
        let mut p = r.clone();
        space.clamp_in_place(&mut p);
        raw[i] = r;
        points[i] = p;
    }

    points.drain(..2);
    raw.drain(..2);
    Ok(SerpentineMove {
        start: start.to_vec(),
        touch_points: points,
        raw_points: raw,
        actual_amplitude,
        pivot,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct CaterpillarMove {
    pub start: Vec<f64>,
    pub target: Vec<f64>,
    pub r_cl: f64,
    /// Touch points in visiting order; the last entry is the foothold.
    pub touch_points: Vec<Vec<f64>>,
}

impl CaterpillarMove {
    pub fn foothold(&self) -> &[f64] {
        self.touch_points
            .last()
            .expect("caterpillar move has touch points")
    }
}

/// Fraction of the start-target segment covered after `j` touch points.
#[inline]
pub fn caterpillar_fraction(r_cl: f64, j: usize) -> f64 {
    1.0 - (1.0 - r_cl).powi(j as i32)
}

/// Build a caterpillar move of `n_cm` touch points towards `target`.
pub fn caterpillar(
    start: &[f64],
    target: &[f64],
    r_cl: f64,
    n_cm: usize,
) -> Result<CaterpillarMove> {
    if !(r_cl > 0.0 && r_cl < 1.0) {
        return Err(Error::InvalidParameter {
            name: "r_cl",
            reason: format!("must lie in (0, 1), got {r_cl}"),
        });
    }
    if n_cm == 0 {
        return Err(Error::InvalidParameter {
            name: "n_touch_points",
            reason: "must be at least 1".into(),
        });
    }
    if start.len() != target.len() {
        return Err(Error::DimensionMismatch {
            expected: start.len(),
            got: target.len(),
        });
    }
    let touch_points = (1..=n_cm)
        .map(|j| {
            let c = caterpillar_fraction(r_cl, j);
            start
                .iter()
                .zip(target)
                .map(|(s, v)| s + c * (v - s))
                .collect()
        })
        .collect();
    Ok(CaterpillarMove {
        start: start.to_vec(),
        target: target.to_vec(),
        r_cl,
        touch_points,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::distance;
    use std::collections::VecDeque;

    struct Scripted(VecDeque<Vec<f64>>);

    impl AuxiliarySource for Scripted {
        fn next_auxiliary(&mut self, _: &SearchSpace) -> Vec<f64> {
            self.0.pop_front().expect("script exhausted")
        }
    }

    fn wide() -> SearchSpace {
        SearchSpace::uniform(2, -1e6, 1e6).unwrap()
    }

    #[test]
    fn serpentine_scripted_two_half_circles() {
        let mut aux = Scripted(VecDeque::from(vec![vec![1.0, 0.0], vec![1.0, 1.0]]));
        let mv = serpentine(&[0.0, 0.0], &wide(), 4.0, 2, &mut aux).unwrap();
        assert_eq!(mv.touch_points.len(), 4);
        // X_2, X_3, X_4, X_5
        assert_eq!(mv.touch_points[3], vec![4.0, 0.0]);
        assert_eq!(mv.touch_points[1], vec![2.0, 0.0]);
        assert_eq!(mv.pivot, vec![1.0, 0.0]);
        assert_eq!(mv.touch_points[0], vec![1.0, 1.0]);
        assert_eq!(mv.touch_points[2], vec![3.0, -1.0]);
        assert_eq!(mv.actual_amplitude, 4.0);
    }

    #[test]
    fn serpentine_single_half_circle() {
        let mut aux = Scripted(VecDeque::from(vec![vec![0.0, 3.0], vec![5.0, 1.0]]));
        let mv = serpentine(&[0.0, 0.0], &wide(), 2.0, 1, &mut aux).unwrap();
        assert_eq!(mv.touch_points.len(), 2);
        assert_eq!(mv.foothold(), &[0.0, 2.0]);
        assert_eq!(mv.pivot, vec![0.0, 1.0]);
        assert!((distance(&mv.pivot, &mv.touch_points[0]).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn serpentine_from_corner_stays_feasible() {
        let space = SearchSpace::uniform(3, 0.0, 1.0).unwrap();
        let mut rng = Rng::new(9);
        for _ in 0..200 {
            let mv = serpentine(&[1.0, 1.0, 1.0], &space, 50.0, 3, &mut rng).unwrap();
            assert!(mv.actual_amplitude <= space.diagonal() + 1e-12);
            for p in &mv.touch_points {
                assert!(space.contains(p));
            }
        }
    }

    #[test]
    fn serpentine_degenerates_when_every_guide_is_the_start() {
        let mut aux = Scripted((0..=MAX_RESAMPLES).map(|_| vec![0.5, 0.5]).collect());
        let err = serpentine(&[0.5, 0.5], &wide(), 1.0, 2, &mut aux).unwrap_err();
        assert!(matches!(err, Error::DegenerateMove { .. }));
    }

    #[test]
    fn serpentine_resamples_past_a_degenerate_guide() {
        let mut aux = Scripted(VecDeque::from(vec![
            vec![0.0, 0.0],
            vec![2.0, 0.0],
            vec![1.0, 1.0],
        ]));
        let mv = serpentine(&[0.0, 0.0], &wide(), 2.0, 1, &mut aux).unwrap();
        assert_eq!(mv.foothold(), &[2.0, 0.0]);
    }

    #[test]
    fn serpentine_rejects_bad_parameters() {
        let mut rng = Rng::new(1);
        assert!(serpentine(&[0.0, 0.0], &wide(), 0.0, 2, &mut rng).is_err());
        assert!(serpentine(&[0.0, 0.0], &wide(), 1.0, 0, &mut rng).is_err());
        assert!(serpentine(&[0.0], &wide(), 1.0, 2, &mut rng).is_err());
    }

    #[test]
    fn caterpillar_halving_chain() {
        let mv = caterpillar(&[0.0, 0.0], &[8.0, 0.0], 0.5, 4).unwrap();
        assert_eq!(
            mv.touch_points,
            vec![
                vec![4.0, 0.0],
                vec![6.0, 0.0],
                vec![7.0, 0.0],
                vec![7.5, 0.0]
            ]
        );
        assert_eq!(mv.foothold(), &[7.5, 0.0]);
    }

    #[test]
    fn caterpillar_onto_itself() {
        let mv = caterpillar(&[1.0, 2.0], &[1.0, 2.0], 0.3, 5).unwrap();
        assert!(mv.touch_points.iter().all(|p| p == &vec![1.0, 2.0]));
    }

    #[test]
    fn caterpillar_second_coefficient() {
        // Two steps of the recurrence with r = 0.3 cover 1 - 0.7^2 = 0.51.
        assert!((caterpillar_fraction(0.3, 2) - 0.51).abs() < 1e-15);
        let mv = caterpillar(&[0.0], &[10.0], 0.3, 2).unwrap();
        assert!((mv.touch_points[1][0] - 5.1).abs() < 1e-12);
    }

    #[test]
    fn caterpillar_rejects_bad_rate() {
        assert!(caterpillar(&[0.0], &[1.0], 0.0, 3).is_err());
        assert!(caterpillar(&[0.0], &[1.0], 1.0, 3).is_err());
        assert!(caterpillar(&[0.0], &[1.0], 0.5, 0).is_err());
    }
}
