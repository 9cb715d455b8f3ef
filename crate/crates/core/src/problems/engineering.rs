//! Constrained mechanical design problems.
//!
//! Each evaluator returns the objective in its natural sense together with
//! every constraint as stated (`>= 0`, `<= 0` or `= 0`), so reports can print
//! the same g(x) columns a design table would.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::penalty::ConstraintValue;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EngineeringId {
    ClutchBrake,
    RobotGripper,
    RollingBearing,
    ThrustBearing,
    Belleville,
    StepCone,
    SpeedReducer,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DesignEval {
    pub objective: f64,
    pub constraints: Vec<ConstraintValue>,
    /// Breach that is not one of the stated constraints, e.g. an impossible
    /// linkage geometry.
    pub extra_violation: f64,
}

impl EngineeringId {
    pub const ALL: [EngineeringId; 7] = [
        Self::ClutchBrake,
        Self::RobotGripper,
        Self::RollingBearing,
        Self::ThrustBearing,
        Self::Belleville,
        Self::StepCone,
        Self::SpeedReducer,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::ClutchBrake => "clutch_brake",
            Self::RobotGripper => "robot_gripper",
            Self::RollingBearing => "rolling_bearing",
            Self::ThrustBearing => "thrust_bearing",
            Self::Belleville => "belleville",
            Self::StepCone => "step_cone",
            Self::SpeedReducer => "speed_reducer",
        }
    }

    pub fn code(self) -> &'static str {
        match self {
            Self::ClutchBrake => "b01",
            Self::RobotGripper => "b02",
            Self::RollingBearing => "b03",
            Self::ThrustBearing => "b04",
            Self::Belleville => "b05",
            Self::StepCone => "b06",
            Self::SpeedReducer => "b07",
        }
    }

    pub fn parse(name: &str) -> Option<Self> {
        let lower = name.to_ascii_lowercase().replace('-', "_");
        Self::ALL
            .into_iter()
            .find(|id| id.name() == lower || id.code() == lower)
    }

    pub fn maximize(self) -> bool {
        self == Self::RollingBearing
    }

    pub fn variable_names(self) -> &'static [&'static str] {
        match self {
            Self::ClutchBrake => &["r_i", "r_o", "t", "F", "Z"],
            Self::RobotGripper => &["a", "b", "c", "e", "f", "l", "delta"],
            Self::RollingBearing => &[
                "D_m", "D_b", "Z", "f_i", "f_o", "K_Dmin", "K_Dmax", "epsilon", "e", "zeta",
            ],
            Self::ThrustBearing => &["R", "R_0", "mu", "Q"],
            Self::Belleville => &["t", "h", "D_i", "D_e"],
            Self::StepCone => &["d_1", "d_2", "d_3", "d_4", "w"],
            Self::SpeedReducer => &["x_1", "x_2", "x_3", "x_4", "x_5", "x_6", "x_7"],
        }
    }

    // Upper angle bound as printed.
    #[allow(clippy::approx_constant)]
    pub fn bounds(self) -> (Vec<f64>, Vec<f64>) {
        let (lo, hi): (&[f64], &[f64]) = match self {
            Self::ClutchBrake => (
                &[60.0, 90.0, 1.0, 600.0, 2.0],
                &[80.0, 110.0, 3.0, 1000.0, 9.0],
            ),
            Self::RobotGripper => (
                &[10.0, 10.0, 100.0, 0.0, 10.0, 100.0, 1.0],
                &[150.0, 150.0, 200.0, 50.0, 150.0, 300.0, 3.14],
            ),
            Self::RollingBearing => (
                &[
                    0.5 * (BR_D + BR_SD),
                    0.15 * (BR_D - BR_SD),
                    4.0,
                    0.515,
                    0.515,
                    0.4,
                    0.6,
                    0.3,
                    0.02,
                    0.6,
                ],
                &[
                    0.6 * (BR_D + BR_SD),
                    0.45 * (BR_D - BR_SD),
                    50.0,
                    0.6,
                    0.6,
                    0.5,
                    0.7,
                    0.4,
                    0.1,
                    0.85,
                ],
            ),
            Self::ThrustBearing => (&[1.0, 1.0, 1e-6, 1.0], &[16.0, 16.0, 16e-6, 16.0]),
            Self::Belleville => (&[0.01, 0.05, 5.0, 5.0], &[6.0, 0.5, 15.0, 15.0]),
            Self::StepCone => (&[1.0; 5], &[100.0; 5]),
            Self::SpeedReducer => (
                &[2.6, 0.7, 17.0, 7.3, 7.8, 2.9, 5.0],
                &[3.6, 0.8, 28.0, 8.3, 8.3, 3.9, 5.5],
            ),
        };
        (lo.to_vec(), hi.to_vec())
    }

    pub fn eval(self, x: &[f64]) -> DesignEval {
        match self {
            Self::ClutchBrake => clutch_brake(x),
            Self::RobotGripper => robot_gripper(x),
            Self::RollingBearing => rolling_bearing(x),
            Self::ThrustBearing => thrust_bearing(x),
            Self::Belleville => belleville(x),
            Self::StepCone => step_cone(x),
            Self::SpeedReducer => speed_reducer(x),
        }
    }
}

fn labelled(prefix: &str, i: usize) -> String {
    format!("{prefix}{i}")
}

fn all_ge(values: &[f64]) -> Vec<ConstraintValue> {
    values
        .iter()
        .enumerate()
        .map(|(i, &v)| ConstraintValue::ge(labelled("g", i + 1), v))
        .collect()
}

fn all_le(values: &[f64]) -> Vec<ConstraintValue> {
    values
        .iter()
        .enumerate()
        .map(|(i, &v)| ConstraintValue::le(labelled("g", i + 1), v))
        .collect()
}

pub fn clutch_brake(x: &[f64]) -> DesignEval {
    const DELTA_R: f64 = 20.0;
    const DELTA: f64 = 0.5;
    const L_MAX: f64 = 30.0;
    const V_SR_MAX: f64 = 10.0;
    const MU: f64 = 0.5;
    const S: f64 = 1.5;
    const M_S: f64 = 40.0;
    const M_F: f64 = 3.0;
    const N: f64 = 250.0;
    const P_MAX: f64 = 1.0;
    const I_Z: f64 = 55.0;
    const T_MAX: f64 = 15.0;
    const RHO: f64 = 7.8e-6;

    let (ri, ro, t, f, z) = (x[0], x[1], x[2], x[3], x[4]);
    let sq = ro * ro - ri * ri;
    let cu = ro.powi(3) - ri.powi(3);
    let objective = PI * sq * t * (z + 1.0) * RHO;

    let mh = 2.0 / 3.0 * MU * f * z * cu / sq / 1000.0;
    let prz = f / (PI * sq);
    let vsr = 2.0 * PI * N * cu / (90.0 * sq) / 1000.0;
    let torque_time = I_Z * PI * N / (30.0 * (mh + M_F));

    DesignEval {
        objective,
        constraints: all_ge(&[
            ro - ri - DELTA_R,
            L_MAX - (z + 1.0) * (t + DELTA),
            P_MAX - prz,
            P_MAX * V_SR_MAX - prz * vsr,
            V_SR_MAX - vsr,
            T_MAX - torque_time,
            mh - S * M_S,
            torque_time,
        ]),
        extra_violation: 0.0,
    }
}

const GRIPPER_Y_MIN: f64 = 50.0;
const GRIPPER_Y_MAX: f64 = 100.0;
const GRIPPER_Y_G: f64 = 150.0;
const GRIPPER_Z_MAX: f64 = 100.0;
const GRIPPER_P: f64 = 100.0;
/// Grid intervals used for the inner scan over the actuator displacement.
pub const GRIPPER_Z_STEPS: usize = 200;

struct Linkage {
    alpha: f64,
    beta: f64,
    breach: f64,
}

fn linkage(a: f64, b: f64, e: f64, l: f64, z: f64) -> Linkage {
    let d = ((l - z).powi(2) + e * e).sqrt();
    let phi = e.atan2(l - z);
    let ca = (a * a + d * d - b * b) / (2.0 * a * d);
    let cb = (b * b + d * d - a * a) / (2.0 * b * d);
    let breach = (ca.abs() - 1.0).max(0.0) + (cb.abs() - 1.0).max(0.0);
    Linkage {
        alpha: ca.clamp(-1.0, 1.0).acos() + phi,
        beta: cb.clamp(-1.0, 1.0).acos() - phi,
        breach: if breach.is_finite() { breach } else { 1.0 },
    }
}

pub fn robot_gripper(x: &[f64]) -> DesignEval {
    let (a, b, c, e, ff, l, delta) = (x[0], x[1], x[2], x[3], x[4], x[5], x[6]);

    let mut fmax = f64::NEG_INFINITY;
    let mut fmin = f64::INFINITY;
    let mut breach: f64 = 0.0;
    for k in 0..=GRIPPER_Z_STEPS {
        let z = GRIPPER_Z_MAX * k as f64 / GRIPPER_Z_STEPS as f64;
        let lk = linkage(a, b, e, l, z);
        breach = breach.max(lk.breach);
        let force = GRIPPER_P * b * (lk.alpha + lk.beta).sin() / (2.0 * c * lk.alpha.cos());
        if force.is_finite() {
            fmax = fmax.max(force);
            fmin = fmin.min(force);
        } else {
            breach = breach.max(1.0);
        }
    }
    let objective = if fmax >= fmin { fmax - fmin } else { 0.0 };

    let y = |z: f64| {
        let lk = linkage(a, b, e, l, z);
        2.0 * (e + ff + c * (lk.beta + delta).sin())
    };
    let d = |z: f64| ((l - z).powi(2) + e * e).sqrt();
    let y_zmax = y(GRIPPER_Z_MAX);
    let y_0 = y(0.0);

    DesignEval {
        objective,
        constraints: all_ge(&[
            GRIPPER_Y_MIN - y_zmax,
            y_zmax,
            y_0 - GRIPPER_Y_MAX,
            GRIPPER_Y_G - y_0,
            (a + b).powi(2) - l * l - e * e,
            (l - GRIPPER_Z_MAX).powi(2) + (a - e).powi(2) - b * b,
            l - GRIPPER_Z_MAX,
            d(GRIPPER_Z_MAX) + b - a,
            d(0.0) + b - a,
            b + a - d(0.0),
        ]),
        extra_violation: breach,
    }
}

const BR_D: f64 = 160.0;
const BR_SD: f64 = 90.0;
const BR_BW: f64 = 30.0;

pub fn rolling_bearing(x: &[f64]) -> DesignEval {
    let (dm, db, z, fi, fo, kdmin, kdmax, eps, e, zeta) =
        (x[0], x[1], x[2], x[3], x[4], x[5], x[6], x[7], x[8], x[9]);
    let (big_d, d) = (BR_D, BR_SD);

    let gamma = db / dm;
    let ratio = 1.04
        * ((1.0 - gamma) / (1.0 + gamma)).powf(1.72)
        * (fi * (2.0 * fo - 1.0) / (fo * (2.0 * fi - 1.0))).powf(0.41);
    let fc = 37.91
        * (1.0 + ratio.powf(10.0 / 3.0)).powf(-0.3)
        * (gamma.powf(0.3) * (1.0 - gamma).powf(1.39) / (1.0 + gamma).powf(1.0 / 3.0))
        * (2.0 * fi / (2.0 * fi - 1.0)).powf(0.41);
    let objective = if db <= 25.4 {
        fc * z.powf(2.0 / 3.0) * db.powf(1.8)
    } else {
        3.64 * fc * z.powf(2.0 / 3.0) * db.powf(1.4)
    };

    let t = big_d - d - 2.0 * db;
    let u = (big_d - d) / 2.0 - 3.0 * t / 4.0;
    let v = big_d / 2.0 - t / 4.0 - db;
    let w = d / 2.0 + t / 4.0;
    let arg = (u * u + v * v - w * w) / (2.0 * u * v);
    let extra = (arg.abs() - 1.0).max(0.0);
    let phi0 = 2.0 * PI - 2.0 * arg.clamp(-1.0, 1.0).acos();

    let constraints = vec![
        ConstraintValue::ge("g1", phi0 / (2.0 * (db / dm).asin()) - z + 1.0),
        ConstraintValue::ge("g2", 2.0 * db - kdmin * (big_d - d)),
        ConstraintValue::ge("g3", kdmax * (big_d - d) - 2.0 * db),
        ConstraintValue::le("g4", zeta * BR_BW - db),
        ConstraintValue::ge("g5", dm - 0.5 * (big_d + d)),
        ConstraintValue::ge("g6", (0.5 + e) * (big_d + d) - dm),
        ConstraintValue::ge("g7", 0.5 * (big_d - dm - db) - eps * db),
        ConstraintValue::ge("g8", fi - 0.515),
        ConstraintValue::ge("g9", fo - 0.515),
    ];
    DesignEval {
        objective,
        constraints,
        extra_violation: if extra.is_finite() { extra } else { 1.0 },
    }
}

pub fn thrust_bearing(x: &[f64]) -> DesignEval {
    const GAMMA: f64 = 0.0307;
    const C: f64 = 0.5;
    const N_EXP: f64 = -3.55;
    const C1: f64 = 10.04;
    const WS: f64 = 101_000.0;
    const P_MAX: f64 = 1000.0;
    const DT_MAX: f64 = 50.0;
    const H_MIN: f64 = 0.001;
    const G: f64 = 386.4;
    const N: f64 = 750.0;

    let (r, r0, mu, q) = (x[0], x[1], x[2], x[3]);
    let p = ((8.122e6 * mu + 0.8).log10().log10() - C1) / N_EXP;
    let delta_t = 2.0 * (10f64.powf(p) - 560.0);
    let ef = 9336.0 * q * GAMMA * C * delta_t;
    let omega = 2.0 * PI * N / 60.0;
    let h = omega * omega * (2.0 * PI * mu / ef) * (r.powi(4) / 4.0 - r0.powi(4) / 4.0);
    let ln_ratio = (r / r0).ln();
    let p0 = 6.0 * mu * q / (PI * h.powi(3)) * ln_ratio;
    let w = PI * p0 / 2.0 * (r * r - r0 * r0) / ln_ratio;

    // The 12 converts the power loss from in-lb/s to ft-lb/s.
    let objective = (q * p0 / 0.7 + ef) / 12.0;

    DesignEval {
        objective,
        constraints: all_ge(&[
            w - WS,
            P_MAX - p0,
            DT_MAX - delta_t,
            h - H_MIN,
            r - r0,
            0.001 - GAMMA / (G * p0) * (q / (2.0 * PI * r * h)).powi(2),
            5000.0 - w / (PI * (r * r - r0 * r0)),
        ]),
        extra_violation: 0.0,
    }
}

/// Load-deflection factor for a Belleville spring with height ratio `a`.
pub fn belleville_factor(a: f64) -> f64 {
    const TABLE: [f64; 15] = [
        1.0, 0.85, 0.77, 0.71, 0.66, 0.63, 0.6, 0.58, 0.56, 0.55, 0.53, 0.52, 0.51, 0.51, 0.5,
    ];
    let tenths = (a * 10.0).round();
    let idx = (tenths - 14.0).clamp(0.0, 14.0) as usize;
    TABLE[idx]
}

pub fn belleville(x: &[f64]) -> DesignEval {
    const P_MAX: f64 = 5400.0;
    const DELTA_MAX: f64 = 0.2;
    const S: f64 = 200e3;
    const E: f64 = 30e6;
    const MU: f64 = 0.3;
    const H: f64 = 2.0;
    const D_MAX: f64 = 12.01;

    let (t, h, di, de) = (x[0], x[1], x[2], x[3]);
    let objective = 0.07075 * PI * (de * de - di * di) * t;

    // A non-increasing diameter pair is caught by g6; keep the factors finite.
    let k = (de / di).max(1.0 + 1e-6);
    let lnk = k.ln();
    let pre = 6.0 / (PI * lnk);
    let alpha = pre * ((k - 1.0) / k).powi(2);
    let beta = pre * ((k - 1.0) / lnk - 1.0);
    let gamma = pre * (k - 1.0) / 2.0;
    let coef = 4.0 * E * DELTA_MAX / ((1.0 - MU * MU) * alpha * de * de);
    let delta_l = belleville_factor(h / t) * h;
    let gap = (de - di).max(1e-12);

    DesignEval {
        objective,
        constraints: all_ge(&[
            S - coef * (beta * (h - DELTA_MAX / 2.0) + gamma * t),
            coef * ((h - DELTA_MAX / 2.0) * (h - DELTA_MAX) * t + t.powi(3)) - P_MAX,
            delta_l - DELTA_MAX,
            H - h - t,
            D_MAX - de,
            de - di,
            0.3 - h / gap,
        ]),
        extra_violation: 0.0,
    }
}

pub fn step_cone(x: &[f64]) -> DesignEval {
    const RHO: f64 = 7200.0;
    const A: f64 = 3.0;
    const MU: f64 = 0.35;
    const S: f64 = 1.75e6;
    const T: f64 = 8e-3;
    const N: f64 = 350.0;
    const SPEEDS: [f64; 4] = [750.0, 450.0, 250.0, 150.0];
    const P_REQ: f64 = 0.75 * 745.6998;

    let d: Vec<f64> = x[..4].iter().map(|v| v / 1000.0).collect();
    let w = x[4] / 1000.0;

    let objective = RHO
        * w
        * d.iter()
            .zip(SPEEDS)
            .map(|(di, ni)| di * di * (1.0 + (ni / N).powi(2)))
            .sum::<f64>();

    let mut belt = [0.0; 4];
    let mut tension = [0.0; 4];
    let mut power = [0.0; 4];
    for i in 0..4 {
        let ratio = SPEEDS[i] / N;
        belt[i] = PI * d[i] / 2.0 * (1.0 + ratio)
            + (ratio - 1.0).powi(2) * d[i] * d[i] / (4.0 * A)
            + 2.0 * A;
        let theta = PI - 2.0 * ((ratio - 1.0) * d[i] / (2.0 * A)).asin();
        tension[i] = (MU * theta).exp();
        power[i] = S * T * w * (1.0 - (-MU * theta).exp()) * PI * d[i] * SPEEDS[i] / 60.0;
    }

    let mut constraints = vec![
        ConstraintValue::eq("h1", belt[0] - belt[1]),
        ConstraintValue::eq("h2", belt[0] - belt[2]),
        ConstraintValue::eq("h3", belt[0] - belt[3]),
    ];
    for (i, r) in tension.iter().enumerate() {
        constraints.push(ConstraintValue::ge(labelled("g", i + 1), r - 2.0));
    }
    for (i, p) in power.iter().enumerate() {
        constraints.push(ConstraintValue::ge(labelled("g", i + 5), p - P_REQ));
    }
    DesignEval {
        objective,
        constraints,
        extra_violation: 0.0,
    }
}

#[allow(clippy::approx_constant)]
pub fn speed_reducer(x: &[f64]) -> DesignEval {
    let (x1, x2, x3, x4, x5, x6, x7) = (x[0], x[1], x[2], x[3], x[4], x[5], x[6]);
    let objective = 0.7854 * x1 * x2 * x2 * (3.3333 * x3 * x3 + 14.9334 * x3 - 43.0934)
        - 1.508 * x1 * (x6 * x6 + x7 * x7)
        + 7.4777 * (x6.powi(3) + x7.powi(3))
        + 0.7854 * (x4 * x6 * x6 + x5 * x7 * x7);
    let x23 = x2 * x3;
    DesignEval {
        objective,
        constraints: all_le(&[
            27.0 / (x1 * x2 * x2 * x3) - 1.0,
            397.5 / (x1 * x2 * x2 * x3 * x3) - 1.0,
            1.93 * x4.powi(3) / (x23 * x6.powi(4)) - 1.0,
            1.93 * x5.powi(3) / (x23 * x7.powi(4)) - 1.0,
            ((745.0 * x4 / x23).powi(2) + 16.9e6).sqrt() / (110.0 * x6.powi(3)) - 1.0,
            ((745.0 * x5 / x23).powi(2) + 157.5e6).sqrt() / (85.0 * x7.powi(3)) - 1.0,
            x23 / 40.0 - 1.0,
            5.0 * x2 / x1 - 1.0,
            x1 / (12.0 * x2) - 1.0,
            (1.5 * x6 + 1.9) / x4 - 1.0,
            (1.1 * x7 + 1.9) / x5 - 1.0,
        ]),
        extra_violation: 0.0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn values(e: &DesignEval) -> Vec<f64> {
        e.constraints.iter().map(|c| c.value).collect()
    }

    #[test]
    fn clutch_reference_design() {
        let e = clutch_brake(&[70.0, 90.0, 1.0, 810.0, 3.0]);
        assert!((e.objective - 0.313657).abs() < 5e-7);
        let g = values(&e);
        let expected = [0.0, 24.0, 0.919, 9.830, 7.895, 0.702, 37.706, 14.298];
        for (got, want) in g.iter().zip(expected) {
            assert!(
                (got - want).abs() <= 1e-3 * want.abs().max(1.0),
                "{got} vs {want}"
            );
        }
    }

    #[test]
    fn speed_reducer_reference_design() {
        let e = speed_reducer(&[3.5, 0.7, 17.0, 7.3, 7.716, 3.351, 5.287]);
        assert!((e.objective - 2994.9).abs() < 0.1);
        let g = values(&e);
        assert!((g[0] + 0.074).abs() < 1e-3);
        assert!((g[1] + 0.198).abs() < 1e-3);
        assert!((g[2] + 0.499).abs() < 1e-3);
        assert!((g[3] + 0.905).abs() < 1e-3);
        assert!((g[6] + 0.703).abs() < 1e-3);
        assert!((g[8] + 0.583).abs() < 1e-3);
        assert!((g[9] + 0.051).abs() < 1e-3);
    }

    #[test]
    fn bearing_with_integer_ball_count() {
        let x = [
            125.719, 21.426, 11.0, 0.515, 0.515, 0.404, 0.700, 0.300, 0.020, 0.600,
        ];
        let e = rolling_bearing(&x);
        assert!((e.objective - 81862.64).abs() < 0.1, "{}", e.objective);
        let g = values(&e);
        assert!((g[1] - 14.576).abs() < 1e-2);
        assert!((g[2] - 6.149).abs() < 1e-2);
        assert!((g[3] + 3.426).abs() < 1e-2);
        assert!((g[4] - 0.719).abs() < 1e-2);
        assert!((g[5] - 4.281).abs() < 1e-2);
    }

    #[test]
    fn thrust_bearing_reference_design() {
        let e = thrust_bearing(&[5.955, 5.389, 5.358e-6, 2.269]);
        assert!((e.objective - 1625.443).abs() < 2.0, "{}", e.objective);
        let g = values(&e);
        assert!((g[3] - 3.244e-4).abs() < 5e-6);
        assert!((g[4] - 0.566).abs() < 1e-3);
        assert!((g[5] - 8.334e-4).abs() < 1e-6);
    }

    #[test]
    fn belleville_factor_table() {
        assert_eq!(belleville_factor(0.5), 1.0);
        assert_eq!(belleville_factor(1.44), 1.0);
        assert_eq!(belleville_factor(1.46), 0.85);
        assert_eq!(belleville_factor(2.0), 0.6);
        assert_eq!(belleville_factor(2.74), 0.51);
        assert_eq!(belleville_factor(2.8), 0.5);
        assert_eq!(belleville_factor(9.0), 0.5);
    }

    #[test]
    fn belleville_reference_design() {
        let e = belleville(&[0.204, 0.200, 10.025, 12.006]);
        assert!((e.objective - 1.9807).abs() < 5e-3, "{}", e.objective);
        let g = values(&e);
        assert!((g[3] - 1.596).abs() < 1e-9);
        assert!((g[4] - 0.004).abs() < 1e-9);
        assert!((g[5] - 1.981).abs() < 1e-9);
        assert!((g[6] - 0.199).abs() < 1e-3);
    }

    #[test]
    fn belleville_collapsed_diameters_stay_finite() {
        let e = belleville(&[0.2, 0.2, 10.0, 10.0]);
        assert!(e.objective.is_finite());
        assert!(e.constraints.iter().all(|c| c.value.is_finite()));
    }

    #[test]
    fn step_cone_reference_design() {
        let e = step_cone(&[35.871, 49.357, 65.804, 78.903, 96.397]);
        assert!((e.objective - 19.1331).abs() < 1e-3, "{}", e.objective);
        let c = &e.constraints;
        assert!(c[..3].iter().all(|h| h.value.abs() < 1e-4));
        let g: Vec<f64> = c[3..].iter().map(|c| c.value).collect();
        let expected = [0.989, 0.999, 1.009, 1.019, 705.658, 486.668, 216.927];
        for (got, want) in g.iter().zip(expected) {
            assert!((got - want).abs() <= 1e-2 * want.abs(), "{got} vs {want}");
        }
    }

    #[test]
    fn gripper_reference_design() {
        let e = robot_gripper(&[149.954, 119.441, 200.0, 27.535, 145.927, 158.477, 2.743]);
        let g = values(&e);
        let expected = [
            39.003, 10.997, 47.218, 2.782, 46700.191, 4139.838, 58.477, 34.123, 130.339, 108.543,
        ];
        for (got, want) in g.iter().zip(expected) {
            assert!((got - want).abs() <= 1e-2 * want.abs(), "{got} vs {want}");
        }
        assert_eq!(e.extra_violation, 0.0);
        assert!(e.objective > 0.0 && e.objective.is_finite());
    }

    #[test]
    fn names_parse() {
        for id in EngineeringId::ALL {
            assert_eq!(EngineeringId::parse(id.name()), Some(id));
            assert_eq!(EngineeringId::parse(id.code()), Some(id));
        }
        assert_eq!(
            EngineeringId::parse("B07"),
            Some(EngineeringId::SpeedReducer)
        );
    }
}
