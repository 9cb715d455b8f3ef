//! Classic unconstrained test functions.

use std::f64::consts::{E, PI};

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BenchmarkId {
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
    F7,
    F8,
    F9,
    F10,
    F11,
    F12,
    F13,
    F14,
    F15,
    F16,
    F17,
    F18,
    F19,
    F20,
    F21,
    F22,
    F23,
    Weierstrass,
}

pub(crate) struct BenchmarkSpec {
    pub name: &'static str,
    pub lower: f64,
    pub upper: f64,
    pub default_dim: usize,
    pub fixed_dim: bool,
    pub known_best: Option<KnownBest>,
}

#[derive(Debug, Clone, Copy)]
pub(crate) enum KnownBest {
    Value(f64),
    PerDim(f64),
}

impl BenchmarkId {
    pub const ALL: [BenchmarkId; 24] = [
        Self::F1,
        Self::F2,
        Self::F3,
        Self::F4,
        Self::F5,
        Self::F6,
        Self::F7,
        Self::F8,
        Self::F9,
        Self::F10,
        Self::F11,
        Self::F12,
        Self::F13,
        Self::F14,
        Self::F15,
        Self::F16,
        Self::F17,
        Self::F18,
        Self::F19,
        Self::F20,
        Self::F21,
        Self::F22,
        Self::F23,
        Self::Weierstrass,
    ];

    pub fn parse(name: &str) -> Option<Self> {
        let lower = name.to_ascii_lowercase();
        Self::ALL.into_iter().find(|id| id.spec().name == lower)
    }

    pub fn name(self) -> &'static str {
        self.spec().name
    }

    pub(crate) fn spec(self) -> BenchmarkSpec {
        use KnownBest::*;
        let (name, lower, upper, default_dim, fixed_dim, known_best) = match self {
            Self::F1 => ("f1", -100.0, 100.0, 30, false, Some(Value(0.0))),
            Self::F2 => ("f2", -10.0, 10.0, 30, false, Some(Value(0.0))),
            Self::F3 => ("f3", -100.0, 100.0, 30, false, Some(Value(0.0))),
            Self::F4 => ("f4", -100.0, 100.0, 30, false, Some(Value(0.0))),
            Self::F5 => ("f5", -30.0, 30.0, 30, false, Some(Value(0.0))),
            Self::F6 => ("f6", -100.0, 100.0, 30, false, Some(Value(0.0))),
            Self::F7 => ("f7", -1.28, 1.28, 30, false, Some(Value(0.0))),
            Self::F8 => ("f8", -500.0, 500.0, 30, false, Some(PerDim(-418.9829))),
            Self::F9 => ("f9", -5.12, 5.12, 30, false, Some(Value(0.0))),
            Self::F10 => ("f10", -32.0, 32.0, 30, false, Some(Value(0.0))),
            Self::F11 => ("f11", -512.0, 512.0, 30, false, Some(Value(0.0))),
            Self::F12 => ("f12", -50.0, 50.0, 30, false, Some(Value(0.0))),
            Self::F13 => ("f13", -50.0, 50.0, 30, false, Some(Value(0.0))),
            Self::F14 => ("f14", -65.536, 65.536, 2, true, Some(Value(1.0))),
            Self::F15 => ("f15", -5.0, 5.0, 4, true, Some(Value(0.0003075))),
            Self::F16 => ("f16", -5.0, 5.0, 2, true, Some(Value(-1.0316285))),
            Self::F17 => ("f17", -5.0, 5.0, 2, true, Some(Value(0.398))),
            Self::F18 => ("f18", -2.0, 2.0, 2, true, Some(Value(3.0))),
            Self::F19 => ("f19", 0.0, 1.0, 3, true, Some(Value(-3.86))),
            Self::F20 => ("f20", 0.0, 1.0, 6, true, Some(Value(-3.32))),
            Self::F21 => ("f21", 0.0, 10.0, 4, true, Some(Value(-10.1532))),
            Self::F22 => ("f22", 0.0, 10.0, 4, true, Some(Value(-10.4028))),
            Self::F23 => ("f23", 0.0, 10.0, 4, true, Some(Value(-10.5363))),
            Self::Weierstrass => ("weierstrass", -0.5, 0.5, 5, false, Some(Value(0.0))),
        };
        BenchmarkSpec {
            name,
            lower,
            upper,
            default_dim,
            fixed_dim,
            known_best,
        }
    }

    /// Noise-free value. F7's additive noise is applied by the caller.
    pub fn eval(self, x: &[f64]) -> f64 {
        match self {
            Self::F1 => sphere(x),
            Self::F2 => {
                let s: f64 = x.iter().map(|v| v.abs()).sum();
                let p: f64 = x.iter().map(|v| v.abs()).product();
                s + p
            }
            Self::F3 => {
                let mut acc = 0.0;
                let mut prefix = 0.0;
                for v in x {
                    prefix += v;
                    acc += prefix * prefix;
                }
                acc
            }
            Self::F4 => x.iter().fold(0.0, |m, v| m.max(v.abs())),
            Self::F5 => x
                .windows(2)
                .map(|w| 100.0 * (w[1] - w[0] * w[0]).powi(2) + (w[0] - 1.0).powi(2))
                .sum(),
            Self::F6 => x.iter().map(|v| (v + 0.5).powi(2)).sum(),
            Self::F7 => x
                .iter()
                .enumerate()
                .map(|(i, v)| (i + 1) as f64 * v.powi(4))
                .sum(),
            Self::F8 => x.iter().map(|v| -v * v.abs().sqrt().sin()).sum(),
            Self::F9 => rastrigin(x),
            Self::F10 => ackley(x),
            Self::F11 => griewank(x),
            Self::F12 => penalized1(x),
            Self::F13 => penalized2(x),
            Self::F14 => foxholes(x),
            Self::F15 => kowalik(x),
            Self::F16 => {
                let (a, b) = (x[0], x[1]);
                4.0 * a * a - 2.1 * a.powi(4) + a.powi(6) / 3.0 + a * b - 4.0 * b * b
                    + 4.0 * b.powi(4)
            }
            Self::F17 => {
                let (a, b) = (x[0], x[1]);
                (b - 5.1 / (4.0 * PI * PI) * a * a + 5.0 / PI * a - 6.0).powi(2)
                    + 10.0 * (1.0 - 1.0 / (8.0 * PI)) * a.cos()
                    + 10.0
            }
            Self::F18 => {
                let (a, b) = (x[0], x[1]);
                let p = 1.0
                    + (a + b + 1.0).powi(2)
                        * (19.0 - 14.0 * a + 3.0 * a * a - 14.0 * b + 6.0 * a * b + 3.0 * b * b);
                let q = 30.0
                    + (2.0 * a - 3.0 * b).powi(2)
                        * (18.0 - 32.0 * a + 12.0 * a * a + 48.0 * b - 36.0 * a * b + 27.0 * b * b);
                p * q
            }
            Self::F19 => hartmann(x, &H3_A, &H3_P),
            Self::F20 => hartmann(x, &H6_A, &H6_P),
            Self::F21 => shekel(x, 5),
            Self::F22 => shekel(x, 7),
            Self::F23 => shekel(x, 10),
            Self::Weierstrass => weierstrass(x),
        }
    }
}

pub fn sphere(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

pub fn rastrigin(x: &[f64]) -> f64 {
    x.iter()
        .map(|v| v * v - 10.0 * (2.0 * PI * v).cos() + 10.0)
        .sum()
}

pub fn ackley(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    let sq = x.iter().map(|v| v * v).sum::<f64>() / n;
    let cs = x.iter().map(|v| (2.0 * PI * v).cos()).sum::<f64>() / n;
    -20.0 * (-0.2 * sq.sqrt()).exp() - cs.exp() + 20.0 + E
}

pub fn griewank(x: &[f64]) -> f64 {
    let s = x.iter().map(|v| v * v).sum::<f64>() / 4000.0;
    let p: f64 = x
        .iter()
        .enumerate()
        .map(|(i, v)| (v / ((i + 1) as f64).sqrt()).cos())
        .product();
    s - p + 1.0
}

const W_A: f64 = 0.5;
const W_B: f64 = 3.0;
const W_KMAX: i32 = 20;

/// Weierstrass with a = 0.5, b = 3, k_max = 20; exactly zero at the origin.
pub fn weierstrass(x: &[f64]) -> f64 {
    let base: f64 = (0..=W_KMAX)
        .map(|k| W_A.powi(k) * (PI * W_B.powi(k)).cos())
        .sum();
    x.iter()
        .map(|v| {
            let inner: f64 = (0..=W_KMAX)
                .map(|k| {
                    let bk = W_B.powi(k);
                    W_A.powi(k) * (2.0 * PI * (bk * (v + 0.5))).cos()
                })
                .sum();
            inner - base
        })
        .sum()
}

fn u(v: f64, a: f64, k: f64, m: i32) -> f64 {
    if v > a {
        k * (v - a).powi(m)
    } else if v < -a {
        k * (-v - a).powi(m)
    } else {
        0.0
    }
}

fn penalized1(x: &[f64]) -> f64 {
    let n = x.len();
    let y: Vec<f64> = x.iter().map(|v| 1.0 + (v + 1.0) / 4.0).collect();
    let mut s = 10.0 * (PI * y[0]).sin().powi(2);
    for i in 0..n - 1 {
        s += (y[i] - 1.0).powi(2) * (1.0 + 10.0 * (PI * y[i + 1]).sin().powi(2));
    }
    s += (y[n - 1] - 1.0).powi(2);
    PI / n as f64 * s + x.iter().map(|&v| u(v, 10.0, 100.0, 4)).sum::<f64>()
}

fn penalized2(x: &[f64]) -> f64 {
    let n = x.len();
    let mut s = (3.0 * PI * x[0]).sin().powi(2);
    for i in 0..n - 1 {
        s += (x[i] - 1.0).powi(2) * (1.0 + (3.0 * PI * x[i + 1]).sin().powi(2));
    }
    s += (x[n - 1] - 1.0).powi(2) * (1.0 + (2.0 * PI * x[n - 1]).sin().powi(2));
    0.1 * s + x.iter().map(|&v| u(v, 5.0, 100.0, 4)).sum::<f64>()
}

fn foxholes(x: &[f64]) -> f64 {
    const G: [f64; 5] = [-32.0, -16.0, 0.0, 16.0, 32.0];
    let mut s = 1.0 / 500.0;
    for j in 0..25 {
        let a0 = G[j % 5];
        let a1 = G[j / 5];
        let d = (x[0] - a0).powi(6) + (x[1] - a1).powi(6);
        s += 1.0 / ((j + 1) as f64 + d);
    }
    1.0 / s
}

const KOWALIK_A: [f64; 11] = [
    0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627, 0.0456, 0.0342, 0.0323, 0.0235, 0.0246,
];
const KOWALIK_B_INV: [f64; 11] = [0.25, 0.5, 1.0, 2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0];

fn kowalik(x: &[f64]) -> f64 {
    KOWALIK_A
        .iter()
        .zip(KOWALIK_B_INV)
        .map(|(a, binv)| {
            let b = 1.0 / binv;
            let m = x[0] * (b * b + b * x[1]) / (b * b + b * x[2] + x[3]);
            (a - m).powi(2)
        })
        .sum()
}

const H_C: [f64; 4] = [1.0, 1.2, 3.0, 3.2];
const H3_A: [[f64; 3]; 4] = [
    [3.0, 10.0, 30.0],
    [0.1, 10.0, 35.0],
    [3.0, 10.0, 30.0],
    [0.1, 10.0, 35.0],
];
const H3_P: [[f64; 3]; 4] = [
    [0.3689, 0.1170, 0.2673],
    [0.4699, 0.4387, 0.7470],
    [0.1091, 0.8732, 0.5547],
    [0.03815, 0.5743, 0.8828],
];
const H6_A: [[f64; 6]; 4] = [
    [10.0, 3.0, 17.0, 3.5, 1.7, 8.0],
    [0.05, 10.0, 17.0, 0.1, 8.0, 14.0],
    [3.0, 3.5, 1.7, 10.0, 17.0, 8.0],
    [17.0, 8.0, 0.05, 10.0, 0.1, 14.0],
];
const H6_P: [[f64; 6]; 4] = [
    [0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886],
    [0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991],
    [0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650],
    [0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381],
];

fn hartmann<const D: usize>(x: &[f64], a: &[[f64; D]; 4], p: &[[f64; D]; 4]) -> f64 {
    -(0..4)
        .map(|i| {
            let e: f64 = (0..D).map(|j| a[i][j] * (x[j] - p[i][j]).powi(2)).sum();
            H_C[i] * (-e).exp()
        })
        .sum::<f64>()
}

const SHEKEL_A: [[f64; 4]; 10] = [
    [4.0, 4.0, 4.0, 4.0],
    [1.0, 1.0, 1.0, 1.0],
    [8.0, 8.0, 8.0, 8.0],
    [6.0, 6.0, 6.0, 6.0],
    [3.0, 7.0, 3.0, 7.0],
    [2.0, 9.0, 2.0, 9.0],
    [5.0, 5.0, 3.0, 3.0],
    [8.0, 1.0, 8.0, 1.0],
    [6.0, 2.0, 6.0, 2.0],
    [7.0, 3.6, 7.0, 3.6],
];
const SHEKEL_C: [f64; 10] = [0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5];

fn shekel(x: &[f64], m: usize) -> f64 {
    -(0..m)
        .map(|i| {
            let d: f64 = (0..4).map(|j| (x[j] - SHEKEL_A[i][j]).powi(2)).sum();
            1.0 / (d + SHEKEL_C[i])
        })
        .sum::<f64>()
}
