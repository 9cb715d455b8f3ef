//! Composite functions CF1-CF6 built from shifted, stretched components.
//!
//! Component optima are drawn once from a fixed seed, rotations are the
//! identity and biases run 0, 100, ..., 900. Each component is normalised by
//! its magnitude at the point (5, ..., 5) and scaled by 2000.

use rand::Rng as _;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::benchmarks::{ackley, griewank, rastrigin, sphere, weierstrass};

pub const COMPOSITION_DIM: usize = 10;
pub const COMPOSITION_BOUND: f64 = 5.0;
const N_COMPONENTS: usize = 10;
const SCALE_C: f64 = 2000.0;
const OPTIMA_SEED: u64 = 0x5eed_c0de;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CompositionId {
    Cf1,
    Cf2,
    Cf3,
    Cf4,
    Cf5,
    Cf6,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Component {
    Sphere,
    Griewank,
    Rastrigin,
    Weierstrass,
    Ackley,
}

impl Component {
    fn eval(self, z: &[f64]) -> f64 {
        match self {
            Component::Sphere => sphere(z),
            Component::Griewank => griewank(z),
            Component::Rastrigin => rastrigin(z),
            Component::Weierstrass => weierstrass(z),
            Component::Ackley => ackley(z),
        }
    }
}

impl CompositionId {
    pub const ALL: [CompositionId; 6] = [
        Self::Cf1,
        Self::Cf2,
        Self::Cf3,
        Self::Cf4,
        Self::Cf5,
        Self::Cf6,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Cf1 => "cf1",
            Self::Cf2 => "cf2",
            Self::Cf3 => "cf3",
            Self::Cf4 => "cf4",
            Self::Cf5 => "cf5",
            Self::Cf6 => "cf6",
        }
    }

    pub fn parse(name: &str) -> Option<Self> {
        let lower = name.to_ascii_lowercase();
        let alias = match lower.as_str() {
            "f24" => "cf1",
            "f25" => "cf2",
            "f26" => "cf3",
            "f27" => "cf4",
            "f28" => "cf5",
            "f29" => "cf6",
            other => other,
        };
        Self::ALL.into_iter().find(|id| id.name() == alias)
    }

    fn index(self) -> u64 {
        Self::ALL.iter().position(|&c| c == self).unwrap() as u64
    }
}

#[derive(Debug, Clone)]
pub struct Composition {
    id: CompositionId,
    components: [Component; N_COMPONENTS],
    sigma: [f64; N_COMPONENTS],
    lambda: [f64; N_COMPONENTS],
    bias: [f64; N_COMPONENTS],
    optima: Vec<Vec<f64>>,
    fmax: [f64; N_COMPONENTS],
}

impl Composition {
    pub fn new(id: CompositionId) -> Self {
        use Component::*;
        let (components, sigma, lambda) = match id {
            CompositionId::Cf1 => ([Sphere; 10], [1.0; 10], [5.0 / 100.0; 10]),
            CompositionId::Cf2 => ([Griewank; 10], [1.0; 10], [5.0 / 100.0; 10]),
            CompositionId::Cf3 => ([Griewank; 10], [1.0; 10], [1.0; 10]),
            CompositionId::Cf4 => (
                [
                    Ackley,
                    Ackley,
                    Rastrigin,
                    Rastrigin,
                    Weierstrass,
                    Weierstrass,
                    Griewank,
                    Griewank,
                    Sphere,
                    Sphere,
                ],
                [1.0; 10],
                [
                    5.0 / 32.0,
                    5.0 / 32.0,
                    1.0,
                    1.0,
                    5.0 / 0.5,
                    5.0 / 0.5,
                    5.0 / 100.0,
                    5.0 / 100.0,
                    5.0 / 100.0,
                    5.0 / 100.0,
                ],
            ),
            CompositionId::Cf5 => (
                [
                    Rastrigin,
                    Rastrigin,
                    Weierstrass,
                    Weierstrass,
                    Griewank,
                    Griewank,
                    Ackley,
                    Ackley,
                    Sphere,
                    Sphere,
                ],
                [1.0; 10],
                [
                    1.0 / 5.0,
                    1.0 / 5.0,
                    5.0 / 0.5,
                    5.0 / 0.5,
                    5.0 / 100.0,
                    5.0 / 100.0,
                    5.0 / 32.0,
                    5.0 / 32.0,
                    5.0 / 100.0,
                    5.0 / 100.0,
                ],
            ),
            CompositionId::Cf6 => (
                [
                    Rastrigin,
                    Rastrigin,
                    Weierstrass,
                    Weierstrass,
                    Griewank,
                    Griewank,
                    Ackley,
                    Ackley,
                    Sphere,
                    Sphere,
                ],
                [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0],
                [
                    0.1 * 1.0 / 5.0,
                    0.2 * 1.0 / 5.0,
                    0.3 * 5.0 / 0.5,
                    0.4 * 5.0 / 0.5,
                    0.5 * 5.0 / 100.0,
                    0.6 * 5.0 / 100.0,
                    0.7 * 5.0 / 32.0,
                    0.8 * 5.0 / 32.0,
                    0.9 * 5.0 / 100.0,
                    1.0 * 5.0 / 100.0,
                ],
            ),
        };

        let mut rng = ChaCha8Rng::seed_from_u64(OPTIMA_SEED + id.index());
        let optima: Vec<Vec<f64>> = (0..N_COMPONENTS)
            .map(|_| {
                (0..COMPOSITION_DIM)
                    .map(|_| rng.gen_range(-COMPOSITION_BOUND..COMPOSITION_BOUND))
                    .collect()
            })
            .collect();

        let mut bias = [0.0; N_COMPONENTS];
        let mut fmax = [0.0; N_COMPONENTS];
        for i in 0..N_COMPONENTS {
            bias[i] = 100.0 * i as f64;
            let probe = vec![COMPOSITION_BOUND / lambda[i]; COMPOSITION_DIM];
            fmax[i] = components[i].eval(&probe);
        }

        Self {
            id,
            components,
            sigma,
            lambda,
            bias,
            optima,
            fmax,
        }
    }

    pub fn id(&self) -> CompositionId {
        self.id
    }

    /// Optimum of the first component, where the composite reaches 0.
    pub fn global_optimum(&self) -> &[f64] {
        &self.optima[0]
    }

    pub fn optima(&self) -> &[Vec<f64>] {
        &self.optima
    }

    pub fn first_bias(&self) -> f64 {
        self.bias[0]
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        let d = x.len() as f64;
        let mut w = [0.0; N_COMPONENTS];
        for ((wi, optimum), sigma) in w.iter_mut().zip(&self.optima).zip(&self.sigma) {
            let dist2: f64 = x.iter().zip(optimum).map(|(a, o)| (a - o).powi(2)).sum();
            *wi = (-dist2 / (2.0 * d * sigma * sigma)).exp();
        }
        let wmax = w.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        for wi in w.iter_mut() {
            if *wi != wmax {
                *wi *= 1.0 - wmax.powi(10);
            }
        }
        let total: f64 = w.iter().sum();
        if total == 0.0 {
            w = [1.0; N_COMPONENTS];
        }
        let total: f64 = w.iter().sum();

        let mut z = vec![0.0; x.len()];
        let mut acc = 0.0;
        for (i, &wi) in w.iter().enumerate() {
            if wi == 0.0 {
                continue;
            }
            for (zj, (a, o)) in z.iter_mut().zip(x.iter().zip(&self.optima[i])) {
                *zj = (a - o) / self.lambda[i];
            }
            let fit = SCALE_C * self.components[i].eval(&z) / self.fmax[i];
            acc += wi / total * (fit + self.bias[i]);
        }
        acc
    }
}
