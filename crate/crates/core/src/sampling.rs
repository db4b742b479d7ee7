//! Reproducible random kinematics. Sample `i` of a sweep draws from its own
//! ChaCha stream `i` under the master seed, so results do not depend on how
//! samples are scheduled across threads.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::tensor::{boost_along, compose, rotation_matrix, FourVector, LorentzMatrix};

pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Uniform on the unit sphere.
pub fn random_direction<R: Rng>(rng: &mut R) -> [f64; 3] {
    let z: f64 = rng.random_range(-1.0..=1.0);
    let phi: f64 = rng.random_range(0.0..std::f64::consts::TAU);
    let r = (1.0 - z * z).max(0.0).sqrt();
    [r * phi.cos(), r * phi.sin(), z]
}

/// On-shell momentum with uniform direction and `|p⃗|` uniform in
/// `(0, pmax·m]`.
pub fn random_momentum<R: Rng>(rng: &mut R, mass: f64, pmax: f64) -> FourVector {
    let u: f64 = rng.random();
    let magnitude = pmax * mass * (1.0 - u);
    let n = random_direction(rng);
    FourVector::on_shell(mass, n.map(|c| c * magnitude))
}

/// Largest rapidity reached by momenta with `|p⃗| ≤ pmax·m`.
pub fn max_rapidity(pmax: f64) -> f64 {
    pmax.asinh()
}

/// `rotation(n̂, α) ∘ boost(d̂, ξ)` with `α ∈ [0, π]`, `ξ ∈ [0, ξ_max]`.
pub fn random_lorentz<R: Rng>(rng: &mut R, rapidity_max: f64) -> LorentzMatrix {
    let axis = random_direction(rng);
    let angle: f64 = rng.random_range(0.0..=std::f64::consts::PI);
    let dir = random_direction(rng);
    let xi: f64 = rng.random_range(0.0..=rapidity_max);
    let r = rotation_matrix(axis, angle).expect("unit axis");
    let b = boost_along(dir, xi).expect("unit direction");
    compose(&r, &b)
}

/// Validated sweep settings shared by every suite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepConfig {
    pub mass: f64,
    pub pmax: f64,
    pub samples: usize,
    pub seed: u64,
}

impl SweepConfig {
    pub fn new(mass: f64, pmax: f64, samples: usize, seed: u64) -> Result<Self> {
        if !(mass > 0.0) || !mass.is_finite() {
            return Err(Error::NonPositiveMass(mass));
        }
        if !(pmax > 0.0) || !pmax.is_finite() {
            return Err(Error::InvalidConfig(format!(
                "pmax must be positive, got {pmax}"
            )));
        }
        if samples == 0 {
            return Err(Error::InvalidConfig("samples must be at least 1".into()));
        }
        Ok(SweepConfig {
            mass,
            pmax,
            samples,
            seed,
        })
    }

    pub fn momentum(&self, index: usize) -> FourVector {
        random_momentum(
            &mut sample_rng(self.seed, index as u64),
            self.mass,
            self.pmax,
        )
    }

    /// Independent `(Λ, p)` pair for sample `index`.
    pub fn lorentz_and_momentum(&self, index: usize) -> (LorentzMatrix, FourVector) {
        let mut rng = sample_rng(self.seed, index as u64);
        let p = random_momentum(&mut rng, self.mass, self.pmax);
        let l = random_lorentz(&mut rng, max_rapidity(self.pmax));
        (l, p)
    }
}
