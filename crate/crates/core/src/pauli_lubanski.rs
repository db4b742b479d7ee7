//! Pauli-Lubanski four-vector `W^μ` of 4×4 operators at fixed numeric
//! momentum, in its rest-frame, boosted (covariant) and non-covariant forms.

use serde::Serialize;

use crate::clifford::GammaBasis;
use crate::cmatrix::{c, ComplexMatrix4};
use crate::error::{Error, Result};
use crate::tensor::{self, levi_civita3, levi_civita_upper, AntisymTensor4, FourVector, METRIC};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PlForm {
    Rest,
    Covariant,
    Noncovariant,
    FromTensor,
}

/// `W^μ`, stored with the contravariant index.
#[derive(Debug, Clone)]
pub struct PlVector {
    pub w: [ComplexMatrix4; 4],
    pub momentum: FourVector,
    pub mass: f64,
    pub form: PlForm,
}

impl PlVector {
    /// `W_μ = g_μμ W^μ`
    pub fn lowered(&self, mu: usize) -> ComplexMatrix4 {
        self.w[mu] * METRIC[mu]
    }

    /// `‖p_μ W^μ‖∞`
    pub fn transversality_residual(&self) -> f64 {
        let low = self.momentum.lower();
        (0..4)
            .fold(ComplexMatrix4::zeros(), |acc, mu| {
                acc + self.w[mu] * low[mu]
            })
            .max_abs()
    }

    /// `‖W_μ W^μ + ¾ m² I‖∞`
    pub fn casimir_residual(&self) -> f64 {
        let sq = (0..4).fold(ComplexMatrix4::zeros(), |acc, mu| {
            acc + self.lowered(mu) * self.w[mu]
        });
        (sq + ComplexMatrix4::identity() * (0.75 * self.mass * self.mass)).max_abs()
    }

    /// `Wᵏ/m`, the naive "spin four-vector" spatial part.
    pub fn spatial_over_mass(&self) -> [ComplexMatrix4; 3] {
        std::array::from_fn(|k| self.w[k + 1] * (1.0 / self.mass))
    }

    pub fn max_abs_diff(&self, other: &PlVector) -> f64 {
        (0..4)
            .map(|mu| self.w[mu].max_abs_diff(&other.w[mu]))
            .fold(0.0, f64::max)
    }
}

/// `W_R = (0, mΣ/2)`.
pub fn rest_w(mass: f64, basis: &GammaBasis) -> Result<PlVector> {
    if !(mass > 0.0) {
        return Err(Error::NonPositiveMass(mass));
    }
    let s = basis.sigma3v;
    Ok(PlVector {
        w: [
            ComplexMatrix4::zeros(),
            s[0] * (mass / 2.0),
            s[1] * (mass / 2.0),
            s[2] * (mass / 2.0),
        ],
        momentum: FourVector::at_rest(mass),
        mass,
        form: PlForm::Rest,
    })
}

/// Closed form of `𝓛_p W_R`:
/// `W⁰ = Σ·p⃗/2`, `Wⁱ = mΣⁱ/2 + (Σ·p⃗) pⁱ / (2(m + E))`.
pub fn covariant_w(p: &FourVector, mass: f64, basis: &GammaBasis) -> Result<PlVector> {
    p.check_on_shell(mass)?;
    let v = p.spatial();
    let sp = basis.sigma_dot(v);
    let denom = 2.0 * (mass + p.time());
    let spatial: [ComplexMatrix4; 3] =
        std::array::from_fn(|i| basis.sigma3v[i] * (mass / 2.0) + sp * (v[i] / denom));
    Ok(PlVector {
        w: [sp * 0.5, spatial[0], spatial[1], spatial[2]],
        momentum: *p,
        mass,
        form: PlForm::Covariant,
    })
}

/// `𝓛_p^μ_ν W_R^ν` evaluated component by component from the boost matrix.
pub fn covariant_w_by_boost(p: &FourVector, mass: f64, basis: &GammaBasis) -> Result<PlVector> {
    let boost = tensor::standard_boost(p, mass)?;
    let rest = rest_w(mass, basis)?;
    let w = std::array::from_fn(|mu| {
        (0..4).fold(ComplexMatrix4::zeros(), |acc, nu| {
            acc + rest.w[nu] * boost.get(mu, nu)
        })
    });
    Ok(PlVector {
        w,
        momentum: *p,
        mass,
        form: PlForm::Covariant,
    })
}

/// `W⁰ = Σ·p⃗/2`, `Wᵏ = ½ p⁰ Σᵏ + (i/2)(γ⁰γ⃗ × p⃗)ᵏ`.
pub fn noncovariant_w(p: &FourVector, mass: f64, basis: &GammaBasis) -> Result<PlVector> {
    p.check_on_shell(mass)?;
    let v = p.spatial();
    let alpha: [ComplexMatrix4; 3] = std::array::from_fn(|k| basis.alpha(k));
    let spatial: [ComplexMatrix4; 3] = std::array::from_fn(|k| {
        let mut cross = ComplexMatrix4::zeros();
        for l in 0..3 {
            for m in 0..3 {
                let e = levi_civita3(k, l, m);
                if e != 0.0 {
                    cross += alpha[l] * (e * v[m]);
                }
            }
        }
        basis.sigma3v[k] * (0.5 * p.time()) + cross * c(0.0, 0.5)
    });
    Ok(PlVector {
        w: [basis.sigma_dot(v) * 0.5, spatial[0], spatial[1], spatial[2]],
        momentum: *p,
        mass,
        form: PlForm::Noncovariant,
    })
}

/// `W^μ = ½ ε^{μνρσ} S_{νρ} p_σ` by direct index sums.
///
/// With `S = Σ^{μν}` from the chiral basis this reproduces
/// [`noncovariant_w`] (and [`rest_w`] at rest).
pub fn pl_from_tensor(entries: &[[ComplexMatrix4; 4]; 4], p: &FourVector) -> Result<PlVector> {
    let s = AntisymTensor4::new(*entries, 1e-12)?;
    let mass = p.dot(p).max(0.0).sqrt();
    let low = p.lower();
    let w = std::array::from_fn(|mu| {
        let mut acc = ComplexMatrix4::zeros();
        for nu in 0..4 {
            for rho in 0..4 {
                for sigma in 0..4 {
                    let e = levi_civita_upper([mu, nu, rho, sigma]);
                    if e != 0.0 && low[sigma] != 0.0 {
                        acc += s.lowered(nu, rho) * (0.5 * e * low[sigma]);
                    }
                }
            }
        }
        acc
    });
    Ok(PlVector {
        w,
        momentum: *p,
        mass,
        form: PlForm::FromTensor,
    })
}
