//! Wigner rotations `R = 𝓛⁻¹_{Λp} Λ 𝓛_p`, their spinor little-group
//! matrices, and the transformation laws of spinors and spin expectations.

use crate::clifford::{boost_spinor_rep, spinor_lift, GammaBasis};
use crate::cmatrix::{spinor_dot, spinor_norm, ComplexMatrix2, ComplexMatrix4, Spinor};
use crate::error::{Error, Result};
use crate::spin::SpinTriple;
use crate::spinor::{boosted_spinor, field_spin_at, Kind, Lambda};
use crate::tensor::{self, FourVector, LorentzMatrix};

#[derive(Debug, Clone)]
pub struct WignerRotation {
    pub r: LorentzMatrix,
    pub axis: [f64; 3],
    /// In `[0, π]`.
    pub angle: f64,
    pub lambda: LorentzMatrix,
    pub p: FourVector,
}

impl WignerRotation {
    /// `‖R (1,0,0,0) - (1,0,0,0)‖∞`
    pub fn rest_residual(&self) -> f64 {
        self.r
            .apply(&FourVector::at_rest(1.0))
            .max_abs_diff(&FourVector::at_rest(1.0))
    }
}

fn check_lorentz(l: &LorentzMatrix) -> Result<()> {
    let residual = l.metric_residual();
    let scale = l.0[0][0].powi(2).max(1.0);
    if residual > 1e-9 * scale || l.0[0][0] < 1.0 - 1e-12 || l.determinant() < 0.0 {
        return Err(Error::NotLorentz(residual));
    }
    Ok(())
}

/// `Λp`, re-projected on shell.
pub fn transformed_momentum(l: &LorentzMatrix, p: &FourVector, mass: f64) -> FourVector {
    FourVector::on_shell(mass, l.apply(p).spatial())
}

pub fn wigner_r(l: &LorentzMatrix, p: &FourVector, mass: f64) -> Result<WignerRotation> {
    check_lorentz(l)?;
    let lp = tensor::standard_boost(p, mass)?;
    let q = transformed_momentum(l, p, mass);
    let lq = tensor::standard_boost(&q, mass)?;
    let r = tensor::compose(&tensor::compose(&tensor::inverse(&lq), l), &lp);
    let (axis, angle) = tensor::rotation_axis_angle(&r.spatial_block());
    Ok(WignerRotation {
        r,
        axis,
        angle,
        lambda: *l,
        p: *p,
    })
}

/// `D = d2 ⊕ d2`.
#[derive(Debug, Clone)]
pub struct LittleGroupD {
    pub d2: ComplexMatrix2,
    pub d4: ComplexMatrix4,
}

impl LittleGroupD {
    /// `D_{λ'λ}`
    pub fn element(&self, lambda_out: Lambda, lambda_in: Lambda) -> num_complex::Complex64 {
        self.d2[(lambda_out.index(), lambda_in.index())]
    }

    pub fn unitarity_residual(&self) -> f64 {
        (self.d2.adjoint() * self.d2).max_abs_diff(&ComplexMatrix2::identity())
    }
}

/// `U⁻¹(𝓛_{Λp}) U(Λ) U(𝓛_p)`, checked to be two identical unitary blocks.
pub fn little_group_d(
    l: &LorentzMatrix,
    p: &FourVector,
    mass: f64,
    basis: &GammaBasis,
) -> Result<LittleGroupD> {
    check_lorentz(l)?;
    let q = transformed_momentum(l, p, mass);
    let uq = boost_spinor_rep(&q, mass, basis)?;
    let d4 = uq.inverse()? * spinor_lift(l, basis)? * boost_spinor_rep(p, mass, basis)?;
    let off = d4.block(0, 1).max_abs().max(d4.block(1, 0).max_abs());
    if off > 1e-10 {
        return Err(Error::BadLittleGroup(format!("off-diagonal block {off:e}")));
    }
    let d2 = d4.block(0, 0);
    let mismatch = d2.max_abs_diff(&d4.block(1, 1));
    if mismatch > 1e-10 {
        return Err(Error::BadLittleGroup(format!(
            "blocks differ by {mismatch:e}"
        )));
    }
    let out = LittleGroupD { d2, d4 };
    let unitarity = out.unitarity_residual();
    if unitarity > 1e-10 {
        return Err(Error::BadLittleGroup(format!(
            "block not unitary ({unitarity:e})"
        )));
    }
    Ok(out)
}

/// `Σ_{λ'} D_{λ'λ} ψ(q, λ')`
fn rotated_combination(
    d: &LittleGroupD,
    q: &FourVector,
    lambda: Lambda,
    kind: Kind,
    mass: f64,
    basis: &GammaBasis,
) -> Result<Spinor> {
    let mut out = [num_complex::Complex64::new(0.0, 0.0); 4];
    for lp in Lambda::BOTH {
        let psi = boosted_spinor(q, lp, kind, mass, basis)?;
        let coeff = d.element(lp, lambda);
        for i in 0..4 {
            out[i] += coeff * psi.amplitude[i];
        }
    }
    Ok(out)
}

/// `‖U(Λ) ψ(p,λ) - Σ_{λ'} D_{λ'λ} ψ(Λp,λ')‖`
pub fn spinor_transform_check(
    l: &LorentzMatrix,
    p: &FourVector,
    lambda: Lambda,
    kind: Kind,
    mass: f64,
    basis: &GammaBasis,
) -> Result<f64> {
    let d = little_group_d(l, p, mass, basis)?;
    let q = transformed_momentum(l, p, mass);
    let lhs =
        spinor_lift(l, basis)?.apply(&boosted_spinor(p, lambda, kind, mass, basis)?.amplitude);
    let rhs = rotated_combination(&d, &q, lambda, kind, mass, basis)?;
    let diff: Spinor = std::array::from_fn(|i| lhs[i] - rhs[i]);
    Ok(spinor_norm(&diff))
}

/// `ψ† Sˡ ψ / ψ†ψ` for each `l`.
pub fn expectation(s: &SpinTriple, psi: &Spinor) -> [f64; 3] {
    let n = spinor_dot(psi, psi).re;
    std::array::from_fn(|l| spinor_dot(psi, &s.s[l].apply(psi)).re / n)
}

/// Left and right sides of `(Dψ)† Sˡ (Dψ) = Rˡ_m ⟨Sᵐ⟩`, each divided by
/// `ψ†ψ`, with `ψ = ψ(Λp, λ)` and `S = S(Λp)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpectationRotation {
    pub lhs: [f64; 3],
    pub rhs: [f64; 3],
}

impl ExpectationRotation {
    pub fn residual(&self) -> f64 {
        (0..3)
            .map(|l| (self.lhs[l] - self.rhs[l]).abs())
            .fold(0.0, f64::max)
    }
}

/// Spin operator used at the rotated momentum.
pub type SpinAt = fn(&FourVector, f64, &GammaBasis) -> Result<SpinTriple>;

pub fn expectation_rotation_with(
    spin: SpinAt,
    l: &LorentzMatrix,
    p: &FourVector,
    lambda: Lambda,
    kind: Kind,
    mass: f64,
    basis: &GammaBasis,
) -> Result<ExpectationRotation> {
    let w = wigner_r(l, p, mass)?;
    let d = little_group_d(l, p, mass, basis)?;
    let q = transformed_momentum(l, p, mass);
    let s = spin(&q, mass, basis)?;
    let psi = boosted_spinor(&q, lambda, kind, mass, basis)?.amplitude;
    let rotated = rotated_combination(&d, &q, lambda, kind, mass, basis)?;
    let norm = spinor_dot(&psi, &psi).re;
    let lhs = std::array::from_fn(|l| spinor_dot(&rotated, &s.s[l].apply(&rotated)).re / norm);
    let before = expectation(&s, &psi);
    let rhs = std::array::from_fn(|l| (0..3).map(|m| w.r.0[l + 1][m + 1] * before[m]).sum());
    Ok(ExpectationRotation { lhs, rhs })
}

/// Expectation law with the field spin.
pub fn expectation_rotation_check(
    l: &LorentzMatrix,
    p: &FourVector,
    lambda: Lambda,
    kind: Kind,
    mass: f64,
    basis: &GammaBasis,
) -> Result<f64> {
    expectation_rotation_with(field_spin_at, l, p, lambda, kind, mass, basis).map(|e| e.residual())
}

/// `‖R(Λ₂, Λ₁p) R(Λ₁, p) - R(Λ₂Λ₁, p)‖∞`
pub fn cocycle_residual(
    l2: &LorentzMatrix,
    l1: &LorentzMatrix,
    p: &FourVector,
    mass: f64,
) -> Result<f64> {
    let first = wigner_r(l1, p, mass)?;
    let second = wigner_r(l2, &transformed_momentum(l1, p, mass), mass)?;
    let whole = wigner_r(&tensor::compose(l2, l1), p, mass)?;
    Ok(tensor::compose(&second.r, &first.r).max_abs_diff(&whole.r))
}
