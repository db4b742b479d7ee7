//! Dirac algebra in the chiral representation.
//!
//! ```text
//! γ⁰ = [[0, 1], [1, 0]]     γᵏ = [[0, σᵏ], [-σᵏ, 0]]
//! γ⁵ = iγ⁰γ¹γ²γ³ = diag(-1, -1, +1, +1)
//! Σᵏ = σᵏ ⊕ σᵏ              Σ^{μν} = (i/4)[γ^μ, γ^ν]
//! ```
//!
//! With these matrices the spin tensor `Σ^{μν}` already carries the factor
//! one half: `Σ^{lm} = ½ ε_{lmn} Σⁿ` and `Σ^{0k} = (i/2) γ⁰γᵏ`.
//!
//! The spinor boost `U(𝓛_p) = (E + m - γ⁵ Σ·p⃗) / sqrt(2m(E + m))` satisfies
//! `U γ^μ U⁻¹ = 𝓛_p^μ_ν γ^ν`. Its extension to the whole restricted group
//! as a homomorphism is the lift `ρ` with `ρ(Λ)⁻¹ γ_μ ρ(Λ) = Λ^μ_ν γ_ν`
//! (lower-index gammas), under which a rotation by `θ` about `n̂` lifts to
//! `exp(-iΣ·n̂ θ/2)`. See [`ConjugationResiduals`].

use crate::cmatrix::{c, CMatrix, ComplexMatrix2, ComplexMatrix4, I};
use crate::error::{Error, Result};
use crate::tensor::{self, AntisymTensor4, FourVector, LorentzMatrix, METRIC};

/// Pauli matrices `σ¹, σ², σ³`.
pub fn pauli() -> [ComplexMatrix2; 3] {
    let z = c(0.0, 0.0);
    let one = c(1.0, 0.0);
    [
        ComplexMatrix2::from_fn(|i, j| if i != j { one } else { z }),
        CMatrix([[z, -I], [I, z]]),
        ComplexMatrix2::diag([one, -one]),
    ]
}

/// `e^{M}` for a 2×2 matrix via `e^{t}(cosh z + sinh z / z · N)`, where
/// `t = tr M / 2`, `N = M - t` and `N² = z² I`.
pub fn exp_2x2(m: &ComplexMatrix2) -> ComplexMatrix2 {
    let t = m.trace() * 0.5;
    let n = *m - ComplexMatrix2::identity() * t;
    // traceless: N² = -det(N) I
    let z2 = -(n[(0, 0)] * n[(1, 1)] - n[(0, 1)] * n[(1, 0)]);
    let (ch, sh_over_z) = if z2.norm() < 1e-8 {
        (
            c(1.0, 0.0) + z2 * 0.5 + z2 * z2 / 24.0,
            c(1.0, 0.0) + z2 / 6.0 + z2 * z2 / 120.0,
        )
    } else {
        let z = z2.sqrt();
        (z.cosh(), z.sinh() / z)
    };
    (ComplexMatrix2::identity() * ch + n * sh_over_z) * t.exp()
}

/// Matrix exponential.
///
/// Block-diagonal arguments (the span of `iΣᵏ` and `γ⁵Σᵏ` among them) are
/// exponentiated blockwise in closed form; anything else goes through
/// scaling and squaring.
pub fn matrix_exp(a: &ComplexMatrix4) -> ComplexMatrix4 {
    let z = ComplexMatrix2::zeros();
    if a.block(0, 1) == z && a.block(1, 0) == z {
        let upper = exp_2x2(&a.block(0, 0));
        let lower = exp_2x2(&a.block(1, 1));
        return ComplexMatrix4::from_blocks(&upper, &z, &z, &lower);
    }
    matrix_exp_scaling_squaring(a)
}

/// Scaling and squaring with a degree-18 Taylor polynomial.
pub fn matrix_exp_scaling_squaring(a: &ComplexMatrix4) -> ComplexMatrix4 {
    let norm = a.norm_one_rows();
    let squarings = if norm > 0.5 {
        (norm / 0.5).log2().ceil() as u32
    } else {
        0
    };
    let scaled = *a * 0.5f64.powi(squarings as i32);
    let mut term = ComplexMatrix4::identity();
    let mut sum = ComplexMatrix4::identity();
    for k in 1..=18 {
        term = term * scaled * (1.0 / k as f64);
        sum += term;
    }
    for _ in 0..squarings {
        sum = sum * sum;
    }
    sum
}

/// Chiral-representation Dirac matrices and derived generators.
#[derive(Debug, Clone)]
pub struct GammaBasis {
    pub gamma: [ComplexMatrix4; 4],
    pub gamma5: ComplexMatrix4,
    /// `Σᵏ = σᵏ ⊕ σᵏ`
    pub sigma3v: [ComplexMatrix4; 3],
    /// `Σ^{μν} = (i/4)[γ^μ, γ^ν]`
    pub sigma_tensor: AntisymTensor4<ComplexMatrix4>,
}

pub fn chiral_gamma_basis() -> GammaBasis {
    let s = pauli();
    let z = ComplexMatrix2::zeros();
    let one = ComplexMatrix2::identity();
    let g0 = ComplexMatrix4::from_blocks(&z, &one, &one, &z);
    let gk: [ComplexMatrix4; 3] =
        std::array::from_fn(|k| ComplexMatrix4::from_blocks(&z, &s[k], &(-s[k]), &z));
    let gamma = [g0, gk[0], gk[1], gk[2]];
    let gamma5 = (g0 * gk[0] * gk[1] * gk[2]) * I;
    let sigma3v = std::array::from_fn(|k| ComplexMatrix4::from_blocks(&s[k], &z, &z, &s[k]));
    let sigma_tensor =
        AntisymTensor4::from_upper(|mu, nu| gamma[mu].commutator(&gamma[nu]) * c(0.0, 0.25));
    GammaBasis {
        gamma,
        gamma5,
        sigma3v,
        sigma_tensor,
    }
}

impl GammaBasis {
    /// `γ_μ = g_μμ γ^μ`
    pub fn gamma_lower(&self, mu: usize) -> ComplexMatrix4 {
        self.gamma[mu] * METRIC[mu]
    }

    /// `β = γ⁰`
    pub fn beta(&self) -> ComplexMatrix4 {
        self.gamma[0]
    }

    /// `αᵏ = γ⁰γᵏ`
    pub fn alpha(&self, k: usize) -> ComplexMatrix4 {
        self.gamma[0] * self.gamma[k + 1]
    }

    /// `Σ·v`
    pub fn sigma_dot(&self, v: [f64; 3]) -> ComplexMatrix4 {
        (0..3).fold(ComplexMatrix4::zeros(), |acc, k| {
            acc + self.sigma3v[k] * v[k]
        })
    }

    /// `Σᵏ/2` for k = 1..3, the rest-frame spin.
    pub fn rest_spin(&self) -> [ComplexMatrix4; 3] {
        self.sigma3v.map(|s| s * 0.5)
    }

    /// `γ^μ p_μ`
    pub fn slash(&self, p: &FourVector) -> ComplexMatrix4 {
        let low = p.lower();
        (0..4).fold(ComplexMatrix4::zeros(), |acc, mu| {
            acc + self.gamma[mu] * low[mu]
        })
    }

    /// Free Dirac Hamiltonian `α·p⃗ + βm`.
    pub fn dirac_hamiltonian(&self, p: [f64; 3], mass: f64) -> ComplexMatrix4 {
        (0..3).fold(self.beta() * mass, |acc, k| acc + self.alpha(k) * p[k])
    }
}

/// Closed-form spinor boost `U(𝓛_p) = (E + m - γ⁵Σ·p⃗) / sqrt(2m(E + m))`.
pub fn boost_spinor_rep(p: &FourVector, mass: f64, basis: &GammaBasis) -> Result<ComplexMatrix4> {
    p.check_on_shell(mass)?;
    let e = p.time();
    let norm = (2.0 * mass * (e + mass)).sqrt();
    let u = ComplexMatrix4::identity() * (e + mass) - basis.gamma5 * basis.sigma_dot(p.spatial());
    Ok(u * (1.0 / norm))
}

/// `exp((iΣ·θ - γ⁵Σ·ξ)/2)`.
///
/// At `θ = 0`, `ξ = rapidity_std(p) p̂` this is [`boost_spinor_rep`]. At
/// `ξ = 0` it is the lift of a rotation by `-|θ|` about `θ̂`.
pub fn general_spinor_rep(theta: [f64; 3], xi: [f64; 3], basis: &GammaBasis) -> ComplexMatrix4 {
    let gen = basis.sigma_dot(theta) * c(0.0, 0.5) - basis.gamma5 * basis.sigma_dot(xi) * 0.5;
    matrix_exp(&gen)
}

/// Lorentz matrix realized by [`general_spinor_rep`]`(θ, ξ)` in the
/// homomorphic orientation, `exp(-θ·J + ξ·K)` with `(J_n)ⁱ_j = -ε_{ijk} nᵏ`
/// and `(K_n)⁰_i = (K_n)ⁱ_0 = nⁱ`.
pub fn vector_rep(theta: [f64; 3], xi: [f64; 3]) -> LorentzMatrix {
    let mut gen = ComplexMatrix4::zeros();
    for i in 0..3 {
        gen[(0, i + 1)] = c(xi[i], 0.0);
        gen[(i + 1, 0)] = c(xi[i], 0.0);
        for j in 0..3 {
            let w: f64 = (0..3)
                .map(|k| tensor::levi_civita3(i, j, k) * theta[k])
                .sum();
            gen[(i + 1, j + 1)] = c(w, 0.0);
        }
    }
    let e = matrix_exp_scaling_squaring(&gen);
    LorentzMatrix(std::array::from_fn(|i| {
        std::array::from_fn(|j| e[(i, j)].re)
    }))
}

/// Lift of the rotation by `angle` about `axis` in the homomorphic
/// orientation: `exp(-iΣ·n̂ angle/2)`.
pub fn rotation_spinor_rep(
    axis: [f64; 3],
    angle: f64,
    basis: &GammaBasis,
) -> Result<ComplexMatrix4> {
    let n = tensor::unit(axis)?;
    Ok(general_spinor_rep(n.map(|x| -x * angle), [0.0; 3], basis))
}

/// Spinor lift of a restricted Lorentz matrix, via `Λ = 𝓛_q R` with
/// `q = Λ(1, 0, 0, 0)`. Defined up to the double-cover sign.
pub fn spinor_lift(l: &LorentzMatrix, basis: &GammaBasis) -> Result<ComplexMatrix4> {
    let residual = l.metric_residual();
    if residual > 1e-9 * l.0[0][0].powi(2).max(1.0) {
        return Err(Error::NotLorentz(residual));
    }
    let q = l.apply(&FourVector::at_rest(1.0));
    let q = FourVector::on_shell(1.0, q.spatial());
    let boost = tensor::standard_boost(&q, 1.0)?;
    let rot = tensor::compose(&tensor::inverse(&boost), l);
    let (axis, angle) = tensor::rotation_axis_angle(&rot.spatial_block());
    Ok(boost_spinor_rep(&q, 1.0, basis)? * rotation_spinor_rep(axis, angle, basis)?)
}

/// Residuals of the two possible orientations of the vector-conjugation law.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConjugationResiduals {
    /// `max_μ ‖U γ^μ U⁻¹ - Λ^μ_ν γ^ν‖∞`
    pub direct: f64,
    /// `max_μ ‖U⁻¹ γ_μ U - Λ^μ_ν γ_ν‖∞`, the orientation under which
    /// `Λ ↦ U` is a homomorphism extending [`boost_spinor_rep`].
    pub homomorphic: f64,
}

pub fn conjugation_residuals(
    u: &ComplexMatrix4,
    l: &LorentzMatrix,
    basis: &GammaBasis,
) -> Result<ConjugationResiduals> {
    let inv = u.inverse()?;
    let mut direct: f64 = 0.0;
    let mut homomorphic: f64 = 0.0;
    for mu in 0..4 {
        let target_up = (0..4).fold(ComplexMatrix4::zeros(), |acc, nu| {
            acc + basis.gamma[nu] * l.0[mu][nu]
        });
        direct = direct.max((*u * basis.gamma[mu] * inv).max_abs_diff(&target_up));
        let target_low = (0..4).fold(ComplexMatrix4::zeros(), |acc, nu| {
            acc + basis.gamma_lower(nu) * l.0[mu][nu]
        });
        homomorphic = homomorphic.max((inv * basis.gamma_lower(mu) * *u).max_abs_diff(&target_low));
    }
    Ok(ConjugationResiduals {
        direct,
        homomorphic,
    })
}

/// `max_μ ‖U⁻¹ γ_μ U - Λ^μ_ν γ_ν‖∞`. Blind to the sign of `U`.
pub fn vector_conjugation_check(
    u: &ComplexMatrix4,
    l: &LorentzMatrix,
    basis: &GammaBasis,
) -> Result<f64> {
    conjugation_residuals(u, l, basis).map(|r| r.homomorphic)
}

/// Lorentz matrix realized by `U` in the homomorphic orientation,
/// `Λ^μ_ν = ¼ tr(γ^ν U⁻¹ γ_μ U)`.
pub fn lorentz_of_spinor(u: &ComplexMatrix4, basis: &GammaBasis) -> Result<LorentzMatrix> {
    let inv = u.inverse()?;
    let mut l = [[0.0; 4]; 4];
    for mu in 0..4 {
        let conj = inv * basis.gamma_lower(mu) * *u;
        for nu in 0..4 {
            // tr(γ^ν γ_ν) = 4 with no sum
            l[mu][nu] = (basis.gamma[nu] * conj).trace().re / 4.0;
        }
    }
    Ok(LorentzMatrix(l))
}
