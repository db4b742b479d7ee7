//! Spin operators built from the Pauli-Lubanski vector, plus the
//! cross-construction and algebra checks between them.

use serde::Serialize;

use crate::clifford::{boost_spinor_rep, GammaBasis};
use crate::cmatrix::{c, CMatrix, ComplexMatrix2, ComplexMatrix4};
use crate::error::{Error, Result};
use crate::pauli_lubanski::{PlForm, PlVector};
use crate::tensor::{hodge_dual, levi_civita3, standard_boost, FourVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpinConstruction {
    FieldFromCovW,
    FieldFromNoncovW,
    CovariantDirect,
    WignerFromCovW,
    WignerFromNoncovW,
    WignerClosedForm,
}

impl SpinConstruction {
    pub fn name(self) -> &'static str {
        match self {
            SpinConstruction::FieldFromCovW => "field_from_covW",
            SpinConstruction::FieldFromNoncovW => "field_from_noncovW",
            SpinConstruction::CovariantDirect => "covariant_direct",
            SpinConstruction::WignerFromCovW => "wigner_from_covW",
            SpinConstruction::WignerFromNoncovW => "wigner_from_noncovW",
            SpinConstruction::WignerClosedForm => "wigner_closed_form",
        }
    }
}

#[derive(Debug, Clone)]
pub struct SpinTriple {
    pub s: [ComplexMatrix4; 3],
    pub momentum: FourVector,
    pub mass: f64,
    pub construction: SpinConstruction,
}

impl SpinTriple {
    pub fn su2_residual(&self) -> f64 {
        su2_residual(&self.s)
    }

    pub fn spectrum_residual(&self) -> f64 {
        spectrum_residual(&self.s)
    }

    /// `max_k ‖Sᵏ - Σᵏ/2‖∞`
    pub fn deviation_from_rest(&self, basis: &GammaBasis) -> f64 {
        max_diff(&self.s, &basis.rest_spin())
    }

    /// `max_k ‖Sᵏ - (Sᵏ)†‖∞`
    pub fn non_hermiticity(&self) -> f64 {
        self.s
            .iter()
            .map(|m| m.max_abs_diff(&m.adjoint()))
            .fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &SpinTriple) -> f64 {
        max_diff(&self.s, &other.s)
    }
}

/// Upper (`S₊`) and lower (`S₋`) chiral blocks of the field spin.
#[derive(Debug, Clone)]
pub struct ChiralSpinPair {
    pub s_plus: [ComplexMatrix2; 3],
    pub s_minus: [ComplexMatrix2; 3],
    pub momentum: FourVector,
    pub mass: f64,
}

pub fn max_diff<const N: usize>(a: &[CMatrix<N>; 3], b: &[CMatrix<N>; 3]) -> f64 {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| x.max_abs_diff(y))
        .fold(0.0, f64::max)
}

fn cross_sum(p: [f64; 3], w: &[ComplexMatrix4; 3], k: usize) -> ComplexMatrix4 {
    let mut acc = ComplexMatrix4::zeros();
    for l in 0..3 {
        for m in 0..3 {
            let e = levi_civita3(k, l, m);
            if e != 0.0 {
                acc += w[m] * (e * p[l]);
            }
        }
    }
    acc
}

/// `Sᵏ = (P⁰Wᵏ - PᵏW⁰)/m² + iγ⁵ ε_{klm} PˡWᵐ/m²`.
pub fn field_spin(w: &PlVector, basis: &GammaBasis) -> SpinTriple {
    let p = w.momentum.spatial();
    let e = w.momentum.time();
    let m2 = w.mass * w.mass;
    let ws = [w.w[1], w.w[2], w.w[3]];
    let ig5 = basis.gamma5 * c(0.0, 1.0);
    let s = std::array::from_fn(|k| {
        (ws[k] * e - w.w[0] * p[k] + ig5 * cross_sum(p, &ws, k)) * (1.0 / m2)
    });
    let construction = match w.form {
        PlForm::Rest | PlForm::Covariant => SpinConstruction::FieldFromCovW,
        PlForm::Noncovariant | PlForm::FromTensor => SpinConstruction::FieldFromNoncovW,
    };
    SpinTriple {
        s,
        momentum: w.momentum,
        mass: w.mass,
        construction,
    }
}

/// Diagonal 2×2 blocks of [`field_spin`]; the upper block sits where
/// `γ⁵ = -1`.
pub fn chiral_spins(w: &PlVector, basis: &GammaBasis) -> Result<ChiralSpinPair> {
    let scale = w.w.iter().map(|m| m.max_abs()).fold(1.0, f64::max);
    let off =
        w.w.iter()
            .map(|m| m.block(0, 1).max_abs().max(m.block(1, 0).max_abs()))
            .fold(0.0, f64::max);
    if off > 1e-12 * scale {
        return Err(Error::NotBlockDiagonal(off));
    }
    let s = field_spin(w, basis).s;
    Ok(ChiralSpinPair {
        s_plus: s.map(|m| m.block(0, 0)),
        s_minus: s.map(|m| m.block(1, 1)),
        momentum: w.momentum,
        mass: w.mass,
    })
}

/// `Sᵏ = U(𝓛_p) Σᵏ/2 U⁻¹(𝓛_p)`.
pub fn covariant_spin_direct(p: &FourVector, mass: f64, basis: &GammaBasis) -> Result<SpinTriple> {
    let u = boost_spinor_rep(p, mass, basis)?;
    let inv = u.inverse()?;
    Ok(SpinTriple {
        s: basis.rest_spin().map(|r| u * r * inv),
        momentum: *p,
        mass,
        construction: SpinConstruction::CovariantDirect,
    })
}

/// `S_Wᵏ = (Wᵏ - W⁰Pᵏ/(m + P⁰)) / m`.
pub fn wigner_spin(w: &PlVector) -> SpinTriple {
    let p = w.momentum.spatial();
    let denom = w.mass + w.momentum.time();
    let s = std::array::from_fn(|k| (w.w[k + 1] - w.w[0] * (p[k] / denom)) * (1.0 / w.mass));
    let construction = match w.form {
        PlForm::Rest | PlForm::Covariant => SpinConstruction::WignerFromCovW,
        PlForm::Noncovariant | PlForm::FromTensor => SpinConstruction::WignerFromNoncovW,
    };
    SpinTriple {
        s,
        momentum: w.momentum,
        mass: w.mass,
        construction,
    }
}

/// `S_Wᵏ = (i/2m) γ⁵ (Σ × P)ᵏ + Σᵏ P⁰/(2m) - (Σ·P) Pᵏ / (2m(m + P⁰))`.
pub fn wigner_closed_form(p: &FourVector, mass: f64, basis: &GammaBasis) -> Result<SpinTriple> {
    p.check_on_shell(mass)?;
    let v = p.spatial();
    let e = p.time();
    let sp = basis.sigma_dot(v);
    let ig5 = basis.gamma5 * c(0.0, 1.0 / (2.0 * mass));
    let s = std::array::from_fn(|k| {
        let cross = -cross_sum(v, &basis.sigma3v, k);
        ig5 * cross + basis.sigma3v[k] * (e / (2.0 * mass))
            - sp * (v[k] / (2.0 * mass * (mass + e)))
    });
    Ok(SpinTriple {
        s,
        momentum: *p,
        mass,
        construction: SpinConstruction::WignerClosedForm,
    })
}

/// `max_{i,j} ‖[Sⁱ, Sʲ] - i ε_{ijk} Sᵏ‖∞`
pub fn su2_residual<const N: usize>(s: &[CMatrix<N>; 3]) -> f64 {
    let mut worst: f64 = 0.0;
    for i in 0..3 {
        for j in 0..3 {
            let mut target = CMatrix::<N>::zeros();
            for k in 0..3 {
                let e = levi_civita3(i, j, k);
                if e != 0.0 {
                    target += s[k] * c(0.0, e);
                }
            }
            worst = worst.max(s[i].commutator(&s[j]).max_abs_diff(&target));
        }
    }
    worst
}

/// Largest distance of the sorted spectrum of any `Sᵏ` from
/// `{-½, -½, ½, ½}`.
pub fn spectrum_residual(s: &[ComplexMatrix4; 3]) -> f64 {
    let target = [-0.5, -0.5, 0.5, 0.5];
    s.iter()
        .flat_map(|m| {
            m.eigenvalues()
                .into_iter()
                .zip(target)
                .map(|(ev, t)| (ev - c(t, 0.0)).norm())
        })
        .fold(0.0, f64::max)
}

/// `max_k ‖[H, Sᵏ]‖∞` with `H = α·p⃗ + βm`.
pub fn hamiltonian_commutator(s: &SpinTriple, basis: &GammaBasis) -> f64 {
    let h = basis.dirac_hamiltonian(s.momentum.spatial(), s.mass);
    s.s.iter()
        .map(|m| h.commutator(m).max_abs())
        .fold(0.0, f64::max)
}

/// Residuals of the two readings of the boosted spin-tensor contraction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DualContraction {
    /// `max_k ‖*T^{k0} - Sᵏ‖∞`
    pub dual: f64,
    /// `max_k ‖T^{k0} - Sᵏ‖∞`
    pub non_dual: f64,
}

/// Boosts the spin tensor `Σ^{μν}` with `𝓛_p` on both indices and compares
/// the `{k0}` components, with and without the Hodge dual, to
/// [`covariant_spin_direct`].
pub fn dual_contraction_check(
    p: &FourVector,
    mass: f64,
    basis: &GammaBasis,
) -> Result<DualContraction> {
    let direct = covariant_spin_direct(p, mass, basis)?;
    let boost = standard_boost(p, mass)?;
    let t = basis.sigma_tensor.transformed(&boost);
    let dual = hodge_dual(&t);
    let mut out = DualContraction {
        dual: 0.0,
        non_dual: 0.0,
    };
    for k in 0..3 {
        out.dual = out.dual.max(dual.get(k + 1, 0).max_abs_diff(&direct.s[k]));
        out.non_dual = out.non_dual.max(t.get(k + 1, 0).max_abs_diff(&direct.s[k]));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::chiral_gamma_basis;
    use crate::pauli_lubanski::{covariant_w, noncovariant_w, rest_w};

    fn p_z() -> FourVector {
        FourVector::new(1.25, 0.0, 0.0, 0.75)
    }

    #[test]
    fn field_spin_at_rest() {
        let b = chiral_gamma_basis();
        let s = field_spin(&rest_w(1.0, &b).unwrap(), &b);
        assert!(s.deviation_from_rest(&b) < 1e-15);
        assert!(s.su2_residual() < 1e-15);
    }

    #[test]
    fn covariant_direct_golden_along_z() {
        let b = chiral_gamma_basis();
        let s = covariant_spin_direct(&p_z(), 1.0, &b).unwrap();
        assert!(s.s[2].max_abs_diff(&b.rest_spin()[2]) < 1e-15);
        let mut golden = ComplexMatrix4::zeros();
        golden[(0, 1)] = c(1.0, 0.0);
        golden[(1, 0)] = c(0.25, 0.0);
        golden[(2, 3)] = c(0.25, 0.0);
        golden[(3, 2)] = c(1.0, 0.0);
        assert!(s.s[0].max_abs_diff(&golden) < 1e-14);
        assert!(s.spectrum_residual() < 1e-12);
    }

    #[test]
    fn identities_at_a_generic_momentum() {
        let b = chiral_gamma_basis();
        let p = FourVector::on_shell(1.3, [0.7, -2.1, 1.4]);
        let cov = covariant_w(&p, 1.3, &b).unwrap();
        let nc = noncovariant_w(&p, 1.3, &b).unwrap();
        let direct = covariant_spin_direct(&p, 1.3, &b).unwrap();
        assert!(field_spin(&cov, &b).max_abs_diff(&direct) < 1e-10);
        assert!(field_spin(&nc, &b).deviation_from_rest(&b) < 1e-12);
        assert!(wigner_spin(&cov).deviation_from_rest(&b) < 1e-12);
        let closed = wigner_closed_form(&p, 1.3, &b).unwrap();
        assert!(wigner_spin(&nc).max_abs_diff(&closed) < 1e-12);
        assert!(field_spin(&cov, &b).non_hermiticity() > 1e-3);
    }

    #[test]
    fn wigner_closed_form_moves_off_rest() {
        let b = chiral_gamma_basis();
        let at_rest = wigner_closed_form(&FourVector::at_rest(1.0), 1.0, &b).unwrap();
        assert!(at_rest.deviation_from_rest(&b) < 1e-15);
        let p = FourVector::new(1.25, 0.75, 0.0, 0.0);
        let s = wigner_closed_form(&p, 1.0, &b).unwrap();
        assert!(s.s[2].max_abs_diff(&b.rest_spin()[2]) > 1e-3);
    }

    #[test]
    fn fake_spin_breaks_su2() {
        let b = chiral_gamma_basis();
        let p = FourVector::on_shell(1.0, [0.6, 0.0, 0.8]);
        let w = covariant_w(&p, 1.0, &b).unwrap();
        assert!(su2_residual(&w.spatial_over_mass()) > 1e-3);
        assert!(su2_residual(&b.rest_spin()) < 1e-15);
    }

    #[test]
    fn chiral_blocks() {
        let b = chiral_gamma_basis();
        let rest = chiral_spins(&rest_w(1.0, &b).unwrap(), &b).unwrap();
        let pauli = crate::clifford::pauli().map(|s| s * 0.5);
        assert!(max_diff(&rest.s_plus, &pauli) < 1e-15);
        assert!(max_diff(&rest.s_minus, &pauli) < 1e-15);

        let v = [0.9, -0.4, 1.7];
        let plus = chiral_spins(
            &covariant_w(&FourVector::on_shell(1.0, v), 1.0, &b).unwrap(),
            &b,
        )
        .unwrap();
        let minus = chiral_spins(
            &covariant_w(&FourVector::on_shell(1.0, v.map(|x| -x)), 1.0, &b).unwrap(),
            &b,
        )
        .unwrap();
        assert!(su2_residual(&plus.s_plus) < 1e-10);
        assert!(su2_residual(&plus.s_minus) < 1e-10);
        assert!(max_diff(&plus.s_plus, &minus.s_minus) < 1e-12);

        let mut bad = rest_w(1.0, &b).unwrap();
        bad.w[1] = b.gamma[0];
        assert!(matches!(
            chiral_spins(&bad, &b),
            Err(Error::NotBlockDiagonal(_))
        ));
    }

    #[test]
    fn dual_contraction() {
        let b = chiral_gamma_basis();
        let r = dual_contraction_check(&FourVector::at_rest(1.0), 1.0, &b).unwrap();
        assert!(r.dual < 1e-15);
        let r = dual_contraction_check(&p_z(), 1.0, &b).unwrap();
        assert!(r.dual < 1e-10);
        assert!(r.non_dual > 1e-3);
    }
}
