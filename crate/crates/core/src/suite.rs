//! Verification suites and sweeps behind the command-line front end.
//!
//! Every check is evaluated over independent samples in parallel and reduced
//! with `max`, so the reports do not depend on thread scheduling.

use rand::Rng;
use rayon::prelude::*;

use crate::clifford::{
    boost_spinor_rep, chiral_gamma_basis, conjugation_residuals, general_spinor_rep, vector_rep,
    GammaBasis,
};
use crate::cmatrix::{c, ComplexMatrix4};
use crate::error::{Error, Result};
use crate::pauli_lubanski::{covariant_w, covariant_w_by_boost, noncovariant_w, pl_from_tensor};
use crate::report::{TableRow, VerificationReport, WignerRow};
use crate::sampling::{max_rapidity, random_direction, random_lorentz, sample_rng, SweepConfig};
use crate::spin::{
    chiral_spins, covariant_spin_direct, dual_contraction_check, field_spin,
    hamiltonian_commutator, max_diff, su2_residual, wigner_closed_form, wigner_spin, SpinTriple,
};
use crate::spinor::{
    boosted_spinor, field_spin_at, independence_margin, normalization_check, orthogonality_check,
    Kind, Lambda, MatrixElementTable, MomentumGrid,
};
use crate::tensor::{
    boost_along, compose, hodge_dual, inverse, rotation_matrix, standard_boost, AntisymTensor4,
    FourVector, LorentzMatrix,
};
use crate::wigner::{
    cocycle_residual, expectation_rotation_with, little_group_d, spinor_transform_check, wigner_r,
};

/// Settings of a `verify` run. Gates quoted at `1e-12` in the defaults use
/// `tol / 100`; exact-arithmetic gates use zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyConfig {
    pub sweep: SweepConfig,
    pub tol: f64,
}

impl VerifyConfig {
    pub fn new(sweep: SweepConfig, tol: f64) -> Result<Self> {
        if !(tol >= 0.0) || !tol.is_finite() {
            return Err(Error::InvalidConfig(format!(
                "tolerance must be finite and non-negative, got {tol}"
            )));
        }
        Ok(VerifyConfig { sweep, tol })
    }

    pub fn strict(&self) -> f64 {
        self.tol / 100.0
    }
}

/// `max` that propagates NaN.
fn worst(a: f64, b: f64) -> f64 {
    if a.is_nan() || b.is_nan() {
        f64::NAN
    } else {
        a.max(b)
    }
}

fn fold_max(values: impl IntoIterator<Item = f64>) -> f64 {
    values.into_iter().fold(f64::NEG_INFINITY, worst)
}

fn columns<const K: usize>(rows: &[[f64; K]]) -> [f64; K] {
    std::array::from_fn(|k| fold_max(rows.iter().map(|r| r[k])))
}

fn par_rows<const K: usize>(
    n: usize,
    f: impl Fn(usize) -> Result<[f64; K]> + Sync + Send,
) -> Result<Vec<[f64; K]>> {
    (0..n).into_par_iter().map(f).collect()
}

/// Runs every suite and returns the reports sorted by check name.
pub fn run_verify(cfg: &VerifyConfig) -> Result<Vec<VerificationReport>> {
    let basis = chiral_gamma_basis();
    let mut out = Vec::new();
    out.extend(tensor_suite(cfg)?);
    out.extend(clifford_suite(cfg, &basis)?);
    out.extend(momentum_suite(cfg, &basis)?);
    out.extend(grid_suite(cfg, &basis)?);
    out.extend(wigner_suite(cfg, &basis)?);
    out.sort_by(|a, b| a.check.cmp(&b.check));
    Ok(out)
}

fn random_antisym<R: Rng>(rng: &mut R) -> AntisymTensor4<f64> {
    let v: [f64; 6] = std::array::from_fn(|_| rng.random_range(-1.0..=1.0));
    AntisymTensor4::from_upper(|mu, nu| match (mu, nu) {
        (0, 1) => v[0],
        (0, 2) => v[1],
        (0, 3) => v[2],
        (1, 2) => v[3],
        (1, 3) => v[4],
        _ => v[5],
    })
}

fn tensor_suite(cfg: &VerifyConfig) -> Result<Vec<VerificationReport>> {
    let s = &cfg.sweep;
    let n = 2 * s.samples;
    let rows = par_rows(n, |i| {
        let p = s.momentum(i);
        let l = standard_boost(&p, s.mass)?;
        let maps = l.apply(&FourVector::at_rest(s.mass)).max_abs_diff(&p);
        let sym = l.max_abs_diff(&l.transpose());
        let flipped = standard_boost(&p.parity(), s.mass)?;
        let inv = compose(&inverse(&l), &l)
            .max_abs_diff(&LorentzMatrix::identity())
            .max(compose(&flipped, &l).max_abs_diff(&LorentzMatrix::identity()));
        let mut rng = sample_rng(s.seed ^ 0x7e45, i as u64);
        let a = random_antisym(&mut rng);
        let b = random_antisym(&mut rng);
        let k: f64 = rng.random_range(-2.0..=2.0);
        let twice = hodge_dual(&hodge_dual(&a));
        let square = (0..4)
            .flat_map(|mu| (0..4).map(move |nu| (mu, nu)))
            .map(|(mu, nu)| (twice.get(mu, nu) + a.get(mu, nu)).abs())
            .fold(0.0, f64::max);
        let sum = AntisymTensor4::from_upper(|mu, nu| a.get(mu, nu) + b.get(mu, nu) * k);
        let lhs = hodge_dual(&sum);
        let (da, db) = (hodge_dual(&a), hodge_dual(&b));
        let rhs = AntisymTensor4::from_upper(|mu, nu| da.get(mu, nu) + db.get(mu, nu) * k);
        Ok([
            maps,
            l.metric_residual(),
            sym,
            inv,
            square,
            lhs.max_abs_diff(&rhs),
        ])
    })?;
    let [maps, metric, sym, inv, square, linear] = columns(&rows);
    let (strict, seed) = (cfg.strict(), s.seed);
    Ok(vec![
        VerificationReport::gate(
            "tensor.boost_maps_rest",
            maps,
            strict,
            n,
            seed,
            "‖𝓛_p k - p‖∞",
        ),
        VerificationReport::gate(
            "tensor.boost_metric",
            metric,
            strict,
            n,
            seed,
            "‖𝓛ᵀg𝓛 - g‖∞",
        ),
        VerificationReport::gate("tensor.boost_symmetric", sym, 0.0, n, seed, "‖𝓛 - 𝓛ᵀ‖∞"),
        VerificationReport::gate(
            "tensor.boost_inverse_product",
            inv,
            cfg.tol,
            n,
            seed,
            "max of ‖𝓛⁻¹𝓛 - 1‖∞ and ‖𝓛_{p̄}𝓛_p - 1‖∞",
        ),
        VerificationReport::gate(
            "tensor.hodge_dual_square",
            square,
            0.0,
            n,
            seed,
            "‖**T + T‖∞ on random real T",
        ),
        VerificationReport::gate(
            "tensor.hodge_dual_linear",
            linear,
            strict,
            n,
            seed,
            "‖*(A + kB) - *A - k*B‖∞",
        ),
    ])
}

fn clifford_suite(cfg: &VerifyConfig, basis: &GammaBasis) -> Result<Vec<VerificationReport>> {
    let s = &cfg.sweep;
    let mut exact: f64 = 0.0;
    for mu in 0..4 {
        for nu in 0..4 {
            let g = if mu != nu {
                0.0
            } else {
                crate::tensor::METRIC[mu]
            };
            let want = ComplexMatrix4::identity() * (2.0 * g);
            exact = exact.max(
                basis.gamma[mu]
                    .anticommutator(&basis.gamma[nu])
                    .max_abs_diff(&want),
            );
        }
        exact = exact.max(basis.gamma[mu].anticommutator(&basis.gamma5).max_abs());
    }
    exact = exact.max((basis.gamma5 * basis.gamma5).max_abs_diff(&ComplexMatrix4::identity()));
    let g5 = ComplexMatrix4::diag([-1.0, -1.0, 1.0, 1.0].map(|x| c(x, 0.0)));
    exact = exact.max(basis.gamma5.max_abs_diff(&g5));

    let xi_max = max_rapidity(s.pmax);
    let rows = par_rows(s.samples, |i| {
        let p = s.momentum(i);
        let u = boost_spinor_rep(&p, s.mass, basis)?;
        let herm = u.max_abs_diff(&u.adjoint());
        let xi = crate::tensor::rapidity_std(&p);
        let want = [
            (-xi / 2.0).exp(),
            (-xi / 2.0).exp(),
            (xi / 2.0).exp(),
            (xi / 2.0).exp(),
        ];
        let spectrum = u
            .eigenvalues()
            .iter()
            .zip(want)
            .map(|(e, w)| (e - c(w, 0.0)).norm())
            .fold(0.0, f64::max);

        let mut rng = sample_rng(s.seed ^ 0xc11f, i as u64);
        let mut params = || {
            let (dt, dx) = (random_direction(&mut rng), random_direction(&mut rng));
            let angle: f64 = rng.random_range(0.0..=std::f64::consts::PI);
            let rapidity: f64 = rng.random_range(0.0..=xi_max);
            (dt.map(|v| v * angle), dx.map(|v| v * rapidity))
        };
        let (t1, x1) = params();
        let (t2, x2) = params();
        let u1 = general_spinor_rep(t1, x1, basis);
        let u2 = general_spinor_rep(t2, x2, basis);
        let l12 = compose(&vector_rep(t1, x1), &vector_rep(t2, x2));
        let conj = conjugation_residuals(&(u1 * u2), &l12, basis)?;
        let det = (u1.determinant() - c(1.0, 0.0))
            .norm()
            .max((u2.determinant() - c(1.0, 0.0)).norm());
        Ok([herm, spectrum, conj.homomorphic, det, conj.direct])
    })?;
    let [herm, spectrum, homo, det, direct] = columns(&rows);
    let (n, seed, tol) = (s.samples, s.seed, cfg.tol);
    Ok(vec![
        VerificationReport::gate(
            "clifford.basis_relations",
            exact,
            0.0,
            1,
            seed,
            "{γ^μ,γ^ν} = 2g^{μν}, {γ^μ,γ⁵} = 0, (γ⁵)² = 1, γ⁵ = diag(-1,-1,1,1)",
        ),
        VerificationReport::gate("clifford.boost_rep_hermitian", herm, 0.0, n, seed, "‖U(𝓛_p) - U(𝓛_p)†‖∞"),
        VerificationReport::gate("clifford.boost_rep_spectrum", spectrum, tol, n, seed, "spectrum {e^{∓ξ/2} ×2}"),
        VerificationReport::gate(
            "clifford.projective_homomorphism",
            homo,
            tol,
            n,
            seed,
            "‖(U₁U₂)⁻¹γ_μ(U₁U₂) - (Λ₁Λ₂)^μ_νγ_ν‖∞, sign-blind",
        ),
        VerificationReport::gate("clifford.general_rep_determinant", det, tol, n, seed, "|det U - 1|"),
        VerificationReport::finding(
            "clifford.conjugation_direct_orientation",
            direct,
            n,
            seed,
            "‖(U₁U₂)γ^μ(U₁U₂)⁻¹ - (Λ₁Λ₂)^μ_νγ^ν‖∞; the direct law holds for single boosts but reverses products",
        ),
    ])
}

fn momentum_suite(cfg: &VerifyConfig, basis: &GammaBasis) -> Result<Vec<VerificationReport>> {
    let s = &cfg.sweep;
    let m = s.mass;
    let rows = par_rows(s.samples, |i| {
        let p = s.momentum(i);
        let cov = covariant_w(&p, m, basis)?;
        let nc = noncovariant_w(&p, m, basis)?;
        let from_tensor = pl_from_tensor(basis.sigma_tensor.entries(), &p)?;
        let fake = if p.spatial_norm() >= m {
            su2_residual(&cov.spatial_over_mass())
        } else {
            0.0
        };

        let field = field_spin(&cov, basis);
        let field_nc = field_spin(&nc, basis);
        let direct = covariant_spin_direct(&p, m, basis)?;
        let closed = wigner_closed_form(&p, m, basis)?;
        let chiral = chiral_spins(&cov, basis)?;
        let mirrored = chiral_spins(&covariant_w(&p.parity(), m, basis)?, basis)?;
        let dual = dual_contraction_check(&p, m, basis)?;

        let mut dirac = 0.0f64;
        let mut reflected = 0.0f64;
        let mut eigen = 0.0f64;
        for kind in [Kind::Particle, Kind::Antiparticle] {
            for l in Lambda::BOTH {
                let psi = boosted_spinor(&p, l, kind, m, basis)?;
                dirac = dirac.max(psi.dirac_residual(m, basis));
                reflected = reflected.max(psi.dirac_residual_at(&p.parity(), m, basis));
                eigen = eigen.max(psi.eigen_residual(&field.s[2]));
            }
        }
        let deviation = if p.spatial_norm() >= m {
            closed.deviation_from_rest(basis)
        } else {
            0.0
        };
        Ok([
            cov.transversality_residual(),
            cov.casimir_residual(),
            cov.max_abs_diff(&covariant_w_by_boost(&p, m, basis)?),
            nc.max_abs_diff(&from_tensor),
            fake,
            field.su2_residual(),
            field.spectrum_residual().max(field_nc.spectrum_residual()),
            field.max_abs_diff(&direct),
            field_nc.deviation_from_rest(basis),
            wigner_spin(&cov).deviation_from_rest(basis),
            wigner_spin(&nc).max_abs_diff(&closed),
            field.non_hermiticity(),
            max_diff(&chiral.s_plus, &mirrored.s_minus)
                .max(max_diff(&chiral.s_minus, &mirrored.s_plus)),
            su2_residual(&chiral.s_plus).max(su2_residual(&chiral.s_minus)),
            dual.dual,
            dual.non_dual,
            closed.su2_residual(),
            deviation,
            hamiltonian_commutator(&field, basis),
            dirac,
            reflected,
            eigen,
            orthogonality_check(&p, m, basis)?,
            normalization_check(&p, m, basis)?,
            // negated so the column max is the smallest margin
            -independence_margin(&p, m, basis)?,
        ])
    })?;
    let [transverse, casimir, cov_boost, nc_tensor, fake, su2, spectrum, id_a, id_b, id_c, id_d, non_herm, parity, chiral_su2, dual, non_dual, closed_su2, closed_dev, ham, dirac, reflected, eigen, ortho, norm, neg_margin] =
        columns(&rows);

    let rotation_rows = par_rows(s.samples.min(20), |i| {
        let p = s.momentum(i);
        let mut rng = sample_rng(s.seed ^ 0xd0a1, i as u64);
        let axis = random_direction(&mut rng);
        let angle: f64 = rng.random_range(0.0..=std::f64::consts::PI);
        let rp = FourVector::on_shell(m, rotation_matrix(axis, angle)?.apply(&p).spatial());
        let a = dual_contraction_check(&p, m, basis)?;
        let b = dual_contraction_check(&rp, m, basis)?;
        Ok([(a.dual - b.dual).abs()])
    })?;
    let [rot_inv] = columns(&rotation_rows);

    let (n, seed, tol, strict) = (s.samples, s.seed, cfg.tol, cfg.strict());
    Ok(vec![
        VerificationReport::gate(
            "pauli_lubanski.transversality",
            transverse,
            tol,
            n,
            seed,
            "‖p_μW^μ‖∞, covariant W",
        ),
        VerificationReport::gate(
            "pauli_lubanski.casimir",
            casimir,
            tol,
            n,
            seed,
            "‖W_μW^μ + ¾m²‖∞, covariant W",
        ),
        VerificationReport::gate(
            "pauli_lubanski.closed_form_vs_boost",
            cov_boost,
            tol,
            n,
            seed,
            "closed form vs 𝓛_p^μ_ν W_R^ν",
        ),
        VerificationReport::gate(
            "pauli_lubanski.noncovariant_vs_tensor",
            nc_tensor,
            strict,
            n,
            seed,
            "noncovariant W vs ½ε^{μνρσ}Σ_{νρ}p_σ with Σ^{μν} = (i/4)[γ^μ,γ^ν]",
        ),
        VerificationReport::at_least(
            "pauli_lubanski.fake_spin_su2_violation",
            fake,
            1e-3,
            n,
            seed,
            "max su(2) residual of Wᵏ/m over |p⃗| ≥ m",
        ),
        VerificationReport::gate("spin.su2", su2, tol, n, seed, "field spin from covariant W"),
        VerificationReport::gate(
            "spin.spectrum",
            spectrum,
            tol,
            n,
            seed,
            "eigenvalues {-½,-½,½,½}, both field-spin forms",
        ),
        VerificationReport::gate(
            "spin.identity_a_field_cov_vs_direct",
            id_a,
            tol,
            n,
            seed,
            "field spin(covariant W) vs U(𝓛_p)Σ/2 U⁻¹(𝓛_p)",
        ),
        VerificationReport::gate(
            "spin.identity_b_field_noncov_vs_rest",
            id_b,
            strict,
            n,
            seed,
            "field spin(noncovariant W) vs Σ/2",
        ),
        VerificationReport::gate(
            "spin.identity_c_wigner_cov_vs_rest",
            id_c,
            strict,
            n,
            seed,
            "Wigner spin(covariant W) vs Σ/2",
        ),
        VerificationReport::gate(
            "spin.identity_d_wigner_noncov_vs_closed_form",
            id_d,
            strict,
            n,
            seed,
            "Wigner spin(noncovariant W) vs closed form",
        ),
        VerificationReport::at_least(
            "spin.raw_non_hermiticity",
            non_herm,
            1e-3,
            n,
            seed,
            "max ‖Sᵏ - Sᵏ†‖∞ of the field spin as a raw matrix",
        ),
        VerificationReport::gate(
            "spin.chiral_parity_exchange",
            parity,
            strict,
            n,
            seed,
            "S₊(p⃗) vs S₋(-p⃗)",
        ),
        VerificationReport::gate(
            "spin.chiral_su2",
            chiral_su2,
            tol,
            n,
            seed,
            "2×2 blocks S₊, S₋",
        ),
        VerificationReport::gate(
            "spin.dual_contraction",
            dual,
            tol,
            n,
            seed,
            "*T^{k0} of 𝓛𝓛Σ vs covariant spin",
        ),
        VerificationReport::finding(
            "spin.dual_contraction_non_dual",
            non_dual,
            n,
            seed,
            "T^{k0} of 𝓛𝓛Σ without the dual vs covariant spin; nonzero even at rest",
        ),
        VerificationReport::gate(
            "spin.dual_contraction_rotation_invariance",
            rot_inv,
            tol,
            s.samples.min(20),
            seed,
            "|r(Rp) - r(p)| for random spatial rotations",
        ),
        VerificationReport::finding(
            "spin.wigner_closed_form_su2",
            closed_su2,
            n,
            seed,
            "su(2) residual of the Wigner closed form",
        ),
        VerificationReport::at_least(
            "spin.wigner_closed_form_deviation",
            closed_dev,
            1e-3,
            n,
            seed,
            "max ‖S_W - Σ/2‖∞ over |p⃗| ≥ m",
        ),
        VerificationReport::finding(
            "spin.hamiltonian_commutator",
            ham,
            n,
            seed,
            "max ‖[α·p⃗ + βm, Sᵏ]‖∞, field spin at fixed momentum",
        ),
        VerificationReport::gate(
            "spinor.dirac_equation",
            dirac,
            tol,
            n,
            seed,
            format!("‖(γ·p ∓ m)ψ‖ at p; the same spinors give {reflected:e} at p̄ = (E, -p⃗)"),
        ),
        VerificationReport::finding(
            "spinor.dirac_equation_reflected",
            reflected,
            n,
            seed,
            "‖(γ·p̄ ∓ m)ψ(p)‖ with p̄ = (E, -p⃗)",
        ),
        VerificationReport::gate(
            "spinor.spin_eigenvalue",
            eigen,
            tol,
            n,
            seed,
            "‖S³ψ - λψ‖, field spin",
        ),
        VerificationReport::gate(
            "spinor.orthogonality",
            ortho,
            strict,
            n,
            seed,
            "max |u†(p,λ)v(p̄,λ')|",
        ),
        VerificationReport::gate(
            "spinor.normalization",
            norm,
            tol,
            n,
            seed,
            "|ψ†(p,λ)ψ(p,λ') - (2E/m)δ|",
        ),
        VerificationReport::at_least(
            "spinor.linear_independence",
            -neg_margin,
            1e-6,
            n,
            seed,
            "smallest singular value of [u₊ u₋ v₊ v₋]",
        ),
    ])
}

fn grid_suite(cfg: &VerifyConfig, basis: &GammaBasis) -> Result<Vec<VerificationReport>> {
    let grid = MomentumGrid::standard(cfg.sweep.mass);
    let table = MatrixElementTable::build(&grid, basis)?;
    let raw = (0..grid.modes.len())
        .map(|i| {
            field_spin_at(&grid.momentum(i), grid.mass, basis)
                .map(|s| s.s[2].max_abs_diff(&s.s[2].adjoint()))
        })
        .collect::<Result<Vec<_>>>()?;
    let raw = fold_max(raw);
    let n = grid.modes.len();
    Ok(vec![
        VerificationReport::gate(
            "spinor.hermiticity_table",
            table.hermiticity_residual(),
            cfg.strict(),
            n,
            cfg.sweep.seed,
            format!("|S³_{{q,λ';p,λ}} - (S³_{{p,λ;q,λ'}})*| on {n} modes; raw ‖S³ - S³†‖∞ reaches {raw:e}"),
        ),
        VerificationReport::gate(
            "spinor.matrix_element_diagonal_form",
            table.diagonal_form_residual(),
            cfg.strict(),
            n,
            cfg.sweep.seed,
            "|S³_{q,λ';p,λ} - λ δ_pq δ_λλ'| with unit box normalization",
        ),
    ])
}

fn wigner_suite(cfg: &VerifyConfig, basis: &GammaBasis) -> Result<Vec<VerificationReport>> {
    let s = &cfg.sweep;
    let m = s.mass;
    let rows = par_rows(s.samples, |i| {
        let (l, p) = s.lorentz_and_momentum(i);
        let w = wigner_r(&l, &p, m)?;
        let blocks = match little_group_d(&l, &p, m, basis) {
            Ok(d) => (d.d2.determinant() - c(1.0, 0.0))
                .norm()
                .max(d.unitarity_residual()),
            Err(_) => f64::INFINITY,
        };
        let trace = match little_group_d(&l, &p, m, basis) {
            Ok(d) => (d.d2.trace().norm() - 2.0 * (w.angle / 2.0).cos().abs()).abs(),
            Err(_) => f64::INFINITY,
        };
        let mut transform = 0.0f64;
        let mut expectation = 0.0f64;
        let mut closed = 0.0f64;
        for kind in [Kind::Particle, Kind::Antiparticle] {
            for lam in Lambda::BOTH {
                transform = transform.max(spinor_transform_check(&l, &p, lam, kind, m, basis)?);
                expectation = expectation.max(
                    expectation_rotation_with(field_spin_at, &l, &p, lam, kind, m, basis)?
                        .residual(),
                );
                closed = closed.max(
                    expectation_rotation_with(wigner_closed_form, &l, &p, lam, kind, m, basis)?
                        .residual(),
                );
            }
        }
        let mut rng = sample_rng(s.seed ^ 0x3c0c, i as u64);
        let l2 = random_lorentz(&mut rng, max_rapidity(s.pmax));
        let cocycle = cocycle_residual(&l2, &l, &p, m)?;
        Ok([
            w.rest_residual(),
            blocks,
            trace,
            transform,
            expectation,
            closed,
            cocycle,
        ])
    })?;
    let [rest, blocks, trace, transform, expectation, closed, cocycle] = columns(&rows);

    let xi = (0.6f64).atanh();
    let lam = boost_along([1.0, 0.0, 0.0], xi)?;
    let p = FourVector::on_shell(m, [0.0, 0.0, m * xi.sinh()]);
    let angle = wigner_r(&lam, &p, m)?.angle;
    let two_boost = (angle - (9.0f64 / 40.0).atan()).abs();

    let (n, seed, tol) = (s.samples, s.seed, cfg.tol);
    Ok(vec![
        VerificationReport::gate("wigner.rest_momentum_fixed", rest, tol, n, seed, "‖R(1,0,0,0) - (1,0,0,0)‖∞"),
        VerificationReport::gate(
            "wigner.little_group_blocks",
            blocks,
            tol,
            n,
            seed,
            "d2 ⊕ d2 structure, unitarity and det d2 = 1",
        ),
        VerificationReport::gate("wigner.trace_angle", trace, tol, n, seed, "| |tr d2| - 2|cos(ω/2)| |"),
        VerificationReport::gate(
            "wigner.spinor_transform",
            transform,
            tol,
            n,
            seed,
            "‖U(Λ)ψ(p,λ) - Σ D_{λ'λ}ψ(Λp,λ')‖",
        ),
        VerificationReport::gate(
            "wigner.expectation_rotation",
            expectation,
            tol,
            n,
            seed,
            "(Dψ)†S(Dψ) vs R⟨S⟩, field spin",
        ),
        VerificationReport::finding(
            "wigner.expectation_rotation_wigner_closed_form",
            closed,
            n,
            seed,
            "same law with the Wigner closed form in place of the field spin",
        ),
        VerificationReport::gate("wigner.cocycle", cocycle, tol, n, seed, "R(Λ₂,Λ₁p)R(Λ₁,p) vs R(Λ₂Λ₁,p)"),
        VerificationReport::gate(
            "wigner.two_boost_angle",
            two_boost,
            tol,
            1,
            seed,
            format!("orthogonal boosts with rapidity artanh(3/5): angle {angle:.15}, expected arctan(9/40)"),
        ),
    ])
}

/// Grid of orthogonal-or-not boost pairs for the `wigner` sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WignerSweepConfig {
    pub xi: f64,
    pub eta: f64,
    pub steps: usize,
    pub boost_axis: [f64; 3],
    pub momentum_axis: [f64; 3],
    pub mass: f64,
}

impl WignerSweepConfig {
    fn validate(&self) -> Result<()> {
        if !self.xi.is_finite() || !self.eta.is_finite() {
            return Err(Error::InvalidConfig("rapidities must be finite".into()));
        }
        if !(self.mass > 0.0) {
            return Err(Error::NonPositiveMass(self.mass));
        }
        crate::tensor::boost_along(self.boost_axis, 0.0)?;
        crate::tensor::boost_along(self.momentum_axis, 0.0)?;
        Ok(())
    }
}

fn signed(angle: f64, axis: [f64; 3], reference: [f64; 3]) -> f64 {
    let d: f64 = (0..3).map(|k| axis[k] * reference[k]).sum();
    if angle == 0.0 || d == 0.0 {
        angle
    } else {
        angle * d.signum()
    }
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Rows for `ξ = i·xi/steps`, `η = j·eta/steps`, `0 ≤ i, j ≤ steps`: the
/// Λ-boost has rapidity `ξ` along `boost_axis`, the momentum rapidity `η`
/// along `momentum_axis`.
pub fn wigner_sweep(cfg: &WignerSweepConfig) -> Result<Vec<WignerRow>> {
    cfg.validate()?;
    let basis = chiral_gamma_basis();
    let m = cfg.mass;
    let denom = cfg.steps.max(1) as f64;
    let reference = cross(cfg.boost_axis, cfg.momentum_axis);
    let points: Vec<(f64, f64)> = (0..=cfg.steps)
        .flat_map(|i| (0..=cfg.steps).map(move |j| (i, j)))
        .map(|(i, j)| (cfg.xi * i as f64 / denom, cfg.eta * j as f64 / denom))
        .collect();
    points
        .par_iter()
        .map(|&(xi, eta)| {
            let l = boost_along(cfg.boost_axis, xi)?;
            let p = FourVector::on_shell(
                m,
                boost_along(cfg.momentum_axis, eta)?
                    .apply(&FourVector::at_rest(m))
                    .spatial(),
            );
            let w = wigner_r(&l, &p, m)?;

            let l_swapped = boost_along(cfg.momentum_axis, eta)?;
            let p_swapped = FourVector::on_shell(
                m,
                boost_along(cfg.boost_axis, xi)?
                    .apply(&FourVector::at_rest(m))
                    .spatial(),
            );
            let w_swapped = wigner_r(&l_swapped, &p_swapped, m)?;

            let e = expectation_rotation_with(
                field_spin_at,
                &l,
                &p,
                Lambda::Up,
                Kind::Particle,
                m,
                &basis,
            )?;
            Ok(WignerRow {
                xi,
                eta,
                angle: w.angle,
                signed_angle: signed(w.angle, w.axis, reference),
                swapped_signed_angle: signed(w_swapped.angle, w_swapped.axis, reference),
                axis_x: w.axis[0],
                axis_y: w.axis[1],
                axis_z: w.axis[2],
                spin_x: e.lhs[0],
                spin_y: e.lhs[1],
                spin_z: e.lhs[2],
                expectation_residual: e.residual(),
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableOperator {
    Field,
    FieldNoncov,
    CovariantDirect,
    WignerCov,
    WignerClosedForm,
    PlSpatial,
}

impl TableOperator {
    pub const ALL: [TableOperator; 6] = [
        TableOperator::Field,
        TableOperator::FieldNoncov,
        TableOperator::CovariantDirect,
        TableOperator::WignerCov,
        TableOperator::WignerClosedForm,
        TableOperator::PlSpatial,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TableOperator::Field => "field",
            TableOperator::FieldNoncov => "field_noncov",
            TableOperator::CovariantDirect => "covariant_direct",
            TableOperator::WignerCov => "wigner_cov",
            TableOperator::WignerClosedForm => "wigner_closed_form",
            TableOperator::PlSpatial => "pl_spatial",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|o| o.name() == name)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown operator {name:?}")))
    }

    fn triple(self, p: &FourVector, m: f64, basis: &GammaBasis) -> Result<[ComplexMatrix4; 3]> {
        let t: SpinTriple = match self {
            TableOperator::Field => field_spin(&covariant_w(p, m, basis)?, basis),
            TableOperator::FieldNoncov => field_spin(&noncovariant_w(p, m, basis)?, basis),
            TableOperator::CovariantDirect => covariant_spin_direct(p, m, basis)?,
            TableOperator::WignerCov => wigner_spin(&covariant_w(p, m, basis)?),
            TableOperator::WignerClosedForm => wigner_closed_form(p, m, basis)?,
            TableOperator::PlSpatial => return Ok(covariant_w(p, m, basis)?.spatial_over_mass()),
        };
        Ok(t.s)
    }
}

/// Row 0 is the rest frame; rows `1..=samples` use the sampled momenta
/// `0..samples`.
pub fn operator_table(sweep: &SweepConfig, operators: &[TableOperator]) -> Result<Vec<TableRow>> {
    let basis = chiral_gamma_basis();
    let rest = basis.rest_spin();
    let jobs: Vec<(usize, TableOperator)> = (0..=sweep.samples)
        .flat_map(|i| operators.iter().map(move |o| (i, *o)))
        .collect();
    jobs.par_iter()
        .map(|&(i, op)| {
            let p = if i == 0 {
                FourVector::at_rest(sweep.mass)
            } else {
                sweep.momentum(i - 1)
            };
            let s = op.triple(&p, sweep.mass, &basis)?;
            let v = p.spatial();
            Ok(TableRow {
                index: i,
                operator: op.name().to_string(),
                mass: sweep.mass,
                px: v[0],
                py: v[1],
                pz: v[2],
                energy: p.time(),
                su2_residual: su2_residual(&s),
                deviation_from_rest_spin: max_diff(&s, &rest),
                raw_non_hermiticity: s
                    .iter()
                    .map(|x| x.max_abs_diff(&x.adjoint()))
                    .fold(0.0, f64::max),
            })
        })
        .collect()
}
