//! Library results against independently computed reference values.

use fieldspin_core::clifford::{boost_spinor_rep, chiral_gamma_basis, general_spinor_rep};
use fieldspin_core::cmatrix::{c, spinor_dot, ComplexMatrix4};
use fieldspin_core::pauli_lubanski::{covariant_w, rest_w};
use fieldspin_core::spin::{covariant_spin_direct, field_spin, wigner_closed_form};
use fieldspin_core::spinor::{
    boosted_spinor, rest_spinor, Kind, Lambda, MatrixElementTable, MomentumGrid,
};
use fieldspin_core::tensor::{
    boost_along, hodge_dual, levi_civita_upper, rapidity_std, AntisymTensor4, FourVector, METRIC,
};
use fieldspin_core::wigner::{little_group_d, wigner_r};

/// `*T^{μν} = ½ ε^{μνρσ} T_{ρσ}` summed term by term.
fn brute_dual(t: &AntisymTensor4<f64>) -> [[f64; 4]; 4] {
    let mut out = [[0.0; 4]; 4];
    for mu in 0..4 {
        for nu in 0..4 {
            for rho in 0..4 {
                for sigma in 0..4 {
                    let low = METRIC[rho] * METRIC[sigma] * t.get(rho, sigma);
                    out[mu][nu] += 0.5 * levi_civita_upper([mu, nu, rho, sigma]) * low;
                }
            }
        }
    }
    out
}

#[test]
fn hodge_dual_matches_epsilon_sum() {
    let t = AntisymTensor4::from_upper(|mu, nu| {
        (1 + mu * 4 + nu) as f64 * if (mu + nu) % 2 == 0 { 1.0 } else { -0.5 }
    });
    let fast = hodge_dual(&t);
    let slow = brute_dual(&t);
    for mu in 0..4 {
        for nu in 0..4 {
            assert!((fast.get(mu, nu) - slow[mu][nu]).abs() < 1e-14);
        }
    }

    let unit = AntisymTensor4::from_upper(|mu, nu| if (mu, nu) == (1, 2) { 1.0 } else { 0.0 });
    let d = hodge_dual(&unit);
    assert_eq!(*d.get(0, 3), -1.0);
    assert_eq!(*d.get(3, 0), 1.0);
}

#[test]
fn orthogonal_boost_angle_formula() {
    let basis = chiral_gamma_basis();
    for (xi, eta) in [
        (0.2, 1.4),
        (std::f64::consts::LN_2, std::f64::consts::LN_2),
        (1.9, 0.4),
        (2.3, 2.3),
    ] {
        let l = boost_along([1.0, 0.0, 0.0], xi).unwrap();
        let p = FourVector::on_shell(1.0, [0.0, 0.0, f64::sinh(eta)]);
        let w = wigner_r(&l, &p, 1.0).unwrap();
        let want = (xi.sinh() * eta.sinh() / (xi.cosh() + eta.cosh())).atan();
        assert!((w.angle - want).abs() < 1e-12, "{xi} {eta}");
        assert!((w.axis[1].abs() - 1.0).abs() < 1e-12);
        let d = little_group_d(&l, &p, 1.0, &basis).unwrap();
        assert!((d.d2.trace().norm() - 2.0 * (want / 2.0).cos()).abs() < 1e-12);
    }
}

#[test]
fn spinor_norm_is_twice_cosh_rapidity() {
    let basis = chiral_gamma_basis();
    let p = FourVector::on_shell(1.0, [1.1, -0.4, 2.7]);
    let xi = rapidity_std(&p);
    let n = {
        let v = p.spatial();
        let len = p.spatial_norm();
        v.map(|x| x * xi / len)
    };
    // e^{-γ⁵Σ·ξ} acting between rest spinors, with the exponential taken
    // through the general representation at twice the rapidity
    let u2 = general_spinor_rep([0.0; 3], n.map(|x| 2.0 * x), &basis);
    for kind in [Kind::Particle, Kind::Antiparticle] {
        for l in Lambda::BOTH {
            let rest = rest_spinor(l, kind, 1.0).amplitude;
            let oracle = spinor_dot(&rest, &u2.apply(&rest)).re;
            let psi = boosted_spinor(&p, l, kind, 1.0, &basis).unwrap();
            assert!((psi.norm_sq() - oracle).abs() < 1e-12);
            assert!((oracle - 2.0 * xi.cosh()).abs() < 1e-12);
            assert!((psi.norm_sq() - 2.0 * p.time()).abs() < 1e-12);
        }
    }
}

#[test]
fn covariant_spin_by_explicit_product() {
    let basis = chiral_gamma_basis();
    let p = FourVector::on_shell(1.0, [0.3, 0.9, -1.7]);
    let u = boost_spinor_rep(&p, 1.0, &basis).unwrap();
    let inv = u.inverse().unwrap();
    let direct = covariant_spin_direct(&p, 1.0, &basis).unwrap();
    for k in 0..3 {
        let mut prod = ComplexMatrix4::zeros();
        for i in 0..4 {
            for j in 0..4 {
                let mut acc = c(0.0, 0.0);
                for a in 0..4 {
                    for b in 0..4 {
                        acc += u[(i, a)] * basis.sigma3v[k][(a, b)] * 0.5 * inv[(b, j)];
                    }
                }
                prod[(i, j)] = acc;
            }
        }
        assert!(prod.max_abs_diff(&direct.s[k]) < 1e-14);
    }
}

#[test]
fn field_spin_at_rest_is_half_sigma() {
    let basis = chiral_gamma_basis();
    let s = field_spin(&rest_w(2.5, &basis).unwrap(), &basis);
    for k in 0..3 {
        assert!(s.s[k].max_abs_diff(&(basis.sigma3v[k] * 0.5)) < 1e-15);
    }
}

#[test]
fn wigner_closed_form_off_axis_value() {
    let basis = chiral_gamma_basis();
    let p = FourVector::new(1.25, 0.75, 0.0, 0.0);
    let s = wigner_closed_form(&p, 1.0, &basis).unwrap();
    // i/2 γ⁵(Σ×P)³ = i/2 γ⁵ (Σ¹P² - Σ²P¹) = -(3i/8) γ⁵Σ²
    let want = (basis.gamma5 * basis.sigma3v[1]) * c(0.0, -0.375) + basis.sigma3v[2] * 0.625;
    assert!(s.s[2].max_abs_diff(&want) < 1e-15);
    assert!(s.s[2].max_abs_diff(&(basis.sigma3v[2] * 0.5)) > 1e-3);
}

#[test]
fn matrix_elements_reproduce_kronecker_form() {
    let basis = chiral_gamma_basis();
    let grid = MomentumGrid::standard(1.0);
    let table = MatrixElementTable::build(&grid, &basis).unwrap();
    let n = grid.modes.len();
    for q in 0..n {
        for lq in Lambda::BOTH {
            for p in 0..n {
                for lp in Lambda::BOTH {
                    let want = if q == p && lq == lp { lp.value() } else { 0.0 };
                    assert!((table.get(q, lq, p, lp) - c(want, 0.0)).norm() < 1e-12);
                }
            }
        }
    }
    assert!(table.hermiticity_residual() < 1e-12);
}

#[test]
fn covariant_w_along_z_golden() {
    let basis = chiral_gamma_basis();
    let w = covariant_w(&FourVector::new(1.25, 0.0, 0.0, 0.75), 1.0, &basis).unwrap();
    let s3 = basis.sigma3v[2];
    assert!(w.w[0].max_abs_diff(&(s3 * 0.375)) < 1e-15);
    assert!(w.w[3].max_abs_diff(&(s3 * 0.625)) < 1e-15);
    assert!(w.w[1].max_abs_diff(&(basis.sigma3v[0] * 0.5)) < 1e-15);
}
