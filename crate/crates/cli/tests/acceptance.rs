//! Acceptance gates at 500 samples, m = 1, |p| ≤ 5, seed 42.
//! Prints one PASS/FAIL line per criterion and exits non-zero if any fails.

use std::process::{Command, ExitCode};

use fieldspin_core::clifford::chiral_gamma_basis;
use fieldspin_core::pauli_lubanski::{covariant_w, noncovariant_w};
use fieldspin_core::spin::{
    covariant_spin_direct, field_spin, su2_residual, wigner_closed_form, wigner_spin,
};
use fieldspin_core::spinor::{
    boosted_spinor, normalization_check, orthogonality_check, Kind, Lambda, MatrixElementTable,
    MomentumGrid,
};
use fieldspin_core::tensor::{boost_along, FourVector};
use fieldspin_core::wigner::{expectation_rotation_check, spinor_transform_check, wigner_r};
use fieldspin_core::{GammaBasis, SweepConfig};

const MASS: f64 = 1.0;
const PMAX: f64 = 5.0;
const SAMPLES: usize = 500;
const SEED: u64 = 42;

struct Outcome {
    pass: bool,
    detail: String,
}

fn within(value: f64, tol: f64, what: &str) -> Outcome {
    Outcome {
        pass: value <= tol,
        detail: format!("{what} = {value:.3e} (≤ {tol:e})"),
    }
}

fn all(parts: Vec<Outcome>) -> Outcome {
    Outcome {
        pass: parts.iter().all(|o| o.pass),
        detail: parts
            .iter()
            .map(|o| {
                if o.pass {
                    o.detail.clone()
                } else {
                    format!("{} FAILED", o.detail)
                }
            })
            .collect::<Vec<_>>()
            .join("; "),
    }
}

fn max_over(sweep: &SweepConfig, f: impl Fn(&FourVector) -> f64) -> f64 {
    (0..sweep.samples)
        .map(|i| f(&sweep.momentum(i)))
        .fold(f64::NEG_INFINITY, |a, b| {
            if b.is_nan() || a.is_nan() {
                f64::NAN
            } else {
                a.max(b)
            }
        })
}

fn su2_gate(s: &SweepConfig, b: &GammaBasis) -> Outcome {
    within(
        max_over(s, |p| {
            field_spin(&covariant_w(p, MASS, b).unwrap(), b).su2_residual()
        }),
        1e-10,
        "max su(2) residual",
    )
}

fn spectrum_gate(s: &SweepConfig, b: &GammaBasis) -> Outcome {
    within(
        max_over(s, |p| {
            field_spin(&covariant_w(p, MASS, b).unwrap(), b).spectrum_residual()
        }),
        1e-10,
        "max eigenvalue deviation",
    )
}

fn identity_a(s: &SweepConfig, b: &GammaBasis) -> Outcome {
    within(
        max_over(s, |p| {
            field_spin(&covariant_w(p, MASS, b).unwrap(), b)
                .max_abs_diff(&covariant_spin_direct(p, MASS, b).unwrap())
        }),
        1e-10,
        "max entry difference",
    )
}

fn identity_b(s: &SweepConfig, b: &GammaBasis) -> Outcome {
    within(
        max_over(s, |p| {
            field_spin(&noncovariant_w(p, MASS, b).unwrap(), b).deviation_from_rest(b)
        }),
        1e-12,
        "max entry difference",
    )
}

fn identity_c(s: &SweepConfig, b: &GammaBasis) -> Outcome {
    within(
        max_over(s, |p| {
            wigner_spin(&covariant_w(p, MASS, b).unwrap()).deviation_from_rest(b)
        }),
        1e-12,
        "max entry difference",
    )
}

fn identity_d(s: &SweepConfig, b: &GammaBasis) -> Outcome {
    within(
        max_over(s, |p| {
            wigner_spin(&noncovariant_w(p, MASS, b).unwrap())
                .max_abs_diff(&wigner_closed_form(p, MASS, b).unwrap())
        }),
        1e-12,
        "max entry difference",
    )
}

fn spinor_gate(s: &SweepConfig, b: &GammaBasis) -> Outcome {
    let each = |p: &FourVector, f: &dyn Fn(&fieldspin_core::DiracSpinor) -> f64| {
        let mut worst = 0.0f64;
        for kind in [Kind::Particle, Kind::Antiparticle] {
            for l in Lambda::BOTH {
                worst = worst.max(f(&boosted_spinor(p, l, kind, MASS, b).unwrap()));
            }
        }
        worst
    };
    let dirac = max_over(s, |p| each(p, &|psi| psi.dirac_residual(MASS, b)));
    let reflected = max_over(s, |p| {
        each(p, &|psi| psi.dirac_residual_at(&p.parity(), MASS, b))
    });
    let eigen = max_over(s, |p| {
        let s3 = field_spin(&covariant_w(p, MASS, b).unwrap(), b).s[2];
        each(p, &|psi| psi.eigen_residual(&s3))
    });
    let ortho = max_over(s, |p| orthogonality_check(p, MASS, b).unwrap());
    let norm = max_over(s, |p| normalization_check(p, MASS, b).unwrap());
    let mut dirac = within(dirac, 1e-10, "Dirac residual at p");
    dirac
        .detail
        .push_str(&format!(" [at p̄ = (E, -p): {reflected:.3e}]"));
    all(vec![
        dirac,
        within(eigen, 1e-10, "S³ eigenvalue residual"),
        within(ortho, 1e-12, "|u†(p)v(p̄)|"),
        within(norm, 1e-10, "|ψ†ψ - 2E/m|"),
    ])
}

fn hermiticity_gate(b: &GammaBasis) -> Outcome {
    let grid = MomentumGrid::standard(MASS);
    let table = MatrixElementTable::build(&grid, b).unwrap();
    let mut out = all(vec![
        within(table.hermiticity_residual(), 1e-12, "Hermiticity residual"),
        within(table.diagonal_form_residual(), 1e-12, "λ·N·δδ residual"),
    ]);
    out.detail
        .push_str(&format!(" over {} momenta", grid.modes.len()));
    out
}

fn wigner_gate(s: &SweepConfig, b: &GammaBasis) -> Outcome {
    let mut transform = f64::NEG_INFINITY;
    let mut expectation = f64::NEG_INFINITY;
    for i in 0..s.samples {
        let (l, p) = s.lorentz_and_momentum(i);
        for kind in [Kind::Particle, Kind::Antiparticle] {
            for lam in Lambda::BOTH {
                transform =
                    transform.max(spinor_transform_check(&l, &p, lam, kind, MASS, b).unwrap());
                expectation = expectation
                    .max(expectation_rotation_check(&l, &p, lam, kind, MASS, b).unwrap());
            }
        }
    }
    let rapidity = 0.6f64.atanh();
    let l = boost_along([1.0, 0.0, 0.0], rapidity).unwrap();
    let p = FourVector::on_shell(MASS, [0.0, 0.0, MASS * rapidity.sinh()]);
    let angle = wigner_r(&l, &p, MASS).unwrap().angle;
    all(vec![
        within(transform, 1e-10, "spinor transform residual"),
        within(expectation, 1e-10, "expectation rotation residual"),
        within(
            (angle - (9.0f64 / 40.0).atan()).abs(),
            1e-10,
            "|ω - arctan(9/40)|",
        ),
    ])
}

fn negative_controls(s: &SweepConfig, b: &GammaBasis) -> Outcome {
    let large = |p: &FourVector| p.spatial_norm() >= MASS;
    let fake = max_over(s, |p| {
        if large(p) {
            su2_residual(&covariant_w(p, MASS, b).unwrap().spatial_over_mass())
        } else {
            0.0
        }
    });
    let closed = max_over(s, |p| {
        if large(p) {
            wigner_closed_form(p, MASS, b)
                .unwrap()
                .deviation_from_rest(b)
        } else {
            0.0
        }
    });
    Outcome {
        pass: fake > 1e-3 && closed > 1e-3,
        detail: format!(
            "W^k/m su(2) residual = {fake:.3e}, closed form vs Σ/2 = {closed:.3e} (both > 1e-3)"
        ),
    }
}

fn determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_fieldspin"))
            .args([
                "verify",
                "--samples",
                "500",
                "--seed",
                "42",
                "--format",
                "json",
            ])
            .output()
            .expect("spawn fieldspin")
            .stdout
    };
    let (a, b) = (run(), run());
    Outcome {
        pass: !a.is_empty() && a == b,
        detail: format!("{} and {} bytes, identical = {}", a.len(), b.len(), a == b),
    }
}

fn main() -> ExitCode {
    let sweep = SweepConfig::new(MASS, PMAX, SAMPLES, SEED).unwrap();
    let b = chiral_gamma_basis();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        (
            "su(2) algebra of the field spin",
            Box::new(|| su2_gate(&sweep, &b)),
        ),
        (
            "field-spin spectrum",
            Box::new(|| spectrum_gate(&sweep, &b)),
        ),
        (
            "field spin from covariant W vs boosted Σ/2",
            Box::new(|| identity_a(&sweep, &b)),
        ),
        (
            "field spin from non-covariant W vs Σ/2",
            Box::new(|| identity_b(&sweep, &b)),
        ),
        (
            "Wigner spin from covariant W vs Σ/2",
            Box::new(|| identity_c(&sweep, &b)),
        ),
        (
            "Wigner spin from non-covariant W vs closed form",
            Box::new(|| identity_d(&sweep, &b)),
        ),
        ("boosted spinors", Box::new(|| spinor_gate(&sweep, &b))),
        (
            "matrix-element Hermiticity",
            Box::new(|| hermiticity_gate(&b)),
        ),
        ("Wigner rotation", Box::new(|| wigner_gate(&sweep, &b))),
        (
            "negative controls",
            Box::new(|| negative_controls(&sweep, &b)),
        ),
        ("determinism of verify output", Box::new(determinism)),
    ];

    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        if !o.pass {
            failed += 1;
        }
        println!(
            "{} {:>2} {name}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            i + 1,
            o.detail
        );
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
