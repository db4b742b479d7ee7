//! Rest and boosted Dirac spinors, plane-wave modes and the box-normalized
//! matrix elements of the field spin `S³`.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::clifford::{boost_spinor_rep, GammaBasis};
use crate::cmatrix::{c, spinor_dot, spinor_norm, ComplexMatrix4, Spinor};
use crate::error::{Error, Result};
use crate::pauli_lubanski::covariant_w;
use crate::spin::{field_spin, SpinTriple};
use crate::tensor::FourVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Particle,
    Antiparticle,
}

/// Spin projection `λ = ±½`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Lambda {
    Up,
    Down,
}

impl Lambda {
    pub const BOTH: [Lambda; 2] = [Lambda::Up, Lambda::Down];

    pub fn value(self) -> f64 {
        match self {
            Lambda::Up => 0.5,
            Lambda::Down => -0.5,
        }
    }

    /// Row/column index in a little-group `D` block.
    pub fn index(self) -> usize {
        match self {
            Lambda::Up => 0,
            Lambda::Down => 1,
        }
    }

    pub fn flipped(self) -> Lambda {
        match self {
            Lambda::Up => Lambda::Down,
            Lambda::Down => Lambda::Up,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DiracSpinor {
    pub amplitude: Spinor,
    pub momentum: FourVector,
    pub lambda: Lambda,
    pub kind: Kind,
}

impl DiracSpinor {
    /// `‖(γ^μ q_μ ∓ m) ψ‖` at an arbitrary `q`, minus sign for particles.
    pub fn dirac_residual_at(&self, q: &FourVector, mass: f64, basis: &GammaBasis) -> f64 {
        let sign = match self.kind {
            Kind::Particle => -1.0,
            Kind::Antiparticle => 1.0,
        };
        let op = basis.slash(q) + ComplexMatrix4::identity() * (sign * mass);
        spinor_norm(&op.apply(&self.amplitude))
    }

    /// Dirac residual at the spinor's own momentum.
    pub fn dirac_residual(&self, mass: f64, basis: &GammaBasis) -> f64 {
        self.dirac_residual_at(&self.momentum, mass, basis)
    }

    /// `‖S ψ - λ ψ‖` for a given spin matrix.
    pub fn eigen_residual(&self, s3: &ComplexMatrix4) -> f64 {
        let lhs = s3.apply(&self.amplitude);
        let l = self.lambda.value();
        let diff: Spinor = std::array::from_fn(|i| lhs[i] - self.amplitude[i] * l);
        spinor_norm(&diff)
    }

    pub fn norm_sq(&self) -> f64 {
        spinor_dot(&self.amplitude, &self.amplitude).re
    }
}

/// Rest spinors `u(k,±½)`, `v(k,±½)` with `u†u = v†v = 2`.
pub fn rest_spinor(lambda: Lambda, kind: Kind, mass: f64) -> DiracSpinor {
    let one = c(1.0, 0.0);
    let z = c(0.0, 0.0);
    let s = match kind {
        Kind::Particle => one,
        Kind::Antiparticle => -one,
    };
    let amplitude = match lambda {
        Lambda::Up => [one, z, s, z],
        Lambda::Down => [z, one, z, s],
    };
    DiracSpinor {
        amplitude,
        momentum: FourVector::at_rest(mass),
        lambda,
        kind,
    }
}

/// `U(𝓛_p) ψ(k, λ)`.
pub fn boosted_spinor(
    p: &FourVector,
    lambda: Lambda,
    kind: Kind,
    mass: f64,
    basis: &GammaBasis,
) -> Result<DiracSpinor> {
    let u = boost_spinor_rep(p, mass, basis)?;
    let rest = rest_spinor(lambda, kind, mass);
    Ok(DiracSpinor {
        amplitude: u.apply(&rest.amplitude),
        momentum: *p,
        lambda,
        kind,
    })
}

/// `max_{λ,λ'} |u†(p,λ) v(p̄,λ')|`
pub fn orthogonality_check(p: &FourVector, mass: f64, basis: &GammaBasis) -> Result<f64> {
    let bar = p.parity();
    let mut worst: f64 = 0.0;
    for l in Lambda::BOTH {
        let u = boosted_spinor(p, l, Kind::Particle, mass, basis)?;
        for lp in Lambda::BOTH {
            let v = boosted_spinor(&bar, lp, Kind::Antiparticle, mass, basis)?;
            worst = worst.max(spinor_dot(&u.amplitude, &v.amplitude).norm());
        }
    }
    Ok(worst)
}

/// `max_{λ,λ'} |u†(p,λ) u(p,λ') - (2E/m) δ_{λλ'}|`, same for `v`.
pub fn normalization_check(p: &FourVector, mass: f64, basis: &GammaBasis) -> Result<f64> {
    let target = 2.0 * p.time() / mass;
    let mut worst: f64 = 0.0;
    for kind in [Kind::Particle, Kind::Antiparticle] {
        for l in Lambda::BOTH {
            let a = boosted_spinor(p, l, kind, mass, basis)?;
            for lp in Lambda::BOTH {
                let b = boosted_spinor(p, lp, kind, mass, basis)?;
                let want = if l == lp { target } else { 0.0 };
                worst = worst.max((spinor_dot(&a.amplitude, &b.amplitude) - c(want, 0.0)).norm());
            }
        }
    }
    Ok(worst)
}

/// Smallest singular value of the stack `[u(p,+), u(p,-), v(p,+), v(p,-)]`.
pub fn independence_margin(p: &FourVector, mass: f64, basis: &GammaBasis) -> Result<f64> {
    let mut cols = Vec::with_capacity(4);
    for kind in [Kind::Particle, Kind::Antiparticle] {
        for l in Lambda::BOTH {
            cols.push(boosted_spinor(p, l, kind, mass, basis)?.amplitude);
        }
    }
    let m = ComplexMatrix4::from_fn(|i, j| cols[j][i]);
    Ok(m.singular_values()[3])
}

/// Field spin `S(p)` built from the covariant Pauli-Lubanski vector.
pub fn field_spin_at(p: &FourVector, mass: f64, basis: &GammaBasis) -> Result<SpinTriple> {
    Ok(field_spin(&covariant_w(p, mass, basis)?, basis))
}

/// `e^{-ip·x} u` for particles, `e^{+ip·x} v` for antiparticles.
#[derive(Debug, Clone, PartialEq)]
pub struct PlaneWaveMode {
    pub spinor: DiracSpinor,
}

impl PlaneWaveMode {
    pub fn phase_sign(&self) -> f64 {
        match self.spinor.kind {
            Kind::Particle => -1.0,
            Kind::Antiparticle => 1.0,
        }
    }

    pub fn at(&self, x: &FourVector) -> Spinor {
        let phase = Complex64::from_polar(1.0, self.phase_sign() * self.spinor.momentum.dot(x));
        self.spinor.amplitude.map(|a| a * phase)
    }
}

/// Integer momentum modes in a periodic box of side `2π`, sampled on an
/// `M³` lattice so the discrete average of `e^{i(p-q)·x}` is `δ_{pq}`.
#[derive(Debug, Clone)]
pub struct MomentumGrid {
    pub modes: Vec<[i32; 3]>,
    pub lattice: usize,
    pub mass: f64,
}

impl MomentumGrid {
    pub fn new(modes: Vec<[i32; 3]>, lattice: usize, mass: f64) -> Result<Self> {
        if !(mass > 0.0) {
            return Err(Error::NonPositiveMass(mass));
        }
        if modes.is_empty() {
            return Err(Error::InvalidConfig("empty momentum grid".into()));
        }
        // sums and differences of modes must stay below the lattice Nyquist range
        let reach = modes
            .iter()
            .flatten()
            .map(|n| n.unsigned_abs() as usize)
            .max()
            .unwrap_or(0);
        if 2 * reach >= lattice {
            return Err(Error::InvalidConfig(format!(
                "lattice {lattice} aliases modes up to {reach}"
            )));
        }
        for (i, a) in modes.iter().enumerate() {
            if *a == [0, 0, 0] || modes[..i].contains(a) {
                return Err(Error::InvalidConfig(format!("bad mode {a:?}")));
            }
        }
        Ok(MomentumGrid {
            modes,
            lattice,
            mass,
        })
    }

    /// Eight modes in `±` pairs, with off-axis directions.
    pub fn standard(mass: f64) -> Self {
        let base = [[1, 0, 0], [0, 1, 1], [1, -1, 2], [2, 1, -1]];
        let modes = base.iter().flat_map(|n| [*n, n.map(|x| -x)]).collect();
        MomentumGrid::new(modes, 8, mass).expect("standard grid is valid")
    }

    pub fn momentum(&self, i: usize) -> FourVector {
        FourVector::on_shell(self.mass, self.modes[i].map(f64::from))
    }

    pub fn index_of(&self, p: &FourVector) -> Result<usize> {
        let v = p.spatial();
        self.modes
            .iter()
            .position(|n| {
                n.iter()
                    .zip(v)
                    .all(|(a, b)| (f64::from(*a) - b).abs() < 1e-12)
            })
            .ok_or(Error::OffGrid(v))
    }

    fn sites(&self) -> impl Iterator<Item = [f64; 3]> + '_ {
        let m = self.lattice;
        let h = 2.0 * std::f64::consts::PI / m as f64;
        (0..m * m * m).map(move |i| {
            [
                (i / (m * m)) as f64 * h,
                ((i / m) % m) as f64 * h,
                (i % m) as f64 * h,
            ]
        })
    }
}

/// `ψ(x; p, λ) = [e^{-ip·x} u(p,λ) + e^{ip·x} v(p,λ)] / sqrt(4E/m)` at `t = 0`,
/// with `S³(p)` applied to both modes.
struct GridState {
    u: Spinor,
    v: Spinor,
    s3u: Spinor,
    s3v: Spinor,
    p: [f64; 3],
}

impl GridState {
    fn new(p: &FourVector, lambda: Lambda, mass: f64, basis: &GammaBasis) -> Result<Self> {
        let n = (4.0 * p.time() / mass).sqrt();
        let s3 = field_spin_at(p, mass, basis)?.s[2];
        let u = boosted_spinor(p, lambda, Kind::Particle, mass, basis)?
            .amplitude
            .map(|a| a / n);
        let v = boosted_spinor(p, lambda, Kind::Antiparticle, mass, basis)?
            .amplitude
            .map(|a| a / n);
        Ok(GridState {
            s3u: s3.apply(&u),
            s3v: s3.apply(&v),
            u,
            v,
            p: p.spatial(),
        })
    }

    fn value(&self, x: &[f64; 3], apply_spin: bool) -> Spinor {
        let px = self.p[0] * x[0] + self.p[1] * x[1] + self.p[2] * x[2];
        // -p·x = +p⃗·x⃗ at t = 0
        let ep = Complex64::from_polar(1.0, px);
        let em = ep.conj();
        let (u, v) = if apply_spin {
            (&self.s3u, &self.s3v)
        } else {
            (&self.u, &self.v)
        };
        std::array::from_fn(|i| u[i] * ep + v[i] * em)
    }
}

/// `(1/M³) Σ_x ψ†(x; q, λ') S³ ψ(x; p, λ)`
pub fn spin_matrix_element(
    q: &FourVector,
    lambda_q: Lambda,
    p: &FourVector,
    lambda_p: Lambda,
    grid: &MomentumGrid,
    basis: &GammaBasis,
) -> Result<Complex64> {
    grid.index_of(q)?;
    grid.index_of(p)?;
    let sq = GridState::new(q, lambda_q, grid.mass, basis)?;
    let sp = GridState::new(p, lambda_p, grid.mass, basis)?;
    Ok(overlap(&sq, &sp, grid))
}

fn overlap(bra: &GridState, ket: &GridState, grid: &MomentumGrid) -> Complex64 {
    let sum: Complex64 = grid
        .sites()
        .map(|x| spinor_dot(&bra.value(&x, false), &ket.value(&x, true)))
        .sum();
    sum / (grid.lattice.pow(3) as f64)
}

/// All `S³_{q,λ';p,λ}` on a grid, row `(q,λ')`, column `(p,λ)`, with
/// state index `2·mode + λ.index()`.
#[derive(Debug, Clone)]
pub struct MatrixElementTable {
    pub grid: MomentumGrid,
    pub entries: Vec<Vec<Complex64>>,
}

impl MatrixElementTable {
    pub fn build(grid: &MomentumGrid, basis: &GammaBasis) -> Result<Self> {
        let states = (0..grid.modes.len())
            .flat_map(|i| Lambda::BOTH.map(|l| (i, l)))
            .map(|(i, l)| GridState::new(&grid.momentum(i), l, grid.mass, basis))
            .collect::<Result<Vec<_>>>()?;
        let entries = states
            .par_iter()
            .map(|bra| states.iter().map(|ket| overlap(bra, ket, grid)).collect())
            .collect();
        Ok(MatrixElementTable {
            grid: grid.clone(),
            entries,
        })
    }

    pub fn get(&self, q: usize, lq: Lambda, p: usize, lp: Lambda) -> Complex64 {
        self.entries[2 * q + lq.index()][2 * p + lp.index()]
    }

    /// `max |S³_{a;b} - (S³_{b;a})*|`
    pub fn hermiticity_residual(&self) -> f64 {
        let n = self.entries.len();
        let mut worst: f64 = 0.0;
        for a in 0..n {
            for b in 0..n {
                worst = worst.max((self.entries[a][b] - self.entries[b][a].conj()).norm());
            }
        }
        worst
    }

    /// `max |S³_{q,λ';p,λ} - λ δ_{pq} δ_{λλ'}|` with unit box normalization.
    pub fn diagonal_form_residual(&self) -> f64 {
        let modes = self.grid.modes.len();
        let mut worst: f64 = 0.0;
        for q in 0..modes {
            for lq in Lambda::BOTH {
                for p in 0..modes {
                    for lp in Lambda::BOTH {
                        let want = if p == q && lp == lq { lp.value() } else { 0.0 };
                        worst = worst.max((self.get(q, lq, p, lp) - c(want, 0.0)).norm());
                    }
                }
            }
        }
        worst
    }
}

/// Hermiticity residual of the full table on `grid`.
pub fn hermiticity_check(grid: &MomentumGrid, basis: &GammaBasis) -> Result<f64> {
    Ok(MatrixElementTable::build(grid, basis)?.hermiticity_residual())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::chiral_gamma_basis;

    #[test]
    fn rest_vectors() {
        let u = rest_spinor(Lambda::Up, Kind::Particle, 1.0);
        assert_eq!(
            u.amplitude,
            [c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)]
        );
        let v = rest_spinor(Lambda::Up, Kind::Antiparticle, 1.0);
        assert_eq!(
            v.amplitude,
            [c(1.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0), c(0.0, 0.0)]
        );
        let v = rest_spinor(Lambda::Down, Kind::Antiparticle, 1.0);
        assert_eq!(
            v.amplitude,
            [c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0)]
        );
        for kind in [Kind::Particle, Kind::Antiparticle] {
            for l in Lambda::BOTH {
                assert_eq!(rest_spinor(l, kind, 1.0).norm_sq(), 2.0);
            }
        }
    }

    #[test]
    fn boosted_along_z() {
        let b = chiral_gamma_basis();
        let p = FourVector::new(1.25, 0.0, 0.0, 0.75);
        let u = boosted_spinor(&p, Lambda::Up, Kind::Particle, 1.0, &b).unwrap();
        let r2 = std::f64::consts::SQRT_2;
        let golden = [c(r2, 0.0), c(0.0, 0.0), c(1.0 / r2, 0.0), c(0.0, 0.0)];
        assert!(crate::cmatrix::spinor_max_abs_diff(&u.amplitude, &golden) < 1e-15);
        assert!((u.norm_sq() - 2.5).abs() < 1e-14);
        let s3 = field_spin_at(&p, 1.0, &b).unwrap().s[2];
        assert!(u.eigen_residual(&s3) < 1e-14);
        assert!(orthogonality_check(&p, 1.0, &b).unwrap() < 1e-12);
        let rest = boosted_spinor(
            &FourVector::at_rest(1.0),
            Lambda::Down,
            Kind::Antiparticle,
            1.0,
            &b,
        )
        .unwrap();
        assert_eq!(
            rest.amplitude,
            rest_spinor(Lambda::Down, Kind::Antiparticle, 1.0).amplitude
        );
        assert!(rest.dirac_residual(1.0, &b) < 1e-15);
    }

    #[test]
    fn boosted_spinors_solve_dirac_at_reflected_momentum() {
        let b = chiral_gamma_basis();
        let p = FourVector::on_shell(1.0, [0.3, -1.2, 0.8]);
        for kind in [Kind::Particle, Kind::Antiparticle] {
            for l in Lambda::BOTH {
                let s = boosted_spinor(&p, l, kind, 1.0, &b).unwrap();
                assert!(s.dirac_residual_at(&p.parity(), 1.0, &b) < 1e-12);
                assert!(s.dirac_residual(1.0, &b) > 1e-3);
            }
        }
    }

    #[test]
    fn plane_wave_phase() {
        let b = chiral_gamma_basis();
        let p = FourVector::on_shell(1.0, [1.0, 0.0, 0.0]);
        let x = FourVector::new(0.0, 0.5, 0.0, 0.0);
        let mode = PlaneWaveMode {
            spinor: boosted_spinor(&p, Lambda::Up, Kind::Particle, 1.0, &b).unwrap(),
        };
        // -p·x = +p⃗·x⃗ at t = 0
        let want = mode.spinor.amplitude[0] * Complex64::from_polar(1.0, 0.5);
        assert!((mode.at(&x)[0] - want).norm() < 1e-15);
    }

    #[test]
    fn matrix_elements_two_point_grid() {
        let b = chiral_gamma_basis();
        let grid = MomentumGrid::new(vec![[1, 1, 0], [-1, -1, 0]], 4, 1.0).unwrap();
        let p = grid.momentum(0);
        let q = grid.momentum(1);
        let diag = spin_matrix_element(&p, Lambda::Up, &p, Lambda::Up, &grid, &b).unwrap();
        assert!((diag - c(0.5, 0.0)).norm() < 1e-12);
        let flip = spin_matrix_element(&p, Lambda::Down, &p, Lambda::Up, &grid, &b).unwrap();
        assert!(flip.norm() < 1e-12);
        let off = spin_matrix_element(&q, Lambda::Up, &p, Lambda::Up, &grid, &b).unwrap();
        assert!(off.norm() < 1e-12);

        let table = MatrixElementTable::build(&grid, &b).unwrap();
        assert!(table.hermiticity_residual() < 1e-12);
        assert!(table.diagonal_form_residual() < 1e-12);
        assert!(field_spin_at(&p, 1.0, &b).unwrap().non_hermiticity() > 1e-3);

        let off_grid = FourVector::on_shell(1.0, [0.5, 0.0, 0.0]);
        assert!(matches!(
            spin_matrix_element(&off_grid, Lambda::Up, &p, Lambda::Up, &grid, &b),
            Err(Error::OffGrid(_))
        ));
    }

    #[test]
    fn grid_validation() {
        assert!(MomentumGrid::new(vec![[3, 0, 0]], 4, 1.0).is_err());
        assert!(MomentumGrid::new(vec![[0, 0, 0]], 8, 1.0).is_err());
        assert!(MomentumGrid::new(vec![[1, 0, 0], [1, 0, 0]], 8, 1.0).is_err());
        assert_eq!(MomentumGrid::standard(1.0).modes.len(), 8);
    }
}
