//! Real Minkowski kinematics.
//!
//! Conventions: natural units, metric `g = diag(+1, -1, -1, -1)`, time
//! component first, contravariant components stored. The four-index
//! Levi-Civita symbol is oriented by `ε_{0123} = +1`, which makes
//! `ε^{0123} = -1` and `ε^{1230} = +1`.

use std::ops::{Add, Index, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Diagonal of the Minkowski metric.
pub const METRIC: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

/// Relative tolerance used when checking the mass shell.
const SHELL_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FourVector(pub [f64; 4]);

impl FourVector {
    pub const fn new(t: f64, x: f64, y: f64, z: f64) -> Self {
        FourVector([t, x, y, z])
    }

    /// On-shell momentum `(sqrt(p⃗·p⃗ + m²), p⃗)`.
    pub fn on_shell(mass: f64, p: [f64; 3]) -> Self {
        let e = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + mass * mass).sqrt();
        FourVector([e, p[0], p[1], p[2]])
    }

    /// Rest momentum `(m, 0, 0, 0)`.
    pub fn at_rest(mass: f64) -> Self {
        FourVector([mass, 0.0, 0.0, 0.0])
    }

    pub fn time(&self) -> f64 {
        self.0[0]
    }

    pub fn spatial(&self) -> [f64; 3] {
        [self.0[1], self.0[2], self.0[3]]
    }

    pub fn spatial_norm(&self) -> f64 {
        let [x, y, z] = self.spatial();
        (x * x + y * y + z * z).sqrt()
    }

    /// Parity image `(p⁰, -p⃗)`.
    pub fn parity(&self) -> Self {
        FourVector([self.0[0], -self.0[1], -self.0[2], -self.0[3]])
    }

    /// Covariant components `p_μ = g_μν p^ν`.
    pub fn lower(&self) -> [f64; 4] {
        [self.0[0], -self.0[1], -self.0[2], -self.0[3]]
    }

    pub fn dot(&self, other: &FourVector) -> f64 {
        minkowski_dot(self, other)
    }

    /// Checks `p·p = m²` and `p⁰ > 0` to a relative tolerance.
    pub fn check_on_shell(&self, mass: f64) -> Result<()> {
        if !(mass > 0.0) {
            return Err(Error::NonPositiveMass(mass));
        }
        let square = self.dot(self);
        let mass_sq = mass * mass;
        let scale = self.0[0].powi(2).max(1.0);
        if self.0[0] <= 0.0 || (square - mass_sq).abs() > SHELL_TOL * scale {
            return Err(Error::OffShell { square, mass_sq });
        }
        Ok(())
    }

    pub fn max_abs_diff(&self, other: &FourVector) -> f64 {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

impl Index<usize> for FourVector {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl Add for FourVector {
    type Output = FourVector;
    fn add(self, rhs: FourVector) -> FourVector {
        FourVector(std::array::from_fn(|i| self.0[i] + rhs.0[i]))
    }
}

impl Sub for FourVector {
    type Output = FourVector;
    fn sub(self, rhs: FourVector) -> FourVector {
        FourVector(std::array::from_fn(|i| self.0[i] - rhs.0[i]))
    }
}

/// `a⁰b⁰ - a⃗·b⃗`
pub fn minkowski_dot(a: &FourVector, b: &FourVector) -> f64 {
    a.0[0] * b.0[0] - a.0[1] * b.0[1] - a.0[2] * b.0[2] - a.0[3] * b.0[3]
}

/// Standard rapidity `artanh(|p⃗| / E)`.
///
/// Some references write the spinor boost with a rapidity twice this size;
/// the closed-form boost used in [`crate::clifford::boost_spinor_rep`] is
/// consistent with this one.
pub fn rapidity_std(p: &FourVector) -> f64 {
    (p.spatial_norm() / p.time()).atanh()
}

/// `Λ^μ_ν`, row index contravariant, column index covariant. Row-major.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LorentzMatrix(pub [[f64; 4]; 4]);

impl LorentzMatrix {
    pub fn identity() -> Self {
        LorentzMatrix(std::array::from_fn(|i| {
            std::array::from_fn(|j| if i == j { 1.0 } else { 0.0 })
        }))
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.0[row][col]
    }

    pub fn apply(&self, v: &FourVector) -> FourVector {
        FourVector(std::array::from_fn(|i| {
            (0..4).map(|j| self.0[i][j] * v.0[j]).sum()
        }))
    }

    pub fn transpose(&self) -> Self {
        LorentzMatrix(std::array::from_fn(|i| {
            std::array::from_fn(|j| self.0[j][i])
        }))
    }

    /// Spatial 3×3 block `Λ^i_j`.
    pub fn spatial_block(&self) -> [[f64; 3]; 3] {
        std::array::from_fn(|i| std::array::from_fn(|j| self.0[i + 1][j + 1]))
    }

    pub fn from_spatial_block(r: [[f64; 3]; 3]) -> Self {
        let mut m = LorentzMatrix::identity();
        for i in 0..3 {
            for j in 0..3 {
                m.0[i + 1][j + 1] = r[i][j];
            }
        }
        m
    }

    pub fn max_abs_diff(&self, other: &LorentzMatrix) -> f64 {
        let mut d: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                d = d.max((self.0[i][j] - other.0[i][j]).abs());
            }
        }
        d
    }

    /// `‖ΛᵀgΛ - g‖∞`
    pub fn metric_residual(&self) -> f64 {
        let mut r: f64 = 0.0;
        for a in 0..4 {
            for b in 0..4 {
                let s: f64 = (0..4)
                    .map(|m| self.0[m][a] * METRIC[m] * self.0[m][b])
                    .sum();
                let target = if a == b { METRIC[a] } else { 0.0 };
                r = r.max((s - target).abs());
            }
        }
        r
    }

    pub fn determinant(&self) -> f64 {
        nalgebra::Matrix4::from_fn(|i, j| self.0[i][j]).determinant()
    }
}

impl Mul for LorentzMatrix {
    type Output = LorentzMatrix;
    fn mul(self, rhs: LorentzMatrix) -> LorentzMatrix {
        compose(&self, &rhs)
    }
}

/// Matrix product `Λ₁Λ₂` (apply `Λ₂` first).
pub fn compose(a: &LorentzMatrix, b: &LorentzMatrix) -> LorentzMatrix {
    LorentzMatrix(std::array::from_fn(|i| {
        std::array::from_fn(|j| (0..4).map(|k| a.0[i][k] * b.0[k][j]).sum())
    }))
}

/// Metric-preserving inverse `Λ⁻¹ = g Λᵀ g`.
pub fn inverse(l: &LorentzMatrix) -> LorentzMatrix {
    LorentzMatrix(std::array::from_fn(|i| {
        std::array::from_fn(|j| METRIC[i] * l.0[j][i] * METRIC[j])
    }))
}

pub fn is_lorentz(l: &LorentzMatrix, tol: f64) -> bool {
    l.metric_residual() <= tol
}

/// Pure boost `𝓛_p` with `𝓛_p (m, 0, 0, 0) = p`.
pub fn standard_boost(p: &FourVector, mass: f64) -> Result<LorentzMatrix> {
    p.check_on_shell(mass)?;
    let e = p.time();
    let v = p.spatial();
    let mut l = LorentzMatrix::identity();
    l.0[0][0] = e / mass;
    for i in 0..3 {
        l.0[0][i + 1] = v[i] / mass;
        l.0[i + 1][0] = v[i] / mass;
        for j in 0..3 {
            l.0[i + 1][j + 1] += v[i] * v[j] / (mass * (e + mass));
        }
    }
    Ok(l)
}

/// Pure boost along a unit direction with the given rapidity.
pub fn boost_along(direction: [f64; 3], rapidity: f64) -> Result<LorentzMatrix> {
    let n = unit(direction)?;
    let p = FourVector::on_shell(1.0, n.map(|c| c * rapidity.sinh()));
    standard_boost(&p, 1.0)
}

/// Rotation by `angle` about `axis` (right-handed, active), via Rodrigues.
pub fn rotation_matrix(axis: [f64; 3], angle: f64) -> Result<LorentzMatrix> {
    let n = unit(axis)?;
    let (s, c) = angle.sin_cos();
    let k = [[0.0, -n[2], n[1]], [n[2], 0.0, -n[0]], [-n[1], n[0], 0.0]];
    let mut r = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let k2: f64 = (0..3).map(|m| k[i][m] * k[m][j]).sum();
            let id = if i == j { 1.0 } else { 0.0 };
            r[i][j] = id + s * k[i][j] + (1.0 - c) * k2;
        }
    }
    Ok(LorentzMatrix::from_spatial_block(r))
}

/// Axis and angle (in `[0, π]`) of a 3×3 rotation, via the quaternion
/// extraction that stays well conditioned near 0 and π. The axis sign is
/// fixed by the rotation sense; at exactly π it is chosen so the first
/// non-zero component is positive, and at angle 0 the axis is `ẑ`.
pub fn rotation_axis_angle(r: &[[f64; 3]; 3]) -> ([f64; 3], f64) {
    let tr = r[0][0] + r[1][1] + r[2][2];
    let (w, x, y, z);
    if tr >= r[0][0] && tr >= r[1][1] && tr >= r[2][2] {
        let s = 2.0 * (1.0 + tr).max(0.0).sqrt();
        w = 0.25 * s;
        x = (r[2][1] - r[1][2]) / s;
        y = (r[0][2] - r[2][0]) / s;
        z = (r[1][0] - r[0][1]) / s;
    } else if r[0][0] >= r[1][1] && r[0][0] >= r[2][2] {
        let s = 2.0 * (1.0 + r[0][0] - r[1][1] - r[2][2]).max(0.0).sqrt();
        w = (r[2][1] - r[1][2]) / s;
        x = 0.25 * s;
        y = (r[0][1] + r[1][0]) / s;
        z = (r[0][2] + r[2][0]) / s;
    } else if r[1][1] >= r[2][2] {
        let s = 2.0 * (1.0 + r[1][1] - r[0][0] - r[2][2]).max(0.0).sqrt();
        w = (r[0][2] - r[2][0]) / s;
        x = (r[0][1] + r[1][0]) / s;
        y = 0.25 * s;
        z = (r[1][2] + r[2][1]) / s;
    } else {
        let s = 2.0 * (1.0 + r[2][2] - r[0][0] - r[1][1]).max(0.0).sqrt();
        w = (r[1][0] - r[0][1]) / s;
        x = (r[0][2] + r[2][0]) / s;
        y = (r[1][2] + r[2][1]) / s;
        z = 0.25 * s;
    }
    let sign = if w < 0.0 { -1.0 } else { 1.0 };
    let (w, v) = (w * sign, [x * sign, y * sign, z * sign]);
    let vn = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    if vn < 1e-300 {
        return ([0.0, 0.0, 1.0], 0.0);
    }
    let mut axis = v.map(|c| c / vn);
    let angle = 2.0 * vn.atan2(w);
    if w < 1e-12 {
        if let Some(first) = axis.iter().copied().find(|c| c.abs() > 1e-12) {
            if first < 0.0 {
                axis = axis.map(|c| -c);
            }
        }
    }
    (axis, angle)
}

pub(crate) fn unit(v: [f64; 3]) -> Result<[f64; 3]> {
    let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    if !(n > 0.0) || !n.is_finite() {
        return Err(Error::ZeroAxis);
    }
    Ok(v.map(|c| c / n))
}

/// Three-index Levi-Civita symbol with `ε_{123} = +1` (indices 0-based here).
pub fn levi_civita3(i: usize, j: usize, k: usize) -> f64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}

/// Contravariant `ε^{μνρσ}` with `ε_{0123} = +1`, hence `ε^{0123} = -1`.
pub fn levi_civita_upper(idx: [usize; 4]) -> f64 {
    -permutation_sign(idx)
}

fn permutation_sign(idx: [usize; 4]) -> f64 {
    for a in 0..4 {
        for b in a + 1..4 {
            if idx[a] == idx[b] {
                return 0.0;
            }
        }
    }
    let mut inversions = 0;
    for a in 0..4 {
        for b in a + 1..4 {
            if idx[a] > idx[b] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Element type of an antisymmetric rank-2 tensor: plain reals or operator
/// matrices.
pub trait TensorEntry:
    Clone + Add<Output = Self> + Sub<Output = Self> + Neg<Output = Self> + Mul<f64, Output = Self>
{
    fn zero() -> Self;
    fn max_abs(&self) -> f64;
}

impl TensorEntry for f64 {
    fn zero() -> Self {
        0.0
    }
    fn max_abs(&self) -> f64 {
        self.abs()
    }
}

/// Antisymmetric `T^{μν}` with contravariant indices.
#[derive(Debug, Clone, PartialEq)]
pub struct AntisymTensor4<T> {
    entries: [[T; 4]; 4],
}

impl<T: TensorEntry> AntisymTensor4<T> {
    /// Validates antisymmetry exactly up to `tol` (pass 0 for exact).
    pub fn new(entries: [[T; 4]; 4], tol: f64) -> Result<Self> {
        let mut worst: f64 = 0.0;
        for i in 0..4 {
            for j in i..4 {
                let s = entries[i][j].clone() + entries[j][i].clone();
                worst = worst.max(s.max_abs());
            }
        }
        if worst > tol {
            return Err(Error::NotAntisymmetric(worst));
        }
        Ok(AntisymTensor4 { entries })
    }

    pub fn zero() -> Self {
        AntisymTensor4 {
            entries: std::array::from_fn(|_| std::array::from_fn(|_| T::zero())),
        }
    }

    /// Builds the tensor from its upper triangle, filling `T^{νμ} = -T^{μν}`.
    pub fn from_upper(f: impl Fn(usize, usize) -> T) -> Self {
        let mut entries: [[T; 4]; 4] = std::array::from_fn(|_| std::array::from_fn(|_| T::zero()));
        for i in 0..4 {
            for j in i + 1..4 {
                let v = f(i, j);
                entries[j][i] = -v.clone();
                entries[i][j] = v;
            }
        }
        AntisymTensor4 { entries }
    }

    pub fn get(&self, mu: usize, nu: usize) -> &T {
        &self.entries[mu][nu]
    }

    pub fn entries(&self) -> &[[T; 4]; 4] {
        &self.entries
    }

    /// Covariant component `T_{μν} = g_μμ g_νν T^{μν}`.
    pub fn lowered(&self, mu: usize, nu: usize) -> T {
        self.entries[mu][nu].clone() * (METRIC[mu] * METRIC[nu])
    }

    /// `Λ^μ_ρ Λ^ν_σ T^{ρσ}`
    pub fn transformed(&self, l: &LorentzMatrix) -> Self {
        AntisymTensor4::from_upper(|mu, nu| {
            let mut acc = T::zero();
            for rho in 0..4 {
                for sigma in 0..4 {
                    let c = l.0[mu][rho] * l.0[nu][sigma];
                    if c != 0.0 {
                        acc = acc + self.entries[rho][sigma].clone() * c;
                    }
                }
            }
            acc
        })
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut d: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                d = d.max((self.entries[i][j].clone() - other.entries[i][j].clone()).max_abs());
            }
        }
        d
    }
}

/// Hodge dual `*T^{μν} = ½ ε^{μνρσ} T_{ρσ}`.
///
/// Writing `e_k = T^{0k}` and `b_k = ½ ε_{klm} T^{lm}`, the dual has
/// `e' = -b` and `b' = e`, so applying it twice gives `-T`.
pub fn hodge_dual<T: TensorEntry>(t: &AntisymTensor4<T>) -> AntisymTensor4<T> {
    let e: [T; 3] = std::array::from_fn(|k| t.get(0, k + 1).clone());
    let b: [T; 3] = [
        t.get(2, 3).clone(),
        t.get(3, 1).clone(),
        t.get(1, 2).clone(),
    ];
    AntisymTensor4::from_upper(|mu, nu| match (mu, nu) {
        (0, k) => -b[k - 1].clone(),
        (2, 3) => e[0].clone(),
        (1, 3) => -e[1].clone(),
        (1, 2) => e[2].clone(),
        _ => unreachable!(),
    })
}
