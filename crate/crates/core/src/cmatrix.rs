//! Dense complex square matrices of fixed size.

use std::ops::{Add, AddAssign, Index, IndexMut, Mul, Neg, Sub};

use nalgebra::SMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tensor::TensorEntry;

pub type ComplexMatrix4 = CMatrix<4>;
pub type ComplexMatrix2 = CMatrix<2>;
pub type Spinor = [Complex64; 4];

pub const I: Complex64 = Complex64::new(0.0, 1.0);

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Row-major `N×N` complex matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CMatrix<const N: usize>(pub [[Complex64; N]; N]);

impl<const N: usize> CMatrix<N> {
    pub fn zeros() -> Self {
        CMatrix([[Complex64::new(0.0, 0.0); N]; N])
    }

    pub fn identity() -> Self {
        Self::from_fn(|i, j| if i == j { c(1.0, 0.0) } else { c(0.0, 0.0) })
    }

    pub fn from_fn(f: impl Fn(usize, usize) -> Complex64) -> Self {
        CMatrix(std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))))
    }

    pub fn diag(d: [Complex64; N]) -> Self {
        Self::from_fn(|i, j| if i == j { d[i] } else { c(0.0, 0.0) })
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self::from_fn(|i, j| self.0[i][j] * s)
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(|i, j| self.0[j][i].conj())
    }

    pub fn trace(&self) -> Complex64 {
        (0..N).map(|i| self.0[i][i]).sum()
    }

    /// Largest entry modulus, `‖A‖∞` in the entrywise sense.
    pub fn max_abs(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (*self - *other).max_abs()
    }

    /// Largest absolute row sum, used to pick the squaring count in
    /// [`crate::clifford::matrix_exp`].
    pub fn norm_one_rows(&self) -> f64 {
        self.0
            .iter()
            .map(|row| row.iter().map(|z| z.norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        *self * *other + *other * *self
    }

    pub fn apply(&self, v: &[Complex64; N]) -> [Complex64; N] {
        std::array::from_fn(|i| (0..N).map(|j| self.0[i][j] * v[j]).sum())
    }

    /// Gauss-Jordan elimination with partial pivoting.
    pub fn inverse(&self) -> Result<Self> {
        let mut a = self.0;
        let mut inv = Self::identity().0;
        let scale = self.max_abs().max(f64::MIN_POSITIVE);
        for col in 0..N {
            let pivot = (col..N)
                .max_by(|&x, &y| a[x][col].norm().total_cmp(&a[y][col].norm()))
                .unwrap();
            if a[pivot][col].norm() <= 1e-14 * scale {
                return Err(Error::Singular);
            }
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let d = a[col][col].inv();
            for j in 0..N {
                a[col][j] *= d;
                inv[col][j] *= d;
            }
            for row in 0..N {
                if row != col {
                    let f = a[row][col];
                    if f != c(0.0, 0.0) {
                        for j in 0..N {
                            let t = a[col][j];
                            a[row][j] -= f * t;
                            let t = inv[col][j];
                            inv[row][j] -= f * t;
                        }
                    }
                }
            }
        }
        Ok(CMatrix(inv))
    }

    pub fn to_nalgebra(&self) -> SMatrix<Complex64, N, N> {
        SMatrix::from_fn(|i, j| self.0[i][j])
    }
}

macro_rules! impl_decompositions {
    ($n:literal) => {
        impl CMatrix<$n> {
            pub fn determinant(&self) -> Complex64 {
                self.to_nalgebra().determinant()
            }

            /// Eigenvalues from a complex Schur decomposition, sorted by real part
            /// then imaginary part.
            pub fn eigenvalues(&self) -> [Complex64; $n] {
                let schur = nalgebra::Schur::new(self.to_nalgebra());
                let (_, t) = schur.unpack();
                let mut ev: [Complex64; $n] = std::array::from_fn(|i| t[(i, i)]);
                ev.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
                ev
            }

            /// Singular values in descending order.
            pub fn singular_values(&self) -> [f64; $n] {
                let sv = self.to_nalgebra().singular_values();
                let mut out: [f64; $n] = std::array::from_fn(|i| sv[i]);
                out.sort_by(|a, b| b.total_cmp(a));
                out
            }
        }
    };
}

impl_decompositions!(2);
impl_decompositions!(4);

impl ComplexMatrix4 {
    /// Assemble from 2×2 blocks `[[a, b], [c, d]]`.
    pub fn from_blocks(
        a: &ComplexMatrix2,
        b: &ComplexMatrix2,
        cb: &ComplexMatrix2,
        d: &ComplexMatrix2,
    ) -> Self {
        Self::from_fn(|i, j| match (i < 2, j < 2) {
            (true, true) => a.0[i][j],
            (true, false) => b.0[i][j - 2],
            (false, true) => cb.0[i - 2][j],
            (false, false) => d.0[i - 2][j - 2],
        })
    }

    /// Block `(row, col)` with `row, col ∈ {0, 1}`.
    pub fn block(&self, row: usize, col: usize) -> ComplexMatrix2 {
        CMatrix::from_fn(|i, j| self.0[2 * row + i][2 * col + j])
    }
}

impl<const N: usize> Default for CMatrix<N> {
    fn default() -> Self {
        Self::zeros()
    }
}

impl<const N: usize> Index<(usize, usize)> for CMatrix<N> {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.0[i][j]
    }
}

impl<const N: usize> IndexMut<(usize, usize)> for CMatrix<N> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.0[i][j]
    }
}

impl<const N: usize> Add for CMatrix<N> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::from_fn(|i, j| self.0[i][j] + rhs.0[i][j])
    }
}

impl<const N: usize> AddAssign for CMatrix<N> {
    fn add_assign(&mut self, rhs: Self) {
        for i in 0..N {
            for j in 0..N {
                self.0[i][j] += rhs.0[i][j];
            }
        }
    }
}

impl<const N: usize> Sub for CMatrix<N> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::from_fn(|i, j| self.0[i][j] - rhs.0[i][j])
    }
}

impl<const N: usize> Neg for CMatrix<N> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::from_fn(|i, j| -self.0[i][j])
    }
}

impl<const N: usize> Mul for CMatrix<N> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::from_fn(|i, j| (0..N).map(|k| self.0[i][k] * rhs.0[k][j]).sum())
    }
}

impl<const N: usize> Mul<f64> for CMatrix<N> {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        Self::from_fn(|i, j| self.0[i][j] * s)
    }
}

impl<const N: usize> Mul<Complex64> for CMatrix<N> {
    type Output = Self;
    fn mul(self, s: Complex64) -> Self {
        self.scale(s)
    }
}

impl<const N: usize> TensorEntry for CMatrix<N> {
    fn zero() -> Self {
        Self::zeros()
    }
    fn max_abs(&self) -> f64 {
        CMatrix::max_abs(self)
    }
}

pub fn spinor_dot(a: &Spinor, b: &Spinor) -> Complex64 {
    a.iter().zip(b.iter()).map(|(x, y)| x.conj() * y).sum()
}

pub fn spinor_norm(a: &Spinor) -> f64 {
    spinor_dot(a, a).re.sqrt()
}

pub fn spinor_max_abs_diff(a: &Spinor, b: &Spinor) -> f64 {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}
