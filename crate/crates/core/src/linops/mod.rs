//! Dense complex linear algebra on bipartite spaces `C^dA ⊗ C^dB`.
//!
//! Basis ordering is `|k⟩⊗|ℓ⟩ ↦ k·dB + ℓ` (0-based) everywhere in the crate.

mod decomp;
mod eigen;
mod matrix;

use alloc::vec::Vec;
use core::ops::{Add, Sub};

use num_complex::Complex64 as C64;

pub use decomp::{determinant, rank, singular_values, solve_real};
pub use eigen::{eig_hermitian, eigvals_hermitian, min_eigenvalue, HermitianEigen};
pub use matrix::CMatrix;

use crate::error::{Error, Result};

/// Which tensor factor an operation acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Subsystem {
    A,
    B,
}

/// Operator on `C^dA ⊗ C^dB`.
#[derive(Clone, Debug, PartialEq)]
pub struct BipartiteOperator {
    d_a: usize,
    d_b: usize,
    matrix: CMatrix,
}

impl BipartiteOperator {
    pub fn new(d_a: usize, d_b: usize, matrix: CMatrix) -> Result<Self> {
        let n = d_a * d_b;
        if d_a == 0 || d_b == 0 || matrix.rows() != n || matrix.cols() != n {
            return Err(Error::DimensionMismatch(alloc::format!(
                "declared {d_a}x{d_b} but matrix is {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        if !matrix.is_finite() {
            return Err(Error::NonFinite);
        }
        Ok(Self { d_a, d_b, matrix })
    }

    /// Square operator on `C^d ⊗ C^d`.
    pub fn square(d: usize, matrix: CMatrix) -> Result<Self> {
        Self::new(d, d, matrix)
    }

    pub fn identity(d_a: usize, d_b: usize) -> Self {
        Self {
            d_a,
            d_b,
            matrix: CMatrix::identity(d_a * d_b),
        }
    }

    pub fn zeros(d_a: usize, d_b: usize) -> Self {
        Self {
            d_a,
            d_b,
            matrix: CMatrix::zeros(d_a * d_b, d_a * d_b),
        }
    }

    pub fn d_a(&self) -> usize {
        self.d_a
    }

    pub fn d_b(&self) -> usize {
        self.d_b
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.d_a, self.d_b)
    }

    /// Total dimension `dA·dB`.
    pub fn dim(&self) -> usize {
        self.d_a * self.d_b
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> CMatrix {
        self.matrix
    }

    pub fn get(&self, row: usize, col: usize) -> C64 {
        self.matrix[(row, col)]
    }

    pub fn trace(&self) -> C64 {
        self.matrix.trace()
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.matrix.is_hermitian(tol)
    }

    pub fn adjoint(&self) -> Self {
        self.with_matrix(self.matrix.adjoint())
    }

    pub fn scale(&self, s: f64) -> Self {
        self.with_matrix(self.matrix.scale(s))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.matrix.max_abs_diff(&other.matrix)
    }

    /// `s·𝟙 + self`
    pub fn shifted(&self, s: f64) -> Self {
        let mut m = self.matrix.clone();
        for i in 0..self.dim() {
            m[(i, i)] += s;
        }
        self.with_matrix(m)
    }

    pub fn partial_transpose(&self, subsystem: Subsystem) -> Self {
        let db = self.d_b;
        let m = &self.matrix;
        let out = CMatrix::from_fn(self.dim(), self.dim(), |r, c| {
            let (i, j) = (r / db, r % db);
            let (k, l) = (c / db, c % db);
            match subsystem {
                Subsystem::B => m[(i * db + l, k * db + j)],
                Subsystem::A => m[(k * db + j, i * db + l)],
            }
        });
        self.with_matrix(out)
    }

    /// `⟨v|X|v⟩` (real part; the operator is expected to be Hermitian).
    pub fn expectation(&self, v: &[C64]) -> f64 {
        self.matrix.sandwich(v, v).re
    }

    /// `U_A ⊗ U_B · X · (U_A ⊗ U_B)†`
    pub fn local_conjugate(&self, u_a: &CMatrix, u_b: &CMatrix) -> Result<Self> {
        if u_a.rows() != self.d_a || u_b.rows() != self.d_b || !u_a.is_square() || !u_b.is_square() {
            return Err(Error::DimensionMismatch("local unitary dimensions".into()));
        }
        let u = u_a.kron(u_b);
        Ok(self.with_matrix(u.matmul(&self.matrix).matmul(&u.adjoint())))
    }

    fn with_matrix(&self, matrix: CMatrix) -> Self {
        Self {
            d_a: self.d_a,
            d_b: self.d_b,
            matrix,
        }
    }

    fn check_same_dims(&self, other: &Self) -> Result<()> {
        if self.dims() != other.dims() {
            return Err(Error::DimensionMismatch(alloc::format!(
                "{:?} vs {:?}",
                self.dims(),
                other.dims()
            )));
        }
        Ok(())
    }

    /// Linear combination `Σ wᵢ Xᵢ`; all operands must share dimensions.
    pub fn combination(terms: &[(f64, &Self)]) -> Result<Self> {
        let (_, first) = terms.first().ok_or(Error::Empty("combination".into()))?;
        let mut acc = Self::zeros(first.d_a, first.d_b);
        for (w, x) in terms {
            first.check_same_dims(x)?;
            acc = &acc + &x.scale(*w);
        }
        Ok(acc)
    }

    /// `tr(self · other)`
    pub fn trace_product(&self, other: &Self) -> Result<C64> {
        self.check_same_dims(other)?;
        Ok(self.matrix.trace_product(&other.matrix))
    }
}

impl Add for &BipartiteOperator {
    type Output = BipartiteOperator;
    fn add(self, rhs: &BipartiteOperator) -> BipartiteOperator {
        assert_eq!(self.dims(), rhs.dims(), "dimension mismatch");
        self.with_matrix(&self.matrix + &rhs.matrix)
    }
}

impl Sub for &BipartiteOperator {
    type Output = BipartiteOperator;
    fn sub(self, rhs: &BipartiteOperator) -> BipartiteOperator {
        assert_eq!(self.dims(), rhs.dims(), "dimension mismatch");
        self.with_matrix(&self.matrix - &rhs.matrix)
    }
}

/// Kronecker product `A ⊗ B` of square matrices, tagged with `dA = dim A`, `dB = dim B`.
pub fn tensor(a: &CMatrix, b: &CMatrix) -> Result<BipartiteOperator> {
    if !a.is_square() || !b.is_square() {
        return Err(Error::DimensionMismatch("tensor operands must be square".into()));
    }
    BipartiteOperator::new(a.rows(), b.rows(), a.kron(b))
}

/// Vector in `C^d`.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector(Vec<C64>);

impl StateVector {
    pub fn new(entries: Vec<C64>) -> Self {
        Self(entries)
    }

    pub fn from_real(entries: &[f64]) -> Self {
        Self(entries.iter().map(|&x| C64::new(x, 0.0)).collect())
    }

    /// Computational basis vector `|k⟩` in `C^d`.
    pub fn basis(d: usize, k: usize) -> Self {
        let mut v = alloc::vec![C64::new(0.0, 0.0); d];
        v[k] = C64::new(1.0, 0.0);
        Self(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[C64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<C64> {
        self.0
    }

    pub fn norm(&self) -> f64 {
        libm::sqrt(self.0.iter().map(|z| z.norm_sqr()).sum())
    }

    pub fn is_normalized(&self, tol: f64) -> bool {
        (self.norm() - 1.0).abs() <= tol
    }

    pub fn normalized(&self) -> Result<Self> {
        let n = self.norm();
        if n == 0.0 || !n.is_finite() {
            return Err(Error::ZeroVector);
        }
        Ok(Self(self.0.iter().map(|z| z / n).collect()))
    }

    /// `⟨self|other⟩`
    pub fn inner(&self, other: &Self) -> C64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a.conj() * b).sum()
    }

    pub fn conj(&self) -> Self {
        Self(self.0.iter().map(|z| z.conj()).collect())
    }

    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.0 {
            for b in &other.0 {
                out.push(a * b);
            }
        }
        Self(out)
    }

    pub fn apply(&self, m: &CMatrix) -> Self {
        Self(m.mul_vec(&self.0))
    }

    /// `|v⟩⟨v|`
    pub fn projector(&self) -> CMatrix {
        CMatrix::outer(&self.0, &self.0)
    }

    pub fn scale(&self, s: C64) -> Self {
        Self(self.0.iter().map(|z| z * s).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl core::ops::Index<usize> for StateVector {
    type Output = C64;
    fn index(&self, i: usize) -> &C64 {
        &self.0[i]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplex::weyl;

    fn ket(d: usize, k: usize) -> StateVector {
        StateVector::basis(d, k)
    }

    /// Flip operator `Σ |k⟩⟨ℓ| ⊗ |ℓ⟩⟨k|`.
    fn flip(d: usize) -> BipartiteOperator {
        let m = CMatrix::from_fn(d * d, d * d, |r, c| {
            let (i, j, k, l) = (r / d, r % d, c / d, c % d);
            if i == l && j == k {
                C64::new(1.0, 0.0)
            } else {
                C64::new(0.0, 0.0)
            }
        });
        BipartiteOperator::square(d, m).unwrap()
    }

    #[test]
    fn identity_tensor_identity() {
        let t = tensor(&CMatrix::identity(3), &CMatrix::identity(3)).unwrap();
        assert_eq!(t.matrix(), &CMatrix::identity(9));
        assert_eq!(t.dims(), (3, 3));
    }

    #[test]
    fn tensor_of_rank_one_projectors() {
        let p = ket(3, 0).projector();
        let t = tensor(&p, &p).unwrap();
        for r in 0..9 {
            for c in 0..9 {
                let expect = if r == 0 && c == 0 { 1.0 } else { 0.0 };
                assert_eq!(t.get(r, c), C64::new(expect, 0.0));
            }
        }
    }

    #[test]
    fn identity_tensor_weyl_is_block_diagonal() {
        let w = weyl(3, 0, 1).matrix;
        let t = tensor(&CMatrix::identity(3), &w).unwrap();
        for r in 0..9 {
            for c in 0..9 {
                let expect = if r / 3 == c / 3 {
                    w[(r % 3, c % 3)]
                } else {
                    C64::new(0.0, 0.0)
                };
                assert_eq!(t.get(r, c), expect);
            }
        }
    }

    #[test]
    fn flip_partial_transpose_is_scaled_max_entangled_projector() {
        let d = 3;
        let pt = flip(d).partial_transpose(Subsystem::B);
        let omega = StateVector::new(
            (0..d * d)
                .map(|i| {
                    if i / d == i % d {
                        C64::new(1.0, 0.0)
                    } else {
                        C64::new(0.0, 0.0)
                    }
                })
                .collect(),
        );
        let three_p_plus = omega.projector();
        assert!(pt.matrix().max_abs_diff(&three_p_plus) < 1e-15);
    }

    #[test]
    fn partial_transpose_over_a_and_b_are_related_by_full_transpose() {
        let x = BipartiteOperator::new(
            2,
            3,
            CMatrix::from_fn(6, 6, |i, j| C64::new((i * 7 + j) as f64, (i as f64) - (j as f64))),
        )
        .unwrap();
        let pa = x.partial_transpose(Subsystem::A);
        let pb = x.partial_transpose(Subsystem::B);
        assert!(pa.matrix().max_abs_diff(&pb.matrix().transpose()) < 1e-15);
    }

    #[test]
    fn new_rejects_mismatched_dims() {
        assert!(BipartiteOperator::new(2, 3, CMatrix::identity(5)).is_err());
    }

    #[test]
    fn new_rejects_nan() {
        let mut m = CMatrix::identity(4);
        m[(1, 2)] = C64::new(f64::NAN, 0.0);
        assert_eq!(BipartiteOperator::new(2, 2, m), Err(Error::NonFinite));
    }
}
