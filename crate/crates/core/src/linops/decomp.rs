//! Determinants, singular values and small real solves.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64 as C64;

use super::{eigen, CMatrix};
use crate::error::{Error, Result};

/// Determinant by LU with partial pivoting.
pub fn determinant(m: &CMatrix) -> Result<C64> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch(alloc::format!(
            "determinant of a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    let mut a = m.clone();
    let mut det = C64::new(1.0, 0.0);
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[(i, col)].norm().total_cmp(&a[(j, col)].norm()))
            .expect("non-empty range");
        if a[(pivot, col)].norm() == 0.0 {
            return Ok(C64::new(0.0, 0.0));
        }
        if pivot != col {
            for k in 0..n {
                let tmp = a[(col, k)];
                a[(col, k)] = a[(pivot, k)];
                a[(pivot, k)] = tmp;
            }
            det = -det;
        }
        let p = a[(col, col)];
        det *= p;
        for i in col + 1..n {
            let f = a[(i, col)] / p;
            if f.norm() == 0.0 {
                continue;
            }
            for k in col..n {
                let v = a[(col, k)];
                a[(i, k)] -= f * v;
            }
        }
    }
    Ok(det)
}

/// Singular values, descending.
///
/// Computed as the non-negative half of the spectrum of `[[0, M], [M†, 0]]`, which
/// keeps small singular values accurate to `ε·‖M‖` (forming `M†M` would square the error).
pub fn singular_values(m: &CMatrix) -> Vec<f64> {
    let (r, c) = (m.rows(), m.cols());
    let n = r + c;
    let aug = CMatrix::from_fn(n, n, |i, j| {
        if i < r && j >= r {
            m[(i, j - r)]
        } else if i >= r && j < r {
            m[(j, i - r)].conj()
        } else {
            C64::new(0.0, 0.0)
        }
    });
    let vals = eigen::eigvals_hermitian(&aug).expect("augmented matrix is Hermitian");
    vals.into_iter().take(r.min(c)).map(|x| x.max(0.0)).collect()
}

/// Numerical rank: singular values above `rel_tol · σ_max`.
pub fn rank(m: &CMatrix, rel_tol: f64) -> usize {
    let sv = singular_values(m);
    let Some(&top) = sv.first() else { return 0 };
    if top == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > rel_tol * top).count()
}

/// Solves the dense real system `A x = b` (row-major `A`, n×n); `None` if singular.
pub fn solve_real(a: &[f64], b: &[f64], n: usize) -> Option<Vec<f64>> {
    let mut m = a.to_vec();
    let mut x = b.to_vec();
    for col in 0..n {
        let pivot = (col..n).max_by(|&i, &j| m[i * n + col].abs().total_cmp(&m[j * n + col].abs()))?;
        if m[pivot * n + col].abs() < 1e-14 {
            return None;
        }
        if pivot != col {
            for k in 0..n {
                m.swap(col * n + k, pivot * n + k);
            }
            x.swap(col, pivot);
        }
        let p = m[col * n + col];
        for i in col + 1..n {
            let f = m[i * n + col] / p;
            if f == 0.0 {
                continue;
            }
            for k in col..n {
                m[i * n + k] -= f * m[col * n + k];
            }
            x[i] -= f * x[col];
        }
    }
    let mut out = vec![0.0; n];
    for i in (0..n).rev() {
        let s: f64 = (i + 1..n).map(|k| m[i * n + k] * out[k]).sum();
        out[i] = (x[i] - s) / m[i * n + i];
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_of_permutation_and_scale() {
        // swap of two rows times diag(2, 3)
        let m = CMatrix::from_real(2, 2, &[0.0, 3.0, 2.0, 0.0]).unwrap();
        assert!((determinant(&m).unwrap() - C64::new(-6.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn determinant_complex_triangular() {
        let m = CMatrix::from_fn(3, 3, |i, j| {
            if j < i {
                C64::new(0.0, 0.0)
            } else {
                C64::new(1.0 + i as f64, j as f64)
            }
        });
        // product of diagonal: (1)(2+i)(3+2i)
        let expect = C64::new(1.0, 0.0) * C64::new(2.0, 1.0) * C64::new(3.0, 2.0);
        assert!((determinant(&m).unwrap() - expect).norm() < 1e-13);
    }

    #[test]
    fn rank_of_rank_one_outer() {
        let u = [C64::new(1.0, 0.0), C64::new(0.0, 2.0), C64::new(-1.0, 1.0)];
        let m = CMatrix::outer(&u, &u);
        assert_eq!(rank(&m, 1e-10), 1);
        let sv = singular_values(&m);
        assert!((sv[0] - 7.0).abs() < 1e-13); // ‖u‖² = 1 + 4 + 2
    }

    #[test]
    fn rectangular_singular_values() {
        let m = CMatrix::from_real(2, 3, &[3.0, 0.0, 0.0, 0.0, 4.0, 0.0]).unwrap();
        let sv = singular_values(&m);
        assert_eq!(sv.len(), 2);
        assert!((sv[0] - 4.0).abs() < 1e-14 && (sv[1] - 3.0).abs() < 1e-14);
    }

    #[test]
    fn real_solve() {
        let a = [2.0, 1.0, 1.0, 3.0];
        let x = solve_real(&a, &[3.0, 5.0], 2).unwrap();
        assert!((x[0] - 0.8).abs() < 1e-14 && (x[1] - 1.4).abs() < 1e-14);
        assert!(solve_real(&[1.0, 2.0, 2.0, 4.0], &[1.0, 1.0], 2).is_none());
    }
}
