//! Expansion `W = Σ t_ij G_i ⊗ G_j` over generalized Gell-Mann matrices.

use alloc::vec::Vec;

use crate::error::Result;
use crate::linops::{BipartiteOperator, CMatrix};
use crate::C64;

/// `𝟙`, then the symmetric/antisymmetric pair for each `j < k`, then the `d−1` diagonal ones.
/// Non-identity elements satisfy `tr(G_i G_j) = 2δ_ij`.
pub fn gell_mann(d: usize) -> Vec<CMatrix> {
    let mut out = alloc::vec![CMatrix::identity(d)];
    for j in 0..d {
        for k in j + 1..d {
            let mut s = CMatrix::zeros(d, d);
            s[(j, k)] = C64::new(1.0, 0.0);
            s[(k, j)] = C64::new(1.0, 0.0);
            let mut a = CMatrix::zeros(d, d);
            a[(j, k)] = C64::new(0.0, -1.0);
            a[(k, j)] = C64::new(0.0, 1.0);
            out.push(s);
            out.push(a);
        }
    }
    for l in 1..d {
        let f = libm::sqrt(2.0 / (l * (l + 1)) as f64);
        let mut g = CMatrix::zeros(d, d);
        for m in 0..l {
            g[(m, m)] = C64::new(f, 0.0);
        }
        g[(l, l)] = C64::new(-(l as f64) * f, 0.0);
        out.push(g);
    }
    out
}

#[derive(Clone, Debug)]
pub struct LocalDecomposition {
    pub d_a: usize,
    pub d_b: usize,
    /// `t_ij`, row-major over (A index, B index)
    pub coeffs: Vec<f64>,
    /// Largest imaginary part discarded from the trace formula.
    pub max_imag: f64,
}

impl LocalDecomposition {
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.coeffs[i * self.d_b * self.d_b + j]
    }

    pub fn reconstruct(&self) -> BipartiteOperator {
        let ga = gell_mann(self.d_a);
        let gb = gell_mann(self.d_b);
        let n = self.d_a * self.d_b;
        let mut m = CMatrix::zeros(n, n);
        for (i, a) in ga.iter().enumerate() {
            for (j, b) in gb.iter().enumerate() {
                let t = self.get(i, j);
                if t != 0.0 {
                    m = &m + &a.kron(b).scale(t);
                }
            }
        }
        BipartiteOperator::new(self.d_a, self.d_b, m).expect("matching size")
    }

    /// Indices with `|t_ij| > tol`.
    pub fn support(&self, tol: f64) -> Vec<(usize, usize)> {
        let nb = self.d_b * self.d_b;
        (0..self.coeffs.len())
            .filter(|&x| self.coeffs[x].abs() > tol)
            .map(|x| (x / nb, x % nb))
            .collect()
    }
}

pub fn local_decomposition(w: &BipartiteOperator) -> Result<LocalDecomposition> {
    let (da, db) = w.dims();
    let ga = gell_mann(da);
    let gb = gell_mann(db);
    let norm = |i: usize, d: usize| if i == 0 { d as f64 } else { 2.0 };
    let mut coeffs = Vec::with_capacity(ga.len() * gb.len());
    let mut max_imag = 0.0f64;
    for (i, a) in ga.iter().enumerate() {
        for (j, b) in gb.iter().enumerate() {
            let t = w.matrix().trace_product(&a.kron(b)) / (norm(i, da) * norm(j, db));
            max_imag = max_imag.max(t.im.abs());
            coeffs.push(t.re);
        }
    }
    Ok(LocalDecomposition {
        d_a: da,
        d_b: db,
        coeffs,
        max_imag,
    })
}
