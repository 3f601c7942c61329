use alloc::vec::Vec;

use super::{seesaw, Extremum, ProductVector, SeesawConfig, SeesawResult};
use crate::error::{Error, Result};
use crate::linops::{eig_hermitian, BipartiteOperator, CMatrix, StateVector};
use crate::tol;

/// Orthonormal eigenvectors with eigenvalue below `−1e−10`.
pub fn negative_eigenspace(w: &BipartiteOperator) -> Result<Vec<StateVector>> {
    let e = eig_hermitian(w.matrix())?;
    Ok((0..e.values.len())
        .filter(|&i| e.values[i] < -tol::PSD)
        .map(|i| StateVector::new(e.vector(i)))
        .collect())
}

/// `Σ |v⟩⟨v|` over an orthonormal set.
pub fn subspace_projector(basis: &[StateVector]) -> Result<CMatrix> {
    let first = basis
        .first()
        .ok_or_else(|| Error::Empty("subspace basis is empty".into()))?;
    let n = first.dim();
    let mut p = CMatrix::zeros(n, n);
    for v in basis {
        if v.dim() != n {
            return Err(Error::DimensionMismatch("basis vectors differ in length".into()));
        }
        p = &p + &v.projector();
    }
    Ok(p)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CesVerdict {
    /// Best product overlap stays below `1 − 1e−6`.
    CesEvidence,
    /// A product vector with overlap at least `1 − 1e−10` lies in the subspace.
    ContainsProductVector,
    Inconclusive,
}

#[derive(Clone, Debug)]
pub struct CesEvidence {
    pub max_product_overlap: f64,
    pub vector: ProductVector,
    pub verdict: CesVerdict,
}

/// Maximum of `⟨a⊗b|P_S|a⊗b⟩` over product vectors.
pub fn ces_evidence(basis: &[StateVector], d_a: usize, d_b: usize, cfg: &SeesawConfig) -> Result<CesEvidence> {
    ces_evidence_with(basis, d_a, d_b, |x, ext| seesaw(x, ext, cfg))
}

pub fn ces_evidence_with<F>(basis: &[StateVector], d_a: usize, d_b: usize, search: F) -> Result<CesEvidence>
where
    F: Fn(&BipartiteOperator, Extremum) -> Result<SeesawResult>,
{
    let p = BipartiteOperator::new(d_a, d_b, subspace_projector(basis)?)?;
    let r = search(&p, Extremum::Max)?;
    let verdict = if r.value >= 1.0 - 1e-10 {
        CesVerdict::ContainsProductVector
    } else if r.value <= 1.0 - 1e-6 {
        CesVerdict::CesEvidence
    } else {
        CesVerdict::Inconclusive
    };
    Ok(CesEvidence {
        max_product_overlap: r.value,
        vector: r.vector,
        verdict,
    })
}
