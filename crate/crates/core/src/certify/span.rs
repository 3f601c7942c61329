//! Zero sets of `W_Γ` and the spanning / bi-spanning rank certificates.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linops::{determinant, rank, singular_values, BipartiteOperator, CMatrix, StateVector};
use crate::mub::root_of_unity;
use crate::tol;
use crate::witnesses::local_unitary_u;
use crate::C64;

/// Unnormalized product pair `|α⟩ ⊗ |β⟩` with its 1-based label.
#[derive(Clone, Debug, PartialEq)]
pub struct ZeroPair {
    pub k: usize,
    pub alpha: StateVector,
    pub beta: StateVector,
}

impl ZeroPair {
    pub fn joint(&self) -> StateVector {
        self.alpha.kron(&self.beta)
    }

    pub fn joint_conjugate(&self) -> StateVector {
        self.alpha.kron(&self.beta.conj())
    }
}

fn xi() -> C64 {
    C64::from_polar(1.0 / libm::sqrt(2.0), core::f64::consts::FRAC_PI_4)
}

fn combo(lead: usize, others: (usize, usize), coeffs: (C64, C64)) -> StateVector {
    let mut v = alloc::vec![C64::new(0.0, 0.0); 3];
    v[lead] = C64::new(1.0, 0.0);
    v[others.0] = coeffs.0;
    v[others.1] = coeffs.1;
    StateVector::new(v)
}

/// Rows of the determinant matrices list the pairs in this label order.
pub const ZERO_FAMILY_ORDER: [usize; 9] = [1, 4, 7, 2, 3, 5, 6, 9, 8];

/// The nine unnormalized zero-set pairs of `W_{Γ={1,2}}`, in [`ZERO_FAMILY_ORDER`].
pub fn zero_family_d3() -> Vec<ZeroPair> {
    let xi = xi();
    let w = root_of_unity(3, 1);
    let wc = w.conj();
    let pair = |k: usize| {
        let lead = (k - 1) / 3;
        let others = match lead {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        let (alpha, beta) = match (k - 1) % 3 {
            0 => (StateVector::basis(3, lead), StateVector::basis(3, lead)),
            1 => {
                let v = combo(lead, others, (xi, xi));
                (v.clone(), v)
            }
            _ => (
                combo(lead, others, (xi * w, xi * wc)),
                combo(lead, others, (xi * wc, xi * w)),
            ),
        };
        ZeroPair { k, alpha, beta }
    };
    ZERO_FAMILY_ORDER.iter().map(|&k| pair(k)).collect()
}

/// `|Uα_k ⊗ U*β_k⟩`, a zero set of the mirrored witness.
pub fn rotated_zero_family_d3() -> Vec<ZeroPair> {
    let u = local_unitary_u();
    let uc = u.conj();
    zero_family_d3()
        .into_iter()
        .map(|p| ZeroPair {
            k: p.k,
            alpha: p.alpha.apply(&u),
            beta: p.beta.apply(&uc),
        })
        .collect()
}

/// `α = β = |1⟩ + ξ(|2⟩ + |3⟩)` with `ξ = r·e^{iφ}`, unnormalized.
pub fn xi_family(r: f64, phi: f64) -> (StateVector, StateVector) {
    let xi = C64::from_polar(r, phi);
    let v = combo(0, (1, 2), (xi, xi));
    (v.clone(), v)
}

/// `α = |1⟩ + ξ(e^{iμ}|2⟩ + e^{−iμ}|3⟩)`, `β = |1⟩ + ξ(e^{−iμ}|2⟩ + e^{iμ}|3⟩)`,
/// `ξ = e^{iπ/4}/√2`, unnormalized.
pub fn mu_family(mu: f64) -> (StateVector, StateVector) {
    let xi = xi();
    let p = C64::from_polar(1.0, mu);
    let m = p.conj();
    (combo(0, (1, 2), (xi * p, xi * m)), combo(0, (1, 2), (xi * m, xi * p)))
}

/// `⟨α⊗β|W|α⊗β⟩` without normalizing the factors.
pub fn raw_product_expectation(w: &BipartiteOperator, alpha: &StateVector, beta: &StateVector) -> f64 {
    w.expectation(alpha.kron(beta).as_slice())
}

#[derive(Clone, Debug)]
pub struct SpanReport {
    /// `|⟨α⊗β|W|α⊗β⟩|` on normalized pairs.
    pub zero_values: Vec<f64>,
    pub rank_direct: usize,
    pub rank_conjugate: usize,
    /// Present when the number of pairs equals `dA·dB`; rows as given, unnormalized.
    pub det_direct: Option<C64>,
    pub det_conjugate: Option<C64>,
    pub singular_values_direct: Vec<f64>,
    pub singular_values_conjugate: Vec<f64>,
}

impl SpanReport {
    pub fn full_dim(&self) -> usize {
        self.singular_values_direct
            .len()
            .max(self.singular_values_conjugate.len())
    }

    pub fn spanning(&self, dim: usize) -> bool {
        self.zero_values.iter().all(|&z| z <= tol::PSD) && self.rank_direct == dim
    }

    pub fn bi_spanning(&self, dim: usize) -> bool {
        self.spanning(dim) && self.rank_conjugate == dim
    }
}

fn coordinate_matrix(rows: &[StateVector]) -> CMatrix {
    let n = rows[0].dim();
    CMatrix::from_fn(rows.len(), n, |i, j| rows[i][j])
}

const RANK_TOL: f64 = 1e-10;

pub fn span_report(w: &BipartiteOperator, pairs: &[ZeroPair]) -> Result<SpanReport> {
    if pairs.is_empty() {
        return Err(Error::Empty("span report needs at least one pair".into()));
    }
    let dim = w.dim();
    if pairs
        .iter()
        .any(|p| p.alpha.dim() != w.d_a() || p.beta.dim() != w.d_b())
    {
        return Err(Error::DimensionMismatch("pair does not fit the operator".into()));
    }
    let mut zero_values = Vec::with_capacity(pairs.len());
    for p in pairs {
        let v = p.alpha.normalized()?.kron(&p.beta.normalized()?);
        zero_values.push(w.expectation(v.as_slice()).abs());
    }
    let direct = coordinate_matrix(&pairs.iter().map(ZeroPair::joint).collect::<Vec<_>>());
    let conjugate = coordinate_matrix(&pairs.iter().map(ZeroPair::joint_conjugate).collect::<Vec<_>>());
    let square = pairs.len() == dim;
    Ok(SpanReport {
        zero_values,
        rank_direct: rank(&direct, RANK_TOL),
        rank_conjugate: rank(&conjugate, RANK_TOL),
        det_direct: if square { Some(determinant(&direct)?) } else { None },
        det_conjugate: if square { Some(determinant(&conjugate)?) } else { None },
        singular_values_direct: singular_values(&direct),
        singular_values_conjugate: singular_values(&conjugate),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witnesses::catalog;

    #[test]
    fn first_pair_is_basis() {
        let f = zero_family_d3();
        assert_eq!(f[0].k, 1);
        assert_eq!(f[0].alpha, StateVector::basis(3, 0));
        assert_eq!(f[0].beta, StateVector::basis(3, 0));
        let mut labels: Vec<usize> = f.iter().map(|p| p.k).collect();
        labels.sort_unstable();
        assert_eq!(labels, (1..=9).collect::<Vec<_>>());
    }

    #[test]
    fn second_row_of_r1() {
        // label 2 in the fourth row: first entries 1, ξ, ξ, ξ, ξ² …
        let f = zero_family_d3();
        let row = f[3].joint();
        let xi = xi();
        assert!((row[0] - C64::new(1.0, 0.0)).norm() < 1e-15);
        assert!((row[1] - xi).norm() < 1e-15);
        assert!((row[4] - C64::new(0.0, 0.5)).norm() < 1e-15);
    }

    #[test]
    fn few_pairs_do_not_span() {
        let w = catalog("W_gamma_12").unwrap().operator;
        let r = span_report(&w, &zero_family_d3()[..3]).unwrap();
        assert!(r.rank_direct <= 3);
        assert!(!r.bi_spanning(9));
        assert!(r.det_direct.is_none());
        assert!(span_report(&w, &[]).is_err());
    }
}
