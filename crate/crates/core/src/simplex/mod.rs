//! Weyl operators, generalized Bell states and the magic simplex.
//!
//! `W_{kℓ} = Σ_j ω^{jk} |j⟩⟨j+ℓ|` and `|Ω_{kℓ}⟩ = (𝟙 ⊗ W_{kℓ})|Ω₀₀⟩` with
//! `|Ω₀₀⟩ = Σ_j |jj⟩/√d`. An operator is Bell diagonal when `X = Σ x_{kℓ} P_{kℓ}`.

mod lines;
mod slice;

use alloc::vec::Vec;

use num_complex::Complex64 as C64;

pub use lines::{kernel_membership, line_state, phase_space_lines, KernelFit, PhaseSpaceLine};
pub use slice::{
    classify_point, scan_slice, slice_state, state_bounding_box, GridSpec, SliceContext, SliceGrid, SlicePoint,
};

use crate::error::{Error, Result};
use crate::linops::{BipartiteOperator, CMatrix, StateVector};
use crate::mub::root_of_unity;

#[derive(Clone, Debug, PartialEq)]
pub struct WeylOp {
    pub d: usize,
    pub k: usize,
    pub l: usize,
    pub matrix: CMatrix,
}

/// `W_{kℓ}`; indices are reduced mod `d`.
pub fn weyl(d: usize, k: usize, l: usize) -> WeylOp {
    assert!(d >= 2, "Weyl operators need d >= 2");
    let (k, l) = (k % d, l % d);
    let mut m = CMatrix::zeros(d, d);
    for j in 0..d {
        m[(j, (j + l) % d)] = root_of_unity(d, (j * k) as i64);
    }
    WeylOp { d, k, l, matrix: m }
}

/// `|Ω_{kℓ}⟩`
pub fn bell_state(d: usize, k: usize, l: usize) -> StateVector {
    let w = weyl(d, k, l).matrix;
    let s = 1.0 / libm::sqrt(d as f64);
    // (𝟙 ⊗ W)|jj⟩ = |j⟩ ⊗ W|j⟩ and W|j⟩ = ω^{(j-ℓ)k}|j-ℓ⟩
    let mut v = alloc::vec![C64::new(0.0, 0.0); d * d];
    for j in 0..d {
        for i in 0..d {
            v[j * d + i] += w[(i, j)] * s;
        }
    }
    StateVector::new(v)
}

/// `P_{kℓ} = |Ω_{kℓ}⟩⟨Ω_{kℓ}|`
pub fn bell_projector(d: usize, k: usize, l: usize) -> BipartiteOperator {
    BipartiteOperator::square(d, bell_state(d, k, l).projector()).expect("d²×d² projector")
}

/// Real coefficients `x_{kℓ}` over the Bell projectors, row-major in `(k, ℓ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BellCoefficients {
    d: usize,
    coeffs: Vec<f64>,
}

impl BellCoefficients {
    pub fn new(d: usize, coeffs: Vec<f64>) -> Result<Self> {
        if d < 2 || coeffs.len() != d * d {
            return Err(Error::DimensionMismatch(alloc::format!(
                "{} Bell coefficients for d = {d}",
                coeffs.len()
            )));
        }
        if coeffs.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { d, coeffs })
    }

    /// Integer table times a common factor, e.g. `(1/13)·[[1, 1, …], …]`.
    pub fn from_scaled_ints(d: usize, scale: f64, rows: &[i32]) -> Result<Self> {
        Self::new(d, rows.iter().map(|&x| x as f64 * scale).collect())
    }

    pub fn uniform(d: usize) -> Self {
        Self {
            d,
            coeffs: alloc::vec![1.0 / (d * d) as f64; d * d],
        }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn get(&self, k: usize, l: usize) -> f64 {
        self.coeffs[k * self.d + l]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn row(&self, k: usize) -> &[f64] {
        &self.coeffs[k * self.d..(k + 1) * self.d]
    }

    pub fn sum(&self) -> f64 {
        self.coeffs.iter().sum()
    }

    pub fn max(&self) -> f64 {
        self.coeffs.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    /// Non-negative and summing to one, within `tol`.
    pub fn is_state(&self, tol: f64) -> bool {
        self.coeffs.iter().all(|&c| c >= -tol) && (self.sum() - 1.0).abs() <= tol
    }

    pub fn dot(&self, other: &Self) -> f64 {
        self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a * b).sum()
    }

    pub fn scale(&self, s: f64) -> Self {
        Self {
            d: self.d,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }
}

pub fn bell_encode(bc: &BellCoefficients) -> BipartiteOperator {
    let d = bc.d;
    let mut m = CMatrix::zeros(d * d, d * d);
    for k in 0..d {
        for l in 0..d {
            let x = bc.get(k, l);
            if x == 0.0 {
                continue;
            }
            let v = bell_state(d, k, l);
            let v = v.as_slice();
            for r in 0..d * d {
                if v[r].norm_sqr() == 0.0 {
                    continue;
                }
                for c in 0..d * d {
                    m[(r, c)] += v[r] * v[c].conj() * x;
                }
            }
        }
    }
    BipartiteOperator::square(d, m).expect("Bell-diagonal operator")
}

/// Result of projecting an operator onto the Bell-diagonal subspace.
#[derive(Clone, Debug)]
pub struct BellDecode {
    pub coeffs: BellCoefficients,
    /// `‖X − Σ x_{kℓ} P_{kℓ}‖_max`
    pub residual: f64,
}

impl BellDecode {
    pub fn is_bell_diagonal(&self, tol: f64) -> bool {
        self.residual <= tol
    }
}

/// `x_{kℓ} = tr(X P_{kℓ})` plus the residual of the Bell-diagonal reconstruction.
pub fn bell_decode(x: &BipartiteOperator) -> Result<BellDecode> {
    let (da, db) = x.dims();
    if da != db {
        return Err(Error::DimensionMismatch("Bell decoding needs dA = dB".into()));
    }
    let d = da;
    let mut coeffs = Vec::with_capacity(d * d);
    for k in 0..d {
        for l in 0..d {
            let v = bell_state(d, k, l);
            coeffs.push(x.matrix().sandwich(v.as_slice(), v.as_slice()).re);
        }
    }
    let coeffs = BellCoefficients::new(d, coeffs)?;
    let residual = x.max_abs_diff(&bell_encode(&coeffs));
    Ok(BellDecode { coeffs, residual })
}

/// Every Bell coefficient at most `1/d` (within `1e-12`).
pub fn in_enclosure(bc: &BellCoefficients) -> Result<bool> {
    if !bc.is_state(1e-12) {
        return Err(Error::NotAState(
            "Bell coefficients must be non-negative and sum to 1".into(),
        ));
    }
    Ok(bc.max() <= 1.0 / bc.d as f64 + 1e-12)
}
