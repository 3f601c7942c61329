//! PPT tests, detection values, product numerical range and the certificates built on it.
//!
//! Everything coming out of the see-saw is evidence, not proof: a search over product
//! vectors can refute block positivity but never establish it.

mod ces;
mod local;
mod seesaw;
mod span;

use alloc::string::String;
use alloc::vec::Vec;

pub use ces::{ces_evidence, ces_evidence_with, negative_eigenspace, subspace_projector, CesEvidence, CesVerdict};
pub use local::{gell_mann, local_decomposition, LocalDecomposition};
pub use seesaw::{
    aggregate, contract_a, contract_b, max_product_expectation, min_product_expectation, restart_seed, seesaw,
    seesaw_restart, Extremum, SeesawConfig, SeesawResult, SeesawRun,
};
pub use span::{
    mu_family, raw_product_expectation, rotated_zero_family_d3, span_report, xi_family, zero_family_d3, SpanReport,
    ZeroPair, ZERO_FAMILY_ORDER,
};

use crate::error::{Error, Result};
use crate::linops::{eigvals_hermitian, BipartiteOperator, StateVector, Subsystem};
use crate::tol;

/// Normalized pair `|a⟩ ⊗ |b⟩`.
#[derive(Clone, Debug, PartialEq)]
pub struct ProductVector {
    pub a: StateVector,
    pub b: StateVector,
}

impl ProductVector {
    /// Normalizes both factors.
    pub fn new(a: StateVector, b: StateVector) -> Result<Self> {
        Ok(Self {
            a: a.normalized()?,
            b: b.normalized()?,
        })
    }

    pub fn joint(&self) -> StateVector {
        self.a.kron(&self.b)
    }
}

fn require_hermitian(x: &BipartiteOperator) -> Result<()> {
    let defect = x.matrix().hermiticity_defect();
    let scale = x.matrix().max_abs().max(1.0);
    if defect > tol::HERMITIAN_INPUT * scale {
        return Err(Error::NotHermitian {
            deviation: defect,
            tolerance: tol::HERMITIAN_INPUT,
        });
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PptResult {
    pub ppt: bool,
    pub min_pt_eigenvalue: f64,
}

/// `ρ^Γ ≥ −tol`, transposing the second factor.
pub fn is_ppt(rho: &BipartiteOperator, tol: f64) -> Result<PptResult> {
    require_hermitian(rho)?;
    let pt = rho.partial_transpose(Subsystem::B);
    let min = *eigvals_hermitian(pt.matrix())?.last().unwrap_or(&0.0);
    Ok(PptResult {
        ppt: min >= -tol,
        min_pt_eigenvalue: min,
    })
}

/// `Re tr(W ρ)`
pub fn detect(w: &BipartiteOperator, rho: &BipartiteOperator) -> Result<f64> {
    require_hermitian(w)?;
    require_hermitian(rho)?;
    let t = w.trace_product(rho)?;
    debug_assert!(t.im.abs() <= 1e-9 * (1.0 + t.re.abs()));
    Ok(t.re)
}

/// `⟨a⊗b|W|a⊗b⟩`
pub fn product_expectation(w: &BipartiteOperator, pv: &ProductVector) -> Result<f64> {
    if pv.a.dim() != w.d_a() || pv.b.dim() != w.d_b() {
        return Err(Error::DimensionMismatch(
            "product vector does not fit the operator".into(),
        ));
    }
    Ok(w.expectation(pv.joint().as_slice()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockPositivity {
    /// No product vector with expectation below the refutation threshold was found.
    EvidencePositive,
    Refuted,
}

#[derive(Clone, Debug)]
pub struct BlockPositivityEvidence {
    pub min_value: f64,
    pub attaining: ProductVector,
    pub verdict: BlockPositivity,
    pub converged: bool,
}

pub fn block_positivity_evidence(w: &BipartiteOperator, cfg: &SeesawConfig) -> Result<BlockPositivityEvidence> {
    let r = min_product_expectation(w, cfg)?;
    let verdict = if r.value < -tol::BLOCK_POSITIVITY {
        BlockPositivity::Refuted
    } else {
        BlockPositivity::EvidencePositive
    };
    Ok(BlockPositivityEvidence {
        min_value: r.value,
        attaining: r.vector,
        verdict,
        converged: r.all_converged,
    })
}

#[derive(Clone, Debug)]
pub struct WitnessReport {
    pub spectrum: Vec<f64>,
    pub n_negative: usize,
    pub min_product_value: f64,
    pub max_product_value: f64,
    pub mu_bracket: (f64, f64),
    pub detected_states: Vec<(String, f64)>,
    /// `n_negative ≤ (dA−1)(dB−1)`
    pub negative_count_admissible: bool,
    pub block_positivity: BlockPositivity,
}

pub fn witness_report(
    w: &BipartiteOperator,
    states: &[(String, BipartiteOperator)],
    cfg: &SeesawConfig,
) -> Result<WitnessReport> {
    witness_report_with(w, states, |x, ext| seesaw(x, ext, cfg))
}

pub fn witness_report_with<F>(
    w: &BipartiteOperator,
    states: &[(String, BipartiteOperator)],
    search: F,
) -> Result<WitnessReport>
where
    F: Fn(&BipartiteOperator, Extremum) -> Result<SeesawResult>,
{
    require_hermitian(w)?;
    let spectrum = eigvals_hermitian(w.matrix())?;
    let n_negative = spectrum.iter().filter(|&&l| l < -tol::PSD).count();
    let lo = search(w, Extremum::Min)?;
    let hi = search(w, Extremum::Max)?;
    let detected_states = states
        .iter()
        .map(|(n, rho)| detect(w, rho).map(|v| (n.clone(), v)))
        .collect::<Result<Vec<_>>>()?;
    let (da, db) = w.dims();
    Ok(WitnessReport {
        mu_bracket: (hi.value, spectrum[0]),
        negative_count_admissible: n_negative <= (da - 1) * (db - 1),
        block_positivity: if lo.value < -tol::BLOCK_POSITIVITY {
            BlockPositivity::Refuted
        } else {
            BlockPositivity::EvidencePositive
        },
        spectrum,
        n_negative,
        min_product_value: lo.value,
        max_product_value: hi.value,
        detected_states,
    })
}
