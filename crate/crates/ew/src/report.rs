//! JSON views of the certification outputs and operand lookup.

use std::path::Path;

use ew_core::certify::{BlockPositivity, ProductVector, SpanReport, WitnessReport};
use ew_core::witnesses::{catalog, MirrorResult};
use ew_core::{BipartiteOperator, StateVector, C64};
use serde_json::{json, Value};

use crate::io::{read_operator, FormatError};

pub const EVIDENCE_CAVEAT: &str =
    "block positivity and CES verdicts are numerical evidence from a product-state search, not proofs";

/// A catalog name, or a path to an operator JSON file.
pub fn resolve_operator(spec: &str) -> Result<(String, BipartiteOperator), FormatError> {
    let p = Path::new(spec);
    if p.extension().is_some_and(|e| e == "json") || p.is_file() {
        let name = p
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| spec.to_string());
        return Ok((name, read_operator(p)?));
    }
    Ok((spec.to_string(), catalog(spec)?.operator))
}

pub fn complex(z: C64) -> Value {
    json!([z.re, z.im])
}

pub fn vector(v: &StateVector) -> Value {
    Value::Array(v.as_slice().iter().map(|&z| complex(z)).collect())
}

pub fn product_vector(pv: &ProductVector) -> Value {
    json!({ "a": vector(&pv.a), "b": vector(&pv.b) })
}

fn verdict(b: BlockPositivity) -> &'static str {
    match b {
        BlockPositivity::EvidencePositive => "evidence_block_positive",
        BlockPositivity::Refuted => "refuted",
    }
}

pub fn witness_report_json(name: &str, r: &WitnessReport) -> Value {
    json!({
        "witness": name,
        "spectrum": r.spectrum,
        "n_negative": r.n_negative,
        "negative_count_admissible": r.negative_count_admissible,
        "min_product_value": r.min_product_value,
        "max_product_value": r.max_product_value,
        "mu_bracket": [r.mu_bracket.0, r.mu_bracket.1],
        "block_positivity": verdict(r.block_positivity),
        "detected_states": r.detected_states.iter().map(|(n, v)| json!({"state": n, "tr_w_rho": v, "detected": *v < 0.0})).collect::<Vec<_>>(),
        "caveat": EVIDENCE_CAVEAT,
    })
}

pub fn mirror_json(name: &str, m: &MirrorResult) -> Value {
    json!({
        "witness": name,
        "mu": m.mu,
        "mu_bracket": [m.mu_bracket.0, m.mu_bracket.1],
        "lambda_max": m.lambda_max,
        "partner_min_product_value": m.partner_min_product_value,
        "partner_max_eigenvalue": m.partner_max_eigenvalue,
        "partner_is_witness": m.partner_is_witness,
        "converged": m.converged,
        "attaining": product_vector(&m.attaining),
        "caveat": EVIDENCE_CAVEAT,
    })
}

/// Closed forms of the known qutrit determinants.
pub fn exact_form(z: C64) -> Option<&'static str> {
    let s3 = 3f64.sqrt();
    let known = [
        ("(3√3/16)(3+5i/4)", C64::new(3.0 * s3 / 16.0, 0.0) * C64::new(3.0, 1.25)),
        ("−27√3/8", C64::new(-27.0 * s3 / 8.0, 0.0)),
    ];
    known
        .into_iter()
        .find(|(_, v)| (z - v).norm() <= 1e-9 * v.norm())
        .map(|(s, _)| s)
}

fn det_json(d: Option<C64>) -> Value {
    match d {
        Some(z) => json!({ "value": complex(z), "exact": exact_form(z) }),
        None => Value::Null,
    }
}

pub fn span_json(name: &str, family: &str, dim: usize, r: &SpanReport) -> Value {
    json!({
        "witness": name,
        "family": family,
        "zero_values": r.zero_values,
        "rank_direct": r.rank_direct,
        "rank_conjugate": r.rank_conjugate,
        "spanning": r.spanning(dim),
        "bi_spanning": r.bi_spanning(dim),
        "det_direct": det_json(r.det_direct),
        "det_conjugate": det_json(r.det_conjugate),
        "singular_values_direct": r.singular_values_direct,
        "singular_values_conjugate": r.singular_values_conjugate,
    })
}
