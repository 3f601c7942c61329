//! Operator, Bell-coefficient and MUB JSON.

use std::fs;
use std::path::Path;

use ew_core::mub::MubSet;
use ew_core::simplex::BellCoefficients;
use ew_core::{BipartiteOperator, CMatrix, C64};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("size mismatch: {0}")]
    Size(String),
    #[error(transparent)]
    Core(#[from] ew_core::Error),
}

/// `{"dA", "dB", "re", "im"}` with row-major real and imaginary parts.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OperatorJson {
    #[serde(rename = "dA")]
    pub d_a: usize,
    #[serde(rename = "dB")]
    pub d_b: usize,
    pub re: Vec<Vec<f64>>,
    pub im: Vec<Vec<f64>>,
}

impl From<&BipartiteOperator> for OperatorJson {
    fn from(x: &BipartiteOperator) -> Self {
        let n = x.dim();
        let m = x.matrix();
        Self {
            d_a: x.d_a(),
            d_b: x.d_b(),
            re: (0..n).map(|i| m.row(i).iter().map(|z| z.re).collect()).collect(),
            im: (0..n).map(|i| m.row(i).iter().map(|z| z.im).collect()).collect(),
        }
    }
}

impl TryFrom<OperatorJson> for BipartiteOperator {
    type Error = FormatError;

    fn try_from(j: OperatorJson) -> Result<Self, FormatError> {
        let n = j.d_a * j.d_b;
        if n == 0 {
            return Err(FormatError::Size("dA and dB must be positive".into()));
        }
        let rows_ok = |rows: &[Vec<f64>]| rows.len() == n && rows.iter().all(|r| r.len() == n);
        if !rows_ok(&j.re) || !rows_ok(&j.im) {
            return Err(FormatError::Size(format!(
                "expected {n}×{n} re and im arrays for dA={} dB={}",
                j.d_a, j.d_b
            )));
        }
        let m = CMatrix::from_fn(n, n, |r, c| C64::new(j.re[r][c], j.im[r][c]));
        if !m.is_finite() {
            return Err(ew_core::Error::NonFinite.into());
        }
        Ok(BipartiteOperator::new(j.d_a, j.d_b, m)?)
    }
}

pub fn operator_to_string(x: &BipartiteOperator) -> String {
    serde_json::to_string_pretty(&OperatorJson::from(x)).expect("plain data serializes")
}

pub fn operator_from_str(s: &str) -> Result<BipartiteOperator, FormatError> {
    serde_json::from_str::<OperatorJson>(s)?.try_into()
}

pub fn read_operator(path: &Path) -> Result<BipartiteOperator, FormatError> {
    operator_from_str(&read(path)?)
}

pub fn write_operator(path: &Path, x: &BipartiteOperator) -> Result<(), FormatError> {
    write(path, &operator_to_string(x))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BellJson {
    pub d: usize,
    /// `coeffs[k][l]` multiplies `P_kl`.
    pub coeffs: Vec<Vec<f64>>,
}

impl From<&BellCoefficients> for BellJson {
    fn from(b: &BellCoefficients) -> Self {
        Self {
            d: b.d(),
            coeffs: (0..b.d()).map(|k| b.row(k).to_vec()).collect(),
        }
    }
}

impl TryFrom<BellJson> for BellCoefficients {
    type Error = FormatError;

    fn try_from(j: BellJson) -> Result<Self, FormatError> {
        if j.coeffs.len() != j.d || j.coeffs.iter().any(|r| r.len() != j.d) {
            return Err(FormatError::Size(format!("expected {0}×{0} coefficients", j.d)));
        }
        Ok(BellCoefficients::new(j.d, j.coeffs.concat())?)
    }
}

/// `[[[re, im], ...] per vector] per basis]`
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MubJson {
    pub d: usize,
    pub bases: Vec<Vec<Vec<[f64; 2]>>>,
}

impl From<&MubSet> for MubJson {
    fn from(m: &MubSet) -> Self {
        Self {
            d: m.d(),
            bases: m
                .bases()
                .iter()
                .map(|b| {
                    b.iter()
                        .map(|v| v.as_slice().iter().map(|z| [z.re, z.im]).collect())
                        .collect()
                })
                .collect(),
        }
    }
}

impl TryFrom<MubJson> for MubSet {
    type Error = FormatError;

    fn try_from(j: MubJson) -> Result<Self, FormatError> {
        let bases = j
            .bases
            .into_iter()
            .map(|b| {
                b.into_iter()
                    .map(|v| ew_core::StateVector::new(v.into_iter().map(|[re, im]| C64::new(re, im)).collect()))
                    .collect()
            })
            .collect();
        Ok(MubSet::from_bases(j.d, bases)?)
    }
}

pub fn read(path: &Path) -> Result<String, FormatError> {
    fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn write(path: &Path, contents: &str) -> Result<(), FormatError> {
    fs::write(path, contents).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_wrong_size() {
        let j = r#"{"dA": 2, "dB": 2, "re": [[1,0],[0,1]], "im": [[0,0],[0,0]]}"#;
        assert!(matches!(operator_from_str(j), Err(FormatError::Size(_))));
    }

    #[test]
    fn bell_round_trip() {
        let b = BellCoefficients::from_scaled_ints(3, 0.2, &[1, 1, 1, 1, 0, 0, 1, 0, 0]).unwrap();
        let back: BellCoefficients = BellJson::from(&b).try_into().unwrap();
        assert_eq!(back, b);
    }

    #[test]
    fn mub_round_trip() {
        let m = ew_core::mub::build_mubs(5).unwrap();
        let s = serde_json::to_string(&MubJson::from(&m)).unwrap();
        let back: MubSet = serde_json::from_str::<MubJson>(&s).unwrap().try_into().unwrap();
        assert_eq!(back.bases(), m.bases());
    }
}
