//! Tabulated witnesses and states, stored as small integers times a common scale.

use alloc::string::String;
use alloc::vec::Vec;

use super::circulant::{circulant_witness, table1_lookup};
use crate::error::{Error, Result};
use crate::linops::{BipartiteOperator, CMatrix};
use crate::mub::root_of_unity;
use crate::simplex::{bell_encode, BellCoefficients};
use crate::C64;

#[rustfmt::skip]
const W_GAMMA_12: [i8; 81] = [
    0, 0, 0,  0, 1, 0,  0, 0, 1,
    0, 3, 0,  0, 0,-2, -2, 0, 0,
    0, 0, 3, -2, 0, 0,  0,-2, 0,
    0, 0,-2,  3, 0, 0,  0,-2, 0,
    1, 0, 0,  0, 0, 0,  0, 0, 1,
    0,-2, 0,  0, 0, 3, -2, 0, 0,
    0,-2, 0,  0, 0,-2,  3, 0, 0,
    0, 0,-2, -2, 0, 0,  0, 3, 0,
    1, 0, 0,  0, 1, 0,  0, 0, 0,
];

#[rustfmt::skip]
const W_GAMMA_34: [i8; 81] = [
     4, 0, 0,  0,-1, 0,  0, 0,-1,
     0, 1, 0,  0, 0, 2,  2, 0, 0,
     0, 0, 1,  2, 0, 0,  0, 2, 0,
     0, 0, 2,  1, 0, 0,  0, 2, 0,
    -1, 0, 0,  0, 4, 0,  0, 0,-1,
     0, 2, 0,  0, 0, 1,  2, 0, 0,
     0, 2, 0,  0, 0, 2,  1, 0, 0,
     0, 0, 2,  2, 0, 0,  0, 1, 0,
    -1, 0, 0,  0,-1, 0,  0, 0, 4,
];

/// times 1/15
#[rustfmt::skip]
const RHO_GAMMA: [i8; 81] = [
    3, 0, 0,  0, 0, 0,  0, 0, 0,
    0, 1, 0,  0, 0, 1,  1, 0, 0,
    0, 0, 1,  1, 0, 0,  0, 1, 0,
    0, 0, 1,  1, 0, 0,  0, 1, 0,
    0, 0, 0,  0, 3, 0,  0, 0, 0,
    0, 1, 0,  0, 0, 1,  1, 0, 0,
    0, 1, 0,  0, 0, 1,  1, 0, 0,
    0, 0, 1,  1, 0, 0,  0, 1, 0,
    0, 0, 0,  0, 0, 0,  0, 0, 3,
];

/// times 1/15
#[rustfmt::skip]
const RHO_GAMMA_C: [i8; 81] = [
    1, 0, 0,  0, 1, 0,  0, 0, 1,
    0, 2, 0,  0, 0,-1, -1, 0, 0,
    0, 0, 2, -1, 0, 0,  0,-1, 0,
    0, 0,-1,  2, 0, 0,  0,-1, 0,
    1, 0, 0,  0, 1, 0,  0, 0, 1,
    0,-1, 0,  0, 0, 2, -1, 0, 0,
    0,-1, 0,  0, 0,-1,  2, 0, 0,
    0, 0,-1, -1, 0, 0,  0, 2, 0,
    1, 0, 0,  0, 1, 0,  0, 0, 1,
];

const W_D3: [i32; 9] = [2, -1, -1, -1, 5, 5, -1, 5, 5];
const W_TILDE_D3: [i32; 9] = [2, 5, 5, 5, -1, -1, 5, -1, -1];
const C_D3: [i32; 9] = [1, 1, 1, 1, 0, 0, 1, 0, 0];
const C_TILDE_D3: [i32; 9] = [1, 0, 0, 0, 1, 1, 0, 1, 1];
const RHO3_D3: [i32; 9] = [0, 1, 1, 1, 0, 0, 1, 0, 0];
const RHO4_D3: [i32; 9] = [0, 0, 0, 0, 1, 1, 0, 1, 1];

#[rustfmt::skip]
const KAPPA_W1: [i32; 25] = [
     4,-1,-1,-1,-1,
    -1,-1, 9, 9, 9,
    -1, 9,-1, 9, 9,
    -1, 9, 9,-1, 9,
    -1, 9, 9, 9,-1,
];
#[rustfmt::skip]
const KAPPA_W2: [i32; 25] = [
    4, 9, 9, 9, 9,
    9, 9,-1,-1,-1,
    9,-1, 9,-1,-1,
    9,-1,-1, 9,-1,
    9,-1,-1,-1, 9,
];
#[rustfmt::skip]
const KAPPA_W3: [i32; 25] = [
    4,-1,-1,-1,-1,
    9, 9,-1, 9,-1,
    9, 9, 9,-1,-1,
    9,-1,-1, 9, 9,
    9,-1, 9,-1, 9,
];
#[rustfmt::skip]
const KAPPA_W4: [i32; 25] = [
     4, 9, 9, 9, 9,
    -1,-1, 9,-1, 9,
    -1,-1,-1, 9, 9,
    -1, 9, 9,-1,-1,
    -1, 9,-1, 9,-1,
];

/// times 1/13
#[rustfmt::skip]
const C_RHO1: [i32; 25] = [
    1,1,1,1,1,
    1,1,0,0,0,
    1,0,1,0,0,
    1,0,0,1,0,
    1,0,0,0,1,
];
#[rustfmt::skip]
const C_RHO2: [i32; 25] = [
    1,0,0,0,0,
    0,0,1,1,1,
    0,1,0,1,1,
    0,1,1,0,1,
    0,1,1,1,0,
];
#[rustfmt::skip]
const C_RHO3: [i32; 25] = [
    1,0,0,0,0,
    0,0,1,0,1,
    0,0,0,1,1,
    0,1,1,0,0,
    0,1,0,1,0,
];
#[rustfmt::skip]
const C_RHO3_CORRECTED: [i32; 25] = [
    1,1,1,1,1,
    0,0,1,0,1,
    0,0,0,1,1,
    0,1,1,0,0,
    0,1,0,1,0,
];
#[rustfmt::skip]
const C_RHO4: [i32; 25] = [
    1,0,0,0,0,
    1,1,0,1,0,
    1,1,1,0,0,
    1,0,0,1,1,
    1,0,1,0,1,
];

/// Provenance status of a catalog entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EntryStatus {
    Exact,
    /// Reproduced verbatim although its coefficients do not sum to one.
    AsPrintedNonNormalized,
    /// A repaired variant of a verbatim entry; not itself tabulated.
    ConjecturedErratum,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub status: EntryStatus,
    pub operator: BipartiteOperator,
    /// Present for Bell-diagonal entries stored through their coefficients.
    pub bell: Option<BellCoefficients>,
}

const FIXED_NAMES: [&str; 23] = [
    "W_gamma_12",
    "W_gamma_13",
    "W_gamma_14",
    "W_gamma_34",
    "W_gamma_24",
    "W_gamma_23",
    "rho_gamma",
    "rho_gamma_c",
    "rho3_d3",
    "rho4_d3",
    "flip_d3",
    "reduction_d3",
    "W1_d5",
    "W2_d5",
    "W3_d5",
    "W4_d5",
    "rho1_d5",
    "rho2_d5",
    "rho3_d5",
    "rho3_d5_corrected",
    "rho4_d5",
    "flip_d5",
    "reduction_d5",
];

/// Names accepted by [`catalog`]. `flip_d<N>` and `reduction_d<N>` work for any `N ≥ 2`.
pub fn catalog_names() -> &'static [&'static str] {
    &FIXED_NAMES
}

fn int_matrix(d: usize, scale: f64, data: &[i8; 81]) -> BipartiteOperator {
    let m = CMatrix::from_fn(d * d, d * d, |i, j| C64::new(data[i * d * d + j] as f64 * scale, 0.0));
    BipartiteOperator::square(d, m).expect("tabulated size")
}

fn bell(d: usize, scale: f64, data: &[i32]) -> (BipartiteOperator, BellCoefficients) {
    let c = BellCoefficients::from_scaled_ints(d, scale, data).expect("tabulated size");
    (bell_encode(&c), c)
}

pub fn w_d3() -> BellCoefficients {
    BellCoefficients::from_scaled_ints(3, 1.0, &W_D3).expect("3×3")
}

pub fn w_tilde_d3() -> BellCoefficients {
    BellCoefficients::from_scaled_ints(3, 1.0, &W_TILDE_D3).expect("3×3")
}

pub fn c_d3() -> BellCoefficients {
    BellCoefficients::from_scaled_ints(3, 0.2, &C_D3).expect("3×3")
}

pub fn c_tilde_d3() -> BellCoefficients {
    BellCoefficients::from_scaled_ints(3, 0.2, &C_TILDE_D3).expect("3×3")
}

/// `U` with `W_Γc = (U ⊗ U*) W_Γ (U ⊗ U*)†` for `Γ = {1,2}`.
pub fn local_unitary_u() -> CMatrix {
    let one = C64::new(1.0, 0.0);
    let w = root_of_unity(3, 1);
    let s = 1.0 / libm::sqrt(3.0);
    CMatrix::from_vec(3, 3, alloc::vec![one, one, w, one, w, one, w.conj(), w, w])
        .expect("3×3")
        .scale(s)
}

/// `𝔽 = Σ |ij⟩⟨ji|`
pub fn flip(d: usize) -> BipartiteOperator {
    let m = CMatrix::from_fn(d * d, d * d, |r, c| {
        let (i, j) = (r / d, r % d);
        C64::new(if c == j * d + i { 1.0 } else { 0.0 }, 0.0)
    });
    BipartiteOperator::square(d, m).expect("d²×d²")
}

/// `𝟙 ⊗ 𝟙 − d·P⁺_d`
pub fn reduction_witness(d: usize) -> BipartiteOperator {
    let m = CMatrix::from_fn(d * d, d * d, |r, c| {
        let id = if r == c { 1.0 } else { 0.0 };
        let p = if r % (d + 1) == 0 && c % (d + 1) == 0 { 1.0 } else { 0.0 };
        C64::new(id - p, 0.0)
    });
    BipartiteOperator::square(d, m).expect("d²×d²")
}

fn parse_dim(name: &str, prefix: &str) -> Option<usize> {
    name.strip_prefix(prefix)?.parse().ok().filter(|&d| d >= 2)
}

pub fn catalog(name: &str) -> Result<CatalogEntry> {
    let entry = |status, operator, bell| {
        Ok(CatalogEntry {
            name: name.into(),
            status,
            operator,
            bell,
        })
    };
    let exact_bell = |d: usize, scale: f64, data: &[i32]| {
        let (op, c) = bell(d, scale, data);
        entry(EntryStatus::Exact, op, Some(c))
    };
    match name {
        "W_gamma_12" => entry(EntryStatus::Exact, int_matrix(3, 1.0, &W_GAMMA_12), None),
        "W_gamma_34" => entry(EntryStatus::Exact, int_matrix(3, 1.0, &W_GAMMA_34), None),
        "W_gamma_13" | "W_gamma_14" | "W_gamma_24" | "W_gamma_23" => {
            let digits: Vec<usize> = name[8..].bytes().map(|b| (b - b'0') as usize).collect();
            let p = table1_lookup(&digits).expect("tabulated split");
            entry(EntryStatus::Exact, circulant_witness(&p), None)
        }
        "rho_gamma" | "rho_gamma_d3" => entry(EntryStatus::Exact, int_matrix(3, 1.0 / 15.0, &RHO_GAMMA), None),
        "rho_gamma_c" | "rho_gamma_c_d3" => entry(EntryStatus::Exact, int_matrix(3, 1.0 / 15.0, &RHO_GAMMA_C), None),
        "rho3_d3" => exact_bell(3, 0.25, &RHO3_D3),
        "rho4_d3" => exact_bell(3, 0.25, &RHO4_D3),
        "W1_d5" => exact_bell(5, 1.0, &KAPPA_W1),
        "W2_d5" => exact_bell(5, 1.0, &KAPPA_W2),
        "W3_d5" => exact_bell(5, 1.0, &KAPPA_W3),
        "W4_d5" => exact_bell(5, 1.0, &KAPPA_W4),
        "rho1_d5" => exact_bell(5, 1.0 / 13.0, &C_RHO1),
        "rho2_d5" => exact_bell(5, 1.0 / 13.0, &C_RHO2),
        "rho4_d5" => exact_bell(5, 1.0 / 13.0, &C_RHO4),
        "rho3_d5" => {
            let (op, c) = bell(5, 1.0 / 13.0, &C_RHO3);
            entry(EntryStatus::AsPrintedNonNormalized, op, Some(c))
        }
        "rho3_d5_corrected" => {
            let (op, c) = bell(5, 1.0 / 13.0, &C_RHO3_CORRECTED);
            entry(EntryStatus::ConjecturedErratum, op, Some(c))
        }
        _ => {
            if let Some(d) = parse_dim(name, "flip_d") {
                entry(EntryStatus::Exact, flip(d), None)
            } else if let Some(d) = parse_dim(name, "reduction_d") {
                entry(EntryStatus::Exact, reduction_witness(d), None)
            } else {
                Err(Error::UnknownName(name.into()))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_listed_name_resolves() {
        for n in catalog_names() {
            let e = catalog(n).unwrap();
            assert!(e.operator.is_hermitian(1e-12), "{n}");
        }
        assert!(matches!(catalog("nope"), Err(Error::UnknownName(_))));
        assert!(catalog("flip_d1").is_err());
        assert_eq!(catalog("flip_d4").unwrap().operator.dims(), (4, 4));
    }

    #[test]
    fn traces() {
        let t = |n: &str| catalog(n).unwrap().operator.trace().re;
        assert!((t("rho_gamma") - 1.0).abs() < 1e-15);
        assert!((t("rho_gamma_c") - 1.0).abs() < 1e-15);
        assert!((t("rho3_d5") - 9.0 / 13.0).abs() < 1e-14);
        assert!((t("rho3_d5_corrected") - 1.0).abs() < 1e-14);
        assert_eq!(t("W_gamma_12"), 18.0);
    }

    #[test]
    fn statuses() {
        assert_eq!(catalog("rho3_d5").unwrap().status, EntryStatus::AsPrintedNonNormalized);
        assert_eq!(
            catalog("rho3_d5_corrected").unwrap().status,
            EntryStatus::ConjecturedErratum
        );
        assert_eq!(catalog("rho1_d5").unwrap().status, EntryStatus::Exact);
    }

    #[test]
    fn w1_first_row() {
        let c = catalog("W1_d5").unwrap().bell.unwrap();
        assert_eq!(c.row(0), &[4.0, -1.0, -1.0, -1.0, -1.0]);
    }

    #[test]
    fn flip_swaps() {
        let f = flip(3);
        // |01⟩ ↦ |10⟩
        assert_eq!(f.get(3, 1), C64::new(1.0, 0.0));
        assert_eq!(f.get(1, 1), C64::new(0.0, 0.0));
        assert_eq!(f.get(4, 4), C64::new(1.0, 0.0));
    }
}
