//! Mutually unbiased bases.
//!
//! Two constructions: the four qutrit bases exactly as used by the `Φ_Γ` witnesses
//! ([`qutrit_mubs`], whose ordering fixes the Γ labels of the circulant table), and the
//! quadratic-phase family `⟨j|ψ_k^{(a)}⟩ = ω^{a·j² + j·k}/√d` for odd primes.

use alloc::vec::Vec;

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::linops::StateVector;
use crate::tol;

#[derive(Clone, Debug, PartialEq)]
pub struct MubSet {
    d: usize,
    bases: Vec<Vec<StateVector>>,
}

/// Worst-case deviations from orthonormality and unbiasedness.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MubReport {
    pub max_orthonormality_violation: f64,
    pub max_unbiasedness_violation: f64,
}

impl MubReport {
    pub fn passes(&self) -> bool {
        self.max_orthonormality_violation <= tol::STRUCTURE && self.max_unbiasedness_violation <= tol::STRUCTURE
    }
}

impl MubSet {
    /// Wraps bases without validating them; see [`verify_mub`].
    pub fn from_bases(d: usize, bases: Vec<Vec<StateVector>>) -> Result<Self> {
        for basis in &bases {
            if basis.len() != d || basis.iter().any(|v| v.dim() != d) {
                return Err(Error::DimensionMismatch(alloc::format!(
                    "every basis must hold {d} vectors of length {d}"
                )));
            }
        }
        Ok(Self { d, bases })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn bases(&self) -> &[Vec<StateVector>] {
        &self.bases
    }

    /// Basis by 1-based label, matching `B₁ … B_{d+1}`.
    pub fn basis(&self, label: usize) -> Option<&[StateVector]> {
        label.checked_sub(1).and_then(|i| self.bases.get(i)).map(Vec::as_slice)
    }

    pub fn len(&self) -> usize {
        self.bases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bases.is_empty()
    }
}

/// `ω_d^k = e^{2πik/d}`
pub fn root_of_unity(d: usize, k: i64) -> C64 {
    let k = k.rem_euclid(d as i64) as f64;
    C64::from_polar(1.0, 2.0 * core::f64::consts::PI * k / d as f64)
}

/// The four qutrit MUBs `B₁ … B₄` in the fixed order and phases used by the witness catalog.
pub fn qutrit_mubs() -> MubSet {
    let one = C64::new(1.0, 0.0);
    let w = root_of_unity(3, 1);
    let wc = w.conj();
    let s = 1.0 / libm::sqrt(3.0);
    let vec3 = |a: C64, b: C64, c: C64| StateVector::new(alloc::vec![a * s, b * s, c * s]);
    let computational = (0..3).map(|k| StateVector::basis(3, k)).collect();
    let b2 = alloc::vec![vec3(one, one, one), vec3(one, wc, w), vec3(one, w, wc)];
    let b3 = alloc::vec![vec3(one, one, wc), vec3(one, w, w), vec3(one, wc, one)];
    let b4 = alloc::vec![vec3(one, one, w), vec3(one, wc, wc), vec3(one, w, one)];
    MubSet {
        d: 3,
        bases: alloc::vec![computational, b2, b3, b4],
    }
}

pub fn is_odd_prime(d: usize) -> bool {
    d >= 3
        && d % 2 == 1
        && (3..)
            .step_by(2)
            .take_while(|p| p * p <= d)
            .all(|p| !d.is_multiple_of(p))
}

/// `d + 1` MUBs for an odd prime `d`: the computational basis followed by
/// `⟨j|ψ_k^{(a)}⟩ = ω^{a·j² + j·k}/√d`, `a = 1..d`.
pub fn build_mubs(d: usize) -> Result<MubSet> {
    if !is_odd_prime(d) {
        return Err(Error::NotOddPrime(d));
    }
    let s = 1.0 / libm::sqrt(d as f64);
    let mut bases = Vec::with_capacity(d + 1);
    bases.push((0..d).map(|k| StateVector::basis(d, k)).collect());
    for a in 1..=d as i64 {
        let basis = (0..d as i64)
            .map(|k| {
                StateVector::new(
                    (0..d as i64)
                        .map(|j| root_of_unity(d, (a * j * j + j * k) % d as i64) * s)
                        .collect(),
                )
            })
            .collect();
        bases.push(basis);
    }
    Ok(MubSet { d, bases })
}

pub fn verify_mub(set: &MubSet) -> MubReport {
    let d = set.d;
    let target = 1.0 / d as f64;
    let mut ortho = 0.0f64;
    let mut unbiased = 0.0f64;
    for (a, basis_a) in set.bases.iter().enumerate() {
        for (k, u) in basis_a.iter().enumerate() {
            for (l, v) in basis_a.iter().enumerate() {
                let delta = if k == l { 1.0 } else { 0.0 };
                ortho = ortho.max((u.inner(v) - C64::new(delta, 0.0)).norm());
            }
        }
        for basis_b in &set.bases[a + 1..] {
            for u in basis_a {
                for v in basis_b {
                    unbiased = unbiased.max((u.inner(v).norm_sqr() - target).abs());
                }
            }
        }
    }
    MubReport {
        max_orthonormality_violation: ortho,
        max_unbiasedness_violation: unbiased,
    }
}
