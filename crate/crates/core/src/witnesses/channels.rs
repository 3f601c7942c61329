use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linops::{BipartiteOperator, CMatrix, StateVector};
use crate::mub::{qutrit_mubs, MubSet};
use crate::C64;

/// `Σ_k P_k ρ P_k` for the projectors onto an orthonormal basis.
pub fn dephase(basis: &[StateVector], rho: &CMatrix) -> Result<CMatrix> {
    let d = rho.rows();
    if !rho.is_square() || basis.len() != d || basis.iter().any(|v| v.dim() != d) {
        return Err(Error::DimensionMismatch(alloc::format!(
            "dephasing a {}×{} operator with {} vectors",
            rho.rows(),
            rho.cols(),
            basis.len()
        )));
    }
    let mut out = CMatrix::zeros(d, d);
    for v in basis {
        // P ρ P = ⟨v|ρ|v⟩ |v⟩⟨v|
        let c = rho.sandwich(v.as_slice(), v.as_slice());
        let p = v.projector();
        out = &out + &p.scale_c(c);
    }
    Ok(out)
}

/// Partition of the MUB labels `{1, …, d+1}` into `Γ` and its complement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaSplit {
    d: usize,
    gamma: Vec<usize>,
}

impl GammaSplit {
    pub fn new(d: usize, gamma: &[usize]) -> Result<Self> {
        let mut g = gamma.to_vec();
        g.sort_unstable();
        g.dedup();
        if g.len() != gamma.len() || g.is_empty() || g.len() > d {
            return Err(Error::InvalidSplit(alloc::format!("{gamma:?} for d = {d}")));
        }
        if g.iter().any(|&a| a == 0 || a > d + 1) {
            return Err(Error::InvalidSplit(alloc::format!("labels run from 1 to {}", d + 1)));
        }
        Ok(Self { d, gamma: g })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn gamma(&self) -> &[usize] {
        &self.gamma
    }

    pub fn complement(&self) -> Vec<usize> {
        (1..=self.d + 1).filter(|a| !self.gamma.contains(a)).collect()
    }

    pub fn complement_split(&self) -> Self {
        Self {
            d: self.d,
            gamma: self.complement(),
        }
    }

    /// e.g. `"12"` for `Γ = {1,2}`
    pub fn label(&self) -> alloc::string::String {
        self.gamma.iter().map(|a| alloc::format!("{a}")).collect()
    }
}

/// `Φ_Γ(ρ) = 2Φ₀(ρ) + Σ_{α∈Γc} Φ_α(ρ) − Σ_{β∈Γ} Φ_β(ρ)` with `Φ₀(ρ) = tr(ρ)·𝟙/d`.
///
/// Only the qutrit case with `|Γ| = 2` is defined.
pub fn phi_gamma_apply(split: &GammaSplit, mubs: &MubSet, rho: &CMatrix) -> Result<CMatrix> {
    if split.d != 3 || split.gamma.len() != 2 {
        return Err(Error::Unsupported(alloc::format!(
            "Φ_Γ is defined for d = 3 and |Γ| = 2, got d = {} and |Γ| = {}",
            split.d,
            split.gamma.len()
        )));
    }
    if mubs.d() != 3 || mubs.len() != 4 {
        return Err(Error::DimensionMismatch("Φ_Γ needs the four qutrit MUBs".into()));
    }
    let d = split.d;
    let mut out = CMatrix::identity(d).scale_c(rho.trace() * (2.0 / d as f64));
    for a in split.complement() {
        out = &out + &dephase(mubs.basis(a).expect("label checked"), rho)?;
    }
    for &b in &split.gamma {
        out = &out - &dephase(mubs.basis(b).expect("label checked"), rho)?;
    }
    Ok(out)
}

/// `Σ_{kℓ} |k⟩⟨ℓ| ⊗ Φ(|k⟩⟨ℓ|)`
pub fn choi<F>(d: usize, map: F) -> Result<BipartiteOperator>
where
    F: Fn(&CMatrix) -> Result<CMatrix>,
{
    let mut m = CMatrix::zeros(d * d, d * d);
    for k in 0..d {
        for l in 0..d {
            let mut e = CMatrix::zeros(d, d);
            e[(k, l)] = C64::new(1.0, 0.0);
            let image = map(&e)?;
            if image.rows() != d || image.cols() != d {
                return Err(Error::DimensionMismatch("map must send d×d to d×d".into()));
            }
            for i in 0..d {
                for j in 0..d {
                    m[(k * d + i, l * d + j)] = image[(i, j)];
                }
            }
        }
    }
    BipartiteOperator::square(d, m)
}

/// `W_Γ = d · choi(Φ_Γ)` built from the fixed qutrit MUBs.
///
/// The factor `d` puts the witness on the integer scale of the tabulated matrices,
/// where `W_Γ + W_Γc = 4·𝟙`.
pub fn witness_gamma(split: &GammaSplit) -> Result<BipartiteOperator> {
    let mubs = qutrit_mubs();
    let c = choi(split.d, |x| phi_gamma_apply(split, &mubs, x))?;
    Ok(c.scale(split.d as f64))
}

/// The three complementary pairs `(Γ, Γc)` of the qutrit labels.
pub fn complementary_splits() -> [(GammaSplit, GammaSplit); 3] {
    let s = |g: &[usize]| GammaSplit::new(3, g).expect("valid split");
    [
        (s(&[1, 2]), s(&[3, 4])),
        (s(&[1, 3]), s(&[2, 4])),
        (s(&[1, 4]), s(&[2, 3])),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn computational_dephasing_kills_off_diagonal() {
        let rho = CMatrix::from_fn(3, 3, |i, j| C64::new((i + 2 * j) as f64, i as f64 - j as f64));
        let comp: Vec<_> = (0..3).map(|k| StateVector::basis(3, k)).collect();
        let out = dephase(&comp, &rho).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let e = if i == j { rho[(i, i)] } else { C64::new(0.0, 0.0) };
                assert!((out[(i, j)] - e).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn dephasing_basis_vector_in_unbiased_basis() {
        let m = qutrit_mubs();
        let b2 = m.basis(2).unwrap();
        let out = dephase(b2, &StateVector::basis(3, 0).projector()).unwrap();
        let mut expect = CMatrix::zeros(3, 3);
        for v in b2 {
            expect = &expect + &v.projector().scale(1.0 / 3.0);
        }
        assert!(out.max_abs_diff(&expect) < 1e-15);
        // an unbiased basis sums to 𝟙
        assert!(out.max_abs_diff(&CMatrix::identity(3).scale(1.0 / 3.0)) < 1e-15);
    }

    #[test]
    fn split_validation() {
        assert!(GammaSplit::new(3, &[1, 2]).is_ok());
        assert!(GammaSplit::new(3, &[1, 1]).is_err());
        assert!(GammaSplit::new(3, &[0, 2]).is_err());
        assert!(GammaSplit::new(3, &[5]).is_err());
        assert!(GammaSplit::new(3, &[]).is_err());
        assert!(GammaSplit::new(3, &[1, 2, 3, 4]).is_err());
        assert_eq!(GammaSplit::new(3, &[2, 1]).unwrap().complement(), alloc::vec![3, 4]);
        let mubs = qutrit_mubs();
        let odd = GammaSplit::new(3, &[1]).unwrap();
        assert!(phi_gamma_apply(&odd, &mubs, &CMatrix::identity(3)).is_err());
    }

    #[test]
    fn mirrored_maps_sum_to_depolarizer() {
        let mubs = qutrit_mubs();
        let mixed = CMatrix::identity(3).scale(1.0 / 3.0);
        for (g, gc) in complementary_splits() {
            let s = &phi_gamma_apply(&g, &mubs, &mixed).unwrap() + &phi_gamma_apply(&gc, &mubs, &mixed).unwrap();
            assert!(s.max_abs_diff(&CMatrix::identity(3).scale(4.0 / 3.0)) < 1e-14);
        }
    }

    #[test]
    fn choi_of_identity_is_unnormalized_max_entangled() {
        let c = choi(3, |x| Ok(x.clone())).unwrap();
        for r in 0..9 {
            for s in 0..9 {
                let e = if r % 4 == 0 && s % 4 == 0 { 1.0 } else { 0.0 };
                assert_eq!(c.get(r, s), C64::new(e, 0.0));
            }
        }
    }

    #[test]
    fn first_diagonal_block() {
        let mubs = qutrit_mubs();
        let g = GammaSplit::new(3, &[1, 2]).unwrap();
        let out = phi_gamma_apply(&g, &mubs, &StateVector::basis(3, 0).projector()).unwrap();
        let expect = CMatrix::from_real(3, 3, &[0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0]).unwrap();
        assert!(out.max_abs_diff(&expect) < 1e-15);
    }
}
