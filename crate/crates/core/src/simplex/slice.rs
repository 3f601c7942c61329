//! Two-parameter slices `ρ(α,β) = (1−α−β)/D·𝟙 + α·ρ_a + β·ρ_b` through state space.

use alloc::string::String;
use alloc::vec::Vec;

use super::{bell_decode, BellCoefficients};
use crate::error::{Error, Result};
use crate::linops::{eigvals_hermitian, BipartiteOperator, CMatrix, Subsystem};
use crate::tol;

pub fn slice_state(
    alpha: f64,
    beta: f64,
    rho_a: &BipartiteOperator,
    rho_b: &BipartiteOperator,
) -> Result<BipartiteOperator> {
    if rho_a.dims() != rho_b.dims() {
        return Err(Error::DimensionMismatch("slice operands differ in dimension".into()));
    }
    let mixed = BipartiteOperator::identity(rho_a.d_a(), rho_a.d_b()).scale(1.0 / rho_a.dim() as f64);
    BipartiteOperator::combination(&[(1.0 - alpha - beta, &mixed), (alpha, rho_a), (beta, rho_b)])
}

/// Rectangular `(α, β)` grid, `steps` nodes per axis including both ends.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridSpec {
    pub alpha: (f64, f64),
    pub beta: (f64, f64),
    pub steps: usize,
}

impl GridSpec {
    pub fn square(lo: f64, hi: f64, steps: usize) -> Self {
        Self {
            alpha: (lo, hi),
            beta: (lo, hi),
            steps,
        }
    }

    fn at(range: (f64, f64), steps: usize, i: usize) -> f64 {
        if steps <= 1 {
            return range.0;
        }
        range.0 + (range.1 - range.0) * i as f64 / (steps - 1) as f64
    }

    pub fn alpha_at(&self, i: usize) -> f64 {
        Self::at(self.alpha, self.steps, i)
    }

    pub fn beta_at(&self, j: usize) -> f64 {
        Self::at(self.beta, self.steps, j)
    }

    /// Row-major nodes: α is the slow index.
    pub fn nodes(&self) -> Vec<(f64, f64)> {
        let mut out = Vec::with_capacity(self.steps * self.steps);
        for i in 0..self.steps {
            for j in 0..self.steps {
                out.push((self.alpha_at(i), self.beta_at(j)));
            }
        }
        out
    }

    /// Grid over the bounding box of the state region, padded by `pad` (relative).
    pub fn bounding(rho_a: &BipartiteOperator, rho_b: &BipartiteOperator, steps: usize, pad: f64) -> Result<Self> {
        let (a, b) = state_bounding_box(rho_a, rho_b, 720)?;
        let grow = |r: (f64, f64)| {
            let w = (r.1 - r.0) * pad;
            (r.0 - w, r.1 + w)
        };
        Ok(Self {
            alpha: grow(a),
            beta: grow(b),
            steps,
        })
    }

    /// Square grid covering the bounding boxes of both axes, so that node `(i, j)`
    /// maps to node `(j, i)` under `α ↔ β`.
    pub fn symmetric_bounding(
        rho_a: &BipartiteOperator,
        rho_b: &BipartiteOperator,
        steps: usize,
        pad: f64,
    ) -> Result<Self> {
        let g = Self::bounding(rho_a, rho_b, steps, pad)?;
        let lo = g.alpha.0.min(g.beta.0);
        let hi = g.alpha.1.max(g.beta.1);
        Ok(Self::square(lo, hi, steps))
    }
}

/// Bounding box `((α_min, α_max), (β_min, β_max))` of `{(α,β) : ρ(α,β) ≥ 0}`.
///
/// The region is convex and contains the origin; along each ray the boundary is at
/// `t* = (1/D) / (−λ_min(Δ_θ))` where `Δ_θ = cos θ (ρ_a − 𝟙/D) + sin θ (ρ_b − 𝟙/D)`.
pub fn state_bounding_box(
    rho_a: &BipartiteOperator,
    rho_b: &BipartiteOperator,
    rays: usize,
) -> Result<((f64, f64), (f64, f64))> {
    if rho_a.dims() != rho_b.dims() {
        return Err(Error::DimensionMismatch("slice operands differ in dimension".into()));
    }
    let dim = rho_a.dim() as f64;
    let da = rho_a.shifted(-1.0 / dim);
    let db = rho_b.shifted(-1.0 / dim);
    let (mut amin, mut amax, mut bmin, mut bmax) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for r in 0..rays {
        let theta = 2.0 * core::f64::consts::PI * r as f64 / rays as f64;
        let (s, c) = (libm::sin(theta), libm::cos(theta));
        let delta = BipartiteOperator::combination(&[(c, &da), (s, &db)])?;
        let lmin = *eigvals_hermitian(delta.matrix())?.last().unwrap_or(&0.0);
        if lmin >= -1e-14 {
            return Err(Error::Unsupported("state region is unbounded along a ray".into()));
        }
        let t = (1.0 / dim) / (-lmin);
        let (a, b) = (t * c, t * s);
        amin = amin.min(a);
        amax = amax.max(a);
        bmin = bmin.min(b);
        bmax = bmax.max(b);
    }
    Ok(((amin, amax), (bmin, bmax)))
}

#[derive(Clone, Debug, PartialEq)]
pub struct SlicePoint {
    pub alpha: f64,
    pub beta: f64,
    pub is_state: bool,
    pub min_eig: f64,
    pub is_ppt: bool,
    pub min_ppt_eig: f64,
    pub in_enclosure: bool,
    /// `tr(W ρ(α,β))`, one per witness in [`SliceGrid::witness_names`] order.
    pub witness_values: Vec<f64>,
}

#[derive(Clone, Debug)]
pub struct SliceGrid {
    pub spec: GridSpec,
    pub witness_names: Vec<String>,
    /// Row-major in `(α index, β index)`.
    pub points: Vec<SlicePoint>,
}

impl SliceGrid {
    pub fn point(&self, i: usize, j: usize) -> &SlicePoint {
        &self.points[i * self.spec.steps + j]
    }

    /// Node pairs `(i,j)`, `(j,i)` whose PPT labels differ.
    pub fn ppt_asymmetries(&self) -> Vec<(usize, usize)> {
        let n = self.spec.steps;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.point(i, j).is_ppt != self.point(j, i).is_ppt {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// Precomputed data for classifying slice points.
#[derive(Clone, Debug)]
pub struct SliceContext {
    rho_a: BipartiteOperator,
    rho_b: BipartiteOperator,
    pt_a: CMatrix,
    pt_b: CMatrix,
    bell: Option<(BellCoefficients, BellCoefficients)>,
    witness_names: Vec<String>,
    witnesses: Vec<BipartiteOperator>,
}

impl SliceContext {
    pub fn new(
        rho_a: &BipartiteOperator,
        rho_b: &BipartiteOperator,
        witnesses: &[(String, BipartiteOperator)],
    ) -> Result<Self> {
        if rho_a.dims() != rho_b.dims() {
            return Err(Error::DimensionMismatch("slice operands differ in dimension".into()));
        }
        for (name, w) in witnesses {
            if w.dims() != rho_a.dims() {
                return Err(Error::DimensionMismatch(alloc::format!("witness {name}")));
            }
            if !w.is_hermitian(tol::HERMITIAN_INPUT) {
                return Err(Error::NotHermitian {
                    deviation: w.matrix().hermiticity_defect(),
                    tolerance: tol::HERMITIAN_INPUT,
                });
            }
        }
        let bell = if rho_a.d_a() == rho_a.d_b() {
            let da = bell_decode(rho_a)?;
            let db = bell_decode(rho_b)?;
            (da.is_bell_diagonal(tol::STRUCTURE) && db.is_bell_diagonal(tol::STRUCTURE))
                .then_some((da.coeffs, db.coeffs))
        } else {
            None
        };
        Ok(Self {
            pt_a: rho_a.partial_transpose(Subsystem::B).into_matrix(),
            pt_b: rho_b.partial_transpose(Subsystem::B).into_matrix(),
            rho_a: rho_a.clone(),
            rho_b: rho_b.clone(),
            bell,
            witness_names: witnesses.iter().map(|(n, _)| n.clone()).collect(),
            witnesses: witnesses.iter().map(|(_, w)| w.clone()).collect(),
        })
    }

    pub fn witness_names(&self) -> &[String] {
        &self.witness_names
    }

    fn affine(&self, alpha: f64, beta: f64, a: &CMatrix, b: &CMatrix) -> CMatrix {
        let n = a.rows();
        let diag = (1.0 - alpha - beta) / n as f64;
        let mut m = &a.scale(alpha) + &b.scale(beta);
        for i in 0..n {
            m[(i, i)] += diag;
        }
        m
    }

    pub fn classify(&self, alpha: f64, beta: f64) -> Result<SlicePoint> {
        let rho = self.affine(alpha, beta, self.rho_a.matrix(), self.rho_b.matrix());
        let min_eig = *eigvals_hermitian(&rho)?.last().unwrap_or(&0.0);
        let is_state = min_eig >= -tol::PSD;
        let pt = self.affine(alpha, beta, &self.pt_a, &self.pt_b);
        let min_ppt_eig = *eigvals_hermitian(&pt)?.last().unwrap_or(&0.0);
        let is_ppt = is_state && min_ppt_eig >= -tol::PSD;
        let in_enclosure = match (&self.bell, is_state) {
            (Some((ca, cb)), true) => {
                let d = ca.d();
                let base = (1.0 - alpha - beta) / (d * d) as f64;
                let bound = 1.0 / d as f64 + 1e-12;
                ca.as_slice()
                    .iter()
                    .zip(cb.as_slice())
                    .all(|(x, y)| base + alpha * x + beta * y <= bound)
            }
            _ => false,
        };
        let witness_values = self
            .witnesses
            .iter()
            .map(|w| w.matrix().trace_product(&rho).re)
            .collect();
        Ok(SlicePoint {
            alpha,
            beta,
            is_state,
            min_eig,
            is_ppt,
            min_ppt_eig,
            in_enclosure,
            witness_values,
        })
    }
}

pub fn classify_point(ctx: &SliceContext, alpha: f64, beta: f64) -> Result<SlicePoint> {
    ctx.classify(alpha, beta)
}

/// Sequential scan; the `ew` crate provides a data-parallel variant with identical output.
pub fn scan_slice(grid: &GridSpec, ctx: &SliceContext) -> Result<SliceGrid> {
    let points = grid
        .nodes()
        .into_iter()
        .map(|(a, b)| ctx.classify(a, b))
        .collect::<Result<Vec<_>>>()?;
    Ok(SliceGrid {
        spec: *grid,
        witness_names: ctx.witness_names.clone(),
        points,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplex::bell_encode;

    fn c_d3() -> BellCoefficients {
        BellCoefficients::from_scaled_ints(3, 0.2, &[1, 1, 1, 1, 0, 0, 1, 0, 0]).unwrap()
    }

    fn c_tilde_d3() -> BellCoefficients {
        BellCoefficients::from_scaled_ints(3, 0.2, &[1, 0, 0, 0, 1, 1, 0, 1, 1]).unwrap()
    }

    #[test]
    fn corners() {
        let a = bell_encode(&c_d3());
        let b = bell_encode(&c_tilde_d3());
        let origin = slice_state(0.0, 0.0, &a, &b).unwrap();
        assert!(origin.max_abs_diff(&BipartiteOperator::identity(3, 3).scale(1.0 / 9.0)) < 1e-15);
        assert!(slice_state(1.0, 0.0, &a, &b).unwrap().max_abs_diff(&a) < 1e-15);
        for &(al, be) in &[(0.3, -0.2), (2.0, 1.0), (-1.0, 0.5)] {
            let t = slice_state(al, be, &a, &b).unwrap().trace();
            assert!((t.re - 1.0).abs() < 1e-14 && t.im.abs() < 1e-15);
        }
    }

    #[test]
    fn diagonal_is_isotropic() {
        let a = bell_encode(&c_d3());
        let b = bell_encode(&c_tilde_d3());
        for &al in &[0.1, 0.25, 0.4] {
            let dec = bell_decode(&slice_state(al, al, &a, &b).unwrap()).unwrap();
            let c = dec.coeffs.as_slice();
            assert!((c[0] - ((1.0 - 2.0 * al) / 9.0 + 2.0 * al / 5.0)).abs() < 1e-14);
            for &x in &c[1..] {
                assert!((x - ((1.0 - 2.0 * al) / 9.0 + al / 5.0)).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn bounding_box_contains_corner_states() {
        let a = bell_encode(&c_d3());
        let b = bell_encode(&c_tilde_d3());
        let ((amin, amax), (bmin, bmax)) = state_bounding_box(&a, &b, 360).unwrap();
        assert!(amin < 0.0 && amax >= 1.0 - 1e-9);
        assert!(bmin < 0.0 && bmax >= 1.0 - 1e-9);
    }

    #[test]
    fn grid_order_is_row_major() {
        let g = GridSpec::square(0.0, 1.0, 3);
        let n = g.nodes();
        assert_eq!(n[1], (0.0, 0.5));
        assert_eq!(n[3], (0.5, 0.0));
    }
}
