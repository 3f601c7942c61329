//! Affine lines of the discrete phase space `Z_d × Z_d` and the kernel they span.

use alloc::vec::Vec;

use super::BellCoefficients;
use crate::error::{Error, Result};
use crate::linops::solve_real;
use crate::mub::is_odd_prime;

/// `{ offset + t·direction : t ∈ Z_d }`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhaseSpaceLine {
    pub direction: (usize, usize),
    pub offset: (usize, usize),
    pub points: Vec<(usize, usize)>,
}

impl PhaseSpaceLine {
    pub fn contains(&self, p: (usize, usize)) -> bool {
        self.points.contains(&p)
    }
}

/// All `d(d+1)` lines: directions `(0,1)` and `(1,m)` for `m ∈ Z_d`, `d` parallel offsets each.
pub fn phase_space_lines(d: usize) -> Result<Vec<PhaseSpaceLine>> {
    if !is_odd_prime(d) {
        return Err(Error::NotOddPrime(d));
    }
    let mut directions = alloc::vec![(0, 1)];
    directions.extend((0..d).map(|m| (1, m)));
    let mut out = Vec::with_capacity(d * (d + 1));
    for &(a, b) in &directions {
        for c in 0..d {
            // offsets run transversally to the direction
            let offset = if a == 0 { (c, 0) } else { (0, c) };
            let points = (0..d)
                .map(|t| ((offset.0 + t * a) % d, (offset.1 + t * b) % d))
                .collect();
            out.push(PhaseSpaceLine {
                direction: (a, b),
                offset,
                points,
            });
        }
    }
    Ok(out)
}

/// Uniform mixture `(1/d) Σ_{(k,ℓ) ∈ line} P_{kℓ}` as Bell coefficients.
pub fn line_state(d: usize, line: &PhaseSpaceLine) -> BellCoefficients {
    let mut c = alloc::vec![0.0; d * d];
    for &(k, l) in &line.points {
        c[k * d + l] += 1.0 / d as f64;
    }
    BellCoefficients::new(d, c).expect("d² coefficients")
}

/// Non-negative least-squares fit of a Bell state by line-uniform mixtures.
#[derive(Clone, Debug)]
pub struct KernelFit {
    /// One weight per line, in [`phase_space_lines`] order.
    pub weights: Vec<f64>,
    /// `max |Σ λᵢ cᵢ − c|` together with `|Σ λᵢ − 1|`.
    pub residual: f64,
    pub member: bool,
}

/// Decides (numerically) whether `bc` lies in the convex hull of the line states.
///
/// Lawson–Hanson active-set NNLS on the stacked system `[C; 1ᵀ] λ = [c; 1]`.
pub fn kernel_membership(bc: &BellCoefficients, tol: f64) -> Result<KernelFit> {
    let d = bc.d();
    let lines = phase_space_lines(d)?;
    let cols: Vec<Vec<f64>> = lines
        .iter()
        .map(|l| {
            let mut v = line_state(d, l).as_slice().to_vec();
            v.push(1.0);
            v
        })
        .collect();
    let mut target = bc.as_slice().to_vec();
    target.push(1.0);
    let n = cols.len();
    let m = target.len();

    let dot = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<f64>();
    let apply = |lambda: &[f64]| {
        let mut out = alloc::vec![0.0; m];
        for (w, col) in lambda.iter().zip(&cols) {
            for (o, c) in out.iter_mut().zip(col) {
                *o += w * c;
            }
        }
        out
    };
    let gradient = |lambda: &[f64]| {
        let ax = apply(lambda);
        let r: Vec<f64> = target.iter().zip(&ax).map(|(t, a)| t - a).collect();
        cols.iter().map(|c| dot(c, &r)).collect::<Vec<f64>>()
    };
    let solve_active = |active: &[usize]| -> Option<Vec<f64>> {
        let k = active.len();
        let mut gram = alloc::vec![0.0; k * k];
        let mut rhs = alloc::vec![0.0; k];
        for (i, &a) in active.iter().enumerate() {
            rhs[i] = dot(&cols[a], &target);
            for (j, &b) in active.iter().enumerate() {
                gram[i * k + j] = dot(&cols[a], &cols[b]);
            }
        }
        solve_real(&gram, &rhs, k)
    };

    let mut lambda = alloc::vec![0.0; n];
    let mut active: Vec<usize> = Vec::new();
    for _ in 0..(3 * n) {
        let w = gradient(&lambda);
        let candidate = (0..n)
            .filter(|j| !active.contains(j))
            .max_by(|&a, &b| w[a].total_cmp(&w[b]));
        let Some(j) = candidate.filter(|&j| w[j] > 1e-14) else {
            break;
        };
        active.push(j);
        let mut guard = 0;
        loop {
            guard += 1;
            let Some(z) = solve_active(&active) else {
                active.pop();
                break;
            };
            if z.iter().all(|&x| x > 0.0) {
                for (&a, &x) in active.iter().zip(&z) {
                    lambda[a] = x;
                }
                break;
            }
            let mut alpha = f64::INFINITY;
            for (&a, &x) in active.iter().zip(&z) {
                if x <= 0.0 {
                    alpha = alpha.min(lambda[a] / (lambda[a] - x));
                }
            }
            for (&a, &x) in active.iter().zip(&z) {
                lambda[a] += alpha * (x - lambda[a]);
            }
            active.retain(|&a| lambda[a] > 1e-15);
            for (i, l) in lambda.iter_mut().enumerate() {
                if !active.contains(&i) {
                    *l = 0.0;
                }
            }
            if active.is_empty() || guard > 3 * n {
                break;
            }
        }
    }

    let fit = apply(&lambda);
    let residual = fit.iter().zip(&target).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    Ok(KernelFit {
        weights: lambda,
        residual,
        member: residual <= tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::is_ppt;
    use crate::simplex::bell_encode;

    #[test]
    fn d3_has_twelve_lines() {
        let lines = phase_space_lines(3).unwrap();
        assert_eq!(lines.len(), 12);
        let first = &lines[0];
        assert_eq!(first.direction, (0, 1));
        assert_eq!(first.points, alloc::vec![(0, 0), (0, 1), (0, 2)]);
    }

    #[test]
    fn every_point_on_d_plus_one_lines() {
        for d in [3, 5] {
            let lines = phase_space_lines(d).unwrap();
            assert_eq!(lines.len(), d * (d + 1));
            for k in 0..d {
                for l in 0..d {
                    let n = lines.iter().filter(|line| line.contains((k, l))).count();
                    assert_eq!(n, d + 1);
                }
            }
            assert!(lines.iter().all(|l| l.points.len() == d));
        }
        assert_eq!(
            phase_space_lines(3)
                .unwrap()
                .iter()
                .filter(|l| l.contains((1, 1)))
                .count(),
            4
        );
    }

    #[test]
    fn line_mixtures_are_ppt() {
        for d in [3, 5] {
            for line in phase_space_lines(d).unwrap() {
                let rho = bell_encode(&line_state(d, &line));
                assert!(is_ppt(&rho, 1e-10).unwrap().ppt, "line {line:?}");
            }
        }
    }

    #[test]
    fn rejects_non_prime() {
        assert!(phase_space_lines(4).is_err());
    }

    #[test]
    fn kernel_contains_line_states_and_maximally_mixed() {
        let d = 3;
        let lines = phase_space_lines(d).unwrap();
        let fit = kernel_membership(&line_state(d, &lines[5]), 1e-9).unwrap();
        assert!(fit.member, "{fit:?}");
        let fit = kernel_membership(&BellCoefficients::uniform(d), 1e-9).unwrap();
        assert!(fit.member);
        assert!((fit.weights.iter().sum::<f64>() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn kernel_excludes_pure_bell_state() {
        let mut c = alloc::vec![0.0; 9];
        c[0] = 1.0;
        let fit = kernel_membership(&BellCoefficients::new(3, c).unwrap(), 1e-9).unwrap();
        assert!(!fit.member);
    }
}
