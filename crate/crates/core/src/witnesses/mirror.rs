use crate::certify::{seesaw, Extremum, ProductVector, SeesawConfig, SeesawResult};
use crate::error::Result;
use crate::linops::{eigvals_hermitian, BipartiteOperator};

/// `μ·𝟙 ⊗ 𝟙 − W`
pub fn mirror_partner(w: &BipartiteOperator, mu: f64) -> BipartiteOperator {
    let mut out = w.scale(-1.0);
    out = out.shifted(mu);
    out
}

#[derive(Clone, Debug)]
pub struct MirrorResult {
    /// Best product-state maximum of `W` found; a lower bound on the true `μ`.
    pub mu: f64,
    /// `(μ_found, λ_max(W))`; the true `μ` lies in between.
    pub mu_bracket: (f64, f64),
    pub partner: BipartiteOperator,
    pub attaining: ProductVector,
    pub partner_min_product_value: f64,
    pub partner_max_eigenvalue: f64,
    pub lambda_max: f64,
    /// `λ_max(W) > μ`, so that the partner has a negative eigenvalue.
    pub partner_is_witness: bool,
    pub converged: bool,
}

pub fn find_mirror_mu(w: &BipartiteOperator, cfg: &SeesawConfig) -> Result<MirrorResult> {
    find_mirror_mu_with(w, |x, ext| seesaw(x, ext, cfg))
}

/// Same as [`find_mirror_mu`] with a caller-supplied product-state search.
pub fn find_mirror_mu_with<F>(w: &BipartiteOperator, search: F) -> Result<MirrorResult>
where
    F: Fn(&BipartiteOperator, Extremum) -> Result<SeesawResult>,
{
    let max = search(w, Extremum::Max)?;
    let spectrum = eigvals_hermitian(w.matrix())?;
    let lambda_max = spectrum[0];
    let lambda_min = *spectrum.last().unwrap_or(&lambda_max);
    let mu = max.value;
    let partner = mirror_partner(w, mu);
    let partner_min = search(&partner, Extremum::Min)?;
    Ok(MirrorResult {
        mu,
        mu_bracket: (mu, lambda_max),
        attaining: max.vector,
        partner_min_product_value: partner_min.value,
        partner_max_eigenvalue: mu - lambda_min,
        lambda_max,
        partner_is_witness: lambda_max > mu + crate::tol::NUMERIC,
        converged: max.all_converged && partner_min.all_converged,
        partner,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witnesses::catalog;

    #[test]
    fn involution() {
        let w = catalog("W_gamma_13").unwrap().operator;
        assert!(mirror_partner(&mirror_partner(&w, 2.5), 2.5).max_abs_diff(&w) < 1e-15);
    }

    #[test]
    fn identity_mu() {
        let cfg = SeesawConfig {
            restarts: 4,
            ..SeesawConfig::default()
        };
        let r = find_mirror_mu(&BipartiteOperator::identity(3, 3), &cfg).unwrap();
        assert!((r.mu - 1.0).abs() < 1e-12);
        assert!(!r.partner_is_witness);
        assert!(r.partner.max_abs_diff(&BipartiteOperator::zeros(3, 3)) < 1e-12);
    }
}
