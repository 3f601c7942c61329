//! Claim registry behind `ew reproduce` and the acceptance target.
//!
//! Each numbered criterion expands into records. A criterion passes when every
//! non-informational record in scope passes; informational records document known
//! misprints and never affect the exit code.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use ew_core::certify::{
    ces_evidence_with, is_ppt, local_decomposition, mu_family, negative_eigenspace, raw_product_expectation,
    rotated_zero_family_d3, span_report, subspace_projector, xi_family, zero_family_d3, Extremum, SeesawConfig,
};
use ew_core::linops::eigvals_hermitian;
use ew_core::mub::{build_mubs, qutrit_mubs, verify_mub};
use ew_core::simplex::{bell_state, slice_state, GridSpec, SliceContext, SliceGrid};
use ew_core::witnesses::{
    catalog, choi, circulant_witness, complementary_splits, local_unitary_u, phi_gamma_apply, table1, witness_gamma,
    GammaSplit,
};
use ew_core::{BipartiteOperator, CMatrix, C64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::parallel::{par_scan_slice, par_seesaw, searcher};

pub const CRITERIA: u8 = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    D3,
    D5,
    All,
}

impl Scope {
    /// `d5` covers everything beyond the qutrit case.
    fn includes(self, d: usize) -> bool {
        match self {
            Scope::D3 => d == 3,
            Scope::D5 => d != 3,
            Scope::All => true,
        }
    }
}

impl FromStr for Scope {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "d3" => Ok(Scope::D3),
            "d5" => Ok(Scope::D5),
            "all" => Ok(Scope::All),
            other => Err(format!("unknown scope `{other}` (d3, d5, all)")),
        }
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scope::D3 => "d3",
            Scope::D5 => "d5",
            Scope::All => "all",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Computed {
    Real(f64),
    Complex([f64; 2]),
    Count(usize),
}

impl fmt::Display for Computed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Computed::Real(x) => write!(f, "{x:.12e}"),
            Computed::Complex([re, im]) => write!(f, "{re:.12e}{im:+.12e}i"),
            Computed::Count(n) => write!(f, "{n}"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReproduceRecord {
    pub claim_id: String,
    pub criterion: u8,
    pub d: usize,
    pub location: &'static str,
    pub expected: String,
    pub computed: Computed,
    /// Distance from the expected value, or the amount by which a bound is exceeded.
    pub error: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub informational: bool,
}

#[derive(Clone, Copy, Debug)]
pub struct Settings {
    pub seesaw: SeesawConfig,
    pub d3_grid: usize,
    pub d5_grid: usize,
}

impl Default for Settings {
    fn default() -> Self {
        Self {
            seesaw: SeesawConfig::default(),
            d3_grid: 201,
            d5_grid: 101,
        }
    }
}

struct Claims<'a> {
    scope: Scope,
    criterion: u8,
    out: &'a mut Vec<ReproduceRecord>,
}

impl Claims<'_> {
    fn wants(&self, d: usize) -> bool {
        self.scope.includes(d)
    }

    #[allow(clippy::too_many_arguments)]
    fn push(
        &mut self,
        d: usize,
        id: &str,
        location: &'static str,
        expected: String,
        computed: Computed,
        error: f64,
        tolerance: f64,
        pass: bool,
        informational: bool,
    ) {
        if !self.wants(d) {
            return;
        }
        self.out.push(ReproduceRecord {
            claim_id: id.to_string(),
            criterion: self.criterion,
            d,
            location,
            expected,
            computed,
            error,
            tolerance,
            pass,
            informational,
        });
    }

    /// `|got − target| ≤ tol`
    #[allow(clippy::too_many_arguments)]
    fn close(&mut self, d: usize, id: &str, loc: &'static str, expected: &str, target: f64, got: f64, tol: f64) {
        let err = (got - target).abs();
        self.push(
            d,
            id,
            loc,
            expected.into(),
            Computed::Real(got),
            err,
            tol,
            err <= tol,
            false,
        );
    }

    /// Matrix distance to a reference, expected to vanish.
    fn matches(&mut self, d: usize, id: &str, loc: &'static str, expected: &str, dist: f64, tol: f64) {
        self.push(
            d,
            id,
            loc,
            expected.into(),
            Computed::Real(dist),
            dist,
            tol,
            dist <= tol,
            false,
        );
    }

    #[allow(clippy::too_many_arguments)]
    fn close_rel(&mut self, d: usize, id: &str, loc: &'static str, expected: &str, target: C64, got: C64, tol: f64) {
        let err = (got - target).norm() / target.norm();
        self.push(
            d,
            id,
            loc,
            expected.into(),
            Computed::Complex([got.re, got.im]),
            err,
            tol,
            err <= tol,
            false,
        );
    }

    fn at_most(&mut self, d: usize, id: &str, loc: &'static str, got: f64, bound: f64) {
        let excess = (got - bound).max(0.0);
        self.push(
            d,
            id,
            loc,
            format!("≤ {bound:e}"),
            Computed::Real(got),
            excess,
            bound,
            got <= bound,
            false,
        );
    }

    fn at_least(&mut self, d: usize, id: &str, loc: &'static str, got: f64, bound: f64) {
        let excess = (bound - got).max(0.0);
        self.push(
            d,
            id,
            loc,
            format!("≥ {bound:e}"),
            Computed::Real(got),
            excess,
            bound,
            got >= bound,
            false,
        );
    }

    fn count(&mut self, d: usize, id: &str, loc: &'static str, expected: usize, got: usize) {
        let err = expected.abs_diff(got) as f64;
        self.push(
            d,
            id,
            loc,
            expected.to_string(),
            Computed::Count(got),
            err,
            0.0,
            got == expected,
            false,
        );
    }

    fn count_at_least(&mut self, d: usize, id: &str, loc: &'static str, bound: usize, got: usize) {
        let excess = bound.saturating_sub(got) as f64;
        self.push(
            d,
            id,
            loc,
            format!("≥ {bound}"),
            Computed::Count(got),
            excess,
            bound as f64,
            got >= bound,
            false,
        );
    }

    fn note(&mut self, d: usize, id: &str, loc: &'static str, expected: &str, got: f64, pass: bool) {
        self.push(d, id, loc, expected.into(), Computed::Real(got), 0.0, 0.0, pass, true);
    }
}

fn op(name: &str) -> BipartiteOperator {
    catalog(name)
        .unwrap_or_else(|e| panic!("catalog entry {name}: {e}"))
        .operator
}

fn split(g: &[usize]) -> GammaSplit {
    GammaSplit::new(3, g).expect("fixed split")
}

fn min_pt(name: &str) -> f64 {
    is_ppt(&op(name), 0.0)
        .expect("catalog operators are Hermitian")
        .min_pt_eigenvalue
}

type Run = fn(&mut Claims<'_>, &Settings);

const RUNNERS: [Run; CRITERIA as usize] = [
    choi_equality,
    mirror_sums,
    spectrum,
    detection_values,
    ppt_claims,
    zero_family,
    determinants,
    closed_forms,
    block_positivity,
    ces,
    local_unitary,
    mub_validity,
    slice_geometry,
    local_decomposition_round_trip,
];

pub const TITLES: [&str; CRITERIA as usize] = [
    "Choi equality",
    "mirror sums",
    "spectrum",
    "detection values",
    "PPT claims",
    "zero family",
    "determinant certificates",
    "closed-form families",
    "block positivity and mirror μ",
    "CES evidence",
    "local unitary equivalence",
    "MUB validity",
    "slice geometry",
    "local decomposition round trip",
];

pub fn run_criterion(criterion: u8, scope: Scope, settings: &Settings) -> Vec<ReproduceRecord> {
    assert!(
        (1..=CRITERIA).contains(&criterion),
        "criteria are numbered 1..={CRITERIA}"
    );
    let mut out = Vec::new();
    let mut c = Claims {
        scope,
        criterion,
        out: &mut out,
    };
    RUNNERS[criterion as usize - 1](&mut c, settings);
    out
}

pub fn run(scope: Scope, settings: &Settings) -> Vec<ReproduceRecord> {
    (1..=CRITERIA).flat_map(|n| run_criterion(n, scope, settings)).collect()
}

pub fn all_pass(records: &[ReproduceRecord]) -> bool {
    records.iter().filter(|r| !r.informational).all(|r| r.pass)
}

/// 0 when every non-informational record passes, 1 otherwise.
pub fn exit_code(records: &[ReproduceRecord]) -> i32 {
    if all_pass(records) {
        0
    } else {
        1
    }
}

fn choi_equality(c: &mut Claims<'_>, _: &Settings) {
    if !c.wants(3) {
        return;
    }
    let loc = "printed Γ = {1,2} witness and its mirror";
    let g = split(&[1, 2]);
    let w = witness_gamma(&g).expect("d = 3 split");
    c.matches(
        3,
        "choi.W_gamma_12",
        loc,
        "printed 9×9 matrix",
        w.max_abs_diff(&op("W_gamma_12")),
        1e-12,
    );
    let wc = witness_gamma(&g.complement_split()).expect("d = 3 split");
    c.matches(
        3,
        "choi.W_gamma_34",
        loc,
        "printed 9×9 matrix",
        wc.max_abs_diff(&op("W_gamma_34")),
        1e-12,
    );
    for (gamma, p) in table1() {
        let id = format!("choi.circulant_{}{}", gamma[0], gamma[1]);
        let from_map = witness_gamma(&split(&gamma)).expect("d = 3 split");
        let d = circulant_witness(&p).max_abs_diff(&from_map);
        c.matches(
            3,
            &id,
            "circulant table",
            "circulant form = Choi construction",
            d,
            1e-12,
        );
    }
    // the printed matrices carry an overall factor d relative to Σ|k⟩⟨l| ⊗ Φ(|k⟩⟨l|)
    let literal = choi(3, |x| phi_gamma_apply(&g, &qutrit_mubs(), x)).expect("d = 3 map");
    let d = literal.scale(3.0).max_abs_diff(&op("W_gamma_12"));
    c.note(3, "choi.scale", loc, "printed = 3 × literal Choi matrix", d, d <= 1e-12);
}

fn mirror_sums(c: &mut Claims<'_>, _: &Settings) {
    if c.wants(3) {
        let four = BipartiteOperator::identity(3, 3).scale(4.0);
        for (g, gc) in complementary_splits() {
            let s = &witness_gamma(&g).expect("split") + &witness_gamma(&gc).expect("split");
            let id = format!("mirror.{}+{}", g.label(), gc.label());
            c.matches(3, &id, "complementary splits", "4·𝟙₉", s.max_abs_diff(&four), 1e-12);
        }
    }
    if c.wants(5) {
        let eight = BipartiteOperator::identity(5, 5).scale(8.0);
        let loc = "printed κ matrices";
        c.matches(
            5,
            "mirror.W1+W2",
            loc,
            "8·𝟙₂₅",
            (&op("W1_d5") + &op("W2_d5")).max_abs_diff(&eight),
            1e-12,
        );
        c.matches(
            5,
            "mirror.W3+W4",
            loc,
            "8·𝟙₂₅",
            (&op("W3_d5") + &op("W4_d5")).max_abs_diff(&eight),
            1e-12,
        );
    }
}

const SPECTRUM: [f64; 9] = [5.0, 5.0, 5.0, 5.0, 2.0, -1.0, -1.0, -1.0, -1.0];

fn spectrum(c: &mut Claims<'_>, _: &Settings) {
    if !c.wants(3) {
        return;
    }
    for (gamma, p) in table1() {
        let ev = eigvals_hermitian(circulant_witness(&p).matrix()).expect("Hermitian");
        let dev = ev.iter().zip(SPECTRUM).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        let tag = format!("{}{}", gamma[0], gamma[1]);
        c.matches(
            3,
            &format!("spectrum.{tag}"),
            "circulant table",
            "{5,5,5,5,2,−1,−1,−1,−1}",
            dev,
            1e-9,
        );
        let neg = ev.iter().filter(|&&l| l < -1e-10).count();
        c.count(3, &format!("spectrum.{tag}.n_negative"), "circulant table", 4, neg);
    }
}

fn detection_values(c: &mut Claims<'_>, _: &Settings) {
    let det = |w: &str, r: &str| ew_core::certify::detect(&op(w), &op(r)).expect("Hermitian");
    if c.wants(3) {
        let loc = "qutrit detection values";
        c.close(
            3,
            "detect.W_gamma_rho_gamma",
            loc,
            "−2/5",
            -0.4,
            det("W_gamma_12", "rho_gamma"),
            1e-12,
        );
        c.close(
            3,
            "detect.W_gamma_c_rho_gamma_c",
            loc,
            "−2/5",
            -0.4,
            det("W_gamma_34", "rho_gamma_c"),
            1e-12,
        );
        c.close(
            3,
            "detect.W_gamma_rho3",
            loc,
            "−1",
            -1.0,
            det("W_gamma_12", "rho3_d3"),
            1e-12,
        );
        c.close(
            3,
            "detect.W_gamma_c_rho4",
            loc,
            "−1",
            -1.0,
            det("W_gamma_34", "rho4_d3"),
            1e-12,
        );
    }
    if c.wants(5) {
        let loc = "d = 5 detection values";
        let t = -8.0 / 13.0;
        for (w, r) in [("W1_d5", "rho1_d5"), ("W2_d5", "rho2_d5"), ("W4_d5", "rho4_d5")] {
            c.close(5, &format!("detect.{w}_{r}"), loc, "−8/13", t, det(w, r), 1e-12);
        }
        c.close(
            5,
            "detect.W3_d5_rho3_d5_corrected",
            loc,
            "−8/13 (corrected ρ₃)",
            t,
            det("W3_d5", "rho3_d5_corrected"),
            1e-12,
        );
        let printed = det("W3_d5", "rho3_d5");
        c.note(
            5,
            "detect.W3_d5_rho3_d5_as_printed",
            loc,
            "−8/13 (known erratum)",
            printed,
            (printed - t).abs() <= 1e-12,
        );
        let tr = op("rho3_d5").trace().re;
        c.note(
            5,
            "rho3_d5.trace_as_printed",
            loc,
            "1 (known erratum: 9/13 as printed)",
            tr,
            (tr - 1.0).abs() <= 1e-12,
        );
    }
}

fn ppt_claims(c: &mut Claims<'_>, _: &Settings) {
    if c.wants(3) {
        let loc = "qutrit PPT claims";
        for n in ["rho_gamma", "rho_gamma_c"] {
            c.at_least(3, &format!("ppt.{n}"), loc, min_pt(n), -1e-10);
        }
        for n in ["rho3_d3", "rho4_d3"] {
            c.at_most(3, &format!("npt.{n}"), loc, min_pt(n), -1e-3);
        }
    }
    if c.wants(5) {
        let loc = "d = 5 PPT claims";
        c.at_least(5, "ppt.rho1_d5", loc, min_pt("rho1_d5"), -1e-10);
        c.at_most(5, "npt.rho2_d5", loc, min_pt("rho2_d5"), -1e-6);
        c.at_most(5, "npt.rho4_d5", loc, min_pt("rho4_d5"), -1e-6);
        for n in ["rho3_d5", "rho3_d5_corrected"] {
            let m = min_pt(n);
            c.note(5, &format!("pt_status.{n}"), loc, "reported", m, true);
        }
    }
}

fn zero_family(c: &mut Claims<'_>, _: &Settings) {
    if !c.wants(3) {
        return;
    }
    let worst = |w: &BipartiteOperator, fam: Vec<ew_core::certify::ZeroPair>| {
        fam.into_iter()
            .map(|p| {
                let v = p
                    .alpha
                    .normalized()
                    .expect("nonzero")
                    .kron(&p.beta.normalized().expect("nonzero"));
                w.expectation(v.as_slice()).abs()
            })
            .fold(0.0, f64::max)
    };
    let loc = "qutrit zero family";
    c.at_most(
        3,
        "zero.W_gamma",
        loc,
        worst(&op("W_gamma_12"), zero_family_d3()),
        1e-12,
    );
    c.at_most(
        3,
        "zero.W_gamma_c_rotated",
        loc,
        worst(&op("W_gamma_34"), rotated_zero_family_d3()),
        1e-10,
    );
}

fn determinants(c: &mut Claims<'_>, _: &Settings) {
    if !c.wants(3) {
        return;
    }
    let loc = "coordinate matrices R₁, R₂";
    let r = span_report(&op("W_gamma_12"), &zero_family_d3()).expect("nine pairs");
    let s3 = 3f64.sqrt();
    let det1 = C64::new(3.0 * s3 / 16.0, 0.0) * C64::new(3.0, 1.25);
    let det2 = C64::new(-27.0 * s3 / 8.0, 0.0);
    let nan = C64::new(f64::NAN, f64::NAN);
    c.close_rel(
        3,
        "det.R1",
        loc,
        "(3√3/16)(3+5i/4)",
        det1,
        r.det_direct.unwrap_or(nan),
        1e-9,
    );
    c.close_rel(3, "det.R2", loc, "−27√3/8", det2, r.det_conjugate.unwrap_or(nan), 1e-9);
    c.count(3, "rank.R1", loc, 9, r.rank_direct);
    c.count(3, "rank.R2", loc, 9, r.rank_conjugate);
    let rr = span_report(&op("W_gamma_34"), &rotated_zero_family_d3()).expect("nine pairs");
    c.count(3, "rank.rotated_direct", loc, 9, rr.rank_direct);
    c.count(3, "rank.rotated_conjugate", loc, 9, rr.rank_conjugate);
}

fn closed_forms(c: &mut Claims<'_>, _: &Settings) {
    if !c.wants(3) {
        return;
    }
    let w = op("W_gamma_12");
    let mut worst: f64 = 0.0;
    for i in 0..50 {
        for j in 0..50 {
            let r = 2.0 * i as f64 / 49.0;
            let phi = 2.0 * PI * j as f64 / 49.0;
            let (a, b) = xi_family(r, phi);
            let expect = 8.0 * r * r * (r - phi.cos()).powi(2);
            worst = worst.max((raw_product_expectation(&w, &a, &b) - expect).abs());
        }
    }
    c.at_most(3, "closed_form.xi", "ξ(r, φ) family", worst, 1e-10);
    let mut worst: f64 = 0.0;
    for i in 0..100 {
        let mu = 2.0 * PI * i as f64 / 99.0;
        let (a, b) = mu_family(mu);
        worst = worst.max((raw_product_expectation(&w, &a, &b) - 4.0 * (1.0 - (3.0 * mu).cos())).abs());
    }
    c.at_most(3, "closed_form.mu", "μ family", worst, 1e-10);
    let zeros = (0..3)
        .map(|n| {
            let (a, b) = mu_family(2.0 * PI * n as f64 / 3.0);
            raw_product_expectation(&w, &a, &b).abs()
        })
        .fold(0.0, f64::max);
    c.at_most(3, "closed_form.mu_zeros", "μ family", zeros, 1e-10);
}

fn random_hermitian(rng: &mut ChaCha8Rng, n: usize) -> CMatrix {
    let m = CMatrix::from_fn(n, n, |_, _| {
        C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    });
    (&m + &m.adjoint()).scale(0.5)
}

fn block_positivity(c: &mut Claims<'_>, s: &Settings) {
    if !c.wants(3) {
        return;
    }
    let loc = "product numerical range of W_Γ";
    let w = op("W_gamma_12");
    let lo = par_seesaw(&w, Extremum::Min, &s.seesaw).expect("see-saw");
    c.at_least(3, "seesaw.min_W_gamma", loc, lo.value, -1e-8);
    c.at_most(3, "seesaw.min_W_gamma_attained", loc, lo.value.abs(), 1e-8);
    let hi = par_seesaw(&w, Extremum::Max, &s.seesaw).expect("see-saw");
    c.at_least(3, "seesaw.max_W_gamma_lower", loc, hi.value, 4.0 - 1e-6);
    c.at_most(3, "seesaw.max_W_gamma_upper", loc, hi.value, 4.0 + 1e-9);

    let mut rng = ChaCha8Rng::seed_from_u64(s.seesaw.seed);
    let mut worst: f64 = 0.0;
    for _ in 0..10 {
        let w = BipartiteOperator::square(3, random_hermitian(&mut rng, 9)).expect("9×9");
        let mu = rng.gen_range(0.5..3.0);
        let partner = ew_core::witnesses::mirror_partner(&w, mu);
        let pmin = par_seesaw(&partner, Extremum::Min, &s.seesaw).expect("see-saw").value;
        let wmax = par_seesaw(&w, Extremum::Max, &s.seesaw).expect("see-saw").value;
        worst = worst.max((pmin - (mu - wmax)).abs());
    }
    c.at_most(
        3,
        "mirror.identity_random",
        "mirror identity on random operators",
        worst,
        1e-9,
    );
}

fn ces(c: &mut Claims<'_>, s: &Settings) {
    if !c.wants(3) {
        return;
    }
    let loc = "negative eigenspace of W_Γ";
    let neg = negative_eigenspace(&op("W_gamma_12")).expect("Hermitian");
    c.count(3, "ces.dimension", loc, 4, neg.len());
    let bell: Vec<_> = [(0, 1), (0, 2), (1, 0), (2, 0)]
        .iter()
        .map(|&(k, l)| bell_state(3, k, l))
        .collect();
    let dist = subspace_projector(&neg)
        .expect("orthonormal")
        .max_abs_diff(&subspace_projector(&bell).expect("orthonormal"));
    c.matches(3, "ces.bell_span", loc, "span{Ω₀₁, Ω₀₂, Ω₁₀, Ω₂₀}", dist, 1e-10);
    let e = ces_evidence_with(&neg, 3, 3, searcher(s.seesaw)).expect("see-saw");
    c.at_most(3, "ces.max_overlap", loc, e.max_product_overlap, 1.0 - 1e-3);
    let one = ces_evidence_with(&[bell_state(3, 1, 2)], 3, 3, searcher(s.seesaw)).expect("see-saw");
    c.close(
        3,
        "ces.single_bell_overlap",
        "single Bell state",
        "1/3",
        1.0 / 3.0,
        one.max_product_overlap,
        1e-6,
    );
}

fn local_unitary(c: &mut Claims<'_>, _: &Settings) {
    if !c.wants(3) {
        return;
    }
    let loc = "printed local unitary U";
    let u = local_unitary_u();
    c.matches(
        3,
        "unitary.U",
        loc,
        "UU† = 𝟙",
        u.matmul(&u.adjoint()).max_abs_diff(&CMatrix::identity(3)),
        1e-12,
    );
    let rotated = op("W_gamma_12").local_conjugate(&u, &u.conj()).expect("3×3 factors");
    c.matches(
        3,
        "unitary.W_gamma_to_W_gamma_c",
        loc,
        "(U⊗U*) W_Γ (U⊗U*)† = W_Γc",
        rotated.max_abs_diff(&op("W_gamma_34")),
        1e-10,
    );
}

fn mub_validity(c: &mut Claims<'_>, _: &Settings) {
    let loc = "mutually unbiased bases";
    if c.wants(3) {
        let r = verify_mub(&qutrit_mubs());
        c.at_most(
            3,
            "mub.printed_d3.orthonormal",
            loc,
            r.max_orthonormality_violation,
            1e-12,
        );
        c.at_most(3, "mub.printed_d3.unbiased", loc, r.max_unbiasedness_violation, 1e-12);
    }
    for d in [3, 5, 7, 11] {
        if !c.wants(d) {
            continue;
        }
        let r = verify_mub(&build_mubs(d).expect("odd prime"));
        c.at_most(
            d,
            &format!("mub.constructed_d{d}.orthonormal"),
            loc,
            r.max_orthonormality_violation,
            1e-12,
        );
        c.at_most(
            d,
            &format!("mub.constructed_d{d}.unbiased"),
            loc,
            r.max_unbiasedness_violation,
            1e-12,
        );
    }
}

pub fn slice_grid(rho_a: &str, rho_b: &str, witnesses: &[&str], steps: usize) -> SliceGrid {
    let (ra, rb) = (op(rho_a), op(rho_b));
    let ws: Vec<_> = witnesses.iter().map(|n| (n.to_string(), op(n))).collect();
    let ctx = SliceContext::new(&ra, &rb, &ws).expect("matching dimensions");
    let spec = GridSpec::symmetric_bounding(&ra, &rb, steps, 0.02).expect("state region");
    par_scan_slice(&spec, &ctx).expect("Hermitian slice")
}

/// Largest `|min_ppt_eig(i,j) − min_ppt_eig(j,i)|` over state nodes.
fn ppt_eig_asymmetry(g: &SliceGrid) -> f64 {
    let n = g.spec.steps;
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in 0..i {
            let (p, q) = (g.point(i, j), g.point(j, i));
            if p.is_state || q.is_state {
                worst = worst.max((p.min_ppt_eig - q.min_ppt_eig).abs());
            }
        }
    }
    worst
}

fn affine_defect(g: &SliceGrid, rho_a: &str, rho_b: &str, witnesses: &[&str]) -> f64 {
    let (ra, rb) = (op(rho_a), op(rho_b));
    let mut worst: f64 = 0.0;
    for (k, w) in witnesses.iter().enumerate() {
        let w = op(w);
        let f = |a: f64, b: f64| {
            ew_core::certify::detect(&w, &slice_state(a, b, &ra, &rb).expect("slice")).expect("Hermitian")
        };
        let (f00, f10, f01) = (f(0.0, 0.0), f(1.0, 0.0), f(0.0, 1.0));
        for p in &g.points {
            let lin = f00 + p.alpha * (f10 - f00) + p.beta * (f01 - f00);
            worst = worst.max((p.witness_values[k] - lin).abs());
        }
    }
    worst
}

fn slice_geometry(c: &mut Claims<'_>, s: &Settings) {
    if c.wants(3) {
        let loc = "qutrit (α, β) slice";
        let ws = ["W_gamma_12", "W_gamma_34"];
        let g = slice_grid("rho_gamma", "rho_gamma_c", &ws, s.d3_grid);
        c.count(3, "slice.d3.ppt_label_asymmetries", loc, 0, g.ppt_asymmetries().len());
        c.at_most(3, "slice.d3.ppt_eig_asymmetry", loc, ppt_eig_asymmetry(&g), 1e-8);
        c.at_most(
            3,
            "slice.d3.affine",
            loc,
            affine_defect(&g, "rho_gamma", "rho_gamma_c", &ws),
            1e-12,
        );
    }
    if c.wants(5) {
        let loc = "d = 5 (α, β) slices";
        let g = slice_grid("rho1_d5", "rho2_d5", &["W1_d5", "W2_d5"], s.d5_grid);
        c.count_at_least(5, "slice.rho1_rho2.asymmetric_pairs", loc, 1, g.ppt_asymmetries().len());
        c.at_most(
            5,
            "slice.rho1_rho2.affine",
            loc,
            affine_defect(&g, "rho1_d5", "rho2_d5", &["W1_d5", "W2_d5"]),
            1e-12,
        );
        let g = slice_grid("rho1_d5", "rho3_d5_corrected", &["W1_d5", "W3_d5"], s.d5_grid);
        c.count(
            5,
            "slice.rho1_rho3_corrected.ppt_label_asymmetries",
            loc,
            0,
            g.ppt_asymmetries().len(),
        );
        c.at_most(
            5,
            "slice.rho1_rho3_corrected.ppt_eig_asymmetry",
            loc,
            ppt_eig_asymmetry(&g),
            1e-8,
        );
        let g = slice_grid("rho1_d5", "rho4_d5", &["W1_d5", "W4_d5"], s.d5_grid);
        let asym = g.ppt_asymmetries().len();
        c.note(
            5,
            "slice.rho1_rho4.ppt_label_asymmetries",
            loc,
            "0 (observed)",
            asym as f64,
            asym == 0,
        );
    }
}

fn local_decomposition_round_trip(c: &mut Claims<'_>, _: &Settings) {
    if !c.wants(3) {
        return;
    }
    let loc = "local operator expansion of W_Γ";
    let w = op("W_gamma_12");
    let t = local_decomposition(&w).expect("square factors");
    c.at_most(3, "local.reconstruction", loc, t.reconstruct().max_abs_diff(&w), 1e-10);
    c.at_most(3, "local.coefficients_real", loc, t.max_imag, 1e-12);
}

/// Tab-separated table with a header row.
pub fn to_tsv(records: &[ReproduceRecord]) -> String {
    let mut s = String::from("criterion\tclaim_id\tstatus\texpected\tcomputed\terror\ttolerance\tlocation\n");
    for r in records {
        let status = match (r.informational, r.pass) {
            (true, _) => "info",
            (false, true) => "pass",
            (false, false) => "FAIL",
        };
        s.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{:.3e}\t{:e}\t{}\n",
            r.criterion, r.claim_id, status, r.expected, r.computed, r.error, r.tolerance, r.location
        ));
    }
    s
}
