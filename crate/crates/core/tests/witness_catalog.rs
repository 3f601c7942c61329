use ew_core::certify::{detect, is_ppt};
use ew_core::linops::eigvals_hermitian;
use ew_core::simplex::{bell_decode, bell_encode, in_enclosure};
use ew_core::witnesses::{
    c_d3, c_tilde_d3, catalog, choi, circulant_witness, complementary_splits, flip, local_unitary_u, mirror_partner,
    phi_gamma_apply, reduction_witness, table1, w_d3, w_tilde_d3, witness_gamma, GammaSplit,
};
use ew_core::{BipartiteOperator, CMatrix, Subsystem, C64};

fn op(name: &str) -> BipartiteOperator {
    catalog(name).unwrap().operator
}

const SPECTRUM: [f64; 9] = [5.0, 5.0, 5.0, 5.0, 2.0, -1.0, -1.0, -1.0, -1.0];

#[test]
fn choi_matches_tabulated_pair() {
    let g = GammaSplit::new(3, &[1, 2]).unwrap();
    assert!(witness_gamma(&g).unwrap().max_abs_diff(&op("W_gamma_12")) <= 1e-12);
    assert!(
        witness_gamma(&g.complement_split())
            .unwrap()
            .max_abs_diff(&op("W_gamma_34"))
            <= 1e-12
    );
}

#[test]
fn tabulated_entries_spot_check() {
    let w = op("W_gamma_12");
    // 1-based (1,5), (1,9), (2,6) of the printed matrix
    assert_eq!(w.get(0, 4), C64::new(1.0, 0.0));
    assert_eq!(w.get(0, 8), C64::new(1.0, 0.0));
    assert_eq!(w.get(1, 5), C64::new(-2.0, 0.0));
    let wc = op("W_gamma_34");
    let diag: Vec<f64> = (0..9).map(|i| wc.get(i, i).re).collect();
    assert_eq!(diag, vec![4.0, 1.0, 1.0, 1.0, 4.0, 1.0, 1.0, 1.0, 4.0]);
}

#[test]
fn literal_choi_is_a_third_of_the_table() {
    let g = GammaSplit::new(3, &[1, 2]).unwrap();
    let mubs = ew_core::mub::qutrit_mubs();
    let c = choi(3, |x| phi_gamma_apply(&g, &mubs, x)).unwrap();
    assert!(c.scale(3.0).max_abs_diff(&op("W_gamma_12")) <= 1e-12);
}

#[test]
fn every_circulant_row_equals_its_choi_witness() {
    for (gamma, p) in table1() {
        let from_table = circulant_witness(&p);
        let from_map = witness_gamma(&GammaSplit::new(3, &gamma).unwrap()).unwrap();
        assert!(from_table.max_abs_diff(&from_map) <= 1e-12, "Γ = {gamma:?}");
        let name = format!("W_gamma_{}{}", gamma[0], gamma[1]);
        assert!(op(&name).max_abs_diff(&from_map) <= 1e-12, "{name}");
    }
}

#[test]
fn isospectral_with_saturated_negative_count() {
    for (gamma, p) in table1() {
        let ev = eigvals_hermitian(circulant_witness(&p).matrix()).unwrap();
        for (a, b) in ev.iter().zip(SPECTRUM) {
            assert!((a - b).abs() <= 1e-9, "Γ = {gamma:?}: {ev:?}");
        }
        assert_eq!(ev.iter().filter(|&&l| l < -1e-10).count(), 4);
    }
}

#[test]
fn mirrored_sums() {
    for (g, gc) in complementary_splits() {
        let s = &witness_gamma(&g).unwrap() + &witness_gamma(&gc).unwrap();
        assert!(s.max_abs_diff(&BipartiteOperator::identity(3, 3).scale(4.0)) <= 1e-12);
        assert!(mirror_partner(&witness_gamma(&g).unwrap(), 4.0).max_abs_diff(&witness_gamma(&gc).unwrap()) <= 1e-12);
    }
    let eight = BipartiteOperator::identity(5, 5).scale(8.0);
    assert!((&op("W1_d5") + &op("W2_d5")).max_abs_diff(&eight) <= 1e-12);
    assert!((&op("W3_d5") + &op("W4_d5")).max_abs_diff(&eight) <= 1e-12);
    assert!(mirror_partner(&op("W1_d5"), 8.0).max_abs_diff(&op("W2_d5")) <= 1e-12);
}

#[test]
fn detection_values_d3() {
    assert!((detect(&op("W_gamma_12"), &op("rho_gamma")).unwrap() + 0.4).abs() <= 1e-12);
    assert!((detect(&op("W_gamma_34"), &op("rho_gamma_c")).unwrap() + 0.4).abs() <= 1e-12);
    assert!((detect(&op("W_gamma_12"), &op("rho3_d3")).unwrap() + 1.0).abs() <= 1e-12);
    assert!((detect(&op("W_gamma_34"), &op("rho4_d3")).unwrap() + 1.0).abs() <= 1e-12);
}

#[test]
fn detection_values_d5() {
    for (w, r) in [
        ("W1_d5", "rho1_d5"),
        ("W2_d5", "rho2_d5"),
        ("W4_d5", "rho4_d5"),
        ("W3_d5", "rho3_d5_corrected"),
    ] {
        let v = detect(&op(w), &op(r)).unwrap();
        assert!((v + 8.0 / 13.0).abs() <= 1e-12, "{w} {r}: {v}");
    }
    // the verbatim table gives a different number on an unnormalized operator
    let v = detect(&op("W3_d5"), &op("rho3_d5")).unwrap();
    assert!((v - (4.0 - 8.0) / 13.0).abs() <= 1e-12);
}

#[test]
fn bell_route_matches_matrix_route() {
    assert!(bell_encode(&w_d3()).max_abs_diff(&op("W_gamma_12")) <= 1e-12);
    assert!(bell_encode(&w_tilde_d3()).max_abs_diff(&op("W_gamma_34")) <= 1e-12);
    assert!(bell_encode(&c_d3()).max_abs_diff(&op("rho_gamma")) <= 1e-12);
    assert!(bell_encode(&c_tilde_d3()).max_abs_diff(&op("rho_gamma_c")) <= 1e-12);
    let dec = bell_decode(&op("rho_gamma")).unwrap();
    assert!(dec.residual <= 1e-12);
    for (a, b) in dec.coeffs.as_slice().iter().zip(c_d3().as_slice()) {
        assert!((a - b).abs() <= 1e-12);
    }
    assert!(in_enclosure(&dec.coeffs).unwrap());
}

#[test]
fn rho3_d3_is_bell_mixture() {
    let c = catalog("rho3_d3").unwrap().bell.unwrap();
    let expect = [0.0, 0.25, 0.25, 0.25, 0.0, 0.0, 0.25, 0.0, 0.0];
    assert_eq!(c.as_slice(), &expect);
}

#[test]
fn local_unitary_equivalence() {
    let u = local_unitary_u();
    assert!(u.matmul(&u.adjoint()).max_abs_diff(&CMatrix::identity(3)) <= 1e-12);
    let rotated = op("W_gamma_12").local_conjugate(&u, &u.conj()).unwrap();
    assert!(rotated.max_abs_diff(&op("W_gamma_34")) <= 1e-10);
}

#[test]
fn ppt_claims_d3() {
    for n in ["rho_gamma", "rho_gamma_c"] {
        let r = is_ppt(&op(n), 1e-10).unwrap();
        assert!(r.ppt, "{n}: {}", r.min_pt_eigenvalue);
        assert!(eigvals_hermitian(op(n).matrix()).unwrap()[8] >= -1e-12);
    }
    for n in ["rho3_d3", "rho4_d3"] {
        assert!(is_ppt(&op(n), 1e-10).unwrap().min_pt_eigenvalue < -1e-3, "{n}");
    }
    let pt = op("rho_gamma").partial_transpose(Subsystem::B);
    assert!(pt.partial_transpose(Subsystem::B).max_abs_diff(&op("rho_gamma")) == 0.0);
}

/// What the d = 5 tables actually give under the partial transpose.
#[test]
fn ppt_status_d5_observed() {
    let min = |n: &str| is_ppt(&op(n), 1e-10).unwrap().min_pt_eigenvalue;
    assert!(min("rho1_d5") >= -1e-10);
    assert!(min("rho2_d5") < -1e-6);
    assert!(min("rho3_d5_corrected") < -1e-6);
    assert!(min("rho4_d5") >= -1e-10);
}

#[test]
fn reference_witnesses() {
    let f = flip(3);
    let pt = f.partial_transpose(Subsystem::B);
    let p00 = ew_core::simplex::bell_projector(3, 0, 0);
    assert!(pt.max_abs_diff(&p00.scale(3.0)) <= 1e-12);
    let ev = eigvals_hermitian(reduction_witness(3).matrix()).unwrap();
    assert!((ev[8] + 2.0).abs() <= 1e-12);
    assert!(ev[..8].iter().all(|l| (l - 1.0).abs() <= 1e-12));
}
