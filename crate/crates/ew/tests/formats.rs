use ew::io::{operator_from_str, operator_to_string, read_operator, write_operator, BellJson, OperatorJson};
use ew::parallel::{par_scan_slice, par_seesaw};
use ew::slice_csv::{read_slice_csv, write_slice_csv, FIXED_COLUMNS};
use ew_core::certify::{seesaw, Extremum, SeesawConfig};
use ew_core::simplex::{scan_slice, BellCoefficients, GridSpec, SliceContext};
use ew_core::witnesses::{catalog, catalog_names};

#[test]
fn every_catalog_operator_round_trips_bit_identically() {
    for n in catalog_names() {
        let x = catalog(n).unwrap().operator;
        let back = operator_from_str(&operator_to_string(&x)).unwrap();
        let same = x
            .matrix()
            .as_slice()
            .iter()
            .zip(back.matrix().as_slice())
            .all(|(a, b)| a.re.to_bits() == b.re.to_bits() && a.im.to_bits() == b.im.to_bits());
        assert!(same && back.dims() == x.dims(), "{n}");
    }
}

#[test]
fn operator_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("w.json");
    let w = catalog("W_gamma_13").unwrap().operator;
    write_operator(&p, &w).unwrap();
    assert_eq!(read_operator(&p).unwrap(), w);
    let j: OperatorJson = serde_json::from_str(&std::fs::read_to_string(&p).unwrap()).unwrap();
    assert_eq!((j.d_a, j.d_b, j.re.len(), j.im[0].len()), (3, 3, 9, 9));
}

#[test]
fn non_finite_and_ragged_operators_rejected() {
    let ragged = r#"{"dA": 1, "dB": 2, "re": [[1, 0], [0]], "im": [[0, 0], [0, 0]]}"#;
    assert!(operator_from_str(ragged).is_err());
    assert!(operator_from_str(r#"{"dA": 1, "dB": 1, "re": [[1]]}"#).is_err());
}

#[test]
fn bell_json_layout() {
    let c = ew_core::witnesses::c_d3();
    let j = serde_json::to_value(BellJson::from(&c)).unwrap();
    assert_eq!(j["d"], 3);
    assert_eq!(j["coeffs"][0][0].as_f64().unwrap(), 0.2);
    let back: BellCoefficients = serde_json::from_value::<BellJson>(j).unwrap().try_into().unwrap();
    assert_eq!(back, c);
}

fn context() -> (GridSpec, SliceContext) {
    let ra = catalog("rho_gamma").unwrap().operator;
    let rb = catalog("rho_gamma_c").unwrap().operator;
    let ws: Vec<_> = ["W_gamma_12", "W_gamma_34"]
        .iter()
        .map(|n| (n.to_string(), catalog(n).unwrap().operator))
        .collect();
    let ctx = SliceContext::new(&ra, &rb, &ws).unwrap();
    (GridSpec::symmetric_bounding(&ra, &rb, 21, 0.02).unwrap(), ctx)
}

#[test]
fn parallel_scan_matches_sequential() {
    let (spec, ctx) = context();
    let a = par_scan_slice(&spec, &ctx).unwrap();
    let b = scan_slice(&spec, &ctx).unwrap();
    assert_eq!(a.points, b.points);
    assert_eq!(a.witness_names, b.witness_names);
}

#[test]
fn slice_csv_layout_and_read_back() {
    let (spec, ctx) = context();
    let g = par_scan_slice(&spec, &ctx).unwrap();
    let mut buf = Vec::new();
    write_slice_csv(&g, &mut buf).unwrap();
    let text = String::from_utf8(buf.clone()).unwrap();
    let first = text.lines().next().unwrap();
    assert_eq!(
        first,
        "alpha,beta,is_state,min_eig,is_ppt,min_ppt_eig,in_enclosure,W_gamma_12,W_gamma_34"
    );
    assert_eq!(text.lines().count(), 1 + 21 * 21);
    let t = read_slice_csv(buf.as_slice()).unwrap();
    assert_eq!(t.witness_names, g.witness_names);
    assert_eq!(t.points.len(), g.points.len());
    for (p, q) in t.points.iter().zip(&g.points) {
        assert_eq!(
            (p.is_state, p.is_ppt, p.in_enclosure),
            (q.is_state, q.is_ppt, q.in_enclosure)
        );
        assert!((p.alpha - q.alpha).abs() <= 1e-11 * q.alpha.abs().max(1.0));
        assert!((p.witness_values[1] - q.witness_values[1]).abs() <= 1e-11 * q.witness_values[1].abs().max(1.0));
    }
    assert_eq!(FIXED_COLUMNS.len(), 7);
}

#[test]
fn parallel_seesaw_matches_sequential() {
    let w = catalog("W_gamma_14").unwrap().operator;
    let cfg = SeesawConfig {
        restarts: 12,
        seed: 7,
        ..SeesawConfig::default()
    };
    for ext in [Extremum::Min, Extremum::Max] {
        let a = par_seesaw(&w, ext, &cfg).unwrap();
        let b = seesaw(&w, ext, &cfg).unwrap();
        assert_eq!(a.value.to_bits(), b.value.to_bits());
        assert_eq!(a.best_restart, b.best_restart);
        assert_eq!(a.restart_values, b.restart_values);
    }
}
