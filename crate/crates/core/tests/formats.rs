//! Wire formats consumed by other tools: permutation, witness and patch JSON.

use fuchsian_tiles::criterion::{construct_sigma, Certificate, TessellationType};
use fuchsian_tiles::hgeom::{Isometry, Polygon};
use fuchsian_tiles::perm::Permutation;
use fuchsian_tiles::tess::{generate_patch, reference_patch, EdgePairing};
use proptest::prelude::*;
use serde_json::Value;

#[test]
fn witness_fields_in_fixed_order() {
    let t = TessellationType::new(7, 3).unwrap();
    let w = construct_sigma(7, 3).unwrap();
    let s = serde_json::to_string(&Certificate::new(t, Some(&w))).unwrap();
    let keys: Vec<&str> = [
        "\"p\"",
        "\"q\"",
        "\"realizable\"",
        "\"m\"",
        "\"sigma\"",
        "\"sigma_cycles\"",
        "\"sigma_rho_cycles\"",
    ]
    .to_vec();
    let positions: Vec<usize> = keys.iter().map(|k| s.find(k).unwrap()).collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]), "{s}");
    let v: Value = serde_json::from_str(&s).unwrap();
    let sigma: Permutation = serde_json::from_value(v["sigma"].clone()).unwrap();
    assert_eq!(sigma, w.sigma);
}

#[test]
fn patch_json_schema() {
    let w = construct_sigma(4, 2).unwrap();
    let ep = EdgePairing::new(Polygon::regular(4, 6).unwrap(), w.sigma).unwrap();
    let patch = generate_patch(&ep, 2).unwrap();
    let v: Value = serde_json::to_value(&patch).unwrap();
    let obj = v.as_object().unwrap();
    assert_eq!(obj.keys().collect::<Vec<_>>(), ["depth", "p", "q", "tiles"]);
    let tiles = v["tiles"].as_array().unwrap();
    assert_eq!(tiles.len(), patch.len());
    let mut last: Option<(u64, Vec<u64>)> = None;
    for t in tiles {
        let center = t["center"].as_array().unwrap();
        assert_eq!(center.len(), 2);
        let (re, im) = (center[0].as_f64().unwrap(), center[1].as_f64().unwrap());
        assert!(re * re + im * im < 1.0);
        let key = (
            t["depth"].as_u64().unwrap(),
            t["word"]
                .as_array()
                .unwrap()
                .iter()
                .map(|x| x.as_u64().unwrap())
                .collect::<Vec<_>>(),
        );
        if let Some(prev) = &last {
            assert!(prev < &key);
        }
        last = Some(key);
    }
}

#[test]
fn patch_floats_use_seventeen_digits() {
    let s = serde_json::to_string(&reference_patch(5, 4, 1).unwrap()).unwrap();
    let v: Value = serde_json::from_str(&s).unwrap();
    let re = v["tiles"][1]["center"][0].as_f64().unwrap();
    let literal = format!("{re:.16e}");
    assert!(s.contains(&literal), "{literal} not in output");
}

#[test]
fn isometry_json_round_trips_the_action() {
    let g = Isometry::rotation_about(Polygon::regular(5, 4).unwrap().vertex(3), 2.0);
    let v: Value = serde_json::to_value(g).unwrap();
    let pair =
        |k: &str| num_complex::Complex64::new(v[k][0].as_f64().unwrap(), v[k][1].as_f64().unwrap());
    let back = Isometry::from_coefficients(pair("alpha"), pair("beta")).unwrap();
    assert!(back.approx_eq(&g));
    assert!(pair("alpha").re >= 0.0);
}

proptest! {
    #[test]
    fn permutation_json_round_trip(v in (1usize..=12).prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())) {
        let x = Permutation::new(v).unwrap();
        let s = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<Permutation>(&s).unwrap(), x);
    }
}
