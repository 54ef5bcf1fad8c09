use spectral_torsion::report::ReportDocument;
use spectral_torsion_web::{derive_json, project_json, verify_json};

#[test]
fn derive_returns_a_report() {
    let doc = ReportDocument::from_json(&derive_json("sanity", "1", "1").unwrap()).unwrap();
    assert_eq!(doc.residues[0].derived.to_text(), "32 * pi^2");
    assert!(derive_json("sanity", "0", "1").is_err());
    assert!(derive_json("curvature", "1", "1").is_err());
}

#[test]
fn verify_caps_trials() {
    let v: serde_json::Value = serde_json::from_str(&verify_json("clifford/c-c", 1000, 7).unwrap()).unwrap();
    assert_eq!(v[0]["trials"], 25);
    assert_eq!(v[0]["matches"], 25);
    assert!(verify_json("nope", 3, 7).is_err());
}

#[test]
fn projection_of_the_symmetric_pole() {
    let v: serde_json::Value = serde_json::from_str(&project_json("1", 1, 1).unwrap()).unwrap();
    assert_eq!(v["integral_over_pi"], "1");
    assert!(v["pi_plus"].as_str().unwrap().contains("xn - i"), "{}", v["pi_plus"]);
    assert!(project_json("1", 0, 0).is_err());
    assert!(project_json("1,", 1, 1).is_err());
}
