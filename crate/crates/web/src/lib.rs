//! Browser bindings. The `*_json` functions carry the logic and run natively;
//! the exported wrappers only convert errors for JavaScript.

use serde_json::json;
use spectral_torsion::boundary_residue::{boundary_report, XiNRational};
use spectral_torsion::cli::parse_params;
use spectral_torsion::fiber_algebra::Params;
use spectral_torsion::interior_residue::{one_form_report, sanity_report, torsion_report};
use spectral_torsion::report::{ReportDocument, ResidueReport};
use spectral_torsion::verification_oracle::{select, summarize};
use spectral_torsion::{ParamScalar, Result};
use wasm_bindgen::prelude::*;

/// The page runs on the main thread; keep oracle runs short.
pub const MAX_TRIALS: usize = 25;

fn report(functional: &str, params: Params) -> Result<ResidueReport> {
    match functional {
        "torsion" => torsion_report(params),
        "one-form" => one_form_report(params),
        "boundary" => boundary_report(params),
        "sanity" => sanity_report(params),
        other => Err(spectral_torsion::EngineError::UnknownFunctional(other.to_string())),
    }
}

/// Report for one functional at numeric `a0, b0` (or `symbolic`).
pub fn derive_json(functional: &str, a0: &str, b0: &str) -> std::result::Result<String, String> {
    let params = parse_params(Some(a0.trim()), Some(b0.trim())).map_err(|e| e.to_string())?;
    let mut doc = ReportDocument::new(&format!("derive {functional} --a0 {} --b0 {}", params.a0, params.b0));
    doc.residues.push(report(functional, params).map_err(|e| e.to_string())?);
    Ok(doc.to_json())
}

/// Oracle summaries for the tags under `prefix`, run one after another.
pub fn verify_json(prefix: &str, trials: usize, seed: u64) -> std::result::Result<String, String> {
    let trials = trials.clamp(1, MAX_TRIALS);
    let tags = select(prefix.trim()).map_err(|e| e.to_string())?;
    let out: Vec<_> = tags.iter().map(|t| summarize(t, trials, seed)).collect();
    serde_json::to_string_pretty(&out).map_err(|e| e.to_string())
}

/// `π⁺` and `∫_ℝ · / π` of `N(t) / ((t − i)^p (t + i)^q)`, with `N` given as
/// comma-separated coefficients, constant term first.
pub fn project_json(numerator: &str, p: u32, q: u32) -> std::result::Result<String, String> {
    if p + q == 0 || p + q > 12 {
        return Err("need 1 <= p + q <= 12".into());
    }
    let coeffs = numerator
        .split(',')
        .map(|s| ParamScalar::parse(s.trim()))
        .collect::<Result<Vec<_>>>()
        .map_err(|e| e.to_string())?;
    let f = XiNRational::from_fraction(ParamScalar::zero(), &coeffs, p, q);
    let integral = match f.integrate_real() {
        Ok(v) => v.to_text(),
        Err(e) => format!("not integrable: {e}"),
    };
    Ok(serde_json::to_string_pretty(&json!({
        "input": f.to_text(),
        "pi_plus": f.pi_plus().to_text(),
        "integral_over_pi": integral,
    }))
    .expect("json value"))
}

#[wasm_bindgen]
pub fn derive(functional: &str, a0: &str, b0: &str) -> std::result::Result<String, JsError> {
    derive_json(functional, a0, b0).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn verify(prefix: &str, trials: usize, seed: u32) -> std::result::Result<String, JsError> {
    verify_json(prefix, trials, seed as u64).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn project(numerator: &str, p: u32, q: u32) -> std::result::Result<String, JsError> {
    project_json(numerator, p, q).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn tags() -> String {
    spectral_torsion::verification_oracle::tag_names().join("\n")
}
