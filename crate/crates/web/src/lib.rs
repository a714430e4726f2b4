//! Browser bindings for the demo page in `www/`.
//!
//! Every function takes and returns JSON text so the page needs no glue
//! beyond `JSON.parse`. Polynomials may also be typed as comma-separated
//! coefficients, lowest degree first (`1, 0, -1/2`).

use czds::bases::{basis_poly, BasisFamily};
use czds::rational;
use czds::sequences::{diagonal_apply, gamma, SequenceSpec};
use czds::{zero_counts, Poly};
use serde_json::json;
use wasm_bindgen::prelude::*;

fn err(e: impl std::fmt::Display) -> JsError {
    JsError::new(&e.to_string())
}

fn parse_poly(text: &str) -> Result<Poly, JsError> {
    let t = text.trim();
    if t.starts_with('{') {
        return serde_json::from_str(t).map_err(err);
    }
    let coeffs = t
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(rational::parse)
        .collect::<Result<Vec<_>, _>>()
        .map_err(err)?;
    Ok(Poly::new(coeffs))
}

fn parse_family(text: &str) -> Result<BasisFamily, JsError> {
    let family: BasisFamily = serde_json::from_str(text).map_err(err)?;
    family.validate().map_err(err)?;
    Ok(family)
}

/// Degree and real / non-real zero counts, plus the polynomial as text.
#[wasm_bindgen]
pub fn zeros(poly: &str) -> Result<String, JsError> {
    let p = parse_poly(poly)?;
    let counts = serde_json::to_value(zero_counts(&p)).map_err(err)?;
    Ok(json!({ "poly": p.to_string(), "coeffs": p, "counts": counts }).to_string())
}

/// `b_0..b_n` of a family, as text and as coefficient lists for plotting.
#[wasm_bindgen]
pub fn basis(family: &str, n: usize) -> Result<String, JsError> {
    let family = parse_family(family)?;
    let polys = (0..=n.min(30))
        .map(|k| {
            let b = basis_poly(&family, k).map_err(err)?;
            Ok(json!({ "text": b.to_string(), "coeffs": b }))
        })
        .collect::<Result<Vec<_>, JsError>>()?;
    Ok(json!({ "basis": family.to_string(), "polys": polys }).to_string())
}

/// Applies the diagonal operator of a sequence in a basis and reports the
/// zero counts before and after.
#[wasm_bindgen]
pub fn diagonal(spec: &str, family: &str, poly: &str) -> Result<String, JsError> {
    let spec: SequenceSpec = serde_json::from_str(spec).map_err(err)?;
    let family = parse_family(family)?;
    let p = parse_poly(poly)?;
    let out = diagonal_apply(&spec, &family, &p).map_err(err)?;
    let gammas: Vec<String> = (0..=p.degree().unwrap_or(0))
        .map(|k| rational::to_string(&gamma(&spec, k)))
        .collect();
    Ok(json!({
        "input": p.to_string(),
        "output": out.to_string(),
        "output_coeffs": out,
        "gammas": gammas,
        "before": zero_counts(&p),
        "after": zero_counts(&out),
    })
    .to_string())
}
