//! Browser bindings: counts for one family, asymptotic constants, and a
//! growth curve comparing exact counts with their asymptotic estimate.
//!
//! Every function returns a JSON string; big integers are decimal strings.

use num_bigint::BigInt;
use serde::Serialize;
use wasm_bindgen::prelude::*;

use kgonal::asymptotics::{self, OmegaEvaluator};
use kgonal::{family_counts, labelled_counts, unlabelled_counts, BTable, Family, GonalParams};

// keeps a page request from freezing the tab
const MAX_ORDER: usize = 400;

fn check_order(order: usize) -> Result<(), String> {
    if order > MAX_ORDER {
        return Err(format!("order is limited to {MAX_ORDER} in the browser"));
    }
    Ok(())
}

pub fn counts_json(k: u32, family: &str, order: usize) -> Result<String, String> {
    check_order(order)?;
    let family: Family = family.parse().map_err(|e: kgonal::Error| e.to_string())?;
    let params = GonalParams::new(k).map_err(|e| e.to_string())?;
    let values = if family.is_labelled() {
        labelled_counts(params, family, order)
    } else {
        BTable::compute(params, order).and_then(|t| family_counts(&t, family))
    }
    .map_err(|e| e.to_string())?;
    let strings: Vec<String> = values.iter().map(BigInt::to_string).collect();
    Ok(serde_json::to_string(&strings).expect("serializable"))
}

pub fn constants_json(p: u32, series_order: usize) -> Result<String, String> {
    check_order(series_order)?;
    if p == 0 || series_order < 16 {
        return Err("need p >= 1 and series order >= 16".into());
    }
    let table = BTable::compute(GonalParams::new(p + 1).map_err(|e| e.to_string())?, series_order)
        .map_err(|e| e.to_string())?;
    let omega = OmegaEvaluator::new(&table);
    let sol = asymptotics::solve_xi(&omega, 1e-15).map_err(|e| e.to_string())?;
    let ext = asymptotics::oriented_amplitude(&table, sol.xi, series_order);
    let report = asymptotics::constants(&omega, sol, Some(ext)).map_err(|e| e.to_string())?;
    Ok(serde_json::to_string(&report).expect("serializable"))
}

#[derive(Serialize)]
struct GrowthPoint {
    n: usize,
    log10_count: f64,
    /// `a_n` divided by `alpha_bar/2 beta^n n^{-5/2}`.
    ratio: f64,
}

/// Unlabelled counts against `a_n ~ alpha_bar / 2 * beta^n * n^{-5/2}`.
pub fn growth_json(k: u32, order: usize) -> Result<String, String> {
    check_order(order)?;
    if order < 16 {
        return Err("order must be at least 16".into());
    }
    let params = GonalParams::new(k).map_err(|e| e.to_string())?;
    let table = BTable::compute(params, order).map_err(|e| e.to_string())?;
    let a = unlabelled_counts(&table).map_err(|e| e.to_string())?;
    let omega = OmegaEvaluator::new(&table);
    let sol = asymptotics::solve_xi(&omega, 1e-15).map_err(|e| e.to_string())?;
    let report = asymptotics::constants(&omega, sol, None).map_err(|e| e.to_string())?;
    let ln_amp = (report.alpha_bar / 2.0).ln();
    let points: Vec<GrowthPoint> = (1..=order)
        .map(|n| {
            let ln_a = asymptotics::big_ln(&a[n]);
            let nf = n as f64;
            let ln_est = ln_amp + nf * report.beta.ln() - 2.5 * nf.ln();
            GrowthPoint {
                n,
                log10_count: ln_a / std::f64::consts::LN_10,
                ratio: (ln_a - ln_est).exp(),
            }
        })
        .collect();
    Ok(serde_json::to_string(&points).expect("serializable"))
}

#[wasm_bindgen]
pub fn counts(k: u32, family: &str, order: usize) -> Result<String, JsValue> {
    counts_json(k, family, order).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn constants(p: u32, series_order: usize) -> Result<String, JsValue> {
    constants_json(p, series_order).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn growth(k: u32, order: usize) -> Result<String, JsValue> {
    growth_json(k, order).map_err(|e| JsValue::from_str(&e))
}
