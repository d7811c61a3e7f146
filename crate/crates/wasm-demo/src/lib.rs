//! Three operations for the static page in `www/`: hitting sets on a random
//! forest, template classification, and a simulated LOCAL ruling set.
//!
//! Each export returns a JSON string. The plain functions underneath are
//! what the native tests call.

use serde_json::json;
use wasm_bindgen::prelude::*;

use hitset_core::graph::{gen_path, gen_random_forest, gen_random_total, FunctionalGraph};
use hitset_core::hitting::{greedy_hitting, verify_hitting_set};
use hitset_core::hom::ErgodicPlan;
use hitset_core::local::{members_of, run, AlgorithmId, IdAssignment, Network};
use hitset_core::{Digraph, TemplateClass};

/// Upper limit on graph sizes accepted from the page.
pub const MAX_N: usize = 200_000;

fn graph(kind: &str, n: usize, seed: u64) -> Result<FunctionalGraph, String> {
    if n == 0 || n > MAX_N {
        return Err(format!("n must be between 1 and {MAX_N}"));
    }
    match kind {
        "path" => Ok(gen_path(n)),
        "forest" => Ok(gen_random_forest(n, seed)),
        "total" => Ok(gen_random_total(n, seed)),
        _ => Err(format!("unknown graph kind {kind:?}")),
    }
}

pub fn hitting_set_json(kind: &str, n: usize, r: usize, seed: u64) -> Result<String, String> {
    let g = graph(kind, n, seed)?;
    let h = greedy_hitting(&g, r).map_err(|e| e.to_string())?;
    let rep = verify_hitting_set(&g, &h);
    let succ: Vec<Option<usize>> = (0..g.len()).map(|x| g.succ(x)).collect();
    Ok(json!({
        "succ": succ,
        "members": h.members,
        "horizon": h.horizon,
        "valid": rep.valid,
    })
    .to_string())
}

pub fn classify_json(template: &str) -> Result<String, String> {
    let h = Digraph::from_json(template).map_err(|e| e.to_string())?;
    let class = h.classify().map_err(|e| e.to_string())?;
    let ell0 = match class {
        TemplateClass::ErgodicNoLoop => Some(ErgodicPlan::new(&h).map_err(|e| e.to_string())?.ell0),
        _ => None,
    };
    Ok(json!({ "class": class, "ell0": ell0, "edges": h.edge_count() }).to_string())
}

pub fn ruling_set_json(n: usize, r: usize, seed: u64) -> Result<String, String> {
    if n == 0 || n > MAX_N {
        return Err(format!("n must be between 1 and {MAX_N}"));
    }
    let net = Network::path(n, IdAssignment::Random, seed).map_err(|e| e.to_string())?;
    let trace = run(&AlgorithmId::RulingSet { r }, &net, 1_000_000, None).map_err(|e| e.to_string())?;
    let members = members_of(&trace);
    let gaps: Vec<usize> = members.windows(2).map(|w| w[1] - w[0]).collect();
    Ok(json!({
        "rounds": trace.rounds,
        "members": members,
        "min_gap": gaps.iter().min(),
        "max_gap": gaps.iter().max(),
    })
    .to_string())
}

#[wasm_bindgen]
pub fn hitting_set(kind: &str, n: usize, r: usize, seed: u32) -> Result<String, JsError> {
    hitting_set_json(kind, n, r, seed.into()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn classify(template: &str) -> Result<String, JsError> {
    classify_json(template).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn ruling_set(n: usize, r: usize, seed: u32) -> Result<String, JsError> {
    ruling_set_json(n, r, seed.into()).map_err(|e| JsError::new(&e))
}
