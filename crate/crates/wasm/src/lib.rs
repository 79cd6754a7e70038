//! Browser bindings. Every entry point takes graph text (graph6 or edge list)
//! and returns JSON; the plain `*_json` functions are the same operations
//! without the JavaScript error type, for native callers and tests.

use std::collections::HashMap;

use fpfaut::format::{parse_graph_auto, to_edge_list};
use fpfaut::gen;
use fpfaut::modular::decompose_step;
use fpfaut::reductions::{bipartite_construction, full_reduction, k_subdivision, split_construction};
use fpfaut::{Engine, EngineConfig, Graph, Mode, TraceEntry};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Graphs above this size are refused; the page draws every vertex.
pub const MAX_VERTICES: usize = 400;

fn parse(input: &str) -> Result<Graph, String> {
    let g = parse_graph_auto(input).map_err(|e| e.to_string())?;
    if g.n() > MAX_VERTICES {
        return Err(format!("{} vertices; the demo draws at most {MAX_VERTICES}", g.n()));
    }
    Ok(g)
}

/// Decomposition tree annotated with the engine's per-module tag and decision.
fn tree(g: &Graph, vertices: Vec<usize>, trace: &HashMap<Vec<usize>, &TraceEntry>) -> Result<Value, String> {
    let mut sorted = vertices.clone();
    sorted.sort_unstable();
    let entry = trace.get(&sorted);
    let tag = entry.and_then(|t| t.tag).map(|t| t.name());
    let decision = entry.map(|t| t.decision);
    if vertices.len() == 1 {
        return Ok(json!({ "vertices": sorted, "kind": "vertex", "tag": tag, "decision": decision, "children": [] }));
    }
    let (sub, _) = g.induced_subgraph(&vertices).map_err(|e| e.to_string())?;
    let (kind, partition) = decompose_step(&sub).map_err(|e| e.to_string())?;
    let children = partition
        .parts()
        .iter()
        .map(|part| tree(g, part.iter().map(|&v| vertices[v]).collect(), trace))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(json!({
        "vertices": sorted,
        "kind": format!("{kind:?}").to_lowercase(),
        "tag": tag,
        "decision": decision,
        "children": children,
    }))
}

pub fn solve_json(input: &str, mode: &str, prime_cap: usize) -> Result<String, String> {
    let g = parse(input)?;
    let mode: Mode = mode.parse().map_err(|e: fpfaut::Error| e.to_string())?;
    let r = Engine::new(EngineConfig { prime_cap, trace: true })
        .solve(&g, mode)
        .map_err(|e| e.to_string())?;
    let by_module: HashMap<Vec<usize>, &TraceEntry> = r.trace.iter().map(|t| (t.module.clone(), t)).collect();
    let root = tree(&g, (0..g.n()).collect(), &by_module)?;
    let v = json!({
        "n": g.n(),
        "edges": g.edges().map(|(a, b)| [a, b]).collect::<Vec<_>>(),
        "mode": mode.to_string(),
        "decision": r.decision,
        "witness": r.witness.as_ref().map(|w| w.images().to_vec()),
        "witness_cycles": r.witness.as_ref().map(|w| w.to_string()),
        "tree": root,
    });
    Ok(v.to_string())
}

pub fn random_graph_text(class: &str, n: usize, seed: u32) -> Result<String, String> {
    if n == 0 || n > MAX_VERTICES {
        return Err(format!("n must be between 1 and {MAX_VERTICES}"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed.into());
    let g = match class {
        "cograph" => gen::random_cograph(n, &mut rng),
        "tree-cograph" => gen::random_tree_cograph(n, &mut rng),
        "p4-sparse" => gen::random_p4_sparse(n, &mut rng),
        "tree" => gen::random_tree(n, &mut rng),
        "gnp" => gen::random_graph(n, 0.3, &mut rng),
        other => return Err(format!("unknown graph class {other:?}")),
    };
    Ok(to_edge_list(&g))
}

pub fn reduce_text(input: &str, construction: &str, k: usize) -> Result<String, String> {
    let g = parse(input)?;
    let r = match construction {
        "split" => split_construction(&g),
        "bipartite" => bipartite_construction(&g).map_err(|e| e.to_string())?,
        "subdivide" => k_subdivision(&g, k).map_err(|e| e.to_string())?,
        "full" => full_reduction(&g, k).map_err(|e| e.to_string())?,
        other => return Err(format!("unknown construction {other:?}")),
    };
    if r.graph.n() > MAX_VERTICES {
        return Err(format!(
            "result has {} vertices; the demo draws at most {MAX_VERTICES}",
            r.graph.n()
        ));
    }
    Ok(to_edge_list(&r.graph))
}

/// Decision, witness and annotated decomposition tree as JSON.
#[wasm_bindgen]
pub fn solve(input: &str, mode: &str, prime_cap: usize) -> Result<String, JsError> {
    solve_json(input, mode, prime_cap).map_err(|e| JsError::new(&e))
}

/// Random graph of a named class, as edge-list text.
#[wasm_bindgen]
pub fn random_graph(class: &str, n: usize, seed: u32) -> Result<String, JsError> {
    random_graph_text(class, n, seed).map_err(|e| JsError::new(&e))
}

/// Split, bipartite, subdivision or full reduction of the input, as edge-list text.
#[wasm_bindgen]
pub fn reduce(input: &str, construction: &str, k: usize) -> Result<String, JsError> {
    reduce_text(input, construction, k).map_err(|e| JsError::new(&e))
}
