//! Browser bindings: each export takes plain arguments and returns a JSON
//! string for the page in `www/`.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use nfblocks::certify::{irreducible, run_suite, Evidence, SuiteOptions, Verdict, DEFAULT_BUDGET};
use nfblocks::charpoly::graph_charpoly;
use nfblocks::geometry::{geo_graph, genericity_check, search_generic_sites, GenericityReport, Point, Sites};
use nfblocks::{Edge, MarkedGraph, NormalForm, PolyMatrix};

const CENSUS_GRAPH_CAP: usize = 2_000;

#[derive(Serialize)]
struct OneEdge {
    edge: String,
    color: &'static str,
    matrix: PolyMatrix,
    chi: String,
    verdict: Verdict,
    evidence: Evidence,
}

pub fn one_edge_json(spec: &str, q: u32) -> Result<String, String> {
    let edge = Edge::parse(spec, q).map_err(|e| e.to_string())?;
    let g = MarkedGraph::one_edge(&edge, q).map_err(|e| e.to_string())?;
    let nf = NormalForm::new(q, edge.m()).map_err(|e| e.to_string())?;
    let matrix = nf.build_matrix(&g).map_err(|e| e.to_string())?;
    let chi = graph_charpoly(&nf, &g).map_err(|e| e.to_string())?;
    let cert = irreducible(&chi, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    let out = OneEdge {
        edge: edge.to_string(),
        color: if edge.sigma() > 0 { "black" } else { "red" },
        matrix,
        chi: chi.to_string(),
        verdict: cert.verdict,
        evidence: cert.evidence,
    };
    serde_json::to_string(&out).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct CensusRow {
    dimension: usize,
    vertices: usize,
    chi: String,
    verdict: Verdict,
}

#[derive(Serialize)]
struct Census {
    rows: Vec<CensusRow>,
    pairs: usize,
    non_separated: usize,
    incomplete: bool,
    status: String,
}

pub fn census_json(q: u32, m: usize, max_dim: usize) -> Result<String, String> {
    let opts = SuiteOptions { max_graphs: CENSUS_GRAPH_CAP, ..Default::default() };
    let r = run_suite(q, m, max_dim, &opts).map_err(|e| e.to_string())?;
    let rows = r
        .graphs
        .iter()
        .map(|g| CensusRow {
            dimension: g.dimension,
            vertices: g.canonical.as_ref().map_or(0, |c| c.len()),
            chi: g.chi.clone(),
            verdict: g.verdict,
        })
        .collect();
    let out = Census {
        rows,
        pairs: r.summary.pairs,
        non_separated: r.summary.non_separated,
        incomplete: r.incomplete,
        status: format!("{:?}", r.status()),
    };
    serde_json::to_string(&out).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct DrawEdge {
    h: Point,
    k: Point,
    color: &'static str,
    label: String,
}

#[derive(Serialize)]
struct Picture {
    sites: Sites,
    radius: i64,
    edges: Vec<DrawEdge>,
    boundary: Vec<Point>,
    report: GenericityReport,
}

/// The geometric graph of `sites_json`, or of freshly searched generic
/// sites (`n = 2`, three sites) when `sites_json` is blank.
pub fn geometry_json(sites_json: &str, q: u32, r: i64, seed: u64) -> Result<String, String> {
    let sites: Sites = if sites_json.trim().is_empty() {
        let spread = (r / 2).max(1);
        search_generic_sites(2, 3, q, r, spread, seed, 5_000)
            .map_err(|e| e.to_string())?
            .ok_or("no generic sites found; try another seed")?
            .sites
    } else {
        serde_json::from_str(sites_json).map_err(|e| e.to_string())?
    };
    if sites.n != 2 {
        return Err("the picture needs planar sites (n = 2)".into());
    }
    let g = geo_graph(&sites, q, r).map_err(|e| e.to_string())?;
    let report = genericity_check(&sites, q, r).map_err(|e| e.to_string())?;
    let edges = g
        .edges
        .iter()
        .map(|e| DrawEdge {
            h: e.h.clone(),
            k: e.k.clone(),
            color: if e.edge.sigma() > 0 { "black" } else { "red" },
            label: e.edge.to_string(),
        })
        .collect();
    let out = Picture { sites, radius: r, edges, boundary: g.boundary, report };
    serde_json::to_string(&out).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn one_edge(spec: &str, q: u32) -> Result<String, JsValue> {
    one_edge_json(spec, q).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn census(q: u32, m: usize, max_dim: usize) -> Result<String, JsValue> {
    census_json(q, m, max_dim).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn geometry(sites_json: &str, q: u32, r: i32, seed: u32) -> Result<String, JsValue> {
    geometry_json(sites_json, q, i64::from(r), u64::from(seed)).map_err(|e| JsValue::from_str(&e))
}
