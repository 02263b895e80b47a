//! The finite verification run: enumerate canonical connected graphs around
//! `(0,+1)`, compute their characteristic polynomials, certify each one and
//! check every pair for separation.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use super::{irreducible_with, separated, Certificate, Evidence, SeparationFlags, Verdict};
use crate::charpoly::graph_charpoly;
use crate::error::Result;
use crate::graph::MarkedGraph;
use crate::group::{enumerate_edges, GElem};
use crate::matrix::NormalForm;
use crate::poly::{MPoly, TPoly};

#[derive(Clone, Debug, Serialize)]
pub struct SuiteOptions {
    pub budget: usize,
    pub seed: Option<u64>,
    /// Cap on enumerated graphs; exceeding it marks the report incomplete.
    pub max_graphs: usize,
    /// Cap on checked pairs; exceeding it marks the report incomplete.
    pub max_pairs: usize,
    pub check_pairs: bool,
    /// Appends the reducible fixture `t² - x1²` as a negative control.
    pub planted_reducible: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            budget: super::DEFAULT_BUDGET,
            seed: None,
            max_graphs: 100_000,
            max_pairs: 5_000_000,
            check_pairs: true,
            planted_reducible: false,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteParams {
    pub q: u32,
    pub m: usize,
    pub max_dimension: usize,
    #[serde(flatten)]
    pub options: SuiteOptions,
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphEntry {
    pub index: usize,
    pub label: String,
    pub canonical: Option<MarkedGraph>,
    pub dimension: usize,
    pub chi: String,
    pub chi_coeffs: TPoly,
    pub verdict: Verdict,
    pub evidence: Evidence,
}

#[derive(Clone, Debug, Serialize)]
pub struct PairEntry {
    pub i: usize,
    pub j: usize,
    pub separated: bool,
    pub flags: SeparationFlags,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SuiteSummary {
    pub graphs: usize,
    pub irreducible: usize,
    pub reducible: usize,
    pub unknown: usize,
    pub pairs: usize,
    pub non_separated: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub params: SuiteParams,
    pub graphs: Vec<GraphEntry>,
    pub pairs: Vec<PairEntry>,
    pub incomplete: bool,
    /// Some verdict is `Unknown`; this alone does not fail the run.
    pub unknown_warning: bool,
    pub summary: SuiteSummary,
    pub counterexamples: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SuiteStatus {
    Certified,
    MathFailure,
    Incomplete,
}

impl SuiteStatus {
    pub fn exit_code(self) -> i32 {
        match self {
            SuiteStatus::Certified => 0,
            SuiteStatus::MathFailure => 2,
            SuiteStatus::Incomplete => 3,
        }
    }
}

impl SuiteReport {
    pub fn status(&self) -> SuiteStatus {
        if self.summary.reducible > 0 || self.summary.non_separated > 0 {
            SuiteStatus::MathFailure
        } else if self.incomplete {
            SuiteStatus::Incomplete
        } else {
            SuiteStatus::Certified
        }
    }
}

/// Canonical connected graphs containing `(0,+1)` with at most
/// `max_dimension + 1` vertices, ordered by size then vertex list. The flag
/// reports truncation at `max_graphs`.
pub fn enumerate_graphs(
    q: u32,
    m: usize,
    max_dimension: usize,
    max_graphs: usize,
) -> Result<(Vec<MarkedGraph>, bool)> {
    let gens: Vec<GElem> = enumerate_edges(q, m)?.iter().map(|e| e.generator()).collect();
    let mut all = vec![MarkedGraph::single_vertex(m, q)];
    let mut level = all.clone();
    let mut truncated = false;
    for _ in 0..max_dimension {
        let found: BTreeSet<Vec<GElem>> = level
            .par_iter()
            .flat_map_iter(|g| {
                let gens = &gens;
                g.vertices().iter().flat_map(move |x| {
                    gens.iter().filter_map(move |s| {
                        let y = s.mul(x).ok()?;
                        if g.vertices().contains(&y) {
                            return None;
                        }
                        let mut vs = g.vertices().to_vec();
                        vs.push(y);
                        let grown = MarkedGraph::complete(m, q, vs).ok()?;
                        Some(grown.canonicalize().ok()?.vertices().to_vec())
                    })
                })
            })
            .collect();
        let room = max_graphs.saturating_sub(all.len());
        if found.len() > room {
            truncated = true;
        }
        level = found
            .into_iter()
            .take(room)
            .map(|vs| MarkedGraph::complete(m, q, vs))
            .collect::<Result<_>>()?;
        all.extend(level.iter().cloned());
        if truncated || level.is_empty() {
            break;
        }
    }
    Ok((all, truncated))
}

/// Enumerates, certifies and pairs up the graphs of one `(q, m)`.
pub fn run_suite(q: u32, m: usize, max_dimension: usize, options: &SuiteOptions) -> Result<SuiteReport> {
    let (graphs, truncated) = enumerate_graphs(q, m, max_dimension, options.max_graphs)?;
    let labeled = graphs.into_iter().map(|g| (format!("dim{}", g.dimension()), g)).collect();
    let mut report = certify_graphs(q, m, labeled, options)?;
    report.params.max_dimension = max_dimension;
    report.incomplete |= truncated;
    Ok(report)
}

/// Certifies given graphs of one `(q, m)`. Graphs sharing a canonical form
/// are certified once, under the first label.
pub fn certify_graphs(
    q: u32,
    m: usize,
    graphs: Vec<(String, MarkedGraph)>,
    options: &SuiteOptions,
) -> Result<SuiteReport> {
    let nf = NormalForm::new(q, m)?;
    let mut seen = BTreeSet::new();
    let mut unique = Vec::new();
    for (label, g) in graphs {
        let c = g.canonicalize()?;
        if seen.insert(c.vertices().to_vec()) {
            unique.push((label, c));
        }
    }

    let computed: Vec<(String, Option<MarkedGraph>, TPoly, Certificate)> = unique
        .into_par_iter()
        .map(|(label, g)| {
            let chi = graph_charpoly(&nf, &g)?;
            let cert = irreducible_with(&chi, options.budget, options.seed)?;
            Ok((label, Some(g), chi, cert))
        })
        .collect::<Result<_>>()?;
    let mut computed = computed;
    if options.planted_reducible {
        let x1 = MPoly::var(m, 0);
        let chi = TPoly::from_coeffs(m, vec![-&(&x1 * &x1), MPoly::zero(m), MPoly::one(m)]);
        let cert = irreducible_with(&chi, options.budget, options.seed)?;
        computed.push(("planted-reducible".into(), None, chi, cert));
    }

    let mut summary = SuiteSummary { graphs: computed.len(), ..Default::default() };
    let mut counterexamples = Vec::new();
    let entries: Vec<GraphEntry> = computed
        .into_iter()
        .enumerate()
        .map(|(index, (label, canonical, chi, cert))| {
            match cert.verdict {
                Verdict::Irreducible => summary.irreducible += 1,
                Verdict::Reducible => {
                    summary.reducible += 1;
                    counterexamples.push(format!("graph {index} ({label}): reducible {chi}"));
                }
                Verdict::Unknown => summary.unknown += 1,
            }
            GraphEntry {
                index,
                label,
                dimension: canonical.as_ref().map_or(chi.degree().unwrap_or(1) - 1, |g| g.dimension()),
                canonical,
                chi: chi.to_string(),
                chi_coeffs: chi,
                verdict: cert.verdict,
                evidence: cert.evidence,
            }
        })
        .collect();

    let mut incomplete = false;
    let mut pairs = Vec::new();
    if options.check_pairs {
        let mut idx: Vec<(usize, usize)> = Vec::new();
        'outer: for i in 0..entries.len() {
            for j in i + 1..entries.len() {
                if idx.len() == options.max_pairs {
                    incomplete = true;
                    break 'outer;
                }
                idx.push((i, j));
            }
        }
        pairs = idx
            .into_par_iter()
            .map(|(i, j)| {
                let r = separated(&entries[i].chi_coeffs, &entries[j].chi_coeffs)?;
                Ok(PairEntry { i, j, separated: r.separated, flags: r.flags })
            })
            .collect::<Result<Vec<_>>>()?;
        summary.pairs = pairs.len();
        for p in &pairs {
            if !p.separated {
                summary.non_separated += 1;
                counterexamples.push(format!("pair ({}, {}) not separated: {:?}", p.i, p.j, p.flags));
            }
        }
    }

    Ok(SuiteReport {
        params: SuiteParams { q, m, max_dimension: 0, options: options.clone() },
        unknown_warning: summary.unknown > 0,
        graphs: entries,
        pairs,
        incomplete,
        summary,
        counterexamples,
    })
}
