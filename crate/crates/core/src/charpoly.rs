//! Characteristic polynomials `χ_G = det(tI - C̃_G)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::MarkedGraph;
use crate::group::Edge;
use crate::matrix::{NormalForm, PolyMatrix};
use crate::poly::berkowitz::berkowitz;
use crate::poly::{Assignment, MPoly, Substitution, TPoly};
use crate::union_find::UnionFind;

/// Division-free characteristic polynomial; monic of degree `dim`.
pub fn charpoly(m: &PolyMatrix) -> TPoly {
    let mut coeffs = berkowitz(m.entries(), m.nvars());
    coeffs.reverse();
    TPoly::from_coeffs(m.nvars(), coeffs)
}

/// `χ_G` of a connected graph. Fails if a coefficient keeps a
/// half-integer exponent.
pub fn graph_charpoly(nf: &NormalForm, g: &MarkedGraph) -> Result<TPoly> {
    let chi = charpoly(&nf.build_matrix(g)?);
    if !chi.has_integer_exponents() {
        return Err(Error::HalfIntegerExponent);
    }
    Ok(chi)
}

/// Closed form `t² - ℓ̄(ξ) t - σ_ℓ c(ℓ)²` for the graph `{(0,+1), (ℓ, σ_ℓ)}`.
pub fn charpoly_one_edge(nf: &NormalForm, edge: &Edge) -> Result<TPoly> {
    let lbar = nf.edge_diag(edge)?;
    let c = nf.edge_coeff(edge)?;
    let c2 = &c * &c;
    let free = if edge.sigma() > 0 { -c2 } else { c2 };
    Ok(TPoly::from_coeffs(nf.m(), vec![free, -lbar, MPoly::one(nf.m())]))
}

/// Both sides of the deletion identity
/// `χ_G|_{ξ_i=0} = Π_j χ_{A_j}|_{ξ_i=0}`, where the `A_j` are the
/// components left after deleting every edge whose marking involves `i`.
#[derive(Clone, Debug, Serialize)]
pub struct DeletionReport {
    pub variable: usize,
    pub lhs: TPoly,
    pub rhs: TPoly,
    pub components: Vec<Vec<usize>>,
    pub holds: bool,
}

pub fn verify_deletion_factorization(
    nf: &NormalForm,
    g: &MarkedGraph,
    i: usize,
) -> Result<DeletionReport> {
    if i >= g.m() {
        return Err(Error::VariableOutOfRange { index: i, nvars: g.m() });
    }
    let mut zero = Assignment::new();
    zero.insert(i, Substitution::zero());
    let full = nf.build_matrix(g)?;
    let lhs = charpoly(&full).specialize(&zero)?;

    let mut uf = UnionFind::new(g.len());
    for e in g.edges() {
        if e.edge.n[i] == 0 {
            uf.union(e.i, e.j);
        }
    }
    let components = uf.groups();
    let reduced = full.map_entries(|p| p.specialize(&zero))?;
    let mut rhs = TPoly::one(g.m());
    for idx in &components {
        rhs = &rhs * &charpoly(&reduced.submatrix(idx));
    }
    let holds = lhs == rhs;
    Ok(DeletionReport { variable: i, lhs, rhs, components, holds })
}
