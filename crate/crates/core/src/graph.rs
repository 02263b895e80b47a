//! Complete colored marked graphs: finite vertex sets in `Z^m ⋊ Z/2` with
//! all `X_q` adjacencies between them.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{adjacency, enumerate_edges, Edge, GElem};
use crate::union_find::UnionFind;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct MarkedGraph {
    m: usize,
    q: u32,
    vertices: Vec<GElem>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct GraphJson {
    m: usize,
    q: u32,
    vertices: Vec<GElem>,
}

impl TryFrom<GraphJson> for MarkedGraph {
    type Error = Error;

    fn try_from(g: GraphJson) -> Result<Self> {
        for v in &g.vertices {
            if v.sigma != 1 && v.sigma != -1 {
                return Err(Error::Parse(format!("sigma must be +1 or -1, got {}", v.sigma)));
            }
        }
        MarkedGraph::complete(g.m, g.q, g.vertices)
    }
}

impl From<MarkedGraph> for GraphJson {
    fn from(g: MarkedGraph) -> Self {
        GraphJson { m: g.m, q: g.q, vertices: g.vertices }
    }
}

/// An adjacency between vertex indices `i < j`, with `vertices[j] = ℓ·vertices[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphEdge {
    pub i: usize,
    pub j: usize,
    pub edge: Edge,
}

impl MarkedGraph {
    /// The complete marked graph on `vertices`, kept in the given order.
    pub fn complete(m: usize, q: u32, vertices: Vec<GElem>) -> Result<Self> {
        if q == 0 {
            return Err(Error::InvalidQ);
        }
        if vertices.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let mut seen = BTreeSet::new();
        for v in &vertices {
            if v.a.len() != m {
                return Err(Error::LengthMismatch { expected: m, got: v.a.len() });
            }
            if !seen.insert(v) {
                return Err(Error::DuplicateVertex);
            }
        }
        Ok(MarkedGraph { m, q, vertices })
    }

    pub fn single_vertex(m: usize, q: u32) -> Self {
        MarkedGraph { m, q, vertices: vec![GElem::identity(m)] }
    }

    /// The graph `{(0,+1), (ℓ, σ_ℓ)}`.
    pub fn one_edge(edge: &Edge, q: u32) -> Result<Self> {
        let m = edge.m();
        Self::complete(m, q, vec![GElem::identity(m), edge.generator()])
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn vertices(&self) -> &[GElem] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Vertex count minus one.
    pub fn dimension(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn edges(&self) -> Vec<GraphEdge> {
        let mut out = Vec::new();
        for i in 0..self.vertices.len() {
            for j in i + 1..self.vertices.len() {
                if let Some(edge) = adjacency(&self.vertices[i], &self.vertices[j], self.q) {
                    out.push(GraphEdge { i, j, edge });
                }
            }
        }
        out
    }

    /// Vertex index groups of the connected components.
    pub fn component_indices(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.vertices.len());
        for e in self.edges() {
            uf.union(e.i, e.j);
        }
        uf.groups()
    }

    pub fn components(&self) -> Vec<MarkedGraph> {
        self.component_indices()
            .into_iter()
            .map(|idx| MarkedGraph {
                m: self.m,
                q: self.q,
                vertices: idx.into_iter().map(|i| self.vertices[i].clone()).collect(),
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.component_indices().len() == 1
    }

    /// Right-multiplies every vertex by `t`; adjacency markings are preserved.
    pub fn translate(&self, t: &GElem) -> Result<Self> {
        let vertices = self.vertices.iter().map(|v| v.mul(t)).collect::<Result<Vec<_>>>()?;
        Ok(MarkedGraph { m: self.m, q: self.q, vertices })
    }

    /// Renames coordinates: old index `i` becomes `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        MarkedGraph {
            m: self.m,
            q: self.q,
            vertices: self.vertices.iter().map(|v| v.permute(perm)).collect(),
        }
    }

    /// Orbit representative under right translations (which include the
    /// sign flip `τ`) and coordinate permutations.
    ///
    /// For every choice of root the graph is translated so that the root
    /// becomes `(0,+1)`, which is listed first. Coordinates are then ordered by a
    /// permutation-invariant column signature, and the remaining freedom
    /// (columns sharing a signature) is searched exhaustively. The result is
    /// the lexicographically smallest vertex list found, with the vertices
    /// after the root in sorted order.
    pub fn canonicalize(&self) -> Result<Self> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut best: Option<Vec<GElem>> = None;
        for root in &self.vertices {
            let t = root.inv();
            let moved: Vec<GElem> =
                self.vertices.iter().map(|v| v.mul(&t)).collect::<Result<_>>()?;
            for cand in column_arrangements(&moved, self.m) {
                if best.as_ref().map_or(true, |b| cand < *b) {
                    best = Some(cand);
                }
            }
        }
        Ok(MarkedGraph { m: self.m, q: self.q, vertices: best.expect("nonempty graph") })
    }

    /// Vertices sorted, for order-independent comparison.
    pub fn sorted(&self) -> Self {
        let mut vertices = self.vertices.clone();
        vertices.sort();
        MarkedGraph { m: self.m, q: self.q, vertices }
    }

    /// Random connected graph containing `(0,+1)`, grown by left
    /// multiplication with random generators.
    pub fn random_connected<R: Rng>(m: usize, q: u32, size: usize, rng: &mut R) -> Result<Self> {
        let gens = enumerate_edges(q, m)?;
        let mut vertices = vec![GElem::identity(m)];
        let mut seen: BTreeSet<GElem> = vertices.iter().cloned().collect();
        let mut attempts = 0;
        while vertices.len() < size && attempts < 1000 * size {
            attempts += 1;
            let x = vertices.choose(rng).expect("nonempty").clone();
            let e = gens.choose(rng).expect("nonempty");
            let y = e.generator().mul(&x)?;
            if seen.insert(y.clone()) {
                vertices.push(y);
            }
        }
        Self::complete(m, q, vertices)
    }
}

/// Sorted vertex lists for all signature-respecting coordinate orders.
fn column_arrangements(vertices: &[GElem], m: usize) -> Vec<Vec<GElem>> {
    let column = |j: usize| -> Vec<i64> { vertices.iter().map(|v| v.a[j]).collect() };
    let signature = |j: usize| -> Vec<(i8, i64)> {
        let mut s: Vec<(i8, i64)> = vertices.iter().map(|v| (v.sigma, v.a[j])).collect();
        s.sort();
        s
    };
    // signature -> sorted list of column vectors (with repetition)
    let mut classes: BTreeMap<Vec<(i8, i64)>, Vec<Vec<i64>>> = BTreeMap::new();
    for j in 0..m {
        classes.entry(signature(j)).or_default().push(column(j));
    }
    let mut class_orders: Vec<Vec<Vec<Vec<i64>>>> = Vec::new();
    for (_, mut cols) in classes {
        cols.sort();
        let mut orders = Vec::new();
        loop {
            orders.push(cols.clone());
            if !next_permutation(&mut cols) {
                break;
            }
        }
        class_orders.push(orders);
    }

    let mut out = Vec::new();
    let mut choice = vec![0usize; class_orders.len()];
    loop {
        let cols: Vec<&Vec<i64>> =
            class_orders.iter().zip(&choice).flat_map(|(o, &c)| o[c].iter()).collect();
        let mut vs: Vec<GElem> = vertices
            .iter()
            .enumerate()
            .map(|(r, v)| GElem { a: cols.iter().map(|c| c[r]).collect(), sigma: v.sigma })
            .collect();
        root_first(&mut vs);
        out.push(vs);
        let mut k = 0;
        loop {
            if k == choice.len() {
                return out;
            }
            choice[k] += 1;
            if choice[k] < class_orders[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// Sorts with the identity moved to the front.
fn root_first(vs: &mut [GElem]) {
    vs.sort();
    if let Some(k) = vs.iter().position(GElem::is_identity) {
        vs[..=k].rotate_right(1);
    }
}

/// Advances to the next lexicographic permutation; `false` at the last one.
fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
