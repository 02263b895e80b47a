//! Tangential sites, the momentum map and the geometric graph `Γ_S` on
//! lattice points of a bounded box.
//!
//! The group acts on `Z^n` by `(a, σ)·k = -π(a) + σk`. A black edge joins
//! `h` to `k = ℓ·h = h - π(ℓ)` when `Σ ℓ_j |v_j|² + |k|² - |h|² = 0`; a red
//! edge joins `k` and `h = (ℓ,-1)·k = -π(ℓ) - k` when
//! `Σ ℓ_j |v_j|² + |k|² + |h|² = 0`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::MarkedGraph;
use crate::group::{enumerate_edges, Color, Edge, GElem};
use crate::union_find::UnionFind;

pub type Point = Vec<i64>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SitesJson")]
pub struct Sites {
    pub n: usize,
    pub v: Vec<Point>,
}

#[derive(Deserialize)]
struct SitesJson {
    n: usize,
    v: Vec<Point>,
}

impl TryFrom<SitesJson> for Sites {
    type Error = Error;

    fn try_from(s: SitesJson) -> Result<Self> {
        Sites::new(s.n, s.v)
    }
}

impl Sites {
    pub fn new(n: usize, v: Vec<Point>) -> Result<Self> {
        if v.len() < 2 {
            return Err(Error::InvalidSites("need at least two sites".into()));
        }
        if let Some(bad) = v.iter().find(|p| p.len() != n) {
            return Err(Error::InvalidSites(format!("site {bad:?} is not in Z^{n}")));
        }
        let distinct: BTreeSet<&Point> = v.iter().collect();
        if distinct.len() != v.len() {
            return Err(Error::InvalidSites("sites must be distinct".into()));
        }
        Ok(Sites { n, v })
    }

    pub fn m(&self) -> usize {
        self.v.len()
    }

    pub fn contains(&self, p: &[i64]) -> bool {
        self.v.iter().any(|v| v.as_slice() == p)
    }

    /// Largest coordinate magnitude among the sites.
    pub fn extent(&self) -> i64 {
        self.v.iter().flatten().map(|x| x.abs()).max().unwrap_or(0)
    }

    /// `Σ ℓ_j |v_j|²`.
    pub fn energy(&self, l: &[i64]) -> i64 {
        l.iter().zip(&self.v).map(|(c, v)| c * norm2(v)).sum()
    }
}

fn norm2(p: &[i64]) -> i64 {
    p.iter().map(|x| x * x).sum()
}

fn add(a: &[i64], b: &[i64]) -> Point {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[i64], b: &[i64]) -> Point {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn neg(a: &[i64]) -> Point {
    a.iter().map(|x| -x).collect()
}

fn in_box(p: &[i64], r: i64) -> bool {
    p.iter().all(|x| x.abs() <= r)
}

/// `π(a) = Σ a_i v_i`.
pub fn momentum(a: &[i64], sites: &Sites) -> Result<Point> {
    if a.len() != sites.m() {
        return Err(Error::LengthMismatch { expected: sites.m(), got: a.len() });
    }
    let mut out = vec![0; sites.n];
    for (c, v) in a.iter().zip(&sites.v) {
        for (o, x) in out.iter_mut().zip(v) {
            *o += c * x;
        }
    }
    Ok(out)
}

/// `g·k = -π(a) + σk`.
pub fn act(g: &GElem, k: &[i64], sites: &Sites) -> Result<Point> {
    let p = momentum(&g.a, sites)?;
    Ok(k.iter().zip(&p).map(|(x, y)| i64::from(g.sigma) * x - y).collect())
}

/// Every point of `[-r, r]^n`, lexicographic.
fn box_points(n: usize, r: i64) -> Vec<Point> {
    let mut out = Vec::new();
    let mut cur = vec![-r; n];
    loop {
        out.push(cur.clone());
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < r {
                cur[i] += 1;
                break;
            }
            cur[i] = -r;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairSet {
    /// Black: ordered `(h, k)` with `k = ℓ·h`. Red: unordered, `h ≥ k`.
    pub pairs: Vec<(Point, Point)>,
    /// The full solution set is infinite and only its part in the box is
    /// listed.
    pub truncated: bool,
}

/// `P_ℓ` restricted to normal sites. Black pairs are listed with both points
/// in `[-r, r]^n`; red pairs lie on a sphere and are listed in full.
pub fn pair_set(edge: &Edge, sites: &Sites, r: i64) -> Result<PairSet> {
    let p = momentum(&edge.n, sites)?;
    let e = sites.energy(&edge.n);
    let n = sites.n;
    match edge.color {
        Color::Black => {
            let mut pairs = Vec::new();
            for k in box_points(n, r) {
                let h = add(&k, &p);
                if !in_box(&h, r) || sites.contains(&h) || sites.contains(&k) {
                    continue;
                }
                if e + norm2(&k) - norm2(&h) == 0 {
                    pairs.push((h, k));
                }
            }
            // 2k·p = E - |p|² is a hyperplane, or everything when p = 0.
            let rhs = e - norm2(&p);
            let g = p.iter().fold(0i64, |g, &x| num_integer::gcd(g, 2 * x));
            let truncated = if g == 0 { rhs == 0 } else { n >= 2 && rhs % g == 0 };
            Ok(PairSet { pairs, truncated })
        }
        Color::Red => {
            let s = neg(&p);
            // |2k - s|² = -2E - |s|²
            let r2 = -2 * e - norm2(&s);
            let mut pairs = Vec::new();
            if r2 >= 0 {
                let rad = num_integer::Roots::sqrt(&r2) + 1;
                let lo: Vec<i64> = s.iter().map(|&x| (x - rad).div_euclid(2)).collect();
                let span = rad + 1;
                for off in box_points(n, span) {
                    let k: Point = lo.iter().zip(&off).map(|(l, o)| l + o + span).collect();
                    let two_k_minus_s: Point = k.iter().zip(&s).map(|(x, y)| 2 * x - y).collect();
                    if norm2(&two_k_minus_s) != r2 {
                        continue;
                    }
                    let h = sub(&s, &k);
                    if h < k || sites.contains(&h) || sites.contains(&k) {
                        continue;
                    }
                    if e + norm2(&k) + norm2(&h) == 0 {
                        pairs.push((h, k));
                    }
                }
                pairs.sort();
                pairs.dedup();
            }
            Ok(PairSet { pairs, truncated: false })
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeoEdge {
    pub h: Point,
    pub k: Point,
    /// `k = ℓ·h` for black edges; red edges are involutive.
    pub edge: Edge,
}

#[derive(Clone, Debug, Serialize)]
pub struct GeoGraph {
    pub q: u32,
    pub radius: i64,
    pub sites: Sites,
    pub vertices: Vec<Point>,
    pub edges: Vec<GeoEdge>,
    /// Vertices with an edge partner outside the box.
    pub boundary: Vec<Point>,
    /// Edges whose two ends coincide.
    pub self_loops: Vec<GeoEdge>,
}

/// Builds `Γ_S ∩ [-r, r]^n` for the generators `X_q`.
pub fn geo_graph(sites: &Sites, q: u32, r: i64) -> Result<GeoGraph> {
    if r < sites.extent() || r < 1 {
        return Err(Error::BoxTooSmall(r));
    }
    let vertices: Vec<Point> = box_points(sites.n, r).into_iter().filter(|p| !sites.contains(p)).collect();
    let found: Vec<(Vec<Point>, Vec<(Point, Point, Edge)>)> = enumerate_edges(q, sites.m())?
        .into_par_iter()
        .map(|edge| {
            let p = momentum(&edge.n, sites)?;
            let e = sites.energy(&edge.n);
            let mut outside = Vec::new();
            let mut keys = Vec::new();
            for k in &vertices {
                // The partner of k under this generator.
                let h = match edge.color {
                    Color::Black => add(k, &p),
                    Color::Red => sub(&neg(&p), k),
                };
                let ok = match edge.color {
                    Color::Black => e + norm2(k) - norm2(&h) == 0,
                    Color::Red => e + norm2(k) + norm2(&h) == 0,
                };
                if !ok || sites.contains(&h) {
                    continue;
                }
                if in_box(&h, r) {
                    keys.push(normalize(h, k.clone(), &edge));
                } else {
                    outside.push(k.clone());
                }
            }
            Ok((outside, keys))
        })
        .collect::<Result<_>>()?;
    let mut edges: BTreeSet<(Point, Point, Edge)> = BTreeSet::new();
    let mut boundary: BTreeSet<Point> = BTreeSet::new();
    let mut loops: BTreeSet<(Point, Point, Edge)> = BTreeSet::new();
    for (outside, keys) in found {
        boundary.extend(outside);
        for key in keys {
            if key.0 == key.1 {
                loops.insert(key);
            } else {
                edges.insert(key);
            }
        }
    }
    let to_edges = |s: BTreeSet<(Point, Point, Edge)>| {
        s.into_iter().map(|(h, k, edge)| GeoEdge { h, k, edge }).collect::<Vec<_>>()
    };
    Ok(GeoGraph {
        q,
        radius: r,
        sites: sites.clone(),
        vertices,
        edges: to_edges(edges),
        boundary: boundary.into_iter().collect(),
        self_loops: to_edges(loops),
    })
}

/// One representative per undirected edge: `h ≤ k`, flipping `ℓ` for black.
fn normalize(h: Point, k: Point, edge: &Edge) -> (Point, Point, Edge) {
    if h <= k {
        (h, k, edge.clone())
    } else {
        let flipped = match edge.color {
            Color::Black => Edge { color: Color::Black, n: neg(&edge.n) },
            Color::Red => edge.clone(),
        };
        (k, h, flipped)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ComponentKind {
    Vertex,
    SingleEdge,
    Larger,
}

#[derive(Clone, Debug, Serialize)]
pub struct GeoComponent {
    pub points: Vec<Point>,
    pub edges: Vec<GeoEdge>,
    pub boundary: bool,
    /// Two points joined by more than one marking, or a self-loop.
    pub degenerate: bool,
    pub kind: ComponentKind,
}

impl GeoGraph {
    pub fn components(&self) -> Vec<GeoComponent> {
        let index: BTreeMap<&Point, usize> = self.vertices.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut uf = UnionFind::new(self.vertices.len());
        for e in &self.edges {
            uf.union(index[&e.h], index[&e.k]);
        }
        let boundary: BTreeSet<&Point> = self.boundary.iter().collect();
        let looped: BTreeSet<&Point> = self.self_loops.iter().map(|e| &e.h).collect();
        let groups = uf.groups();
        let mut owner = vec![0usize; self.vertices.len()];
        for (g, members) in groups.iter().enumerate() {
            for &i in members {
                owner[i] = g;
            }
        }
        let mut edges_of: Vec<Vec<GeoEdge>> = vec![Vec::new(); groups.len()];
        for e in &self.edges {
            edges_of[owner[index[&e.h]]].push(e.clone());
        }
        groups
            .into_iter()
            .zip(edges_of)
            .map(|(members, edges)| {
                let points: Vec<Point> = members.iter().map(|&i| self.vertices[i].clone()).collect();
                let pairs: BTreeSet<(&Point, &Point)> = edges.iter().map(|e| (&e.h, &e.k)).collect();
                let degenerate =
                    pairs.len() != edges.len() || points.iter().any(|p| looped.contains(p));
                let kind = match (points.len(), edges.len()) {
                    (1, 0) => ComponentKind::Vertex,
                    (2, 1) => ComponentKind::SingleEdge,
                    _ => ComponentKind::Larger,
                };
                GeoComponent {
                    boundary: points.iter().any(|p| boundary.contains(p)),
                    points,
                    edges,
                    degenerate,
                    kind,
                }
            })
            .collect()
    }

    /// Graphviz rendering; black edges solid, red edges dashed.
    pub fn to_dot(&self) -> String {
        let name = |p: &Point| {
            let parts: Vec<String> = p.iter().map(|x| x.to_string()).collect();
            format!("\"({})\"", parts.join(","))
        };
        let mut out = String::from("graph gamma_s {\n  node [shape=point];\n");
        let touched: BTreeSet<&Point> = self.edges.iter().flat_map(|e| [&e.h, &e.k]).collect();
        for p in &touched {
            let _ = writeln!(out, "  {};", name(p));
        }
        for e in &self.edges {
            let style = match e.edge.color {
                Color::Black => "color=black",
                Color::Red => "color=red, style=dashed",
            };
            let _ = writeln!(out, "  {} -- {} [label=\"{}\", {}];", name(&e.h), name(&e.k), e.edge, style);
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GenericityReport {
    pub pass: bool,
    /// Only dimensions 1 and 2 are covered by the existence statement.
    pub exploratory: bool,
    pub vertices: usize,
    pub single_edges: usize,
    pub larger: usize,
    pub degenerate: usize,
    pub boundary: usize,
    /// Points of the offending components.
    pub witnesses: Vec<Vec<Point>>,
}

/// Classifies the components that do not reach the box boundary. Passes
/// when each is a vertex or a single edge without loops or repeated
/// markings.
pub fn genericity_check(sites: &Sites, q: u32, r: i64) -> Result<GenericityReport> {
    let g = geo_graph(sites, q, r)?;
    let mut rep = GenericityReport {
        pass: true,
        exploratory: !(1..=2).contains(&sites.n),
        vertices: 0,
        single_edges: 0,
        larger: 0,
        degenerate: 0,
        boundary: 0,
        witnesses: Vec::new(),
    };
    for c in g.components() {
        if c.boundary {
            rep.boundary += 1;
            continue;
        }
        match c.kind {
            ComponentKind::Vertex => rep.vertices += 1,
            ComponentKind::SingleEdge => rep.single_edges += 1,
            ComponentKind::Larger => rep.larger += 1,
        }
        if c.degenerate {
            rep.degenerate += 1;
        }
        if c.kind == ComponentKind::Larger || c.degenerate {
            rep.pass = false;
            rep.witnesses.push(c.points);
        }
    }
    Ok(rep)
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchResult {
    pub sites: Sites,
    pub attempts: usize,
    pub report: GenericityReport,
}

/// Samples integer sites in `[-spread, spread]^n` until one passes the
/// genericity check.
pub fn search_generic_sites(
    n: usize,
    m: usize,
    q: u32,
    r: i64,
    spread: i64,
    seed: u64,
    max_attempts: usize,
) -> Result<Option<SearchResult>> {
    if spread > r {
        return Err(Error::BoxTooSmall(r));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 1..=max_attempts {
        let mut v: Vec<Point> = Vec::with_capacity(m);
        while v.len() < m {
            let p: Point = (0..n).map(|_| rng.gen_range(-spread..=spread)).collect();
            if !v.contains(&p) {
                v.push(p);
            }
        }
        let sites = Sites::new(n, v)?;
        let report = genericity_check(&sites, q, r)?;
        if report.pass {
            return Ok(Some(SearchResult { sites, attempts: attempt, report }));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, Serialize)]
pub struct Lift {
    pub graph: MarkedGraph,
    /// Group element assigned to each point, in component order.
    pub assignment: Vec<(Point, GElem)>,
    /// The complete marked graph on the lifted vertices has exactly the
    /// geometric edges.
    pub edges_match: bool,
}

/// Assigns `(0,+1)` to the smallest point and propagates along edges.
pub fn lift_component(c: &GeoComponent, sites: &Sites, q: u32) -> Result<Lift> {
    if c.boundary {
        return Err(Error::BoundaryComponent);
    }
    let m = sites.m();
    let root = c.points.iter().min().expect("components are nonempty").clone();
    let mut assigned: BTreeMap<Point, GElem> = BTreeMap::new();
    assigned.insert(root.clone(), GElem::identity(m));
    let step = |e: &GeoEdge, from_h: bool, g: &GElem| -> Result<GElem> {
        let gen = match (e.edge.color, from_h) {
            (Color::Black, true) => e.edge.generator(),
            (Color::Black, false) => GElem { a: neg(&e.edge.n), sigma: 1 },
            (Color::Red, _) => e.edge.generator(),
        };
        gen.mul(g)
    };
    let mut changed = true;
    while changed {
        changed = false;
        for e in &c.edges {
            let gh = assigned.get(&e.h).cloned();
            let gk = assigned.get(&e.k).cloned();
            match (gh, gk) {
                (Some(g), None) => {
                    assigned.insert(e.k.clone(), step(e, true, &g)?);
                    changed = true;
                }
                (None, Some(g)) => {
                    assigned.insert(e.h.clone(), step(e, false, &g)?);
                    changed = true;
                }
                _ => {}
            }
        }
    }
    if assigned.len() != c.points.len() {
        return Err(Error::Disconnected);
    }
    for e in &c.edges {
        if step(e, true, &assigned[&e.h])? != assigned[&e.k] {
            return Err(Error::CycleInconsistency(e.k.clone()));
        }
    }
    for (p, g) in &assigned {
        if act(g, &root, sites)? != *p || sites.contains(p) {
            return Err(Error::CycleInconsistency(p.clone()));
        }
    }
    let assignment: Vec<(Point, GElem)> =
        c.points.iter().map(|p| (p.clone(), assigned[p].clone())).collect();
    let graph = MarkedGraph::complete(m, q, assignment.iter().map(|(_, g)| g.clone()).collect())?;
    let lifted: BTreeSet<(usize, usize)> = graph.edges().iter().map(|e| (e.i, e.j)).collect();
    let pos: BTreeMap<&Point, usize> = c.points.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let geometric: BTreeSet<(usize, usize)> = c
        .edges
        .iter()
        .map(|e| {
            let (a, b) = (pos[&e.h], pos[&e.k]);
            (a.min(b), a.max(b))
        })
        .collect();
    Ok(Lift { graph, assignment, edges_match: lifted == geometric })
}

/// Lifts every component that stays inside the box, labelled by its
/// smallest point.
pub fn lift_all(g: &GeoGraph) -> Result<Vec<(String, Lift)>> {
    g.components()
        .into_iter()
        .filter(|c| !c.boundary)
        .map(|c| {
            let label = format!("component@{:?}", c.points[0]);
            Ok((label, lift_component(&c, &g.sites, g.q)?))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_sites() -> Sites {
        Sites::new(2, vec![vec![1, 0], vec![0, 1]]).unwrap()
    }

    #[test]
    fn momentum_is_linear() {
        let s = unit_sites();
        assert_eq!(momentum(&[1, 0], &s).unwrap(), vec![1, 0]);
        assert_eq!(momentum(&[0, 0], &s).unwrap(), vec![0, 0]);
        assert_eq!(momentum(&[1, -1], &s).unwrap(), vec![1, -1]);
        assert!(momentum(&[1], &s).is_err());
    }

    #[test]
    fn site_validation() {
        assert!(Sites::new(2, vec![vec![1, 0]]).is_err());
        assert!(Sites::new(2, vec![vec![1, 0], vec![1, 0]]).is_err());
        assert!(Sites::new(2, vec![vec![1, 0], vec![1]]).is_err());
        let parsed: std::result::Result<Sites, _> = serde_json::from_str(r#"{"n":1,"v":[[0],[0]]}"#);
        assert!(parsed.is_err());
    }

    /// Brute force over the box for `h + k = (1,1)` and `|h|² + |k|² = 2`.
    #[test]
    fn red_pairs_for_unit_sites() {
        let s = unit_sites();
        let e = Edge::new(vec![-1, -1], 1).unwrap();
        let ps = pair_set(&e, &s, 3).unwrap();
        let mut brute = Vec::new();
        for h in box_points(2, 3) {
            for k in box_points(2, 3) {
                if h >= k && add(&h, &k) == vec![1, 1] && norm2(&h) + norm2(&k) == 2 && !s.contains(&h) && !s.contains(&k) {
                    brute.push((h.clone(), k.clone()));
                }
            }
        }
        assert_eq!(ps.pairs, brute);
        assert_eq!(ps.pairs, vec![(vec![1, 1], vec![0, 0])]);
        assert!(!ps.truncated);
    }

    #[test]
    fn black_pairs_lie_on_a_line() {
        let s = unit_sites();
        let e = Edge::new(vec![1, -1], 1).unwrap();
        let ps = pair_set(&e, &s, 3).unwrap();
        assert!(ps.truncated);
        assert!(ps.pairs.contains(&(vec![0, -1], vec![-1, 0])));
        for (h, k) in &ps.pairs {
            assert_eq!(k[0] - k[1], -1);
            assert_eq!(sub(h, k), vec![1, -1]);
        }
    }

    #[test]
    fn negative_sphere_is_empty() {
        let s = Sites::new(1, vec![vec![0], vec![5]]).unwrap();
        // Σ ℓ_j |v_j|² = 25 > 0, so the sphere is empty.
        let e = Edge::new(vec![-3, 1], 2).unwrap();
        let ps = pair_set(&e, &s, 10).unwrap();
        assert!(ps.pairs.is_empty());
    }

    #[test]
    fn graph_contains_red_edge_and_excludes_sites() {
        let s = unit_sites();
        let g = geo_graph(&s, 1, 2).unwrap();
        assert!(!g.vertices.contains(&vec![1, 0]) && !g.vertices.contains(&vec![0, 1]));
        assert!(g
            .edges
            .iter()
            .any(|e| e.edge.color == Color::Red && e.h == vec![0, 0] && e.k == vec![1, 1]));
        assert!(geo_graph(&s, 1, 0).is_err());
    }

    #[test]
    fn edges_satisfy_their_equations() {
        let s = Sites::new(2, vec![vec![1, 2], vec![-2, 1], vec![0, -3]]).unwrap();
        let g = geo_graph(&s, 1, 6).unwrap();
        assert!(!g.edges.is_empty());
        for e in &g.edges {
            let p = momentum(&e.edge.n, &s).unwrap();
            let en = s.energy(&e.edge.n);
            match e.edge.color {
                Color::Black => {
                    assert_eq!(add(&p, &e.k), e.h);
                    assert_eq!(en + norm2(&e.k) - norm2(&e.h), 0);
                }
                Color::Red => {
                    assert_eq!(add(&add(&p, &e.k), &e.h), vec![0, 0]);
                    assert_eq!(en + norm2(&e.k) + norm2(&e.h), 0);
                }
            }
        }
    }

    #[test]
    fn red_pairs_do_not_depend_on_the_box() {
        let s = Sites::new(2, vec![vec![1, 2], vec![-2, 1], vec![0, -3]]).unwrap();
        for e in enumerate_edges(1, 3).unwrap().into_iter().filter(|e| e.color == Color::Red) {
            assert_eq!(pair_set(&e, &s, 3).unwrap(), pair_set(&e, &s, 12).unwrap());
        }
    }

    #[test]
    fn one_dimensional_census() {
        let s = Sites::new(1, vec![vec![0], vec![2]]).unwrap();
        let rep = genericity_check(&s, 1, 10).unwrap();
        assert!(!rep.exploratory);
        assert!(rep.vertices + rep.single_edges + rep.larger + rep.boundary > 0);
    }

    #[test]
    fn collinear_sites_fail() {
        let s = Sites::new(2, vec![vec![0, 0], vec![1, 0], vec![2, 0]]).unwrap();
        let rep = genericity_check(&s, 1, 8).unwrap();
        assert!(!rep.pass);
        assert!(!rep.witnesses.is_empty());
    }

    #[test]
    fn lift_single_red_edge() {
        let s = unit_sites();
        let g = geo_graph(&s, 1, 2).unwrap();
        let comp = g
            .components()
            .into_iter()
            .find(|c| c.points == vec![vec![0, 0], vec![1, 1]])
            .unwrap();
        let lift = lift_component(&comp, &s, 1).unwrap();
        assert_eq!(
            lift.graph.vertices(),
            &[GElem::identity(2), GElem::new(vec![-1, -1], -1).unwrap()]
        );
        assert!(lift.edges_match);
    }

    #[test]
    fn lift_single_vertex() {
        let s = unit_sites();
        let comp = GeoComponent {
            points: vec![vec![5, 5]],
            edges: Vec::new(),
            boundary: false,
            degenerate: false,
            kind: ComponentKind::Vertex,
        };
        let lift = lift_component(&comp, &s, 1).unwrap();
        assert_eq!(lift.graph.vertices(), &[GElem::identity(2)]);
    }

    #[test]
    fn lift_is_root_independent_up_to_canonical_form() {
        let s = Sites::new(2, vec![vec![0, 0], vec![1, 0], vec![2, 0]]).unwrap();
        let g = geo_graph(&s, 1, 6).unwrap();
        for c in g.components().into_iter().filter(|c| !c.boundary && c.points.len() > 1) {
            let base = lift_component(&c, &s, 1).unwrap().graph.canonicalize().unwrap();
            let mut rotated = c.clone();
            rotated.points.rotate_left(1);
            let alt = lift_component(&rotated, &s, 1).unwrap().graph.canonicalize().unwrap();
            assert_eq!(base, alt);
        }
    }

    #[test]
    fn lifted_components_certify() {
        use crate::certify::{certify_graphs, SuiteOptions, SuiteStatus};
        let found = search_generic_sites(2, 3, 1, 8, 4, 7, 500).unwrap().unwrap();
        let g = geo_graph(&found.sites, 1, 8).unwrap();
        let lifts = lift_all(&g).unwrap();
        assert!(lifts.iter().all(|(_, l)| l.edges_match && l.graph.len() <= 2));
        let graphs = lifts.into_iter().map(|(s, l)| (s, l.graph)).collect();
        let rep = certify_graphs(1, 3, graphs, &SuiteOptions::default()).unwrap();
        assert_eq!(rep.status(), SuiteStatus::Certified);
        assert_eq!(rep.summary.unknown, 0);
    }

    #[test]
    fn dot_export() {
        let g = geo_graph(&unit_sites(), 1, 2).unwrap();
        let dot = g.to_dot();
        assert!(dot.starts_with("graph gamma_s {"));
        assert!(dot.contains("style=dashed"));
    }
}
