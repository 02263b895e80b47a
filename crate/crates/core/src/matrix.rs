//! The normalized block matrix `C̃_G` of a complete colored marked graph.
//!
//! Entries are divided by `q + 1` relative to the raw matrix, which keeps
//! every coefficient integral.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::MarkedGraph;
use crate::group::{Color, Edge, GElem};
use crate::poly::{HalfExpVec, MPoly};

/// `r! / (k_1! ⋯ k_m!)`, or zero if some `k_i < 0` or `Σ k_i ≠ r`.
pub fn multinomial(r: i64, k: &[i64]) -> BigInt {
    if r < 0 || k.iter().any(|&x| x < 0) || k.iter().sum::<i64>() != r {
        return BigInt::zero();
    }
    let mut out = BigInt::one();
    let mut done = 0i64;
    for &x in k {
        for j in 1..=x {
            done += 1;
            out = out * BigInt::from(done) / BigInt::from(j);
        }
    }
    out
}

/// Calls `f` on every `α ∈ N^m` with `|α|₁ = total`.
fn for_each_composition<F: FnMut(&[i64])>(m: usize, total: i64, f: &mut F) {
    fn go<F: FnMut(&[i64])>(cur: &mut Vec<i64>, pos: usize, left: i64, f: &mut F) {
        if pos + 1 == cur.len() {
            cur[pos] = left;
            f(cur);
            return;
        }
        for x in 0..=left {
            cur[pos] = x;
            go(cur, pos + 1, left - x, f);
        }
        cur[pos] = 0;
    }
    if total < 0 || m == 0 {
        return;
    }
    let mut cur = vec![0i64; m];
    go(&mut cur, 0, total, f);
}

fn exps(k: &[i64]) -> HalfExpVec {
    HalfExpVec::from_doubled(k.iter().map(|&x| u16::try_from(2 * x).expect("exponent overflow")))
}

/// `A_r = Σ_{|k|₁ = r} multinomial(r; k)² ξ^k`, with `A_0 = 1`.
pub fn poly_a(r: u32, m: usize) -> MPoly {
    if r == 0 {
        return MPoly::one(m);
    }
    let mut terms = Vec::new();
    for_each_composition(m, i64::from(r), &mut |k| {
        let c = multinomial(i64::from(r), k);
        terms.push((exps(k), &c * &c));
    });
    MPoly::from_terms(m, terms)
}

/// Per-`(q, m)` data shared by every entry: `A_q` and the partials of
/// `A_{q+1}`.
#[derive(Clone, Debug)]
pub struct NormalForm {
    q: u32,
    m: usize,
    a_q: MPoly,
    partials: Vec<MPoly>,
}

impl NormalForm {
    pub fn new(q: u32, m: usize) -> Result<Self> {
        if q == 0 {
            return Err(Error::InvalidQ);
        }
        let a_next = poly_a(q + 1, m);
        let partials = (0..m).map(|i| a_next.partial(i)).collect::<Result<Vec<_>>>()?;
        Ok(NormalForm { q, m, a_q: poly_a(q, m), partials })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn a_q(&self) -> &MPoly {
        &self.a_q
    }

    /// `∂A_{q+1}/∂ξ_i` (0-based `i`).
    pub fn partial(&self, i: usize) -> &MPoly {
        &self.partials[i]
    }

    /// `a(ξ) = (1/(q+1)) Σ n_i ∂A_{q+1}/∂ξ_i`. The division is exact.
    pub fn linear_form(&self, a: &[i64]) -> Result<MPoly> {
        if a.len() != self.m {
            return Err(Error::LengthMismatch { expected: self.m, got: a.len() });
        }
        let mut acc = MPoly::zero(self.m);
        for (i, &n) in a.iter().enumerate() {
            if n != 0 {
                acc += &self.partials[i].scale(&BigInt::from(n));
            }
        }
        acc.div_exact_scalar(&BigInt::from(self.q + 1))
    }

    /// `a(ξ)` for `σ = +1`, `-a(ξ) + 2(q+1) A_q` for `σ = -1`.
    pub fn diag_entry(&self, v: &GElem) -> Result<MPoly> {
        let a = self.linear_form(&v.a)?;
        Ok(match v.sigma {
            1 => a,
            _ => &self.a_q.scale(&BigInt::from(2 * (self.q + 1))) - &a,
        })
    }

    /// The normalized edge coefficient `c_q(ℓ)`.
    pub fn edge_coeff(&self, edge: &Edge) -> Result<MPoly> {
        if edge.m() != self.m {
            return Err(Error::LengthMismatch { expected: self.m, got: edge.m() });
        }
        let checked = Edge::new(edge.n.clone(), self.q)?;
        let q = i64::from(self.q);
        let plus = checked.plus();
        let minus = checked.minus();
        let plus_l1: i64 = plus.iter().sum();
        let prefactor = HalfExpVec::from_doubled(
            checked.n.iter().map(|&x| u16::try_from(x.abs()).expect("exponent overflow")),
        );
        let mut terms = Vec::new();
        let mut shifted_p = vec![0i64; self.m];
        let mut shifted_m = vec![0i64; self.m];
        let (scale, total, r_minus, r_plus) = match checked.color {
            Color::Black => (q + 1, q - plus_l1, q, q),
            Color::Red => (q, q - 1 - plus_l1, q + 1, q - 1),
        };
        for_each_composition(self.m, total, &mut |alpha| {
            for i in 0..alpha.len() {
                shifted_p[i] = plus[i] + alpha[i];
                shifted_m[i] = minus[i] + alpha[i];
            }
            let c = multinomial(r_minus, &shifted_m) * multinomial(r_plus, &shifted_p);
            if !c.is_zero() {
                terms.push((exps(alpha).mul(&prefactor), c * BigInt::from(scale)));
            }
        });
        Ok(MPoly::from_terms(self.m, terms))
    }

    /// `ℓ̄(ξ)`, the diagonal entry at the non-root vertex of the one-edge
    /// graph `{(0,+1), (ℓ, σ_ℓ)}`.
    pub fn edge_diag(&self, edge: &Edge) -> Result<MPoly> {
        self.diag_entry(&edge.generator())
    }

    pub fn build_matrix(&self, g: &MarkedGraph) -> Result<PolyMatrix> {
        if g.m() != self.m || g.q() != self.q {
            return Err(Error::LengthMismatch { expected: self.m, got: g.m() });
        }
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(self.assemble(g))
    }

    /// Assembles the matrix without the connectivity requirement; the
    /// result is block diagonal over components.
    pub fn assemble(&self, g: &MarkedGraph) -> PolyMatrix {
        let n = g.len();
        let mut entries = vec![vec![MPoly::zero(self.m); n]; n];
        for (i, v) in g.vertices().iter().enumerate() {
            entries[i][i] = self.diag_entry(v).expect("vertex length checked by graph");
        }
        for e in g.edges() {
            let c = self.edge_coeff(&e.edge).expect("adjacency yields valid edges");
            let vi = &g.vertices()[e.i];
            let vj = &g.vertices()[e.j];
            entries[e.i][e.j] = signed(&c, vj.sigma);
            entries[e.j][e.i] = signed(&c, vi.sigma);
        }
        PolyMatrix { q: self.q, m: self.m, entries, vertex_order: g.vertices().to_vec() }
    }
}

fn signed(c: &MPoly, sigma: i8) -> MPoly {
    if sigma > 0 {
        c.clone()
    } else {
        -c
    }
}

pub fn linear_form(a: &[i64], q: u32, m: usize) -> Result<MPoly> {
    NormalForm::new(q, m)?.linear_form(a)
}

pub fn diag_entry(v: &GElem, q: u32) -> Result<MPoly> {
    NormalForm::new(q, v.m())?.diag_entry(v)
}

pub fn edge_coeff(edge: &Edge, q: u32) -> Result<MPoly> {
    NormalForm::new(q, edge.m())?.edge_coeff(edge)
}

pub fn build_matrix(g: &MarkedGraph) -> Result<PolyMatrix> {
    NormalForm::new(g.q(), g.m())?.build_matrix(g)
}

/// Square matrix of polynomials indexed by graph vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    q: u32,
    m: usize,
    entries: Vec<Vec<MPoly>>,
    vertex_order: Vec<GElem>,
}

impl PolyMatrix {
    pub fn from_entries(m: usize, entries: Vec<Vec<MPoly>>) -> Self {
        PolyMatrix { q: 0, m, entries, vertex_order: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn nvars(&self) -> usize {
        self.m
    }

    pub fn entries(&self) -> &[Vec<MPoly>] {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> &MPoly {
        &self.entries[i][j]
    }

    pub fn vertex_order(&self) -> &[GElem] {
        &self.vertex_order
    }

    /// The raw matrix `C_G = (q + 1) C̃_G`.
    pub fn scaled_raw(&self) -> PolyMatrix {
        let k = BigInt::from(self.q + 1);
        PolyMatrix {
            q: self.q,
            m: self.m,
            entries: self.entries.iter().map(|r| r.iter().map(|e| e.scale(&k)).collect()).collect(),
            vertex_order: self.vertex_order.clone(),
        }
    }

    pub fn trace(&self) -> MPoly {
        let mut t = MPoly::zero(self.m);
        for i in 0..self.dim() {
            t += &self.entries[i][i];
        }
        t
    }

    /// Principal submatrix on the given row/column indices.
    pub fn submatrix(&self, idx: &[usize]) -> PolyMatrix {
        PolyMatrix {
            q: self.q,
            m: self.m,
            entries: idx.iter().map(|&i| idx.iter().map(|&j| self.entries[i][j].clone()).collect()).collect(),
            vertex_order: idx.iter().filter_map(|&i| self.vertex_order.get(i).cloned()).collect(),
        }
    }

    pub fn map_entries<F: Fn(&MPoly) -> Result<MPoly>>(&self, f: F) -> Result<PolyMatrix> {
        let entries = self
            .entries
            .iter()
            .map(|r| r.iter().map(&f).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(PolyMatrix { q: self.q, m: self.m, entries, vertex_order: self.vertex_order.clone() })
    }
}

#[derive(Serialize)]
struct MatrixJson<'a> {
    q: u32,
    m: usize,
    dim: usize,
    vertex_order: &'a [GElem],
    entries: Vec<Vec<String>>,
}

impl Serialize for PolyMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixJson {
            q: self.q,
            m: self.m,
            dim: self.dim(),
            vertex_order: &self.vertex_order,
            entries: self.entries.iter().map(|r| r.iter().map(|e| e.to_string()).collect()).collect(),
        }
        .serialize(s)
    }
}
