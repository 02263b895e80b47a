//! The group `G = Z^m ⋊ Z/2` and its generating edge sets `X_q`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Element `(a, σ)` of `Z^m ⋊ Z/2` with `σ = ±1`.
///
/// The product is `(a, σ)(b, ρ) = (a + σb, σρ)`, so `τ = (0, -1)` satisfies
/// `aτ = τ(-a)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GElem {
    pub a: Vec<i64>,
    pub sigma: i8,
}

impl GElem {
    pub fn new(a: Vec<i64>, sigma: i8) -> Result<Self> {
        if sigma != 1 && sigma != -1 {
            return Err(Error::Parse(format!("sigma must be +1 or -1, got {sigma}")));
        }
        Ok(GElem { a, sigma })
    }

    pub fn identity(m: usize) -> Self {
        GElem { a: vec![0; m], sigma: 1 }
    }

    /// The sign flip `τ = (0, -1)`.
    pub fn tau(m: usize) -> Self {
        GElem { a: vec![0; m], sigma: -1 }
    }

    pub fn m(&self) -> usize {
        self.a.len()
    }

    pub fn is_identity(&self) -> bool {
        self.sigma == 1 && self.a.iter().all(|&x| x == 0)
    }

    pub fn mul(&self, other: &GElem) -> Result<GElem> {
        check_len(self.a.len(), other.a.len())?;
        let s = i64::from(self.sigma);
        Ok(GElem {
            a: self.a.iter().zip(&other.a).map(|(x, y)| x + s * y).collect(),
            sigma: self.sigma * other.sigma,
        })
    }

    pub fn inv(&self) -> GElem {
        match self.sigma {
            1 => GElem { a: self.a.iter().map(|x| -x).collect(), sigma: 1 },
            _ => self.clone(),
        }
    }

    /// Right action `x ↦ x·t`. With `t = τ` this flips the sign; with
    /// `t = (a, +1)` it sends `(b, σ)` to `(b + σa, σ)`.
    pub fn act_right(&self, t: &GElem) -> Result<GElem> {
        self.mul(t)
    }

    /// Applies a coordinate permutation: old index `i` becomes `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> GElem {
        let mut a = vec![0; self.a.len()];
        for (i, &x) in self.a.iter().enumerate() {
            a[perm[i]] = x;
        }
        GElem { a, sigma: self.sigma }
    }
}

impl fmt::Display for GElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.a.iter().map(|x| x.to_string()).collect();
        write!(f, "([{}], {})", parts.join(","), if self.sigma > 0 { "+" } else { "-" })
    }
}

fn check_len(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::LengthMismatch { expected: a, got: b });
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    /// Mass `η = 0`; the generator `(ℓ, +1)`.
    Black,
    /// Mass `η = -2`; the involution `(ℓ, -1)`.
    Red,
}

impl Color {
    pub fn sigma(self) -> i8 {
        match self {
            Color::Black => 1,
            Color::Red => -1,
        }
    }
}

/// A generator `ℓ ∈ X_q`, colored by its mass.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub color: Color,
    pub n: Vec<i64>,
}

impl Edge {
    /// Validates `ℓ` against `X_q`: `|ℓ|₁ ≤ 2q`, mass `0` or `-2`, and
    /// `ℓ ∉ {0, -2e_i}`.
    pub fn new(n: Vec<i64>, q: u32) -> Result<Self> {
        if q == 0 {
            return Err(Error::InvalidQ);
        }
        let l1: i64 = n.iter().map(|x| x.abs()).sum();
        if l1 > 2 * i64::from(q) {
            return Err(Error::InvalidEdge(n, "|l|_1 exceeds 2q"));
        }
        let mass: i64 = n.iter().sum();
        let color = match mass {
            0 => Color::Black,
            -2 => Color::Red,
            _ => return Err(Error::InvalidEdge(n, "mass must be 0 or -2")),
        };
        if l1 == 0 {
            return Err(Error::InvalidEdge(n, "zero vector"));
        }
        if color == Color::Red && n.iter().filter(|&&x| x != 0).count() == 1 {
            return Err(Error::InvalidEdge(n, "excluded vector -2e_i"));
        }
        Ok(Edge { color, n })
    }

    pub fn m(&self) -> usize {
        self.n.len()
    }

    pub fn mass(&self) -> i64 {
        self.n.iter().sum()
    }

    pub fn sigma(&self) -> i8 {
        self.color.sigma()
    }

    pub fn l1(&self) -> i64 {
        self.n.iter().map(|x| x.abs()).sum()
    }

    /// `ℓ⁺`, the positive part.
    pub fn plus(&self) -> Vec<i64> {
        self.n.iter().map(|&x| x.max(0)).collect()
    }

    /// `ℓ⁻ ≥ 0` with `ℓ = ℓ⁺ - ℓ⁻`.
    pub fn minus(&self) -> Vec<i64> {
        self.n.iter().map(|&x| (-x).max(0)).collect()
    }

    pub fn support(&self) -> Vec<usize> {
        self.n.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, _)| i).collect()
    }

    /// The group element `(ℓ, σ_ℓ)`.
    pub fn generator(&self) -> GElem {
        GElem { a: self.n.clone(), sigma: self.sigma() }
    }

    /// Parses a comma-separated vector such as `"+1,-1"`.
    pub fn parse(spec: &str, q: u32) -> Result<Self> {
        let n = spec
            .split(',')
            .map(|s| {
                let s = s.trim();
                let s = s.strip_prefix('+').unwrap_or(s);
                s.parse::<i64>().map_err(|_| Error::Parse(format!("bad edge entry {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, q)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &x) in self.n.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let sign = if x < 0 { "-" } else if first { "" } else { "+" };
            match x.abs() {
                1 => write!(f, "{sign}e{}", i + 1)?,
                k => write!(f, "{sign}{k}e{}", i + 1)?,
            }
            first = false;
        }
        Ok(())
    }
}

/// All of `X_q` in `Z^m`, black before red, each color in lexicographic
/// order of `ℓ`. Both orientations of each black edge are listed.
///
/// A vector with `|ℓ|₁ ≤ 2q` and `|ℓ|₁ ≡ η (mod 2)` is a sum of exactly
/// `2q` signed basis vectors, because the missing terms can be filled with
/// cancelling pairs `e_i - e_i`.
pub fn enumerate_edges(q: u32, m: usize) -> Result<Vec<Edge>> {
    if q == 0 {
        return Err(Error::InvalidQ);
    }
    if m < 2 {
        return Err(Error::TooFewVariables(m));
    }
    let budget = 2 * i64::from(q);
    let mut out = Vec::new();
    let mut cur = vec![0i64; m];
    fill(&mut cur, 0, budget, 0, q, &mut out);
    out.sort();
    Ok(out)
}

fn fill(cur: &mut Vec<i64>, pos: usize, budget: i64, mass: i64, q: u32, out: &mut Vec<Edge>) {
    let m = cur.len();
    if pos == m {
        if mass == 0 || mass == -2 {
            if let Ok(e) = Edge::new(cur.clone(), q) {
                out.push(e);
            }
        }
        return;
    }
    // The remaining coordinates can move the mass by at most `budget`.
    let need_lo = -2 - mass;
    let need_hi = -mass;
    for x in -budget..=budget {
        let rest = budget - x.abs();
        let after = mass + x;
        if pos + 1 == m {
            if after != 0 && after != -2 {
                continue;
            }
        } else if need_hi - x < -rest || need_lo - x > rest {
            continue;
        }
        cur[pos] = x;
        fill(cur, pos + 1, rest, after, q, out);
    }
    cur[pos] = 0;
}

/// The marking joining `x` to `y`, oriented so that `y = ℓ·x` under left
/// multiplication, when it lies in `X_q`.
pub fn adjacency(x: &GElem, y: &GElem, q: u32) -> Option<Edge> {
    if x.a.len() != y.a.len() || x == y {
        return None;
    }
    let n: Vec<i64> = if x.sigma == y.sigma {
        y.a.iter().zip(&x.a).map(|(b, a)| b - a).collect()
    } else {
        y.a.iter().zip(&x.a).map(|(b, a)| b + a).collect()
    };
    let e = Edge::new(n, q).ok()?;
    let expected = if x.sigma == y.sigma { Color::Black } else { Color::Red };
    (e.color == expected).then_some(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn g(a: &[i64], s: i8) -> GElem {
        GElem::new(a.to_vec(), s).unwrap()
    }

    /// Every signed sum of exactly `2q` basis vectors with admissible mass.
    fn brute_force(q: u32, m: usize) -> BTreeSet<Vec<i64>> {
        let steps = 2 * q as usize;
        let choices = 2 * m;
        let mut out = BTreeSet::new();
        let mut idx = vec![0usize; steps];
        loop {
            let mut v = vec![0i64; m];
            for &c in &idx {
                v[c / 2] += if c % 2 == 0 { 1 } else { -1 };
            }
            let mass: i64 = v.iter().sum();
            let is_minus_two_e = mass == -2 && v.iter().filter(|&&x| x != 0).count() == 1;
            if (mass == 0 || mass == -2) && v.iter().any(|&x| x != 0) && !is_minus_two_e {
                out.insert(v);
            }
            let mut k = 0;
            loop {
                if k == steps {
                    return out;
                }
                idx[k] += 1;
                if idx[k] < choices {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
        }
    }

    #[test]
    fn group_law() {
        let a = g(&[1, -2], -1);
        assert!(a.mul(&a).unwrap().is_identity());
        assert_eq!(g(&[1, 0], 1).mul(&g(&[2, 3], 1)).unwrap(), g(&[3, 3], 1));
        assert_eq!(g(&[1, 2], 1).inv(), g(&[-1, -2], 1));
        let x = g(&[3, -1], -1);
        assert!(x.mul(&x.inv()).unwrap().is_identity());
        assert!(g(&[1], 1).mul(&g(&[1, 2], 1)).is_err());
    }

    #[test]
    fn right_action() {
        let b = g(&[2, 5], 1);
        assert_eq!(b.act_right(&GElem::tau(2)).unwrap(), g(&[2, 5], -1));
        assert_eq!(b.act_right(&g(&[1, -1], 1)).unwrap(), g(&[3, 4], 1));
        assert_eq!(g(&[2, 5], -1).act_right(&g(&[1, -1], 1)).unwrap(), g(&[1, 6], -1));
    }

    #[test]
    fn small_edge_sets() {
        let e = enumerate_edges(1, 2).unwrap();
        let got: Vec<(Color, Vec<i64>)> = e.into_iter().map(|e| (e.color, e.n)).collect();
        assert_eq!(
            got,
            vec![
                (Color::Black, vec![-1, 1]),
                (Color::Black, vec![1, -1]),
                (Color::Red, vec![-1, -1]),
            ]
        );
        let e = enumerate_edges(1, 3).unwrap();
        assert_eq!(e.iter().filter(|e| e.color == Color::Black).count(), 6);
        assert_eq!(e.iter().filter(|e| e.color == Color::Red).count(), 3);
        assert!(enumerate_edges(1, 1).is_err());
    }

    #[test]
    fn edge_counts_at_m_2q() {
        for (q, black, red) in [(1, 2, 1), (2, 54, 46), (3, 1280, 1170)] {
            let e = enumerate_edges(q, 2 * q as usize).unwrap();
            assert_eq!(e.iter().filter(|e| e.color == Color::Black).count(), black);
            assert_eq!(e.iter().filter(|e| e.color == Color::Red).count(), red);
        }
    }

    #[test]
    fn matches_signed_sums() {
        for q in 1..=3 {
            for m in 2..=4 {
                let got: BTreeSet<Vec<i64>> =
                    enumerate_edges(q, m).unwrap().into_iter().map(|e| e.n).collect();
                assert_eq!(got, brute_force(q, m), "q={q} m={m}");
            }
        }
    }

    #[test]
    fn shape_bounds() {
        for q in 1..=4u32 {
            for e in enumerate_edges(q, 5).unwrap() {
                let p: i64 = e.plus().iter().sum();
                let mn: i64 = e.minus().iter().sum();
                match e.color {
                    Color::Black => {
                        assert_eq!(p, mn);
                        assert!(p <= i64::from(q));
                    }
                    Color::Red => {
                        assert!(p <= i64::from(q) - 1);
                        assert!(mn <= i64::from(q) + 1);
                    }
                }
                assert!(e.support().len() >= 2);
            }
        }
    }

    #[test]
    fn adjacency_markings() {
        let o = GElem::identity(2);
        let b = adjacency(&o, &g(&[1, -1], 1), 1).unwrap();
        assert_eq!((b.color, b.n), (Color::Black, vec![1, -1]));
        let r = adjacency(&o, &g(&[-1, -1], -1), 1).unwrap();
        assert_eq!((r.color, r.n.clone()), (Color::Red, vec![-1, -1]));
        assert_eq!(r.generator().mul(&o).unwrap(), g(&[-1, -1], -1));
        assert!(adjacency(&o, &g(&[3, 0], 1), 1).is_none());
        assert!(adjacency(&o, &g(&[1, -1], -1), 1).is_none());
    }

    #[test]
    fn adjacency_is_left_multiplication() {
        let x = g(&[2, -1, 0], -1);
        for e in enumerate_edges(2, 3).unwrap() {
            let y = e.generator().mul(&x).unwrap();
            assert_eq!(adjacency(&x, &y, 2).unwrap(), e);
        }
    }

    #[test]
    fn parse_and_render() {
        let e = Edge::parse("+1,-1", 1).unwrap();
        assert_eq!(e.n, vec![1, -1]);
        assert_eq!(e.to_string(), "e1-e2");
        assert_eq!(Edge::parse("-5,1,1,1", 4).unwrap().to_string(), "-5e1+e2+e3+e4");
        assert!(Edge::parse("-2,0", 1).is_err());
        assert!(Edge::parse("1,1", 1).is_err());
    }
}
