use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use serde::Serialize;

use super::berkowitz::determinant;
use super::mpoly::{Assignment, JsonTerm, MPoly};
use crate::error::{Error, Result};

/// Polynomial in `t` with [`MPoly`] coefficients, stored from `t^0` up.
/// The highest stored coefficient is nonzero; the zero polynomial is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TPoly {
    nvars: usize,
    coeffs: Vec<MPoly>,
}

impl TPoly {
    pub fn zero(nvars: usize) -> Self {
        TPoly { nvars, coeffs: Vec::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(MPoly::one(nvars))
    }

    /// The polynomial `t`.
    pub fn t(nvars: usize) -> Self {
        TPoly { nvars, coeffs: vec![MPoly::zero(nvars), MPoly::one(nvars)] }
    }

    pub fn constant(c: MPoly) -> Self {
        Self::from_coeffs(c.nvars(), vec![c])
    }

    /// `t - r`.
    pub fn linear(root: &MPoly) -> Self {
        Self::from_coeffs(root.nvars(), vec![-root, MPoly::one(root.nvars())])
    }

    /// Coefficients from `t^0` upward; trailing zeros are dropped.
    pub fn from_coeffs(nvars: usize, mut coeffs: Vec<MPoly>) -> Self {
        for c in &coeffs {
            assert_eq!(c.nvars(), nvars, "coefficient has wrong variable count");
        }
        while coeffs.last().is_some_and(MPoly::is_zero) {
            coeffs.pop();
        }
        TPoly { nvars, coeffs }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[MPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> MPoly {
        self.coeffs.get(k).cloned().unwrap_or_else(|| MPoly::zero(self.nvars))
    }

    pub fn leading(&self) -> Option<&MPoly> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(MPoly::is_one)
    }

    pub fn has_integer_exponents(&self) -> bool {
        self.coeffs.iter().all(MPoly::has_integer_exponents)
    }

    pub fn scale(&self, c: &MPoly) -> Self {
        Self::from_coeffs(self.nvars, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![MPoly::zero(self.nvars); k];
        coeffs.extend(self.coeffs.iter().cloned());
        TPoly { nvars: self.nvars, coeffs }
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.nvars,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale(&BigInt::from(k)))
                .collect(),
        )
    }

    /// `(-1)^deg * p(-t)`: same leading coefficient, roots negated.
    pub fn opposite(&self) -> Self {
        let Some(d) = self.degree() else {
            return self.clone();
        };
        Self::from_coeffs(
            self.nvars,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if (d - k) % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    pub fn map_coeffs<F>(&self, f: F) -> Result<Self>
    where
        F: Fn(&MPoly) -> Result<MPoly>,
    {
        let coeffs = self.coeffs.iter().map(f).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_coeffs(self.nvars, coeffs))
    }

    pub fn specialize(&self, assignment: &Assignment) -> Result<Self> {
        self.map_coeffs(|c| c.specialize(assignment))
    }

    /// Coefficient-wise reduction into `[0, modulus)`.
    pub fn reduce_mod(&self, modulus: &BigInt) -> Result<Self> {
        self.map_coeffs(|c| c.reduce_mod(modulus))
    }

    pub fn div_exact_coeffs(&self, d: &MPoly) -> Result<Self> {
        self.map_coeffs(|c| c.div_exact(d))
    }

    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        Self::from_coeffs(self.nvars, self.coeffs.iter().map(|c| c.permute_vars(perm)).collect())
    }

    /// Integer coefficients of the univariate image at `point`, from `t^0` up.
    pub fn eval_coeffs(&self, point: &[BigInt]) -> Result<Vec<BigInt>> {
        self.coeffs.iter().map(|c| c.eval(point)).collect()
    }

    /// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
    pub fn prem(&self, b: &TPoly) -> Result<Self> {
        let db = b.degree().ok_or(Error::ZeroPolynomial)?;
        let Some(da) = self.degree() else {
            return Ok(self.clone());
        };
        if da < db {
            return Ok(self.clone());
        }
        let lb = b.leading().unwrap();
        let mut r = self.clone();
        let mut remaining = (da - db + 1) as u32;
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.leading().unwrap().clone();
            r = &r.scale(lb) - &b.scale(&lr).shift(dr - db);
            remaining -= 1;
        }
        if remaining > 0 {
            r = r.scale(&lb.pow(remaining));
        }
        Ok(r)
    }

    fn checked_binop(&self, other: &Self, sub: bool) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| {
                let a = self.coeff(k);
                let b = other.coeff(k);
                if sub {
                    &a - &b
                } else {
                    &a + &b
                }
            })
            .collect();
        Self::from_coeffs(self.nvars, coeffs)
    }

    fn mul_impl(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.nvars);
        }
        let mut coeffs = vec![MPoly::zero(self.nvars); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                if !a.is_zero() && !b.is_zero() {
                    coeffs[i + j] += &(a * b);
                }
            }
        }
        Self::from_coeffs(self.nvars, coeffs)
    }

    pub fn to_json_coeffs(&self) -> Vec<Vec<JsonTerm>> {
        self.coeffs.iter().map(MPoly::to_json_terms).collect()
    }

    pub fn from_json_coeffs(nvars: usize, coeffs: &[Vec<JsonTerm>]) -> Result<Self> {
        let cs = coeffs
            .iter()
            .map(|c| MPoly::from_json_terms(nvars, c))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_coeffs(nvars, cs))
    }
}

impl Add for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        self.checked_binop(rhs, false)
    }
}

impl Sub for &TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &TPoly) -> TPoly {
        self.checked_binop(rhs, true)
    }
}

impl Mul for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        self.mul_impl(rhs)
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        TPoly { nvars: self.nvars, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Serialize for TPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_coeffs().serialize(s)
    }
}

/// Resultant with respect to `t` by the subresultant polynomial remainder
/// sequence; every division is exact in the integer polynomial ring.
///
/// Sign convention: the determinant of the Sylvester matrix of `(p, q)`.
pub fn resultant(p: &TPoly, q: &TPoly) -> Result<MPoly> {
    let dp = p.degree().ok_or(Error::ZeroPolynomial)?;
    let dq = q.degree().ok_or(Error::ZeroPolynomial)?;
    let n = p.nvars();
    if dp == 0 {
        return Ok(p.coeffs[0].pow(dq as u32));
    }
    if dq == 0 {
        return Ok(q.coeffs[0].pow(dp as u32));
    }
    let (mut a, mut b) = (p.clone(), q.clone());
    let mut negate = false;
    if dp < dq {
        std::mem::swap(&mut a, &mut b);
        if dp % 2 == 1 && dq % 2 == 1 {
            negate = !negate;
        }
    }
    let mut g = MPoly::one(n);
    let mut h = MPoly::one(n);
    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = a.prem(&b)?;
        if r.is_zero() {
            return Ok(MPoly::zero(n));
        }
        a = b;
        b = r.div_exact_coeffs(&(&g * &h.pow(delta)))?;
        g = a.leading().unwrap().clone();
        if delta > 0 {
            h = g.pow(delta).div_exact(&h.pow(delta - 1))?;
        }
        if b.degree() == Some(0) {
            let da = a.degree().unwrap() as u32;
            let res = b.coeffs[0].pow(da).div_exact(&h.pow(da - 1))?;
            return Ok(if negate { -res } else { res });
        }
    }
}

/// Sylvester matrix of `(p, q)`: `deg q` shifted rows of `p`, then `deg p`
/// shifted rows of `q`, coefficients from the highest power down.
pub fn sylvester_matrix(p: &TPoly, q: &TPoly) -> Result<Vec<Vec<MPoly>>> {
    let dp = p.degree().ok_or(Error::ZeroPolynomial)?;
    let dq = q.degree().ok_or(Error::ZeroPolynomial)?;
    let size = dp + dq;
    let n = p.nvars();
    let mut rows = Vec::with_capacity(size);
    for (poly, deg, count) in [(p, dp, dq), (q, dq, dp)] {
        for shift in 0..count {
            let mut row = vec![MPoly::zero(n); size];
            for k in 0..=deg {
                row[shift + k] = poly.coeff(deg - k);
            }
            rows.push(row);
        }
    }
    Ok(rows)
}

/// Resultant as the division-free determinant of the Sylvester matrix.
pub fn sylvester_resultant(p: &TPoly, q: &TPoly) -> Result<MPoly> {
    let m = sylvester_matrix(p, q)?;
    Ok(determinant(&m, p.nvars()))
}

/// Discriminant `(-1)^(n(n-1)/2) * Res(p, p') / lc(p)`, the convention under
/// which `t^2 + b t + c` has discriminant `b^2 - 4c`.
pub fn discriminant(p: &TPoly) -> Result<MPoly> {
    let d = p.degree().ok_or(Error::ZeroPolynomial)?;
    if d == 0 {
        return Err(Error::ZeroPolynomial);
    }
    let res = resultant(p, &p.derivative())?;
    let res = if (d * (d - 1) / 2) % 2 == 1 { -res } else { res };
    let lc = p.leading().unwrap();
    if lc.is_one() {
        Ok(res)
    } else {
        res.div_exact(lc)
    }
}

/// Sign-factored body of one coefficient: `(negative, text)`, with
/// multi-term bodies parenthesized.
fn coefficient_parts(c: &MPoly) -> (bool, String) {
    if c.num_terms() == 1 {
        let (_, coef) = c.leading_term().unwrap();
        let neg = num_traits::Signed::is_negative(coef);
        let body = if neg { (-c).to_string() } else { c.to_string() };
        (neg, body)
    } else {
        let neg = num_traits::Signed::is_negative(&c.terms()[0].1);
        let body = if neg { (-c).to_string() } else { c.to_string() };
        (neg, format!("({body})"))
    }
}

/// Canonical text, highest power first, e.g. `t^2 - (x2 - x1)*t - 4*x1*x2`.
impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let (neg, body) = coefficient_parts(c);
            let tpow = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            let text = match (k, body.as_str()) {
                (0, _) => body,
                (_, "1") => tpow,
                _ => format!("{body}*{tpow}"),
            };
            match (first, neg) {
                (true, true) => write!(f, "-{text}")?,
                (true, false) => write!(f, "{text}")?,
                (false, true) => write!(f, " - {text}")?,
                (false, false) => write!(f, " + {text}")?,
            }
            first = false;
        }
        Ok(())
    }
}
