use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use super::monomial::HalfExpVec;
use crate::error::{Error, Result};

/// Sparse polynomial in `x1..xm` with big-integer coefficients and
/// half-integer exponents.
///
/// Terms are kept sorted ascending in lexicographic order with no zero
/// coefficients, so structural equality is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MPoly {
    nvars: usize,
    terms: Vec<(HalfExpVec, BigInt)>,
}

/// Target of a single-variable substitution in [`MPoly::specialize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Substitution {
    /// Replace with another variable (0-based index).
    Var(usize),
    /// Replace with an integer. Half-integer powers need a perfect square.
    Value(BigInt),
}

impl Substitution {
    pub fn zero() -> Self {
        Substitution::Value(BigInt::zero())
    }
}

/// Variable index (0-based) to substitution. Unlisted variables stay.
pub type Assignment = BTreeMap<usize, Substitution>;

/// One term of the JSON rendering.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub exponents_doubled: Vec<u16>,
    pub coeff: String,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: Vec::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    pub fn constant<C: Into<BigInt>>(nvars: usize, c: C) -> Self {
        Self::monomial(HalfExpVec::zero(nvars), c)
    }

    /// The variable `x_{i+1}` (0-based `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(HalfExpVec::unit(nvars, i, 2), 1)
    }

    pub fn monomial<C: Into<BigInt>>(exp: HalfExpVec, coeff: C) -> Self {
        let nvars = exp.nvars();
        let c = coeff.into();
        if c.is_zero() {
            return Self::zero(nvars);
        }
        MPoly { nvars, terms: vec![(exp, c)] }
    }

    /// Accumulates arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (HalfExpVec, BigInt)>,
    {
        let mut acc: BTreeMap<HalfExpVec, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            assert_eq!(e.nvars(), nvars, "term has wrong variable count");
            *acc.entry(e).or_insert_with(BigInt::zero) += c;
        }
        Self::from_map(nvars, acc)
    }

    fn from_map(nvars: usize, map: BTreeMap<HalfExpVec, BigInt>) -> Self {
        MPoly {
            nvars,
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn from_json_terms(nvars: usize, terms: &[JsonTerm]) -> Result<Self> {
        let mut out = Vec::with_capacity(terms.len());
        for t in terms {
            if t.exponents_doubled.len() != nvars {
                return Err(Error::LengthMismatch {
                    expected: nvars,
                    got: t.exponents_doubled.len(),
                });
            }
            let c: BigInt = t
                .coeff
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {:?}", t.coeff)))?;
            out.push((HalfExpVec::from_doubled(t.exponents_doubled.iter().copied()), c));
        }
        Ok(Self::from_terms(nvars, out))
    }

    pub fn to_json_terms(&self) -> Vec<JsonTerm> {
        self.terms
            .iter()
            .map(|(e, c)| JsonTerm {
                exponents_doubled: e.doubled().to_vec(),
                coeff: c.to_string(),
            })
            .collect()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_constant() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(e, _)| e.is_constant())
    }

    /// Value of a constant polynomial; `None` if any variable occurs.
    pub fn constant_value(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(e, c)] if e.is_constant() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lexicographic order.
    pub fn terms(&self) -> &[(HalfExpVec, BigInt)] {
        &self.terms
    }

    /// Lexicographically largest term.
    pub fn leading_term(&self) -> Option<(&HalfExpVec, &BigInt)> {
        self.terms.last().map(|(e, c)| (e, c))
    }

    pub fn coeff(&self, exp: &HalfExpVec) -> BigInt {
        self.terms
            .binary_search_by(|(e, _)| e.cmp(exp))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| BigInt::zero())
    }

    pub fn has_integer_exponents(&self) -> bool {
        self.terms.iter().all(|(e, _)| e.is_integral())
    }

    /// Largest doubled exponent of variable `i` over all terms.
    pub fn max_doubled(&self, i: usize) -> u16 {
        self.terms.iter().map(|(e, _)| e.doubled()[i]).max().unwrap_or(0)
    }

    /// Smallest doubled exponent of variable `i`; the polynomial is divisible
    /// by `x_i^(k/2)` exactly when this is at least `k`.
    pub fn min_doubled(&self, i: usize) -> u16 {
        self.terms.iter().map(|(e, _)| e.doubled()[i]).min().unwrap_or(u16::MAX)
    }

    /// Whether variable `i` occurs in some term.
    pub fn involves(&self, i: usize) -> bool {
        self.max_doubled(i) > 0
    }

    fn check_nvars(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::NvarsMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_nvars(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_nvars(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_nvars(other)?;
        Ok(self.mul_impl(other))
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let sign = |c: &BigInt| if negate_other { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b[j].0.clone(), sign(&b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate_other { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(e, c)| (e.clone(), sign(c))));
        MPoly { nvars: self.nvars, terms: out }
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.nvars);
        }
        if self.terms.len() == 1 {
            let (e, c) = &self.terms[0];
            return other.mul_term(e, c);
        }
        if other.terms.len() == 1 {
            let (e, c) = &other.terms[0];
            return self.mul_term(e, c);
        }
        if let Some(p) = self.mul_small(other) {
            return p;
        }
        let mut acc: FxHashMap<HalfExpVec, BigInt> = FxHashMap::default();
        acc.reserve(self.terms.len() * other.terms.len() / 2);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.mul(eb);
                let prod = ca * cb;
                match acc.get_mut(&e) {
                    Some(v) => *v += prod,
                    None => {
                        acc.insert(e, prod);
                    }
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        MPoly { nvars: self.nvars, terms }
    }

    /// Product with `i128` accumulation when the coefficient bounds rule out
    /// overflow.
    fn mul_small(&self, other: &Self) -> Option<Self> {
        let small = |p: &Self| -> Option<(Vec<i64>, u64)> {
            let mut bits = 0;
            let mut v = Vec::with_capacity(p.terms.len());
            for (_, c) in &p.terms {
                let x = c.to_i64()?;
                bits = bits.max(c.bits());
                v.push(x);
            }
            Some((v, bits))
        };
        let (ca, ba) = small(self)?;
        let (cb, bb) = small(other)?;
        let n = self.terms.len().min(other.terms.len()) as u64;
        let log_n = 64 - n.leading_zeros() as u64;
        if ba + bb + log_n > 125 {
            return None;
        }
        let mut acc: FxHashMap<HalfExpVec, i128> = FxHashMap::default();
        acc.reserve(self.terms.len() * other.terms.len() / 2);
        for ((ea, _), &xa) in self.terms.iter().zip(&ca) {
            for ((eb, _), &xb) in other.terms.iter().zip(&cb) {
                let e = ea.mul(eb);
                *acc.entry(e).or_insert(0) += i128::from(xa) * i128::from(xb);
            }
        }
        let mut terms: Vec<_> = acc
            .into_iter()
            .filter(|(_, c)| *c != 0)
            .map(|(e, c)| (e, BigInt::from(c)))
            .collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        Some(MPoly { nvars: self.nvars, terms })
    }

    /// Multiplies by the single term `c * x^e`. Shifting by a fixed exponent
    /// keeps the lexicographic order.
    pub fn mul_term(&self, e: &HalfExpVec, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(f, d)| (f.mul(e), d * c)).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, d)| (e.clone(), d * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one(self.nvars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Formal partial derivative in variable `i` (0-based).
    pub fn partial(&self, i: usize) -> Result<Self> {
        if i >= self.nvars {
            return Err(Error::VariableOutOfRange { index: i, nvars: self.nvars });
        }
        let mut out = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            let d = e.doubled()[i];
            if d % 2 == 1 {
                return Err(Error::HalfIntegerDerivative(i));
            }
            if d == 0 {
                continue;
            }
            let mut f = e.clone();
            f.doubled_mut()[i] -= 2;
            out.push((f, c * BigInt::from(d / 2)));
        }
        Ok(Self::from_terms(self.nvars, out))
    }

    /// Exact substitution. Variable-to-variable chains are followed to their
    /// representative; cycles are rejected. An integer may replace a variable
    /// carrying a half-integer power only when it is a perfect square.
    pub fn specialize(&self, assignment: &Assignment) -> Result<Self> {
        enum Resolved {
            Var(usize),
            Value { value: BigInt, root: Option<BigInt> },
        }
        let mut resolved = Vec::with_capacity(self.nvars);
        for i in 0..self.nvars {
            let mut cur = i;
            let mut steps = 0;
            let r = loop {
                match assignment.get(&cur) {
                    None => break Resolved::Var(cur),
                    Some(Substitution::Var(j)) if *j == cur => break Resolved::Var(cur),
                    Some(Substitution::Var(j)) => {
                        if *j >= self.nvars {
                            return Err(Error::VariableOutOfRange { index: *j, nvars: self.nvars });
                        }
                        steps += 1;
                        if steps > self.nvars {
                            return Err(Error::CyclicSubstitution(i));
                        }
                        cur = *j;
                    }
                    Some(Substitution::Value(v)) => {
                        let root = if v.is_negative() {
                            None
                        } else {
                            let s = v.sqrt();
                            (&s * &s == *v).then_some(s)
                        };
                        break Resolved::Value { value: v.clone(), root };
                    }
                }
            };
            resolved.push(r);
        }
        for k in assignment.keys() {
            if *k >= self.nvars {
                return Err(Error::VariableOutOfRange { index: *k, nvars: self.nvars });
            }
        }

        let mut out = Vec::with_capacity(self.terms.len());
        'terms: for (e, c) in &self.terms {
            let mut f = HalfExpVec::zero(self.nvars);
            let mut coeff = c.clone();
            for (i, &d) in e.doubled().iter().enumerate() {
                if d == 0 {
                    continue;
                }
                match &resolved[i] {
                    Resolved::Var(r) => f.doubled_mut()[*r] += d,
                    Resolved::Value { value, root } => {
                        if value.is_zero() {
                            continue 'terms;
                        }
                        if d % 2 == 0 {
                            coeff *= num_traits::pow(value.clone(), usize::from(d / 2));
                        } else {
                            match root {
                                Some(s) => coeff *= num_traits::pow(s.clone(), usize::from(d)),
                                None => {
                                    return Err(Error::NonSquareSubstitution {
                                        var: i,
                                        value: value.to_string(),
                                    })
                                }
                            }
                        }
                    }
                }
            }
            out.push((f, coeff));
        }
        Ok(Self::from_terms(self.nvars, out))
    }

    /// Reduces every coefficient into `[0, modulus)`.
    pub fn reduce_mod(&self, modulus: &BigInt) -> Result<Self> {
        if *modulus < BigInt::from(2) {
            return Err(Error::InvalidModulus(modulus.to_string()));
        }
        Ok(MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter_map(|(e, c)| {
                    let r = c.mod_floor(modulus);
                    (!r.is_zero()).then(|| (e.clone(), r))
                })
                .collect(),
        })
    }

    /// Evaluates at an integer point. Requires integer exponents.
    pub fn eval(&self, point: &[BigInt]) -> Result<BigInt> {
        if point.len() != self.nvars {
            return Err(Error::LengthMismatch { expected: self.nvars, got: point.len() });
        }
        if !self.has_integer_exponents() {
            return Err(Error::HalfIntegerExponent);
        }
        let mut powers: Vec<Vec<BigInt>> = point.iter().map(|x| vec![BigInt::one(), x.clone()]).collect();
        let mut total = BigInt::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &d) in e.doubled().iter().enumerate() {
                let k = usize::from(d / 2);
                if k == 0 {
                    continue;
                }
                let table = &mut powers[i];
                while table.len() <= k {
                    let next = table.last().unwrap() * &point[i];
                    table.push(next);
                }
                term *= &table[k];
            }
            total += term;
        }
        Ok(total)
    }

    /// Renames variables: old variable `i` becomes `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        Self::from_terms(
            self.nvars,
            self.terms.iter().map(|(e, c)| (e.permute(perm), c.clone())),
        )
    }

    pub fn div_exact_scalar(&self, d: &BigInt) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::InexactDivision("division by zero".into()));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return Err(Error::InexactDivision(format!("{c} by {d}")));
            }
            terms.push((e.clone(), q));
        }
        Ok(MPoly { nvars: self.nvars, terms })
    }

    /// Exact quotient `self / d`; fails when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        self.check_nvars(d)?;
        let Some((lead_e, lead_c)) = d.leading_term() else {
            return Err(Error::InexactDivision("division by zero polynomial".into()));
        };
        if d.terms.len() == 1 {
            let mut terms = Vec::with_capacity(self.terms.len());
            for (e, c) in &self.terms {
                let f = lead_e
                    .quotient_of(e)
                    .ok_or_else(|| Error::InexactDivision("monomial does not divide".into()))?;
                let (q, r) = c.div_rem(lead_c);
                if !r.is_zero() {
                    return Err(Error::InexactDivision("coefficient does not divide".into()));
                }
                terms.push((f, q));
            }
            return Ok(MPoly { nvars: self.nvars, terms });
        }
        let mut rem: BTreeMap<HalfExpVec, BigInt> = self.terms.iter().cloned().collect();
        let mut quotient = Vec::new();
        while let Some((e, c)) = rem.pop_last() {
            let f = lead_e
                .quotient_of(&e)
                .ok_or_else(|| Error::InexactDivision("leading monomial does not divide".into()))?;
            let (q, r) = c.div_rem(lead_c);
            if !r.is_zero() {
                return Err(Error::InexactDivision("leading coefficient does not divide".into()));
            }
            for (de, dc) in &d.terms[..d.terms.len() - 1] {
                let g = de.mul(&f);
                let entry = rem.entry(g).or_insert_with(BigInt::zero);
                *entry -= dc * &q;
                if entry.is_zero() {
                    let key = de.mul(&f);
                    rem.remove(&key);
                }
            }
            quotient.push((f, q));
        }
        quotient.reverse();
        Ok(MPoly { nvars: self.nvars, terms: quotient })
    }

    /// Square root, normalized to a positive leading coefficient. The root
    /// may carry half-integer exponents; `None` when `self` is not a perfect
    /// square.
    ///
    /// Peels the lexicographically leading term and repeatedly divides the
    /// leading term of the remainder by twice the root's leading term.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(self.clone());
        }
        let (lead_e, lead_c) = self.leading_term()?;
        if lead_c.is_negative() {
            return None;
        }
        let root_c = lead_c.sqrt();
        if &root_c * &root_c != *lead_c {
            return None;
        }
        let root_e = lead_e.halve()?;
        // A square's degree in each variable is twice the root's.
        let bounds: Vec<u16> = (0..self.nvars).map(|i| self.max_doubled(i) / 2).collect();
        let two_lead: BigInt = &root_c * 2;

        let mut rem: BTreeMap<HalfExpVec, BigInt> = self.terms.iter().cloned().collect();
        let sub_term = |rem: &mut BTreeMap<HalfExpVec, BigInt>, e: HalfExpVec, c: BigInt| {
            let entry = rem.entry(e.clone()).or_insert_with(BigInt::zero);
            *entry -= c;
            if entry.is_zero() {
                rem.remove(&e);
            }
        };
        sub_term(&mut rem, lead_e.clone(), lead_c.clone());
        let mut root: Vec<(HalfExpVec, BigInt)> = vec![(root_e.clone(), root_c)];

        while let Some((e, c)) = rem.last_key_value() {
            let te = root_e.quotient_of(e)?;
            if te.doubled().iter().zip(&bounds).any(|(d, b)| d > b)
                || te >= root.last().unwrap().0
            {
                return None;
            }
            let (tc, r) = c.div_rem(&two_lead);
            if !r.is_zero() {
                return None;
            }
            // rem -= 2 * t * (root so far) + t^2
            for (se, sc) in &root {
                sub_term(&mut rem, se.mul(&te), sc * &tc * 2);
            }
            sub_term(&mut rem, te.mul(&te), &tc * &tc);
            root.push((te, tc));
        }
        root.reverse();
        let s = MPoly { nvars: self.nvars, terms: root };
        debug_assert_eq!(&(&s * &s), self);
        Some(s)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $impl:ident) => {
        impl $trait<&MPoly> for &MPoly {
            type Output = MPoly;
            fn $method(self, rhs: &MPoly) -> MPoly {
                self.$impl(rhs).expect("variable count mismatch in polynomial arithmetic")
            }
        }
        impl $trait<MPoly> for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: MPoly) -> MPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&MPoly> for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: &MPoly) -> MPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<MPoly> for &MPoly {
            type Output = MPoly;
            fn $method(self, rhs: MPoly) -> MPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl AddAssign<&MPoly> for MPoly {
    fn add_assign(&mut self, rhs: &MPoly) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&MPoly> for MPoly {
    fn sub_assign(&mut self, rhs: &MPoly) {
        *self = &*self - rhs;
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(mut self) -> MPoly {
        for (_, c) in &mut self.terms {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Serialize for MPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_terms().serialize(s)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, e: &HalfExpVec) -> fmt::Result {
    let mut first = true;
    for (i, &d) in e.doubled().iter().enumerate() {
        if d == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        match d {
            2 => write!(f, "x{}", i + 1)?,
            d if d % 2 == 0 => write!(f, "x{}^{}", i + 1, d / 2)?,
            d => write!(f, "x{}^({}/2)", i + 1, d)?,
        }
    }
    Ok(())
}

/// Writes `|c| * x^e` without sign.
fn write_unsigned_term(f: &mut fmt::Formatter<'_>, e: &HalfExpVec, c: &BigInt) -> fmt::Result {
    let mag = c.abs();
    if e.is_constant() {
        write!(f, "{mag}")
    } else if mag.is_one() {
        write_monomial(f, e)
    } else {
        write!(f, "{mag}*")?;
        write_monomial(f, e)
    }
}

/// Canonical text: ascending lexicographic term order, variables `x1..xm`,
/// odd doubled exponents as `^(k/2)`.
impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            write_unsigned_term(f, e, c)?;
        }
        Ok(())
    }
}
