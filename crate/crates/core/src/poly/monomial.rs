use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

/// Exponent vector of a monomial in `x1..xm`, each entry stored doubled so
/// that `x^(1/2)` is representable: entry `d` means exponent `d/2`.
///
/// Ordering is lexicographic on the doubled entries, `x1` most significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HalfExpVec(SmallVec<[u16; 8]>);

impl HalfExpVec {
    pub fn zero(nvars: usize) -> Self {
        HalfExpVec(SmallVec::from_elem(0, nvars))
    }

    pub fn from_doubled<I: IntoIterator<Item = u16>>(doubled: I) -> Self {
        HalfExpVec(doubled.into_iter().collect())
    }

    /// Builds from ordinary (integer) exponents.
    pub fn from_exponents(exps: &[u32]) -> Self {
        HalfExpVec(exps.iter().map(|&e| to_u16(2 * e)).collect())
    }

    /// `x_i^(doubled/2)`.
    pub fn unit(nvars: usize, i: usize, doubled: u16) -> Self {
        let mut e = Self::zero(nvars);
        e.0[i] = doubled;
        e
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn doubled(&self) -> &[u16] {
        &self.0
    }

    pub fn doubled_mut(&mut self) -> &mut [u16] {
        &mut self.0
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&d| d == 0)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|&d| d % 2 == 0)
    }

    pub fn total_doubled(&self) -> u32 {
        self.0.iter().map(|&d| u32::from(d)).sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.0.len(), other.0.len());
        HalfExpVec(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
                .collect(),
        )
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (a, &b) in self.0.iter_mut().zip(other.0.iter()) {
            *a = a.checked_add(b).expect("exponent overflow");
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(&a, &b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Self) -> Option<Self> {
        if !self.divides(other) {
            return None;
        }
        Some(HalfExpVec(
            other.0.iter().zip(self.0.iter()).map(|(&b, &a)| b - a).collect(),
        ))
    }

    pub fn pow(&self, k: u32) -> Self {
        HalfExpVec(self.0.iter().map(|&d| to_u16(u32::from(d) * k)).collect())
    }

    /// Halves every doubled entry; `None` unless all entries are even.
    pub fn halve(&self) -> Option<Self> {
        if !self.is_integral() {
            return None;
        }
        Some(HalfExpVec(self.0.iter().map(|&d| d / 2).collect()))
    }

    /// Result has `perm[i]` as the new index of old variable `i`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut out = Self::zero(self.0.len());
        for (i, &d) in self.0.iter().enumerate() {
            out.0[perm[i]] = d;
        }
        out
    }
}

fn to_u16(v: u32) -> u16 {
    u16::try_from(v).expect("exponent overflow")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_order_puts_x1_first() {
        let x1 = HalfExpVec::unit(2, 0, 2);
        let x2sq = HalfExpVec::from_exponents(&[0, 2]);
        assert!(x1 > x2sq);
    }

    #[test]
    fn half_powers_multiply_to_integers() {
        let h = HalfExpVec::unit(1, 0, 1);
        let full = h.mul(&h);
        assert!(full.is_integral());
        assert_eq!(full.halve().unwrap().doubled(), &[1]);
    }

    #[test]
    fn quotient_requires_divisibility() {
        let a = HalfExpVec::from_exponents(&[1, 2]);
        let b = HalfExpVec::from_exponents(&[1, 0]);
        assert_eq!(b.quotient_of(&a).unwrap(), HalfExpVec::from_exponents(&[0, 2]));
        assert!(a.quotient_of(&b).is_none());
    }
}
