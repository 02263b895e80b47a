//! Division-free characteristic polynomial (Berkowitz) over the integer
//! polynomial ring.

use super::mpoly::MPoly;

/// Coefficients of `det(tI - a)` from the highest power of `t` down, so the
/// result has length `n + 1` and starts with `1`.
///
/// Each step borders the leading principal submatrix by one row and column
/// and multiplies the previous coefficient vector by a lower-triangular
/// Toeplitz matrix whose first column is `[1, -a_rr, -R C, -R A C, ...]`.
pub fn berkowitz(a: &[Vec<MPoly>], nvars: usize) -> Vec<MPoly> {
    let n = a.len();
    let one = MPoly::one(nvars);
    if n == 0 {
        return vec![one];
    }
    let mut vect = vec![one.clone(), -&a[0][0]];
    for r in 1..n {
        let mut col = Vec::with_capacity(r + 2);
        col.push(one.clone());
        col.push(-&a[r][r]);
        let mut ck: Vec<MPoly> = (0..r).map(|i| a[i][r].clone()).collect();
        for k in 0..r {
            let mut dot = MPoly::zero(nvars);
            for (j, c) in ck.iter().enumerate() {
                if !a[r][j].is_zero() && !c.is_zero() {
                    dot += &(&a[r][j] * c);
                }
            }
            col.push(-dot);
            if k + 1 < r {
                ck = (0..r)
                    .map(|i| {
                        let mut s = MPoly::zero(nvars);
                        for (j, c) in ck.iter().enumerate() {
                            if !a[i][j].is_zero() && !c.is_zero() {
                                s += &(&a[i][j] * c);
                            }
                        }
                        s
                    })
                    .collect();
            }
        }
        let mut next = vec![MPoly::zero(nvars); r + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for j in 0..=i.min(r) {
                let (x, y) = (&col[i - j], &vect[j]);
                if !x.is_zero() && !y.is_zero() {
                    *slot += &(x * y);
                }
            }
        }
        vect = next;
    }
    vect
}

/// Determinant via the constant coefficient of the characteristic polynomial.
pub fn determinant(a: &[Vec<MPoly>], nvars: usize) -> MPoly {
    let n = a.len();
    let coeffs = berkowitz(a, nvars);
    let c0 = coeffs[n].clone();
    if n % 2 == 0 {
        c0
    } else {
        -c0
    }
}
