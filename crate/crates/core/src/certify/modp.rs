//! Dense univariate polynomials over `F_p` and distinct-degree
//! factorization, used to read off factor-degree patterns.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

/// Coefficients low to high, trimmed, entries in `[0, p)`.
type Poly = Vec<u64>;

fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn sub(a: &Poly, b: &Poly, p: u64) -> Poly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

fn mul(a: &Poly, b: &Poly, p: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

fn divrem(a: &Poly, b: &Poly, p: u64) -> (Poly, Poly) {
    let mut r = a.clone();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = inv_mod(*b.last().expect("nonzero divisor"), p);
    let mut q = vec![0u64; r.len() - b.len() + 1];
    for k in (0..q.len()).rev() {
        let c = r[k + b.len() - 1] * lead_inv % p;
        q[k] = c;
        if c != 0 {
            for (j, &y) in b.iter().enumerate() {
                r[k + j] = (r[k + j] + p - c * y % p) % p;
            }
        }
    }
    (trim(q), trim(r))
}

fn rem(a: &Poly, b: &Poly, p: u64) -> Poly {
    divrem(a, b, p).1
}

fn monic(a: Poly, p: u64) -> Poly {
    match a.last() {
        Some(&l) if l != 1 => {
            let inv = inv_mod(l, p);
            a.into_iter().map(|x| x * inv % p).collect()
        }
        _ => a,
    }
}

fn gcd(a: &Poly, b: &Poly, p: u64) -> Poly {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    monic(x, p)
}

fn derivative(a: &Poly, p: u64) -> Poly {
    trim(a.iter().enumerate().skip(1).map(|(i, &c)| (i as u64 % p) * c % p).collect())
}

/// `base^e mod f`.
fn powmod_poly(base: &Poly, mut e: u64, f: &Poly, p: u64) -> Poly {
    let mut result: Poly = vec![1];
    let mut b = rem(base, f, p);
    while e > 0 {
        if e & 1 == 1 {
            result = rem(&mul(&result, &b, p), f, p);
        }
        b = rem(&mul(&b, &b, p), f, p);
        e >>= 1;
    }
    result
}

/// Reduces integer coefficients (low to high) modulo `p`.
pub fn reduce(coeffs: &[BigInt], p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    trim(coeffs.iter().map(|c| c.mod_floor(&pb).to_u64().expect("reduced below p")).collect())
}

/// Degrees of the irreducible factors of a monic squarefree `f` over
/// `F_p`, or `None` when `f` is not squarefree modulo `p`.
pub fn factor_degrees(f: &[u64], p: u64) -> Option<Vec<usize>> {
    let f: Poly = trim(f.to_vec());
    let n = f.len().checked_sub(1)?;
    if n == 0 {
        return Some(Vec::new());
    }
    if gcd(&f, &derivative(&f, p), p).len() != 1 {
        return None;
    }
    let x: Poly = vec![0, 1];
    let mut rest = monic(f, p);
    let mut h = x.clone();
    let mut degrees = Vec::new();
    let mut d = 0;
    while rest.len() > 1 {
        d += 1;
        if 2 * d > rest.len() - 1 {
            degrees.push(rest.len() - 1);
            break;
        }
        h = powmod_poly(&h, p, &rest, p);
        let g = gcd(&sub(&h, &x, p), &rest, p);
        let gd = g.len() - 1;
        if gd > 0 {
            degrees.extend(std::iter::repeat(d).take(gd / d));
            rest = divrem(&rest, &g, p).0;
            h = rem(&h, &rest, p);
        }
    }
    degrees.sort_unstable();
    Some(degrees)
}

/// Bitmask of the degrees `k` for which some sub-multiset of `degrees`
/// sums to `k`.
pub fn subset_sums(degrees: &[usize], n: usize) -> Vec<bool> {
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for &d in degrees {
        for k in (d..=n).rev() {
            if reach[k - d] {
                reach[k] = true;
            }
        }
    }
    reach
}

/// Small primes above 100, deterministic.
pub fn sieve_primes(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut c = 101u64;
    while out.len() < count {
        if (2..).take_while(|d| d * d <= c).all(|d| c % d != 0) {
            out.push(c);
        }
        c += 2;
    }
    out
}
