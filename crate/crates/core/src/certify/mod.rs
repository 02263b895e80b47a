//! Irreducibility certificates and separation checks for characteristic
//! polynomials, plus the batch driver over enumerated graphs.
//!
//! Irreducibility is meant in `Z[ξ][t]` for polynomials monic in `t`. A
//! monic factorization survives any integer specialization of `ξ` with the
//! same `t`-degrees, so one irreducible univariate image proves the
//! multivariate polynomial irreducible.

pub mod modp;
pub mod suite;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{discriminant, resultant, MPoly, TPoly};

pub use suite::{certify_graphs, enumerate_graphs, run_suite, SuiteOptions, SuiteReport, SuiteStatus};

pub const DEFAULT_BUDGET: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Irreducible,
    Reducible,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimePattern {
    pub prime: u64,
    pub degrees: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    /// Degree one in `t`.
    Linear,
    /// The discriminant takes a non-square value at `point`, so the
    /// quadratic image there has no rational root.
    NonSquareDiscriminant { point: Vec<String>, value: String },
    /// The discriminant is not a square in `Z[ξ]`; no evaluation point in
    /// the budget exhibited this.
    DiscriminantNotSquare { discriminant: String },
    /// Factor-degree patterns modulo primes of the image at `point` admit
    /// no proper factor degree.
    ModularPatterns { point: Vec<String>, patterns: Vec<PrimePattern> },
    /// Re-multiplied factors equal the input.
    Factorization { factors: Vec<String> },
    Exhausted { points_tried: usize, note: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub verdict: Verdict,
    pub evidence: Evidence,
    #[serde(skip)]
    pub factors: Vec<TPoly>,
}

impl Certificate {
    fn new(verdict: Verdict, evidence: Evidence) -> Self {
        Certificate { verdict, evidence, factors: Vec::new() }
    }

    fn reducible(p: &TPoly, factors: Vec<TPoly>) -> Result<Self> {
        let product = factors.iter().fold(TPoly::one(p.nvars()), |acc, f| &acc * f);
        if product != *p {
            return Err(Error::InexactDivision("factorization does not re-multiply".into()));
        }
        Ok(Certificate {
            verdict: Verdict::Reducible,
            evidence: Evidence::Factorization { factors: factors.iter().map(|f| f.to_string()).collect() },
            factors,
        })
    }
}

/// First `count` primes, used as per-variable bases of the evaluation grid.
fn small_primes(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut c = 2u64;
    while out.len() < count {
        if (2..).take_while(|d| d * d <= c).all(|d| c % d != 0) {
            out.push(c);
        }
        c += 1;
    }
    out
}

/// Evaluation points `ξ_i = p_i^k` for `k = 1..=budget`, or seeded random
/// points when `seed` is given.
pub fn specialization_points(nvars: usize, budget: usize, seed: Option<u64>) -> Vec<Vec<BigInt>> {
    match seed {
        None => {
            let primes = small_primes(nvars);
            (1..=budget as u32)
                .map(|k| primes.iter().map(|&p| BigInt::from(p).pow(k)).collect())
                .collect()
        }
        Some(s) => {
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            (0..budget)
                .map(|_| (0..nvars).map(|_| BigInt::from(rng.gen_range(2u64..1_000_000))).collect())
                .collect()
        }
    }
}

fn render_point(p: &[BigInt]) -> Vec<String> {
    p.iter().map(|x| x.to_string()).collect()
}

fn check_monic(p: &TPoly) -> Result<usize> {
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    if !p.is_monic() {
        return Err(Error::NonMonic);
    }
    if n == 0 {
        return Err(Error::ConstantPolynomial);
    }
    if !p.has_integer_exponents() {
        return Err(Error::HalfIntegerExponent);
    }
    Ok(n)
}

/// Irreducibility certificate for a monic polynomial in `t`.
///
/// Degree 2 is decided exactly. Higher degrees are certified through
/// specializations whose images have incompatible factor-degree patterns
/// modulo several primes; otherwise the verdict is `Unknown`.
pub fn irreducible(p: &TPoly, budget: usize) -> Result<Certificate> {
    irreducible_with(p, budget, None)
}

pub fn irreducible_with(p: &TPoly, budget: usize, seed: Option<u64>) -> Result<Certificate> {
    let n = check_monic(p)?;
    let nv = p.nvars();
    if n == 1 {
        return Ok(Certificate::new(Verdict::Irreducible, Evidence::Linear));
    }
    if p.coeff(0).is_zero() {
        let rest = TPoly::from_coeffs(nv, p.coeffs()[1..].to_vec());
        return Certificate::reducible(p, vec![TPoly::t(nv), rest]);
    }
    let points = specialization_points(nv, budget, seed);
    if n == 2 {
        return quadratic(p, &points);
    }
    let primes = modp::sieve_primes(24);
    for point in &points {
        let image = p.eval_coeffs(point)?;
        let mut mask = vec![true; n + 1];
        let mut patterns = Vec::new();
        for &prime in &primes {
            let f = modp::reduce(&image, prime);
            let Some(degrees) = modp::factor_degrees(&f, prime) else { continue };
            let reach = modp::subset_sums(&degrees, n);
            for (m, r) in mask.iter_mut().zip(&reach) {
                *m &= *r;
            }
            patterns.push(PrimePattern { prime, degrees });
            if mask[1..n].iter().all(|&x| !x) {
                return Ok(Certificate::new(
                    Verdict::Irreducible,
                    Evidence::ModularPatterns { point: render_point(point), patterns },
                ));
            }
        }
    }
    Ok(Certificate::new(
        Verdict::Unknown,
        Evidence::Exhausted {
            points_tried: points.len(),
            note: "every image admitted a proper factor degree modulo all sieve primes".into(),
        },
    ))
}

fn quadratic(p: &TPoly, points: &[Vec<BigInt>]) -> Result<Certificate> {
    let (c0, c1) = (p.coeff(0), p.coeff(1));
    for point in points {
        let b = c1.eval(point)?;
        let c = c0.eval(point)?;
        let d = &b * &b - BigInt::from(4) * c;
        let square = !d.is_negative() && {
            let s = d.sqrt();
            &s * &s == d
        };
        if !square {
            return Ok(Certificate::new(
                Verdict::Irreducible,
                Evidence::NonSquareDiscriminant { point: render_point(point), value: d.to_string() },
            ));
        }
    }
    let disc = &(&c1 * &c1) - &c0.scale(&BigInt::from(4));
    // A root with half-integer exponents is not in Z[ξ].
    match disc.sqrt().filter(MPoly::has_integer_exponents) {
        None => Ok(Certificate::new(
            Verdict::Irreducible,
            Evidence::DiscriminantNotSquare { discriminant: disc.to_string() },
        )),
        Some(s) => {
            let two = BigInt::from(2);
            let r1 = (&-&c1 + &s).div_exact_scalar(&two)?;
            let r2 = (&-&c1 - &s).div_exact_scalar(&two)?;
            Certificate::reducible(p, vec![TPoly::linear(&r1), TPoly::linear(&r2)])
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SeparationFlags {
    pub distinct: bool,
    pub resultant_nonzero: bool,
    pub opposite_resultant_nonzero: bool,
    pub discriminant_a_nonzero: bool,
    pub discriminant_b_nonzero: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeparationReport {
    pub separated: bool,
    pub flags: SeparationFlags,
}

/// Whether a polynomial expression is nonzero: first by
/// evaluating at the grid points, then exactly.
fn nonzero_by_eval<F, G>(points: &[Vec<BigInt>], at: F, exact: G) -> Result<bool>
where
    F: Fn(&[BigInt]) -> Result<BigInt>,
    G: FnOnce() -> Result<MPoly>,
{
    for point in points {
        if !at(point)?.is_zero() {
            return Ok(true);
        }
    }
    Ok(!exact()?.is_zero())
}

fn image(p: &TPoly, point: &[BigInt]) -> Result<TPoly> {
    let coeffs = p.eval_coeffs(point)?.into_iter().map(|c| MPoly::constant(0, c)).collect();
    Ok(TPoly::from_coeffs(0, coeffs))
}

fn scalar(p: MPoly) -> BigInt {
    p.constant_value().expect("zero-variable polynomial")
}

/// Separation flags for two blocks. Evaluation at integer points only ever
/// proves nonvanishing; a zero value falls back to the exact computation.
pub fn separated(a: &TPoly, b: &TPoly) -> Result<SeparationReport> {
    check_monic(a).or_else(|e| if e == Error::ConstantPolynomial { Ok(0) } else { Err(e) })?;
    check_monic(b).or_else(|e| if e == Error::ConstantPolynomial { Ok(0) } else { Err(e) })?;
    let points = specialization_points(a.nvars(), 4, None);
    let res_nonzero = |x: &TPoly, y: &TPoly| {
        nonzero_by_eval(
            &points,
            |pt| Ok(scalar(resultant(&image(x, pt)?, &image(y, pt)?)?)),
            || resultant(x, y),
        )
    };
    let resultant_nonzero = res_nonzero(a, b)?;
    let opposite_resultant_nonzero = res_nonzero(a, &b.opposite())?;
    let disc_nonzero = |p: &TPoly| -> Result<bool> {
        if p.degree().unwrap_or(0) < 2 {
            return Ok(true);
        }
        nonzero_by_eval(
            &points,
            |pt| Ok(scalar(discriminant(&image(p, pt)?)?)),
            || discriminant(p),
        )
    };
    let flags = SeparationFlags {
        distinct: a != b,
        resultant_nonzero,
        opposite_resultant_nonzero,
        discriminant_a_nonzero: disc_nonzero(a)?,
        discriminant_b_nonzero: disc_nonzero(b)?,
    };
    let separated = flags.distinct
        && flags.resultant_nonzero
        && flags.opposite_resultant_nonzero
        && flags.discriminant_a_nonzero
        && flags.discriminant_b_nonzero;
    Ok(SeparationReport { separated, flags })
}
