//! Sparse multivariate polynomials with big-integer coefficients, the
//! polynomial <-> integer-multiset embedding `iota`, and the negativity /
//! essential-positivity machinery built on powers of a polynomial.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupTag};
use crate::multiset::GMultiset;

/// A sparse polynomial in `arity >= 1` variables over the integers.
///
/// Terms map exponent vectors (length = arity, entries >= 0) to nonzero
/// coefficients; the zero polynomial is the empty map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    arity: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl IntPolynomial {
    /// Build from (exponent vector, coefficient) pairs. Duplicate exponents
    /// accumulate; zero coefficients are dropped.
    pub fn new(arity: usize, terms: impl IntoIterator<Item = (Vec<u32>, BigInt)>) -> Result<Self> {
        if arity == 0 {
            return Err(Error::Domain("polynomial arity must be >= 1".into()));
        }
        let mut map: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (exp, coeff) in terms {
            if exp.len() != arity {
                return Err(Error::ArityMismatch(format!(
                    "exponent vector {exp:?} in a polynomial of arity {arity}"
                )));
            }
            let entry = map.entry(exp).or_insert_with(BigInt::zero);
            *entry += coeff;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(IntPolynomial { arity, terms: map })
    }

    pub fn zero(arity: usize) -> Self {
        IntPolynomial {
            arity: arity.max(1),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, BigInt::one())
    }

    pub fn constant(arity: usize, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; arity.max(1)], c);
        }
        IntPolynomial {
            arity: arity.max(1),
            terms,
        }
    }

    /// Univariate polynomial from ascending coefficients: `&[a0, a1, ...]`.
    pub fn univariate(coeffs: &[i64]) -> Self {
        Self::univariate_big(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn univariate_big(coeffs: Vec<BigInt>) -> Self {
        let terms = coeffs
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (vec![i as u32], c));
        IntPolynomial::new(1, terms).expect("arity 1 literal")
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterate terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &[u32]) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_else(BigInt::zero)
    }

    fn check_same_arity(&self, other: &Self) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch(format!(
                "polynomial of arity {} combined with arity {}",
                self.arity, other.arity
            )));
        }
        Ok(())
    }

    /// Exact product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_arity(other)?;
        let mut terms: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exp: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let entry = terms.entry(exp).or_insert_with(BigInt::zero);
                *entry += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(IntPolynomial {
            arity: self.arity,
            terms,
        })
    }

    /// Exact `n`-th power by repeated squaring. `p^0 = 1` (rejected for the
    /// zero polynomial, whose zeroth power is undefined).
    pub fn pow(&self, n: u32) -> Result<Self> {
        if n == 0 {
            if self.is_zero() {
                return Err(Error::InvalidArgument(
                    "0^0 is undefined for polynomials".into(),
                ));
            }
            return Ok(Self::one(self.arity));
        }
        let mut acc: Option<IntPolynomial> = None;
        let mut base = self.clone();
        let mut k = n;
        loop {
            if k & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.mul(&base)?,
                });
            }
            k >>= 1;
            if k == 0 {
                break;
            }
            base = base.mul(&base)?;
        }
        Ok(acc.expect("n >= 1"))
    }

    /// True iff every stored coefficient is positive (absent terms are zero,
    /// hence nonnegative; the zero polynomial is vacuously nonnegative).
    pub fn is_nonneg(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    /// The monoid embedding into integer-vector multisets: the element
    /// `(i_1, ..., i_m)` gets multiplicity equal to the coefficient of
    /// `x_1^{i_1} ... x_m^{i_m}`. Defined for nonzero polynomials with
    /// nonnegative coefficients; turns products into convolutions.
    pub fn iota(&self) -> Result<GMultiset> {
        if self.is_zero() {
            return Err(Error::Domain(
                "iota is undefined for the zero polynomial".into(),
            ));
        }
        if !self.is_nonneg() {
            return Err(Error::Domain(
                "iota requires nonnegative coefficients".into(),
            ));
        }
        GMultiset::new(self.terms.iter().map(|(exp, coeff)| {
            let coords = exp.iter().map(|&e| BigInt::from(e)).collect();
            let mult = coeff.to_biguint().expect("checked nonnegative");
            (GroupElement::IntVector(coords), mult)
        }))
    }

    /// Inverse of [`IntPolynomial::iota`] on integer-vector multisets with
    /// nonnegative coordinates.
    pub fn iota_inv(m: &GMultiset) -> Result<Self> {
        let arity = match m.tag() {
            GroupTag::ZVec(a) => a,
            other => {
                return Err(Error::GroupMismatch(format!(
                    "iota_inv expects an integer-vector multiset, got {other}"
                )))
            }
        };
        let mut terms = Vec::with_capacity(m.distinct_len());
        for (e, mult) in m.iter() {
            let GroupElement::IntVector(coords) = e else {
                unreachable!("tag guarantees integer vectors");
            };
            let mut exp = Vec::with_capacity(arity);
            for c in coords {
                if c.is_negative() {
                    return Err(Error::Domain(format!(
                        "iota_inv requires nonnegative coordinates, got element {e}"
                    )));
                }
                let digit = c.to_u32().ok_or_else(|| {
                    Error::Domain(format!("coordinate {c} too large for an exponent"))
                })?;
                exp.push(digit);
            }
            terms.push((exp, BigInt::from(mult.clone())));
        }
        IntPolynomial::new(arity, terms)
    }

    /// The least `n >= 1` with `p^n` nonnegative, searching `n <= n_max`.
    /// Nonnegativity of powers is not monotone, so every power from 1 up is
    /// checked; the definition takes a minimum.
    pub fn negativity(&self, n_max: u32) -> Result<NegativityResult> {
        if self.is_zero() {
            return Err(Error::InvalidArgument(
                "negativity is defined for nonzero polynomials".into(),
            ));
        }
        if n_max == 0 {
            return Err(Error::InvalidArgument("negativity needs n_max >= 1".into()));
        }
        let mut power = self.clone();
        for n in 1..=n_max {
            if power.is_nonneg() {
                return Ok(NegativityResult::Finite(n));
            }
            if n < n_max {
                power = power.mul(self)?;
            }
        }
        Ok(NegativityResult::ExceedsBound(n_max))
    }
}

/// Outcome of a bounded negativity search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NegativityResult {
    /// `p^n` is the first nonnegative power; every lower power has a
    /// negative coefficient.
    Finite(u32),
    /// No power up to the bound is nonnegative.
    ExceedsBound(u32),
}

/// Build a quartic `a0 + a1 x - x^2 + a0 x^3 + a0 x^4` whose negativity is
/// exactly `n`, with `a1 = 5^n` and `a0 = floor((n-1)/2 * 5^(2n))`; the
/// choice pins the sign of the `x^2` coefficient of `p^k` to flip at
/// `k = n`. For `n = 1` any nonnegative nonconstant polynomial works and
/// `1 + x` is returned. The negativity and the nonnegativity of
/// `(1+x) * p` are re-verified before returning.
pub fn construct_negativity_n(n: u32) -> Result<IntPolynomial> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "negativity is a positive integer".into(),
        ));
    }
    if n == 1 {
        return Ok(IntPolynomial::univariate(&[1, 1]));
    }
    let a1 = BigInt::from(5).pow(n);
    let a0 = (BigInt::from(n - 1) * BigInt::from(5).pow(2 * n)) / BigInt::from(2);
    let p = IntPolynomial::new(
        1,
        [
            (vec![0], a0.clone()),
            (vec![1], a1),
            (vec![2], BigInt::from(-1)),
            (vec![3], a0.clone()),
            (vec![4], a0),
        ],
    )?;
    match p.negativity(n)? {
        NegativityResult::Finite(k) if k == n => {}
        other => {
            return Err(Error::ConstructionInvariantViolated(format!(
                "expected negativity {n}, search returned {other:?}"
            )))
        }
    }
    let one_plus_x = IntPolynomial::univariate(&[1, 1]);
    if !one_plus_x.mul(&p)?.is_nonneg() {
        return Err(Error::ConstructionInvariantViolated(
            "(1+x) * p must have nonnegative coefficients".into(),
        ));
    }
    Ok(p)
}

/// One row of an essential-positivity scan: the signs at exponent `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub n: u32,
    pub p_pow_nonneg: bool,
    pub q_p_pow_nonneg: bool,
}

/// Resumable state of a scan: the polynomials and the incrementally
/// maintained powers `p^n` and `q * p^n` at `n = next_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanState {
    pub p: IntPolynomial,
    pub q: IntPolynomial,
    pub next_n: u32,
    p_pow: IntPolynomial,
    q_p_pow: IntPolynomial,
}

impl ScanState {
    pub fn new(p: IntPolynomial, q: IntPolynomial) -> Result<Self> {
        p.check_same_arity(&q)?;
        if q.is_zero() {
            return Err(Error::InvalidArgument(
                "scan factor q must be nonzero".into(),
            ));
        }
        if p.is_zero() {
            return Err(Error::InvalidArgument("scan base p must be nonzero".into()));
        }
        let p_pow = IntPolynomial::one(p.arity());
        let q_p_pow = q.clone();
        Ok(ScanState {
            p,
            q,
            next_n: 0,
            p_pow,
            q_p_pow,
        })
    }

    /// Emit the record for `next_n` and advance the powers by one step.
    pub fn step(&mut self) -> Result<ScanRecord> {
        let record = ScanRecord {
            n: self.next_n,
            p_pow_nonneg: self.p_pow.is_nonneg(),
            q_p_pow_nonneg: self.q_p_pow.is_nonneg(),
        };
        self.p_pow = self.p_pow.mul(&self.p)?;
        self.q_p_pow = self.q_p_pow.mul(&self.p)?;
        self.next_n += 1;
        Ok(record)
    }
}

/// Summary of a scan over `0 <= n <= n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    pub records: Vec<ScanRecord>,
    /// First `n >= 1` with `p^n` nonnegative, if any (would give a finite
    /// negativity).
    pub first_p_pow_nonneg: Option<u32>,
    /// First `n` with `q * p^n` NOT nonnegative, if any (would kill the
    /// essential-positivity candidate).
    pub first_q_failure: Option<u32>,
}

impl ScanReport {
    pub fn from_records(records: Vec<ScanRecord>) -> Self {
        let first_p_pow_nonneg = records
            .iter()
            .find(|r| r.n >= 1 && r.p_pow_nonneg)
            .map(|r| r.n);
        let first_q_failure = records.iter().find(|r| !r.q_p_pow_nonneg).map(|r| r.n);
        ScanReport {
            records,
            first_p_pow_nonneg,
            first_q_failure,
        }
    }
}

/// Scan `n = 0..=n_max`, recording whether `p^n` and `q * p^n` are
/// nonnegative at each step.
pub fn essential_positivity_scan(
    p: &IntPolynomial,
    q: &IntPolynomial,
    n_max: u32,
) -> Result<ScanReport> {
    let mut state = ScanState::new(p.clone(), q.clone())?;
    let mut records = Vec::with_capacity(n_max as usize + 1);
    for _ in 0..=n_max {
        records.push(state.step()?);
    }
    Ok(ScanReport::from_records(records))
}
