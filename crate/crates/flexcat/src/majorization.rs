//! Exact-rational majorization: probability spectra up to permutation,
//! tensor composition, LU equivalence, and brute-force tensor
//! factorization.
//!
//! All comparisons are exact. The boundary cases that motivate this (top-4
//! partial sums like 16/25 vs 129/200) are decided by rational arithmetic,
//! never floating point.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{parse_rational, rational_to_string};

/// A finite multiset of exact nonnegative rationals summing to 1, stored
/// sorted in descending order. Two values with the same multiset are equal;
/// the original entry order is irrelevant.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ProbVector {
    entries: Vec<BigRational>,
}

/// First failing top-k comparison of a majorization check, 1-indexed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MajorizationViolation {
    pub k: usize,
    pub lhs: BigRational,
    pub rhs: BigRational,
}

impl ProbVector {
    pub fn new(mut entries: Vec<BigRational>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Domain("probability vector must be nonempty".into()));
        }
        for e in &entries {
            if e.is_negative() {
                return Err(Error::Domain(format!(
                    "probabilities must be nonnegative, got {}",
                    rational_to_string(e)
                )));
            }
        }
        let total: BigRational = entries.iter().sum();
        if !total.is_one() {
            return Err(Error::Domain(format!(
                "probabilities must sum to 1, got {}",
                rational_to_string(&total)
            )));
        }
        entries.sort_unstable_by(|a, b| b.cmp(a));
        Ok(ProbVector { entries })
    }

    /// Parse entries given as rational or decimal literals.
    pub fn parse(entries: &[&str]) -> Result<Self> {
        Self::new(
            entries
                .iter()
                .map(|s| parse_rational(s))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    pub fn uniform(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("probability vector must be nonempty".into()));
        }
        let p = BigRational::new(1.into(), (n as i64).into());
        Self::new(vec![p; n])
    }

    /// Entries in descending order (zeros included).
    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    /// Number of nonzero entries, counted with multiplicity.
    pub fn support_len(&self) -> usize {
        self.entries.iter().filter(|e| e.is_positive()).count()
    }

    fn nonzero_entries(&self) -> Vec<BigRational> {
        self.entries
            .iter()
            .filter(|e| e.is_positive())
            .cloned()
            .collect()
    }

    /// `self` is majorized by `other` (`self < other` in the LOCC order):
    /// every top-k partial sum of `self` is at most that of `other`, shorter
    /// vectors padded with zeros. Total sums are both 1 by construction.
    pub fn is_majorized_by(&self, other: &Self) -> bool {
        self.first_majorization_violation(other).is_none()
    }

    /// The first k (1-indexed) whose top-k sums violate majorization,
    /// together with both sums; `None` when majorization holds.
    pub fn first_majorization_violation(&self, other: &Self) -> Option<MajorizationViolation> {
        let n = self.entries.len().max(other.entries.len());
        let zero = BigRational::zero();
        let mut lhs = BigRational::zero();
        let mut rhs = BigRational::zero();
        for k in 0..n {
            lhs += self.entries.get(k).unwrap_or(&zero);
            rhs += other.entries.get(k).unwrap_or(&zero);
            if lhs > rhs {
                return Some(MajorizationViolation { k: k + 1, lhs, rhs });
            }
        }
        None
    }

    /// Tensor product composition: the multiset of all pairwise products.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len() * other.entries.len());
        for a in &self.entries {
            for b in &other.entries {
                entries.push(a * b);
            }
        }
        entries.sort_unstable_by(|a, b| b.cmp(a));
        ProbVector { entries }
    }

    /// Equality up to reordering and adding or removing zeros.
    pub fn lu_equivalent(&self, other: &Self) -> bool {
        self.nonzero_entries() == other.nonzero_entries()
    }

    /// All ways (up to swap) of writing this spectrum as a tensor product of
    /// two spectra with at least `min_factor` nonzero entries each. An empty
    /// result for `min_factor = 2` certifies LU irreducibility.
    ///
    /// Search: zeros are stripped; for each divisor split (d1, d2) of the
    /// support size, the candidate first factors are the size-d1 multisets of
    /// entry ratios `u_i / u_max` containing ratio 1, normalized to sum 1;
    /// the second factor is reconstructed by exact multiset division and the
    /// pair is verified by tensoring. Results are sorted canonically.
    pub fn tensor_factorizations(
        &self,
        min_factor: usize,
    ) -> Result<Vec<(ProbVector, ProbVector)>> {
        if min_factor < 2 {
            return Err(Error::InvalidArgument(
                "factor support must be at least 2".into(),
            ));
        }
        let nz = self.nonzero_entries();
        if nz.len() < 2 {
            return Err(Error::InvalidArgument(
                "factorization needs at least 2 nonzero entries".into(),
            ));
        }
        let support = nz.len();
        let u_max = nz[0].clone();
        let mut ratios: Vec<BigRational> = nz.iter().map(|e| e / &u_max).collect();
        ratios.sort_unstable();
        ratios.dedup();

        let mut found: BTreeSet<(Vec<BigRational>, Vec<BigRational>)> = BTreeSet::new();
        for d1 in min_factor..=support {
            if !support.is_multiple_of(d1) {
                continue;
            }
            let d2 = support / d1;
            if d2 < min_factor || d1 > d2 {
                continue;
            }
            for mut tail in multisets_of_size(&ratios, d1 - 1) {
                tail.push(BigRational::one());
                let total: BigRational = tail.iter().sum();
                let factor_a: Vec<BigRational> = tail.iter().map(|r| r / &total).collect();
                if let Some(factor_b) = tensor_quotient(&nz, &factor_a) {
                    let a = ProbVector::new(factor_a).expect("ratios normalized to sum 1");
                    let b = ProbVector::new(factor_b).expect("quotient sums to 1");
                    // verify by composing back
                    if a.tensor(&b).nonzero_entries() == nz {
                        let (x, y) = if a.entries <= b.entries {
                            (a, b)
                        } else {
                            (b, a)
                        };
                        found.insert((x.entries, y.entries));
                    }
                }
            }
        }
        Ok(found
            .into_iter()
            .map(|(a, b)| (ProbVector { entries: a }, ProbVector { entries: b }))
            .collect())
    }
}

/// LOCC convertibility of pure bipartite states given their squared Schmidt
/// spectra: possible exactly when the source spectrum is majorized by the
/// target spectrum.
pub fn locc_possible(src: &ProbVector, dst: &ProbVector) -> bool {
    src.is_majorized_by(dst)
}

/// All multisets of the given size drawn from `pool` (ascending pools give
/// ascending multisets).
fn multisets_of_size(pool: &[BigRational], size: usize) -> Vec<Vec<BigRational>> {
    fn rec(
        pool: &[BigRational],
        start: usize,
        size: usize,
        cur: &mut Vec<BigRational>,
        out: &mut Vec<Vec<BigRational>>,
    ) {
        if size == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..pool.len() {
            cur.push(pool[i].clone());
            rec(pool, i, size - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(pool, 0, size, &mut Vec::new(), &mut out);
    out
}

/// Exact multiset division in the multiplicative group of positive
/// rationals: find `b` with `{a_i * b_j} = u` as multisets, working greedily
/// from the largest remaining element.
fn tensor_quotient(u: &[BigRational], a: &[BigRational]) -> Option<Vec<BigRational>> {
    let mut rem: BTreeMap<BigRational, usize> = BTreeMap::new();
    for e in u {
        *rem.entry(e.clone()).or_insert(0) += 1;
    }
    let mut counts_a: BTreeMap<BigRational, usize> = BTreeMap::new();
    for e in a {
        *counts_a.entry(e.clone()).or_insert(0) += 1;
    }
    let (a_max, &a_max_count) = counts_a.iter().next_back()?;
    let a_max = a_max.clone();
    let mut b = Vec::new();
    while let Some((x, &count)) = rem.iter().next_back() {
        if count % a_max_count != 0 {
            return None;
        }
        let k = count / a_max_count;
        let beta = x / &a_max;
        for (ai, &ci) in &counts_a {
            let key = ai * &beta;
            let need = ci * k;
            match rem.get_mut(&key) {
                Some(cur) if *cur > need => *cur -= need,
                Some(cur) if *cur == need => {
                    rem.remove(&key);
                }
                _ => return None,
            }
        }
        for _ in 0..k {
            b.push(beta.clone());
        }
    }
    Some(b)
}
