//! Finite nonempty multisets over a group, with big-integer multiplicities.
//!
//! The monoid operation `msum` is the convolution (Minkowski sum with
//! multiplicities): the multiplicity of `x` in `A + B` is the number of ways
//! to write `x = a + b` with `a` drawn from `A` and `b` from `B`, counted
//! with multiplicity. Over `Z` this is exactly polynomial multiplication of
//! the multiplicity generating functions.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupTag};

/// A finite nonempty multiset over one of the concrete groups.
///
/// Keys are stored in the canonical element order; no key has multiplicity
/// zero; all keys share the group tag (and arity).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GMultiset {
    tag: GroupTag,
    elems: BTreeMap<GroupElement, BigUint>,
}

impl GMultiset {
    /// Build a multiset from (element, multiplicity) pairs. Duplicate
    /// elements accumulate. Zero multiplicities and empty input are rejected,
    /// as are mixed group tags.
    pub fn new(items: impl IntoIterator<Item = (GroupElement, BigUint)>) -> Result<Self> {
        let mut elems: BTreeMap<GroupElement, BigUint> = BTreeMap::new();
        let mut tag = None;
        for (e, m) in items {
            if m.is_zero() {
                return Err(Error::Domain(format!("multiplicity of {e} must be >= 1")));
            }
            match tag {
                None => tag = Some(e.tag()),
                Some(t) if t == e.tag() => {}
                Some(t) => {
                    return Err(Error::GroupMismatch(format!(
                        "element {} of group {} in a multiset over {}",
                        e,
                        e.tag(),
                        t
                    )))
                }
            }
            *elems.entry(e).or_insert_with(BigUint::zero) += m;
        }
        match tag {
            None => Err(Error::Domain("multiset must be nonempty".into())),
            Some(tag) => Ok(GMultiset { tag, elems }),
        }
    }

    /// Build from small multiplicities, for literals in tests and examples.
    pub fn from_counts(items: impl IntoIterator<Item = (GroupElement, u64)>) -> Result<Self> {
        Self::new(items.into_iter().map(|(e, m)| (e, BigUint::from(m))))
    }

    pub fn singleton(e: GroupElement) -> Self {
        let tag = e.tag();
        let mut elems = BTreeMap::new();
        elems.insert(e, BigUint::one());
        GMultiset { tag, elems }
    }

    /// The monoid identity of `M_G`: the singleton of the group identity.
    pub fn identity_singleton(tag: GroupTag) -> Self {
        Self::singleton(GroupElement::identity(tag))
    }

    pub fn tag(&self) -> GroupTag {
        self.tag
    }

    /// Total size: the sum of all multiplicities.
    pub fn size(&self) -> BigUint {
        self.elems.values().sum()
    }

    /// Number of distinct elements.
    pub fn distinct_len(&self) -> usize {
        self.elems.len()
    }

    pub fn multiplicity(&self, e: &GroupElement) -> BigUint {
        self.elems.get(e).cloned().unwrap_or_else(BigUint::zero)
    }

    /// Iterate (element, multiplicity) in canonical element order.
    pub fn iter(&self) -> impl Iterator<Item = (&GroupElement, &BigUint)> {
        self.elems.iter()
    }

    /// The canonically least element.
    pub fn min_element(&self) -> &GroupElement {
        self.elems.keys().next().expect("multiset is nonempty")
    }

    fn check_same_group(&self, other: &Self) -> Result<()> {
        if self.tag != other.tag {
            return Err(Error::GroupMismatch(format!(
                "multiset over {} combined with multiset over {}",
                self.tag, other.tag
            )));
        }
        Ok(())
    }

    /// Convolution: the multiset of all pairwise sums.
    /// `size(A + B) = size(A) * size(B)`.
    pub fn msum(&self, other: &Self) -> Result<Self> {
        self.check_same_group(other)?;
        let mut elems: BTreeMap<GroupElement, BigUint> = BTreeMap::new();
        for (a, ma) in &self.elems {
            for (b, mb) in &other.elems {
                let key = a.add(b)?;
                *elems.entry(key).or_insert_with(BigUint::zero) += ma * mb;
            }
        }
        Ok(GMultiset {
            tag: self.tag,
            elems,
        })
    }

    /// `A` summed with itself `n` times (`n >= 1`), by repeated squaring.
    pub fn n_fold(&self, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument(
                "n_fold requires n >= 1 (the empty sum is not a multiset)".into(),
            ));
        }
        let mut acc: Option<GMultiset> = None;
        let mut base = self.clone();
        let mut k = n;
        loop {
            if k & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.msum(&base)?,
                });
            }
            k >>= 1;
            if k == 0 {
                break;
            }
            base = base.msum(&base)?;
        }
        Ok(acc.expect("n >= 1"))
    }

    /// Shift every element by `g`; multiplicities are preserved.
    pub fn translate(&self, g: &GroupElement) -> Result<Self> {
        if g.tag() != self.tag {
            return Err(Error::GroupMismatch(format!(
                "translating multiset over {} by element of {}",
                self.tag,
                g.tag()
            )));
        }
        let mut elems = BTreeMap::new();
        for (e, m) in &self.elems {
            elems.insert(e.add(g)?, m.clone());
        }
        Ok(GMultiset {
            tag: self.tag,
            elems,
        })
    }

    /// Find `g` with `translate(self, g) == other`, if one exists.
    ///
    /// Deterministic: candidates are `b - min(self)` for `b` ranging over
    /// `other` in canonical order, and the first valid one is returned. On
    /// the ordered groups the minimum of `other` is the only possible image
    /// of the minimum of `self`, so only that candidate is tried.
    pub fn equal_up_to_translation(&self, other: &Self) -> Result<Option<GroupElement>> {
        self.check_same_group(other)?;
        if self.elems.len() != other.elems.len() || self.size() != other.size() {
            return Ok(None);
        }
        let anchor = self.min_element();
        let candidates: Vec<&GroupElement> = match self.tag {
            GroupTag::ZVec(_) | GroupTag::Rat => vec![other.min_element()],
            GroupTag::MagPhase => other.elems.keys().collect(),
        };
        for b in candidates {
            let g = b.sub(anchor)?;
            if self.translate(&g)? == *other {
                return Ok(Some(g));
            }
        }
        Ok(None)
    }

    /// Exact deconvolution over the ordered torsion-free groups: the unique
    /// `D` with `msum(divisor, D) == self`, or `None` if there is none.
    ///
    /// Greedy long division by the least element: repeatedly take the
    /// canonical minimum `s` of the remainder, put `d = s - min(divisor)`
    /// into the quotient with the forced multiplicity, and subtract the
    /// translated divisor; fail if any multiplicity would go negative.
    pub fn deconvolve(&self, divisor: &Self) -> Result<Option<Self>> {
        self.check_same_group(divisor)?;
        if matches!(self.tag, GroupTag::MagPhase) {
            return Err(Error::UnsupportedOperation(
                "deconvolve needs a translation-invariant total order; \
                 the magnitude-phase group has torsion"
                    .into(),
            ));
        }
        if !(self.size() % divisor.size()).is_zero() {
            return Ok(None);
        }
        let min_b = divisor.min_element().clone();
        let head_mult = divisor.multiplicity(&min_b);
        let mut rem = self.elems.clone();
        let mut quot: BTreeMap<GroupElement, BigUint> = BTreeMap::new();
        while let Some((s, ms)) = rem.first_key_value() {
            let (q, r) = ms.div_rem(&head_mult);
            if !r.is_zero() {
                return Ok(None);
            }
            let d = s.sub(&min_b)?;
            for (b, mb) in divisor.iter() {
                let key = b.add(&d)?;
                let need = mb * &q;
                match rem.get_mut(&key) {
                    Some(cur) if *cur > need => *cur -= need,
                    Some(cur) if *cur == need => {
                        rem.remove(&key);
                    }
                    _ => return Ok(None),
                }
            }
            quot.insert(d, q);
        }
        Ok(Some(GMultiset {
            tag: self.tag,
            elems: quot,
        }))
    }

    /// Translate so the minimum becomes the identity: componentwise minima
    /// for integer vectors, the overall minimum for rationals. Idempotent.
    pub fn min_normalize(&self) -> Result<Self> {
        let shift = match self.tag {
            GroupTag::ZVec(m) => {
                let mut mins: Vec<BigInt> = match self.elems.keys().next() {
                    Some(GroupElement::IntVector(v)) => v.clone(),
                    _ => unreachable!("tag guarantees integer vectors"),
                };
                for e in self.elems.keys() {
                    if let GroupElement::IntVector(v) = e {
                        for i in 0..m {
                            if v[i] < mins[i] {
                                mins[i] = v[i].clone();
                            }
                        }
                    }
                }
                GroupElement::IntVector(mins)
            }
            GroupTag::Rat => self.min_element().clone(),
            GroupTag::MagPhase => {
                return Err(Error::UnsupportedOperation(
                    "min_normalize is defined only over the ordered groups".into(),
                ))
            }
        };
        self.translate(&shift.inverse())
    }
}

/// Literal constructor over `Z`: `zset(&[(element, multiplicity), ...])`.
pub fn zset(items: &[(i64, u64)]) -> GMultiset {
    GMultiset::from_counts(items.iter().map(|&(e, m)| (GroupElement::int_scalar(e), m)))
        .expect("valid literal")
}
