//! Shared generators and properties, used by the property suite at default
//! case counts and re-run by the acceptance suite at 1000 cases each.
//!
//! Each test target compiles its own copy, so not every item is used by
//! every target.
#![allow(dead_code)]

use proptest::prelude::*;

use flexcat::catalysis::{
    cat_with, chain_to_multicopy, multicopy_to_chain, verify_cycle, TTInstance, TTState,
};
use flexcat::{GMultiset, GroupElement, IntPolynomial, ProbVector};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

/// Multisets over Z: support <= 6, elements in [0, 10], multiplicities <= 5.
pub fn zmultiset() -> impl Strategy<Value = GMultiset> {
    prop::collection::btree_map(0i64..=10, 1u64..=5, 1..=6usize).prop_map(|m| {
        GMultiset::from_counts(m.into_iter().map(|(e, k)| (GroupElement::int_scalar(e), k)))
            .expect("nonempty by size range")
    })
}

pub fn distinct_zmultiset_pair() -> impl Strategy<Value = (GMultiset, GMultiset)> {
    (zmultiset(), zmultiset()).prop_filter("need distinct multisets", |(a, b)| a != b)
}

/// Multisets over Z^2 with small coordinates.
pub fn zvec2_multiset() -> impl Strategy<Value = GMultiset> {
    prop::collection::btree_map((0i64..=5, 0i64..=5), 1u64..=4, 1..=5usize).prop_map(|m| {
        GMultiset::from_counts(m.into_iter().map(|((x, y), k)| {
            (
                GroupElement::int_vector(vec![BigInt::from(x), BigInt::from(y)]).unwrap(),
                k,
            )
        }))
        .expect("nonempty by size range")
    })
}

/// Nonzero univariate polynomials with degree <= 6 and coefficients in
/// [1, 9] on present terms.
pub fn nonneg_poly() -> impl Strategy<Value = IntPolynomial> {
    prop::collection::btree_map(0u32..=6, 1i64..=9, 1..=7usize).prop_map(|terms| {
        IntPolynomial::new(
            1,
            terms.into_iter().map(|(e, c)| (vec![e], BigInt::from(c))),
        )
        .expect("valid arity-1 terms")
    })
}

/// Bivariate polynomials with signed coefficients.
pub fn signed_poly2() -> impl Strategy<Value = IntPolynomial> {
    prop::collection::btree_map(
        (0u32..=4, 0u32..=4),
        (-9i64..=9).prop_filter("nonzero", |c| *c != 0),
        1..=8usize,
    )
    .prop_map(|terms| {
        IntPolynomial::new(
            2,
            terms
                .into_iter()
                .map(|((e1, e2), c)| (vec![e1, e2], BigInt::from(c))),
        )
        .expect("valid arity-2 terms")
    })
}

/// Magnitude-phase multisets with small rational magnitudes and phases.
pub fn magphase_multiset() -> impl Strategy<Value = GMultiset> {
    prop::collection::btree_map(
        (1u32..=6, 1u32..=4, 0u32..=5, 1u32..=6),
        1u64..=3,
        1..=4usize,
    )
    .prop_map(|m| {
        GMultiset::new(m.into_iter().map(|((mn, md, pn, pd), k)| {
            let e = GroupElement::mag_phase(
                BigRational::new(mn.into(), md.into()),
                BigRational::new(pn.into(), pd.into()),
            )
            .expect("positive magnitude");
            (e, k.into())
        }))
        .expect("nonempty by size range")
    })
}

/// Exact probability vectors with 1 to `max_len` entries (zeros allowed).
pub fn prob_vector_with(max_len: usize) -> impl Strategy<Value = ProbVector> {
    prop::collection::vec((0u32..=12, 1u32..=6), 1..=max_len).prop_filter_map(
        "need positive total",
        |pairs| {
            let entries: Vec<BigRational> = pairs
                .iter()
                .map(|&(n, d)| BigRational::new(n.into(), d.into()))
                .collect();
            let total: BigRational = entries.iter().sum();
            if total.is_zero() {
                return None;
            }
            let normalized = entries.into_iter().map(|e| e / &total).collect();
            Some(ProbVector::new(normalized).expect("normalized to sum 1"))
        },
    )
}

pub fn prob_vector() -> impl Strategy<Value = ProbVector> {
    prob_vector_with(5)
}

/// A vector strictly above `u` in the majorization order (unless the merged
/// entry was zero): add entry `j` onto entry `i` and zero out `j`.
pub fn merge_entries(u: &ProbVector, i: usize, j: usize) -> ProbVector {
    let mut entries: Vec<BigRational> = u.entries().to_vec();
    let moved = entries[j].clone();
    entries[i] += moved;
    entries[j] = BigRational::zero();
    ProbVector::new(entries).expect("sum unchanged")
}

/// A majorization-comparable pair `u < v` with at most `max_len` entries.
pub fn comparable_prob_pair_with(
    max_len: usize,
) -> impl Strategy<Value = (ProbVector, ProbVector)> {
    (
        prob_vector_with(max_len),
        any::<prop::sample::Index>(),
        any::<prop::sample::Index>(),
    )
        .prop_map(|(u, i, j)| {
            let n = u.entries().len();
            if n < 2 {
                let v = u.clone();
                return (u, v);
            }
            let i = i.index(n);
            let mut j = j.index(n);
            if i == j {
                j = (j + 1) % n;
            }
            let v = merge_entries(&u, i.min(j), i.max(j));
            (u, v)
        })
}

pub fn comparable_prob_pair() -> impl Strategy<Value = (ProbVector, ProbVector)> {
    comparable_prob_pair_with(5)
}

/// Inputs for the majorization multicopy round trip. Tensor powers multiply
/// entry counts, so the vector length budget shrinks as the copy count
/// grows.
pub fn multicopy_majorization_inputs(
) -> impl Strategy<Value = (ProbVector, ProbVector, ProbVector, u32)> {
    (1u32..=3).prop_flat_map(|n| {
        let max_len = if n == 3 { 2 } else { 3 };
        (
            comparable_prob_pair_with(max_len),
            prob_vector_with(max_len),
        )
            .prop_map(move |((a, b), c)| (a, b, c, n))
    })
}

// ---- properties over Z-multisets -----------------------------------------

pub fn prop_msum_commutative_associative(
    a: &GMultiset,
    b: &GMultiset,
    c: &GMultiset,
) -> Result<(), TestCaseError> {
    prop_assert_eq!(a.msum(b).unwrap(), b.msum(a).unwrap());
    prop_assert_eq!(
        a.msum(b).unwrap().msum(c).unwrap(),
        a.msum(&b.msum(c).unwrap()).unwrap()
    );
    prop_assert_eq!(a.msum(b).unwrap().size(), a.size() * b.size());
    Ok(())
}

pub fn prop_translation_invariance(
    a: &GMultiset,
    b: &GMultiset,
    shift: i64,
) -> Result<(), TestCaseError> {
    let g = GroupElement::int_scalar(shift);
    prop_assert_eq!(
        a.msum(b).unwrap().translate(&g).unwrap(),
        a.translate(&g).unwrap().msum(b).unwrap()
    );
    Ok(())
}

pub fn prop_cancellation(a: &GMultiset, b: &GMultiset, c: &GMultiset) -> Result<(), TestCaseError> {
    // a != b is guaranteed by the generator
    prop_assert_ne!(a.msum(c).unwrap(), b.msum(c).unwrap());
    prop_assert_eq!(a.msum(c).unwrap().deconvolve(c).unwrap(), Some(a.clone()));
    Ok(())
}

pub fn prop_halving(a: &GMultiset, b: &GMultiset) -> Result<(), TestCaseError> {
    prop_assert_ne!(a.msum(a).unwrap(), b.msum(b).unwrap());
    Ok(())
}

pub fn prop_div_by_n(a: &GMultiset, b: &GMultiset) -> Result<(), TestCaseError> {
    for n in [2u32, 3] {
        prop_assert_ne!(a.n_fold(n).unwrap(), b.n_fold(n).unwrap());
    }
    Ok(())
}

pub fn prop_deconvolve_msum_identity(b: &GMultiset, d: &GMultiset) -> Result<(), TestCaseError> {
    prop_assert_eq!(b.msum(d).unwrap().deconvolve(b).unwrap(), Some(d.clone()));
    Ok(())
}

pub fn prop_translation_recovery(a: &GMultiset, shift: i64) -> Result<(), TestCaseError> {
    let g = GroupElement::int_scalar(shift);
    let translated = a.translate(&g).unwrap();
    let found = a.equal_up_to_translation(&translated).unwrap();
    prop_assert!(found.is_some());
    prop_assert_eq!(a.translate(&found.unwrap()).unwrap(), translated);
    Ok(())
}

/// Over a torsion-free group no catalyst helps: with exact equality a
/// catalytic pair must already be equal, and up to translation it must
/// already be translation-equivalent.
pub fn prop_no_catalysis_over_z(
    a: &GMultiset,
    b: &GMultiset,
    c: &GMultiset,
) -> Result<(), TestCaseError> {
    let (sa, sb, sc) = (
        TTState::Multiset(a.clone()),
        TTState::Multiset(b.clone()),
        TTState::Multiset(c.clone()),
    );
    prop_assert_eq!(cat_with(TTInstance::ZVecEq, &sa, &sb, &sc).unwrap(), a == b);
    prop_assert_eq!(
        cat_with(TTInstance::ZVecProp, &sa, &sb, &sc).unwrap(),
        a.equal_up_to_translation(b).unwrap().is_some()
    );
    Ok(())
}

// ---- properties of the polynomial embedding -------------------------------

pub fn prop_iota_homomorphism(p: &IntPolynomial, q: &IntPolynomial) -> Result<(), TestCaseError> {
    prop_assert_eq!(
        p.mul(q).unwrap().iota().unwrap(),
        p.iota().unwrap().msum(&q.iota().unwrap()).unwrap()
    );
    prop_assert_eq!(&IntPolynomial::iota_inv(&p.iota().unwrap()).unwrap(), p);
    Ok(())
}

pub fn prop_pow_additive(p: &IntPolynomial, a: u32, b: u32) -> Result<(), TestCaseError> {
    prop_assert_eq!(
        p.pow(a + b).unwrap(),
        p.pow(a).unwrap().mul(&p.pow(b).unwrap()).unwrap()
    );
    Ok(())
}

// ---- majorization properties ----------------------------------------------

pub fn prop_majorization_reflexive(u: &ProbVector) -> Result<(), TestCaseError> {
    prop_assert!(u.is_majorized_by(u));
    Ok(())
}

pub fn prop_majorization_transitive_on_chain(u: &ProbVector) -> Result<(), TestCaseError> {
    if u.entries().len() < 3 {
        return Ok(());
    }
    let v = merge_entries(u, 0, u.entries().len() - 1);
    let w = merge_entries(&v, 0, 1);
    prop_assert!(u.is_majorized_by(&v));
    prop_assert!(v.is_majorized_by(&w));
    prop_assert!(u.is_majorized_by(&w));
    Ok(())
}

pub fn prop_mutual_majorization_is_lu_equivalence(
    u: &ProbVector,
    v: &ProbVector,
) -> Result<(), TestCaseError> {
    let mutual = u.is_majorized_by(v) && v.is_majorized_by(u);
    prop_assert_eq!(mutual, u.lu_equivalent(v));
    Ok(())
}

pub fn prop_tensor_monotone(
    u: &ProbVector,
    v: &ProbVector,
    w: &ProbVector,
) -> Result<(), TestCaseError> {
    if u.is_majorized_by(v) {
        prop_assert!(u.tensor(w).is_majorized_by(&v.tensor(w)));
    }
    Ok(())
}

pub fn prop_tensor_commutative_associative(
    u: &ProbVector,
    v: &ProbVector,
    w: &ProbVector,
) -> Result<(), TestCaseError> {
    prop_assert_eq!(u.tensor(v), v.tensor(u));
    prop_assert_eq!(u.tensor(v).tensor(w), u.tensor(&v.tensor(w)));
    Ok(())
}

pub fn prop_uniform_is_bottom(u: &ProbVector) -> Result<(), TestCaseError> {
    let uniform = ProbVector::uniform(u.entries().len()).unwrap();
    prop_assert!(uniform.is_majorized_by(u));
    Ok(())
}

// ---- multicopy <-> chain round trips ---------------------------------------

/// For a majorization pair `a < b` and any catalyst `c`, the n-copy
/// transformation holds, the constructed chain verifies, and aggregating the
/// chain reproduces an accepted multicopy statement.
pub fn prop_multicopy_chain_round_trip_majorization(
    a: &ProbVector,
    b: &ProbVector,
    c: &ProbVector,
    n: u32,
) -> Result<(), TestCaseError> {
    let tt = TTInstance::Majorization;
    let (sa, sb, sc) = (
        TTState::Prob(a.clone()),
        TTState::Prob(b.clone()),
        TTState::Prob(c.clone()),
    );
    let cycle = multicopy_to_chain(tt, &sa, &sb, &sc, n, false).unwrap();
    prop_assert_eq!(cycle.len(), n as usize);
    prop_assert!(verify_cycle(tt, &sa, &sb, &cycle).unwrap());
    let stmt = chain_to_multicopy(tt, &sa, &sb, &cycle).unwrap();
    prop_assert!(stmt.holds);
    prop_assert_eq!(stmt.copies, n);
    Ok(())
}

/// For `A = B + D` over Z the n-copy extraction always holds; round-trip the
/// chain construction through the aggregate statement.
pub fn prop_multicopy_chain_round_trip_extraction(
    b: &GMultiset,
    d: &GMultiset,
    c: &GMultiset,
    n: u32,
) -> Result<(), TestCaseError> {
    let tt = TTInstance::ZVecEq;
    let a = b.msum(d).unwrap();
    let (sa, sb, sc) = (
        TTState::Multiset(a),
        TTState::Multiset(b.clone()),
        TTState::Multiset(c.clone()),
    );
    let cycle = multicopy_to_chain(tt, &sa, &sb, &sc, n, true).unwrap();
    prop_assert_eq!(cycle.len(), n as usize);
    let stmt = chain_to_multicopy(tt, &sa, &sb, &cycle).unwrap();
    prop_assert!(stmt.holds);
    Ok(())
}
