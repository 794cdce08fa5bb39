//! Catalytic transformation classes over the concrete transformation
//! theories: single-catalyst checks, extraction witnesses, flexible-catalyst
//! cycle search, multicopy <-> chain constructions, the magnitude-phase
//! decision procedure, and a bounded brute-force catalyst search.
//!
//! A transformation theory fixes a state type (multiset or probability
//! spectrum), a composition (convolution or tensor product), and a preorder
//! (equality, equality up to translation, or majorization). Catalysis of
//! `(A, B)` with catalyst `C` means `A . C <= B . C`; a flexible catalyst
//! set is one where every member has a valid successor, which happens
//! exactly when the successor graph contains a directed cycle.

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupTag};
use crate::majorization::ProbVector;
use crate::multiset::GMultiset;

/// How a multiset transformation theory compares states.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MultisetRelation {
    Equal,
    UpToTranslation,
}

/// The concrete transformation theories in scope.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TTInstance {
    /// Integer-vector multisets under exact equality.
    #[serde(rename = "zvec-eq")]
    ZVecEq,
    /// Integer-vector multisets up to translation.
    #[serde(rename = "zvec-prop")]
    ZVecProp,
    /// Rational multisets up to translation.
    #[serde(rename = "rat-prop")]
    RatProp,
    /// Magnitude-phase multisets up to translation (the permutation-matrix
    /// theory).
    #[serde(rename = "magphase-prop")]
    MagPhaseProp,
    /// Probability spectra under majorization (the LOCC theory).
    #[serde(rename = "majorization")]
    Majorization,
}

/// A state of some transformation theory.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TTState {
    Multiset(GMultiset),
    Prob(ProbVector),
}

impl TTState {
    pub fn as_multiset(&self) -> Option<&GMultiset> {
        match self {
            TTState::Multiset(m) => Some(m),
            TTState::Prob(_) => None,
        }
    }

    pub fn as_prob(&self) -> Option<&ProbVector> {
        match self {
            TTState::Multiset(_) => None,
            TTState::Prob(p) => Some(p),
        }
    }
}

impl From<GMultiset> for TTState {
    fn from(m: GMultiset) -> Self {
        TTState::Multiset(m)
    }
}

impl From<ProbVector> for TTState {
    fn from(p: ProbVector) -> Self {
        TTState::Prob(p)
    }
}

impl TTInstance {
    pub fn multiset_relation(self) -> Option<MultisetRelation> {
        match self {
            TTInstance::ZVecEq => Some(MultisetRelation::Equal),
            TTInstance::ZVecProp | TTInstance::RatProp | TTInstance::MagPhaseProp => {
                Some(MultisetRelation::UpToTranslation)
            }
            TTInstance::Majorization => None,
        }
    }

    /// Witness-producing deconvolution is available only over the ordered
    /// torsion-free groups.
    pub fn supports_witness_search(self) -> bool {
        matches!(
            self,
            TTInstance::ZVecEq | TTInstance::ZVecProp | TTInstance::RatProp
        )
    }

    fn check_state(self, s: &TTState) -> Result<()> {
        let ok = match (self, s) {
            (TTInstance::ZVecEq | TTInstance::ZVecProp, TTState::Multiset(m)) => {
                matches!(m.tag(), GroupTag::ZVec(_))
            }
            (TTInstance::RatProp, TTState::Multiset(m)) => m.tag() == GroupTag::Rat,
            (TTInstance::MagPhaseProp, TTState::Multiset(m)) => m.tag() == GroupTag::MagPhase,
            (TTInstance::Majorization, TTState::Prob(_)) => true,
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::GroupMismatch(format!(
                "state does not belong to the {self:?} transformation theory"
            )))
        }
    }

    fn check_states<'a>(self, states: impl IntoIterator<Item = &'a TTState>) -> Result<()> {
        for s in states {
            self.check_state(s)?;
        }
        Ok(())
    }

    /// The monoid composition: convolution or tensor product.
    pub fn compose(self, a: &TTState, b: &TTState) -> Result<TTState> {
        self.check_states([a, b])?;
        match (a, b) {
            (TTState::Multiset(x), TTState::Multiset(y)) => Ok(TTState::Multiset(x.msum(y)?)),
            (TTState::Prob(x), TTState::Prob(y)) => Ok(TTState::Prob(x.tensor(y))),
            _ => unreachable!("check_state rules out mixed kinds"),
        }
    }

    /// The preorder of the theory.
    pub fn le(self, a: &TTState, b: &TTState) -> Result<bool> {
        self.check_states([a, b])?;
        match (self.multiset_relation(), a, b) {
            (Some(MultisetRelation::Equal), TTState::Multiset(x), TTState::Multiset(y)) => {
                Ok(x == y)
            }
            (
                Some(MultisetRelation::UpToTranslation),
                TTState::Multiset(x),
                TTState::Multiset(y),
            ) => Ok(x.equal_up_to_translation(y)?.is_some()),
            (None, TTState::Prob(x), TTState::Prob(y)) => Ok(x.is_majorized_by(y)),
            _ => unreachable!("check_state rules out mixed kinds"),
        }
    }

    /// The monoid identity, shaped like `template` (same group and arity).
    pub fn identity_like(self, template: &TTState) -> Result<TTState> {
        self.check_state(template)?;
        match template {
            TTState::Multiset(m) => Ok(TTState::Multiset(GMultiset::identity_singleton(m.tag()))),
            TTState::Prob(_) => Ok(TTState::Prob(
                ProbVector::new(vec![BigRational::one()]).expect("singleton 1 sums to 1"),
            )),
        }
    }

    /// `a` composed with itself `n >= 1` times.
    pub fn n_fold(self, a: &TTState, n: u32) -> Result<TTState> {
        if n == 0 {
            return Err(Error::InvalidArgument("n_fold requires n >= 1".into()));
        }
        self.check_state(a)?;
        match a {
            TTState::Multiset(m) => Ok(TTState::Multiset(m.n_fold(n)?)),
            TTState::Prob(p) => {
                let mut acc = p.clone();
                for _ in 1..n {
                    acc = acc.tensor(p);
                }
                Ok(TTState::Prob(acc))
            }
        }
    }

    /// `n` copies for `n >= 1`, the identity for `n = 0`.
    fn fold_or_identity(self, a: &TTState, n: u32) -> Result<TTState> {
        if n == 0 {
            self.identity_like(a)
        } else {
            self.n_fold(a, n)
        }
    }
}

/// Single-catalyst check: `A . C <= B . C`.
pub fn cat_with(tt: TTInstance, a: &TTState, b: &TTState, c: &TTState) -> Result<bool> {
    let lhs = tt.compose(a, c)?;
    let rhs = tt.compose(b, c)?;
    tt.le(&lhs, &rhs)
}

/// Catalytic extraction check with an explicit discard:
/// `A . C <= B . D . C`. Multiset theories only; deciding LOCC discards
/// would leave the pure-state setting.
pub fn catext_with(
    tt: TTInstance,
    a: &TTState,
    b: &TTState,
    c: &TTState,
    d: &TTState,
) -> Result<bool> {
    if tt == TTInstance::Majorization {
        return Err(Error::UnsupportedOperation(
            "extraction discards are undefined in the majorization theory".into(),
        ));
    }
    let lhs = tt.compose(a, c)?;
    let rhs = tt.compose(b, &tt.compose(d, c)?)?;
    tt.le(&lhs, &rhs)
}

/// Decide catalytic extractability over the ordered torsion-free groups:
/// find `D` with `B . D` related to `A`, or prove there is none. Over these
/// groups cancellation collapses every catalytic extraction to a plain one,
/// so an absent witness refutes the whole class.
pub fn catext_exists(tt: TTInstance, a: &TTState, b: &TTState) -> Result<Option<TTState>> {
    let id = tt.identity_like(a)?;
    flex_edge_extract(tt, a, b, &id, &id, None)
}

/// One edge of a flexible-catalyst graph: `A . C <= B . C'`.
pub fn flex_edge(
    tt: TTInstance,
    a: &TTState,
    b: &TTState,
    c: &TTState,
    c_next: &TTState,
) -> Result<bool> {
    let lhs = tt.compose(a, c)?;
    let rhs = tt.compose(b, c_next)?;
    tt.le(&lhs, &rhs)
}

/// One extraction edge: find or verify a discard `D` with
/// `A . C <= B . D . C'`.
///
/// Over the ordered torsion-free groups the witness is computed by exact
/// deconvolution (after min-normalization when the relation is translation
/// invariant). Over the magnitude-phase group and the majorization theory no
/// general decision procedure is available here, so an explicit candidate
/// must be supplied and is verified.
pub fn flex_edge_extract(
    tt: TTInstance,
    a: &TTState,
    b: &TTState,
    c: &TTState,
    c_next: &TTState,
    candidate: Option<&TTState>,
) -> Result<Option<TTState>> {
    if let Some(d) = candidate {
        let lhs = tt.compose(a, c)?;
        let rhs = tt.compose(b, &tt.compose(d, c_next)?)?;
        return Ok(if tt.le(&lhs, &rhs)? {
            Some(d.clone())
        } else {
            None
        });
    }
    if !tt.supports_witness_search() {
        return Err(Error::UnsupportedOperation(format!(
            "cannot search for a discard witness in {tt:?}; supply a candidate"
        )));
    }
    let lhs = tt.compose(a, c)?;
    let rhs = tt.compose(b, c_next)?;
    let (lhs, rhs) = match (lhs, rhs) {
        (TTState::Multiset(x), TTState::Multiset(y)) => (x, y),
        _ => unreachable!("witness search implies multiset theory"),
    };
    let quotient = match tt.multiset_relation().expect("multiset theory") {
        MultisetRelation::Equal => lhs.deconvolve(&rhs)?,
        // Min-normalization is a convolution homomorphism on the ordered
        // groups, so a translated factorization exists iff the normalized
        // one divides exactly.
        MultisetRelation::UpToTranslation => {
            lhs.min_normalize()?.deconvolve(&rhs.min_normalize()?)?
        }
    };
    Ok(quotient.map(TTState::Multiset))
}

/// An ordered list of catalysts `C_0, ..., C_{n-1}`, cyclically indexed,
/// with optional per-edge discards: edge `k` asserts
/// `A . C_k <= B . (D_k .) C_{k+1 mod n}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalystCycle {
    pub catalysts: Vec<TTState>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub discards: Option<Vec<TTState>>,
}

impl CatalystCycle {
    pub fn len(&self) -> usize {
        self.catalysts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.catalysts.is_empty()
    }
}

/// Check every edge of a cycle. Structural defects (empty cycle, discard
/// count mismatch) are errors; a failing edge makes the result `false`.
pub fn verify_cycle(
    tt: TTInstance,
    a: &TTState,
    b: &TTState,
    cycle: &CatalystCycle,
) -> Result<bool> {
    let n = cycle.catalysts.len();
    if n == 0 {
        return Err(Error::InvalidCycle("cycle must have length >= 1".into()));
    }
    if let Some(d) = &cycle.discards {
        if d.len() != n {
            return Err(Error::InvalidCycle(format!(
                "{} discards for {} edges",
                d.len(),
                n
            )));
        }
    }
    for k in 0..n {
        let c = &cycle.catalysts[k];
        let c_next = &cycle.catalysts[(k + 1) % n];
        let ok = match &cycle.discards {
            None => flex_edge(tt, a, b, c, c_next)?,
            Some(ds) => flex_edge_extract(tt, a, b, c, c_next, Some(&ds[k]))?.is_some(),
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A directed cycle found in the successor graph, witnessing membership in
/// the class of n-cycle catalytic transformations for n = cycle length.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FoundCycle {
    pub indices: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub discards: Option<Vec<TTState>>,
}

/// The full certificate produced by [`flex_cycle_search`]: the edge matrix
/// over the catalyst set, one successor per node when it exists, and a
/// shortest directed cycle.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FlexReport {
    pub tt: TTInstance,
    pub a: TTState,
    pub b: TTState,
    pub catalysts: Vec<TTState>,
    pub extraction: bool,
    pub edges: Vec<Vec<bool>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge_discards: Option<Vec<Vec<Option<TTState>>>>,
    pub successors: Vec<Option<usize>>,
    /// Every node has a successor: `(A, B)` is flexibly catalytic on this
    /// catalyst set.
    pub is_flex_catalytic: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cycle: Option<FoundCycle>,
}

/// Materialize the full |S| x |S| edge matrix via [`flex_edge`] (or
/// [`flex_edge_extract`] in extraction mode), report successor totality,
/// and return the shortest directed cycle, lexicographically first among
/// shortest by catalyst index.
///
/// `supplied_discards`, when given, provides candidate discards per edge for
/// theories where witnesses cannot be computed.
pub fn flex_cycle_search(
    tt: TTInstance,
    a: &TTState,
    b: &TTState,
    catalysts: &[TTState],
    extraction: bool,
    supplied_discards: Option<&[Vec<Option<TTState>>]>,
) -> Result<FlexReport> {
    let n = catalysts.len();
    if n == 0 {
        return Err(Error::InvalidArgument(
            "catalyst set must be nonempty".into(),
        ));
    }
    if let Some(m) = supplied_discards {
        if m.len() != n || m.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidArgument(
                "supplied discard matrix must be |S| x |S|".into(),
            ));
        }
    }

    let mut edges = vec![vec![false; n]; n];
    let mut witnesses: Vec<Vec<Option<TTState>>> = vec![vec![None; n]; n];
    for i in 0..n {
        for j in 0..n {
            if extraction {
                let candidate = supplied_discards.and_then(|m| m[i][j].as_ref());
                let w = flex_edge_extract(tt, a, b, &catalysts[i], &catalysts[j], candidate)?;
                edges[i][j] = w.is_some();
                witnesses[i][j] = w;
            } else {
                edges[i][j] = flex_edge(tt, a, b, &catalysts[i], &catalysts[j])?;
            }
        }
    }

    let successors: Vec<Option<usize>> = (0..n).map(|i| (0..n).find(|&j| edges[i][j])).collect();
    let is_flex_catalytic = successors.iter().all(|s| s.is_some());

    let cycle = shortest_cycle(&edges).map(|indices| {
        let discards = if extraction {
            Some(
                (0..indices.len())
                    .map(|k| {
                        let from = indices[k];
                        let to = indices[(k + 1) % indices.len()];
                        witnesses[from][to].clone().expect("edge exists")
                    })
                    .collect(),
            )
        } else {
            None
        };
        FoundCycle { indices, discards }
    });

    Ok(FlexReport {
        tt,
        a: a.clone(),
        b: b.clone(),
        catalysts: catalysts.to_vec(),
        extraction,
        edges,
        edge_discards: if extraction { Some(witnesses) } else { None },
        successors,
        is_flex_catalytic,
        cycle,
    })
}

/// Shortest directed cycle in an adjacency matrix, as the vertex sequence
/// starting at its least vertex; among shortest cycles the lexicographically
/// first sequence is returned.
fn shortest_cycle(edges: &[Vec<bool>]) -> Option<Vec<usize>> {
    let n = edges.len();
    // dist[i][j]: edges on a shortest path i -> j (0 on the diagonal)
    let mut dist = vec![vec![usize::MAX; n]; n];
    for (start, row) in dist.iter_mut().enumerate() {
        row[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for v in 0..n {
                if edges[u][v] && row[v] == usize::MAX {
                    row[v] = row[u] + 1;
                    queue.push_back(v);
                }
            }
        }
    }
    let cycle_through = |v: usize| -> Option<usize> {
        (0..n)
            .filter(|&j| edges[v][j] && dist[j][v] != usize::MAX)
            .map(|j| 1 + dist[j][v])
            .min()
    };
    let best = (0..n).filter_map(cycle_through).min()?;
    let start = (0..n).find(|&v| cycle_through(v) == Some(best))?;

    let mut indices = vec![start];
    let mut cur = start;
    for remaining in (1..=best).rev() {
        let next = (0..n)
            .find(|&j| edges[cur][j] && dist[j][start] == remaining - 1)
            .expect("a shortest cycle exists through start");
        if remaining > 1 {
            indices.push(next);
        }
        cur = next;
    }
    Some(indices)
}

/// The aggregate statement produced by [`chain_to_multicopy`]:
/// `n A . (C_1 ... C_n) <= n B . (D_1 ... D_n) . (C_1 ... C_n)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MulticopyStatement {
    pub copies: u32,
    pub aggregate_catalyst: TTState,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub aggregate_discard: Option<TTState>,
    pub holds: bool,
}

/// Turn a verified multicopy transformation `n A . C <= n B . C` into the
/// explicit catalyst chain
/// `C_0 = (n-1)A . C`, `C_i = (i-1)A . (n-i)B . C` for `1 <= i <= n-1`:
/// the first edge spends the multicopy relation and every other edge is an
/// exact rearrangement. In extraction mode the discard witness of the
/// multicopy relation rides on the first edge and all other edges discard
/// the identity. Every edge is re-verified before returning.
pub fn multicopy_to_chain(
    tt: TTInstance,
    a: &TTState,
    b: &TTState,
    c: &TTState,
    n: u32,
    extraction: bool,
) -> Result<CatalystCycle> {
    if n == 0 {
        return Err(Error::InvalidArgument("multicopy needs n >= 1".into()));
    }
    let na = tt.n_fold(a, n)?;
    let nb = tt.n_fold(b, n)?;
    let first_discard = if extraction {
        match flex_edge_extract(tt, &na, &nb, c, c, None)? {
            Some(d) => Some(d),
            None => {
                return Err(Error::NotMulticopyFeasible(format!(
                    "no discard makes {n} copies extractable with this catalyst"
                )))
            }
        }
    } else {
        let lhs = tt.compose(&na, c)?;
        let rhs = tt.compose(&nb, c)?;
        if !tt.le(&lhs, &rhs)? {
            return Err(Error::NotMulticopyFeasible(format!(
                "{n}-copy transformation does not hold with this catalyst"
            )));
        }
        None
    };

    let mut catalysts = Vec::with_capacity(n as usize);
    if n == 1 {
        catalysts.push(c.clone());
    } else {
        catalysts.push(tt.compose(&tt.n_fold(a, n - 1)?, c)?);
        for i in 1..n {
            let mut s = tt.compose(&tt.fold_or_identity(a, i - 1)?, c)?;
            s = tt.compose(&s, &tt.n_fold(b, n - i)?)?;
            catalysts.push(s);
        }
    }
    let discards = first_discard.map(|d| {
        let id = tt.identity_like(c).expect("c already type-checked");
        let mut ds = vec![id; n as usize];
        ds[0] = d;
        ds
    });
    let cycle = CatalystCycle {
        catalysts,
        discards,
    };
    if !verify_cycle(tt, a, b, &cycle)? {
        return Err(Error::ConstructionInvariantViolated(
            "constructed multicopy chain failed edge verification".into(),
        ));
    }
    Ok(cycle)
}

/// Add up all edges of a verified cycle: with `n` catalysts this yields the
/// multicopy statement with the composite of all catalysts as the single
/// aggregate catalyst (and the composite of all discards, in extraction
/// mode).
pub fn chain_to_multicopy(
    tt: TTInstance,
    a: &TTState,
    b: &TTState,
    cycle: &CatalystCycle,
) -> Result<MulticopyStatement> {
    if !verify_cycle(tt, a, b, cycle)? {
        return Err(Error::InvalidCycle(
            "cycle fails its edge conditions".into(),
        ));
    }
    let n = cycle.catalysts.len() as u32;
    let mut aggregate_catalyst = cycle.catalysts[0].clone();
    for c in &cycle.catalysts[1..] {
        aggregate_catalyst = tt.compose(&aggregate_catalyst, c)?;
    }
    let aggregate_discard = match &cycle.discards {
        None => None,
        Some(ds) => {
            let mut acc = ds[0].clone();
            for d in &ds[1..] {
                acc = tt.compose(&acc, d)?;
            }
            Some(acc)
        }
    };
    let lhs = tt.compose(&tt.n_fold(a, n)?, &aggregate_catalyst)?;
    let mut rhs = tt.n_fold(b, n)?;
    if let Some(d) = &aggregate_discard {
        rhs = tt.compose(&rhs, d)?;
    }
    let rhs = tt.compose(&rhs, &aggregate_catalyst)?;
    let holds = tt.le(&lhs, &rhs)?;
    Ok(MulticopyStatement {
        copies: n,
        aggregate_catalyst,
        aggregate_discard,
        holds,
    })
}

/// A positive answer from [`cat_pm_decide`]: the torsion catalyst and the
/// translation aligning the two composites.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PmCatalysis {
    pub catalyst: GMultiset,
    pub translation: GroupElement,
}

/// Decide catalysis in the magnitude-phase theory.
///
/// Project both multisets to their magnitudes. If the magnitude multisets
/// are not equal up to a common ratio, no catalyst exists at all (projection
/// sends any catalytic relation into the torsion-free magnitude group, where
/// cancellation applies). If they are, the multiset of all `N`-th phase
/// classes is a catalyst, `N` being the lcm of the phase denominators:
/// composing with it smears every phase uniformly, leaving only the
/// magnitudes. The returned catalyst is verified before returning.
pub fn cat_pm_decide(a: &GMultiset, b: &GMultiset) -> Result<Option<PmCatalysis>> {
    if a.tag() != GroupTag::MagPhase || b.tag() != GroupTag::MagPhase {
        return Err(Error::GroupMismatch(
            "cat_pm_decide operates on magnitude-phase multisets".into(),
        ));
    }
    let project = |m: &GMultiset| -> Result<GMultiset> {
        GMultiset::new(m.iter().map(|(e, mult)| {
            let GroupElement::MagPhase { mag, .. } = e else {
                unreachable!("tag checked above");
            };
            (
                GroupElement::MagPhase {
                    mag: mag.clone(),
                    phase: BigRational::zero(),
                },
                mult.clone(),
            )
        }))
    };
    if project(a)?.equal_up_to_translation(&project(b)?)?.is_none() {
        return Ok(None);
    }

    let mut n_lcm = BigUint::one();
    for (e, _) in a.iter().chain(b.iter()) {
        let GroupElement::MagPhase { phase, .. } = e else {
            unreachable!("tag checked above");
        };
        let denom = phase.denom().to_biguint().expect("denominator positive");
        n_lcm = n_lcm.lcm(&denom);
    }
    let n = n_lcm.to_u64().ok_or_else(|| {
        Error::InvalidArgument("phase denominators too large for a torsion catalyst".into())
    })?;
    let torsion = GMultiset::new((0..n).map(|k| {
        (
            GroupElement::MagPhase {
                mag: BigRational::one(),
                phase: BigRational::new(BigUint::from(k).into(), BigUint::from(n).into()),
            },
            BigUint::one(),
        )
    }))?;

    let lhs = a.msum(&torsion)?;
    let rhs = b.msum(&torsion)?;
    match lhs.equal_up_to_translation(&rhs)? {
        Some(translation) => Ok(Some(PmCatalysis {
            catalyst: torsion,
            translation,
        })),
        None => Err(Error::ConstructionInvariantViolated(
            "torsion catalyst failed verification despite proportional magnitudes".into(),
        )),
    }
}

/// Bounds for [`brute_force_catalyst_search`]. The candidate cap guards
/// against enumerations that could never finish; it counts candidates before
/// enumerating any.
#[derive(Debug, Clone)]
pub struct SearchBounds {
    pub max_support: usize,
    pub max_mult: u64,
    pub candidate_cap: u64,
}

impl SearchBounds {
    pub const DEFAULT_CAP: u64 = 10_000_000;

    pub fn new(max_support: usize, max_mult: u64) -> Self {
        SearchBounds {
            max_support,
            max_mult,
            candidate_cap: Self::DEFAULT_CAP,
        }
    }
}

/// Exhaustively try catalysts with support drawn from `pool`, in canonical
/// order (total size ascending, then lexicographic on the sorted
/// (element, multiplicity) pairs), returning the first one that catalyzes
/// `A -> B`. An absent result means no catalyst within the bounds, not a
/// global proof.
pub fn brute_force_catalyst_search(
    tt: TTInstance,
    a: &TTState,
    b: &TTState,
    pool: &[GroupElement],
    bounds: &SearchBounds,
) -> Result<Option<TTState>> {
    if pool.is_empty() {
        return Err(Error::InvalidArgument(
            "element pool must be nonempty".into(),
        ));
    }
    if bounds.max_support == 0 || bounds.max_mult == 0 {
        return Err(Error::InvalidArgument(
            "search bounds must be positive".into(),
        ));
    }
    let mut pool: Vec<GroupElement> = pool.to_vec();
    pool.sort();
    pool.dedup();
    if tt == TTInstance::Majorization {
        for e in &pool {
            match e {
                GroupElement::Rat(r) if !r.is_negative() => {}
                _ => {
                    return Err(Error::InvalidArgument(
                        "majorization catalyst pool must hold nonnegative rationals".into(),
                    ))
                }
            }
        }
    }

    let count = candidate_count(pool.len(), bounds.max_support, bounds.max_mult);
    if count > BigUint::from(bounds.candidate_cap) {
        return Err(Error::SearchTooLarge {
            candidates: count,
            cap: bounds.candidate_cap,
        });
    }

    let max_support = bounds.max_support.min(pool.len());
    for total in 1..=(max_support as u64 * bounds.max_mult) {
        let mut stack: Vec<(usize, u64)> = Vec::new();
        if let Some(hit) = search_size(
            tt,
            a,
            b,
            &pool,
            bounds.max_mult,
            max_support,
            total,
            0,
            &mut stack,
        )? {
            return Ok(Some(hit));
        }
    }
    Ok(None)
}

fn candidate_count(pool: usize, max_support: usize, max_mult: u64) -> BigUint {
    let mut total = BigUint::zero();
    let mut choose = BigUint::one();
    for k in 1..=max_support.min(pool) {
        // C(pool, k) built incrementally
        choose = choose * BigUint::from(pool - k + 1) / BigUint::from(k);
        total += &choose * BigUint::from(max_mult).pow(k as u32);
    }
    total
}

/// Depth-first enumeration of candidates with exactly `remaining` total
/// multiplicity, in lexicographic order of the (element, multiplicity)
/// pair list.
#[allow(clippy::too_many_arguments)]
fn search_size(
    tt: TTInstance,
    a: &TTState,
    b: &TTState,
    pool: &[GroupElement],
    max_mult: u64,
    support_left: usize,
    remaining: u64,
    start: usize,
    stack: &mut Vec<(usize, u64)>,
) -> Result<Option<TTState>> {
    if remaining == 0 {
        let candidate = build_candidate(tt, pool, stack)?;
        if let Some(c) = candidate {
            if cat_with(tt, a, b, &c)? {
                return Ok(Some(c));
            }
        }
        return Ok(None);
    }
    if support_left == 0 {
        return Ok(None);
    }
    for idx in start..pool.len() {
        for mult in 1..=max_mult.min(remaining) {
            // enough room left for the rest?
            if remaining - mult > (support_left as u64 - 1) * max_mult {
                continue;
            }
            stack.push((idx, mult));
            let hit = search_size(
                tt,
                a,
                b,
                pool,
                max_mult,
                support_left - 1,
                remaining - mult,
                idx + 1,
                stack,
            )?;
            stack.pop();
            if hit.is_some() {
                return Ok(hit);
            }
        }
    }
    Ok(None)
}

fn build_candidate(
    tt: TTInstance,
    pool: &[GroupElement],
    picks: &[(usize, u64)],
) -> Result<Option<TTState>> {
    if tt == TTInstance::Majorization {
        let mut entries: Vec<BigRational> = Vec::new();
        for &(idx, mult) in picks {
            let GroupElement::Rat(r) = &pool[idx] else {
                unreachable!("pool validated to be rational");
            };
            for _ in 0..mult {
                entries.push(r.clone());
            }
        }
        let total: BigRational = entries.iter().sum();
        if total.is_zero() {
            return Ok(None);
        }
        let entries = entries.into_iter().map(|e| e / &total).collect();
        Ok(Some(TTState::Prob(
            ProbVector::new(entries).expect("normalized to sum 1"),
        )))
    } else {
        let ms = GMultiset::new(
            picks
                .iter()
                .map(|&(idx, mult)| (pool[idx].clone(), BigUint::from(mult))),
        )?;
        Ok(Some(TTState::Multiset(ms)))
    }
}
