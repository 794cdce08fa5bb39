//! The three concrete abelian groups the multiset reductions run over:
//! integer vectors `Z^m` under componentwise addition, exact rationals `Q`
//! under addition, and magnitude-phase pairs `Q+ x (Q/Z)` where magnitudes
//! multiply and phases add modulo one.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::rational_to_string;

/// Which group a value lives in. `ZVec` carries its arity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupTag {
    ZVec(usize),
    Rat,
    MagPhase,
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupTag::ZVec(m) => write!(f, "zvec(arity {m})"),
            GroupTag::Rat => write!(f, "rat"),
            GroupTag::MagPhase => write!(f, "magphase"),
        }
    }
}

/// An element of one of the three concrete groups.
///
/// Invariants: `IntVector` has arity >= 1; `MagPhase` has `mag > 0` and
/// `phase` reduced into `[0, 1)` (a fraction of a full turn). Constructors
/// enforce both.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupElement {
    IntVector(Vec<BigInt>),
    Rat(BigRational),
    MagPhase {
        mag: BigRational,
        phase: BigRational,
    },
}

impl GroupElement {
    pub fn int_vector(coords: Vec<BigInt>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::Domain("integer vector must have arity >= 1".into()));
        }
        Ok(GroupElement::IntVector(coords))
    }

    /// Convenience constructor for elements of `Z` (= `Z^1`).
    pub fn int_scalar(v: impl Into<BigInt>) -> Self {
        GroupElement::IntVector(vec![v.into()])
    }

    pub fn rat(value: BigRational) -> Self {
        GroupElement::Rat(value)
    }

    /// A magnitude-phase pair; the phase is reduced modulo one.
    pub fn mag_phase(mag: BigRational, phase: BigRational) -> Result<Self> {
        if !mag.is_positive() {
            return Err(Error::Domain(format!(
                "magnitude must be positive, got {}",
                rational_to_string(&mag)
            )));
        }
        Ok(GroupElement::MagPhase {
            mag,
            phase: reduce_phase(phase),
        })
    }

    pub fn tag(&self) -> GroupTag {
        match self {
            GroupElement::IntVector(v) => GroupTag::ZVec(v.len()),
            GroupElement::Rat(_) => GroupTag::Rat,
            GroupElement::MagPhase { .. } => GroupTag::MagPhase,
        }
    }

    /// The identity element of the given group.
    pub fn identity(tag: GroupTag) -> Self {
        match tag {
            GroupTag::ZVec(m) => GroupElement::IntVector(vec![BigInt::zero(); m]),
            GroupTag::Rat => GroupElement::Rat(BigRational::zero()),
            GroupTag::MagPhase => GroupElement::MagPhase {
                mag: BigRational::one(),
                phase: BigRational::zero(),
            },
        }
    }

    /// The group law: componentwise / rational addition, or
    /// magnitude product with phase addition mod 1.
    pub fn add(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (GroupElement::IntVector(a), GroupElement::IntVector(b)) if a.len() == b.len() => Ok(
                GroupElement::IntVector(a.iter().zip(b).map(|(x, y)| x + y).collect()),
            ),
            (GroupElement::Rat(a), GroupElement::Rat(b)) => Ok(GroupElement::Rat(a + b)),
            (
                GroupElement::MagPhase { mag: m1, phase: p1 },
                GroupElement::MagPhase { mag: m2, phase: p2 },
            ) => Ok(GroupElement::MagPhase {
                mag: m1 * m2,
                phase: reduce_phase(p1 + p2),
            }),
            _ => Err(Error::GroupMismatch(format!(
                "cannot combine {} with {}",
                self.tag(),
                other.tag()
            ))),
        }
    }

    pub fn inverse(&self) -> Self {
        match self {
            GroupElement::IntVector(v) => GroupElement::IntVector(v.iter().map(|x| -x).collect()),
            GroupElement::Rat(r) => GroupElement::Rat(-r),
            GroupElement::MagPhase { mag, phase } => GroupElement::MagPhase {
                mag: mag.recip(),
                phase: reduce_phase(-phase),
            },
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.inverse())
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.tag())
    }
}

/// Reduce a phase into `[0, 1)`. `Ratio` keeps it in lowest terms.
fn reduce_phase(p: BigRational) -> BigRational {
    let f = &p - p.floor();
    debug_assert!(!f.is_negative() && f < BigRational::one());
    f
}

/// Canonical element ordering, used only for determinism (serialization,
/// witness tie-breaks): integer vectors lexicographic, rationals numeric,
/// magnitude-phase pairs by (mag, phase). It is a group order only on the
/// torsion-free groups.
impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (GroupElement::IntVector(a), GroupElement::IntVector(b)) => a.cmp(b),
            (GroupElement::Rat(a), GroupElement::Rat(b)) => a.cmp(b),
            (
                GroupElement::MagPhase { mag: m1, phase: p1 },
                GroupElement::MagPhase { mag: m2, phase: p2 },
            ) => m1.cmp(m2).then_with(|| p1.cmp(p2)),
            // Cross-group comparisons never arise inside a valid multiset;
            // fall back to the variant order so Ord stays total.
            _ => variant_rank(self).cmp(&variant_rank(other)),
        }
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn variant_rank(e: &GroupElement) -> u8 {
    match e {
        GroupElement::IntVector(_) => 0,
        GroupElement::Rat(_) => 1,
        GroupElement::MagPhase { .. } => 2,
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::IntVector(v) => {
                if v.len() == 1 {
                    write!(f, "{}", v[0])
                } else {
                    write!(f, "(")?;
                    for (i, c) in v.iter().enumerate() {
                        if i > 0 {
                            write!(f, ",")?;
                        }
                        write!(f, "{c}")?;
                    }
                    write!(f, ")")
                }
            }
            GroupElement::Rat(r) => write!(f, "{}", rational_to_string(r)),
            GroupElement::MagPhase { mag, phase } => write!(
                f,
                "({};{})",
                rational_to_string(mag),
                rational_to_string(phase)
            ),
        }
    }
}
