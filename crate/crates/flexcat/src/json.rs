//! JSON wire formats.
//!
//! Rationals are strings `"p/q"` in lowest terms (`"p"` for integers);
//! integer vectors are arrays of integer strings; magnitude-phase pairs are
//! `{"mag":"p/q","phase":"k/n"}`. A multiset is
//! `{"group":"zvec"|"rat"|"magphase","arity":m,"elems":[{"e":...,"m":"..."}]}`
//! with elements in canonical order; a polynomial is
//! `{"arity":m,"terms":[{"exp":[i1,...],"coeff":"..."}]}`; a probability
//! vector is an array of rational strings (decimal literals accepted on
//! input). Serialization is canonical: fixed key order, sorted elements,
//! reduced rationals.

use num_bigint::BigUint;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupTag};
use crate::majorization::{MajorizationViolation, ProbVector};
use crate::multiset::GMultiset;
use crate::polynomial::IntPolynomial;
use crate::rational::{parse_bigint, parse_rational, rational_to_string};

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum GroupElementDto {
    IntVector(Vec<String>),
    Rat(String),
    MagPhase { mag: String, phase: String },
}

impl From<&GroupElement> for GroupElementDto {
    fn from(e: &GroupElement) -> Self {
        match e {
            GroupElement::IntVector(v) => {
                GroupElementDto::IntVector(v.iter().map(|c| c.to_string()).collect())
            }
            GroupElement::Rat(r) => GroupElementDto::Rat(rational_to_string(r)),
            GroupElement::MagPhase { mag, phase } => GroupElementDto::MagPhase {
                mag: rational_to_string(mag),
                phase: rational_to_string(phase),
            },
        }
    }
}

impl TryFrom<GroupElementDto> for GroupElement {
    type Error = Error;

    fn try_from(dto: GroupElementDto) -> Result<Self> {
        match dto {
            GroupElementDto::IntVector(coords) => GroupElement::int_vector(
                coords
                    .iter()
                    .map(|s| parse_bigint(s))
                    .collect::<Result<Vec<_>>>()?,
            ),
            GroupElementDto::Rat(s) => Ok(GroupElement::rat(parse_rational(&s)?)),
            GroupElementDto::MagPhase { mag, phase } => {
                GroupElement::mag_phase(parse_rational(&mag)?, parse_rational(&phase)?)
            }
        }
    }
}

impl Serialize for GroupElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        GroupElementDto::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GroupElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        GroupElementDto::deserialize(deserializer)?
            .try_into()
            .map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct ElemDto {
    e: GroupElementDto,
    m: String,
}

#[derive(Serialize, Deserialize)]
struct GMultisetDto {
    group: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    arity: Option<usize>,
    elems: Vec<ElemDto>,
}

impl From<&GMultiset> for GMultisetDto {
    fn from(m: &GMultiset) -> Self {
        let (group, arity) = match m.tag() {
            GroupTag::ZVec(a) => ("zvec", a),
            GroupTag::Rat => ("rat", 1),
            GroupTag::MagPhase => ("magphase", 1),
        };
        GMultisetDto {
            group: group.to_string(),
            arity: Some(arity),
            elems: m
                .iter()
                .map(|(e, mult)| ElemDto {
                    e: e.into(),
                    m: mult.to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<GMultisetDto> for GMultiset {
    type Error = Error;

    fn try_from(dto: GMultisetDto) -> Result<Self> {
        let mut items = Vec::with_capacity(dto.elems.len());
        for elem in dto.elems {
            let e: GroupElement = elem.e.try_into()?;
            let mult: BigUint =
                elem.m.trim().parse().map_err(|err| {
                    Error::Parse(format!("invalid multiplicity {:?}: {err}", elem.m))
                })?;
            items.push((e, mult));
        }
        let ms = GMultiset::new(items)?;
        let tag = ms.tag();
        let expected = match tag {
            GroupTag::ZVec(_) => "zvec",
            GroupTag::Rat => "rat",
            GroupTag::MagPhase => "magphase",
        };
        if dto.group != expected {
            return Err(Error::GroupMismatch(format!(
                "declared group {:?} but elements are {expected}",
                dto.group
            )));
        }
        if let (GroupTag::ZVec(a), Some(declared)) = (tag, dto.arity) {
            if a != declared {
                return Err(Error::ArityMismatch(format!(
                    "declared arity {declared} but elements have arity {a}"
                )));
            }
        }
        Ok(ms)
    }
}

impl Serialize for GMultiset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        GMultisetDto::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GMultiset {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        GMultisetDto::deserialize(deserializer)?
            .try_into()
            .map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct TermDto {
    exp: Vec<u32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct IntPolynomialDto {
    arity: usize,
    terms: Vec<TermDto>,
}

impl From<&IntPolynomial> for IntPolynomialDto {
    fn from(p: &IntPolynomial) -> Self {
        IntPolynomialDto {
            arity: p.arity(),
            terms: p
                .terms()
                .map(|(exp, coeff)| TermDto {
                    exp: exp.clone(),
                    coeff: coeff.to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<IntPolynomialDto> for IntPolynomial {
    type Error = Error;

    fn try_from(dto: IntPolynomialDto) -> Result<Self> {
        let terms = dto
            .terms
            .into_iter()
            .map(|t| Ok((t.exp, parse_bigint(&t.coeff)?)))
            .collect::<Result<Vec<_>>>()?;
        IntPolynomial::new(dto.arity, terms)
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        IntPolynomialDto::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        IntPolynomialDto::deserialize(deserializer)?
            .try_into()
            .map_err(D::Error::custom)
    }
}

impl Serialize for ProbVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let strs: Vec<String> = self.entries().iter().map(rational_to_string).collect();
        strs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ProbVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let strs = Vec::<String>::deserialize(deserializer)?;
        let entries = strs
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        ProbVector::new(entries).map_err(D::Error::custom)
    }
}

impl Serialize for MajorizationViolation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Dto<'a> {
            k: usize,
            lhs: &'a str,
            rhs: &'a str,
        }
        Dto {
            k: self.k,
            lhs: &rational_to_string(&self.lhs),
            rhs: &rational_to_string(&self.rhs),
        }
        .serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiset::zset;

    #[test]
    fn multiset_round_trips_canonically() {
        let m = zset(&[(2, 3), (0, 1)]);
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(
            s,
            r#"{"group":"zvec","arity":1,"elems":[{"e":["0"],"m":"1"},{"e":["2"],"m":"3"}]}"#
        );
        let back: GMultiset = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn magphase_multiset_round_trips() {
        let m = GMultiset::from_counts([
            (
                GroupElement::mag_phase(
                    parse_rational("1").unwrap(),
                    parse_rational("1/3").unwrap(),
                )
                .unwrap(),
                2,
            ),
            (
                GroupElement::mag_phase(parse_rational("1").unwrap(), parse_rational("0").unwrap())
                    .unwrap(),
                1,
            ),
        ])
        .unwrap();
        let s = serde_json::to_string(&m).unwrap();
        let back: GMultiset = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
        assert!(s.contains(r#""mag":"1""#));
    }

    #[test]
    fn rejects_group_and_arity_lies() {
        let bad_group = r#"{"group":"rat","arity":1,"elems":[{"e":["0"],"m":"1"}]}"#;
        assert!(serde_json::from_str::<GMultiset>(bad_group).is_err());
        let bad_arity = r#"{"group":"zvec","arity":2,"elems":[{"e":["0"],"m":"1"}]}"#;
        assert!(serde_json::from_str::<GMultiset>(bad_arity).is_err());
        let zero_mult = r#"{"group":"zvec","arity":1,"elems":[{"e":["0"],"m":"0"}]}"#;
        assert!(serde_json::from_str::<GMultiset>(zero_mult).is_err());
        let empty = r#"{"group":"zvec","arity":1,"elems":[]}"#;
        assert!(serde_json::from_str::<GMultiset>(empty).is_err());
    }

    #[test]
    fn polynomial_round_trips() {
        let p = IntPolynomial::univariate(&[8, 10, -2, 7, 10, 2]);
        let s = serde_json::to_string(&p).unwrap();
        let back: IntPolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        assert!(s.contains(r#""coeff":"-2""#));
        // duplicate exponents accumulate rather than error
        let dup = r#"{"arity":1,"terms":[{"exp":[0],"coeff":"1"},{"exp":[0],"coeff":"2"}]}"#;
        let q: IntPolynomial = serde_json::from_str(dup).unwrap();
        assert_eq!(q, IntPolynomial::univariate(&[3]));
    }

    #[test]
    fn prob_vector_accepts_decimals_and_emits_fractions() {
        let v: ProbVector = serde_json::from_str(r#"["0.5","0.29","0.21","0"]"#).unwrap();
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"["1/2","29/100","21/100","0"]"#
        );
    }

    #[test]
    fn prob_vector_schema_violation_names_invariant() {
        let err = serde_json::from_str::<ProbVector>(r#"["1/2","1/3"]"#)
            .unwrap_err()
            .to_string();
        assert!(err.contains("sum to 1"), "{err}");
    }
}
