//! End-to-end re-verification of the worked examples and constructions:
//! one verifier per claim, each producing a machine-readable report whose
//! witnesses re-verify standalone through the core predicates.
//!
//! Reports are deterministic: given the same configuration, serialization is
//! byte-identical across runs (runtimes are kept out of the JSON and only
//! shown in the human-readable table).

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::catalysis::{
    cat_pm_decide, catext_exists, flex_cycle_search, multicopy_to_chain, verify_cycle, TTInstance,
    TTState,
};
use crate::error::Result;
use crate::group::GroupElement;
use crate::majorization::ProbVector;
use crate::multiset::{zset, GMultiset};
use crate::polynomial::{
    construct_negativity_n, essential_positivity_scan, IntPolynomial, NegativityResult,
};
use crate::rational::parse_rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimStatus {
    Pass,
    Fail,
    /// Bounded evidence about an open question; never asserted as pass/fail.
    EvidenceOnly,
}

/// Verification report for one claim. `details` holds every sub-check and
/// enough witness data to re-verify offline.
#[derive(Debug, Clone, Serialize)]
pub struct ClaimReport {
    pub claim: String,
    pub status: ClaimStatus,
    pub details: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub paper_note: Option<String>,
    #[serde(skip)]
    pub runtime: Duration,
}

impl ClaimReport {
    pub fn passed(&self) -> bool {
        self.status != ClaimStatus::Fail
    }
}

/// Accumulator for named boolean sub-checks plus witness data.
struct Checks {
    all_ok: bool,
    details: Map<String, Value>,
}

impl Checks {
    fn new() -> Self {
        Checks {
            all_ok: true,
            details: Map::new(),
        }
    }

    fn check(&mut self, name: &str, ok: bool) {
        self.all_ok &= ok;
        self.details.insert(name.to_string(), Value::Bool(ok));
    }

    fn note(&mut self, name: &str, value: impl Serialize) {
        self.details.insert(
            name.to_string(),
            serde_json::to_value(value).expect("witness data serializes"),
        );
    }

    fn finish(self, claim: &str, started: Instant) -> ClaimReport {
        ClaimReport {
            claim: claim.to_string(),
            status: if self.all_ok {
                ClaimStatus::Pass
            } else {
                ClaimStatus::Fail
            },
            details: Value::Object(self.details),
            paper_note: None,
            runtime: started.elapsed(),
        }
    }

    fn finish_evidence(self, claim: &str, started: Instant) -> ClaimReport {
        ClaimReport {
            claim: claim.to_string(),
            status: ClaimStatus::EvidenceOnly,
            details: Value::Object(self.details),
            paper_note: None,
            runtime: started.elapsed(),
        }
    }
}

fn mp(mag: &str, phase: &str) -> GroupElement {
    GroupElement::mag_phase(parse_rational(mag).unwrap(), parse_rational(phase).unwrap()).unwrap()
}

fn omega_pair() -> (GMultiset, GMultiset) {
    let a = GMultiset::from_counts([(mp("1", "0"), 1), (mp("1", "1/3"), 2)]).unwrap();
    let b = GMultiset::from_counts([(mp("1", "0"), 1), (mp("1", "2/3"), 2)]).unwrap();
    (a, b)
}

/// The cube-root-of-unity pair: composing with itself hides the phases, so
/// the two states catalyze each other in alternation but neither state is a
/// catalyst for the pair on its own.
pub fn verify_pm_omega() -> Result<ClaimReport> {
    let started = Instant::now();
    let mut checks = Checks::new();
    let tt = TTInstance::MagPhaseProp;
    let (a, b) = omega_pair();

    let prop = |x: &GMultiset, y: &GMultiset| -> Result<bool> {
        Ok(x.equal_up_to_translation(y)?.is_some())
    };
    let aa = a.msum(&a)?;
    let ab = a.msum(&b)?;
    let ba = b.msum(&a)?;
    let bb = b.msum(&b)?;
    checks.check("aa_equals_bb_up_to_translation", prop(&aa, &bb)?);
    checks.check("ab_equals_ba_up_to_translation", prop(&ab, &ba)?);
    checks.check("aa_differs_from_ba", !prop(&aa, &ba)?);
    checks.check("ab_differs_from_bb", !prop(&ab, &bb)?);
    checks.note("a_composed_a", &aa);
    checks.note("b_composed_a", &ba);

    let s = [TTState::Multiset(a.clone()), TTState::Multiset(b.clone())];
    let report = flex_cycle_search(
        tt,
        &TTState::Multiset(a.clone()),
        &TTState::Multiset(b.clone()),
        &s,
        false,
        None,
    )?;
    checks.check("flex_catalytic_on_pair_set", report.is_flex_catalytic);
    checks.check("no_self_loops", !report.edges[0][0] && !report.edges[1][1]);
    checks.check(
        "two_cycle_found",
        report.cycle.as_ref().map(|c| c.indices.clone()) == Some(vec![0, 1]),
    );
    checks.note("flex_report", &report);

    // the full phase-class catalyst exists nonetheless
    let decided = cat_pm_decide(&a, &b)?;
    checks.check("torsion_catalyst_exists", decided.is_some());
    checks.note("torsion_catalyst", &decided);

    Ok(checks.finish("pm-omega", started))
}

fn advantage_polys() -> AdvantagePolys {
    let x = IntPolynomial::univariate(&[4, 1]);
    let y = IntPolynomial::univariate(&[2, 2, -1, 2, 2]);
    let b = IntPolynomial::univariate(&[1, 1]);
    let xy = x.mul(&y).unwrap();
    let a = b.mul(&xy).unwrap();
    let c0 = b.mul(&x).unwrap();
    let c1 = b.mul(&y).unwrap();
    let d1 = x.pow(2).unwrap();
    let d0 = y.pow(2).unwrap();
    AdvantagePolys {
        a,
        b,
        c0,
        c1,
        d0,
        d1,
        xy,
    }
}

struct AdvantagePolys {
    a: IntPolynomial,
    b: IntPolynomial,
    c0: IntPolynomial,
    c1: IntPolynomial,
    d0: IntPolynomial,
    d1: IntPolynomial,
    xy: IntPolynomial,
}

/// The size-70 state with two size-10/14 alternating catalysts: both
/// multiset identities hold exactly, while no single catalytic extraction
/// exists because the would-be discard has a negative coefficient.
pub fn verify_advantage() -> Result<ClaimReport> {
    let started = Instant::now();
    let mut checks = Checks::new();
    let p = advantage_polys();

    checks.check(
        "all_polynomials_nonnegative",
        [&p.a, &p.b, &p.c0, &p.c1, &p.d0, &p.d1]
            .iter()
            .all(|q| q.is_nonneg()),
    );

    let ia = p.a.iota()?;
    let ib = p.b.iota()?;
    let ic0 = p.c0.iota()?;
    let ic1 = p.c1.iota()?;
    let id0 = p.d0.iota()?;
    let id1 = p.d1.iota()?;

    checks.check("identity_one", ia.msum(&ic0)? == ib.msum(&id1)?.msum(&ic1)?);
    checks.check("identity_two", ia.msum(&ic1)? == ib.msum(&id0)?.msum(&ic0)?);
    checks.check("quotient_has_negative_coefficient", !p.xy.is_nonneg());
    checks.note("quotient_x2_coefficient", p.xy.coeff(&[2]).to_string());

    let a_state = TTState::Multiset(ia.clone());
    let b_state = TTState::Multiset(ib.clone());
    checks.check(
        "no_catalytic_extraction",
        catext_exists(TTInstance::ZVecEq, &a_state, &b_state)?.is_none(),
    );

    checks.check("size_a_is_70", ia.size() == 70u32.into());
    checks.check("size_c0_is_10", ic0.size() == 10u32.into());

    // the displayed multisets, as printed
    let listed_a = zset(&[(0, 8), (1, 18), (2, 8), (3, 5), (4, 17), (5, 12), (6, 2)]);
    let listed_b = zset(&[(0, 1), (1, 1)]);
    let listed_c0 = zset(&[(0, 4), (1, 5), (2, 1)]);
    let listed_c1 = zset(&[(0, 2), (1, 4), (2, 1), (3, 1), (4, 4), (5, 2)]);
    let listed_d0 = zset(&[(0, 16), (1, 8), (2, 1)]);
    let listed_d1 = zset(&[(0, 4), (1, 8), (3, 4), (4, 17), (5, 4), (7, 8), (8, 4)]);
    checks.check("listing_a_matches", ia == listed_a);
    checks.check("listing_b_matches", ib == listed_b);
    checks.check("listing_c0_matches", ic0 == listed_c0);
    checks.check("listing_c1_matches", ic1 == listed_c1);
    // The displayed D0/D1 sets are swapped relative to the definitions
    // D0 = Y^2, D1 = X^2: only the definitions satisfy the identities.
    let swap = id0 == listed_d1 && id1 == listed_d0;
    checks.check("listing_d_swap_detected", swap);
    checks.note("iota_a", &ia);

    let s = [TTState::Multiset(ic0), TTState::Multiset(ic1)];
    let report = flex_cycle_search(TTInstance::ZVecEq, &a_state, &b_state, &s, true, None)?;
    checks.check("flex_extraction_cycle", report.is_flex_catalytic);
    checks.check(
        "cycle_discards_are_the_squares",
        report.cycle.as_ref().map(|c| c.discards.clone())
            == Some(Some(vec![TTState::Multiset(id1), TTState::Multiset(id0)])),
    );
    checks.note("flex_report", &report);

    let mut report = checks.finish("advantage", started);
    if swap {
        report.paper_note = Some(
            "the displayed iota(D0)/iota(D1) listings are swapped relative to the \
             definitions D0 = Y^2, D1 = X^2; the definitions satisfy the stated identities"
                .to_string(),
        );
    }
    Ok(report)
}

/// The LOCC pair where the two spectra catalyze each other in alternation
/// (two positive majorization checks) but neither is a catalyst on its own
/// (two negative checks).
pub fn verify_locc_positive() -> Result<ClaimReport> {
    let started = Instant::now();
    let mut checks = Checks::new();
    let a = ProbVector::parse(&["0.4", "0.4", "0.1", "0.1"])?;
    let b = ProbVector::parse(&["0.5", "0.29", "0.21", "0"])?;

    let aa = a.tensor(&a);
    let ab = a.tensor(&b);
    let ba = b.tensor(&a);
    let bb = b.tensor(&b);
    checks.check("aa_majorized_by_bb", aa.is_majorized_by(&bb));
    checks.check("ab_majorized_by_ba", ab.is_majorized_by(&ba));
    let v1 = aa.first_majorization_violation(&ba);
    checks.check("aa_not_majorized_by_ba", v1.is_some());
    checks.note("violation_aa_vs_ba", &v1);
    let v2 = ab.first_majorization_violation(&bb);
    checks.check("ab_not_majorized_by_bb", v2.is_some());
    checks.note("violation_ab_vs_bb", &v2);

    let s = [TTState::Prob(a.clone()), TTState::Prob(b.clone())];
    let report = flex_cycle_search(
        TTInstance::Majorization,
        &TTState::Prob(a),
        &TTState::Prob(b),
        &s,
        false,
        None,
    )?;
    checks.check("flex_catalytic_on_pair_set", report.is_flex_catalytic);
    checks.check("no_self_loops", !report.edges[0][0] && !report.edges[1][1]);
    checks.check(
        "two_cycle_found",
        report.cycle.as_ref().map(|c| c.indices.clone()) == Some(vec![0, 1]),
    );
    checks.note("flex_report", &report);

    Ok(checks.finish("locc-positive", started))
}

/// Four pairwise inequivalent irreducible spectra whose pairings tensor to
/// the same product: entanglement classes have no unique factorization.
pub fn verify_no_unique_factorisation() -> Result<ClaimReport> {
    let started = Instant::now();
    let mut checks = Checks::new();
    let pa2 = ProbVector::parse(&["1/12", "1/12", "2/12", "8/12"])?;
    let pb2 = ProbVector::parse(&["1/4", "1/4", "2/4"])?;
    let pc2 = ProbVector::parse(&["1/16", "1/16", "1/16", "1/16", "4/16", "8/16"])?;
    let pd2 = ProbVector::parse(&["1/3", "2/3"])?;

    let lhs = pa2.tensor(&pb2);
    let rhs = pc2.tensor(&pd2);
    checks.check("products_lu_equivalent", lhs.lu_equivalent(&rhs));
    let expected = ProbVector::parse(&[
        "1/48", "1/48", "1/48", "1/48", "2/48", "2/48", "2/48", "2/48", "4/48", "8/48", "8/48",
        "16/48",
    ])?;
    checks.check("product_multiset_matches", lhs == expected);
    checks.note("product", &lhs);

    let vectors = [("a", &pa2), ("b", &pb2), ("c", &pc2), ("d", &pd2)];
    for i in 0..4 {
        for j in (i + 1)..4 {
            checks.check(
                &format!("{}_inequivalent_to_{}", vectors[i].0, vectors[j].0),
                !vectors[i].1.lu_equivalent(vectors[j].1),
            );
        }
    }
    for (name, v) in vectors {
        let factors = v.tensor_factorizations(2)?;
        checks.check(&format!("{name}_irreducible"), factors.is_empty());
    }

    Ok(checks.finish("no-unique-factorisation", started))
}

/// For each requested `n`, build the quartic with negativity exactly `n`,
/// re-verify the negativity search, the nonnegativity of `(1+x) p`, and the
/// coefficient bound `(n-2)/2 a1^2 < -a0 a2 <= (n-1)/2 a1^2`.
pub fn verify_anyposint(ns: &[u32]) -> Result<ClaimReport> {
    let started = Instant::now();
    let mut checks = Checks::new();
    for &n in ns {
        let p = construct_negativity_n(n)?;
        checks.check(
            &format!("n{n}_negativity_exact"),
            p.negativity(n.max(1))? == NegativityResult::Finite(n),
        );
        let one_plus_x = IntPolynomial::univariate(&[1, 1]);
        checks.check(
            &format!("n{n}_one_plus_x_times_p_nonneg"),
            one_plus_x.mul(&p)?.is_nonneg(),
        );
        if n >= 2 {
            let a0 = p.coeff(&[0]);
            let a1 = p.coeff(&[1]);
            let a2 = p.coeff(&[2]);
            let minus_a0a2 = -(&a0 * &a2);
            let a1_sq = &a1 * &a1;
            let two = BigInt::from(2);
            let lower = BigInt::from(n - 2) * &a1_sq;
            let upper = BigInt::from(n - 1) * &a1_sq;
            checks.check(
                &format!("n{n}_coefficient_bound"),
                lower < &two * &minus_a0a2 && &two * &minus_a0a2 <= upper,
            );
            checks.note(&format!("n{n}_a0"), a0.to_string());
            checks.note(&format!("n{n}_a1"), a1.to_string());
        }
        if n == 2 {
            checks.note(
                "n2_x2_coefficient_of_square",
                p.pow(2)?.coeff(&[2]).to_string(),
            );
        }
    }
    Ok(checks.finish("anyposint", started))
}

/// For each requested `n`: with `D` of negativity `n`, `B = 1 + x`, and
/// `A = B D`, the `n`-copy extraction identity
/// `n iota(A) = n iota(B) + iota(D^n)` holds and every lower power of `D`
/// has a negative coefficient, so the explicit chain of length `n` exists
/// but no shorter one does.
pub fn verify_arbnumreq(ns: &[u32]) -> Result<ClaimReport> {
    let started = Instant::now();
    let mut checks = Checks::new();
    for &n in ns {
        let d = construct_negativity_n(n)?;
        let b_poly = IntPolynomial::univariate(&[1, 1]);
        let a_poly = b_poly.mul(&d)?;
        checks.check(&format!("n{n}_a_nonneg"), a_poly.is_nonneg());

        let ia = a_poly.iota()?;
        let ib = b_poly.iota()?;
        let dn = d.pow(n)?;
        checks.check(&format!("n{n}_dn_nonneg"), dn.is_nonneg());
        checks.check(
            &format!("n{n}_multicopy_identity"),
            ia.n_fold(n)? == ib.n_fold(n)?.msum(&dn.iota()?)?,
        );
        for k in 1..n {
            checks.check(
                &format!("n{n}_d_pow_{k}_has_negative_coefficient"),
                !d.pow(k)?.is_nonneg(),
            );
        }

        let a_state = TTState::Multiset(ia);
        let b_state = TTState::Multiset(ib);
        let c = TTInstance::ZVecEq.identity_like(&a_state)?;
        let chain = multicopy_to_chain(TTInstance::ZVecEq, &a_state, &b_state, &c, n, true)?;
        checks.check(&format!("n{n}_chain_length"), chain.len() == n as usize);
        checks.check(
            &format!("n{n}_chain_verifies"),
            verify_cycle(TTInstance::ZVecEq, &a_state, &b_state, &chain)?,
        );
    }
    Ok(checks.finish("arbnumreq", started))
}

/// If `q * p^n` stays nonnegative, the multisets `C_i = iota(q * p^i)` form
/// a flexible catalyst chain for `A = iota(q p)`, `B = iota(q)` in which the
/// catalyst never returns: verify a bounded prefix of the chain edges
/// `A + C_i = B + C_{i+1}` exactly.
fn chain_prefix_holds(p: &IntPolynomial, q: &IntPolynomial, edges: u32) -> Result<bool> {
    let a = q.mul(p)?.iota()?;
    let b = q.iota()?;
    let mut catalyst = q.clone();
    for _ in 0..edges {
        let next = catalyst.mul(p)?;
        if a.msum(&catalyst.iota()?)? != b.msum(&next.iota()?)? {
            return Ok(false);
        }
        catalyst = next;
    }
    Ok(true)
}

/// Bounded scans of the two open-question candidate pairs. Evidence only:
/// the conjecture (infinitely negative but essentially positive) is not
/// decidable by any finite scan.
pub fn scan_open_question(univariate_max: u32, bivariate_max: u32) -> Result<ClaimReport> {
    let started = Instant::now();
    let mut checks = Checks::new();

    let p1 = IntPolynomial::univariate(&[1, 1, 1, -1, 1, -1, 1, 1, 1]);
    let q1 = IntPolynomial::univariate(&[1, 1, 1, 1]);
    let uni = essential_positivity_scan(&p1, &q1, univariate_max)?;
    checks.note("univariate_n_max", univariate_max);
    checks.note("univariate_first_p_pow_nonneg", uni.first_p_pow_nonneg);
    checks.note("univariate_first_q_failure", uni.first_q_failure);
    let prefix = univariate_max.min(8);
    checks.note(
        "univariate_chain_prefix_edges_verified",
        if chain_prefix_holds(&p1, &q1, prefix)? {
            Some(prefix)
        } else {
            None
        },
    );

    let one = BigInt::from(1);
    let p2 = IntPolynomial::new(
        2,
        [
            (vec![0, 0], one.clone()),
            (vec![3, 0], one.clone()),
            (vec![2, 1], one.clone()),
            (vec![1, 2], one.clone()),
            (vec![0, 3], one.clone()),
            (vec![3, 1], one.clone()),
            (vec![2, 2], BigInt::from(-1)),
            (vec![1, 3], one.clone()),
            (vec![3, 2], one.clone()),
            (vec![2, 3], one.clone()),
        ],
    )?;
    let q2 = IntPolynomial::new(2, [(vec![1, 0], one.clone()), (vec![0, 1], one)])?;
    let bi = essential_positivity_scan(&p2, &q2, bivariate_max)?;
    checks.note("bivariate_n_max", bivariate_max);
    checks.note("bivariate_first_p_pow_nonneg", bi.first_p_pow_nonneg);
    checks.note("bivariate_first_q_failure", bi.first_q_failure);
    let prefix = bivariate_max.min(8);
    checks.note(
        "bivariate_chain_prefix_edges_verified",
        if chain_prefix_holds(&p2, &q2, prefix)? {
            Some(prefix)
        } else {
            None
        },
    );

    Ok(checks.finish_evidence("open-question-scan", started))
}

/// Bounds for [`run_all`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct RunConfig {
    pub anyposint_ns: Vec<u32>,
    pub arbnumreq_ns: Vec<u32>,
    pub scan_univariate_max: u32,
    pub scan_bivariate_max: u32,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            anyposint_ns: vec![2, 3, 4, 5],
            arbnumreq_ns: vec![2, 3],
            scan_univariate_max: 100,
            scan_bivariate_max: 50,
        }
    }
}

/// Run every verifier; reports are ordered by claim id.
pub fn run_all(config: &RunConfig) -> Result<Vec<ClaimReport>> {
    let mut reports = vec![
        verify_advantage()?,
        verify_anyposint(&config.anyposint_ns)?,
        verify_arbnumreq(&config.arbnumreq_ns)?,
        verify_locc_positive()?,
        verify_no_unique_factorisation()?,
        scan_open_question(config.scan_univariate_max, config.scan_bivariate_max)?,
        verify_pm_omega()?,
    ];
    reports.sort_by(|a, b| a.claim.cmp(&b.claim));
    Ok(reports)
}

/// True when every pass/fail claim passes (evidence-only claims do not
/// count either way).
pub fn all_non_evidence_pass(reports: &[ClaimReport]) -> bool {
    reports.iter().all(|r| r.status != ClaimStatus::Fail)
}

/// Fixed-width summary for standard output.
pub fn render_table(reports: &[ClaimReport]) -> String {
    let mut out = String::new();
    let width = reports
        .iter()
        .map(|r| r.claim.len())
        .max()
        .unwrap_or(0)
        .max("claim".len());
    out.push_str(&format!(
        "{:<width$}  {:<13} {:>9}\n",
        "claim", "status", "time"
    ));
    for r in reports {
        let status = match r.status {
            ClaimStatus::Pass => "pass",
            ClaimStatus::Fail => "FAIL",
            ClaimStatus::EvidenceOnly => "evidence-only",
        };
        out.push_str(&format!(
            "{:<width$}  {:<13} {:>7}ms\n",
            r.claim,
            status,
            r.runtime.as_millis()
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn detail_bool(report: &ClaimReport, key: &str) -> bool {
        report.details[key]
            .as_bool()
            .unwrap_or_else(|| panic!("missing bool detail {key}"))
    }

    #[test]
    fn pm_omega_passes_with_frozen_profiles() {
        let report = verify_pm_omega().unwrap();
        assert_eq!(report.status, ClaimStatus::Pass);
        // class profiles (1,4,4) vs (5,2,2)
        let aa = &report.details["a_composed_a"]["elems"];
        let mults: Vec<&str> = aa
            .as_array()
            .unwrap()
            .iter()
            .map(|e| e["m"].as_str().unwrap())
            .collect();
        assert_eq!(mults, vec!["1", "4", "4"]);
        let ba = &report.details["b_composed_a"]["elems"];
        let mults: Vec<&str> = ba
            .as_array()
            .unwrap()
            .iter()
            .map(|e| e["m"].as_str().unwrap())
            .collect();
        assert_eq!(mults, vec!["5", "2", "2"]);
    }

    #[test]
    fn advantage_passes_and_flags_the_swap() {
        let report = verify_advantage().unwrap();
        assert_eq!(report.status, ClaimStatus::Pass);
        assert!(report.paper_note.is_some());
        assert!(detail_bool(&report, "size_a_is_70"));
        assert!(detail_bool(&report, "size_c0_is_10"));
        assert_eq!(report.details["quotient_x2_coefficient"], "-2");
    }

    #[test]
    fn locc_positive_passes_with_frozen_violations() {
        let report = verify_locc_positive().unwrap();
        assert_eq!(report.status, ClaimStatus::Pass);
        let v = &report.details["violation_aa_vs_ba"];
        assert_eq!(v["k"], 4);
        assert_eq!(v["lhs"], "16/25");
        assert_eq!(v["rhs"], "79/125");
        let v = &report.details["violation_ab_vs_bb"];
        assert_eq!(v["k"], 2);
    }

    #[test]
    fn no_unique_factorisation_passes() {
        let report = verify_no_unique_factorisation().unwrap();
        assert_eq!(report.status, ClaimStatus::Pass);
        assert!(detail_bool(&report, "b_irreducible"));
        assert!(detail_bool(&report, "a_inequivalent_to_c"));
    }

    #[test]
    fn anyposint_small_ns_pass() {
        let report = verify_anyposint(&[2, 3]).unwrap();
        assert_eq!(report.status, ClaimStatus::Pass);
        assert_eq!(report.details["n2_a0"], "312");
        assert_eq!(report.details["n2_x2_coefficient_of_square"], "1");
    }

    #[test]
    fn arbnumreq_small_ns_pass() {
        let report = verify_arbnumreq(&[2]).unwrap();
        assert_eq!(report.status, ClaimStatus::Pass);
        assert!(detail_bool(&report, "n2_d_pow_1_has_negative_coefficient"));
    }

    #[test]
    fn open_question_scan_is_evidence_only() {
        let report = scan_open_question(5, 3).unwrap();
        assert_eq!(report.status, ClaimStatus::EvidenceOnly);
        assert_eq!(report.details["univariate_first_q_failure"], Value::Null);
        assert_eq!(report.details["bivariate_first_q_failure"], Value::Null);
        assert_eq!(report.details["univariate_chain_prefix_edges_verified"], 5);
        assert_eq!(report.details["bivariate_chain_prefix_edges_verified"], 3);
    }

    #[test]
    fn reports_are_certificates_witnesses_reverify_standalone() {
        use crate::catalysis::{CatalystCycle, FlexReport, PmCatalysis};

        // round-trip the advantage flex report through JSON and re-verify the
        // found cycle with the core predicate
        let report = verify_advantage().unwrap();
        let flex: FlexReport =
            serde_json::from_value(report.details["flex_report"].clone()).unwrap();
        let cycle = flex.cycle.expect("cycle was found");
        let reconstructed = CatalystCycle {
            catalysts: cycle
                .indices
                .iter()
                .map(|&i| flex.catalysts[i].clone())
                .collect(),
            discards: cycle.discards,
        };
        assert!(verify_cycle(flex.tt, &flex.a, &flex.b, &reconstructed).unwrap());

        // the serialized torsion catalyst really catalyzes the omega pair
        let report = verify_pm_omega().unwrap();
        let decided: Option<PmCatalysis> =
            serde_json::from_value(report.details["torsion_catalyst"].clone()).unwrap();
        let decided = decided.expect("catalyst was found");
        let (a, b) = omega_pair();
        let lhs = a.msum(&decided.catalyst).unwrap();
        let rhs = b.msum(&decided.catalyst).unwrap();
        assert_eq!(lhs.translate(&decided.translation).unwrap(), rhs);
    }

    #[test]
    fn run_all_with_small_bounds_is_ordered_and_deterministic() {
        let config = RunConfig {
            anyposint_ns: vec![2],
            arbnumreq_ns: vec![2],
            scan_univariate_max: 3,
            scan_bivariate_max: 2,
        };
        let reports = run_all(&config).unwrap();
        let ids: Vec<&str> = reports.iter().map(|r| r.claim.as_str()).collect();
        assert_eq!(
            ids,
            vec![
                "advantage",
                "anyposint",
                "arbnumreq",
                "locc-positive",
                "no-unique-factorisation",
                "open-question-scan",
                "pm-omega"
            ]
        );
        assert!(all_non_evidence_pass(&reports));
        let once = serde_json::to_string(&reports).unwrap();
        let twice = serde_json::to_string(&run_all(&config).unwrap()).unwrap();
        assert_eq!(once, twice, "reports must be byte-identical");
        assert!(render_table(&reports).contains("pm-omega"));
    }
}
