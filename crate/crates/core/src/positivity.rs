//! Bigness criteria as certificate-checked decision procedures.
//!
//! Every criterion is a sufficient condition, so a [`Verdict`] is either
//! `Big`, `Inconclusive`, or `RejectedInput`; there is deliberately no
//! "not big" outcome.
//!
//! Hypotheses come from a [`Certificate`] of user assertions. Under
//! [`Verification::Compute`] (the default) any hypothesis that has a closed
//! form on the base is evaluated as well: it fills in missing assertions, and
//! an assertion that disagrees with the computed value rejects the input.

use std::fmt;
use std::sync::Arc;

use num::{BigInt, Signed, Zero};

use crate::bundle::{
    canonical_divisor, line_bundle, segre, tangent_bundle, twist, BundleClass, Structure,
};
use crate::chowring::{BaseKind, BaseVariety, ChowClass, Rational};
use crate::cohomology::{CohomologyVector, LineBundleOnBase};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    Big,
    Inconclusive,
    RejectedInput,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Big => "BIG",
            Outcome::Inconclusive => "INCONCLUSIVE",
            Outcome::RejectedInput => "REJECTED_INPUT",
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which criterion produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    SegrePositivity,
    Surface,
    Fourfold,
    FanoTangent,
    EffectiveTwist,
}

impl Route {
    pub fn as_str(self) -> &'static str {
        match self {
            Route::SegrePositivity => "segre-big",
            Route::Surface => "surface-big",
            Route::Fourfold => "fourfold-big",
            Route::FanoTangent => "fano-tangent",
            Route::EffectiveTwist => "twist-big",
        }
    }
}

/// Where the value of an audited hypothesis came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Source {
    /// Read off the input itself (rank, dimension, Segre numbers).
    Structural,
    Asserted,
    Computed,
    Missing,
}

impl Source {
    pub fn as_str(self) -> &'static str {
        match self {
            Source::Structural => "structural",
            Source::Asserted => "asserted",
            Source::Computed => "computed",
            Source::Missing => "missing",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditEntry {
    pub hypothesis: String,
    pub required: String,
    pub provided: String,
    pub satisfied: bool,
    pub source: Source,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub outcome: Outcome,
    pub route: Route,
    pub audit: Vec<AuditEntry>,
    /// Degree of s_dim(E).
    pub segre_top: Rational,
    pub numerical_dimension: Option<u32>,
    /// Set only in the maximal case n(E) = dim + r - 1.
    pub kodaira_iitaka: Option<u32>,
    pub rejection: Option<String>,
}

impl Verdict {
    pub fn is_big(&self) -> bool {
        self.outcome == Outcome::Big
    }

    pub fn first_failure(&self) -> Option<&AuditEntry> {
        self.audit.iter().find(|a| !a.satisfied)
    }

    fn rejected(route: Route, reason: impl Into<String>, segre_top: Rational) -> Self {
        Verdict {
            outcome: Outcome::RejectedInput,
            route,
            audit: Vec::new(),
            segre_top,
            numerical_dimension: None,
            kodaira_iitaka: None,
            rejection: Some(reason.into()),
        }
    }
}

/// Data for the effective-twist criterion: an ample line bundle L with
/// h^0(E (x) L^-1) >= 1.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct EffectiveTwist {
    /// c_1(L), when known; lets the checker evaluate the two legs itself.
    pub line: Option<ChowClass>,
    pub ample: Option<bool>,
    pub h0_twist: Option<u64>,
}

/// User-asserted cohomological facts. `None` means "not asserted".
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Certificate {
    pub globally_generated: Option<bool>,
    pub h0: Option<u64>,
    /// q(V) = h^1(O_V) = 0.
    pub q_zero: Option<bool>,
    /// h^1((det E)^-1) = 0.
    pub h1_det_inv_zero: Option<bool>,
    /// h^i((det E)^-1) = 0 for 1 <= i <= 3.
    pub hi_det_inv_zero: Option<bool>,
    /// h^3(E^v (x) (det E)^-1) = 0.
    pub h3_dual_twist_zero: Option<bool>,
    pub mu_injective: Option<bool>,
    pub fano: Option<bool>,
    pub effective_twist: Option<EffectiveTwist>,
}

/// Whether closed-form cohomology on the base is consulted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Verification {
    #[default]
    Compute,
    /// Certificate-level check: only the assertions are used.
    TrustCertificate,
}

/// Hypotheses of the criteria that have closed forms on the supported bases.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ComputedFacts {
    pub globally_generated: Option<bool>,
    pub h0: Option<BigInt>,
    pub q_zero: Option<bool>,
    pub h1_det_inv_zero: Option<bool>,
    pub hi_det_inv_zero: Option<bool>,
    pub h3_dual_twist_zero: Option<bool>,
    pub fano: Option<bool>,
}

fn line_coh(divisor: &ChowClass) -> Option<CohomologyVector> {
    LineBundleOnBase::from_class(divisor)
        .ok()
        .map(|l| l.cohomology())
}

fn tangent_h0(base: &BaseVariety) -> BigInt {
    let pn = |n: u32| BigInt::from((n as i64 + 1).pow(2) - 1);
    match base.kind() {
        BaseKind::ProjectiveSpace(n) => pn(*n),
        BaseKind::Product(ns) => ns.iter().map(|&n| pn(n)).sum(),
        BaseKind::Hirzebruch(0) => BigInt::from(6),
        BaseKind::Hirzebruch(e) => BigInt::from(*e as i64 + 5),
    }
}

/// Evaluates every hypothesis that has a closed form for `e`.
pub fn computed_facts(e: &BundleClass) -> ComputedFacts {
    let base = e.base();
    let dim = base.dim();
    let det_inv = e.c1().neg();
    let det_inv_coh = line_coh(&det_inv);

    let mut facts = ComputedFacts {
        // every supported base is rational
        q_zero: Some(true),
        fano: canonical_divisor(base)
            .ok()
            .and_then(|k| LineBundleOnBase::from_class(&k.neg()).ok())
            .map(|l| l.positivity().ample),
        ..ComputedFacts::default()
    };
    if dim == 2 {
        facts.h1_det_inv_zero = det_inv_coh.as_ref().map(|v| v.h(1).is_zero());
    }
    if dim == 4 {
        facts.hi_det_inv_zero = det_inv_coh
            .as_ref()
            .map(|v| (1..=3).all(|i| v.h(i).is_zero()));
    }

    match e.structure() {
        Structure::Split(summands) => {
            let lines: Option<Vec<LineBundleOnBase>> = summands
                .iter()
                .map(|d| LineBundleOnBase::from_class(d).ok())
                .collect();
            if let Some(lines) = lines {
                facts.globally_generated =
                    Some(lines.iter().all(|l| l.positivity().globally_generated));
                facts.h0 = Some(lines.iter().map(|l| l.cohomology().h(0)).sum());
                if dim == 4 {
                    // E^v (x) det^-1 splits as the sum of O(-L_i - c_1)
                    facts.h3_dual_twist_zero = summands
                        .iter()
                        .map(|d| line_coh(&d.neg().add(&det_inv).ok()?).map(|v| v.h(3).is_zero()))
                        .collect::<Option<Vec<bool>>>()
                        .map(|v| v.into_iter().all(|x| x));
                }
            }
        }
        Structure::Tangent => {
            facts.h0 = Some(tangent_h0(base));
            facts.globally_generated =
                Some(!matches!(base.kind(), BaseKind::Hirzebruch(e) if *e > 0));
            if dim == 4 {
                // h^3(Omega (x) K) = h^1(T) vanishes on projective spaces and their products
                facts.h3_dual_twist_zero = Some(true);
            }
        }
        Structure::Opaque => {}
    }
    facts
}

/// n(E) = (r - 1) + max{k : s_k(E) != 0}, for globally generated E.
pub fn numerical_dimension(e: &BundleClass, globally_generated: bool) -> Result<u32> {
    if !globally_generated {
        return Err(Error::NotGloballyGenerated);
    }
    Ok(numerical_dimension_unchecked(e))
}

fn numerical_dimension_unchecked(e: &BundleClass) -> u32 {
    let s = segre(e);
    let top = (1..=e.base().dim())
        .rev()
        .find(|&k| !s.get(k).is_zero())
        .unwrap_or(0);
    e.rank() - 1 + top as u32
}

struct AuditBuilder {
    policy: Verification,
    entries: Vec<AuditEntry>,
    conflicts: Vec<String>,
}

fn show_bool(v: Option<bool>) -> String {
    v.map_or_else(|| "missing".to_string(), |b| b.to_string())
}

impl AuditBuilder {
    fn new(policy: Verification) -> Self {
        AuditBuilder {
            policy,
            entries: Vec::new(),
            conflicts: Vec::new(),
        }
    }

    fn push(
        &mut self,
        hypothesis: &str,
        required: String,
        provided: String,
        satisfied: bool,
        source: Source,
    ) -> bool {
        self.entries.push(AuditEntry {
            hypothesis: hypothesis.to_string(),
            required,
            provided,
            satisfied,
            source,
        });
        satisfied
    }

    fn structural(
        &mut self,
        hypothesis: &str,
        required: &str,
        provided: String,
        satisfied: bool,
    ) -> bool {
        self.push(
            hypothesis,
            required.to_string(),
            provided,
            satisfied,
            Source::Structural,
        )
    }

    fn resolve<T: PartialEq + fmt::Display + Clone>(
        &mut self,
        hypothesis: &str,
        asserted: Option<T>,
        computed: Option<T>,
    ) -> (Option<T>, Source) {
        let computed = match self.policy {
            Verification::Compute => computed,
            Verification::TrustCertificate => None,
        };
        match (asserted, computed) {
            (Some(a), Some(c)) => {
                if a != c {
                    self.conflicts
                        .push(format!("{hypothesis}: asserted {a} but computed {c}"));
                }
                (Some(c), Source::Computed)
            }
            (None, Some(c)) => (Some(c), Source::Computed),
            (Some(a), None) => (Some(a), Source::Asserted),
            (None, None) => (None, Source::Missing),
        }
    }

    fn flag(&mut self, hypothesis: &str, asserted: Option<bool>, computed: Option<bool>) -> bool {
        let (value, source) = self.resolve(hypothesis, asserted, computed);
        let ok = value == Some(true);
        self.push(hypothesis, "true".into(), show_bool(value), ok, source)
    }

    fn at_least(
        &mut self,
        hypothesis: &str,
        bound: u64,
        asserted: Option<u64>,
        computed: Option<BigInt>,
    ) -> bool {
        let (value, source) = self.resolve(hypothesis, asserted.map(BigInt::from), computed);
        let ok = value.as_ref().is_some_and(|v| *v >= BigInt::from(bound));
        let provided = value.map_or_else(|| "missing".to_string(), |v| v.to_string());
        self.push(hypothesis, format!(">= {bound}"), provided, ok, source)
    }

    fn finish(self, route: Route, e: &BundleClass, gg_holds: bool) -> Verdict {
        let segre_top = segre(e).top();
        let all = self.entries.iter().all(|a| a.satisfied);
        let (outcome, rejection) = if !self.conflicts.is_empty() {
            (Outcome::RejectedInput, Some(self.conflicts.join("; ")))
        } else if all {
            (Outcome::Big, None)
        } else {
            (Outcome::Inconclusive, None)
        };
        let numerical_dimension = gg_holds.then(|| numerical_dimension_unchecked(e));
        let maximal = e.base().dim() as u32 + e.rank() - 1;
        Verdict {
            outcome,
            route,
            audit: self.entries,
            segre_top,
            numerical_dimension,
            kodaira_iitaka: numerical_dimension.filter(|&n| n == maximal),
            rejection,
        }
    }
}

/// Runs the bigness criteria under a fixed verification policy.
#[derive(Debug, Clone, Copy, Default)]
pub struct Checker {
    pub verification: Verification,
}

impl Checker {
    pub fn new(verification: Verification) -> Self {
        Checker { verification }
    }

    fn facts(&self, e: &BundleClass) -> ComputedFacts {
        match self.verification {
            Verification::Compute => computed_facts(e),
            Verification::TrustCertificate => ComputedFacts::default(),
        }
    }

    /// Globally generated and the top Segre class has positive degree.
    pub fn big_via_segre(&self, e: &BundleClass, cert: &Certificate) -> Verdict {
        let facts = self.facts(e);
        let mut audit = AuditBuilder::new(self.verification);
        let gg = audit.flag(
            "E globally generated",
            cert.globally_generated,
            facts.globally_generated,
        );
        let top = segre(e).top();
        let d = e.base().dim();
        audit.structural(
            &format!("deg s_{d}(E) > 0"),
            "> 0",
            top.to_string(),
            top.is_positive(),
        );
        audit.finish(Route::SegrePositivity, e, gg)
    }

    /// Surface criterion: E globally generated of rank r >= 2 with
    /// h^0(E) >= r + 2 and h^1((det E)^-1) = 0.
    pub fn check_surface_bigness(&self, e: &BundleClass, cert: &Certificate) -> Verdict {
        if e.base().dim() != 2 {
            return Verdict::rejected(
                Route::Surface,
                format!("{} is not a surface", e.base()),
                segre(e).top(),
            );
        }
        let facts = self.facts(e);
        let r = e.rank();
        let mut audit = AuditBuilder::new(self.verification);
        audit.structural("rank(E) >= 2", ">= 2", r.to_string(), r >= 2);
        let gg = audit.flag(
            "E globally generated",
            cert.globally_generated,
            facts.globally_generated,
        );
        audit.at_least("h0(E)", r as u64 + 2, cert.h0, facts.h0);
        audit.flag(
            "h1((det E)^-1) = 0",
            cert.h1_det_inv_zero,
            facts.h1_det_inv_zero,
        );
        audit.finish(Route::Surface, e, gg)
    }

    /// Fourfold criterion: E globally generated of rank r >= 2 with
    /// h^0(E) >= r + 4, q = 0, h^i((det E)^-1) = 0 for 1 <= i <= 3,
    /// h^3(E^v (x) (det E)^-1) = 0 and mu_E injective.
    pub fn check_fourfold_bigness(&self, e: &BundleClass, cert: &Certificate) -> Verdict {
        if e.base().dim() != 4 {
            return Verdict::rejected(
                Route::Fourfold,
                format!("{} is not a fourfold", e.base()),
                segre(e).top(),
            );
        }
        let facts = self.facts(e);
        let r = e.rank();
        let mut audit = AuditBuilder::new(self.verification);
        audit.structural("rank(E) >= 2", ">= 2", r.to_string(), r >= 2);
        let gg = audit.flag(
            "E globally generated",
            cert.globally_generated,
            facts.globally_generated,
        );
        audit.at_least("h0(E)", r as u64 + 4, cert.h0, facts.h0);
        audit.flag("q(V) = 0", cert.q_zero, facts.q_zero);
        audit.flag(
            "hi((det E)^-1) = 0 for i = 1..3",
            cert.hi_det_inv_zero,
            facts.hi_det_inv_zero,
        );
        audit.flag(
            "h3(E^v (x) (det E)^-1) = 0",
            cert.h3_dual_twist_zero,
            facts.h3_dual_twist_zero,
        );
        audit.flag("mu_E injective", cert.mu_injective, None);
        audit.finish(Route::Fourfold, e, gg)
    }

    /// Fano fourfold with globally generated tangent bundle and h^0(T) >= 9.
    pub fn check_fano_tangent(&self, base: &Arc<BaseVariety>, cert: &Certificate) -> Verdict {
        let t = match tangent_bundle(base) {
            Ok(t) => t,
            Err(err) => {
                return Verdict::rejected(Route::FanoTangent, err.to_string(), Rational::zero())
            }
        };
        if base.dim() != 4 {
            return Verdict::rejected(
                Route::FanoTangent,
                format!("{base} is not a fourfold"),
                segre(&t).top(),
            );
        }
        let facts = self.facts(&t);
        let mut audit = AuditBuilder::new(self.verification);
        audit.flag("V Fano", cert.fano, facts.fano);
        let gg = audit.flag(
            "T_V globally generated",
            cert.globally_generated,
            facts.globally_generated,
        );
        audit.at_least("h0(T_V)", 9, cert.h0, facts.h0);
        audit.finish(Route::FanoTangent, &t, gg)
    }

    /// E (x) L^-1 effective for an ample L.
    pub fn big_via_effective_twist(&self, e: &BundleClass, cert: &Certificate) -> Verdict {
        let Some(data) = &cert.effective_twist else {
            return Verdict::rejected(
                Route::EffectiveTwist,
                "effective-twist data missing",
                segre(e).top(),
            );
        };
        let mut computed_ample = None;
        let mut computed_h0 = None;
        if let (Verification::Compute, Some(line)) = (self.verification, &data.line) {
            match LineBundleOnBase::from_class(line) {
                Ok(l) if **l.base() == **e.base() => {
                    computed_ample = Some(l.positivity().ample);
                    let inverse = line_bundle(e.base(), &line.neg()).expect("divisor class");
                    computed_h0 = twist(e, &inverse).ok().and_then(|t| computed_facts(&t).h0);
                }
                Ok(_) => {
                    return Verdict::rejected(
                        Route::EffectiveTwist,
                        "twisting line bundle lives on another base",
                        segre(e).top(),
                    )
                }
                Err(err) => {
                    return Verdict::rejected(
                        Route::EffectiveTwist,
                        err.to_string(),
                        segre(e).top(),
                    )
                }
            }
        }
        let mut audit = AuditBuilder::new(self.verification);
        audit.flag("L ample", data.ample, computed_ample);
        audit.at_least("h0(E (x) L^-1)", 1, data.h0_twist, computed_h0);
        let gg = self.facts(e).globally_generated.or(cert.globally_generated) == Some(true);
        audit.finish(Route::EffectiveTwist, e, gg)
    }
}

pub fn big_via_segre(e: &BundleClass, cert: &Certificate) -> Verdict {
    Checker::default().big_via_segre(e, cert)
}

pub fn check_surface_bigness(e: &BundleClass, cert: &Certificate) -> Verdict {
    Checker::default().check_surface_bigness(e, cert)
}

pub fn check_fourfold_bigness(e: &BundleClass, cert: &Certificate) -> Verdict {
    Checker::default().check_fourfold_bigness(e, cert)
}

pub fn check_fano_tangent(base: &Arc<BaseVariety>, cert: &Certificate) -> Verdict {
    Checker::default().check_fano_tangent(base, cert)
}

pub fn big_via_effective_twist(e: &BundleClass, cert: &Certificate) -> Verdict {
    Checker::default().big_via_effective_twist(e, cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundle::whitney_sum;
    use crate::chowring::rational;

    fn o(base: &Arc<BaseVariety>, coeffs: &[i64]) -> BundleClass {
        line_bundle(base, &ChowClass::divisor(base, coeffs).unwrap()).unwrap()
    }

    fn plane_example() -> BundleClass {
        let p2 = BaseVariety::projective(2).unwrap();
        whitney_sum(&o(&p2, &[0]), &o(&p2, &[2])).unwrap()
    }

    #[test]
    fn numerical_dimensions() {
        let e = plane_example();
        assert_eq!(numerical_dimension(&e, true), Ok(3));
        let p2 = BaseVariety::projective(2).unwrap();
        let triv = BundleClass::trivial(&p2, 2).unwrap();
        assert_eq!(numerical_dimension(&triv, true), Ok(1));
        let p4 = BaseVariety::projective(4).unwrap();
        assert_eq!(
            numerical_dimension(&tangent_bundle(&p4).unwrap(), true),
            Ok(7)
        );
        assert_eq!(
            numerical_dimension(&e, false),
            Err(Error::NotGloballyGenerated)
        );
    }

    #[test]
    fn computed_facts_for_split_plane_bundle() {
        let f = computed_facts(&plane_example());
        assert_eq!(f.globally_generated, Some(true));
        assert_eq!(f.h0, Some(BigInt::from(7)));
        assert_eq!(f.h1_det_inv_zero, Some(true));
        assert_eq!(f.q_zero, Some(true));
        assert_eq!(f.fano, Some(true));
        assert_eq!(f.hi_det_inv_zero, None);
    }

    #[test]
    fn computed_facts_for_tangent_p4() {
        let p4 = BaseVariety::projective(4).unwrap();
        let f = computed_facts(&tangent_bundle(&p4).unwrap());
        assert_eq!(f.h0, Some(BigInt::from(24)));
        assert_eq!(f.globally_generated, Some(true));
        assert_eq!(f.hi_det_inv_zero, Some(true));
        assert_eq!(f.h3_dual_twist_zero, Some(true));
    }

    #[test]
    fn segre_route() {
        let cert = Certificate {
            globally_generated: Some(true),
            ..Default::default()
        };
        let v = big_via_segre(&plane_example(), &cert);
        assert_eq!(v.outcome, Outcome::Big);
        assert_eq!(v.segre_top, rational(4));
        assert_eq!(v.numerical_dimension, Some(3));
        assert_eq!(v.kodaira_iitaka, Some(3));

        let p2 = BaseVariety::projective(2).unwrap();
        let v = big_via_segre(&BundleClass::trivial(&p2, 2).unwrap(), &cert);
        assert_eq!(v.outcome, Outcome::Inconclusive);
        assert_eq!(v.segre_top, rational(0));
        assert_eq!(v.kodaira_iitaka, None);
    }

    #[test]
    fn segre_route_needs_global_generation() {
        // A + A^-1 with A = C + 2f: s_2 = A^2 = 3 > 0, yet not generated
        let f1 = BaseVariety::hirzebruch(1).unwrap();
        let e = whitney_sum(&o(&f1, &[1, 2]), &o(&f1, &[-1, -2])).unwrap();
        let v = big_via_segre(&e, &Certificate::default());
        assert_eq!(v.segre_top, rational(3));
        assert_eq!(v.outcome, Outcome::Inconclusive);
        let failing = v.first_failure().unwrap();
        assert_eq!(failing.hypothesis, "E globally generated");
        assert_eq!(failing.provided, "false");
        assert_eq!(v.numerical_dimension, None);
    }

    #[test]
    fn surface_route() {
        let v = check_surface_bigness(&plane_example(), &Certificate::default());
        assert_eq!(v.outcome, Outcome::Big);
        assert!(v.audit.iter().all(|a| a.satisfied));
        assert!(v.audit[1..].iter().all(|a| a.source == Source::Computed));
        assert_eq!(v.segre_top, rational(4));

        let checker = Checker::new(Verification::TrustCertificate);
        let cert = Certificate {
            globally_generated: Some(true),
            h0: Some(7),
            h1_det_inv_zero: Some(true),
            ..Default::default()
        };
        assert!(checker
            .check_surface_bigness(&plane_example(), &cert)
            .is_big());
        let thin = Certificate {
            h0: Some(3),
            ..cert.clone()
        };
        let v = checker.check_surface_bigness(&plane_example(), &thin);
        assert_eq!(v.outcome, Outcome::Inconclusive);
        assert_eq!(v.first_failure().unwrap().hypothesis, "h0(E)");
        let e_pattern = Certificate {
            h1_det_inv_zero: Some(false),
            ..cert
        };
        assert_eq!(
            checker
                .check_surface_bigness(&plane_example(), &e_pattern)
                .outcome,
            Outcome::Inconclusive
        );
    }

    #[test]
    fn conflicting_assertion_is_rejected() {
        let cert = Certificate {
            h0: Some(8),
            ..Default::default()
        };
        let v = check_surface_bigness(&plane_example(), &cert);
        assert_eq!(v.outcome, Outcome::RejectedInput);
        assert!(v.rejection.unwrap().contains("asserted 8 but computed 7"));
    }

    #[test]
    fn wrong_dimension_is_rejected() {
        let p4 = BaseVariety::projective(4).unwrap();
        let t = tangent_bundle(&p4).unwrap();
        assert_eq!(
            check_surface_bigness(&t, &Certificate::default()).outcome,
            Outcome::RejectedInput
        );
        assert_eq!(
            check_fourfold_bigness(&plane_example(), &Certificate::default()).outcome,
            Outcome::RejectedInput
        );
        let p2 = BaseVariety::projective(2).unwrap();
        assert_eq!(
            check_fano_tangent(&p2, &Certificate::default()).outcome,
            Outcome::RejectedInput
        );
    }

    #[test]
    fn fourfold_and_fano_routes() {
        let p4 = BaseVariety::projective(4).unwrap();
        let t = tangent_bundle(&p4).unwrap();
        let cert = Certificate {
            mu_injective: Some(true),
            ..Default::default()
        };
        let v = check_fourfold_bigness(&t, &cert);
        assert_eq!(v.outcome, Outcome::Big, "{:?}", v.audit);
        assert_eq!(v.segre_top, rational(70));
        assert_eq!(v.kodaira_iitaka, Some(7));

        let v = check_fourfold_bigness(&t, &Certificate::default());
        assert_eq!(v.outcome, Outcome::Inconclusive);
        assert_eq!(v.first_failure().unwrap().source, Source::Missing);

        let v = check_fano_tangent(&p4, &Certificate::default());
        assert_eq!(v.outcome, Outcome::Big);
        let trust = Checker::new(Verification::TrustCertificate);
        let cert = Certificate {
            fano: Some(true),
            globally_generated: Some(true),
            h0: Some(8),
            ..Default::default()
        };
        assert_eq!(
            trust.check_fano_tangent(&p4, &cert).outcome,
            Outcome::Inconclusive
        );
        let cert = Certificate {
            h0: Some(9),
            fano: Some(false),
            ..cert
        };
        assert_eq!(
            trust.check_fano_tangent(&p4, &cert).outcome,
            Outcome::Inconclusive
        );

        let b = BaseVariety::product(&[1, 3]).unwrap();
        assert!(check_fano_tangent(&b, &Certificate::default()).is_big());
    }

    #[test]
    fn effective_twist_route() {
        let f1 = BaseVariety::hirzebruch(1).unwrap();
        let a = ChowClass::divisor(&f1, &[1, 2]).unwrap();
        let u = whitney_sum(&o(&f1, &[0, 0]), &o(&f1, &[-2, -4])).unwrap();
        let e = twist(&u, &line_bundle(&f1, &a).unwrap()).unwrap();
        let cert = Certificate {
            effective_twist: Some(EffectiveTwist {
                line: Some(a.clone()),
                ..Default::default()
            }),
            ..Default::default()
        };
        let v = big_via_effective_twist(&e, &cert);
        assert_eq!(v.outcome, Outcome::Big);
        assert_eq!(v.audit[1].provided, "1");

        let fibre = ChowClass::divisor(&f1, &[0, 1]).unwrap();
        let cert = Certificate {
            effective_twist: Some(EffectiveTwist {
                line: Some(fibre),
                ..Default::default()
            }),
            ..Default::default()
        };
        let v = big_via_effective_twist(&e, &cert);
        assert_eq!(v.outcome, Outcome::Inconclusive);
        assert_eq!(v.first_failure().unwrap().hypothesis, "L ample");

        let v = big_via_effective_twist(&e, &Certificate::default());
        assert_eq!(v.outcome, Outcome::RejectedInput);

        let asserted = Certificate {
            effective_twist: Some(EffectiveTwist {
                line: None,
                ample: Some(true),
                h0_twist: Some(1),
            }),
            ..Default::default()
        };
        assert!(big_via_effective_twist(&e, &asserted).is_big());
    }
}
