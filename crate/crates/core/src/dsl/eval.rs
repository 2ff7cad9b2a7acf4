use std::collections::HashMap;
use std::sync::Arc;

use super::ast::*;
use crate::bundle::{
    determinant, dual, line_bundle, segre, tangent_bundle, twist, whitney_sum, BundleClass,
    SegreData,
};
use crate::chowring::{make_base, BaseSpec, BaseVariety, ChowClass, Rational};
use crate::cohomology::{chi_surface, CohomologyVector, LineBundleOnBase};
use crate::positivity::{
    numerical_dimension, Certificate, Checker, EffectiveTwist, Verdict, Verification,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EvalErrorKind {
    UnknownIdentifier,
    Redeclared,
    DimensionMismatch,
    MalformedCertificate,
    Unsupported,
    Rejected,
}

impl EvalErrorKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EvalErrorKind::UnknownIdentifier => "unknown-identifier",
            EvalErrorKind::Redeclared => "redeclared",
            EvalErrorKind::DimensionMismatch => "dimension-mismatch",
            EvalErrorKind::MalformedCertificate => "malformed-certificate",
            EvalErrorKind::Unsupported => "unsupported",
            EvalErrorKind::Rejected => "rejected",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{span}: {message}")]
pub struct EvalError {
    pub kind: EvalErrorKind,
    pub span: Span,
    pub message: String,
    /// The offending name, for unknown or redeclared identifiers.
    pub identifier: Option<String>,
}

impl EvalError {
    fn new(kind: EvalErrorKind, span: Span, message: impl Into<String>) -> Self {
        EvalError {
            kind,
            span,
            message: message.into(),
            identifier: None,
        }
    }

    fn core(span: Span, err: crate::Error) -> Self {
        let kind = match err {
            crate::Error::RankMismatch { .. } | crate::Error::BaseMismatch { .. } => {
                EvalErrorKind::DimensionMismatch
            }
            crate::Error::NotGloballyGenerated => EvalErrorKind::Rejected,
            _ => EvalErrorKind::Unsupported,
        };
        EvalError::new(kind, span, err.to_string())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Payload {
    Chern(BundleClass),
    Segre(SegreData),
    NumericalDimension {
        value: u32,
        /// dim V + rank - 1, the largest possible value.
        maximal: u32,
    },
    Chi(Rational),
    Cohomology(CohomologyVector),
    Verdict(Verdict),
}

#[derive(Debug, Clone, PartialEq)]
pub struct QueryResult {
    /// Canonical text of the query.
    pub query: String,
    pub kind: &'static str,
    pub span: Span,
    pub payload: Payload,
}

/// Results of the statements evaluated before the first error, if any.
#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation {
    pub results: Vec<QueryResult>,
    pub error: Option<EvalError>,
}

/// Evaluates statements in order against a single declared base.
#[derive(Debug, Clone, Default)]
pub struct Evaluator {
    checker: Checker,
    base: Option<Arc<BaseVariety>>,
    bundles: HashMap<String, BundleClass>,
}

/// Evaluates `script` with the default verification policy, stopping at the
/// first error.
pub fn evaluate(script: &Script) -> Result<Vec<QueryResult>, EvalError> {
    let ev = Evaluator::default().run(script);
    match ev.error {
        Some(err) => Err(err),
        None => Ok(ev.results),
    }
}

impl Evaluator {
    pub fn new(verification: Verification) -> Self {
        Evaluator {
            checker: Checker::new(verification),
            ..Evaluator::default()
        }
    }

    /// Bundle bound by `let`, if any.
    pub fn bundle_named(&self, name: &str) -> Option<&BundleClass> {
        self.bundles.get(name)
    }

    pub fn run(&mut self, script: &Script) -> Evaluation {
        let mut results = Vec::new();
        for stmt in &script.statements {
            match self.statement(stmt) {
                Ok(Some(r)) => results.push(r),
                Ok(None) => {}
                Err(err) => {
                    return Evaluation {
                        results,
                        error: Some(err),
                    }
                }
            }
        }
        Evaluation {
            results,
            error: None,
        }
    }

    fn base(&self, span: Span) -> Result<&Arc<BaseVariety>, EvalError> {
        self.base
            .as_ref()
            .ok_or_else(|| EvalError::new(EvalErrorKind::Unsupported, span, "no base declared"))
    }

    pub fn statement(&mut self, stmt: &Stmt) -> Result<Option<QueryResult>, EvalError> {
        match &stmt.kind {
            StmtKind::Base(decl) => {
                let spec = match decl {
                    BaseDecl::Projective(n) => BaseSpec::Projective(*n as i64),
                    BaseDecl::Hirzebruch(e) => BaseSpec::Hirzebruch(*e as i64),
                    BaseDecl::Product(ns) => {
                        BaseSpec::Product(ns.iter().map(|&n| n as i64).collect())
                    }
                };
                self.base = Some(make_base(&spec).map_err(|e| EvalError::core(stmt.span, e))?);
                Ok(None)
            }
            StmtKind::Let { name, expr } => {
                if self.bundles.contains_key(&name.name) {
                    let mut err = EvalError::new(
                        EvalErrorKind::Redeclared,
                        name.span,
                        format!("`{}` is already defined", name.name),
                    );
                    err.identifier = Some(name.name.clone());
                    return Err(err);
                }
                let b = self.bundle(expr)?.with_name(name.name.clone());
                self.bundles.insert(name.name.clone(), b);
                Ok(None)
            }
            StmtKind::Query(q) => Ok(Some(QueryResult {
                query: q.to_string(),
                kind: q.kind(),
                span: stmt.span,
                payload: self.query(q)?,
            })),
        }
    }

    fn divisor(&self, d: &DivExpr) -> Result<ChowClass, EvalError> {
        let base = self.base(d.span)?;
        let mut coeffs = vec![0i64; base.generators().len()];
        for t in &d.terms {
            let Some(i) = base.generator_index(&t.name.name) else {
                let mut err = EvalError::new(
                    EvalErrorKind::UnknownIdentifier,
                    t.name.span,
                    format!("`{}` is not a generator of {base}", t.name.name),
                );
                err.identifier = Some(t.name.name.clone());
                return Err(err);
            };
            coeffs[i] = coeffs[i].checked_add(t.coeff).ok_or_else(|| {
                EvalError::new(EvalErrorKind::Unsupported, t.span, "coefficient overflow")
            })?;
        }
        ChowClass::divisor(base, &coeffs).map_err(|e| EvalError::core(d.span, e))
    }

    fn bundle(&self, expr: &BundleExpr) -> Result<BundleClass, EvalError> {
        let base = self.base(expr.span)?;
        let core = |r: crate::Result<BundleClass>| r.map_err(|e| EvalError::core(expr.span, e));
        match &expr.kind {
            BundleExprKind::Trivial => core(BundleClass::trivial(base, 1)),
            BundleExprKind::Line(d) => core(line_bundle(base, &self.divisor(d)?)),
            BundleExprKind::Tangent => core(tangent_bundle(base)),
            BundleExprKind::Var(id) => self.bundles.get(&id.name).cloned().ok_or_else(|| {
                let mut err = EvalError::new(
                    EvalErrorKind::UnknownIdentifier,
                    id.span,
                    format!("unknown bundle `{}`", id.name),
                );
                err.identifier = Some(id.name.clone());
                err
            }),
            BundleExprKind::Dual(x) => Ok(dual(&self.bundle(x)?)),
            BundleExprKind::Det(x) => Ok(determinant(&self.bundle(x)?)),
            BundleExprKind::Twist(x, d) => {
                let l = core(line_bundle(base, &self.divisor(d)?))?;
                core(twist(&self.bundle(x)?, &l))
            }
            BundleExprKind::Sum(xs) => {
                let mut acc = self.bundle(&xs[0])?;
                for x in &xs[1..] {
                    acc = core(whitney_sum(&acc, &self.bundle(x)?))?;
                }
                Ok(acc)
            }
        }
    }

    fn query(&self, q: &Query) -> Result<Payload, EvalError> {
        match q {
            Query::Chern(b) => Ok(Payload::Chern(self.bundle(b)?)),
            Query::Segre(b) => Ok(Payload::Segre(segre(&self.bundle(b)?))),
            Query::NumericalDimension(b) => {
                let e = self.bundle(b)?;
                let gg = crate::positivity::computed_facts(&e).globally_generated;
                if gg != Some(true) {
                    return Err(EvalError::new(
                        EvalErrorKind::Rejected,
                        b.span,
                        "numerical dimension needs a bundle known to be globally generated",
                    ));
                }
                let value =
                    numerical_dimension(&e, true).map_err(|err| EvalError::core(b.span, err))?;
                Ok(Payload::NumericalDimension {
                    value,
                    maximal: e.base().dim() as u32 + e.rank() - 1,
                })
            }
            Query::Chi(d) => {
                let class = self.divisor(d)?;
                if class.base().is_surface() {
                    chi_surface(&class)
                        .map(Payload::Chi)
                        .map_err(|e| EvalError::core(d.span, e))
                } else {
                    let v = self.line(&class, d.span)?.cohomology();
                    Ok(Payload::Chi(Rational::from_integer(v.chi().clone())))
                }
            }
            Query::Coh(d) => {
                let class = self.divisor(d)?;
                Ok(Payload::Cohomology(self.line(&class, d.span)?.cohomology()))
            }
            Query::Check {
                criterion,
                bundle,
                certs,
            } => self.check(*criterion, bundle, certs).map(Payload::Verdict),
        }
    }

    fn line(&self, class: &ChowClass, span: Span) -> Result<LineBundleOnBase, EvalError> {
        LineBundleOnBase::from_class(class).map_err(|e| EvalError::core(span, e))
    }

    fn check(
        &self,
        criterion: Criterion,
        bexpr: &BundleExpr,
        certs: &[CertEntry],
    ) -> Result<Verdict, EvalError> {
        let base = self.base(bexpr.span)?;
        let required_dim = match criterion {
            Criterion::SurfaceBig => Some(2),
            Criterion::FourfoldBig | Criterion::FanoTangent => Some(4),
            Criterion::SegreBig | Criterion::TwistBig => None,
        };
        if let Some(d) = required_dim {
            if base.dim() != d {
                return Err(EvalError::new(
                    EvalErrorKind::DimensionMismatch,
                    bexpr.span,
                    format!(
                        "{} needs a base of dimension {d}, {base} has dimension {}",
                        criterion.keyword(),
                        base.dim()
                    ),
                ));
            }
        }
        if criterion == Criterion::FanoTangent && bexpr.kind != BundleExprKind::Tangent {
            return Err(EvalError::new(
                EvalErrorKind::Unsupported,
                bexpr.span,
                "fano-tangent applies to the tangent bundle T only",
            ));
        }
        let cert = certificate(criterion, certs)?;
        let e = self.bundle(bexpr)?;
        let c = &self.checker;
        Ok(match criterion {
            Criterion::SurfaceBig => c.check_surface_bigness(&e, &cert),
            Criterion::FourfoldBig => c.check_fourfold_bigness(&e, &cert),
            Criterion::FanoTangent => c.check_fano_tangent(base, &cert),
            Criterion::SegreBig => c.big_via_segre(&e, &cert),
            Criterion::TwistBig => c.big_via_effective_twist(&e, &cert),
        })
    }
}

/// Keys accepted by each criterion.
pub fn allowed_keys(criterion: Criterion) -> &'static [&'static str] {
    match criterion {
        Criterion::SurfaceBig => &["gg", "h0", "h1detinv"],
        Criterion::FourfoldBig => &["gg", "h0", "q0", "hidetinv", "h3dualtwist", "mu"],
        Criterion::FanoTangent => &["fano", "gg", "h0"],
        Criterion::SegreBig => &["gg"],
        Criterion::TwistBig => &["ample_L", "h0_twist", "gg"],
    }
}

fn certificate(criterion: Criterion, certs: &[CertEntry]) -> Result<Certificate, EvalError> {
    let allowed = allowed_keys(criterion);
    let mut cert = Certificate::default();
    let mut twist_data = EffectiveTwist::default();
    let mut seen: Vec<&str> = Vec::new();
    for entry in certs {
        let key = entry.key.name.as_str();
        let malformed = |msg: String| EvalError {
            kind: EvalErrorKind::MalformedCertificate,
            span: entry.span,
            message: msg,
            identifier: Some(key.to_string()),
        };
        if !allowed.contains(&key) {
            return Err(malformed(format!(
                "`{key}` is not a hypothesis of {} (expected one of {})",
                criterion.keyword(),
                allowed.join(", ")
            )));
        }
        if seen.contains(&key) {
            return Err(malformed(format!("`{key}` given twice")));
        }
        seen.push(key);
        let boolean = || match entry.value {
            CertValue::Bool(b) => Ok(b),
            CertValue::Int(_) => Err(malformed(format!("`{key}` takes true or false"))),
        };
        let count = || match entry.value {
            CertValue::Int(n) => Ok(n),
            CertValue::Bool(_) => Err(malformed(format!("`{key}` takes a non-negative integer"))),
        };
        // vanishing keys: an integer is the asserted dimension
        let vanishing = || match entry.value {
            CertValue::Bool(b) => b,
            CertValue::Int(n) => n == 0,
        };
        match key {
            "gg" => cert.globally_generated = Some(boolean()?),
            "h0" => cert.h0 = Some(count()?),
            "q0" => cert.q_zero = Some(vanishing()),
            "h1detinv" => cert.h1_det_inv_zero = Some(vanishing()),
            "hidetinv" => cert.hi_det_inv_zero = Some(vanishing()),
            "h3dualtwist" => cert.h3_dual_twist_zero = Some(vanishing()),
            "mu" => cert.mu_injective = Some(boolean()?),
            "fano" => cert.fano = Some(boolean()?),
            "ample_L" => twist_data.ample = Some(boolean()?),
            "h0_twist" => twist_data.h0_twist = Some(count()?),
            _ => unreachable!("keys are validated by the parser"),
        }
    }
    if twist_data != EffectiveTwist::default() {
        cert.effective_twist = Some(twist_data);
    }
    Ok(cert)
}
