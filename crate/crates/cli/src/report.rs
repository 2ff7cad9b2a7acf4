//! Canonical JSON reports. Object keys are sorted and output is compact,
//! so equal runs serialize to identical bytes.

use chowcalc::dsl::{Payload, QueryResult};
use chowcalc::{ChowClass, Rational, Verdict};
use serde_json::{json, Map, Value};

use crate::runner::{Failure, ScriptRun};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub fn rational(q: &Rational) -> Value {
    Value::String(q.to_string())
}

/// `{monomial: coefficient}` with monomials named as in the base.
pub fn class(c: &ChowClass) -> Value {
    let base = c.base();
    let map: Map<String, Value> = c
        .terms()
        .map(|(m, q)| (base.monomial_name(m), rational(q)))
        .collect();
    Value::Object(map)
}

fn verdict(v: &Verdict) -> Value {
    let audit: Vec<Value> = v
        .audit
        .iter()
        .map(|a| {
            json!({
                "hypothesis": a.hypothesis,
                "required": a.required,
                "provided": a.provided,
                "satisfied": a.satisfied,
                "source": a.source.as_str(),
            })
        })
        .collect();
    json!({
        "outcome": v.outcome.as_str(),
        "route": v.route.as_str(),
        "audit": audit,
        "segre_top": rational(&v.segre_top),
        "numerical_dimension": v.numerical_dimension,
        "kodaira_iitaka": v.kodaira_iitaka,
        "rejection": v.rejection,
    })
}

pub fn payload(p: &Payload) -> Value {
    match p {
        Payload::Chern(b) => {
            let classes: Map<String, Value> = (1..=b.chern_classes().len())
                .map(|k| (format!("c{k}"), class(&b.chern(k))))
                .collect();
            json!({
                "rank": b.rank(),
                "classes": classes,
                "total": class(&b.total_chern()),
            })
        }
        Payload::Segre(s) => {
            let classes: Map<String, Value> = s
                .classes()
                .iter()
                .enumerate()
                .map(|(k, c)| (format!("s{k}"), class(c)))
                .collect();
            json!({
                "rank": s.source_rank(),
                "classes": classes,
                "segre_top": rational(&s.top()),
            })
        }
        Payload::NumericalDimension { value, maximal } => json!({
            "numerical_dimension": value,
            "maximal": maximal,
        }),
        Payload::Chi(q) => json!({ "chi": rational(q) }),
        Payload::Cohomology(v) => {
            let h: Vec<Value> = v
                .entries()
                .iter()
                .map(|x| Value::String(x.to_string()))
                .collect();
            json!({ "h": h, "chi": v.chi().to_string() })
        }
        Payload::Verdict(v) => verdict(v),
    }
}

fn query(r: &QueryResult) -> Value {
    json!({
        "query": r.query,
        "kind": r.kind,
        "line": r.span.line,
        "column": r.span.column,
        "payload": payload(&r.payload),
    })
}

fn failure(f: &Failure) -> Value {
    match f {
        Failure::Parse(e) => json!({
            "kind": "parse",
            "message": e.message,
            "line": e.span.line,
            "column": e.span.column,
            "expected": e.expected,
        }),
        Failure::Eval(e) => json!({
            "kind": e.kind.as_str(),
            "message": e.message,
            "line": e.span.line,
            "column": e.span.column,
            "identifier": e.identifier,
        }),
        Failure::Io(msg) => json!({ "kind": "io", "message": msg }),
    }
}

pub fn report(run: &ScriptRun) -> Value {
    json!({
        "version": VERSION,
        "queries": run.results.iter().map(query).collect::<Vec<_>>(),
        "errors": run.failure.iter().map(failure).collect::<Vec<_>>(),
    })
}

pub fn render(run: &ScriptRun) -> String {
    report(run).to_string()
}
