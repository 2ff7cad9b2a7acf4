//! Human-readable rendering of a script run.

use std::fmt::Write;

use chowcalc::dsl::Payload;

use crate::runner::{Failure, ScriptRun};

fn table(out: &mut String, rows: &[Vec<String>]) {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    for row in rows {
        let mut line = String::from("   ");
        for (c, cell) in row.iter().enumerate() {
            let pad = widths[c] - cell.chars().count();
            line.push(' ');
            line.push_str(cell);
            if c + 1 < row.len() {
                line.push_str(&" ".repeat(pad + 1));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
}

fn payload(out: &mut String, p: &Payload) {
    let mut rows: Vec<Vec<String>> = Vec::new();
    match p {
        Payload::Chern(b) => {
            rows.push(vec!["rank".into(), b.rank().to_string()]);
            for k in 1..=b.chern_classes().len() {
                rows.push(vec![format!("c{k}"), b.chern(k).to_string()]);
            }
        }
        Payload::Segre(s) => {
            for (k, c) in s.classes().iter().enumerate() {
                rows.push(vec![format!("s{k}"), c.to_string()]);
            }
            rows.push(vec!["segre_top".into(), s.top().to_string()]);
        }
        Payload::NumericalDimension { value, maximal } => {
            rows.push(vec!["numerical dimension".into(), value.to_string()]);
            rows.push(vec!["maximal".into(), maximal.to_string()]);
        }
        Payload::Chi(q) => rows.push(vec!["chi".into(), q.to_string()]),
        Payload::Cohomology(v) => {
            for (i, h) in v.entries().iter().enumerate() {
                rows.push(vec![format!("h{i}"), h.to_string()]);
            }
            rows.push(vec!["chi".into(), v.chi().to_string()]);
        }
        Payload::Verdict(v) => {
            rows.push(vec!["outcome".into(), v.outcome.as_str().into()]);
            rows.push(vec!["route".into(), v.route.as_str().into()]);
            rows.push(vec!["segre_top".into(), v.segre_top.to_string()]);
            if let Some(n) = v.numerical_dimension {
                rows.push(vec!["numerical dimension".into(), n.to_string()]);
            }
            if let Some(reason) = &v.rejection {
                rows.push(vec!["rejection".into(), reason.clone()]);
            }
            table(out, &rows);
            let mut audit = vec![vec![
                "hypothesis".into(),
                "required".into(),
                "provided".into(),
                "source".into(),
                "ok".into(),
            ]];
            for a in &v.audit {
                audit.push(vec![
                    a.hypothesis.clone(),
                    a.required.clone(),
                    a.provided.clone(),
                    a.source.as_str().into(),
                    if a.satisfied { "yes" } else { "no" }.into(),
                ]);
            }
            table(out, &audit);
            return;
        }
    }
    table(out, &rows);
}

pub fn render(run: &ScriptRun) -> String {
    let mut out = String::new();
    for r in &run.results {
        let _ = writeln!(out, "[{}] {}", r.span, r.query);
        payload(&mut out, &r.payload);
    }
    match &run.failure {
        Some(Failure::Parse(e)) => {
            let _ = writeln!(out, "parse error at {e}");
        }
        Some(Failure::Eval(e)) => {
            let _ = writeln!(out, "{} error at {e}", e.kind.as_str());
        }
        Some(Failure::Io(msg)) => {
            let _ = writeln!(out, "io error: {msg}");
        }
        None => {}
    }
    out
}
