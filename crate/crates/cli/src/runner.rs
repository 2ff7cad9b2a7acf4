use std::thread;

use chowcalc::dsl::{parse, EvalError, Evaluator, ParseError, Payload, QueryResult};
use chowcalc::{Outcome, Verification};

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_SCRIPT_ERROR: u8 = 2;
pub const EXIT_REJECTED: u8 = 3;
pub const EXIT_IO: u8 = 4;

/// A named script source, or the reason it could not be read.
#[derive(Debug, Clone)]
pub struct Input {
    pub name: String,
    pub source: Result<String, String>,
}

impl Input {
    pub fn inline(name: impl Into<String>, text: impl Into<String>) -> Self {
        Input {
            name: name.into(),
            source: Ok(text.into()),
        }
    }

    pub fn read(path: &str) -> Self {
        let source = if path == "-" {
            std::io::read_to_string(std::io::stdin())
        } else {
            std::fs::read_to_string(path)
        };
        Input {
            name: path.to_string(),
            source: source.map_err(|e| format!("{path}: {e}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Failure {
    Parse(ParseError),
    Eval(EvalError),
    Io(String),
}

/// Everything produced by one script.
#[derive(Debug, Clone, PartialEq)]
pub struct ScriptRun {
    pub name: String,
    pub results: Vec<QueryResult>,
    pub failure: Option<Failure>,
}

impl ScriptRun {
    pub fn exit_code(&self) -> u8 {
        let mut code = match self.failure {
            None => EXIT_OK,
            Some(Failure::Parse(_) | Failure::Eval(_)) => EXIT_SCRIPT_ERROR,
            Some(Failure::Io(_)) => EXIT_IO,
        };
        let rejected = self.results.iter().any(
            |r| matches!(&r.payload, Payload::Verdict(v) if v.outcome == Outcome::RejectedInput),
        );
        if rejected {
            code = code.max(EXIT_REJECTED);
        }
        code
    }
}

pub fn run_script(input: &Input, verification: Verification) -> ScriptRun {
    let source = match &input.source {
        Ok(s) => s,
        Err(msg) => {
            return ScriptRun {
                name: input.name.clone(),
                results: Vec::new(),
                failure: Some(Failure::Io(msg.clone())),
            }
        }
    };
    match parse(source) {
        Err(err) => ScriptRun {
            name: input.name.clone(),
            results: Vec::new(),
            failure: Some(Failure::Parse(err)),
        },
        Ok(script) => {
            let ev = Evaluator::new(verification).run(&script);
            ScriptRun {
                name: input.name.clone(),
                results: ev.results,
                failure: ev.error.map(Failure::Eval),
            }
        }
    }
}

/// Runs scripts on separate threads; results keep the input order.
pub fn run_all(inputs: &[Input], verification: Verification) -> Vec<ScriptRun> {
    if inputs.len() <= 1 {
        return inputs.iter().map(|i| run_script(i, verification)).collect();
    }
    thread::scope(|s| {
        let handles: Vec<_> = inputs
            .iter()
            .map(|i| s.spawn(move || run_script(i, verification)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("script thread panicked"))
            .collect()
    })
}

pub fn combined_exit(runs: &[ScriptRun]) -> u8 {
    runs.iter()
        .map(ScriptRun::exit_code)
        .max()
        .unwrap_or(EXIT_OK)
}
