//! A small scripting language over the calculus: declare a base, bind
//! bundles, and query classes, cohomology and bigness criteria.

pub mod ast;
pub mod eval;
pub mod lexer;
pub mod parser;

use std::fmt;

pub use ast::{Criterion, Script, Span};
pub use eval::{evaluate, EvalError, EvalErrorKind, Evaluation, Evaluator, Payload, QueryResult};
pub use parser::{parse, CERT_KEYS};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub span: Span,
    pub message: String,
    /// Tokens or constructs that would have been accepted at `span`.
    pub expected: Vec<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.span, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(", "))?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}
