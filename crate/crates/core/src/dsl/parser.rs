use super::ast::*;
use super::lexer::{tokenize, Tok, Token};
use super::ParseError;

pub const CERT_KEYS: [&str; 10] = [
    "gg",
    "h0",
    "q0",
    "h1detinv",
    "hidetinv",
    "h3dualtwist",
    "mu",
    "fano",
    "ample_L",
    "h0_twist",
];

const STATEMENT_KEYWORDS: [&str; 8] =
    ["base", "let", "chern", "segre", "nd", "chi", "coh", "check"];

/// Names that can never be bound by `let`.
const RESERVED: [&str; 14] = [
    "base", "let", "chern", "segre", "nd", "chi", "coh", "check", "with", "O", "T", "dual",
    "twist", "det",
];

/// Parses a whole script. Reports the first syntax error only.
pub fn parse(src: &str) -> Result<Script, ParseError> {
    let tokens = tokenize(src)?;
    Parser {
        tokens,
        pos: 0,
        base: None,
        generators: Vec::new(),
    }
    .script()
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    base: Option<BaseDecl>,
    generators: Vec<String>,
}

fn expected(items: &[&str]) -> Vec<String> {
    items.iter().map(|s| s.to_string()).collect()
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.tokens[(self.pos + k).min(self.tokens.len() - 1)].tok
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn prev_span(&self) -> Span {
        self.tokens[self.pos.saturating_sub(1)].span
    }

    fn error(&self, message: impl Into<String>, expected: Vec<String>) -> ParseError {
        let found = self.peek();
        ParseError {
            span: found.span,
            message: format!("{}, found {}", message.into(), found.tok.describe()),
            expected,
        }
    }

    /// Whether token `i` starts exactly where token `i - 1` ends.
    fn adjacent(&self, i: usize) -> bool {
        let (a, b) = (self.tokens[i - 1].span, self.tokens[i].span);
        a.offset + a.len == b.offset
    }

    fn is_ident(&self, word: &str) -> bool {
        matches!(&self.peek().tok, Tok::Ident(s) if s == word)
    }

    fn expect_tok(&mut self, tok: Tok, what: &str) -> Result<Token, ParseError> {
        if self.peek().tok == tok {
            Ok(self.bump())
        } else {
            Err(self.error(format!("expected {what}"), expected(&[what])))
        }
    }

    fn expect_keyword(&mut self, word: &str) -> Result<Token, ParseError> {
        if self.is_ident(word) {
            Ok(self.bump())
        } else {
            Err(self.error(format!("expected `{word}`"), expected(&[word])))
        }
    }

    fn ident(&mut self, what: &str) -> Result<Ident, ParseError> {
        match &self.peek().tok {
            Tok::Ident(s) => {
                let name = s.clone();
                let span = self.bump().span;
                Ok(Ident { name, span })
            }
            _ => Err(self.error(format!("expected {what}"), expected(&[what]))),
        }
    }

    fn script(mut self) -> Result<Script, ParseError> {
        let mut statements = Vec::new();
        while self.peek().tok != Tok::Eof {
            statements.push(self.statement()?);
        }
        Ok(Script { statements })
    }

    fn statement(&mut self) -> Result<Stmt, ParseError> {
        let start = self.peek().span;
        let word = match &self.peek().tok {
            Tok::Ident(s) if STATEMENT_KEYWORDS.contains(&s.as_str()) => s.clone(),
            _ => return Err(self.error("expected a statement", expected(&STATEMENT_KEYWORDS))),
        };
        if word == "base" {
            if self.base.is_some() {
                return Err(self.error("base already declared", Vec::new()));
            }
            self.bump();
            let decl = self.base_decl()?;
            self.generators = decl.generators();
            self.base = Some(decl.clone());
            return Ok(Stmt {
                kind: StmtKind::Base(decl),
                span: start.to(self.prev_span()),
            });
        }
        if self.base.is_none() {
            return Err(self.error(
                "no base declared before this statement",
                expected(&["base"]),
            ));
        }
        self.bump();
        let kind = match word.as_str() {
            "let" => self.let_stmt()?,
            "chern" => StmtKind::Query(Query::Chern(self.bundle_expr()?)),
            "segre" => StmtKind::Query(Query::Segre(self.bundle_expr()?)),
            "nd" => StmtKind::Query(Query::NumericalDimension(self.bundle_expr()?)),
            "chi" => StmtKind::Query(Query::Chi(self.div_expr()?)),
            "coh" => StmtKind::Query(Query::Coh(self.div_expr()?)),
            "check" => StmtKind::Query(self.check()?),
            _ => unreachable!("statement keywords are exhaustive"),
        };
        Ok(Stmt {
            kind,
            span: start.to(self.prev_span()),
        })
    }

    fn base_decl(&mut self) -> Result<BaseDecl, ParseError> {
        let what = "base (P<n>, F<e>, or P<n>xP<m>...)";
        let first = match &self.peek().tok {
            Tok::Ident(s) => s.clone(),
            _ => return Err(self.error(format!("expected {what}"), expected(&["P<n>", "F<e>"]))),
        };
        let span = self.peek().span;
        self.bump();
        let mut text = first;
        // "P1 x P3" with separate tokens
        while self.is_ident("x") && matches!(self.peek_at(1), Tok::Ident(_)) {
            self.bump();
            if let Tok::Ident(s) = self.bump().tok {
                text.push('x');
                text.push_str(&s);
            }
        }
        let bad = || ParseError {
            span,
            message: format!("malformed base `{text}`"),
            expected: expected(&["P<n>", "F<e>", "P<n>xP<m>"]),
        };
        let factors: Vec<&str> = text.split('x').collect();
        let parse_factor = |f: &str| -> Option<(char, u32)> {
            let mut cs = f.chars();
            let letter = cs.next()?;
            let digits = cs.as_str();
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return None;
            }
            Some((letter, digits.parse().ok()?))
        };
        let parsed: Option<Vec<(char, u32)>> = factors.iter().map(|f| parse_factor(f)).collect();
        let parsed = parsed.ok_or_else(bad)?;
        match parsed.as_slice() {
            [('P', n)] => Ok(BaseDecl::Projective(*n)),
            [('F', e)] => Ok(BaseDecl::Hirzebruch(*e)),
            many if many.len() > 1 && many.iter().all(|(c, _)| *c == 'P') => {
                Ok(BaseDecl::Product(many.iter().map(|(_, n)| *n).collect()))
            }
            _ => Err(bad()),
        }
    }

    fn let_stmt(&mut self) -> Result<StmtKind, ParseError> {
        let name = self.ident("identifier")?;
        if RESERVED.contains(&name.name.as_str()) || self.generators.contains(&name.name) {
            return Err(ParseError {
                span: name.span,
                message: format!("`{}` is reserved and cannot be bound", name.name),
                expected: expected(&["identifier"]),
            });
        }
        self.expect_tok(Tok::Eq, "`=`")?;
        Ok(StmtKind::Let {
            name,
            expr: self.bundle_expr()?,
        })
    }

    fn bundle_expr(&mut self) -> Result<BundleExpr, ParseError> {
        let first = self.bundle_term()?;
        if self.peek().tok != Tok::Plus {
            return Ok(first);
        }
        let start = first.span;
        let mut terms = vec![first];
        while self.peek().tok == Tok::Plus {
            self.bump();
            terms.push(self.bundle_term()?);
        }
        Ok(BundleExpr {
            kind: BundleExprKind::Sum(terms),
            span: start.to(self.prev_span()),
        })
    }

    fn bundle_term(&mut self) -> Result<BundleExpr, ParseError> {
        const TERMS: [&str; 7] = ["O", "O(", "T", "identifier", "dual(", "twist(", "det("];
        let start = self.peek().span;
        let word = match &self.peek().tok {
            Tok::Ident(s) => s.clone(),
            _ => return Err(self.error("expected a bundle", expected(&TERMS))),
        };
        let called = self.peek_at(1) == &Tok::LParen;
        let kind = match word.as_str() {
            "O" if called => {
                self.bump();
                self.bump();
                let d = self.div_expr()?;
                self.expect_tok(Tok::RParen, "`)`")?;
                BundleExprKind::Line(d)
            }
            "O" => {
                self.bump();
                BundleExprKind::Trivial
            }
            "T" => {
                self.bump();
                BundleExprKind::Tangent
            }
            "dual" | "det" | "twist" => {
                self.bump();
                self.expect_tok(Tok::LParen, "`(`")?;
                let inner = Box::new(self.bundle_expr()?);
                let kind = match word.as_str() {
                    "dual" => BundleExprKind::Dual(inner),
                    "det" => BundleExprKind::Det(inner),
                    _ => {
                        self.expect_tok(Tok::Comma, "`,`")?;
                        BundleExprKind::Twist(inner, self.div_expr()?)
                    }
                };
                self.expect_tok(Tok::RParen, "`)`")?;
                kind
            }
            w if RESERVED.contains(&w) => {
                return Err(self.error("expected a bundle", expected(&TERMS)));
            }
            _ => BundleExprKind::Var(self.ident("identifier")?),
        };
        Ok(BundleExpr {
            kind,
            span: start.to(self.prev_span()),
        })
    }

    fn div_expr(&mut self) -> Result<DivExpr, ParseError> {
        let start = self.peek().span;
        let negative = if self.peek().tok == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let mut terms = vec![self.div_term(negative, start)?];
        loop {
            let negative = match self.peek().tok {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => break,
            };
            let sign_span = self.bump().span;
            terms.push(self.div_term(negative, sign_span)?);
        }
        Ok(DivExpr {
            terms,
            span: start.to(self.prev_span()),
        })
    }

    fn div_term(&mut self, negative: bool, start: Span) -> Result<DivTerm, ParseError> {
        let coeff = match self.peek().tok {
            Tok::Int(n) => {
                let tok = self.bump();
                let n = i64::try_from(n).map_err(|_| ParseError {
                    span: tok.span,
                    message: format!("coefficient {n} out of range"),
                    expected: Vec::new(),
                })?;
                n
            }
            _ => 1,
        };
        let name = self.ident("generator name")?;
        Ok(DivTerm {
            coeff: if negative { -coeff } else { coeff },
            span: start.to(name.span),
            name,
        })
    }

    fn check(&mut self) -> Result<Query, ParseError> {
        let kinds: Vec<&str> = Criterion::ALL.iter().map(|c| c.keyword()).collect();
        let first = self.peek().span;
        let mut word = match &self.peek().tok {
            Tok::Ident(s) => s.clone(),
            _ => return Err(self.error("expected a criterion", expected(&kinds))),
        };
        self.bump();
        while self.peek().tok == Tok::Minus
            && matches!(self.peek_at(1), Tok::Ident(_))
            && self.adjacent(self.pos)
            && self.adjacent(self.pos + 1)
        {
            self.bump();
            if let Tok::Ident(s) = self.bump().tok {
                word.push('-');
                word.push_str(&s);
            }
        }
        let criterion = Criterion::from_keyword(&word).ok_or_else(|| ParseError {
            span: first,
            message: format!("unknown criterion `{word}`"),
            expected: expected(&kinds),
        })?;
        let bundle = self.bundle_expr()?;
        self.expect_keyword("with")?;
        let mut certs = vec![self.cert_entry()?];
        while matches!(self.peek().tok, Tok::Ident(_)) && self.peek_at(1) == &Tok::Eq {
            certs.push(self.cert_entry()?);
        }
        Ok(Query::Check {
            criterion,
            bundle,
            certs,
        })
    }

    fn cert_entry(&mut self) -> Result<CertEntry, ParseError> {
        let key = match &self.peek().tok {
            Tok::Ident(s) if CERT_KEYS.contains(&s.as_str()) => self.ident("certificate key")?,
            Tok::Ident(s) => {
                let msg = format!("unknown certificate key `{s}`");
                let span = self.peek().span;
                return Err(ParseError {
                    span,
                    message: msg,
                    expected: expected(&CERT_KEYS),
                });
            }
            _ => return Err(self.error("expected a certificate entry", expected(&CERT_KEYS))),
        };
        self.expect_tok(Tok::Eq, "`=`")?;
        let value = match &self.peek().tok {
            Tok::Ident(s) if s == "true" => CertValue::Bool(true),
            Tok::Ident(s) if s == "false" => CertValue::Bool(false),
            Tok::Int(n) => CertValue::Int(*n),
            _ => {
                return Err(self.error(
                    "expected a certificate value",
                    expected(&["true", "false", "integer"]),
                ))
            }
        };
        let end = self.bump().span;
        Ok(CertEntry {
            span: key.span.to(end),
            key,
            value,
        })
    }
}
