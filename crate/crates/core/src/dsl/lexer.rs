use super::ast::Span;
use super::ParseError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Int(u64),
    Plus,
    Minus,
    Eq,
    LParen,
    RParen,
    Comma,
    Eof,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Int(n) => format!("`{n}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Eq => "`=`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    pub span: Span,
}

/// Splits a script into tokens; `#` starts a comment running to the end of
/// the line.
pub fn tokenize(src: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let mut line = 1;
    let mut line_start = 0;
    let mut chars = src.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        let span_at = |len: usize| Span {
            offset: i,
            len,
            line,
            column: src[line_start..i].chars().count() + 1,
        };
        match c {
            '\n' => {
                chars.next();
                line += 1;
                line_start = i + 1;
            }
            c if c.is_whitespace() => {
                chars.next();
            }
            '#' => {
                while let Some(&(_, c)) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    chars.next();
                }
            }
            '+' | '-' | '=' | '(' | ')' | ',' => {
                chars.next();
                let tok = match c {
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '=' => Tok::Eq,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    _ => Tok::Comma,
                };
                out.push(Token {
                    tok,
                    span: span_at(1),
                });
            }
            c if c.is_ascii_digit() => {
                let mut end = i;
                while let Some(&(j, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    end = j + 1;
                    chars.next();
                }
                let span = span_at(end - i);
                let n = src[i..end].parse::<u64>().map_err(|_| ParseError {
                    span,
                    message: format!("integer literal {} is too large", &src[i..end]),
                    expected: Vec::new(),
                })?;
                out.push(Token {
                    tok: Tok::Int(n),
                    span,
                });
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut end = i;
                while let Some(&(j, d)) = chars.peek() {
                    if !(d.is_ascii_alphanumeric() || d == '_') {
                        break;
                    }
                    end = j + 1;
                    chars.next();
                }
                out.push(Token {
                    tok: Tok::Ident(src[i..end].to_string()),
                    span: span_at(end - i),
                });
            }
            other => {
                return Err(ParseError {
                    span: span_at(other.len_utf8()),
                    message: format!("unexpected character {other:?}"),
                    expected: Vec::new(),
                });
            }
        }
    }
    let end = src.len();
    out.push(Token {
        tok: Tok::Eof,
        span: Span {
            offset: end,
            len: 0,
            line,
            column: src[line_start..].chars().count() + 1,
        },
    });
    Ok(out)
}
