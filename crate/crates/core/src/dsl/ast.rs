use std::fmt;

/// Source location of a token or node. Lines and columns are 1-based;
/// `offset` and `len` are in bytes.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Span {
    pub offset: usize,
    pub len: usize,
    pub line: usize,
    pub column: usize,
}

impl Span {
    /// Smallest span covering `self` and `other` (same line assumed for the
    /// column of the start).
    pub fn to(self, other: Span) -> Span {
        Span {
            offset: self.offset,
            len: (other.offset + other.len).saturating_sub(self.offset),
            line: self.line,
            column: self.column,
        }
    }

    pub fn contains(&self, offset: usize) -> bool {
        offset >= self.offset && offset < self.offset + self.len.max(1)
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ident {
    pub name: String,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Script {
    pub statements: Vec<Stmt>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stmt {
    pub kind: StmtKind,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StmtKind {
    Base(BaseDecl),
    Let { name: Ident, expr: BundleExpr },
    Query(Query),
}

/// `P<n>`, `F<e>` or a product of projective factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseDecl {
    Projective(u32),
    Hirzebruch(u32),
    Product(Vec<u32>),
}

impl BaseDecl {
    /// Generator names the declared base will provide.
    pub fn generators(&self) -> Vec<String> {
        match self {
            BaseDecl::Projective(_) => vec!["h".into()],
            BaseDecl::Hirzebruch(_) => vec!["C".into(), "f".into()],
            BaseDecl::Product(ns) => (1..=ns.len()).map(|i| format!("h{i}")).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundleExpr {
    pub kind: BundleExprKind,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BundleExprKind {
    Trivial,
    Line(DivExpr),
    Tangent,
    Var(Ident),
    Dual(Box<BundleExpr>),
    Twist(Box<BundleExpr>, DivExpr),
    Det(Box<BundleExpr>),
    /// Direct sum of two or more terms.
    Sum(Vec<BundleExpr>),
}

/// Integer-linear combination of generator names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivExpr {
    pub terms: Vec<DivTerm>,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivTerm {
    pub coeff: i64,
    pub name: Ident,
    pub span: Span,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Criterion {
    SurfaceBig,
    FourfoldBig,
    FanoTangent,
    SegreBig,
    TwistBig,
}

impl Criterion {
    pub const ALL: [Criterion; 5] = [
        Criterion::SurfaceBig,
        Criterion::FourfoldBig,
        Criterion::FanoTangent,
        Criterion::SegreBig,
        Criterion::TwistBig,
    ];

    pub fn keyword(self) -> &'static str {
        match self {
            Criterion::SurfaceBig => "surface-big",
            Criterion::FourfoldBig => "fourfold-big",
            Criterion::FanoTangent => "fano-tangent",
            Criterion::SegreBig => "segre-big",
            Criterion::TwistBig => "twist-big",
        }
    }

    pub fn from_keyword(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.keyword() == s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertValue {
    Bool(bool),
    Int(u64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertEntry {
    pub key: Ident,
    pub value: CertValue,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Query {
    Chern(BundleExpr),
    Segre(BundleExpr),
    NumericalDimension(BundleExpr),
    Chi(DivExpr),
    Coh(DivExpr),
    Check {
        criterion: Criterion,
        bundle: BundleExpr,
        certs: Vec<CertEntry>,
    },
}

impl Query {
    pub fn kind(&self) -> &'static str {
        match self {
            Query::Chern(_) => "chern",
            Query::Segre(_) => "segre",
            Query::NumericalDimension(_) => "nd",
            Query::Chi(_) => "chi",
            Query::Coh(_) => "coh",
            Query::Check { .. } => "check",
        }
    }
}

/// Span-free copies, for comparing trees parsed from different texts.
impl Script {
    pub fn without_spans(&self) -> Script {
        Script {
            statements: self
                .statements
                .iter()
                .map(|s| Stmt {
                    kind: match &s.kind {
                        StmtKind::Base(b) => StmtKind::Base(b.clone()),
                        StmtKind::Let { name, expr } => StmtKind::Let {
                            name: ident(name),
                            expr: bundle(expr),
                        },
                        StmtKind::Query(q) => StmtKind::Query(query(q)),
                    },
                    span: Span::default(),
                })
                .collect(),
        }
    }
}

fn ident(i: &Ident) -> Ident {
    Ident {
        name: i.name.clone(),
        span: Span::default(),
    }
}

fn div(d: &DivExpr) -> DivExpr {
    DivExpr {
        terms: d
            .terms
            .iter()
            .map(|t| DivTerm {
                coeff: t.coeff,
                name: ident(&t.name),
                span: Span::default(),
            })
            .collect(),
        span: Span::default(),
    }
}

fn bundle(b: &BundleExpr) -> BundleExpr {
    let kind = match &b.kind {
        BundleExprKind::Trivial => BundleExprKind::Trivial,
        BundleExprKind::Tangent => BundleExprKind::Tangent,
        BundleExprKind::Line(d) => BundleExprKind::Line(div(d)),
        BundleExprKind::Var(i) => BundleExprKind::Var(ident(i)),
        BundleExprKind::Dual(x) => BundleExprKind::Dual(Box::new(bundle(x))),
        BundleExprKind::Det(x) => BundleExprKind::Det(Box::new(bundle(x))),
        BundleExprKind::Twist(x, d) => BundleExprKind::Twist(Box::new(bundle(x)), div(d)),
        BundleExprKind::Sum(xs) => BundleExprKind::Sum(xs.iter().map(bundle).collect()),
    };
    BundleExpr {
        kind,
        span: Span::default(),
    }
}

fn query(q: &Query) -> Query {
    match q {
        Query::Chern(b) => Query::Chern(bundle(b)),
        Query::Segre(b) => Query::Segre(bundle(b)),
        Query::NumericalDimension(b) => Query::NumericalDimension(bundle(b)),
        Query::Chi(d) => Query::Chi(div(d)),
        Query::Coh(d) => Query::Coh(div(d)),
        Query::Check {
            criterion,
            bundle: b,
            certs,
        } => Query::Check {
            criterion: *criterion,
            bundle: bundle(b),
            certs: certs
                .iter()
                .map(|c| CertEntry {
                    key: ident(&c.key),
                    value: c.value,
                    span: Span::default(),
                })
                .collect(),
        },
    }
}

// Pretty-printing: the canonical concrete syntax of each node.

impl fmt::Display for BaseDecl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseDecl::Projective(n) => write!(f, "P{n}"),
            BaseDecl::Hirzebruch(e) => write!(f, "F{e}"),
            BaseDecl::Product(ns) => {
                let parts: Vec<String> = ns.iter().map(|n| format!("P{n}")).collect();
                f.write_str(&parts.join("x"))
            }
        }
    }
}

impl fmt::Display for DivExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            let abs = t.coeff.unsigned_abs();
            match (i, t.coeff < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if abs != 1 {
                write!(f, "{abs}")?;
            }
            f.write_str(&t.name.name)?;
        }
        Ok(())
    }
}

impl fmt::Display for BundleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            BundleExprKind::Trivial => f.write_str("O"),
            BundleExprKind::Tangent => f.write_str("T"),
            BundleExprKind::Line(d) => write!(f, "O({d})"),
            BundleExprKind::Var(i) => f.write_str(&i.name),
            BundleExprKind::Dual(x) => write!(f, "dual({x})"),
            BundleExprKind::Det(x) => write!(f, "det({x})"),
            BundleExprKind::Twist(x, d) => write!(f, "twist({x}, {d})"),
            BundleExprKind::Sum(xs) => {
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" + ")?;
                    }
                    x.fmt(f)?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for CertValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertValue::Bool(b) => write!(f, "{b}"),
            CertValue::Int(n) => write!(f, "{n}"),
        }
    }
}

impl fmt::Display for Query {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Query::Chern(b) => write!(f, "chern {b}"),
            Query::Segre(b) => write!(f, "segre {b}"),
            Query::NumericalDimension(b) => write!(f, "nd {b}"),
            Query::Chi(d) => write!(f, "chi {d}"),
            Query::Coh(d) => write!(f, "coh {d}"),
            Query::Check {
                criterion,
                bundle,
                certs,
            } => {
                write!(f, "check {} {bundle} with", criterion.keyword())?;
                for c in certs {
                    write!(f, " {}={}", c.key.name, c.value)?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for Stmt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            StmtKind::Base(b) => write!(f, "base {b}"),
            StmtKind::Let { name, expr } => write!(f, "let {} = {expr}", name.name),
            StmtKind::Query(q) => q.fmt(f),
        }
    }
}

impl fmt::Display for Script {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.statements {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}
