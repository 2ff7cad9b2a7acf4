//! Rational Chow rings of the supported bases.
//!
//! Three presentations are supported:
//!
//! * `P^n`: one generator `h` with `h^(n+1) = 0`.
//! * The Hirzebruch surface `F_e`: generators `C` (the negative section) and
//!   `f` (a fibre) with `C^2 = -e pt`, `C f = pt`, `f^2 = 0`.
//! * Products `P^n1 x ... x P^nm`: generators `h1..hm` with `hi^(ni+1) = 0`.
//!
//! Classes are stored as normalized maps from canonical monomials to exact
//! rationals. Everything above the dimension of the base is silently zero.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Largest dimension the ring machinery accepts.
pub const MAX_DIM: usize = 8;

/// Descriptor used to build a base; integers are signed so that bad input
/// can be rejected instead of wrapped.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BaseSpec {
    Projective(i64),
    Hirzebruch(i64),
    Product(Vec<i64>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BaseKind {
    ProjectiveSpace(u32),
    Hirzebruch(u32),
    Product(Vec<u32>),
}

impl fmt::Display for BaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseKind::ProjectiveSpace(n) => write!(f, "P{n}"),
            BaseKind::Hirzebruch(e) => write!(f, "F{e}"),
            BaseKind::Product(ns) => {
                for (i, n) in ns.iter().enumerate() {
                    if i > 0 {
                        f.write_str("x")?;
                    }
                    write!(f, "P{n}")?;
                }
                Ok(())
            }
        }
    }
}

/// Exponent vector over the generators of a base.
///
/// Ordered by total degree first, then reverse-lexicographically on the
/// exponents so that `C` sorts before `f` and `h1` before `h2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn unit(ngens: usize) -> Self {
        Monomial(vec![0; ngens])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Presentation of a supported ambient variety.
#[derive(Debug, Clone)]
pub struct BaseVariety {
    kind: BaseKind,
    dim: usize,
    generators: Vec<String>,
    basis: Vec<Vec<Monomial>>,
}

impl PartialEq for BaseVariety {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Eq for BaseVariety {}

/// Builds a base from its descriptor.
pub fn make_base(spec: &BaseSpec) -> Result<Arc<BaseVariety>> {
    let kind = match spec {
        BaseSpec::Projective(n) => BaseKind::ProjectiveSpace(positive_factor(*n)?),
        BaseSpec::Hirzebruch(e) => {
            if *e < 0 {
                return Err(Error::InvalidBase(format!(
                    "Hirzebruch index must be non-negative, got {e}"
                )));
            }
            let e = u32::try_from(*e)
                .map_err(|_| Error::InvalidBase(format!("Hirzebruch index {e} too large")))?;
            BaseKind::Hirzebruch(e)
        }
        BaseSpec::Product(ns) => {
            if ns.is_empty() {
                return Err(Error::InvalidBase("empty product".into()));
            }
            BaseKind::Product(
                ns.iter()
                    .map(|&n| positive_factor(n))
                    .collect::<Result<_>>()?,
            )
        }
    };
    BaseVariety::new(kind).map(Arc::new)
}

fn positive_factor(n: i64) -> Result<u32> {
    if n < 1 {
        return Err(Error::InvalidBase(format!(
            "projective dimension must be at least 1, got {n}"
        )));
    }
    if n as usize > MAX_DIM {
        return Err(Error::InvalidBase(format!(
            "dimension {n} exceeds the supported maximum {MAX_DIM}"
        )));
    }
    Ok(n as u32)
}

impl BaseVariety {
    pub fn new(kind: BaseKind) -> Result<Self> {
        let (dim, generators): (usize, Vec<String>) = match &kind {
            BaseKind::ProjectiveSpace(n) => (*n as usize, vec!["h".into()]),
            BaseKind::Hirzebruch(_) => (2, vec!["C".into(), "f".into()]),
            BaseKind::Product(ns) => (
                ns.iter().map(|&n| n as usize).sum(),
                (1..=ns.len()).map(|i| format!("h{i}")).collect(),
            ),
        };
        if dim == 0 || dim > MAX_DIM {
            return Err(Error::InvalidBase(format!(
                "dimension {dim} outside 1..={MAX_DIM}"
            )));
        }
        let mut base = BaseVariety {
            kind,
            dim,
            generators,
            basis: Vec::new(),
        };
        base.basis = (0..=dim).map(|d| base.enumerate_basis(d)).collect();
        Ok(base)
    }

    pub fn projective(n: u32) -> Result<Arc<Self>> {
        make_base(&BaseSpec::Projective(n as i64))
    }

    pub fn hirzebruch(e: u32) -> Result<Arc<Self>> {
        make_base(&BaseSpec::Hirzebruch(e as i64))
    }

    pub fn product(factors: &[u32]) -> Result<Arc<Self>> {
        make_base(&BaseSpec::Product(
            factors.iter().map(|&n| n as i64).collect(),
        ))
    }

    pub fn kind(&self) -> &BaseKind {
        &self.kind
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// Canonical basis monomials of degree `d` (empty above the dimension).
    pub fn basis(&self, d: usize) -> &[Monomial] {
        self.basis.get(d).map(Vec::as_slice).unwrap_or(&[])
    }

    /// The monomial whose degree is one.
    pub fn point_monomial(&self) -> Monomial {
        match &self.kind {
            BaseKind::ProjectiveSpace(n) => Monomial(vec![*n]),
            BaseKind::Hirzebruch(_) => Monomial(vec![1, 1]),
            BaseKind::Product(ns) => Monomial(ns.clone()),
        }
    }

    fn enumerate_basis(&self, degree: usize) -> Vec<Monomial> {
        let caps: Vec<u32> = match &self.kind {
            BaseKind::ProjectiveSpace(n) => vec![*n],
            BaseKind::Hirzebruch(_) => vec![1, 1],
            BaseKind::Product(ns) => ns.clone(),
        };
        let mut out = Vec::new();
        let mut current = vec![0u32; caps.len()];
        fill_exponents(&caps, 0, degree as u32, &mut current, &mut out);
        let mut out: Vec<Monomial> = out.into_iter().map(Monomial).collect();
        out.sort();
        out
    }

    /// Rewrites a raw product of generators into `coefficient * canonical`.
    /// `None` means the monomial vanishes.
    fn reduce(&self, m: Monomial) -> Option<(i64, Monomial)> {
        if m.degree() > self.dim {
            return None;
        }
        match &self.kind {
            BaseKind::ProjectiveSpace(_) => Some((1, m)),
            BaseKind::Hirzebruch(e) => match (m.0[0], m.0[1]) {
                (_, b) if b >= 2 => None,
                (2, 0) => Some((-(*e as i64), Monomial(vec![1, 1]))),
                _ => Some((1, m)),
            },
            BaseKind::Product(ns) => {
                if m.0.iter().zip(ns).any(|(a, n)| a > n) {
                    None
                } else {
                    Some((1, m))
                }
            }
        }
    }

    /// Printable name of a monomial, e.g. `h^2`, `C*f`, `h1*h2^3`, `1`.
    pub fn monomial_name(&self, m: &Monomial) -> String {
        let parts: Vec<String> =
            m.0.iter()
                .zip(&self.generators)
                .filter(|(e, _)| **e > 0)
                .map(|(e, g)| {
                    if *e == 1 {
                        g.clone()
                    } else {
                        format!("{g}^{e}")
                    }
                })
                .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    pub fn is_surface(&self) -> bool {
        self.dim == 2
    }
}

fn fill_exponents(caps: &[u32], i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if i == caps.len() {
        if left == 0 {
            out.push(cur.clone());
        }
        return;
    }
    for e in 0..=caps[i].min(left) {
        cur[i] = e;
        fill_exponents(caps, i + 1, left - e, cur, out);
    }
    cur[i] = 0;
}

impl fmt::Display for BaseVariety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.kind.fmt(f)
    }
}

/// An element of the rational Chow ring of a base.
#[derive(Debug, Clone)]
pub struct ChowClass {
    base: Arc<BaseVariety>,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for ChowClass {
    fn eq(&self, other: &Self) -> bool {
        same_base(&self.base, &other.base) && self.terms == other.terms
    }
}

impl Eq for ChowClass {}

fn same_base(a: &Arc<BaseVariety>, b: &Arc<BaseVariety>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl ChowClass {
    pub fn zero(base: &Arc<BaseVariety>) -> Self {
        ChowClass {
            base: Arc::clone(base),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(base: &Arc<BaseVariety>) -> Self {
        Self::constant(base, Rational::one())
    }

    pub fn constant(base: &Arc<BaseVariety>, q: Rational) -> Self {
        let mut c = Self::zero(base);
        c.insert(Monomial::unit(base.generators.len()), q);
        c
    }

    /// The class of a point.
    pub fn point(base: &Arc<BaseVariety>) -> Self {
        let mut c = Self::zero(base);
        c.insert(base.point_monomial(), Rational::one());
        c
    }

    pub fn generator(base: &Arc<BaseVariety>, name: &str) -> Result<Self> {
        let idx = base
            .generator_index(name)
            .ok_or_else(|| Error::InvalidBase(format!("{base} has no generator named {name}")))?;
        let mut exps = vec![0; base.generators.len()];
        exps[idx] = 1;
        let mut c = Self::zero(base);
        c.insert(Monomial(exps), Rational::one());
        Ok(c)
    }

    /// Integer combination of the degree-one generators, in generator order.
    pub fn divisor(base: &Arc<BaseVariety>, coeffs: &[i64]) -> Result<Self> {
        if coeffs.len() != base.generators.len() {
            return Err(Error::InvalidBase(format!(
                "{base} has {} generators, {} coefficients given",
                base.generators.len(),
                coeffs.len()
            )));
        }
        let mut c = Self::zero(base);
        for (i, &a) in coeffs.iter().enumerate() {
            let mut exps = vec![0; coeffs.len()];
            exps[i] = 1;
            c.insert(Monomial(exps), Rational::from_integer(a.into()));
        }
        Ok(c)
    }

    /// Builds a class from explicit terms; monomials must be canonical.
    pub fn from_terms<I>(base: &Arc<BaseVariety>, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut c = Self::zero(base);
        for (m, q) in terms {
            let canonical =
                m.0.len() == base.generators.len() && base.basis(m.degree()).contains(&m);
            if !canonical {
                return Err(Error::NonCanonicalMonomial(format!("{:?}", m.0)));
            }
            c.insert(m, q);
        }
        Ok(c)
    }

    fn insert(&mut self, m: Monomial, q: Rational) {
        if q.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(q);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += q;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn base(&self) -> &Arc<BaseVariety> {
        &self.base
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Degree-`d` part.
    pub fn component(&self, d: usize) -> ChowClass {
        ChowClass {
            base: Arc::clone(&self.base),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, q)| (m.clone(), q.clone()))
                .collect(),
        }
    }

    /// True when every term has degree `d`; the zero class qualifies.
    pub fn is_homogeneous_of(&self, d: usize) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    /// Coefficients along the generators of a degree-one class.
    pub fn divisor_coefficients(&self) -> Result<Vec<Rational>> {
        if !self.is_homogeneous_of(1) {
            return Err(Error::WrongDegree { expected: 1 });
        }
        let n = self.base.generators.len();
        Ok((0..n)
            .map(|i| {
                let mut exps = vec![0; n];
                exps[i] = 1;
                self.coefficient(&Monomial(exps))
            })
            .collect())
    }

    /// Integer coefficients of a degree-one class.
    pub fn integral_divisor(&self) -> Result<Vec<i64>> {
        self.divisor_coefficients()?
            .into_iter()
            .map(|q| {
                if !q.is_integer() {
                    return Err(Error::NonIntegralDivisor);
                }
                i64::try_from(q.to_integer()).map_err(|_| Error::NonIntegralDivisor)
            })
            .collect()
    }

    fn check_base(&self, other: &ChowClass) -> Result<()> {
        if same_base(&self.base, &other.base) {
            Ok(())
        } else {
            Err(Error::BaseMismatch {
                left: self.base.to_string(),
                right: other.base.to_string(),
            })
        }
    }

    pub fn add(&self, other: &ChowClass) -> Result<ChowClass> {
        self.check_base(other)?;
        let mut out = self.clone();
        for (m, q) in &other.terms {
            out.insert(m.clone(), q.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &ChowClass) -> Result<ChowClass> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> ChowClass {
        ChowClass {
            base: Arc::clone(&self.base),
            terms: self.terms.iter().map(|(m, q)| (m.clone(), -q)).collect(),
        }
    }

    pub fn scale(&self, q: &Rational) -> ChowClass {
        if q.is_zero() {
            return ChowClass::zero(&self.base);
        }
        ChowClass {
            base: Arc::clone(&self.base),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * q)).collect(),
        }
    }

    pub fn scale_int(&self, k: i64) -> ChowClass {
        self.scale(&Rational::from_integer(BigInt::from(k)))
    }

    pub fn mul(&self, other: &ChowClass) -> Result<ChowClass> {
        self.check_base(other)?;
        let mut out = ChowClass::zero(&self.base);
        for (ma, qa) in &self.terms {
            for (mb, qb) in &other.terms {
                if let Some((k, m)) = self.base.reduce(ma.times(mb)) {
                    if k != 0 {
                        out.insert(m, qa * qb * Rational::from_integer(k.into()));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> ChowClass {
        let mut out = ChowClass::one(&self.base);
        for _ in 0..k {
            out = out.mul(self).expect("same base");
        }
        out
    }

    /// Degree of the top-dimensional part: the coefficient of the point class.
    pub fn integrate(&self) -> Rational {
        self.coefficient(&self.base.point_monomial())
    }
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, q)) in self.terms.iter().enumerate() {
            let name = self.base.monomial_name(m);
            let (neg, abs) = (q.is_negative(), q.abs());
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if name == "1" {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&name)?;
            } else {
                write!(f, "{abs}*{name}")?;
            }
        }
        Ok(())
    }
}

/// `n choose k` as a big integer; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}
