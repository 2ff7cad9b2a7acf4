//! Vector bundles through their numerical shadow: rank and Chern classes.
//!
//! Besides the Chern data a bundle remembers how it was built when that is
//! cheap to track (a sum of line bundles, or the tangent bundle of the base),
//! so that the cohomology layer can evaluate certificate flags exactly.

use std::sync::Arc;

use num::One;

use crate::chowring::{binomial, BaseKind, BaseVariety, ChowClass, Rational};
use crate::error::{Error, Result};

/// How a bundle was constructed, as far as the cohomology layer cares.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structure {
    /// Direct sum of the line bundles with these first Chern classes.
    Split(Vec<ChowClass>),
    /// The tangent bundle of the base.
    Tangent,
    /// Only the Chern data is known.
    Opaque,
}

#[derive(Debug, Clone)]
pub struct BundleClass {
    base: Arc<BaseVariety>,
    rank: u32,
    /// c_1 .. c_K with K = min(rank, dim).
    chern: Vec<ChowClass>,
    structure: Structure,
    name: Option<String>,
}

/// Bundles compare by their numerical shadow (base, rank, Chern classes).
impl PartialEq for BundleClass {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base && self.rank == other.rank && self.chern == other.chern
    }
}

/// Segre classes s_0 .. s_dim of a bundle.
#[derive(Debug, Clone, PartialEq)]
pub struct SegreData {
    base: Arc<BaseVariety>,
    classes: Vec<ChowClass>,
    source_rank: u32,
}

impl SegreData {
    pub fn base(&self) -> &Arc<BaseVariety> {
        &self.base
    }

    pub fn classes(&self) -> &[ChowClass] {
        &self.classes
    }

    pub fn get(&self, k: usize) -> &ChowClass {
        &self.classes[k]
    }

    pub fn source_rank(&self) -> u32 {
        self.source_rank
    }

    /// Degree of the top Segre class.
    pub fn top(&self) -> Rational {
        self.classes[self.base.dim()].integrate()
    }

    /// The total Segre class as one (inhomogeneous) class.
    pub fn total(&self) -> ChowClass {
        sum_classes(&self.base, &self.classes)
    }
}

fn sum_classes(base: &Arc<BaseVariety>, classes: &[ChowClass]) -> ChowClass {
    classes.iter().fold(ChowClass::zero(base), |acc, c| {
        acc.add(c).expect("same base")
    })
}

fn sign(k: usize) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

impl BundleClass {
    /// Builds a bundle from explicit Chern classes c_1, c_2, ...; missing
    /// classes up to min(rank, dim) are zero.
    pub fn from_chern(base: &Arc<BaseVariety>, rank: u32, chern: Vec<ChowClass>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        let allowed = (rank as usize).min(base.dim());
        let mut chern = chern;
        for (i, c) in chern.iter().enumerate() {
            if **c.base() != **base {
                return Err(Error::BaseMismatch {
                    left: base.to_string(),
                    right: c.base().to_string(),
                });
            }
            if !c.is_homogeneous_of(i + 1) {
                return Err(Error::WrongDegree { expected: i + 1 });
            }
        }
        if chern.len() > allowed {
            if chern[allowed..].iter().any(|c| !c.is_zero()) {
                return Err(Error::TooManyChernClasses {
                    rank,
                    given: chern.len(),
                    allowed,
                });
            }
            chern.truncate(allowed);
        }
        while chern.len() < allowed {
            chern.push(ChowClass::zero(base));
        }
        Ok(BundleClass {
            base: Arc::clone(base),
            rank,
            chern,
            structure: Structure::Opaque,
            name: None,
        })
    }

    /// Builds a bundle from its total Chern class (components of degree
    /// above min(rank, dim) must vanish).
    fn from_total(base: &Arc<BaseVariety>, rank: u32, total: &ChowClass) -> Result<Self> {
        let chern = (1..=base.dim()).map(|k| total.component(k)).collect();
        Self::from_chern(base, rank, chern)
    }

    pub fn trivial(base: &Arc<BaseVariety>, rank: u32) -> Result<Self> {
        let mut b = Self::from_chern(base, rank, Vec::new())?;
        b.structure = Structure::Split(vec![ChowClass::zero(base); rank as usize]);
        Ok(b)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn base(&self) -> &Arc<BaseVariety> {
        &self.base
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn structure(&self) -> &Structure {
        &self.structure
    }

    /// First Chern classes of the line-bundle summands, when known.
    pub fn summands(&self) -> Option<&[ChowClass]> {
        match &self.structure {
            Structure::Split(s) => Some(s),
            _ => None,
        }
    }

    /// c_1 .. c_K.
    pub fn chern_classes(&self) -> &[ChowClass] {
        &self.chern
    }

    /// c_k for any k; c_0 = 1 and classes above min(rank, dim) vanish.
    pub fn chern(&self, k: usize) -> ChowClass {
        match k {
            0 => ChowClass::one(&self.base),
            k if k <= self.chern.len() => self.chern[k - 1].clone(),
            _ => ChowClass::zero(&self.base),
        }
    }

    pub fn c1(&self) -> ChowClass {
        self.chern(1)
    }

    pub fn total_chern(&self) -> ChowClass {
        let mut total = ChowClass::one(&self.base);
        for c in &self.chern {
            total = total.add(c).expect("same base");
        }
        total
    }

    fn check_base(&self, other: &BundleClass) -> Result<()> {
        if self.base == other.base {
            Ok(())
        } else {
            Err(Error::BaseMismatch {
                left: self.base.to_string(),
                right: other.base.to_string(),
            })
        }
    }

    fn require_line(&self) -> Result<()> {
        if self.rank == 1 {
            Ok(())
        } else {
            Err(Error::NotLineBundle(self.rank))
        }
    }
}

/// The line bundle with first Chern class `divisor`.
pub fn line_bundle(base: &Arc<BaseVariety>, divisor: &ChowClass) -> Result<BundleClass> {
    if **divisor.base() != **base {
        return Err(Error::BaseMismatch {
            left: base.to_string(),
            right: divisor.base().to_string(),
        });
    }
    if !divisor.is_homogeneous_of(1) {
        return Err(Error::WrongDegree { expected: 1 });
    }
    let mut b = BundleClass::from_chern(base, 1, vec![divisor.clone()])?;
    b.structure = Structure::Split(vec![divisor.clone()]);
    Ok(b)
}

/// Direct sum: total Chern classes multiply.
pub fn whitney_sum(e: &BundleClass, f: &BundleClass) -> Result<BundleClass> {
    e.check_base(f)?;
    let total = e.total_chern().mul(&f.total_chern())?;
    let mut out = BundleClass::from_total(&e.base, e.rank + f.rank, &total)?;
    out.structure = match (&e.structure, &f.structure) {
        (Structure::Split(a), Structure::Split(b)) => {
            Structure::Split(a.iter().chain(b).cloned().collect())
        }
        _ => Structure::Opaque,
    };
    Ok(out)
}

/// c_k(E^v) = (-1)^k c_k(E).
pub fn dual(e: &BundleClass) -> BundleClass {
    let chern = e
        .chern
        .iter()
        .enumerate()
        .map(|(i, c)| c.scale(&sign(i + 1)))
        .collect();
    let structure = match &e.structure {
        Structure::Split(s) => Structure::Split(s.iter().map(ChowClass::neg).collect()),
        _ => Structure::Opaque,
    };
    BundleClass {
        base: Arc::clone(&e.base),
        rank: e.rank,
        chern,
        structure,
        name: None,
    }
}

/// c_k(E (x) L) = sum_j C(r-j, k-j) c_j(E) c_1(L)^(k-j).
pub fn twist(e: &BundleClass, l: &BundleClass) -> Result<BundleClass> {
    e.check_base(l)?;
    l.require_line()?;
    let c1l = l.c1();
    let powers: Vec<ChowClass> = (0..=e.base.dim() as u32).map(|k| c1l.pow(k)).collect();
    let r = e.rank as u64;
    let top = (e.rank as usize).min(e.base.dim());
    let mut chern = Vec::with_capacity(top);
    for k in 1..=top {
        let mut ck = ChowClass::zero(&e.base);
        for j in 0..=k {
            let coeff = Rational::from_integer(binomial(r - j as u64, (k - j) as u64));
            ck = ck.add(&e.chern(j).mul(&powers[k - j])?.scale(&coeff))?;
        }
        chern.push(ck);
    }
    let structure = match &e.structure {
        Structure::Split(s) => {
            Structure::Split(s.iter().map(|d| d.add(&c1l)).collect::<Result<Vec<_>>>()?)
        }
        _ => Structure::Opaque,
    };
    Ok(BundleClass {
        base: Arc::clone(&e.base),
        rank: e.rank,
        chern,
        structure,
        name: None,
    })
}

/// det E, the line bundle with c_1 = c_1(E).
pub fn determinant(e: &BundleClass) -> BundleClass {
    line_bundle(&e.base, &e.c1()).expect("c_1 is a divisor class")
}

/// Segre classes by inverting the Chern polynomial:
/// s_0 = 1, s_k = -sum_{j=1..k} c_j s_{k-j}.
pub fn segre(e: &BundleClass) -> SegreData {
    let dim = e.base.dim();
    let mut classes: Vec<ChowClass> = Vec::with_capacity(dim + 1);
    classes.push(ChowClass::one(&e.base));
    for k in 1..=dim {
        let mut sk = ChowClass::zero(&e.base);
        for j in 1..=k.min(e.chern.len()) {
            sk = sk
                .sub(&e.chern[j - 1].mul(&classes[k - j]).expect("same base"))
                .expect("same base");
        }
        classes.push(sk);
    }
    SegreData {
        base: Arc::clone(&e.base),
        classes,
        source_rank: e.rank,
    }
}

/// s_k(E^v) = (-1)^k s_k(E).
pub fn segre_dual(s: &SegreData) -> SegreData {
    SegreData {
        base: Arc::clone(&s.base),
        classes: s
            .classes
            .iter()
            .enumerate()
            .map(|(k, c)| c.scale(&sign(k)))
            .collect(),
        source_rank: s.source_rank,
    }
}

/// s_k(E (x) L) = sum_j (-1)^(k-j) C(r-1+k, r-1+j) s_j(E) c_1(L)^(k-j),
/// evaluated from the Segre classes of `e`.
pub fn segre_twist(e: &BundleClass, l: &BundleClass) -> Result<SegreData> {
    e.check_base(l)?;
    l.require_line()?;
    let s = segre(e);
    let dim = e.base.dim();
    let c1l = l.c1();
    let powers: Vec<ChowClass> = (0..=dim as u32).map(|k| c1l.pow(k)).collect();
    let r1 = e.rank as u64 - 1;
    let mut classes = Vec::with_capacity(dim + 1);
    for k in 0..=dim {
        let mut sk = ChowClass::zero(&e.base);
        for j in 0..=k {
            let coeff =
                sign(k - j) * Rational::from_integer(binomial(r1 + k as u64, r1 + j as u64));
            sk = sk.add(&s.classes[j].mul(&powers[k - j])?.scale(&coeff))?;
        }
        classes.push(sk);
    }
    Ok(SegreData {
        base: Arc::clone(&e.base),
        classes,
        source_rank: e.rank,
    })
}

/// Chern shadow of the kernel N of an evaluation map from `sections`
/// global sections onto `e`: rank `sections - r` and c(N) = s(E).
pub fn kernel_bundle(e: &BundleClass, sections: u64) -> Result<BundleClass> {
    let required = e.rank as u64 + e.base.dim() as u64;
    if sections < required {
        return Err(Error::TooFewSections {
            required,
            given: sections,
        });
    }
    let rank = u32::try_from(sections - e.rank as u64).map_err(|_| Error::TooFewSections {
        required,
        given: sections,
    })?;
    let s = segre(e);
    let top = (rank as usize).min(e.base.dim());
    BundleClass::from_chern(&e.base, rank, s.classes[1..=top].to_vec())
}

/// Second exterior power of a rank-3 bundle, as E^v (x) det E.
pub fn wedge2_rank3(e: &BundleClass) -> Result<BundleClass> {
    if e.rank != 3 {
        return Err(Error::RankMismatch {
            expected: 3,
            found: e.rank,
        });
    }
    Ok(twist(&dual(e), &determinant(e))?.with_name("wedge2"))
}

/// Tangent bundle of a supported base.
pub fn tangent_bundle(base: &Arc<BaseVariety>) -> Result<BundleClass> {
    let mut t = match base.kind() {
        BaseKind::ProjectiveSpace(n) => {
            let h = ChowClass::generator(base, "h")?;
            let euler = ChowClass::one(base).add(&h)?.pow(n + 1);
            BundleClass::from_total(base, *n, &euler)?
        }
        BaseKind::Hirzebruch(e) => {
            let c1 = ChowClass::divisor(base, &[2, *e as i64 + 2])?;
            let c2 = ChowClass::point(base).scale_int(4);
            BundleClass::from_chern(base, 2, vec![c1, c2])?
        }
        BaseKind::Product(ns) => {
            let mut total = ChowClass::one(base);
            for (i, n) in ns.iter().enumerate() {
                let h = ChowClass::generator(base, &format!("h{}", i + 1))?;
                total = total.mul(&ChowClass::one(base).add(&h)?.pow(n + 1))?;
            }
            let rank: u32 = ns.iter().sum();
            BundleClass::from_total(base, rank, &total)?
        }
    };
    t.structure = Structure::Tangent;
    Ok(t.with_name("T"))
}

/// Canonical divisor K = -c_1(T).
pub fn canonical_divisor(base: &Arc<BaseVariety>) -> Result<ChowClass> {
    Ok(tangent_bundle(base)?.c1().neg())
}
