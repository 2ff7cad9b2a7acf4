//! Closed-form line-bundle cohomology on `P^n`, `F_e` and products of
//! projective spaces, surface Riemann-Roch and positivity of divisors.

use std::fmt;
use std::sync::Arc;

use num::{BigInt, Integer, One, Signed, Zero};

use crate::bundle::canonical_divisor;
use crate::chowring::{binomial, BaseKind, BaseVariety, ChowClass, Rational};
use crate::error::{Error, Result};

/// Dimensions h^0 .. h^dim together with the Euler characteristic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyVector {
    h: Vec<BigInt>,
    chi: BigInt,
}

impl CohomologyVector {
    pub fn new(h: Vec<BigInt>) -> Self {
        debug_assert!(h.iter().all(|x| !x.is_negative()));
        let chi =
            h.iter().enumerate().fold(
                BigInt::zero(),
                |acc, (i, x)| if i % 2 == 0 { acc + x } else { acc - x },
            );
        CohomologyVector { h, chi }
    }

    pub fn zero(dim: usize) -> Self {
        Self::new(vec![BigInt::zero(); dim + 1])
    }

    /// h^i, zero outside 0..=dim.
    pub fn h(&self, i: usize) -> BigInt {
        self.h.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.h
    }

    pub fn chi(&self) -> &BigInt {
        &self.chi
    }

    pub fn is_zero(&self) -> bool {
        self.h.iter().all(Zero::is_zero)
    }
}

impl fmt::Display for CohomologyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.h.iter().map(ToString::to_string).collect();
        write!(f, "({}; chi = {})", parts.join(", "), self.chi)
    }
}

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

/// Cohomology of O(d) on P^n (Bott vanishing: only h^0 and h^n survive).
pub fn coh_pn(n: u32, d: i64) -> CohomologyVector {
    let mut h = vec![BigInt::zero(); n as usize + 1];
    if d >= 0 {
        h[0] = binomial(n as u64 + d as u64, n as u64);
    }
    if d < -(n as i64) {
        h[n as usize] = binomial((-d - 1) as u64, n as u64);
    }
    CohomologyVector::new(h)
}

/// Cohomology of O(aC + bf) on F_e, via the pushforward to P^1 for a >= 0
/// and Serre duality with K = -2C - (e+2)f for a <= -2.
pub fn coh_fe(e: u32, a: i64, b: i64) -> CohomologyVector {
    let e = e as i64;
    match a {
        a if a >= 0 => {
            let mut h0 = BigInt::zero();
            let mut h1 = BigInt::zero();
            for j in 0..=a {
                let v = coh_pn(1, b - j * e);
                h0 += v.h(0);
                h1 += v.h(1);
            }
            CohomologyVector::new(vec![h0, h1, BigInt::zero()])
        }
        -1 => CohomologyVector::zero(2),
        _ => {
            let dual = coh_fe(e as u32, -2 - a, -(e + 2) - b);
            CohomologyVector::new(vec![dual.h(2), dual.h(1), dual.h(0)])
        }
    }
}

/// Kunneth formula for O(d_1, .., d_m) on P^n1 x .. x P^nm.
pub fn coh_product(factors: &[u32], degrees: &[i64]) -> CohomologyVector {
    let dim: usize = factors.iter().map(|&n| n as usize).sum();
    let mut acc = vec![BigInt::zero(); dim + 1];
    acc[0] = BigInt::one();
    let mut reached = 0usize;
    for (&n, &d) in factors.iter().zip(degrees) {
        let v = coh_pn(n, d);
        let mut next = vec![BigInt::zero(); dim + 1];
        for i in 0..=reached {
            if acc[i].is_zero() {
                continue;
            }
            for j in [0, n as usize] {
                let hj = v.h(j);
                if !hj.is_zero() {
                    next[i + j] += &acc[i] * hj;
                }
            }
        }
        reached += n as usize;
        acc = next;
    }
    CohomologyVector::new(acc)
}

/// Positivity of a line bundle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinePositivity {
    pub nef: bool,
    pub ample: bool,
    pub very_ample: bool,
    pub globally_generated: bool,
}

impl LinePositivity {
    fn from_flags(nef: bool, ample: bool) -> Self {
        LinePositivity {
            nef,
            ample,
            very_ample: ample,
            globally_generated: nef,
        }
    }
}

/// aC + bf on F_e is nef (equivalently globally generated) iff a >= 0 and
/// b >= ae, and ample (equivalently very ample) iff a > 0 and b > ae.
pub fn positivity_test_fe(e: u32, a: i64, b: i64) -> LinePositivity {
    let ae = a * e as i64;
    LinePositivity::from_flags(a >= 0 && b >= ae, a > 0 && b > ae)
}

/// A line bundle on a supported base, by integer divisor coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineBundleOnBase {
    base: Arc<BaseVariety>,
    coeffs: Vec<i64>,
}

impl LineBundleOnBase {
    pub fn new(base: &Arc<BaseVariety>, coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.len() != base.generators().len() {
            return Err(Error::InvalidBase(format!(
                "{base} needs {} divisor coefficients",
                base.generators().len()
            )));
        }
        Ok(LineBundleOnBase {
            base: Arc::clone(base),
            coeffs,
        })
    }

    pub fn from_class(divisor: &ChowClass) -> Result<Self> {
        Self::new(divisor.base(), divisor.integral_divisor()?)
    }

    pub fn base(&self) -> &Arc<BaseVariety> {
        &self.base
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn class(&self) -> ChowClass {
        ChowClass::divisor(&self.base, &self.coeffs).expect("coefficient count checked")
    }

    pub fn cohomology(&self) -> CohomologyVector {
        match self.base.kind() {
            BaseKind::ProjectiveSpace(n) => coh_pn(*n, self.coeffs[0]),
            BaseKind::Hirzebruch(e) => coh_fe(*e, self.coeffs[0], self.coeffs[1]),
            BaseKind::Product(ns) => coh_product(ns, &self.coeffs),
        }
    }

    pub fn positivity(&self) -> LinePositivity {
        match self.base.kind() {
            BaseKind::Hirzebruch(e) => positivity_test_fe(*e, self.coeffs[0], self.coeffs[1]),
            BaseKind::ProjectiveSpace(_) | BaseKind::Product(_) => LinePositivity::from_flags(
                self.coeffs.iter().all(|&d| d >= 0),
                self.coeffs.iter().all(|&d| d > 0),
            ),
        }
    }
}

/// chi(D) = chi(O) + D.(D - K) / 2 on a surface.
pub fn chi_rr_surface(
    base: &Arc<BaseVariety>,
    divisor: &ChowClass,
    canonical: &ChowClass,
    chi_o: i64,
) -> Result<Rational> {
    if !base.is_surface() {
        return Err(Error::Unsupported {
            operation: "surface Riemann-Roch",
            base: base.to_string(),
        });
    }
    if !divisor.is_homogeneous_of(1) || !canonical.is_homogeneous_of(1) {
        return Err(Error::WrongDegree { expected: 1 });
    }
    let self_int = divisor.mul(&divisor.sub(canonical)?)?.integrate();
    let twice = self_int + Rational::from_integer(big(2 * chi_o));
    let chi = twice / Rational::from_integer(big(2));
    if !chi.is_integer() {
        return Err(Error::NonIntegralEuler(chi.to_string()));
    }
    Ok(chi)
}

/// Riemann-Roch with the canonical class of the base and chi(O) = 1, which
/// holds on every supported (rational) surface.
pub fn chi_surface(divisor: &ChowClass) -> Result<Rational> {
    let base = divisor.base();
    chi_rr_surface(base, divisor, &canonical_divisor(base)?, 1)
}

/// dim Ext^1(B, A) = h^1(A - B) on F_e, divisors given as (a, b) for aC + bf.
pub fn ext1_dim_fe(e: u32, a: (i64, i64), b: (i64, i64)) -> BigInt {
    coh_fe(e, a.0 - b.0, a.1 - b.1).h(1)
}

/// Ceiling division for the integer ranges used by the Hirzebruch examples.
pub fn div_ceil(n: i64, d: i64) -> i64 {
    Integer::div_ceil(&n, &d)
}
