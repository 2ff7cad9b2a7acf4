#![allow(dead_code)]

use std::sync::Arc;

use chowcalc::bundle::line_bundle;
use chowcalc::chowring::rational;
use chowcalc::{BaseVariety, BundleClass, ChowClass};
use proptest::prelude::*;

pub fn bases() -> Vec<Arc<BaseVariety>> {
    let mut out = Vec::new();
    for n in 1..=4 {
        out.push(BaseVariety::projective(n).unwrap());
    }
    for e in 0..=3 {
        out.push(BaseVariety::hirzebruch(e).unwrap());
    }
    for ns in [
        vec![1, 1],
        vec![1, 2],
        vec![1, 3],
        vec![2, 2],
        vec![1, 1, 1],
    ] {
        out.push(BaseVariety::product(&ns).unwrap());
    }
    out
}

pub fn any_base() -> impl Strategy<Value = Arc<BaseVariety>> {
    prop::sample::select(bases())
}

/// Homogeneous class of degree `d` with small integer coefficients.
pub fn homogeneous(base: Arc<BaseVariety>, d: usize) -> impl Strategy<Value = ChowClass> {
    let monomials = base.basis(d).to_vec();
    prop::collection::vec(-4i64..=4, monomials.len()).prop_map(move |cs| {
        ChowClass::from_terms(
            &base,
            monomials.iter().cloned().zip(cs.into_iter().map(rational)),
        )
        .unwrap()
    })
}

/// Mixed-degree class.
pub fn class(base: Arc<BaseVariety>) -> impl Strategy<Value = ChowClass> {
    let parts: Vec<_> = (0..=base.dim())
        .map(|d| homogeneous(base.clone(), d))
        .collect();
    parts.prop_map(|ps| {
        ps.iter()
            .skip(1)
            .fold(ps[0].clone(), |acc, p| acc.add(p).unwrap())
    })
}

pub fn divisor(base: Arc<BaseVariety>) -> impl Strategy<Value = ChowClass> {
    homogeneous(base, 1)
}

/// A bundle with arbitrary Chern data of rank 1..=5.
pub fn bundle(base: Arc<BaseVariety>) -> impl Strategy<Value = BundleClass> {
    (1u32..=5).prop_flat_map(move |rank| {
        let top = (rank as usize).min(base.dim());
        let parts: Vec<_> = (1..=top).map(|d| homogeneous(base.clone(), d)).collect();
        let base = base.clone();
        parts.prop_map(move |cs| BundleClass::from_chern(&base, rank, cs).unwrap())
    })
}

/// Divisors of the summands of a split bundle of rank 1..=4.
pub fn split_divisors(base: Arc<BaseVariety>) -> impl Strategy<Value = Vec<ChowClass>> {
    prop::collection::vec(divisor(base), 1..=4)
}

pub fn split(divisors: &[ChowClass]) -> BundleClass {
    let base = divisors[0].base().clone();
    divisors[1..]
        .iter()
        .fold(line_bundle(&base, &divisors[0]).unwrap(), |acc, d| {
            chowcalc::bundle::whitney_sum(&acc, &line_bundle(&base, d).unwrap()).unwrap()
        })
}

pub fn based<T: std::fmt::Debug>(
    f: impl Fn(Arc<BaseVariety>) -> BoxedStrategy<T> + 'static,
) -> impl Strategy<Value = T> {
    any_base().prop_flat_map(f)
}
