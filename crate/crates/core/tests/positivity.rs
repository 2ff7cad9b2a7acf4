use std::sync::Arc;

use chowcalc::bundle::*;
use chowcalc::chowring::rational;
use chowcalc::cohomology::coh_fe;
use chowcalc::positivity::*;
use chowcalc::{BaseVariety, ChowClass};
use num::BigInt;

fn split_on(base: &Arc<BaseVariety>, divisors: &[&[i64]]) -> BundleClass {
    divisors
        .iter()
        .map(|d| line_bundle(base, &ChowClass::divisor(base, d).unwrap()).unwrap())
        .reduce(|a, b| whitney_sum(&a, &b).unwrap())
        .unwrap()
}

fn trusting() -> Checker {
    Checker::new(Verification::TrustCertificate)
}

fn surface_cert(gg: bool, h0: u64, h1: bool) -> Certificate {
    Certificate {
        globally_generated: Some(gg),
        h0: Some(h0),
        h1_det_inv_zero: Some(h1),
        ..Certificate::default()
    }
}

fn fourfold_cert() -> Certificate {
    Certificate {
        globally_generated: Some(true),
        h0: Some(24),
        q_zero: Some(true),
        hi_det_inv_zero: Some(true),
        h3_dual_twist_zero: Some(true),
        mu_injective: Some(true),
        ..Certificate::default()
    }
}

#[test]
fn plane_bundle_is_big() {
    let p2 = BaseVariety::projective(2).unwrap();
    let e = split_on(&p2, &[&[0], &[2]]);
    let v = check_surface_bigness(&e, &Certificate::default());
    assert_eq!(v.outcome, Outcome::Big, "{:?}", v.first_failure());
    assert_eq!(v.segre_top, rational(4));
    assert_eq!(v.numerical_dimension, Some(3));
    assert_eq!(v.kodaira_iitaka, Some(3));
    let h0 = v.audit.iter().find(|a| a.hypothesis == "h0(E)").unwrap();
    assert_eq!(h0.provided, "7");
    assert_eq!(h0.source, Source::Computed);
}

#[test]
fn hirzebruch_sweep_computes_every_flag() {
    for e in 0..=3i64 {
        let base = BaseVariety::hirzebruch(e as u32).unwrap();
        for b in e + 1..=e + 6 {
            assert_eq!(coh_fe(e as u32, 1, b).h(0), BigInt::from(2 * b + 2 - e));
            let bundle = split_on(&base, &[&[0, 0], &[1, b]]);
            let v = check_surface_bigness(&bundle, &Certificate::default());
            assert_eq!(v.outcome, Outcome::Big, "e={e} b={b}");
            for a in &v.audit {
                assert_ne!(a.source, Source::Missing);
                assert_ne!(a.source, Source::Asserted);
            }
            let h0 = v.audit.iter().find(|a| a.hypothesis == "h0(E)").unwrap();
            assert_eq!(h0.provided, (2 * b + 3 - e).to_string());
        }
    }
}

#[test]
fn tangent_fourfold_routes() {
    let p4 = BaseVariety::projective(4).unwrap();
    let t = tangent_bundle(&p4).unwrap();
    let fano = check_fano_tangent(
        &p4,
        &Certificate {
            h0: Some(24),
            ..Certificate::default()
        },
    );
    assert_eq!(fano.outcome, Outcome::Big);
    assert_eq!(fano.segre_top, rational(70));
    let ff = check_fourfold_bigness(
        &t,
        &Certificate {
            mu_injective: Some(true),
            ..Certificate::default()
        },
    );
    assert_eq!(ff.outcome, Outcome::Big, "{:?}", ff.first_failure());
    assert_eq!(
        trusting()
            .check_fourfold_bigness(&t, &fourfold_cert())
            .outcome,
        Outcome::Big
    );
}

#[test]
fn flipping_any_flag_is_inconclusive() {
    let p2 = BaseVariety::projective(2).unwrap();
    let e = split_on(&p2, &[&[0], &[2]]);
    let base = surface_cert(true, 7, true);
    assert_eq!(
        trusting().check_surface_bigness(&e, &base).outcome,
        Outcome::Big
    );
    for flipped in [
        surface_cert(false, 7, true),
        surface_cert(true, 3, true),
        surface_cert(true, 7, false),
        Certificate {
            h0: None,
            ..base.clone()
        },
    ] {
        let v = trusting().check_surface_bigness(&e, &flipped);
        assert_eq!(v.outcome, Outcome::Inconclusive);
    }

    let p4 = BaseVariety::projective(4).unwrap();
    let t = tangent_bundle(&p4).unwrap();
    let c = fourfold_cert();
    let flips = [
        Certificate {
            globally_generated: Some(false),
            ..c.clone()
        },
        Certificate {
            h0: Some(7),
            ..c.clone()
        },
        Certificate {
            q_zero: Some(false),
            ..c.clone()
        },
        Certificate {
            hi_det_inv_zero: Some(false),
            ..c.clone()
        },
        Certificate {
            h3_dual_twist_zero: Some(false),
            ..c.clone()
        },
        Certificate {
            mu_injective: Some(false),
            ..c.clone()
        },
    ];
    for f in flips {
        assert_eq!(
            trusting().check_fourfold_bigness(&t, &f).outcome,
            Outcome::Inconclusive
        );
    }
}

#[test]
fn computed_conflicts_reject() {
    let p2 = BaseVariety::projective(2).unwrap();
    let e = split_on(&p2, &[&[0], &[2]]);
    let v = check_surface_bigness(&e, &surface_cert(false, 7, true));
    assert_eq!(v.outcome, Outcome::RejectedInput);
    assert!(v.rejection.unwrap().contains("E globally generated"));
}

#[test]
fn split_pattern_needs_the_twist_route() {
    let f1 = BaseVariety::hirzebruch(1).unwrap();
    let a = ChowClass::divisor(&f1, &[1, 2]).unwrap();
    let e = split_on(&f1, &[&[1, 2], &[-1, -2]]);
    assert_eq!(segre(&e).top(), rational(3));
    assert_eq!(
        check_surface_bigness(&e, &Certificate::default()).outcome,
        Outcome::Inconclusive
    );
    assert_eq!(
        big_via_segre(&e, &Certificate::default()).outcome,
        Outcome::Inconclusive
    );
    let given = Certificate {
        effective_twist: Some(EffectiveTwist {
            line: Some(a),
            ..EffectiveTwist::default()
        }),
        ..Certificate::default()
    };
    assert_eq!(big_via_effective_twist(&e, &given).outcome, Outcome::Big);
    let asserted = Certificate {
        effective_twist: Some(EffectiveTwist {
            line: None,
            ample: Some(true),
            h0_twist: Some(1),
        }),
        ..Certificate::default()
    };
    assert_eq!(big_via_effective_twist(&e, &asserted).outcome, Outcome::Big);
}

#[test]
fn lazarsfeld_mukai_pattern() {
    let p4 = BaseVariety::projective(4).unwrap();
    let h = ChowClass::generator(&p4, "h").unwrap();
    let t = tangent_bundle(&p4).unwrap();
    let e = whitney_sum(
        &line_bundle(&p4, &h).unwrap(),
        &twist(&t, &line_bundle(&p4, &h.neg()).unwrap()).unwrap(),
    )
    .unwrap();
    assert_eq!(e.c1(), h.scale_int(2));
    assert_eq!(kernel_bundle(&e, 10).unwrap(), dual(&e));
    let cert = Certificate {
        h0: Some(10),
        mu_injective: Some(false),
        ..fourfold_cert()
    };
    assert_eq!(
        trusting().check_fourfold_bigness(&e, &cert).outcome,
        Outcome::Inconclusive
    );
    let twisted = Certificate {
        effective_twist: Some(EffectiveTwist {
            line: None,
            ample: Some(true),
            h0_twist: Some(1),
        }),
        ..Certificate::default()
    };
    assert_eq!(
        trusting().big_via_effective_twist(&e, &twisted).outcome,
        Outcome::Big
    );
}

#[test]
fn numerical_dimension_bounds() {
    let cases: Vec<BundleClass> = vec![
        split_on(&BaseVariety::projective(2).unwrap(), &[&[0], &[2]]),
        split_on(&BaseVariety::projective(2).unwrap(), &[&[0], &[0]]),
        split_on(&BaseVariety::projective(3).unwrap(), &[&[0], &[1], &[1]]),
        split_on(&BaseVariety::hirzebruch(1).unwrap(), &[&[0, 0], &[0, 1]]),
        split_on(&BaseVariety::hirzebruch(2).unwrap(), &[&[1, 3], &[0, 1]]),
        split_on(&BaseVariety::product(&[1, 1]).unwrap(), &[&[1, 0], &[0, 0]]),
        tangent_bundle(&BaseVariety::projective(4).unwrap()).unwrap(),
    ];
    for e in cases {
        let n = numerical_dimension(&e, true).unwrap();
        let r = e.rank();
        assert!(r - 1 <= n && (n as usize) < e.base().dim() + r as usize);
        if check_surface_bigness(&e, &Certificate::default()).is_big() {
            let s = big_via_segre(&e, &Certificate::default());
            assert!(s.is_big() && s.segre_top > rational(0));
        }
    }
    let trivial = split_on(&BaseVariety::projective(2).unwrap(), &[&[0], &[0]]);
    assert_eq!(numerical_dimension(&trivial, true).unwrap(), 1);
    assert!(numerical_dimension(&trivial, false).is_err());
}

#[test]
fn kernel_second_chern_matches_segre_on_surfaces() {
    let surfaces = [
        split_on(&BaseVariety::projective(2).unwrap(), &[&[0], &[2]]),
        split_on(&BaseVariety::hirzebruch(1).unwrap(), &[&[0, 0], &[1, 2]]),
        split_on(&BaseVariety::hirzebruch(1).unwrap(), &[&[2, 3], &[1, 5]]),
        split_on(
            &BaseVariety::product(&[1, 1]).unwrap(),
            &[&[1, 1], &[0, 1], &[1, 0]],
        ),
    ];
    for e in surfaces {
        let n = kernel_bundle(&e, e.rank() as u64 + 2).unwrap();
        assert_eq!(n.chern(2).integrate(), segre(&e).top());
    }
}

#[test]
fn wrong_dimension_is_rejected() {
    let p3 = BaseVariety::projective(3).unwrap();
    let e = split_on(&p3, &[&[0], &[1]]);
    assert_eq!(
        check_surface_bigness(&e, &Certificate::default()).outcome,
        Outcome::RejectedInput
    );
    assert_eq!(
        check_fourfold_bigness(&e, &Certificate::default()).outcome,
        Outcome::RejectedInput
    );
    assert_eq!(
        check_fano_tangent(&p3, &Certificate::default()).outcome,
        Outcome::RejectedInput
    );
}
