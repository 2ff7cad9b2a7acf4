use chowcalc::dsl::ast::StmtKind;
use chowcalc::dsl::lexer::tokenize;
use chowcalc::dsl::{evaluate, parse, EvalErrorKind, Evaluator, Payload};
use chowcalc::positivity::Outcome;
use proptest::prelude::*;

const SCRIPTS: &[&str] = &[
    "base P2\nlet E = O + O(2h)\nsegre E\nnd E\ncheck surface-big E with gg=true h0=7 h1detinv=0",
    "base F1\nlet E = O + O(C + 2f)\ncheck surface-big E with gg=true h0=6 h1detinv=0",
    "base F1 # extension data\ncoh 2C + 3f\ncoh C + 5f\ncoh C - 2f\nchi 2C + 3f",
    "base F1\nlet E = twist(O + O(-2C - 4f), C + 2f)\nsegre E\ncheck twist-big E with ample_L=true h0_twist=1",
    "base P4\nlet T4 = T\nsegre T4\ncheck fano-tangent T with h0=24\ncheck fourfold-big T4 with mu=true",
    "base P4\nlet E = O(h) + twist(T, -h)\nchern E\nchern dual(E)\ncheck fourfold-big E with mu=false",
    "base P1 x P3\nlet E = O(h1) + O(2h2) + det(T)\nchern E\ncoh -2h1 + h2",
    "base P1xP1xP1\ncoh h1 + h2 - 3h3\nchern dual(dual(T))",
];

#[test]
fn corpus_round_trips() {
    for src in SCRIPTS {
        let ast = parse(src).unwrap();
        let printed = ast.to_string();
        let again = parse(&printed).unwrap();
        assert_eq!(ast.without_spans(), again.without_spans(), "{src}");
        assert_eq!(printed, again.to_string());
    }
}

#[test]
fn evaluation_is_pure() {
    for src in SCRIPTS {
        let ast = parse(src).unwrap();
        let first = Evaluator::default().run(&ast);
        let second = Evaluator::default().run(&ast);
        assert!(first.error.is_none(), "{src}: {:?}", first.error);
        assert_eq!(first, second);
    }
}

#[test]
fn statement_counts() {
    let s = parse("base P2\nlet E = O + O(2h)\nsegre E").unwrap();
    assert_eq!(s.statements.len(), 3);
    assert!(matches!(s.statements[0].kind, StmtKind::Base(_)));
}

#[test]
fn extension_line_bundles() {
    let r = evaluate(&parse(SCRIPTS[2]).unwrap()).unwrap();
    let h = |i: usize| match &r[i].payload {
        Payload::Cohomology(v) => v
            .entries()
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>(),
        other => panic!("{other:?}"),
    };
    assert_eq!(h(0), ["9", "0", "0"]);
    assert_eq!(h(1), ["11", "0", "0"]);
    assert_eq!(h(2)[1], "3");
    assert_eq!(r[3].payload, Payload::Chi(chowcalc::chowring::rational(9)));
}

#[test]
fn twist_route_on_split_pattern() {
    let r = evaluate(&parse(SCRIPTS[3]).unwrap()).unwrap();
    let Payload::Verdict(v) = &r[1].payload else {
        panic!()
    };
    assert_eq!(v.outcome, Outcome::Big);
}

#[test]
fn broken_scripts_point_at_the_offender() {
    let cases = [
        ("base P2\nlet E = O +\n", ""),
        ("base P2\nsegre dual(E", ""),
        ("base P2\nlet E = O ^ O", "^"),
        ("base P2\ncheck surface-big O with gg=true h9=1", "h9"),
        ("base P2\ncheck surface-big O witj gg=true", "witj"),
        ("base P7x\n", "P7x"),
        ("base P2\nlet 3 = O", "3"),
        ("base P2\nchern O(2)", ")"),
    ];
    for (src, offender) in cases {
        let err = parse(src).unwrap_err();
        let slice = &src[err.span.offset..err.span.offset + err.span.len];
        assert_eq!(slice, offender, "{src:?}: {err}");
    }
}

#[test]
fn evaluation_errors() {
    let kind = |src: &str| evaluate(&parse(src).unwrap()).unwrap_err().kind;
    assert_eq!(
        kind("base F1\nchern O(h)"),
        EvalErrorKind::UnknownIdentifier
    );
    assert_eq!(
        kind("base P4\ncheck surface-big T with gg=true"),
        EvalErrorKind::DimensionMismatch
    );
    assert_eq!(
        kind("base P2\ncheck segre-big T with h0=3"),
        EvalErrorKind::MalformedCertificate
    );
    assert_eq!(
        kind("base P4\ncheck fano-tangent O with h0=3"),
        EvalErrorKind::Unsupported
    );
}

/// Grammar-directed generator of valid scripts over P2.
fn div() -> impl Strategy<Value = String> {
    (-5i64..=5).prop_map(|a| match a {
        0 => "0h".to_string(),
        1 => "h".to_string(),
        -1 => "-h".to_string(),
        a => format!("{a}h"),
    })
}

fn bexpr() -> impl Strategy<Value = String> {
    let leaf = prop_oneof![
        Just("O".to_string()),
        Just("T".to_string()),
        div().prop_map(|d| format!("O({d})")),
    ];
    leaf.prop_recursive(3, 12, 3, |inner| {
        prop_oneof![
            inner.clone().prop_map(|x| format!("dual({x})")),
            inner.clone().prop_map(|x| format!("det({x})")),
            (inner.clone(), div()).prop_map(|(x, d)| format!("twist({x}, {d})")),
            prop::collection::vec(inner, 2..4).prop_map(|xs| xs.join(" + ")),
        ]
    })
}

fn script() -> impl Strategy<Value = String> {
    prop::collection::vec(
        prop_oneof![
            bexpr().prop_map(|b| format!("chern {b}")),
            bexpr().prop_map(|b| format!("segre {b}")),
            div().prop_map(|d| format!("coh {d}")),
            bexpr().prop_map(|b| format!("check segre-big {b} with gg=true")),
        ],
        1..6,
    )
    .prop_map(|qs| format!("base P2\n{}", qs.join("\n")))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn generated_scripts_round_trip(src in script()) {
        let ast = parse(&src).unwrap();
        prop_assert_eq!(parse(&ast.to_string()).unwrap().without_spans(), ast.without_spans());
        let ev = Evaluator::default().run(&ast);
        prop_assert_eq!(&ev, &Evaluator::default().run(&ast));
    }

    #[test]
    fn error_spans_cover_a_token(src in script(), cut in 0usize..200, junk in prop::sample::select(vec!["(", ")", "+", "with", "=", "7", "base P3"])) {
        let tokens = tokenize(&src).unwrap();
        let at = tokens[cut % tokens.len()].span.offset;
        let broken = format!("{}{} {}", &src[..at], junk, &src[at..]);
        if let Err(err) = parse(&broken) {
            let spans: Vec<_> = tokenize(&broken).unwrap().into_iter().map(|t| (t.span.offset, t.span.len)).collect();
            let hit = spans.iter().any(|&(o, l)| err.span.offset >= o && err.span.offset + err.span.len <= o + l)
                || err.span.offset == broken.len();
            prop_assert!(hit, "{:?} -> {}", broken, err);
        }
    }
}
