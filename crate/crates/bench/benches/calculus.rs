use std::hint::black_box;

use chowcalc::bundle::{line_bundle, segre, tangent_bundle, twist};
use chowcalc::dsl::{parse, Evaluator};
use chowcalc::{BaseVariety, ChowClass};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

const SCRIPT: &str = "\
base F1
let E = O(2C + 3f) + O(C + 5f)
chern E
segre E
coh C - 2f
check surface-big E with gg=true h0=20 h1detinv=0
check twist-big twist(O + O(-2C - 4f), C + 2f) with ample_L=true h0_twist=1
";

fn ring_mul(c: &mut Criterion) {
    let mut group = c.benchmark_group("ring_mul");
    let bases = [
        BaseVariety::projective(4).unwrap(),
        BaseVariety::product(&[1, 1, 2]).unwrap(),
        BaseVariety::product(&[2, 2, 2]).unwrap(),
    ];
    for base in bases {
        let one = ChowClass::one(&base);
        let mut x = one.clone();
        for g in base.generators() {
            x = x.add(&ChowClass::generator(&base, g).unwrap()).unwrap();
        }
        let y = x.pow(2).add(&one).unwrap();
        group.bench_with_input(
            BenchmarkId::from_parameter(base.to_string()),
            &(x, y),
            |b, (x, y)| b.iter(|| black_box(x).mul(black_box(y)).unwrap()),
        );
    }
    group.finish();
}

fn segre_tangent(c: &mut Criterion) {
    let mut group = c.benchmark_group("segre_tangent");
    for n in [2u32, 4, 8] {
        let t = tangent_bundle(&BaseVariety::projective(n).unwrap()).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &t, |b, t| {
            b.iter(|| segre(black_box(t)))
        });
    }
    group.finish();
}

fn twisted_segre(c: &mut Criterion) {
    let base = BaseVariety::product(&[2, 2]).unwrap();
    let t = tangent_bundle(&base).unwrap();
    let l = line_bundle(&base, &ChowClass::divisor(&base, &[1, -2]).unwrap()).unwrap();
    c.bench_function("segre_of_twisted_tangent_P2xP2", |b| {
        b.iter(|| segre(&twist(black_box(&t), black_box(&l)).unwrap()))
    });
}

fn script(c: &mut Criterion) {
    c.bench_function("parse", |b| b.iter(|| parse(black_box(SCRIPT)).unwrap()));
    let ast = parse(SCRIPT).unwrap();
    c.bench_function("evaluate", |b| {
        b.iter(|| Evaluator::default().run(black_box(&ast)))
    });
}

criterion_group!(benches, ring_mul, segre_tangent, twisted_segre, script);
criterion_main!(benches);
