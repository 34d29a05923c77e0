use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use superbbw::bbw::{bbw_verdict, Characteristic};
use superbbw::eulerchar::chi_character;
use superbbw::{LaurentPoly, SuperRootData, Weight};

fn chi_gl22(c: &mut Criterion) {
    let sys = SuperRootData::from_word(2, 2, &[3, 1, 4, 2]).unwrap();
    let lambda = Weight::from_ints(&[4, -1, 3, -2]);
    c.bench_function("chi GL(2|2) all-odd system", |b| {
        b.iter(|| chi_character(black_box(&lambda), black_box(&sys)).unwrap())
    });
}

fn verdict_box(c: &mut Criterion) {
    let sys = SuperRootData::from_word(2, 1, &[1, 3, 2]).unwrap();
    let p = Characteristic::new(3).unwrap();
    let lambdas: Vec<Weight> = (-2..=2)
        .flat_map(|a| {
            (-2..=2).flat_map(move |b| (-2..=2).map(move |c| Weight::from_ints(&[a, b, c])))
        })
        .collect();
    c.bench_function("bbw verdicts over a 5x5x5 GL(2|1) box", |b| {
        b.iter(|| {
            for l in &lambdas {
                black_box(bbw_verdict(l, 0, &sys, p).unwrap());
            }
        })
    });
}

fn exact_divide(c: &mut Criterion) {
    let one = LaurentPoly::one(3);
    let factors = [[-1, 1, 0], [-1, 0, 1], [0, -1, 1]];
    let den = factors.iter().fold(one.clone(), |acc, e| {
        &acc * &(&one - &LaurentPoly::exp(&Weight::from_ints(e)))
    });
    let quotient = (0..4)
        .flat_map(|a| (0..4).map(move |b| Weight::from_ints(&[a, b, -a - b])))
        .fold(LaurentPoly::zero(3), |acc, e| &acc + &LaurentPoly::exp(&e));
    let product = &den * &quotient;
    c.bench_function("exact_divide by a cubic denominator", |b| {
        b.iter(|| black_box(&product).exact_divide(black_box(&den)).unwrap())
    });
}

criterion_group!(benches, chi_gl22, verdict_box, exact_divide);
criterion_main!(benches);
