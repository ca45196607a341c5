use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use mrkit_core::automorphisms::{enumerate_aut, inner_subgroup, omega};
use mrkit_core::corpus;
use mrkit_core::cubic::axioms::{check_cubic_axioms, check_mr_axiom};
use mrkit_core::functors::quotient_c;
use mrkit_core::{Limits, WitnessPolicy};

fn automorphisms(c: &mut Criterion) {
    let c3 = corpus::c3().algebra;
    let limits = Limits::default();
    c.bench_function("enumerate_aut C3", |b| {
        b.iter(|| enumerate_aut(black_box(&c3), &limits).unwrap())
    });

    let auts = enumerate_aut(&c3, &limits).unwrap();
    let inner = inner_subgroup(&c3, &auts);
    let q = quotient_c(&c3).unwrap();
    c.bench_function("omega C3", |b| {
        b.iter(|| {
            for phi in &inner {
                black_box(omega(&c3, &q, phi).unwrap());
            }
        })
    });
}

fn axioms(c: &mut Criterion) {
    let c4 = corpus::interval(4).algebra;
    c.bench_function("cubic axioms C4", |b| {
        b.iter(|| check_cubic_axioms(black_box(&c4), WitnessPolicy::First).unwrap())
    });
    c.bench_function("mr axiom C4", |b| {
        b.iter(|| check_mr_axiom(black_box(&c4), WitnessPolicy::First))
    });
}

criterion_group!(benches, automorphisms, axioms);
criterion_main!(benches);
