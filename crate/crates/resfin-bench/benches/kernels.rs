//! Benchmarks for the hot paths: pairwise rule separation, configuration-space
//! enumeration, morphism enumeration, and certificate verification.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use resfin_core::catalog;
use resfin_core::{
    enumerate_ca, enumerate_morphisms, separate_ca_integer, Alphabet, Certificate, LocalRule,
};

fn separation(c: &mut Criterion) {
    let rule110 = LocalRule::elementary(110);
    let rule90 = LocalRule::elementary(90);
    c.bench_function("separate rules 110 and 90", |b| {
        b.iter(|| separate_ca_integer(black_box(&rule110), black_box(&rule90)))
    });

    let rules: Vec<LocalRule> = (0..16).map(LocalRule::elementary).collect();
    c.bench_function("separate 120 elementary pairs", |b| {
        b.iter(|| {
            for i in 0..rules.len() {
                for j in (i + 1)..rules.len() {
                    black_box(separate_ca_integer(&rules[i], &rules[j]).expect("distinct rules"));
                }
            }
        })
    });
}

fn enumeration(c: &mut Criterion) {
    let alphabet = Alphabet::new(2).expect("binary");
    for name in ["z2", "z3"] {
        let monoid = catalog::by_name(name).expect("catalog name");
        c.bench_function(&format!("enumerate automata over {name}"), |b| {
            b.iter(|| enumerate_ca(black_box(&monoid), alphabet).expect("under cap"))
        });
    }

    let z6 = catalog::by_name("z6").expect("catalog name");
    c.bench_function("enumerate endomorphisms of z6", |b| {
        b.iter(|| enumerate_morphisms(black_box(&z6), &z6, false))
    });
}

fn verification(c: &mut Criterion) {
    let certificate = Certificate::from(
        separate_ca_integer(&LocalRule::elementary(110), &LocalRule::elementary(90))
            .expect("distinct rules"),
    );
    c.bench_function("verify an integer-separation certificate", |b| {
        b.iter(|| black_box(&certificate).verify().expect("valid"))
    });
    let json = certificate.to_json();
    c.bench_function("parse and verify from JSON", |b| {
        b.iter(|| {
            Certificate::from_json(black_box(&json))
                .expect("well-formed")
                .verify()
                .expect("valid")
        })
    });
}

criterion_group!(kernels, separation, enumeration, verification);
criterion_main!(kernels);
