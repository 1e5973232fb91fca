use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use nctile::cogrow::cogrow;
use nctile::gen::{random_biinfinite, random_cogrow_instance};
use nctile::tas::grow_max;
use nctile::{Hand, SideMap, Tas, Window};

fn growth(c: &mut Criterion) {
    let comb = Tas::comb();
    for r in [10, 30] {
        let w = Window::new(r).unwrap();
        c.bench_function(&format!("grow_max comb r{r}"), |b| {
            b.iter(|| grow_max(black_box(&comb), w))
        });
    }
}

fn regions(c: &mut Criterion) {
    let w = Window::new(20).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let paths: Vec<_> = (0..16).map(|_| random_biinfinite(&mut rng, w)).collect();
    c.bench_function("classify r20 x16", |b| {
        b.iter(|| {
            for p in &paths {
                black_box(SideMap::classify(p, w).unwrap());
            }
        })
    });
}

fn cogrowth(c: &mut Criterion) {
    let w = Window::new(12).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let cases: Vec<_> = (0..16)
        .map(|_| random_cogrow_instance(&mut rng, w))
        .collect();
    c.bench_function("cogrow r12 x16", |b| {
        b.iter(|| {
            for (bb, f, b2, f2) in &cases {
                black_box(cogrow(Hand::Right, bb, f, b2, f2, w, 200).unwrap());
            }
        })
    });
}

criterion_group!(benches, growth, regions, cogrowth);
criterion_main!(benches);
