use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use bernstein_core::analysis::analyze_batch;
use bernstein_core::constructions::{adjoin_idempotent, zhevlakov_truncated};
use bernstein_core::exec::{with_mode, Exec};
use bernstein_core::scalar::int;
use bernstein_core::structure::is_bernstein;
use bernstein_core::symbolic::generic_element;
use bernstein_core::trees::TreeValues;
use bernstein_core::{AlgebraTable, Elem, Element, VarPool};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn zhevlakov() -> AlgebraTable {
    let (n, p) = zhevlakov_truncated(4, 3).unwrap();
    adjoin_idempotent(&n, &p).unwrap()
}

fn random_elements(t: &AlgebraTable, count: usize) -> Vec<Element> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    (0..count)
        .map(|_| Elem((0..t.dim()).map(|_| int(rng.gen_range(-3..=3))).collect()))
        .collect()
}

fn tree_enumeration(c: &mut Criterion) {
    let t = zhevlakov();
    let mut vars = VarPool::new();
    let n = t.barideal_basis().unwrap();
    let x = generic_element(&t, &mut vars, "t", Some(&n));
    let mut g = c.benchmark_group("tree_values_generic_8_leaves");
    g.sample_size(10);
    for (name, mode) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| with_mode(mode, || TreeValues::new(&t, &x, 8)))
        });
    }
    g.finish();
}

fn element_batch(c: &mut Criterion) {
    let t = zhevlakov();
    let elems = random_elements(&t, 64);
    let mut g = c.benchmark_group("analyze_batch_64");
    g.sample_size(10);
    for (name, mode) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| with_mode(mode, || analyze_batch(&t, &elems)))
        });
    }
    g.finish();
}

fn bernstein_check(c: &mut Criterion) {
    let t = zhevlakov();
    let mut g = c.benchmark_group("symbolic_bernstein_identity");
    g.sample_size(10);
    for (name, mode) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| with_mode(mode, || is_bernstein(&t).unwrap()))
        });
    }
    g.finish();
}

criterion_group!(benches, tree_enumeration, element_batch, bernstein_check);
criterion_main!(benches);
