use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ec_core::cluster::chi_closed_form_table;
use ec_core::ecpoly::ec_poly_with;
use ec_core::Exec;

const STRATEGIES: [(&str, Exec); 2] = [("parallel", Exec::Parallel), ("sequential", Exec::Sequential)];

fn ec_assembly(c: &mut Criterion) {
    let mut g = c.benchmark_group("ec_poly");
    g.sample_size(10);
    for n in [5usize, 6] {
        for (name, exec) in STRATEGIES {
            g.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
                b.iter(|| ec_poly_with(n, exec).unwrap())
            });
        }
    }
    g.finish();
}

fn chi_tables(c: &mut Criterion) {
    let mut g = c.benchmark_group("chi_closed_form_table");
    g.sample_size(10);
    for (cc, n) in [(3i64, 7i64), (4, 7)] {
        for (name, exec) in STRATEGIES {
            g.bench_with_input(
                BenchmarkId::new(name, format!("c{cc}_n{n}")),
                &(cc, n),
                |b, &(cc, n)| b.iter(|| chi_closed_form_table(n, cc, exec).unwrap()),
            );
        }
    }
    g.finish();
}

criterion_group!(benches, ec_assembly, chi_tables);
criterion_main!(benches);
