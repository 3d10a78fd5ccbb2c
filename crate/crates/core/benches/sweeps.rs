use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use shifted_crystal::crystal::{component_closure_with, CrystalWord, OperatorSet};
use shifted_crystal::par::Execution;
use shifted_crystal::ssdt;
use shifted_crystal::verify::{self, Options, Suite};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweeps");
    group.sample_size(10);
    for (suite, size) in [(Suite::LrRulesAgree, 7), (Suite::ClosureSsdt, 6), (Suite::LatticeRulesAgree, 6)] {
        for (name, exec) in MODES {
            let opts = Options { max_size: Some(size), exec, ..Options::default() };
            group.bench_with_input(BenchmarkId::new(suite.name(), name), &opts, |b, opts| {
                b.iter(|| verify::run(suite, opts).unwrap())
            });
        }
    }
    group.finish();
}

fn closure(c: &mut Criterion) {
    let n = 5;
    let low = ssdt::lowest_tableau(&"5,3,1".parse().unwrap(), n).unwrap();
    let w = CrystalWord::from_ssdt(&low, n).unwrap();
    let mut group = c.benchmark_group("component_closure");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(name, |b| b.iter(|| component_closure_with(exec, &w, OperatorSet::Q)));
    }
    group.finish();
}

criterion_group!(benches, sweeps, closure);
criterion_main!(benches);
