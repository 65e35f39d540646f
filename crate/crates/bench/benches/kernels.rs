//! Benchmarks of the performance-sensitive kernels: exact scalar arithmetic,
//! tensor-operator products, skew-inverse solving, normal-form table
//! construction and the eigenvalue parameterizations.

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use std::hint::black_box;

use rea_bench::dj;
use rea_core::charmap::{l_chain, power_sum};
use rea_core::hecke::HeckeAlgebra;
use rea_core::ncalg::{Reducer, RelationSet, Variant};
use rea_core::scalar::ScalarQ;
use rea_core::spectral::powersum_sym;
use rea_core::symmetry::{check_braid, Symmetry};

fn scalar_ops(c: &mut Criterion) {
    let a = ScalarQ::qint(5);
    let b = &ScalarQ::qint(7) * &ScalarQ::q_pow(-3);
    c.bench_function("scalar/mul_qints", |bench| {
        bench.iter(|| black_box(&a) * black_box(&b))
    });
    c.bench_function("scalar/add_qints", |bench| {
        bench.iter(|| black_box(&a) + black_box(&b))
    });
    let s = "(q^4+q^2+1)/q^2";
    c.bench_function("scalar/parse", |bench| {
        bench.iter(|| ScalarQ::parse(black_box(s)).unwrap())
    });
}

fn tensor_ops(c: &mut Criterion) {
    let sym = dj(2);
    let r1 = sym.r_matrix().embed(1, 3).unwrap();
    let r2 = sym.r_matrix().embed(2, 3).unwrap();
    c.bench_function("tensor/mul_8x8", |bench| {
        bench.iter(|| black_box(&r1).mul(black_box(&r2)))
    });
    c.bench_function("symmetry/braid_check_dj2", |bench| {
        bench.iter(|| check_braid(black_box(sym.r_matrix())))
    });
    c.bench_function("symmetry/construct_dj2", |bench| {
        bench.iter(|| Symmetry::drinfeld_jimbo(2).unwrap())
    });
    let a2 = sym.skew_symmetrizer(2).unwrap();
    c.bench_function("tensor/rank_fraction_free", |bench| {
        bench.iter(|| black_box(&a2).rank())
    });
}

fn reduction(c: &mut Criterion) {
    let sym = dj(2);
    let rels = RelationSet::new(&sym, Variant::Re);
    c.bench_function("ncalg/reducer_build_d3", |bench| {
        bench.iter_batched(
            || rels.clone(),
            |r| Reducer::new(&r, 3),
            BatchSize::SmallInput,
        )
    });
    let red = Reducer::new(&rels, 4);
    let h = HeckeAlgebra::generic(3);
    let z = h.parse("t1.t2").unwrap();
    let chz = rea_core::charmap::ch(&sym, Variant::Re, &z, 3).unwrap();
    c.bench_function("ncalg/reduce_degree3", |bench| {
        bench.iter(|| red.reduce(black_box(&chz.expr)).unwrap())
    });
    c.bench_function("ncalg/is_central_p2", |bench| {
        let p2 = power_sum(&sym, Variant::Re, 2);
        bench.iter(|| red.is_central(black_box(&p2.expr)).unwrap())
    });
}

fn chains_and_spectra(c: &mut Criterion) {
    let sym = dj(2);
    c.bench_function("charmap/l_chain_3", |bench| {
        bench.iter(|| l_chain(black_box(&sym), 3).unwrap())
    });
    let h = HeckeAlgebra::generic(3);
    c.bench_function("hecke/multiply_words", |bench| {
        let a = h.parse("t1.t2.t1").unwrap();
        let b = h.parse("t2.t1").unwrap();
        bench.iter(|| h.multiply(black_box(&a), black_box(&b)).unwrap())
    });
    c.bench_function("spectral/powersum_3_3", |bench| {
        bench.iter(|| powersum_sym(3, 3).unwrap())
    });
}

criterion_group!(benches, scalar_ops, tensor_ops, reduction, chains_and_spectra);
criterion_main!(benches);
