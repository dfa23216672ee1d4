//! Compares the rayon-backed data-parallel paths against the sequential
//! reference paths on the dominant workload: interpolation-grid evaluation
//! of exact bivariate determinants.
//!
//! Run with `cargo bench -p degsim-core`.  Building with
//! `--no-default-features` turns every parallel path into the sequential
//! one, so the two suites should then coincide.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use degsim_core::algebra::{det_bipoly, det_integer, BiPoly, Mat};
use degsim_core::par;
use num::BigInt;

/// Path graph matrix tI - A + mu D, the workload behind every mu-polynomial.
fn path_matrix(n: usize) -> Mat<BiPoly> {
    Mat::from_fn(n, n, |r, c| {
        if r == c {
            let deg = if n == 1 {
                0
            } else if r == 0 || r == n - 1 {
                1
            } else {
                2
            };
            &BiPoly::t() + &BiPoly::from_int(deg).mul_mu_poly(&num::one())
        } else if r + 1 == c || c + 1 == r {
            BiPoly::from_int(-1)
        } else {
            BiPoly::zero()
        }
    })
}

fn int_matrix(n: usize, seed: u64) -> Mat<BigInt> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    Mat::from_fn(n, n, |_, _| BigInt::from(rng.gen_range(-9i64..=9)))
}

fn bench_det_bipoly(c: &mut Criterion) {
    let mut group = c.benchmark_group("det_bipoly_path_graph");
    group.sample_size(10);
    for n in [10usize, 16] {
        let m = path_matrix(n);
        group.bench_with_input(BenchmarkId::new("default_pool", n), &m, |b, m| {
            b.iter(|| det_bipoly(m, None).unwrap())
        });
    }
    group.finish();
}

fn bench_map_vec(c: &mut Criterion) {
    let mut group = c.benchmark_group("map_vec_bigint_dets");
    group.sample_size(10);
    let mats: Vec<Mat<BigInt>> = (0..64).map(|s| int_matrix(12, s)).collect();
    group.bench_function("parallel", |b| {
        b.iter(|| par::map_vec(mats.clone(), |m| det_integer(&m)))
    });
    group.bench_function("sequential", |b| {
        b.iter(|| par::map_vec_seq(mats.clone(), |m| det_integer(&m)))
    });
    group.finish();
}

criterion_group!(benches, bench_det_bipoly, bench_map_vec);
criterion_main!(benches);
