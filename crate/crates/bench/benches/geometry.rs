use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::hint::black_box;
use tance::linalg::{re, vector};
use tance::{
    tance, triangle_invariants, witness_unitary, Configuration, Field, HermitianSpace, Matrix,
    MetricSign, ProjectivePoint, Scalar, Vector,
};

fn rand_vector(rng: &mut ChaCha8Rng, n: usize) -> Vector {
    Vector::from_fn(n, |_, _| {
        Scalar::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
    })
}

fn hyperbolic(n: usize) -> HermitianSpace {
    let mut squares = vec![1.0; n];
    squares[0] = -1.0;
    HermitianSpace::diagonal(Field::Complex, &squares, MetricSign::Minus).unwrap()
}

fn negative_point(rng: &mut ChaCha8Rng, s: &HermitianSpace) -> ProjectivePoint {
    let mut v = rand_vector(rng, s.dim()) * re(0.5 / (s.dim() as f64).sqrt());
    v[0] = re(1.0);
    ProjectivePoint::new(s, v).unwrap()
}

fn bench_signature(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for n in [3, 6] {
        let a = Matrix::from_fn(n, n, |_, _| {
            Scalar::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
        });
        let g = (&a + a.adjoint()) * re(0.5);
        c.bench_function(&format!("signature/{n}"), |b| {
            b.iter(|| {
                HermitianSpace::new(Field::Complex, black_box(g.clone()), MetricSign::Plus)
                    .unwrap()
                    .signature()
            })
        });
    }
}

fn bench_gram_schmidt(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let s = hyperbolic(5);
    let flag: Vec<Vector> = (0..5).map(|_| rand_vector(&mut rng, 5)).collect();
    c.bench_function("gram_schmidt/5", |b| {
        b.iter(|| s.orthonormal_basis(black_box(&flag)).unwrap())
    });
}

fn bench_tance(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let s = hyperbolic(3);
    let (p, q) = (negative_point(&mut rng, &s), negative_point(&mut rng, &s));
    c.bench_function("tance/3", |b| {
        b.iter(|| tance(&s, black_box(&p), black_box(&q)).unwrap())
    });
}

fn bench_triangle(c: &mut Criterion) {
    let s = HermitianSpace::diagonal(Field::Complex, &[1.0, 1.0], MetricSign::Plus).unwrap();
    let p = [
        vector(&[re(1.0), re(0.0)]),
        vector(&[re(1.0), Scalar::new(0.0, 1.0)]),
        vector(&[re(1.0), re(1.0)]),
    ]
    .map(|v| ProjectivePoint::new(&s, v).unwrap());
    c.bench_function("triangle_invariants/octant", |b| {
        b.iter(|| triangle_invariants(&s, black_box(&p[0]), &p[1], &p[2]).unwrap())
    });
}

fn bench_witness(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let s = hyperbolic(4);
    let pts: Vec<Vector> = (0..2)
        .map(|_| negative_point(&mut rng, &s).rep().clone())
        .collect();
    let c1 = Configuration::new(&s, pts).unwrap();
    let c2 = c1.clone();
    c.bench_function("witness_unitary/4", |b| {
        b.iter_batched(
            || (c1.clone(), c2.clone()),
            |(x, y)| witness_unitary(&s, &x, &y).unwrap(),
            BatchSize::SmallInput,
        )
    });
}

criterion_group!(
    benches,
    bench_signature,
    bench_gram_schmidt,
    bench_tance,
    bench_triangle,
    bench_witness
);
criterion_main!(benches);
