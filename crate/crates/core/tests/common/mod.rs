//! Random generators shared by the property suites.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use tance::linalg::{self, re};
use tance::{
    classify_point, Field, HermitianSpace, Matrix, MetricSign, PointClass, ProjectivePoint, Scalar,
    Vector,
};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn normal(rng: &mut ChaCha8Rng) -> f64 {
    rng.sample(StandardNormal)
}

pub fn rand_scalar(rng: &mut ChaCha8Rng, field: Field) -> Scalar {
    match field {
        Field::Real => re(normal(rng)),
        Field::Complex => Scalar::new(normal(rng), normal(rng)),
    }
}

pub fn rand_unit_scalar(rng: &mut ChaCha8Rng, field: Field) -> Scalar {
    match field {
        Field::Real => re(if rng.random_bool(0.5) { 1.0 } else { -1.0 }),
        Field::Complex => Scalar::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU)),
    }
}

/// A nonzero scalar with modulus in `[0.2, 5]`.
pub fn rand_nonzero_scalar(rng: &mut ChaCha8Rng, field: Field) -> Scalar {
    rand_unit_scalar(rng, field) * rng.random_range(0.2..5.0)
}

pub fn rand_vector(rng: &mut ChaCha8Rng, field: Field, n: usize) -> Vector {
    Vector::from_fn(n, |_, _| rand_scalar(rng, field))
}

pub fn rand_matrix(rng: &mut ChaCha8Rng, field: Field, n: usize) -> Matrix {
    Matrix::from_fn(n, n, |_, _| rand_scalar(rng, field))
}

pub fn rand_hermitian(rng: &mut ChaCha8Rng, field: Field, n: usize) -> Matrix {
    let a = rand_matrix(rng, field, n);
    (&a + a.adjoint()) * re(0.5)
}

/// A random matrix whose smallest singular value is not tiny.
pub fn rand_invertible(rng: &mut ChaCha8Rng, field: Field, n: usize) -> Matrix {
    loop {
        let m = rand_matrix(rng, field, n);
        let sv = m.clone().singular_values();
        if sv.min() > 0.1 && sv.max() / sv.min() < 1e3 {
            return m;
        }
    }
}

/// `M^T G conj(M)`: the Gram matrix of the columns of `M`.
pub fn congruent(g: &Matrix, m: &Matrix) -> Matrix {
    m.transpose() * g * m.map(|z| z.conj())
}

pub fn space(field: Field, squares: &[f64], sign: MetricSign) -> HermitianSpace {
    HermitianSpace::diagonal(field, squares, sign).unwrap()
}

pub fn round_sphere() -> HermitianSpace {
    space(Field::Complex, &[1.0, 1.0], MetricSign::Plus)
}

pub fn riemann_poincare() -> HermitianSpace {
    space(Field::Complex, &[-1.0, 1.0], MetricSign::Minus)
}

pub fn complex_hyperbolic() -> HermitianSpace {
    space(Field::Complex, &[-1.0, 1.0, 1.0], MetricSign::Minus)
}

pub fn fubini_study(n: usize) -> HermitianSpace {
    space(Field::Complex, &vec![1.0; n + 1], MetricSign::Plus)
}

pub fn real_hyperbolic(n: usize) -> HermitianSpace {
    let mut d = vec![1.0; n + 1];
    d[0] = -1.0;
    space(Field::Real, &d, MetricSign::Minus)
}

/// A point of the given class whose square is not close to zero.
pub fn rand_point(rng: &mut ChaCha8Rng, s: &HermitianSpace, class: PointClass) -> ProjectivePoint {
    let n = s.dim();
    loop {
        let mut v = rand_vector(rng, s.field(), n);
        if class == PointClass::Negative {
            // Bias toward the negative direction of diag(-1, 1, ...).
            v[0] = rand_unit_scalar(rng, s.field()) * (1.0 + v[0].norm());
            for i in 1..n {
                v[i] *= 0.6 / (n as f64).sqrt();
            }
        }
        let sq = s.form(&v, &v).unwrap().re;
        if sq.abs() < 0.05 * linalg::coord_norm(&v).powi(2) {
            continue;
        }
        let p = ProjectivePoint::new(s, v).unwrap();
        if classify_point(s, &p) == class {
            return p;
        }
    }
}

/// A form-preserving map `B2 B1^{-1}` from two random orthonormal bases.
pub fn rand_isometry(rng: &mut ChaCha8Rng, s: &HermitianSpace) -> Matrix {
    let n = s.dim();
    let basis = |rng: &mut ChaCha8Rng| {
        let m = rand_invertible(rng, s.field(), n);
        let cols: Vec<Vector> = (0..n).map(|j| m.column(j).into_owned()).collect();
        linalg::columns(&s.orthonormal_basis(&cols).unwrap().vectors)
    };
    let b1 = basis(rng);
    let b2 = basis(rng);
    b2 * b1.try_inverse().unwrap()
}

/// `(A + A^H) / 2`, exactly hermitian in floating point.
pub fn hermitize(a: &Matrix) -> Matrix {
    (a + a.adjoint()) * re(0.5)
}

/// A hermitian matrix congruent to `diag(squares)` through a well
/// conditioned random basis change.
pub fn rand_gram_with(rng: &mut ChaCha8Rng, field: Field, squares: &[f64]) -> Matrix {
    let n = squares.len();
    let d = Matrix::from_fn(n, n, |i, j| if i == j { re(squares[i]) } else { re(0.0) });
    let p = rand_invertible(rng, field, n);
    hermitize(&congruent(&d, &p))
}

/// Random diagonal of `-1, 0, 1` entries and its signature counts.
pub fn rand_signs(rng: &mut ChaCha8Rng, n: usize, allow_zero: bool) -> Vec<f64> {
    (0..n)
        .map(|_| {
            let k = if allow_zero {
                rng.random_range(0..3)
            } else {
                2 * rng.random_range(0..2)
            };
            k as f64 - 1.0
        })
        .collect()
}

pub fn signature_of(squares: &[f64]) -> tance::Signature {
    let count = |x: f64| squares.iter().filter(|&&s| s == x).count();
    tance::Signature::new(count(-1.0), count(0.0), count(1.0))
}
