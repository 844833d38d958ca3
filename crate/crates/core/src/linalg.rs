//! Small dense helpers shared by the geometric modules.
//!
//! Everything here works on `Complex64` matrices; real-field spaces simply
//! carry zero imaginary parts.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;

use crate::hermitian::Signature;

pub type Scalar = Complex64;
pub type Vector = DVector<Scalar>;
pub type Matrix = DMatrix<Scalar>;

/// Shorthand for a real scalar.
pub fn re(x: f64) -> Scalar {
    Complex64::new(x, 0.0)
}

/// Builds a vector from real coordinates.
pub fn real_vector(coords: &[f64]) -> Vector {
    Vector::from_iterator(coords.len(), coords.iter().map(|&x| re(x)))
}

/// Builds a vector from complex coordinates.
pub fn vector(coords: &[Scalar]) -> Vector {
    Vector::from_column_slice(coords)
}

/// Largest entry modulus; 0 for an empty matrix.
pub fn max_abs(m: &Matrix) -> f64 {
    m.iter().fold(0.0_f64, |acc, z| acc.max(z.norm()))
}

/// Largest coordinate modulus of a vector.
pub fn max_abs_vec(v: &Vector) -> f64 {
    v.iter().fold(0.0_f64, |acc, z| acc.max(z.norm()))
}

/// Euclidean (coordinate) norm, independent of any hermitian form.
pub fn coord_norm(v: &Vector) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Stacks vectors as the columns of a matrix.
pub fn columns(vectors: &[Vector]) -> Matrix {
    let n = vectors.first().map_or(0, |v| v.len());
    Matrix::from_fn(n, vectors.len(), |i, j| vectors[j][i])
}

fn zero_threshold(m: &Matrix, eps: f64) -> f64 {
    eps * (1.0 + max_abs(m))
}

/// Reduces `m` to row echelon form in place and returns the pivot columns.
fn row_reduce(m: &mut Matrix, eps: f64) -> Vec<usize> {
    let thresh = zero_threshold(m, eps);
    let (rows, cols) = m.shape();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let (best, best_abs) = (r..rows)
            .map(|i| (i, m[(i, c)].norm()))
            .fold((r, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        if best_abs <= thresh {
            continue;
        }
        m.swap_rows(r, best);
        let pivot = m[(r, c)];
        for j in c..cols {
            m[(r, j)] /= pivot;
        }
        for i in 0..rows {
            if i != r {
                let factor = m[(i, c)];
                if factor != Scalar::new(0.0, 0.0) {
                    for j in c..cols {
                        let sub = factor * m[(r, j)];
                        m[(i, j)] -= sub;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of `{x : m x = 0}`, one vector per free column of the reduced form.
pub fn nullspace(m: &Matrix, eps: f64) -> Vec<Vector> {
    let cols = m.ncols();
    if m.nrows() == 0 {
        return (0..cols)
            .map(|i| {
                let mut v = Vector::zeros(cols);
                v[i] = re(1.0);
                v
            })
            .collect();
    }
    let mut reduced = m.clone();
    let pivots = row_reduce(&mut reduced, eps);
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = Vector::zeros(cols);
            v[free] = re(1.0);
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -reduced[(row, free)];
            }
            v
        })
        .collect()
}

/// Numerical rank of a matrix.
pub fn rank(m: &Matrix, eps: f64) -> usize {
    if m.nrows() == 0 || m.ncols() == 0 {
        return 0;
    }
    let mut reduced = m.clone();
    row_reduce(&mut reduced, eps).len()
}

/// Determinant of the leading `k x k` principal submatrix.
pub fn leading_minor(m: &Matrix, k: usize) -> Scalar {
    if k == 0 {
        return re(1.0);
    }
    m.view((0, 0), (k, k)).clone_owned().determinant()
}

/// Signature from the ratios of consecutive leading principal minors.
///
/// Returns `None` when some ratio is zero under the tolerance predicate, in
/// which case the criterion does not apply.
pub fn sylvester_signature(g: &Matrix, eps: f64) -> Option<Signature> {
    let n = g.nrows();
    let thresh = zero_threshold(g, eps);
    let mut prev = 1.0;
    let (mut neg, mut pos) = (0, 0);
    for k in 1..=n {
        let d = leading_minor(g, k).re;
        let ratio = d / prev;
        if !ratio.is_finite() || ratio.abs() <= thresh {
            return None;
        }
        if ratio < 0.0 {
            neg += 1;
        } else {
            pos += 1;
        }
        prev = d;
    }
    Some(Signature::new(neg, 0, pos))
}

/// Signature by counting eigenvalue signs of a hermitian matrix.
pub fn eigen_signature(g: &Matrix, eps: f64) -> Signature {
    if g.nrows() == 0 {
        return Signature::new(0, 0, 0);
    }
    let thresh = zero_threshold(g, eps);
    let eigen = SymmetricEigen::new(g.clone());
    let mut sig = Signature::new(0, 0, 0);
    for &lambda in eigen.eigenvalues.iter() {
        if lambda.abs() <= thresh {
            sig.n_zero += 1;
        } else if lambda < 0.0 {
            sig.n_minus += 1;
        } else {
            sig.n_plus += 1;
        }
    }
    sig
}

/// Signature of a hermitian matrix: principal-minor criterion, falling back
/// to eigenvalue counts when a minor vanishes.
pub fn matrix_signature(g: &Matrix, eps: f64) -> Signature {
    sylvester_signature(g, eps).unwrap_or_else(|| eigen_signature(g, eps))
}

/// Least-squares coefficients of `target` in the columns of `basis`
/// (coordinate inner product), with the relative residual.
pub fn least_squares(basis: &[Vector], target: &Vector) -> Option<(Vector, f64)> {
    let a = columns(basis);
    let ah = a.adjoint();
    let normal = &ah * &a;
    let coeffs = normal.lu().solve(&(&ah * target))?;
    let residual = target - &a * &coeffs;
    let scale = coord_norm(target).max(f64::MIN_POSITIVE);
    Some((coeffs, coord_norm(&residual) / scale))
}
