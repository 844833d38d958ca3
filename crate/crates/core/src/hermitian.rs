//! Finite-dimensional spaces over R or C equipped with a hermitian form.
//!
//! A space is described by the Gram matrix `G` of its ambient basis, and the
//! form is evaluated as `<v, w> = v^t G conj(w)`: linear in the first
//! argument, conjugate-linear in the second.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{self, max_abs, max_abs_vec, Matrix, Scalar, Vector};

/// Default relative tolerance of the zero predicate.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Real,
    Complex,
}

/// The sign in front of the tangent-space metric `±<p,p><v1,v2>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MetricSign {
    Plus,
    Minus,
}

impl MetricSign {
    pub fn value(self) -> f64 {
        match self {
            MetricSign::Plus => 1.0,
            MetricSign::Minus => -1.0,
        }
    }

    pub fn from_value(v: i64) -> Option<Self> {
        match v {
            1 => Some(MetricSign::Plus),
            -1 => Some(MetricSign::Minus),
            _ => None,
        }
    }
}

/// Counts `(n-, n0, n+)` of an orthonormal basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Signature {
    pub n_minus: usize,
    pub n_zero: usize,
    pub n_plus: usize,
}

impl Signature {
    pub const fn new(n_minus: usize, n_zero: usize, n_plus: usize) -> Self {
        Signature {
            n_minus,
            n_zero,
            n_plus,
        }
    }

    pub fn dim(&self) -> usize {
        self.n_minus + self.n_zero + self.n_plus
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.n_zero == 0
    }

    /// Whether a space of this signature has a subspace of signature `sub`.
    pub fn contains(&self, sub: &Signature) -> bool {
        contains_signature(self, sub)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.n_minus, self.n_zero, self.n_plus)
    }
}

/// Decides whether a space of signature `ambient` contains a subspace of
/// signature `sub`.
///
/// The kernel of the subspace has to be assembled from isotropic vectors of
/// hyperbolic pairs left unused by its definite part, plus the ambient kernel.
pub fn contains_signature(ambient: &Signature, sub: &Signature) -> bool {
    sub.n_minus <= ambient.n_minus
        && sub.n_plus <= ambient.n_plus
        && sub.n_minus + sub.n_zero <= ambient.n_minus + ambient.n_zero
        && sub.n_zero + sub.n_plus <= ambient.n_zero + ambient.n_plus
}

/// A subspace stored as an explicit list of independent vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct Subspace {
    basis: Vec<Vector>,
}

impl Subspace {
    pub fn new(space: &HermitianSpace, basis: Vec<Vector>) -> Result<Self> {
        for v in &basis {
            space.check_vector(v)?;
        }
        if linalg::rank(&linalg::columns(&basis), space.tolerance()) != basis.len() {
            return Err(Error::LinearlyDependent);
        }
        Ok(Subspace { basis })
    }

    pub fn zero() -> Self {
        Subspace { basis: Vec::new() }
    }

    pub fn whole(space: &HermitianSpace) -> Self {
        Subspace {
            basis: space.standard_basis(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// Membership test by rank.
    pub fn contains(&self, space: &HermitianSpace, v: &Vector) -> bool {
        let mut cols = self.basis.clone();
        cols.push(v.clone());
        linalg::rank(&linalg::columns(&cols), space.tolerance()) == self.basis.len()
    }
}

/// An orthonormal basis with the sign of each vector's square.
#[derive(Debug, Clone)]
pub struct OrthonormalBasis {
    pub vectors: Vec<Vector>,
    pub signs: Vec<i8>,
}

impl OrthonormalBasis {
    pub fn signature(&self) -> Signature {
        let count = |s: i8| self.signs.iter().filter(|&&x| x == s).count();
        Signature::new(count(-1), count(0), count(1))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct HermitianSpace {
    field: Field,
    gram: Matrix,
    metric_sign: MetricSign,
    tolerance: f64,
}

impl HermitianSpace {
    /// Validates and wraps a Gram matrix.
    ///
    /// The matrix must be square, nonempty and equal to its conjugate
    /// transpose exactly as stored. Over R the imaginary parts must vanish.
    pub fn new(field: Field, gram: Matrix, metric_sign: MetricSign) -> Result<Self> {
        if gram.nrows() == 0 || gram.nrows() != gram.ncols() {
            return Err(Error::InvalidInput(
                "gram matrix must be square and nonempty".into(),
            ));
        }
        if gram.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidInput(
                "gram matrix has non-finite entries".into(),
            ));
        }
        if field == Field::Real && gram.iter().any(|z| z.im != 0.0) {
            return Err(Error::InvalidInput(
                "real-field gram matrix has imaginary entries".into(),
            ));
        }
        if gram != gram.adjoint() {
            return Err(Error::NotHermitian);
        }
        Ok(HermitianSpace {
            field,
            gram,
            metric_sign,
            tolerance: DEFAULT_TOLERANCE,
        })
    }

    /// A space whose ambient basis is orthogonal with the given squares.
    pub fn diagonal(field: Field, squares: &[f64], metric_sign: MetricSign) -> Result<Self> {
        let gram = Matrix::from_diagonal(&linalg::real_vector(squares));
        Self::new(field, gram, metric_sign)
    }

    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = tolerance;
        self
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.gram.nrows()
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn metric_sign(&self) -> MetricSign {
        self.metric_sign
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    /// Largest modulus among the Gram entries.
    pub fn scale(&self) -> f64 {
        max_abs(&self.gram)
    }

    pub fn standard_basis(&self) -> Vec<Vector> {
        let n = self.dim();
        (0..n)
            .map(|i| {
                let mut v = Vector::zeros(n);
                v[i] = linalg::re(1.0);
                v
            })
            .collect()
    }

    pub fn check_vector(&self, v: &Vector) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            });
        }
        if v.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidInput(
                "vector has non-finite coordinates".into(),
            ));
        }
        if self.field == Field::Real {
            let bound = self.tolerance * (1.0 + max_abs_vec(v));
            if v.iter().any(|z| z.im.abs() > bound) {
                return Err(Error::InvalidInput(
                    "complex coordinates in a real-field space".into(),
                ));
            }
        }
        Ok(())
    }

    /// Validated vector from coordinates.
    pub fn vector(&self, coords: &[Scalar]) -> Result<Vector> {
        let v = linalg::vector(coords);
        self.check_vector(&v)?;
        Ok(v)
    }

    /// `<v, w> = v^t G conj(w)`.
    pub fn form(&self, v: &Vector, w: &Vector) -> Result<Scalar> {
        self.check_vector(v)?;
        self.check_vector(w)?;
        Ok(self.form_unchecked(v, w))
    }

    pub(crate) fn form_unchecked(&self, v: &Vector, w: &Vector) -> Scalar {
        let gw = &self.gram * w.map(|z| z.conj());
        v.iter().zip(gw.iter()).map(|(a, b)| a * b).sum()
    }

    /// Real value `<v, v>`.
    pub(crate) fn square(&self, v: &Vector) -> f64 {
        self.form_unchecked(v, v).re
    }

    /// The zero predicate: `|x| <= eps (1 + scale)`.
    pub fn is_zero(&self, x: f64, scale: f64) -> bool {
        x.abs() <= self.tolerance * (1.0 + scale)
    }

    /// Magnitude against which a form value `<v, w>` is judged.
    pub(crate) fn form_scale(&self, v: &Vector, w: &Vector) -> f64 {
        self.scale() * max_abs_vec(v) * max_abs_vec(w) * self.dim() as f64
    }

    /// Zero test for a form value, scaled by the vectors it came from.
    pub fn form_is_zero(&self, value: Scalar, v: &Vector, w: &Vector) -> bool {
        self.is_zero(value.norm(), self.form_scale(v, w))
    }

    /// Gram matrix `g_ij = <v_i, v_j>` of a tuple.
    pub fn gram_of(&self, vectors: &[Vector]) -> Matrix {
        let k = vectors.len();
        Matrix::from_fn(k, k, |i, j| self.form_unchecked(&vectors[i], &vectors[j]))
    }

    /// Basis of `{v : <v, W> = 0}`.
    pub fn orthogonal_complement(&self, w: &Subspace) -> Result<Subspace> {
        for v in w.basis() {
            self.check_vector(v)?;
        }
        let n = self.dim();
        let mut rows = Matrix::zeros(w.dim(), n);
        for (j, wj) in w.basis().iter().enumerate() {
            let g_conj_w = &self.gram * wj.map(|z| z.conj());
            rows.row_mut(j).copy_from(&g_conj_w.transpose());
        }
        Ok(Subspace {
            basis: linalg::nullspace(&rows, self.tolerance),
        })
    }

    /// The kernel `V^perp` of the form.
    pub fn kernel(&self) -> Subspace {
        self.orthogonal_complement(&Subspace::whole(self))
            .expect("standard basis always matches the space")
    }

    /// Orthonormalizes a nondegenerate flag.
    ///
    /// Stage `k` subtracts the components of `flag[k]` along the vectors
    /// already produced and normalizes the remainder to square `±1`. The
    /// square of the remainder is `det G_k / det G_(k-1)`; when it vanishes
    /// the leading span is degenerate and `DegenerateFlag { k }` is returned
    /// (1-based).
    pub fn gram_schmidt(&self, flag: &[Vector]) -> Result<Vec<Vector>> {
        for v in flag {
            self.check_vector(v)?;
        }
        if linalg::rank(&linalg::columns(flag), self.tolerance) != flag.len() {
            return Err(Error::LinearlyDependent);
        }
        let scale = max_abs(&self.gram_of(flag));
        let mut out: Vec<Vector> = Vec::with_capacity(flag.len());
        let mut squares: Vec<f64> = Vec::with_capacity(flag.len());
        for (k, c) in flag.iter().enumerate() {
            let mut rest = c.clone();
            for (b, &sq) in out.iter().zip(&squares) {
                let coeff = self.form_unchecked(c, b) / sq;
                rest -= b * coeff;
            }
            let sq = self.square(&rest);
            if self.is_zero(sq, scale) {
                return Err(Error::DegenerateFlag { k: k + 1 });
            }
            out.push(rest.unscale(sq.abs().sqrt()));
            squares.push(sq.signum());
        }
        Ok(out)
    }

    /// Reorders and, when needed, recombines `vectors` into a nondegenerate
    /// flag spanning the same subspace.
    ///
    /// At each stage the candidate with the largest projected square is
    /// taken. If every remaining candidate is isotropic modulo the current
    /// span but two of them pair nontrivially, their combination
    /// `a + k b` with `k = <a,b>/|<a,b>|` is used instead.
    pub fn nondegenerate_flag(&self, vectors: &[Vector]) -> Result<Vec<Vector>> {
        let pivoted = self.pivoted_orthogonalization(vectors)?;
        if pivoted.null.is_empty() {
            Ok(pivoted.flag)
        } else {
            Err(Error::DegenerateFlag {
                k: pivoted.flag.len() + 1,
            })
        }
    }

    /// Orthonormal basis of the span of `vectors`, ordered negative, null,
    /// positive. Works for degenerate spans: the null part is a basis of the
    /// kernel of the induced form.
    pub fn orthonormal_basis(&self, vectors: &[Vector]) -> Result<OrthonormalBasis> {
        let pivoted = self.pivoted_orthogonalization(vectors)?;
        let mut tagged: Vec<(i8, Vector)> = pivoted
            .ortho
            .into_iter()
            .map(|(v, s)| (s, v))
            .chain(pivoted.null.into_iter().map(|v| (0, v)))
            .collect();
        tagged.sort_by_key(|(s, _)| *s);
        Ok(OrthonormalBasis {
            signs: tagged.iter().map(|(s, _)| *s).collect(),
            vectors: tagged.into_iter().map(|(_, v)| v).collect(),
        })
    }

    fn pivoted_orthogonalization(&self, vectors: &[Vector]) -> Result<Pivoted> {
        for v in vectors {
            self.check_vector(v)?;
        }
        if linalg::rank(&linalg::columns(vectors), self.tolerance) != vectors.len() {
            return Err(Error::LinearlyDependent);
        }
        let scale = max_abs(&self.gram_of(vectors));
        let mut remaining: Vec<Vector> = vectors.to_vec();
        let mut flag = Vec::new();
        let mut ortho: Vec<(Vector, i8)> = Vec::new();

        while !remaining.is_empty() {
            let projected: Vec<Vector> = remaining
                .iter()
                .map(|r| {
                    let mut p = r.clone();
                    for (b, s) in &ortho {
                        let coeff = self.form_unchecked(r, b) / f64::from(*s);
                        p -= b * coeff;
                    }
                    p
                })
                .collect();

            let (best, best_sq) = projected.iter().map(|p| self.square(p)).enumerate().fold(
                (0, 0.0_f64),
                |acc, (i, sq)| {
                    if sq.abs() > acc.1.abs() {
                        (i, sq)
                    } else {
                        acc
                    }
                },
            );
            if !self.is_zero(best_sq, scale) {
                flag.push(remaining.remove(best));
                let p = &projected[best];
                ortho.push((p.unscale(best_sq.abs().sqrt()), best_sq.signum() as i8));
                continue;
            }

            let mut pair = None;
            let mut pair_abs = 0.0;
            for i in 0..projected.len() {
                for j in (i + 1)..projected.len() {
                    let ip = self.form_unchecked(&projected[i], &projected[j]);
                    if ip.norm() > pair_abs {
                        pair_abs = ip.norm();
                        pair = Some((i, j, ip));
                    }
                }
            }
            match pair {
                Some((i, j, ip)) if !self.is_zero(pair_abs, scale) => {
                    let k = ip / ip.norm();
                    let combined = &remaining[i] + &remaining[j] * k;
                    remaining[i] = combined;
                }
                _ => {
                    return Ok(Pivoted {
                        flag,
                        ortho,
                        null: projected,
                    })
                }
            }
        }
        Ok(Pivoted {
            flag,
            ortho,
            null: Vec::new(),
        })
    }

    /// Signature of the form on the whole space.
    pub fn signature(&self) -> Signature {
        linalg::matrix_signature(&self.gram, self.tolerance)
    }

    /// Signature of the induced form on `w`.
    pub fn subspace_signature(&self, w: &Subspace) -> Result<Signature> {
        for v in w.basis() {
            self.check_vector(v)?;
        }
        Ok(linalg::matrix_signature(
            &self.gram_of(w.basis()),
            self.tolerance,
        ))
    }

    /// Whether `w` is nondegenerate under the induced form.
    pub fn is_nondegenerate_subspace(&self, w: &Subspace) -> Result<bool> {
        Ok(self.subspace_signature(w)?.is_nondegenerate())
    }
}

struct Pivoted {
    flag: Vec<Vector>,
    ortho: Vec<(Vector, i8)>,
    null: Vec<Vector>,
}

/// Complex scalar constructor re-exported for convenience.
pub fn scalar(re: f64, im: f64) -> Scalar {
    Complex64::new(re, im)
}
