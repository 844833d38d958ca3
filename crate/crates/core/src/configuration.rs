//! Finite configurations of vectors, compared through their Gram matrices,
//! and the construction of a form-preserving map carrying one onto another.

use crate::error::{Error, Result};
use crate::hermitian::{HermitianSpace, Subspace};
use crate::linalg::{self, coord_norm, max_abs, Matrix, Vector};

/// Tolerance of the entrywise Gram comparison, relative to the largest entry.
pub const GRAM_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq)]
pub struct Configuration {
    points: Vec<Vector>,
}

impl Configuration {
    pub fn new(space: &HermitianSpace, points: Vec<Vector>) -> Result<Self> {
        for p in &points {
            space.check_vector(p)?;
            if coord_norm(p) == 0.0 {
                return Err(Error::InvalidInput(
                    "configuration contains a zero vector".into(),
                ));
            }
        }
        Ok(Configuration { points })
    }

    pub fn points(&self) -> &[Vector] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The configuration `g w_1, ..., g w_k`.
    pub fn mapped(&self, g: &Matrix) -> Configuration {
        Configuration {
            points: self.points.iter().map(|p| g * p).collect(),
        }
    }
}

/// `g_ij = <w_i, w_j>`.
pub fn config_gram(space: &HermitianSpace, c: &Configuration) -> Matrix {
    space.gram_of(&c.points)
}

/// Indices of a maximal independent subset, chosen greedily in order.
fn independent_indices(space: &HermitianSpace, points: &[Vector]) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    for i in 0..points.len() {
        let mut cols: Vec<Vector> = chosen.iter().map(|&j| points[j].clone()).collect();
        cols.push(points[i].clone());
        if linalg::rank(&linalg::columns(&cols), space.tolerance()) == cols.len() {
            chosen.push(i);
        }
    }
    chosen
}

fn span(space: &HermitianSpace, c: &Configuration) -> Result<Subspace> {
    let idx = independent_indices(space, &c.points);
    let w = Subspace::new(space, idx.iter().map(|&i| c.points[i].clone()).collect())?;
    if !space.is_nondegenerate_subspace(&w)? {
        return Err(Error::DegenerateSpan);
    }
    Ok(w)
}

fn grams_agree(g1: &Matrix, g2: &Matrix) -> bool {
    let scale = max_abs(g1).max(max_abs(g2));
    g1.iter()
        .zip(g2.iter())
        .all(|(a, b)| (a - b).norm() <= GRAM_TOLERANCE * scale)
}

/// Whether some form-preserving map carries `c1` onto `c2`, decided by
/// Gram equality. Both spans must be nondegenerate.
pub fn geometrically_equal(
    space: &HermitianSpace,
    c1: &Configuration,
    c2: &Configuration,
) -> Result<bool> {
    span(space, c1)?;
    span(space, c2)?;
    if c1.len() != c2.len() {
        return Ok(false);
    }
    Ok(grams_agree(
        &config_gram(space, c1),
        &config_gram(space, c2),
    ))
}

/// A linear map `g` with `g w_i = w'_i` and `g^T G conj(g) = G`.
///
/// `g` is `l` on the span and `l'` on its orthogonal complement, where `l'`
/// matches orthonormal bases of the two complements ordered negative first,
/// each equal-sign block rotated to keep `g` small.
pub fn witness_unitary(
    space: &HermitianSpace,
    c1: &Configuration,
    c2: &Configuration,
) -> Result<Matrix> {
    if !geometrically_equal(space, c1, c2)? {
        return Err(Error::NotGeometricallyEqual);
    }
    let idx = independent_indices(space, &c1.points);
    let w1: Vec<Vector> = idx.iter().map(|&i| c1.points[i].clone()).collect();
    let w2: Vec<Vector> = idx.iter().map(|&i| c2.points[i].clone()).collect();
    let sub1 = Subspace::new(space, w1.clone())?;
    let sub2 = Subspace::new(space, w2.clone()).map_err(|_| Error::NotGeometricallyEqual)?;

    let perp1 = space.orthogonal_complement(&sub1)?;
    let perp2 = space.orthogonal_complement(&sub2)?;
    let ortho1 = space.orthonormal_basis(perp1.basis())?;
    let ortho2 = space.orthonormal_basis(perp2.basis())?;
    if ortho1.signs != ortho2.signs {
        return Err(Error::NotGeometricallyEqual);
    }

    let k = w1.len();
    let source = linalg::columns(&[w1, ortho1.vectors].concat());
    let inverse = source.try_inverse().ok_or(Error::NotGeometricallyEqual)?;
    let on_span = linalg::columns(&w2) * inverse.rows(0, k);
    if ortho2.vectors.is_empty() {
        return Ok(on_span);
    }
    let coeffs = inverse.rows(k, inverse.nrows() - k).into_owned();
    let plain = linalg::columns(&ortho2.vectors);
    let aligned = align_complement(&plain, &ortho2.signs, &coeffs, &on_span);
    let candidates = [&on_span + &plain * &coeffs, &on_span + aligned * &coeffs];
    Ok(candidates
        .into_iter()
        .min_by(|a, b| a.norm().total_cmp(&b.norm()))
        .expect("two candidates"))
}

/// Rotates each equal-sign block of the complement basis `o` by the unitary
/// that minimizes the linear part of `|x + o q b|_F`.
fn align_complement(o: &Matrix, signs: &[i8], b: &Matrix, x: &Matrix) -> Matrix {
    let mut out = o.clone();
    let mut lo = 0;
    while lo < signs.len() {
        let hi = lo + signs[lo..].iter().take_while(|&&s| s == signs[lo]).count();
        let ob = o.columns(lo, hi - lo);
        let m = -(b.rows(lo, hi - lo) * x.adjoint() * ob);
        let svd = m.svd(true, true);
        if let (Some(u), Some(v_t)) = (svd.u, svd.v_t) {
            let q = v_t.adjoint() * u.adjoint();
            out.columns_mut(lo, hi - lo).copy_from(&(ob * q));
        }
        lo = hi;
    }
    out
}

/// Largest entry of `g^T G conj(g) - G`.
pub fn form_defect(space: &HermitianSpace, g: &Matrix) -> f64 {
    let pulled = g.transpose() * space.gram() * g.map(|z| z.conj());
    max_abs(&(pulled - space.gram()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermitian::{Field, MetricSign};
    use crate::linalg::real_vector;

    fn euclid() -> HermitianSpace {
        HermitianSpace::diagonal(Field::Real, &[1.0, 1.0], MetricSign::Plus).unwrap()
    }

    fn conf(s: &HermitianSpace, pts: &[&[f64]]) -> Configuration {
        Configuration::new(s, pts.iter().map(|p| real_vector(p)).collect()).unwrap()
    }

    #[test]
    fn gram_examples() {
        let s =
            HermitianSpace::diagonal(Field::Real, &[-1.0, 1.0, 1.0], MetricSign::Minus).unwrap();
        let g = config_gram(&s, &conf(&s, &[&[1.0, 0.0, 0.0], &[1.0, 1.0, 0.0]]));
        let expected = Matrix::from_row_slice(2, 2, &[-1.0, -1.0, -1.0, 0.0].map(linalg::re));
        assert_eq!(g, expected);
        let g = config_gram(&s, &conf(&s, &[&[1.0, 0.0, 0.0]]));
        assert_eq!(g[(0, 0)], linalg::re(-1.0));
    }

    #[test]
    fn equality_examples() {
        let s = euclid();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert!(
            !geometrically_equal(&s, &conf(&s, &[&[1.0, 0.0]]), &conf(&s, &[&[2.0, 0.0]])).unwrap()
        );
        let c1 = conf(&s, &[&[1.0, 0.0], &[0.0, 1.0]]);
        let c2 = conf(&s, &[&[h, h], &[h, -h]]);
        assert!(geometrically_equal(&s, &c1, &c2).unwrap());
    }

    #[test]
    fn witness_examples() {
        let s = euclid();
        let c = conf(&s, &[&[1.0, 2.0]]);
        let g = witness_unitary(&s, &c, &c).unwrap();
        assert!(form_defect(&s, &g) < 1e-12);
        assert!((&g * &c.points()[0] - &c.points()[0]).norm() < 1e-12);

        let (c1, c2) = (conf(&s, &[&[1.0, 0.0]]), conf(&s, &[&[0.0, 1.0]]));
        let g = witness_unitary(&s, &c1, &c2).unwrap();
        assert!(form_defect(&s, &g) < 1e-12);
        assert!((&g * &c1.points()[0] - &c2.points()[0]).norm() < 1e-12);

        let c3 = conf(&s, &[&[2.0, 0.0]]);
        assert_eq!(
            witness_unitary(&s, &c1, &c3),
            Err(Error::NotGeometricallyEqual)
        );
    }

    #[test]
    fn self_witness_is_identity_near_degenerate_span() {
        let s = HermitianSpace::diagonal(Field::Real, &[-1.0, 1.0, 1.0, 1.0], MetricSign::Minus)
            .unwrap();
        let c = conf(&s, &[&[1.0, 1.0 + 1e-3, 0.0, 0.0], &[0.0, 0.0, 1.0, 0.0]]);
        let g = witness_unitary(&s, &c, &c).unwrap();
        let id = Matrix::identity(4, 4);
        assert!(max_abs(&(g - id)) < 1e-9);
    }

    #[test]
    fn degenerate_span_is_rejected() {
        let s =
            HermitianSpace::diagonal(Field::Real, &[-1.0, 1.0, 1.0], MetricSign::Minus).unwrap();
        let c = conf(&s, &[&[1.0, 1.0, 0.0]]);
        assert_eq!(geometrically_equal(&s, &c, &c), Err(Error::DegenerateSpan));
    }
}
