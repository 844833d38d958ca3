//! Points of the projectivization of a hermitian space, their tangent
//! vectors, and the tangent-space metric `±<p,p><v1,v2>`.
//!
//! Representatives are kept exactly as given. Quantities that only depend
//! on the point (class, projections, tance, angles) are invariant under
//! `rep -> k rep`; tangent vectors are tied to the stored representative.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::hermitian::{Field, HermitianSpace};
use crate::linalg::{self, coord_norm, Scalar, Vector};

#[derive(Debug, Clone, PartialEq)]
pub struct ProjectivePoint {
    rep: Vector,
}

impl ProjectivePoint {
    pub fn new(space: &HermitianSpace, rep: Vector) -> Result<Self> {
        space.check_vector(&rep)?;
        if coord_norm(&rep) == 0.0 {
            return Err(Error::InvalidInput("zero vector is not a point".into()));
        }
        Ok(ProjectivePoint { rep })
    }

    pub fn from_real(space: &HermitianSpace, coords: &[f64]) -> Result<Self> {
        Self::new(space, linalg::real_vector(coords))
    }

    pub fn from_complex(space: &HermitianSpace, coords: &[Scalar]) -> Result<Self> {
        Self::new(space, linalg::vector(coords))
    }

    pub fn rep(&self) -> &Vector {
        &self.rep
    }

    /// Same point with representative `k * rep`.
    pub fn rescaled(&self, k: Scalar) -> Self {
        ProjectivePoint { rep: &self.rep * k }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PointClass {
    Negative,
    Positive,
    Isotropic,
}

impl PointClass {
    pub fn name(self) -> &'static str {
        match self {
            PointClass::Negative => "negative",
            PointClass::Positive => "positive",
            PointClass::Isotropic => "isotropic",
        }
    }
}

/// Sign of `<p,p>`.
pub fn classify_point(space: &HermitianSpace, p: &ProjectivePoint) -> PointClass {
    let sq = space.form_unchecked(&p.rep, &p.rep);
    if space.form_is_zero(sq, &p.rep, &p.rep) {
        PointClass::Isotropic
    } else if sq.re < 0.0 {
        PointClass::Negative
    } else {
        PointClass::Positive
    }
}

pub(crate) fn require_nonisotropic(space: &HermitianSpace, p: &ProjectivePoint) -> Result<f64> {
    match classify_point(space, p) {
        PointClass::Isotropic => Err(Error::SingularPoint),
        _ => Ok(space.square(&p.rep)),
    }
}

/// Splits `v` as `(pi'[p] v, pi[p] v)`: the component along `p` and the
/// component orthogonal to `p`.
pub fn project_along(
    space: &HermitianSpace,
    p: &ProjectivePoint,
    v: &Vector,
) -> Result<(Vector, Vector)> {
    space.check_vector(v)?;
    let pp = require_nonisotropic(space, p)?;
    let along = &p.rep * (space.form_unchecked(v, &p.rep) / pp);
    let ortho = v - &along;
    Ok((along, ortho))
}

/// The tangent vector `<-, p> v` at a nonisotropic point, with `v` in `p^perp`.
#[derive(Debug, Clone, PartialEq)]
pub struct TangentVector {
    at: ProjectivePoint,
    dir: Vector,
}

impl TangentVector {
    pub fn new(space: &HermitianSpace, at: ProjectivePoint, dir: Vector) -> Result<Self> {
        space.check_vector(&dir)?;
        require_nonisotropic(space, &at)?;
        let ip = space.form_unchecked(&dir, &at.rep);
        if !space.form_is_zero(ip, &dir, &at.rep) {
            return Err(Error::InvalidInput(
                "tangent direction is not orthogonal to its base point".into(),
            ));
        }
        Ok(TangentVector { at, dir })
    }

    pub fn at(&self) -> &ProjectivePoint {
        &self.at
    }

    pub fn dir(&self) -> &Vector {
        &self.dir
    }

    /// The same tangent vector written against the representative
    /// `conj(k) * p`: the direction becomes `dir / k`.
    pub fn with_representative(&self, k: Scalar) -> Self {
        TangentVector {
            at: self.at.rescaled(k.conj()),
            dir: &self.dir / k,
        }
    }

    /// Multiplies the tangent vector itself by `k`.
    pub fn scaled(&self, k: Scalar) -> Self {
        TangentVector {
            at: self.at.clone(),
            dir: &self.dir * k,
        }
    }
}

/// `±<p,p><v1,v2>` for tangent vectors at the same stored representative.
pub fn metric(space: &HermitianSpace, t1: &TangentVector, t2: &TangentVector) -> Result<Scalar> {
    if t1.at.rep != t2.at.rep {
        return Err(Error::BaseMismatch);
    }
    let pp = space.square(&t1.at.rep);
    Ok(space.form_unchecked(&t1.dir, &t2.dir) * (space.metric_sign().value() * pp))
}

fn metric_square(space: &HermitianSpace, t: &TangentVector) -> Result<f64> {
    let sq = metric(space, t, t)?.re;
    let scale = space.square(&t.at.rep).abs() * space.form_scale(&t.dir, &t.dir);
    if space.is_zero(sq, scale) || sq < 0.0 {
        return Err(Error::IndefiniteDirection);
    }
    Ok(sq)
}

/// Nonoriented angle in `[0, pi]` between two definite tangent vectors.
pub fn angle(space: &HermitianSpace, t1: &TangentVector, t2: &TangentVector) -> Result<f64> {
    let m12 = metric(space, t1, t2)?;
    let n1 = metric_square(space, t1)?;
    let n2 = metric_square(space, t2)?;
    let cos = (m12.re / (n1.sqrt() * n2.sqrt())).clamp(-1.0, 1.0);
    Ok(cos.acos())
}

/// Oriented angle in `[0, 2 pi)` from `t1` to `t2`, defined when both lie
/// in one complex line of the tangent space.
pub fn oriented_angle(
    space: &HermitianSpace,
    t1: &TangentVector,
    t2: &TangentVector,
) -> Result<f64> {
    if space.field() == Field::Real {
        return Err(Error::NotApplicable(
            "oriented angle needs a complex field".into(),
        ));
    }
    if t1.at.rep != t2.at.rep {
        return Err(Error::BaseMismatch);
    }
    metric_square(space, t1)?;
    metric_square(space, t2)?;
    let (_, residual) = linalg::least_squares(std::slice::from_ref(&t1.dir), &t2.dir)
        .ok_or(Error::IndefiniteDirection)?;
    if residual > space.tolerance() {
        return Err(Error::NotApplicable(
            "tangent vectors do not span a complex line".into(),
        ));
    }
    let arg = metric(space, t2, t1)?.arg();
    let wrapped = if arg < 0.0 { arg + 2.0 * PI } else { arg };
    Ok(if wrapped >= 2.0 * PI { 0.0 } else { wrapped })
}

/// A line of the real projective plane, stored by its coefficient vector.
#[derive(Debug, Clone, PartialEq)]
pub struct Line {
    coeffs: [f64; 3],
}

impl Line {
    pub fn new(coeffs: [f64; 3]) -> Result<Self> {
        if coeffs.iter().all(|c| *c == 0.0) {
            return Err(Error::InvalidInput("zero line coefficients".into()));
        }
        Ok(Line { coeffs })
    }

    pub fn coeffs(&self) -> [f64; 3] {
        self.coeffs
    }

    /// Incidence with a point, up to a relative tolerance.
    pub fn contains(&self, p: &ProjectivePoint, tol: f64) -> bool {
        match real3(p.rep()) {
            Ok(x) => dot(&self.coeffs, &x).abs() <= tol * norm(&self.coeffs) * norm(&x),
            Err(_) => false,
        }
    }
}

fn real3(v: &Vector) -> Result<[f64; 3]> {
    if v.len() != 3 || v.iter().any(|z| z.im != 0.0) {
        return Err(Error::InvalidInput(
            "incidence needs real points of a projective plane".into(),
        ));
    }
    Ok([v[0].re, v[1].re, v[2].re])
}

fn cross(a: &[f64; 3], b: &[f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn dot(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn norm(a: &[f64; 3]) -> f64 {
    dot(a, a).sqrt()
}

const INCIDENCE_TOL: f64 = 1e-12;

/// The line through two distinct points of the real projective plane.
pub fn join(p: &ProjectivePoint, q: &ProjectivePoint) -> Result<Line> {
    let (a, b) = (real3(p.rep())?, real3(q.rep())?);
    let c = cross(&a, &b);
    if norm(&c) <= INCIDENCE_TOL * norm(&a) * norm(&b) {
        return Err(Error::Coincident);
    }
    Ok(Line { coeffs: c })
}

/// The intersection point of two distinct lines.
pub fn meet(space: &HermitianSpace, l1: &Line, l2: &Line) -> Result<ProjectivePoint> {
    let c = cross(&l1.coeffs, &l2.coeffs);
    if norm(&c) <= INCIDENCE_TOL * norm(&l1.coeffs) * norm(&l2.coeffs) {
        return Err(Error::Coincident);
    }
    ProjectivePoint::from_real(space, &c)
}
