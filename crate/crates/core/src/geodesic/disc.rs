//! The Poincaré and Beltrami-Klein disc charts of the hyperbolic plane.
//!
//! A Poincaré point `z` is the point `(1, z)` of `C` with form `diag(-1, 1)`;
//! a Klein point `(x, y)` is `(1, x, y)` of `R` with form `diag(-1, 1, 1)`.
//! The map between them doubles distances.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hermitian::{Field, HermitianSpace, MetricSign};
use crate::linalg::{re, Vector};
use crate::projective::ProjectivePoint;

fn check_disc(z: Complex64) -> Result<()> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::InvalidInput("non-finite disc coordinate".into()));
    }
    if z.norm() >= 1.0 {
        return Err(Error::Domain(format!(
            "|z| = {} is not inside the unit disc",
            z.norm()
        )));
    }
    Ok(())
}

/// `z -> 2z / (1 + |z|^2)`.
pub fn poincare_klein_map(z: Complex64) -> Result<Complex64> {
    check_disc(z)?;
    Ok(z * (2.0 / (1.0 + z.norm_sqr())))
}

/// `k -> k / (1 + sqrt(1 - |k|^2))`.
pub fn klein_poincare_map(k: Complex64) -> Result<Complex64> {
    check_disc(k)?;
    Ok(k / (1.0 + (1.0 - k.norm_sqr()).sqrt()))
}

/// `C` with form `diag(-1, 1)` and metric sign `-`.
pub fn poincare_space() -> HermitianSpace {
    HermitianSpace::diagonal(Field::Complex, &[-1.0, 1.0], MetricSign::Minus)
        .expect("constant gram matrix is valid")
}

/// `R` with form `diag(-1, 1, 1)` and metric sign `-`.
pub fn klein_space() -> HermitianSpace {
    HermitianSpace::diagonal(Field::Real, &[-1.0, 1.0, 1.0], MetricSign::Minus)
        .expect("constant gram matrix is valid")
}

pub fn poincare_point(z: Complex64) -> Result<ProjectivePoint> {
    check_disc(z)?;
    ProjectivePoint::new(&poincare_space(), Vector::from_vec(vec![re(1.0), z]))
}

pub fn klein_point(k: Complex64) -> Result<ProjectivePoint> {
    check_disc(k)?;
    ProjectivePoint::new(
        &klein_space(),
        Vector::from_vec(vec![re(1.0), re(k.re), re(k.im)]),
    )
}

/// Affine chart coordinate `x1 / x0` of a Poincaré-model point.
pub fn poincare_coordinate(p: &ProjectivePoint) -> Result<Complex64> {
    let r = p.rep();
    if r.len() != 2 || r[0].norm() == 0.0 {
        return Err(Error::Domain("point is not in the Poincaré chart".into()));
    }
    Ok(r[1] / r[0])
}

/// Affine chart coordinate `(x1 / x0, x2 / x0)` of a Klein-model point.
pub fn klein_coordinate(p: &ProjectivePoint) -> Result<Complex64> {
    let r = p.rep();
    if r.len() != 3 || r[0].norm() == 0.0 {
        return Err(Error::Domain("point is not in the Klein chart".into()));
    }
    Ok(Complex64::new((r[1] / r[0]).re, (r[2] / r[0]).re))
}
