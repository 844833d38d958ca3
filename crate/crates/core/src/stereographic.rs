//! The unit sphere `S^n` in Euclidean `(n+1)`-space, stereographic
//! projection `q -> (q + p)/(1 + <q,p>) - p` from `-p` onto `p^perp`, its
//! inverse, its differential, and the images of subspheres.

use crate::error::{Error, Result};
use crate::hermitian::{Field, HermitianSpace, MetricSign};
use crate::linalg::{coord_norm, re, real_vector, Vector};

/// Norm tolerance for points of the sphere.
pub const UNIT_TOLERANCE: f64 = 1e-12;

/// `S^n`, carried by a real positive-definite space of dimension `n + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Sphere {
    space: HermitianSpace,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpherePoint {
    coords: Vector,
}

/// Image of a subsphere under projection from a point.
#[derive(Debug, Clone, PartialEq)]
pub enum SubsphereImage {
    /// `{v in p^perp : <normal, v> = offset}`.
    Affine { normal: Vector, offset: f64 },
    /// `{v in p^perp : |v - center| = radius}`.
    Sphere { center: Vector, radius: f64 },
}

impl Sphere {
    /// The sphere of dimension `n >= 1`.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput(
                "sphere dimension must be at least 1".into(),
            ));
        }
        let space = HermitianSpace::diagonal(Field::Real, &vec![1.0; n + 1], MetricSign::Plus)?;
        Ok(Sphere { space })
    }

    pub fn dim(&self) -> usize {
        self.space.dim() - 1
    }

    pub fn space(&self) -> &HermitianSpace {
        &self.space
    }

    fn dot(&self, a: &Vector, b: &Vector) -> f64 {
        self.space.form_unchecked(a, b).re
    }

    pub fn point(&self, coords: &[f64]) -> Result<SpherePoint> {
        let v = real_vector(coords);
        self.space.check_vector(&v)?;
        if (coord_norm(&v) - 1.0).abs() > UNIT_TOLERANCE {
            return Err(Error::InvalidInput(format!(
                "point has norm {}, not 1",
                coord_norm(&v)
            )));
        }
        Ok(SpherePoint { coords: v })
    }

    /// The point `coords / |coords|`.
    pub fn normalized_point(&self, coords: &[f64]) -> Result<SpherePoint> {
        let v = real_vector(coords);
        self.space.check_vector(&v)?;
        let n = coord_norm(&v);
        if n == 0.0 {
            return Err(Error::InvalidInput("zero vector has no direction".into()));
        }
        Ok(SpherePoint { coords: v / re(n) })
    }

    fn check_in(&self, v: &Vector, normal: &SpherePoint, what: &str) -> Result<()> {
        self.space.check_vector(v)?;
        let along = self.dot(v, &normal.coords);
        if along.abs() > self.space.tolerance() * (1.0 + coord_norm(v)) {
            return Err(Error::InvalidInput(format!(
                "{what} is not orthogonal to the point"
            )));
        }
        Ok(())
    }

    fn denominator(&self, p: &SpherePoint, q: &SpherePoint) -> Result<f64> {
        let d = 1.0 + self.dot(&q.coords, &p.coords);
        if d <= self.space.tolerance() {
            return Err(Error::Pole);
        }
        Ok(d)
    }
}

impl SpherePoint {
    pub fn coords(&self) -> &Vector {
        &self.coords
    }

    pub fn antipode(&self) -> SpherePoint {
        SpherePoint {
            coords: -&self.coords,
        }
    }
}

/// `(q + p)/(1 + <q,p>) - p`, a vector of `p^perp`.
pub fn stereo(sphere: &Sphere, p: &SpherePoint, q: &SpherePoint) -> Result<Vector> {
    let d = sphere.denominator(p, q)?;
    Ok((&q.coords + &p.coords) / re(d) - &p.coords)
}

/// `2(v + p)/(1 + <v,v>) - p` for `v` in `p^perp`.
pub fn stereo_inverse(sphere: &Sphere, p: &SpherePoint, v: &Vector) -> Result<SpherePoint> {
    sphere.check_in(v, p, "vector")?;
    let scale = 2.0 / (1.0 + sphere.dot(v, v));
    Ok(SpherePoint {
        coords: (v + &p.coords) * re(scale) - &p.coords,
    })
}

/// `1 / (1 + <q,p>)^2`, the factor by which the differential of the
/// projection at `q` scales inner products.
pub fn conformal_factor(sphere: &Sphere, p: &SpherePoint, q: &SpherePoint) -> Result<f64> {
    let d = sphere.denominator(p, q)?;
    Ok(1.0 / (d * d))
}

/// Image of a tangent vector `v` in `q^perp` under the differential at `q`.
pub fn pushforward(
    sphere: &Sphere,
    p: &SpherePoint,
    q: &SpherePoint,
    v: &Vector,
) -> Result<Vector> {
    sphere.check_in(v, q, "tangent vector")?;
    let d = sphere.denominator(p, q)?;
    let vp = sphere.dot(v, &p.coords);
    Ok((v * re(d) - (&q.coords + &p.coords) * re(vp)) / re(d * d))
}

/// Image of the subsphere `{q : f(q) = eps}` under projection from `p`.
///
/// Writing `a = eps + f(p)` and `phi` for `f` restricted to `p^perp`, the image
/// satisfies `a |v|^2 - 2 phi(v) + eps - f(p) = 0`.
pub fn subsphere_image(
    sphere: &Sphere,
    p: &SpherePoint,
    f: &[f64],
    eps: f64,
) -> Result<SubsphereImage> {
    if eps != 0.0 && eps != 1.0 {
        return Err(Error::InvalidInput("subsphere level must be 0 or 1".into()));
    }
    let fv = real_vector(f);
    sphere.space.check_vector(&fv)?;
    let norm = coord_norm(&fv);
    let tol = sphere.space.tolerance();
    if norm <= tol {
        return Err(Error::InvalidInput("subsphere covector is zero".into()));
    }
    if norm < eps - tol {
        return Err(Error::EmptySubsphere);
    }
    let fp = sphere.dot(&fv, &p.coords);
    let phi = &fv - &p.coords * re(fp);
    let a = eps + fp;
    let c = eps - fp;
    if a.abs() <= tol * (1.0 + norm) {
        if coord_norm(&phi) <= tol * (1.0 + norm) {
            // The subsphere is the single point -p.
            return Err(Error::Pole);
        }
        return Ok(SubsphereImage::Affine {
            normal: phi,
            offset: c / 2.0,
        });
    }
    let center = &phi / re(a);
    let r2 = sphere.dot(&center, &center) - c / a;
    Ok(SubsphereImage::Sphere {
        center,
        radius: r2.max(0.0).sqrt(),
    })
}
