//! Triangle invariants `(r1, r2, r3, eps)` and the laws they satisfy.
//!
//! Representatives are normalized to `<p_i,p_i> = s` (the vertex class) with
//! phases making `s<p1,p2> = r1` and `s<p2,p3> = r2` nonnegative; then
//! `s<p3,p1> = r3 eps`. Sides are `l_i = arccos r_i` or `arccosh r_i`, side
//! `i` joining `p_i` and `p_{i+1}`. Vertex indices are `0, 1, 2`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::geodesic::tangent_toward;
use crate::hermitian::{Field, HermitianSpace, MetricSign};
use crate::linalg::{self, re, Vector};
use crate::projective::{angle, classify_point, PointClass, ProjectivePoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    Spherical,
    Hyperbolic,
}

impl Regime {
    pub fn name(self) -> &'static str {
        match self {
            Regime::Spherical => "spherical",
            Regime::Hyperbolic => "hyperbolic",
        }
    }
}

/// Where a triangle lives, which fixes the curvature its laws see.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TriangleSpan {
    /// Vertices on one complex projective line: curvature `+-4`, the laws
    /// take doubled lengths `2 l_i`.
    ComplexLine,
    /// Vertices in a totally real plane: curvature `+-1`, lengths `l_i`.
    RealPlane,
    /// Neither; the laws of a constant-curvature surface do not apply.
    Generic,
}

impl TriangleSpan {
    /// Factor applied to side lengths inside the laws.
    pub fn length_factor(self) -> Option<f64> {
        match self {
            TriangleSpan::ComplexLine => Some(2.0),
            TriangleSpan::RealPlane => Some(1.0),
            TriangleSpan::Generic => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangleInvariants {
    pub r: [f64; 3],
    pub eps: Complex64,
    pub regime: Regime,
    pub span: TriangleSpan,
}

impl TriangleInvariants {
    /// Side lengths `l_i`.
    pub fn lengths(&self) -> [f64; 3] {
        self.r.map(|r| match self.regime {
            Regime::Spherical => r.clamp(0.0, 1.0).acos(),
            Regime::Hyperbolic => r.max(1.0).acosh(),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Law {
    Cos1Spherical,
    SinesSpherical,
    Cos1Hyperbolic,
    Cos2Hyperbolic,
    SinesHyperbolic,
}

impl Law {
    pub const ALL: [Law; 5] = [
        Law::Cos1Spherical,
        Law::SinesSpherical,
        Law::Cos1Hyperbolic,
        Law::Cos2Hyperbolic,
        Law::SinesHyperbolic,
    ];

    pub fn regime(self) -> Regime {
        match self {
            Law::Cos1Spherical | Law::SinesSpherical => Regime::Spherical,
            _ => Regime::Hyperbolic,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Law::Cos1Spherical => "cos1_spherical",
            Law::SinesSpherical => "sines_spherical",
            Law::Cos1Hyperbolic => "cos1_hyperbolic",
            Law::Cos2Hyperbolic => "cos2_hyperbolic",
            Law::SinesHyperbolic => "sines_hyperbolic",
        }
    }
}

fn vertex_sign(space: &HermitianSpace, vertices: [&ProjectivePoint; 3]) -> Result<f64> {
    let classes = vertices.map(|p| classify_point(space, p));
    if classes.contains(&PointClass::Isotropic) {
        return Err(Error::SingularPoint);
    }
    if classes[1] != classes[0] || classes[2] != classes[0] {
        return Err(Error::Regime("vertices of different classes".into()));
    }
    Ok(if classes[0] == PointClass::Negative {
        -1.0
    } else {
        1.0
    })
}

/// Normalized representatives of the three vertices.
fn normalized(
    space: &HermitianSpace,
    vertices: [&ProjectivePoint; 3],
) -> Result<(f64, [Vector; 3])> {
    let s = vertex_sign(space, vertices)?;
    for (i, j) in [(0, 1), (1, 2), (2, 0)] {
        let (a, b) = (vertices[i].rep(), vertices[j].rep());
        if space.form_is_zero(space.form_unchecked(a, b), a, b) {
            return Err(Error::DegenerateTriangle(format!(
                "vertices {i} and {j} are orthogonal"
            )));
        }
    }
    let mut reps = vertices.map(|p| p.rep() / re(space.square(p.rep()).abs().sqrt()));
    for (i, j) in [(0, 1), (1, 2)] {
        let ip = space.form_unchecked(&reps[i], &reps[j]) * s;
        // <a, k b> = conj(k) <a, b>, so k = phase of <a, b> makes it real.
        reps[j] = &reps[j] * (ip / ip.norm());
    }
    Ok((s, reps))
}

/// Reads off `(r1, r2, r3, eps)` for an ordered triple of vertices.
pub fn triangle_invariants(
    space: &HermitianSpace,
    p1: &ProjectivePoint,
    p2: &ProjectivePoint,
    p3: &ProjectivePoint,
) -> Result<TriangleInvariants> {
    let (s, reps) = normalized(space, [p1, p2, p3])?;
    let r1 = (space.form_unchecked(&reps[0], &reps[1]) * s).re;
    let r2 = (space.form_unchecked(&reps[1], &reps[2]) * s).re;
    let g31 = space.form_unchecked(&reps[2], &reps[0]) * s;
    let r3 = g31.norm();
    let r = [r1, r2, r3];
    let tol = space.tolerance();
    let regime = match space.metric_sign() {
        MetricSign::Plus => Regime::Spherical,
        MetricSign::Minus => Regime::Hyperbolic,
    };
    let in_range = match regime {
        Regime::Spherical => r.iter().all(|&x| x <= 1.0 + tol),
        Regime::Hyperbolic => r.iter().all(|&x| x >= 1.0 - tol),
    };
    if !in_range {
        return Err(Error::Regime(format!(
            "side tances {r:?} do not fit a {} triangle",
            regime.name()
        )));
    }
    let eps = g31 / r3;
    let rank = linalg::rank(&linalg::columns(&reps), tol);
    let span = if space.field() == Field::Real {
        TriangleSpan::RealPlane
    } else if rank <= 2 {
        TriangleSpan::ComplexLine
    } else if eps.im.abs() <= tol {
        TriangleSpan::RealPlane
    } else {
        TriangleSpan::Generic
    };
    Ok(TriangleInvariants {
        r,
        eps,
        regime,
        span,
    })
}

/// `1 + 2 r1 r2 r3 Re eps - r1^2 - r2^2 - r3^2`.
pub fn fundamental_identity_residual(t: &TriangleInvariants) -> f64 {
    let [r1, r2, r3] = t.r;
    1.0 + 2.0 * r1 * r2 * r3 * t.eps.re - r1 * r1 - r2 * r2 - r3 * r3
}

fn vertex_index(at: usize) -> Result<usize> {
    if at > 2 {
        return Err(Error::InvalidInput(format!(
            "vertex index {at} is not 0, 1 or 2"
        )));
    }
    Ok(at)
}

/// Angle at a vertex between the tangents toward its two neighbours.
pub fn interior_angle(
    space: &HermitianSpace,
    p1: &ProjectivePoint,
    p2: &ProjectivePoint,
    p3: &ProjectivePoint,
    at: usize,
) -> Result<f64> {
    let at = vertex_index(at)?;
    triangle_invariants(space, p1, p2, p3)?;
    let v = [p1, p2, p3];
    let here = v[at];
    let prev = tangent_toward(space, here, v[(at + 2) % 3])?;
    let next = tangent_toward(space, here, v[(at + 1) % 3])?;
    angle(space, &prev, &next)
}

/// Cosine of the angle at a vertex from the invariants alone:
/// `sigma (r_{i+1} Re eps - r_{i-1} r_i) / sqrt(|1 - r_{i-1}^2| |1 - r_i^2|)`.
pub fn interior_angle_cos_closed_form(t: &TriangleInvariants, at: usize) -> Result<f64> {
    let i = vertex_index(at)?;
    let (before, after, opposite) = (t.r[(i + 2) % 3], t.r[i], t.r[(i + 1) % 3]);
    let sigma = match t.regime {
        Regime::Spherical => 1.0,
        Regime::Hyperbolic => -1.0,
    };
    let denom = ((1.0 - before * before).abs() * (1.0 - after * after).abs()).sqrt();
    if denom == 0.0 {
        return Err(Error::DegenerateTriangle("a side has zero length".into()));
    }
    Ok(sigma * (opposite * t.eps.re - before * after) / denom)
}

/// Residual of a trigonometric law; for the laws of sines, the largest
/// pairwise difference of the three ratios.
pub fn law_check(t: &TriangleInvariants, angles: [f64; 3], law: Law) -> Result<f64> {
    if law.regime() != t.regime {
        return Err(Error::InvalidInput(format!(
            "{} does not apply to a {} triangle",
            law.name(),
            t.regime.name()
        )));
    }
    let factor = t.span.length_factor().ok_or_else(|| {
        Error::NotApplicable("vertices span neither a complex line nor a real plane".into())
    })?;
    let [l1, l2, l3] = t.lengths().map(|l| factor * l);
    let [a1, a2, a3] = angles;
    let ratios = |f: fn(f64) -> f64| -> Result<f64> {
        let den = [a3.sin(), a1.sin(), a2.sin()];
        if den.iter().any(|d| d.abs() < f64::EPSILON) {
            return Err(Error::InvalidInput(
                "laws of sines need angles strictly inside (0, pi)".into(),
            ));
        }
        let q = [f(l1) / den[0], f(l2) / den[1], f(l3) / den[2]];
        Ok((q[0] - q[1])
            .abs()
            .max((q[1] - q[2]).abs())
            .max((q[2] - q[0]).abs()))
    };
    match law {
        Law::Cos1Spherical => Ok(l3.cos() - (l1.cos() * l2.cos() + a2.cos() * l1.sin() * l2.sin())),
        Law::Cos1Hyperbolic => {
            Ok(l3.cosh() - (l1.cosh() * l2.cosh() - a2.cos() * l1.sinh() * l2.sinh()))
        }
        Law::Cos2Hyperbolic => Ok(a2.cos() + a1.cos() * a3.cos() - l3.cosh() * a1.sin() * a3.sin()),
        Law::SinesSpherical => ratios(f64::sin),
        Law::SinesHyperbolic => ratios(f64::sinh),
    }
}

/// Oriented area `arg(eps) / 2` of a spherical triangle on a complex line.
pub fn triangle_area_spherical(t: &TriangleInvariants) -> Result<f64> {
    if t.regime != Regime::Spherical || t.span != TriangleSpan::ComplexLine {
        return Err(Error::NotApplicable(
            "area from eps is defined for spherical triangles on a complex line".into(),
        ));
    }
    Ok(t.eps.arg() / 2.0)
}
