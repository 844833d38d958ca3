//! Geodesics as real planes `W` on which the form is real, tance and the
//! distances it determines, geodesic lifts, and the duality of the real
//! projective plane of signature `-++`.

pub mod disc;

use crate::error::{Error, Result};
use crate::hermitian::{Field, HermitianSpace, MetricSign, Signature, Subspace};
use crate::linalg::{self, coord_norm, re, Matrix, Scalar, Vector};
use crate::projective::{
    classify_point, project_along, require_nonisotropic, PointClass, ProjectivePoint, TangentVector,
};

/// A geodesic, given by a real basis `w1, w2` of its plane `W`.
#[derive(Debug, Clone, PartialEq)]
pub struct Geodesic {
    w1: Vector,
    w2: Vector,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GeodesicClass {
    Spherical,
    Hyperbolic,
    Degenerate,
}

impl GeodesicClass {
    pub fn name(self) -> &'static str {
        match self {
            GeodesicClass::Spherical => "spherical",
            GeodesicClass::Hyperbolic => "hyperbolic",
            GeodesicClass::Degenerate => "degenerate",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DistanceKind {
    Spherical,
    Hyperbolic,
}

/// Outcome of the tance form of the triangle inequality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TriangleInequality {
    Strict,
    Equality,
    Violated,
}

/// Stacks the real and imaginary parts of a vector into one real vector.
fn realify(v: &Vector) -> Vector {
    let n = v.len();
    Vector::from_fn(
        2 * n,
        |i, _| if i < n { re(v[i].re) } else { re(v[i - n].im) },
    )
}

fn unit(v: &Vector) -> Vector {
    v / re(coord_norm(v))
}

impl Geodesic {
    pub fn new(space: &HermitianSpace, w1: Vector, w2: Vector) -> Result<Self> {
        space.check_vector(&w1)?;
        space.check_vector(&w2)?;
        let real_span = linalg::columns(&[realify(&w1), realify(&w2)]);
        if linalg::rank(&real_span, space.tolerance()) < 2 {
            return Err(Error::NotAGeodesic("spanning vectors are dependent".into()));
        }
        let g = Geodesic { w1, w2 };
        let (u1, u2) = (unit(&g.w1), unit(&g.w2));
        let cross = space.form_unchecked(&u1, &u2);
        if !space.is_zero(cross.im, space.form_scale(&u1, &u2)) {
            return Err(Error::NotAGeodesic("form is not real on the span".into()));
        }
        if g.normalized_gram(space)
            .iter()
            .all(|x| space.is_zero(*x, space.scale()))
        {
            return Err(Error::NotAGeodesic("form vanishes on the span".into()));
        }
        Ok(g)
    }

    pub fn span(&self) -> (&Vector, &Vector) {
        (&self.w1, &self.w2)
    }

    /// Real Gram matrix of the coordinate-normalized spanning vectors.
    fn normalized_gram(&self, space: &HermitianSpace) -> [f64; 3] {
        let (u1, u2) = (unit(&self.w1), unit(&self.w2));
        [
            space.square(&u1),
            space.form_unchecked(&u1, &u2).re,
            space.square(&u2),
        ]
    }

    /// Whether `p` lies on the geodesic.
    pub fn contains(&self, space: &HermitianSpace, p: &ProjectivePoint) -> bool {
        lift_into(space, self, p).is_ok()
    }
}

/// Classifies `W` by the signature of the restricted form.
pub fn classify(space: &HermitianSpace, g: &Geodesic) -> GeodesicClass {
    let [a, b, c] = g.normalized_gram(space);
    let m = Matrix::from_row_slice(2, 2, &[re(a), re(b), re(b), re(c)]);
    let sig = linalg::matrix_signature(&m, space.tolerance());
    if sig.n_zero > 0 {
        GeodesicClass::Degenerate
    } else if sig.n_minus == 1 {
        GeodesicClass::Hyperbolic
    } else {
        GeodesicClass::Spherical
    }
}

fn proportional(space: &HermitianSpace, a: &Vector, b: &Vector) -> bool {
    linalg::rank(&linalg::columns(&[a.clone(), b.clone()]), space.tolerance()) < 2
}

/// The geodesic `R p1 + R <p1,p2> p2` through two non-orthogonal points.
pub fn geodesic_through(
    space: &HermitianSpace,
    p1: &ProjectivePoint,
    p2: &ProjectivePoint,
) -> Result<Geodesic> {
    let (a, b) = (p1.rep(), p2.rep());
    if proportional(space, a, b) {
        return Err(Error::Coincident);
    }
    let ip = space.form_unchecked(a, b);
    if space.form_is_zero(ip, a, b) {
        return Err(Error::NoUniqueGeodesic);
    }
    Geodesic::new(space, a.clone(), b * ip)
}

/// The geodesic `R p + R t` through a point in a nonzero tangent direction.
pub fn geodesic_from_tangent(
    space: &HermitianSpace,
    p: &ProjectivePoint,
    t: &TangentVector,
) -> Result<Geodesic> {
    require_nonisotropic(space, p)?;
    if t.at().rep() != p.rep() {
        return Err(Error::BaseMismatch);
    }
    if coord_norm(t.dir()) <= space.tolerance() * coord_norm(p.rep()) {
        return Err(Error::InvalidInput("zero tangent vector".into()));
    }
    Geodesic::new(space, p.rep().clone(), t.dir().clone())
}

/// The tangent vector at `p1` of the geodesic toward `p2`:
/// `pi[p1] p2 / <p2, p1>`.
pub fn tangent_toward(
    space: &HermitianSpace,
    p1: &ProjectivePoint,
    p2: &ProjectivePoint,
) -> Result<TangentVector> {
    require_nonisotropic(space, p1)?;
    let (a, b) = (p1.rep(), p2.rep());
    if proportional(space, a, b) {
        return Err(Error::Coincident);
    }
    let ip = space.form_unchecked(b, a);
    if space.form_is_zero(ip, a, b) {
        return Err(Error::NoUniqueGeodesic);
    }
    let (_, ortho) = project_along(space, p1, b)?;
    TangentVector::new(space, p1.clone(), ortho / ip)
}

/// The two isotropic points `p +- q` of a hyperbolic geodesic, where
/// `p, q` is an orthonormal basis of `W` with `<p,p> = -1`.
pub fn vertices(
    space: &HermitianSpace,
    g: &Geodesic,
) -> Result<(ProjectivePoint, ProjectivePoint)> {
    if classify(space, g) != GeodesicClass::Hyperbolic {
        return Err(Error::NotApplicable(
            "only hyperbolic geodesics have vertices".into(),
        ));
    }
    let basis = space.orthonormal_basis(&[g.w1.clone(), g.w2.clone()])?;
    let (p, q) = (&basis.vectors[0], &basis.vectors[1]);
    Ok((
        ProjectivePoint::new(space, p + q)?,
        ProjectivePoint::new(space, p - q)?,
    ))
}

/// `|<p1,p2>|^2 / (<p1,p1><p2,p2>)`.
pub fn tance(space: &HermitianSpace, p1: &ProjectivePoint, p2: &ProjectivePoint) -> Result<f64> {
    let a = require_nonisotropic(space, p1)?;
    let b = require_nonisotropic(space, p2)?;
    Ok(space.form_unchecked(p1.rep(), p2.rep()).norm_sqr() / (a * b))
}

/// `arccos sqrt(ta)` or `arccosh sqrt(ta)`; tances within the tolerance of
/// the admissible range are clamped onto it.
pub fn distance(
    space: &HermitianSpace,
    p1: &ProjectivePoint,
    p2: &ProjectivePoint,
    kind: DistanceKind,
) -> Result<f64> {
    let ta = tance(space, p1, p2)?;
    if classify_point(space, p1) != classify_point(space, p2) {
        return Err(Error::Regime("points of different classes".into()));
    }
    let tol = space.tolerance();
    match kind {
        DistanceKind::Spherical => {
            if !(-tol..=1.0 + tol).contains(&ta) {
                return Err(Error::Regime(format!("tance {ta} outside [0, 1]")));
            }
            Ok(ta.clamp(0.0, 1.0).sqrt().acos())
        }
        DistanceKind::Hyperbolic => {
            if ta < 1.0 - tol {
                return Err(Error::Regime(format!("tance {ta} below 1")));
            }
            Ok(ta.max(1.0).sqrt().acosh())
        }
    }
}

/// The representative of `p` lying in `W`.
pub fn lift_into(space: &HermitianSpace, g: &Geodesic, p: &ProjectivePoint) -> Result<Vector> {
    let basis = [g.w1.clone(), g.w2.clone()];
    let (c, residual) = linalg::least_squares(&basis, p.rep()).ok_or(Error::NotOnGeodesic)?;
    if residual > space.tolerance() {
        return Err(Error::NotOnGeodesic);
    }
    let lead = if c[0].norm() >= c[1].norm() {
        c[0]
    } else {
        c[1]
    };
    let phase = lead / lead.norm();
    let (a, b) = (c[0] / phase, c[1] / phase);
    if (a.im.abs() + b.im.abs()) > space.tolerance() * (a.norm() + b.norm()) {
        return Err(Error::NotOnGeodesic);
    }
    Ok(&g.w1 * re(a.re) + &g.w2 * re(b.re))
}

/// Unit-speed parametrization `c0(t) = p cos t + q sin t` (spherical) or
/// `p cosh t + q sinh t` (hyperbolic) of a geodesic through a point.
#[derive(Debug, Clone, PartialEq)]
pub struct GeodesicLift {
    pub base: Vector,
    pub partner: Vector,
    pub class: GeodesicClass,
}

impl GeodesicLift {
    pub fn point_at(&self, t: f64) -> Vector {
        let (c, s) = match self.class {
            GeodesicClass::Hyperbolic => (t.cosh(), t.sinh()),
            _ => (t.cos(), t.sin()),
        };
        &self.base * re(c) + &self.partner * re(s)
    }
}

/// The lift of `g` starting at `p1`. The positive direction is the one in
/// which the second spanning vector (or the first, when `p1` is the second)
/// is reached.
pub fn lift_curve(
    space: &HermitianSpace,
    g: &Geodesic,
    p1: &ProjectivePoint,
) -> Result<GeodesicLift> {
    let class = classify(space, g);
    if class == GeodesicClass::Degenerate {
        return Err(Error::NotApplicable(
            "degenerate geodesics have no lift".into(),
        ));
    }
    require_nonisotropic(space, p1)?;
    let w = lift_into(space, g, p1)?;
    let s = space.square(&w).signum();
    let base = &w / re(space.square(&w).abs().sqrt());
    let reference = if proportional(space, &w, &g.w2) {
        &g.w1
    } else {
        &g.w2
    };
    let along = space.form_unchecked(reference, &base).re * s;
    let q = reference - &base * re(along);
    let sq = space.square(&q);
    let expected = if class == GeodesicClass::Spherical {
        s
    } else {
        -s
    };
    if space.is_zero(sq, space.form_scale(&q, &q)) || sq.signum() != expected {
        return Err(Error::Regime(
            "geodesic plane has the wrong signature".into(),
        ));
    }
    let mut partner = &q / re(sq.abs().sqrt());
    let across = space.form_unchecked(reference, &partner).re * sq.signum();
    if along * across < 0.0 {
        partner = -partner;
    }
    Ok(GeodesicLift {
        base,
        partner,
        class,
    })
}

/// The point at arc parameter `arc` along `g` from `p1`.
pub fn geodesic_lift(
    space: &HermitianSpace,
    g: &Geodesic,
    p1: &ProjectivePoint,
    arc: f64,
) -> Result<ProjectivePoint> {
    let lift = lift_curve(space, g, p1)?;
    ProjectivePoint::new(space, lift.point_at(arc))
}

/// Whether two spanning pairs describe the same geodesic, i.e. `W1 = k W2`.
pub fn same_geodesic(space: &HermitianSpace, g1: &Geodesic, g2: &Geodesic) -> Result<bool> {
    let p = ProjectivePoint::new(space, g1.w1.clone())?;
    let x = match lift_into(space, g2, &p) {
        Ok(x) => x,
        Err(Error::NotOnGeodesic) => return Ok(false),
        Err(e) => return Err(e),
    };
    let k = x.dotc(&g1.w1) / x.dotc(&x);
    let moved = realify(&(&g1.w2 / k));
    let basis = [realify(&g2.w1), realify(&g2.w2)];
    let (_, residual) = linalg::least_squares(&basis, &moved).ok_or(Error::NotOnGeodesic)?;
    Ok(residual <= space.tolerance())
}

/// Tance form of the hyperbolic triangle inequality for three negative
/// points: `r1^2 + r2^2 + r3^2 <= 2 r1 r2 r3 + 1`.
pub fn triangle_tance_inequality(
    space: &HermitianSpace,
    p1: &ProjectivePoint,
    p2: &ProjectivePoint,
    p3: &ProjectivePoint,
) -> Result<TriangleInequality> {
    require_real_hyperbolic(space)?;
    let mut reps = Vec::with_capacity(3);
    for p in [p1, p2, p3] {
        if classify_point(space, p) != PointClass::Negative {
            return Err(Error::Regime("triangle vertices must be negative".into()));
        }
        let sq = space.square(p.rep());
        reps.push(p.rep() / re((-sq).sqrt()));
    }
    let r = |a: &Vector, b: &Vector| -space.form_unchecked(a, b).re;
    if r(&reps[0], &reps[1]) < 0.0 {
        reps[1] = -&reps[1];
    }
    if r(&reps[1], &reps[2]) < 0.0 {
        reps[2] = -&reps[2];
    }
    let (r1, r2, r3) = (
        r(&reps[0], &reps[1]),
        r(&reps[1], &reps[2]),
        r(&reps[2], &reps[0]),
    );
    let excess = r1 * r1 + r2 * r2 + r3 * r3 - 2.0 * r1 * r2 * r3 - 1.0;
    let tol = space.tolerance() * (1.0 + r1 * r1 + r2 * r2 + r3 * r3);
    Ok(if excess.abs() <= tol {
        TriangleInequality::Equality
    } else if excess < 0.0 {
        TriangleInequality::Strict
    } else {
        TriangleInequality::Violated
    })
}

fn require_real_hyperbolic(space: &HermitianSpace) -> Result<()> {
    let sig = space.signature();
    if space.field() != Field::Real
        || space.metric_sign() != MetricSign::Minus
        || sig.n_minus != 1
        || sig.n_zero != 0
    {
        return Err(Error::Regime(
            "needs a real space of signature (1,0,n) with metric sign -".into(),
        ));
    }
    Ok(())
}

fn require_klein_plane(space: &HermitianSpace) -> Result<()> {
    if space.field() != Field::Real || space.signature() != Signature::new(1, 0, 2) {
        return Err(Error::Regime(
            "duality needs a real space of signature (1,0,2)".into(),
        ));
    }
    Ok(())
}

/// The geodesic `p^perp` dual to a point of the plane.
pub fn dual(space: &HermitianSpace, p: &ProjectivePoint) -> Result<Geodesic> {
    require_klein_plane(space)?;
    let sub = Subspace::new(space, vec![p.rep().clone()])?;
    let perp = space.orthogonal_complement(&sub)?;
    let b = perp.basis();
    Geodesic::new(space, b[0].clone(), b[1].clone())
}

/// The point `W^perp` dual to a geodesic of the plane.
pub fn dual_of_geodesic(space: &HermitianSpace, g: &Geodesic) -> Result<ProjectivePoint> {
    require_klein_plane(space)?;
    let sub = Subspace::new(space, vec![g.w1.clone(), g.w2.clone()])?;
    let perp = space.orthogonal_complement(&sub)?;
    ProjectivePoint::new(space, perp.basis()[0].clone())
}

/// Scalar `<p1, p2>` for callers that need the raw pairing.
pub fn pairing(space: &HermitianSpace, p1: &ProjectivePoint, p2: &ProjectivePoint) -> Scalar {
    space.form_unchecked(p1.rep(), p2.rep())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermitian::scalar;
    use crate::projective::angle;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn sp(field: Field, d: &[f64], sign: MetricSign) -> HermitianSpace {
        HermitianSpace::diagonal(field, d, sign).unwrap()
    }

    fn pt(space: &HermitianSpace, c: &[f64]) -> ProjectivePoint {
        ProjectivePoint::from_real(space, c).unwrap()
    }

    fn cpt(space: &HermitianSpace, c: &[Scalar]) -> ProjectivePoint {
        ProjectivePoint::from_complex(space, c).unwrap()
    }

    #[test]
    fn geodesic_through_examples() {
        let s = sp(Field::Complex, &[1.0, 1.0], MetricSign::Plus);
        let g = geodesic_through(
            &s,
            &pt(&s, &[1.0, 0.0]),
            &cpt(&s, &[re(1.0), scalar(0.0, 1.0)]),
        )
        .unwrap();
        assert_eq!(classify(&s, &g), GeodesicClass::Spherical);

        let s = sp(Field::Real, &[-1.0, 1.0, 1.0], MetricSign::Minus);
        let g = geodesic_through(&s, &pt(&s, &[1.0, 0.0, 0.0]), &pt(&s, &[1.0, 0.5, 0.0])).unwrap();
        assert_eq!(classify(&s, &g), GeodesicClass::Hyperbolic);
        let (v1, v2) = vertices(&s, &g).unwrap();
        let on_axis = |p: &ProjectivePoint| {
            let v = p.rep();
            (v[2].norm() < 1e-12) && ((v[1].re / v[0].re).abs() - 1.0).abs() < 1e-12
        };
        assert!(on_axis(&v1) && on_axis(&v2));
        assert!((v1.rep()[1].re / v1.rep()[0].re + v2.rep()[1].re / v2.rep()[0].re).abs() < 1e-12);
    }

    #[test]
    fn geodesic_through_orthogonal_points_is_not_unique() {
        let s = sp(Field::Complex, &[1.0, 1.0], MetricSign::Plus);
        assert_eq!(
            geodesic_through(&s, &pt(&s, &[1.0, 0.0]), &pt(&s, &[0.0, 1.0])),
            Err(Error::NoUniqueGeodesic)
        );
        assert_eq!(
            geodesic_through(&s, &pt(&s, &[1.0, 0.0]), &pt(&s, &[2.0, 0.0])),
            Err(Error::Coincident)
        );
    }

    #[test]
    fn classification_examples() {
        let s = sp(Field::Real, &[-1.0, 1.0, 1.0], MetricSign::Minus);
        let v = |c: &[f64]| linalg::real_vector(c);
        let g = Geodesic::new(&s, v(&[1.0, 0.0, 0.0]), v(&[0.0, 1.0, 0.0])).unwrap();
        assert_eq!(classify(&s, &g), GeodesicClass::Hyperbolic);
        let g = Geodesic::new(&s, v(&[0.0, 1.0, 0.0]), v(&[0.0, 0.0, 1.0])).unwrap();
        assert_eq!(classify(&s, &g), GeodesicClass::Spherical);
        let g = Geodesic::new(&s, v(&[1.0, 1.0, 0.0]), v(&[0.0, 0.0, 1.0])).unwrap();
        assert_eq!(classify(&s, &g), GeodesicClass::Degenerate);
    }

    #[test]
    fn non_real_span_is_rejected() {
        let s = sp(Field::Complex, &[1.0, 1.0], MetricSign::Plus);
        let r = Geodesic::new(
            &s,
            linalg::real_vector(&[1.0, 0.0]),
            linalg::vector(&[scalar(0.0, 1.0), re(1.0)]),
        );
        assert!(matches!(r, Err(Error::NotAGeodesic(_))));
    }

    #[test]
    fn whole_hyperbolic_line_vertices() {
        let s = sp(Field::Real, &[-1.0, 1.0], MetricSign::Minus);
        let v = |c: &[f64]| linalg::real_vector(c);
        let g = Geodesic::new(&s, v(&[1.0, 0.0]), v(&[0.0, 1.0])).unwrap();
        let (a, b) = vertices(&s, &g).unwrap();
        let slopes = [a.rep()[1].re / a.rep()[0].re, b.rep()[1].re / b.rep()[0].re];
        assert!(slopes.contains(&1.0) && slopes.contains(&-1.0));
    }

    #[test]
    fn tance_and_distance_examples() {
        let s = sp(Field::Complex, &[1.0, 1.0], MetricSign::Plus);
        let (a, b) = (pt(&s, &[1.0, 0.0]), pt(&s, &[1.0, 1.0]));
        assert!((tance(&s, &a, &b).unwrap() - 0.5).abs() < 1e-15);
        let d = distance(&s, &a, &b, DistanceKind::Spherical).unwrap();
        assert!((d - PI / 4.0).abs() < 1e-12);
        let c = pt(&s, &[0.0, 1.0]);
        assert_eq!(tance(&s, &a, &c).unwrap(), 0.0);
        assert!((distance(&s, &a, &c, DistanceKind::Spherical).unwrap() - FRAC_PI_2).abs() < 1e-15);

        let s = sp(Field::Complex, &[-1.0, 1.0], MetricSign::Minus);
        let (a, b) = (pt(&s, &[1.0, 0.0]), pt(&s, &[1.0, 0.5]));
        assert!((tance(&s, &a, &b).unwrap() - 1.0 / 0.75).abs() < 1e-12);
        let d = distance(&s, &a, &b, DistanceKind::Hyperbolic).unwrap();
        assert!((d - 0.549_306_144_3).abs() < 1e-9);

        let s = sp(Field::Real, &[-1.0, 1.0, 1.0], MetricSign::Minus);
        let d = distance(
            &s,
            &pt(&s, &[1.0, 0.0, 0.0]),
            &pt(&s, &[1.0, 0.5, 0.0]),
            DistanceKind::Hyperbolic,
        )
        .unwrap();
        assert!((d - 0.5 * 3.0_f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn distance_rejects_isotropic_and_wrong_regime() {
        let s = sp(Field::Real, &[-1.0, 1.0], MetricSign::Minus);
        assert_eq!(
            tance(&s, &pt(&s, &[1.0, 1.0]), &pt(&s, &[1.0, 0.0])),
            Err(Error::SingularPoint)
        );
        let r = distance(
            &s,
            &pt(&s, &[1.0, 0.0]),
            &pt(&s, &[1.0, 0.5]),
            DistanceKind::Spherical,
        );
        assert!(matches!(r, Err(Error::Regime(_))));
    }

    #[test]
    fn lift_reaches_second_point() {
        let s = sp(Field::Real, &[-1.0, 1.0, 1.0], MetricSign::Minus);
        let (a, b) = (pt(&s, &[1.0, 0.0, 0.0]), pt(&s, &[1.0, 0.3, 0.4]));
        let g = geodesic_through(&s, &a, &b).unwrap();
        let d = distance(&s, &a, &b, DistanceKind::Hyperbolic).unwrap();
        let reached = geodesic_lift(&s, &g, &a, d).unwrap();
        assert!(tance(&s, &reached, &b).unwrap() - 1.0 < 1e-12);
        let r = reached.rep();
        assert!((r[1].re / r[0].re - 0.3).abs() < 1e-12 && (r[2].re / r[0].re - 0.4).abs() < 1e-12);

        let s = sp(Field::Complex, &[1.0, 1.0], MetricSign::Plus);
        let a = pt(&s, &[1.0, 0.0]);
        let b = cpt(&s, &[re(1.0), scalar(0.0, 1.0)]);
        let g = geodesic_through(&s, &a, &b).unwrap();
        let reached = geodesic_lift(&s, &g, &a, PI / 4.0).unwrap();
        assert!((tance(&s, &reached, &b).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn lift_of_tangent_geodesic_moves_along_tangent() {
        let s = sp(Field::Real, &[-1.0, 1.0, 1.0], MetricSign::Minus);
        let p = pt(&s, &[1.0, 0.0, 0.0]);
        let t = TangentVector::new(&s, p.clone(), linalg::real_vector(&[0.0, 0.0, 2.0])).unwrap();
        let g = geodesic_from_tangent(&s, &p, &t).unwrap();
        let q = geodesic_lift(&s, &g, &p, 1.0).unwrap();
        let r = q.rep();
        assert!(r[1].norm() < 1e-15);
        assert!((r[2].re / r[0].re - 1.0_f64.tanh()).abs() < 1e-12);
    }

    #[test]
    fn tangent_toward_is_tangent_to_the_geodesic() {
        let s = sp(Field::Complex, &[-1.0, 1.0, 1.0], MetricSign::Minus);
        let a = pt(&s, &[1.0, 0.0, 0.0]);
        let b = cpt(&s, &[re(1.0), scalar(0.1, 0.2), scalar(-0.3, 0.1)]);
        let t = tangent_toward(&s, &a, &b).unwrap();
        let g = geodesic_from_tangent(&s, &a, &t).unwrap();
        assert!(g.contains(&s, &b));
        assert!(same_geodesic(&s, &g, &geodesic_through(&s, &a, &b).unwrap()).unwrap());
        assert_eq!(angle(&s, &t, &t).unwrap(), 0.0);
    }

    #[test]
    fn same_geodesic_detects_rescaling() {
        let s = sp(Field::Complex, &[-1.0, 1.0, 1.0], MetricSign::Minus);
        let v = |c: &[Scalar]| linalg::vector(c);
        let g = Geodesic::new(
            &s,
            v(&[re(1.0), re(0.0), re(0.0)]),
            v(&[re(0.0), re(1.0), re(0.0)]),
        )
        .unwrap();
        let k = scalar(0.6, 0.8);
        let h = Geodesic::new(
            &s,
            v(&[re(2.0), re(1.0), re(0.0)]) * k,
            v(&[re(1.0), re(-1.0), re(0.0)]) * k,
        )
        .unwrap();
        assert!(same_geodesic(&s, &g, &h).unwrap());
        let other = Geodesic::new(
            &s,
            v(&[re(1.0), re(0.0), re(0.0)]),
            v(&[re(0.0), scalar(0.0, 1.0), re(0.0)]),
        )
        .unwrap();
        assert!(!same_geodesic(&s, &g, &other).unwrap());
    }

    #[test]
    fn triangle_inequality_examples() {
        let s = sp(Field::Real, &[-1.0, 1.0, 1.0], MetricSign::Minus);
        let p = |x: f64, y: f64| pt(&s, &[1.0, x, y]);
        let o = p(0.0, 0.0);
        assert_eq!(
            triangle_tance_inequality(&s, &o, &p(0.3, 0.0), &p(0.7, 0.0)).unwrap(),
            TriangleInequality::Equality
        );
        assert_eq!(
            triangle_tance_inequality(&s, &o, &p(0.5, 0.0), &p(0.0, 0.5)).unwrap(),
            TriangleInequality::Strict
        );
        let r = triangle_tance_inequality(&s, &o, &p(2.0, 0.0), &p(0.0, 0.5));
        assert!(matches!(r, Err(Error::Regime(_))));
    }

    #[test]
    fn duality_examples() {
        let s = sp(Field::Real, &[-1.0, 1.0, 1.0], MetricSign::Minus);
        let g = dual(&s, &pt(&s, &[0.0, 1.0, 0.0])).unwrap();
        assert_eq!(classify(&s, &g), GeodesicClass::Hyperbolic);
        assert!(g.contains(&s, &pt(&s, &[1.0, 0.0, 0.0])));
        assert!(g.contains(&s, &pt(&s, &[0.0, 0.0, 1.0])));
        let g = dual(&s, &pt(&s, &[1.0, 0.0, 0.0])).unwrap();
        assert_eq!(classify(&s, &g), GeodesicClass::Spherical);
        let g = dual(&s, &pt(&s, &[1.0, 1.0, 0.0])).unwrap();
        assert_eq!(classify(&s, &g), GeodesicClass::Degenerate);
        let back = dual_of_geodesic(&s, &dual(&s, &pt(&s, &[0.2, 1.0, -0.5])).unwrap()).unwrap();
        let r = back.rep();
        assert!((r[0].re / r[1].re - 0.2).abs() < 1e-12 && (r[2].re / r[1].re + 0.5).abs() < 1e-12);
    }

    #[test]
    fn duality_needs_the_klein_plane() {
        let s = sp(Field::Real, &[1.0, 1.0, 1.0], MetricSign::Plus);
        assert!(matches!(
            dual(&s, &pt(&s, &[1.0, 0.0, 0.0])),
            Err(Error::Regime(_))
        ));
    }
}
