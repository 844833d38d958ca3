mod common;

use common::*;
use tance::linalg::{re, real_vector};
use tance::{
    angle, classify_point, join, meet, metric, project_along, tance as tance_of, Field, Line,
    PointClass, ProjectivePoint, TangentVector,
};

fn tangent_at(
    rng: &mut rand_chacha::ChaCha8Rng,
    s: &tance::HermitianSpace,
    p: &ProjectivePoint,
) -> TangentVector {
    let v = rand_vector(rng, s.field(), s.dim());
    let (_, ortho) = project_along(s, p, &v).unwrap();
    TangentVector::new(s, p.clone(), ortho).unwrap()
}

#[test]
fn representative_invariance() {
    let mut rng = rng(10);
    let spaces = [complex_hyperbolic(), fubini_study(2), real_hyperbolic(3)];
    for trial in 0..600 {
        let s = &spaces[trial % 3];
        let class = if s.metric_sign() == tance::MetricSign::Minus {
            PointClass::Negative
        } else {
            PointClass::Positive
        };
        let p = rand_point(&mut rng, s, class);
        let q = rand_point(&mut rng, s, class);
        let (t1, t2) = (tangent_at(&mut rng, s, &p), tangent_at(&mut rng, s, &p));
        let k = rand_nonzero_scalar(&mut rng, s.field());
        let (u1, u2) = (t1.with_representative(k), t2.with_representative(k));

        assert_eq!(classify_point(s, &p), classify_point(s, u1.at()));
        let (m, mk) = (metric(s, &t1, &t2).unwrap(), metric(s, &u1, &u2).unwrap());
        assert!((m - mk).norm() < 1e-9 * (1.0 + m.norm()));
        let (a, ak) = (angle(s, &t1, &t2).unwrap(), angle(s, &u1, &u2).unwrap());
        assert!((a - ak).abs() < 1e-9);

        let k2 = rand_nonzero_scalar(&mut rng, s.field());
        let ta = tance_of(s, &p, &q).unwrap();
        let tak = tance_of(s, u1.at(), &q.rescaled(k2)).unwrap();
        assert!((ta - tak).abs() < 1e-9 * (1.0 + ta));
    }
}

#[test]
fn projection_decomposes() {
    let mut rng = rng(11);
    for trial in 0..500 {
        let field = if trial % 2 == 0 {
            Field::Real
        } else {
            Field::Complex
        };
        let s = space(field, &[-1.0, 1.0, 1.0, 1.0], tance::MetricSign::Minus);
        let class = if trial % 4 < 2 {
            PointClass::Negative
        } else {
            PointClass::Positive
        };
        let p = rand_point(&mut rng, &s, class);
        let v = rand_vector(&mut rng, field, 4);
        let (along, ortho) = project_along(&s, &p, &v).unwrap();
        assert!((&along + &ortho - &v).norm() < 1e-12 * (1.0 + v.norm()));
        let cross = s.form(&ortho, p.rep()).unwrap();
        assert!(cross.norm() < 1e-9 * (1.0 + v.norm() * p.rep().norm()));
    }
}

#[test]
fn metric_is_hermitian_and_sesquilinear() {
    let mut rng = rng(12);
    let s = complex_hyperbolic();
    for _ in 0..300 {
        let p = rand_point(&mut rng, &s, PointClass::Negative);
        let (t1, t2, t3) = (
            tangent_at(&mut rng, &s, &p),
            tangent_at(&mut rng, &s, &p),
            tangent_at(&mut rng, &s, &p),
        );
        let k = rand_scalar(&mut rng, Field::Complex);
        let m = |a: &TangentVector, b: &TangentVector| metric(&s, a, b).unwrap();
        assert!((m(&t1, &t2) - m(&t2, &t1).conj()).norm() < 1e-10);
        let combo = TangentVector::new(&s, p.clone(), t1.dir() * k + t3.dir()).unwrap();
        let lhs = m(&combo, &t2);
        let rhs = m(&t1, &t2) * k + m(&t3, &t2);
        assert!((lhs - rhs).norm() < 1e-9 * (1.0 + lhs.norm()));
        assert!(
            (m(&t2, &t1.scaled(k)) - m(&t2, &t1) * k.conj()).norm() < 1e-9 * (1.0 + lhs.norm())
        );
    }
}

fn plane() -> tance::HermitianSpace {
    space(Field::Real, &[1.0, 1.0, 1.0], tance::MetricSign::Plus)
}

fn affine(s: &tance::HermitianSpace, x: f64, y: f64) -> ProjectivePoint {
    ProjectivePoint::from_real(s, &[x, y, 1.0]).unwrap()
}

fn on_line(l: &Line, p: &ProjectivePoint) -> bool {
    l.contains(p, 1e-9)
}

#[test]
fn incidence_duality() {
    let mut rng = rng(13);
    let s = plane();
    for _ in 0..500 {
        let pts: Vec<ProjectivePoint> = (0..3)
            .map(|_| ProjectivePoint::new(&s, rand_vector(&mut rng, Field::Real, 3)).unwrap())
            .collect();
        let (lq, lr) = (
            join(&pts[0], &pts[1]).unwrap(),
            join(&pts[0], &pts[2]).unwrap(),
        );
        let Ok(back) = meet(&s, &lq, &lr) else {
            continue;
        };
        let cross = back.rep().cross(pts[0].rep()).norm();
        assert!(cross < 1e-9 * back.rep().norm() * pts[0].rep().norm());
    }
}

/// Ruler-only construction of a point `q` on the parallel to `r1, r2`
/// through `p`, using two auxiliary lines through `p`.
fn parallel_point(
    s: &tance::HermitianSpace,
    r1: &Line,
    r2: &Line,
    p: &ProjectivePoint,
    l1: &Line,
    l2: &Line,
) -> tance::Result<ProjectivePoint> {
    let (q11, q12) = (meet(s, r1, l1)?, meet(s, r1, l2)?);
    let (q21, q22) = (meet(s, r2, l1)?, meet(s, r2, l2)?);
    let d = meet(s, &join(&q11, &q22)?, &join(&q12, &q21)?)?;
    let l = join(p, &d)?;
    let (q1, q2) = (meet(s, r1, &l)?, meet(s, r2, &l)?);
    meet(s, &join(&q1, &q22)?, &join(&q11, &q2)?)
}

#[test]
fn ruler_construction_of_a_parallel() {
    let mut rng = rng(14);
    let s = plane();
    let infinity = Line::new([0.0, 0.0, 1.0]).unwrap();
    let mut checked = 0;
    while checked < 500 {
        let mut u = || rand::Rng::random_range(&mut rng, -3.0..3.0);
        let (a, b, c1, c2) = (u(), u(), u(), u());
        let (r1, r2) = (
            Line::new([a, b, c1]).unwrap(),
            Line::new([a, b, c2]).unwrap(),
        );
        let p = affine(&s, u(), u());
        let (x1, y1, x2, y2) = (u(), u(), u(), u());
        if (c1 - c2).abs() < 0.1 || on_line(&r1, &p) || on_line(&r2, &p) {
            continue;
        }
        let (Ok(l1), Ok(l2)) = (join(&p, &affine(&s, x1, y1)), join(&p, &affine(&s, x2, y2)))
        else {
            continue;
        };
        let Ok(q) = parallel_point(&s, &r1, &r2, &p, &l1, &l2) else {
            continue;
        };
        let Ok(parallel) = join(&p, &q) else { continue };
        checked += 1;
        let far = meet(&s, &parallel, &r1).unwrap();
        assert!(infinity.contains(&far, 1e-6), "{:?}", far.rep());
    }
}

#[test]
fn tangent_examples_compose_with_real_vectors() {
    let s = real_hyperbolic(2);
    let p = ProjectivePoint::from_real(&s, &[1.0, 0.0, 0.0]).unwrap();
    let t = TangentVector::new(&s, p, real_vector(&[0.0, 3.0, 4.0])).unwrap();
    assert_eq!(metric(&s, &t, &t).unwrap(), re(25.0));
}
