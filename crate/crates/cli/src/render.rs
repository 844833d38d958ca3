//! Chart projection of scenes and their SVG encoding.
//!
//! Charts map the projective plane to the closed unit disc:
//! `klein` sends `(x0, x1, x2)` of `R` with form `diag(-1, 1, 1)` to
//! `(x1/x0, x2/x0)`; `poincare` sends `(x0, x1)` of `C` with form `diag(-1, 1)`
//! to `x1/x0`, and Klein-plane points through the inverse disc map;
//! `stereo-sphere` sends `(x0, x1)` of `C` with form `diag(1, 1)` to `x1/x0`
//! on the near hemisphere `|x1| <= |x0|` and to `conj(x0/x1)` on the far one.

use std::fmt::Write as _;

use tance::geodesic::disc::klein_coordinate;
use tance::{
    classify, classify_point, klein_poincare_map, lift_curve, vertices, Field, GeodesicClass,
    HermitianSpace, Matrix, PointClass, ProjectivePoint, Scalar, Vector,
};

use crate::scene::{Chart, RenderSpec, Scene};
use crate::CliError;

/// Slack allowed beyond the unit circle for boundary points.
const RIM_TOLERANCE: f64 = 1e-9;

/// Arc parameter range of hyperbolic geodesics; the open ends are closed by
/// the vertices.
pub const HYPERBOLIC_REACH: f64 = 8.0;

#[derive(Debug, Clone, PartialEq)]
pub struct Piece {
    pub points: Vec<(f64, f64)>,
    /// Drawn from the far hemisphere of the stereo-sphere chart.
    pub far: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    pub name: String,
    pub pieces: Vec<Piece>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Mark {
    pub name: String,
    pub at: (f64, f64),
    pub class: PointClass,
    pub far: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RenderModel {
    pub chart: Chart,
    pub size: u32,
    pub curves: Vec<Curve>,
    pub marks: Vec<Mark>,
}

fn diagonal_gram(space: &HermitianSpace, field: Field, squares: &[f64]) -> bool {
    space.field() == field
        && *space.gram()
            == Matrix::from_diagonal(&Vector::from_iterator(
                squares.len(),
                squares.iter().map(|&x| Scalar::new(x, 0.0)),
            ))
}

enum Frame {
    Klein,
    Poincare,
    PoincareFromKlein,
    Sphere,
}

fn frame(chart: Chart, space: &HermitianSpace) -> Result<Frame, CliError> {
    let klein = diagonal_gram(space, Field::Real, &[-1.0, 1.0, 1.0]);
    let frame = match chart {
        Chart::Klein if klein => Frame::Klein,
        Chart::Poincare if diagonal_gram(space, Field::Complex, &[-1.0, 1.0]) => Frame::Poincare,
        Chart::Poincare if klein => Frame::PoincareFromKlein,
        Chart::StereoSphere if diagonal_gram(space, Field::Complex, &[1.0, 1.0]) => Frame::Sphere,
        _ => {
            let need = match chart {
                Chart::Klein => "R with form diag(-1, 1, 1)",
                Chart::Poincare => "C with form diag(-1, 1) or R with form diag(-1, 1, 1)",
                Chart::StereoSphere => "C with form diag(1, 1)",
            };
            return Err(CliError::Render(format!("chart needs the space {need}")));
        }
    };
    Ok(frame)
}

fn disc_point(x: f64, y: f64) -> Option<(f64, f64)> {
    let r = x.hypot(y);
    if !r.is_finite() || r > 1.0 + RIM_TOLERANCE {
        None
    } else {
        Some((x, y))
    }
}

/// Chart coordinates of a representative, with the far-hemisphere flag.
/// `None` when the point lies outside the chart.
fn project(frame: &Frame, rep: &Vector) -> Option<((f64, f64), bool)> {
    match frame {
        Frame::Klein | Frame::PoincareFromKlein => {
            if rep[0].norm() == 0.0 {
                return None;
            }
            let (x, y) = disc_point((rep[1] / rep[0]).re, (rep[2] / rep[0]).re)?;
            if let Frame::Klein = frame {
                return Some(((x, y), false));
            }
            let k = Scalar::new(x, y);
            // Points within the rim tolerance land exactly on the rim.
            let z = if k.norm_sqr() < 1.0 - RIM_TOLERANCE {
                klein_poincare_map(k).ok()?
            } else {
                k / k.norm()
            };
            Some(((z.re, z.im), false))
        }
        Frame::Poincare => {
            if rep[0].norm() == 0.0 {
                return None;
            }
            let z = rep[1] / rep[0];
            Some((disc_point(z.re, z.im)?, false))
        }
        Frame::Sphere => {
            if rep[1].norm() <= rep[0].norm() {
                let w = rep[1] / rep[0];
                Some(((w.re, w.im), false))
            } else {
                let w = (rep[0] / rep[1]).conj();
                Some(((w.re, w.im), true))
            }
        }
    }
}

fn domain_error(name: &str, why: &str) -> CliError {
    CliError::Render(format!("{name:?} is outside the chart: {why}"))
}

/// Projects the scene's points and geodesics onto the chart.
pub fn render_model(
    scene: &Scene,
    space: &HermitianSpace,
    opts: &RenderSpec,
) -> Result<RenderModel, CliError> {
    let frame = frame(opts.chart, space)?;
    let disc = !matches!(frame, Frame::Sphere);
    if opts.samples < 2 {
        return Err(CliError::Input(
            "at least 2 samples per geodesic are needed".into(),
        ));
    }

    let mut marks = Vec::new();
    for name in scene.points.keys() {
        let p = scene.point(space, name)?;
        let class = classify_point(space, &p);
        if disc && class == PointClass::Positive {
            return Err(domain_error(name, "positive point"));
        }
        let (at, far) =
            project(&frame, p.rep()).ok_or_else(|| domain_error(name, "no chart coordinate"))?;
        marks.push(Mark {
            name: name.clone(),
            at,
            class,
            far,
        });
    }

    let mut curves = Vec::new();
    for name in scene.geodesics.keys() {
        let g = scene.geodesic(space, name)?;
        let (w1, w2) = g.span();
        match classify(space, &g) {
            GeodesicClass::Degenerate => {
                let basis = space.orthonormal_basis(&[w1.clone(), w2.clone()])?;
                let null = basis
                    .signs
                    .iter()
                    .position(|&s| s == 0)
                    .map(|i| basis.vectors[i].clone())
                    .ok_or_else(|| CliError::Render(format!("{name:?} has no null direction")))?;
                let (at, far) = project(&frame, &null)
                    .ok_or_else(|| domain_error(name, "isotropic point has no chart coordinate"))?;
                marks.push(Mark {
                    name: name.clone(),
                    at,
                    class: PointClass::Isotropic,
                    far,
                });
            }
            GeodesicClass::Hyperbolic => {
                if !disc {
                    return Err(domain_error(name, "hyperbolic geodesic"));
                }
                curves.push(hyperbolic_curve(space, &frame, name, &g, opts.samples)?);
            }
            GeodesicClass::Spherical => {
                if disc {
                    return Err(domain_error(name, "spherical geodesic"));
                }
                curves.push(spherical_curve(space, &frame, name, &g, opts.samples)?);
            }
        }
    }

    Ok(RenderModel {
        chart: opts.chart,
        size: opts.size,
        curves,
        marks,
    })
}

fn start_point(space: &HermitianSpace, g: &tance::Geodesic) -> Result<ProjectivePoint, CliError> {
    let (w1, w2) = g.span();
    let basis = space.orthonormal_basis(&[w1.clone(), w2.clone()])?;
    Ok(ProjectivePoint::new(space, basis.vectors[0].clone())?)
}

/// Vertex, samples of `p cosh t + q sinh t` for `|t| <= HYPERBOLIC_REACH`,
/// vertex.
fn hyperbolic_curve(
    space: &HermitianSpace,
    frame: &Frame,
    name: &str,
    g: &tance::Geodesic,
    samples: usize,
) -> Result<Curve, CliError> {
    let lift = lift_curve(space, g, &start_point(space, g)?)?;
    let (v1, v2) = vertices(space, g)?;
    let outside = || domain_error(name, "geodesic leaves the chart");
    let mut pts = Vec::with_capacity(samples + 2);
    for k in 0..samples {
        let t = -HYPERBOLIC_REACH + 2.0 * HYPERBOLIC_REACH * k as f64 / (samples - 1) as f64;
        pts.push(project(frame, &lift.point_at(t)).ok_or_else(outside)?.0);
    }
    let (a, b) = (
        project(frame, v1.rep()).ok_or_else(outside)?.0,
        project(frame, v2.rep()).ok_or_else(outside)?.0,
    );
    let dist = |p: (f64, f64), q: (f64, f64)| (p.0 - q.0).hypot(p.1 - q.1);
    let (first, last) = if dist(a, pts[0]) <= dist(b, pts[0]) {
        (a, b)
    } else {
        (b, a)
    };
    pts.insert(0, first);
    pts.push(last);
    Ok(Curve {
        name: name.to_string(),
        pieces: vec![Piece {
            points: pts,
            far: false,
        }],
    })
}

/// The closed loop `p cos t + q sin t`, `0 <= t <= pi`, split where it
/// crosses between hemispheres.
fn spherical_curve(
    space: &HermitianSpace,
    frame: &Frame,
    name: &str,
    g: &tance::Geodesic,
    samples: usize,
) -> Result<Curve, CliError> {
    let lift = lift_curve(space, g, &start_point(space, g)?)?;
    let mut pieces: Vec<Piece> = Vec::new();
    for k in 0..=samples {
        let t = std::f64::consts::PI * k as f64 / samples as f64;
        let (at, far) = project(frame, &lift.point_at(t))
            .ok_or_else(|| domain_error(name, "geodesic leaves the chart"))?;
        match pieces.last_mut() {
            Some(piece) if piece.far == far => piece.points.push(at),
            _ => pieces.push(Piece {
                points: vec![at],
                far,
            }),
        }
    }
    Ok(Curve {
        name: name.to_string(),
        pieces,
    })
}

fn coord(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".to_string()
    } else {
        s
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

fn fill(class: PointClass) -> &'static str {
    match class {
        PointClass::Negative => "#b03a2e",
        PointClass::Positive => "#1f618d",
        PointClass::Isotropic => "#ffffff",
    }
}

/// The unit disc fills 90% of a square viewport, `y` pointing up.
pub fn to_svg(model: &RenderModel) -> String {
    let size = f64::from(model.size);
    let (c, r) = (size / 2.0, 0.45 * size);
    let px = |(x, y): (f64, f64)| (c + r * x, c - r * y);
    let mut out = String::new();
    let s = model.size;
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{s}" height="{s}" viewBox="0 0 {s} {s}">"#
    );
    let _ = writeln!(out, r##"<rect width="{s}" height="{s}" fill="#ffffff"/>"##);
    let _ = writeln!(
        out,
        r##"<circle class="absolute" cx="{}" cy="{}" r="{}" fill="none" stroke="#000000" stroke-width="1.5"/>"##,
        coord(c),
        coord(c),
        coord(r)
    );
    let _ = writeln!(
        out,
        r##"<g class="geodesics" fill="none" stroke="#1a5276" stroke-width="1.25">"##
    );
    for curve in &model.curves {
        for piece in &curve.pieces {
            let points: Vec<String> = piece
                .points
                .iter()
                .map(|&p| {
                    let (x, y) = px(p);
                    format!("{},{}", coord(x), coord(y))
                })
                .collect();
            let style = if piece.far {
                r#" stroke-dasharray="4 3" opacity="0.5""#
            } else {
                ""
            };
            let _ = writeln!(
                out,
                r#"<polyline points="{}"{style}><title>{}</title></polyline>"#,
                points.join(" "),
                escape(&curve.name)
            );
        }
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(
        out,
        r##"<g class="points" stroke="#000000" stroke-width="0.75">"##
    );
    for mark in &model.marks {
        let (x, y) = px(mark.at);
        let style = if mark.far { r#" opacity="0.5""# } else { "" };
        let _ = writeln!(
            out,
            r#"<circle class="{}" cx="{}" cy="{}" r="4" fill="{}"{style}><title>{}</title></circle>"#,
            mark.class.name(),
            coord(x),
            coord(y),
            fill(mark.class),
            escape(&mark.name)
        );
    }
    let _ = writeln!(out, "</g>");
    out.push_str("</svg>\n");
    out
}

/// Klein-chart coordinates of a point of the Klein plane.
pub fn klein_chart(p: &ProjectivePoint) -> Result<(f64, f64), CliError> {
    let k = klein_coordinate(p)?;
    Ok((k.re, k.im))
}
