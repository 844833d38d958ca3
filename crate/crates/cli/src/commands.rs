//! Subcommand execution: resolves operands against flags and the scene,
//! calls the library and builds the result value.

use std::io::Read;

use clap::Parser;
use serde::de::DeserializeOwned;
use serde_json::{json, Map, Value};
use tance::configuration::form_defect;
use tance::trigonometry::interior_angle_cos_closed_form;
use tance::{
    classify, classify_point, config_gram, conformal_factor, distance, dual_of_geodesic,
    geodesic_from_tangent, geodesic_lift, geodesic_through, interior_angle, klein_poincare_map,
    law_check, poincare_klein_map, stereo, stereo_inverse, subsphere_image, tance as tance_of,
    triangle_area_spherical, triangle_invariants, vertices, witness_unitary, Configuration,
    DistanceKind, Field, Geodesic, HermitianSpace, Law, MetricSign, ProjectivePoint, Regime,
    Sphere, Subspace, SubsphereImage, TangentVector, TriangleSpan, Vector,
};

use crate::args::{Cli, Command, FieldArg, GlobalArgs, KindArg};
use crate::output::{self, num};
use crate::presets::{self, preset};
use crate::render::{render_model, to_svg};
use crate::scene::{build_space, to_vector, RenderSpec, ScalarJson, Scene, VectorJson};
use crate::CliError;

/// Flags a scene request may not set; they belong to the outer invocation.
const OUTER_ONLY: [&str; 8] = [
    "gram",
    "field",
    "metric-sign",
    "preset",
    "scene",
    "tolerance",
    "csv",
    "out",
];

/// Runs the parsed command and returns the text to write.
pub fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<String, CliError> {
    let scene = load_scene(&cli.global, stdin)?;
    let ctx = Context {
        global: &cli.global,
        scene: scene.unwrap_or_default(),
    };
    if let Command::Plot { .. } = cli.command {
        if cli.global.csv {
            return Err(CliError::Usage(
                "plot writes SVG; --csv does not apply".into(),
            ));
        }
        return ctx.plot(&cli.command);
    }
    let requests: Vec<_> = ctx
        .scene
        .compute
        .iter()
        .filter(|r| r.op == cli.command.name())
        .collect();
    let value = if !cli.command.has_operands() && !requests.is_empty() {
        let results = requests
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let command =
                    request_command(r).map_err(|e| CliError::Input(format!("request {i}: {e}")))?;
                ctx.dispatch(&command)
            })
            .collect::<Result<Vec<_>, _>>()?;
        json!({ "results": results })
    } else {
        ctx.dispatch(&cli.command)?
    };
    Ok(output::encode(&value, cli.global.csv))
}

fn load_scene(global: &GlobalArgs, stdin: &mut dyn Read) -> Result<Option<Scene>, CliError> {
    let Some(source) = &global.scene else {
        return Ok(None);
    };
    let text = if source == "-" {
        let mut s = String::new();
        stdin
            .read_to_string(&mut s)
            .map_err(|e| CliError::Input(format!("cannot read stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(source)
            .map_err(|e| CliError::Input(format!("cannot read {source}: {e}")))?
    };
    Scene::parse(&text).map(Some)
}

fn request_command(r: &crate::scene::Request) -> Result<Command, String> {
    let mut argv = vec!["tance".to_string(), r.op.clone()];
    for (key, value) in &r.args {
        let flag = key.replace('_', "-");
        if OUTER_ONLY.contains(&flag.as_str()) {
            return Err(format!("--{flag} cannot be set by a request"));
        }
        match value {
            Value::Bool(true) => argv.push(format!("--{flag}")),
            Value::Bool(false) | Value::Null => {}
            Value::String(s) => argv.extend([format!("--{flag}"), s.clone()]),
            other => argv.extend([format!("--{flag}"), other.to_string()]),
        }
    }
    Cli::try_parse_from(argv)
        .map(|cli| cli.command)
        .map_err(|e| e.kind().to_string())
}

/// Parses inline JSON; a Unicode minus sign is read as `-`.
fn parse_json<T: DeserializeOwned>(text: &str, what: &str) -> Result<T, CliError> {
    serde_json::from_str(&text.replace('\u{2212}', "-"))
        .map_err(|e| CliError::Input(format!("{what}: {e}")))
}

fn required<'a>(value: &'a Option<String>, flag: &str) -> Result<&'a str, CliError> {
    value
        .as_deref()
        .ok_or_else(|| CliError::Usage(format!("missing --{flag}")))
}

fn class_name(class: tance::GeodesicClass) -> &'static str {
    class.name()
}

fn span_name(span: TriangleSpan) -> &'static str {
    match span {
        TriangleSpan::ComplexLine => "complex-line",
        TriangleSpan::RealPlane => "real-plane",
        TriangleSpan::Generic => "generic",
    }
}

struct Context<'a> {
    global: &'a GlobalArgs,
    scene: Scene,
}

impl Context<'_> {
    fn space(&self) -> Result<HermitianSpace, CliError> {
        let g = self.global;
        let sources = [g.gram.is_some(), g.preset.is_some()]
            .iter()
            .filter(|&&x| x)
            .count();
        if sources > 1 {
            return Err(CliError::Usage(
                "give either --gram or --preset, not both".into(),
            ));
        }
        if g.gram.is_none() && (g.field.is_some() || g.metric_sign.is_some()) {
            return Err(CliError::Usage(
                "--field and --metric-sign need --gram".into(),
            ));
        }
        let space = if let Some(text) = &g.gram {
            let rows: Vec<VectorJson> = parse_json(text, "--gram")?;
            let field = match g.field {
                Some(FieldArg::R) => Field::Real,
                Some(FieldArg::C) => Field::Complex,
                None if rows.iter().flatten().all(|z| z.is_real()) => Field::Real,
                None => Field::Complex,
            };
            build_space(field, &rows, g.metric_sign.unwrap_or(1))?
        } else if let Some(name) = &g.preset {
            named_preset(name)?
        } else if let Some(spec) = &self.scene.space {
            spec.build()?
        } else if let Some(name) = &self.scene.preset {
            named_preset(name)?
        } else {
            return Err(CliError::Usage(
                "no space: give --gram, --preset or a scene with a space".into(),
            ));
        };
        match g.tolerance {
            Some(t) if !(t.is_finite() && t > 0.0) => Err(CliError::Input(format!(
                "tolerance must be positive, got {t}"
            ))),
            Some(t) => Ok(space.with_tolerance(t)),
            None => Ok(space),
        }
    }

    fn vector(&self, space: &HermitianSpace, text: &str, what: &str) -> Result<Vector, CliError> {
        if let Some(p) = self.scene.points.get(text) {
            let v = to_vector(&p.rep);
            space.check_vector(&v)?;
            return Ok(v);
        }
        let v: VectorJson = parse_json(text, what)?;
        let v = to_vector(&v);
        space.check_vector(&v)?;
        Ok(v)
    }

    fn vectors(
        &self,
        space: &HermitianSpace,
        text: &str,
        what: &str,
    ) -> Result<Vec<Vector>, CliError> {
        let items: Vec<Value> = parse_json(text, what)?;
        items
            .into_iter()
            .map(|item| self.vector_value(space, item, what))
            .collect()
    }

    /// A JSON vector, or a string naming a scene point.
    fn vector_value(
        &self,
        space: &HermitianSpace,
        item: Value,
        what: &str,
    ) -> Result<Vector, CliError> {
        match item {
            Value::String(name) => {
                if !self.scene.points.contains_key(&name) {
                    return Err(CliError::Input(format!("{what}: unknown point {name:?}")));
                }
                self.vector(space, &name, what)
            }
            other => {
                let v: VectorJson = serde_json::from_value(other)
                    .map_err(|e| CliError::Input(format!("{what}: {e}")))?;
                let v = to_vector(&v);
                space.check_vector(&v)?;
                Ok(v)
            }
        }
    }

    fn point(
        &self,
        space: &HermitianSpace,
        text: &str,
        what: &str,
    ) -> Result<ProjectivePoint, CliError> {
        Ok(ProjectivePoint::new(
            space,
            self.vector(space, text, what)?,
        )?)
    }

    fn geodesic_arg(&self, space: &HermitianSpace, text: &str) -> Result<Geodesic, CliError> {
        if self.scene.geodesics.contains_key(text) {
            return self.scene.geodesic(space, text);
        }
        let span = self.vectors(space, text, "geodesic span")?;
        match <[Vector; 2]>::try_from(span) {
            Ok([w1, w2]) => Ok(Geodesic::new(space, w1, w2)?),
            Err(_) => Err(CliError::Input(
                "a geodesic span has exactly two vectors".into(),
            )),
        }
    }

    fn configuration_arg(
        &self,
        space: &HermitianSpace,
        text: &str,
    ) -> Result<Configuration, CliError> {
        if self.scene.configurations.contains_key(text) {
            return self.scene.configuration(space, text);
        }
        Ok(Configuration::new(
            space,
            self.vectors(space, text, "configuration")?,
        )?)
    }

    fn dispatch(&self, command: &Command) -> Result<Value, CliError> {
        match command {
            Command::Signature { span } => self.signature(span),
            Command::GramSchmidt { flag, reorder } => {
                self.gram_schmidt(required(flag, "flag")?, *reorder)
            }
            Command::Classify { p, geodesic } => self.classify(p, geodesic),
            Command::Tance { p, q } => {
                let space = self.space()?;
                let p = self.point(&space, required(p, "p")?, "--p")?;
                let q = self.point(&space, required(q, "q")?, "--q")?;
                Ok(json!({ "tance": num(tance_of(&space, &p, &q)?) }))
            }
            Command::Distance { p, q, kind } => {
                let space = self.space()?;
                let p = self.point(&space, required(p, "p")?, "--p")?;
                let q = self.point(&space, required(q, "q")?, "--q")?;
                let kind = match kind {
                    Some(KindArg::Spherical) => DistanceKind::Spherical,
                    Some(KindArg::Hyperbolic) => DistanceKind::Hyperbolic,
                    None if space.metric_sign() == MetricSign::Plus => DistanceKind::Spherical,
                    None => DistanceKind::Hyperbolic,
                };
                Ok(json!({ "distance": num(distance(&space, &p, &q, kind)?) }))
            }
            Command::Geodesic { .. } => self.geodesic(command),
            Command::Triangle { vertices, name } => self.triangle(vertices, name),
            Command::ConfigEqual { c1, c2 } => {
                self.config_equal(required(c1, "c1")?, required(c2, "c2")?)
            }
            Command::Stereo {
                p,
                q,
                inverse,
                f,
                eps,
            } => stereo_command(
                required(p, "p")?,
                q.as_deref(),
                *inverse,
                f.as_deref(),
                *eps,
            ),
            Command::DiscMap { z, inverse } => disc_map(required(z, "z")?, *inverse),
            Command::Presets => Ok(catalog()),
            Command::Plot { .. } => Err(CliError::Usage("plot cannot be a scene request".into())),
        }
    }

    fn signature(&self, span: &Option<String>) -> Result<Value, CliError> {
        let space = self.space()?;
        let sig = match span {
            None => space.signature(),
            Some(text) => {
                let w = Subspace::new(&space, self.vectors(&space, text, "--span")?)?;
                space.subspace_signature(&w)?
            }
        };
        Ok(json!({ "signature": [sig.n_minus, sig.n_zero, sig.n_plus] }))
    }

    fn gram_schmidt(&self, flag: &str, reorder: bool) -> Result<Value, CliError> {
        let space = self.space()?;
        let mut vectors = self.vectors(&space, flag, "--flag")?;
        if reorder {
            vectors = space.nondegenerate_flag(&vectors)?;
        }
        let basis = space.gram_schmidt(&vectors)?;
        let field = space.field();
        let mut out = Map::new();
        out.insert(
            "basis".into(),
            Value::Array(basis.iter().map(|v| output::vector(v, field)).collect()),
        );
        out.insert(
            "squares".into(),
            Value::Array(
                basis
                    .iter()
                    .map(|v| Ok(num(space.form(v, v)?.re)))
                    .collect::<Result<_, CliError>>()?,
            ),
        );
        if reorder {
            out.insert(
                "flag".into(),
                Value::Array(vectors.iter().map(|v| output::vector(v, field)).collect()),
            );
        }
        Ok(Value::Object(out))
    }

    fn classify(&self, p: &Option<String>, geodesic: &Option<String>) -> Result<Value, CliError> {
        let space = self.space()?;
        match (p, geodesic) {
            (Some(p), None) => {
                let p = self.point(&space, p, "--p")?;
                Ok(json!({ "class": classify_point(&space, &p).name() }))
            }
            (None, Some(g)) => {
                let g = self.geodesic_arg(&space, g)?;
                Ok(json!({ "class": class_name(classify(&space, &g)) }))
            }
            _ => Err(CliError::Usage(
                "give exactly one of --p and --geodesic".into(),
            )),
        }
    }

    fn geodesic(&self, command: &Command) -> Result<Value, CliError> {
        let Command::Geodesic {
            span,
            name,
            p,
            q,
            dir,
            dual_of,
            arc,
        } = command
        else {
            unreachable!("geodesic handler called with another command");
        };
        let space = self.space()?;
        let base = p
            .as_deref()
            .map(|p| self.point(&space, p, "--p"))
            .transpose()?;
        let given = [
            span.is_some(),
            name.is_some(),
            base.is_some(),
            dual_of.is_some(),
        ];
        if given.iter().filter(|&&x| x).count() != 1 {
            return Err(CliError::Usage(
                "give exactly one of --span, --name, --p and --dual-of".into(),
            ));
        }
        let g = if let Some(text) = span {
            self.geodesic_arg(&space, text)?
        } else if let Some(name) = name {
            self.scene.geodesic(&space, name)?
        } else if let Some(d) = dual_of {
            tance::dual(&space, &self.point(&space, d, "--dual-of")?)?
        } else {
            let p = base.clone().expect("checked above");
            match (q, dir) {
                (Some(q), None) => geodesic_through(&space, &p, &self.point(&space, q, "--q")?)?,
                (None, Some(d)) => {
                    let t =
                        TangentVector::new(&space, p.clone(), self.vector(&space, d, "--dir")?)?;
                    geodesic_from_tangent(&space, &p, &t)?
                }
                _ => {
                    return Err(CliError::Usage(
                        "with --p give exactly one of --q and --dir".into(),
                    ))
                }
            }
        };

        let field = space.field();
        let class = classify(&space, &g);
        let (w1, w2) = g.span();
        let mut out = Map::new();
        out.insert("class".into(), json!(class_name(class)));
        out.insert(
            "span".into(),
            json!([output::vector(w1, field), output::vector(w2, field)]),
        );
        if class == tance::GeodesicClass::Hyperbolic {
            let (v1, v2) = vertices(&space, &g)?;
            out.insert(
                "vertices".into(),
                json!([
                    output::vector(v1.rep(), field),
                    output::vector(v2.rep(), field)
                ]),
            );
        }
        if let Ok(d) = dual_of_geodesic(&space, &g) {
            out.insert("dual".into(), output::vector(d.rep(), field));
        }
        if let Some(t) = arc {
            let start = match base {
                Some(p) => p,
                None => {
                    let basis = space.orthonormal_basis(&[w1.clone(), w2.clone()])?;
                    ProjectivePoint::new(&space, basis.vectors[0].clone())?
                }
            };
            let at = geodesic_lift(&space, &g, &start, *t)?;
            out.insert("point".into(), output::vector(at.rep(), field));
        }
        Ok(Value::Object(out))
    }

    fn triangle(&self, verts: &Option<String>, name: &Option<String>) -> Result<Value, CliError> {
        let space = self.space()?;
        let pts: Vec<ProjectivePoint> = match (verts, name) {
            (Some(text), None) => self
                .vectors(&space, text, "--vertices")?
                .into_iter()
                .map(|v| ProjectivePoint::new(&space, v))
                .collect::<Result<_, _>>()?,
            (None, Some(name)) => {
                let t = self
                    .scene
                    .triangles
                    .get(name)
                    .ok_or_else(|| CliError::Input(format!("unknown triangle {name:?}")))?;
                t.vertices
                    .iter()
                    .map(|v| self.scene.point(&space, v))
                    .collect::<Result<_, _>>()?
            }
            _ => {
                return Err(CliError::Usage(
                    "give exactly one of --vertices and --name".into(),
                ))
            }
        };
        let [p1, p2, p3]: [ProjectivePoint; 3] = pts
            .try_into()
            .map_err(|_| CliError::Input("a triangle has exactly three vertices".into()))?;
        let t = triangle_invariants(&space, &p1, &p2, &p3)?;
        let angles = [0, 1, 2]
            .map(|i| interior_angle(&space, &p1, &p2, &p3, i))
            .into_iter()
            .collect::<Result<Vec<f64>, _>>()?;
        let angles: [f64; 3] = angles.try_into().expect("three angles");
        let closed = [0, 1, 2]
            .map(|i| interior_angle_cos_closed_form(&t, i).map(|c| c.clamp(-1.0, 1.0).acos()))
            .into_iter()
            .collect::<Result<Vec<f64>, _>>()?;
        let mut laws = Map::new();
        if t.span != TriangleSpan::Generic {
            for law in Law::ALL.into_iter().filter(|l| l.regime() == t.regime) {
                let r = law_check(&t, angles, law).ok().map_or(Value::Null, num);
                laws.insert(law.name().into(), r);
            }
        }
        let area = match t.regime {
            Regime::Spherical => triangle_area_spherical(&t).ok().map_or(Value::Null, num),
            Regime::Hyperbolic => Value::Null,
        };
        Ok(json!({
            "regime": t.regime.name(),
            "span": span_name(t.span),
            "r": t.r.map(num),
            "eps": output::complex(t.eps),
            "lengths": t.lengths().map(num),
            "angles": angles.map(num),
            "angles_closed_form": closed.into_iter().map(num).collect::<Vec<_>>(),
            "area": area,
            "identity_residual": num(tance::fundamental_identity_residual(&t)),
            "laws": laws,
        }))
    }

    fn config_equal(&self, c1: &str, c2: &str) -> Result<Value, CliError> {
        let space = self.space()?;
        let (c1, c2) = (
            self.configuration_arg(&space, c1)?,
            self.configuration_arg(&space, c2)?,
        );
        let field = space.field();
        let equal = tance::geometrically_equal(&space, &c1, &c2)?;
        let mut out = Map::new();
        out.insert("equal".into(), json!(equal));
        out.insert(
            "gram1".into(),
            output::matrix(&config_gram(&space, &c1), field),
        );
        out.insert(
            "gram2".into(),
            output::matrix(&config_gram(&space, &c2), field),
        );
        if equal {
            let g = witness_unitary(&space, &c1, &c2)?;
            out.insert("witness".into(), output::matrix(&g, field));
            out.insert("form_defect".into(), num(form_defect(&space, &g)));
        }
        Ok(Value::Object(out))
    }

    fn plot(&self, command: &Command) -> Result<String, CliError> {
        let Command::Plot {
            chart,
            size,
            samples,
        } = command
        else {
            unreachable!("plot handler called with another command");
        };
        let base = self.scene.render.clone();
        let chart = chart.or(base.as_ref().map(|r| r.chart)).ok_or_else(|| {
            CliError::Usage("no chart: give --chart or scene render options".into())
        })?;
        let opts = RenderSpec {
            chart,
            size: size.or(base.as_ref().map(|r| r.size)).unwrap_or(512),
            samples: samples.or(base.as_ref().map(|r| r.samples)).unwrap_or(128),
        };
        let space = self.space()?;
        Ok(to_svg(&render_model(&self.scene, &space, &opts)?))
    }
}

fn named_preset(name: &str) -> Result<HermitianSpace, CliError> {
    preset(name)
        .map(|p| p.space())
        .ok_or_else(|| CliError::Input(format!("unknown preset {name:?}")))
}

fn real_coords(text: &str, what: &str) -> Result<Vec<f64>, CliError> {
    parse_json(text, what)
}

fn stereo_command(
    p: &str,
    q: Option<&str>,
    inverse: bool,
    f: Option<&str>,
    eps: Option<f64>,
) -> Result<Value, CliError> {
    let p = real_coords(p, "--p")?;
    if p.len() < 2 {
        return Err(CliError::Input("--p needs at least two coordinates".into()));
    }
    let sphere = Sphere::new(p.len() - 1)?;
    let p = sphere.point(&p)?;
    let real = |v: &Vector| output::vector(v, Field::Real);
    match (q, f) {
        (Some(q), None) => {
            let q = real_coords(q, "--q")?;
            if inverse {
                let back = stereo_inverse(&sphere, &p, &tance::linalg::real_vector(&q))?;
                Ok(json!({ "point": real(back.coords()) }))
            } else {
                let q = sphere.point(&q)?;
                Ok(json!({
                    "image": real(&stereo(&sphere, &p, &q)?),
                    "conformal_factor": num(conformal_factor(&sphere, &p, &q)?),
                }))
            }
        }
        (None, Some(f)) if !inverse => {
            let eps = eps.ok_or_else(|| CliError::Usage("missing --eps".into()))?;
            let image = match subsphere_image(&sphere, &p, &real_coords(f, "--f")?, eps)? {
                SubsphereImage::Sphere { center, radius } => {
                    json!({ "kind": "sphere", "center": real(&center), "radius": num(radius) })
                }
                SubsphereImage::Affine { normal, offset } => {
                    json!({ "kind": "affine", "normal": real(&normal), "offset": num(offset) })
                }
            };
            Ok(json!({ "image": image }))
        }
        _ => Err(CliError::Usage(
            "give --q (optionally with --inverse), or --f with --eps".into(),
        )),
    }
}

fn disc_map(z: &str, inverse: bool) -> Result<Value, CliError> {
    let z: ScalarJson = parse_json(z, "--z")?;
    let z = z.to_scalar();
    if inverse {
        Ok(json!({ "poincare": output::complex(klein_poincare_map(z)?) }))
    } else {
        Ok(json!({ "klein": output::complex(poincare_klein_map(z)?) }))
    }
}

fn catalog() -> Value {
    let entry = |name: &str| {
        let p = preset(name).expect("catalog names are presets");
        let space = p.space();
        let sig = space.signature();
        json!({
            "name": p.name,
            "field": if p.field == Field::Real { "R" } else { "C" },
            "gram": output::matrix(space.gram(), Field::Real),
            "metric_sign": if p.metric_sign == MetricSign::Plus { 1 } else { -1 },
            "signature": [sig.n_minus, sig.n_zero, sig.n_plus],
            "region": p.region,
        })
    };
    json!({
        "presets": presets::NAMES.iter().map(|n| entry(n)).collect::<Vec<_>>(),
        "families": [{
            "name": presets::FAMILY,
            "field": "C",
            "gram": "identity of size n+1",
            "metric_sign": 1,
            "signature": "[0,0,n+1]",
            "region": "whole",
        }],
    })
}
