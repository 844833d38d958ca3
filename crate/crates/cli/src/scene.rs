//! Scene documents: a space, named objects, requested computations and
//! render options.
//!
//! Object names are unique across all categories and every reference
//! resolves; [`Scene::parse`] enforces both.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::marker::PhantomData;

use serde::de::{Deserializer, Error as _, MapAccess, Visitor};
use serde::{Deserialize, Serialize};
use tance::{
    dual, geodesic_from_tangent, geodesic_through, scalar, Configuration, Field, Geodesic,
    HermitianSpace, Matrix, MetricSign, ProjectivePoint, Scalar, TangentVector, Vector,
};

use crate::CliError;

/// A coordinate: a bare number, or `[re, im]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarJson {
    Real(f64),
    Complex([f64; 2]),
}

impl ScalarJson {
    pub fn to_scalar(self) -> Scalar {
        match self {
            ScalarJson::Real(x) => scalar(x, 0.0),
            ScalarJson::Complex([a, b]) => scalar(a, b),
        }
    }

    pub fn is_real(self) -> bool {
        matches!(self, ScalarJson::Real(_))
    }
}

pub type VectorJson = Vec<ScalarJson>;

pub fn to_vector(v: &[ScalarJson]) -> Vector {
    Vector::from_iterator(v.len(), v.iter().map(|z| z.to_scalar()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FieldTag {
    R,
    C,
}

impl FieldTag {
    pub fn field(self) -> Field {
        match self {
            FieldTag::R => Field::Real,
            FieldTag::C => Field::Complex,
        }
    }
}

fn plus_one() -> i64 {
    1
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceSpec {
    pub field: FieldTag,
    pub gram: Vec<VectorJson>,
    #[serde(default = "plus_one")]
    pub metric_sign: i64,
}

impl SpaceSpec {
    pub fn build(&self) -> Result<HermitianSpace, CliError> {
        build_space(self.field.field(), &self.gram, self.metric_sign)
    }
}

/// A Hermitian space from Gram rows.
pub fn build_space(
    field: Field,
    rows: &[VectorJson],
    metric_sign: i64,
) -> Result<HermitianSpace, CliError> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(CliError::Input("gram matrix must be square".into()));
    }
    let sign = MetricSign::from_value(metric_sign).ok_or_else(|| {
        CliError::Input(format!("metric sign must be 1 or -1, got {metric_sign}"))
    })?;
    let gram = Matrix::from_fn(n, n, |i, j| rows[i][j].to_scalar());
    Ok(HermitianSpace::new(field, gram, sign)?)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointSpec {
    pub rep: VectorJson,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TangentSpec {
    pub at: String,
    pub dir: VectorJson,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpanSpec {
    pub span: [VectorJson; 2],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThroughSpec {
    pub through: [String; 2],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlongSpec {
    pub tangent: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DualSpec {
    pub dual_of: String,
}

/// A geodesic by spanning vectors, by two points, by a tangent vector, or as
/// the dual of a point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GeodesicSpec {
    Span(SpanSpec),
    Through(ThroughSpec),
    Along(AlongSpec),
    Dual(DualSpec),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TriangleSpec {
    pub vertices: [String; 3],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigurationSpec {
    pub points: Vec<VectorJson>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Chart {
    Poincare,
    Klein,
    StereoSphere,
}

fn default_size() -> u32 {
    512
}

fn default_samples() -> usize {
    128
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RenderSpec {
    pub chart: Chart,
    #[serde(default = "default_size")]
    pub size: u32,
    #[serde(default = "default_samples")]
    pub samples: usize,
}

/// A computation: a subcommand name plus its flags, e.g.
/// `{"op": "distance", "p": "a", "q": "b", "kind": "hyperbolic"}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Request {
    pub op: String,
    #[serde(flatten)]
    pub args: BTreeMap<String, serde_json::Value>,
}

fn unique<'de, D, V>(d: D) -> Result<BTreeMap<String, V>, D::Error>
where
    D: Deserializer<'de>,
    V: Deserialize<'de>,
{
    struct Unique<V>(PhantomData<V>);

    impl<'de, V: Deserialize<'de>> Visitor<'de> for Unique<V> {
        type Value = BTreeMap<String, V>;

        fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
            f.write_str("a map of named objects")
        }

        fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<Self::Value, A::Error> {
            let mut out = BTreeMap::new();
            while let Some((k, v)) = map.next_entry::<String, V>()? {
                if out.contains_key(&k) {
                    return Err(A::Error::custom(format!("duplicate name {k:?}")));
                }
                out.insert(k, v);
            }
            Ok(out)
        }
    }

    d.deserialize_map(Unique(PhantomData))
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scene {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub space: Option<SpaceSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
    #[serde(
        default,
        deserialize_with = "unique",
        skip_serializing_if = "BTreeMap::is_empty"
    )]
    pub points: BTreeMap<String, PointSpec>,
    #[serde(
        default,
        deserialize_with = "unique",
        skip_serializing_if = "BTreeMap::is_empty"
    )]
    pub tangents: BTreeMap<String, TangentSpec>,
    #[serde(
        default,
        deserialize_with = "unique",
        skip_serializing_if = "BTreeMap::is_empty"
    )]
    pub geodesics: BTreeMap<String, GeodesicSpec>,
    #[serde(
        default,
        deserialize_with = "unique",
        skip_serializing_if = "BTreeMap::is_empty"
    )]
    pub triangles: BTreeMap<String, TriangleSpec>,
    #[serde(
        default,
        deserialize_with = "unique",
        skip_serializing_if = "BTreeMap::is_empty"
    )]
    pub configurations: BTreeMap<String, ConfigurationSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub compute: Vec<Request>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub render: Option<RenderSpec>,
}

impl Scene {
    /// Parses and validates a scene document.
    pub fn parse(text: &str) -> Result<Scene, CliError> {
        let scene: Scene =
            serde_json::from_str(text).map_err(|e| CliError::Input(format!("scene: {e}")))?;
        scene.validate()?;
        Ok(scene)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("scene values serialize")
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.space.is_some() && self.preset.is_some() {
            return Err(CliError::Input(
                "scene gives both a space and a preset".into(),
            ));
        }
        let mut seen = BTreeSet::new();
        let names = self
            .points
            .keys()
            .chain(self.tangents.keys())
            .chain(self.geodesics.keys())
            .chain(self.triangles.keys())
            .chain(self.configurations.keys());
        for name in names {
            if !seen.insert(name) {
                return Err(CliError::Input(format!("name {name:?} is used twice")));
            }
        }
        let point = |name: &String| -> Result<(), CliError> {
            if self.points.contains_key(name) {
                Ok(())
            } else {
                Err(CliError::Input(format!("unknown point {name:?}")))
            }
        };
        for t in self.tangents.values() {
            point(&t.at)?;
        }
        for g in self.geodesics.values() {
            match g {
                GeodesicSpec::Span(_) => {}
                GeodesicSpec::Through(t) => t.through.iter().try_for_each(point)?,
                GeodesicSpec::Along(a) => {
                    if !self.tangents.contains_key(&a.tangent) {
                        return Err(CliError::Input(format!("unknown tangent {:?}", a.tangent)));
                    }
                }
                GeodesicSpec::Dual(d) => point(&d.dual_of)?,
            }
        }
        for t in self.triangles.values() {
            t.vertices.iter().try_for_each(point)?;
        }
        Ok(())
    }
}

/// Lookups of named objects, built in a given space.
impl Scene {
    pub fn point(&self, space: &HermitianSpace, name: &str) -> Result<ProjectivePoint, CliError> {
        let spec = self
            .points
            .get(name)
            .ok_or_else(|| CliError::Input(format!("unknown point {name:?}")))?;
        Ok(ProjectivePoint::new(space, to_vector(&spec.rep))?)
    }

    pub fn tangent(&self, space: &HermitianSpace, name: &str) -> Result<TangentVector, CliError> {
        let spec = self
            .tangents
            .get(name)
            .ok_or_else(|| CliError::Input(format!("unknown tangent {name:?}")))?;
        let at = self.point(space, &spec.at)?;
        Ok(TangentVector::new(space, at, to_vector(&spec.dir))?)
    }

    pub fn geodesic(&self, space: &HermitianSpace, name: &str) -> Result<Geodesic, CliError> {
        let spec = self
            .geodesics
            .get(name)
            .ok_or_else(|| CliError::Input(format!("unknown geodesic {name:?}")))?;
        let g = match spec {
            GeodesicSpec::Span(s) => {
                Geodesic::new(space, to_vector(&s.span[0]), to_vector(&s.span[1]))?
            }
            GeodesicSpec::Through(t) => geodesic_through(
                space,
                &self.point(space, &t.through[0])?,
                &self.point(space, &t.through[1])?,
            )?,
            GeodesicSpec::Along(a) => {
                let t = self.tangent(space, &a.tangent)?;
                geodesic_from_tangent(space, t.at(), &t)?
            }
            GeodesicSpec::Dual(d) => dual(space, &self.point(space, &d.dual_of)?)?,
        };
        Ok(g)
    }

    pub fn configuration(
        &self,
        space: &HermitianSpace,
        name: &str,
    ) -> Result<Configuration, CliError> {
        let spec = self
            .configurations
            .get(name)
            .ok_or_else(|| CliError::Input(format!("unknown configuration {name:?}")))?;
        Ok(Configuration::new(
            space,
            spec.points.iter().map(|p| to_vector(p)).collect(),
        )?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalars_parse_both_ways() {
        let v: VectorJson = serde_json::from_str("[1, [0.5, -2], -3]").unwrap();
        assert_eq!(
            v,
            vec![
                ScalarJson::Real(1.0),
                ScalarJson::Complex([0.5, -2.0]),
                ScalarJson::Real(-3.0)
            ]
        );
    }

    #[test]
    fn duplicate_names_are_rejected() {
        let dup = r#"{"points": {"a": {"rep": [1, 0]}, "a": {"rep": [0, 1]}}}"#;
        assert!(Scene::parse(dup).is_err());
        let across = r#"{"points": {"a": {"rep": [1, 0]}},
                         "configurations": {"a": {"points": [[1, 0]]}}}"#;
        assert!(Scene::parse(across).is_err());
    }

    #[test]
    fn references_must_resolve() {
        let bad = r#"{"triangles": {"t": {"vertices": ["a", "b", "c"]}}}"#;
        assert!(Scene::parse(bad).is_err());
        let bad = r#"{"geodesics": {"g": {"tangent": "v"}}}"#;
        assert!(Scene::parse(bad).is_err());
    }

    #[test]
    fn unknown_fields_are_rejected() {
        assert!(Scene::parse(r#"{"pionts": {}}"#).is_err());
        assert!(Scene::parse(r#"{"geodesics": {"g": {"span": [[1,0],[0,1]], "x": 1}}}"#).is_err());
    }

    #[test]
    fn render_defaults() {
        let s = Scene::parse(r#"{"render": {"chart": "stereo-sphere"}}"#).unwrap();
        let r = s.render.unwrap();
        assert_eq!(
            (r.chart, r.size, r.samples),
            (Chart::StereoSphere, 512, 128)
        );
    }
}
