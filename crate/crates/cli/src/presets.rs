//! Named model spaces.

use tance::{Field, HermitianSpace, MetricSign};

#[derive(Debug, Clone, PartialEq)]
pub struct Preset {
    pub name: String,
    pub field: Field,
    pub squares: Vec<f64>,
    pub metric_sign: MetricSign,
    /// Region of the projective space carrying the model's metric.
    pub region: &'static str,
}

/// Fixed-dimension presets; `fubini-study-<n>` is a family with `n >= 1`.
pub const NAMES: [&str; 6] = [
    "round-sphere",
    "riemann-poincare",
    "beltrami-klein",
    "complex-hyperbolic",
    "real-hyperbolic-3",
    "de-sitter",
];

pub const FAMILY: &str = "fubini-study-<n>";

fn make(
    name: &str,
    field: Field,
    squares: &[f64],
    sign: MetricSign,
    region: &'static str,
) -> Preset {
    Preset {
        name: name.to_string(),
        field,
        squares: squares.to_vec(),
        metric_sign: sign,
        region,
    }
}

pub fn preset(name: &str) -> Option<Preset> {
    use Field::{Complex as C, Real as R};
    use MetricSign::{Minus, Plus};
    let p = match name {
        "round-sphere" => make(name, C, &[1.0, 1.0], Plus, "whole"),
        "riemann-poincare" => make(name, C, &[-1.0, 1.0], Minus, "negative"),
        "beltrami-klein" => make(name, R, &[-1.0, 1.0, 1.0], Minus, "negative"),
        "complex-hyperbolic" => make(name, C, &[-1.0, 1.0, 1.0], Minus, "negative"),
        "real-hyperbolic-3" => make(name, R, &[-1.0, 1.0, 1.0, 1.0], Minus, "negative"),
        "de-sitter" => make(name, R, &[-1.0, 1.0, 1.0, 1.0], Minus, "positive"),
        _ => {
            let n: usize = name.strip_prefix("fubini-study-")?.parse().ok()?;
            if n == 0 {
                return None;
            }
            make(name, C, &vec![1.0; n + 1], Plus, "whole")
        }
    };
    Some(p)
}

impl Preset {
    pub fn space(&self) -> HermitianSpace {
        HermitianSpace::diagonal(self.field, &self.squares, self.metric_sign)
            .expect("preset gram matrices are diagonal")
    }
}
