//! Hermitian forms over `R` and `C`, the projective models they induce, and
//! the tance-based trigonometry of spherical and hyperbolic geometry.
//!
//! A [`HermitianSpace`] fixes a Gram matrix and a metric sign. Points,
//! tangent vectors, geodesics, triangles and configurations are plain data;
//! every operation takes the space it is evaluated in.

pub mod configuration;
pub mod error;
pub mod geodesic;
pub mod hermitian;
pub mod linalg;
pub mod projective;
pub mod stereographic;
pub mod trigonometry;

pub use configuration::{config_gram, geometrically_equal, witness_unitary, Configuration};
pub use error::{Error, Result};
pub use geodesic::disc::{klein_poincare_map, poincare_klein_map};
pub use geodesic::{
    classify, distance, dual, dual_of_geodesic, geodesic_from_tangent, geodesic_lift,
    geodesic_through, lift_curve, lift_into, same_geodesic, tance, tangent_toward,
    triangle_tance_inequality, vertices, DistanceKind, Geodesic, GeodesicClass, GeodesicLift,
    TriangleInequality,
};
pub use hermitian::{
    contains_signature, scalar, Field, HermitianSpace, MetricSign, OrthonormalBasis, Signature,
    Subspace, DEFAULT_TOLERANCE,
};
pub use linalg::{Matrix, Scalar, Vector};
pub use projective::{
    angle, classify_point, join, meet, metric, oriented_angle, project_along, Line, PointClass,
    ProjectivePoint, TangentVector,
};
pub use stereographic::{
    conformal_factor, pushforward, stereo, stereo_inverse, subsphere_image, Sphere, SpherePoint,
    SubsphereImage,
};
pub use trigonometry::{
    fundamental_identity_residual, interior_angle, law_check, triangle_area_spherical,
    triangle_invariants, Law, Regime, TriangleInvariants, TriangleSpan,
};
