//! Exact shattering of finite planar point sets by unions of lines.
//!
//! The crate decides whether a configuration is shattered by unions of `k`
//! lines, evaluates the axiomatic characterizations for two and three lines,
//! compares configurations up to shatter-isomorphism, reduces codimension-two
//! instances in higher dimension to the plane, and handles abstract finite
//! set systems.
//!
//! Geometry is generic over an exact [`Scalar`]; the aliases below fix it to
//! arbitrary-precision rationals, which is what the rest of the API uses.

pub mod abstract_sets;
pub mod affine_nd;
pub mod axioms;
pub mod error;
pub mod figures;
pub mod fuzz;
pub mod generate;
pub mod geom;
pub mod incidence;
pub mod index_set;
pub mod scalar;
pub mod io;
pub mod iso;
pub mod linalg;
pub mod shatter;
mod setcover;

pub use error::{Error, Result};
pub use geom::{are_collinear, orient, AffineMap, Line, Point2};
pub use incidence::{Configuration, LineClass, Matching};
pub use index_set::{IndexSet, MAX_ELEMENTS};
pub use scalar::{format_scalar, Scalar};

pub type Rational = num_rational::BigRational;
pub type Point = Point2<Rational>;
pub type PointConfig = Configuration<Rational>;

pub type AffineSubspace = affine_nd::Flat<Rational>;
pub type AffineConfig = affine_nd::AffineConfiguration<Rational>;

pub type Point64 = Point2<num_rational::Rational64>;
pub type PointConfig64 = Configuration<num_rational::Rational64>;

pub use shatter::{is_shattered, isolate, max_shattered_subset, shatters, IsolationWitness, ShatterReport};
pub use iso::{
    classify_case, representatives, shatter_isomorphic, shatter_structure, CaseLabel, IsoCertificate,
    ShatterStructure,
};
pub use abstract_sets::FiniteSetSystem;
pub use affine_nd::{hyperplane_trace, reduce_dimension, vc_equal_check};
pub use axioms::{AxiomVerdict, B2Reading, Condition, Counterexample};
