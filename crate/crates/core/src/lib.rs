//! Exact Gröbner cones of finite-type cluster algebras.
//!
//! Cluster algebras are built from polygon models (types A, B, C, D) or
//! from root-system data (all finite types). Their primitive exchange
//! relations give degree vectors, and the Gröbner cone is the dual of the
//! cone those vectors generate. All arithmetic is exact.

pub mod cluster;
pub mod cone;
mod dd;
pub mod error;
pub mod exact;
pub mod groebner;
pub mod polygon;
pub mod root;

pub use cluster::{ClusterData, ExchangeRelation, FrozenMode, VarKind};
pub use cone::{cones_equal, Cone};
pub use error::{Error, Result};
pub use groebner::{groebner_cone, primitive_cone, DegreeVector, Report};
pub use polygon::{Classical, Color, Diagonal, ModelSpec, PolygonModel};
pub use root::{CartanFamily, CartanType, RootModel, Weight};
