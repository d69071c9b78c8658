//! Combinatorial surfaces and normal multicurves.
//!
//! A surface is a gluing of oriented triangles along their sides; curves are
//! carried as per-edge crossing counts (normal coordinates) on a fixed
//! triangulation, with tracing, cut-census, and intersection-number support.

mod arrangement;
mod capped;
mod curves;
mod enumerate;
mod normal;
mod overlay;
mod standard;
mod tri;

pub use arrangement::{cut_along, membership_census, CutPieces, MembershipCensus, Piece};
pub use capped::{cut_and_cap, CappedSurface};
pub use curves::{is_essential, is_separating, CurveClass};
pub use enumerate::enumerate_curve_classes;
pub use normal::{trace_components, validate_normal, CurveEmbedding, NormalMulticurve};
pub use overlay::{algebraic_intersection, geometric_intersection};
pub use standard::{
    build_standard_triangulation, standard_disjoint_family, standard_longitude,
    standard_meridian, two_handle_curve,
};
pub use tri::{Triangulation, TriangulationJson};
