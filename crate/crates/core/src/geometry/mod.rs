//! Product-type thin ends: graph curves, subregions with tagged boundary
//! segments, structured triangular meshes, and the nearest-lateral-point
//! search behind the colinearity (Assumption G) checks.

mod curve;
mod end;
mod end3d;
mod mesh;
mod subregion;

pub use curve::GraphCurve;
pub use end::{build_thin_end_2d, nearest_lateral_point, LateralSide, NearestPoint, ProductEnd2D};
pub use end3d::{nearest_lateral_point_3d, CrossSection, NearestPoint3, ProductEnd3D};
pub use mesh::{mesh_rect, mesh_subregion, BoundaryTag, Mesh2D};
pub use subregion::{build_subregion, Subregion};

/// Thickness below which thin-end constructions are rejected: quantities like
/// eps^(l+1) lose float conditioning.
pub const MIN_THICKNESS: f64 = 1e-6;
