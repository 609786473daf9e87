//! Shared domain types: geometry, layers, rasters, CRS definitions, sites
//! and provenance. Everything here is an immutable value type after
//! construction and safe to share across workers.

pub mod crs_def;
pub mod geometry;
pub mod layer;
pub mod provenance;
pub mod raster;
pub mod site;
pub mod value;

pub use crs_def::{CrsDef, CrsKind, Ellipsoid, HelmertParams, ProjectionParams};
pub use geometry::{point_in_rings, ring_signed_area, validate_geometry, Coord, Geometry, Ring};
pub use layer::{
    is_valid_identifier, normalize_identifier, AttributeField, FeatureLayer, FeatureRow,
    LayerError,
};
pub use provenance::{ProvenanceError, ProvenanceRecord, Stage};
pub use raster::{RasterError, RasterGrid};
pub use site::{SiteConfig, SiteError};
pub use value::{CellValue, ValueType};
