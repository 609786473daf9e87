//! Core engine for the ARGUS heritage-data pipeline: shared domain model,
//! coordinate reference system math, attribute standardization against a
//! controlled vocabulary, and numerical enrichment kernels (IDW, ordinary
//! kriging, kernel density surfaces, synthetic augmentation, coverage
//! metrics).
//!
//! Everything in this crate is pure computation over immutable values; file
//! formats and databases live in `argus-io`, querying in `argus-query` and
//! orchestration in `argus-pipeline`.

pub mod crs;
pub mod enrich;
pub mod model;
pub mod standardize;

pub use model::{
    AttributeField, CellValue, Coord, CrsDef, CrsKind, Ellipsoid, FeatureLayer, FeatureRow,
    Geometry, HelmertParams, ProjectionParams, ProvenanceRecord, RasterGrid, SiteConfig, Stage,
    ValueType,
};
