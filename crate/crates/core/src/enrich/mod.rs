//! Numerical enrichment: inverse-distance weighting, ordinary kriging with
//! variogram fitting, kernel density surfaces, rare-event augmentation and
//! spatial-coverage metrics.
//!
//! All distances are planar in the grid's projected CRS; geographic inputs
//! must be reprojected before enrichment and are rejected at `GridSpec`
//! construction.

mod augment;
mod coverage;
mod grid;
mod idw;
mod kde;
mod kriging;
pub mod linalg;
mod variogram;

pub use augment::{augment_rare, SyntheticPoint};
pub use coverage::{coverage_points, coverage_raster};
pub use grid::{GridSpec, Sample};
pub use idw::idw;
pub use kde::{kde, silverman_bandwidth};
pub use kriging::{ordinary_kriging, ordinary_kriging_opts, KrigingOptions};
pub use variogram::{fit_variogram, VariogramKind, VariogramModel};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum EnrichError {
    #[error("no samples supplied")]
    NoSamples,
    #[error("duplicate sample location at ({0}, {1})")]
    DuplicateSampleLocation(f64, f64),
    #[error("{got} samples, at least {need} required")]
    TooFewSamples { got: usize, need: usize },
    #[error("all sample locations coincide; distances are degenerate")]
    DegenerateDistances,
    #[error("kriging system is singular (first reported at cell {cell})")]
    SingularSystem { cell: usize },
    #[error("no points supplied")]
    NoPoints,
    #[error("bandwidth must be > 0, got {0}")]
    NonpositiveBandwidth(f64),
    #[error("boundary encloses no evaluation cells or has no area")]
    EmptyBoundary,
    #[error("CRS mismatch: data in EPSG {data} but boundary in EPSG {boundary}")]
    CrsMismatch { data: i32, boundary: i32 },
    #[error("enrichment requires a projected CRS, got geographic EPSG {0}")]
    GeographicCrs(i32),
    #[error("invalid grid: {0}")]
    BadGrid(String),
    #[error("invalid variogram: {0}")]
    BadVariogram(String),
    #[error("IDW power must be > 0, got {0}")]
    NonpositivePower(f64),
}
