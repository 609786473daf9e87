//! Coordinate reference system engine.
//!
//! Reprojects geometries and rasters among WGS84 (4326), GGRS87 / Greek Grid
//! (2100) and ETRS89-extended / LAEA Europe (3035). Projection math and the
//! position-vector datum shift are implemented here; no external projection
//! library is involved.
//!
//! Internal axis order is always (x, y) = (easting/longitude, northing/latitude).

pub mod geodesy;
pub mod laea;
pub mod registry;
pub mod tmerc;
pub mod transform;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CrsError {
    #[error("latitude {0}° out of range [-90, 90]")]
    LatitudeOutOfRange(f64),
    #[error("longitude {lon}° more than 30° from central meridian {lon_origin}°")]
    OutOfProjectionDomain { lon: f64, lon_origin: f64 },
    #[error("point is antipodal to the projection center")]
    AntipodalPoint,
    #[error("unknown CRS: EPSG {0} is not registered")]
    UnknownCrs(i32),
    #[error("vertex {index}: {source}")]
    VertexOutOfDomain {
        index: usize,
        #[source]
        source: Box<CrsError>,
    },
    #[error("raster reprojection produced an empty extent")]
    EmptyRasterExtent,
}

pub use registry::CrsRegistry;
pub use transform::{transform_geometry, transform_raster};
