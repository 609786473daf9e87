//! Pilot-site configuration.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::geometry::{point_in_rings, validate_geometry, Geometry};

#[derive(Debug, Error)]
pub enum SiteError {
    #[error("site boundary must be a polygon, got {0}")]
    NotAPolygon(&'static str),
    #[error("invalid site boundary: {0:?}")]
    InvalidBoundary(Vec<String>),
    #[error("site centroid ({0}, {1}) lies outside the boundary")]
    CentroidOutsideBoundary(f64, f64),
}

/// A heritage site: id, WGS84 centroid, WGS84 boundary polygon.
///
/// The centroid anchors non-geospatial inputs that carry no coordinates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SiteConfig {
    pub site_id: String,
    /// (lon, lat) degrees, WGS84.
    pub centroid: (f64, f64),
    pub boundary: Geometry,
}

impl SiteConfig {
    pub fn new(
        site_id: impl Into<String>,
        centroid: (f64, f64),
        boundary: Geometry,
    ) -> Result<Self, SiteError> {
        let rings = match &boundary {
            Geometry::Polygon(rings) => rings,
            other => return Err(SiteError::NotAPolygon(other.kind_name())),
        };
        let violations = validate_geometry(&boundary);
        if !violations.is_empty() {
            return Err(SiteError::InvalidBoundary(violations));
        }
        if !point_in_rings(centroid.0, centroid.1, rings) {
            return Err(SiteError::CentroidOutsideBoundary(centroid.0, centroid.1));
        }
        Ok(SiteConfig {
            site_id: site_id.into(),
            centroid,
            boundary,
        })
    }

    pub fn boundary_rings(&self) -> &[Vec<super::geometry::Coord>] {
        match &self.boundary {
            Geometry::Polygon(rings) => rings,
            _ => unreachable!("constructor enforces polygon"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::geometry::Coord;

    fn square(cx: f64, cy: f64, half: f64) -> Geometry {
        Geometry::Polygon(vec![vec![
            Coord::new(cx - half, cy - half),
            Coord::new(cx + half, cy - half),
            Coord::new(cx + half, cy + half),
            Coord::new(cx - half, cy + half),
            Coord::new(cx - half, cy - half),
        ]])
    }

    #[test]
    fn centroid_inside_is_accepted() {
        assert!(SiteConfig::new("delos", (25.27, 37.39), square(25.27, 37.39, 0.05)).is_ok());
    }

    #[test]
    fn centroid_outside_is_rejected() {
        assert!(matches!(
            SiteConfig::new("delos", (26.0, 37.39), square(25.27, 37.39, 0.05)),
            Err(SiteError::CentroidOutsideBoundary(..))
        ));
    }
}
