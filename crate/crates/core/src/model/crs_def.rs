//! Coordinate reference system definitions.

use serde::{Deserialize, Serialize};

/// Projection family of a CRS.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CrsKind {
    Geographic,
    TransverseMercator,
    LambertAzimuthalEqualArea,
}

/// Reference ellipsoid (semi-major axis in meters, inverse flattening).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Ellipsoid {
    pub semi_major_a: f64,
    pub inverse_flattening: f64,
}

impl Ellipsoid {
    pub const WGS84: Ellipsoid = Ellipsoid {
        semi_major_a: 6_378_137.0,
        inverse_flattening: 298.257_223_563,
    };
    pub const GRS80: Ellipsoid = Ellipsoid {
        semi_major_a: 6_378_137.0,
        inverse_flattening: 298.257_222_101,
    };

    pub fn flattening(&self) -> f64 {
        1.0 / self.inverse_flattening
    }

    pub fn semi_minor_b(&self) -> f64 {
        self.semi_major_a * (1.0 - self.flattening())
    }

    /// First eccentricity squared.
    pub fn e2(&self) -> f64 {
        let f = self.flattening();
        f * (2.0 - f)
    }

    /// Third flattening n = f / (2 - f).
    pub fn third_flattening(&self) -> f64 {
        let f = self.flattening();
        f / (2.0 - f)
    }
}

/// Position-vector 7-parameter datum shift towards WGS84.
/// Translations in meters, rotations in arc-seconds, scale in ppm.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct HelmertParams {
    pub dx: f64,
    pub dy: f64,
    pub dz: f64,
    pub rx: f64,
    pub ry: f64,
    pub rz: f64,
    pub scale_ppm: f64,
}

impl HelmertParams {
    pub const IDENTITY: HelmertParams = HelmertParams {
        dx: 0.0,
        dy: 0.0,
        dz: 0.0,
        rx: 0.0,
        ry: 0.0,
        rz: 0.0,
        scale_ppm: 0.0,
    };

    pub fn translation(dx: f64, dy: f64, dz: f64) -> Self {
        HelmertParams {
            dx,
            dy,
            dz,
            ..Self::IDENTITY
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }
}

/// Projection parameters. All-zero (with k0 = 1) for geographic CRSs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProjectionParams {
    /// Latitude of natural origin, degrees.
    pub lat_origin: f64,
    /// Longitude of natural origin / central meridian, degrees.
    pub lon_origin: f64,
    pub scale_factor_k0: f64,
    pub false_easting: f64,
    pub false_northing: f64,
}

impl ProjectionParams {
    pub const NONE: ProjectionParams = ProjectionParams {
        lat_origin: 0.0,
        lon_origin: 0.0,
        scale_factor_k0: 1.0,
        false_easting: 0.0,
        false_northing: 0.0,
    };
}

/// Full CRS definition: ellipsoid + datum shift + projection.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrsDef {
    /// EPSG code.
    pub srs_id: i32,
    pub kind: CrsKind,
    pub ellipsoid: Ellipsoid,
    pub helmert_to_wgs84: HelmertParams,
    pub projection: ProjectionParams,
    pub name: String,
    /// Substrings matched against PRJ/WKT text to recognize this CRS.
    pub wkt_aliases: Vec<String>,
}

impl CrsDef {
    pub fn is_geographic(&self) -> bool {
        self.kind == CrsKind::Geographic
    }
}
