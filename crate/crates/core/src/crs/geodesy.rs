//! Ellipsoidal geodesy: geodetic ↔ ECEF conversion and the 7-parameter
//! position-vector datum shift.

use crate::model::crs_def::{Ellipsoid, HelmertParams};

use super::CrsError;

const ARCSEC_TO_RAD: f64 = std::f64::consts::PI / (180.0 * 3600.0);

/// Geodetic (degrees, ellipsoid height 0) → Earth-centered Cartesian meters.
pub fn geodetic_to_ecef(
    lat_deg: f64,
    lon_deg: f64,
    ell: &Ellipsoid,
) -> Result<(f64, f64, f64), CrsError> {
    if !(-90.0..=90.0).contains(&lat_deg) || !lat_deg.is_finite() {
        return Err(CrsError::LatitudeOutOfRange(lat_deg));
    }
    let lat = lat_deg.to_radians();
    let lon = lon_deg.to_radians();
    let e2 = ell.e2();
    let sin_lat = lat.sin();
    let nu = ell.semi_major_a / (1.0 - e2 * sin_lat * sin_lat).sqrt();
    Ok((
        nu * lat.cos() * lon.cos(),
        nu * lat.cos() * lon.sin(),
        nu * (1.0 - e2) * sin_lat,
    ))
}

/// ECEF meters → geodetic degrees on the given ellipsoid.
///
/// Bowring's closed-form seed followed by fixed-point refinement of the
/// geodetic latitude; converges below 1e-12 rad for Earth-surface points.
pub fn ecef_to_geodetic(x: f64, y: f64, z: f64, ell: &Ellipsoid) -> (f64, f64) {
    let a = ell.semi_major_a;
    let b = ell.semi_minor_b();
    let e2 = ell.e2();
    let ep2 = (a * a - b * b) / (b * b);
    let p = x.hypot(y);
    if p < 1e-9 {
        // pole
        let lat = if z >= 0.0 { 90.0 } else { -90.0 };
        return (lat, 0.0);
    }
    let lon = y.atan2(x);
    let theta = (z * a).atan2(p * b);
    let (st, ct) = theta.sin_cos();
    let mut lat = (z + ep2 * b * st * st * st).atan2(p - e2 * a * ct * ct * ct);
    for _ in 0..5 {
        let sin_lat = lat.sin();
        let nu = a / (1.0 - e2 * sin_lat * sin_lat).sqrt();
        let next = ((z + e2 * nu * sin_lat) / p).atan();
        if (next - lat).abs() < 1e-14 {
            lat = next;
            break;
        }
        lat = next;
    }
    (lat.to_degrees(), lon.to_degrees())
}

/// Position-vector 7-parameter transform:
/// p' = (1 + s·1e-6) · R(rx, ry, rz) · p + t, small-angle rotation matrix.
pub fn helmert_forward(p: (f64, f64, f64), h: &HelmertParams) -> (f64, f64, f64) {
    if h.is_identity() {
        return p;
    }
    let (x, y, z) = p;
    let rx = h.rx * ARCSEC_TO_RAD;
    let ry = h.ry * ARCSEC_TO_RAD;
    let rz = h.rz * ARCSEC_TO_RAD;
    let m = 1.0 + h.scale_ppm * 1e-6;
    (
        m * (x - rz * y + ry * z) + h.dx,
        m * (rz * x + y - rx * z) + h.dy,
        m * (-ry * x + rx * y + z) + h.dz,
    )
}

/// Exact algebraic inverse of `helmert_forward`: subtract the translation,
/// undo the scale, then apply the exact inverse of the small-angle rotation
/// matrix (adjugate over determinant, closed form for 3×3).
pub fn helmert_inverse(p: (f64, f64, f64), h: &HelmertParams) -> (f64, f64, f64) {
    if h.is_identity() {
        return p;
    }
    let rx = h.rx * ARCSEC_TO_RAD;
    let ry = h.ry * ARCSEC_TO_RAD;
    let rz = h.rz * ARCSEC_TO_RAD;
    let m = 1.0 + h.scale_ppm * 1e-6;
    let ux = (p.0 - h.dx) / m;
    let uy = (p.1 - h.dy) / m;
    let uz = (p.2 - h.dz) / m;
    // R = I + W with rows [1,-rz,ry], [rz,1,-rx], [-ry,rx,1]
    let det = 1.0 + rx * rx + ry * ry + rz * rz;
    let inv = [
        [1.0 + rx * rx, rz + rx * ry, rx * rz - ry],
        [rx * ry - rz, 1.0 + ry * ry, rx + ry * rz],
        [ry + rx * rz, ry * rz - rx, 1.0 + rz * rz],
    ];
    (
        (inv[0][0] * ux + inv[0][1] * uy + inv[0][2] * uz) / det,
        (inv[1][0] * ux + inv[1][1] * uy + inv[1][2] * uz) / det,
        (inv[2][0] * ux + inv[2][1] * uy + inv[2][2] * uz) / det,
    )
}
