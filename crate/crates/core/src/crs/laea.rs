//! Ellipsoidal Lambert azimuthal equal-area, authalic-latitude formulation
//! (oblique aspect).

use crate::model::crs_def::CrsDef;

use super::CrsError;

pub struct LambertAzimuthalEqualArea {
    lon0_rad: f64,
    false_easting: f64,
    false_northing: f64,
    e: f64,
    e2: f64,
    q_pole: f64,
    sin_beta0: f64,
    cos_beta0: f64,
    authalic_radius: f64,
    d: f64,
}

impl LambertAzimuthalEqualArea {
    pub fn new(crs: &CrsDef) -> Self {
        let a = crs.ellipsoid.semi_major_a;
        let e2 = crs.ellipsoid.e2();
        let e = e2.sqrt();
        let lat0 = crs.projection.lat_origin.to_radians();

        let q = |phi: f64| -> f64 {
            let s = phi.sin();
            (1.0 - e2)
                * (s / (1.0 - e2 * s * s)
                    - (1.0 / (2.0 * e)) * ((1.0 - e * s) / (1.0 + e * s)).ln())
        };
        let q_pole = q(std::f64::consts::FRAC_PI_2);
        let q0 = q(lat0);
        let beta0 = (q0 / q_pole).clamp(-1.0, 1.0).asin();
        let authalic_radius = a * (q_pole / 2.0).sqrt();
        let sin_lat0 = lat0.sin();
        let d = a * (lat0.cos() / (1.0 - e2 * sin_lat0 * sin_lat0).sqrt())
            / (authalic_radius * beta0.cos());

        LambertAzimuthalEqualArea {
            lon0_rad: crs.projection.lon_origin.to_radians(),
            false_easting: crs.projection.false_easting,
            false_northing: crs.projection.false_northing,
            e,
            e2,
            q_pole,
            sin_beta0: beta0.sin(),
            cos_beta0: beta0.cos(),
            authalic_radius,
            d,
        }
    }

    fn q_of(&self, phi: f64) -> f64 {
        let s = phi.sin();
        (1.0 - self.e2)
            * (s / (1.0 - self.e2 * s * s)
                - (1.0 / (2.0 * self.e)) * ((1.0 - self.e * s) / (1.0 + self.e * s)).ln())
    }

    /// (lat°, lon°) → (easting, northing) meters.
    pub fn forward(&self, lat_deg: f64, lon_deg: f64) -> Result<(f64, f64), CrsError> {
        if !(-90.0..=90.0).contains(&lat_deg) || !lat_deg.is_finite() {
            return Err(CrsError::LatitudeOutOfRange(lat_deg));
        }
        let lat = lat_deg.to_radians();
        let dlon = normalize_lon(lon_deg.to_radians() - self.lon0_rad);
        let beta = (self.q_of(lat) / self.q_pole).clamp(-1.0, 1.0).asin();
        let denom = 1.0 + self.sin_beta0 * beta.sin() + self.cos_beta0 * beta.cos() * dlon.cos();
        if denom < 1e-12 {
            return Err(CrsError::AntipodalPoint);
        }
        let b = self.authalic_radius * (2.0 / denom).sqrt();
        let easting = self.false_easting + b * self.d * beta.cos() * dlon.sin();
        let northing = self.false_northing
            + (b / self.d)
                * (self.cos_beta0 * beta.sin() - self.sin_beta0 * beta.cos() * dlon.cos());
        Ok((easting, northing))
    }

    /// (easting, northing) meters → (lat°, lon°).
    pub fn inverse(&self, easting: f64, northing: f64) -> Result<(f64, f64), CrsError> {
        let x = (easting - self.false_easting) / self.d;
        let y = (northing - self.false_northing) * self.d;
        let rho = x.hypot(y);
        if rho < 1e-9 {
            // projection center
            let lat0 = self.phi_from_q(self.q_pole * self.sin_beta0);
            return Ok((lat0.to_degrees(), self.lon0_rad.to_degrees()));
        }
        let c = 2.0 * (rho / (2.0 * self.authalic_radius)).clamp(-1.0, 1.0).asin();
        let q_prime =
            self.q_pole * (c.cos() * self.sin_beta0 + y * c.sin() * self.cos_beta0 / rho);
        let lon = self.lon0_rad
            + (x * c.sin()).atan2(rho * self.cos_beta0 * c.cos() - y * self.sin_beta0 * c.sin());
        let lat = self.phi_from_q(q_prime);
        Ok((lat.to_degrees(), normalize_lon(lon).to_degrees()))
    }

    /// Recover geodetic latitude from the authalic function value by
    /// fixed-point iteration.
    fn phi_from_q(&self, q: f64) -> f64 {
        let mut phi = (q / 2.0).clamp(-1.0, 1.0).asin();
        if (q.abs() - self.q_pole.abs()).abs() < 1e-14 {
            return if q >= 0.0 {
                std::f64::consts::FRAC_PI_2
            } else {
                -std::f64::consts::FRAC_PI_2
            };
        }
        for _ in 0..30 {
            let s = phi.sin();
            let one = 1.0 - self.e2 * s * s;
            let delta = one * one / (2.0 * phi.cos())
                * (q / (1.0 - self.e2) - s / one
                    + (1.0 / (2.0 * self.e)) * ((1.0 - self.e * s) / (1.0 + self.e * s)).ln());
            phi += delta;
            if delta.abs() < 1e-14 {
                break;
            }
        }
        phi
    }
}

fn normalize_lon(mut lon: f64) -> f64 {
    use std::f64::consts::PI;
    while lon > PI {
        lon -= 2.0 * PI;
    }
    while lon < -PI {
        lon += 2.0 * PI;
    }
    lon
}
