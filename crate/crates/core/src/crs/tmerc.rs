//! Transverse Mercator, Krüger n-series to n⁶.
//!
//! Conformal-latitude formulation: geodetic latitude is mapped to the
//! conformal sphere, the spherical transverse Mercator coordinates are
//! corrected by the α/β trigonometric series, and the result is scaled by
//! the rectifying radius. Inverse iterates the conformal-to-geodetic
//! tangent with Newton steps to < 1e-12 relative.

use crate::model::crs_def::CrsDef;

use super::CrsError;

pub struct TransverseMercator {
    lon0_rad: f64,
    k0: f64,
    false_easting: f64,
    false_northing: f64,
    e: f64,
    e2: f64,
    rectifying_radius: f64,
    alpha: [f64; 6],
    beta: [f64; 6],
    xi0_at_origin: f64,
}

impl TransverseMercator {
    pub fn new(crs: &CrsDef) -> Self {
        let n = crs.ellipsoid.third_flattening();
        let n2 = n * n;
        let n3 = n2 * n;
        let n4 = n3 * n;
        let n5 = n4 * n;
        let n6 = n5 * n;

        let rectifying_radius =
            crs.ellipsoid.semi_major_a / (1.0 + n) * (1.0 + n2 / 4.0 + n4 / 64.0 + n6 / 256.0);

        let alpha = [
            n / 2.0 - 2.0 / 3.0 * n2 + 5.0 / 16.0 * n3 + 41.0 / 180.0 * n4 - 127.0 / 288.0 * n5
                + 7891.0 / 37800.0 * n6,
            13.0 / 48.0 * n2 - 3.0 / 5.0 * n3 + 557.0 / 1440.0 * n4 + 281.0 / 630.0 * n5
                - 1_983_433.0 / 1_935_360.0 * n6,
            61.0 / 240.0 * n3 - 103.0 / 140.0 * n4 + 15061.0 / 26880.0 * n5
                + 167_603.0 / 181_440.0 * n6,
            49561.0 / 161_280.0 * n4 - 179.0 / 168.0 * n5 + 6_601_661.0 / 7_257_600.0 * n6,
            34729.0 / 80640.0 * n5 - 3_418_889.0 / 1_995_840.0 * n6,
            212_378_941.0 / 319_334_400.0 * n6,
        ];
        let beta = [
            n / 2.0 - 2.0 / 3.0 * n2 + 37.0 / 96.0 * n3 - 1.0 / 360.0 * n4 - 81.0 / 512.0 * n5
                + 96199.0 / 604_800.0 * n6,
            1.0 / 48.0 * n2 + 1.0 / 15.0 * n3 - 437.0 / 1440.0 * n4 + 46.0 / 105.0 * n5
                - 1_118_711.0 / 3_870_720.0 * n6,
            17.0 / 480.0 * n3 - 37.0 / 840.0 * n4 - 209.0 / 4480.0 * n5
                + 5569.0 / 90720.0 * n6,
            4397.0 / 161_280.0 * n4 - 11.0 / 504.0 * n5 - 830_251.0 / 7_257_600.0 * n6,
            4583.0 / 161_280.0 * n5 - 108_847.0 / 3_991_680.0 * n6,
            20_648_693.0 / 638_668_800.0 * n6,
        ];

        let e2 = crs.ellipsoid.e2();
        let mut tm = TransverseMercator {
            lon0_rad: crs.projection.lon_origin.to_radians(),
            k0: crs.projection.scale_factor_k0,
            false_easting: crs.projection.false_easting,
            false_northing: crs.projection.false_northing,
            e: e2.sqrt(),
            e2,
            rectifying_radius,
            alpha,
            beta,
            xi0_at_origin: 0.0,
        };
        if crs.projection.lat_origin != 0.0 {
            tm.xi0_at_origin = tm.xi_eta(crs.projection.lat_origin.to_radians(), 0.0).0;
        }
        tm
    }

    fn tau_to_tau_prime(&self, tau: f64) -> f64 {
        let sec = (1.0 + tau * tau).sqrt();
        let sigma = (self.e * (self.e * tau / sec).atanh()).sinh();
        tau * (1.0 + sigma * sigma).sqrt() - sigma * sec
    }

    fn tau_prime_to_tau(&self, tau_prime: f64) -> f64 {
        let mut tau = tau_prime;
        for _ in 0..20 {
            let sec = (1.0 + tau * tau).sqrt();
            let sigma = (self.e * (self.e * tau / sec).atanh()).sinh();
            let est = tau * (1.0 + sigma * sigma).sqrt() - sigma * sec;
            let dtau = (tau_prime - est) * (1.0 + (1.0 - self.e2) * tau * tau)
                / ((1.0 - self.e2) * sec * (1.0 + est * est).sqrt());
            tau += dtau;
            if dtau.abs() < 1e-14 * (1.0 + tau.abs()) {
                break;
            }
        }
        tau
    }

    /// Gauss-Schreiber coordinates plus Krüger correction series.
    fn xi_eta(&self, lat_rad: f64, dlon: f64) -> (f64, f64) {
        let tau_prime = self.tau_to_tau_prime(lat_rad.tan());
        let xi_prime = tau_prime.atan2(dlon.cos());
        let eta_prime =
            (dlon.sin() / (tau_prime * tau_prime + dlon.cos() * dlon.cos()).sqrt()).asinh();
        let mut xi = xi_prime;
        let mut eta = eta_prime;
        for (j, a) in self.alpha.iter().enumerate() {
            let k = 2.0 * (j as f64 + 1.0);
            xi += a * (k * xi_prime).sin() * (k * eta_prime).cosh();
            eta += a * (k * xi_prime).cos() * (k * eta_prime).sinh();
        }
        (xi, eta)
    }

    /// (lat°, lon°) → (easting, northing) meters.
    pub fn forward(&self, lat_deg: f64, lon_deg: f64) -> Result<(f64, f64), CrsError> {
        if !(-90.0..=90.0).contains(&lat_deg) || !lat_deg.is_finite() {
            return Err(CrsError::LatitudeOutOfRange(lat_deg));
        }
        let lon0_deg = self.lon0_rad.to_degrees();
        let mut dlon_deg = lon_deg - lon0_deg;
        while dlon_deg > 180.0 {
            dlon_deg -= 360.0;
        }
        while dlon_deg < -180.0 {
            dlon_deg += 360.0;
        }
        if dlon_deg.abs() >= 30.0 || !dlon_deg.is_finite() {
            return Err(CrsError::OutOfProjectionDomain {
                lon: lon_deg,
                lon_origin: lon0_deg,
            });
        }
        let (xi, eta) = self.xi_eta(lat_deg.to_radians(), dlon_deg.to_radians());
        Ok((
            self.false_easting + self.k0 * self.rectifying_radius * eta,
            self.false_northing + self.k0 * self.rectifying_radius * (xi - self.xi0_at_origin),
        ))
    }

    /// (easting, northing) meters → (lat°, lon°).
    pub fn inverse(&self, easting: f64, northing: f64) -> Result<(f64, f64), CrsError> {
        let eta = (easting - self.false_easting) / (self.k0 * self.rectifying_radius);
        let xi = (northing - self.false_northing) / (self.k0 * self.rectifying_radius)
            + self.xi0_at_origin;

        let mut xi_prime = xi;
        let mut eta_prime = eta;
        for (j, b) in self.beta.iter().enumerate() {
            let k = 2.0 * (j as f64 + 1.0);
            xi_prime -= b * (k * xi).sin() * (k * eta).cosh();
            eta_prime -= b * (k * xi).cos() * (k * eta).sinh();
        }

        let sinh_eta = eta_prime.sinh();
        let cos_xi = xi_prime.cos();
        let tau_prime = xi_prime.sin() / (sinh_eta * sinh_eta + cos_xi * cos_xi).sqrt();
        let tau = self.tau_prime_to_tau(tau_prime);

        let lat = tau.atan().to_degrees();
        let lon = (self.lon0_rad + sinh_eta.atan2(cos_xi)).to_degrees();
        if (lon - self.lon0_rad.to_degrees()).abs() >= 30.0 {
            return Err(CrsError::OutOfProjectionDomain {
                lon,
                lon_origin: self.lon0_rad.to_degrees(),
            });
        }
        Ok((lat, lon))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crs::registry::greek_grid;

    #[test]
    fn projection_origin_maps_to_false_origin() {
        let tm = TransverseMercator::new(&greek_grid());
        let (e, n) = tm.forward(0.0, 24.0).unwrap();
        assert!((e - 500_000.0).abs() < 1e-6);
        assert!(n.abs() < 1e-6);
    }

    #[test]
    fn out_of_domain_longitude_is_rejected() {
        let tm = TransverseMercator::new(&greek_grid());
        assert!(matches!(
            tm.forward(37.0, 60.0),
            Err(CrsError::OutOfProjectionDomain { .. })
        ));
    }

    #[test]
    fn forward_inverse_roundtrip() {
        let tm = TransverseMercator::new(&greek_grid());
        let mut worst = 0.0f64;
        for i in 0..1000 {
            let lat = 34.0 + 8.0 * ((i as f64 * 0.618_033_988_749_895) % 1.0);
            let lon = 19.5 + 9.0 * ((i as f64 * 0.414_213_562_373_095) % 1.0);
            let (e, n) = tm.forward(lat, lon).unwrap();
            let (lat2, lon2) = tm.inverse(e, n).unwrap();
            let (e2, n2) = tm.forward(lat2, lon2).unwrap();
            worst = worst.max((e - e2).hypot(n - n2));
        }
        assert!(worst < 1e-6, "worst TM round-trip {worst} m");
    }

    #[test]
    fn scale_factor_holds_at_central_meridian() {
        // ∂E/∂(a·cos φ·dλ) ≈ k0 by central finite differences
        let crs = greek_grid();
        let tm = TransverseMercator::new(&crs);
        let lat = 37.5f64;
        let dlon = 1e-7;
        let (e_plus, _) = tm.forward(lat, 24.0 + dlon).unwrap();
        let (e_minus, _) = tm.forward(lat, 24.0 - dlon).unwrap();
        // radius of the parallel circle on the ellipsoid
        let e2 = crs.ellipsoid.e2();
        let sin_lat = lat.to_radians().sin();
        let nu = crs.ellipsoid.semi_major_a / (1.0 - e2 * sin_lat * sin_lat).sqrt();
        let arc = nu * lat.to_radians().cos() * (2.0 * dlon).to_radians();
        let k = (e_plus - e_minus) / arc;
        assert!(
            (k - crs.projection.scale_factor_k0).abs() < 1e-6,
            "measured scale {k}"
        );
    }
}
