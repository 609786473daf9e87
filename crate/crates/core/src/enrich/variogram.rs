//! Empirical semivariogram (Matheron estimator) and weighted least-squares
//! model fitting.

use super::grid::Sample;
use super::EnrichError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VariogramKind {
    Spherical,
    Exponential,
}

/// Fitted semivariogram model. γ(0) = 0 exactly; the nugget is the limit
/// for h → 0⁺, the sill the plateau, `range_a` the (practical) range.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VariogramModel {
    pub kind: VariogramKind,
    pub nugget: f64,
    pub sill: f64,
    pub range_a: f64,
}

impl VariogramModel {
    pub fn new(
        kind: VariogramKind,
        nugget: f64,
        sill: f64,
        range_a: f64,
    ) -> Result<Self, EnrichError> {
        if !(nugget >= 0.0) {
            return Err(EnrichError::BadVariogram(format!("nugget {nugget} < 0")));
        }
        if !(sill > nugget) {
            return Err(EnrichError::BadVariogram(format!(
                "sill {sill} must exceed nugget {nugget}"
            )));
        }
        if !(range_a > 0.0) {
            return Err(EnrichError::BadVariogram(format!("range {range_a} ≤ 0")));
        }
        Ok(VariogramModel {
            kind,
            nugget,
            sill,
            range_a,
        })
    }

    /// Semivariance at lag h.
    pub fn gamma(&self, h: f64) -> f64 {
        if h <= 0.0 {
            return 0.0;
        }
        let partial = self.sill - self.nugget;
        let structure = match self.kind {
            VariogramKind::Spherical => {
                if h >= self.range_a {
                    1.0
                } else {
                    let r = h / self.range_a;
                    1.5 * r - 0.5 * r * r * r
                }
            }
            // practical-range convention: γ reaches ~95% of the sill at range_a
            VariogramKind::Exponential => 1.0 - (-3.0 * h / self.range_a).exp(),
        };
        self.nugget + partial * structure
    }
}

/// Fit a variogram model to samples.
///
/// The empirical semivariogram uses the Matheron estimator over `n_bins`
/// equal-width distance bins up to half the maximum pairwise distance. The
/// model is fitted by weighted least squares (weights = pair counts): for
/// each candidate range on a dense grid the optimal (nugget, partial sill)
/// pair has a closed form, projected onto nugget ≥ 0 and partial sill > 0.
pub fn fit_variogram(
    samples: &[Sample],
    n_bins: usize,
    kind: VariogramKind,
) -> Result<VariogramModel, EnrichError> {
    if samples.len() < 10 {
        return Err(EnrichError::TooFewSamples {
            got: samples.len(),
            need: 10,
        });
    }
    let n_bins = n_bins.max(2);

    let mut max_d = 0.0f64;
    for i in 0..samples.len() {
        for j in (i + 1)..samples.len() {
            max_d = max_d.max(samples[i].distance(samples[j].x, samples[j].y));
        }
    }
    if max_d <= 0.0 {
        return Err(EnrichError::DegenerateDistances);
    }

    let cutoff = max_d / 2.0;
    let width = cutoff / n_bins as f64;
    let mut sums = vec![0.0f64; n_bins];
    let mut counts = vec![0usize; n_bins];
    for i in 0..samples.len() {
        for j in (i + 1)..samples.len() {
            let d = samples[i].distance(samples[j].x, samples[j].y);
            if d <= 0.0 || d > cutoff {
                continue;
            }
            let bin = ((d / width) as usize).min(n_bins - 1);
            let dz = samples[i].value - samples[j].value;
            sums[bin] += dz * dz;
            counts[bin] += 1;
        }
    }

    // (lag, γ̂, weight) for populated bins; Matheron: γ̂ = Σ(Δz)² / 2N
    let points: Vec<(f64, f64, f64)> = (0..n_bins)
        .filter(|&b| counts[b] > 0)
        .map(|b| {
            let lag = (b as f64 + 0.5) * width;
            (lag, sums[b] / (2.0 * counts[b] as f64), counts[b] as f64)
        })
        .collect();
    if points.is_empty() {
        return Err(EnrichError::DegenerateDistances);
    }

    let gamma_scale = points
        .iter()
        .map(|p| p.1)
        .fold(0.0f64, f64::max)
        .max(f64::MIN_POSITIVE);
    let min_partial = 1e-12 * gamma_scale;

    let unit = |h: f64, a: f64| -> f64 {
        match kind {
            VariogramKind::Spherical => {
                if h >= a {
                    1.0
                } else {
                    let r = h / a;
                    1.5 * r - 0.5 * r * r * r
                }
            }
            VariogramKind::Exponential => 1.0 - (-3.0 * h / a).exp(),
        }
    };

    // candidate ranges spanning a fraction of a bin to twice the cutoff
    let mut best: Option<(f64, f64, f64, f64)> = None; // (sse, nugget, partial, range)
    let n_candidates = 256;
    for k in 0..n_candidates {
        let t = (k as f64 + 1.0) / n_candidates as f64;
        let a = (0.05 + 1.95 * t) * cutoff;
        // closed-form weighted least squares over (c0, c1) with g = unit(h/a)
        let (mut sw, mut sg, mut sgg, mut sy, mut sgy) = (0.0, 0.0, 0.0, 0.0, 0.0);
        for &(h, y, w) in &points {
            let g = unit(h, a);
            sw += w;
            sg += w * g;
            sgg += w * g * g;
            sy += w * y;
            sgy += w * g * y;
        }
        let det = sw * sgg - sg * sg;
        let (mut c0, mut c1);
        if det.abs() > 1e-12 * sw.max(1.0) {
            c0 = (sgg * sy - sg * sgy) / det;
            c1 = (sw * sgy - sg * sy) / det;
        } else {
            c0 = 0.0;
            c1 = if sgg > 0.0 { sgy / sgg } else { 0.0 };
        }
        // projection onto the feasible region
        if c0 < 0.0 {
            c0 = 0.0;
            c1 = if sgg > 0.0 { sgy / sgg } else { 0.0 };
        }
        if c1 < min_partial {
            c1 = min_partial;
            c0 = ((sy - c1 * sg) / sw).max(0.0);
        }
        let sse: f64 = points
            .iter()
            .map(|&(h, y, w)| {
                let m = c0 + c1 * unit(h, a);
                w * (y - m) * (y - m)
            })
            .sum();
        if best.map_or(true, |(b, ..)| sse < b) {
            best = Some((sse, c0, c1, a));
        }
    }

    let (_, nugget, partial, range_a) = best.expect("candidate grid is nonempty");
    VariogramModel::new(kind, nugget, nugget + partial, range_a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn halton(i: usize, base: u32) -> f64 {
        let mut f = 1.0;
        let mut r = 0.0;
        let mut n = i as u32 + 1;
        while n > 0 {
            f /= base as f64;
            r += f * (n % base) as f64;
            n /= base;
        }
        r
    }

    #[test]
    fn constant_field_has_vanishing_partial_sill() {
        let samples: Vec<Sample> = (0..40)
            .map(|i| Sample::new(halton(i, 2) * 1000.0, halton(i, 3) * 1000.0, 5.0))
            .collect();
        let model = fit_variogram(&samples, 10, VariogramKind::Spherical).unwrap();
        assert!(
            model.sill - model.nugget <= 1e-6 * 25.0,
            "partial sill {} should vanish for a constant field",
            model.sill - model.nugget
        );
        assert!(model.nugget <= 1e-6 * 25.0);
    }

    #[test]
    fn too_few_samples_is_rejected() {
        let samples: Vec<Sample> = (0..5).map(|i| Sample::new(i as f64, 0.0, 1.0)).collect();
        assert!(matches!(
            fit_variogram(&samples, 10, VariogramKind::Spherical),
            Err(EnrichError::TooFewSamples { got: 5, need: 10 })
        ));
    }

    #[test]
    fn coincident_samples_are_degenerate() {
        let samples: Vec<Sample> = (0..12)
            .map(|i| Sample::new(3.0, 4.0, i as f64))
            .collect();
        // duplicate-location check is the caller's job; here the distance
        // structure itself collapses
        assert!(matches!(
            fit_variogram(&samples, 10, VariogramKind::Spherical),
            Err(EnrichError::DegenerateDistances)
        ));
    }

    #[test]
    fn gamma_shape_invariants() {
        let m = VariogramModel::new(VariogramKind::Spherical, 0.1, 1.0, 500.0).unwrap();
        assert_eq!(m.gamma(0.0), 0.0);
        let near0 = m.gamma(1e-9);
        assert!((near0 - 0.1).abs() < 1e-6, "limit h→0⁺ is the nugget");
        assert!((m.gamma(500.0) - 1.0).abs() < 1e-12);
        assert!((m.gamma(2000.0) - 1.0).abs() < 1e-12);
        // monotone nondecreasing
        let mut prev = 0.0;
        for k in 1..200 {
            let g = m.gamma(k as f64 * 5.0);
            assert!(g >= prev - 1e-12);
            prev = g;
        }
        let e = VariogramModel::new(VariogramKind::Exponential, 0.0, 2.0, 300.0).unwrap();
        assert!((e.gamma(300.0) - 2.0 * 0.950_212_931_632_14).abs() < 1e-9);
    }

    #[test]
    fn invalid_models_are_rejected() {
        assert!(VariogramModel::new(VariogramKind::Spherical, -0.1, 1.0, 10.0).is_err());
        assert!(VariogramModel::new(VariogramKind::Spherical, 1.0, 1.0, 10.0).is_err());
        assert!(VariogramModel::new(VariogramKind::Spherical, 0.0, 1.0, 0.0).is_err());
    }
}
