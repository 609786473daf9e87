//! Synthetic-point generation for rare events.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::model::Coord;

use super::EnrichError;

/// A generated point, always flagged synthetic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SyntheticPoint {
    pub x: f64,
    pub y: f64,
    pub synthetic: bool,
}

/// Draw `n_synthetic` points: each is a uniformly chosen real point plus
/// isotropic Gaussian jitter of standard deviation `sigma`. Fully
/// deterministic for a given seed.
pub fn augment_rare(
    points: &[Coord],
    n_synthetic: usize,
    sigma: f64,
    seed: u64,
) -> Result<Vec<SyntheticPoint>, EnrichError> {
    if points.is_empty() {
        return Err(EnrichError::NoPoints);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let jitter = Normal::new(0.0, sigma.max(0.0)).map_err(|_| EnrichError::NoPoints)?;
    let mut out = Vec::with_capacity(n_synthetic);
    for _ in 0..n_synthetic {
        let base = points[rng.gen_range(0..points.len())];
        out.push(SyntheticPoint {
            x: base.x + jitter.sample(&mut rng),
            y: base.y + jitter.sample(&mut rng),
            synthetic: true,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_requested_gives_empty() {
        let out = augment_rare(&[Coord::new(1.0, 2.0)], 0, 10.0, 42).unwrap();
        assert!(out.is_empty());
    }

    #[test]
    fn same_seed_is_deterministic() {
        let pts = [Coord::new(0.0, 0.0), Coord::new(100.0, 50.0)];
        let a = augment_rare(&pts, 50, 5.0, 7).unwrap();
        let b = augment_rare(&pts, 50, 5.0, 7).unwrap();
        assert_eq!(a, b);
        let c = augment_rare(&pts, 50, 5.0, 8).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn jitter_std_matches_sigma() {
        let out = augment_rare(&[Coord::new(0.0, 0.0)], 10_000, 100.0, 1234).unwrap();
        let n = out.len() as f64;
        let mean_x = out.iter().map(|p| p.x).sum::<f64>() / n;
        let std_x =
            (out.iter().map(|p| (p.x - mean_x).powi(2)).sum::<f64>() / (n - 1.0)).sqrt();
        assert!(
            (std_x - 100.0).abs() / 100.0 < 0.05,
            "sample std {std_x} should be within 5% of 100"
        );
        assert!(out.iter().all(|p| p.synthetic));
    }

    #[test]
    fn no_real_points_is_an_error() {
        assert!(matches!(
            augment_rare(&[], 10, 1.0, 0),
            Err(EnrichError::NoPoints)
        ));
    }
}
