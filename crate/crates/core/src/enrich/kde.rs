//! 2D Gaussian kernel density surfaces.

use crate::model::{Coord, RasterGrid};

use super::grid::GridSpec;
use super::EnrichError;

/// Density per unit area at every cell center:
/// f(c) = (1/n) Σᵢ (2πh²)⁻¹ exp(−‖c − pᵢ‖² / (2h²)).
pub fn kde(points: &[Coord], bandwidth: f64, spec: &GridSpec) -> Result<RasterGrid, EnrichError> {
    if points.is_empty() {
        return Err(EnrichError::NoPoints);
    }
    if !(bandwidth > 0.0) || !bandwidth.is_finite() {
        return Err(EnrichError::NonpositiveBandwidth(bandwidth));
    }
    let h2 = bandwidth * bandwidth;
    let norm = 1.0 / (points.len() as f64 * 2.0 * std::f64::consts::PI * h2);
    let mut out = spec.allocate(0.0);
    for row in 0..out.nrows {
        for col in 0..out.ncols {
            let (cx, cy) = out.cell_center(col, row);
            let mut acc = 0.0;
            for p in points {
                let d2 = (p.x - cx) * (p.x - cx) + (p.y - cy) * (p.y - cy);
                acc += (-d2 / (2.0 * h2)).exp();
            }
            out.set(col, row, acc * norm);
        }
    }
    Ok(out)
}

/// Silverman's rule, per axis averaged: h = n^(-1/6) · (σx + σy)/2 for the
/// 2D Gaussian kernel. `None` when the point spread is degenerate (a single
/// point or all points coincident on both axes).
pub fn silverman_bandwidth(points: &[Coord]) -> Option<f64> {
    let n = points.len();
    if n < 2 {
        return None;
    }
    let nf = n as f64;
    let mean_x = points.iter().map(|p| p.x).sum::<f64>() / nf;
    let mean_y = points.iter().map(|p| p.y).sum::<f64>() / nf;
    let var_x = points.iter().map(|p| (p.x - mean_x).powi(2)).sum::<f64>() / (nf - 1.0);
    let var_y = points.iter().map(|p| (p.y - mean_y).powi(2)).sum::<f64>() / (nf - 1.0);
    let h = nf.powf(-1.0 / 6.0) * (var_x.sqrt() + var_y.sqrt()) / 2.0;
    if h > 0.0 && h.is_finite() {
        Some(h)
    } else {
        None
    }
}
