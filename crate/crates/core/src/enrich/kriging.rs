//! Ordinary kriging with a global neighborhood.
//!
//! Per cell the (n+1)×(n+1) system — the semivariogram matrix bordered by
//! the unbiasedness row and a Lagrange multiplier — is solved by dense LU
//! with partial pivoting. The matrix depends only on the sample layout, so
//! it is factored once and reused for every cell's right-hand side.

use crate::model::RasterGrid;

use super::grid::{check_samples, GridSpec, Sample};
use super::idw::NODATA;
use super::linalg::lu_factor;
use super::variogram::VariogramModel;
use super::EnrichError;

#[derive(Debug, Clone, Copy, Default)]
pub struct KrigingOptions {
    /// Added to the semivariogram matrix diagonal (sample block only) when
    /// set; off by default so singular layouts surface as errors.
    pub diagonal_jitter: Option<f64>,
}

/// Kriging estimates and variances over the grid.
pub fn ordinary_kriging(
    samples: &[Sample],
    model: &VariogramModel,
    spec: &GridSpec,
) -> Result<(RasterGrid, RasterGrid), EnrichError> {
    ordinary_kriging_opts(samples, model, spec, KrigingOptions::default())
}

pub fn ordinary_kriging_opts(
    samples: &[Sample],
    model: &VariogramModel,
    spec: &GridSpec,
    opts: KrigingOptions,
) -> Result<(RasterGrid, RasterGrid), EnrichError> {
    check_samples(samples, 2)?;
    let n = samples.len();
    let dim = n + 1;

    let mut a = vec![0.0f64; dim * dim];
    for i in 0..n {
        for j in 0..n {
            let d = samples[i].distance(samples[j].x, samples[j].y);
            a[i * dim + j] = model.gamma(d);
        }
        if let Some(jitter) = opts.diagonal_jitter {
            a[i * dim + i] += jitter;
        }
        // unbiasedness border
        a[i * dim + n] = 1.0;
        a[n * dim + i] = 1.0;
    }
    a[n * dim + n] = 0.0;

    // The system matrix is shared by every cell; a singular layout fails at
    // the first cell evaluated.
    let factors = lu_factor(a, dim).ok_or(EnrichError::SingularSystem { cell: 0 })?;

    let mut estimates = spec.allocate(NODATA);
    let mut variances = spec.allocate(NODATA);
    let mut rhs = vec![0.0f64; dim];
    for row in 0..estimates.nrows {
        for col in 0..estimates.ncols {
            let (cx, cy) = estimates.cell_center(col, row);
            for (i, s) in samples.iter().enumerate() {
                rhs[i] = model.gamma(s.distance(cx, cy));
            }
            rhs[n] = 1.0;
            let solution = factors.solve(&rhs);

            let mut estimate = 0.0;
            let mut variance = 0.0;
            for i in 0..n {
                estimate += solution[i] * samples[i].value;
                variance += solution[i] * rhs[i];
            }
            variance += solution[n]; // Lagrange multiplier
            if variance < 0.0 && variance > -1e-9 {
                variance = 0.0;
            }
            estimates.set(col, row, estimate);
            variances.set(col, row, variance);
        }
    }
    Ok((estimates, variances))
}
