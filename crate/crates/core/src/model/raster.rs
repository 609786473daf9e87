//! Regular raster grids.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::crs_def::CrsDef;

#[derive(Debug, Error)]
pub enum RasterError {
    #[error("cell size must be > 0, got {0}")]
    NonpositiveCellSize(f64),
    #[error("grid dimensions must be ≥ 1, got {ncols}×{nrows}")]
    EmptyGrid { ncols: usize, nrows: usize },
    #[error("value count {got} does not match {ncols}×{nrows}")]
    ValueCountMismatch {
        ncols: usize,
        nrows: usize,
        got: usize,
    },
    #[error("non-finite value at index {0} is not the nodata sentinel")]
    NonFiniteValue(usize),
}

/// A row-major grid of real values anchored at its lower-left corner.
///
/// Values are stored bottom-up: index 0 is the south-west cell, the first
/// `ncols` entries form the southernmost row.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RasterGrid {
    /// Lower-left corner of the grid extent, CRS units.
    pub origin: (f64, f64),
    pub cell_size: f64,
    pub ncols: usize,
    pub nrows: usize,
    pub nodata: f64,
    pub values: Vec<f64>,
    pub crs: CrsDef,
    pub metadata: BTreeMap<String, String>,
}

impl RasterGrid {
    pub fn new(
        origin: (f64, f64),
        cell_size: f64,
        ncols: usize,
        nrows: usize,
        nodata: f64,
        values: Vec<f64>,
        crs: CrsDef,
    ) -> Result<Self, RasterError> {
        if cell_size <= 0.0 || !cell_size.is_finite() {
            return Err(RasterError::NonpositiveCellSize(cell_size));
        }
        if ncols == 0 || nrows == 0 {
            return Err(RasterError::EmptyGrid { ncols, nrows });
        }
        if values.len() != ncols * nrows {
            return Err(RasterError::ValueCountMismatch {
                ncols,
                nrows,
                got: values.len(),
            });
        }
        for (i, v) in values.iter().enumerate() {
            if !v.is_finite() && !(v.is_nan() && nodata.is_nan()) && *v != nodata {
                return Err(RasterError::NonFiniteValue(i));
            }
        }
        Ok(RasterGrid {
            origin,
            cell_size,
            ncols,
            nrows,
            nodata,
            values,
            crs,
            metadata: BTreeMap::new(),
        })
    }

    /// Grid filled with the nodata sentinel.
    pub fn filled_nodata(
        origin: (f64, f64),
        cell_size: f64,
        ncols: usize,
        nrows: usize,
        nodata: f64,
        crs: CrsDef,
    ) -> Result<Self, RasterError> {
        Self::new(
            origin,
            cell_size,
            ncols,
            nrows,
            nodata,
            vec![nodata; ncols * nrows],
            crs,
        )
    }

    #[inline]
    pub fn index(&self, col: usize, row: usize) -> usize {
        row * self.ncols + col
    }

    pub fn get(&self, col: usize, row: usize) -> f64 {
        self.values[self.index(col, row)]
    }

    pub fn set(&mut self, col: usize, row: usize, v: f64) {
        let i = self.index(col, row);
        self.values[i] = v;
    }

    pub fn is_nodata(&self, v: f64) -> bool {
        v == self.nodata || (v.is_nan() && self.nodata.is_nan())
    }

    /// Center of cell (col, row) in CRS units; row 0 is the southernmost row.
    pub fn cell_center(&self, col: usize, row: usize) -> (f64, f64) {
        (
            self.origin.0 + (col as f64 + 0.5) * self.cell_size,
            self.origin.1 + (row as f64 + 0.5) * self.cell_size,
        )
    }

    /// (xmin, ymin, xmax, ymax) of the full grid extent.
    pub fn bbox(&self) -> (f64, f64, f64, f64) {
        (
            self.origin.0,
            self.origin.1,
            self.origin.0 + self.ncols as f64 * self.cell_size,
            self.origin.1 + self.nrows as f64 * self.cell_size,
        )
    }

    /// Cell containing point (x, y), if inside the extent.
    pub fn cell_at(&self, x: f64, y: f64) -> Option<(usize, usize)> {
        let (x0, y0, x1, y1) = self.bbox();
        if x < x0 || x >= x1 || y < y0 || y >= y1 {
            return None;
        }
        let col = ((x - x0) / self.cell_size) as usize;
        let row = ((y - y0) / self.cell_size) as usize;
        Some((col.min(self.ncols - 1), row.min(self.nrows - 1)))
    }
}
