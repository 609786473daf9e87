//! Target-grid description for enrichment outputs.

use crate::model::{CrsDef, RasterGrid};

use super::EnrichError;

/// A measured point: planar location plus value, in the grid CRS.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sample {
    pub x: f64,
    pub y: f64,
    pub value: f64,
}

impl Sample {
    pub fn new(x: f64, y: f64, value: f64) -> Self {
        Sample { x, y, value }
    }

    pub fn distance(&self, x: f64, y: f64) -> f64 {
        (self.x - x).hypot(self.y - y)
    }
}

/// Extent + resolution + CRS of the raster a kernel writes into.
#[derive(Debug, Clone)]
pub struct GridSpec {
    /// (xmin, ymin, xmax, ymax), CRS units.
    pub bbox: (f64, f64, f64, f64),
    pub cell_size: f64,
    pub crs: CrsDef,
}

impl GridSpec {
    pub fn new(bbox: (f64, f64, f64, f64), cell_size: f64, crs: CrsDef) -> Result<Self, EnrichError> {
        if crs.is_geographic() {
            return Err(EnrichError::GeographicCrs(crs.srs_id));
        }
        let (x0, y0, x1, y1) = bbox;
        if !(x1 > x0 && y1 > y0) || !cell_size.is_finite() || cell_size <= 0.0 {
            return Err(EnrichError::BadGrid(format!(
                "bbox ({x0}, {y0}, {x1}, {y1}) with cell size {cell_size}"
            )));
        }
        let spec = GridSpec {
            bbox,
            cell_size,
            crs,
        };
        if spec.ncols() == 0 || spec.nrows() == 0 {
            return Err(EnrichError::BadGrid("zero rows or columns".into()));
        }
        Ok(spec)
    }

    pub fn ncols(&self) -> usize {
        (((self.bbox.2 - self.bbox.0) / self.cell_size).ceil() as usize).max(1)
    }

    pub fn nrows(&self) -> usize {
        (((self.bbox.3 - self.bbox.1) / self.cell_size).ceil() as usize).max(1)
    }

    /// Empty (all-nodata) raster matching this spec.
    pub fn allocate(&self, nodata: f64) -> RasterGrid {
        RasterGrid::filled_nodata(
            (self.bbox.0, self.bbox.1),
            self.cell_size,
            self.ncols(),
            self.nrows(),
            nodata,
            self.crs.clone(),
        )
        .expect("validated spec produces a valid raster")
    }
}

/// Reject empty sample sets and exactly coincident locations.
pub(crate) fn check_samples(samples: &[Sample], min: usize) -> Result<(), EnrichError> {
    if samples.is_empty() {
        return Err(EnrichError::NoSamples);
    }
    if samples.len() < min {
        return Err(EnrichError::TooFewSamples {
            got: samples.len(),
            need: min,
        });
    }
    for i in 0..samples.len() {
        for j in (i + 1)..samples.len() {
            if samples[i].x == samples[j].x && samples[i].y == samples[j].y {
                return Err(EnrichError::DuplicateSampleLocation(
                    samples[i].x,
                    samples[i].y,
                ));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crs::registry::{greek_grid, wgs84};

    #[test]
    fn geographic_crs_is_rejected() {
        assert!(matches!(
            GridSpec::new((0.0, 0.0, 10.0, 10.0), 1.0, wgs84()),
            Err(EnrichError::GeographicCrs(4326))
        ));
    }

    #[test]
    fn dimensions_round_up() {
        let spec = GridSpec::new((0.0, 0.0, 10.5, 4.0), 1.0, greek_grid()).unwrap();
        assert_eq!(spec.ncols(), 11);
        assert_eq!(spec.nrows(), 4);
        let raster = spec.allocate(-9999.0);
        assert_eq!(raster.values.len(), 44);
    }

    #[test]
    fn duplicate_locations_are_rejected() {
        let samples = vec![Sample::new(1.0, 1.0, 5.0), Sample::new(1.0, 1.0, 7.0)];
        assert!(matches!(
            check_samples(&samples, 1),
            Err(EnrichError::DuplicateSampleLocation(..))
        ));
    }
}
