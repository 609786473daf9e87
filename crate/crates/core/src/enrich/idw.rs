//! Inverse-distance-weighted interpolation onto a grid.

use crate::model::RasterGrid;

use super::grid::{check_samples, GridSpec, Sample};
use super::EnrichError;

pub const NODATA: f64 = -9999.0;

/// Interpolate `samples` onto `spec` with weights d⁻ᵖ.
///
/// A cell whose center lies within `1e-9 · cell_size` of a sample takes that
/// sample's value exactly. With `max_radius` set, only samples inside the
/// radius contribute; a cell with no in-radius sample stays nodata.
pub fn idw(
    samples: &[Sample],
    spec: &GridSpec,
    power: f64,
    max_radius: Option<f64>,
) -> Result<RasterGrid, EnrichError> {
    check_samples(samples, 1)?;
    if !(power > 0.0) {
        return Err(EnrichError::NonpositivePower(power));
    }
    let snap = 1e-9 * spec.cell_size;
    let mut out = spec.allocate(NODATA);
    for row in 0..out.nrows {
        for col in 0..out.ncols {
            let (cx, cy) = out.cell_center(col, row);
            let mut num = 0.0f64;
            let mut den = 0.0f64;
            let mut exact: Option<f64> = None;
            for s in samples {
                let d = s.distance(cx, cy);
                if d < snap {
                    exact = Some(s.value);
                    break;
                }
                if let Some(r) = max_radius {
                    if d > r {
                        continue;
                    }
                }
                let w = d.powf(-power);
                num += w * s.value;
                den += w;
            }
            let value = match exact {
                Some(v) => v,
                None if den > 0.0 => num / den,
                None => continue, // stays nodata
            };
            out.set(col, row, value);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crs::registry::greek_grid;

    fn spec(x1: f64, y1: f64, cell: f64) -> GridSpec {
        GridSpec::new((0.0, 0.0, x1, y1), cell, greek_grid()).unwrap()
    }

    #[test]
    fn single_sample_gives_constant_grid() {
        let spec = spec(10.0, 10.0, 1.0);
        let grid = idw(&[Sample::new(5.0, 5.0, 42.0)], &spec, 2.0, None).unwrap();
        assert!(grid.values.iter().all(|v| (*v - 42.0).abs() < 1e-12));
    }

    #[test]
    fn equidistant_cell_takes_mean() {
        // samples symmetric around the cell center at (5.5, 5.5)
        let spec = spec(11.0, 11.0, 1.0);
        for p in [0.5, 1.0, 2.0, 3.7] {
            let samples = [Sample::new(1.5, 5.5, 0.0), Sample::new(9.5, 5.5, 10.0)];
            let grid = idw(&samples, &spec, p, None).unwrap();
            let (col, row) = grid.cell_at(5.5, 5.5).unwrap();
            assert!(
                (grid.get(col, row) - 5.0).abs() < 1e-12,
                "power {p} broke midpoint symmetry"
            );
        }
    }

    #[test]
    fn coincident_cell_takes_sample_value_exactly() {
        let spec = spec(4.0, 4.0, 1.0);
        // sample exactly on the (2, 2)-cell center
        let samples = [Sample::new(2.5, 2.5, 7.0), Sample::new(0.5, 0.5, 100.0)];
        let grid = idw(&samples, &spec, 2.0, None).unwrap();
        let (col, row) = grid.cell_at(2.5, 2.5).unwrap();
        assert_eq!(grid.get(col, row), 7.0);
    }

    #[test]
    fn out_of_radius_cells_stay_nodata() {
        let spec = spec(100.0, 100.0, 1.0);
        let grid = idw(&[Sample::new(0.5, 0.5, 1.0)], &spec, 2.0, Some(5.0)).unwrap();
        let (c_near, r_near) = grid.cell_at(1.5, 0.5).unwrap();
        assert!(!grid.is_nodata(grid.get(c_near, r_near)));
        let (c_far, r_far) = grid.cell_at(99.5, 99.5).unwrap();
        assert!(grid.is_nodata(grid.get(c_far, r_far)));
    }

    #[test]
    fn empty_and_duplicate_inputs_error() {
        let spec = spec(4.0, 4.0, 1.0);
        assert!(matches!(
            idw(&[], &spec, 2.0, None),
            Err(EnrichError::NoSamples)
        ));
        let dup = [Sample::new(1.0, 1.0, 1.0), Sample::new(1.0, 1.0, 2.0)];
        assert!(matches!(
            idw(&dup, &spec, 2.0, None),
            Err(EnrichError::DuplicateSampleLocation(..))
        ));
    }
}
