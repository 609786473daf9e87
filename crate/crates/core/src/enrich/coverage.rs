//! Spatial-coverage fractions against a site boundary.

use crate::model::geometry::point_in_rings;
use crate::model::{Coord, Geometry, RasterGrid};

use super::EnrichError;

/// Lattice resolution for the point-coverage form.
const LATTICE: usize = 200;

fn boundary_rings(boundary: &Geometry) -> Result<&[Vec<Coord>], EnrichError> {
    match boundary {
        Geometry::Polygon(rings) if !rings.is_empty() && rings[0].len() >= 4 => Ok(rings),
        _ => Err(EnrichError::EmptyBoundary),
    }
}

/// Fraction of boundary-interior cells that hold data:
/// (# non-nodata cells whose center is inside) / (# cells inside).
/// The raster and boundary must be in the same CRS.
pub fn coverage_raster(
    grid: &RasterGrid,
    boundary: &Geometry,
    boundary_srs: i32,
) -> Result<f64, EnrichError> {
    if grid.crs.srs_id != boundary_srs {
        return Err(EnrichError::CrsMismatch {
            data: grid.crs.srs_id,
            boundary: boundary_srs,
        });
    }
    let rings = boundary_rings(boundary)?;
    let mut inside = 0usize;
    let mut populated = 0usize;
    for row in 0..grid.nrows {
        for col in 0..grid.ncols {
            let (cx, cy) = grid.cell_center(col, row);
            if point_in_rings(cx, cy, rings) {
                inside += 1;
                if !grid.is_nodata(grid.get(col, row)) {
                    populated += 1;
                }
            }
        }
    }
    if inside == 0 {
        return Err(EnrichError::EmptyBoundary);
    }
    Ok(populated as f64 / inside as f64)
}

/// Fraction of a 200×200 evaluation lattice inside the boundary that lies
/// within `threshold_radius` of at least one point. No points ⇒ 0.0.
pub fn coverage_points(
    points: &[Coord],
    threshold_radius: f64,
    boundary: &Geometry,
) -> Result<f64, EnrichError> {
    let rings = boundary_rings(boundary)?;
    let bbox = boundary.bbox().ok_or(EnrichError::EmptyBoundary)?;
    let (x0, y0, x1, y1) = bbox;
    if !(x1 > x0 && y1 > y0) {
        return Err(EnrichError::EmptyBoundary);
    }
    let r2 = threshold_radius * threshold_radius;
    let mut inside = 0usize;
    let mut covered = 0usize;
    for i in 0..LATTICE {
        for j in 0..LATTICE {
            let x = x0 + (i as f64 + 0.5) * (x1 - x0) / LATTICE as f64;
            let y = y0 + (j as f64 + 0.5) * (y1 - y0) / LATTICE as f64;
            if !point_in_rings(x, y, rings) {
                continue;
            }
            inside += 1;
            if points
                .iter()
                .any(|p| (p.x - x) * (p.x - x) + (p.y - y) * (p.y - y) <= r2)
            {
                covered += 1;
            }
        }
    }
    if inside == 0 {
        return Err(EnrichError::EmptyBoundary);
    }
    Ok(covered as f64 / inside as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crs::registry::greek_grid;

    fn square(x0: f64, y0: f64, side: f64) -> Geometry {
        Geometry::Polygon(vec![vec![
            Coord::new(x0, y0),
            Coord::new(x0 + side, y0),
            Coord::new(x0 + side, y0 + side),
            Coord::new(x0, y0 + side),
            Coord::new(x0, y0),
        ]])
    }

    #[test]
    fn fully_populated_raster_covers_everything() {
        let grid = RasterGrid::new(
            (0.0, 0.0),
            1.0,
            10,
            10,
            -9999.0,
            vec![1.0; 100],
            greek_grid(),
        )
        .unwrap();
        let c = coverage_raster(&grid, &square(0.0, 0.0, 10.0), 2100).unwrap();
        assert_eq!(c, 1.0);
    }

    #[test]
    fn nodata_raster_covers_nothing() {
        let grid =
            RasterGrid::filled_nodata((0.0, 0.0), 1.0, 10, 10, -9999.0, greek_grid()).unwrap();
        let c = coverage_raster(&grid, &square(0.0, 0.0, 10.0), 2100).unwrap();
        assert_eq!(c, 0.0);
    }

    #[test]
    fn crs_mismatch_is_rejected() {
        let grid =
            RasterGrid::filled_nodata((0.0, 0.0), 1.0, 2, 2, -9999.0, greek_grid()).unwrap();
        assert!(matches!(
            coverage_raster(&grid, &square(0.0, 0.0, 2.0), 4326),
            Err(EnrichError::CrsMismatch { .. })
        ));
    }

    #[test]
    fn no_points_covers_nothing() {
        let c = coverage_points(&[], 10.0, &square(0.0, 0.0, 100.0)).unwrap();
        assert_eq!(c, 0.0);
    }

    #[test]
    fn centered_disc_fraction_matches_area_ratio() {
        // one point at the centroid of a square of side L, radius L/4:
        // covered fraction = π (L/4)² / L² ≈ 0.19635
        let side = 100.0;
        let c = coverage_points(
            &[Coord::new(50.0, 50.0)],
            side / 4.0,
            &square(0.0, 0.0, side),
        )
        .unwrap();
        let expected = std::f64::consts::PI / 16.0;
        assert!(
            (c - expected).abs() < 0.01,
            "lattice fraction {c} vs analytic {expected}"
        );
    }

    #[test]
    fn coverage_is_monotone_in_points() {
        let boundary = square(0.0, 0.0, 100.0);
        let mut points = vec![Coord::new(20.0, 20.0)];
        let c1 = coverage_points(&points, 15.0, &boundary).unwrap();
        points.push(Coord::new(75.0, 70.0));
        let c2 = coverage_points(&points, 15.0, &boundary).unwrap();
        assert!(c2 >= c1);
    }

    #[test]
    fn degenerate_boundary_is_rejected() {
        let line = Geometry::LineString(vec![Coord::new(0.0, 0.0), Coord::new(1.0, 1.0)]);
        assert!(matches!(
            coverage_points(&[], 1.0, &line),
            Err(EnrichError::EmptyBoundary)
        ));
    }
}
