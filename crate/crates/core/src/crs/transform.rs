//! Vertex-wise CRS transformation for geometries and re-gridding for rasters.
//!
//! Pipeline per vertex: inverse-project → geodetic on the source datum →
//! ECEF → datum shift into WGS84 → inverse datum shift into the target →
//! geodetic on the target datum → project.

use crate::model::crs_def::{CrsDef, CrsKind};
use crate::model::geometry::{Coord, Geometry};
use crate::model::raster::RasterGrid;

use super::geodesy::{ecef_to_geodetic, geodetic_to_ecef, helmert_forward, helmert_inverse};
use super::laea::LambertAzimuthalEqualArea;
use super::tmerc::TransverseMercator;
use super::CrsError;

enum Projector {
    Identity,
    Tm(TransverseMercator),
    Laea(LambertAzimuthalEqualArea),
}

impl Projector {
    fn for_crs(crs: &CrsDef) -> Projector {
        match crs.kind {
            CrsKind::Geographic => Projector::Identity,
            CrsKind::TransverseMercator => Projector::Tm(TransverseMercator::new(crs)),
            CrsKind::LambertAzimuthalEqualArea => {
                Projector::Laea(LambertAzimuthalEqualArea::new(crs))
            }
        }
    }

    /// (lat°, lon°) → planar (x, y). Geographic CRSs use (x, y) = (lon, lat).
    fn project(&self, lat: f64, lon: f64) -> Result<(f64, f64), CrsError> {
        match self {
            Projector::Identity => Ok((lon, lat)),
            Projector::Tm(tm) => tm.forward(lat, lon),
            Projector::Laea(p) => p.forward(lat, lon),
        }
    }

    fn unproject(&self, x: f64, y: f64) -> Result<(f64, f64), CrsError> {
        match self {
            Projector::Identity => Ok((y, x)),
            Projector::Tm(tm) => tm.inverse(x, y),
            Projector::Laea(p) => p.inverse(x, y),
        }
    }
}

/// Precomputed coordinate pipeline between two CRSs.
pub struct CoordTransform {
    source: Projector,
    target: Projector,
    source_crs: CrsDef,
    target_crs: CrsDef,
    identity: bool,
}

impl CoordTransform {
    pub fn new(from: &CrsDef, to: &CrsDef) -> Self {
        CoordTransform {
            source: Projector::for_crs(from),
            target: Projector::for_crs(to),
            source_crs: from.clone(),
            target_crs: to.clone(),
            identity: from.srs_id == to.srs_id,
        }
    }

    pub fn apply(&self, c: Coord) -> Result<Coord, CrsError> {
        if self.identity {
            return Ok(c);
        }
        let (lat_src, lon_src) = self.source.unproject(c.x, c.y)?;
        let ecef_src = geodetic_to_ecef(lat_src, lon_src, &self.source_crs.ellipsoid)?;
        let ecef_wgs = helmert_forward(ecef_src, &self.source_crs.helmert_to_wgs84);
        let ecef_dst = helmert_inverse(ecef_wgs, &self.target_crs.helmert_to_wgs84);
        let (lat_dst, lon_dst) = ecef_to_geodetic(
            ecef_dst.0,
            ecef_dst.1,
            ecef_dst.2,
            &self.target_crs.ellipsoid,
        );
        let (x, y) = self.target.project(lat_dst, lon_dst)?;
        Ok(Coord::new(x, y))
    }

    pub fn apply_inverse(&self, c: Coord) -> Result<Coord, CrsError> {
        if self.identity {
            return Ok(c);
        }
        let back = CoordTransform::new(&self.target_crs, &self.source_crs);
        back.apply(c)
    }
}

/// Reproject a geometry vertex-by-vertex. `from == to` (same srs_id) is the
/// exact identity. Projection-domain failures carry the vertex index.
pub fn transform_geometry(
    g: &Geometry,
    from: &CrsDef,
    to: &CrsDef,
) -> Result<Geometry, CrsError> {
    if from.srs_id == to.srs_id {
        return Ok(g.clone());
    }
    let pipeline = CoordTransform::new(from, to);
    g.try_map_coords(|c| pipeline.apply(c))
        .map_err(|(index, source)| CrsError::VertexOutOfDomain {
            index,
            source: Box::new(source),
        })
}

/// Re-grid a raster into a target CRS.
///
/// The output extent is the bbox of the source extent's transformed corner
/// and edge-midpoint points; cell count is preserved per axis (square cells,
/// the larger axis pitch wins). Each output cell center is transformed back
/// to the source CRS and sampled nearest-neighbor; centers falling outside
/// the source extent become nodata.
pub fn transform_raster(grid: &RasterGrid, to: &CrsDef) -> Result<RasterGrid, CrsError> {
    if grid.crs.srs_id == to.srs_id {
        return Ok(grid.clone());
    }
    let forward = CoordTransform::new(&grid.crs, to);
    let backward = CoordTransform::new(to, &grid.crs);

    let (x0, y0, x1, y1) = grid.bbox();
    let xm = (x0 + x1) / 2.0;
    let ym = (y0 + y1) / 2.0;
    let probes = [
        (x0, y0),
        (x1, y0),
        (x1, y1),
        (x0, y1),
        (xm, y0),
        (x1, ym),
        (xm, y1),
        (x0, ym),
    ];
    let mut bbox: Option<(f64, f64, f64, f64)> = None;
    for (px, py) in probes {
        let p = forward.apply(Coord::new(px, py))?;
        let b = bbox.get_or_insert((p.x, p.y, p.x, p.y));
        b.0 = b.0.min(p.x);
        b.1 = b.1.min(p.y);
        b.2 = b.2.max(p.x);
        b.3 = b.3.max(p.y);
    }
    let (tx0, ty0, tx1, ty1) = bbox.ok_or(CrsError::EmptyRasterExtent)?;
    if !(tx1 > tx0 && ty1 > ty0) {
        return Err(CrsError::EmptyRasterExtent);
    }
    let cell = ((tx1 - tx0) / grid.ncols as f64).max((ty1 - ty0) / grid.nrows as f64);
    let ncols = (((tx1 - tx0) / cell).ceil() as usize).max(1);
    let nrows = (((ty1 - ty0) / cell).ceil() as usize).max(1);

    let mut values = vec![grid.nodata; ncols * nrows];
    for row in 0..nrows {
        for col in 0..ncols {
            let cx = tx0 + (col as f64 + 0.5) * cell;
            let cy = ty0 + (row as f64 + 0.5) * cell;
            if let Ok(src) = backward.apply(Coord::new(cx, cy)) {
                if let Some((sc, sr)) = grid.cell_at(src.x, src.y) {
                    values[row * ncols + col] = grid.get(sc, sr);
                }
            }
        }
    }
    let mut out = RasterGrid::new((tx0, ty0), cell, ncols, nrows, grid.nodata, values, to.clone())
        .map_err(|_| CrsError::EmptyRasterExtent)?;
    out.metadata = grid.metadata.clone();
    Ok(out)
}
