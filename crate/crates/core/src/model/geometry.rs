//! Vector geometry in 2D CRS units.

use serde::{Deserialize, Serialize};

/// A single 2D coordinate in CRS units (x = easting/longitude, y = northing/latitude).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Coord {
    pub x: f64,
    pub y: f64,
}

impl Coord {
    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl From<(f64, f64)> for Coord {
    fn from((x, y): (f64, f64)) -> Self {
        Coord { x, y }
    }
}

/// A closed ring of a polygon. First and last vertex must be identical.
pub type Ring = Vec<Coord>;

/// Tagged 2D vector geometry.
///
/// Polygons are stored as a list of rings: the first ring is the exterior,
/// any further rings are holes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Geometry {
    Point(Coord),
    MultiPoint(Vec<Coord>),
    LineString(Vec<Coord>),
    Polygon(Vec<Ring>),
    MultiPolygon(Vec<Vec<Ring>>),
}

impl Geometry {
    pub fn point(x: f64, y: f64) -> Self {
        Geometry::Point(Coord::new(x, y))
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            Geometry::Point(_) => "point",
            Geometry::MultiPoint(_) => "multipoint",
            Geometry::LineString(_) => "linestring",
            Geometry::Polygon(_) => "polygon",
            Geometry::MultiPolygon(_) => "multipolygon",
        }
    }

    /// Iterate over every vertex of the geometry in storage order.
    pub fn vertices(&self) -> Box<dyn Iterator<Item = Coord> + '_> {
        match self {
            Geometry::Point(c) => Box::new(std::iter::once(*c)),
            Geometry::MultiPoint(cs) | Geometry::LineString(cs) => Box::new(cs.iter().copied()),
            Geometry::Polygon(rings) => Box::new(rings.iter().flatten().copied()),
            Geometry::MultiPolygon(polys) => {
                Box::new(polys.iter().flatten().flatten().copied())
            }
        }
    }

    /// (xmin, ymin, xmax, ymax) over all vertices. `None` for an empty geometry.
    pub fn bbox(&self) -> Option<(f64, f64, f64, f64)> {
        let mut out: Option<(f64, f64, f64, f64)> = None;
        for c in self.vertices() {
            let b = out.get_or_insert((c.x, c.y, c.x, c.y));
            b.0 = b.0.min(c.x);
            b.1 = b.1.min(c.y);
            b.2 = b.2.max(c.x);
            b.3 = b.3.max(c.y);
        }
        out
    }

    /// Rebuild the geometry by applying `f` to every vertex, preserving structure.
    /// The first failing vertex aborts with its index in storage order.
    pub fn try_map_coords<E>(
        &self,
        mut f: impl FnMut(Coord) -> Result<Coord, E>,
    ) -> Result<Geometry, (usize, E)> {
        let mut index = 0usize;
        let mut apply = |c: &Coord| -> Result<Coord, (usize, E)> {
            let out = f(*c).map_err(|e| (index, e))?;
            index += 1;
            Ok(out)
        };
        Ok(match self {
            Geometry::Point(c) => Geometry::Point(apply(c)?),
            Geometry::MultiPoint(cs) => {
                Geometry::MultiPoint(cs.iter().map(&mut apply).collect::<Result<_, _>>()?)
            }
            Geometry::LineString(cs) => {
                Geometry::LineString(cs.iter().map(&mut apply).collect::<Result<_, _>>()?)
            }
            Geometry::Polygon(rings) => Geometry::Polygon(
                rings
                    .iter()
                    .map(|r| r.iter().map(&mut apply).collect::<Result<_, _>>())
                    .collect::<Result<_, _>>()?,
            ),
            Geometry::MultiPolygon(polys) => Geometry::MultiPolygon(
                polys
                    .iter()
                    .map(|rings| {
                        rings
                            .iter()
                            .map(|r| r.iter().map(&mut apply).collect::<Result<_, _>>())
                            .collect::<Result<_, _>>()
                    })
                    .collect::<Result<_, _>>()?,
            ),
        })
    }
}

/// Check every geometry invariant; the empty list means the geometry is valid.
///
/// Violation strings name the rule and the offending location, e.g.
/// `ring_too_short@ring0` or `nonfinite_coordinate@v1`. Pure and idempotent.
pub fn validate_geometry(g: &Geometry) -> Vec<String> {
    let mut out = Vec::new();
    match g {
        Geometry::Point(c) => {
            if !c.is_finite() {
                out.push("nonfinite_coordinate@v0".to_string());
            }
        }
        Geometry::MultiPoint(cs) => {
            if cs.is_empty() {
                out.push("empty_multipoint@geom".to_string());
            }
            check_finite(cs, "v", &mut out);
        }
        Geometry::LineString(cs) => {
            if cs.len() < 2 {
                out.push("linestring_too_short@geom".to_string());
            }
            check_finite(cs, "v", &mut out);
        }
        Geometry::Polygon(rings) => validate_rings(rings, "", &mut out),
        Geometry::MultiPolygon(polys) => {
            if polys.is_empty() {
                out.push("empty_multipolygon@geom".to_string());
            }
            for (p, rings) in polys.iter().enumerate() {
                validate_rings(rings, &format!("poly{p}"), &mut out);
            }
        }
    }
    out
}

fn check_finite(cs: &[Coord], prefix: &str, out: &mut Vec<String>) {
    for (i, c) in cs.iter().enumerate() {
        if !c.is_finite() {
            out.push(format!("nonfinite_coordinate@{prefix}{i}"));
        }
    }
}

fn validate_rings(rings: &[Ring], scope: &str, out: &mut Vec<String>) {
    if rings.is_empty() {
        out.push(format!("empty_polygon@{}geom", scope));
    }
    for (r, ring) in rings.iter().enumerate() {
        let at = format!("{scope}ring{r}");
        if ring.len() < 4 {
            out.push(format!("ring_too_short@{at}"));
        } else if ring.first() != ring.last() {
            out.push(format!("ring_not_closed@{at}"));
        }
        for (i, c) in ring.iter().enumerate() {
            if !c.is_finite() {
                out.push(format!("nonfinite_coordinate@{at}v{i}"));
            }
        }
    }
}

/// Even-odd (ray casting) point-in-polygon test over rings in CRS units.
/// Points exactly on an edge count as inside.
pub fn point_in_rings(x: f64, y: f64, rings: &[Ring]) -> bool {
    let mut inside = false;
    for ring in rings {
        let n = ring.len();
        if n < 2 {
            continue;
        }
        let mut j = n - 1;
        for i in 0..n {
            let (xi, yi) = (ring[i].x, ring[i].y);
            let (xj, yj) = (ring[j].x, ring[j].y);
            // on-segment check
            let cross = (xj - xi) * (y - yi) - (x - xi) * (yj - yi);
            if cross.abs() < 1e-12
                && x >= xi.min(xj) - 1e-12
                && x <= xi.max(xj) + 1e-12
                && y >= yi.min(yj) - 1e-12
                && y <= yi.max(yj) + 1e-12
            {
                return true;
            }
            if (yi > y) != (yj > y) {
                let x_int = (xj - xi) * (y - yi) / (yj - yi) + xi;
                if x < x_int {
                    inside = !inside;
                }
            }
            j = i;
        }
    }
    inside
}

/// Signed area of a ring via the shoelace formula (positive = counterclockwise).
pub fn ring_signed_area(ring: &[Coord]) -> f64 {
    let n = ring.len();
    if n < 3 {
        return 0.0;
    }
    let mut acc = 0.0;
    for i in 0..n - 1 {
        acc += ring[i].x * ring[i + 1].y - ring[i + 1].x * ring[i].y;
    }
    acc / 2.0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn well_formed_point_is_valid() {
        assert!(validate_geometry(&Geometry::point(25.27, 37.39)).is_empty());
    }

    #[test]
    fn short_ring_is_rejected() {
        let g = Geometry::Polygon(vec![vec![
            Coord::new(0.0, 0.0),
            Coord::new(1.0, 0.0),
            Coord::new(0.0, 0.0),
        ]]);
        assert_eq!(validate_geometry(&g), vec!["ring_too_short@ring0"]);
    }

    #[test]
    fn nan_coordinate_is_rejected() {
        let g = Geometry::LineString(vec![Coord::new(0.0, 0.0), Coord::new(f64::NAN, 1.0)]);
        assert_eq!(validate_geometry(&g), vec!["nonfinite_coordinate@v1"]);
    }

    #[test]
    fn unclosed_ring_is_rejected() {
        let g = Geometry::Polygon(vec![vec![
            Coord::new(0.0, 0.0),
            Coord::new(1.0, 0.0),
            Coord::new(1.0, 1.0),
            Coord::new(0.0, 1.0),
        ]]);
        assert_eq!(validate_geometry(&g), vec!["ring_not_closed@ring0"]);
    }

    #[test]
    fn validation_is_idempotent() {
        let g = Geometry::LineString(vec![Coord::new(f64::INFINITY, 0.0)]);
        let first = validate_geometry(&g);
        let second = validate_geometry(&g);
        assert_eq!(first, second);
    }

    #[test]
    fn point_in_square() {
        let ring = vec![
            Coord::new(0.0, 0.0),
            Coord::new(4.0, 0.0),
            Coord::new(4.0, 4.0),
            Coord::new(0.0, 4.0),
            Coord::new(0.0, 0.0),
        ];
        assert!(point_in_rings(2.0, 2.0, &[ring.clone()]));
        assert!(point_in_rings(0.0, 2.0, &[ring.clone()])); // boundary counts as inside
        assert!(!point_in_rings(5.0, 2.0, &[ring]));
    }

    #[test]
    fn shoelace_orientation() {
        let ccw = vec![
            Coord::new(0.0, 0.0),
            Coord::new(1.0, 0.0),
            Coord::new(1.0, 1.0),
            Coord::new(0.0, 1.0),
            Coord::new(0.0, 0.0),
        ];
        assert!(ring_signed_area(&ccw) > 0.0);
        let cw: Vec<Coord> = ccw.iter().rev().copied().collect();
        assert!(ring_signed_area(&cw) < 0.0);
    }
}
