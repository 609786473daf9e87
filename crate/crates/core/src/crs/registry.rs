//! Built-in CRS definitions and WKT alias matching.

use std::collections::BTreeMap;

use crate::model::crs_def::{CrsDef, CrsKind, Ellipsoid, HelmertParams, ProjectionParams};

use super::CrsError;

/// EPSG 4326 — WGS84 geographic.
pub fn wgs84() -> CrsDef {
    CrsDef {
        srs_id: 4326,
        kind: CrsKind::Geographic,
        ellipsoid: Ellipsoid::WGS84,
        helmert_to_wgs84: HelmertParams::IDENTITY,
        projection: ProjectionParams::NONE,
        name: "WGS 84".to_string(),
        wkt_aliases: vec![
            "WGS84".into(),
            "WGS 84".into(),
            "WGS_1984".into(),
            "EPSG:4326".into(),
        ],
    }
}

/// EPSG 2100 — GGRS87 / Greek Grid (transverse Mercator on GRS80).
/// Datum shift parameters are those published for GGRS87 → WGS84.
pub fn greek_grid() -> CrsDef {
    CrsDef {
        srs_id: 2100,
        kind: CrsKind::TransverseMercator,
        ellipsoid: Ellipsoid::GRS80,
        helmert_to_wgs84: HelmertParams::translation(-199.87, 74.79, 246.62),
        projection: ProjectionParams {
            lat_origin: 0.0,
            lon_origin: 24.0,
            scale_factor_k0: 0.9996,
            false_easting: 500_000.0,
            false_northing: 0.0,
        },
        name: "GGRS87 / Greek Grid".to_string(),
        wkt_aliases: vec![
            "GGRS87".into(),
            "GGRS_1987".into(),
            "Greek_Grid".into(),
            "Greek Grid".into(),
            "EPSG:2100".into(),
        ],
    }
}

/// EPSG 3035 — ETRS89-extended / LAEA Europe. ETRS89 ≡ WGS84 at this scale,
/// so the datum shift is the identity.
pub fn laea_europe() -> CrsDef {
    CrsDef {
        srs_id: 3035,
        kind: CrsKind::LambertAzimuthalEqualArea,
        ellipsoid: Ellipsoid::GRS80,
        helmert_to_wgs84: HelmertParams::IDENTITY,
        projection: ProjectionParams {
            lat_origin: 52.0,
            lon_origin: 10.0,
            scale_factor_k0: 1.0,
            false_easting: 4_321_000.0,
            false_northing: 3_210_000.0,
        },
        name: "ETRS89-extended / LAEA Europe".to_string(),
        wkt_aliases: vec![
            "ETRS89-extended".into(),
            "ETRS89_LAEA".into(),
            "ETRS89 / LAEA".into(),
            "ETRS_1989_LAEA".into(),
            "Lambert_Azimuthal_Equal_Area".into(),
            "EPSG:3035".into(),
        ],
    }
}

/// WKT1 definition text for the built-in CRSs, as stored in
/// `gpkg_spatial_ref_sys` so GIS tools auto-recognize layers.
pub fn wkt_definition(srs_id: i32) -> Option<&'static str> {
    match srs_id {
        4326 => Some(
            r#"GEOGCS["WGS 84",DATUM["WGS_1984",SPHEROID["WGS 84",6378137,298.257223563,AUTHORITY["EPSG","7030"]],AUTHORITY["EPSG","6326"]],PRIMEM["Greenwich",0,AUTHORITY["EPSG","8901"]],UNIT["degree",0.0174532925199433,AUTHORITY["EPSG","9122"]],AUTHORITY["EPSG","4326"]]"#,
        ),
        2100 => Some(
            r#"PROJCS["GGRS87 / Greek Grid",GEOGCS["GGRS87",DATUM["Greek_Geodetic_Reference_System_1987",SPHEROID["GRS 1980",6378137,298.257222101,AUTHORITY["EPSG","7019"]],TOWGS84[-199.87,74.79,246.62,0,0,0,0],AUTHORITY["EPSG","6121"]],PRIMEM["Greenwich",0,AUTHORITY["EPSG","8901"]],UNIT["degree",0.0174532925199433,AUTHORITY["EPSG","9122"]],AUTHORITY["EPSG","4121"]],PROJECTION["Transverse_Mercator"],PARAMETER["latitude_of_origin",0],PARAMETER["central_meridian",24],PARAMETER["scale_factor",0.9996],PARAMETER["false_easting",500000],PARAMETER["false_northing",0],UNIT["metre",1,AUTHORITY["EPSG","9001"]],AUTHORITY["EPSG","2100"]]"#,
        ),
        3035 => Some(
            r#"PROJCS["ETRS89-extended / LAEA Europe",GEOGCS["ETRS89",DATUM["European_Terrestrial_Reference_System_1989",SPHEROID["GRS 1980",6378137,298.257222101,AUTHORITY["EPSG","7019"]],TOWGS84[0,0,0,0,0,0,0],AUTHORITY["EPSG","6258"]],PRIMEM["Greenwich",0,AUTHORITY["EPSG","8901"]],UNIT["degree",0.0174532925199433,AUTHORITY["EPSG","9122"]],AUTHORITY["EPSG","4258"]],PROJECTION["Lambert_Azimuthal_Equal_Area"],PARAMETER["latitude_of_center",52],PARAMETER["longitude_of_center",10],PARAMETER["false_easting",4321000],PARAMETER["false_northing",3210000],UNIT["metre",1,AUTHORITY["EPSG","9001"]],AUTHORITY["EPSG","3035"]]"#,
        ),
        _ => None,
    }
}

/// EPSG-code keyed registry, preloaded with 4326, 2100 and 3035.
#[derive(Debug, Clone)]
pub struct CrsRegistry {
    entries: BTreeMap<i32, CrsDef>,
}

impl Default for CrsRegistry {
    fn default() -> Self {
        let mut entries = BTreeMap::new();
        for def in [wgs84(), greek_grid(), laea_europe()] {
            entries.insert(def.srs_id, def);
        }
        CrsRegistry { entries }
    }
}

impl CrsRegistry {
    pub fn get(&self, srs_id: i32) -> Result<&CrsDef, CrsError> {
        self.entries.get(&srs_id).ok_or(CrsError::UnknownCrs(srs_id))
    }

    pub fn contains(&self, srs_id: i32) -> bool {
        self.entries.contains_key(&srs_id)
    }

    pub fn insert(&mut self, def: CrsDef) {
        self.entries.insert(def.srs_id, def);
    }

    pub fn iter(&self) -> impl Iterator<Item = &CrsDef> {
        self.entries.values()
    }

    /// Resolve PRJ/WKT text by case-insensitive alias substring matching.
    /// Full WKT parsing is out of scope; aliases cover the supported CRSs.
    pub fn match_wkt(&self, wkt: &str) -> Option<&CrsDef> {
        let hay = wkt.to_ascii_lowercase();
        // Projected CRSs first: their WKT embeds the geographic base name,
        // so a geographic alias alone must not win.
        let mut candidates: Vec<&CrsDef> = self.entries.values().collect();
        candidates.sort_by_key(|d| match d.kind {
            crate::model::crs_def::CrsKind::Geographic => 1,
            _ => 0,
        });
        candidates.into_iter().find(|def| {
            def.wkt_aliases
                .iter()
                .any(|alias| hay.contains(&alias.to_ascii_lowercase()))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preloaded_ids_resolve() {
        let reg = CrsRegistry::default();
        for id in [4326, 2100, 3035] {
            assert!(reg.get(id).is_ok());
            assert!(wkt_definition(id).is_some());
        }
        assert!(matches!(reg.get(9999), Err(CrsError::UnknownCrs(9999))));
    }

    #[test]
    fn wkt_alias_matching() {
        let reg = CrsRegistry::default();
        assert_eq!(reg.match_wkt(wkt_definition(2100).unwrap()).unwrap().srs_id, 2100);
        assert_eq!(reg.match_wkt(wkt_definition(3035).unwrap()).unwrap().srs_id, 3035);
        assert_eq!(reg.match_wkt(wkt_definition(4326).unwrap()).unwrap().srs_id, 4326);
        assert_eq!(reg.match_wkt(r#"PROJCS["Greek_Grid",...]"#).unwrap().srs_id, 2100);
        assert!(reg.match_wkt("PROJCS[\"NAD83 / UTM 10N\"]").is_none());
    }
}
