//! Feature layers: schema + typed rows + geometry.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::crs_def::CrsDef;
use super::geometry::{validate_geometry, Geometry};
use super::value::{CellValue, ValueType};

/// One attribute column, before or after standardization.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AttributeField {
    pub raw_name: String,
    /// Canonical name per the attribute dictionary; set once standardized.
    pub canonical_name: Option<String>,
    pub value_type: ValueType,
    pub unit: Option<String>,
    pub description: Option<String>,
}

impl AttributeField {
    pub fn new(raw_name: impl Into<String>, value_type: ValueType) -> Self {
        AttributeField {
            raw_name: raw_name.into(),
            canonical_name: None,
            value_type,
            unit: None,
            description: None,
        }
    }

    pub fn with_unit(mut self, unit: impl Into<String>) -> Self {
        self.unit = Some(unit.into());
        self
    }

    /// Name the column carries downstream (canonical once standardized).
    pub fn effective_name(&self) -> &str {
        self.canonical_name.as_deref().unwrap_or(&self.raw_name)
    }
}

/// One feature: attribute cells aligned with the layer schema, plus geometry.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeatureRow {
    pub values: Vec<CellValue>,
    pub geometry: Geometry,
}

#[derive(Debug, Error)]
pub enum LayerError {
    #[error("layer name {0:?} normalizes to an empty identifier")]
    InvalidName(String),
    #[error("field {0:?}: canonical name {1:?} is not a valid identifier")]
    InvalidCanonicalName(String, String),
    #[error("field {0:?} has an empty raw name")]
    EmptyFieldName(String),
    #[error("row {row}: has {got} cells, schema has {expected}")]
    RowLengthMismatch {
        row: usize,
        expected: usize,
        got: usize,
    },
    #[error("row {row}, field {field:?}: cell does not match declared type {ty}")]
    CellTypeMismatch {
        row: usize,
        field: String,
        ty: &'static str,
    },
    #[error("row {row}: invalid geometry: {violations:?}")]
    InvalidGeometry { row: usize, violations: Vec<String> },
}

/// A named, CRS-tagged table of features.
///
/// Construction validates every invariant: any layer that exists passes
/// `validate_geometry` on every row and has type-consistent cells.
/// Immutable after construction apart from metadata enrichment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeatureLayer {
    pub name: String,
    pub crs: CrsDef,
    pub schema: Vec<AttributeField>,
    pub rows: Vec<FeatureRow>,
    pub metadata: BTreeMap<String, String>,
    pub standardized: bool,
}

impl FeatureLayer {
    /// Build a layer, normalizing the name to snake_case and validating
    /// schema/row/geometry invariants.
    pub fn new(
        name: &str,
        crs: CrsDef,
        schema: Vec<AttributeField>,
        rows: Vec<FeatureRow>,
    ) -> Result<Self, LayerError> {
        let norm = normalize_identifier(name);
        if norm.is_empty() {
            return Err(LayerError::InvalidName(name.to_string()));
        }
        for field in &schema {
            if field.raw_name.is_empty() {
                return Err(LayerError::EmptyFieldName(field.raw_name.clone()));
            }
            if let Some(c) = &field.canonical_name {
                if !is_valid_identifier(c) {
                    return Err(LayerError::InvalidCanonicalName(
                        field.raw_name.clone(),
                        c.clone(),
                    ));
                }
            }
        }
        for (i, row) in rows.iter().enumerate() {
            if row.values.len() != schema.len() {
                return Err(LayerError::RowLengthMismatch {
                    row: i,
                    expected: schema.len(),
                    got: row.values.len(),
                });
            }
            for (field, cell) in schema.iter().zip(&row.values) {
                if !cell.matches(field.value_type) {
                    return Err(LayerError::CellTypeMismatch {
                        row: i,
                        field: field.raw_name.clone(),
                        ty: field.value_type.name(),
                    });
                }
            }
            let violations = validate_geometry(&row.geometry);
            if !violations.is_empty() {
                return Err(LayerError::InvalidGeometry { row: i, violations });
            }
        }
        Ok(FeatureLayer {
            name: norm,
            crs,
            schema,
            rows,
            metadata: BTreeMap::new(),
            standardized: false,
        })
    }

    pub fn field_index(&self, name: &str) -> Option<usize> {
        self.schema
            .iter()
            .position(|f| f.effective_name().eq_ignore_ascii_case(name))
    }

    /// Bounding box over all row geometries, `None` for an empty layer.
    pub fn bbox(&self) -> Option<(f64, f64, f64, f64)> {
        let mut out: Option<(f64, f64, f64, f64)> = None;
        for row in &self.rows {
            if let Some((x0, y0, x1, y1)) = row.geometry.bbox() {
                let b = out.get_or_insert((x0, y0, x1, y1));
                b.0 = b.0.min(x0);
                b.1 = b.1.min(y0);
                b.2 = b.2.max(x1);
                b.3 = b.3.max(y1);
            }
        }
        out
    }
}

/// Normalize to `[a-z][a-z0-9_]*`: lowercase, non-alphanumerics collapse
/// to single underscores, leading digits get a `t_` prefix.
pub fn normalize_identifier(raw: &str) -> String {
    let mut out = String::with_capacity(raw.len());
    let mut last_underscore = true; // swallow leading separators
    for ch in raw.chars() {
        let c = ch.to_ascii_lowercase();
        if c.is_ascii_alphanumeric() {
            out.push(c);
            last_underscore = false;
        } else if !last_underscore {
            out.push('_');
            last_underscore = true;
        }
    }
    while out.ends_with('_') {
        out.pop();
    }
    if out.chars().next().is_some_and(|c| c.is_ascii_digit()) {
        out.insert_str(0, "t_");
    }
    out
}

pub fn is_valid_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_lowercase() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crs::registry::CrsRegistry;

    fn wgs84() -> CrsDef {
        CrsRegistry::default().get(4326).unwrap().clone()
    }

    #[test]
    fn name_is_normalized_to_snake_case() {
        let layer = FeatureLayer::new("Ferry Ports (2023)", wgs84(), vec![], vec![]).unwrap();
        assert_eq!(layer.name, "ferry_ports_2023");
    }

    #[test]
    fn leading_digit_gets_prefixed() {
        assert_eq!(normalize_identifier("2023_sites"), "t_2023_sites");
        assert_eq!(normalize_identifier("--"), "");
    }

    #[test]
    fn row_length_mismatch_is_rejected() {
        let schema = vec![AttributeField::new("id", ValueType::Integer)];
        let rows = vec![FeatureRow {
            values: vec![],
            geometry: Geometry::point(0.0, 0.0),
        }];
        assert!(matches!(
            FeatureLayer::new("x", wgs84(), schema, rows),
            Err(LayerError::RowLengthMismatch { .. })
        ));
    }

    #[test]
    fn bad_geometry_is_rejected() {
        let rows = vec![FeatureRow {
            values: vec![],
            geometry: Geometry::LineString(vec![]),
        }];
        assert!(matches!(
            FeatureLayer::new("x", wgs84(), vec![], rows),
            Err(LayerError::InvalidGeometry { .. })
        ));
    }

    #[test]
    fn type_mismatch_is_rejected() {
        let schema = vec![AttributeField::new("id", ValueType::Integer)];
        let rows = vec![FeatureRow {
            values: vec![CellValue::Text("x".into())],
            geometry: Geometry::point(0.0, 0.0),
        }];
        assert!(matches!(
            FeatureLayer::new("x", wgs84(), schema, rows),
            Err(LayerError::CellTypeMismatch { .. })
        ));
    }
}
