//! Attribute standardization against a controlled vocabulary.
//!
//! A dictionary maps raw field names (via synonyms, matched independent of
//! case, underscores and hyphens) to canonical names with descriptions,
//! canonical units and affine unit conversions. Layers come out fully
//! standardized or with a report of what did not match.

mod dictionary;
mod one_hot;

pub use dictionary::{AttributeDictionary, DictionaryEntry, DictionaryError, UnitConversion};
pub use one_hot::{one_hot, OneHotReport};

use std::collections::BTreeMap;

use thiserror::Error;

use crate::model::{CellValue, FeatureLayer, RasterGrid, ValueType};

#[derive(Debug, Error)]
pub enum StandardizeError {
    #[error("no column named {0:?}")]
    NoSuchColumn(String),
    #[error("column {column:?} has {distinct} distinct values, more than the {limit} allowed")]
    CardinalityTooHigh {
        column: String,
        distinct: usize,
        limit: usize,
    },
}

/// Why a field was left unstandardized.
#[derive(Debug, Clone, PartialEq)]
pub enum FieldIssue {
    /// Dictionary value type contradicts the field's observed type.
    TypeConflict {
        field: String,
        expected: ValueType,
        found: ValueType,
    },
    /// The raw unit has no conversion to the canonical unit.
    UnknownUnit { field: String, unit: String },
}

/// Outcome of standardizing one layer.
#[derive(Debug, Clone, Default)]
pub struct StandardizationReport {
    pub layer: String,
    /// (raw name, canonical name) pairs that matched.
    pub matched: Vec<(String, String)>,
    pub unmatched: Vec<String>,
    pub issues: Vec<FieldIssue>,
    pub total_fields: usize,
}

impl StandardizationReport {
    pub fn matched_count(&self) -> usize {
        self.matched.len()
    }

    pub fn fully_standardized(&self) -> bool {
        self.matched.len() == self.total_fields
    }

    /// Structured text rendering with matched/unmatched sections.
    pub fn render(&self) -> String {
        let mut out = format!(
            "standardization report: layer {} ({}/{} fields matched)\n",
            self.layer,
            self.matched.len(),
            self.total_fields
        );
        out.push_str("matched:\n");
        for (raw, canonical) in &self.matched {
            out.push_str(&format!("  {raw} -> {canonical}\n"));
        }
        out.push_str("unmatched:\n");
        for raw in &self.unmatched {
            out.push_str(&format!("  {raw}\n"));
        }
        for issue in &self.issues {
            match issue {
                FieldIssue::TypeConflict {
                    field,
                    expected,
                    found,
                } => out.push_str(&format!(
                    "  conflict: {field} expects {} but holds {}\n",
                    expected.name(),
                    found.name()
                )),
                FieldIssue::UnknownUnit { field, unit } => {
                    out.push_str(&format!("  conflict: {field} has unknown unit {unit}\n"))
                }
            }
        }
        out
    }
}

/// Map raw field names/units onto the controlled vocabulary.
///
/// Matched fields get canonical name, description and canonical unit;
/// numeric cells are converted through the affine unit conversion. Fields
/// with type conflicts or unconvertible units are left raw and reported.
/// Idempotent: a standardized field re-matches its own canonical name and
/// unit and passes through unchanged.
pub fn standardize_layer(
    layer: &FeatureLayer,
    dict: &AttributeDictionary,
) -> (FeatureLayer, StandardizationReport) {
    let mut out = layer.clone();
    let mut report = StandardizationReport {
        layer: layer.name.clone(),
        total_fields: layer.schema.len(),
        ..Default::default()
    };

    for (idx, field) in layer.schema.iter().enumerate() {
        let lookup_name = field.effective_name();
        let Some(entry) = dict.lookup(lookup_name) else {
            report.unmatched.push(field.raw_name.clone());
            continue;
        };

        // type compatibility: identical, integer→real widening, text↔categorical
        let compatible = field.value_type == entry.value_type
            || (entry.value_type == ValueType::Real && field.value_type == ValueType::Integer)
            || (entry.value_type == ValueType::Categorical
                && field.value_type == ValueType::Text)
            || (entry.value_type == ValueType::Text
                && field.value_type == ValueType::Categorical);
        if !compatible {
            report.issues.push(FieldIssue::TypeConflict {
                field: field.raw_name.clone(),
                expected: entry.value_type,
                found: field.value_type,
            });
            report.unmatched.push(field.raw_name.clone());
            continue;
        }

        // unit: identical (or absent) means no conversion
        let unit_matches = match (&field.unit, &entry.canonical_unit) {
            (None, _) => true,
            (Some(u), Some(c)) => dictionary::normalize_unit(u) == dictionary::normalize_unit(c),
            (Some(_), None) => false,
        };
        let conversion = if unit_matches {
            None
        } else {
            let raw_unit = field.unit.as_deref().unwrap_or("");
            match entry.conversion_for(raw_unit) {
                Some(c) => Some(c),
                None => {
                    report.issues.push(FieldIssue::UnknownUnit {
                        field: field.raw_name.clone(),
                        unit: raw_unit.to_string(),
                    });
                    report.unmatched.push(field.raw_name.clone());
                    continue;
                }
            }
        };

        let target = &mut out.schema[idx];
        target.canonical_name = Some(entry.canonical_name.clone());
        target.description = Some(entry.description.clone());
        target.unit = entry.canonical_unit.clone();
        let retype = entry.value_type;
        target.value_type = retype;

        if conversion.is_some() || (retype == ValueType::Real && field.value_type == ValueType::Integer) {
            let conv = conversion.copied().unwrap_or(UnitConversion {
                factor: 1.0,
                offset: 0.0,
            });
            for row in &mut out.rows {
                let cell = &mut row.values[idx];
                if let Some(v) = cell.as_f64() {
                    *cell = CellValue::Real(v * conv.factor + conv.offset);
                }
            }
        }
        report
            .matched
            .push((field.raw_name.clone(), entry.canonical_name.clone()));
    }

    out.standardized = report.fully_standardized();
    // mirror descriptions so they travel into the database metadata
    let mirrors: Vec<(String, String)> = out
        .schema
        .iter()
        .filter_map(|f| {
            Some((
                format!("schema.{}.description", f.canonical_name.as_ref()?),
                f.description.clone().unwrap_or_default(),
            ))
        })
        .collect();
    for (k, v) in mirrors {
        out.metadata.insert(k, v);
    }
    (out, report)
}

/// Fraction of fields carrying a canonical name across all layers.
/// The empty corpus counts as fully standardized (1.0).
pub fn standardization_ratio<'a>(layers: impl IntoIterator<Item = &'a FeatureLayer>) -> f64 {
    let mut total = 0usize;
    let mut matched = 0usize;
    for layer in layers {
        for field in &layer.schema {
            total += 1;
            if field.canonical_name.is_some() {
                matched += 1;
            }
        }
    }
    if total == 0 {
        1.0
    } else {
        matched as f64 / total as f64
    }
}

/// Anything carrying a metadata map.
pub trait Metadatable {
    fn metadata_mut(&mut self) -> &mut BTreeMap<String, String>;
}

impl Metadatable for FeatureLayer {
    fn metadata_mut(&mut self) -> &mut BTreeMap<String, String> {
        &mut self.metadata
    }
}

impl Metadatable for RasterGrid {
    fn metadata_mut(&mut self) -> &mut BTreeMap<String, String> {
        &mut self.metadata
    }
}

/// Merge metadata entries; newer values win on key collision.
pub fn attach_metadata<T: Metadatable>(
    target: &mut T,
    entries: impl IntoIterator<Item = (String, String)>,
) {
    let map = target.metadata_mut();
    for (k, v) in entries {
        if k.is_empty() {
            continue;
        }
        map.insert(k, v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crs::registry::wgs84;
    use crate::model::{AttributeField, FeatureRow, Geometry};

    fn sample_dict() -> AttributeDictionary {
        AttributeDictionary::parse(
            "wind_speed|Wind speed at 10 m|m/s|real|wind_spd;wind_velocity;ws|km/h=0.2777777777777778\n\
             temperature|Air temperature|c|real|temp;airtemp|f=0.5555555555555556,-17.77777777777778\n\
             station|Measuring station id||text|station_name;stn|\n",
        )
        .unwrap()
    }

    fn meteo_layer() -> FeatureLayer {
        let schema = vec![
            AttributeField::new("ws", ValueType::Real).with_unit("km/h"),
            AttributeField::new("frobnitz", ValueType::Real),
        ];
        let rows = vec![FeatureRow {
            values: vec![CellValue::Real(36.0), CellValue::Real(1.0)],
            geometry: Geometry::point(25.0, 37.0),
        }];
        FeatureLayer::new("meteo", wgs84(), schema, rows).unwrap()
    }

    #[test]
    fn unit_conversion_and_rename() {
        let (out, report) = standardize_layer(&meteo_layer(), &sample_dict());
        assert_eq!(report.matched_count(), 1);
        assert_eq!(report.unmatched, vec!["frobnitz"]);
        assert!(!out.standardized);
        let f = &out.schema[0];
        assert_eq!(f.canonical_name.as_deref(), Some("wind_speed"));
        assert_eq!(f.unit.as_deref(), Some("m/s"));
        let v = out.rows[0].values[0].as_f64().unwrap();
        assert!((v - 10.0).abs() < 1e-9, "36 km/h should become 10 m/s, got {v}");
    }

    #[test]
    fn standardize_is_idempotent() {
        let (once, _) = standardize_layer(&meteo_layer(), &sample_dict());
        let (twice, _) = standardize_layer(&once, &sample_dict());
        assert_eq!(once, twice);
    }

    #[test]
    fn already_canonical_field_counts_matched() {
        let schema = vec![AttributeField::new("wind_speed", ValueType::Real).with_unit("m/s")];
        let rows = vec![FeatureRow {
            values: vec![CellValue::Real(5.0)],
            geometry: Geometry::point(0.0, 0.0),
        }];
        let layer = FeatureLayer::new("meteo", wgs84(), schema, rows).unwrap();
        let (out, report) = standardize_layer(&layer, &sample_dict());
        assert!(out.standardized);
        assert_eq!(report.matched_count(), 1);
        assert_eq!(out.rows[0].values[0], CellValue::Real(5.0));
    }

    #[test]
    fn type_conflict_leaves_field_raw() {
        let schema = vec![AttributeField::new("ws", ValueType::Text)];
        let rows = vec![FeatureRow {
            values: vec![CellValue::Text("fast".into())],
            geometry: Geometry::point(0.0, 0.0),
        }];
        let layer = FeatureLayer::new("meteo", wgs84(), schema, rows).unwrap();
        let (out, report) = standardize_layer(&layer, &sample_dict());
        assert!(!out.standardized);
        assert!(matches!(report.issues[0], FieldIssue::TypeConflict { .. }));
        assert!(out.schema[0].canonical_name.is_none());
    }

    #[test]
    fn ratio_counts_across_layers() {
        assert_eq!(standardization_ratio([]), 1.0);
        let (std_layer, _) = standardize_layer(&meteo_layer(), &sample_dict());
        let ratio = standardization_ratio([&std_layer]);
        assert!((ratio - 0.5).abs() < 1e-12);
    }

    #[test]
    fn metadata_merge_last_wins() {
        let mut layer = meteo_layer();
        attach_metadata(&mut layer, [("license".to_string(), "CC0".to_string())]);
        attach_metadata(
            &mut layer,
            [("license".to_string(), "CC-BY-4.0".to_string())],
        );
        assert_eq!(layer.metadata.get("license").unwrap(), "CC-BY-4.0");
    }

    #[test]
    fn schema_descriptions_are_mirrored() {
        let (out, report) = standardize_layer(&meteo_layer(), &sample_dict());
        let mirrored = out
            .metadata
            .keys()
            .filter(|k| k.starts_with("schema."))
            .count();
        assert_eq!(mirrored, report.matched_count());
        assert!(out.metadata.contains_key("schema.wind_speed.description"));
    }

    #[test]
    fn conversion_roundtrip_is_exact() {
        let to_ms = 1.0 / 3.6;
        let v = 123.456_f64;
        let roundtrip = (v * to_ms) * 3.6;
        assert!(((roundtrip - v) / v).abs() < 1e-12);
    }
}
