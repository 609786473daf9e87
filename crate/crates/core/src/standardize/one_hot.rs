//! One-hot expansion of categorical columns.

use std::collections::BTreeSet;

use crate::model::layer::normalize_identifier;
use crate::model::{AttributeField, CellValue, FeatureLayer, ValueType};

use super::StandardizeError;

const MAX_CARDINALITY: usize = 64;

#[derive(Debug, Clone)]
pub struct OneHotReport {
    pub column: String,
    /// Distinct values in indicator-column order.
    pub values: Vec<String>,
    /// Rows whose source cell was null (all indicators zero).
    pub null_rows: usize,
}

/// Append one 0/1 integer indicator column per distinct value of a
/// categorical or text column, named `<column>_<slug(value)>`. The source
/// column is retained; null cells yield all-zero indicators.
pub fn one_hot(
    layer: &FeatureLayer,
    column: &str,
) -> Result<(FeatureLayer, OneHotReport), StandardizeError> {
    let idx = layer
        .field_index(column)
        .ok_or_else(|| StandardizeError::NoSuchColumn(column.to_string()))?;
    let field = &layer.schema[idx];
    if !matches!(field.value_type, ValueType::Categorical | ValueType::Text) {
        return Err(StandardizeError::NoSuchColumn(format!(
            "{column} (not categorical/text)"
        )));
    }

    let distinct: BTreeSet<String> = layer
        .rows
        .iter()
        .filter_map(|r| r.values[idx].as_text().map(str::to_string))
        .collect();
    if distinct.len() > MAX_CARDINALITY {
        return Err(StandardizeError::CardinalityTooHigh {
            column: column.to_string(),
            distinct: distinct.len(),
            limit: MAX_CARDINALITY,
        });
    }

    let base = layer.schema[idx].effective_name().to_string();
    let mut out = layer.clone();
    let mut used: BTreeSet<String> = layer
        .schema
        .iter()
        .map(|f| f.effective_name().to_string())
        .collect();
    let mut indicator_names = Vec::with_capacity(distinct.len());
    for value in &distinct {
        let mut name = format!("{base}_{}", normalize_identifier(value));
        let mut k = 2;
        while used.contains(&name) {
            name = format!("{base}_{}_{k}", normalize_identifier(value));
            k += 1;
        }
        used.insert(name.clone());
        indicator_names.push(name);
    }

    for name in &indicator_names {
        out.schema
            .push(AttributeField::new(name.clone(), ValueType::Integer));
    }
    let mut null_rows = 0usize;
    for row in &mut out.rows {
        let cell_text = row.values[idx].as_text().map(str::to_string);
        if cell_text.is_none() {
            null_rows += 1;
        }
        for value in &distinct {
            let hit = cell_text.as_deref() == Some(value.as_str());
            row.values.push(CellValue::Integer(i64::from(hit)));
        }
    }

    Ok((
        out,
        OneHotReport {
            column: base,
            values: distinct.into_iter().collect(),
            null_rows,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crs::registry::wgs84;
    use crate::model::{FeatureRow, Geometry};

    fn landcover_layer(values: Vec<CellValue>) -> FeatureLayer {
        let schema = vec![AttributeField::new("landcover", ValueType::Categorical)];
        let rows = values
            .into_iter()
            .map(|v| FeatureRow {
                values: vec![v],
                geometry: Geometry::point(0.0, 0.0),
            })
            .collect();
        FeatureLayer::new("cover", wgs84(), schema, rows).unwrap()
    }

    #[test]
    fn three_values_give_permutation_matrix() {
        let layer = landcover_layer(vec![
            CellValue::Text("rock".into()),
            CellValue::Text("scrub".into()),
            CellValue::Text("urban".into()),
        ]);
        let (out, report) = one_hot(&layer, "landcover").unwrap();
        assert_eq!(report.values, vec!["rock", "scrub", "urban"]);
        assert_eq!(out.schema.len(), 4);
        // each row has exactly one indicator set, forming a permutation
        for (i, row) in out.rows.iter().enumerate() {
            let indicators: Vec<i64> = row.values[1..]
                .iter()
                .map(|c| match c {
                    CellValue::Integer(v) => *v,
                    _ => panic!("indicator must be integer"),
                })
                .collect();
            assert_eq!(indicators.iter().sum::<i64>(), 1);
            assert_eq!(indicators[i], 1);
        }
    }

    #[test]
    fn null_cell_gives_all_zero_indicators() {
        let layer = landcover_layer(vec![CellValue::Text("rock".into()), CellValue::Null]);
        let (out, report) = one_hot(&layer, "landcover").unwrap();
        assert_eq!(report.null_rows, 1);
        let row = &out.rows[1];
        assert!(row.values[1..]
            .iter()
            .all(|c| matches!(c, CellValue::Integer(0))));
    }

    #[test]
    fn cardinality_limit_is_enforced() {
        let values: Vec<CellValue> = (0..65)
            .map(|i| CellValue::Text(format!("v{i}")))
            .collect();
        let layer = landcover_layer(values);
        assert!(matches!(
            one_hot(&layer, "landcover"),
            Err(StandardizeError::CardinalityTooHigh { distinct: 65, .. })
        ));
        // exactly 64 is fine
        let values: Vec<CellValue> = (0..64)
            .map(|i| CellValue::Text(format!("v{i}")))
            .collect();
        assert!(one_hot(&landcover_layer(values), "landcover").is_ok());
    }

    #[test]
    fn missing_column_is_rejected() {
        let layer = landcover_layer(vec![]);
        assert!(matches!(
            one_hot(&layer, "absent"),
            Err(StandardizeError::NoSuchColumn(_))
        ));
    }
}
