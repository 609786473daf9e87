//! Typed attribute cells.

use chrono::NaiveDate;
use serde::{Deserialize, Serialize};

/// Declared type of an attribute field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ValueType {
    Text,
    Integer,
    Real,
    Boolean,
    Date,
    Categorical,
}

impl ValueType {
    pub fn name(&self) -> &'static str {
        match self {
            ValueType::Text => "text",
            ValueType::Integer => "integer",
            ValueType::Real => "real",
            ValueType::Boolean => "boolean",
            ValueType::Date => "date",
            ValueType::Categorical => "categorical",
        }
    }

    pub fn parse(s: &str) -> Option<ValueType> {
        Some(match s.trim().to_ascii_lowercase().as_str() {
            "text" | "string" => ValueType::Text,
            "integer" | "int" => ValueType::Integer,
            "real" | "float" | "double" => ValueType::Real,
            "boolean" | "bool" => ValueType::Boolean,
            "date" => ValueType::Date,
            "categorical" => ValueType::Categorical,
            _ => return None,
        })
    }
}

/// One attribute cell. Nulls are explicit, never encoded as sentinel strings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum CellValue {
    Null,
    Text(String),
    Integer(i64),
    Real(f64),
    Boolean(bool),
    Date(NaiveDate),
}

impl CellValue {
    pub fn is_null(&self) -> bool {
        matches!(self, CellValue::Null)
    }

    /// Whether this cell is storable under the given declared type.
    pub fn matches(&self, ty: ValueType) -> bool {
        match (self, ty) {
            (CellValue::Null, _) => true,
            (CellValue::Text(_), ValueType::Text | ValueType::Categorical) => true,
            (CellValue::Integer(_), ValueType::Integer) => true,
            (CellValue::Real(_), ValueType::Real) => true,
            (CellValue::Boolean(_), ValueType::Boolean) => true,
            (CellValue::Date(_), ValueType::Date) => true,
            _ => false,
        }
    }

    /// Numeric view of integer/real cells.
    pub fn as_f64(&self) -> Option<f64> {
        match self {
            CellValue::Integer(v) => Some(*v as f64),
            CellValue::Real(v) => Some(*v),
            _ => None,
        }
    }

    pub fn as_text(&self) -> Option<&str> {
        match self {
            CellValue::Text(s) => Some(s),
            _ => None,
        }
    }

    /// Render for reports and query output. Nulls render empty.
    pub fn display(&self) -> String {
        match self {
            CellValue::Null => String::new(),
            CellValue::Text(s) => s.clone(),
            CellValue::Integer(v) => v.to_string(),
            CellValue::Real(v) => format!("{v}"),
            CellValue::Boolean(b) => b.to_string(),
            CellValue::Date(d) => d.format("%Y-%m-%d").to_string(),
        }
    }
}
