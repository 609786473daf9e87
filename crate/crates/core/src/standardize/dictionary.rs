//! The controlled-vocabulary dictionary and its text format.
//!
//! File format: UTF-8, one entry per line, pipe-delimited columns
//!
//! ```text
//! canonical_name|description|unit|type|synonyms(;-sep)|conversions("raw_unit=factor[,offset]" ;-sep)
//! ```
//!
//! Lines starting with `#` and blank lines are ignored.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::model::layer::is_valid_identifier;
use crate::model::ValueType;

#[derive(Debug, Error)]
pub enum DictionaryError {
    #[error("line {0}: expected 6 pipe-delimited columns, got {1}")]
    ColumnCount(usize, usize),
    #[error("line {0}: canonical name {1:?} is not a valid identifier")]
    BadCanonicalName(usize, String),
    #[error("line {0}: unknown value type {1:?}")]
    BadValueType(usize, String),
    #[error("line {0}: bad conversion spec {1:?}")]
    BadConversion(usize, String),
    #[error("line {0}: conversion factor must be finite and nonzero")]
    BadFactor(usize),
    #[error("duplicate canonical name {0:?}")]
    DuplicateCanonical(String),
    #[error("synonym {0:?} maps to both {1:?} and {2:?}")]
    DuplicateSynonym(String, String, String),
}

/// Affine unit conversion: canonical = raw · factor + offset.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitConversion {
    pub factor: f64,
    pub offset: f64,
}

#[derive(Debug, Clone)]
pub struct DictionaryEntry {
    pub canonical_name: String,
    pub description: String,
    pub canonical_unit: Option<String>,
    pub value_type: ValueType,
    pub synonyms: Vec<String>,
    conversions: BTreeMap<String, UnitConversion>,
}

impl DictionaryEntry {
    pub fn conversion_for(&self, raw_unit: &str) -> Option<&UnitConversion> {
        self.conversions.get(&normalize_unit(raw_unit))
    }
}

/// Controlled vocabulary: canonical attribute names with synonyms and unit
/// conversions. Lookup is insensitive to case, underscores and hyphens.
#[derive(Debug, Clone, Default)]
pub struct AttributeDictionary {
    entries: Vec<DictionaryEntry>,
    by_key: BTreeMap<String, usize>,
}

impl AttributeDictionary {
    pub fn parse(text: &str) -> Result<Self, DictionaryError> {
        let mut dict = AttributeDictionary::default();
        for (lineno, line) in text.lines().enumerate() {
            let line_1 = lineno + 1;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let cols: Vec<&str> = trimmed.split('|').collect();
            if cols.len() != 6 {
                return Err(DictionaryError::ColumnCount(line_1, cols.len()));
            }
            let canonical = cols[0].trim().to_string();
            if !is_valid_identifier(&canonical) {
                return Err(DictionaryError::BadCanonicalName(line_1, canonical));
            }
            let value_type = ValueType::parse(cols[3])
                .ok_or_else(|| DictionaryError::BadValueType(line_1, cols[3].to_string()))?;
            let unit = {
                let u = cols[2].trim();
                if u.is_empty() {
                    None
                } else {
                    Some(u.to_string())
                }
            };
            let synonyms: Vec<String> = cols[4]
                .split(';')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(str::to_string)
                .collect();
            let mut conversions = BTreeMap::new();
            for spec in cols[5].split(';').map(str::trim).filter(|s| !s.is_empty()) {
                let (raw_unit, nums) = spec
                    .split_once('=')
                    .ok_or_else(|| DictionaryError::BadConversion(line_1, spec.to_string()))?;
                let mut parts = nums.split(',').map(str::trim);
                let factor: f64 = parts
                    .next()
                    .and_then(|p| p.parse().ok())
                    .ok_or_else(|| DictionaryError::BadConversion(line_1, spec.to_string()))?;
                let offset: f64 = match parts.next() {
                    Some(p) => p
                        .parse()
                        .map_err(|_| DictionaryError::BadConversion(line_1, spec.to_string()))?,
                    None => 0.0,
                };
                if parts.next().is_some() {
                    return Err(DictionaryError::BadConversion(line_1, spec.to_string()));
                }
                if !factor.is_finite() || factor == 0.0 || !offset.is_finite() {
                    return Err(DictionaryError::BadFactor(line_1));
                }
                conversions.insert(normalize_unit(raw_unit), UnitConversion { factor, offset });
            }
            dict.push(DictionaryEntry {
                canonical_name: canonical,
                description: cols[1].trim().to_string(),
                canonical_unit: unit,
                value_type,
                synonyms,
                conversions,
            })?;
        }
        Ok(dict)
    }

    pub fn push(&mut self, entry: DictionaryEntry) -> Result<(), DictionaryError> {
        if self
            .entries
            .iter()
            .any(|e| e.canonical_name == entry.canonical_name)
        {
            return Err(DictionaryError::DuplicateCanonical(entry.canonical_name));
        }
        let idx = self.entries.len();
        // the canonical name is an implicit synonym of itself
        let mut keys: Vec<String> = vec![normalize_name(&entry.canonical_name)];
        keys.extend(entry.synonyms.iter().map(|s| normalize_name(s)));
        for key in keys {
            if let Some(&other) = self.by_key.get(&key) {
                if other != idx {
                    return Err(DictionaryError::DuplicateSynonym(
                        key,
                        self.entries[other].canonical_name.clone(),
                        entry.canonical_name.clone(),
                    ));
                }
            }
            self.by_key.insert(key, idx);
        }
        self.entries.push(entry);
        Ok(())
    }

    pub fn lookup(&self, raw_name: &str) -> Option<&DictionaryEntry> {
        self.by_key
            .get(&normalize_name(raw_name))
            .map(|&i| &self.entries[i])
    }

    pub fn entries(&self) -> &[DictionaryEntry] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// A view with self-synonyms only: a field matches iff it is already
    /// canonical. Used to measure how standardized a corpus arrives.
    pub fn self_view(&self) -> AttributeDictionary {
        let mut out = AttributeDictionary::default();
        for e in &self.entries {
            out.push(DictionaryEntry {
                canonical_name: e.canonical_name.clone(),
                description: e.description.clone(),
                canonical_unit: e.canonical_unit.clone(),
                value_type: e.value_type,
                synonyms: Vec::new(),
                conversions: BTreeMap::new(),
            })
            .expect("entries were already unique");
        }
        out
    }
}

/// Matching key for field names: case-insensitive, underscores and hyphens
/// ignored ("Wind-Spd" matches "wind_spd").
pub fn normalize_name(s: &str) -> String {
    s.chars()
        .filter(|c| *c != '_' && *c != '-')
        .flat_map(|c| c.to_lowercase())
        .collect()
}

/// Matching key for units: case-insensitive, whitespace ignored.
pub fn normalize_unit(s: &str) -> String {
    s.chars()
        .filter(|c| !c.is_whitespace())
        .flat_map(|c| c.to_lowercase())
        .collect()
}
