//! Audit-trail records for every pipeline stage.

use std::collections::BTreeMap;

use chrono::{DateTime, Utc};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Pipeline stage a provenance record belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    Ingest,
    Standardize,
    Enrich,
    Integrate,
    Query,
    Publish,
}

impl Stage {
    pub fn name(&self) -> &'static str {
        match self {
            Stage::Ingest => "ingest",
            Stage::Standardize => "standardize",
            Stage::Enrich => "enrich",
            Stage::Integrate => "integrate",
            Stage::Query => "query",
            Stage::Publish => "publish",
        }
    }
}

impl std::fmt::Display for Stage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error)]
pub enum ProvenanceError {
    #[error("sha256 digest must be 64 lowercase hex chars, got {0:?}")]
    BadDigest(String),
    #[error("finished timestamp precedes started")]
    FinishedBeforeStarted,
}

/// One audit record: which input, which stage, content digest, when, with
/// what parameters and tool version.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProvenanceRecord {
    pub input_id: String,
    pub sha256: String,
    pub stage: Stage,
    pub started: DateTime<Utc>,
    pub finished: DateTime<Utc>,
    pub parameters: BTreeMap<String, String>,
    pub tool_version: String,
}

impl ProvenanceRecord {
    pub fn new(
        input_id: impl Into<String>,
        sha256: impl Into<String>,
        stage: Stage,
        started: DateTime<Utc>,
        finished: DateTime<Utc>,
        parameters: BTreeMap<String, String>,
        tool_version: impl Into<String>,
    ) -> Result<Self, ProvenanceError> {
        let sha256 = sha256.into();
        if sha256.len() != 64
            || !sha256
                .bytes()
                .all(|b| b.is_ascii_digit() || (b'a'..=b'f').contains(&b))
        {
            return Err(ProvenanceError::BadDigest(sha256));
        }
        if finished < started {
            return Err(ProvenanceError::FinishedBeforeStarted);
        }
        Ok(ProvenanceRecord {
            input_id: input_id.into(),
            sha256,
            stage,
            started,
            finished,
            parameters,
            tool_version: tool_version.into(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_shape_is_enforced() {
        let t = Utc::now();
        let ok = "a".repeat(64);
        assert!(
            ProvenanceRecord::new("x", ok, Stage::Ingest, t, t, BTreeMap::new(), "0.1").is_ok()
        );
        let upper = "A".repeat(64);
        assert!(matches!(
            ProvenanceRecord::new("x", upper, Stage::Ingest, t, t, BTreeMap::new(), "0.1"),
            Err(ProvenanceError::BadDigest(_))
        ));
        assert!(matches!(
            ProvenanceRecord::new("x", "abc", Stage::Ingest, t, t, BTreeMap::new(), "0.1"),
            Err(ProvenanceError::BadDigest(_))
        ));
    }

    #[test]
    fn finished_before_started_is_rejected() {
        let t = Utc::now();
        let earlier = t - chrono::Duration::seconds(5);
        assert!(matches!(
            ProvenanceRecord::new(
                "x",
                "0".repeat(64),
                Stage::Enrich,
                t,
                earlier,
                BTreeMap::new(),
                "0.1"
            ),
            Err(ProvenanceError::FinishedBeforeStarted)
        ));
    }
}
