//! One-line JSON records for permutominoes:
//! `{"n":3,"cols":[[1,2],[1,3],[2,3]],"label":{"k":2,"class":"R"}}`, with an
//! optional `"path"` listing the operations from the single cell.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::eco::Operation;
use crate::grid::{Column, GridError, Label, Permutomino};

#[derive(Debug, Error)]
pub enum RecordError {
    #[error("malformed record: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid permutomino: {0}")]
    Grid(#[from] GridError),
    #[error("record says n = {claimed} but has {actual} columns")]
    SizeMismatch { claimed: u32, actual: u32 },
    #[error("record label {claimed} disagrees with computed label {actual}")]
    LabelMismatch { claimed: Label, actual: Label },
    #[error("bad operation in path: {0}")]
    Path(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermutominoRecord {
    pub n: u32,
    pub cols: Vec<Column>,
    pub label: Label,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<Vec<String>>,
}

impl PermutominoRecord {
    pub fn new(p: &Permutomino) -> Self {
        PermutominoRecord { n: p.size(), cols: p.columns().to_vec(), label: p.label(), path: None }
    }

    pub fn with_path(p: &Permutomino, path: &[Operation]) -> Self {
        PermutominoRecord { path: Some(path.iter().map(ToString::to_string).collect()), ..Self::new(p) }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    /// Parses one line and checks it against the geometry. The label is
    /// compared on `(k, class)`.
    pub fn parse(line: &str) -> Result<Self, RecordError> {
        let rec: PermutominoRecord = serde_json::from_str(line)?;
        rec.permutomino()?;
        Ok(rec)
    }

    pub fn permutomino(&self) -> Result<Permutomino, RecordError> {
        let p = Permutomino::new(self.cols.iter().copied())?;
        if p.size() != self.n {
            return Err(RecordError::SizeMismatch { claimed: self.n, actual: p.size() });
        }
        let actual = p.label();
        if actual.key() != self.label.key() {
            return Err(RecordError::LabelMismatch { claimed: self.label, actual });
        }
        Ok(p)
    }

    pub fn operations(&self) -> Result<Option<Vec<Operation>>, RecordError> {
        self.path
            .as_ref()
            .map(|ops| ops.iter().map(|s| s.parse::<Operation>().map_err(RecordError::Path)).collect())
            .transpose()
    }
}
