//! Scenario files: a diagram (inline or by catalog name), the tasks to run
//! on it and per-task options.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;
use serde_json::{Map, Value};

use super::{Task, TaskError};
use crate::diagram::{catalog, CurveDiagram};

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InlineDiagram {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub edges: Vec<Vec<i64>>,
}

impl InlineDiagram {
    /// Edges are `[i, j, intersection]` or `[i, j, intersection, points]`.
    pub fn build(&self) -> Result<CurveDiagram, TaskError> {
        let mut d = CurveDiagram::with_labels(self.vertices.iter().cloned());
        for e in &self.edges {
            let (i, j, m, p) = match *e.as_slice() {
                [i, j, m] => (i, j, m, m),
                [i, j, m, p] => (i, j, m, p),
                _ => return Err(TaskError::Schema(format!("edge {e:?} needs 3 or 4 entries"))),
            };
            let idx = |x: i64| usize::try_from(x).map_err(|_| TaskError::Schema(format!("negative index in {e:?}")));
            d.add_edge(idx(i)?, idx(j)?, m, p).map_err(|err| TaskError::Schema(err.to_string()))?;
        }
        Ok(d)
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub schema_version: u64,
    #[serde(default)]
    pub diagram: Option<InlineDiagram>,
    #[serde(default)]
    pub catalog: Option<String>,
    pub tasks: Vec<Task>,
    #[serde(default)]
    pub options: BTreeMap<Task, Map<String, Value>>,
}

impl Scenario {
    pub fn from_json(text: &str) -> Result<Self, TaskError> {
        let s: Scenario = serde_json::from_str(text).map_err(|e| TaskError::Parse(e.to_string()))?;
        if s.schema_version != SCHEMA_VERSION {
            return Err(TaskError::Schema(format!("unsupported schema_version {}", s.schema_version)));
        }
        if s.diagram.is_some() == s.catalog.is_some() {
            return Err(TaskError::Schema("exactly one of `diagram` and `catalog` is required".into()));
        }
        if s.tasks.is_empty() {
            return Err(TaskError::Schema("`tasks` is empty".into()));
        }
        if let Some(name) = &s.catalog {
            if catalog::by_name(name).is_none() {
                return Err(TaskError::UnknownCatalog(name.clone()));
            }
        }
        s.diagram.as_ref().map(InlineDiagram::build).transpose()?;
        Ok(s)
    }

    pub fn from_path(path: &Path) -> Result<Self, TaskError> {
        let text = std::fs::read_to_string(path).map_err(|e| TaskError::Io(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    /// A scenario naming a catalog diagram.
    pub fn for_catalog(name: &str, tasks: Vec<Task>) -> Result<Self, TaskError> {
        if catalog::by_name(name).is_none() {
            return Err(TaskError::UnknownCatalog(name.to_string()));
        }
        Ok(Scenario {
            schema_version: SCHEMA_VERSION,
            diagram: None,
            catalog: Some(name.to_string()),
            tasks,
            options: BTreeMap::new(),
        })
    }

    pub fn diagram(&self) -> Result<CurveDiagram, TaskError> {
        match (&self.diagram, &self.catalog) {
            (Some(d), _) => d.build(),
            (None, Some(name)) => catalog::by_name(name).ok_or_else(|| TaskError::UnknownCatalog(name.clone())),
            (None, None) => Err(TaskError::Schema("no diagram".into())),
        }
    }

    /// Short name for reports: the catalog name or `inline`.
    pub fn input_name(&self) -> String {
        self.catalog.clone().unwrap_or_else(|| "inline".into())
    }
}
