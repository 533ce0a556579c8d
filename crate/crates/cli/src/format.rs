//! The colored-graph interchange format.
//!
//! A JSON document with `partite_sizes` (part sizes in vertex order, omitted
//! for hosts that are not complete multipartite), `vertex_count`, `edges` as
//! `[u, v, color]` triples with dense 0-based color ids, and an optional
//! `seed_name` naming the construction that produced the file.

use std::fmt;
use std::fs;
use std::path::Path;

use antiramsey_core::{ColoredGraph, Graph};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColoringFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partite_sizes: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex_count: Option<usize>,
    pub edges: Vec<[usize; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed_name: Option<String>,
}

/// A rejected document. `field` locates the problem (`edges[4]`,
/// `partite_sizes`, or `line 3, column 7` for syntax errors).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormatError {
    pub field: String,
    pub message: String,
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.field, self.message)
    }
}

impl std::error::Error for FormatError {}

fn err(field: impl Into<String>, message: impl Into<String>) -> FormatError {
    FormatError {
        field: field.into(),
        message: message.into(),
    }
}

impl ColoringFile {
    pub fn from_colored(cg: &ColoredGraph, seed_name: Option<&str>) -> Self {
        let g = cg.graph();
        ColoringFile {
            partite_sizes: g.part_sizes().map(<[usize]>::to_vec),
            vertex_count: Some(g.vertex_count()),
            edges: g
                .edges()
                .iter()
                .zip(cg.colors())
                .map(|(&(u, v), &c)| [u, v, c])
                .collect(),
            seed_name: seed_name.map(str::to_owned),
        }
    }

    /// Validates the document and builds the coloring.
    pub fn to_colored(&self) -> Result<ColoredGraph, FormatError> {
        let n = match (&self.partite_sizes, self.vertex_count) {
            (Some(sizes), count) => {
                if sizes.len() < 2 {
                    return Err(err("partite_sizes", "need at least two parts"));
                }
                if let Some(i) = sizes.iter().position(|&s| s == 0) {
                    return Err(err(format!("partite_sizes[{i}]"), "part size must be positive"));
                }
                let n: usize = sizes.iter().sum();
                if count.is_some_and(|c| c != n) {
                    return Err(err(
                        "vertex_count",
                        format!("{} disagrees with partite_sizes, which sum to {n}", count.unwrap()),
                    ));
                }
                n
            }
            (None, Some(n)) => n,
            (None, None) => return Err(err("partite_sizes", "one of partite_sizes or vertex_count is required")),
        };

        let mut seen = vec![false; n * n];
        for (i, &[u, v, _]) in self.edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(err(format!("edges[{i}]"), format!("vertex outside 0..{n}")));
            }
            if u == v {
                return Err(err(format!("edges[{i}]"), format!("loop at vertex {u}")));
            }
            if std::mem::replace(&mut seen[u.min(v) * n + u.max(v)], true) {
                return Err(err(format!("edges[{i}]"), format!("edge ({u}, {v}) listed twice")));
            }
        }
        let graph = match &self.partite_sizes {
            Some(sizes) => {
                let host = Graph::complete_multipartite(sizes).map_err(|e| err("partite_sizes", e.to_string()))?;
                for (i, &[u, v, _]) in self.edges.iter().enumerate() {
                    if host.edge_id(u, v).is_none() {
                        return Err(err(format!("edges[{i}]"), format!("({u}, {v}) joins two vertices of one part")));
                    }
                }
                if let Some(&(u, v)) = host.edges().iter().find(|&&(u, v)| !seen[u * n + v]) {
                    return Err(err("edges", format!("host edge ({u}, {v}) is missing")));
                }
                host
            }
            None => Graph::new(n, self.edges.iter().map(|&[u, v, _]| (u, v))).map_err(|e| err("edges", e.to_string()))?,
        };

        let count = self.edges.iter().map(|e| e[2] + 1).max().unwrap_or(0);
        let mut used = vec![false; count];
        let mut colors = vec![0; graph.edge_count()];
        for &[u, v, c] in &self.edges {
            used[c] = true;
            colors[graph.edge_id(u, v).expect("checked above")] = c;
        }
        if let Some(gap) = used.iter().position(|&u| !u) {
            return Err(err("edges", format!("color ids are not dense: color {gap} is unused")));
        }
        ColoredGraph::new(graph, colors).map_err(|e| err("edges", e.to_string()))
    }
}

pub fn parse_coloring(text: &str) -> Result<ColoredGraph, FormatError> {
    let file: ColoringFile = serde_json::from_str(text)
        .map_err(|e| err(format!("line {}, column {}", e.line(), e.column()), e.to_string()))?;
    file.to_colored()
}

pub fn to_json(cg: &ColoredGraph, seed_name: Option<&str>) -> String {
    let mut s = serde_json::to_string_pretty(&ColoringFile::from_colored(cg, seed_name)).expect("serializable");
    s.push('\n');
    s
}

pub fn read_coloring(path: &Path) -> Result<ColoredGraph, FormatError> {
    let text = fs::read_to_string(path).map_err(|e| err(path.display().to_string(), e.to_string()))?;
    parse_coloring(&text).map_err(|e| err(format!("{}: {}", path.display(), e.field), e.message))
}

pub fn write_coloring(path: &Path, cg: &ColoredGraph, seed_name: Option<&str>) -> std::io::Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir)?;
    }
    fs::write(path, to_json(cg, seed_name))
}
