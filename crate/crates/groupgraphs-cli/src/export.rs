//! Byte-deterministic graph exports: JSON, DOT and CSV.

use serde::{Deserialize, Serialize};

use groupgraphs::HierarchyGraph;

/// The JSON graph schema. Edges are `[i, j]` index pairs with `i < j`,
/// lexicographically sorted.
#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct GraphDocument {
    pub kind: String,
    pub family: String,
    pub vertices: Vec<String>,
    pub edges: Vec<(usize, usize)>,
}

impl GraphDocument {
    pub fn from_graph(g: &HierarchyGraph, family: &str) -> GraphDocument {
        GraphDocument {
            kind: g.kind().as_str().to_string(),
            family: family.to_string(),
            vertices: g.labels().to_vec(),
            edges: g.edges(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }
}

pub fn to_dot(g: &HierarchyGraph, family: &str) -> String {
    let mut out = String::new();
    out.push_str(&format!("graph \"{}:{}\" {{\n", g.kind(), family));
    for label in g.labels() {
        out.push_str(&format!("  \"{label}\";\n"));
    }
    for (i, j) in g.edges() {
        out.push_str(&format!("  \"{}\" -- \"{}\";\n", g.label(i), g.label(j)));
    }
    out.push_str("}\n");
    out
}

pub fn to_csv(g: &HierarchyGraph) -> String {
    let mut out = String::new();
    for (i, j) in g.edges() {
        out.push_str(&format!("{i},{j}\n"));
    }
    out
}
