//! Graph file format: one structured-text document per graph.
//!
//! ```text
//! k = 2
//! vertices = ["v"]
//! edges = [ { id = "b", color = 1, src = "v", rng = "v" },
//!           { id = "f", color = 2, src = "v", rng = "v" } ]
//! squares = [ { lhs = ["b", "f"], rhs = ["f", "b"] } ]
//! ```

use crate::graph::{GraphDoc, GraphError, KGraph};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("io error reading {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

/// Parse and validate a graph document.
pub fn parse_graph(text: &str) -> Result<KGraph, FormatError> {
    let doc: GraphDoc = toml::from_str(text).map_err(|e| FormatError::Parse(e.to_string()))?;
    Ok(KGraph::validate(&doc)?)
}

pub fn read_graph_file(path: &str) -> Result<KGraph, FormatError> {
    let text = std::fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.to_string(),
        source,
    })?;
    parse_graph(&text)
}

/// Serialize with deterministic field and entry order.
pub fn graph_to_string(g: &KGraph) -> String {
    let doc = g.to_doc();
    let mut out = String::new();
    out.push_str(&format!("k = {}\n", doc.k));
    let quoted: Vec<String> = doc.vertices.iter().map(|v| format!("{v:?}")).collect();
    out.push_str(&format!("vertices = [{}]\n", quoted.join(", ")));
    out.push_str("edges = [\n");
    for e in &doc.edges {
        out.push_str(&format!(
            "  {{ id = {:?}, color = {}, src = {:?}, rng = {:?} }},\n",
            e.id, e.color, e.src, e.rng
        ));
    }
    out.push_str("]\n");
    out.push_str("squares = [\n");
    for s in &doc.squares {
        out.push_str(&format!(
            "  {{ lhs = [{:?}, {:?}], rhs = [{:?}, {:?}] }},\n",
            s.lhs[0], s.lhs[1], s.rhs[0], s.rhs[1]
        ));
    }
    out.push_str("]\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{fixture, FIXTURE_NAMES};

    #[test]
    fn round_trip_all_fixtures() {
        for name in FIXTURE_NAMES {
            let g = fixture(name).unwrap();
            let text = graph_to_string(&g);
            let back = parse_graph(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert_eq!(g, back, "{name}");
        }
    }

    #[test]
    fn parse_rejects_malformed() {
        assert!(parse_graph("k = ").is_err());
        assert!(parse_graph("k = 1\nvertices = [\"v\"]\nedges = []").is_ok());
    }

    #[test]
    fn missing_square_is_rejected() {
        let g = fixture("laurent2").unwrap();
        let text = graph_to_string(&g);
        let broken: String = text
            .lines()
            .filter(|l| !l.contains("lhs"))
            .collect::<Vec<_>>()
            .join("\n");
        let err = parse_graph(&broken).unwrap_err();
        assert!(
            matches!(err, FormatError::Graph(GraphError::SquareNotBijective(_))),
            "{err}"
        );
    }
}
