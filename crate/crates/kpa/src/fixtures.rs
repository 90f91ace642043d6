//! Built-in graphs shared by tests, examples and the CLI.

use crate::degree::Degree;
use crate::graph::{build_omega, EdgeDoc, GraphDoc, KGraph, SquareDoc};

pub const FIXTURE_NAMES: &[&str] = &[
    "laurent2",
    "leavitt2",
    "loop1",
    "omega-2-3-2",
    "redcycle2",
    "twoblock",
    "vwcofinal",
];

/// Look up a built-in graph by name.
pub fn fixture(name: &str) -> Option<KGraph> {
    let doc = fixture_doc(name)?;
    Some(KGraph::validate(&doc).expect("built-in fixtures validate"))
}

pub fn fixture_doc(name: &str) -> Option<GraphDoc> {
    let edge = |id: &str, color: usize, src: &str, rng: &str| EdgeDoc {
        id: id.to_string(),
        color,
        src: src.to_string(),
        rng: rng.to_string(),
    };
    let square = |lhs: [&str; 2], rhs: [&str; 2]| SquareDoc {
        lhs: [lhs[0].to_string(), lhs[1].to_string()],
        rhs: [rhs[0].to_string(), rhs[1].to_string()],
    };
    match name {
        // One blue and one red loop at a single vertex; the 2-graph whose
        // algebra is the Laurent polynomial ring in two variables.
        "laurent2" => Some(GraphDoc {
            k: 2,
            vertices: vec!["v".into()],
            edges: vec![edge("b", 1, "v", "v"), edge("f", 2, "v", "v")],
            squares: vec![square(["b", "f"], ["f", "b"])],
        }),
        // Two loops at one vertex; the rank-1 Leavitt configuration.
        "leavitt2" => Some(GraphDoc {
            k: 1,
            vertices: vec!["v".into()],
            edges: vec![edge("a", 1, "v", "v"), edge("b", 1, "v", "v")],
            squares: vec![],
        }),
        // A single loop: the basic periodic 1-graph.
        "loop1" => Some(GraphDoc {
            k: 1,
            vertices: vec!["v".into()],
            edges: vec![edge("a", 1, "v", "v")],
            squares: vec![],
        }),
        "omega-2-3-2" => Some(
            build_omega(2, &Degree(vec![3, 2]))
                .expect("omega fixture in range")
                .to_doc(),
        ),
        // Blue loops at two vertices joined by a red 2-cycle.
        "redcycle2" => Some(GraphDoc {
            k: 2,
            vertices: vec!["v1".into(), "v2".into()],
            edges: vec![
                edge("b1", 1, "v1", "v1"),
                edge("b2", 1, "v2", "v2"),
                edge("r12", 2, "v1", "v2"),
                edge("r21", 2, "v2", "v1"),
            ],
            squares: vec![
                square(["b1", "r21"], ["r21", "b2"]),
                square(["b2", "r12"], ["r12", "b1"]),
            ],
        }),
        // A loop at u fed by a block of two loops at v.
        "twoblock" => Some(GraphDoc {
            k: 1,
            vertices: vec!["u".into(), "v".into()],
            edges: vec![
                edge("a", 1, "u", "u"),
                edge("b", 1, "v", "v"),
                edge("c", 1, "v", "v"),
                edge("e", 1, "v", "u"),
            ],
            squares: vec![],
        }),
        // Cofinal but periodic: an entryless loop at v reaching w.
        "vwcofinal" => Some(GraphDoc {
            k: 1,
            vertices: vec!["v".into(), "w".into()],
            edges: vec![edge("a", 1, "v", "v"), edge("e", 1, "v", "w")],
            squares: vec![],
        }),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixtures_validate() {
        for name in FIXTURE_NAMES {
            let g = fixture(name).unwrap();
            assert!(g.vertex_count() >= 1, "{name}");
        }
    }

    #[test]
    fn source_flags() {
        for name in FIXTURE_NAMES {
            let g = fixture(name).unwrap();
            let expect_sources = *name == "omega-2-3-2";
            assert_eq!(g.no_sources(), !expect_sources, "{name}");
        }
    }

    #[test]
    fn omega_232_counts() {
        let g = fixture("omega-2-3-2").unwrap();
        assert_eq!(g.vertex_count(), 12);
        assert_eq!(g.edge_count_of_color(0), 9);
        assert_eq!(g.edge_count_of_color(1), 8);
    }
}
