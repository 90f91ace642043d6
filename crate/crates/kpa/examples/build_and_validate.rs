//! Build a 2-graph from the text format, validate it, and see what the
//! validator rejects.
//!
//! ```bash
//! cargo run --example build_and_validate
//! ```

use kpa::format::{graph_to_string, parse_graph};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Two vertices joined into a cycle in each colour. The squares pair
    // every blue-red corner with its red-blue mate.
    let text = r#"
        k = 2
        vertices = ["v1", "v2"]
        edges = [
          { id = "b1", color = 1, src = "v1", rng = "v1" },
          { id = "b2", color = 1, src = "v2", rng = "v2" },
          { id = "r12", color = 2, src = "v1", rng = "v2" },
          { id = "r21", color = 2, src = "v2", rng = "v1" },
        ]
        squares = [
          { lhs = ["b1", "r21"], rhs = ["r21", "b2"] },
          { lhs = ["b2", "r12"], rhs = ["r12", "b1"] },
        ]
    "#;

    let g = parse_graph(text)?;
    println!("parsed: {g}");
    println!("source-free: {}", g.no_sources());
    println!("round-trip:\n{}", graph_to_string(&g));

    // Remove one square: the blue-red corner b1.r21 loses its mate and
    // bijectivity fails.
    let broken = text.replace(r#"{ lhs = ["b1", "r21"], rhs = ["r21", "b2"] },"#, "");
    match parse_graph(&broken) {
        Err(e) => println!("as expected, rejected: {e}"),
        Ok(_) => unreachable!("validator must reject a missing square"),
    }

    // A graph may validate and still have sources; the flag records it.
    let omega = kpa::graph::build_omega(2, &kpa::degree::Degree(vec![3, 2]))?;
    println!(
        "box graph: {omega}, source-free: {} ({} source pairs)",
        omega.no_sources(),
        omega.sources().len()
    );
    Ok(())
}
