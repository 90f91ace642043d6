//! The skew map on a 2-graph whose red subgraph is a union of cycles:
//! factor red-then-blue through each square and read off orbit orders of
//! the induced permutation of blue edges.
//!
//! ```bash
//! cargo run --example skew_map
//! ```

use kpa::fixtures::fixture;
use kpa::graph::skew_order;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // One blue and one red loop: the square fixes the blue edge.
    let g = fixture("laurent2").expect("built-in");
    let sk = skew_order(&g)?;
    for (e, f) in &sk.f_map {
        println!("laurent2: F({e}) = {f}, order {:?}", sk.orders[e]);
    }

    // The red 2-cycle swaps the two blue loops: both have order 2.
    let g = fixture("redcycle2").expect("built-in");
    let sk = skew_order(&g)?;
    for (e, f) in &sk.f_map {
        println!("redcycle2: F({e}) = {f}, order {:?}", sk.orders[e]);
    }

    // On the box graph the corner blue edge has no red edge leaving its
    // range, so the map is undefined there.
    let omega = kpa::graph::build_omega(2, &kpa::degree::Degree(vec![1, 1]))?;
    match skew_order(&omega) {
        Err(e) => println!("box graph: {e}"),
        Ok(_) => unreachable!("the corner breaks the precondition"),
    }
    Ok(())
}
