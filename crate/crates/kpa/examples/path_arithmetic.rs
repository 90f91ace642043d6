//! Canonical path words: composition through commuting squares, the unique
//! three-way factorization, and degree-indexed path counting.
//!
//! ```bash
//! cargo run --example path_arithmetic
//! ```

use kpa::degree::Degree;
use kpa::fixtures::fixture;
use kpa::graph::build_omega;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = fixture("redcycle2").expect("built-in");

    // Composition re-sorts colours using the stored squares: red-then-blue
    // becomes blue-then-red.
    let r21 = g.parse_path("r21")?;
    let b2 = g.parse_path("b2")?;
    let p = g.compose(&r21, &b2)?;
    println!("r21 . b2  =  {}   (degree {})", g.path_string(&p), p.degree());

    // Every interval of degrees cuts out a unique middle factor.
    let long = g.parse_path("b1.b1.r21")?;
    let mid = g.segment(&long, &Degree(vec![1, 0]), &Degree(vec![2, 1]))?;
    println!(
        "{}({},{}) = {}",
        g.path_string(&long),
        Degree(vec![1, 0]),
        Degree(vec![2, 1]),
        g.path_string(&mid)
    );

    // Splitting and recomposing is the identity.
    let head = g.segment(&long, &Degree(vec![0, 0]), &Degree(vec![1, 0]))?;
    let tail = g.segment(&long, &Degree(vec![2, 1]), long.degree())?;
    let back = g.compose(&head, &g.compose(&mid, &tail)?)?;
    assert_eq!(back, long);
    println!("three-way factorization recomposes exactly");

    // Path counting on the box graph matches the closed form
    // |v Lambda^n| = [p + n inside the box].
    let omega = build_omega(2, &Degree(vec![3, 2]))?;
    let n = Degree(vec![1, 1]);
    let mut total = 0;
    for v in omega.vertices() {
        total += omega.count_paths_from(v, &n);
    }
    println!("box graph 3x2: total degree-(1,1) paths = {total}");

    for v in ["0,0", "2,1", "3,2"] {
        let id = omega.vertex_id(v)?;
        println!(
            "  |{v} . Lambda^(1,1)| = {}",
            omega.count_paths_from(id, &n)
        );
    }
    Ok(())
}
