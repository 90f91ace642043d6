//! Saturated hereditary vertex sets: closures, the full lattice with its
//! Hasse diagram, quotient graphs, and ideal membership.
//!
//! ```bash
//! cargo run --example ideal_lattice
//! ```

use kpa::algebra::Algebra;
use kpa::analysis::{
    her_sat_closure, ideal_membership, quotient_graph, sat_her_lattice, QuotientMap,
};
use kpa::expr::parse_expr;
use kpa::fixtures::fixture;
use kpa::report::lattice_dot;
use kpa::ring::RingSpec;
use std::collections::BTreeSet;
use std::sync::Arc;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = Arc::new(fixture("twoblock").expect("built-in"));

    // Closures: u reaches v along the connecting edge, so {u} closes up.
    for seed in ["v", "u"] {
        let h = her_sat_closure(&g, &BTreeSet::from([g.vertex_id(seed)?]))?;
        println!("closure({{{seed}}}) = {{{}}}", h.names().join(","));
    }

    // The whole lattice and its DOT rendering.
    let lattice = sat_her_lattice(&g)?;
    println!(
        "lattice members: {:?}",
        lattice.sets.iter().map(|s| s.names()).collect::<Vec<_>>()
    );
    println!("{}", lattice_dot(&lattice));

    // Quotient by {v}: only the loop at u survives, still source-free.
    let h = her_sat_closure(&g, &BTreeSet::from([g.vertex_id("v")?]))?;
    let q = quotient_graph(&h)?;
    println!("quotient by {{v}}: {q}");

    // Membership in the ideal generated by {p_v : v in H} is decided by
    // level expansion; the quotient map gives the independent kernel test.
    let alg = Algebra::new(Arc::clone(&g), RingSpec::Integers)?;
    let qm = QuotientMap::new(&h)?;
    for text in ["s(b)*st(c)", "p(u)", "s(e)*st(e)"] {
        let x = parse_expr(&alg, text)?;
        let member = ideal_membership(&x, &h)?;
        let killed = qm.apply(&x)?.is_zero()?;
        println!("{text}: in I_H = {member}, quotient image zero = {killed}");
        assert_eq!(member, killed);
    }
    Ok(())
}
