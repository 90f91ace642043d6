//! Exact equality in the algebra: level expansion, the zero test, display
//! reduction, and compression down to a vertex idempotent.
//!
//! ```bash
//! cargo run --example equality_oracle
//! ```

use kpa::algebra::Algebra;
use kpa::degree::{Degree, GradeDegree};
use kpa::expr::parse_expr;
use kpa::fixtures::fixture;
use kpa::ring::RingSpec;
use std::sync::Arc;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = Arc::new(fixture("leavitt2").expect("built-in"));
    let alg = Algebra::new(Arc::clone(&g), RingSpec::Integers)?;

    // Distinct span forms can name the same element. Equality rewrites both
    // sides to a common ghost level and compares coefficients there.
    let pv = alg.vertex(g.vertex_id("v")?);
    let expanded = pv.expand_to_level(&GradeDegree(vec![0]), &Degree(vec![2]))?;
    println!(
        "p(v) written at ghost level 2 has {} terms; equal: {}",
        expanded.term_count(),
        expanded.equals(&pv)?
    );

    // A nonzero element with the same graded component stays nonzero.
    let x = parse_expr(&alg, "s(a)*st(a) - s(b)*st(b)")?;
    println!("s(a)st(a) - s(b)st(b) is zero: {}", x.is_zero()?);

    // Display reduction greedily undoes complete expansion families; it
    // never participates in equality.
    println!(
        "reduce_display collapses the level-2 form back to: {}",
        expanded.reduce_display().display()
    );

    // Compression: pick a ghost, pick a partner, extend by a separating
    // window, and the whole element funnels into one coefficient.
    let y = parse_expr(&alg, "3*s(a)*st(b) + 5*s(a.a)*st(b.a)")?;
    let c = y.compress_to_vertex(6)?;
    println!(
        "compressing picks st({}) .. s({}) and recovers coefficient {} at vertex {}",
        g.path_string(&c.sigma),
        g.path_string(&c.tau),
        RingSpec::Integers.display(&c.coeff),
        g.vertex_name(c.vertex)
    );

    // On a periodic graph no window separates: the bound is reported.
    let loopg = Arc::new(fixture("loop1").expect("built-in"));
    let loop_alg = Algebra::new(Arc::clone(&loopg), RingSpec::Integers)?;
    let z = parse_expr(&loop_alg, "s(a)*st(a) - s(a.a)*st(a)")?;
    match z.compress_to_vertex(4) {
        Err(e) => println!("on the single loop: {e}"),
        Ok(_) => unreachable!("periodic graphs admit no separating window"),
    }
    Ok(())
}
