//! First steps in the algebra: generators, ghost generators, products,
//! the grading, and the expression language.
//!
//! ```bash
//! cargo run --example algebra_basics
//! ```

use kpa::algebra::Algebra;
use kpa::expr::parse_expr;
use kpa::fixtures::fixture;
use kpa::ring::RingSpec;
use std::sync::Arc;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = Arc::new(fixture("leavitt2").expect("built-in"));
    let alg = Algebra::new(Arc::clone(&g), RingSpec::Integers)?;

    let a = g.parse_path("a")?;
    let b = g.parse_path("b")?;

    // s_a s_{b*} times s_b s_{a*} contracts the inner pair.
    let x = alg.generator(&a).mul(&alg.ghost(&b))?;
    let y = alg.generator(&b).mul(&alg.ghost(&a))?;
    let prod = x.mul(&y)?;
    println!("(s_a s_b*)(s_b s_a*) =\n{}", prod.display());

    // Mismatched ghosts annihilate.
    let zero = alg.ghost(&a).mul(&alg.generator(&b))?;
    println!("st(a) s(b) = {}", zero.display());

    // The two degree-1 projections resolve the vertex idempotent.
    let resolution = parse_expr(&alg, "s(a)*st(a) + s(b)*st(b)")?;
    println!(
        "s(a)st(a) + s(b)st(b) equals p(v): {}",
        resolution.equals(&alg.vertex(g.vertex_id("v")?))?
    );

    // The transpose involution reverses products.
    let lhs = x.mul(&y)?.star();
    let rhs = y.star().mul(&x.star())?;
    println!("star is an antihomomorphism: {}", lhs.equals(&rhs)?);

    // Elements split into graded components indexed by degree differences.
    let mixed = parse_expr(&alg, "p(v) + 2*s(a) + 3*st(a.b)")?;
    println!("graded components of p(v) + 2 s(a) + 3 st(a.b):");
    for (grade, part) in mixed.graded_components() {
        println!("  degree {grade}:");
        for line in part.display().lines() {
            println!("    {line}");
        }
    }
    Ok(())
}
