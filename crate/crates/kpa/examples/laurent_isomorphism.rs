//! The one-vertex 2-graph has a commutative algebra: it is the Laurent
//! polynomial ring in two variables. This example evaluates the
//! isomorphism on concrete elements and runs the randomized check.
//!
//! ```bash
//! cargo run --example laurent_isomorphism
//! ```

use kpa::algebra::Algebra;
use kpa::cli::{cmd_laurent_check, laurent_image};
use kpa::expr::parse_expr;
use kpa::fixtures::fixture;
use kpa::ring::{LaurentBase, RingSpec};
use std::sync::Arc;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = Arc::new(fixture("laurent2").expect("built-in"));
    let alg = Algebra::new(Arc::clone(&g), RingSpec::Integers)?;
    let lring = RingSpec::laurent(LaurentBase::Integers, 2)?;

    // Generators map to monomials: the degree difference becomes the
    // exponent vector.
    for text in ["p(v)", "s(b)", "st(f)", "s(b)*st(f)", "2*s(b.b.f)"] {
        let x = parse_expr(&alg, text)?;
        println!("{text}  ->  {}", lring.display(&laurent_image(&x, &lring)));
    }

    // Products commute here, mirroring the commutative target.
    let x = parse_expr(&alg, "st(b)*s(f)")?;
    let y = parse_expr(&alg, "s(f)*st(b)")?;
    println!("st(b)s(f) = s(f)st(b): {}", x.equals(&y)?);

    // Image respects a product.
    let square = x.mul(&x)?;
    println!(
        "image of (st(b)s(f))^2 = {}",
        lring.display(&laurent_image(&square, &lring))
    );

    // The randomized isomorphism check used by the acceptance gate.
    let result = cmd_laurent_check("int", 200, 0);
    print!("{}", result.stdout);
    assert_eq!(result.exit_code, 0);
    Ok(())
}
