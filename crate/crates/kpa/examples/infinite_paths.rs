//! Eventually periodic infinite paths and the representation of the
//! algebra on them: truncation, shifting, the generator action, and a
//! kernel element for a periodic graph.
//!
//! ```bash
//! cargo run --example infinite_paths
//! ```

use kpa::algebra::Algebra;
use kpa::analysis::{aperiodicity, AperiodicityVerdict};
use kpa::degree::Degree;
use kpa::expr::parse_expr;
use kpa::fixtures::fixture;
use kpa::pathrep::{
    apply_element, apply_generator, ep_from_vertex, kernel_witness, EPPath, Generator, PathVector,
};
use kpa::ring::RingSpec;
use std::sync::Arc;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = Arc::new(fixture("leavitt2").expect("built-in"));

    // Literal syntax: prefix|cycle.
    let x = EPPath::parse(&g, "b|a")?;
    println!("x = {}", x.display());
    println!("x(0,3) = {}", g.path_string(&x.truncate(&Degree(vec![3]))));
    println!("x(2,oo) = {}", x.shift(&Degree(vec![2])).display());

    // Different presentations of the same functor compare equal.
    let same = EPPath::parse(&g, "b.a|a.a")?;
    println!("b|a equals b.a|a.a: {}", x.ep_equals(&same));

    // Generators act by projecting, prepending and stripping.
    let b = g.parse_path("b")?;
    let lifted = apply_generator(&Generator::Prepend(b.clone()), &x).expect("ranges match");
    println!("T_b x = {}", lifted.display());
    println!(
        "T_b* (T_b x) recovers x: {}",
        apply_generator(&Generator::Strip(b), &lifted)
            .map(|y| y.ep_equals(&x))
            .unwrap_or(false)
    );

    // Algebra elements act linearly; the vertex resolution fixes x.
    let alg = Algebra::new(Arc::clone(&g), RingSpec::Integers)?;
    let resolution = parse_expr(&alg, "s(a)*st(a) + s(b)*st(b)")?;
    let image = apply_element(&resolution, &PathVector::singleton(x.clone(), RingSpec::Integers))?;
    println!(
        "resolution acts as the identity: {}",
        image.entries().len() == 1 && image.entries()[0].0.ep_equals(&x)
    );

    // On a periodic graph the representation has a kernel: a two-term
    // element that is nonzero for degree reasons yet kills every path.
    let loopg = Arc::new(fixture("loop1").expect("built-in"));
    let w = match aperiodicity(&loopg, 3)? {
        AperiodicityVerdict::Periodic(w) => w,
        _ => unreachable!("the single loop is periodic"),
    };
    let a = kernel_witness(&loopg, &w, &RingSpec::Integers)?;
    println!("kernel element on the loop:\n{}", a.display());
    let y = ep_from_vertex(&loopg, w.vertex())?;
    let killed = apply_element(&a, &PathVector::singleton(y, RingSpec::Integers))?;
    println!(
        "nonzero in the algebra: {}, acts as zero: {}",
        !a.is_zero()?,
        killed.is_zero()
    );
    Ok(())
}
