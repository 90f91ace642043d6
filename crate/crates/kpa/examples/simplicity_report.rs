//! Full structure reports: cofinality and aperiodicity combine into basic
//! simplicity, the field property of the coefficients upgrades it to
//! simplicity, and the JSON report records everything deterministically.
//!
//! ```bash
//! cargo run --example simplicity_report
//! ```

use kpa::analysis::verdicts;
use kpa::fixtures::fixture;
use kpa::report::build_report;
use kpa::ring::RingSpec;
use std::sync::Arc;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        ("leavitt2", "gf:2"),
        ("leavitt2", "int"),
        ("loop1", "rat"),
        ("vwcofinal", "rat"),
        ("laurent2", "int"),
    ];
    for (name, ring_text) in cases {
        let g = Arc::new(fixture(name).expect("built-in"));
        let ring = RingSpec::parse(ring_text)?;
        let v = verdicts(&g, &ring, 3)?;
        println!(
            "{name} over {ring_text}: cofinal={} aperiodic={} basically_simple={} simple={}",
            v.cofinal,
            v.aperiodicity.is_aperiodic(),
            v.basically_simple,
            v.simple
        );
    }

    // The JSON report pins the whole analysis, byte-stable across runs.
    let g = Arc::new(fixture("leavitt2").expect("built-in"));
    let report = build_report(&g, "leavitt2", &RingSpec::PrimeField(2), 3, 6)?;
    println!("\n{}", report.to_json());
    Ok(())
}
