//! Shift periodicity of infinite paths, decided exactly per degree pair by
//! the pair automaton, plus the aggregate aperiodicity verdicts.
//!
//! ```bash
//! cargo run --example periodicity
//! ```

use kpa::analysis::{
    aperiodicity, check_periodicity_pair, condition_k, AperiodicityVerdict, ConditionK,
    PairDecision,
};
use kpa::degree::Degree;
use kpa::fixtures::fixture;
use std::sync::Arc;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // A single loop is periodic: the only infinite path repeats immediately.
    let loop1 = Arc::new(fixture("loop1").expect("built-in"));
    let v = loop1.vertex_id("v")?;
    match check_periodicity_pair(&loop1, v, &Degree(vec![0]), &Degree(vec![1]))? {
        PairDecision::Periodic(w) => println!(
            "loop1: every path at v satisfies shift(0) = shift(1); {} automaton states",
            w.states().len()
        ),
        PairDecision::NotPeriodicAt(_) => unreachable!(),
    }

    // Two loops: the pair (0,1) is refuted by a concrete separating path.
    let leavitt2 = Arc::new(fixture("leavitt2").expect("built-in"));
    let v = leavitt2.vertex_id("v")?;
    match check_periodicity_pair(&leavitt2, v, &Degree(vec![0]), &Degree(vec![1]))? {
        PairDecision::NotPeriodicAt(lam) => println!(
            "leavitt2: separating path {} refutes the (0,1) pair",
            leavitt2.path_string(&lam)
        ),
        PairDecision::Periodic(_) => unreachable!(),
    }

    // Aggregate verdicts: rank 1 is decided exactly, higher rank scans
    // minimal degree pairs up to a bound.
    for name in ["loop1", "leavitt2", "laurent2", "redcycle2"] {
        let g = Arc::new(fixture(name).expect("built-in"));
        match aperiodicity(&g, 3)? {
            AperiodicityVerdict::Periodic(w) => println!(
                "{name}: periodic at ({}, {}, {})",
                g.vertex_name(w.vertex()),
                w.degrees().0,
                w.degrees().1
            ),
            AperiodicityVerdict::AperiodicCertified => println!("{name}: aperiodic (certified)"),
            AperiodicityVerdict::AperiodicUpToBounds { pair_bound } => {
                println!("{name}: aperiodic up to pair bound {pair_bound}")
            }
        }
    }

    // Every-quotient aperiodicity governs whether all basic ideals are
    // graded; the two-block graph fails it at its quotient onto the loop.
    match condition_k(&Arc::new(fixture("twoblock").expect("built-in")), 3)? {
        ConditionK::FailsAt { h, witness_vertex, .. } => println!(
            "twoblock: quotient by {{{}}} is periodic at {witness_vertex}",
            h.join(",")
        ),
        ConditionK::AllQuotientsAperiodic { .. } => unreachable!(),
    }
    Ok(())
}
