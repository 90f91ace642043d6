//! Command implementations behind the `kpa` binary.
//!
//! Each command returns its exit code with the text it wants printed, so
//! the whole surface is testable without spawning processes. Exit codes:
//! 0 success, 1 invalid input, 2 sources present, 3 internal consistency
//! failure (mapped from panics by the binary).

use crate::algebra::{Algebra, AlgebraElement};
use crate::analysis::sat_her_lattice;
use crate::degree::Degree;
use crate::expr::parse_expr;
use crate::fixtures::{fixture, FIXTURE_NAMES};
use crate::format::{graph_to_string, read_graph_file};
use crate::graph::KGraph;
use crate::report::{build_report, lattice_dot, lattice_report};
use crate::ring::{LaurentBase, RingElem, RingSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_SOURCES: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Default)]
pub struct CmdResult {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CmdResult {
    fn ok(stdout: String) -> Self {
        CmdResult {
            exit_code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(exit_code: i32, message: String) -> Self {
        CmdResult {
            exit_code,
            stdout: String::new(),
            stderr: message,
        }
    }
}

/// Load a graph from a file path, falling back to built-in fixture names.
pub fn load_graph(input: &str) -> Result<Arc<KGraph>, CmdResult> {
    if std::path::Path::new(input).exists() {
        return match read_graph_file(input) {
            Ok(g) => Ok(Arc::new(g)),
            Err(e) => Err(CmdResult::fail(EXIT_INVALID, format!("{input}: {e}\n"))),
        };
    }
    match fixture(input) {
        Some(g) => Ok(Arc::new(g)),
        None => Err(CmdResult::fail(
            EXIT_INVALID,
            format!("{input}: no such file or built-in graph\n"),
        )),
    }
}

fn parse_ring(ring: &str) -> Result<RingSpec, CmdResult> {
    RingSpec::parse(ring).map_err(|e| CmdResult::fail(EXIT_INVALID, format!("{e}\n")))
}

fn source_diagnostic(g: &KGraph) -> String {
    let mut parts = Vec::new();
    for &(v, c) in g.sources() {
        parts.push(format!(
            "vertex \"{}\" receives no colour-{} edge",
            g.vertex_name(v),
            c + 1
        ));
    }
    format!("graph has sources: {}\n", parts.join("; "))
}

/// `kpa validate <file>`: 0 valid and source-free, 2 valid with sources,
/// 1 invalid.
pub fn cmd_validate(input: &str) -> CmdResult {
    let g = match load_graph(input) {
        Ok(g) => g,
        Err(r) => return r,
    };
    if !g.no_sources() {
        return CmdResult {
            exit_code: EXIT_SOURCES,
            stdout: format!("valid {g}\n"),
            stderr: source_diagnostic(&g),
        };
    }
    CmdResult::ok(format!("valid {g}, no sources\n"))
}

/// `kpa analyze <file> [--ring R] [--pair-bound B] [--depth-bound D]
/// [--json PATH|-]`.
pub fn cmd_analyze(
    input: &str,
    ring: &str,
    pair_bound: u32,
    depth_bound: u32,
    json: Option<&str>,
) -> CmdResult {
    let g = match load_graph(input) {
        Ok(g) => g,
        Err(r) => return r,
    };
    let ring = match parse_ring(ring) {
        Ok(r) => r,
        Err(r) => return r,
    };
    if !g.no_sources() {
        return CmdResult::fail(EXIT_SOURCES, source_diagnostic(&g));
    }
    let started = std::time::Instant::now();
    let report = match build_report(&g, input, &ring, pair_bound, depth_bound) {
        Ok(r) => r,
        Err(e) => return CmdResult::fail(EXIT_INVALID, format!("{e}\n")),
    };
    let elapsed = started.elapsed();
    match json {
        Some("-") => CmdResult::ok(report.to_json()),
        Some(path) => match std::fs::write(path, report.to_json()) {
            Ok(()) => CmdResult {
                exit_code: EXIT_OK,
                stdout: format!("report written to {path}\n"),
                stderr: format!("analysis took {} ms\n", elapsed.as_millis()),
            },
            Err(e) => CmdResult::fail(EXIT_INVALID, format!("{path}: {e}\n")),
        },
        None => CmdResult {
            exit_code: EXIT_OK,
            stdout: report.human_summary(),
            stderr: format!("analysis took {} ms\n", elapsed.as_millis()),
        },
    }
}

fn render_element(x: &AlgebraElement) -> Result<String, crate::algebra::AlgebraError> {
    Ok(if x.is_zero()? {
        "0\n".to_string()
    } else {
        format!("{}\n", x.reduce_display().display())
    })
}

/// `kpa eval <file> --ring R -e EXPR [-e EXPR2] [--check-equal]`.
pub fn cmd_eval(input: &str, ring: &str, exprs: &[String], check_equal: bool) -> CmdResult {
    let g = match load_graph(input) {
        Ok(g) => g,
        Err(r) => return r,
    };
    let ring = match parse_ring(ring) {
        Ok(r) => r,
        Err(r) => return r,
    };
    if !g.no_sources() {
        return CmdResult::fail(EXIT_SOURCES, source_diagnostic(&g));
    }
    let alg = match Algebra::new(g, ring) {
        Ok(a) => a,
        Err(e) => return CmdResult::fail(EXIT_SOURCES, format!("{e}\n")),
    };
    let mut values = Vec::new();
    for text in exprs {
        match parse_expr(&alg, text) {
            Ok(v) => values.push(v),
            Err(e) => return CmdResult::fail(EXIT_INVALID, format!("in {text:?}: {e}\n")),
        }
    }
    if check_equal {
        if values.len() != 2 {
            return CmdResult::fail(
                EXIT_INVALID,
                "--check-equal needs exactly two -e expressions\n".into(),
            );
        }
        let eq = match values[0].equals(&values[1]) {
            Ok(eq) => eq,
            Err(e) => return CmdResult::fail(EXIT_INVALID, format!("{e}\n")),
        };
        return CmdResult::ok(format!("{}\n", if eq { "EQUAL" } else { "NOT-EQUAL" }));
    }
    let mut rendered = Vec::new();
    for v in &values {
        match render_element(v) {
            Ok(text) => rendered.push(text),
            Err(e) => return CmdResult::fail(EXIT_INVALID, format!("{e}\n")),
        }
    }
    CmdResult::ok(rendered.join("--\n"))
}

/// `kpa lattice <file> --format dot|json`.
pub fn cmd_lattice(input: &str, format: &str) -> CmdResult {
    let g = match load_graph(input) {
        Ok(g) => g,
        Err(r) => return r,
    };
    if !g.no_sources() {
        return CmdResult::fail(EXIT_SOURCES, source_diagnostic(&g));
    }
    let lattice = match sat_her_lattice(&g) {
        Ok(l) => l,
        Err(e) => return CmdResult::fail(EXIT_INVALID, format!("{e}\n")),
    };
    match format {
        "dot" => CmdResult::ok(lattice_dot(&lattice)),
        "json" => {
            let mut s = serde_json::to_string_pretty(&lattice_report(&lattice))
                .expect("lattice serializes");
            s.push('\n');
            CmdResult::ok(s)
        }
        other => CmdResult::fail(EXIT_INVALID, format!("unknown format {other:?}\n")),
    }
}

/// `kpa fixtures list` and `kpa fixtures emit <name>`.
pub fn cmd_fixtures_list() -> CmdResult {
    CmdResult::ok(
        FIXTURE_NAMES
            .iter()
            .map(|n| format!("{n}\n"))
            .collect::<String>(),
    )
}

pub fn cmd_fixtures_emit(name: &str) -> CmdResult {
    match fixture(name) {
        Some(g) => CmdResult::ok(graph_to_string(&g)),
        None => CmdResult::fail(EXIT_INVALID, format!("unknown fixture {name:?}\n")),
    }
}

/// Map an element of the algebra of the one-vertex 2-graph into Laurent
/// polynomials: `s_alpha s_{beta*}` goes to `x^(a1-b1) y^(a2-b2)`.
pub fn laurent_image(x: &AlgebraElement, lring: &RingSpec) -> RingElem {
    let mut acc = lring.zero();
    for ((a, b), c) in x.terms() {
        let grade = a.degree().grade_sub(b.degree());
        let term = lring
            .laurent_term(c.clone(), &grade.0)
            .expect("two-variable laurent ring");
        acc = lring.add(&acc, &term);
    }
    acc
}

/// `kpa laurent-check [--ring int|rat] [--trials T] [--seed S]`.
///
/// Exercises the isomorphism onto Laurent polynomials in two variables on
/// random element pairs: the image map must respect sums and products, and
/// must separate elements exactly as algebra equality does.
pub fn cmd_laurent_check(ring: &str, trials: u32, seed: u64) -> CmdResult {
    let base = match ring {
        "int" => LaurentBase::Integers,
        "rat" => LaurentBase::Rationals,
        other => {
            return CmdResult::fail(
                EXIT_INVALID,
                format!("laurent-check supports int and rat, not {other:?}\n"),
            )
        }
    };
    let coeff_ring = base.spec();
    let lring = RingSpec::laurent(base, 2).expect("two variables");
    let g = Arc::new(fixture("laurent2").expect("built-in"));
    let alg = Algebra::new(Arc::clone(&g), coeff_ring.clone()).expect("laurent2 is source-free");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let unique_path = |deg: &Degree| {
        let v = g.vertices().next().expect("one vertex");
        g.paths_from(v, deg).pop().expect("unique path per degree")
    };
    let random_element = |rng: &mut ChaCha8Rng| {
        let mut x = alg.zero();
        for _ in 0..rng.gen_range(1..=3) {
            let da = Degree(vec![rng.gen_range(0..=3), rng.gen_range(0..=3)]);
            let db = Degree(vec![rng.gen_range(0..=3), rng.gen_range(0..=3)]);
            let mut c = rng.gen_range(-9i64..=9);
            if c == 0 {
                c = 1;
            }
            let coeff = match base {
                LaurentBase::Integers => coeff_ring.from_i64(c),
                LaurentBase::Rationals => {
                    let den = rng.gen_range(1i64..=3);
                    coeff_ring
                        .parse_literal(&format!("{c}/{den}"))
                        .expect("small rational")
                }
            };
            let m = alg
                .monomial(coeff, &unique_path(&da), &unique_path(&db))
                .expect("single vertex");
            x = x.add(&m).expect("same algebra");
        }
        x
    };

    for trial in 0..trials {
        let x = random_element(&mut rng);
        let y = match trial % 3 {
            // a rewriting of x: equal element, different span form
            0 => x.expand_to_uniform().expect("expansion in range"),
            // x shifted by a vertex idempotent: never equal to x
            1 => {
                let v = g.vertices().next().expect("one vertex");
                x.add(&alg.vertex(v)).expect("same algebra")
            }
            _ => random_element(&mut rng),
        };
        let phi_x = laurent_image(&x, &lring);
        let phi_y = laurent_image(&y, &lring);

        let sum = x.add(&y).expect("same algebra");
        if laurent_image(&sum, &lring) != lring.add(&phi_x, &phi_y) {
            return CmdResult::fail(
                EXIT_INVALID,
                format!(
                    "additivity failed at trial {trial}:\nx =\n{}\ny =\n{}\n",
                    x.display(),
                    y.display()
                ),
            );
        }
        let prod = x.mul(&y).expect("same algebra");
        if laurent_image(&prod, &lring) != lring.mul(&phi_x, &phi_y) {
            return CmdResult::fail(
                EXIT_INVALID,
                format!(
                    "multiplicativity failed at trial {trial}:\nx =\n{}\ny =\n{}\n",
                    x.display(),
                    y.display()
                ),
            );
        }
        let equal = x.equals(&y).expect("same algebra");
        if equal != (phi_x == phi_y) {
            return CmdResult::fail(
                EXIT_INVALID,
                format!(
                    "separation failed at trial {trial}: equals={equal} but images {}:\nx =\n{}\ny =\n{}\n",
                    if phi_x == phi_y { "agree" } else { "differ" },
                    x.display(),
                    y.display()
                ),
            );
        }
        // products commute in this algebra
        let yx = y.mul(&x).expect("same algebra");
        if !prod.equals(&yx).expect("same algebra") {
            return CmdResult::fail(
                EXIT_INVALID,
                format!("commutativity failed at trial {trial}\n"),
            );
        }
    }
    CmdResult::ok(format!(
        "laurent-check: PASS ({trials} trials, ring {ring}, seed {seed})\n"
    ))
}
