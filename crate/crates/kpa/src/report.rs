//! Structured analysis reports: a versioned JSON schema and DOT export of
//! the ideal lattice. Field order is fixed by the struct layout and every
//! collection is pre-sorted, so reports are byte-identical across runs.

use crate::analysis::{
    sat_her_lattice, verdicts, AnalysisError, AperiodicityVerdict, Certainty, ConditionK,
    SatHerLattice,
};
use crate::graph::KGraph;
use crate::ring::RingSpec;
use serde::Serialize;
use std::sync::Arc;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub input: String,
    pub graph: GraphSummary,
    pub validation: String,
    pub ring: String,
    pub ring_is_field: bool,
    pub bounds: Bounds,
    pub aperiodicity: AperiodicityReport,
    pub cofinal: bool,
    pub lattice: LatticeReport,
    pub condition_k: ConditionKReport,
    pub verdicts: VerdictsReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphSummary {
    pub k: usize,
    pub vertices: usize,
    pub edges_per_color: Vec<usize>,
    pub no_sources: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Bounds {
    pub pair_bound: u32,
    pub depth_bound: u32,
}

#[derive(Debug, Clone, Serialize)]
pub struct AperiodicityReport {
    /// `periodic`, `aperiodic_certified` or `aperiodic_up_to_bounds`.
    pub status: String,
    pub witness: Option<WitnessReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessReport {
    pub vertex: String,
    pub m: Vec<u32>,
    pub n: Vec<u32>,
}

#[derive(Debug, Clone, Serialize)]
pub struct LatticeReport {
    pub sets: Vec<Vec<String>>,
    pub hasse: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConditionKReport {
    /// `all_quotients_aperiodic` or `fails`.
    pub status: String,
    pub failure: Option<ConditionKFailure>,
    /// Proper lattice members with exactness of their aperiodicity result.
    pub quotients: Vec<QuotientReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConditionKFailure {
    pub h: Vec<String>,
    pub witness: WitnessReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct QuotientReport {
    pub h: Vec<String>,
    pub exact: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerdictsReport {
    pub basically_simple: bool,
    pub simple: bool,
    pub all_basic_ideals_graded: bool,
    /// `certified` or `up_to_bounds`.
    pub certainty: String,
}

/// Run the full analysis and assemble the report.
pub fn build_report(
    graph: &Arc<KGraph>,
    input: &str,
    ring: &RingSpec,
    pair_bound: u32,
    depth_bound: u32,
) -> Result<Report, AnalysisError> {
    let v = verdicts(graph, ring, pair_bound)?;
    let lattice = sat_her_lattice(graph)?;

    let aperiodicity = match &v.aperiodicity {
        AperiodicityVerdict::Periodic(w) => AperiodicityReport {
            status: "periodic".into(),
            witness: Some(WitnessReport {
                vertex: graph.vertex_name(w.vertex()).to_string(),
                m: w.degrees().0 .0.clone(),
                n: w.degrees().1 .0.clone(),
            }),
        },
        AperiodicityVerdict::AperiodicCertified => AperiodicityReport {
            status: "aperiodic_certified".into(),
            witness: None,
        },
        AperiodicityVerdict::AperiodicUpToBounds { .. } => AperiodicityReport {
            status: "aperiodic_up_to_bounds".into(),
            witness: None,
        },
    };

    let condition_k = match &v.condition_k {
        ConditionK::AllQuotientsAperiodic { per_quotient_exact } => ConditionKReport {
            status: "all_quotients_aperiodic".into(),
            failure: None,
            quotients: per_quotient_exact
                .iter()
                .map(|(h, exact)| QuotientReport {
                    h: h.clone(),
                    exact: *exact,
                })
                .collect(),
        },
        ConditionK::FailsAt {
            h,
            witness_vertex,
            witness_m,
            witness_n,
        } => ConditionKReport {
            status: "fails".into(),
            failure: Some(ConditionKFailure {
                h: h.clone(),
                witness: WitnessReport {
                    vertex: witness_vertex.clone(),
                    m: witness_m.0.clone(),
                    n: witness_n.0.clone(),
                },
            }),
            quotients: Vec::new(),
        },
    };

    Ok(Report {
        schema_version: SCHEMA_VERSION,
        input: input.to_string(),
        graph: GraphSummary {
            k: graph.k(),
            vertices: graph.vertex_count(),
            edges_per_color: (0..graph.k()).map(|c| graph.edge_count_of_color(c)).collect(),
            no_sources: graph.no_sources(),
        },
        validation: "valid".into(),
        ring: ring.to_string(),
        ring_is_field: ring.is_field(),
        bounds: Bounds {
            pair_bound,
            depth_bound,
        },
        aperiodicity,
        cofinal: v.cofinal,
        lattice: lattice_report(&lattice),
        condition_k,
        verdicts: VerdictsReport {
            basically_simple: v.basically_simple,
            simple: v.simple,
            all_basic_ideals_graded: v.all_basic_ideals_graded,
            certainty: match v.certainty {
                Certainty::Certified => "certified".into(),
                Certainty::UpToBounds => "up_to_bounds".into(),
            },
        },
    })
}

pub fn lattice_report(lattice: &SatHerLattice) -> LatticeReport {
    LatticeReport {
        sets: lattice.sets.iter().map(|s| s.names()).collect(),
        hasse: lattice.hasse.iter().map(|&(a, b)| [a, b]).collect(),
    }
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn human_summary(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "graph: k={} |V|={} edges={:?} no_sources={}\n",
            self.graph.k, self.graph.vertices, self.graph.edges_per_color, self.graph.no_sources
        ));
        out.push_str(&format!("ring: {} (field: {})\n", self.ring, self.ring_is_field));
        match &self.aperiodicity.witness {
            Some(w) => out.push_str(&format!(
                "aperiodicity: {} at vertex {} with m={:?} n={:?}\n",
                self.aperiodicity.status, w.vertex, w.m, w.n
            )),
            None => out.push_str(&format!("aperiodicity: {}\n", self.aperiodicity.status)),
        }
        out.push_str(&format!("cofinal: {}\n", self.cofinal));
        out.push_str(&format!(
            "lattice: {} saturated hereditary sets, {} cover relations\n",
            self.lattice.sets.len(),
            self.lattice.hasse.len()
        ));
        match &self.condition_k.failure {
            Some(f) => out.push_str(&format!(
                "all basic ideals graded: no (quotient by {{{}}} is periodic)\n",
                f.h.join(",")
            )),
            None => out.push_str("all basic ideals graded: yes\n"),
        }
        out.push_str(&format!(
            "basically simple: {}  simple: {}  ({})\n",
            self.verdicts.basically_simple, self.verdicts.simple, self.verdicts.certainty
        ));
        out
    }
}

/// DOT rendering of the lattice Hasse diagram, smallest sets at the bottom.
pub fn lattice_dot(lattice: &SatHerLattice) -> String {
    let mut out = String::from("digraph sat_her_lattice {\n  rankdir=BT;\n");
    for (i, s) in lattice.sets.iter().enumerate() {
        out.push_str(&format!("  n{} [label=\"{{{}}}\"];\n", i, s.names().join(",")));
    }
    for (a, b) in &lattice.hasse {
        out.push_str(&format!("  n{a} -> n{b};\n"));
    }
    out.push_str("}\n");
    out
}
