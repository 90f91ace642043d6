//! Structural analysis of a k-graph and its algebra: saturated hereditary
//! vertex sets and their lattice, cofinality, periodicity, quotients, ideal
//! membership, and the simplicity verdicts.

use crate::algebra::{AlgebraElement, AlgebraError};
use crate::degree::Degree;
use crate::graph::{GraphError, KGraph, Path, VertexId};
use crate::ring::{RingElem, RingError, RingSpec};
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error("graph has sources; structural analysis requires a source-free graph")]
    SourcesPresent,
    #[error("vertex set is not saturated hereditary: {0}")]
    NotSatHer(String),
    #[error("periodicity pair needs two distinct degrees")]
    EqualDegrees,
    #[error("witness does not verify on this graph")]
    NotVerifiedWitness,
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn require_no_sources(g: &KGraph) -> Result<(), AnalysisError> {
    if g.no_sources() {
        Ok(())
    } else {
        Err(AnalysisError::SourcesPresent)
    }
}

/// A saturated hereditary subset of the vertices, the combinatorial handle
/// for a basic graded ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatHerSet {
    graph: Arc<KGraph>,
    vertices: BTreeSet<VertexId>,
}

impl SatHerSet {
    /// Wrap a vertex set after checking both closure properties.
    pub fn new(graph: Arc<KGraph>, vertices: BTreeSet<VertexId>) -> Result<Self, AnalysisError> {
        require_no_sources(&graph)?;
        if !is_hereditary(&graph, &vertices) {
            return Err(AnalysisError::NotSatHer("not hereditary".into()));
        }
        if !is_saturated(&graph, &vertices) {
            return Err(AnalysisError::NotSatHer("not saturated".into()));
        }
        Ok(SatHerSet { graph, vertices })
    }

    pub fn graph(&self) -> &Arc<KGraph> {
        &self.graph
    }

    pub fn vertices(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_all(&self) -> bool {
        self.vertices.len() == self.graph.vertex_count()
    }

    pub fn names(&self) -> Vec<String> {
        self.vertices
            .iter()
            .map(|&v| self.graph.vertex_name(v).to_string())
            .collect()
    }
}

/// Edge-level heredity: ranges in `H` force sources in `H`.
pub fn is_hereditary(g: &KGraph, set: &BTreeSet<VertexId>) -> bool {
    g.edges()
        .iter()
        .all(|e| !set.contains(&e.rng) || set.contains(&e.src))
}

/// Saturation through single-colour degrees: a vertex outside `H` must keep,
/// for every colour, some incoming edge with source outside `H`.
pub fn is_saturated(g: &KGraph, set: &BTreeSet<VertexId>) -> bool {
    g.vertices().filter(|v| !set.contains(v)).all(|v| {
        (0..g.k()).all(|c| {
            g.in_edges(v, c)
                .iter()
                .any(|&e| !set.contains(&g.edge(e).src))
        })
    })
}

/// Least saturated hereditary superset: alternate propagating along edges
/// (range to source) with the single-colour saturation rule to a fixpoint.
pub fn her_sat_closure(
    graph: &Arc<KGraph>,
    seed: &BTreeSet<VertexId>,
) -> Result<SatHerSet, AnalysisError> {
    require_no_sources(graph)?;
    let g = graph.as_ref();
    let mut h = seed.clone();
    loop {
        let mut changed = false;
        for e in g.edges() {
            if h.contains(&e.rng) && h.insert(e.src) {
                changed = true;
            }
        }
        for v in g.vertices() {
            if h.contains(&v) {
                continue;
            }
            let forced = (0..g.k()).any(|c| {
                g.in_edges(v, c)
                    .iter()
                    .all(|&e| h.contains(&g.edge(e).src))
            });
            if forced {
                h.insert(v);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    Ok(SatHerSet {
        graph: Arc::clone(graph),
        vertices: h,
    })
}

/// The full lattice of saturated hereditary subsets with its Hasse diagram.
///
/// Every member is the join of the closures of its singletons, so the
/// lattice is the join-closure of `{{}} + {closure({v})}`; join is closure
/// of union and meet is intersection.
#[derive(Debug, Clone)]
pub struct SatHerLattice {
    pub sets: Vec<SatHerSet>,
    /// Cover pairs `(i, j)` with `sets[i]` covered by `sets[j]`.
    pub hasse: Vec<(usize, usize)>,
}

pub fn sat_her_lattice(graph: &Arc<KGraph>) -> Result<SatHerLattice, AnalysisError> {
    require_no_sources(graph)?;
    let mut members: BTreeSet<BTreeSet<VertexId>> = BTreeSet::new();
    members.insert(BTreeSet::new());
    for v in graph.vertices() {
        members.insert(her_sat_closure(graph, &BTreeSet::from([v]))?.vertices);
    }
    loop {
        let snapshot: Vec<BTreeSet<VertexId>> = members.iter().cloned().collect();
        let mut grew = false;
        for a in &snapshot {
            for b in &snapshot {
                let union: BTreeSet<VertexId> = a.union(b).copied().collect();
                let join = her_sat_closure(graph, &union)?.vertices;
                if members.insert(join) {
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    let mut sets: Vec<BTreeSet<VertexId>> = members.into_iter().collect();
    sets.sort_by_key(|s| (s.len(), s.iter().copied().collect::<Vec<_>>()));
    let mut hasse = Vec::new();
    for (i, a) in sets.iter().enumerate() {
        for (j, b) in sets.iter().enumerate() {
            if i == j || !a.is_subset(b) {
                continue;
            }
            let covered = sets
                .iter()
                .enumerate()
                .any(|(t, c)| t != i && t != j && a.is_subset(c) && c.is_subset(b));
            if !covered {
                hasse.push((i, j));
            }
        }
    }
    Ok(SatHerLattice {
        sets: sets
            .into_iter()
            .map(|vertices| SatHerSet {
                graph: Arc::clone(graph),
                vertices,
            })
            .collect(),
        hasse,
    })
}

/// Cofinality, decided through closures: the graph is cofinal exactly when
/// no proper nonempty saturated hereditary subset exists, i.e. when every
/// singleton closure is everything.
pub fn is_cofinal(graph: &Arc<KGraph>) -> Result<bool, AnalysisError> {
    require_no_sources(graph)?;
    for v in graph.vertices() {
        if her_sat_closure(graph, &BTreeSet::from([v]))?.len() != graph.vertex_count() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A verified shift-periodicity certificate: every infinite path ranged at
/// `v` satisfies `sigma^m x = sigma^n x`.
#[derive(Debug, Clone)]
pub struct PeriodicityWitness {
    v: VertexId,
    m: Degree,
    n: Degree,
    /// Reachable states of the pair automaton.
    states: Vec<(Path, Path)>,
}

impl PeriodicityWitness {
    pub fn vertex(&self) -> VertexId {
        self.v
    }

    pub fn degrees(&self) -> (&Degree, &Degree) {
        (&self.m, &self.n)
    }

    pub fn states(&self) -> &[(Path, Path)] {
        &self.states
    }
}

/// Outcome of one periodicity pair check.
#[derive(Debug, Clone)]
pub enum PairDecision {
    Periodic(PeriodicityWitness),
    /// A finite path whose `m`- and `n`-shifted windows differ.
    NotPeriodicAt(Path),
}

/// Decide whether `sigma^m x = sigma^n x` holds for every `x` ranged at `v`.
///
/// The pair automaton tracks `(x(m+t, p+t), x(n+t, p+t))` with
/// `p = m join n`. Feeding one more edge of colour `i` imposes the window
/// constraint `x(m+t, m+t+e_i) = x(n+t, n+t+e_i)`; periodicity holds exactly
/// when every transition from every reachable state satisfies its
/// constraint, and a violating run assembles the separating finite path.
pub fn check_periodicity_pair(
    graph: &Arc<KGraph>,
    v: VertexId,
    m: &Degree,
    n: &Degree,
) -> Result<PairDecision, AnalysisError> {
    require_no_sources(graph)?;
    if m == n {
        return Err(AnalysisError::EqualDegrees);
    }
    let g = graph.as_ref();
    let k = g.k();
    let p = m.join(n);

    let mut witness_of: BTreeMap<(Path, Path), Path> = BTreeMap::new();
    let mut queue: VecDeque<(Path, Path)> = VecDeque::new();
    for lam in g.paths_from(v, &p) {
        let a = g.segment(&lam, m, &p)?;
        let b = g.segment(&lam, n, &p)?;
        let state = (a, b);
        if !witness_of.contains_key(&state) {
            witness_of.insert(state.clone(), lam.clone());
            queue.push_back(state);
        }
    }

    while let Some((a, b)) = queue.pop_front() {
        let at = g.source(&a);
        debug_assert_eq!(at, g.source(&b));
        let reach_path = witness_of[&(a.clone(), b.clone())].clone();
        for color in 0..k {
            let unit = Degree::unit(k, color);
            for &e in g.in_edges(at, color) {
                let step = g.edge_path(e);
                let ae = g.compose(&a, &step)?;
                let be = g.compose(&b, &step)?;
                let win_a = g.segment(&ae, &Degree::zero(k), &unit)?;
                let win_b = g.segment(&be, &Degree::zero(k), &unit)?;
                if win_a != win_b {
                    return Ok(PairDecision::NotPeriodicAt(g.compose(&reach_path, &step)?));
                }
                let next = (
                    g.segment(&ae, &unit, ae.degree())?,
                    g.segment(&be, &unit, be.degree())?,
                );
                if !witness_of.contains_key(&next) {
                    witness_of.insert(next.clone(), g.compose(&reach_path, &step)?);
                    queue.push_back(next);
                }
            }
        }
    }

    Ok(PairDecision::Periodic(PeriodicityWitness {
        v,
        m: m.clone(),
        n: n.clone(),
        states: witness_of.into_keys().collect(),
    }))
}

/// Scan all minimal degree pairs `m != n` with `m meet n = 0` and entries
/// bounded by `pair_bound`, in colexicographic order, vertices in name
/// order. Returns the first verified periodic triple.
///
/// Minimal pairs suffice for witnesses: periodicity at `(v, m, n)` implies
/// periodicity at `(v, m + a, n + a)`.
pub fn scan_periodic_pairs(
    graph: &Arc<KGraph>,
    pair_bound: u32,
) -> Result<Option<PeriodicityWitness>, AnalysisError> {
    require_no_sources(graph)?;
    let k = graph.k();
    let degrees = Degree::box_range(&Degree::zero(k), &Degree::uniform(k, pair_bound));
    for (i, m) in degrees.iter().enumerate() {
        for n in degrees.iter().skip(i + 1) {
            if !m.meet(n).is_zero() {
                continue;
            }
            for v in graph.vertices() {
                if let PairDecision::Periodic(w) = check_periodicity_pair(graph, v, m, n)? {
                    return Ok(Some(w));
                }
            }
        }
    }
    Ok(None)
}

/// Aperiodicity report.
#[derive(Debug, Clone)]
pub enum AperiodicityVerdict {
    Periodic(PeriodicityWitness),
    /// Exact: only issued for rank 1, through cycle-entry analysis.
    AperiodicCertified,
    /// No periodic pair up to the scanned bound.
    AperiodicUpToBounds { pair_bound: u32 },
}

impl AperiodicityVerdict {
    pub fn is_aperiodic(&self) -> bool {
        !matches!(self, AperiodicityVerdict::Periodic(_))
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, AperiodicityVerdict::AperiodicUpToBounds { .. })
    }
}

/// Find a cycle all of whose vertices have total in-degree one; such a
/// cycle admits no entry. Rank-1 graphs are periodic exactly when one
/// exists.
fn entryless_cycle(g: &KGraph) -> Option<(VertexId, u32)> {
    let unique_in: BTreeMap<VertexId, VertexId> = g
        .vertices()
        .filter_map(|v| {
            let all: Vec<_> = (0..g.k()).flat_map(|c| g.in_edges(v, c)).collect();
            match all.as_slice() {
                [&e] => Some((v, g.edge(e).src)),
                _ => None,
            }
        })
        .collect();
    let mut settled: BTreeSet<VertexId> = BTreeSet::new();
    for start in g.vertices() {
        if settled.contains(&start) {
            continue;
        }
        let mut order: Vec<VertexId> = Vec::new();
        let mut seen: BTreeMap<VertexId, usize> = BTreeMap::new();
        let mut at = start;
        loop {
            if let Some(&i) = seen.get(&at) {
                let cycle = &order[i..];
                let v = *cycle.iter().min().expect("cycle nonempty");
                return Some((v, cycle.len() as u32));
            }
            if settled.contains(&at) {
                break;
            }
            seen.insert(at, order.len());
            order.push(at);
            match unique_in.get(&at) {
                Some(&next) => at = next,
                None => break,
            }
        }
        settled.extend(order);
    }
    None
}

/// Decide (rank 1) or semi-decide (rank >= 2) aperiodicity.
pub fn aperiodicity(
    graph: &Arc<KGraph>,
    pair_bound: u32,
) -> Result<AperiodicityVerdict, AnalysisError> {
    require_no_sources(graph)?;
    if graph.k() == 1 {
        match entryless_cycle(graph) {
            Some((v, len)) => {
                let decision =
                    check_periodicity_pair(graph, v, &Degree(vec![0]), &Degree(vec![len]))?;
                match decision {
                    PairDecision::Periodic(w) => Ok(AperiodicityVerdict::Periodic(w)),
                    PairDecision::NotPeriodicAt(_) => {
                        panic!("entryless cycle refuted by the pair automaton")
                    }
                }
            }
            None => Ok(AperiodicityVerdict::AperiodicCertified),
        }
    } else {
        match scan_periodic_pairs(graph, pair_bound)? {
            Some(w) => Ok(AperiodicityVerdict::Periodic(w)),
            None => Ok(AperiodicityVerdict::AperiodicUpToBounds { pair_bound }),
        }
    }
}

/// The quotient graph: drop the vertices of `H` and every edge whose source
/// lies in `H`. For saturated hereditary `H` the result is again row-finite
/// with no sources.
pub fn quotient_graph(h: &SatHerSet) -> Result<Arc<KGraph>, AnalysisError> {
    let g = h.graph.as_ref();
    let doc = g.to_doc();
    let kept_vertex = |name: &str| !h.contains(g.vertex_id(name).expect("known vertex"));
    let kept_edges: Vec<_> = doc
        .edges
        .iter()
        .filter(|e| kept_vertex(&e.src))
        .cloned()
        .collect();
    let kept_ids: BTreeSet<String> = kept_edges.iter().map(|e| e.id.clone()).collect();
    let quotient = KGraph::validate(&crate::graph::GraphDoc {
        k: doc.k,
        vertices: doc
            .vertices
            .iter()
            .filter(|v| kept_vertex(v))
            .cloned()
            .collect(),
        edges: kept_edges,
        squares: doc
            .squares
            .into_iter()
            .filter(|s| {
                s.lhs
                    .iter()
                    .chain(s.rhs.iter())
                    .all(|id| kept_ids.contains(id))
            })
            .collect(),
    })?;
    assert!(
        quotient.no_sources(),
        "quotient by a saturated hereditary set keeps the graph source-free"
    );
    Ok(Arc::new(quotient))
}

/// The quotient homomorphism onto the algebra of the quotient graph: terms
/// whose source lies in `H` die, the rest reinterpret verbatim.
#[derive(Debug, Clone)]
pub struct QuotientMap {
    h: SatHerSet,
    target: Arc<KGraph>,
}

impl QuotientMap {
    pub fn new(h: &SatHerSet) -> Result<Self, AnalysisError> {
        Ok(QuotientMap {
            h: h.clone(),
            target: quotient_graph(h)?,
        })
    }

    pub fn target(&self) -> &Arc<KGraph> {
        &self.target
    }

    fn transfer_path(&self, path: &Path) -> Result<Path, AnalysisError> {
        let g = self.h.graph.as_ref();
        let t = self.target.as_ref();
        let mut out = t.vertex_path(t.vertex_id(g.vertex_name(path.rng()))?);
        for &e in path.word() {
            let image = t.edge_path(t.edge_id(&g.edge(e).id)?);
            out = t.compose(&out, &image)?;
        }
        Ok(out)
    }

    pub fn apply(&self, x: &AlgebraElement) -> Result<AlgebraElement, AnalysisError> {
        if x.graph().as_ref() != self.h.graph.as_ref() {
            return Err(AnalysisError::Algebra(AlgebraError::GraphMismatch));
        }
        let g = self.h.graph.as_ref();
        let alg = crate::algebra::Algebra::new(Arc::clone(&self.target), x.ring().clone())?;
        let mut out = alg.zero();
        for ((a, b), c) in x.terms() {
            if self.h.contains(g.source(a)) {
                continue;
            }
            let alpha = self.transfer_path(a)?;
            let beta = self.transfer_path(b)?;
            out = out.add(&alg.monomial(c.clone(), &alpha, &beta)?)?;
        }
        Ok(out)
    }
}

/// Membership in the ideal `I_H` generated by `{p_v : v in H}`.
///
/// Expand each graded component to its canonical level; because `H` is
/// hereditary the surviving terms' sources are stable under further
/// expansion, so `x` lies in `I_H` exactly when every canonical term has
/// source in `H`. (The quotient map provides the independent dual check.)
pub fn ideal_membership(x: &AlgebraElement, h: &SatHerSet) -> Result<bool, AnalysisError> {
    if x.graph().as_ref() != h.graph.as_ref() {
        return Err(AnalysisError::Algebra(AlgebraError::GraphMismatch));
    }
    let g = x.graph().as_ref();
    for (component, part) in x.graded_components() {
        let mut level = Degree::zero(g.k());
        for (_, b) in part.terms().keys() {
            level = level.join(b.degree());
        }
        let expanded = part.expand_to_level(&component, &level)?;
        for (a, _) in expanded.terms().keys() {
            if !h.contains(g.source(a)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Aperiodicity of every proper quotient; when this holds, every basic
/// ideal is graded.
#[derive(Debug, Clone)]
pub enum ConditionK {
    AllQuotientsAperiodic {
        /// Per proper lattice member: (member names, exact?).
        per_quotient_exact: Vec<(Vec<String>, bool)>,
    },
    FailsAt {
        h: Vec<String>,
        witness_vertex: String,
        witness_m: Degree,
        witness_n: Degree,
    },
}

pub fn condition_k(graph: &Arc<KGraph>, pair_bound: u32) -> Result<ConditionK, AnalysisError> {
    require_no_sources(graph)?;
    let lattice = sat_her_lattice(graph)?;
    let mut per_quotient_exact = Vec::new();
    for h in &lattice.sets {
        if h.is_all() {
            continue;
        }
        let quotient = quotient_graph(h)?;
        match aperiodicity(&quotient, pair_bound)? {
            AperiodicityVerdict::Periodic(w) => {
                return Ok(ConditionK::FailsAt {
                    h: h.names(),
                    witness_vertex: quotient.vertex_name(w.vertex()).to_string(),
                    witness_m: w.degrees().0.clone(),
                    witness_n: w.degrees().1.clone(),
                });
            }
            AperiodicityVerdict::AperiodicCertified => {
                per_quotient_exact.push((h.names(), true));
            }
            AperiodicityVerdict::AperiodicUpToBounds { .. } => {
                per_quotient_exact.push((h.names(), false));
            }
        }
    }
    Ok(ConditionK::AllQuotientsAperiodic { per_quotient_exact })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certainty {
    Certified,
    UpToBounds,
}

/// The headline structure report for a graph over a ring.
#[derive(Debug, Clone)]
pub struct Verdicts {
    pub cofinal: bool,
    pub aperiodicity: AperiodicityVerdict,
    pub condition_k: ConditionK,
    pub basically_simple: bool,
    pub simple: bool,
    pub all_basic_ideals_graded: bool,
    pub certainty: Certainty,
}

/// Basic simplicity is cofinality plus aperiodicity; simplicity further
/// requires the coefficient ring to be a field.
pub fn verdicts(
    graph: &Arc<KGraph>,
    ring: &RingSpec,
    pair_bound: u32,
) -> Result<Verdicts, AnalysisError> {
    require_no_sources(graph)?;
    let aper = aperiodicity(graph, pair_bound)?;
    let cofinal = is_cofinal(graph)?;
    let cond_k = condition_k(graph, pair_bound)?;
    let basically_simple = cofinal && aper.is_aperiodic();
    let simple = basically_simple && ring.is_field();
    let all_basic_ideals_graded = matches!(cond_k, ConditionK::AllQuotientsAperiodic { .. });
    let certainty = if graph.k() == 1 || matches!(aper, AperiodicityVerdict::Periodic(_)) {
        Certainty::Certified
    } else {
        Certainty::UpToBounds
    };
    Ok(Verdicts {
        cofinal,
        aperiodicity: aper,
        condition_k: cond_k,
        basically_simple,
        simple,
        all_basic_ideals_graded,
        certainty,
    })
}

/// Membership in the induced ideal of the principal ideal `(r0)`: after
/// canonical level expansion, every coefficient must lie in `(r0)`.
/// Restricted to rings with decidable principal-ideal membership.
pub fn ind_membership(x: &AlgebraElement, r0: &RingElem) -> Result<bool, AnalysisError> {
    let ring = x.ring().clone();
    let g = x.graph().as_ref();
    for (component, part) in x.graded_components() {
        let mut level = Degree::zero(g.k());
        for (_, b) in part.terms().keys() {
            level = level.join(b.degree());
        }
        let expanded = part.expand_to_level(&component, &level)?;
        for c in expanded.terms().values() {
            if !ring.divides(r0, c)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Canonical generator of `{r : r p_v in Ind (r0) for all v}`, which is
/// `(r0)` itself; restriction after induction recovers the ideal.
pub fn res_generator(ring: &RingSpec, r0: &RingElem) -> Result<RingElem, AnalysisError> {
    Ok(ring.principal_generator(r0)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::fixtures::fixture;

    fn graph(name: &str) -> Arc<KGraph> {
        Arc::new(fixture(name).unwrap())
    }

    fn vset(g: &Arc<KGraph>, names: &[&str]) -> BTreeSet<VertexId> {
        names.iter().map(|n| g.vertex_id(n).unwrap()).collect()
    }

    fn closure_names(g: &Arc<KGraph>, names: &[&str]) -> Vec<String> {
        her_sat_closure(g, &vset(g, names)).unwrap().names()
    }

    #[test]
    fn closure_examples() {
        let g = graph("twoblock");
        assert_eq!(closure_names(&g, &["v"]), vec!["v"]);
        assert_eq!(closure_names(&g, &["u"]), vec!["u", "v"]);
        let g = graph("vwcofinal");
        assert_eq!(closure_names(&g, &["v"]), vec!["v", "w"]);
        assert_eq!(closure_names(&g, &["w"]), vec!["v", "w"]);
    }

    #[test]
    fn closure_is_a_closure_operator() {
        for name in ["twoblock", "vwcofinal", "leavitt2", "loop1", "redcycle2"] {
            let g = graph(name);
            let verts: Vec<VertexId> = g.vertices().collect();
            let mut subsets = vec![BTreeSet::new()];
            for &v in &verts {
                for mut s in subsets.clone() {
                    s.insert(v);
                    subsets.push(s);
                }
            }
            for s in &subsets {
                let c = her_sat_closure(&g, s).unwrap();
                assert!(s.is_subset(c.vertices()), "extensive on {name}");
                let cc = her_sat_closure(&g, c.vertices()).unwrap();
                assert_eq!(c.vertices(), cc.vertices(), "idempotent on {name}");
                assert!(is_hereditary(&g, c.vertices()));
                assert!(is_saturated(&g, c.vertices()));
                for t in &subsets {
                    if s.is_subset(t) {
                        let ct = her_sat_closure(&g, t).unwrap();
                        assert!(c.vertices().is_subset(ct.vertices()), "monotone on {name}");
                    }
                }
            }
        }
    }

    #[test]
    fn lattice_examples() {
        let g = graph("twoblock");
        let lat = sat_her_lattice(&g).unwrap();
        let names: Vec<Vec<String>> = lat.sets.iter().map(|s| s.names()).collect();
        assert_eq!(
            names,
            vec![
                Vec::<String>::new(),
                vec!["v".to_string()],
                vec!["u".to_string(), "v".to_string()]
            ]
        );
        assert_eq!(lat.hasse, vec![(0, 1), (1, 2)]);

        assert_eq!(sat_her_lattice(&graph("leavitt2")).unwrap().sets.len(), 2);
        let lat = sat_her_lattice(&graph("vwcofinal")).unwrap();
        assert_eq!(lat.sets.len(), 2);
        assert_eq!(lat.sets[1].len(), 2);
    }

    #[test]
    fn lattice_members_are_closed_under_meet_and_join() {
        for name in ["twoblock", "vwcofinal", "leavitt2", "redcycle2"] {
            let g = graph(name);
            let lat = sat_her_lattice(&g).unwrap();
            for a in &lat.sets {
                assert!(is_hereditary(&g, a.vertices()));
                assert!(is_saturated(&g, a.vertices()));
                for b in &lat.sets {
                    let meet: BTreeSet<VertexId> =
                        a.vertices().intersection(b.vertices()).copied().collect();
                    assert!(
                        lat.sets.iter().any(|s| s.vertices() == &meet),
                        "meet closed on {name}"
                    );
                    let union: BTreeSet<VertexId> =
                        a.vertices().union(b.vertices()).copied().collect();
                    let join = her_sat_closure(&g, &union).unwrap();
                    assert!(
                        lat.sets.iter().any(|s| s.vertices() == join.vertices()),
                        "join closed on {name}"
                    );
                }
            }
        }
    }

    #[test]
    fn lattice_is_complete_against_brute_force() {
        for name in ["twoblock", "vwcofinal", "leavitt2", "redcycle2"] {
            let g = graph(name);
            let verts: Vec<VertexId> = g.vertices().collect();
            let mut brute: BTreeSet<BTreeSet<VertexId>> = BTreeSet::new();
            for mask in 0..(1u32 << verts.len()) {
                let s: BTreeSet<VertexId> = verts
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &v)| v)
                    .collect();
                if is_hereditary(&g, &s) && is_saturated(&g, &s) {
                    brute.insert(s);
                }
            }
            let lat = sat_her_lattice(&g).unwrap();
            let got: BTreeSet<BTreeSet<VertexId>> =
                lat.sets.iter().map(|s| s.vertices().clone()).collect();
            assert_eq!(got, brute, "{name}");
        }
    }

    #[test]
    fn cofinality_examples() {
        assert!(is_cofinal(&graph("laurent2")).unwrap());
        assert!(!is_cofinal(&graph("twoblock")).unwrap());
        assert!(is_cofinal(&graph("vwcofinal")).unwrap());
        assert!(is_cofinal(&graph("leavitt2")).unwrap());
    }

    #[test]
    fn periodicity_pairs() {
        let g = graph("loop1");
        let v = g.vertex_id("v").unwrap();
        match check_periodicity_pair(&g, v, &Degree(vec![0]), &Degree(vec![1])).unwrap() {
            PairDecision::Periodic(w) => {
                assert_eq!(w.vertex(), v);
                assert!(!w.states().is_empty());
            }
            PairDecision::NotPeriodicAt(_) => panic!("loop1 is periodic"),
        }

        let g = graph("leavitt2");
        let v = g.vertex_id("v").unwrap();
        match check_periodicity_pair(&g, v, &Degree(vec![0]), &Degree(vec![1])).unwrap() {
            PairDecision::Periodic(_) => panic!("leavitt2 is aperiodic"),
            PairDecision::NotPeriodicAt(lam) => {
                // The separating path satisfies the window inequality.
                let m = Degree(vec![0]);
                let n = Degree(vec![1]);
                let p = m.join(&n);
                let hi = lam.degree().sub(&p);
                let win_m = g.segment(&lam, &m, &m.add(&hi)).unwrap();
                let win_n = g.segment(&lam, &n, &n.add(&hi)).unwrap();
                assert_ne!(win_m, win_n);
            }
        }

        let g = graph("laurent2");
        let v = g.vertex_id("v").unwrap();
        match check_periodicity_pair(&g, v, &Degree(vec![0, 0]), &Degree(vec![1, 0])).unwrap() {
            PairDecision::Periodic(_) => {}
            PairDecision::NotPeriodicAt(_) => panic!("laurent2 is periodic"),
        }

        assert!(matches!(
            check_periodicity_pair(&g, v, &Degree(vec![1, 0]), &Degree(vec![1, 0])),
            Err(AnalysisError::EqualDegrees)
        ));
    }

    #[test]
    fn aperiodicity_verdicts() {
        match aperiodicity(&graph("loop1"), 3).unwrap() {
            AperiodicityVerdict::Periodic(w) => {
                assert_eq!(w.degrees(), (&Degree(vec![0]), &Degree(vec![1])));
            }
            _ => panic!("loop1 is periodic"),
        }
        assert!(matches!(
            aperiodicity(&graph("leavitt2"), 3).unwrap(),
            AperiodicityVerdict::AperiodicCertified
        ));
        match aperiodicity(&graph("laurent2"), 3).unwrap() {
            AperiodicityVerdict::Periodic(w) => {
                assert_eq!(w.degrees(), (&Degree(vec![0, 0]), &Degree(vec![1, 0])));
            }
            _ => panic!("laurent2 is periodic"),
        }
        match aperiodicity(&graph("vwcofinal"), 3).unwrap() {
            AperiodicityVerdict::Periodic(w) => {
                let g = graph("vwcofinal");
                assert_eq!(g.vertex_name(w.vertex()), "v");
            }
            _ => panic!("vwcofinal has the entryless loop a"),
        }
    }

    #[test]
    fn quotient_examples() {
        let g = graph("twoblock");
        let h = her_sat_closure(&g, &vset(&g, &["v"])).unwrap();
        let q = quotient_graph(&h).unwrap();
        assert_eq!(q.vertex_count(), 1);
        assert_eq!(q.edge_count(), 1);
        assert!(q.no_sources());

        let empty = her_sat_closure(&g, &BTreeSet::new()).unwrap();
        assert_eq!(quotient_graph(&empty).unwrap().as_ref(), g.as_ref());

        let g = graph("vwcofinal");
        let full = her_sat_closure(&g, &vset(&g, &["v"])).unwrap();
        assert!(full.is_all());
        assert_eq!(quotient_graph(&full).unwrap().vertex_count(), 0);
    }

    #[test]
    fn quotient_hom_kills_exactly_the_ideal() {
        let g = graph("twoblock");
        let alg = Algebra::new(Arc::clone(&g), RingSpec::Integers).unwrap();
        let h = her_sat_closure(&g, &vset(&g, &["v"])).unwrap();
        let qm = QuotientMap::new(&h).unwrap();

        let pu = alg.vertex(g.vertex_id("u").unwrap());
        let img = qm.apply(&pu).unwrap();
        assert!(!img.is_zero().unwrap());

        let b = alg.generator(&g.parse_path("b").unwrap());
        let c_st = alg.ghost(&g.parse_path("c").unwrap());
        let bc = b.mul(&c_st).unwrap();
        assert!(qm.apply(&bc).unwrap().is_zero().unwrap());

        assert!(ideal_membership(&bc, &h).unwrap());
        assert!(!ideal_membership(&pu, &h).unwrap());
        assert!(ideal_membership(&alg.zero(), &h).unwrap());
    }

    #[test]
    fn membership_recovers_h() {
        for name in ["twoblock", "vwcofinal", "leavitt2", "loop1", "laurent2"] {
            let g = graph(name);
            let alg = Algebra::new(Arc::clone(&g), RingSpec::Integers).unwrap();
            let lat = sat_her_lattice(&g).unwrap();
            for h in &lat.sets {
                let recovered: BTreeSet<VertexId> = g
                    .vertices()
                    .filter(|&v| ideal_membership(&alg.vertex(v), h).unwrap())
                    .collect();
                assert_eq!(&recovered, h.vertices(), "{name}");
            }
        }
    }

    #[test]
    fn condition_k_examples() {
        match condition_k(&graph("leavitt2"), 3).unwrap() {
            ConditionK::AllQuotientsAperiodic { per_quotient_exact } => {
                assert!(per_quotient_exact.iter().all(|(_, exact)| *exact));
            }
            _ => panic!("leavitt2 satisfies the all-quotients condition"),
        }
        match condition_k(&graph("loop1"), 3).unwrap() {
            ConditionK::FailsAt { h, .. } => assert!(h.is_empty()),
            _ => panic!("loop1 fails at the empty set"),
        }
        assert!(matches!(
            condition_k(&graph("twoblock"), 3).unwrap(),
            ConditionK::FailsAt { .. }
        ));
        // the entryless loop makes the trivial quotient periodic
        match condition_k(&graph("vwcofinal"), 3).unwrap() {
            ConditionK::FailsAt {
                h, witness_vertex, ..
            } => {
                assert!(h.is_empty());
                assert_eq!(witness_vertex, "v");
            }
            _ => panic!("vwcofinal fails at the empty set"),
        }
    }

    #[test]
    fn verdict_examples() {
        let v = verdicts(&graph("leavitt2"), &RingSpec::PrimeField(2), 3).unwrap();
        assert!(v.basically_simple && v.simple);
        assert_eq!(v.certainty, Certainty::Certified);

        let v = verdicts(&graph("leavitt2"), &RingSpec::Integers, 3).unwrap();
        assert!(v.basically_simple && !v.simple);

        let v = verdicts(&graph("loop1"), &RingSpec::Rationals, 3).unwrap();
        assert!(!v.basically_simple);

        let v = verdicts(&graph("vwcofinal"), &RingSpec::Rationals, 3).unwrap();
        assert!(v.cofinal && !v.basically_simple);

        let v = verdicts(&graph("laurent2"), &RingSpec::Integers, 3).unwrap();
        assert!(!v.all_basic_ideals_graded);
        assert_eq!(v.certainty, Certainty::Certified);
    }

    #[test]
    fn ind_res_examples() {
        let g = graph("leavitt2");
        let alg = Algebra::new(Arc::clone(&g), RingSpec::Integers).unwrap();
        let ring = RingSpec::Integers;
        let v = g.vertex_id("v").unwrap();
        let three = ring.from_i64(3);
        let six = ring.from_i64(6);

        let a = g.parse_path("a").unwrap();
        let x = alg
            .vertex(v)
            .scale(&three)
            .add(&alg.generator(&a).mul(&alg.ghost(&a)).unwrap().scale(&six))
            .unwrap();
        assert!(ind_membership(&x, &three).unwrap());
        assert!(!ind_membership(&alg.vertex(v), &three).unwrap());

        // Over a field every element is induced from any nonzero r0.
        let galg = Algebra::new(Arc::clone(&g), RingSpec::PrimeField(5)).unwrap();
        let r0 = RingSpec::PrimeField(5).from_i64(2);
        assert!(ind_membership(&galg.one(), &r0).unwrap());

        assert_eq!(res_generator(&ring, &ring.from_i64(-3)).unwrap(), three);
        let modring = RingSpec::IntegersMod(12);
        assert_eq!(
            res_generator(&modring, &modring.from_i64(8)).unwrap(),
            modring.from_i64(4)
        );

        // induction over a residue ring: (8) = (4) in Z/12
        let malg = Algebra::new(Arc::clone(&g), modring.clone()).unwrap();
        let r0 = modring.from_i64(8);
        assert!(ind_membership(&malg.vertex(v).scale(&modring.from_i64(4)), &r0).unwrap());
        assert!(!ind_membership(&malg.vertex(v).scale(&modring.from_i64(2)), &r0).unwrap());
    }

    #[test]
    fn sourced_graphs_are_refused() {
        let g = graph("omega-2-3-2");
        assert!(matches!(
            sat_her_lattice(&g),
            Err(AnalysisError::SourcesPresent)
        ));
        assert!(matches!(is_cofinal(&g), Err(AnalysisError::SourcesPresent)));
        assert!(matches!(
            aperiodicity(&g, 3),
            Err(AnalysisError::SourcesPresent)
        ));
    }
}
