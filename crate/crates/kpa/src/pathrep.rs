//! The infinite-path representation, restricted to its computable fragment:
//! eventually periodic infinite paths `prefix . cycle^infinity`.
//!
//! The cycle degree is strictly positive in every colour, so cycle powers
//! are cofinal in `N^k` and every truncation is defined. Over a finite
//! source-free graph every vertex ranges such a path: walk backwards one
//! edge of each colour per round and pigeonhole on the visited vertices.
//!
//! Generators act as in the representation on the free module over the
//! infinite path space: `Q_v` projects onto paths ranged at `v`, `T_lam`
//! prepends, `T_{mu*}` strips a matching initial segment. The element
//! produced by [`kernel_witness`] is nonzero in the algebra for degree
//! reasons yet acts as zero, exhibiting the kernel on periodic graphs.

use crate::algebra::{Algebra, AlgebraElement, AlgebraError};
use crate::analysis::{check_periodicity_pair, PairDecision, PeriodicityWitness};
use crate::degree::Degree;
use crate::graph::{GraphError, KGraph, Path, VertexId};
use crate::ring::{RingElem, RingSpec};
use rand::Rng;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PathRepError {
    #[error("cycle must loop at the prefix source with strictly positive degree: {0}")]
    BadCycle(String),
    #[error("paths live over different graphs")]
    GraphMismatch,
    #[error("element and vector live over different coefficient rings")]
    RingMismatch,
    #[error("witness does not verify on this graph")]
    NotVerifiedWitness,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// An eventually periodic infinite path `prefix . cycle . cycle . ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EPPath {
    graph: Arc<KGraph>,
    prefix: Path,
    cycle: Path,
}

impl EPPath {
    pub fn new(graph: Arc<KGraph>, prefix: Path, cycle: Path) -> Result<Self, PathRepError> {
        let g = graph.as_ref();
        let at = g.source(&prefix);
        if g.range(&cycle) != at || g.source(&cycle) != at {
            return Err(PathRepError::BadCycle(format!(
                "cycle {} does not loop at {}",
                g.path_string(&cycle),
                g.vertex_name(at)
            )));
        }
        if !Degree::ones(g.k()).le(cycle.degree()) {
            return Err(PathRepError::BadCycle(format!(
                "cycle degree {} misses a colour",
                cycle.degree()
            )));
        }
        Ok(EPPath {
            graph,
            prefix,
            cycle,
        })
    }

    /// Parse `prefix|cycle` with path literals, e.g. `b|a` or `v|b.f`.
    pub fn parse(graph: &Arc<KGraph>, literal: &str) -> Result<Self, PathRepError> {
        let (pre, cyc) = literal.split_once('|').ok_or_else(|| {
            PathRepError::BadCycle(format!("missing `|` separator in {literal:?}"))
        })?;
        let prefix = graph.parse_path(pre)?;
        let cycle = graph.parse_path(cyc)?;
        EPPath::new(Arc::clone(graph), prefix, cycle)
    }

    pub fn graph(&self) -> &Arc<KGraph> {
        &self.graph
    }

    pub fn prefix(&self) -> &Path {
        &self.prefix
    }

    pub fn cycle(&self) -> &Path {
        &self.cycle
    }

    pub fn range(&self) -> VertexId {
        self.graph.range(&self.prefix)
    }

    /// Smallest unrolling `prefix . cycle^i` whose degree dominates `n`.
    fn unroll_past(&self, n: &Degree) -> Path {
        let g = self.graph.as_ref();
        let mut rolls = 0u32;
        for color in 0..g.k() {
            let need = n.0[color].saturating_sub(self.prefix.degree().0[color]);
            rolls = rolls.max(need.div_ceil(self.cycle.degree().0[color]));
        }
        let mut path = self.prefix.clone();
        for _ in 0..rolls {
            path = g.compose(&path, &self.cycle).expect("cycle loops");
        }
        path
    }

    /// The finite segment `x(0, n)`.
    pub fn truncate(&self, n: &Degree) -> Path {
        let g = self.graph.as_ref();
        let big = self.unroll_past(n);
        g.segment(&big, &Degree::zero(g.k()), n).expect("in range")
    }

    /// The shifted path `x(n, infinity)`, again eventually periodic.
    pub fn shift(&self, n: &Degree) -> EPPath {
        let g = self.graph.as_ref();
        let big = self.unroll_past(n);
        let prefix = g.segment(&big, n, big.degree()).expect("in range");
        EPPath {
            graph: Arc::clone(&self.graph),
            prefix,
            cycle: self.cycle.clone(),
        }
    }

    /// Equality of the represented infinite paths, tested on a truncation
    /// window of combined prefix and period size. A deeper window is
    /// compared as a consistency cross-check.
    pub fn ep_equals(&self, other: &EPPath) -> bool {
        if self.graph.as_ref() != other.graph.as_ref() {
            return false;
        }
        if self.range() != other.range() {
            return false;
        }
        let bound = self
            .prefix
            .degree()
            .join(other.prefix.degree())
            .add(self.cycle.degree())
            .add(other.cycle.degree());
        let verdict = self.truncate(&bound) == other.truncate(&bound);
        let deep = bound.add(&self.cycle.degree().join(other.cycle.degree()).scale(3));
        let deep_verdict = self.truncate(&deep) == other.truncate(&deep);
        if verdict != deep_verdict {
            panic!("eventually periodic path comparison disagrees with its deep cross-check");
        }
        verdict
    }

    /// Stable representative for common cases: absorb whole cycle copies
    /// out of the prefix and rotate the cycle to the least presentation.
    /// Genuine equality stays with [`EPPath::ep_equals`].
    pub fn canonicalize(&self) -> EPPath {
        let g = self.graph.as_ref();
        let k = g.k();
        let zero = Degree::zero(k);
        let mut best: Option<(Path, Path)> = None;
        for m in Degree::box_range(&zero, self.cycle.degree()) {
            if &m == self.cycle.degree() {
                continue;
            }
            let head = g.segment(&self.cycle, &zero, &m).expect("in range");
            let tail = g.segment(&self.cycle, &m, self.cycle.degree()).expect("in range");
            let rotated = g.compose(&tail, &head).expect("cycle rotation composes");
            let mut prefix = g.compose(&self.prefix, &head).expect("prefix extends");
            while rotated.degree().le(prefix.degree()) {
                let cut = prefix.degree().sub(rotated.degree());
                let suffix = g.segment(&prefix, &cut, prefix.degree()).expect("in range");
                if suffix != rotated {
                    break;
                }
                prefix = g.segment(&prefix, &zero, &cut).expect("in range");
            }
            let candidate = (prefix, rotated);
            let better = match &best {
                None => true,
                Some(b) => {
                    (candidate.0.degree(), &candidate.0, &candidate.1)
                        < (b.0.degree(), &b.0, &b.1)
                }
            };
            if better {
                best = Some(candidate);
            }
        }
        let (prefix, cycle) = best.expect("at least the trivial rotation");
        EPPath {
            graph: Arc::clone(&self.graph),
            prefix,
            cycle,
        }
    }

    pub fn display(&self) -> String {
        let g = self.graph.as_ref();
        format!(
            "{}|{}",
            g.path_string(&self.prefix),
            g.path_string(&self.cycle)
        )
    }
}

/// A deterministic eventually periodic path ranged at `v`: walk backwards
/// one edge per colour per round, always picking the first edge, until a
/// round vertex repeats.
pub fn ep_from_vertex(graph: &Arc<KGraph>, v: VertexId) -> Result<EPPath, PathRepError> {
    walk_ep(graph, v, |edges| edges[0])
}

/// A random eventually periodic path ranged at `v`.
pub fn sample_ep<R: Rng>(
    graph: &Arc<KGraph>,
    v: VertexId,
    rng: &mut R,
) -> Result<EPPath, PathRepError> {
    walk_ep(graph, v, |edges| edges[rng.gen_range(0..edges.len())])
}

fn walk_ep(
    graph: &Arc<KGraph>,
    v: VertexId,
    mut pick: impl FnMut(&[crate::graph::EdgeId]) -> crate::graph::EdgeId,
) -> Result<EPPath, PathRepError> {
    let g = graph.as_ref();
    if !g.no_sources() {
        return Err(PathRepError::Graph(GraphError::UnknownVertex(format!(
            "graph with sources has no infinite paths at every vertex ({})",
            g.vertex_name(v)
        ))));
    }
    let zero = Degree::zero(g.k());
    let mut path = g.vertex_path(v);
    let mut marks: Vec<(VertexId, Degree)> = vec![(v, zero.clone())];
    loop {
        let mut at = g.source(&path);
        for color in 0..g.k() {
            let e = pick(g.in_edges(at, color));
            path = g.compose(&path, &g.edge_path(e)).expect("in-edge composes");
            at = g.edge(e).src;
        }
        if let Some((_, cut)) = marks.iter().find(|(w, _)| *w == at) {
            let prefix = g.segment(&path, &zero, cut).expect("in range");
            let cycle = g.segment(&path, cut, path.degree()).expect("in range");
            return EPPath::new(Arc::clone(graph), prefix, cycle);
        }
        marks.push((at, path.degree().clone()));
    }
}

/// A formal linear combination of eventually periodic paths; keys are
/// merged up to `ep_equals`.
#[derive(Debug, Clone)]
pub struct PathVector {
    graph: Arc<KGraph>,
    ring: RingSpec,
    entries: Vec<(EPPath, RingElem)>,
}

impl PathVector {
    pub fn zero(graph: Arc<KGraph>, ring: RingSpec) -> Self {
        PathVector {
            graph,
            ring,
            entries: Vec::new(),
        }
    }

    pub fn singleton(x: EPPath, ring: RingSpec) -> Self {
        let one = ring.one();
        let graph = Arc::clone(x.graph());
        let mut v = PathVector::zero(graph, ring);
        v.add_entry(x, one);
        v
    }

    pub fn entries(&self) -> &[(EPPath, RingElem)] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn add_entry(&mut self, x: EPPath, coeff: RingElem) {
        if self.ring.is_zero(&coeff) {
            return;
        }
        let x = x.canonicalize();
        for (y, c) in self.entries.iter_mut() {
            if y.ep_equals(&x) {
                *c = self.ring.add(c, &coeff);
                if self.ring.is_zero(c) {
                    self.entries.retain(|(_, c)| !self.ring.is_zero(c));
                }
                return;
            }
        }
        self.entries.push((x, coeff));
    }

    pub fn add(&self, other: &PathVector) -> PathVector {
        let mut out = self.clone();
        for (x, c) in &other.entries {
            out.add_entry(x.clone(), c.clone());
        }
        out
    }
}

/// One representation generator.
#[derive(Debug, Clone)]
pub enum Generator {
    /// `Q_v`: project onto paths ranged at `v`.
    Vertex(VertexId),
    /// `T_lam`: prepend `lam`.
    Prepend(Path),
    /// `T_{mu*}`: strip `mu` when it is the initial segment.
    Strip(Path),
}

/// Apply one generator to one path; `None` is the zero vector.
pub fn apply_generator(gen: &Generator, x: &EPPath) -> Option<EPPath> {
    let g = x.graph().as_ref();
    match gen {
        Generator::Vertex(v) => (x.range() == *v).then(|| x.clone()),
        Generator::Prepend(lam) => {
            if g.source(lam) != x.range() {
                return None;
            }
            let prefix = g.compose(lam, x.prefix()).expect("ranges agree");
            Some(EPPath {
                graph: Arc::clone(x.graph()),
                prefix,
                cycle: x.cycle().clone(),
            })
        }
        Generator::Strip(mu) => (x.truncate(mu.degree()) == *mu).then(|| x.shift(mu.degree())),
    }
}

/// Apply an algebra element through the representation: each term
/// `r s_alpha s_{beta*}` acts as `r T_alpha T_{beta*}`.
pub fn apply_element(a: &AlgebraElement, v: &PathVector) -> Result<PathVector, PathRepError> {
    if a.graph().as_ref() != v.graph.as_ref() {
        return Err(PathRepError::GraphMismatch);
    }
    if a.ring() != &v.ring {
        return Err(PathRepError::RingMismatch);
    }
    let mut out = PathVector::zero(Arc::clone(&v.graph), v.ring.clone());
    for (x, c) in &v.entries {
        for ((alpha, beta), r) in a.terms() {
            let stripped = match apply_generator(&Generator::Strip(beta.clone()), x) {
                Some(y) => y,
                None => continue,
            };
            if let Some(y) = apply_generator(&Generator::Prepend(alpha.clone()), &stripped) {
                out.add_entry(y, v.ring.mul(r, c));
            }
        }
    }
    Ok(out)
}

/// Build a nonzero element of the kernel of the representation from a
/// verified periodicity certificate at `(v, m, n)`.
///
/// With `mu` least in `v Lambda^m` and `alpha` least in
/// `s(mu) Lambda^{(m join n) - m}`, periodicity pins
/// `nu := (mu alpha)(0, n)` so that `mu alpha y = nu alpha y` for every
/// continuation `y`; then `s_{mu alpha} s_{(mu alpha)*} - s_{nu alpha}
/// s_{(mu alpha)*}` annihilates every infinite path while staying nonzero
/// (its two graded components cannot cancel).
pub fn kernel_witness(
    graph: &Arc<KGraph>,
    witness: &PeriodicityWitness,
    ring: &RingSpec,
) -> Result<AlgebraElement, PathRepError> {
    let g = graph.as_ref();
    let (m, n) = witness.degrees();
    let v = witness.vertex();
    match check_periodicity_pair(graph, v, m, n) {
        Ok(PairDecision::Periodic(_)) => {}
        _ => return Err(PathRepError::NotVerifiedWitness),
    }

    let p = m.join(n);
    let mu = g
        .paths_from(v, m)
        .into_iter()
        .min()
        .expect("source-free graph has paths of every degree");
    let alpha = g
        .paths_from(g.source(&mu), &p.sub(m))
        .into_iter()
        .min()
        .expect("source-free graph has paths of every degree");
    let mu_alpha = g.compose(&mu, &alpha).expect("extension composes");
    let nu = g.segment(&mu_alpha, &Degree::zero(g.k()), n).expect("n <= p");
    let nu_alpha = g.compose(&nu, &alpha).expect("periodicity aligns the corner");

    let alg = Algebra::new(Arc::clone(graph), ring.clone())?;
    let a = alg
        .monomial(ring.one(), &mu_alpha, &mu_alpha)?
        .sub(&alg.monomial(ring.one(), &nu_alpha, &mu_alpha)?)?;

    if a.is_zero()? {
        panic!("kernel witness collapsed to zero; the degree argument forbids this");
    }
    // Spot-check the annihilation on a deterministic sample.
    let sample = ep_from_vertex(graph, v)?;
    let image = apply_element(&a, &PathVector::singleton(sample, ring.clone()))?;
    if !image.is_zero() {
        panic!("kernel witness failed to annihilate a sampled infinite path");
    }
    Ok(a)
}
