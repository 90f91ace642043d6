//! Exact arithmetic in the Kumjian-Pask algebra of a k-graph.
//!
//! Elements are stored directly in span form: a finite map from ordered path
//! pairs `(alpha, beta)` with `s(alpha) = s(beta)` to nonzero coefficients,
//! standing for `sum r_{alpha,beta} s_alpha s_{beta*}`. Products close over
//! this form through minimal common extensions, so no quotient of a free
//! algebra is ever materialized.
//!
//! Equality splits an element into graded components, rewrites each
//! component so that all `beta` (and hence all `alpha`) degrees agree, and
//! compares coefficient maps. At a uniform bidegree the monomials are
//! linearly independent: `s_{delta*} x s_gamma` recovers each coefficient as
//! `r p_{s(delta)}`, and `r p_v` vanishes only for `r = 0`.

use crate::degree::{Degree, GradeDegree};
use crate::graph::{GraphError, KGraph, Path, VertexId};
use crate::ring::{RingElem, RingSpec};
use std::collections::BTreeMap;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("graph has sources; the algebra is only formed over source-free graphs")]
    SourcesPresent,
    #[error("elements live over different graphs")]
    GraphMismatch,
    #[error("elements live over different coefficient rings")]
    RingMismatch,
    #[error("paths do not share a source")]
    SourceMismatch,
    #[error("requested level is below a stored ghost degree")]
    LevelTooLow,
    #[error("level expansion would produce about {0} terms")]
    LevelExplosion(u64),
    #[error("operation requires a nonzero element")]
    ZeroElement,
    #[error("ghost degrees are not uniform")]
    NotUniformLevel,
    #[error("no separating extension of degree <= {0} per colour")]
    BoundExceeded(u32),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Minimal common extensions of `(beta, gamma)`: all pairs `(eps, zeta)`
/// with `beta eps = gamma zeta` of degree `d(beta) join d(gamma)`.
pub fn mce(g: &KGraph, beta: &Path, gamma: &Path) -> Vec<(Path, Path)> {
    let q = beta.degree().join(gamma.degree());
    let exts_b = g.paths_from(g.source(beta), &q.sub(beta.degree()));
    let exts_c = g.paths_from(g.source(gamma), &q.sub(gamma.degree()));
    let mut out = Vec::new();
    for eps in &exts_b {
        let be = g.compose(beta, eps).expect("extension is composable");
        for zeta in &exts_c {
            let cz = g.compose(gamma, zeta).expect("extension is composable");
            if be == cz {
                out.push((eps.clone(), zeta.clone()));
            }
        }
    }
    out.sort();
    out
}

/// Handle for building elements of the Kumjian-Pask algebra of a graph
/// over a coefficient ring.
#[derive(Debug, Clone)]
pub struct Algebra {
    graph: Arc<KGraph>,
    ring: RingSpec,
}

/// An element `sum r_{alpha,beta} s_alpha s_{beta*}` in canonical span form.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraElement {
    graph: Arc<KGraph>,
    ring: RingSpec,
    terms: BTreeMap<(Path, Path), RingElem>,
}

const LEVEL_TERM_LIMIT: u64 = 1_000_000;

impl Algebra {
    /// Requires a source-free graph; graphs with sources stay usable for
    /// path arithmetic but have no Kumjian-Pask algebra here.
    pub fn new(graph: Arc<KGraph>, ring: RingSpec) -> Result<Self, AlgebraError> {
        if !graph.no_sources() {
            return Err(AlgebraError::SourcesPresent);
        }
        Ok(Algebra { graph, ring })
    }

    pub fn graph(&self) -> &Arc<KGraph> {
        &self.graph
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement {
            graph: Arc::clone(&self.graph),
            ring: self.ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// The multiplicative identity `sum_v p_v` (the graph is finite).
    pub fn one(&self) -> AlgebraElement {
        let mut x = self.zero();
        for v in self.graph.vertices() {
            let p = self.graph.vertex_path(v);
            x.insert_term(p.clone(), p, self.ring.one());
        }
        x
    }

    /// The vertex idempotent `p_v`.
    pub fn vertex(&self, v: VertexId) -> AlgebraElement {
        let mut x = self.zero();
        let p = self.graph.vertex_path(v);
        x.insert_term(p.clone(), p, self.ring.one());
        x
    }

    /// The generator `s_lambda`.
    pub fn generator(&self, path: &Path) -> AlgebraElement {
        let mut x = self.zero();
        let src = self.graph.vertex_path(self.graph.source(path));
        x.insert_term(path.clone(), src, self.ring.one());
        x
    }

    /// The ghost generator `s_{lambda*}`.
    pub fn ghost(&self, path: &Path) -> AlgebraElement {
        let mut x = self.zero();
        let src = self.graph.vertex_path(self.graph.source(path));
        x.insert_term(src, path.clone(), self.ring.one());
        x
    }

    /// `r s_alpha s_{beta*}`; the paths must share a source.
    pub fn monomial(
        &self,
        coeff: RingElem,
        alpha: &Path,
        beta: &Path,
    ) -> Result<AlgebraElement, AlgebraError> {
        if self.graph.source(alpha) != self.graph.source(beta) {
            return Err(AlgebraError::SourceMismatch);
        }
        let mut x = self.zero();
        x.insert_term(alpha.clone(), beta.clone(), coeff);
        Ok(x)
    }
}

impl AlgebraElement {
    pub fn graph(&self) -> &Arc<KGraph> {
        &self.graph
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn terms(&self) -> &BTreeMap<(Path, Path), RingElem> {
        &self.terms
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Structurally empty. This is not the algebra's zero test; see
    /// [`AlgebraElement::is_zero`].
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert_term(&mut self, alpha: Path, beta: Path, coeff: RingElem) {
        if self.ring.is_zero(&coeff) {
            return;
        }
        let key = (alpha, beta);
        match self.terms.remove(&key) {
            None => {
                self.terms.insert(key, coeff);
            }
            Some(old) => {
                let sum = self.ring.add(&old, &coeff);
                if !self.ring.is_zero(&sum) {
                    self.terms.insert(key, sum);
                }
            }
        }
    }

    fn check_compatible(&self, other: &AlgebraElement) -> Result<(), AlgebraError> {
        if !Arc::ptr_eq(&self.graph, &other.graph) && self.graph != other.graph {
            return Err(AlgebraError::GraphMismatch);
        }
        if self.ring != other.ring {
            return Err(AlgebraError::RingMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for ((a, b), c) in &other.terms {
            out.insert_term(a.clone(), b.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> AlgebraElement {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = self.ring.neg(c);
        }
        out
    }

    pub fn sub(&self, other: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        self.add(&other.neg())
    }

    pub fn scale(&self, r: &RingElem) -> AlgebraElement {
        let mut out = AlgebraElement {
            graph: Arc::clone(&self.graph),
            ring: self.ring.clone(),
            terms: BTreeMap::new(),
        };
        for ((a, b), c) in &self.terms {
            out.insert_term(a.clone(), b.clone(), self.ring.mul(r, c));
        }
        out
    }

    /// The transpose involution: every key `(alpha, beta)` flips to
    /// `(beta, alpha)` with the coefficient unchanged.
    pub fn star(&self) -> AlgebraElement {
        let mut out = AlgebraElement {
            graph: Arc::clone(&self.graph),
            ring: self.ring.clone(),
            terms: BTreeMap::new(),
        };
        for ((a, b), c) in &self.terms {
            out.insert_term(b.clone(), a.clone(), c.clone());
        }
        out
    }

    /// Bilinear product; each monomial pair multiplies through the minimal
    /// common extensions of the inner paths:
    /// `(s_a s_{b*})(s_c s_{d*}) = sum over mce(b, c) of s_{a eps} s_{(d zeta)*}`.
    pub fn mul(&self, other: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        self.check_compatible(other)?;
        let g = &self.graph;
        let mut out = AlgebraElement {
            graph: Arc::clone(&self.graph),
            ring: self.ring.clone(),
            terms: BTreeMap::new(),
        };
        for ((a, b), r) in &self.terms {
            for ((c, d), t) in &other.terms {
                let coeff = self.ring.mul(r, t);
                if self.ring.is_zero(&coeff) {
                    continue;
                }
                for (eps, zeta) in mce(g, b, c) {
                    let alpha = g.compose(a, &eps).expect("mce extensions compose");
                    let beta = g.compose(d, &zeta).expect("mce extensions compose");
                    out.insert_term(alpha, beta, coeff.clone());
                }
            }
        }
        Ok(out)
    }

    /// Terms grouped by `d(alpha) - d(beta)`.
    pub fn graded_components(&self) -> BTreeMap<GradeDegree, AlgebraElement> {
        let mut out: BTreeMap<GradeDegree, AlgebraElement> = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            let grade = a.degree().grade_sub(b.degree());
            let entry = out.entry(grade).or_insert_with(|| AlgebraElement {
                graph: Arc::clone(&self.graph),
                ring: self.ring.clone(),
                terms: BTreeMap::new(),
            });
            entry.insert_term(a.clone(), b.clone(), c.clone());
        }
        out
    }

    /// Rewrite every key of graded component `n0` so that all ghost degrees
    /// become `level`, using `s_a s_{b*} = sum_{lam} s_{a lam} s_{(b lam)*}`
    /// over `lam in s(a) Lambda^{level - d(b)}`. Other components are kept
    /// untouched; the element's value never changes.
    pub fn expand_to_level(
        &self,
        component: &GradeDegree,
        level: &Degree,
    ) -> Result<AlgebraElement, AlgebraError> {
        let g = &self.graph;
        let mut projected: u64 = 0;
        for (a, b) in self.terms.keys() {
            if &a.degree().grade_sub(b.degree()) != component {
                continue;
            }
            if !b.degree().le(level) {
                return Err(AlgebraError::LevelTooLow);
            }
            projected =
                projected.saturating_add(g.count_paths_from(g.source(a), &level.sub(b.degree())));
        }
        if projected > LEVEL_TERM_LIMIT {
            return Err(AlgebraError::LevelExplosion(projected));
        }
        let mut out = AlgebraElement {
            graph: Arc::clone(&self.graph),
            ring: self.ring.clone(),
            terms: BTreeMap::new(),
        };
        for ((a, b), c) in &self.terms {
            if &a.degree().grade_sub(b.degree()) != component {
                out.insert_term(a.clone(), b.clone(), c.clone());
                continue;
            }
            for lam in g.paths_from(g.source(a), &level.sub(b.degree())) {
                let alpha = g.compose(a, &lam).expect("extension composes");
                let beta = g.compose(b, &lam).expect("extension composes");
                out.insert_term(alpha, beta, c.clone());
            }
        }
        Ok(out)
    }

    /// Rewrite the whole element so every ghost degree equals the join of
    /// all stored ghost degrees (the normal form used for compression).
    pub fn expand_to_uniform(&self) -> Result<AlgebraElement, AlgebraError> {
        let mut level = Degree::zero(self.graph.k());
        for (_, b) in self.terms.keys() {
            level = level.join(b.degree());
        }
        let mut out = self.clone();
        for component in self.graded_components().keys() {
            out = out.expand_to_level(component, &level)?;
        }
        Ok(out)
    }

    /// Exact zero test: expand each graded component to the join of its
    /// ghost degrees and check that all coefficients cancel.
    pub fn is_zero(&self) -> Result<bool, AlgebraError> {
        for (component, part) in self.graded_components() {
            let mut level = Degree::zero(self.graph.k());
            for (_, b) in part.terms.keys() {
                level = level.join(b.degree());
            }
            let expanded = part.expand_to_level(&component, &level)?;
            if !expanded.terms.is_empty() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &AlgebraElement) -> Result<bool, AlgebraError> {
        self.sub(other)?.is_zero()
    }

    /// Greedy reverse collapse of complete extension families for compact
    /// printing: whenever `{(a lam, b lam) : lam in s(a) Lambda^{e_i}}` is
    /// fully present with one coefficient, it contracts to `(a, b)`. The
    /// result is display sugar, not a canonical form; equality never
    /// consults it.
    pub fn reduce_display(&self) -> AlgebraElement {
        let g = Arc::clone(&self.graph);
        let mut current = self.clone();
        'outer: loop {
            let keys: Vec<(Path, Path)> = current.terms.keys().cloned().collect();
            for (a, b) in keys {
                if !current.terms.contains_key(&(a.clone(), b.clone())) {
                    continue;
                }
                for color in 0..g.k() {
                    let unit = Degree::unit(g.k(), color);
                    if !unit.le(a.degree()) || !unit.le(b.degree()) {
                        continue;
                    }
                    let cut_a = a.degree().sub(&unit);
                    let cut_b = b.degree().sub(&unit);
                    let tail_a = g.segment(&a, &cut_a, a.degree()).expect("in range");
                    let tail_b = g.segment(&b, &cut_b, b.degree()).expect("in range");
                    if tail_a != tail_b {
                        continue;
                    }
                    let parent_a = g
                        .segment(&a, &Degree::zero(g.k()), &cut_a)
                        .expect("in range");
                    let parent_b = g
                        .segment(&b, &Degree::zero(g.k()), &cut_b)
                        .expect("in range");
                    let coeff = current.terms[&(a.clone(), b.clone())].clone();
                    let family: Vec<(Path, Path)> = g
                        .paths_from(g.source(&parent_a), &unit)
                        .into_iter()
                        .map(|lam| {
                            (
                                g.compose(&parent_a, &lam).expect("extension composes"),
                                g.compose(&parent_b, &lam).expect("extension composes"),
                            )
                        })
                        .collect();
                    let complete = family
                        .iter()
                        .all(|key| current.terms.get(key) == Some(&coeff));
                    if !complete {
                        continue;
                    }
                    for key in &family {
                        current.terms.remove(key);
                    }
                    current.insert_term(parent_a, parent_b, coeff);
                    continue 'outer;
                }
            }
            return current;
        }
    }

    /// For an element with uniform ghost degrees, the lexicographically
    /// least ghost path `gamma` together with `G = {alpha : (alpha, gamma)}`.
    /// `x s_gamma = sum_{alpha in G} r_{alpha,gamma} s_alpha` is nonzero
    /// because distinct `alpha` stay independent.
    pub fn pick_compressor(&self) -> Result<(Path, Vec<Path>), AlgebraError> {
        if self.terms.is_empty() {
            return Err(AlgebraError::ZeroElement);
        }
        let mut ghost_degrees = self.terms.keys().map(|(_, b)| b.degree());
        let first = ghost_degrees.next().unwrap();
        if ghost_degrees.any(|d| d != first) {
            return Err(AlgebraError::NotUniformLevel);
        }
        let gamma = self
            .terms
            .keys()
            .map(|(_, b)| b.clone())
            .min()
            .expect("nonempty");
        let alphas: Vec<Path> = self
            .terms
            .keys()
            .filter(|(_, b)| *b == gamma)
            .map(|(a, _)| a.clone())
            .collect();
        Ok((gamma, alphas))
    }

    /// Compress a nonzero element to a single vertex idempotent:
    /// find `sigma`, `tau` with `s_{sigma*} x s_tau = r p_w`, `r != 0`.
    ///
    /// After expanding to uniform ghost level, take the least ghost `gamma`
    /// and least `delta` among its partners, then search for an extension
    /// `lam` of `s(delta)` whose initial window separates the partners.
    /// Succeeds for aperiodic graphs once `depth_bound` is large enough;
    /// running out of bound reports the bound, not a disproof.
    pub fn compress_to_vertex(&self, depth_bound: u32) -> Result<Compression, AlgebraError> {
        let g = Arc::clone(&self.graph);
        let x = self.expand_to_uniform()?;
        if x.terms.is_empty() {
            return Err(AlgebraError::ZeroElement);
        }
        let (gamma, partners) = x.pick_compressor()?;
        let delta = partners.first().expect("nonempty").clone();
        let coeff = x.terms[&(delta.clone(), gamma.clone())].clone();
        let v = g.source(&delta);

        let lam = if partners.len() == 1 {
            Some(g.vertex_path(v))
        } else {
            let mut bound_degree = Degree::zero(g.k());
            for alpha in &partners {
                bound_degree = bound_degree.join(alpha.degree());
            }
            let hi = Degree::uniform(g.k(), depth_bound);
            if !bound_degree.le(&hi) {
                return Err(AlgebraError::BoundExceeded(depth_bound));
            }
            let mut degrees = Degree::box_range(&bound_degree, &hi);
            degrees.sort_by_key(|d| (d.total(), d.clone()));
            let mut found = None;
            'search: for deg in degrees {
                for lam in g.paths_from(v, &deg) {
                    if windows_separate(&g, &partners, &lam) {
                        found = Some(lam);
                        break 'search;
                    }
                }
            }
            found
        };
        let lam = lam.ok_or(AlgebraError::BoundExceeded(depth_bound))?;

        let sigma = g.compose(&delta, &lam).expect("extension composes");
        let tau = g.compose(&gamma, &lam).expect("extension composes");
        let w = g.source(&lam);

        // The separating window kills every cross term; verify exactly.
        let alg = Algebra {
            graph: Arc::clone(&self.graph),
            ring: self.ring.clone(),
        };
        let compressed = alg
            .ghost(&sigma)
            .mul(self)
            .and_then(|y| y.mul(&alg.generator(&tau)))?;
        let expected = alg.vertex(w).scale(&coeff);
        if !compressed.equals(&expected)? {
            panic!("compression postcondition failed; separating window check is inconsistent");
        }
        Ok(Compression {
            sigma,
            tau,
            coeff,
            vertex: w,
        })
    }

    /// Canonical text rendering: one `coeff * s(alpha) st(beta)` line per
    /// term, ordered by graded component, then alpha, then beta.
    pub fn display(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut lines: Vec<((GradeDegree, Path, Path), String)> = Vec::new();
        for ((a, b), c) in &self.terms {
            let grade = a.degree().grade_sub(b.degree());
            let coeff = self.ring.display(c);
            let coeff = if coeff.contains(' ') {
                format!("({coeff})")
            } else {
                coeff
            };
            let line = format!(
                "{} * s({}) st({})",
                coeff,
                self.graph.path_string(a),
                self.graph.path_string(b)
            );
            lines.push(((grade, a.clone(), b.clone()), line));
        }
        lines.sort();
        lines
            .into_iter()
            .map(|(_, l)| l)
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Does the window map `alpha -> (alpha lam)(0, d(lam))` distinguish all
/// the given paths?
fn windows_separate(g: &KGraph, alphas: &[Path], lam: &Path) -> bool {
    let mut seen = Vec::new();
    for alpha in alphas {
        let ext = g.compose(alpha, lam).expect("partners share the source");
        let window = g
            .segment(&ext, &Degree::zero(g.k()), lam.degree())
            .expect("in range");
        if seen.contains(&window) {
            return false;
        }
        seen.push(window);
    }
    true
}

/// Result of [`AlgebraElement::compress_to_vertex`]:
/// `s_{sigma*} x s_tau = coeff p_vertex`.
#[derive(Debug, Clone)]
pub struct Compression {
    pub sigma: Path,
    pub tau: Path,
    pub coeff: RingElem,
    pub vertex: VertexId,
}
