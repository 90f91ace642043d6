//! Finite higher-rank graphs presented by a coloured skeleton and a set of
//! commuting squares, with canonical colour-ordered path words.
//!
//! A path is stored as its unique factorization with all colour-1 edges
//! first, then colour-2, and so on; the factorization property makes this
//! word a complete invariant of the morphism. Composition concatenates words
//! and restores colour order by applying stored squares to adjacent
//! out-of-order pairs; each swap removes exactly one colour inversion, so
//! normalization terminates.

use crate::degree::Degree;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

pub type VertexId = u32;
pub type EdgeId = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("duplicate id {0:?}")]
    DuplicateId(String),
    #[error("id {0:?} contains reserved characters")]
    BadId(String),
    #[error("edge {edge:?} has colour {color}, valid colours are 1..={k}")]
    BadColor { edge: String, color: usize, k: usize },
    #[error("edge {edge:?} references unknown vertex {vertex:?}")]
    DanglingEdge { edge: String, vertex: String },
    #[error("malformed square: {0}")]
    SquareMalformed(String),
    #[error("squares are not bijective: {0}")]
    SquareNotBijective(String),
    #[error("associativity failure on triple {0}")]
    AssociativityFailure(String),
    #[error("rank {0} not supported here")]
    UnsupportedRank(usize),
    #[error("graph too large: {0} vertices")]
    TooLarge(usize),
    #[error("paths not composable: source of {left:?} differs from range of {right:?}")]
    NotComposable { left: String, right: String },
    #[error("segment range out of bounds")]
    BadRange,
    #[error("unknown edge {0:?}")]
    UnknownEdge(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("operation requires a 2-graph")]
    NotTwoGraph,
    #[error("no unique colour-2 edge into the range of {0:?}")]
    FMapUndefined(String),
}

/// Raw graph description, as read from a graph file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub k: usize,
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeDoc>,
    #[serde(default)]
    pub squares: Vec<SquareDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EdgeDoc {
    pub id: String,
    /// 1-based colour.
    pub color: usize,
    pub src: String,
    pub rng: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SquareDoc {
    pub lhs: [String; 2],
    pub rhs: [String; 2],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    /// 0-based colour.
    pub color: usize,
    pub src: VertexId,
    pub rng: VertexId,
}

/// A morphism of the graph category in canonical colour-ordered form.
///
/// `word` is read left to right in composition order: the source of each
/// edge is the range of the next, and the leftmost edge carries the range of
/// the whole path. A vertex path has an empty word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    rng: VertexId,
    word: Vec<EdgeId>,
    degree: Degree,
}

impl Path {
    pub fn rng(&self) -> VertexId {
        self.rng
    }

    pub fn degree(&self) -> &Degree {
        &self.degree
    }

    pub fn word(&self) -> &[EdgeId] {
        &self.word
    }

    pub fn is_vertex(&self) -> bool {
        self.word.is_empty()
    }
}

impl Ord for Path {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.word.cmp(&other.word))
            .then_with(|| self.rng.cmp(&other.rng))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SwapStrategy {
    Leftmost,
    Rightmost,
}

/// A validated finite k-graph.
///
/// Vertices and edges are re-sorted by id at construction, so numeric id
/// order coincides with name order and all enumerations are deterministic.
#[derive(Debug, Clone)]
pub struct KGraph {
    k: usize,
    vertices: Vec<String>,
    edges: Vec<Edge>,
    vmap: BTreeMap<String, VertexId>,
    emap: BTreeMap<String, EdgeId>,
    /// `in_edges[v][c]` = colour-c edges with range v, sorted by id.
    in_edges: Vec<Vec<Vec<EdgeId>>>,
    /// Increasing-colour pair -> decreasing-colour pair of the same square.
    inc2dec: BTreeMap<(EdgeId, EdgeId), (EdgeId, EdgeId)>,
    dec2inc: BTreeMap<(EdgeId, EdgeId), (EdgeId, EdgeId)>,
    /// Canonical square list (lhs, rhs), sorted by lhs.
    squares: Vec<([EdgeId; 2], [EdgeId; 2])>,
    no_sources: bool,
    /// (vertex, 0-based colour) pairs receiving no edge of that colour.
    sources: Vec<(VertexId, usize)>,
}

impl PartialEq for KGraph {
    fn eq(&self, other: &Self) -> bool {
        self.k == other.k
            && self.vertices == other.vertices
            && self.edges == other.edges
            && self.squares == other.squares
    }
}

impl Eq for KGraph {}

const RESERVED_ID_CHARS: &[char] = &['.', '|', '(', ')', '*', '+', '-', '"', ' ', '\t', '\n'];

impl KGraph {
    /// Validate a raw description into a k-graph.
    ///
    /// Checks ids, endpoints, square shape, square bijectivity and (for
    /// k >= 3) the associativity of the squares. Graphs with sources are
    /// returned with `no_sources() == false`; path arithmetic stays legal on
    /// them, only algebra construction refuses.
    pub fn validate(doc: &GraphDoc) -> Result<KGraph, GraphError> {
        let k = doc.k;
        if k == 0 {
            return Err(GraphError::UnsupportedRank(0));
        }

        let mut vertices = doc.vertices.clone();
        vertices.sort();
        for w in vertices.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateId(w[0].clone()));
            }
        }
        let vmap: BTreeMap<String, VertexId> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i as VertexId))
            .collect();

        let mut raw_edges = doc.edges.clone();
        raw_edges.sort_by(|a, b| a.id.cmp(&b.id));
        for w in raw_edges.windows(2) {
            if w[0].id == w[1].id {
                return Err(GraphError::DuplicateId(w[0].id.clone()));
            }
        }
        let mut edges = Vec::with_capacity(raw_edges.len());
        for e in &raw_edges {
            if e.id.is_empty() || e.id.contains(RESERVED_ID_CHARS) {
                return Err(GraphError::BadId(e.id.clone()));
            }
            if vmap.contains_key(&e.id) {
                return Err(GraphError::DuplicateId(e.id.clone()));
            }
            if e.color == 0 || e.color > k {
                return Err(GraphError::BadColor {
                    edge: e.id.clone(),
                    color: e.color,
                    k,
                });
            }
            let src = *vmap.get(&e.src).ok_or_else(|| GraphError::DanglingEdge {
                edge: e.id.clone(),
                vertex: e.src.clone(),
            })?;
            let rng = *vmap.get(&e.rng).ok_or_else(|| GraphError::DanglingEdge {
                edge: e.id.clone(),
                vertex: e.rng.clone(),
            })?;
            edges.push(Edge {
                id: e.id.clone(),
                color: e.color - 1,
                src,
                rng,
            });
        }
        for v in &vertices {
            if v.is_empty() || v.contains(RESERVED_ID_CHARS) {
                return Err(GraphError::BadId(v.clone()));
            }
        }
        let emap: BTreeMap<String, EdgeId> = edges
            .iter()
            .enumerate()
            .map(|(i, e)| (e.id.clone(), i as EdgeId))
            .collect();

        let mut in_edges = vec![vec![Vec::new(); k]; vertices.len()];
        for (i, e) in edges.iter().enumerate() {
            in_edges[e.rng as usize][e.color].push(i as EdgeId);
        }

        // Squares: check shape, then build both lookup directions.
        let mut inc2dec = BTreeMap::new();
        let mut dec2inc = BTreeMap::new();
        let mut squares = Vec::new();
        for sq in &doc.squares {
            let lookup = |id: &String| {
                emap.get(id)
                    .copied()
                    .ok_or_else(|| GraphError::UnknownEdge(id.clone()))
            };
            let a = lookup(&sq.lhs[0])?;
            let b = lookup(&sq.lhs[1])?;
            let c = lookup(&sq.rhs[0])?;
            let d = lookup(&sq.rhs[1])?;
            let (ea, eb, ec, ed) = (
                &edges[a as usize],
                &edges[b as usize],
                &edges[c as usize],
                &edges[d as usize],
            );
            let describe = || format!("lhs=[{},{}] rhs=[{},{}]", ea.id, eb.id, ec.id, ed.id);
            if !(ea.color < eb.color && ec.color == eb.color && ed.color == ea.color) {
                return Err(GraphError::SquareMalformed(format!(
                    "{}: colours must be (i,j) on the left and (j,i) on the right with i<j",
                    describe()
                )));
            }
            if ea.src != eb.rng || ec.src != ed.rng {
                return Err(GraphError::SquareMalformed(format!(
                    "{}: sides are not composable",
                    describe()
                )));
            }
            if ea.rng != ec.rng || eb.src != ed.src {
                return Err(GraphError::SquareMalformed(format!(
                    "{}: sides do not share corners",
                    describe()
                )));
            }
            if inc2dec.insert((a, b), (c, d)).is_some() {
                return Err(GraphError::SquareNotBijective(format!(
                    "pair {}.{} appears in more than one square",
                    ea.id, eb.id
                )));
            }
            if dec2inc.insert((c, d), (a, b)).is_some() {
                return Err(GraphError::SquareNotBijective(format!(
                    "pair {}.{} appears in more than one square",
                    ec.id, ed.id
                )));
            }
            squares.push(([a, b], [c, d]));
        }
        squares.sort();

        let graph = KGraph {
            k,
            vertices,
            edges,
            vmap,
            emap,
            in_edges,
            inc2dec,
            dec2inc,
            squares,
            no_sources: false,
            sources: Vec::new(),
        };

        // Bijectivity: every composable 2-path with distinct colours occurs
        // in exactly one square, on the side matching its colour order.
        for (i, first) in graph.edges.iter().enumerate() {
            for (j, second) in graph.edges.iter().enumerate() {
                if first.src != second.rng || first.color == second.color {
                    continue;
                }
                let key = (i as EdgeId, j as EdgeId);
                let found = if first.color < second.color {
                    graph.inc2dec.contains_key(&key)
                } else {
                    graph.dec2inc.contains_key(&key)
                };
                if !found {
                    return Err(GraphError::SquareNotBijective(format!(
                        "2-path {}.{} occurs in no square",
                        first.id, second.id
                    )));
                }
            }
        }

        // Associativity: for k >= 3, normalizing a 3-path of pairwise
        // distinct colours must not depend on the order of swaps.
        if k >= 3 {
            graph.hexagon_check()?;
        }

        let mut sources = Vec::new();
        for v in 0..graph.vertices.len() {
            for c in 0..k {
                if graph.in_edges[v][c].is_empty() {
                    sources.push((v as VertexId, c));
                }
            }
        }
        let no_sources = sources.is_empty();
        Ok(KGraph {
            no_sources,
            sources,
            ..graph
        })
    }

    fn hexagon_check(&self) -> Result<(), GraphError> {
        for (i, x) in self.edges.iter().enumerate() {
            for &y_id in self.in_edges[x.src as usize].iter().flatten() {
                let y = &self.edges[y_id as usize];
                if y.color == x.color {
                    continue;
                }
                for &z_id in self.in_edges[y.src as usize].iter().flatten() {
                    let z = &self.edges[z_id as usize];
                    if z.color == x.color || z.color == y.color {
                        continue;
                    }
                    let word = vec![i as EdgeId, y_id, z_id];
                    let l = self.normalize_word(word.clone(), SwapStrategy::Leftmost);
                    let r = self.normalize_word(word, SwapStrategy::Rightmost);
                    if l != r {
                        return Err(GraphError::AssociativityFailure(format!(
                            "{}.{}.{}",
                            x.id, y.id, z.id
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_count_of_color(&self, color: usize) -> usize {
        self.edges.iter().filter(|e| e.color == color).count()
    }

    pub fn no_sources(&self) -> bool {
        self.no_sources
    }

    /// (vertex, 0-based colour) pairs with no incoming edge of that colour.
    pub fn sources(&self) -> &[(VertexId, usize)] {
        &self.sources
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertices.len()).map(|v| v as VertexId)
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v as usize]
    }

    pub fn vertex_id(&self, name: &str) -> Result<VertexId, GraphError> {
        self.vmap
            .get(name)
            .copied()
            .ok_or_else(|| GraphError::UnknownVertex(name.to_string()))
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e as usize]
    }

    pub fn edge_id(&self, name: &str) -> Result<EdgeId, GraphError> {
        self.emap
            .get(name)
            .copied()
            .ok_or_else(|| GraphError::UnknownEdge(name.to_string()))
    }

    /// Colour-c edges with range v.
    pub fn in_edges(&self, v: VertexId, color: usize) -> &[EdgeId] {
        &self.in_edges[v as usize][color]
    }

    pub fn vertex_path(&self, v: VertexId) -> Path {
        Path {
            rng: v,
            word: Vec::new(),
            degree: Degree::zero(self.k),
        }
    }

    pub fn edge_path(&self, e: EdgeId) -> Path {
        let edge = &self.edges[e as usize];
        Path {
            rng: edge.rng,
            word: vec![e],
            degree: Degree::unit(self.k, edge.color),
        }
    }

    pub fn source(&self, path: &Path) -> VertexId {
        match path.word.last() {
            Some(&e) => self.edges[e as usize].src,
            None => path.rng,
        }
    }

    pub fn range(&self, path: &Path) -> VertexId {
        path.rng
    }

    /// Exchange an adjacent distinct-colour pair using its stored square.
    fn swap_pair(&self, x: EdgeId, y: EdgeId) -> (EdgeId, EdgeId) {
        let cx = self.edges[x as usize].color;
        let cy = self.edges[y as usize].color;
        debug_assert_ne!(cx, cy);
        let table = if cx < cy { &self.inc2dec } else { &self.dec2inc };
        *table
            .get(&(x, y))
            .unwrap_or_else(|| panic!("validated graph is missing a square for a composable pair"))
    }

    /// Restore colour order in a composable word.
    pub fn normalize_word(&self, mut word: Vec<EdgeId>, strategy: SwapStrategy) -> Vec<EdgeId> {
        loop {
            let positions: Vec<usize> = (0..word.len().saturating_sub(1))
                .filter(|&i| {
                    self.edges[word[i] as usize].color > self.edges[word[i + 1] as usize].color
                })
                .collect();
            let i = match strategy {
                SwapStrategy::Leftmost => match positions.first() {
                    Some(&i) => i,
                    None => return word,
                },
                SwapStrategy::Rightmost => match positions.last() {
                    Some(&i) => i,
                    None => return word,
                },
            };
            let (a, b) = self.swap_pair(word[i], word[i + 1]);
            word[i] = a;
            word[i + 1] = b;
        }
    }

    fn path_from_normal_word(&self, rng: VertexId, word: Vec<EdgeId>) -> Path {
        let mut counts = vec![0u32; self.k];
        for &e in &word {
            counts[self.edges[e as usize].color] += 1;
        }
        Path {
            rng,
            word,
            degree: Degree(counts),
        }
    }

    /// Compose two paths (`left` then `right`, with `s(left) = r(right)`).
    pub fn compose(&self, left: &Path, right: &Path) -> Result<Path, GraphError> {
        if self.source(left) != right.rng {
            return Err(GraphError::NotComposable {
                left: self.path_string(left),
                right: self.path_string(right),
            });
        }
        let mut word = left.word.clone();
        word.extend_from_slice(&right.word);
        let word = self.normalize_word(word, SwapStrategy::Leftmost);
        Ok(Path {
            rng: left.rng,
            word,
            degree: left.degree.add(&right.degree),
        })
    }

    /// Factor `path` as `front * rest` with `d(front) = p`.
    fn factor_front(&self, path: &Path, p: &Degree) -> (Path, Path) {
        debug_assert!(p.le(&path.degree));
        let mut rest = path.word.clone();
        let mut front = Vec::new();
        for color in 0..self.k {
            for _ in 0..p.0[color] {
                let mut t = rest
                    .iter()
                    .position(|&e| self.edges[e as usize].color == color)
                    .expect("degree accounting guarantees an edge of each requested colour");
                while t > 0 {
                    let (a, b) = self.swap_pair(rest[t - 1], rest[t]);
                    rest[t - 1] = a;
                    rest[t] = b;
                    t -= 1;
                }
                front.push(rest.remove(0));
            }
        }
        let front_path = Path {
            rng: path.rng,
            word: front,
            degree: p.clone(),
        };
        let rest_rng = self.source(&front_path);
        let rest = self.normalize_word(rest, SwapStrategy::Leftmost);
        let rest_path = self.path_from_normal_word(rest_rng, rest);
        (front_path, rest_path)
    }

    /// The unique middle factor `path(p, q)`.
    pub fn segment(&self, path: &Path, p: &Degree, q: &Degree) -> Result<Path, GraphError> {
        if !(p.le(q) && q.le(&path.degree)) {
            return Err(GraphError::BadRange);
        }
        let (_, tail) = self.factor_front(path, p);
        let (mid, _) = self.factor_front(&tail, &q.sub(p));
        Ok(mid)
    }

    /// All paths with range `v` and degree `n` (the set `v Lambda^n`),
    /// in lexicographic word order.
    pub fn paths_from(&self, v: VertexId, n: &Degree) -> Vec<Path> {
        let mut partial: Vec<(VertexId, Vec<EdgeId>)> = vec![(v, Vec::new())];
        for color in 0..self.k {
            for _ in 0..n.0[color] {
                let mut next = Vec::new();
                for (end, word) in &partial {
                    for &e in &self.in_edges[*end as usize][color] {
                        let mut w = word.clone();
                        w.push(e);
                        next.push((self.edges[e as usize].src, w));
                    }
                }
                partial = next;
            }
        }
        partial
            .into_iter()
            .map(|(_, word)| Path {
                rng: v,
                word,
                degree: n.clone(),
            })
            .collect()
    }

    /// `|v Lambda^n|` without materializing the paths.
    pub fn count_paths_from(&self, v: VertexId, n: &Degree) -> u64 {
        let mut counts = vec![0u64; self.vertices.len()];
        counts[v as usize] = 1;
        for color in 0..self.k {
            for _ in 0..n.0[color] {
                let mut next = vec![0u64; self.vertices.len()];
                for (w, &c) in counts.iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    for &e in &self.in_edges[w][color] {
                        next[self.edges[e as usize].src as usize] += c;
                    }
                }
                counts = next;
            }
        }
        counts.iter().sum()
    }

    /// All paths with source `v` and degree `n` (the set `Lambda^n v`).
    pub fn paths_with_source(&self, v: VertexId, n: &Degree) -> Vec<Path> {
        let mut out = Vec::new();
        for w in self.vertices() {
            for p in self.paths_from(w, n) {
                if self.source(&p) == v {
                    out.push(p);
                }
            }
        }
        out.sort();
        out
    }

    /// Parse a path literal: edge ids joined by `.` in composition order, or
    /// a bare vertex id.
    pub fn parse_path(&self, literal: &str) -> Result<Path, GraphError> {
        let t = literal.trim();
        if let Some(&v) = self.vmap.get(t) {
            return Ok(self.vertex_path(v));
        }
        let mut path: Option<Path> = None;
        for part in t.split('.') {
            let e = self.edge_id(part.trim())?;
            let next = self.edge_path(e);
            path = Some(match path {
                None => next,
                Some(p) => self.compose(&p, &next)?,
            });
        }
        path.ok_or_else(|| GraphError::UnknownEdge(t.to_string()))
    }

    pub fn path_string(&self, path: &Path) -> String {
        if path.word.is_empty() {
            return self.vertices[path.rng as usize].clone();
        }
        path.word
            .iter()
            .map(|&e| self.edges[e as usize].id.as_str())
            .collect::<Vec<_>>()
            .join(".")
    }

    /// Raw description with deterministic ordering; `validate` round-trips.
    pub fn to_doc(&self) -> GraphDoc {
        GraphDoc {
            k: self.k,
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeDoc {
                    id: e.id.clone(),
                    color: e.color + 1,
                    src: self.vertices[e.src as usize].clone(),
                    rng: self.vertices[e.rng as usize].clone(),
                })
                .collect(),
            squares: self
                .squares
                .iter()
                .map(|(lhs, rhs)| SquareDoc {
                    lhs: [
                        self.edges[lhs[0] as usize].id.clone(),
                        self.edges[lhs[1] as usize].id.clone(),
                    ],
                    rhs: [
                        self.edges[rhs[0] as usize].id.clone(),
                        self.edges[rhs[1] as usize].id.clone(),
                    ],
                })
                .collect(),
        }
    }
}

/// Build the k-graph with vertices `{p : p <= m}` and one edge of each
/// colour `i` from `p + e_i` to `p`, together with its unique squares.
pub fn build_omega(k: usize, m: &Degree) -> Result<KGraph, GraphError> {
    if !(1..=3).contains(&k) {
        return Err(GraphError::UnsupportedRank(k));
    }
    assert_eq!(m.k(), k, "degree rank must match k");
    let count: usize = m.0.iter().map(|&c| c as usize + 1).product();
    if count > 10_000 {
        return Err(GraphError::TooLarge(count));
    }
    let name = |p: &Degree| {
        p.0.iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    let letters = ["x", "y", "z"];
    let points = Degree::box_range(&Degree::zero(k), m);
    let vertices: Vec<String> = points.iter().map(&name).collect();
    let mut edges = Vec::new();
    for p in &points {
        for (i, letter) in letters.iter().enumerate().take(k) {
            let q = p.add(&Degree::unit(k, i));
            if q.le(m) {
                edges.push(EdgeDoc {
                    id: format!("{}{}", letter, name(p)),
                    color: i + 1,
                    src: name(&q),
                    rng: name(p),
                });
            }
        }
    }
    let mut squares = Vec::new();
    for p in &points {
        for i in 0..k {
            for j in (i + 1)..k {
                let pi = p.add(&Degree::unit(k, i));
                let pj = p.add(&Degree::unit(k, j));
                if !p.add(&Degree::unit(k, i)).add(&Degree::unit(k, j)).le(m) {
                    continue;
                }
                squares.push(SquareDoc {
                    lhs: [
                        format!("{}{}", letters[i], name(p)),
                        format!("{}{}", letters[j], name(&pi)),
                    ],
                    rhs: [
                        format!("{}{}", letters[j], name(p)),
                        format!("{}{}", letters[i], name(&pj)),
                    ],
                });
            }
        }
    }
    KGraph::validate(&GraphDoc {
        k,
        vertices,
        edges,
        squares,
    })
}

/// The skew map on colour-1 edges of a 2-graph, with orbit orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewOrder {
    /// Blue edge id -> image blue edge id.
    pub f_map: BTreeMap<String, String>,
    /// Blue edge id -> smallest `l > 0` with `F^l(e) = e`, when the orbit
    /// returns to `e`.
    pub orders: BTreeMap<String, Option<u32>>,
}

/// For each colour-1 edge `e`, find the unique colour-2 edge `f` with
/// `s(f) = r(e)` and factor `f e` as `F(e) h`; report `F` and orbit orders.
pub fn skew_order(g: &KGraph) -> Result<SkewOrder, GraphError> {
    if g.k() != 2 {
        return Err(GraphError::NotTwoGraph);
    }
    let blues: Vec<EdgeId> = (0..g.edges().len() as EdgeId)
        .filter(|&e| g.edge(e).color == 0)
        .collect();
    let mut f_map_ids: BTreeMap<EdgeId, EdgeId> = BTreeMap::new();
    for &e in &blues {
        let r = g.edge(e).rng;
        let reds: Vec<EdgeId> = (0..g.edges().len() as EdgeId)
            .filter(|&f| g.edge(f).color == 1 && g.edge(f).src == r)
            .collect();
        if reds.len() != 1 {
            return Err(GraphError::FMapUndefined(g.edge(e).id.clone()));
        }
        let f = reds[0];
        // f.e is a decreasing-colour pair; the square rewrites it blue-first.
        let (blue, _red) = *g
            .dec2inc
            .get(&(f, e))
            .expect("validated graph has a square for every composable pair");
        f_map_ids.insert(e, blue);
    }
    let mut f_map = BTreeMap::new();
    let mut orders = BTreeMap::new();
    for &e in &blues {
        f_map.insert(g.edge(e).id.clone(), g.edge(f_map_ids[&e]).id.clone());
        let mut seen = BTreeSet::new();
        let mut cur = e;
        let mut order = None;
        for step in 1..=blues.len() as u32 {
            cur = f_map_ids[&cur];
            if cur == e {
                order = Some(step);
                break;
            }
            if !seen.insert(cur) {
                break;
            }
        }
        orders.insert(g.edge(e).id.clone(), order);
    }
    Ok(SkewOrder { f_map, orders })
}

impl fmt::Display for KGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}-graph with {} vertices, {} edges",
            self.k,
            self.vertices.len(),
            self.edges.len()
        )
    }
}
