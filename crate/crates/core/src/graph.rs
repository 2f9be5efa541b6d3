//! Simple undirected graphs over ordered integer labels.
//!
//! Vertices are stored sorted by label, so the label order is also the
//! position order used by [`VertexSubset`]. Every neighbour list is sorted
//! the same way.

use std::fmt;
use std::io::BufRead;

use thiserror::Error;

/// Vertex label. The numeric order of labels is the vertex order.
pub type Vertex = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(Vertex),
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertex {0} appears in both graphs")]
    DuplicateVertex(Vertex),
    #[error("vertex subset has universe {got}, graph has {expected} vertices")]
    UniverseMismatch { expected: usize, got: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing \"n m\" header")]
    MissingHeader,
    #[error("header declares {declared} edges, found {found}")]
    EdgeCount { declared: usize, found: usize },
    #[error("header declares {declared} vertices, found {found}")]
    VertexCount { declared: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("read error: {0}")]
    Io(String),
}

/// A set of vertex positions of a host graph, stored as a bit vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSubset {
    universe: usize,
    words: Vec<u64>,
}

impl VertexSubset {
    pub fn empty(universe: usize) -> Self {
        Self {
            universe,
            words: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * 64;
            let bits = (universe - lo).min(64);
            *w = if bits == 64 {
                u64::MAX
            } else {
                (1u64 << bits) - 1
            };
        }
        s
    }

    pub fn from_positions(universe: usize, positions: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(universe);
        for p in positions {
            s.insert(p);
        }
        s
    }

    /// Number of positions the subset ranges over.
    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn contains(&self, pos: usize) -> bool {
        pos < self.universe && self.words[pos / 64] >> (pos % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, pos: usize) {
        assert!(
            pos < self.universe,
            "position {pos} outside universe {}",
            self.universe
        );
        self.words[pos / 64] |= 1 << (pos % 64);
    }

    #[inline]
    pub fn remove(&mut self, pos: usize) {
        if pos < self.universe {
            self.words[pos / 64] &= !(1 << (pos % 64));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        debug_assert_eq!(self.universe, other.universe);
        Self {
            universe: self.universe,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }
}

impl fmt::Debug for VertexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<Vertex>,
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from explicit vertices plus edges; edge endpoints are
    /// added to the vertex set. Duplicate edges collapse.
    pub fn new(
        vertices: impl IntoIterator<Item = Vertex>,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self, GraphError> {
        let edges: Vec<(Vertex, Vertex)> = edges.into_iter().collect();
        let mut labels: Vec<Vertex> = vertices.into_iter().collect();
        for &(u, v) in &edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            labels.push(u);
            labels.push(v);
        }
        labels.sort_unstable();
        labels.dedup();
        let mut adj = vec![Vec::new(); labels.len()];
        for &(u, v) in &edges {
            let a = labels.binary_search(&u).unwrap();
            let b = labels.binary_search(&v).unwrap();
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut edge_count = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            edge_count += list.len();
        }
        Ok(Self {
            labels,
            adj,
            edge_count: edge_count / 2,
        })
    }

    pub fn from_edges(
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self, GraphError> {
        Self::new(std::iter::empty(), edges)
    }

    pub fn empty() -> Self {
        Self {
            labels: Vec::new(),
            adj: Vec::new(),
            edge_count: 0,
        }
    }

    /// Edgeless graph on the given labels.
    pub fn edgeless(vertices: impl IntoIterator<Item = Vertex>) -> Self {
        Self::new(vertices, std::iter::empty()).expect("no edges, no self-loops")
    }

    pub fn complete(vertices: impl IntoIterator<Item = Vertex>) -> Self {
        let vs: Vec<Vertex> = vertices.into_iter().collect();
        let mut edges = Vec::new();
        for (i, &a) in vs.iter().enumerate() {
            for &b in &vs[i + 1..] {
                edges.push((a, b));
            }
        }
        Self::new(vs, edges).expect("complete graph on distinct labels")
    }

    /// Path through the labels in the given order.
    pub fn path(vertices: impl IntoIterator<Item = Vertex>) -> Self {
        let vs: Vec<Vertex> = vertices.into_iter().collect();
        let edges: Vec<_> = vs.windows(2).map(|w| (w[0], w[1])).collect();
        Self::new(vs, edges).expect("path on distinct labels")
    }

    pub fn cycle(vertices: impl IntoIterator<Item = Vertex>) -> Self {
        let vs: Vec<Vertex> = vertices.into_iter().collect();
        let mut edges: Vec<_> = vs.windows(2).map(|w| (w[0], w[1])).collect();
        if vs.len() > 2 {
            edges.push((vs[vs.len() - 1], vs[0]));
        }
        Self::new(vs, edges).expect("cycle on distinct labels")
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn size(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Vertex labels in increasing order.
    pub fn labels(&self) -> &[Vertex] {
        &self.labels
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.position(v).is_some()
    }

    /// Rank of `v` in the label order.
    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.labels.binary_search(&v).ok()
    }

    pub fn label(&self, pos: usize) -> Vertex {
        self.labels[pos]
    }

    pub(crate) fn require(&self, v: Vertex) -> Result<usize, GraphError> {
        self.position(v).ok_or(GraphError::UnknownVertex(v))
    }

    /// Neighbour positions of the vertex at `pos`, increasing.
    pub fn neighbor_positions(&self, pos: usize) -> &[usize] {
        &self.adj[pos]
    }

    pub fn neighbors(&self, v: Vertex) -> Result<impl Iterator<Item = Vertex> + '_, GraphError> {
        let p = self.require(v)?;
        Ok(self.adj[p].iter().map(|&q| self.labels[q]))
    }

    pub fn degree(&self, v: Vertex) -> Result<usize, GraphError> {
        Ok(self.adj[self.require(v)?].len())
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        match (self.position(u), self.position(v)) {
            (Some(a), Some(b)) => self.adj[a].binary_search(&b).is_ok(),
            _ => false,
        }
    }

    pub(crate) fn has_edge_pos(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj.iter().enumerate().flat_map(move |(a, list)| {
            list.iter()
                .filter(move |&&b| b > a)
                .map(move |&b| (self.labels[a], self.labels[b]))
        })
    }

    pub fn full_subset(&self) -> VertexSubset {
        VertexSubset::full(self.order())
    }

    /// Subset of this graph holding the given labels.
    pub fn subset(
        &self,
        vertices: impl IntoIterator<Item = Vertex>,
    ) -> Result<VertexSubset, GraphError> {
        let mut s = VertexSubset::empty(self.order());
        for v in vertices {
            s.insert(self.require(v)?);
        }
        Ok(s)
    }

    pub fn subset_labels(&self, s: &VertexSubset) -> Vec<Vertex> {
        s.iter().map(|p| self.labels[p]).collect()
    }

    fn check_universe(&self, s: &VertexSubset) -> Result<(), GraphError> {
        if s.universe() != self.order() {
            return Err(GraphError::UniverseMismatch {
                expected: self.order(),
                got: s.universe(),
            });
        }
        Ok(())
    }

    /// `G[S]`: labels and their order are inherited.
    pub fn induced_subgraph(&self, s: &VertexSubset) -> Result<Graph, GraphError> {
        self.check_universe(s)?;
        let old: Vec<usize> = s.iter().collect();
        let mut remap = vec![usize::MAX; self.order()];
        for (new, &o) in old.iter().enumerate() {
            remap[o] = new;
        }
        let mut edge_count = 0;
        let adj: Vec<Vec<usize>> = old
            .iter()
            .map(|&o| {
                let list: Vec<usize> = self.adj[o]
                    .iter()
                    .filter(|&&q| remap[q] != usize::MAX)
                    .map(|&q| remap[q])
                    .collect();
                edge_count += list.len();
                list
            })
            .collect();
        Ok(Graph {
            labels: old.iter().map(|&o| self.labels[o]).collect(),
            adj,
            edge_count: edge_count / 2,
        })
    }

    /// `G[S]` for a label set.
    pub fn induced_on(
        &self,
        vertices: impl IntoIterator<Item = Vertex>,
    ) -> Result<Graph, GraphError> {
        self.induced_subgraph(&self.subset(vertices)?)
    }

    /// `G - S`.
    pub fn remove_vertices(
        &self,
        vertices: impl IntoIterator<Item = Vertex>,
    ) -> Result<Graph, GraphError> {
        let s = self.subset(vertices)?;
        self.induced_subgraph(&self.full_subset().difference(&s))
    }

    /// `G - v`.
    pub fn remove_vertex(&self, v: Vertex) -> Result<Graph, GraphError> {
        self.remove_vertices([v])
    }

    pub fn open_neighborhood(&self, v: Vertex) -> Result<VertexSubset, GraphError> {
        let p = self.require(v)?;
        Ok(VertexSubset::from_positions(
            self.order(),
            self.adj[p].iter().copied(),
        ))
    }

    /// `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: Vertex) -> Result<VertexSubset, GraphError> {
        let mut s = self.open_neighborhood(v)?;
        s.insert(self.require(v)?);
        Ok(s)
    }

    /// Connected components ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSubset> {
        self.components_within(&self.full_subset())
    }

    /// Components of `G[within]`, ordered by smallest member.
    pub fn components_within(&self, within: &VertexSubset) -> Vec<VertexSubset> {
        let mut seen = VertexSubset::empty(self.order());
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for start in within.iter() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSubset::empty(self.order());
            seen.insert(start);
            stack.push(start);
            while let Some(a) = stack.pop() {
                comp.insert(a);
                for &b in &self.adj[a] {
                    if within.contains(b) && !seen.contains(b) {
                        seen.insert(b);
                        stack.push(b);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Acyclic, possibly disconnected.
    pub fn is_forest(&self) -> bool {
        self.size() + self.connected_components().len() == self.order()
    }

    pub fn is_tree(&self) -> bool {
        !self.is_empty() && self.is_connected() && self.size() + 1 == self.order()
    }

    /// True iff no induced `K_{1,3}`: every triple of neighbours of every
    /// vertex spans at least one edge.
    pub fn is_claw_free(&self) -> bool {
        for list in &self.adj {
            for (i, &a) in list.iter().enumerate() {
                for (j, &b) in list.iter().enumerate().skip(i + 1) {
                    if self.has_edge_pos(a, b) {
                        continue;
                    }
                    for &c in &list[j + 1..] {
                        if !self.has_edge_pos(a, c) && !self.has_edge_pos(b, c) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Same graph with every label shifted by `offset`.
    pub fn relabeled(&self, offset: Vertex) -> Graph {
        Graph {
            labels: self.labels.iter().map(|&v| v + offset).collect(),
            adj: self.adj.clone(),
            edge_count: self.edge_count,
        }
    }

    /// Union of two graphs on disjoint label sets.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        if let Some(&v) = other.labels.iter().find(|&&v| self.contains(v)) {
            return Err(GraphError::DuplicateVertex(v));
        }
        Graph::new(
            self.labels.iter().chain(&other.labels).copied(),
            self.edges().chain(other.edges()),
        )
    }

    /// Reads the line-oriented edge-list format: a `n m` header, `m` lines
    /// `u v`, and optional `v x` lines declaring vertex `x`. `#` starts a
    /// comment.
    pub fn read_edge_list(reader: impl BufRead) -> Result<Graph, ParseError> {
        let mut header: Option<(usize, usize)> = None;
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        for (i, line) in reader.lines().enumerate() {
            let line = line.map_err(|e| ParseError::Io(e.to_string()))?;
            let lineno = i + 1;
            let body = line.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let toks: Vec<&str> = body.split_whitespace().collect();
            let syntax = |msg: &str| ParseError::Syntax {
                line: lineno,
                msg: msg.to_string(),
            };
            if toks.len() != 2 {
                return Err(syntax("expected two fields"));
            }
            if toks[0] == "v" {
                let v: Vertex = toks[1].parse().map_err(|_| syntax("bad vertex label"))?;
                vertices.push(v);
                continue;
            }
            let a: usize = toks[0]
                .parse()
                .map_err(|_| syntax("expected non-negative integer"))?;
            let b: usize = toks[1]
                .parse()
                .map_err(|_| syntax("expected non-negative integer"))?;
            if header.is_none() {
                header = Some((a, b));
                continue;
            }
            let to_label =
                |x: usize| Vertex::try_from(x).map_err(|_| syntax("vertex label too large"));
            edges.push((to_label(a)?, to_label(b)?));
        }
        let (n, m) = header.ok_or(ParseError::MissingHeader)?;
        if edges.len() != m {
            return Err(ParseError::EdgeCount {
                declared: m,
                found: edges.len(),
            });
        }
        let g = Graph::new(vertices, edges)?;
        if g.order() != n {
            return Err(ParseError::VertexCount {
                declared: n,
                found: g.order(),
            });
        }
        Ok(g)
    }

    pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
        Self::read_edge_list(text.as_bytes())
    }

    /// Writes the edge-list format. Isolated vertices get `v` lines.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.order(), self.size());
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        for (p, list) in self.adj.iter().enumerate() {
            if list.is_empty() {
                s.push_str(&format!("v {}\n", self.labels[p]));
            }
        }
        s
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.labels)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
