//! Rooted trees whose nodes are paths of a host graph.

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TreeError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("graph is not a tree")]
    NotATree,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Node {
    path: Vec<Vertex>,
    parent: Option<usize>,
    children: Vec<usize>,
}

/// Node `0` is the root and holds the length-0 path `(u)`. Every other
/// node's path extends its parent's by one vertex, and parents always have
/// smaller indices than their children.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    nodes: Vec<Node>,
}

impl RootedTree {
    pub fn new(root: Vertex) -> Self {
        Self {
            nodes: vec![Node {
                path: vec![root],
                parent: None,
                children: Vec::new(),
            }],
        }
    }

    /// Appends a child whose path is the parent's path followed by `v`.
    pub fn push_child(&mut self, parent: usize, v: Vertex) -> usize {
        let mut path = self.nodes[parent].path.clone();
        path.push(v);
        let id = self.nodes.len();
        self.nodes.push(Node {
            path,
            parent: Some(parent),
            children: Vec::new(),
        });
        self.nodes[parent].children.push(id);
        id
    }

    /// The tree of all paths from `root` in a tree-shaped graph, children in
    /// label order.
    pub fn from_tree_graph(g: &Graph, root: Vertex) -> Result<Self, TreeError> {
        let start = g.position(root).ok_or(GraphError::UnknownVertex(root))?;
        if !g.is_tree() {
            return Err(TreeError::NotATree);
        }
        let mut t = Self::new(root);
        let mut queue = std::collections::VecDeque::from([(0usize, start, usize::MAX)]);
        while let Some((node, pos, from)) = queue.pop_front() {
            for &w in g.neighbor_positions(pos) {
                if w != from {
                    let child = t.push_child(node, g.label(w));
                    queue.push_back((child, w, pos));
                }
            }
        }
        Ok(t)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    /// Always false: a tree has at least its root.
    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn root_vertex(&self) -> Vertex {
        self.nodes[0].path[0]
    }

    pub fn path(&self, node: usize) -> &[Vertex] {
        &self.nodes[node].path
    }

    /// Display label of a node: the last vertex of its path.
    pub fn endpoint(&self, node: usize) -> Vertex {
        *self.nodes[node].path.last().expect("paths are nonempty")
    }

    pub fn parent(&self, node: usize) -> Option<usize> {
        self.nodes[node].parent
    }

    pub fn children(&self, node: usize) -> &[usize] {
        &self.nodes[node].children
    }

    pub fn paths(&self) -> impl Iterator<Item = &[Vertex]> + '_ {
        self.nodes.iter().map(|n| n.path.as_slice())
    }

    /// Node holding exactly `path`, found by walking down from the root.
    pub fn find(&self, path: &[Vertex]) -> Option<usize> {
        let (&first, rest) = path.split_first()?;
        if first != self.root_vertex() {
            return None;
        }
        let mut node = 0;
        for &v in rest {
            node = *self.nodes[node]
                .children
                .iter()
                .find(|&&c| self.endpoint(c) == v)?;
        }
        Some(node)
    }

    /// Parent-child edges as node-index pairs.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.nodes
            .iter()
            .enumerate()
            .filter_map(|(i, n)| n.parent.map(|p| (p, i)))
    }

    /// The tree as a plain graph, node `i` labelled `i`.
    pub fn to_graph(&self) -> Graph {
        let vertices = 0..self.len() as Vertex;
        let edges = self.edges().map(|(a, b)| (a as Vertex, b as Vertex));
        Graph::new(vertices, edges).expect("tree edges join distinct nodes")
    }

    fn path_id(&self, node: usize) -> String {
        let parts: Vec<String> = self.nodes[node]
            .path
            .iter()
            .map(|v| v.to_string())
            .collect();
        parts.join("-")
    }

    /// Graphviz rendering; node ids are the paths, labels the endpoints.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph T {\n");
        for i in 0..self.len() {
            writeln!(
                out,
                "  \"{}\" [label=\"{}\"];",
                self.path_id(i),
                self.endpoint(i)
            )
            .unwrap();
        }
        for (p, c) in self.edges() {
            writeln!(out, "  \"{}\" -- \"{}\";", self.path_id(p), self.path_id(c)).unwrap();
        }
        out.push_str("}\n");
        out
    }

    /// Canonical id of the shape of the whole tree, leaves first: each
    /// node's id interns the sorted ids of its children.
    fn canonical_id(&self, interner: &mut HashMap<Vec<u32>, u32>) -> u32 {
        let mut ids = vec![0u32; self.len()];
        for i in (0..self.len()).rev() {
            let mut key: Vec<u32> = self.nodes[i].children.iter().map(|&c| ids[c]).collect();
            key.sort_unstable();
            let next = interner.len() as u32;
            ids[i] = *interner.entry(key).or_insert(next);
        }
        ids[0]
    }
}

/// Rooted-tree isomorphism by shared canonical encoding.
pub fn tree_isomorphic(a: &RootedTree, b: &RootedTree) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut interner = HashMap::new();
    a.canonical_id(&mut interner) == b.canonical_id(&mut interner)
}

/// Some root of the tree-shaped graph `g` under which it is rooted-isomorphic
/// to `t`, preferring `preferred` when given.
pub fn isomorphic_rooting(t: &RootedTree, g: &Graph, preferred: Option<Vertex>) -> Option<Vertex> {
    if g.order() != t.len() || !g.is_tree() {
        return None;
    }
    let mut interner = HashMap::new();
    let target = t.canonical_id(&mut interner);
    let candidates = preferred
        .into_iter()
        .chain(g.labels().iter().copied().filter(|&v| Some(v) != preferred));
    for r in candidates {
        let Ok(rooted) = RootedTree::from_tree_graph(g, r) else {
            continue;
        };
        if rooted.canonical_id(&mut interner) == target {
            return Some(r);
        }
    }
    None
}
