//! Trees of stable paths, the DFS spanning tree that selects a subset of
//! their nodes, and the identities tying both to `I(G)`.

use std::collections::{BTreeMap, HashMap, VecDeque};

use rand::seq::SliceRandom;
use rand::Rng;
use thiserror::Error;

use crate::graph::{Graph, GraphError, Vertex, VertexSubset};
use crate::independence::independence_polynomial;
use crate::poly::{Poly, PolyError};
use crate::tree::RootedTree;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StablePathError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("invalid deep decision: {0}")]
    InvalidDecision(String),
    #[error("graph is not connected")]
    Disconnected,
    /// An identity that must hold by construction failed; this is a bug.
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

/// Integer ranks for the edges of a graph. Only the relative order of the
/// edges at each vertex matters.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EdgeLabeling {
    ranks: HashMap<(Vertex, Vertex), i64>,
}

fn edge_key(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    (u.min(v), u.max(v))
}

impl EdgeLabeling {
    pub fn from_ranks(ranks: impl IntoIterator<Item = ((Vertex, Vertex), i64)>) -> Self {
        Self {
            ranks: ranks
                .into_iter()
                .map(|((u, v), r)| (edge_key(u, v), r))
                .collect(),
        }
    }

    /// Rank `i` for the `i`-th edge of `order`.
    pub fn from_order(order: &[(Vertex, Vertex)]) -> Self {
        Self::from_ranks(order.iter().enumerate().map(|(i, &e)| (e, i as i64)))
    }

    /// Edges ranked in lexicographic order of `(min, max)` endpoints.
    pub fn lexicographic(g: &Graph) -> Self {
        Self::from_order(&g.edges().collect::<Vec<_>>())
    }

    pub fn reverse_lexicographic(g: &Graph) -> Self {
        let mut order: Vec<_> = g.edges().collect();
        order.reverse();
        Self::from_order(&order)
    }

    pub fn shuffled(g: &Graph, rng: &mut impl Rng) -> Self {
        let mut order: Vec<_> = g.edges().collect();
        order.shuffle(rng);
        Self::from_order(&order)
    }

    pub fn rank(&self, u: Vertex, v: Vertex) -> Option<i64> {
        self.ranks.get(&edge_key(u, v)).copied()
    }
}

/// Ranks the one-step extensions of a path. The rank of extending `P` by
/// `w` must differ for distinct `w`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum DeepDecision {
    /// Extension by `w` has rank `w`: the vertex order of the labels.
    #[default]
    LabelOrder,
    /// Extension of a path ending at `v` by `w` has the rank of edge `vw`.
    EdgeLabel(EdgeLabeling),
}

impl DeepDecision {
    /// Rank of extending `path` by `w`. Callers validate first, so a missing
    /// edge rank is a bug.
    pub fn rank(&self, path: &[Vertex], w: Vertex) -> i64 {
        match self {
            DeepDecision::LabelOrder => i64::from(w),
            DeepDecision::EdgeLabel(l) => {
                let v = *path.last().expect("paths are nonempty");
                l.rank(v, w).expect("validated labeling covers every edge")
            }
        }
    }

    /// Every edge of `g` is ranked, and the edges at each vertex get
    /// distinct ranks.
    pub fn validate(&self, g: &Graph) -> Result<(), StablePathError> {
        let DeepDecision::EdgeLabel(l) = self else {
            return Ok(());
        };
        for pos in 0..g.order() {
            let v = g.label(pos);
            let mut seen = HashMap::new();
            for &q in g.neighbor_positions(pos) {
                let w = g.label(q);
                let r = l.rank(v, w).ok_or_else(|| {
                    StablePathError::InvalidDecision(format!("edge {v}-{w} has no rank"))
                })?;
                if let Some(other) = seen.insert(r, w) {
                    return Err(StablePathError::InvalidDecision(format!(
                        "edges {v}-{other} and {v}-{w} share rank {r}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// The ordered stable-path tree: the `i`-th child of the root is the tree
/// of `G - {u, u_1, ..., u_(i-1)}` rooted at `u_i`, neighbours taken in
/// label order.
pub fn stable_path_tree(g: &Graph, u: Vertex) -> Result<RootedTree, StablePathError> {
    let start = g.require(u)?;
    let mut tree = RootedTree::new(u);
    let mut stack = vec![(0usize, start, g.full_subset())];
    while let Some((node, pos, mut allowed)) = stack.pop() {
        allowed.remove(pos);
        let mut frames = Vec::new();
        for &w in g.neighbor_positions(pos) {
            if allowed.contains(w) {
                let child = tree.push_child(node, g.label(w));
                frames.push((child, w, allowed.clone()));
                allowed.remove(w);
            }
        }
        stack.extend(frames.into_iter().rev());
    }
    Ok(tree)
}

fn stable_extension(g: &Graph, sigma: &DeepDecision, path: &[Vertex], w: Vertex) -> bool {
    let k = path.len() - 1;
    (0..k).all(|i| {
        !g.has_edge(path[i], w) || sigma.rank(&path[..=i], path[i + 1]) < sigma.rank(&path[..=i], w)
    })
}

/// True iff `path` is a path of `g` and no earlier vertex of it has an edge
/// to a later, non-consecutive vertex that it ranks below the edge the path
/// actually takes.
pub fn is_sigma_stable(
    g: &Graph,
    path: &[Vertex],
    sigma: &DeepDecision,
) -> Result<bool, StablePathError> {
    sigma.validate(g)?;
    for &v in path {
        g.require(v)?;
    }
    for (j, &v) in path.iter().enumerate() {
        if path[..j].contains(&v) || (j > 0 && !g.has_edge(path[j - 1], v)) {
            return Ok(false);
        }
    }
    Ok((2..path.len()).all(|j| stable_extension(g, sigma, &path[..j], path[j])))
}

/// The tree of all `sigma`-stable paths from `u`, built breadth first by
/// one-step extensions; children are ordered by rank.
pub fn sigma_stable_path_tree(
    g: &Graph,
    u: Vertex,
    sigma: &DeepDecision,
) -> Result<RootedTree, StablePathError> {
    g.require(u)?;
    sigma.validate(g)?;
    let mut tree = RootedTree::new(u);
    let mut queue = VecDeque::from([0usize]);
    while let Some(node) = queue.pop_front() {
        let path = tree.path(node).to_vec();
        let last = *path.last().expect("paths are nonempty");
        let mut next: Vec<(i64, Vertex)> = g
            .neighbors(last)?
            .filter(|w| !path.contains(w) && stable_extension(g, sigma, &path, *w))
            .map(|w| (sigma.rank(&path, w), w))
            .collect();
        next.sort_unstable();
        for (_, w) in next {
            queue.push_back(tree.push_child(node, w));
        }
    }
    Ok(tree)
}

/// The ordered tree for the label order, otherwise the generalized one.
pub fn tree_for(g: &Graph, u: Vertex, sigma: &DeepDecision) -> Result<RootedTree, StablePathError> {
    match sigma {
        DeepDecision::LabelOrder => stable_path_tree(g, u),
        DeepDecision::EdgeLabel(_) => sigma_stable_path_tree(g, u, sigma),
    }
}

/// Spanning tree of the component of `u`: each component of `G - u` is
/// entered through its lowest-ranked neighbour of `u`, recursively.
pub fn sigma_dfs_tree(
    g: &Graph,
    u: Vertex,
    sigma: &DeepDecision,
) -> Result<RootedTree, StablePathError> {
    let start = g.require(u)?;
    sigma.validate(g)?;
    let component = g
        .connected_components()
        .into_iter()
        .find(|c| c.contains(start))
        .expect("every vertex lies in a component");
    let mut tree = RootedTree::new(u);
    let mut stack = vec![(0usize, start, component)];
    while let Some((node, pos, mut set)) = stack.pop() {
        set.remove(pos);
        let path = tree.path(node).to_vec();
        let mut entries: Vec<(i64, usize, VertexSubset)> = g
            .components_within(&set)
            .into_iter()
            .map(|comp| {
                g.neighbor_positions(pos)
                    .iter()
                    .filter(|&&w| comp.contains(w))
                    .map(|&w| (sigma.rank(&path, g.label(w)), w))
                    .min()
                    .map(|(r, w)| (r, w, comp))
                    .expect("u has a neighbour in each component of its component minus u")
            })
            .collect();
        entries.sort_by_key(|&(r, w, _)| (r, w));
        let frames: Vec<_> = entries
            .into_iter()
            .map(|(_, w, comp)| (tree.push_child(node, g.label(w)), w, comp))
            .collect();
        stack.extend(frames.into_iter().rev());
    }
    Ok(tree)
}

/// One induced subgraph of the host graph and how often it occurs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub vertices: VertexSubset,
    pub multiplicity: usize,
}

/// Induced subgraphs whose independence polynomials, multiplied with
/// `I(G)`, give the polynomial of the stable-path tree.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FactorList {
    pub factors: Vec<Factor>,
}

impl FactorList {
    /// `prod I(G[S])^m` over the factors.
    pub fn product(&self, g: &Graph) -> Result<Poly, StablePathError> {
        let mut out = Poly::one();
        for f in &self.factors {
            let p = independence_polynomial(&g.induced_subgraph(&f.vertices)?);
            out = &out * &p.pow(f.multiplicity as u32);
        }
        Ok(out)
    }

    /// Total number of factors counted with multiplicity.
    pub fn total(&self) -> usize {
        self.factors.iter().map(|f| f.multiplicity).sum()
    }
}

/// Unfolds the tree construction: at each step with neighbours
/// `u_1, ..., u_d` in rank order, `G^i_0` is the component of
/// `G - {u, u_1, ..., u_(i-1)}` holding `u_i`; it is recorded unless `u_i`
/// is the first neighbour in its component of `G - u`, and the unfolding
/// continues inside every `G^i_0`.
pub fn factor_decomposition(
    g: &Graph,
    u: Vertex,
    sigma: &DeepDecision,
) -> Result<FactorList, StablePathError> {
    let start = g.require(u)?;
    sigma.validate(g)?;
    if !g.is_connected() {
        return Err(StablePathError::Disconnected);
    }
    let mut counts: BTreeMap<Vec<Vertex>, (VertexSubset, usize)> = BTreeMap::new();
    let mut stack = vec![(vec![u], start, g.full_subset())];
    while let Some((path, pos, set)) = stack.pop() {
        let mut rest = set;
        rest.remove(pos);
        let home: Vec<VertexSubset> = g.components_within(&rest);
        let mut nbrs: Vec<(i64, usize)> = g
            .neighbor_positions(pos)
            .iter()
            .filter(|&&w| rest.contains(w))
            .map(|&w| (sigma.rank(&path, g.label(w)), w))
            .collect();
        nbrs.sort_unstable();
        let mut entered = vec![false; home.len()];
        let mut remaining = rest;
        for (_, w) in nbrs {
            let comp = g
                .components_within(&remaining)
                .into_iter()
                .find(|c| c.contains(w))
                .expect("w is still present");
            let h = home
                .iter()
                .position(|c| c.contains(w))
                .expect("w lies in G - u");
            if entered[h] {
                let key = g.subset_labels(&comp);
                counts.entry(key).or_insert_with(|| (comp.clone(), 0)).1 += 1;
            }
            entered[h] = true;
            let mut next = path.clone();
            next.push(g.label(w));
            stack.push((next, w, comp));
            remaining.remove(w);
        }
    }
    Ok(FactorList {
        factors: counts
            .into_values()
            .map(|(vertices, multiplicity)| Factor {
                vertices,
                multiplicity,
            })
            .collect(),
    })
}

fn independence_of_tree(t: &RootedTree) -> Poly {
    independence_polynomial(&t.to_graph())
}

/// `I(G)` recovered from the tree alone as `I(T) / I(T - F)`, where `F`
/// is the set of tree nodes that are root paths of the DFS spanning tree.
pub fn reconstruct_from_tree(
    g: &Graph,
    u: Vertex,
    sigma: &DeepDecision,
) -> Result<Poly, StablePathError> {
    g.require(u)?;
    if !g.is_connected() {
        return Err(StablePathError::Disconnected);
    }
    let t = tree_for(g, u, sigma)?;
    let f = sigma_dfs_tree(g, u, sigma)?;
    let mut marked = Vec::with_capacity(f.len());
    for path in f.paths() {
        let node = t.find(path).ok_or_else(|| {
            StablePathError::Inconsistent(format!("DFS path {path:?} is not a stable path"))
        })?;
        marked.push(node as Vertex);
    }
    let tg = t.to_graph();
    let pruned = tg.remove_vertices(marked)?;
    independence_polynomial(&tg)
        .exact_div(&independence_polynomial(&pruned))
        .map_err(|e| StablePathError::Inconsistent(format!("I(T) / I(T - F): {e}")))
}

/// `I(G - u) I(T) == I(G) I(T - root)`, the cross-multiplied ratio
/// identity.
pub fn verify_ratio_identity(
    g: &Graph,
    u: Vertex,
    sigma: &DeepDecision,
) -> Result<bool, StablePathError> {
    let t = tree_for(g, u, sigma)?;
    let tg = t.to_graph();
    let lhs = &independence_polynomial(&g.remove_vertex(u)?) * &independence_polynomial(&tg);
    let rhs = &independence_polynomial(g) * &independence_polynomial(&tg.remove_vertex(0)?);
    Ok(lhs == rhs)
}

/// `I(T) / I(G)` for connected `g`.
pub fn tree_quotient(
    g: &Graph,
    u: Vertex,
    sigma: &DeepDecision,
) -> Result<Result<Poly, PolyError>, StablePathError> {
    g.require(u)?;
    if !g.is_connected() {
        return Err(StablePathError::Disconnected);
    }
    let t = tree_for(g, u, sigma)?;
    Ok(independence_of_tree(&t).exact_div(&independence_polynomial(g)))
}

/// Whether `I(G)` divides `I(T)` exactly.
pub fn divides_tree_polynomial(
    g: &Graph,
    u: Vertex,
    sigma: &DeepDecision,
) -> Result<bool, StablePathError> {
    Ok(tree_quotient(g, u, sigma)?.is_ok())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::tree_isomorphic;

    fn house() -> Graph {
        Graph::from_edges([(1, 2), (1, 3), (1, 5), (2, 4), (2, 5), (3, 4)]).unwrap()
    }

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64s(c)
    }

    fn sorted_paths(t: &RootedTree) -> Vec<Vec<Vertex>> {
        let mut v: Vec<Vec<Vertex>> = t.paths().map(<[Vertex]>::to_vec).collect();
        v.sort();
        v
    }

    #[test]
    fn house_tree_matches_figure() {
        let t = stable_path_tree(&house(), 1).unwrap();
        assert_eq!(t.len(), 8);
        let expected: Vec<Vec<Vertex>> = vec![
            vec![1],
            vec![1, 2],
            vec![1, 2, 4],
            vec![1, 2, 4, 3],
            vec![1, 2, 5],
            vec![1, 3],
            vec![1, 3, 4],
            vec![1, 5],
        ];
        assert_eq!(sorted_paths(&t), expected);
        let children: Vec<Vertex> = t.children(0).iter().map(|&c| t.endpoint(c)).collect();
        assert_eq!(children, vec![2, 3, 5]);
        let s = sigma_stable_path_tree(&house(), 1, &DeepDecision::LabelOrder).unwrap();
        assert_eq!(sorted_paths(&s), expected);
        assert_eq!(independence_of_tree(&t), &p(&[1, 5, 4]) * &p(&[1, 3, 2]));
    }

    #[test]
    fn single_vertex_and_edge() {
        let k1 = Graph::edgeless([7]);
        assert_eq!(stable_path_tree(&k1, 7).unwrap().len(), 1);
        assert_eq!(
            factor_decomposition(&k1, 7, &DeepDecision::LabelOrder)
                .unwrap()
                .total(),
            0
        );
        assert_eq!(
            reconstruct_from_tree(&k1, 7, &DeepDecision::LabelOrder).unwrap(),
            p(&[1, 1])
        );
        assert!(verify_ratio_identity(&k1, 7, &DeepDecision::LabelOrder).unwrap());
        let k2 = Graph::complete([1, 2]);
        assert_eq!(
            factor_decomposition(&k2, 1, &DeepDecision::LabelOrder)
                .unwrap()
                .total(),
            0
        );
        assert!(divides_tree_polynomial(&k2, 1, &DeepDecision::LabelOrder).unwrap());
        assert!(stable_path_tree(&k1, 3).is_err());
    }

    #[test]
    fn house_dfs_and_factors() {
        let g = house();
        let f = sigma_dfs_tree(&g, 1, &DeepDecision::LabelOrder).unwrap();
        let mut edges: Vec<(Vertex, Vertex)> = f
            .edges()
            .map(|(a, b)| {
                let (x, y) = (f.endpoint(a), f.endpoint(b));
                (x.min(y), x.max(y))
            })
            .collect();
        edges.sort();
        assert_eq!(edges, vec![(1, 2), (2, 4), (2, 5), (3, 4)]);

        let factors = factor_decomposition(&g, 1, &DeepDecision::LabelOrder).unwrap();
        let sets: Vec<Vec<Vertex>> = factors
            .factors
            .iter()
            .map(|f| g.subset_labels(&f.vertices))
            .collect();
        assert_eq!(sets, vec![vec![3, 4], vec![5]]);
        assert_eq!(factors.product(&g).unwrap(), &p(&[1, 2]) * &p(&[1, 1]));
        assert_eq!(
            tree_quotient(&g, 1, &DeepDecision::LabelOrder)
                .unwrap()
                .unwrap(),
            p(&[1, 3, 2])
        );
        assert_eq!(
            reconstruct_from_tree(&g, 1, &DeepDecision::LabelOrder).unwrap(),
            p(&[1, 5, 4])
        );
        assert!(verify_ratio_identity(&g, 1, &DeepDecision::LabelOrder).unwrap());
    }

    #[test]
    fn triangle_dfs_is_a_path() {
        let f = sigma_dfs_tree(&Graph::complete([1, 2, 3]), 1, &DeepDecision::LabelOrder).unwrap();
        assert_eq!(f.len(), 3);
        assert_eq!(f.path(2), &[1, 2, 3]);
    }

    #[test]
    fn cycle_reconstruction() {
        let c5 = Graph::cycle(1..=5);
        assert_eq!(
            reconstruct_from_tree(&c5, 1, &DeepDecision::LabelOrder).unwrap(),
            p(&[1, 5, 5])
        );
    }

    #[test]
    fn edge_labels_on_a_path_and_the_house() {
        let path = Graph::path(1..=6);
        let sigma = DeepDecision::EdgeLabel(EdgeLabeling::reverse_lexicographic(&path));
        let t = sigma_stable_path_tree(&path, 1, &sigma).unwrap();
        let as_tree = RootedTree::from_tree_graph(&path, 1).unwrap();
        assert!(tree_isomorphic(&t, &as_tree));
        assert_eq!(sorted_paths(&t), sorted_paths(&as_tree));

        let g = house();
        let sigma = DeepDecision::EdgeLabel(EdgeLabeling::lexicographic(&g));
        let t = sigma_stable_path_tree(&g, 1, &sigma).unwrap();
        assert!(t.len() <= 13);
        assert!(verify_ratio_identity(&g, 1, &sigma).unwrap());
    }

    #[test]
    fn invalid_decisions() {
        let g = house();
        let missing = DeepDecision::EdgeLabel(EdgeLabeling::from_order(&[(1, 2)]));
        assert!(matches!(
            sigma_stable_path_tree(&g, 1, &missing),
            Err(StablePathError::InvalidDecision(_))
        ));
        let clash = DeepDecision::EdgeLabel(EdgeLabeling::from_ranks(g.edges().map(|e| (e, 0))));
        assert!(matches!(
            clash.validate(&g),
            Err(StablePathError::InvalidDecision(_))
        ));
    }

    #[test]
    fn disconnected_inputs() {
        let g = Graph::from_edges([(1, 2), (3, 4)]).unwrap();
        assert_eq!(
            factor_decomposition(&g, 1, &DeepDecision::LabelOrder),
            Err(StablePathError::Disconnected)
        );
        assert_eq!(
            sigma_dfs_tree(&g, 1, &DeepDecision::LabelOrder)
                .unwrap()
                .len(),
            2
        );
    }

    #[test]
    fn stability_predicate() {
        let g = house();
        let s = DeepDecision::LabelOrder;
        assert!(is_sigma_stable(&g, &[1, 2, 4, 3], &s).unwrap());
        // 1 prefers 3 over 5, so leaving 1 through 5 and reaching 3 later is unstable
        assert!(!is_sigma_stable(&g, &[1, 5, 2, 4, 3], &s).unwrap());
        assert!(!is_sigma_stable(&g, &[1, 4], &s).unwrap());
        assert!(!is_sigma_stable(&g, &[1, 2, 1], &s).unwrap());
    }
}
