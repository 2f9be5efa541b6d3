//! Independent oracles shared by the integration tests. Nothing here calls
//! the construction code under test.

#![allow(dead_code)]

use std::collections::BTreeSet;

use proptest::prelude::*;
use sptree::stable_path::{DeepDecision, EdgeLabeling};
use sptree::{Graph, Poly, Vertex};

/// Graph on labels `0..n` with the edges selected by `mask` over the pairs
/// in lexicographic order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if bit < 64 && mask >> bit & 1 == 1 {
                edges.push((i as Vertex, j as Vertex));
            }
            bit += 1;
        }
    }
    Graph::new(0..n as Vertex, edges).unwrap()
}

/// Arbitrary graphs on at most `max_n` vertices.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>()).prop_map(|(n, mask)| graph_from_mask(n, mask))
}

/// Counts independent sets by size over every subset, reading adjacency
/// through `has_edge` only.
pub fn count_independent_sets(g: &Graph) -> Poly {
    let labels = g.labels().to_vec();
    let n = labels.len();
    assert!(n <= 20);
    let mut counts = vec![0i64; n + 1];
    for mask in 0u32..(1 << n) {
        let members: Vec<Vertex> = (0..n)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| labels[i])
            .collect();
        let ok = members
            .iter()
            .enumerate()
            .all(|(i, &a)| members[i + 1..].iter().all(|&b| !g.has_edge(a, b)));
        if ok {
            counts[members.len()] += 1;
        }
    }
    Poly::from_i64s(&counts)
}

fn rank(sigma: &DeepDecision, path: &[Vertex], w: Vertex) -> i64 {
    match sigma {
        DeepDecision::LabelOrder => w as i64,
        DeepDecision::EdgeLabel(l) => l.rank(*path.last().unwrap(), w).unwrap(),
    }
}

/// The stability predicate written out directly: for `i + 1 < j`, an edge
/// `v_i v_j` must rank above the edge `v_i v_(i+1)` at the prefix ending
/// in `v_i`.
pub fn stable_by_definition(g: &Graph, path: &[Vertex], sigma: &DeepDecision) -> bool {
    for i in 0..path.len() {
        for j in i + 2..path.len() {
            if g.has_edge(path[i], path[j]) {
                let prefix = &path[..=i];
                if rank(sigma, prefix, path[i + 1]) >= rank(sigma, prefix, path[j]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Every simple path of `g` starting at `u`.
pub fn all_paths_from(g: &Graph, u: Vertex) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    let mut stack = vec![vec![u]];
    while let Some(p) = stack.pop() {
        let last = *p.last().unwrap();
        for w in g.neighbors(last).unwrap() {
            if !p.contains(&w) {
                let mut q = p.clone();
                q.push(w);
                stack.push(q);
            }
        }
        out.push(p);
    }
    out
}

pub fn stable_paths_by_enumeration(
    g: &Graph,
    u: Vertex,
    sigma: &DeepDecision,
) -> BTreeSet<Vec<Vertex>> {
    all_paths_from(g, u)
        .into_iter()
        .filter(|p| stable_by_definition(g, p, sigma))
        .collect()
}

/// Label order plus lexicographic, reverse lexicographic and one seeded
/// permutation of the edges.
pub fn decisions(g: &Graph, seed: u64) -> Vec<DeepDecision> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    vec![
        DeepDecision::LabelOrder,
        DeepDecision::EdgeLabel(EdgeLabeling::lexicographic(g)),
        DeepDecision::EdgeLabel(EdgeLabeling::reverse_lexicographic(g)),
        DeepDecision::EdgeLabel(EdgeLabeling::shuffled(g, &mut rng)),
    ]
}

/// Claw check over all 4-subsets.
pub fn has_induced_claw(g: &Graph) -> bool {
    let l = g.labels();
    for &c in l {
        let nb: Vec<Vertex> = g.neighbors(c).unwrap().collect();
        for a in 0..nb.len() {
            for b in a + 1..nb.len() {
                for d in b + 1..nb.len() {
                    let (x, y, z) = (nb[a], nb[b], nb[d]);
                    if !g.has_edge(x, y) && !g.has_edge(x, z) && !g.has_edge(y, z) {
                        return true;
                    }
                }
            }
        }
    }
    false
}
