//! Independence polynomials.
//!
//! The main entry point splits the graph into components and runs the
//! deletion recursion `I(G) = I(G - u) + x I(G - N[u])` on each, memoized
//! by the vertex subset of the host graph. Tree-shaped pieces are finished
//! by a leaves-first pass, which keeps very large trees polynomial.

use std::collections::HashMap;

use num_bigint::BigInt;
use thiserror::Error;

use crate::graph::{Graph, VertexSubset};
use crate::poly::Poly;

/// Default vertex bound for the brute-force oracle.
pub const BRUTEFORCE_LIMIT: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IndependenceError {
    #[error("graph has {order} vertices, brute force is limited to {limit}")]
    TooLarge { order: usize, limit: usize },
    #[error("graph contains a cycle")]
    NotAForest,
}

/// How the deletion recursion picks the vertex to branch on. The result
/// never depends on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PivotRule {
    /// Highest degree in the current piece, ties to the smallest label.
    #[default]
    MaxDegree,
    MinLabel,
    MaxLabel,
}

/// `I(G, x)`. The empty graph gives `1`.
pub fn independence_polynomial(g: &Graph) -> Poly {
    Engine::new(g, PivotRule::MaxDegree, true).solve(&g.full_subset())
}

/// The deletion recursion alone, without the tree shortcut.
pub fn independence_polynomial_recursive(g: &Graph, pivot: PivotRule) -> Poly {
    Engine::new(g, pivot, false).solve(&g.full_subset())
}

/// Leaves-first evaluation on a forest.
pub fn forest_independence_polynomial(g: &Graph) -> Result<Poly, IndependenceError> {
    if !g.is_forest() {
        return Err(IndependenceError::NotAForest);
    }
    Ok(g.connected_components()
        .iter()
        .map(|c| tree_polynomial(g, c))
        .product())
}

/// Counts independent sets by enumerating all `2^n` vertex subsets.
pub fn independence_polynomial_bruteforce(g: &Graph) -> Result<Poly, IndependenceError> {
    independence_polynomial_bruteforce_with_limit(g, BRUTEFORCE_LIMIT)
}

pub fn independence_polynomial_bruteforce_with_limit(
    g: &Graph,
    limit: usize,
) -> Result<Poly, IndependenceError> {
    let n = g.order();
    let limit = limit.min(40);
    if n > limit {
        return Err(IndependenceError::TooLarge { order: n, limit });
    }
    let adj: Vec<u64> = (0..n)
        .map(|p| {
            g.neighbor_positions(p)
                .iter()
                .fold(0u64, |m, &q| m | 1 << q)
        })
        .collect();
    let mut counts = vec![0u64; n + 1];
    for mask in 0u64..(1u64 << n) {
        let mut rest = mask;
        let mut independent = true;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if adj[v] & mask != 0 {
                independent = false;
                break;
            }
        }
        if independent {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    Ok(Poly::from_coeffs(
        counts.into_iter().map(BigInt::from).collect(),
    ))
}

fn one_plus_x() -> Poly {
    Poly::from_i64s(&[1, 1])
}

/// `I` of the tree `G[set]`: for each vertex, `I(T_v) = E_v + x prod E_c`
/// where `E_v = prod I(T_c)` is the polynomial of the subtree without `v`.
fn tree_polynomial(g: &Graph, set: &VertexSubset) -> Poly {
    let Some(root) = set.first() else {
        return Poly::one();
    };
    let n = g.order();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(set.len());
    let mut stack = vec![root];
    parent[root] = root;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &w in g.neighbor_positions(v) {
            if set.contains(w) && parent[w] == usize::MAX {
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    // without[v] = prod I(T_c), excl_prod[v] = prod E_c over finished children c
    let mut without: Vec<Option<Poly>> = vec![None; n];
    let mut excl_prod: Vec<Option<Poly>> = vec![None; n];
    for &v in order.iter().rev() {
        let e = without[v].take().unwrap_or_else(Poly::one);
        let b = excl_prod[v].take().unwrap_or_else(Poly::one);
        let full = &e + &b.shift_mul_x();
        if v == root {
            return full;
        }
        let p = parent[v];
        without[p] = Some(match without[p].take() {
            Some(acc) => &acc * &full,
            None => full,
        });
        excl_prod[p] = Some(match excl_prod[p].take() {
            Some(acc) => &acc * &e,
            None => e,
        });
    }
    unreachable!("root is visited last")
}

struct Engine<'g> {
    g: &'g Graph,
    closed: Vec<VertexSubset>,
    memo: HashMap<VertexSubset, Poly>,
    pivot: PivotRule,
    tree_shortcut: bool,
}

impl<'g> Engine<'g> {
    fn new(g: &'g Graph, pivot: PivotRule, tree_shortcut: bool) -> Self {
        let n = g.order();
        let closed = (0..n)
            .map(|p| {
                let mut s =
                    VertexSubset::from_positions(n, g.neighbor_positions(p).iter().copied());
                s.insert(p);
                s
            })
            .collect();
        Self {
            g,
            closed,
            memo: HashMap::new(),
            pivot,
            tree_shortcut,
        }
    }

    fn solve(&mut self, set: &VertexSubset) -> Poly {
        if set.is_empty() {
            return Poly::one();
        }
        let comps = self.g.components_within(set);
        if comps.len() == 1 {
            return self.solve_connected(set);
        }
        comps.iter().map(|c| self.solve_connected(c)).product()
    }

    fn degree_within(&self, v: usize, set: &VertexSubset) -> usize {
        self.g
            .neighbor_positions(v)
            .iter()
            .filter(|&&w| set.contains(w))
            .count()
    }

    fn solve_connected(&mut self, set: &VertexSubset) -> Poly {
        let size = set.len();
        if size == 1 {
            return one_plus_x();
        }
        if let Some(p) = self.memo.get(set) {
            return p.clone();
        }
        let degrees: Vec<(usize, usize)> = set
            .iter()
            .map(|v| (v, self.degree_within(v, set)))
            .collect();
        let edges = degrees.iter().map(|&(_, d)| d).sum::<usize>() / 2;
        let result = if self.tree_shortcut && edges + 1 == size {
            tree_polynomial(self.g, set)
        } else {
            let u = match self.pivot {
                // positions follow label order, so the first maximum is the smallest label
                PivotRule::MaxDegree => {
                    degrees
                        .iter()
                        .fold(
                            degrees[0],
                            |best, &cur| if cur.1 > best.1 { cur } else { best },
                        )
                        .0
                }
                PivotRule::MinLabel => degrees[0].0,
                PivotRule::MaxLabel => degrees[size - 1].0,
            };
            let mut minus_u = set.clone();
            minus_u.remove(u);
            let minus_closed = set.difference(&self.closed[u]);
            let a = self.solve(&minus_u);
            let b = self.solve(&minus_closed);
            &a + &b.shift_mul_x()
        };
        self.memo.insert(set.clone(), result.clone());
        result
    }
}
