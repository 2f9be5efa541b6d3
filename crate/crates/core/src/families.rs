//! Named graph families with fixed labelings. Labels define the vertex
//! order used by the ordered stable-path tree, so they are part of each
//! family's definition.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("{family} needs n >= {min}, got {n}")]
    OutOfRange {
        family: Family,
        n: usize,
        min: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `W_n`: path `1..n`, leaf `n+i` on `i`.
    Centipede,
    /// `H_n`: path `1..n`, leaves `n+2i-1` and `n+2i` on `i`.
    Caterpillar,
    /// `F_n`: `F_0 = K_1`, `F_1 = K_2`, and `F_n` joins a new root to the
    /// roots of `F_(n-1)` and `F_(n-2)`. Labelled in preorder from root `0`.
    Fibonacci,
    /// Path `1..n` with a triangle on every other edge starting with the
    /// first; a pendant at `n` when `n` is odd.
    CentipedeTilde,
    /// Path `0..n+1` with a triangle on each edge `(i, i+1)`, `1 <= i < n`.
    CaterpillarTilde,
    /// Vertices `0..m-1`, `i ~ j` iff `0 < |i - j| <= 2`.
    FibonacciTilde,
    /// Path `1..n` plus the edge `(2, n)`.
    Apple,
    /// Path `1..n` plus the edge `(2, 4)`.
    AppleTilde,
    /// Cycle `1..n`, leaf `n+i` on `i`.
    Sunlet,
    /// Like the centipede tilde graph with two triangles per chosen edge
    /// and two pendants at `n` for odd `n`.
    MGraph,
    /// The 9-vertex tree whose polynomial has the factor `1 + x`.
    Counterexample9,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::Centipede,
        Family::Caterpillar,
        Family::Fibonacci,
        Family::CentipedeTilde,
        Family::CaterpillarTilde,
        Family::FibonacciTilde,
        Family::Apple,
        Family::AppleTilde,
        Family::Sunlet,
        Family::MGraph,
        Family::Counterexample9,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Centipede => "centipede",
            Family::Caterpillar => "caterpillar",
            Family::Fibonacci => "fibonacci",
            Family::CentipedeTilde => "centipede_tilde",
            Family::CaterpillarTilde => "caterpillar_tilde",
            Family::FibonacciTilde => "fibonacci_tilde",
            Family::Apple => "apple",
            Family::AppleTilde => "apple_tilde",
            Family::Sunlet => "sunlet",
            Family::MGraph => "m_graph",
            Family::Counterexample9 => "counterexample9",
        }
    }

    /// Smallest valid size parameter.
    pub fn min_n(self) -> usize {
        match self {
            Family::Fibonacci | Family::FibonacciTilde | Family::Counterexample9 => 0,
            Family::CaterpillarTilde => 2,
            Family::Sunlet => 3,
            Family::Apple | Family::AppleTilde => 4,
            _ => 1,
        }
    }

    /// Vertex the ordered tree is grown from, when the family fixes one.
    pub fn root(self, n: usize) -> Option<Vertex> {
        match self {
            Family::Counterexample9 => None,
            Family::Fibonacci | Family::CaterpillarTilde => Some(0),
            Family::FibonacciTilde => (n > 0).then_some(0),
            _ => Some(1),
        }
    }

    /// Claimed claw-free families.
    pub fn claw_free_claimed(self) -> bool {
        matches!(
            self,
            Family::CentipedeTilde
                | Family::CaterpillarTilde
                | Family::FibonacciTilde
                | Family::AppleTilde
        )
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == key)
            .ok_or_else(|| FamilyError::UnknownFamily(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize) -> Self {
        Self { family, n }
    }

    pub fn root(&self) -> Option<Vertex> {
        self.family.root(self.n)
    }
}

fn v(i: usize) -> Vertex {
    Vertex::try_from(i).expect("family labels fit in a vertex id")
}

fn path_edges(range: std::ops::RangeInclusive<usize>) -> Vec<(Vertex, Vertex)> {
    let (a, b) = range.into_inner();
    (a..b).map(|i| (v(i), v(i + 1))).collect()
}

/// Generates the graph for `spec`.
pub fn generate(spec: FamilySpec) -> Result<Graph, FamilyError> {
    let FamilySpec { family, n } = spec;
    if n < family.min_n() {
        return Err(FamilyError::OutOfRange {
            family,
            n,
            min: family.min_n(),
        });
    }
    let (vertices, edges): (Vec<Vertex>, Vec<(Vertex, Vertex)>) = match family {
        Family::Centipede => {
            let mut e = path_edges(1..=n);
            e.extend((1..=n).map(|i| (v(i), v(n + i))));
            ((1..=2 * n).map(v).collect(), e)
        }
        Family::Caterpillar => {
            let mut e = path_edges(1..=n);
            for i in 1..=n {
                e.push((v(i), v(n + 2 * i - 1)));
                e.push((v(i), v(n + 2 * i)));
            }
            ((1..=3 * n).map(v).collect(), e)
        }
        Family::Fibonacci => return Ok(fibonacci_tree(n)),
        Family::CentipedeTilde => {
            let mut e = path_edges(1..=n);
            let mut k = 0;
            while 2 * k + 2 <= n {
                let apex = v(n + 2 * k + 1);
                e.push((v(2 * k + 1), apex));
                e.push((v(2 * k + 2), apex));
                k += 1;
            }
            if n % 2 == 1 {
                e.push((v(n), v(2 * n)));
            }
            ((1..=n).map(v).collect(), e)
        }
        Family::CaterpillarTilde => {
            let mut e = path_edges(0..=n + 1);
            for i in 1..n {
                let apex = v(n + 1 + i);
                e.push((v(i), apex));
                e.push((v(i + 1), apex));
            }
            ((0..=n + 1).map(v).collect(), e)
        }
        Family::FibonacciTilde => {
            let mut e = Vec::new();
            for i in 0..n {
                for j in i + 1..n.min(i + 3) {
                    e.push((v(i), v(j)));
                }
            }
            ((0..n).map(v).collect(), e)
        }
        Family::Apple | Family::AppleTilde => {
            let mut e = path_edges(1..=n);
            let far = if family == Family::Apple { n } else { 4 };
            e.push((v(2), v(far)));
            ((1..=n).map(v).collect(), e)
        }
        Family::Sunlet => {
            let mut e = path_edges(1..=n);
            e.push((v(n), v(1)));
            e.extend((1..=n).map(|i| (v(i), v(n + i))));
            ((1..=2 * n).map(v).collect(), e)
        }
        Family::MGraph => {
            let mut e = path_edges(1..=n);
            let pairs = n / 2;
            for k in 0..pairs {
                let upper = v(n + 2 * k + 1);
                let lower = v(2 * n + 1 + k);
                for apex in [upper, lower] {
                    e.push((v(2 * k + 1), apex));
                    e.push((v(2 * k + 2), apex));
                }
            }
            if n % 2 == 1 {
                e.push((v(n), v(2 * n)));
                e.push((v(n), v(2 * n + 1 + pairs)));
            }
            ((1..=n).map(v).collect(), e)
        }
        Family::Counterexample9 => {
            // spine a1..a4 = 1..4, branch b1..b3 = 5..7 off a1, branch c1, c2 = 8, 9 off a2
            let e = vec![
                (1, 2),
                (2, 3),
                (3, 4),
                (1, 5),
                (5, 6),
                (6, 7),
                (2, 8),
                (8, 9),
            ];
            ((1..=9).collect(), e)
        }
    };
    Ok(Graph::new(vertices, edges).expect("family edges have distinct endpoints"))
}

/// `F_n` labelled in preorder: the root is `0`, then `F_(n-1)`, then
/// `F_(n-2)`.
fn fibonacci_tree(n: usize) -> Graph {
    let mut edges = Vec::new();
    let mut next: usize = 0;
    // (order, parent label)
    let mut stack: Vec<(usize, Option<usize>)> = vec![(n, None)];
    while let Some((k, parent)) = stack.pop() {
        let me = next;
        next += 1;
        if let Some(p) = parent {
            edges.push((v(p), v(me)));
        }
        match k {
            0 => {}
            1 => stack.push((0, Some(me))),
            _ => {
                stack.push((k - 2, Some(me)));
                stack.push((k - 1, Some(me)));
            }
        }
    }
    Graph::new((0..next).map(v), edges).expect("tree edges have distinct endpoints")
}

/// Number of vertices of `F_n`.
pub fn fibonacci_tree_order(n: usize) -> usize {
    let (mut a, mut b) = (1usize, 2usize);
    for _ in 0..n {
        (a, b) = (b, a + b + 1);
    }
    a
}

/// `f_0 = 1`, `f_1 = 0`, `f_k = f_(k-1) + f_(k-2)`.
pub fn fibonacci_weights(n: usize) -> Vec<u64> {
    let mut out = vec![1u64, 0];
    while out.len() <= n {
        let k = out.len();
        out.push(
            out[k - 1]
                .checked_add(out[k - 2])
                .expect("weight fits in u64"),
        );
    }
    out.truncate(n + 1);
    out
}
