//! Shared helpers for unit tests.

use proptest::prelude::*;

pub use crate::families::named::*;
use crate::graph::Multigraph;
use crate::random;

pub fn mg(n: usize, edges: &[(usize, usize)]) -> Multigraph {
    Multigraph::from_edges(n, edges.iter().copied()).unwrap()
}

pub fn complete(n: usize) -> Multigraph {
    let mut g = Multigraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

/// Centre 0 joined by a cut-edge to each of three 3-vertex balloons.
pub fn star_of_small_balloons() -> Multigraph {
    let mut g = Multigraph::new(1);
    for _ in 0..3 {
        let a = g.add_vertex();
        let b = g.add_vertex();
        let s = g.add_vertex();
        g.add_edge(a, b);
        g.add_edge(a, b);
        g.add_edge(a, s);
        g.add_edge(s, b);
        g.add_edge(0, s);
    }
    g
}

pub fn random_subcubic_tree(n: usize, seed: u64) -> Multigraph {
    random::random_subcubic_tree(&mut random::seeded(seed), n)
}

pub fn arb_subcubic(max_n: usize) -> impl Strategy<Value = Multigraph> {
    (1..=max_n, any::<u64>())
        .prop_map(|(n, seed)| random::random_subcubic(&mut random::seeded(seed), n))
}
