//! Small named multigraphs used as bases and fixtures.

use crate::graph::Multigraph;

fn build(n: usize, edges: &[(usize, usize)]) -> Multigraph {
    Multigraph::from_edges(n, edges.iter().copied()).expect("fixture edges are in range")
}

/// Two vertices joined by three parallel edges.
pub fn triple_edge() -> Multigraph {
    build(2, &[(0, 1), (0, 1), (0, 1)])
}

pub fn k4() -> Multigraph {
    build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
}

/// `K_{3,3}` with parts `{0, 1, 2}` and `{3, 4, 5}`.
pub fn k33() -> Multigraph {
    let mut g = Multigraph::new(6);
    for x in 0..3 {
        for y in 3..6 {
            g.add_edge(x, y);
        }
    }
    g
}

/// The 3-cube; vertex `i` is the bit string `i`, parts are even and odd weight.
pub fn cube_q3() -> Multigraph {
    let mut g = Multigraph::new(8);
    for u in 0..8usize {
        for bit in [1, 2, 4] {
            let v = u ^ bit;
            if u < v {
                g.add_edge(u, v);
            }
        }
    }
    g
}

pub fn petersen() -> Multigraph {
    let mut g = Multigraph::new(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    g
}

/// The 4-cycle `0-1-2-3-0` with the opposite edges `01` and `23` doubled.
pub fn doubled_four_cycle() -> Multigraph {
    build(4, &[(0, 1), (0, 1), (1, 2), (2, 3), (2, 3), (3, 0)])
}

pub fn cycle(n: usize) -> Multigraph {
    let mut g = Multigraph::new(n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n);
    }
    g
}

pub fn path(n: usize) -> Multigraph {
    let mut g = Multigraph::new(n);
    for i in 1..n {
        g.add_edge(i - 1, i);
    }
    g
}

/// Looks up a base graph by its command-line name.
pub fn by_name(name: &str) -> Option<Multigraph> {
    Some(match name {
        "triple" | "triple-edge" => triple_edge(),
        "k4" => k4(),
        "k33" => k33(),
        "q3" | "cube" => cube_q3(),
        "petersen" => petersen(),
        "c4d" | "doubled-c4" => doubled_four_cycle(),
        _ => return None,
    })
}
