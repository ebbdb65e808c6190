//! Construction of a large 2-regular subgraph with a certified bound on the
//! number of omitted vertices.
//!
//! Each connected component is handled recursively:
//!
//! 1. a 2-regular component is taken whole; an isolated vertex contributes
//!    nothing;
//! 2. a cut-edge (the one with the smallest identifier) splits the graph, and
//!    the two sides are solved independently;
//! 3. a bridgeless cubic piece loses a perfect matching;
//! 4. with one or two 2-vertices, the threads are suppressed and the cubic
//!    result loses a perfect matching avoiding the subdivided edges;
//! 5. with three 2-vertices, a small balloon is hung from each of them by a
//!    new cut-edge; a perfect matching of that cubic graph, restricted to the
//!    piece, leaves a 2-factor;
//! 6. otherwise (three or more 2-vertices) the suppressed weighted graph
//!    loses a minimum-weight perfect matching, which keeps at least two thirds
//!    of the edges.

mod certificate;
mod subgraph;

pub use certificate::{
    bound_omitted, classify_components, classify_equality, exact_omission, BoundCertificate,
    ComponentClass, ComponentRecord, Route,
};
pub use subgraph::TwoRegularSubgraph;

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Multigraph, VertexSet};
use crate::matching::{max_matching, min_weight_perfect_matching, perfect_matching_avoiding};
use crate::structure::{find_cut_edges, one_deficit};
use crate::suppress::suppress_threads;
use certificate::classify_piece;

/// A graph with a 3-vertex balloon hung at every 2-vertex.
#[derive(Clone, Debug)]
pub struct Augmented {
    pub graph: Multigraph,
    /// Vertices `0..original_order` are those of the original graph.
    pub original_order: usize,
    /// Number of edges of the original graph; they keep their identifiers.
    pub original_size: usize,
    /// For each 2-vertex, the new cut-edge joining it to its balloon.
    pub attachments: Vec<(usize, usize)>,
}

impl Augmented {
    pub fn is_gadget_vertex(&self, v: usize) -> bool {
        v >= self.original_order
    }
}

/// Hangs the subdivided triple edge (the smallest balloon) from each
/// 2-vertex of `g` by a new edge.
pub fn augment_with_balloons(g: &Multigraph) -> Augmented {
    let mut graph = g.clone();
    let mut attachments = Vec::new();
    for (v, d) in g.degrees().into_iter().enumerate() {
        if d != 2 {
            continue;
        }
        let a = graph.add_vertex();
        let b = graph.add_vertex();
        let s = graph.add_vertex();
        graph.add_edge(a, b);
        graph.add_edge(a, b);
        graph.add_edge(a, s);
        graph.add_edge(s, b);
        let e = graph.add_edge(v, s);
        attachments.push((v, e));
    }
    Augmented {
        graph,
        original_order: g.vertex_count(),
        original_size: g.edge_count(),
        attachments,
    }
}

/// Builds a 2-regular subgraph of the subcubic graph `g` omitting at most
/// [`bound_omitted`] vertices.
pub fn extract(g: &Multigraph) -> Result<(TwoRegularSubgraph, BoundCertificate)> {
    g.validate_subcubic()?;
    let mut chosen = EdgeSet::new();
    let mut pieces = Vec::new();
    for comp in g.connected_components() {
        let sub = g.induced_subgraph(&comp);
        let part = extract_connected(&sub.graph)?;
        chosen.extend(part.edges.iter().map(|&e| sub.to_parent_edge[e]));
        pieces.extend(part.pieces.into_iter().map(|p| Piece {
            vertices: p.vertices.iter().map(|&v| sub.to_parent_vertex[v]).collect(),
            ..p
        }));
    }
    let subgraph = TwoRegularSubgraph::from_edges(g, &chosen)?;
    subgraph.validate(g)?;

    let (n, m) = (g.vertex_count(), g.edge_count());
    let c = find_cut_edges(g).len();
    let d = one_deficit(g)?;
    let bound = bound_omitted(n, m, c)?;
    let achieved = n - subgraph.vertex_count();
    if achieved > bound {
        return Err(Error::Internal(format!(
            "extraction omitted {achieved} vertices, above the bound {bound}"
        )));
    }
    pieces.sort_by_key(|p| *p.vertices.first().unwrap());
    let connected = g.is_connected();
    let cert = BoundCertificate {
        n,
        m,
        c,
        d,
        bound_omitted: bound,
        achieved_omitted: achieved,
        bound_attained: achieved == bound,
        equality: (connected && n > 0).then(|| exact_omission(d, c) == Some(achieved)),
        components: pieces
            .into_iter()
            .map(|p| ComponentRecord {
                vertices: p.vertices,
                class: p.class,
                route: Some(p.route),
            })
            .collect(),
    };
    Ok((subgraph, cert))
}

struct Piece {
    vertices: VertexSet,
    class: ComponentClass,
    route: Route,
}

struct Partial {
    edges: EdgeSet,
    pieces: Vec<Piece>,
}

fn local_bound(g: &Multigraph, c: usize) -> Result<usize> {
    bound_omitted(g.vertex_count(), g.edge_count(), c)
}

fn extract_connected(g: &Multigraph) -> Result<Partial> {
    let n = g.vertex_count();
    let all: VertexSet = (0..n).collect();
    let deg = g.degrees();

    if n == 1 && g.edge_count() == 0 {
        return Ok(Partial {
            edges: EdgeSet::new(),
            pieces: vec![Piece { vertices: all, class: ComponentClass::SingleVertex, route: Route::Empty }],
        });
    }
    if deg.iter().all(|&x| x == 2) {
        let class = if n == 1 { ComponentClass::SingleVertex } else { ComponentClass::TwoRegular };
        return Ok(Partial {
            edges: (0..g.edge_count()).collect(),
            pieces: vec![Piece { vertices: all, class, route: Route::Whole }],
        });
    }

    let cut = find_cut_edges(g);
    if let Some(&e) = cut.first() {
        return split_on(g, e, cut.len());
    }

    let d = one_deficit(g)?;
    let (edges, route) = match d {
        0 => {
            let m = max_matching(g);
            if !m.is_perfect(g) {
                return Err(Error::Internal(
                    "bridgeless cubic graph without a perfect matching".into(),
                ));
            }
            (complement(g.edge_count(), m.edges()), Route::PerfectMatching)
        }
        1 | 2 => (avoiding_route(g)?, Route::AvoidingMatching),
        _ => match (d == 3).then(|| augmented_route(g)).flatten() {
            Some(edges) => (edges, Route::AugmentedMatching),
            None => (light_route(g)?, Route::LightMatching),
        },
    };
    Ok(Partial {
        edges,
        pieces: vec![Piece { vertices: all, class: classify_piece(g), route }],
    })
}

fn complement(m: usize, removed: &EdgeSet) -> EdgeSet {
    (0..m).filter(|e| !removed.contains(e)).collect()
}

/// Solves both sides of `g - e` and checks the deficit and cut-edge
/// arithmetic of the split.
fn split_on(g: &Multigraph, e: usize, c: usize) -> Result<Partial> {
    let (u, v) = g.edge(e);
    let sides = g.components_avoiding(&EdgeSet::from([e]));
    if sides.len() != 2 {
        return Err(Error::Internal(format!("cut-edge {e} does not split its component")));
    }
    let d = one_deficit(g)?;
    let mut edges = EdgeSet::new();
    let mut pieces = Vec::new();
    let (mut d_sum, mut c_sum) = (0, 0);
    for side in &sides {
        debug_assert!(side.contains(&u) != side.contains(&v));
        let sub = g.induced_subgraph(side);
        d_sum += one_deficit(&sub.graph)?;
        c_sum += find_cut_edges(&sub.graph).len();
        let part = extract_connected(&sub.graph)?;
        edges.extend(part.edges.iter().map(|&x| sub.to_parent_edge[x]));
        pieces.extend(part.pieces.into_iter().map(|p| Piece {
            vertices: p.vertices.iter().map(|&x| sub.to_parent_vertex[x]).collect(),
            ..p
        }));
    }
    if d + 2 != d_sum || c != c_sum + 1 {
        return Err(Error::Internal(format!(
            "split on edge {e}: d = {d}, c = {c} but the sides give d1 + d2 = {d_sum}, c1 + c2 = {c_sum}"
        )));
    }
    let covered = edges.len();
    let bound = local_bound(g, c)?;
    if g.vertex_count() - covered > bound {
        return Err(Error::Internal(format!(
            "split on edge {e} omits {} vertices, above {bound}",
            g.vertex_count() - covered
        )));
    }
    Ok(Partial { edges, pieces })
}

fn avoiding_route(g: &Multigraph) -> Result<EdgeSet> {
    let (weighted, threads) = suppress_threads(g)?;
    let forbidden = threads.subdivided_edges();
    let found = perfect_matching_avoiding(&weighted.graph, &forbidden)?;
    let Some(m) = found.matching else {
        return Err(Error::Internal(
            "suppressed graph outside the avoiding-matching guarantee".into(),
        ));
    };
    Ok(threads.expand(complement(weighted.graph.edge_count(), m.edges())))
}

fn augmented_route(g: &Multigraph) -> Option<EdgeSet> {
    let aug = augment_with_balloons(g);
    let m = max_matching(&aug.graph);
    if !m.is_perfect(&aug.graph) {
        return None;
    }
    // every attachment edge is forced into the matching, so dropping the
    // matched original edges leaves each original vertex with degree 2
    debug_assert!(aug.attachments.iter().all(|(_, e)| m.edges().contains(e)));
    Some(
        (0..aug.original_size)
            .filter(|e| !m.edges().contains(e))
            .collect(),
    )
}

fn light_route(g: &Multigraph) -> Result<EdgeSet> {
    let (weighted, threads) = suppress_threads(g)?;
    let Some(m) = min_weight_perfect_matching(&weighted.graph, &weighted.weights) else {
        return Err(Error::Internal(
            "bridgeless cubic graph without a perfect matching".into(),
        ));
    };
    let total = weighted.total_weight();
    if 3 * m.weight(&weighted.weights) > total {
        return Err(Error::LemmaViolation(format!(
            "lightest perfect matching weighs {} of {total}",
            m.weight(&weighted.weights)
        )));
    }
    Ok(threads.expand(complement(weighted.graph.edge_count(), m.edges())))
}
