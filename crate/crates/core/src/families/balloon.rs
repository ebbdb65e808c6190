//! Balloons and the cut-edge extremal graphs: trees with a balloon at every leaf.

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::structure::find_cut_edges;

use super::cages::smallest_balloon;

/// Subdivides edge `e` of a bridgeless cubic graph. Edge `e` becomes the half
/// at its first endpoint; the other half and the new vertex come last.
pub fn make_balloon(base: &Multigraph, e: usize) -> Result<Multigraph> {
    if !base.is_cubic() {
        return Err(Error::Precondition("balloon base must be cubic".into()));
    }
    if e >= base.edge_count() {
        return Err(Error::UnknownEdge(e));
    }
    if !find_cut_edges(base).is_empty() || !base.is_connected() {
        return Err(Error::Precondition(
            "balloon base must be connected and bridgeless".into(),
        ));
    }
    let (u, v) = base.edge(e);
    let mut edges = base.edges().to_vec();
    let w = base.vertex_count();
    edges[e] = (u, w);
    edges.push((w, v));
    Multigraph::from_edges(w + 1, edges)
}

/// Number of leaves hung from internal vertex `i` of the caterpillar with `t`
/// internal vertices, so that every internal vertex has degree 3.
fn leaves_at(i: usize, t: usize) -> usize {
    match (t, i) {
        (1, _) => 3,
        (_, 0) => 2,
        _ if i + 1 == t => 2,
        _ => 1,
    }
}

/// Cubic graph made from a caterpillar whose internal vertices `0..t` form a
/// path: each of its `t + 2` leaves is replaced by a smallest balloon of girth
/// `g`, attached at its 2-vertex.
pub fn build_tree_with_balloons(t: usize, g: usize) -> Result<Multigraph> {
    if t == 0 {
        return Err(Error::Precondition(
            "a tree with balloons needs at least one internal vertex".into(),
        ));
    }
    let balloon = smallest_balloon(g)?;
    let hook = balloon
        .degrees()
        .iter()
        .position(|&x| x == 2)
        .ok_or_else(|| Error::Internal("balloon without a 2-vertex".into()))?;
    let mut out = Multigraph::new(t);
    for i in 1..t {
        out.add_edge(i - 1, i);
    }
    for i in 0..t {
        for _ in 0..leaves_at(i, t) {
            let shift = out.vertex_count();
            out = out.disjoint_union(&balloon);
            out.add_edge(i, shift + hook);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extract::extract;
    use crate::structure::{girth, is_balloon, one_deficit, Girth};
    use crate::testing::*;

    #[test]
    fn balloons_from_small_bases() {
        for (base, order) in [(triple_edge(), 3), (k4(), 5), (petersen(), 11)] {
            for e in 0..base.edge_count() {
                let b = make_balloon(&base, e).unwrap();
                assert_eq!(b.vertex_count(), order);
                assert!(is_balloon(&b));
                assert_eq!(one_deficit(&b).unwrap(), 1);
            }
        }
        assert_eq!(girth(&make_balloon(&petersen(), 0).unwrap()), Girth::Finite(5));
    }

    #[test]
    fn balloon_rejects_bad_bases() {
        assert!(make_balloon(&cycle(4), 0).is_err());
        assert!(make_balloon(&k4(), 6).is_err());
        let mut g = k4().disjoint_union(&k4());
        g.add_edge(0, 4);
        assert!(make_balloon(&g, 0).is_err());
    }

    #[test]
    fn tree_orders_and_cut_edges() {
        for (t, g, n) in [(1, 3, 16), (1, 2, 10), (2, 3, 22), (3, 3, 28), (3, 2, 18)] {
            let tree = build_tree_with_balloons(t, g).unwrap();
            assert_eq!(tree.vertex_count(), n);
            assert!(tree.is_cubic());
            assert!(tree.is_connected());
            assert_eq!(find_cut_edges(&tree).len(), 2 * t + 1);
        }
        assert!(build_tree_with_balloons(0, 3).is_err());
        assert!(build_tree_with_balloons(1, 9).is_err());
    }

    #[test]
    fn trees_attain_the_bound() {
        for t in 1..=3 {
            let tree = build_tree_with_balloons(t, 3).unwrap();
            let (h, cert) = extract(&tree).unwrap();
            assert_eq!(cert.equality, Some(true));
            assert_eq!(6 * h.vertex_count(), 5 * (tree.vertex_count() + 2));
            assert!((0..t).all(|v| !h.covered.contains(&v)));
        }
    }
}
