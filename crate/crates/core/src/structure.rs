//! Cut-edges, 1-deficit, balloons and girth.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::Result;
use crate::graph::{EdgeSet, Multigraph, VertexSet};

/// Edges whose removal increases the number of connected components.
///
/// Works on the incidence structure: the DFS skips its parent *edge* rather
/// than its parent vertex, so a parallel class of two or more edges never
/// yields a bridge, and loops are ignored.
pub fn find_cut_edges(g: &Multigraph) -> EdgeSet {
    let n = g.vertex_count();
    let inc = g.incidence();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut bridges = EdgeSet::new();
    let mut clock = 0;

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = clock;
        low[root] = clock;
        clock += 1;
        // (vertex, edge used to enter it, next incidence position)
        let mut stack: Vec<(usize, Option<usize>, usize)> = vec![(root, None, 0)];
        while let Some(top) = stack.last_mut() {
            let (u, parent_edge, pos) = *top;
            if pos < inc[u].len() {
                top.2 += 1;
                let e = inc[u][pos];
                if Some(e) == parent_edge || g.is_loop(e) {
                    continue;
                }
                let w = g.other_end(e, u);
                if disc[w] == usize::MAX {
                    disc[w] = clock;
                    low[w] = clock;
                    clock += 1;
                    stack.push((w, Some(e), 0));
                } else {
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if let (Some(e), Some(&(p, _, _))) = (parent_edge, stack.last()) {
                    low[p] = low[p].min(low[u]);
                    if low[u] > disc[p] {
                        bridges.insert(e);
                    }
                }
            }
        }
    }
    bridges
}

/// `3n - 2m`. Fails if some vertex has degree above 3.
pub fn one_deficit(g: &Multigraph) -> Result<usize> {
    g.validate_subcubic()?;
    Ok(3 * g.vertex_count() - 2 * g.edge_count())
}

/// Connected, bridgeless, exactly one vertex of degree 2 and all others of
/// degree 3.
pub fn is_balloon(g: &Multigraph) -> bool {
    let deg = g.degrees();
    if g.vertex_count() == 0 || deg.iter().any(|&d| d != 2 && d != 3) {
        return false;
    }
    deg.iter().filter(|&&d| d == 2).count() == 1
        && g.is_connected()
        && find_cut_edges(g).is_empty()
}

/// Length of a shortest cycle; forests have infinite girth.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => write!(f, "inf"),
        }
    }
}

pub fn girth(g: &Multigraph) -> Girth {
    if (0..g.edge_count()).any(|e| g.is_loop(e)) {
        return Girth::Finite(1);
    }
    let mut pairs = BTreeSet::new();
    for &(u, v) in g.edges() {
        if !pairs.insert((u.min(v), u.max(v))) {
            return Girth::Finite(2);
        }
    }
    // Simple graph: BFS from every root.
    let n = g.vertex_count();
    let inc = g.incidence();
    let mut best = usize::MAX;
    for root in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut via = vec![usize::MAX; n];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for &e in &inc[u] {
                if e == via[u] {
                    continue;
                }
                let w = g.other_end(e, u);
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    via[w] = e;
                    queue.push_back(w);
                } else {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

/// Summary of the cut-edge structure of a subcubic graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub c: usize,
    pub d: usize,
    pub cut_edges: EdgeSet,
    /// Components left after deleting every cut-edge, by smallest member.
    pub two_edge_connected_components: Vec<VertexSet>,
    /// `is_balloon` of each component above, taken as a standalone graph.
    pub balloon_flags: Vec<bool>,
}

pub fn analyze_structure(g: &Multigraph) -> Result<StructureReport> {
    let d = one_deficit(g)?;
    let cut_edges = find_cut_edges(g);
    let two_edge_connected_components = g.components_avoiding(&cut_edges);
    let balloon_flags = two_edge_connected_components
        .iter()
        .map(|comp| is_balloon(&g.induced_subgraph(comp).graph))
        .collect();
    Ok(StructureReport {
        c: cut_edges.len(),
        d,
        cut_edges,
        two_edge_connected_components,
        balloon_flags,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::testing::*;
    use proptest::prelude::*;

    /// Deletes each non-loop edge in turn and counts components.
    fn bridges_by_deletion(g: &Multigraph) -> EdgeSet {
        let base = g.connected_components().len();
        (0..g.edge_count())
            .filter(|&e| {
                let (h, _) = g.delete_edges(&EdgeSet::from([e])).unwrap();
                h.connected_components().len() > base
            })
            .collect()
    }

    #[test]
    fn cut_edges_examples() {
        let path = mg(3, &[(0, 1), (1, 2)]);
        assert_eq!(find_cut_edges(&path), EdgeSet::from([0, 1]));
        assert!(find_cut_edges(&triple_edge()).is_empty());

        // centre 0 joined to three 3-vertex balloons
        let star = star_of_small_balloons();
        let expected = bridges_by_deletion(&star);
        assert_eq!(expected.len(), 3);
        assert_eq!(find_cut_edges(&star), expected);
        for e in expected {
            assert!(star.edge(e).0 == 0 || star.edge(e).1 == 0);
        }
    }

    #[test]
    fn deficits() {
        assert_eq!(one_deficit(&k4()).unwrap(), 0);
        assert_eq!(one_deficit(&Multigraph::new(1)).unwrap(), 3);
        assert_eq!(one_deficit(&cycle(5)).unwrap(), 5);
        let k5 = complete(5);
        assert!(matches!(one_deficit(&k5), Err(Error::NotSubcubic { degree: 4, .. })));
    }

    #[test]
    fn balloons() {
        assert!(is_balloon(&mg(3, &[(0, 1), (0, 1), (0, 2), (2, 1)])));
        assert!(is_balloon(&mg(5, &[(0, 4), (4, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])));
        assert!(!is_balloon(&cycle(4)));
        // a balloon with a pendant edge is not a balloon
        assert!(!is_balloon(&mg(4, &[(0, 1), (0, 1), (0, 2), (2, 1), (2, 3)])));
    }

    #[test]
    fn girths() {
        assert_eq!(girth(&triple_edge()), Girth::Finite(2));
        assert_eq!(girth(&k4()), Girth::Finite(3));
        assert_eq!(girth(&petersen()), Girth::Finite(5));
        assert_eq!(girth(&mg(1, &[(0, 0)])), Girth::Finite(1));
        assert_eq!(girth(&mg(3, &[(0, 1), (1, 2)])), Girth::Infinite);
        assert_eq!(girth(&cycle(7)), Girth::Finite(7));
    }

    /// Shortest cycle through BFS with explicit path reconstruction avoided:
    /// enumerate vertex sequences for tiny graphs.
    fn girth_by_search(g: &Multigraph) -> Girth {
        let inc = g.incidence();
        let n = g.vertex_count();
        let mut best = usize::MAX;
        fn walk(
            g: &Multigraph,
            inc: &[Vec<usize>],
            start: usize,
            u: usize,
            used: &mut Vec<bool>,
            on_path: &mut Vec<bool>,
            len: usize,
            best: &mut usize,
        ) {
            for &e in &inc[u] {
                if used[e] {
                    continue;
                }
                let w = g.other_end(e, u);
                if w == start {
                    *best = (*best).min(len + 1);
                } else if !on_path[w] && w > start {
                    used[e] = true;
                    on_path[w] = true;
                    walk(g, inc, start, w, used, on_path, len + 1, best);
                    on_path[w] = false;
                    used[e] = false;
                }
            }
        }
        for s in 0..n {
            let mut used = vec![false; g.edge_count()];
            let mut on_path = vec![false; n];
            on_path[s] = true;
            walk(g, &inc, s, s, &mut used, &mut on_path, 0, &mut best);
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    proptest! {
        #[test]
        fn bridges_match_deletion_oracle(g in arb_subcubic(9)) {
            prop_assert_eq!(find_cut_edges(&g), bridges_by_deletion(&g));
        }

        #[test]
        fn girth_matches_cycle_search(g in arb_subcubic(8)) {
            prop_assert_eq!(girth(&g), girth_by_search(&g));
        }

        #[test]
        fn tree_identity(n in 1usize..20, seed in any::<u64>()) {
            let t = random_subcubic_tree(n, seed);
            let c = find_cut_edges(&t).len();
            let d = one_deficit(&t).unwrap();
            prop_assert_eq!(c, n - 1);
            prop_assert_eq!(d + 2 * t.edge_count(), 3 * n);
            prop_assert_eq!((d + c - 1) / 2, n);
            prop_assert_eq!((d + c - 1) % 2, 0);
        }
    }
}
