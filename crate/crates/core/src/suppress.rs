//! Thread suppression: every maximal path through 2-vertices becomes a single
//! weighted edge whose weight is the path length.

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Multigraph};
use crate::structure::find_cut_edges;

/// A cubic multigraph with a positive integer weight per edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedCubicGraph {
    pub graph: Multigraph,
    pub weights: Vec<u64>,
}

impl WeightedCubicGraph {
    pub fn total_weight(&self) -> u64 {
        self.weights.iter().sum()
    }
}

/// One thread of the original graph, stored in walking order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Thread {
    /// Original endpoints (both of degree 3), in walking order.
    pub ends: (usize, usize),
    /// Original edge identifiers along the thread.
    pub edges: Vec<usize>,
    /// Original 2-vertices strictly inside the thread.
    pub internal: Vec<usize>,
}

/// Links each weighted edge back to its thread.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreadMap {
    /// Indexed by weighted-edge identifier.
    pub threads: Vec<Thread>,
    /// Original index of each vertex of the suppressed graph.
    pub cubic_to_original: Vec<usize>,
}

impl ThreadMap {
    /// Original edges covered by the given weighted edges.
    pub fn expand<I: IntoIterator<Item = usize>>(&self, weighted_edges: I) -> EdgeSet {
        weighted_edges
            .into_iter()
            .flat_map(|e| self.threads[e].edges.iter().copied())
            .collect()
    }

    /// Weighted edges whose thread passes through at least one 2-vertex.
    pub fn subdivided_edges(&self) -> EdgeSet {
        self.threads
            .iter()
            .enumerate()
            .filter(|(_, t)| !t.internal.is_empty())
            .map(|(e, _)| e)
            .collect()
    }
}

pub fn suppress_threads(g: &Multigraph) -> Result<(WeightedCubicGraph, ThreadMap)> {
    let deg = g.degrees();
    if let Some(v) = deg.iter().position(|&d| d != 2 && d != 3) {
        return Err(Error::Precondition(format!(
            "thread suppression needs degrees 2 and 3, vertex {v} has degree {}",
            deg[v]
        )));
    }
    if !deg.contains(&3) {
        return Err(Error::Precondition(
            "thread suppression is undefined on a 2-regular graph".into(),
        ));
    }
    if !g.is_connected() {
        return Err(Error::Precondition("thread suppression needs a connected graph".into()));
    }
    if let Some(&e) = find_cut_edges(g).first() {
        return Err(Error::Precondition(format!(
            "thread suppression needs a bridgeless graph, edge {e} is a cut-edge"
        )));
    }

    let inc = g.incidence();
    let mut to_cubic = vec![usize::MAX; g.vertex_count()];
    let mut cubic_to_original = Vec::new();
    for (v, &d) in deg.iter().enumerate() {
        if d == 3 {
            to_cubic[v] = cubic_to_original.len();
            cubic_to_original.push(v);
        }
    }

    let mut used = vec![false; g.edge_count()];
    let mut cubic = Multigraph::new(cubic_to_original.len());
    let mut weights = Vec::new();
    let mut threads = Vec::new();
    for &start in &cubic_to_original {
        for &first in &inc[start] {
            if used[first] {
                continue;
            }
            let mut edges = vec![first];
            let mut internal = Vec::new();
            used[first] = true;
            let mut prev_edge = first;
            let mut at = g.other_end(first, start);
            while deg[at] == 2 {
                let next = *inc[at]
                    .iter()
                    .find(|&&e| e != prev_edge)
                    .expect("a 2-vertex on a thread has a second edge");
                internal.push(at);
                edges.push(next);
                used[next] = true;
                prev_edge = next;
                at = g.other_end(next, at);
            }
            if at == start {
                return Err(Error::Internal(format!(
                    "suppression produced a loop at vertex {start} in a bridgeless graph"
                )));
            }
            cubic.add_edge(to_cubic[start], to_cubic[at]);
            weights.push(edges.len() as u64);
            threads.push(Thread {
                ends: (start, at),
                edges,
                internal,
            });
        }
    }

    let weighted = WeightedCubicGraph { graph: cubic, weights };
    if weighted.total_weight() != g.edge_count() as u64 {
        return Err(Error::Internal(format!(
            "suppressed weight {} differs from edge count {}",
            weighted.total_weight(),
            g.edge_count()
        )));
    }
    Ok((
        weighted,
        ThreadMap {
            threads,
            cubic_to_original,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::*;

    #[test]
    fn five_vertex_balloon() {
        // K4 on 0..4 with edge 0-1 subdivided by vertex 4
        let g = mg(5, &[(0, 4), (4, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let (w, map) = suppress_threads(&g).unwrap();
        assert!(w.graph.is_cubic());
        assert_eq!(w.graph.vertex_count(), 4);
        let mut ws = w.weights.clone();
        ws.sort();
        assert_eq!(ws, vec![1, 1, 1, 1, 1, 2]);
        assert_eq!(w.total_weight(), 7);
        assert_eq!(map.subdivided_edges().len(), 1);
    }

    #[test]
    fn cubic_input_is_unchanged() {
        let (w, map) = suppress_threads(&k4()).unwrap();
        assert_eq!(w.graph, k4());
        assert!(w.weights.iter().all(|&x| x == 1));
        assert!(map.subdivided_edges().is_empty());
    }

    #[test]
    fn theta_graph() {
        let g = mg(5, &[(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)]);
        let (w, _) = suppress_threads(&g).unwrap();
        assert_eq!(w.graph.edges(), &[(0, 1), (0, 1), (0, 1)]);
        assert_eq!(w.weights, vec![2, 2, 2]);
        assert_eq!(w.total_weight(), 6);
    }

    #[test]
    fn rejects_precondition_failures() {
        assert!(matches!(suppress_threads(&cycle(4)), Err(Error::Precondition(_))));
        assert!(matches!(
            suppress_threads(&star_of_small_balloons()),
            Err(Error::Precondition(_))
        ));
        let pendant = mg(4, &[(0, 1), (0, 1), (0, 2), (2, 1), (2, 3)]);
        assert!(matches!(suppress_threads(&pendant), Err(Error::Precondition(_))));
    }

    #[test]
    fn expanding_every_thread_restores_the_edge_multiset() {
        for g in [
            mg(5, &[(0, 4), (4, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
            mg(7, &[(0, 2), (2, 5), (5, 6), (6, 1), (0, 3), (3, 1), (0, 4), (4, 1)]),
            petersen(),
        ] {
            let (w, map) = suppress_threads(&g).unwrap();
            let all = map.expand(0..w.graph.edge_count());
            assert_eq!(all, (0..g.edge_count()).collect::<EdgeSet>());
            let total: usize = map.threads.iter().map(|t| t.edges.len()).sum();
            assert_eq!(total, g.edge_count());
            assert!(find_cut_edges(&w.graph).is_empty());
            for t in &map.threads {
                assert!(t.internal.iter().all(|&v| g.degree(v).unwrap() == 2));
            }
        }
    }
}
