use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Multigraph, VertexSet};

/// Vertex-disjoint cycles of a host graph, each an ordered list of edge
/// identifiers. A loop is a cycle of length 1 and a parallel pair a cycle of
/// length 2.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TwoRegularSubgraph {
    pub cycles: Vec<Vec<usize>>,
    pub covered: VertexSet,
}

impl TwoRegularSubgraph {
    /// Splits an edge set in which every vertex has degree 0 or 2 into its
    /// cycles. Cycles are listed by smallest vertex and start at that vertex's
    /// smaller edge.
    pub fn from_edges(g: &Multigraph, edges: &EdgeSet) -> Result<Self> {
        let n = g.vertex_count();
        let mut inc: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut deg = vec![0usize; n];
        for &e in edges {
            if e >= g.edge_count() {
                return Err(Error::UnknownEdge(e));
            }
            let (u, v) = g.edge(e);
            deg[u] += 1;
            deg[v] += 1;
            inc[u].push(e);
            if u != v {
                inc[v].push(e);
            }
        }
        if let Some(v) = deg.iter().position(|&d| d != 0 && d != 2) {
            return Err(Error::Internal(format!(
                "vertex {v} has degree {} in a supposed 2-regular subgraph",
                deg[v]
            )));
        }

        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        let mut covered = VertexSet::new();
        for start in 0..n {
            if deg[start] == 0 || seen[start] {
                continue;
            }
            let first = inc[start][0];
            let mut cycle = vec![first];
            seen[start] = true;
            covered.insert(start);
            let mut prev = first;
            let mut at = g.other_end(first, start);
            while at != start {
                seen[at] = true;
                covered.insert(at);
                let next = if inc[at][0] == prev { inc[at][1] } else { inc[at][0] };
                cycle.push(next);
                prev = next;
                at = g.other_end(next, at);
            }
            cycles.push(cycle);
        }
        Ok(TwoRegularSubgraph { cycles, covered })
    }

    pub fn edges(&self) -> EdgeSet {
        self.cycles.iter().flatten().copied().collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.covered.len()
    }

    /// Checks every invariant against the host graph.
    pub fn validate(&self, g: &Multigraph) -> Result<()> {
        let fail = |msg: String| Err(Error::Internal(msg));
        let mut owner = vec![usize::MAX; g.vertex_count()];
        let mut all_edges = EdgeSet::new();
        for (i, cycle) in self.cycles.iter().enumerate() {
            if cycle.is_empty() {
                return fail(format!("cycle {i} is empty"));
            }
            for &e in cycle {
                if e >= g.edge_count() {
                    return Err(Error::UnknownEdge(e));
                }
                if !all_edges.insert(e) {
                    return fail(format!("edge {e} used twice"));
                }
            }
            let verts = match cycle_vertices(g, cycle) {
                Some(v) => v,
                None => return fail(format!("cycle {i} is not a closed walk")),
            };
            let distinct: VertexSet = verts.iter().copied().collect();
            if distinct.len() != verts.len() {
                return fail(format!("cycle {i} repeats a vertex"));
            }
            for v in verts {
                if owner[v] != usize::MAX {
                    return fail(format!("vertex {v} lies on two cycles"));
                }
                owner[v] = i;
            }
        }
        let covered: VertexSet = (0..g.vertex_count()).filter(|&v| owner[v] != usize::MAX).collect();
        if covered != self.covered {
            return fail("covered set disagrees with the cycles".into());
        }
        if covered.len() != all_edges.len() {
            return fail("covered vertex count differs from edge count".into());
        }
        Ok(())
    }
}

/// Vertices of a cycle in walking order, or `None` if the edges do not close up.
fn cycle_vertices(g: &Multigraph, cycle: &[usize]) -> Option<Vec<usize>> {
    if cycle.len() == 1 {
        let (u, v) = g.edge(cycle[0]);
        return (u == v).then(|| vec![u]);
    }
    let (a, b) = g.edge(cycle[0]);
    // the first edge is entered from whichever end the last edge touches
    let (s, t) = g.edge(*cycle.last().unwrap());
    for start in [a, b] {
        if start != s && start != t {
            continue;
        }
        let mut verts = vec![start];
        let mut at = start;
        let mut ok = true;
        for &e in cycle {
            let (u, v) = g.edge(e);
            if u == v {
                ok = false;
                break;
            }
            at = if u == at {
                v
            } else if v == at {
                u
            } else {
                ok = false;
                break;
            };
            verts.push(at);
        }
        if ok && at == start {
            verts.pop();
            return Some(verts);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::*;

    #[test]
    fn decomposes_loops_pairs_and_cycles() {
        let g = mg(6, &[(0, 0), (1, 2), (2, 1), (3, 4), (4, 5), (5, 3)]);
        let h = TwoRegularSubgraph::from_edges(&g, &(0..6).collect()).unwrap();
        assert_eq!(h.cycles, vec![vec![0], vec![1, 2], vec![3, 4, 5]]);
        assert_eq!(h.vertex_count(), 6);
        h.validate(&g).unwrap();
    }

    #[test]
    fn rejects_non_two_regular_sets() {
        let g = path(3);
        assert!(TwoRegularSubgraph::from_edges(&g, &EdgeSet::from([0, 1])).is_err());
    }

    #[test]
    fn validate_catches_bad_cycles() {
        let g = k4();
        let bad = TwoRegularSubgraph {
            cycles: vec![vec![0, 5]],
            covered: VertexSet::from([0, 1, 2, 3]),
        };
        assert!(bad.validate(&g).is_err());
        let good = TwoRegularSubgraph::from_edges(&g, &EdgeSet::from([1, 2, 3, 4])).unwrap();
        good.validate(&g).unwrap();
        let mut wrong_cover = good.clone();
        wrong_cover.covered.remove(&0);
        assert!(wrong_cover.validate(&g).is_err());
    }
}
