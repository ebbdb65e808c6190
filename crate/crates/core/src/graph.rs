//! The multigraph data model.
//!
//! Vertices are dense indices `0..n`. Edges are unordered pairs stored in a
//! list; an edge's identifier is its position in that list. Loops (`u == v`)
//! and parallel edges are allowed. A loop contributes 2 to the degree of its
//! vertex.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};

pub type VertexSet = BTreeSet<usize>;
pub type EdgeSet = BTreeSet<usize>;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// An induced subgraph together with the index tables linking it to its parent.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Multigraph,
    /// `to_parent_vertex[i]` is the parent index of subgraph vertex `i`.
    pub to_parent_vertex: Vec<usize>,
    /// Inverse of `to_parent_vertex`, indexed by parent vertex.
    pub from_parent_vertex: Vec<Option<usize>>,
    /// `to_parent_edge[e]` is the parent identifier of subgraph edge `e`.
    pub to_parent_edge: Vec<usize>,
}

impl Multigraph {
    pub fn new(n: usize) -> Self {
        Multigraph { n, edges: Vec::new() }
    }

    /// Builds a graph from an edge list, checking every endpoint.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Multigraph::new(n);
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            g.edges.push((u, v));
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn is_loop(&self, e: usize) -> bool {
        let (u, v) = self.edges[e];
        u == v
    }

    pub fn add_vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    /// Appends an edge and returns its identifier.
    ///
    /// Panics if an endpoint is out of range.
    pub fn add_edge(&mut self, u: usize, v: usize) -> usize {
        assert!(u < self.n && v < self.n, "edge ({u}, {v}) out of range");
        self.edges.push((u, v));
        self.edges.len() - 1
    }

    /// The endpoint of `e` opposite to `v` (`v` itself for a loop).
    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v);
            a
        }
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(self
            .edges
            .iter()
            .map(|&(a, b)| usize::from(a == v) + usize::from(b == v))
            .sum())
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Incident edge identifiers per vertex, ascending. A loop is listed once.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            inc[u].push(e);
            if u != v {
                inc[v].push(e);
            }
        }
        inc
    }

    /// Fails with the first vertex of degree above 3.
    pub fn validate_subcubic(&self) -> Result<()> {
        match self.degrees().into_iter().enumerate().find(|&(_, d)| d > 3) {
            Some((vertex, degree)) => Err(Error::NotSubcubic { vertex, degree }),
            None => Ok(()),
        }
    }

    pub fn is_cubic(&self) -> bool {
        self.degrees().into_iter().all(|d| d == 3)
    }

    /// Removes the edges in `removed`. The surviving edges keep their relative
    /// order; the returned table maps each new identifier to the old one.
    pub fn delete_edges(&self, removed: &EdgeSet) -> Result<(Multigraph, Vec<usize>)> {
        if let Some(&e) = removed.iter().find(|&&e| e >= self.edges.len()) {
            return Err(Error::UnknownEdge(e));
        }
        let mut g = Multigraph::new(self.n);
        let mut to_old = Vec::with_capacity(self.edges.len() - removed.len());
        for (e, &uv) in self.edges.iter().enumerate() {
            if !removed.contains(&e) {
                g.edges.push(uv);
                to_old.push(e);
            }
        }
        Ok((g, to_old))
    }

    /// The subgraph induced by `vertices`, relabelled in ascending order.
    pub fn induced_subgraph(&self, vertices: &VertexSet) -> InducedSubgraph {
        let mut from_parent_vertex = vec![None; self.n];
        let to_parent_vertex: Vec<usize> = vertices.iter().copied().collect();
        for (i, &v) in to_parent_vertex.iter().enumerate() {
            from_parent_vertex[v] = Some(i);
        }
        let mut graph = Multigraph::new(to_parent_vertex.len());
        let mut to_parent_edge = Vec::new();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if let (Some(a), Some(b)) = (from_parent_vertex[u], from_parent_vertex[v]) {
                graph.edges.push((a, b));
                to_parent_edge.push(e);
            }
        }
        InducedSubgraph {
            graph,
            to_parent_vertex,
            from_parent_vertex,
            to_parent_edge,
        }
    }

    /// The graph with vertex `v` (and its incident edges) removed.
    pub fn remove_vertex(&self, v: usize) -> InducedSubgraph {
        let keep: VertexSet = (0..self.n).filter(|&u| u != v).collect();
        self.induced_subgraph(&keep)
    }

    /// Connected components, each listed once, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_avoiding(&EdgeSet::new())
    }

    /// Connected components of the graph with the edges in `ignored` removed.
    pub fn components_avoiding(&self, ignored: &EdgeSet) -> Vec<VertexSet> {
        let inc = self.incidence();
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = VertexSet::new();
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                comp.insert(u);
                for &e in &inc[u] {
                    if ignored.contains(&e) {
                        continue;
                    }
                    let w = self.other_end(e, u);
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Multigraph) -> Multigraph {
        let shift = self.n;
        let mut g = self.clone();
        g.n += other.n;
        g.edges
            .extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        g
    }

    /// Two-colouring of a loopless graph, if one exists. Vertex `0` of every
    /// component receives colour `false`.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let inc = self.incidence();
        let mut colour: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u].unwrap();
                for &e in &inc[u] {
                    let w = self.other_end(e, u);
                    match colour[w] {
                        None => {
                            colour[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(Option::unwrap).collect())
    }

    /// Number of components of `self - removed` with an odd number of vertices.
    pub fn odd_components_without(&self, removed: &VertexSet) -> usize {
        let keep: VertexSet = (0..self.n).filter(|v| !removed.contains(v)).collect();
        self.induced_subgraph(&keep)
            .graph
            .connected_components()
            .iter()
            .filter(|c| c.len() % 2 == 1)
            .count()
    }
}
