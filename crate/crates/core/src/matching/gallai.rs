//! Gallai–Edmonds decomposition, Tutte sets and factor-criticality.

use super::blossom::{Support, NONE};
use crate::error::{Error, Result};
use crate::graph::{Multigraph, VertexSet};

/// The partition `(A, C, D)` of the vertex set.
///
/// `D` holds the vertices missed by at least one maximum matching, `A` the
/// vertices outside `D` with a neighbour in `D`, and `C` everything else.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GallaiEdmondsDecomposition {
    pub a: VertexSet,
    pub c: VertexSet,
    pub d: VertexSet,
    /// Components of the subgraph induced by `D`, by smallest member.
    pub components_of_d: Vec<VertexSet>,
    /// `n - 2ν(G)`.
    pub deficiency: usize,
}

/// Computes `D` by the definition: `v ∈ D` iff `ν(G - v) = ν(G)`.
pub fn gallai_edmonds(g: &Multigraph) -> GallaiEdmondsDecomposition {
    let n = g.vertex_count();
    let support = Support::new(g);
    let mates = support.maximum_mates(None);
    let nu = mates.iter().filter(|&&m| m != NONE).count() / 2;

    let d: VertexSet = (0..n)
        // an exposed vertex is trivially missed by a maximum matching
        .filter(|&v| mates[v] == NONE || support.matching_number(Some(v)) == nu)
        .collect();
    let a: VertexSet = (0..n)
        .filter(|v| !d.contains(v))
        .filter(|&v| support.adj[v].iter().any(|w| d.contains(w)))
        .collect();
    let c: VertexSet = (0..n)
        .filter(|v| !d.contains(v) && !a.contains(v))
        .collect();
    let sub = g.induced_subgraph(&d);
    let components_of_d = sub
        .graph
        .connected_components()
        .into_iter()
        .map(|comp| comp.into_iter().map(|i| sub.to_parent_vertex[i]).collect())
        .collect();
    GallaiEdmondsDecomposition {
        a,
        c,
        d,
        components_of_d,
        deficiency: n - 2 * nu,
    }
}

/// A set `S` with `o(G - S) >= |S| + 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TutteCertificate {
    pub s: VertexSet,
    pub odd_component_count: usize,
}

fn surplus(g: &Multigraph, s: &VertexSet) -> i64 {
    g.odd_components_without(s) as i64 - s.len() as i64
}

/// A Tutte set certifying that `g` (of even order) has no perfect matching,
/// or `None` when a perfect matching exists.
///
/// The set starts as the Gallai–Edmonds `A`. With `minimal`, vertices are
/// removed in ascending order, rescanning after each removal, as long as
/// `o(G - S) - |S|` does not drop.
pub fn tutte_set(g: &Multigraph, minimal: bool) -> Result<Option<TutteCertificate>> {
    if g.vertex_count() % 2 == 1 {
        return Err(Error::Precondition(format!(
            "Tutte sets are defined here for even order, got {} vertices",
            g.vertex_count()
        )));
    }
    let ge = gallai_edmonds(g);
    if ge.deficiency == 0 {
        return Ok(None);
    }
    let mut s = ge.a;
    if minimal {
        let mut current = surplus(g, &s);
        'scan: loop {
            for &x in &s {
                let mut smaller = s.clone();
                smaller.remove(&x);
                let candidate = surplus(g, &smaller);
                if candidate >= current {
                    s = smaller;
                    current = candidate;
                    continue 'scan;
                }
            }
            break;
        }
    }
    let odd_component_count = g.odd_components_without(&s);
    if odd_component_count < s.len() + 2 {
        return Err(Error::Internal(format!(
            "set {s:?} leaves only {odd_component_count} odd components"
        )));
    }
    Ok(Some(TutteCertificate {
        s,
        odd_component_count,
    }))
}

/// `G - v` has a perfect matching for every vertex `v`. The empty graph is
/// not factor-critical; a single vertex is.
pub fn is_factor_critical(g: &Multigraph) -> bool {
    let n = g.vertex_count();
    if n % 2 == 0 {
        return false;
    }
    let support = Support::new(g);
    (0..n).all(|v| support.matching_number(Some(v)) == (n - 1) / 2)
}
