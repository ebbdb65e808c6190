//! Matching machinery: maximum matchings, minimum-weight and edge-avoiding
//! perfect matchings, Tutte sets, the Gallai–Edmonds decomposition and
//! factor-criticality.

mod blossom;
mod gallai;
mod weighted;

use std::sync::atomic::{AtomicUsize, Ordering};

pub use gallai::{
    gallai_edmonds, is_factor_critical, tutte_set, GallaiEdmondsDecomposition, TutteCertificate,
};
pub use weighted::{min_weight_perfect_matching, perfect_matching_avoiding, AvoidingMatching};

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Multigraph, VertexSet};
use blossom::{Support, NONE};

static LEMMA_VIOLATIONS: AtomicUsize = AtomicUsize::new(0);

/// How many times a forbidden-edge perfect matching was missing although
/// its existence guarantee applied. Process-wide.
pub fn lemma_violation_count() -> usize {
    LEMMA_VIOLATIONS.load(Ordering::SeqCst)
}

pub(crate) fn record_lemma_violation() {
    LEMMA_VIOLATIONS.fetch_add(1, Ordering::SeqCst);
}

/// A set of pairwise vertex-disjoint non-loop edges.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Matching {
    edges: EdgeSet,
}

impl Matching {
    /// Checks the matching conditions against `g`.
    pub fn new(g: &Multigraph, edges: EdgeSet) -> Result<Self> {
        let mut covered = vec![false; g.vertex_count()];
        for &e in &edges {
            if e >= g.edge_count() {
                return Err(Error::UnknownEdge(e));
            }
            let (u, v) = g.edge(e);
            if u == v {
                return Err(Error::Precondition(format!("edge {e} is a loop")));
            }
            for x in [u, v] {
                if std::mem::replace(&mut covered[x], true) {
                    return Err(Error::Precondition(format!("vertex {x} is matched twice")));
                }
            }
        }
        Ok(Matching { edges })
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn covered(&self, g: &Multigraph) -> VertexSet {
        self.edges
            .iter()
            .flat_map(|&e| {
                let (u, v) = g.edge(e);
                [u, v]
            })
            .collect()
    }

    pub fn is_perfect(&self, g: &Multigraph) -> bool {
        2 * self.len() == g.vertex_count()
    }

    pub fn weight(&self, weights: &[u64]) -> u64 {
        self.edges.iter().map(|&e| weights[e]).sum()
    }
}

/// Size of a maximum matching.
pub fn matching_number(g: &Multigraph) -> usize {
    Support::new(g).matching_number(None)
}

/// A maximum-cardinality matching. Between parallel edges the smallest
/// identifier is used.
///
/// Debug builds certify optimality: the Gallai–Edmonds set `A` must satisfy
/// `o(G - A) - |A| = n - 2|M|`, which by Tutte–Berge rules out a larger
/// matching.
pub fn max_matching(g: &Multigraph) -> Matching {
    let support = Support::new(g);
    let mates = support.maximum_mates(None);
    let edges: EdgeSet = mates
        .iter()
        .enumerate()
        .filter(|&(u, &v)| v != NONE && u < v)
        .map(|(u, &v)| support.edge_between(u, v))
        .collect();
    let m = Matching { edges };
    debug_assert!(
        tutte_berge_certifies(g, &m),
        "maximum matching failed its Tutte-Berge certificate"
    );
    m
}

/// True when some vertex set `S` (the Gallai–Edmonds `A`) has
/// `o(G - S) - |S| = n - 2|M|`.
pub fn tutte_berge_certifies(g: &Multigraph, m: &Matching) -> bool {
    let ge = gallai_edmonds(g);
    let surplus = g.odd_components_without(&ge.a) as i64 - ge.a.len() as i64;
    surplus == g.vertex_count() as i64 - 2 * m.len() as i64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::*;
    use proptest::prelude::*;

    /// Largest matching by trying every edge subset (tiny graphs only).
    fn nu_by_enumeration(g: &Multigraph) -> usize {
        let edges: Vec<usize> = (0..g.edge_count()).filter(|&e| !g.is_loop(e)).collect();
        let mut best = 0;
        fn rec(g: &Multigraph, edges: &[usize], i: usize, used: &mut Vec<bool>, size: usize, best: &mut usize) {
            *best = (*best).max(size);
            if i == edges.len() || size + (edges.len() - i) <= *best {
                return;
            }
            let (u, v) = g.edge(edges[i]);
            if !used[u] && !used[v] {
                used[u] = true;
                used[v] = true;
                rec(g, edges, i + 1, used, size + 1, best);
                used[u] = false;
                used[v] = false;
            }
            rec(g, edges, i + 1, used, size, best);
        }
        rec(g, &edges, 0, &mut vec![false; g.vertex_count()], 0, &mut best);
        best
    }

    #[test]
    fn examples() {
        assert_eq!(max_matching(&triple_edge()).len(), 1);
        assert_eq!(max_matching(&path(3)).len(), 1);
        assert_eq!(nu_by_enumeration(&petersen()), 5);
        let m = max_matching(&petersen());
        assert_eq!(m.len(), 5);
        assert!(m.is_perfect(&petersen()));
        assert!(Matching::new(&petersen(), m.edges().clone()).is_ok());
    }

    #[test]
    fn loops_never_match() {
        let g = mg(2, &[(0, 0), (1, 1)]);
        assert!(max_matching(&g).is_empty());
        assert!(Matching::new(&g, EdgeSet::from([0])).is_err());
    }

    #[test]
    fn parallel_edges_use_smallest_identifier() {
        let g = mg(2, &[(0, 1), (0, 1), (0, 1)]);
        assert_eq!(max_matching(&g).edges(), &EdgeSet::from([0]));
    }

    proptest! {
        #[test]
        fn blossom_matches_enumeration(g in arb_subcubic(10)) {
            let m = max_matching(&g);
            prop_assert!(Matching::new(&g, m.edges().clone()).is_ok());
            prop_assert_eq!(m.len(), nu_by_enumeration(&g));
            prop_assert!(tutte_berge_certifies(&g, &m));
        }
    }
}
