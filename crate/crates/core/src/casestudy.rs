//! A bridgeless graph with three 2-vertices and no 2-factor, on which the
//! Gallai–Edmonds set and a minimal Tutte set of the balloon augmentation
//! differ.
//!
//! The graph is `K_{2,3}` with one edge replaced by a path of length 3 whose
//! middle edge is doubled. With `X = {X1, X2, X3, X4}` and `x = X4`, both `X`
//! and `X - x` are Tutte sets of the augmentation.

use std::fmt::Write;

use crate::error::Result;
use crate::extract::{augment_with_balloons, extract, Augmented, BoundCertificate, ComponentClass};
use crate::families::{contract_outside, is_simple, neighbours_in_distinct_components};
use crate::graph::{Multigraph, VertexSet};
use crate::matching::{gallai_edmonds, is_factor_critical, tutte_set};
use crate::oracle::brute_force_f2;

pub const LABELS: [&str; 7] = ["X1", "X2", "X3", "X4", "Y1", "Y2", "Y3"];

/// Vertices `0..4` are `X1..X4`, `4..7` are `Y1..Y3`.
pub fn badgraph() -> Multigraph {
    Multigraph::from_edges(
        7,
        [(4, 0), (0, 5), (5, 1), (1, 4), (6, 2), (2, 4), (5, 3), (3, 6), (3, 6)],
    )
    .expect("fixed edge list")
}

/// How a Tutte set of the augmentation decomposes it.
#[derive(Clone, Debug)]
pub struct TutteView {
    pub s: VertexSet,
    pub odd_components: usize,
    pub is_tutte_set: bool,
    /// The graph with every component of `G' - S` contracted is simple.
    pub contraction_simple: bool,
    /// Components of `G' - S` that contain an original vertex.
    pub inner_components: Vec<VertexSet>,
    pub inner_factor_critical: Vec<bool>,
    pub neighbours_separated: bool,
}

#[derive(Clone, Debug)]
pub struct CaseStudy {
    pub graph: Multigraph,
    pub augmented: Augmented,
    pub f2: usize,
    pub certificate: BoundCertificate,
    pub x: TutteView,
    pub x_minus: TutteView,
    /// Gallai–Edmonds `A` of the augmentation.
    pub gallai_edmonds_a: VertexSet,
    /// Minimal Tutte set of the augmentation.
    pub minimal_tutte_set: VertexSet,
}

fn view(g: &Multigraph, original_order: usize, s: VertexSet) -> TutteView {
    let odd_components = g.odd_components_without(&s);
    let (q, comps) = contract_outside(g, &s);
    let inner: Vec<VertexSet> = comps
        .into_iter()
        .filter(|c| c.iter().any(|&v| v < original_order))
        .collect();
    let inner_factor_critical = inner
        .iter()
        .map(|c| is_factor_critical(&g.induced_subgraph(c).graph))
        .collect();
    TutteView {
        is_tutte_set: odd_components >= s.len() + 2,
        contraction_simple: is_simple(&q),
        neighbours_separated: neighbours_in_distinct_components(g, &s),
        odd_components,
        inner_components: inner,
        inner_factor_critical,
        s,
    }
}

pub fn run() -> Result<CaseStudy> {
    let graph = badgraph();
    let augmented = augment_with_balloons(&graph);
    let g = &augmented.graph;
    let oracle = brute_force_f2(&graph)?;
    let (_, certificate) = extract(&graph)?;
    let x: VertexSet = (0..4).collect();
    let x_minus: VertexSet = (0..3).collect();
    let minimal = tutte_set(g, true)?.map(|t| t.s).unwrap_or_default();
    Ok(CaseStudy {
        f2: oracle.f2_exact,
        x: view(g, 7, x),
        x_minus: view(g, 7, x_minus),
        gallai_edmonds_a: gallai_edmonds(g).a,
        minimal_tutte_set: minimal,
        certificate,
        augmented,
        graph,
    })
}

fn names(s: &VertexSet) -> String {
    let parts: Vec<String> = s
        .iter()
        .map(|&v| LABELS.get(v).map_or_else(|| format!("g{v}"), |l| l.to_string()))
        .collect();
    format!("{{{}}}", parts.join(", "))
}

impl CaseStudy {
    pub fn has_two_factor(&self) -> bool {
        self.f2 == self.graph.vertex_count()
    }

    pub fn is_g_family(&self) -> bool {
        self.certificate.components.len() == 1
            && self.certificate.components[0].class == ComponentClass::GFamily
    }

    /// Every claim the case study makes holds.
    pub fn confirmed(&self) -> bool {
        !self.has_two_factor()
            && self.f2 + 1 == self.graph.vertex_count()
            && self.x.is_tutte_set
            && self.x_minus.is_tutte_set
            && self.is_g_family()
    }

    pub fn report(&self) -> String {
        let mut out = String::new();
        let g = &self.graph;
        let _ = writeln!(out, "vertices: {}", LABELS.join(" "));
        let edges: Vec<String> = g
            .edges()
            .iter()
            .map(|&(u, v)| format!("{}-{}", LABELS[u], LABELS[v]))
            .collect();
        let _ = writeln!(out, "edges: {}", edges.join(" "));
        let _ = writeln!(
            out,
            "n: {}  m: {}  d: {}  c: {}",
            g.vertex_count(),
            g.edge_count(),
            self.certificate.d,
            self.certificate.c
        );
        let _ = writeln!(out, "2-factor: {}", if self.has_two_factor() { "yes" } else { "no" });
        let _ = writeln!(out, "f2: {} (n - 1 = {})", self.f2, g.vertex_count() - 1);
        let _ = writeln!(out, "class: {}", self.certificate.components[0].class);
        let _ = writeln!(
            out,
            "augmented graph G': {} vertices, balloons at {}",
            self.augmented.graph.vertex_count(),
            names(&self.augmented.attachments.iter().map(|&(v, _)| v).collect())
        );
        for (label, v) in [("X", &self.x), ("X - x", &self.x_minus)] {
            let _ = writeln!(
                out,
                "S = {label} = {}: o(G' - S) = {}, |S| + 2 = {}, Tutte set: {}",
                names(&v.s),
                v.odd_components,
                v.s.len() + 2,
                v.is_tutte_set
            );
            let _ = writeln!(out, "  contracted graph simple: {}", v.contraction_simple);
            for (c, fc) in v.inner_components.iter().zip(&v.inner_factor_critical) {
                let _ = writeln!(out, "  component {}: factor-critical {fc}", names(c));
            }
            let _ = writeln!(out, "  neighbours in distinct components: {}", v.neighbours_separated);
        }
        let _ = writeln!(out, "Gallai-Edmonds A of G': {}", names(&self.gallai_edmonds_a));
        let _ = writeln!(out, "minimal Tutte set of G': {}", names(&self.minimal_tutte_set));
        let _ = writeln!(out, "confirmed: {}", self.confirmed());
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{find_cut_edges, one_deficit};

    #[test]
    fn shape() {
        let g = badgraph();
        assert_eq!(one_deficit(&g).unwrap(), 3);
        assert!(find_cut_edges(&g).is_empty());
        let twos: Vec<usize> = (0..7).filter(|&v| g.degree(v).unwrap() == 2).collect();
        assert_eq!(twos, vec![0, 1, 2]);
    }

    #[test]
    fn claims() {
        let study = run().unwrap();
        assert!(!study.has_two_factor());
        assert_eq!(study.f2, 6);
        assert!(study.is_g_family());
        assert_eq!(study.x.odd_components, 6);
        assert_eq!(study.x_minus.odd_components, 5);
        assert!(study.confirmed());
        assert_eq!(study.gallai_edmonds_a, VertexSet::from([0, 1, 2, 3]));
        assert_eq!(study.minimal_tutte_set, VertexSet::from([0, 1, 2]));
        // X: every remaining piece is a single vertex, and the contraction
        // keeps the doubled edge
        assert!(!study.x.contraction_simple);
        assert!(study.x.inner_factor_critical.iter().all(|&f| f));
        // X - x: the contraction is K_{2,3} plus balloons, and the component
        // through the doubled edge is not factor-critical
        assert!(study.x_minus.contraction_simple);
        assert!(study.x_minus.neighbours_separated);
        assert!(study.x_minus.inner_factor_critical.contains(&false));
        let text = study.report();
        assert!(text.contains("2-factor: no"));
        assert!(text.contains("confirmed: true"));
    }
}
