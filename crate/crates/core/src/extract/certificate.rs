use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Multigraph, VertexSet};
use crate::matching::max_matching;
use crate::structure::{find_cut_edges, is_balloon, one_deficit};

use super::augment_with_balloons;

/// Structural class of a component left after deleting all cut-edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ComponentClass {
    SingleVertex,
    Balloon,
    GFamily,
    TwoRegular,
    NonExtremal,
}

impl ComponentClass {
    /// The classes out of which every extremal connected graph is assembled.
    pub fn is_extremal(self) -> bool {
        matches!(
            self,
            ComponentClass::SingleVertex | ComponentClass::Balloon | ComponentClass::GFamily
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            ComponentClass::SingleVertex => "single-vertex",
            ComponentClass::Balloon => "balloon",
            ComponentClass::GFamily => "G-family",
            ComponentClass::TwoRegular => "two-regular",
            ComponentClass::NonExtremal => "non-extremal",
        }
    }
}

impl fmt::Display for ComponentClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// How the extractor handled one bridgeless piece.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    /// Single vertex without a loop.
    Empty,
    /// The piece is already 2-regular.
    Whole,
    /// Cubic piece: complement of a perfect matching.
    PerfectMatching,
    /// One or two 2-vertices: complement of a perfect matching of the
    /// suppressed graph avoiding the subdivided edges.
    AvoidingMatching,
    /// Three 2-vertices: complement of a perfect matching of the graph with a
    /// balloon hung at each 2-vertex.
    AugmentedMatching,
    /// Complement of a minimum-weight perfect matching of the suppressed graph.
    LightMatching,
}

impl Route {
    pub fn name(self) -> &'static str {
        match self {
            Route::Empty => "empty",
            Route::Whole => "whole",
            Route::PerfectMatching => "perfect-matching",
            Route::AvoidingMatching => "avoiding-matching",
            Route::AugmentedMatching => "augmented-matching",
            Route::LightMatching => "light-matching",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentRecord {
    pub vertices: VertexSet,
    pub class: ComponentClass,
    /// Filled by the extractor; `None` when only classified.
    pub route: Option<Route>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundCertificate {
    pub n: usize,
    pub m: usize,
    pub c: usize,
    pub d: usize,
    pub bound_omitted: usize,
    pub achieved_omitted: usize,
    /// `achieved_omitted == bound_omitted`.
    pub bound_attained: bool,
    /// Whether the extracted subgraph has exactly `n - (d + c - 1)/2`
    /// vertices. Defined for connected graphs only.
    pub equality: Option<bool>,
    /// One record per component after deleting all cut-edges, by smallest vertex.
    pub components: Vec<ComponentRecord>,
}

impl BoundCertificate {
    /// Line-oriented `key: value` document.
    pub fn to_document(&self) -> String {
        let equality = match self.equality {
            Some(true) => "true",
            Some(false) => "false",
            None => "n/a",
        };
        let classes: Vec<&str> = self.components.iter().map(|r| r.class.name()).collect();
        format!(
            "n: {}\nm: {}\nc: {}\nd: {}\nbound: {}\nachieved: {}\nequality: {}\nclasses: {}\n",
            self.n,
            self.m,
            self.c,
            self.d,
            self.bound_omitted,
            self.achieved_omitted,
            equality,
            classes.join(",")
        )
    }
}

/// `max{0, ⌊(d + c - 1)/2⌋}` with `d = 3n - 2m`.
pub fn bound_omitted(n: usize, m: usize, c: usize) -> Result<usize> {
    let d = 3 * n as i64 - 2 * m as i64;
    if d < 0 {
        return Err(Error::Precondition(format!(
            "n = {n}, m = {m} gives a negative 1-deficit {d}"
        )));
    }
    Ok((d + c as i64 - 1).max(0) as usize / 2)
}

/// `Some(k)` when `(d + c - 1)/2` is a non-negative integer `k`.
pub fn exact_omission(d: usize, c: usize) -> Option<usize> {
    let x = d as i64 + c as i64 - 1;
    (x >= 0 && x % 2 == 0).then_some((x / 2) as usize)
}

/// True for a bridgeless piece with three 2-vertices whose balloon
/// augmentation has no perfect matching.
pub(crate) fn is_g_family_piece(piece: &Multigraph) -> bool {
    let deg = piece.degrees();
    piece.vertex_count() > 1
        && deg.iter().filter(|&&x| x == 2).count() == 3
        && deg.iter().all(|&x| x == 2 || x == 3)
        && piece.is_connected()
        && find_cut_edges(piece).is_empty()
        && {
            let aug = augment_with_balloons(piece);
            !max_matching(&aug.graph).is_perfect(&aug.graph)
        }
}

pub(crate) fn classify_piece(piece: &Multigraph) -> ComponentClass {
    if piece.vertex_count() == 1 {
        ComponentClass::SingleVertex
    } else if is_balloon(piece) {
        ComponentClass::Balloon
    } else if is_g_family_piece(piece) {
        ComponentClass::GFamily
    } else if piece.degrees().iter().all(|&x| x == 2) {
        ComponentClass::TwoRegular
    } else {
        ComponentClass::NonExtremal
    }
}

/// Classes of the components left after deleting every cut-edge.
pub fn classify_components(g: &Multigraph) -> Vec<ComponentRecord> {
    let cut = find_cut_edges(g);
    g.components_avoiding(&cut)
        .into_iter()
        // a cut-edge always joins two different components, so the induced
        // subgraph of a component is exactly that component
        .map(|vertices| ComponentRecord {
            class: classify_piece(&g.induced_subgraph(&vertices).graph),
            vertices,
            route: None,
        })
        .collect()
}

/// Fills the component classes and the equality flag of a certificate
/// produced by the extractor on the connected graph `g`.
pub fn classify_equality(g: &Multigraph, cert: &BoundCertificate) -> Result<BoundCertificate> {
    if !g.is_connected() {
        return Err(Error::Precondition(
            "equality classification needs a connected graph".into(),
        ));
    }
    let d = one_deficit(g)?;
    let c = find_cut_edges(g).len();
    if (cert.n, cert.m, cert.c, cert.d) != (g.vertex_count(), g.edge_count(), c, d) {
        return Err(Error::Precondition(
            "certificate was not produced for this graph".into(),
        ));
    }
    let mut out = cert.clone();
    let routes: Vec<Option<Route>> = cert.components.iter().map(|r| r.route).collect();
    out.components = classify_components(g);
    if routes.len() == out.components.len() {
        for (rec, route) in out.components.iter_mut().zip(routes) {
            rec.route = route;
        }
    }
    out.equality = Some(exact_omission(d, c) == Some(cert.achieved_omitted));
    Ok(out)
}
