//! Smallest cubic graphs of each girth, and the smallest balloons built from them.

use crate::error::{Error, Result};
use crate::format::parse_multigraph;
use crate::graph::{EdgeSet, Multigraph};
use crate::structure::{girth, Girth};

use super::make_balloon;

/// Order `h(3, g) + 1` of the smallest balloon of girth `g`, for `g` in 2..=12.
pub const BALLOON_ORDERS: [(usize, usize); 11] = [
    (2, 3),
    (3, 5),
    (4, 7),
    (5, 11),
    (6, 15),
    (7, 25),
    (8, 31),
    (9, 59),
    (10, 71),
    (11, 113),
    (12, 127),
];

const CAGES: [(usize, &str); 7] = [
    (2, include_str!("../../fixtures/cages/g2_triple_edge.mg")),
    (3, include_str!("../../fixtures/cages/g3_k4.mg")),
    (4, include_str!("../../fixtures/cages/g4_k33.mg")),
    (5, include_str!("../../fixtures/cages/g5_petersen.mg")),
    (6, include_str!("../../fixtures/cages/g6_heawood.mg")),
    (7, include_str!("../../fixtures/cages/g7_mcgee.mg")),
    (8, include_str!("../../fixtures/cages/g8_tutte_coxeter.mg")),
];

/// `h(3, g) + 1`, if tabulated.
pub fn smallest_balloon_order(g: usize) -> Option<usize> {
    BALLOON_ORDERS
        .iter()
        .find(|&&(girth, _)| girth == g)
        .map(|&(_, order)| order)
}

/// The stored `(3, g)`-cage for `g` in 2..=8.
pub fn cage(g: usize) -> Result<Multigraph> {
    let (_, text) = CAGES
        .iter()
        .find(|&&(girth, _)| girth == g)
        .ok_or_else(|| Error::Precondition(format!("no stored cubic cage of girth {g} (2..=8)")))?;
    parse_multigraph(text.as_bytes())
}

/// A balloon of order `h(3, g) + 1` and girth exactly `g`: the cage with its
/// smallest-identifier edge that avoids some shortest cycle subdivided.
pub fn smallest_balloon(g: usize) -> Result<Multigraph> {
    let base = cage(g)?;
    let target = Girth::Finite(g);
    // subdividing `e` keeps the girth iff some shortest cycle avoids `e`,
    // i.e. iff deleting `e` keeps the girth
    let e = (0..base.edge_count())
        .find(|&e| {
            let (rest, _) = base.delete_edges(&EdgeSet::from([e])).unwrap();
            girth(&rest) == target
        })
        .ok_or_else(|| Error::Internal(format!("every edge of the girth-{g} cage lies on all shortest cycles")))?;
    make_balloon(&base, e)
}
