//! The family of bridgeless graphs with three 2-vertices and no 2-factor:
//! a cubic bipartite graph minus one vertex, with vertices of that side
//! optionally exploded into copies of other bridgeless cubic graphs.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Multigraph, VertexSet};
use crate::structure::{find_cut_edges, one_deficit};

/// Result of [`explode_mapped`]: the new graph and where the old vertices went.
#[derive(Clone, Debug)]
pub struct Explosion {
    pub graph: Multigraph,
    /// Old vertex of `G` to new vertex; `None` for `y`.
    pub host_map: Vec<Option<usize>>,
    /// Vertex of `F` to new vertex; `None` for `z`.
    pub piece_map: Vec<Option<usize>>,
}

fn two_connected_cubic(f: &Multigraph, what: &str) -> Result<()> {
    if !f.is_cubic() {
        return Err(Error::Precondition(format!("{what} is not cubic")));
    }
    if f.vertex_count() < 3 {
        return Err(Error::Precondition(format!(
            "{what} has fewer than three vertices, so it is not 2-connected"
        )));
    }
    if !f.is_connected() || !find_cut_edges(f).is_empty() {
        return Err(Error::Precondition(format!("{what} is not bridgeless")));
    }
    Ok(())
}

/// The three edges at `v`, ascending, provided `v` has degree 3 and no loop.
fn three_edges(g: &Multigraph, v: usize, what: &str) -> Result<[usize; 3]> {
    if v >= g.vertex_count() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.vertex_count() });
    }
    let inc: Vec<usize> = g.incidence()[v].clone();
    if inc.iter().any(|&e| g.is_loop(e)) {
        return Err(Error::Precondition(format!("{what} {v} carries a loop")));
    }
    <[usize; 3]>::try_from(inc).map_err(|inc| {
        Error::Precondition(format!("{what} {v} has degree {}, not 3", inc.len()))
    })
}

/// Replaces `y` in `g` and `z` in `f` by three edges: the `i`-th edge at `y`
/// (in identifier order) is joined to the `pairing[i]`-th edge at `z`.
///
/// Vertices of `g - y` come first in their old order, then those of `f - z`.
/// Edges likewise, followed by the three new edges in the order of `y`'s edges.
pub fn explode_mapped(
    g: &Multigraph,
    y: usize,
    f: &Multigraph,
    z: usize,
    pairing: [usize; 3],
) -> Result<Explosion> {
    let at_y = three_edges(g, y, "exploded vertex")?;
    two_connected_cubic(f, "explosion graph")?;
    let at_z = three_edges(f, z, "vertex")?;
    let mut seen = [false; 3];
    for &p in &pairing {
        if p >= 3 || std::mem::replace(&mut seen[p], true) {
            return Err(Error::Precondition(format!(
                "pairing {pairing:?} is not a bijection of three edges"
            )));
        }
    }

    let mut host_map = vec![None; g.vertex_count()];
    let mut next = 0;
    for (v, slot) in host_map.iter_mut().enumerate() {
        if v != y {
            *slot = Some(next);
            next += 1;
        }
    }
    let mut piece_map = vec![None; f.vertex_count()];
    for (v, slot) in piece_map.iter_mut().enumerate() {
        if v != z {
            *slot = Some(next);
            next += 1;
        }
    }
    let mut out = Multigraph::new(next);
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if !at_y.contains(&e) {
            out.add_edge(host_map[u].unwrap(), host_map[v].unwrap());
        }
    }
    for (e, &(u, v)) in f.edges().iter().enumerate() {
        if !at_z.contains(&e) {
            out.add_edge(piece_map[u].unwrap(), piece_map[v].unwrap());
        }
    }
    for (i, &e) in at_y.iter().enumerate() {
        let a = g.other_end(e, y);
        let b = f.other_end(at_z[pairing[i]], z);
        out.add_edge(host_map[a].unwrap(), piece_map[b].unwrap());
    }
    Ok(Explosion { graph: out, host_map, piece_map })
}

/// [`explode_mapped`] without the vertex maps.
pub fn explode(
    g: &Multigraph,
    y: usize,
    f: &Multigraph,
    z: usize,
    pairing: [usize; 3],
) -> Result<Multigraph> {
    Ok(explode_mapped(g, y, f, z, pairing)?.graph)
}

/// One explosion of a vertex of `H` on the side of `ŷ`.
#[derive(Clone, Debug)]
pub struct ExplosionSpec {
    pub f: Multigraph,
    pub z: usize,
    /// Defaults to the identity pairing.
    pub pairing: Option<[usize; 3]>,
}

#[derive(Clone, Debug)]
pub struct GFamilySpec {
    /// Cubic bipartite 2-connected base graph.
    pub h: Multigraph,
    /// Vertex to delete. Defaults to the smallest vertex on the side not
    /// containing vertex 0.
    pub y_hat: Option<usize>,
    /// Keyed by vertices of `H` on the side of `ŷ`.
    pub explosions: BTreeMap<usize, ExplosionSpec>,
}

impl GFamilySpec {
    pub fn new(h: Multigraph) -> Self {
        GFamilySpec { h, y_hat: None, explosions: BTreeMap::new() }
    }
}

/// A generated member with its construction data in final vertex numbers.
#[derive(Clone, Debug)]
pub struct GFamilyMember {
    pub graph: Multigraph,
    /// The deleted vertex, in `H`'s numbering.
    pub y_hat: usize,
    /// The side of `H` not containing `ŷ`.
    pub x: VertexSet,
    /// The former neighbours of `ŷ`.
    pub two_vertices: VertexSet,
    /// For each exploded `y`, the vertices that replaced it.
    pub exploded: BTreeMap<usize, VertexSet>,
}

/// Builds the member of the family described by `spec`.
pub fn build_g_family(spec: &GFamilySpec) -> Result<GFamilyMember> {
    let h = &spec.h;
    two_connected_cubic(h, "H").map_err(|e| match e {
        Error::Precondition(m) => Error::Precondition(format!("{m} (H must be 2-connected cubic)")),
        other => other,
    })?;
    let side = h
        .bipartition()
        .ok_or_else(|| Error::Precondition("H is not bipartite".into()))?;
    let y_hat = match spec.y_hat {
        Some(v) if v >= h.vertex_count() => {
            return Err(Error::VertexOutOfRange { vertex: v, n: h.vertex_count() })
        }
        Some(v) => v,
        None => (0..h.vertex_count()).find(|&v| side[v]).unwrap(),
    };
    let y_side = side[y_hat];
    let x: VertexSet = (0..h.vertex_count()).filter(|&v| side[v] != y_side).collect();

    let removed = h.remove_vertex(y_hat);
    if !removed.graph.is_connected() || !find_cut_edges(&removed.graph).is_empty() {
        return Err(Error::Precondition(format!(
            "H - {y_hat} is not 2-edge-connected"
        )));
    }
    for &y in spec.explosions.keys() {
        if y >= h.vertex_count() || side[y] != y_side || y == y_hat {
            return Err(Error::Precondition(format!(
                "exploded vertex {y} is not on the side of {y_hat} or is {y_hat} itself"
            )));
        }
    }

    // current position of every surviving vertex of H
    let mut at: Vec<Option<usize>> = removed.from_parent_vertex.clone();
    let mut graph = removed.graph;
    let mut owner: Vec<Option<usize>> = vec![None; graph.vertex_count()];
    for (&y, ex) in &spec.explosions {
        let cur = at[y].unwrap();
        let result = explode_mapped(&graph, cur, &ex.f, ex.z, ex.pairing.unwrap_or([0, 1, 2]))?;
        let moved = |v: Option<usize>| v.and_then(|v| result.host_map[v]);
        at = at.into_iter().map(moved).collect();
        let mut new_owner = vec![None; result.graph.vertex_count()];
        for (old, &new) in result.host_map.iter().enumerate() {
            if let Some(new) = new {
                new_owner[new] = owner[old];
            }
        }
        for &new in result.piece_map.iter().flatten() {
            new_owner[new] = Some(y);
        }
        owner = new_owner;
        graph = result.graph;
    }

    let map_set = |s: &VertexSet| -> VertexSet { s.iter().filter_map(|&v| at[v]).collect() };
    let neighbours: VertexSet = h
        .incidence()[y_hat]
        .iter()
        .map(|&e| h.other_end(e, y_hat))
        .collect();
    let mut exploded: BTreeMap<usize, VertexSet> = BTreeMap::new();
    for (v, o) in owner.iter().enumerate() {
        if let Some(y) = o {
            exploded.entry(*y).or_default().insert(v);
        }
    }
    let member = GFamilyMember {
        x: map_set(&x),
        two_vertices: map_set(&neighbours),
        graph,
        y_hat,
        exploded,
    };

    let deg = member.graph.degrees();
    let twos: VertexSet = (0..deg.len()).filter(|&v| deg[v] == 2).collect();
    if one_deficit(&member.graph)? != 3
        || twos != member.two_vertices
        || !member.graph.is_connected()
        || !find_cut_edges(&member.graph).is_empty()
    {
        return Err(Error::Internal(
            "generated graph is not bridgeless with three 2-vertices".into(),
        ));
    }
    Ok(member)
}

/// Contracts every component of `g - s` to a single vertex, keeping the edges
/// between `s` and the components and discarding edges inside `s`.
///
/// Vertices `0..|s|` are the members of `s` ascending; component `i` (ordered
/// by smallest vertex) becomes vertex `|s| + i`.
pub fn contract_outside(g: &Multigraph, s: &VertexSet) -> (Multigraph, Vec<VertexSet>) {
    let rest: VertexSet = (0..g.vertex_count()).filter(|v| !s.contains(v)).collect();
    let sub = g.induced_subgraph(&rest);
    let comps: Vec<VertexSet> = sub
        .graph
        .connected_components()
        .into_iter()
        .map(|c| c.into_iter().map(|i| sub.to_parent_vertex[i]).collect())
        .collect();
    let mut label = vec![0; g.vertex_count()];
    for (i, &v) in s.iter().enumerate() {
        label[v] = i;
    }
    for (i, comp) in comps.iter().enumerate() {
        for &v in comp {
            label[v] = s.len() + i;
        }
    }
    let mut out = Multigraph::new(s.len() + comps.len());
    for &(u, v) in g.edges() {
        if s.contains(&u) != s.contains(&v) {
            out.add_edge(label[u], label[v]);
        }
    }
    (out, comps)
}

/// For every `x` in `s`, the neighbours of `x` outside `s` lie in pairwise
/// different components of `g - s`.
pub fn neighbours_in_distinct_components(g: &Multigraph, s: &VertexSet) -> bool {
    let (_, comps) = contract_outside(g, s);
    let mut comp_of = vec![usize::MAX; g.vertex_count()];
    for (i, comp) in comps.iter().enumerate() {
        for &v in comp {
            comp_of[v] = i;
        }
    }
    let inc = g.incidence();
    s.iter().all(|&x| {
        let outside: VertexSet = inc[x]
            .iter()
            .map(|&e| g.other_end(e, x))
            .filter(|w| !s.contains(w))
            .collect();
        let hit: VertexSet = outside.iter().map(|&w| comp_of[w]).collect();
        hit.len() == outside.len()
    })
}

/// True when no two parallel edges join the same pair of vertices and there are no loops.
pub fn is_simple(g: &Multigraph) -> bool {
    let mut pairs = std::collections::BTreeSet::new();
    g.edges()
        .iter()
        .all(|&(u, v)| u != v && pairs.insert((u.min(v), u.max(v))))
}

/// Edges of `g` with both ends in `s`.
pub fn edges_inside(g: &Multigraph, s: &VertexSet) -> EdgeSet {
    (0..g.edge_count())
        .filter(|&e| {
            let (u, v) = g.edge(e);
            s.contains(&u) && s.contains(&v)
        })
        .collect()
}
