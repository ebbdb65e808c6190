//! Seeded random multigraph generators for property suites and `verify --random`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Multigraph;
use crate::structure::find_cut_edges;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random subcubic multigraph on `n` vertices. Edges are proposed uniformly
/// among ordered vertex pairs (a pair `(v, v)` proposes a loop) and kept when
/// both endpoints have room.
pub fn random_subcubic<R: Rng>(rng: &mut R, n: usize) -> Multigraph {
    let mut g = Multigraph::new(n);
    if n == 0 {
        return g;
    }
    let mut deg = vec![0usize; n];
    let attempts = rng.gen_range(0..=3 * n);
    for _ in 0..attempts {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        let fits = if u == v { deg[u] == 0 || deg[u] == 1 } else { deg[u] < 3 && deg[v] < 3 };
        if fits {
            g.add_edge(u, v);
            deg[u] += 1;
            deg[v] += 1;
        }
    }
    g
}

/// A random tree with maximum degree 3 on `n >= 1` vertices.
pub fn random_subcubic_tree<R: Rng>(rng: &mut R, n: usize) -> Multigraph {
    let mut g = Multigraph::new(n);
    let mut deg = vec![0usize; n];
    for v in 1..n {
        let open: Vec<usize> = (0..v).filter(|&u| deg[u] < 3).collect();
        let &u = open.choose(rng).expect("a subcubic tree always has an open vertex");
        g.add_edge(u, v);
        deg[u] += 1;
        deg[v] += 1;
    }
    g
}

/// A uniformly paired configuration-model cubic multigraph on `n` vertices
/// (`n` even, at least 2), resampled until it is loopless, connected and
/// bridgeless. Parallel edges are kept.
pub fn random_bridgeless_cubic<R: Rng>(rng: &mut R, n: usize) -> Multigraph {
    assert!(n >= 2 && n % 2 == 0, "cubic graphs need an even positive order");
    loop {
        let mut points: Vec<usize> = (0..3 * n).map(|p| p / 3).collect();
        points.shuffle(rng);
        let pairs: Vec<(usize, usize)> = points.chunks(2).map(|c| (c[0], c[1])).collect();
        if pairs.iter().any(|&(u, v)| u == v) {
            continue;
        }
        let g = Multigraph::from_edges(n, pairs).unwrap();
        if g.is_connected() && find_cut_edges(&g).is_empty() {
            return g;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_respect_their_contracts() {
        let mut rng = seeded(7);
        for _ in 0..50 {
            let n = rng.gen_range(0..14);
            assert!(random_subcubic(&mut rng, n).validate_subcubic().is_ok());
            let t = random_subcubic_tree(&mut rng, n.max(1));
            assert!(t.is_connected() && t.max_degree() <= 3);
            assert_eq!(t.edge_count(), n.max(1) - 1);
            let half = rng.gen_range(1..7);
            let c = random_bridgeless_cubic(&mut rng, 2 * half);
            assert!(c.is_cubic() && find_cut_edges(&c).is_empty());
        }
    }

    #[test]
    fn same_seed_same_graph() {
        let a = random_bridgeless_cubic(&mut seeded(3), 10);
        let b = random_bridgeless_cubic(&mut seeded(3), 10);
        assert_eq!(a, b);
    }
}
