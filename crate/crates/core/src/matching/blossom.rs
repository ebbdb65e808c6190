//! Edmonds' blossom algorithm for maximum-cardinality matching on the simple
//! support of a multigraph.

use std::collections::VecDeque;

use crate::graph::Multigraph;

pub(crate) const NONE: usize = usize::MAX;

/// Loop-free, duplicate-free adjacency of a multigraph, plus the smallest edge
/// identifier realising each adjacent pair.
pub(crate) struct Support {
    pub n: usize,
    pub adj: Vec<Vec<usize>>,
    /// `(u, v, smallest edge id)` with `u < v`, sorted.
    pair_edges: Vec<(usize, usize, usize)>,
}

impl Support {
    pub fn new(g: &Multigraph) -> Self {
        let n = g.vertex_count();
        let mut pair_edges: Vec<(usize, usize, usize)> = g
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| u != v)
            .map(|(e, &(u, v))| (u.min(v), u.max(v), e))
            .collect();
        pair_edges.sort_unstable();
        pair_edges.dedup_by_key(|&mut (u, v, _)| (u, v));
        let mut adj = vec![Vec::new(); n];
        for &(u, v, _) in &pair_edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Support { n, adj, pair_edges }
    }

    pub fn edge_between(&self, u: usize, v: usize) -> usize {
        let key = (u.min(v), u.max(v));
        let i = self
            .pair_edges
            .binary_search_by(|&(a, b, _)| (a, b).cmp(&key))
            .expect("matched pair is adjacent");
        self.pair_edges[i].2
    }

    /// Mate array of a maximum matching, ignoring `excluded` if given.
    pub fn maximum_mates(&self, excluded: Option<usize>) -> Vec<usize> {
        Blossom::new(self, excluded).run()
    }

    pub fn matching_number(&self, excluded: Option<usize>) -> usize {
        self.maximum_mates(excluded)
            .iter()
            .filter(|&&m| m != NONE)
            .count()
            / 2
    }
}

struct Blossom<'a> {
    s: &'a Support,
    excluded: Option<usize>,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(s: &'a Support, excluded: Option<usize>) -> Self {
        let n = s.n;
        Blossom {
            s,
            excluded,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn skip(&self, v: usize) -> bool {
        self.excluded == Some(v)
    }

    fn run(mut self) -> Vec<usize> {
        let n = self.s.n;
        // greedy start
        for v in 0..n {
            if self.skip(v) || self.mate[v] != NONE {
                continue;
            }
            if let Some(&w) = self.s.adj[v]
                .iter()
                .find(|&&w| !self.skip(w) && self.mate[w] == NONE)
            {
                self.mate[v] = w;
                self.mate[w] = v;
            }
        }
        for root in 0..n {
            if self.skip(root) || self.mate[root] != NONE {
                continue;
            }
            if let Some(end) = self.find_path(root) {
                let mut v = end;
                while v != NONE {
                    let pv = self.parent[v];
                    let next = self.mate[pv];
                    self.mate[v] = pv;
                    self.mate[pv] = v;
                    v = next;
                }
            }
        }
        self.mate
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.s.n];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.s.n;
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for i in 0..self.s.adj[v].len() {
                let to = self.s.adj[v][i];
                if self.skip(to) || self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for u in 0..n {
                        if self.in_blossom[self.base[u]] {
                            self.base[u] = cur;
                            if !self.used[u] {
                                self.used[u] = true;
                                self.queue.push_back(u);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.used[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }
}
