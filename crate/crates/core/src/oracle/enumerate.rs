use crate::error::{Error, Result};
use crate::graph::Multigraph;

/// Largest order [`enumerate_subcubic`] accepts.
pub const ENUMERATION_LIMIT: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationOptions {
    pub connected_only: bool,
    /// At most one loop per vertex when allowed.
    pub loops: bool,
    /// Largest number of parallel edges between two vertices, at most 3.
    pub max_multiplicity: u8,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions { connected_only: false, loops: true, max_multiplicity: 3 }
    }
}

/// Every subcubic multigraph on the labeled vertices `0..n`, once each.
///
/// A graph is a choice of loop count per vertex and multiplicity per vertex
/// pair. Loops come first (by vertex), then pairs in lexicographic order;
/// graphs appear in lexicographic order of these counts, and their edge lists
/// follow the same slot order.
pub fn enumerate_subcubic(n: usize, options: EnumerationOptions) -> Result<SubcubicEnumeration> {
    if n > ENUMERATION_LIMIT {
        return Err(Error::SizeLimit { n, limit: ENUMERATION_LIMIT });
    }
    if options.max_multiplicity > 3 {
        return Err(Error::Precondition("edge multiplicity is capped at 3".into()));
    }
    let mut slots = Vec::new();
    if options.loops {
        slots.extend((0..n).map(|v| (v, v, 1u8)));
    }
    for u in 0..n {
        for v in u + 1..n {
            slots.push((u, v, options.max_multiplicity));
        }
    }
    Ok(SubcubicEnumeration {
        n,
        connected_only: options.connected_only,
        counts: vec![0; slots.len()],
        slots,
        deg: vec![0; n],
        started: false,
        done: false,
    })
}

pub struct SubcubicEnumeration {
    n: usize,
    connected_only: bool,
    /// `(u, v, cap)` per slot.
    slots: Vec<(usize, usize, u8)>,
    counts: Vec<u8>,
    deg: Vec<u8>,
    started: bool,
    done: bool,
}

impl SubcubicEnumeration {
    /// Moves to the next feasible assignment of counts. The odometer bumps the
    /// last slot that can grow and zeroes everything after it.
    fn advance(&mut self) -> bool {
        if !self.started {
            self.started = true;
            return true;
        }
        for k in (0..self.slots.len()).rev() {
            let (u, v, cap) = self.slots[k];
            let step = if u == v { 2 } else { 1 };
            if self.counts[k] < cap && self.deg[u] + step <= 3 && self.deg[v] + step <= 3 {
                self.counts[k] += 1;
                if u == v {
                    self.deg[u] += 2;
                } else {
                    self.deg[u] += 1;
                    self.deg[v] += 1;
                }
                return true;
            }
            let c = self.counts[k];
            self.counts[k] = 0;
            if u == v {
                self.deg[u] -= 2 * c;
            } else {
                self.deg[u] -= c;
                self.deg[v] -= c;
            }
        }
        false
    }

    fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut root: Vec<usize> = (0..self.n).collect();
        fn find(root: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while root[r] != r {
                r = root[r];
            }
            root[x] = r;
            r
        }
        let mut parts = self.n;
        for (k, &(u, v, _)) in self.slots.iter().enumerate() {
            if self.counts[k] > 0 && u != v {
                let (a, b) = (find(&mut root, u), find(&mut root, v));
                if a != b {
                    root[a] = b;
                    parts -= 1;
                }
            }
        }
        parts == 1
    }

    fn current(&self) -> Multigraph {
        let mut g = Multigraph::new(self.n);
        for (k, &(u, v, _)) in self.slots.iter().enumerate() {
            for _ in 0..self.counts[k] {
                g.add_edge(u, v);
            }
        }
        g
    }
}

impl Iterator for SubcubicEnumeration {
    type Item = Multigraph;

    fn next(&mut self) -> Option<Multigraph> {
        while !self.done {
            if !self.advance() {
                self.done = true;
                break;
            }
            if !self.connected_only || self.is_connected() {
                return Some(self.current());
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::serialize_multigraph;
    use std::collections::BTreeSet;

    fn count(n: usize, connected_only: bool, loops: bool) -> usize {
        let options = EnumerationOptions { connected_only, loops, max_multiplicity: 3 };
        enumerate_subcubic(n, options).unwrap().count()
    }

    /// Counts by trying every multiplicity vector and filtering.
    fn count_by_filtering(n: usize, connected_only: bool, loops: bool) -> usize {
        let mut slots = Vec::new();
        if loops {
            slots.extend((0..n).map(|v| (v, v, 2usize)));
        }
        for u in 0..n {
            for v in u + 1..n {
                slots.push((u, v, 4));
            }
        }
        let total: usize = slots.iter().map(|s| s.2).product();
        let mut found = 0;
        for mut code in 0..total {
            let mut g = Multigraph::new(n);
            for &(u, v, base) in &slots {
                for _ in 0..code % base {
                    g.add_edge(u, v);
                }
                code /= base;
            }
            if g.max_degree() <= 3 && (!connected_only || g.is_connected()) {
                found += 1;
            }
        }
        found
    }

    #[test]
    fn small_orders_by_hand() {
        assert_eq!(count(1, false, true), 2);
        assert_eq!(count(1, false, false), 1);
        assert_eq!(count(2, false, false), 4);
        assert_eq!(count(0, false, true), 1);
    }

    #[test]
    fn agrees_with_filtering() {
        for n in 0..=4 {
            for connected in [false, true] {
                for loops in [false, true] {
                    assert_eq!(count(n, connected, loops), count_by_filtering(n, connected, loops));
                }
            }
        }
    }

    #[test]
    fn known_totals() {
        let all: Vec<usize> = (1..=5).map(|n| count(n, false, true)).collect();
        assert_eq!(all, vec![2, 10, 72, 756, 10384]);
        let connected: Vec<usize> = (1..=5).map(|n| count(n, true, true)).collect();
        assert_eq!(connected, vec![2, 6, 28, 264, 3352]);
        let loopless: Vec<usize> = (1..=5).map(|n| count(n, false, false)).collect();
        assert_eq!(loopless, vec![1, 4, 23, 214, 2698]);
    }

    #[test]
    fn distinct_and_subcubic() {
        let graphs: Vec<_> = enumerate_subcubic(4, EnumerationOptions::default()).unwrap().collect();
        let texts: BTreeSet<String> = graphs.iter().map(serialize_multigraph).collect();
        assert_eq!(texts.len(), graphs.len());
        assert!(graphs.iter().all(|g| g.max_degree() <= 3));
        assert!(enumerate_subcubic(9, EnumerationOptions::default()).is_err());
        let capped = EnumerationOptions { max_multiplicity: 1, loops: false, connected_only: false };
        assert_eq!(enumerate_subcubic(2, capped).unwrap().count(), 2);
    }
}
