//! Exact ground truth for small graphs: the largest 2-regular subgraph by
//! exhaustive search, labeled enumeration of subcubic multigraphs, and an
//! end-to-end check of the omission bound.

mod check;
mod enumerate;

pub use check::{check_all, check_theorem, Counterexample, EnumerationSummary, OracleMode, TheoremCheck};
pub use enumerate::{enumerate_subcubic, EnumerationOptions, SubcubicEnumeration, ENUMERATION_LIMIT};

use crate::error::{Error, Result};
use crate::extract::{bound_omitted, exact_omission, TwoRegularSubgraph};
use crate::graph::{EdgeSet, Multigraph};
use crate::structure::{find_cut_edges, one_deficit};

/// Largest order accepted by [`brute_force_f2`] without the override.
pub const ORACLE_LIMIT: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    /// Largest number of vertices in a 2-regular subgraph.
    pub f2_exact: usize,
    /// Lexicographically smallest maximum edge set, as cycles.
    pub witness: TwoRegularSubgraph,
    /// `max{0, ⌊(d + c - 1)/2⌋}`.
    pub bound: usize,
    /// `n - f2_exact <= bound`.
    pub bound_holds: bool,
    /// `n - f2_exact` equals `(d + c - 1)/2` exactly.
    pub equality_exact: bool,
}

/// Exact `f2` for graphs of order at most [`ORACLE_LIMIT`].
pub fn brute_force_f2(g: &Multigraph) -> Result<OracleReport> {
    if g.vertex_count() > ORACLE_LIMIT {
        return Err(Error::SizeLimit { n: g.vertex_count(), limit: ORACLE_LIMIT });
    }
    brute_force_f2_unbounded(g)
}

/// Exact `f2` with no order limit; the running time is exponential in the size.
pub fn brute_force_f2_unbounded(g: &Multigraph) -> Result<OracleReport> {
    g.validate_subcubic()?;
    let n = g.vertex_count();
    let mut search = Search::new(g);
    search.run(0);
    let witness = TwoRegularSubgraph::from_edges(g, &search.best_edges)?;
    witness.validate(g)?;
    let f2 = witness.vertex_count();
    let c = find_cut_edges(g).len();
    let d = one_deficit(g)?;
    let bound = bound_omitted(n, g.edge_count(), c)?;
    Ok(OracleReport {
        f2_exact: f2,
        witness,
        bound,
        bound_holds: n - f2 <= bound,
        equality_exact: exact_omission(d, c) == Some(n - f2),
    })
}

/// Backtracking over edges in identifier order, taking each edge before
/// skipping it, so the first maximum found is the lexicographically smallest.
struct Search<'a> {
    g: &'a Multigraph,
    deg: Vec<u8>,
    /// Undecided edges at each vertex; a loop counts twice.
    open: Vec<u8>,
    taken: Vec<usize>,
    /// Vertices with degree 2 in `taken`.
    covered: usize,
    /// Vertices that can still finish with degree 2.
    reachable: usize,
    best: usize,
    best_edges: EdgeSet,
}

fn can_finish(d: u8, o: u8) -> bool {
    d + o >= 2 && d <= 2
}

impl<'a> Search<'a> {
    fn new(g: &'a Multigraph) -> Self {
        let n = g.vertex_count();
        let mut open = vec![0u8; n];
        for &(u, v) in g.edges() {
            open[u] += 1;
            open[v] += 1;
        }
        let reachable = open.iter().filter(|&&o| can_finish(0, o)).count();
        Search {
            g,
            deg: vec![0; n],
            open,
            taken: Vec::new(),
            covered: 0,
            reachable,
            best: 0,
            best_edges: EdgeSet::new(),
        }
    }

    /// Moves vertex `x` to the state `(d, o)`.
    fn set(&mut self, x: usize, d: u8, o: u8) {
        let (d0, o0) = (self.deg[x], self.open[x]);
        self.covered = self.covered + usize::from(d == 2) - usize::from(d0 == 2);
        self.reachable = self.reachable + usize::from(can_finish(d, o)) - usize::from(can_finish(d0, o0));
        self.deg[x] = d;
        self.open[x] = o;
    }

    /// Decides edge `e`: `take` puts it in the subgraph, `undo` reverts the decision.
    fn decide(&mut self, e: usize, take: bool, undo: bool) {
        let (u, v) = self.g.edge(e);
        let ends: &[usize] = if u == v { &[u] } else { &[u, v] };
        let times = if u == v { 2 } else { 1 };
        for &x in ends {
            let (mut d, mut o) = (self.deg[x], self.open[x]);
            if undo {
                o += times;
                if take {
                    d -= times;
                }
            } else {
                o -= times;
                if take {
                    d += times;
                }
            }
            self.set(x, d, o);
        }
    }

    fn stranded(&self, x: usize) -> bool {
        self.deg[x] == 1 && self.open[x] == 0
    }

    fn run(&mut self, e: usize) {
        if self.reachable <= self.best {
            return;
        }
        if e == self.g.edge_count() {
            // every vertex is at degree 0 or 2: a vertex left at degree 1
            // is pruned when its last edge is decided
            debug_assert!(self.deg.iter().all(|&d| d != 1));
            self.best = self.covered;
            self.best_edges = self.taken.iter().copied().collect();
            return;
        }
        let (u, v) = self.g.edge(e);
        let add = if u == v { 2 } else { 1 };
        for take in [true, false] {
            if take && (self.deg[u] + add > 2 || self.deg[v] + add > 2) {
                continue;
            }
            self.decide(e, take, false);
            if take {
                self.taken.push(e);
            }
            if !self.stranded(u) && !self.stranded(v) {
                self.run(e + 1);
            }
            if take {
                self.taken.pop();
            }
            self.decide(e, take, true);
        }
    }
}
