//! Maximum-clique search over clique instances: an exact branch-and-bound
//! solver and phased local search.

mod dimacs;
mod exact;
mod pls;

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::cwsmap::CliqueInstance;
use crate::error::Result;
use crate::util::BitSet;

pub use dimacs::{read_dimacs, DenseGraph};
pub use exact::{max_clique_exact, max_clique_exact_with_limit, DEFAULT_EXACT_LIMIT};
pub use pls::{pls, PlsParams};

/// Undirected graph on nodes `0..order()`, queried by index.
pub trait Adjacency: Sync {
    fn order(&self) -> usize;

    fn adjacent(&self, i: usize, j: usize) -> bool;

    /// Label reported for node `i` in a [`Clique`].
    fn label(&self, i: usize) -> u32 {
        i as u32
    }

    /// True when labels are bit vectors and, for any clique `C`, translating
    /// `{0} ∪ C` by a member of `C` gives `{0}` plus another clique of the
    /// same size. The exact solver uses this to skip equivalent branches.
    fn translation_closed(&self) -> bool {
        false
    }

    /// Bitset of the neighbours of `i`, one row per node.
    fn dense_rows(&self) -> Vec<BitSet> {
        let m = self.order();
        (0..m)
            .map(|i| {
                let mut row = BitSet::new(m);
                for j in 0..m {
                    if self.adjacent(i, j) {
                        row.insert(j);
                    }
                }
                row
            })
            .collect()
    }
}

impl Adjacency for CliqueInstance {
    fn order(&self) -> usize {
        self.len()
    }

    #[inline]
    fn adjacent(&self, i: usize, j: usize) -> bool {
        CliqueInstance::adjacent(self, i, j)
    }

    fn label(&self, i: usize) -> u32 {
        self.nodes()[i]
    }

    fn translation_closed(&self) -> bool {
        CliqueInstance::translation_closed(self)
    }

    fn dense_rows(&self) -> Vec<BitSet> {
        // XOR structure: row i is the node list filtered by the forbidden set
        let nodes = self.nodes();
        let forbidden = self.forbidden();
        nodes
            .iter()
            .map(|&x| {
                let mut row = BitSet::new(nodes.len());
                for (j, &y) in nodes.iter().enumerate() {
                    if x != y && !forbidden.contains((x ^ y) as usize) {
                        row.insert(j);
                    }
                }
                row
            })
            .collect()
    }
}

/// A clique as sorted node labels (bit vectors for CWS instances).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clique {
    pub members: Vec<u32>,
}

impl Clique {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub(crate) fn from_indices<A: Adjacency + ?Sized>(adj: &A, idx: &[usize]) -> Self {
        let mut members: Vec<u32> = idx.iter().map(|&i| adj.label(i)).collect();
        members.sort_unstable();
        Self { members }
    }
}

/// Pairwise adjacency check on node labels of a CWS instance.
pub fn is_clique(inst: &CliqueInstance, members: &[u32]) -> bool {
    members.iter().enumerate().all(|(a, &x)| {
        inst.nodes().binary_search(&x).is_ok()
            && members[a + 1..].iter().all(|&y| inst.adjacent_values(x, y))
    })
}

/// Pairwise adjacency check on node indices.
pub fn is_clique_indices<A: Adjacency + ?Sized>(adj: &A, idx: &[usize]) -> bool {
    idx.iter().enumerate().all(|(a, &i)| idx[a + 1..].iter().all(|&j| adj.adjacent(i, j)))
}

/// Which solver to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "solver", rename_all = "snake_case")]
pub enum SolverSpec {
    Exact { limit: usize },
    Pls { attempts: usize, selections: usize, seed: u64 },
}

impl SolverSpec {
    pub fn exact() -> Self {
        SolverSpec::Exact { limit: DEFAULT_EXACT_LIMIT }
    }

    pub fn pls(params: PlsParams) -> Self {
        SolverSpec::Pls { attempts: params.attempts, selections: params.max_selections, seed: params.seed }
    }

    /// Stable string used to key cached results.
    pub fn key(&self) -> String {
        match self {
            SolverSpec::Exact { .. } => "exact".into(),
            SolverSpec::Pls { attempts, selections, seed } => format!("pls:{attempts}:{selections}:{seed}"),
        }
    }

    pub fn solve<A: Adjacency + ?Sized>(&self, adj: &A) -> Result<SolverReport> {
        let start = Instant::now();
        let (clique, attempts_used) = match *self {
            SolverSpec::Exact { limit } => (max_clique_exact_with_limit(adj, limit)?, 1),
            SolverSpec::Pls { attempts, selections, seed } => {
                let params = PlsParams { attempts, max_selections: selections, seed };
                (pls(adj, &params)?, attempts)
            }
        };
        Ok(SolverReport {
            size: clique.size(),
            members: clique.members,
            attempts_used,
            wall_ms: start.elapsed().as_millis() as u64,
        })
    }
}

/// Solver output as emitted in JSON reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolverReport {
    pub size: usize,
    pub members: Vec<u32>,
    pub attempts_used: usize,
    pub wall_ms: u64,
}
