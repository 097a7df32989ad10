//! Canonical labeling by exhaustive search over refinement-respecting relabelings.
//!
//! Nodes are first split into cells by iterated degree refinement (color by
//! degree, then by the multiset of neighbor colors, until stable). The
//! ordered cell list is isomorphism-invariant, so minimizing the adjacency
//! bitstring over relabelings that keep each cell in its slot range gives a
//! canonical form. The number of relabelings attaining the minimum equals
//! `|Aut(G)|`. Worst case (regular graphs) is `n!`, hence the `n <= 10` limit.

use super::Graph;
use crate::util::factorial;

/// Largest node count accepted by [`canonical_form`].
pub const MAX_CANON_NODES: usize = 10;

/// Canonical adjacency bitstring plus automorphism group order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    n: u8,
    /// Upper-triangle bits in graph6 pair order, first pair most significant,
    /// minimized over all relabelings compatible with the refined coloring.
    pub canon_bits: u128,
    pub aut_size: u64,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// The canonical representative as a graph.
    pub fn graph(&self) -> Graph {
        let n = self.n();
        let total = n * (n - 1) / 2;
        let mut g = Graph::empty(n);
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if (self.canon_bits >> (total - 1 - k)) & 1 == 1 {
                    g.set_edge(i, j, true);
                }
                k += 1;
            }
        }
        g
    }
}

/// Canonical form of `g`. Panics if `g.n() > 10`.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.n();
    assert!(n <= MAX_CANON_NODES, "canonical_form is limited to n <= {MAX_CANON_NODES}");
    let cells = refine(g);
    // slot p may hold any node whose color equals slot_color[p]
    let mut slot_color = Vec::with_capacity(n);
    let mut sorted: Vec<usize> = (0..n).collect();
    sorted.sort_by_key(|&v| cells[v]);
    for &v in &sorted {
        slot_color.push(cells[v]);
    }
    let total = n * (n - 1) / 2;
    let mut search = Search {
        g,
        n,
        total,
        cells: &cells,
        slot_color: &slot_color,
        placed: Vec::with_capacity(n),
        used: 0,
        best: None,
        count: 0,
    };
    search.descend(0, 0, false);
    CanonicalForm { n: n as u8, canon_bits: search.best.unwrap_or(0), aut_size: search.count }
}

/// `n! / |Aut(G)|`: the number of labeled graphs isomorphic to `g`.
pub fn orbit_size(g: &Graph) -> u64 {
    factorial(g.n() as u64) / canonical_form(g).aut_size
}

/// Equitable coloring by iterated neighbor-color refinement.
fn refine(g: &Graph) -> Vec<u32> {
    let n = g.n();
    let mut color: Vec<u32> = (0..n).map(|v| g.degree(v) as u32).collect();
    let mut classes = count_distinct(&color);
    // compress initial colors to ranks
    color = rank(&color.iter().map(|&c| vec![c]).collect::<Vec<_>>());
    loop {
        let sigs: Vec<Vec<u32>> = (0..n)
            .map(|v| {
                let mut s: Vec<u32> =
                    (0..n).filter(|&w| g.has_edge(v, w)).map(|w| color[w]).collect();
                s.sort_unstable();
                s.insert(0, color[v]);
                s
            })
            .collect();
        let next = rank(&sigs);
        let k = count_distinct(&next);
        color = next;
        if k == classes {
            break;
        }
        classes = k;
    }
    color
}

fn rank(sigs: &[Vec<u32>]) -> Vec<u32> {
    let mut uniq: Vec<&Vec<u32>> = sigs.iter().collect();
    uniq.sort();
    uniq.dedup();
    sigs.iter().map(|s| uniq.binary_search(&s).unwrap() as u32).collect()
}

fn count_distinct(c: &[u32]) -> usize {
    let mut v = c.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    total: usize,
    cells: &'a [u32],
    slot_color: &'a [u32],
    placed: Vec<usize>,
    used: u16,
    best: Option<u128>,
    count: u64,
}

impl Search<'_> {
    /// `prefix` holds the bits for slots `0..p`; `ahead` is set once the
    /// prefix is already strictly smaller than the incumbent's.
    fn descend(&mut self, p: usize, prefix: u128, ahead: bool) {
        if p == self.n {
            match self.best {
                Some(b) if prefix > b => {}
                Some(b) if prefix == b => self.count += 1,
                _ => {
                    self.best = Some(prefix);
                    self.count = 1;
                }
            }
            return;
        }
        let want = self.slot_color[p];
        for v in 0..self.n {
            if (self.used >> v) & 1 == 1 || self.cells[v] != want {
                continue;
            }
            let mut bits = prefix;
            for &u in &self.placed {
                bits = (bits << 1) | self.g.has_edge(u, v) as u128;
            }
            let len = (p + 1) * p / 2;
            let mut now_ahead = ahead;
            if !ahead {
                if let Some(b) = self.best {
                    let head = if len == 0 { 0 } else { b >> (self.total - len) };
                    if bits > head {
                        continue;
                    }
                    now_ahead = bits < head;
                }
            }
            self.placed.push(v);
            self.used |= 1 << v;
            self.descend(p + 1, bits, now_ahead);
            self.used &= !(1 << v);
            self.placed.pop();
        }
    }
}
