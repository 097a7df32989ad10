//! Bitset branch and bound with a greedy colouring bound.

use std::collections::HashMap;

use super::{Adjacency, Clique};
use crate::error::{Error, Result};
use crate::util::BitSet;

pub const DEFAULT_EXACT_LIMIT: usize = 4096;

pub fn max_clique_exact<A: Adjacency + ?Sized>(adj: &A) -> Result<Clique> {
    max_clique_exact_with_limit(adj, DEFAULT_EXACT_LIMIT)
}

/// Maximum clique, refusing instances with more than `limit` nodes.
///
/// Deterministic for a given node order: vertices are renumbered in
/// reverse smallest-last order (ties to the lower index) and branched from
/// the back.
pub fn max_clique_exact_with_limit<A: Adjacency + ?Sized>(adj: &A, limit: usize) -> Result<Clique> {
    let m = adj.order();
    if m > limit {
        return Err(Error::TooLarge {
            what: "exact clique search",
            detail: format!("{m} nodes exceeds the limit of {limit}; use the pls solver"),
        });
    }
    if m == 0 {
        return Ok(Clique { members: Vec::new() });
    }
    let rows = adj.dense_rows();
    let order = smallest_last(&rows);
    let words = m.div_ceil(64);
    // adjacency in the new numbering
    let mut nb = vec![0u64; m * words];
    for (a, &va) in order.iter().enumerate() {
        for (b, &vb) in order.iter().enumerate() {
            if rows[va].contains(vb) {
                nb[a * words + (b >> 6)] |= 1 << (b & 63);
            }
        }
    }
    let mut search = Search { words, nb, forbid: Vec::new(), current: Vec::new(), best: vec![0] };
    let mut p = vec![0u64; words];
    for v in 0..m {
        p[v >> 6] |= 1 << (v & 63);
    }
    if adj.translation_closed() {
        let labels: Vec<u32> = order.iter().map(|&v| adj.label(v)).collect();
        let index: HashMap<u32, usize> = labels.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        search.forbid = vec![0u64; m * words];
        search.expand_root(&p, &labels, &index);
    } else {
        search.expand(&p);
    }
    let idx: Vec<usize> = search.best.iter().map(|&v| order[v]).collect();
    Ok(Clique::from_indices(adj, &idx))
}

struct Search {
    words: usize,
    nb: Vec<u64>,
    /// Row `u`: candidates `x` with `x ^ u` a finished root vertex.
    forbid: Vec<u64>,
    current: Vec<usize>,
    best: Vec<usize>,
}

impl Search {
    fn row(&self, v: usize) -> &[u64] {
        &self.nb[v * self.words..(v + 1) * self.words]
    }

    /// Sequential greedy colouring of `p`; returns vertices with their colour
    /// numbers, colours non-decreasing.
    fn colour(&self, p: &[u64]) -> Vec<(usize, usize)> {
        let mut uncoloured = p.to_vec();
        let mut out = Vec::new();
        let mut k = 0;
        while uncoloured.iter().any(|&w| w != 0) {
            k += 1;
            let mut q = uncoloured.clone();
            while let Some(v) = first_bit(&q) {
                q[v >> 6] &= !(1 << (v & 63));
                uncoloured[v >> 6] &= !(1 << (v & 63));
                for (w, r) in q.iter_mut().zip(self.row(v)) {
                    *w &= !r;
                }
                out.push((v, k));
            }
        }
        out
    }

    /// Top level for translation-closed instances. Every clique through 0
    /// has a translate whose members, and all pairwise sums of members, lie
    /// at or after its first root vertex `v`. So once `w` is finished, `x`
    /// and `u` with `x ^ u = w` never need to meet below any later root.
    fn expand_root(&mut self, p: &[u64], labels: &[u32], index: &HashMap<u32, usize>) {
        let mut p = p.to_vec();
        let m = labels.len();
        for &(v, k) in self.colour(&p).iter().rev() {
            if k <= self.best.len() {
                return;
            }
            self.current.push(v);
            let next: Vec<u64> = self.candidates(&p, v);
            // a lone root vertex never beats the initial incumbent
            if next.iter().any(|&w| w != 0) {
                self.expand(&next);
            }
            self.current.pop();
            p[v >> 6] &= !(1 << (v & 63));
            for u in 0..m {
                if let Some(&i) = index.get(&(labels[v] ^ labels[u])) {
                    self.forbid[u * self.words + (i >> 6)] |= 1 << (i & 63);
                }
            }
        }
    }

    fn candidates(&self, p: &[u64], v: usize) -> Vec<u64> {
        let mut next: Vec<u64> = p.iter().zip(self.row(v)).map(|(a, b)| a & b).collect();
        if !self.forbid.is_empty() {
            for (w, f) in next.iter_mut().zip(&self.forbid[v * self.words..(v + 1) * self.words]) {
                *w &= !f;
            }
        }
        next
    }

    fn expand(&mut self, p: &[u64]) {
        let mut p = p.to_vec();
        let coloured = self.colour(&p);
        for &(v, k) in coloured.iter().rev() {
            if self.current.len() + k <= self.best.len() {
                return;
            }
            self.current.push(v);
            let next = self.candidates(&p, v);
            if next.iter().all(|&w| w == 0) {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(&next);
            }
            self.current.pop();
            p[v >> 6] &= !(1 << (v & 63));
        }
    }
}

/// Repeatedly removes a vertex of least remaining degree; returns the
/// removal sequence reversed, so dense cores come first.
fn smallest_last(rows: &[BitSet]) -> Vec<usize> {
    let m = rows.len();
    let mut alive = vec![true; m];
    let mut degree: Vec<usize> = rows.iter().map(|r| r.count()).collect();
    let mut seq = Vec::with_capacity(m);
    for _ in 0..m {
        let v = (0..m).filter(|&v| alive[v]).min_by_key(|&v| (degree[v], v)).expect("a live vertex");
        alive[v] = false;
        seq.push(v);
        for u in 0..m {
            if alive[u] && rows[v].contains(u) {
                degree[u] -= 1;
            }
        }
    }
    seq.reverse();
    seq
}

fn first_bit(words: &[u64]) -> Option<usize> {
    words.iter().enumerate().find(|(_, &w)| w != 0).map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clique::{is_clique_indices, DenseGraph};
    use crate::util::rng_from_seed;
    use rand::Rng;

    fn brute_force(g: &DenseGraph) -> usize {
        let m = g.order();
        (0u32..1 << m)
            .filter(|&mask| {
                let idx: Vec<usize> = (0..m).filter(|&i| (mask >> i) & 1 == 1).collect();
                is_clique_indices(g, &idx)
            })
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn complete_and_cycle() {
        let k = DenseGraph::from_edges(6, (0..6).flat_map(|i| ((i + 1)..6).map(move |j| (i, j))));
        assert_eq!(max_clique_exact(&k).unwrap().size(), 6);
        let c5 = DenseGraph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5)));
        assert_eq!(max_clique_exact(&c5).unwrap().size(), 2);
        assert_eq!(max_clique_exact(&DenseGraph::from_edges(0, [])).unwrap().size(), 0);
        assert_eq!(max_clique_exact(&DenseGraph::from_edges(3, [])).unwrap().size(), 1);
    }

    #[test]
    fn agrees_with_brute_force() {
        let mut rng = rng_from_seed(77);
        for _ in 0..300 {
            let m = rng.gen_range(1..=16);
            let p: f64 = rng.gen_range(0.1..0.95);
            let mut edges = Vec::new();
            for i in 0..m {
                for j in (i + 1)..m {
                    if rng.gen_bool(p) {
                        edges.push((i, j));
                    }
                }
            }
            let g = DenseGraph::from_edges(m, edges);
            let c = max_clique_exact(&g).unwrap();
            let idx: Vec<usize> = c.members.iter().map(|&x| x as usize).collect();
            assert!(is_clique_indices(&g, &idx));
            assert_eq!(c.size(), brute_force(&g));
        }
    }

    #[test]
    fn refuses_large_instances() {
        let g = DenseGraph::from_edges(10, []);
        assert!(max_clique_exact_with_limit(&g, 9).is_err());
        assert!(max_clique_exact_with_limit(&g, 10).is_ok());
    }

    #[test]
    fn translation_pruning_keeps_the_optimum() {
        use crate::bitgraph::Graph;
        use crate::cwsmap::clique_instance;
        use crate::pauli::{amp_damp_error_set, symmetric_error_set, AdPermutation};
        let mut rng = rng_from_seed(78);
        for t in 0..60 {
            let n = rng.gen_range(3..=7);
            let g = Graph::random(n, &mut rng);
            let e = if t % 2 == 0 {
                symmetric_error_set(n, rng.gen_range(2..=3)).unwrap()
            } else {
                amp_damp_error_set(n, 1, AdPermutation::Xz).unwrap()
            };
            let inst = clique_instance(&g, &e).unwrap();
            assert!(inst.translation_closed());
            // the same graph without the closure hint takes the plain path
            let m = inst.len();
            let plain = DenseGraph::from_edges(
                m,
                (0..m).flat_map(|i| ((i + 1)..m).map(move |j| (i, j))).filter(|&(i, j)| inst.adjacent(i, j)),
            );
            let fast = max_clique_exact(&inst).unwrap();
            assert!(crate::clique::is_clique(&inst, &fast.members));
            assert_eq!(fast.size(), max_clique_exact(&plain).unwrap().size(), "{g:?}");
        }
    }
}
