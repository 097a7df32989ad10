//! Phased local search.
//!
//! Each selection step uses one of three rules in rotation: uniform random,
//! greedy by static degree, and least penalty. A step adds a vertex adjacent
//! to the whole clique if one exists, otherwise swaps in a vertex missing
//! exactly one member (that member becomes tabu), otherwise perturbs.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{Adjacency, Clique};
use crate::error::{invalid, Result};
use crate::util::{derive_seed, rng_from_seed, BitSet};

/// Above this many nodes adjacency is queried on the fly instead of cached.
const DENSE_LIMIT: usize = 8192;
/// Penalties decay by one after this many increments.
const PENALTY_DELAY: u32 = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlsParams {
    pub attempts: usize,
    pub max_selections: usize,
    pub seed: u64,
}

impl Default for PlsParams {
    fn default() -> Self {
        Self { attempts: 100, max_selections: 1000, seed: 0 }
    }
}

/// Best clique over independent attempts; ties go to the lowest attempt index.
pub fn pls<A: Adjacency + ?Sized>(adj: &A, params: &PlsParams) -> Result<Clique> {
    if params.attempts == 0 || params.max_selections == 0 {
        return Err(invalid("pls needs at least one attempt and one selection"));
    }
    let m = adj.order();
    if m == 0 {
        return Ok(Clique { members: Vec::new() });
    }
    let dense = (m <= DENSE_LIMIT).then(|| adj.dense_rows());
    let graph = View { adj, dense: dense.as_deref() };
    let degree: Option<Vec<usize>> = dense.as_ref().map(|rows| rows.iter().map(BitSet::count).collect());
    let best = (0..params.attempts)
        .into_par_iter()
        .map(|k| {
            let mut rng = rng_from_seed(derive_seed(params.seed, k as u64));
            (attempt(&graph, degree.as_deref(), params.max_selections, &mut rng), k)
        })
        .reduce_with(|a, b| {
            if b.0.len() > a.0.len() || (b.0.len() == a.0.len() && b.1 < a.1) {
                b
            } else {
                a
            }
        })
        .expect("at least one attempt");
    Ok(Clique::from_indices(adj, &best.0))
}

struct View<'a, A: ?Sized> {
    adj: &'a A,
    dense: Option<&'a [BitSet]>,
}

impl<A: Adjacency + ?Sized> View<'_, A> {
    #[inline]
    fn adjacent(&self, i: usize, j: usize) -> bool {
        match self.dense {
            Some(rows) => rows[i].contains(j),
            None => self.adj.adjacent(i, j),
        }
    }

    fn order(&self) -> usize {
        self.adj.order()
    }
}

#[derive(Clone, Copy)]
enum Phase {
    Random,
    Greedy,
    Penalty,
}

struct State {
    in_clique: Vec<bool>,
    clique: Vec<usize>,
    /// Number of clique members not adjacent to each vertex.
    missing: Vec<u32>,
    penalty: Vec<u32>,
    increments: u32,
}

impl State {
    fn add<A: Adjacency + ?Sized>(&mut self, g: &View<'_, A>, v: usize) {
        for u in 0..g.order() {
            if u != v && !g.adjacent(u, v) {
                self.missing[u] += 1;
            }
        }
        self.in_clique[v] = true;
        self.clique.push(v);
    }

    fn remove<A: Adjacency + ?Sized>(&mut self, g: &View<'_, A>, v: usize) {
        for u in 0..g.order() {
            if u != v && !g.adjacent(u, v) {
                self.missing[u] -= 1;
            }
        }
        self.in_clique[v] = false;
        self.clique.retain(|&x| x != v);
    }

    fn penalise(&mut self) {
        for &v in &self.clique {
            self.penalty[v] += 1;
        }
        self.increments += 1;
        if self.increments % PENALTY_DELAY == 0 {
            self.penalty.iter_mut().for_each(|p| *p = p.saturating_sub(1));
        }
    }
}

fn choose(
    phase: Phase,
    candidates: &[usize],
    degree: Option<&[usize]>,
    penalty: &[u32],
    rng: &mut ChaCha8Rng,
) -> usize {
    let pick_best = |key: &dyn Fn(usize) -> i64, rng: &mut ChaCha8Rng| {
        let best = candidates.iter().map(|&v| key(v)).max().expect("nonempty");
        let ties: Vec<usize> = candidates.iter().copied().filter(|&v| key(v) == best).collect();
        *ties.choose(rng).expect("nonempty")
    };
    match (phase, degree) {
        (Phase::Greedy, Some(deg)) => pick_best(&|v| deg[v] as i64, rng),
        (Phase::Penalty, _) => pick_best(&|v| -(penalty[v] as i64), rng),
        _ => *candidates.choose(rng).expect("nonempty"),
    }
}

fn attempt<A: Adjacency + ?Sized>(
    g: &View<'_, A>,
    degree: Option<&[usize]>,
    selections: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<usize> {
    let m = g.order();
    let mut st = State {
        in_clique: vec![false; m],
        clique: Vec::new(),
        missing: vec![0; m],
        penalty: vec![0; m],
        increments: 0,
    };
    st.add(g, rng.gen_range(0..m));
    let mut best = st.clique.clone();
    let mut tabu: Option<usize> = None;
    let phases = [Phase::Random, Phase::Greedy, Phase::Penalty];
    for step in 0..selections {
        let phase = phases[step % 3];
        let mut add = Vec::new();
        let mut swap = Vec::new();
        for v in 0..m {
            if st.in_clique[v] {
                continue;
            }
            match st.missing[v] {
                0 => add.push(v),
                1 if Some(v) != tabu => swap.push(v),
                _ => {}
            }
        }
        if !add.is_empty() {
            let v = choose(phase, &add, degree, &st.penalty, rng);
            st.add(g, v);
            if st.clique.len() > best.len() {
                best = st.clique.clone();
            }
        } else if !swap.is_empty() {
            let v = choose(phase, &swap, degree, &st.penalty, rng);
            let out = *st.clique.iter().find(|&&u| !g.adjacent(u, v)).expect("one non-neighbour");
            st.remove(g, out);
            st.add(g, v);
            tabu = Some(out);
        } else {
            // stuck at a maximal clique with no plateau move
            st.penalise();
            let v = rng.gen_range(0..m);
            let drop: Vec<usize> =
                st.clique.iter().copied().filter(|&u| u != v && !g.adjacent(u, v)).collect();
            for u in drop {
                st.remove(g, u);
            }
            if !st.in_clique[v] {
                st.add(g, v);
            }
            tabu = None;
        }
    }
    best
}
