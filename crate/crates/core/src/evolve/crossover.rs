//! Bitstring and graph crossovers, and the single-toggle mutation.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::bitgraph::{spectral_bisection, Graph};
use crate::error::{invalid, Result};

/// Crossover operator used by the GA.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CrossoverKind {
    SinglePoint,
    TwoPoint,
    /// Each locus is exchanged with probability `p_e`.
    Uniform { p_e: f64 },
    /// Two fresh uniform graphs, ignoring the parents.
    Random,
    Spectral,
}

impl CrossoverKind {
    pub fn name(&self) -> &'static str {
        match self {
            CrossoverKind::SinglePoint => "single_point",
            CrossoverKind::TwoPoint => "two_point",
            CrossoverKind::Uniform { .. } => "uniform",
            CrossoverKind::Random => "random",
            CrossoverKind::Spectral => "spectral",
        }
    }
}

impl std::str::FromStr for CrossoverKind {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "single_point" | "single-point" => Ok(CrossoverKind::SinglePoint),
            "two_point" | "two-point" => Ok(CrossoverKind::TwoPoint),
            "uniform" => Ok(CrossoverKind::Uniform { p_e: 0.5 }),
            "random" => Ok(CrossoverKind::Random),
            "spectral" => Ok(CrossoverKind::Spectral),
            other => Err(crate::Error::Parse(format!("unknown crossover '{other}'"))),
        }
    }
}

/// Upper triangle of the adjacency matrix, row by row: `(0,1), (0,2), ..., (n-2,n-1)`.
pub fn encode_bits(g: &Graph) -> Vec<bool> {
    let n = g.n();
    (0..n).flat_map(|i| ((i + 1)..n).map(move |j| g.has_edge(i, j))).collect()
}

pub fn decode_bits(bits: &[bool], n: usize) -> Result<Graph> {
    if bits.len() != n * n.saturating_sub(1) / 2 {
        return Err(invalid(format!("{} bits do not encode a graph on {n} nodes", bits.len())));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            g.set_edge(i, j, bits[k]);
            k += 1;
        }
    }
    Ok(g)
}

/// Exchanges every locus at or beyond `cut`.
pub fn single_point_at(p1: &[bool], p2: &[bool], cut: usize) -> (Vec<bool>, Vec<bool>) {
    two_point_at(p1, p2, cut, p1.len())
}

/// Exchanges loci in `lo..hi`.
pub fn two_point_at(p1: &[bool], p2: &[bool], lo: usize, hi: usize) -> (Vec<bool>, Vec<bool>) {
    let (mut c1, mut c2) = (p1.to_vec(), p2.to_vec());
    c1[lo..hi].copy_from_slice(&p2[lo..hi]);
    c2[lo..hi].copy_from_slice(&p1[lo..hi]);
    (c1, c2)
}

/// Bitstring crossover for the positional kinds. `Random` and `Spectral`
/// act on graphs; see [`crossover_graphs`].
pub fn crossover_bits<R: Rng + ?Sized>(
    kind: CrossoverKind,
    p1: &[bool],
    p2: &[bool],
    rng: &mut R,
) -> Result<(Vec<bool>, Vec<bool>)> {
    if p1.len() != p2.len() {
        return Err(invalid("parents differ in length"));
    }
    let b = p1.len();
    match kind {
        CrossoverKind::SinglePoint => {
            if b == 0 {
                return Ok((p1.to_vec(), p2.to_vec()));
            }
            Ok(single_point_at(p1, p2, rng.gen_range(1..=b)))
        }
        CrossoverKind::TwoPoint => {
            let x = rng.gen_range(0..=b);
            let y = rng.gen_range(0..=b);
            Ok(two_point_at(p1, p2, x.min(y), x.max(y)))
        }
        CrossoverKind::Uniform { p_e } => {
            let (mut c1, mut c2) = (p1.to_vec(), p2.to_vec());
            for k in 0..b {
                if rng.gen_bool(p_e.clamp(0.0, 1.0)) {
                    std::mem::swap(&mut c1[k], &mut c2[k]);
                }
            }
            Ok((c1, c2))
        }
        CrossoverKind::Random | CrossoverKind::Spectral => {
            Err(invalid(format!("{} crossover acts on graphs, not bitstrings", kind.name())))
        }
    }
}

/// Crossover of two graphs on the same node count.
pub fn crossover_graphs<R: Rng + ?Sized>(
    kind: CrossoverKind,
    p1: &Graph,
    p2: &Graph,
    rng: &mut R,
) -> Result<(Graph, Graph)> {
    let n = p1.n();
    if p2.n() != n {
        return Err(invalid("parents differ in node count"));
    }
    match kind {
        CrossoverKind::Random => Ok((Graph::random(n, rng), Graph::random(n, rng))),
        CrossoverKind::Spectral => crossover_spectral(p1, p2, rng),
        _ => {
            let (c1, c2) = crossover_bits(kind, &encode_bits(p1), &encode_bits(p2), rng)?;
            Ok((decode_bits(&c1, n)?, decode_bits(&c2, n)?))
        }
    }
}

/// Spectral-bisection crossover.
///
/// Each parent is split by [`spectral_bisection`]. Child 1 keeps the first
/// part of `p1` in place and receives the second part of `p2`, mapped onto
/// the remaining slots in ascending order; child 2 is the mirror image. The
/// two fragments are then rejoined by degree deficits.
pub fn crossover_spectral<R: Rng + ?Sized>(p1: &Graph, p2: &Graph, rng: &mut R) -> Result<(Graph, Graph)> {
    let n = p1.n();
    if p2.n() != n || n < 2 {
        return Err(invalid("spectral crossover needs two parents on the same n >= 2 nodes"));
    }
    let b1 = spectral_bisection(p1)?;
    let b2 = spectral_bisection(p2)?;
    let c1 = splice(p1, &b1.part1, p2, &b2.part2, rng);
    let c2 = splice(p2, &b2.part1, p1, &b1.part2, rng);
    Ok((c1, c2))
}

/// Child with `a`'s fragment on `keep` (same slots) and `b`'s fragment on
/// `donor` moved to the slots outside `keep`.
fn splice<R: Rng + ?Sized>(a: &Graph, keep: &[usize], b: &Graph, donor: &[usize], rng: &mut R) -> Graph {
    let n = a.n();
    let slots: Vec<usize> = (0..n).filter(|v| !keep.contains(v)).collect();
    debug_assert_eq!(slots.len(), donor.len());
    let mut child = Graph::empty(n);
    for (x, &i) in keep.iter().enumerate() {
        for &j in &keep[x + 1..] {
            if a.has_edge(i, j) {
                child.set_edge(i, j, true);
            }
        }
    }
    for x in 0..donor.len() {
        for y in (x + 1)..donor.len() {
            if b.has_edge(donor[x], donor[y]) {
                child.set_edge(slots[x], slots[y], true);
            }
        }
    }
    // deficits: edges each node had to the other side in its own parent
    let mut left: Vec<(usize, u32)> =
        keep.iter().map(|&i| (i, a.degree(i) as u32 - degree_within(a, i, keep))).collect();
    let mut right: Vec<(usize, u32)> = donor
        .iter()
        .zip(&slots)
        .map(|(&i, &s)| (s, b.degree(i) as u32 - degree_within(b, i, donor)))
        .collect();
    loop {
        let Some(ia) = weighted_pick(&left, |_| true, rng) else { break };
        let u = left[ia].0;
        if right.iter().all(|&(_, d)| d == 0) {
            break;
        }
        match weighted_pick(&right, |v| !child.has_edge(u, v), rng) {
            Some(ib) => {
                let v = right[ib].0;
                child.set_edge(u, v, true);
                left[ia].1 -= 1;
                right[ib].1 -= 1;
            }
            None => left[ia].1 = 0,
        }
    }
    let (rest, other) = if left.iter().any(|&(_, d)| d > 0) { (&left, &right) } else { (&right, &left) };
    for &(u, d) in rest.iter() {
        for _ in 0..d {
            if rng.gen_bool(0.5) {
                let v = other[rng.gen_range(0..other.len())].0;
                child.set_edge(u, v, true);
            }
        }
    }
    child
}

fn degree_within(g: &Graph, v: usize, part: &[usize]) -> u32 {
    part.iter().filter(|&&u| g.has_edge(u, v)).count() as u32
}

/// Index chosen with probability proportional to its weight among entries
/// passing `allow`; `None` if the total weight is zero.
fn weighted_pick<R: Rng + ?Sized>(
    entries: &[(usize, u32)],
    allow: impl Fn(usize) -> bool,
    rng: &mut R,
) -> Option<usize> {
    let total: u64 = entries.iter().filter(|e| allow(e.0)).map(|e| e.1 as u64).sum();
    if total == 0 {
        return None;
    }
    let mut r = rng.gen_range(0..total);
    for (k, e) in entries.iter().enumerate() {
        if !allow(e.0) {
            continue;
        }
        if r < e.1 as u64 {
            return Some(k);
        }
        r -= e.1 as u64;
    }
    unreachable!("weights sum to total")
}

/// Toggles one uniformly chosen node pair.
pub fn mutate<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> Result<Graph> {
    let n = g.n();
    if n < 2 {
        return Err(invalid("mutation needs at least two nodes"));
    }
    let i = rng.gen_range(0..n);
    let mut j = rng.gen_range(0..n - 1);
    if j >= i {
        j += 1;
    }
    let mut out = *g;
    out.toggle_edge(i, j);
    Ok(out)
}
