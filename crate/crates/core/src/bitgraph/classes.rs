//! Isomorphism and LC-isomorphism class enumeration.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::canon::{canonical_form, CanonicalForm};
use super::Graph;
use crate::error::{Error, Result};
use crate::util::factorial;

/// Largest `n` accepted by [`enumerate_classes`].
pub const MAX_ENUMERATION_NODES: usize = 8;

/// Equivalence relation used to partition the labeled graphs on `n` nodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Isomorphism,
    LcIsomorphism,
}

impl std::str::FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "iso" | "isomorphism" => Ok(Self::Isomorphism),
            "lc" | "lc_isomorphism" | "lc-isomorphism" => Ok(Self::LcIsomorphism),
            _ => Err(Error::Parse(format!("unknown relation '{s}' (expected iso or lc)"))),
        }
    }
}

/// One equivalence class of labeled graphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphClass {
    /// Canonical representative (smallest canonical form in the class).
    pub representative: Graph,
    /// Number of isomorphism classes merged into this class.
    pub iso_classes: u64,
    /// Number of labeled graphs in the class.
    pub class_size: u64,
    /// Automorphism group order of the representative.
    pub aut_size: u64,
}

/// Closure of `g` under local complementation. Panics if `g.n() > 12`.
pub fn lc_orbit(g: &Graph) -> HashSet<Graph> {
    assert!(g.n() <= 12, "lc_orbit is limited to n <= 12");
    let mut seen = HashSet::from([*g]);
    let mut queue = VecDeque::from([*g]);
    while let Some(h) = queue.pop_front() {
        for v in 0..h.n() {
            let k = h.local_complement_unchecked(v);
            if seen.insert(k) {
                queue.push_back(k);
            }
        }
    }
    seen
}

/// Canonical isomorphism-class representatives on `n` nodes.
///
/// Built by extension: every graph on `n` nodes is a graph on `n - 1` nodes
/// plus one node joined to some subset, so extending each class
/// representative of size `n - 1` in all `2^(n-1)` ways reaches every class.
pub fn isomorphism_classes(n: usize) -> Result<Vec<CanonicalForm>> {
    check_gate(n)?;
    let mut level = vec![canonical_form(&Graph::empty(1))];
    for m in 2..=n {
        let mut next: HashMap<u128, CanonicalForm> = HashMap::new();
        for cf in &level {
            let base = cf.graph();
            for mask in 0u16..(1 << (m - 1)) {
                let mut rows = [0u16; 16];
                rows[..m - 1].copy_from_slice(base.rows());
                rows[m - 1] = mask;
                for (i, row) in rows.iter_mut().enumerate().take(m - 1) {
                    if (mask >> i) & 1 == 1 {
                        *row |= 1 << (m - 1);
                    }
                }
                let g = Graph::from_rows(&rows[..m]).expect("extension is a valid graph");
                let c = canonical_form(&g);
                next.entry(c.canon_bits).or_insert(c);
            }
        }
        level = next.into_values().collect();
        level.sort_by_key(|c| c.canon_bits);
    }
    Ok(level)
}

/// Partitions all labeled graphs on `n` nodes under `relation`.
///
/// Classes are returned in ascending order of their representative's
/// canonical bits. Class sizes always sum to `2^(n(n-1)/2)`.
pub fn enumerate_classes(n: usize, relation: Relation) -> Result<Vec<GraphClass>> {
    let iso = isomorphism_classes(n)?;
    let nfact = factorial(n as u64);
    let iso_class = |cf: &CanonicalForm| GraphClass {
        representative: cf.graph(),
        iso_classes: 1,
        class_size: nfact / cf.aut_size,
        aut_size: cf.aut_size,
    };
    match relation {
        Relation::Isomorphism => Ok(iso.iter().map(iso_class).collect()),
        Relation::LcIsomorphism => {
            let index: HashMap<u128, usize> =
                iso.iter().enumerate().map(|(i, c)| (c.canon_bits, i)).collect();
            let mut parent: Vec<usize> = (0..iso.len()).collect();
            // LC commutes with relabeling, so LC moves from one representative
            // per isomorphism class generate every LC-isomorphism link.
            for (i, cf) in iso.iter().enumerate() {
                let g = cf.graph();
                for v in 0..n {
                    let h = canonical_form(&g.local_complement_unchecked(v));
                    union(&mut parent, i, index[&h.canon_bits]);
                }
            }
            let mut groups: Vec<Vec<usize>> = vec![Vec::new(); iso.len()];
            for i in 0..iso.len() {
                let r = find(&mut parent, i);
                groups[r].push(i);
            }
            let mut out: Vec<GraphClass> = groups
                .into_iter()
                .filter(|m| !m.is_empty())
                .map(|members| {
                    // members are ascending, so the first is the smallest canonical form
                    let rep = &iso[members[0]];
                    GraphClass {
                        representative: rep.graph(),
                        iso_classes: members.len() as u64,
                        class_size: members.iter().map(|&m| nfact / iso[m].aut_size).sum(),
                        aut_size: rep.aut_size,
                    }
                })
                .collect();
            out.sort_by_key(|c| canonical_form(&c.representative).canon_bits);
            Ok(out)
        }
    }
}

fn check_gate(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    if n > MAX_ENUMERATION_NODES {
        let prev = 12_346u64; // class count one level down, for the estimate
        return Err(Error::TooLarge {
            what: "class enumeration",
            detail: format!(
                "n = {n} exceeds the limit of {MAX_ENUMERATION_NODES}; extending n = 8 alone \
                 needs more than {} canonical labelings of {n}-node graphs",
                prev << (n - 1)
            ),
        });
    }
    Ok(())
}

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        // keep the smaller index as root so representatives stay stable
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        parent[hi] = lo;
    }
}

/// Writes classes as graph6 lines plus the CSV sidecar
/// (`graph6,class_size,aut_size`).
pub fn classes_to_text(classes: &[GraphClass]) -> (String, String) {
    let mut g6 = String::new();
    let mut csv = String::from("graph6,class_size,aut_size\n");
    for c in classes {
        let s = c.representative.to_graph6();
        g6.push_str(&s);
        g6.push('\n');
        csv.push_str(&format!("{s},{},{}\n", c.class_size, c.aut_size));
    }
    (g6, csv)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_orbit_contains_paths() {
        let orbit = lc_orbit(&Graph::complete(3));
        for (a, b) in [(0, 1), (0, 2), (1, 2)] {
            let mut p = Graph::complete(3);
            p.set_edge(a, b, false);
            assert!(orbit.contains(&p));
        }
        assert_eq!(lc_orbit(&Graph::empty(5)).len(), 1);
    }

    #[test]
    fn orbits_are_closed() {
        let mut rng = crate::util::rng_from_seed(3);
        for _ in 0..20 {
            let g = Graph::random(5, &mut rng);
            let orbit = lc_orbit(&g);
            for h in &orbit {
                for v in 0..5 {
                    assert!(orbit.contains(&h.local_complement(v).unwrap()));
                }
            }
        }
    }

    #[test]
    fn small_counts() {
        let iso: Vec<usize> =
            (1..=5).map(|n| enumerate_classes(n, Relation::Isomorphism).unwrap().len()).collect();
        assert_eq!(iso, [1, 2, 4, 11, 34]);
        let lc: Vec<usize> =
            (1..=5).map(|n| enumerate_classes(n, Relation::LcIsomorphism).unwrap().len()).collect();
        assert_eq!(lc, [1, 2, 3, 6, 11]);
    }

    #[test]
    fn class_sizes_cover_labeled_graphs() {
        for n in 1..=6 {
            for rel in [Relation::Isomorphism, Relation::LcIsomorphism] {
                let classes = enumerate_classes(n, rel).unwrap();
                let total: u64 = classes.iter().map(|c| c.class_size).sum();
                assert_eq!(total, 1u64 << (n * (n - 1) / 2), "n = {n} {rel:?}");
            }
        }
    }

    #[test]
    fn lc_classes_match_orbit_closure_at_n5() {
        // independent route: LC orbits of every labeled graph, bucketed by canonical form
        let n = 5;
        let mut class_of: HashMap<u128, usize> = HashMap::new();
        let mut count = 0;
        for bits in 0u32..(1 << 10) {
            let mut g = Graph::empty(n);
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if (bits >> k) & 1 == 1 {
                        g.set_edge(i, j, true);
                    }
                    k += 1;
                }
            }
            let c = canonical_form(&g).canon_bits;
            if class_of.contains_key(&c) {
                continue;
            }
            for h in lc_orbit(&g) {
                class_of.insert(canonical_form(&h).canon_bits, count);
            }
            count += 1;
        }
        assert_eq!(count, 11);
    }

    #[test]
    fn gate_refuses_large_n() {
        assert!(matches!(
            enumerate_classes(9, Relation::Isomorphism),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn text_output() {
        let classes = enumerate_classes(2, Relation::Isomorphism).unwrap();
        let (g6, csv) = classes_to_text(&classes);
        assert_eq!(g6, "A?\nA_\n");
        assert_eq!(csv, "graph6,class_size,aut_size\nA?,1,2\nA_,1,2\n");
    }
}
