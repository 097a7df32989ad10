use std::fmt;

use rand::Rng;

use crate::error::{invalid, Error, Result};

/// Largest supported node count.
pub const MAX_NODES: usize = 16;

/// A simple undirected graph on at most 16 nodes.
///
/// Row `i` of the adjacency matrix is stored as a bitmask; bit `j` is set iff
/// `{i, j}` is an edge. Rows are kept symmetric with an empty diagonal.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: u8,
    adj: [u16; MAX_NODES],
}

impl Graph {
    /// Edgeless graph on `n` nodes. Panics unless `1 <= n <= 16`.
    pub fn empty(n: usize) -> Self {
        assert!((1..=MAX_NODES).contains(&n), "node count {n} outside 1..=16");
        Self { n: n as u8, adj: [0; MAX_NODES] }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        let all = g.node_mask();
        for i in 0..n {
            g.adj[i] = all & !(1 << i);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges).expect("valid path")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 nodes");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edges(n, &edges).expect("valid cycle")
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if !(1..=MAX_NODES).contains(&n) {
            return Err(invalid(format!("node count {n} outside 1..=16")));
        }
        let mut g = Self::empty(n);
        for &(a, b) in edges {
            if a >= n || b >= n || a == b {
                return Err(invalid(format!("bad edge ({a}, {b}) for n = {n}")));
            }
            g.set_edge(a, b, true);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, checking symmetry and the diagonal.
    pub fn from_rows(rows: &[u16]) -> Result<Self> {
        let n = rows.len();
        if !(1..=MAX_NODES).contains(&n) {
            return Err(invalid(format!("node count {n} outside 1..=16")));
        }
        let mask = if n == 16 { u16::MAX } else { (1u16 << n) - 1 };
        let mut g = Self::empty(n);
        for (i, &r) in rows.iter().enumerate() {
            if r & !mask != 0 || (r >> i) & 1 == 1 {
                return Err(invalid(format!("row {i} has bits outside the graph or on the diagonal")));
            }
            g.adj[i] = r;
        }
        for i in 0..n {
            for j in 0..n {
                if g.has_edge(i, j) != g.has_edge(j, i) {
                    return Err(invalid(format!("adjacency not symmetric at ({i}, {j})")));
                }
            }
        }
        Ok(g)
    }

    /// Uniformly random graph: every pair is an edge with probability 1/2.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut g = Self::empty(n);
        for j in 1..n {
            for i in 0..j {
                if rng.gen::<bool>() {
                    g.set_edge(i, j, true);
                }
            }
        }
        g
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn node_mask(&self) -> u16 {
        if self.n as usize == MAX_NODES {
            u16::MAX
        } else {
            (1u16 << self.n) - 1
        }
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        (self.adj[i] >> j) & 1 == 1
    }

    /// Neighborhood of `v` as a bitmask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u16 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u16] {
        &self.adj[..self.n()]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn set_edge(&mut self, i: usize, j: usize, present: bool) {
        debug_assert!(i != j && i < self.n() && j < self.n());
        if present {
            self.adj[i] |= 1 << j;
            self.adj[j] |= 1 << i;
        } else {
            self.adj[i] &= !(1 << j);
            self.adj[j] &= !(1 << i);
        }
    }

    pub fn toggle_edge(&mut self, i: usize, j: usize) {
        debug_assert!(i != j && i < self.n() && j < self.n());
        self.adj[i] ^= 1 << j;
        self.adj[j] ^= 1 << i;
    }

    /// Edges as `(i, j)` pairs with `i < j`, in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |i| {
            ((i + 1)..self.n()).filter(move |&j| self.has_edge(i, j)).map(move |j| (i, j))
        })
    }

    /// Replaces the subgraph induced by the neighborhood of `v` with its complement.
    pub fn local_complement(&self, v: usize) -> Result<Self> {
        if v >= self.n() {
            return Err(invalid(format!("node {v} out of range for n = {}", self.n)));
        }
        Ok(self.local_complement_unchecked(v))
    }

    pub(crate) fn local_complement_unchecked(&self, v: usize) -> Self {
        let nb = self.adj[v];
        let mut g = *self;
        let mut rest = nb;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            g.adj[i] ^= nb & !(1 << i);
        }
        g
    }

    /// Relabels nodes: node `i` of `self` becomes node `perm[i]` of the result.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n());
        let mut g = Self::empty(self.n());
        for (i, j) in self.edges() {
            g.set_edge(perm[i], perm[j], true);
        }
        g
    }

    /// Subgraph induced by the nodes in `nodes` (ascending order), relabeled `0..k`.
    pub fn induced(&self, nodes: &[usize]) -> Self {
        let mut g = Self::empty(nodes.len());
        for (a, &i) in nodes.iter().enumerate() {
            for (b, &j) in nodes.iter().enumerate().skip(a + 1) {
                if self.has_edge(i, j) {
                    g.set_edge(a, b, true);
                }
            }
        }
        g
    }

    pub fn complement(&self) -> Self {
        let mut g = *self;
        let all = self.node_mask();
        for i in 0..self.n() {
            g.adj[i] = !self.adj[i] & all & !(1 << i);
        }
        g
    }

    /// Connected component containing `v`, as a node mask.
    pub fn component_of(&self, v: usize) -> u16 {
        let mut seen = 1u16 << v;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u16;
            let mut f = frontier;
            while f != 0 {
                let i = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[i];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0) == self.node_mask()
    }

    /// Encodes the graph in graph6 (header-less, `n <= 16`).
    pub fn to_graph6(&self) -> String {
        let n = self.n();
        let mut out = String::with_capacity(2 + n * n / 12);
        out.push((n as u8 + 63) as char);
        let mut acc = 0u8;
        let mut filled = 0;
        for j in 1..n {
            for i in 0..j {
                acc = (acc << 1) | self.has_edge(i, j) as u8;
                filled += 1;
                if filled == 6 {
                    out.push((acc + 63) as char);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push(((acc << (6 - filled)) + 63) as char);
        }
        out
    }

    /// Parses a header-less graph6 string. Trailing ASCII whitespace is ignored.
    pub fn from_graph6(text: &str) -> Result<Self> {
        let bytes = text.trim_end().as_bytes();
        let err = |offset: usize, reason: &str| Error::Graph6 { offset, reason: reason.to_string() };
        let &first = bytes.first().ok_or_else(|| err(0, "empty input"))?;
        if !(63..=126).contains(&first) {
            return Err(err(0, "size byte outside 63..=126"));
        }
        let n = (first - 63) as usize;
        if n == 63 {
            return Err(err(0, "graphs with more than 16 nodes are not supported"));
        }
        if n > MAX_NODES {
            return Err(err(0, &format!("n = {n} exceeds 16")));
        }
        if n == 0 {
            return Err(err(0, "graphs must have at least one node"));
        }
        let nbits = n * (n - 1) / 2;
        let nbytes = nbits.div_ceil(6);
        if bytes.len() < 1 + nbytes {
            return Err(err(bytes.len(), "input ends before the adjacency data"));
        }
        if bytes.len() > 1 + nbytes {
            return Err(err(1 + nbytes, "trailing bytes after the adjacency data"));
        }
        let mut g = Self::empty(n);
        let mut k = 0;
        for (b, &byte) in bytes[1..].iter().enumerate() {
            if !(63..=126).contains(&byte) {
                return Err(err(1 + b, "data byte outside 63..=126"));
            }
            let v = byte - 63;
            for s in (0..6).rev() {
                let bit = (v >> s) & 1 == 1;
                if k < nbits {
                    if bit {
                        let (i, j) = pair_from_column_index(k);
                        g.set_edge(i, j, true);
                    }
                } else if bit {
                    return Err(err(1 + b, "nonzero padding bits"));
                }
                k += 1;
            }
        }
        Ok(g)
    }
}

/// Inverse of the graph6 column-major pair order (0,1),(0,2),(1,2),(0,3),...
fn pair_from_column_index(k: usize) -> (usize, usize) {
    let mut j = 1;
    let mut start = 0;
    while start + j <= k {
        start += j;
        j += 1;
    }
    (k - start, j)
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}, {:?})", self.to_graph6(), self.edges().collect::<Vec<_>>())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}

impl std::str::FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_graph6(s)
    }
}

impl serde::Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_graph6())
    }
}

impl<'de> serde::Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Self::from_graph6(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    // Hand-built graph6 table for every graph on at most 3 nodes.
    #[test]
    fn graph6_small_table() {
        let cases: &[(usize, &[(usize, usize)], &str)] = &[
            (1, &[], "@"),
            (2, &[], "A?"),
            (2, &[(0, 1)], "A_"),
            (3, &[], "B?"),
            (3, &[(0, 1)], "B_"),
            (3, &[(0, 2)], "BO"),
            (3, &[(1, 2)], "BG"),
            (3, &[(0, 1), (0, 2)], "Bo"),
            (3, &[(0, 1), (1, 2)], "Bg"),
            (3, &[(0, 2), (1, 2)], "BW"),
            (3, &[(0, 1), (0, 2), (1, 2)], "Bw"),
        ];
        for &(n, edges, text) in cases {
            let g = Graph::from_edges(n, edges).unwrap();
            assert_eq!(g.to_graph6(), text, "{edges:?}");
            assert_eq!(Graph::from_graph6(text).unwrap(), g);
        }
    }

    #[test]
    fn graph6_five_nodes() {
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(g.to_graph6(), "DQc");
    }

    #[test]
    fn graph6_errors() {
        assert!(matches!(Graph::from_graph6(""), Err(Error::Graph6 { offset: 0, .. })));
        assert!(matches!(Graph::from_graph6("Q????????"), Err(Error::Graph6 { offset: 0, .. })));
        assert!(matches!(Graph::from_graph6("A_?"), Err(Error::Graph6 { offset: 2, .. })));
        assert!(matches!(Graph::from_graph6("Bw"), Ok(_)));
        assert!(matches!(Graph::from_graph6("B"), Err(Error::Graph6 { offset: 1, .. })));
        // padding bits must be zero: n=2 has one data bit
        assert!(matches!(Graph::from_graph6("A`"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(Graph::from_graph6("A\x01"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(Graph::from_graph6("A_\n").is_ok());
    }

    #[test]
    fn local_complement_triangle() {
        let tri = Graph::complete(3);
        let lc = tri.local_complement(0).unwrap();
        assert_eq!(lc, Graph::from_edges(3, &[(0, 1), (0, 2)]).unwrap());
        assert!(tri.local_complement(3).is_err());
    }

    #[test]
    fn local_complement_isolated_node() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.local_complement(3).unwrap(), g);
    }

    #[test]
    fn from_rows_checks() {
        assert!(Graph::from_rows(&[0b10, 0b01]).is_ok());
        assert!(Graph::from_rows(&[0b10, 0b00]).is_err());
        assert!(Graph::from_rows(&[0b01]).is_err());
        assert!(Graph::from_rows(&[0b100, 0b000]).is_err());
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..=16, any::<u128>()).prop_map(|(n, bits)| {
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
            g
        })
    }

    proptest! {
        #[test]
        fn graph6_round_trip(g in arb_graph()) {
            let text = g.to_graph6();
            prop_assert_eq!(Graph::from_graph6(&text).unwrap(), g);
            prop_assert_eq!(Graph::from_graph6(&text).unwrap().to_graph6(), text);
        }

        #[test]
        fn local_complement_involution(g in arb_graph(), v in 0usize..16) {
            let v = v % g.n();
            let once = g.local_complement(v).unwrap();
            prop_assert_eq!(once.local_complement(v).unwrap(), g);
            // edges with an endpoint outside N(v) are untouched
            let nb = g.neighbors(v);
            for i in 0..g.n() {
                for j in 0..g.n() {
                    if i != j && !((nb >> i) & 1 == 1 && (nb >> j) & 1 == 1) {
                        prop_assert_eq!(once.has_edge(i, j), g.has_edge(i, j));
                    }
                }
            }
            prop_assert!(Graph::from_rows(once.rows()).is_ok());
        }
    }
}
