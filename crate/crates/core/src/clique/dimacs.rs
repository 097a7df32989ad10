//! DIMACS `p edge` instances for benchmarking against external solvers.

use std::io::BufRead;

use super::Adjacency;
use crate::error::{Error, Result};
use crate::util::BitSet;

/// Explicit adjacency matrix with bitset rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseGraph {
    rows: Vec<BitSet>,
}

impl DenseGraph {
    /// Builds from an edge list on nodes `0..m`; loops are ignored.
    pub fn from_edges(m: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut rows = vec![BitSet::new(m); m];
        for (i, j) in edges {
            if i != j {
                rows[i].insert(j);
                rows[j].insert(i);
            }
        }
        Self { rows }
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(BitSet::count).sum::<usize>() / 2
    }
}

impl Adjacency for DenseGraph {
    fn order(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    fn adjacent(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    fn dense_rows(&self) -> Vec<BitSet> {
        self.rows.clone()
    }
}

/// Reads `c` comment lines, one `p edge <nodes> <edges>` line, and `e <i> <j>`
/// lines with 1-based indices.
pub fn read_dimacs<R: BufRead>(input: R) -> Result<DenseGraph> {
    let mut order = None;
    let mut edges = Vec::new();
    for (lineno, line) in input.lines().enumerate() {
        let line = line.map_err(|e| Error::Parse(e.to_string()))?;
        let bad = |msg: &str| Error::Parse(format!("DIMACS line {}: {msg}", lineno + 1));
        let mut parts = line.split_whitespace();
        match parts.next() {
            None | Some("c") => {}
            Some("p") => {
                if order.is_some() {
                    return Err(bad("second problem line"));
                }
                match (parts.next(), parts.next().and_then(|s| s.parse::<usize>().ok())) {
                    (Some("edge" | "col"), Some(m)) => order = Some(m),
                    _ => return Err(bad("expected 'p edge <nodes> <edges>'")),
                }
            }
            Some("e") => {
                let m = order.ok_or_else(|| bad("edge before problem line"))?;
                let mut endpoint = || {
                    parts
                        .next()
                        .and_then(|s| s.parse::<usize>().ok())
                        .filter(|&v| (1..=m).contains(&v))
                        .ok_or_else(|| bad("edge endpoint missing or out of range"))
                };
                let (i, j) = (endpoint()?, endpoint()?);
                edges.push((i - 1, j - 1));
            }
            Some(other) => return Err(bad(&format!("unknown line type '{other}'"))),
        }
    }
    let m = order.ok_or_else(|| Error::Parse("DIMACS input has no problem line".into()))?;
    Ok(DenseGraph::from_edges(m, edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clique::max_clique_exact;
    use crate::cwsmap::CliqueInstance;

    #[test]
    fn reads_small_instance() {
        let text = "c triangle plus pendant\np edge 4 4\ne 1 2\ne 2 3\ne 1 3\ne 3 4\n";
        let g = read_dimacs(text.as_bytes()).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(max_clique_exact(&g).unwrap().members, vec![0, 1, 2]);
    }

    #[test]
    fn rejects_malformed() {
        assert!(read_dimacs("e 1 2\n".as_bytes()).is_err());
        assert!(read_dimacs("p edge 2 1\ne 1 3\n".as_bytes()).is_err());
        assert!(read_dimacs("x\n".as_bytes()).is_err());
        assert!(read_dimacs("".as_bytes()).is_err());
    }

    #[test]
    fn round_trip_through_export() {
        let inst = CliqueInstance::from_parts(3, (1..8).collect(), &[1, 2, 4]).unwrap();
        let mut buf = Vec::new();
        inst.write_dimacs(&mut buf).unwrap();
        let g = read_dimacs(buf.as_slice()).unwrap();
        for i in 0..inst.len() {
            for j in 0..inst.len() {
                assert_eq!(g.adjacent(i, j), inst.adjacent(i, j));
            }
        }
    }
}
