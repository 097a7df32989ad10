//! Graph + error set to classical data: the `Cl_G` map, the degenerate set,
//! the clique instance, code verification, and standard-form export.

use std::fmt;
use std::io::{self, BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::bitgraph::Graph;
use crate::error::{invalid, Error, Result};
use crate::pauli::{ErrorSet, PauliOp};
use crate::util::{bits_from_str, bits_to_string, dot2, BitSet};

/// `Cl_G(X^u Z^v) = v XOR (rows of the adjacency matrix selected by u)`.
pub fn cl_map(g: &Graph, p: &PauliOp) -> u32 {
    let mut out = p.v;
    let mut u = p.u;
    while u != 0 {
        let i = u.trailing_zeros() as usize;
        out ^= g.neighbors(i) as u32;
        u &= u - 1;
    }
    out
}

/// Classical images of an error set under one graph.
#[derive(Clone, Debug)]
pub struct ClassicalErrorData {
    n: usize,
    cl_set: BitSet,
    d_set: BitSet,
    degenerate_ops: Vec<PauliOp>,
    annihilator_dim: usize,
}

impl ClassicalErrorData {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Membership bitset over `GF(2)^n` for `Cl_G(E)`.
    pub fn cl_set(&self) -> &BitSet {
        &self.cl_set
    }

    /// Membership bitset over `GF(2)^n` for `D_G(E)`.
    pub fn d_set(&self) -> &BitSet {
        &self.d_set
    }

    pub fn cl_vectors(&self) -> Vec<u32> {
        self.cl_set.iter().map(|x| x as u32).collect()
    }

    pub fn d_vectors(&self) -> Vec<u32> {
        self.d_set.iter().map(|x| x as u32).collect()
    }

    /// Operators with `Cl_G(E) = 0` and nonzero X part.
    pub fn degenerate_ops(&self) -> &[PauliOp] {
        &self.degenerate_ops
    }

    /// Dimension of the subspace orthogonal to every degenerate `u`.
    pub fn annihilator_dim(&self) -> usize {
        self.annihilator_dim
    }

    /// True iff `D_G(E)` is empty.
    pub fn is_pure(&self) -> bool {
        self.d_set.is_empty()
    }
}

/// Row-reduced basis of the span of `vectors`, each with a distinct leading bit.
fn gf2_basis(vectors: impl IntoIterator<Item = u32>) -> Vec<u32> {
    let mut basis: Vec<u32> = Vec::new();
    for mut v in vectors {
        for &b in &basis {
            v = v.min(v ^ b);
        }
        if v != 0 {
            basis.push(v);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis
}

fn check_compatible(g: &Graph, e: &ErrorSet) -> Result<()> {
    if g.n() != e.n() {
        return Err(invalid(format!("graph has {} nodes but the error set acts on {} qubits", g.n(), e.n())));
    }
    Ok(())
}

pub fn classical_error_data(g: &Graph, e: &ErrorSet) -> Result<ClassicalErrorData> {
    check_compatible(g, e)?;
    let n = g.n();
    let size = 1usize << n;
    let mut cl_set = BitSet::new(size);
    let mut degenerate_ops = Vec::new();
    for p in e.ops() {
        let c = cl_map(g, p);
        cl_set.insert(c as usize);
        if c == 0 && p.u != 0 {
            degenerate_ops.push(*p);
        }
    }
    let basis = gf2_basis(degenerate_ops.iter().map(|p| p.u));
    let mut d_set = BitSet::new(size);
    if !basis.is_empty() {
        for x in 0..size as u32 {
            if basis.iter().any(|&b| dot2(x, b)) {
                d_set.insert(x as usize);
            }
        }
    }
    Ok(ClassicalErrorData { n, cl_set, d_set, degenerate_ops, annihilator_dim: n - basis.len() })
}

/// Clique problem whose maximum cliques, plus the zero word, are codes.
///
/// Nodes are the vectors outside `Cl_G(E) ∪ D_G(E)` in ascending order; two
/// nodes are adjacent iff their XOR is not a nonzero element of `Cl_G(E)`.
#[derive(Clone, Debug)]
pub struct CliqueInstance {
    n: usize,
    nodes: Vec<u32>,
    forbidden: BitSet,
    translation_closed: bool,
}

impl CliqueInstance {
    pub fn from_data(data: &ClassicalErrorData) -> Self {
        let size = 1usize << data.n;
        let nodes = (0..size)
            .filter(|&x| !data.cl_set.contains(x) && !data.d_set.contains(x))
            .map(|x| x as u32)
            .collect();
        let mut forbidden = data.cl_set.clone();
        forbidden.remove(0);
        Self { n: data.n, nodes, forbidden, translation_closed: true }
    }

    /// Builds an instance directly from its node list and forbidden differences.
    pub fn from_parts(n: usize, nodes: Vec<u32>, forbidden: &[u32]) -> Result<Self> {
        if n > 16 {
            return Err(invalid("clique instances support at most 16 bits"));
        }
        let size = 1usize << n;
        if nodes.iter().chain(forbidden).any(|&x| x as usize >= size) {
            return Err(invalid(format!("vector outside GF(2)^{n}")));
        }
        let mut sorted = nodes;
        sorted.sort_unstable();
        sorted.dedup();
        let mut set = BitSet::new(size);
        for &f in forbidden {
            if f != 0 {
                set.insert(f as usize);
            }
        }
        let mut inst = Self { n, nodes: sorted, forbidden: set, translation_closed: false };
        inst.translation_closed = inst.check_translation_closed();
        Ok(inst)
    }

    /// Whether `{0} ∪ C` translated by any member of a clique `C` is again
    /// `{0}` plus a clique. Holds for instances built from error data, where
    /// the admissible words form a subspace minus `Cl_G(E)`.
    pub fn translation_closed(&self) -> bool {
        self.translation_closed
    }

    fn check_translation_closed(&self) -> bool {
        let size = 1usize << self.n;
        let mut member = BitSet::new(size);
        for &x in &self.nodes {
            member.insert(x as usize);
        }
        if member.contains(0) || self.nodes.iter().any(|&x| self.forbidden.contains(x as usize)) {
            return false;
        }
        self.nodes.iter().enumerate().all(|(i, &x)| {
            self.nodes[i + 1..].iter().all(|&y| !self.adjacent_values(x, y) || member.contains((x ^ y) as usize))
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nodes(&self) -> &[u32] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn forbidden(&self) -> &BitSet {
        &self.forbidden
    }

    /// Edge predicate on node values.
    #[inline]
    pub fn adjacent_values(&self, x: u32, y: u32) -> bool {
        x != y && !self.forbidden.contains((x ^ y) as usize)
    }

    /// Edge predicate on node indices.
    #[inline]
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacent_values(self.nodes[i], self.nodes[j])
    }

    pub fn edge_count(&self) -> usize {
        let m = self.len();
        (0..m).map(|i| ((i + 1)..m).filter(|&j| self.adjacent(i, j)).count()).sum()
    }

    /// Writes the instance in DIMACS `p edge` format with 1-based node indices.
    pub fn write_dimacs<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "c CWS clique instance on {} bits", self.n)?;
        writeln!(out, "p edge {} {}", self.len(), self.edge_count())?;
        for i in 0..self.len() {
            for j in (i + 1)..self.len() {
                if self.adjacent(i, j) {
                    writeln!(out, "e {} {}", i + 1, j + 1)?;
                }
            }
        }
        Ok(())
    }
}

pub fn clique_instance(g: &Graph, e: &ErrorSet) -> Result<CliqueInstance> {
    Ok(CliqueInstance::from_data(&classical_error_data(g, e)?))
}

/// Size of the clique graph, computed without listing its nodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueOrder {
    pub order: usize,
    pub annihilator_dim: usize,
}

pub fn clique_graph_order(g: &Graph, e: &ErrorSet) -> Result<CliqueOrder> {
    let data = classical_error_data(g, e)?;
    let covered: usize = data
        .cl_set
        .words()
        .iter()
        .zip(data.d_set.words())
        .map(|(a, b)| (a | b).count_ones() as usize)
        .sum();
    Ok(CliqueOrder { order: (1usize << data.n) - covered, annihilator_dim: data.annihilator_dim })
}

/// The first condition a candidate code fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// `x_i XOR Cl_G(E) = x_j` for two distinct codewords.
    Distinguishable { op: String, xi: String, xj: String },
    /// `Cl_G(E) = 0` but `x_i · u != 0`.
    Degenerate { op: String, xi: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Distinguishable { op, xi, xj } => {
                write!(f, "error {op} maps codeword {xi} onto codeword {xj}")
            }
            Violation::Degenerate { op, xi } => {
                write!(f, "error {op} acts trivially on the graph state but flips the sign of codeword {xi}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub ok: bool,
    pub pure: bool,
    pub violation: Option<Violation>,
}

/// Checks the standard-form detection conditions for every operator in `e`.
///
/// Codewords must contain the zero word.
pub fn verify_code(g: &Graph, e: &ErrorSet, codewords: &[u32]) -> Result<Verification> {
    check_compatible(g, e)?;
    let n = g.n();
    if !codewords.contains(&0) {
        return Err(invalid("the codeword set must contain the zero word"));
    }
    if let Some(&x) = codewords.iter().find(|&&x| x >> n != 0) {
        return Err(invalid(format!("codeword {x:#b} has more than {n} bits")));
    }
    let mut words = BitSet::new(1 << n);
    for &x in codewords {
        if words.contains(x as usize) {
            return Err(invalid(format!("duplicate codeword {}", bits_to_string(x, n))));
        }
        words.insert(x as usize);
    }
    let mut pure = true;
    let mut violation = None;
    for p in e.ops() {
        let c = cl_map(g, p);
        if c == 0 {
            if p.u != 0 {
                pure = false;
            }
            if violation.is_none() {
                if let Some(&x) = codewords.iter().find(|&&x| dot2(x, p.u)) {
                    violation = Some(Violation::Degenerate {
                        op: p.to_letters(n),
                        xi: bits_to_string(x, n),
                    });
                }
            }
        } else if violation.is_none() {
            if let Some(&x) = codewords.iter().find(|&&x| words.contains((x ^ c) as usize)) {
                violation = Some(Violation::Distinguishable {
                    op: p.to_letters(n),
                    xi: bits_to_string(x, n),
                    xj: bits_to_string(x ^ c, n),
                });
            }
        }
    }
    Ok(Verification { ok: violation.is_none(), pure, violation })
}

/// Stabilizer generators `X_i Z_{N(i)}` and word operators `Z^x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StandardForm {
    pub generators: Vec<String>,
    pub word_operators: Vec<String>,
}

pub fn export_standard_form(g: &Graph, codewords: &[u32]) -> Result<StandardForm> {
    let n = g.n();
    if let Some(&x) = codewords.iter().find(|&&x| x >> n != 0) {
        return Err(invalid(format!("codeword {x:#b} has more than {n} bits")));
    }
    let generators = (0..n)
        .map(|i| PauliOp::new(1 << i, g.neighbors(i) as u32).to_letters(n))
        .collect();
    let word_operators = codewords.iter().map(|&x| PauliOp::new(0, x).to_letters(n)).collect();
    Ok(StandardForm { generators, word_operators })
}

/// `k` when `k >= 2`; for `k = 1`, 1 if the state is pure and 0 otherwise.
pub fn effective_k(k: usize, pure: bool) -> usize {
    if k >= 2 || pure {
        k
    } else {
        0
    }
}

/// A standard-form code: graph, codewords with the zero word first, and the
/// hash of the error set it was found for.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CwsCode {
    pub graph: Graph,
    pub codewords: Vec<u32>,
    pub error_set_hash: String,
    pub pure: bool,
}

impl CwsCode {
    /// Builds a code from a clique of a [`CliqueInstance`], adding the zero word.
    pub fn from_clique(g: &Graph, e: &ErrorSet, clique: &[u32]) -> Result<Self> {
        let mut codewords = vec![0];
        let mut rest: Vec<u32> = clique.iter().copied().filter(|&x| x != 0).collect();
        rest.sort_unstable();
        codewords.extend(rest);
        let v = verify_code(g, e, &codewords)?;
        if let Some(violation) = v.violation {
            return Err(invalid(format!("not a code: {violation}")));
        }
        Ok(Self { graph: *g, codewords, error_set_hash: e.content_hash(), pure: v.pure })
    }

    pub fn k(&self) -> usize {
        self.codewords.len()
    }

    /// Dimension counted by searches: a single state only counts as a code
    /// when it is pure, so impure `K = 1` results report 0.
    pub fn effective_k(&self) -> usize {
        effective_k(self.k(), self.pure)
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Header line followed by one codeword per line, bit 0 first.
    pub fn write_to<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(
            out,
            "n={} graph6={} errorset={} K={}",
            self.n(),
            self.graph.to_graph6(),
            self.error_set_hash,
            self.k()
        )?;
        for &x in &self.codewords {
            writeln!(out, "{}", bits_to_string(x, self.n()))?;
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut buf = Vec::new();
        self.write_to(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("ascii output")
    }

    /// Parses the code file format; lines after the header starting with `#`
    /// are comments. The purity flag is left `false`; run
    /// [`verify_code`] to establish it.
    pub fn read_from<R: BufRead>(input: R) -> Result<Self> {
        let mut lines = input.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty code file".into()))?
            .map_err(|e| Error::Parse(e.to_string()))?;
        let mut n = None;
        let mut graph = None;
        let mut hash = None;
        let mut k = None;
        for field in header.split_whitespace() {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("header field '{field}' lacks '='")))?;
            let bad = || Error::Parse(format!("bad value in header field '{field}'"));
            match key {
                "n" => n = Some(value.parse::<usize>().map_err(|_| bad())?),
                "graph6" => graph = Some(Graph::from_graph6(value)?),
                "errorset" => hash = Some(value.to_string()),
                "K" => k = Some(value.parse::<usize>().map_err(|_| bad())?),
                other => return Err(Error::Parse(format!("unknown header field '{other}'"))),
            }
        }
        let missing = |f: &str| Error::Parse(format!("header is missing '{f}'"));
        let n = n.ok_or_else(|| missing("n"))?;
        let graph = graph.ok_or_else(|| missing("graph6"))?;
        let k = k.ok_or_else(|| missing("K"))?;
        if graph.n() != n {
            return Err(Error::Parse(format!("graph has {} nodes, header says n={n}", graph.n())));
        }
        let mut codewords = Vec::new();
        for (i, line) in lines.enumerate() {
            let line = line.map_err(|e| Error::Parse(e.to_string()))?;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if line.len() != n {
                return Err(Error::Parse(format!("codeword line {} has length {}", i + 2, line.len())));
            }
            let x = bits_from_str(line)
                .ok_or_else(|| Error::Parse(format!("codeword line {} is not binary", i + 2)))?;
            codewords.push(x);
        }
        if codewords.len() != k {
            return Err(Error::Parse(format!("header says K={k} but {} codewords follow", codewords.len())));
        }
        Ok(Self { graph, codewords, error_set_hash: hash.unwrap_or_default(), pure: false })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::{amp_damp_error_set, symmetric_error_set, AdPermutation};
    use crate::util::rng_from_seed;
    use proptest::prelude::*;
    use rand::Rng;

    fn edge() -> Graph {
        Graph::from_edges(2, &[(0, 1)]).unwrap()
    }

    fn op(s: &str) -> PauliOp {
        PauliOp::from_letters(s).unwrap()
    }

    #[test]
    fn x_z_rule() {
        let g = edge();
        assert_eq!(cl_map(&g, &op("XI")), 0b10);
        assert_eq!(cl_map(&g, &op("YI")), 0b11);
        assert_eq!(cl_map(&g, &op("IZ")), 0b10);
        let c5 = Graph::cycle(5);
        assert_eq!(cl_map(&c5, &op("ZIZIZ")), op("ZIZIZ").v);
    }

    #[test]
    fn edge_graph_covers_everything() {
        let g = edge();
        let e = symmetric_error_set(2, 2).unwrap();
        let data = classical_error_data(&g, &e).unwrap();
        assert_eq!(data.cl_vectors(), vec![0, 1, 2, 3]);
        assert!(data.d_vectors().is_empty());
        assert!(clique_instance(&g, &e).unwrap().is_empty());
        assert_eq!(clique_graph_order(&g, &e).unwrap().order, 0);
    }

    #[test]
    fn degenerate_x_on_empty_graph() {
        let n = 4;
        let g = Graph::empty(n);
        let e = crate::pauli::parse_error_set("symmetric:0", n, None).unwrap();
        let data = classical_error_data(&g, &e).unwrap();
        assert!(data.degenerate_ops().is_empty());
        let with_x = custom(n, &["IIII", "XIII"]);
        let data = classical_error_data(&g, &with_x).unwrap();
        assert_eq!(data.cl_vectors(), vec![0]);
        assert_eq!(data.degenerate_ops(), &[op("XIII")]);
        assert_eq!(data.d_set().count(), 8);
        assert_eq!(data.annihilator_dim(), 3);
        assert!(data.d_vectors().iter().all(|x| x & 1 == 1));
    }

    fn custom(n: usize, letters: &[&str]) -> ErrorSet {
        ErrorSet::custom(n, letters.iter().map(|s| op(s))).unwrap()
    }

    #[test]
    fn five_cycle_distance_two() {
        let g = Graph::cycle(5);
        let e = symmetric_error_set(5, 2).unwrap();
        let inst = clique_instance(&g, &e).unwrap();
        // brute-force maximum clique over at most 2^5 nodes
        let m = inst.len();
        let mut best = 0;
        for mask in 0u64..(1 << m) {
            let members: Vec<usize> = (0..m).filter(|&i| (mask >> i) & 1 == 1).collect();
            let ok = members.iter().enumerate().all(|(a, &i)| members[a + 1..].iter().all(|&j| inst.adjacent(i, j)));
            if ok {
                best = best.max(members.len());
            }
        }
        assert_eq!(best, 5);
    }

    #[test]
    fn zero_word_alone_always_verifies() {
        let mut rng = rng_from_seed(11);
        for _ in 0..50 {
            let n = rng.gen_range(1..=7);
            let g = Graph::random(n, &mut rng);
            let e = symmetric_error_set(n, rng.gen_range(1..=n + 1)).unwrap();
            assert!(verify_code(&g, &e, &[0]).unwrap().ok);
        }
        assert!(verify_code(&edge(), &symmetric_error_set(2, 2).unwrap(), &[1]).is_err());
    }

    #[test]
    fn violation_witness() {
        let g = Graph::cycle(5);
        let e = symmetric_error_set(5, 2).unwrap();
        let c = cl_map(&g, &op("XIIII"));
        let v = verify_code(&g, &e, &[0, c]).unwrap();
        assert!(!v.ok);
        match v.violation.unwrap() {
            Violation::Distinguishable { .. } => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn degenerate_violation() {
        let g = Graph::empty(3);
        let e = custom(3, &["III", "XII"]);
        let v = verify_code(&g, &e, &[0, 0b001]).unwrap();
        assert!(!v.pure);
        assert_eq!(v.violation, Some(Violation::Degenerate { op: "XII".into(), xi: "100".into() }));
        assert!(verify_code(&g, &e, &[0, 0b010]).unwrap().ok);
    }

    #[test]
    fn standard_form_triangle() {
        let sf = export_standard_form(&Graph::cycle(3), &[0, 0b101]).unwrap();
        assert_eq!(sf.generators, vec!["XZZ", "ZXZ", "ZZX"]);
        assert_eq!(sf.word_operators, vec!["III", "ZIZ"]);
    }

    #[test]
    fn generators_commute() {
        let mut rng = rng_from_seed(5);
        for _ in 0..20 {
            let g = Graph::random(rng.gen_range(1..=10), &mut rng);
            let sf = export_standard_form(&g, &[0]).unwrap();
            let ops: Vec<PauliOp> = sf.generators.iter().map(|s| op(s)).collect();
            for a in &ops {
                for b in &ops {
                    assert!(a.commutes(b));
                }
            }
        }
    }

    #[test]
    fn code_file_round_trip() {
        let g = Graph::cycle(5);
        let e = symmetric_error_set(5, 2).unwrap();
        let code = CwsCode::from_clique(&g, &e, &[]).unwrap();
        let text = code.to_text();
        assert!(text.starts_with(&format!("n=5 graph6=Dhc errorset={} K=1\n00000\n", e.content_hash())));
        let back = CwsCode::read_from(text.as_bytes()).unwrap();
        assert_eq!(back.codewords, code.codewords);
        assert_eq!(back.graph, g);
        assert!(CwsCode::read_from("n=5 graph6=Dhc K=2\n00000\n".as_bytes()).is_err());
        assert!(CwsCode::read_from("n=4 graph6=Dhc K=1\n00000\n".as_bytes()).is_err());
    }

    #[test]
    fn dimacs_export() {
        let inst = CliqueInstance::from_parts(2, vec![1, 2, 3], &[3]).unwrap();
        let mut out = Vec::new();
        inst.write_dimacs(&mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert!(text.contains("p edge 3 2\n"));
        assert!(text.contains("e 1 3\n") && text.contains("e 2 3\n"));
    }

    fn small_case() -> impl Strategy<Value = (Graph, ErrorSet)> {
        (1usize..=7, any::<u64>(), 0usize..4).prop_map(|(n, seed, kind)| {
            let mut rng = rng_from_seed(seed);
            let g = Graph::random(n, &mut rng);
            let e = match kind {
                0 => symmetric_error_set(n, 2).unwrap(),
                1 => symmetric_error_set(n, 3.min(n + 1)).unwrap(),
                2 => amp_damp_error_set(n, 1, AdPermutation::Identity).unwrap(),
                _ => amp_damp_error_set(n, 1, AdPermutation::Xz).unwrap(),
            };
            (g, e)
        })
    }

    proptest! {
        #[test]
        fn cl_map_is_linear(seed in any::<u64>(), n in 1usize..=12) {
            let mut rng = rng_from_seed(seed);
            let g = Graph::random(n, &mut rng);
            let mask = (1u32 << n) - 1;
            let p = PauliOp::new(rng.gen::<u32>() & mask, rng.gen::<u32>() & mask);
            let q = PauliOp::new(rng.gen::<u32>() & mask, rng.gen::<u32>() & mask);
            prop_assert_eq!(cl_map(&g, &p.product(&q)), cl_map(&g, &p) ^ cl_map(&g, &q));
        }

        #[test]
        fn d_complement_is_a_subspace((g, e) in small_case()) {
            let data = classical_error_data(&g, &e).unwrap();
            let outside: Vec<u32> =
                (0..1u32 << g.n()).filter(|&x| !data.d_set().contains(x as usize)).collect();
            prop_assert!(outside.contains(&0));
            prop_assert_eq!(outside.len(), 1 << data.annihilator_dim());
            for &a in &outside {
                for &b in &outside {
                    prop_assert!(!data.d_set().contains((a ^ b) as usize));
                }
            }
            prop_assert_eq!(data.is_pure(), data.degenerate_ops().is_empty());
        }

        #[test]
        fn order_matches_instance((g, e) in small_case()) {
            let inst = clique_instance(&g, &e).unwrap();
            prop_assert_eq!(clique_graph_order(&g, &e).unwrap().order, inst.len());
            prop_assert!(!inst.nodes().contains(&0));
        }

        #[test]
        fn greedy_cliques_verify((g, e) in small_case(), start in any::<usize>()) {
            let inst = clique_instance(&g, &e).unwrap();
            let mut clique: Vec<u32> = Vec::new();
            let m = inst.len();
            for k in 0..m {
                let x = inst.nodes()[(start + k) % m];
                if clique.iter().all(|&y| inst.adjacent_values(x, y)) {
                    clique.push(x);
                }
            }
            let mut words = vec![0];
            words.extend(&clique);
            prop_assert!(verify_code(&g, &e, &words).unwrap().ok);
            // adding any excluded vector breaks the code
            let data = classical_error_data(&g, &e).unwrap();
            for x in 1..1u32 << g.n() {
                if data.cl_set().contains(x as usize) || data.d_set().contains(x as usize) {
                    let mut bad = words.clone();
                    bad.push(x);
                    if !words.contains(&x) {
                        prop_assert!(!verify_code(&g, &e, &bad).unwrap().ok);
                    }
                }
            }
        }
    }
}
