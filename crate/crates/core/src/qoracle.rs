//! Exact statevector oracle for the quantum detection criterion.
//!
//! Amplitudes are Gaussian integers with an implicit `2^(-n/2)` factor, so
//! inner products are exact integers in units of `2^-n`.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::bitgraph::Graph;
use crate::error::{invalid, Result};
use crate::pauli::{ErrorSet, PauliOp};
use crate::util::dot2;

pub type Amp = Complex<i64>;

/// Largest qubit count the oracle accepts.
pub const MAX_ORACLE_QUBITS: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateVector {
    n: usize,
    amps: Vec<Amp>,
}

impl StateVector {
    pub fn new(n: usize, amps: Vec<Amp>) -> Result<Self> {
        if n > MAX_ORACLE_QUBITS || amps.len() != 1 << n {
            return Err(invalid(format!("{} amplitudes do not form a state on {n} qubits", amps.len())));
        }
        Ok(Self { n, amps })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amps(&self) -> &[Amp] {
        &self.amps
    }

    /// `<self|other>` in units of `2^-n`.
    pub fn inner(&self, other: &StateVector) -> Amp {
        self.amps.iter().zip(&other.amps).map(|(a, b)| a.conj() * b).sum()
    }

    /// Squared norm in units of `2^-n`; `2^n` for a normalised state.
    pub fn norm_sqr(&self) -> i64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }
}

/// `|G>` with `amps[x] = (-1)^(number of edges inside the support of x)`.
pub fn graph_state(g: &Graph) -> Result<StateVector> {
    let n = g.n();
    if n > MAX_ORACLE_QUBITS {
        return Err(invalid(format!("oracle supports at most {MAX_ORACLE_QUBITS} qubits")));
    }
    let amps = (0u32..1 << n)
        .map(|x| {
            let twice_edges: u32 =
                (0..n).filter(|&i| (x >> i) & 1 == 1).map(|i| (g.neighbors(i) as u32 & x).count_ones()).sum();
            if (twice_edges / 2) % 2 == 0 {
                Amp::new(1, 0)
            } else {
                Amp::new(-1, 0)
            }
        })
        .collect();
    Ok(StateVector { n, amps })
}

/// A Pauli operator with an exact phase: `i^phase X^u Z^v` (Z applied first).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PhasedPauli {
    pub phase: u8,
    pub u: u32,
    pub v: u32,
}

impl PhasedPauli {
    /// Hermitian letter form: each `Y` contributes `i X Z`.
    pub fn from_letters(p: &PauliOp) -> Self {
        Self { phase: ((p.u & p.v).count_ones() % 4) as u8, u: p.u, v: p.v }
    }

    /// Parses `IXYZ` letters, qubit 0 first, with `Y = iXZ`.
    pub fn parse(s: &str) -> Result<Self> {
        Ok(Self::from_letters(&PauliOp::from_letters(s)?))
    }

    pub fn apply(&self, s: &StateVector) -> Result<StateVector> {
        if (self.u | self.v) >> s.n != 0 {
            return Err(invalid("operator acts outside the state's qubits"));
        }
        let phase = [Amp::new(1, 0), Amp::new(0, 1), Amp::new(-1, 0), Amp::new(0, -1)][self.phase as usize % 4];
        let amps = (0u32..1 << s.n)
            .map(|y| {
                let x = y ^ self.u;
                let a = s.amps[x as usize] * phase;
                if dot2(self.v, x) {
                    -a
                } else {
                    a
                }
            })
            .collect();
        Ok(StateVector { n: s.n, amps })
    }
}

/// Applies a phase-free operator lifted to its Hermitian letter form.
pub fn apply_pauli(p: &PauliOp, s: &StateVector) -> Result<StateVector> {
    PhasedPauli::from_letters(p).apply(s)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleViolation {
    pub op: String,
    pub i: usize,
    pub j: usize,
    /// `<W_i|E|W_j>` as `(re, im)` in units of `2^-n`.
    pub value: (i64, i64),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub ok: bool,
    /// `C_E` per operator, in units of `2^-n`, for operators that passed.
    pub c_table: Vec<(String, (i64, i64))>,
    pub violation: Option<OracleViolation>,
}

/// Checks `<W_i|E|W_j> = C_E delta_ij` for `|W_i> = Z^(x_i)|G>` and every
/// `E` in the set, with exact phases.
pub fn detection_check(g: &Graph, codewords: &[u32], e: &ErrorSet) -> Result<OracleReport> {
    if g.n() != e.n() {
        return Err(invalid("graph and error set differ in qubit count"));
    }
    let n = g.n();
    if let Some(&x) = codewords.iter().find(|&&x| x >> n != 0) {
        return Err(invalid(format!("codeword {x:#b} has more than {n} bits")));
    }
    let base = graph_state(g)?;
    let words: Vec<StateVector> = codewords
        .iter()
        .map(|&x| PhasedPauli { phase: 0, u: 0, v: x }.apply(&base))
        .collect::<Result<_>>()?;
    let mut c_table = Vec::with_capacity(e.len());
    for p in e.ops() {
        let lifted = PhasedPauli::from_letters(p);
        let images: Vec<StateVector> = words.iter().map(|w| lifted.apply(w)).collect::<Result<_>>()?;
        let mut c_e: Option<Amp> = None;
        for (i, wi) in words.iter().enumerate() {
            for (j, img) in images.iter().enumerate() {
                let value = wi.inner(img);
                let fail = if i == j {
                    match c_e {
                        None => {
                            c_e = Some(value);
                            false
                        }
                        Some(c) => c != value,
                    }
                } else {
                    value != Amp::new(0, 0)
                };
                if fail {
                    let violation = OracleViolation { op: p.to_letters(n), i, j, value: (value.re, value.im) };
                    return Ok(OracleReport { ok: false, c_table, violation: Some(violation) });
                }
            }
        }
        let c = c_e.unwrap_or_default();
        c_table.push((p.to_letters(n), (c.re, c.im)));
    }
    Ok(OracleReport { ok: true, c_table, violation: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::symmetric_error_set;
    use crate::util::rng_from_seed;
    use rand::Rng;

    fn amps(v: &[i64]) -> Vec<Amp> {
        v.iter().map(|&x| Amp::new(x, 0)).collect()
    }

    #[test]
    fn small_graph_states() {
        assert_eq!(graph_state(&Graph::empty(1)).unwrap().amps(), amps(&[1, 1]).as_slice());
        let edge = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(graph_state(&edge).unwrap().amps(), amps(&[1, 1, 1, -1]).as_slice());
        let tri = graph_state(&Graph::cycle(3)).unwrap();
        assert_eq!(tri.amps()[0b111], Amp::new(-1, 0));
        assert_eq!(tri.norm_sqr(), 8);
    }

    #[test]
    fn single_qubit_actions() {
        let plus = graph_state(&Graph::empty(1)).unwrap();
        let z = PhasedPauli::parse("Z").unwrap();
        assert_eq!(z.apply(&plus).unwrap().amps(), amps(&[1, -1]).as_slice());
        let x = PhasedPauli::parse("X").unwrap();
        assert_eq!(x.apply(&x.apply(&plus).unwrap()).unwrap(), plus);
        // Y|0> = i|1>
        let zero = StateVector::new(1, amps(&[1, 0])).unwrap();
        let y = PhasedPauli::parse("Y").unwrap();
        assert_eq!(y.apply(&zero).unwrap().amps(), &[Amp::new(0, 0), Amp::new(0, 1)]);
    }

    #[test]
    fn y_is_i_x_z_on_random_states() {
        let mut rng = rng_from_seed(3);
        for _ in 0..50 {
            let n = rng.gen_range(1..=5);
            let s = StateVector::new(
                n,
                (0..1 << n).map(|_| Amp::new(rng.gen_range(-3..=3), rng.gen_range(-3..=3))).collect(),
            )
            .unwrap();
            let q = rng.gen_range(0..n);
            let y = PhasedPauli { phase: 1, u: 1 << q, v: 1 << q };
            let z_then_x = PhasedPauli { phase: 0, u: 1 << q, v: 0 }
                .apply(&PhasedPauli { phase: 0, u: 0, v: 1 << q }.apply(&s).unwrap())
                .unwrap();
            let i_xz = PhasedPauli { phase: 1, u: 0, v: 0 }.apply(&z_then_x).unwrap();
            assert_eq!(y.apply(&s).unwrap(), i_xz);
        }
    }

    #[test]
    fn stabilizers_fix_graph_states() {
        let mut rng = rng_from_seed(12);
        for _ in 0..100 {
            let g = Graph::random(rng.gen_range(1..=8), &mut rng);
            let s = graph_state(&g).unwrap();
            for i in 0..g.n() {
                let m = PhasedPauli { phase: 0, u: 1 << i, v: g.neighbors(i) as u32 };
                assert_eq!(m.apply(&s).unwrap(), s);
                // X-Z rule
                let x = PhasedPauli { phase: 0, u: 1 << i, v: 0 };
                let zs = PhasedPauli { phase: 0, u: 0, v: g.neighbors(i) as u32 };
                assert_eq!(x.apply(&s).unwrap(), zs.apply(&s).unwrap());
            }
        }
    }

    #[test]
    fn graph_basis_is_orthogonal() {
        let g = Graph::cycle(4);
        let s = graph_state(&g).unwrap();
        for a in 0u32..16 {
            let sa = PhasedPauli { phase: 0, u: 0, v: a }.apply(&s).unwrap();
            for b in 0u32..16 {
                let sb = PhasedPauli { phase: 0, u: 0, v: b }.apply(&s).unwrap();
                let expect = if a == b { 16 } else { 0 };
                assert_eq!(sa.inner(&sb), Amp::new(expect, 0));
            }
        }
    }

    #[test]
    fn detection_examples() {
        let edge = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let e = symmetric_error_set(2, 2).unwrap();
        assert!(detection_check(&edge, &[0], &e).unwrap().ok);
        let bad = detection_check(&edge, &[0, 0b11], &e).unwrap();
        assert!(!bad.ok);
        assert!(bad.violation.is_some());
    }
}
