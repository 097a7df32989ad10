//! Phase-free symplectic Pauli operators and the error sets searched for.
//!
//! An operator is stored as a pair of `n`-bit masks `(u, v)` standing for
//! `X^u Z^v` up to phase. Detection in standard form depends only on these
//! masks; the exact-phase oracle in [`crate::qoracle`] lifts them back.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{invalid, Error, Result};

/// `X^u Z^v` up to phase.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PauliOp {
    pub u: u32,
    pub v: u32,
}

impl PauliOp {
    pub const IDENTITY: PauliOp = PauliOp { u: 0, v: 0 };

    pub fn new(u: u32, v: u32) -> Self {
        Self { u, v }
    }

    pub fn single(letter: Letter, qubit: usize) -> Self {
        let (x, z) = letter.bits();
        Self { u: (x as u32) << qubit, v: (z as u32) << qubit }
    }

    /// Number of qubits on which the operator is not the identity.
    pub fn weight(&self) -> usize {
        (self.u | self.v).count_ones() as usize
    }

    /// Phase-free product.
    pub fn product(&self, other: &PauliOp) -> PauliOp {
        PauliOp { u: self.u ^ other.u, v: self.v ^ other.v }
    }

    /// True iff the symplectic form `u·v' + v·u'` vanishes over GF(2).
    pub fn commutes(&self, other: &PauliOp) -> bool {
        ((self.u & other.v) ^ (self.v & other.u)).count_ones() % 2 == 0
    }

    pub fn letter(&self, qubit: usize) -> Letter {
        Letter::from_bits((self.u >> qubit) & 1 == 1, (self.v >> qubit) & 1 == 1)
    }

    /// `n`-character string over `IXYZ`, qubit 0 first.
    pub fn to_letters(&self, n: usize) -> String {
        (0..n).map(|q| self.letter(q).to_char()).collect()
    }

    pub fn from_letters(s: &str) -> Result<Self> {
        let mut p = PauliOp::IDENTITY;
        for (q, c) in s.chars().enumerate() {
            if q >= 32 {
                return Err(invalid("Pauli string longer than 32 qubits"));
            }
            let l = Letter::from_char(c)
                .ok_or_else(|| Error::Parse(format!("bad Pauli letter '{c}' in '{s}'")))?;
            p = p.product(&PauliOp::single(l, q));
        }
        Ok(p)
    }

    /// Rewrites each qubit's letter through its permutation.
    pub fn permute_letters(&self, perms: &[LetterPermutation]) -> PauliOp {
        let mut out = PauliOp::IDENTITY;
        for (q, perm) in perms.iter().enumerate() {
            let l = perm.apply(self.letter(q));
            out = out.product(&PauliOp::single(l, q));
        }
        out
    }

    /// Sort key matching lexicographic order of the letter string.
    fn text_key(&self, n: usize) -> u64 {
        (0..n).fold(0u64, |k, q| k * 4 + self.letter(q) as u64)
    }
}

/// Single-qubit Pauli letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    I = 0,
    X = 1,
    Y = 2,
    Z = 3,
}

impl Letter {
    pub fn bits(self) -> (bool, bool) {
        match self {
            Letter::I => (false, false),
            Letter::X => (true, false),
            Letter::Y => (true, true),
            Letter::Z => (false, true),
        }
    }

    pub fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => Letter::I,
            (true, false) => Letter::X,
            (true, true) => Letter::Y,
            (false, true) => Letter::Z,
        }
    }

    pub fn to_char(self) -> char {
        ['I', 'X', 'Y', 'Z'][self as usize]
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'I' => Some(Letter::I),
            'X' => Some(Letter::X),
            'Y' => Some(Letter::Y),
            'Z' => Some(Letter::Z),
            _ => None,
        }
    }
}

/// A permutation of `{X, Y, Z}`, stored as the images of `X`, `Y`, `Z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LetterPermutation([Letter; 3]);

impl LetterPermutation {
    pub const IDENTITY: Self = Self([Letter::X, Letter::Y, Letter::Z]);
    pub const SWAP_XZ: Self = Self([Letter::Z, Letter::Y, Letter::X]);
    pub const SWAP_YZ: Self = Self([Letter::X, Letter::Z, Letter::Y]);
    pub const SWAP_XY: Self = Self([Letter::Y, Letter::X, Letter::Z]);

    /// Builds from the images of `X`, `Y`, `Z`; fails unless they are distinct
    /// non-identity letters.
    pub fn new(images: [Letter; 3]) -> Result<Self> {
        let mut seen = [false; 4];
        for l in images {
            if l == Letter::I || seen[l as usize] {
                return Err(invalid(format!("{images:?} is not a permutation of X, Y, Z")));
            }
            seen[l as usize] = true;
        }
        Ok(Self(images))
    }

    pub fn apply(&self, l: Letter) -> Letter {
        match l {
            Letter::I => Letter::I,
            other => self.0[other as usize - 1],
        }
    }

    /// `self` after `first`.
    pub fn compose(&self, first: &LetterPermutation) -> LetterPermutation {
        Self([self.apply(first.0[0]), self.apply(first.0[1]), self.apply(first.0[2])])
    }

    /// The three images as a string, e.g. `"ZYX"` for X<->Z.
    pub fn code(&self) -> String {
        self.0.iter().map(|l| l.to_char()).collect()
    }

    pub fn all() -> [LetterPermutation; 6] {
        use Letter::*;
        [[X, Y, Z], [X, Z, Y], [Y, X, Z], [Y, Z, X], [Z, X, Y], [Z, Y, X]].map(Self)
    }
}

/// Letter permutation applied to the amplitude-damping error set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AdPermutation {
    Identity,
    Xz,
    Yz,
    /// One permutation per qubit, each written as the images of X, Y, Z.
    PerQubit(Vec<String>),
}

impl AdPermutation {
    pub fn per_qubit(&self, n: usize) -> Vec<LetterPermutation> {
        match self {
            AdPermutation::Identity => vec![LetterPermutation::IDENTITY; n],
            AdPermutation::Xz => vec![LetterPermutation::SWAP_XZ; n],
            AdPermutation::Yz => vec![LetterPermutation::SWAP_YZ; n],
            AdPermutation::PerQubit(codes) => codes
                .iter()
                .map(|c| parse_letter_perm(c).expect("validated on construction"))
                .collect(),
        }
    }

    fn from_per_qubit(perms: &[LetterPermutation]) -> Self {
        if perms.iter().all(|p| *p == LetterPermutation::IDENTITY) {
            AdPermutation::Identity
        } else if perms.iter().all(|p| *p == LetterPermutation::SWAP_XZ) {
            AdPermutation::Xz
        } else if perms.iter().all(|p| *p == LetterPermutation::SWAP_YZ) {
            AdPermutation::Yz
        } else {
            AdPermutation::PerQubit(perms.iter().map(|p| p.code()).collect())
        }
    }

    pub fn label(&self) -> String {
        match self {
            AdPermutation::Identity => "id".into(),
            AdPermutation::Xz => "xz".into(),
            AdPermutation::Yz => "yz".into(),
            AdPermutation::PerQubit(v) => v.join(","),
        }
    }
}

fn parse_letter_perm(code: &str) -> Result<LetterPermutation> {
    let letters: Vec<Letter> = code.chars().filter_map(Letter::from_char).collect();
    if letters.len() != 3 || code.chars().count() != 3 {
        return Err(Error::Parse(format!("'{code}' is not three Pauli letters")));
    }
    LetterPermutation::new([letters[0], letters[1], letters[2]])
}

/// How an error set was generated.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ErrorSetKind {
    /// Every operator of weight at most `max_weight` (distance `max_weight + 1`).
    Symmetric { max_weight: usize },
    /// `t`-fold products of the single amplitude-damping set, then permuted.
    AmpDamp { t: usize, perm: AdPermutation },
    /// Caller-supplied operators.
    Custom,
}

impl ErrorSetKind {
    /// Largest weight an operator of this kind may have.
    pub fn max_weight(&self) -> usize {
        match self {
            ErrorSetKind::Symmetric { max_weight } => *max_weight,
            ErrorSetKind::AmpDamp { t, .. } => 2 * t,
            ErrorSetKind::Custom => usize::MAX,
        }
    }

    /// Short descriptor, e.g. `symmetric:2` or `ad:1:xz`.
    pub fn label(&self) -> String {
        match self {
            ErrorSetKind::Symmetric { max_weight } => format!("symmetric:{max_weight}"),
            ErrorSetKind::AmpDamp { t, perm } => format!("ad:{t}:{}", perm.label()),
            ErrorSetKind::Custom => "custom".into(),
        }
    }
}

/// A deduplicated set of phase-free Pauli operators on `n` qubits.
///
/// Operators are kept sorted by their letter string, so two sets are equal
/// iff their `ops` vectors are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ErrorSet {
    n: usize,
    kind: ErrorSetKind,
    ops: Vec<PauliOp>,
}

impl ErrorSet {
    fn from_ops(n: usize, kind: ErrorSetKind, ops: impl IntoIterator<Item = PauliOp>) -> Self {
        let set: BTreeSet<PauliOp> = ops.into_iter().collect();
        let mut ops: Vec<PauliOp> = set.into_iter().collect();
        ops.sort_by_key(|p| p.text_key(n));
        Self { n, kind, ops }
    }

    /// An arbitrary set of operators on `n` qubits; the identity is added.
    pub fn custom(n: usize, ops: impl IntoIterator<Item = PauliOp>) -> Result<Self> {
        check_n(n)?;
        let ops: Vec<PauliOp> = ops.into_iter().collect();
        if ops.iter().any(|p| (p.u | p.v) >> n != 0) {
            return Err(invalid(format!("operator acts outside {n} qubits")));
        }
        Ok(Self::from_ops(n, ErrorSetKind::Custom, ops.into_iter().chain([PauliOp::IDENTITY])))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> &ErrorSetKind {
        &self.kind
    }

    pub fn ops(&self) -> &[PauliOp] {
        &self.ops
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    pub fn contains(&self, p: &PauliOp) -> bool {
        let key = p.text_key(self.n);
        self.ops.binary_search_by_key(&key, |q| q.text_key(self.n)).is_ok()
    }

    /// One operator per line as an `IXYZ` string, sorted lexicographically.
    pub fn canonical_text(&self) -> String {
        let mut s = String::with_capacity(self.ops.len() * (self.n + 1));
        for p in &self.ops {
            s.push_str(&p.to_letters(self.n));
            s.push('\n');
        }
        s
    }

    /// First 16 hex digits of the SHA-256 of [`Self::canonical_text`].
    pub fn content_hash(&self) -> String {
        let digest = Sha256::digest(self.canonical_text().as_bytes());
        hex::encode(&digest[..8])
    }

    /// Rewrites every operator qubit by qubit through `perms`.
    pub fn apply_qubit_permutations(&self, perms: &[LetterPermutation]) -> Result<ErrorSet> {
        if perms.len() != self.n {
            return Err(invalid(format!("expected {} permutations, got {}", self.n, perms.len())));
        }
        let kind = match &self.kind {
            ErrorSetKind::Symmetric { .. } | ErrorSetKind::Custom => self.kind.clone(),
            ErrorSetKind::AmpDamp { t, perm } => {
                let prev = perm.per_qubit(self.n);
                let composed: Vec<_> = perms.iter().zip(&prev).map(|(p, q)| p.compose(q)).collect();
                ErrorSetKind::AmpDamp { t: *t, perm: AdPermutation::from_per_qubit(&composed) }
            }
        };
        Ok(Self::from_ops(self.n, kind, self.ops.iter().map(|p| p.permute_letters(perms))))
    }
}

impl fmt::Display for ErrorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {} qubits ({} operators)", self.kind.label(), self.n, self.ops.len())
    }
}

fn check_n(n: usize) -> Result<()> {
    if !(1..=16).contains(&n) {
        return Err(invalid(format!("qubit count {n} outside 1..=16")));
    }
    Ok(())
}

/// All operators of weight at most `d - 1`: the set an `((n, K, d))` code must detect.
pub fn symmetric_error_set(n: usize, d: usize) -> Result<ErrorSet> {
    check_n(n)?;
    if d == 0 || d > n + 1 {
        return Err(invalid(format!("distance {d} outside 1..={}", n + 1)));
    }
    let r = d - 1;
    let mut ops = Vec::new();
    for support in 0u32..(1 << n) {
        let k = support.count_ones() as usize;
        if k > r {
            continue;
        }
        let qubits: Vec<usize> = (0..n).filter(|&q| (support >> q) & 1 == 1).collect();
        // each support qubit takes one of X, Y, Z
        for mut code in 0..3usize.pow(k as u32) {
            let mut p = PauliOp::IDENTITY;
            for &q in &qubits {
                let l = [Letter::X, Letter::Y, Letter::Z][code % 3];
                code /= 3;
                p = p.product(&PauliOp::single(l, q));
            }
            ops.push(p);
        }
    }
    Ok(ErrorSet::from_ops(n, ErrorSetKind::Symmetric { max_weight: r }, ops))
}

/// The single amplitude-damping set `{I, X_i, Y_i, Z_i, X_iX_j, Y_iY_j (i<j), X_iY_j (i != j)}`.
fn amp_damp_single(n: usize) -> Vec<PauliOp> {
    let mut ops = vec![PauliOp::IDENTITY];
    for i in 0..n {
        for l in [Letter::X, Letter::Y, Letter::Z] {
            ops.push(PauliOp::single(l, i));
        }
        for j in 0..n {
            if i == j {
                continue;
            }
            let xy = PauliOp::single(Letter::X, i).product(&PauliOp::single(Letter::Y, j));
            ops.push(xy);
            if i < j {
                ops.push(PauliOp::single(Letter::X, i).product(&PauliOp::single(Letter::X, j)));
                ops.push(PauliOp::single(Letter::Y, i).product(&PauliOp::single(Letter::Y, j)));
            }
        }
    }
    ops
}

/// Amplitude-damping error set for `t` errors: all `t`-fold phase-free
/// products of the single set, then the letter permutation.
pub fn amp_damp_error_set(n: usize, t: usize, perm: AdPermutation) -> Result<ErrorSet> {
    check_n(n)?;
    if t == 0 {
        return Err(invalid("t must be at least 1"));
    }
    if let AdPermutation::PerQubit(codes) = &perm {
        if codes.len() != n {
            return Err(invalid(format!("expected {n} per-qubit permutations")));
        }
        for c in codes {
            parse_letter_perm(c)?;
        }
    }
    let single = amp_damp_single(n);
    let mut current: BTreeSet<PauliOp> = single.iter().copied().collect();
    for _ in 1..t {
        let mut next = BTreeSet::new();
        for a in &current {
            for b in &single {
                next.insert(a.product(b));
            }
        }
        current = next;
    }
    let perms = perm.per_qubit(n);
    let ops = current.into_iter().map(|p| p.permute_letters(&perms));
    Ok(ErrorSet::from_ops(n, ErrorSetKind::AmpDamp { t, perm }, ops))
}

/// Parses an error-set descriptor: `symmetric` (needs `d`), `symmetric:<d-1>`,
/// or `ad:<t>:<id|xz|yz>`.
pub fn parse_error_set(spec: &str, n: usize, d: Option<usize>) -> Result<ErrorSet> {
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.as_slice() {
        ["symmetric"] => {
            let d = d.ok_or_else(|| invalid("the symmetric error set needs a distance"))?;
            symmetric_error_set(n, d)
        }
        ["symmetric", r] => {
            let r: usize = r.parse().map_err(|_| Error::Parse(format!("bad weight in '{spec}'")))?;
            symmetric_error_set(n, r + 1)
        }
        ["ad", t, p] => {
            let t: usize = t.parse().map_err(|_| Error::Parse(format!("bad t in '{spec}'")))?;
            let perm = match *p {
                "id" => AdPermutation::Identity,
                "xz" => AdPermutation::Xz,
                "yz" => AdPermutation::Yz,
                other => AdPermutation::PerQubit(other.split(',').map(str::to_string).collect()),
            };
            amp_damp_error_set(n, t, perm)
        }
        _ => Err(Error::Parse(format!("unknown error set '{spec}'"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::util::binomial;
    use std::collections::HashSet;

    fn letters(s: &[&str]) -> HashSet<PauliOp> {
        s.iter().map(|t| PauliOp::from_letters(t).unwrap()).collect()
    }

    #[test]
    fn weights() {
        assert_eq!(PauliOp::IDENTITY.weight(), 0);
        assert_eq!(PauliOp::from_letters("IIXIYZII").unwrap().weight(), 3);
    }

    #[test]
    fn products_and_commutation() {
        let x1 = PauliOp::from_letters("X").unwrap();
        let z1 = PauliOp::from_letters("Z").unwrap();
        assert_eq!(x1.product(&z1), PauliOp::from_letters("Y").unwrap());
        assert_eq!(x1.product(&x1), PauliOp::IDENTITY);
        assert!(!x1.commutes(&z1));
        assert!(PauliOp::from_letters("XI").unwrap().commutes(&PauliOp::from_letters("IZ").unwrap()));
        assert!(x1.commutes(&x1));
    }

    #[test]
    fn symmetric_sizes() {
        assert_eq!(symmetric_error_set(2, 2).unwrap().len(), 7);
        assert_eq!(symmetric_error_set(5, 3).unwrap().len(), 106);
        assert_eq!(symmetric_error_set(4, 1).unwrap().ops(), &[PauliOp::IDENTITY]);
        for n in 1..=7 {
            for d in 1..=n + 1 {
                let e = symmetric_error_set(n, d).unwrap();
                let expect: u64 =
                    (0..d as u64).map(|k| binomial(n as u64, k) * 3u64.pow(k as u32)).sum();
                assert_eq!(e.len() as u64, expect);
                assert!(e.ops().iter().all(|p| p.weight() < d));
            }
        }
        assert!(symmetric_error_set(3, 5).is_err());
        assert!(symmetric_error_set(3, 0).is_err());
    }

    #[test]
    fn symmetric_matches_brute_enumeration() {
        // every (x, z) pair with weight <= 2 on 5 qubits
        let mut count = 0;
        for x in 0u32..32 {
            for z in 0u32..32 {
                if (x | z).count_ones() <= 2 {
                    count += 1;
                    assert!(symmetric_error_set(5, 3).unwrap().contains(&PauliOp::new(x, z)));
                }
            }
        }
        assert_eq!(count, 106);
    }

    #[test]
    fn amp_damp_two_qubits() {
        let e = amp_damp_error_set(2, 1, AdPermutation::Identity).unwrap();
        let expect = letters(&["II", "XI", "IX", "YI", "IY", "ZI", "IZ", "XX", "YY", "XY", "YX"]);
        assert_eq!(e.ops().iter().copied().collect::<HashSet<_>>(), expect);
        assert_eq!(e.len(), 11);
    }

    #[test]
    fn amp_damp_brute_product_expansion() {
        // the single set from its defining generators with unrestricted i, j:
        // diagonal terms collapse to existing elements
        let n = 4;
        let mut brute = HashSet::new();
        brute.insert(PauliOp::IDENTITY);
        for i in 0..n {
            for l in [Letter::X, Letter::Y, Letter::Z] {
                brute.insert(PauliOp::single(l, i));
            }
            for j in 0..n {
                for (a, b) in [(Letter::X, Letter::X), (Letter::X, Letter::Y), (Letter::Y, Letter::Y)] {
                    brute.insert(PauliOp::single(a, i).product(&PauliOp::single(b, j)));
                }
            }
        }
        let e = amp_damp_error_set(n, 1, AdPermutation::Identity).unwrap();
        assert_eq!(e.ops().iter().copied().collect::<HashSet<_>>(), brute);
    }

    #[test]
    fn xz_is_an_involution() {
        let e = amp_damp_error_set(4, 1, AdPermutation::Identity).unwrap();
        let xz = e.apply_qubit_permutations(&[LetterPermutation::SWAP_XZ; 4]).unwrap();
        assert_eq!(xz.ops(), amp_damp_error_set(4, 1, AdPermutation::Xz).unwrap().ops());
        assert_eq!(xz.kind(), &ErrorSetKind::AmpDamp { t: 1, perm: AdPermutation::Xz });
        let back = xz.apply_qubit_permutations(&[LetterPermutation::SWAP_XZ; 4]).unwrap();
        assert_eq!(back, e);
        // the named XZ set swaps X and Z letters in the pair terms
        assert!(xz.contains(&PauliOp::from_letters("ZZII").unwrap()));
        assert!(xz.contains(&PauliOp::from_letters("ZYII").unwrap()));
        let yz = amp_damp_error_set(4, 1, AdPermutation::Yz).unwrap();
        assert!(yz.contains(&PauliOp::from_letters("XZII").unwrap()));
        assert!(yz.contains(&PauliOp::from_letters("ZZII").unwrap()));
    }

    #[test]
    fn amp_damp_subset_of_symmetric() {
        for n in 2..=6 {
            for t in 1..=2 {
                let e = amp_damp_error_set(n, t, AdPermutation::Identity).unwrap();
                let sym = symmetric_error_set(n, (2 * t + 1).min(n + 1)).unwrap();
                assert!(e.ops().iter().all(|p| sym.contains(p)));
                assert_eq!(e.ops().iter().filter(|p| **p == PauliOp::IDENTITY).count(), 1);
            }
        }
    }

    #[test]
    fn xy_swap_on_any_qubit_leaves_single_set_invariant() {
        let n = 5;
        let e = amp_damp_error_set(n, 1, AdPermutation::Identity).unwrap();
        for subset in 0u32..(1 << n) {
            let perms: Vec<_> = (0..n)
                .map(|q| {
                    if (subset >> q) & 1 == 1 {
                        LetterPermutation::SWAP_XY
                    } else {
                        LetterPermutation::IDENTITY
                    }
                })
                .collect();
            assert_eq!(e.apply_qubit_permutations(&perms).unwrap().ops(), e.ops());
        }
    }

    #[test]
    fn symmetric_invariant_under_any_permutations() {
        let e = symmetric_error_set(4, 3).unwrap();
        let all = LetterPermutation::all();
        for k in 0..50usize {
            let perms: Vec<_> = (0..4).map(|q| all[(k * 7 + q * 5) % 6]).collect();
            assert_eq!(e.apply_qubit_permutations(&perms).unwrap(), e);
        }
    }

    #[test]
    fn permutation_lists_compose() {
        let e = amp_damp_error_set(3, 1, AdPermutation::Identity).unwrap();
        let a = [LetterPermutation::SWAP_XZ, LetterPermutation::IDENTITY, LetterPermutation::SWAP_YZ];
        let b = [LetterPermutation::SWAP_YZ, LetterPermutation::SWAP_XZ, LetterPermutation::SWAP_YZ];
        let seq = e.apply_qubit_permutations(&a).unwrap().apply_qubit_permutations(&b).unwrap();
        let composed: Vec<_> = a.iter().zip(&b).map(|(x, y)| y.compose(x)).collect();
        let once = e.apply_qubit_permutations(&composed).unwrap();
        assert_eq!(seq.ops(), once.ops());
        assert_eq!(seq.kind(), once.kind());
        let id = e.apply_qubit_permutations(&[LetterPermutation::IDENTITY; 3]).unwrap();
        assert_eq!(id, e);
    }

    #[test]
    fn canonical_text_and_hash() {
        let e = symmetric_error_set(2, 2).unwrap();
        assert_eq!(e.canonical_text(), "II\nIX\nIY\nIZ\nXI\nYI\nZI\n");
        assert_eq!(e.content_hash().len(), 16);
        assert_eq!(e.content_hash(), symmetric_error_set(2, 2).unwrap().content_hash());
        assert_ne!(e.content_hash(), symmetric_error_set(3, 2).unwrap().content_hash());
    }

    #[test]
    fn descriptors() {
        assert_eq!(parse_error_set("symmetric", 5, Some(3)).unwrap().len(), 106);
        assert_eq!(parse_error_set("symmetric:2", 5, None).unwrap().len(), 106);
        let ad = parse_error_set("ad:1:yz", 4, None).unwrap();
        assert_eq!(ad.kind().label(), "ad:1:yz");
        assert!(parse_error_set("ad:1:qq", 4, None).is_err());
        assert!(parse_error_set("bogus", 4, None).is_err());
        let custom = parse_error_set("ad:1:ZYX,XYZ,XZY", 3, None).unwrap();
        assert_eq!(custom.kind().label(), "ad:1:ZYX,XYZ,XZY");
    }
}
