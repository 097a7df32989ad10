//! Small shared helpers: a fixed-size bitset and deterministic seed splitting.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Fixed-length bitset backed by `u64` words.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitSet {
    len: usize,
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        Self { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i >> 6] >> (i & 63)) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i >> 6] |= 1 << (i & 63);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i >> 6] &= !(1 << (i & 63));
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + b)
            })
        })
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }
}

/// SplitMix64 finalizer.
pub fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed for the `index`-th independent stream under `master`.
///
/// Every stochastic routine in the crate derives child seeds through this
/// function so results do not depend on scheduling order.
pub fn derive_seed(master: u64, index: u64) -> u64 {
    splitmix64(master ^ splitmix64(index.wrapping_add(0x5851_f42d_4c95_7f2d)))
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// GF(2) inner product of two bit vectors.
#[inline]
pub fn dot2(a: u32, b: u32) -> bool {
    (a & b).count_ones() & 1 == 1
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

pub(crate) fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// Render the low `n` bits of `x` as a binary string, bit 0 first.
pub fn bits_to_string(x: u32, n: usize) -> String {
    (0..n).map(|i| if (x >> i) & 1 == 1 { '1' } else { '0' }).collect()
}

/// Inverse of [`bits_to_string`].
pub fn bits_from_str(s: &str) -> Option<u32> {
    if s.len() > 32 {
        return None;
    }
    let mut x = 0u32;
    for (i, c) in s.chars().enumerate() {
        match c {
            '0' => {}
            '1' => x |= 1 << i,
            _ => return None,
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bitset_basic() {
        let mut b = BitSet::new(130);
        b.insert(0);
        b.insert(64);
        b.insert(129);
        assert_eq!(b.count(), 3);
        assert_eq!(b.iter().collect::<Vec<_>>(), vec![0, 64, 129]);
        b.remove(64);
        assert!(!b.contains(64));
        assert!(b.contains(129));
    }

    #[test]
    fn seeds_differ_by_index() {
        let a = derive_seed(7, 0);
        let b = derive_seed(7, 1);
        assert_ne!(a, b);
        assert_eq!(a, derive_seed(7, 0));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(13, 5), 1287);
        assert_eq!(binomial(3, 4), 0);
    }

    #[test]
    fn bit_strings() {
        assert_eq!(bits_to_string(0b110, 4), "0110");
        assert_eq!(bits_from_str("0110"), Some(0b110));
        assert_eq!(bits_from_str("01a"), None);
    }
}
