//! One-sided Mann-Whitney U test for comparing GA campaigns.

use serde::{Deserialize, Serialize};
use statrs::distribution::{ContinuousCDF, Normal};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MannWhitney {
    /// U statistic of the first sample.
    pub u: f64,
    pub z: f64,
    /// Normal-approximation p-value for "first sample tends to be larger".
    pub p_greater: f64,
}

/// Mann-Whitney U with midranks, tie-corrected variance and a 0.5
/// continuity correction.
pub fn mann_whitney_greater(a: &[f64], b: &[f64]) -> MannWhitney {
    let (n1, n2) = (a.len() as f64, b.len() as f64);
    let mut all: Vec<(f64, usize)> =
        a.iter().map(|&x| (x, 0)).chain(b.iter().map(|&x| (x, 1))).collect();
    all.sort_by(|x, y| x.0.total_cmp(&y.0));
    let n = all.len();
    let mut rank_sum_a = 0.0;
    let mut tie_term = 0.0;
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j + 1 < n && all[j + 1].0 == all[i].0 {
            j += 1;
        }
        let midrank = (i + j) as f64 / 2.0 + 1.0;
        let t = (j - i + 1) as f64;
        tie_term += t * t * t - t;
        rank_sum_a += all[i..=j].iter().filter(|e| e.1 == 0).count() as f64 * midrank;
        i = j + 1;
    }
    let u = rank_sum_a - n1 * (n1 + 1.0) / 2.0;
    let mean = n1 * n2 / 2.0;
    let nt = n1 + n2;
    let var = n1 * n2 / 12.0 * ((nt + 1.0) - tie_term / (nt * (nt - 1.0)));
    if n1 == 0.0 || n2 == 0.0 || var <= 0.0 {
        return MannWhitney { u, z: 0.0, p_greater: 1.0 };
    }
    let z = (u - mean - 0.5) / var.sqrt();
    let p = 1.0 - Normal::standard().cdf(z);
    MannWhitney { u, z, p_greater: p }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn separated_samples() {
        let a: Vec<f64> = (10..20).map(f64::from).collect();
        let b: Vec<f64> = (0..10).map(f64::from).collect();
        let r = mann_whitney_greater(&a, &b);
        assert_eq!(r.u, 100.0);
        assert!(r.p_greater < 1e-3);
        let back = mann_whitney_greater(&b, &a);
        assert_eq!(back.u, 0.0);
        assert!(back.p_greater > 0.99);
    }

    #[test]
    fn textbook_value_with_ties() {
        // U counted by hand: pairs (a > b) + 0.5 (a == b)
        let a = [3.0, 4.0, 4.0, 7.0, 9.0];
        let b = [1.0, 4.0, 5.0, 5.0, 6.0, 8.0];
        let mut by_hand = 0.0;
        for x in a {
            for y in b {
                by_hand += if x > y { 1.0 } else if x == y { 0.5 } else { 0.0 };
            }
        }
        let r = mann_whitney_greater(&a, &b);
        assert_eq!(r.u, by_hand);
        assert!(r.p_greater > 0.05 && r.p_greater < 0.95);
    }

    #[test]
    fn identical_constant_samples() {
        let r = mann_whitney_greater(&[2.0; 5], &[2.0; 5]);
        assert_eq!(r.p_greater, 1.0);
    }
}
