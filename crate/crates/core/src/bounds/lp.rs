//! The linear-programming bound on `((n, K, d))` codes.
//!
//! Unknowns are the coefficients `A_0..A_n` of `A(x, y) = sum A_i x^(n-i) y^i`.
//! `B` and `S` are obtained by substituting `((x+3y)/2, (x-y)/2)` and
//! `((x+3y)/2, (y-x)/2)` into `A` and scaling by `K`; both are linear in `A`.

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::simplex::{feasible, Constraint, Relation};
use crate::error::{invalid, Result};

/// Largest supported length; beyond this the exact LP gets slow.
pub const MAX_LP_LENGTH: usize = 32;

/// `M[j][i]`: coefficient of `x^(n-j) y^j` in `((x+3y)/2)^(n-i) ((x-y)/2)^i`.
///
/// Then `B_j = K sum_i M[j][i] A_i` and `S_j = K sum_i (-1)^i M[j][i] A_i`.
pub fn substitution_matrix(n: usize) -> Vec<Vec<BigRational>> {
    let scale = BigRational::from_integer(BigInt::one() << n);
    (0..=n)
        .map(|j| {
            (0..=n)
                .map(|i| {
                    let mut total = BigInt::zero();
                    // y^(j-k) from (x+3y)^(n-i), y^k from (x-y)^i
                    for k in 0..=j.min(i) {
                        if j - k > n - i {
                            continue;
                        }
                        let term = binomial(BigInt::from(n - i), BigInt::from(j - k))
                            * BigInt::from(3).pow((j - k) as u32)
                            * binomial(BigInt::from(i), BigInt::from(k));
                        if k % 2 == 0 {
                            total += term;
                        } else {
                            total -= term;
                        }
                    }
                    BigRational::from_integer(total) / &scale
                })
                .collect()
        })
        .collect()
}

/// The LP for one `(n, d)` pair, reusable across candidate `K`.
#[derive(Clone, Debug)]
pub struct LpInstance {
    n: usize,
    d: usize,
    pure: bool,
    m: Vec<Vec<BigRational>>,
}

impl LpInstance {
    pub fn new(n: usize, d: usize, pure: bool) -> Result<Self> {
        if n == 0 || n > MAX_LP_LENGTH {
            return Err(invalid(format!("LP length {n} outside 1..={MAX_LP_LENGTH}")));
        }
        if d == 0 {
            return Err(invalid("distance must be at least 1"));
        }
        Ok(Self { n, d, pure, m: substitution_matrix(n) })
    }

    /// Whether `A_1..A_n >= 0` exist meeting every constraint at dimension `k`.
    pub fn feasible(&self, k: &BigRational) -> bool {
        let n = self.n;
        let one = BigRational::one();
        let mut rows = Vec::with_capacity(3 * n + 2);
        for j in 0..=n {
            // B_j - A_j = K M[j][0] - [j = 0] + sum_{i>=1} (K M[j][i] - [i = j]) A_i
            let coeffs: Vec<BigRational> = (1..=n)
                .map(|i| {
                    let c = k * &self.m[j][i];
                    if i == j {
                        c - &one
                    } else {
                        c
                    }
                })
                .collect();
            let mut rhs = -(k * &self.m[j][0]);
            if j == 0 {
                rhs += &one;
            }
            let rel = if j < self.d { Relation::Eq } else { Relation::Ge };
            rows.push(Constraint { coeffs, rel, rhs });
            // S_j >= 0
            let coeffs = (1..=n)
                .map(|i| {
                    let c = k * &self.m[j][i];
                    if i % 2 == 1 {
                        -c
                    } else {
                        c
                    }
                })
                .collect();
            rows.push(Constraint { coeffs, rel: Relation::Ge, rhs: -(k * &self.m[j][0]) });
        }
        if self.pure {
            for j in 1..self.d.min(n + 1) {
                let mut coeffs = vec![BigRational::zero(); n];
                coeffs[j - 1] = one.clone();
                rows.push(Constraint { coeffs, rel: Relation::Eq, rhs: BigRational::zero() });
            }
        }
        feasible(n, &rows)
    }

    pub fn feasible_integer(&self, k: u64) -> bool {
        self.feasible(&BigRational::from_integer(BigInt::from(k)))
    }

    /// Largest feasible integer `K` and the supremum of feasible real `K`,
    /// bracketed to within `2^-20`.
    pub fn max_k(&self) -> LpBound {
        if !self.feasible_integer(1) {
            // feasibility is only monotone from K = 1 upward; nothing to bisect
            return LpBound {
                n: self.n,
                d: self.d,
                pure: self.pure,
                integer: 0,
                supremum_low: BigRational::zero(),
                supremum_high: BigRational::one(),
            };
        }
        let mut hi_int = 2u64;
        while self.feasible_integer(hi_int) {
            hi_int *= 2;
        }
        let mut lo_int = hi_int / 2;
        while hi_int - lo_int > 1 {
            let mid = lo_int + (hi_int - lo_int) / 2;
            if self.feasible_integer(mid) {
                lo_int = mid;
            } else {
                hi_int = mid;
            }
        }
        let mut lo = BigRational::from_integer(BigInt::from(lo_int));
        let mut hi = BigRational::from_integer(BigInt::from(hi_int));
        let tol = BigRational::new(BigInt::one(), BigInt::one() << 20);
        let two = BigRational::from_integer(BigInt::from(2));
        while &hi - &lo > tol {
            let mid = (&lo + &hi) / &two;
            if self.feasible(&mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        LpBound { n: self.n, d: self.d, pure: self.pure, integer: lo_int, supremum_low: lo, supremum_high: hi }
    }
}

/// Result of maximising `K` subject to the LP.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LpBound {
    pub n: usize,
    pub d: usize,
    pub pure: bool,
    /// Largest feasible integer, or 0 if even `K = 1` is infeasible (the
    /// bracket is then `[0, 1]`).
    pub integer: u64,
    /// Feasible lower end of the final bisection bracket.
    pub supremum_low: BigRational,
    /// Infeasible upper end of the final bisection bracket.
    pub supremum_high: BigRational,
}

impl LpBound {
    pub fn supremum_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.supremum_low.to_f64().unwrap_or(f64::NAN)
    }
}

pub fn lp_feasible(n: usize, d: usize, k: &BigRational, pure: bool) -> Result<bool> {
    Ok(LpInstance::new(n, d, pure)?.feasible(k))
}

pub fn lp_max_k(n: usize, d: usize, pure: bool) -> Result<LpBound> {
    Ok(LpInstance::new(n, d, pure)?.max_k())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    /// Evaluates a polynomial given by coefficients `c_i` of `x^(n-i) y^i`.
    fn eval(c: &[BigRational], x: &BigRational, y: &BigRational) -> BigRational {
        let n = c.len() - 1;
        c.iter()
            .enumerate()
            .map(|(i, ci)| ci * num_traits::pow(x.clone(), n - i) * num_traits::pow(y.clone(), i))
            .sum()
    }

    #[test]
    fn substitution_matches_pointwise_evaluation() {
        // B(x, y) computed through M agrees with A evaluated at the substituted point
        for n in 1..=7 {
            let m = substitution_matrix(n);
            let a: Vec<BigRational> = (0..=n).map(|i| q((i * i + 1) as i64, (i + 2) as i64)).collect();
            let b: Vec<BigRational> = (0..=n).map(|j| (0..=n).map(|i| &m[j][i] * &a[i]).sum()).collect();
            let s: Vec<BigRational> = (0..=n)
                .map(|j| (0..=n).map(|i| if i % 2 == 1 { -(&m[j][i] * &a[i]) } else { &m[j][i] * &a[i] }).sum())
                .collect();
            for (x, y) in [(q(1, 1), q(2, 1)), (q(-3, 2), q(5, 7)), (q(0, 1), q(1, 3))] {
                let two = q(2, 1);
                let u = (&x + q(3, 1) * &y) / &two;
                assert_eq!(eval(&b, &x, &y), eval(&a, &u, &((&x - &y) / &two)));
                assert_eq!(eval(&s, &x, &y), eval(&a, &u, &((&y - &x) / &two)));
            }
        }
    }

    #[test]
    fn small_cases() {
        assert!(lp_feasible(2, 2, &q(1, 1), false).unwrap());
        let b = lp_max_k(4, 2, false).unwrap();
        assert_eq!(b.integer, 4);
        assert_eq!(lp_max_k(5, 2, false).unwrap().integer, 6);
        assert_eq!(lp_max_k(5, 3, false).unwrap().integer, 2);
    }

    #[test]
    fn nine_two_boundary() {
        let lp = LpInstance::new(9, 2, false).unwrap();
        assert!(lp.feasible_integer(112));
        assert!(!lp.feasible_integer(113));
    }

    #[test]
    fn monotone_on_a_grid() {
        let lp = LpInstance::new(7, 2, false).unwrap();
        // monotonicity is claimed for K >= 1 only
        let verdicts: Vec<bool> = (2..=60).map(|k| lp.feasible(&q(k, 2))).collect();
        let first_false = verdicts.iter().position(|v| !v).unwrap_or(verdicts.len());
        assert!(verdicts[first_false..].iter().all(|v| !v));
    }

    #[test]
    fn bracket_is_tight() {
        let b = lp_max_k(7, 2, false).unwrap();
        assert_eq!(b.integer, 26);
        let width = &b.supremum_high - &b.supremum_low;
        assert!(width <= q(1, 1 << 20));
        assert!(b.supremum_low >= q(26, 1));
        assert!(b.supremum_f64() < 27.0);
    }

    #[test]
    fn pure_matches_impure() {
        for (n, d) in [(5, 2), (6, 2), (5, 3), (6, 4), (8, 3)] {
            assert_eq!(lp_max_k(n, d, true).unwrap().integer, lp_max_k(n, d, false).unwrap().integer);
        }
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(LpInstance::new(0, 2, false).is_err());
        assert!(LpInstance::new(4, 0, false).is_err());
        assert!(LpInstance::new(33, 2, false).is_err());
    }
}
