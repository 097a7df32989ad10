//! Upper and lower reference bounds on code size.

mod lp;
mod simplex;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::util::binomial;

pub use lp::{lp_feasible, lp_max_k, substitution_matrix, LpBound, LpInstance, MAX_LP_LENGTH};
pub use simplex::{feasible as simplex_feasible, Constraint, Relation};

/// `2^(n - 2(d-1))`, or 0 when the exponent is negative.
pub fn singleton_bound(n: usize, d: usize) -> Result<u64> {
    if d == 0 {
        return Err(invalid("distance must be at least 1"));
    }
    let loss = 2 * (d - 1);
    if loss > n {
        return Ok(0);
    }
    if n - loss >= 64 {
        return Err(invalid("singleton bound overflows u64"));
    }
    Ok(1 << (n - loss))
}

/// Closed form of the `d = 2` LP bound for odd `n`: `floor(2^(n-2) (n-2) / (n-1))`.
pub fn odd_n_d2_bound(n: usize) -> Result<u64> {
    if n < 3 || n % 2 == 0 || n > 62 {
        return Err(invalid(format!("odd_n_d2_bound needs odd 3 <= n <= 61, got {n}")));
    }
    let n = n as u128;
    Ok(((1u128 << (n - 2)) * (n - 2) / (n - 1)) as u64)
}

/// Known nonadditive `d = 2` code families of odd length.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// `((2a+1, 3 * 2^(2a-3), 2))` for `a >= 2`.
    Rains,
    /// `((4a+2b+3, M_ab, 2))`, `M_ab = sum_{i=0..=a} C(4a+2b+3, 2i+b)`, `b in {0, 1}`.
    Smolin,
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rains" => Ok(Family::Rains),
            "smolin" => Ok(Family::Smolin),
            other => Err(Error::Parse(format!("unknown code family '{other}'"))),
        }
    }
}

pub fn known_family_size(family: Family, n: usize) -> Result<u64> {
    if n % 2 == 0 || n < 3 {
        return Err(invalid(format!("{family:?} codes have odd length >= 3, got {n}")));
    }
    match family {
        Family::Rains => {
            let a = (n - 1) / 2;
            if a < 2 || 2 * a - 3 > 60 {
                return Err(invalid(format!("no Rains code of length {n}")));
            }
            Ok(3 << (2 * a - 3))
        }
        Family::Smolin => {
            if n > 62 {
                return Err(invalid("Smolin family size overflows u64"));
            }
            let half = (n - 3) / 2;
            let b = half % 2;
            let a = (half - b) / 2;
            Ok((0..=a).map(|i| binomial(n as u64, (2 * i + b) as u64)).sum())
        }
    }
}

/// Which published table a reference row comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReferenceTable {
    /// Bounds on `k` for `[[n, k, d]]` stabilizer codes.
    StabilizerK,
    /// Bounds on `K` for `((n, K, d))` codes.
    NonadditiveK,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReferenceBound {
    pub table: ReferenceTable,
    pub n: usize,
    pub d: usize,
    /// `None` when no code exists.
    pub lower: Option<u64>,
    pub upper: Option<u64>,
    pub mark: Option<char>,
    pub source: String,
}

const REFERENCE_CSV: &str = include_str!("../../data/reference_bounds.csv");

/// The shipped reference table, parsed.
pub fn reference_bounds() -> Vec<ReferenceBound> {
    parse_reference(REFERENCE_CSV).expect("shipped reference data parses")
}

/// Looks up one `((n, K, d))` reference row.
pub fn reference_nonadditive(n: usize, d: usize) -> Option<ReferenceBound> {
    reference_bounds().into_iter().find(|r| r.table == ReferenceTable::NonadditiveK && r.n == n && r.d == d)
}

fn parse_reference(text: &str) -> Result<Vec<ReferenceBound>> {
    let mut out = Vec::new();
    let mut lines = text.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("empty reference data".into()))?;
    if header != "table,n,d,lower,upper,mark,source" {
        return Err(Error::Parse(format!("unexpected reference header '{header}'")));
    }
    for line in lines {
        let f: Vec<&str> = line.split(',').collect();
        if f.len() != 7 {
            return Err(Error::Parse(format!("reference row '{line}' has {} fields", f.len())));
        }
        let bad = || Error::Parse(format!("bad reference row '{line}'"));
        let opt = |s: &str| -> Result<Option<u64>> {
            if s.is_empty() {
                Ok(None)
            } else {
                s.parse().map(Some).map_err(|_| bad())
            }
        };
        out.push(ReferenceBound {
            table: match f[0] {
                "stabilizer_k" => ReferenceTable::StabilizerK,
                "nonadditive_K" => ReferenceTable::NonadditiveK,
                _ => return Err(bad()),
            },
            n: f[1].parse().map_err(|_| bad())?,
            d: f[2].parse().map_err(|_| bad())?,
            lower: opt(f[3])?,
            upper: opt(f[4])?,
            mark: f[5].chars().next(),
            source: f[6].to_string(),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singleton_examples() {
        assert_eq!(singleton_bound(5, 3).unwrap(), 2);
        assert_eq!(singleton_bound(4, 2).unwrap(), 4);
        assert_eq!(singleton_bound(7, 1).unwrap(), 128);
        assert_eq!(singleton_bound(5, 4).unwrap(), 0);
        assert!(singleton_bound(5, 0).is_err());
    }

    #[test]
    fn odd_closed_form() {
        assert_eq!(odd_n_d2_bound(5).unwrap(), 6);
        assert_eq!(odd_n_d2_bound(9).unwrap(), 112);
        assert_eq!(odd_n_d2_bound(11).unwrap(), 460);
        assert!(odd_n_d2_bound(8).is_err());
    }

    #[test]
    fn families() {
        assert_eq!(known_family_size(Family::Rains, 5).unwrap(), 6);
        assert_eq!(known_family_size(Family::Rains, 9).unwrap(), 96);
        assert_eq!(known_family_size(Family::Smolin, 11).unwrap(), 386);
        assert_eq!(known_family_size(Family::Smolin, 13).unwrap(), 1586);
        assert_eq!(known_family_size(Family::Smolin, 15).unwrap(), 6476);
        assert!(known_family_size(Family::Rains, 3).is_err());
        assert!(known_family_size(Family::Smolin, 10).is_err());
    }

    #[test]
    fn reference_data_is_consistent() {
        let rows = reference_bounds();
        assert_eq!(rows.iter().filter(|r| r.table == ReferenceTable::NonadditiveK).count(), 40);
        for r in &rows {
            if let (Some(l), Some(u)) = (r.lower, r.upper) {
                assert!(l <= u, "{r:?}");
            }
            if r.table == ReferenceTable::NonadditiveK {
                if let Some(u) = r.upper {
                    assert!(u <= singleton_bound(r.n, r.d).unwrap(), "{r:?}");
                }
            }
        }
        // marked family lower bounds match the closed forms
        for r in rows.iter().filter(|r| r.table == ReferenceTable::NonadditiveK) {
            match r.mark {
                Some('A') => assert_eq!(r.lower, Some(known_family_size(Family::Rains, r.n).unwrap())),
                Some('B') => assert_eq!(r.lower, Some(known_family_size(Family::Smolin, r.n).unwrap())),
                _ => {}
            }
        }
        assert_eq!(reference_nonadditive(9, 2).unwrap().upper, Some(112));
    }
}
