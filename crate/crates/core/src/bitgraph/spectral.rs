//! Laplacian spectrum, Fiedler vector, and spectral bisection.

use super::Graph;
use crate::error::{invalid, Result};

const JACOBI_TOL: f64 = 1e-12;
const SIGN_TOL: f64 = 1e-9;
const MAX_SWEEPS: usize = 100;

/// Split of the node set into a lower half of size `floor(n/2)` and the rest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bisection {
    pub part1: Vec<usize>,
    pub part2: Vec<usize>,
    pub cut_size: usize,
}

/// `L = D - A` as a dense integer matrix.
pub fn laplacian(g: &Graph) -> Vec<Vec<i32>> {
    let n = g.n();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        g.degree(i) as i32
                    } else if g.has_edge(i, j) {
                        -1
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect()
}

/// Eigen-decomposition of a dense symmetric matrix by cyclic Jacobi rotations.
///
/// Returns eigenvalues in ascending order and the matching unit eigenvectors
/// (`vectors[k]` belongs to `values[k]`). Equal eigenvalues keep the order in
/// which the rotation sweep produced their columns.
pub fn symmetric_eigen(matrix: &[Vec<f64>]) -> (Vec<f64>, Vec<Vec<f64>>) {
    let n = matrix.len();
    let mut a: Vec<Vec<f64>> = matrix.to_vec();
    let mut v: Vec<Vec<f64>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect()).collect();
    for _ in 0..MAX_SWEEPS {
        let off = (0..n)
            .flat_map(|p| ((p + 1)..n).map(move |q| (p, q)))
            .map(|(p, q)| a[p][q].abs())
            .fold(0.0, f64::max);
        if off < JACOBI_TOL {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                if a[p][q].abs() < JACOBI_TOL * 1e-3 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for row in v.iter_mut() {
                    let (vp, vq) = (row[p], row[q]);
                    row[p] = c * vp - s * vq;
                    row[q] = s * vp + c * vq;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| a[x][x].total_cmp(&a[y][y]));
    let values = order.iter().map(|&k| a[k][k]).collect();
    let vectors = order.iter().map(|&k| (0..n).map(|i| v[i][k]).collect()).collect();
    (values, vectors)
}

/// Second-smallest Laplacian eigenvalue and its unit eigenvector, signed so
/// the first component larger than `1e-9` in magnitude is positive.
pub fn fiedler_pair(g: &Graph) -> Result<(f64, Vec<f64>)> {
    if g.n() < 2 {
        return Err(invalid("the Fiedler vector needs at least two nodes"));
    }
    let lap: Vec<Vec<f64>> =
        laplacian(g).into_iter().map(|r| r.into_iter().map(f64::from).collect()).collect();
    let (values, vectors) = symmetric_eigen(&lap);
    // On disconnected graphs the zero eigenspace is degenerate and Jacobi may
    // return any basis of it, so project out the constant vector.
    let mut u = centered(&vectors[1]);
    if norm(&u) < 1e-6 {
        u = centered(&vectors[0]);
    }
    let len = norm(&u);
    u.iter_mut().for_each(|x| *x /= len);
    if let Some(first) = u.iter().copied().find(|x| x.abs() > SIGN_TOL) {
        if first < 0.0 {
            u.iter_mut().for_each(|x| *x = -*x);
        }
    }
    Ok((values[1], u))
}

fn centered(v: &[f64]) -> Vec<f64> {
    let mean = v.iter().sum::<f64>() / v.len() as f64;
    v.iter().map(|x| x - mean).collect()
}

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

pub fn fiedler_vector(g: &Graph) -> Result<Vec<f64>> {
    fiedler_pair(g).map(|(_, u)| u)
}

/// Bisection from the `floor(n/2)` smallest Fiedler components.
///
/// Components are compared after rounding to a `1e-9` grid, with ties going
/// to the lower node index.
pub fn spectral_bisection(g: &Graph) -> Result<Bisection> {
    let u = fiedler_vector(g)?;
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| ((u[i] / SIGN_TOL).round() as i64, i));
    let mut part1 = order[..n / 2].to_vec();
    let mut part2 = order[n / 2..].to_vec();
    part1.sort_unstable();
    part2.sort_unstable();
    let cut_size = cut_size(g, &part1);
    Ok(Bisection { part1, part2, cut_size })
}

/// Number of edges with exactly one endpoint in `side`.
pub fn cut_size(g: &Graph, side: &[usize]) -> usize {
    let mask: u16 = side.iter().fold(0, |m, &i| m | (1 << i));
    side.iter().map(|&i| (g.neighbors(i) & !mask).count_ones() as usize).sum()
}
