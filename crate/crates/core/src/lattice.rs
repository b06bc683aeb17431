//! Small exact linear algebra over the integers and rationals.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

pub type Q = Ratio<i64>;

/// Inverse of a square rational matrix, or `None` if singular.
pub fn inverse(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m.to_vec();
    let mut inv: Vec<Vec<Q>> = (0..n).map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect()).collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in 0..n {
                    let (x, y) = (a[col][j], inv[col][j]);
                    a[r][j] -= f * x;
                    inv[r][j] -= f * y;
                }
            }
        }
    }
    Some(inv)
}

pub fn to_rational(m: &[Vec<i64>]) -> Vec<Vec<Q>> {
    m.iter().map(|row| row.iter().map(|&x| Q::from_integer(x)).collect()).collect()
}

/// Rank over the rationals of an integer matrix given by rows.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut a = to_rational(rows);
    let ncols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in 0..a.len() {
            if i != r && !a[i][col].is_zero() {
                let f = a[i][col] / a[r][col];
                for j in col..ncols {
                    let x = a[r][j];
                    a[i][j] -= f * x;
                }
            }
        }
        r += 1;
    }
    r
}

/// A basis of the integer kernel `{x in Z^n : A x = 0}` of an `m x n` matrix.
///
/// Column reduction with a tracked unimodular transform; the kernel is saturated
/// so the returned vectors span every integer solution.
pub fn integer_kernel(a: &[Vec<i64>], n: usize) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<i128>> = a.iter().map(|row| row.iter().map(|&x| x as i128).collect()).collect();
    let mut u: Vec<Vec<i128>> = (0..n).map(|i| (0..n).map(|j| i128::from(i == j)).collect()).collect();
    // u is stored by columns: u[j] is column j.
    let mut lead = 0usize;
    for row in 0..m.len() {
        if lead >= n {
            break;
        }
        loop {
            // Euclid on columns lead..n in this row.
            let mut best: Option<usize> = None;
            for j in lead..n {
                if m[row][j] != 0 && best.is_none_or(|b| m[row][j].abs() < m[row][b].abs()) {
                    best = Some(j);
                }
            }
            let Some(b) = best else { break };
            swap_cols(&mut m, &mut u, lead, b);
            let mut done = true;
            for j in lead + 1..n {
                if m[row][j] != 0 {
                    let q = Integer::div_floor(&m[row][j], &m[row][lead]);
                    add_col(&mut m, &mut u, j, lead, -q);
                    if m[row][j] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                lead += 1;
                break;
            }
        }
    }
    (lead..n)
        .map(|j| {
            let v: Vec<i64> = u[j].iter().map(|&x| i64::try_from(x).expect("kernel overflow")).collect();
            primitive(v)
        })
        .collect()
}

fn swap_cols(m: &mut [Vec<i128>], u: &mut [Vec<i128>], a: usize, b: usize) {
    if a == b {
        return;
    }
    for row in m.iter_mut() {
        row.swap(a, b);
    }
    u.swap(a, b);
}

/// column[dst] += k * column[src]
fn add_col(m: &mut [Vec<i128>], u: &mut [Vec<i128>], dst: usize, src: usize, k: i128) {
    for row in m.iter_mut() {
        row[dst] += k * row[src];
    }
    let s = u[src].clone();
    for (d, x) in u[dst].iter_mut().zip(s) {
        *d += k * x;
    }
}

/// Divide by the gcd of the entries and make the first nonzero entry positive.
pub fn primitive(mut v: Vec<i64>) -> Vec<i64> {
    let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g > 1 {
        for x in &mut v {
            *x /= g;
        }
    }
    if v.iter().find(|x| **x != 0).is_some_and(|x| x.is_negative()) {
        for x in &mut v {
            *x = -*x;
        }
    }
    v
}

pub fn gcd_all(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, &x| g.gcd(&x))
}
