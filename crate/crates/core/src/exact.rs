//! Exact rational linear algebra over small integer data.

use num_rational::Ratio;
use num_traits::{One, Zero};

pub type Q = Ratio<i64>;

/// Row-reduces `rows` in place to reduced row echelon form and returns the
/// pivot columns.
pub fn rref(rows: &mut Vec<Vec<Q>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Q::one() / rows[r][c];
        for x in rows[r].iter_mut() {
            *x *= inv;
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c];
                for (x, &y) in row[c..ncols].iter_mut().zip(&pivot[c..ncols]) {
                    *x -= y * f;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

fn to_q(rows: &[Vec<i64>]) -> Vec<Vec<Q>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| Q::from_integer(x)).collect())
        .collect()
}

/// Rank of the span of integer row vectors.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let mut m = to_q(rows);
    rref(&mut m).len()
}

/// Basis of the null space `{x : A x = 0}` of the integer matrix `a` with
/// `ncols` columns, scaled to integer vectors.
pub fn nullspace(a: &[Vec<i64>], ncols: usize) -> Vec<Vec<i64>> {
    let mut m = to_q(a);
    let pivots = if m.is_empty() { Vec::new() } else { rref(&mut m) };
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); ncols];
            v[f] = Q::one();
            for (row, &pc) in m.iter().zip(&pivots) {
                v[pc] = -row[f];
            }
            integerize(&v)
        })
        .collect()
}

/// Clears denominators of a rational vector.
pub fn integerize(v: &[Q]) -> Vec<i64> {
    let lcm = v
        .iter()
        .fold(1i64, |acc, x| num_integer_lcm(acc, *x.denom()));
    v.iter().map(|x| (x * Q::from_integer(lcm)).to_integer()).collect()
}

fn num_integer_lcm(a: i64, b: i64) -> i64 {
    fn gcd(mut a: i64, mut b: i64) -> i64 {
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        a.abs()
    }
    a / gcd(a, b) * b
}

/// Whether `v` lies in the rational span of `rows`.
pub fn in_span(rows: &[Vec<i64>], v: &[i64]) -> bool {
    let base = rank(rows);
    let mut ext = rows.to_vec();
    ext.push(v.to_vec());
    rank(&ext) == base
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_dependent_rows() {
        assert_eq!(rank(&[vec![1, -1, 0], vec![0, 1, -1], vec![1, 0, -1]]), 2);
        assert_eq!(rank(&[]), 0);
        assert_eq!(rank(&[vec![0, 0]]), 0);
    }

    #[test]
    fn nullspace_is_annihilated() {
        let a = vec![vec![1, 1, 1, 1], vec![1, -1, 0, 2]];
        let ns = nullspace(&a, 4);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for row in &a {
                assert_eq!(row.iter().zip(v).map(|(x, y)| x * y).sum::<i64>(), 0);
            }
        }
        assert_eq!(rank(&ns), 2);
    }

    #[test]
    fn span_membership() {
        let rows = vec![vec![1, 0, 1], vec![0, 1, 1]];
        assert!(in_span(&rows, &[1, 1, 2]));
        assert!(!in_span(&rows, &[0, 0, 1]));
    }
}
