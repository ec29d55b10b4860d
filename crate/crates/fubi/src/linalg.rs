//! Exact rational elimination for the linear stage.

use num_rational::Ratio;
use num_traits::{One, Zero};

pub type Q = Ratio<i128>;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(rows: &mut [Vec<Q>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&x| !rows[x][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Q::one() / rows[r][c];
        for v in rows[r].iter_mut() {
            *v *= inv;
        }
        for x in 0..rows.len() {
            if x != r && !rows[x][c].is_zero() {
                let f = rows[x][c];
                for y in 0..cols {
                    let sub = f * rows[r][y];
                    rows[x][y] -= sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

/// Basis of `{x : A x = 0}` for integer `A`; one column per free variable.
pub fn nullspace(a: &[Vec<i64>], cols: usize) -> Vec<Vec<Q>> {
    let mut rows: Vec<Vec<Q>> = a
        .iter()
        .map(|r| r.iter().map(|&v| Q::from_integer(v as i128)).collect())
        .collect();
    let pivots = rref(&mut rows, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); cols];
            v[f] = Q::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -rows[r][f];
            }
            v
        })
        .collect()
}

pub fn to_f64(q: &Q) -> f64 {
    *q.numer() as f64 / *q.denom() as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel() {
        let a = vec![vec![1, -1, 0], vec![0, 1, -1]];
        let ns = nullspace(&a, 3);
        assert_eq!(ns.len(), 1);
        assert!(ns[0].iter().all(|q| *q == Q::one()));
        let full = nullspace(&[], 2);
        assert_eq!(full.len(), 2);
        let pinned = nullspace(&[vec![1, 0], vec![0, 2]], 2);
        assert!(pinned.is_empty());
    }

    #[test]
    fn kernel_is_exact() {
        let a = vec![vec![2, 3, -1, 4], vec![1, -1, 2, 0], vec![3, 2, 1, 4]];
        for v in nullspace(&a, 4) {
            for r in &a {
                let s: Q = r
                    .iter()
                    .zip(&v)
                    .map(|(&x, y)| Q::from_integer(x as i128) * y)
                    .sum();
                assert!(s.is_zero());
            }
        }
    }
}
