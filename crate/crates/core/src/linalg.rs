//! Dense exact linear algebra over any field type (rationals, `Q(√D)`).

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

pub trait Field:
    Clone
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Field for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
        + Neg<Output = T>
{
}

pub type Matrix<T> = Vec<Vec<T>>;

pub fn identity<T: Field>(n: usize) -> Matrix<T> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { T::one() } else { T::zero() }).collect())
        .collect()
}

pub fn transpose<T: Clone>(m: &Matrix<T>) -> Matrix<T> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| (0..rows).map(|i| m[i][j].clone()).collect())
        .collect()
}

pub fn mat_mul<T: Field>(a: &Matrix<T>, b: &Matrix<T>) -> Matrix<T> {
    let n = a.len();
    let k = b.len();
    let m = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![T::zero(); m]; n];
    for i in 0..n {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                out[i][j] = out[i][j].clone() + a[i][l].clone() * b[l][j].clone();
            }
        }
    }
    out
}

/// Characteristic polynomial `det(xI − A)`, lowest coefficient first.
///
/// Reduces to upper Hessenberg form by elementary similarity transforms,
/// then runs the standard three-term recurrence; `O(n³)` field operations.
pub fn charpoly<T: Field>(a: &Matrix<T>) -> Vec<T> {
    let n = a.len();
    let mut h = a.clone();
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| !h[i][m - 1].is_zero()) else {
            continue;
        };
        if i != m {
            h.swap(i, m);
            for row in h.iter_mut() {
                row.swap(i, m);
            }
        }
        let pivot = h[m][m - 1].clone();
        for j in m + 1..n {
            if h[j][m - 1].is_zero() {
                continue;
            }
            let u = h[j][m - 1].clone() / pivot.clone();
            for c in 0..n {
                let v = h[m][c].clone();
                h[j][c] = h[j][c].clone() - u.clone() * v;
            }
            for row in h.iter_mut() {
                let v = row[j].clone();
                row[m] = row[m].clone() + u.clone() * v;
            }
        }
    }

    // p[k] is the characteristic polynomial of the leading k×k block
    let mut p: Vec<Vec<T>> = vec![vec![T::one()]];
    for m in 0..n {
        // (x − h[m][m]) p[m]
        let prev = &p[m];
        let mut next = vec![T::zero(); m + 2];
        for (d, c) in prev.iter().enumerate() {
            next[d + 1] = next[d + 1].clone() + c.clone();
            next[d] = next[d].clone() - h[m][m].clone() * c.clone();
        }
        let mut t = T::one();
        for i in (0..m).rev() {
            t = t * h[i + 1][i].clone();
            let coeff = h[i][m].clone() * t.clone();
            if coeff.is_zero() {
                continue;
            }
            for (d, c) in p[i].iter().enumerate() {
                next[d] = next[d].clone() - coeff.clone() * c.clone();
            }
        }
        p.push(next);
    }
    p.pop().unwrap()
}

/// Reduced row echelon form in place; returns pivot columns.
pub fn row_reduce<T: Field>(m: &mut Matrix<T>) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = T::one() / m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let v = m[r][j].clone();
                    m[i][j] = m[i][j].clone() - f.clone() * v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of `{v : A v = 0}`.
pub fn nullspace<T: Field>(a: &Matrix<T>) -> Vec<Vec<T>> {
    let cols = a.first().map_or(0, Vec::len);
    let mut m = a.clone();
    let pivots = row_reduce(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![T::zero(); cols];
            v[f] = T::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[r][f].clone();
            }
            v
        })
        .collect()
}

/// Unique solution of `A x = b`, or `None` when singular or inconsistent.
pub fn solve<T: Field>(a: &Matrix<T>, b: &[T]) -> Option<Vec<T>> {
    let n = a.first().map_or(0, Vec::len);
    let mut aug: Matrix<T> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = row_reduce(&mut aug);
    if pivots.len() != n || pivots.contains(&n) {
        return None;
    }
    Some((0..n).map(|i| aug[i][n].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn mat(rows: &[&[i64]]) -> Matrix<BigRational> {
        rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
    }

    /// Independent route: Faddeev–LeVerrier.
    fn charpoly_leverrier(a: &Matrix<BigRational>) -> Vec<BigRational> {
        let n = a.len();
        let mut c = vec![q(0); n + 1];
        c[n] = q(1);
        let mut m: Matrix<BigRational> = vec![vec![q(0); n]; n];
        for k in 1..=n {
            let mut next = mat_mul(a, &m);
            for (i, row) in next.iter_mut().enumerate() {
                row[i] += &c[n - k + 1];
            }
            m = next;
            let am = mat_mul(a, &m);
            let tr: BigRational = (0..n).map(|i| am[i][i].clone()).sum();
            c[n - k] = -tr / q(k as i64);
        }
        c
    }

    #[test]
    fn fibonacci_matrix() {
        let a = mat(&[&[0, 1], &[1, 1]]);
        assert_eq!(charpoly(&a), vec![q(-1), q(-1), q(1)]);
    }

    #[test]
    fn zero_pivot_requires_swap() {
        let a = mat(&[&[1, 2, 3], &[0, 4, 5], &[6, 0, 7]]);
        assert_eq!(charpoly(&a), charpoly_leverrier(&a));
        let b = mat(&[&[0, 0, 1], &[0, 0, 0], &[1, 1, 0]]);
        assert_eq!(charpoly(&b), charpoly_leverrier(&b));
    }

    #[test]
    fn nullspace_and_solve() {
        let a = mat(&[&[1, 1], &[1, 1]]);
        let ns = nullspace(&a);
        assert_eq!(ns, vec![vec![q(-1), q(1)]]);
        assert_eq!(solve(&a, &[q(1), q(1)]), None);
        let b = mat(&[&[2, 1], &[1, 3]]);
        assert_eq!(solve(&b, &[q(3), q(4)]), Some(vec![q(1), q(1)]));
    }

    proptest! {
        #[test]
        fn charpoly_matches_leverrier(entries in proptest::collection::vec(-3i64..4, 16), n in 1usize..5) {
            let a: Matrix<BigRational> = (0..n).map(|i| (0..n).map(|j| q(entries[i * 4 + j])).collect()).collect();
            prop_assert_eq!(charpoly(&a), charpoly_leverrier(&a));
        }
    }
}
