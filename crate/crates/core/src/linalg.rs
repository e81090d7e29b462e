//! Exact row reduction over the rationals, plus a float rank helper.

use crate::rational::Rational;
use num::{One, Zero};

/// Reduced row-echelon form. Returns the nonzero rows and their pivot columns.
pub fn rref(rows: &[Vec<Rational>], ncols: usize) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Rational::one() / m[r][c].clone();
        for v in m[r].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

/// Basis of the kernel of the linear map given by `rows` (each row a linear
/// form on `ncols` unknowns).
pub fn nullspace(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let (r, pivots) = rref(rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (row, &p) in r.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Inverse of a square matrix, or `None` if singular.
pub fn inverse(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let aug: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    let (r, pivots) = rref(&aug, 2 * n);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(r.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Numerical rank of the row set after normalizing each row; rows with
/// norm below 1e-12 are dropped. Returns (rank, singular values).
pub fn numeric_rank(rows: &[Vec<f64>], threshold: f64) -> (usize, Vec<f64>) {
    let rows: Vec<Vec<f64>> = rows
        .iter()
        .filter_map(|r| {
            let n = r.iter().map(|x| x * x).sum::<f64>().sqrt();
            (n > 1e-12 && n.is_finite()).then(|| r.iter().map(|x| x / n).collect())
        })
        .collect();
    if rows.is_empty() {
        return (0, Vec::new());
    }
    let ncols = rows[0].len();
    let m = nalgebra::DMatrix::from_fn(rows.len(), ncols, |i, j| rows[i][j]);
    let mut sv: Vec<f64> = m.singular_values().iter().copied().collect();
    sv.sort_by(|a, b| b.total_cmp(a));
    let rank = sv.iter().filter(|&&s| s > threshold).count();
    (rank, sv)
}

/// Orthonormal basis of the row span (singular values above `threshold`).
pub fn orthonormal_span(rows: &[Vec<f64>], threshold: f64) -> Vec<Vec<f64>> {
    let rows: Vec<Vec<f64>> = rows
        .iter()
        .filter_map(|r| {
            let n = r.iter().map(|x| x * x).sum::<f64>().sqrt();
            (n > 1e-12 && n.is_finite()).then(|| r.iter().map(|x| x / n).collect())
        })
        .collect();
    if rows.is_empty() {
        return Vec::new();
    }
    let ncols = rows[0].len();
    let m = nalgebra::DMatrix::from_fn(rows.len(), ncols, |i, j| rows[i][j]);
    let svd = m.svd(false, true);
    let vt = svd.v_t.expect("requested V^T");
    svd.singular_values
        .iter()
        .enumerate()
        .filter(|(_, &s)| s > threshold)
        .map(|(i, _)| vt.row(i).iter().copied().collect())
        .collect()
}

/// Least-squares solution of `a x ≈ b` (rows of `a` are samples).
pub fn least_squares(a: &[Vec<f64>], b: &[f64]) -> Vec<f64> {
    let k = a.first().map_or(0, Vec::len);
    if k == 0 {
        return Vec::new();
    }
    let m = nalgebra::DMatrix::from_fn(a.len(), k, |i, j| a[i][j]);
    let rhs = nalgebra::DVector::from_column_slice(b);
    let svd = m.svd(true, true);
    svd.solve(&rhs, 1e-12)
        .map(|x| x.iter().copied().collect())
        .unwrap_or_else(|_| vec![0.0; k])
}

/// Solves a small dense square system by LU; `None` if singular.
pub fn solve_dense(a: &[Vec<f64>], b: &[f64]) -> Option<Vec<f64>> {
    let n = b.len();
    let m = nalgebra::DMatrix::from_fn(n, n, |i, j| a[i][j]);
    let rhs = nalgebra::DVector::from_column_slice(b);
    m.lu().solve(&rhs).map(|x| x.iter().copied().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn kernel_of_rank_one_map() {
        let rows = vec![vec![int(1), int(2), int(3)]];
        let k = nullspace(&rows, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            let s: Rational = v.iter().zip(&rows[0]).map(|(a, b)| a * b).sum();
            assert!(s.is_zero());
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let m = vec![vec![int(2), int(1)], vec![rat(1, 2), int(3)]];
        let inv = inverse(&m).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let s: Rational = (0..2).map(|k| &m[i][k] * &inv[k][j]).sum();
                assert_eq!(s, if i == j { int(1) } else { int(0) });
            }
        }
        assert!(inverse(&[vec![int(1), int(2)], vec![int(2), int(4)]]).is_none());
    }

    #[test]
    fn numeric_rank_counts_independent_rows() {
        let rows = vec![vec![1.0, 0.0, 0.0], vec![2.0, 0.0, 0.0], vec![0.0, 1.0, 0.0]];
        assert_eq!(numeric_rank(&rows, 1e-6).0, 2);
        assert_eq!(orthonormal_span(&rows, 1e-6).len(), 2);
    }

    #[test]
    fn least_squares_fits_line() {
        let a = vec![vec![1.0], vec![2.0], vec![3.0]];
        let x = least_squares(&a, &[2.0, 4.0, 6.0]);
        assert!((x[0] - 2.0).abs() < 1e-12);
    }
}
