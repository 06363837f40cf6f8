//! Small dense linear algebra over a [`Field`]: row reduction, rank, kernels.

use crate::field::{Elem, Field};

pub type Matrix = Vec<Vec<Elem>>;

/// Reduced row-echelon form of `rows` (each of length `ncols`); zero rows are
/// dropped. Returns the reduced rows and their pivot columns.
pub fn rref(field: &Field, rows: &[Vec<Elem>], ncols: usize) -> (Matrix, Vec<usize>) {
    let mut m: Matrix = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(sel) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, sel);
        let inv = field.inv(m[r][col]).expect("pivot is nonzero");
        for x in m[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let c = row[col];
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                *x = field.sub(*x, field.mul(c, y));
            }
        }
        pivots.push(col);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(field: &Field, rows: &[Vec<Elem>], ncols: usize) -> usize {
    rref(field, rows, ncols).1.len()
}

/// Basis of `{x : rows * x = 0}`, returned in reduced row-echelon form.
pub fn kernel(field: &Field, rows: &[Vec<Elem>], ncols: usize) -> Matrix {
    let (reduced, pivots) = rref(field, rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let basis: Matrix = free
        .iter()
        .map(|&f| {
            let mut v = vec![Elem::ZERO; ncols];
            v[f] = Elem::ONE;
            for (row, &p) in reduced.iter().zip(&pivots) {
                v[p] = field.neg(row[f]);
            }
            v
        })
        .collect();
    rref(field, &basis, ncols).0
}

/// Inverse of a square matrix, or `None` when singular.
pub fn invert(field: &Field, square: &[Vec<Elem>]) -> Option<Matrix> {
    let n = square.len();
    let augmented: Matrix = square
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Elem::ONE } else { Elem::ZERO }));
            r
        })
        .collect();
    let (reduced, pivots) = rref(field, &augmented, 2 * n);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(reduced.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn mat_vec(field: &Field, rows: &[Vec<Elem>], v: &[Elem]) -> Vec<Elem> {
    rows.iter().map(|row| dot(field, row, v)).collect()
}

pub fn dot(field: &Field, a: &[Elem], b: &[Elem]) -> Elem {
    a.iter().zip(b).fold(Elem::ZERO, |acc, (&x, &y)| field.add(acc, field.mul(x, y)))
}
