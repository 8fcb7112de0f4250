//! Exact row reduction over Gaussian rationals.

use num_traits::{One, Zero};

use crate::exactnum::GaussianRational;

pub type Vector = Vec<GaussianRational>;

/// Reduced row echelon form; returns the pivot columns.
pub fn rref(rows: &mut Vec<Vector>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().unwrap();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &(&f * p);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank(rows: &[Vector]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Basis of `{x : A x = 0}` for `A` given by rows over `ncols` unknowns.
pub fn nullspace(rows: &[Vector], ncols: usize) -> Vec<Vector> {
    let mut m: Vec<Vector> = rows.to_vec();
    let pivots = rref(&mut m);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![GaussianRational::zero(); ncols];
        v[free] = GaussianRational::one();
        for (row, &pc) in m.iter().zip(&pivots) {
            v[pc] = -&row[free];
        }
        basis.push(v);
    }
    basis
}

/// Rescales so that the first nonzero entry is 1.
pub fn normalize(v: &mut Vector) {
    if let Some(l) = v.iter().find(|x| !x.is_zero()).cloned() {
        let inv = l.inv().unwrap();
        for x in v.iter_mut() {
            *x = &*x * &inv;
        }
    }
}

/// Whether two families of vectors span the same subspace.
pub fn same_span(a: &[Vector], b: &[Vector]) -> bool {
    let ra = rank(a);
    let rb = rank(b);
    if ra != rb {
        return false;
    }
    let mut all = a.to_vec();
    all.extend_from_slice(b);
    rank(&all) == ra
}

/// Whether every vector of `a` lies in the span of `b`.
pub fn contained_in(a: &[Vector], b: &[Vector]) -> bool {
    let rb = rank(b);
    let mut all = b.to_vec();
    all.extend_from_slice(a);
    rank(&all) == rb
}
