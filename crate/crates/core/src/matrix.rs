//! Exact dense linear algebra over the engine's scalar fields: reduced
//! row echelon form with a recorded transform, kernels, solving, and the
//! injectivity/surjectivity predicates.
//!
//! Pivoting is deterministic (first nonzero entry scanning top to bottom
//! per column) so that canonical forms downstream are reproducible.

use crate::scalar::{FieldKind, Scalar};

/// A dense matrix of exact field elements, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    pub field: FieldKind,
    pub rows: usize,
    pub cols: usize,
    entries: Vec<Scalar>,
}

impl ExactMatrix {
    pub fn zero(field: FieldKind, rows: usize, cols: usize) -> ExactMatrix {
        ExactMatrix {
            field,
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldKind, n: usize) -> ExactMatrix {
        let mut m = ExactMatrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: FieldKind, rows: Vec<Vec<Scalar>>) -> ExactMatrix {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut entries = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols, "ragged rows");
            for e in r {
                assert_eq!(e.kind(), field, "matrix entry from a different field");
                entries.push(e);
            }
        }
        ExactMatrix {
            field,
            rows: nrows,
            cols: ncols,
            entries,
        }
    }

    pub fn from_fn(field: FieldKind, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> ExactMatrix {
        let mut m = ExactMatrix::zero(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        debug_assert_eq!(v.kind(), self.field);
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> ExactMatrix {
        ExactMatrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix dimension mismatch");
        ExactMatrix::from_fn(self.field, self.rows, rhs.cols, |i, j| {
            let mut acc = self.field.zero();
            for k in 0..self.cols {
                acc = &acc + &(self.get(i, k) * rhs.get(k, j));
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for k in 0..self.cols {
                    acc = &acc + &(self.get(i, k) * &v[k]);
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ExactMatrix::from_fn(self.field, self.rows, self.cols, |i, j| self.get(i, j) + rhs.get(i, j))
    }

    pub fn neg(&self) -> ExactMatrix {
        ExactMatrix::from_fn(self.field, self.rows, self.cols, |i, j| -self.get(i, j))
    }

    pub fn sub(&self, rhs: &ExactMatrix) -> ExactMatrix {
        self.add(&rhs.neg())
    }

    /// Horizontal concatenation `[self | rhs]`.
    pub fn hstack(&self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.rows, rhs.rows);
        ExactMatrix::from_fn(self.field, self.rows, self.cols + rhs.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                rhs.get(i, j - self.cols).clone()
            }
        })
    }

    /// Vertical concatenation.
    pub fn vstack(&self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, rhs.cols);
        ExactMatrix::from_fn(self.field, self.rows + rhs.rows, self.cols, |i, j| {
            if i < self.rows {
                self.get(i, j).clone()
            } else {
                rhs.get(i - self.rows, j).clone()
            }
        })
    }

    pub fn select_columns(&self, cols: &[usize]) -> ExactMatrix {
        ExactMatrix::from_fn(self.field, self.rows, cols.len(), |i, j| self.get(i, cols[j]).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_symmetric(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            for j in 0..i {
                if self.get(i, j) != self.get(j, i) {
                    return false;
                }
            }
        }
        true
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, by: &Scalar) {
        for c in 0..self.cols {
            let v = self.get(r, c) * by;
            self.set(r, c, v);
        }
    }

    /// row[dst] += factor * row[src]
    fn add_scaled_row(&mut self, dst: usize, src: usize, factor: &Scalar) {
        for c in 0..self.cols {
            let v = &(self.get(src, c) * factor) + self.get(dst, c);
            self.set(dst, c, v);
        }
    }
}

/// Result of row reduction: the reduced matrix, its pivot columns, and an
/// invertible transform with `transform * input = rref`.
#[derive(Debug, Clone)]
pub struct RrefResult {
    pub rref: ExactMatrix,
    pub pivots: Vec<usize>,
    pub transform: ExactMatrix,
}

/// Reduced row echelon form with full transform tracking.
pub fn rref(a: &ExactMatrix) -> RrefResult {
    let mut m = a.clone();
    let mut t = ExactMatrix::identity(a.field, a.rows);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols {
        if row == m.rows {
            break;
        }
        // first nonzero entry in this column at or below `row`
        let Some(pivot_row) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
            continue;
        };
        m.swap_rows(row, pivot_row);
        t.swap_rows(row, pivot_row);
        let inv = m.get(row, col).inv().expect("pivot entry invertible");
        m.scale_row(row, &inv);
        t.scale_row(row, &inv);
        for r in 0..m.rows {
            if r != row && !m.get(r, col).is_zero() {
                let factor = -m.get(r, col);
                m.add_scaled_row(r, row, &factor);
                t.add_scaled_row(r, row, &factor);
            }
        }
        pivots.push(col);
        row += 1;
    }
    RrefResult {
        rref: m,
        pivots,
        transform: t,
    }
}

pub fn rank(a: &ExactMatrix) -> usize {
    rref(a).pivots.len()
}

/// Canonical kernel basis: for each free column, the vector with that
/// free variable set to one and the other free variables zero, ordered by
/// free column index.
pub fn kernel(a: &ExactMatrix) -> Vec<Vec<Scalar>> {
    let r = rref(a);
    let pivot_of_col: Vec<Option<usize>> = {
        let mut v = vec![None; a.cols];
        for (i, &c) in r.pivots.iter().enumerate() {
            v[c] = Some(i);
        }
        v
    };
    let mut basis = Vec::new();
    for free in 0..a.cols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![a.field.zero(); a.cols];
        v[free] = a.field.one();
        for (prow, &pcol) in r.pivots.iter().enumerate() {
            v[pcol] = -r.rref.get(prow, free);
        }
        basis.push(v);
    }
    basis
}

/// Outcome of solving `A x = b`.
#[derive(Debug, Clone)]
pub enum Solution {
    NoSolution,
    Solved {
        particular: Vec<Scalar>,
        kernel_basis: Vec<Vec<Scalar>>,
    },
}

pub fn solve(a: &ExactMatrix, b: &[Scalar]) -> Solution {
    assert_eq!(a.rows, b.len(), "dimension mismatch in solve");
    let rhs = ExactMatrix::from_fn(a.field, a.rows, 1, |i, _| b[i].clone());
    let aug = a.hstack(&rhs);
    let r = rref(&aug);
    // inconsistent iff some pivot lands in the rhs column
    if r.pivots.contains(&a.cols) {
        return Solution::NoSolution;
    }
    let mut particular = vec![a.field.zero(); a.cols];
    for (prow, &pcol) in r.pivots.iter().enumerate() {
        particular[pcol] = r.rref.get(prow, a.cols).clone();
    }
    Solution::Solved {
        particular,
        kernel_basis: kernel(a),
    }
}

pub fn is_injective(a: &ExactMatrix) -> bool {
    rank(a) == a.cols
}

pub fn is_surjective(a: &ExactMatrix) -> bool {
    rank(a) == a.rows
}

/// Inverse of a square invertible matrix; panics if singular.
pub fn inverse(a: &ExactMatrix) -> Option<ExactMatrix> {
    assert_eq!(a.rows, a.cols);
    let r = rref(a);
    if r.pivots.len() != a.rows {
        return None;
    }
    Some(r.transform)
}
