//! Dense exact linear algebra over the session field.
//!
//! Slice dimensions stay in the low hundreds, so dense elimination is the
//! right tool. Over Q the forward phase keeps rows rescaled to primitive
//! integer vectors (fraction-free pivoting with exact division); leading
//! ones are only restored at the end.

use crate::scalar::{normalize_row, FieldSpec, Scalar};

/// A dense row-major matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Vec<Scalar>>,
    field: FieldSpec,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize, field: FieldSpec) -> Self {
        Matrix {
            rows,
            cols,
            data: (0..rows).map(|_| vec![field.zero(); cols]).collect(),
            field,
        }
    }

    pub fn from_columns(cols: &[Vec<Scalar>], rows: usize, field: FieldSpec) -> Self {
        let mut m = Matrix::zero(rows, cols.len(), field);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                m.data[i][j] = v.clone();
            }
        }
        m
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r][c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.data[r][c].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|row| row.iter().all(|v| v.is_zero()))
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zero(self.rows, other.cols, self.field);
        for i in 0..self.rows {
            for (k, a) in self.data[i].iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.data[k][j];
                    if b.is_zero() {
                        continue;
                    }
                    out.data[i][j] = out.data[i][j].add(&a.mul(b));
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (j, x) in v.iter().enumerate() {
                    if !x.is_zero() && !self.data[i][j].is_zero() {
                        acc = acc.add(&self.data[i][j].mul(x));
                    }
                }
                acc
            })
            .collect()
    }
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Debug, Clone)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

/// Computes the reduced row echelon form. Pivot choice is deterministic:
/// the first row with a nonzero entry in the leftmost unresolved column.
pub fn rref(mut m: Matrix) -> Rref {
    let rows = m.rows;
    let cols = m.cols;
    let mut pivots = Vec::new();
    let mut pivot_row = 0usize;

    for col in 0..cols {
        if pivot_row == rows {
            break;
        }
        let Some(found) = (pivot_row..rows).find(|&r| !m.data[r][col].is_zero()) else {
            continue;
        };
        m.data.swap(pivot_row, found);
        // Fraction-free forward elimination: cross-multiply, then strip the
        // row content so integer entries stay small.
        let pivot_val = m.data[pivot_row][col].clone();
        for r in 0..rows {
            if r == pivot_row || m.data[r][col].is_zero() {
                continue;
            }
            let factor = m.data[r][col].clone();
            for c in 0..cols {
                let new = m.data[r][c]
                    .mul(&pivot_val)
                    .sub(&m.data[pivot_row][c].mul(&factor));
                m.data[r][c] = new;
            }
            normalize_row(&mut m.data[r]);
        }
        pivots.push(col);
        pivot_row += 1;
    }

    // Restore leading ones.
    for (k, &col) in pivots.iter().enumerate() {
        let inv = m.data[k][col].inv();
        for c in 0..cols {
            if !m.data[k][c].is_zero() {
                m.data[k][c] = m.data[k][c].mul(&inv);
            }
        }
    }

    Rref { matrix: m, pivots }
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Canonical kernel basis: one vector per free column, with the free
    /// coordinate set to 1, ordered by ascending free column.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let cols = self.matrix.cols;
        let field = self.matrix.field();
        let mut out = Vec::new();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; cols];
            for (row, &col) in self.pivots.iter().enumerate() {
                v[col] = Some(row);
            }
            v
        };
        for free in 0..cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut vec = vec![field.zero(); cols];
            vec[free] = field.one();
            for (col, rowopt) in pivot_set.iter().enumerate() {
                if let Some(row) = rowopt {
                    vec[col] = self.matrix.at(*row, free).neg();
                }
            }
            out.push(vec);
        }
        out
    }
}

/// Solves `A x = b` if consistent, with free variables set to zero.
/// The solution is deterministic.
pub fn solve(a: &Matrix, b: &[Scalar]) -> Option<Vec<Scalar>> {
    assert_eq!(a.rows, b.len());
    let field = a.field();
    let mut aug = Matrix::zero(a.rows, a.cols + 1, field);
    for r in 0..a.rows {
        for c in 0..a.cols {
            aug.set(r, c, a.at(r, c).clone());
        }
        aug.set(r, a.cols, b[r].clone());
    }
    let red = rref(aug);
    if red.pivots.contains(&a.cols) {
        return None; // inconsistent
    }
    let mut x = vec![field.zero(); a.cols];
    for (row, &col) in red.pivots.iter().enumerate() {
        x[col] = red.matrix.at(row, a.cols).clone();
    }
    Some(x)
}

/// Incremental rank tracker: feed vectors, learn which ones enlarge the
/// span. Used for the deterministic greedy complement choice.
pub struct SpanTracker {
    dim: usize,
    field: FieldSpec,
    // rows in echelon form (not normalized), with their pivot columns
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl SpanTracker {
    pub fn new(dim: usize, field: FieldSpec) -> Self {
        SpanTracker { dim, field, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current span; if a nonzero residue remains
    /// the vector is added and `true` returned.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut w = v.to_vec();
        for (pivot, row) in &self.rows {
            if w[*pivot].is_zero() {
                continue;
            }
            let factor = w[*pivot].div(&row[*pivot]);
            for c in 0..self.dim {
                if !row[c].is_zero() {
                    w[c] = w[c].sub(&factor.mul(&row[c]));
                }
            }
        }
        match w.iter().position(|s| !s.is_zero()) {
            None => false,
            Some(pivot) => {
                normalize_row(&mut w);
                self.rows.push((pivot, w));
                self.rows.sort_by_key(|(p, _)| *p);
                true
            }
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        for (pivot, row) in &self.rows {
            if w[*pivot].is_zero() {
                continue;
            }
            let factor = w[*pivot].div(&row[*pivot]);
            for c in 0..self.dim {
                if !row[c].is_zero() {
                    w[c] = w[c].sub(&factor.mul(&row[c]));
                }
            }
        }
        w.iter().all(|s| s.is_zero())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rational
    }

    fn mat(rows: &[&[i64]]) -> Matrix {
        let mut m = Matrix::zero(rows.len(), rows[0].len(), q());
        for (i, r) in rows.iter().enumerate() {
            for (j, v) in r.iter().enumerate() {
                m.set(i, j, q().integer(*v));
            }
        }
        m
    }

    #[test]
    fn rref_rank_and_kernel() {
        let m = mat(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        let red = rref(m.clone());
        assert_eq!(red.rank(), 2);
        let kernel = red.kernel_basis();
        assert_eq!(kernel.len(), 1);
        for v in &kernel {
            assert!(m.apply(v).iter().all(|s| s.is_zero()));
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = mat(&[&[1, 0], &[0, 2], &[1, 2]]);
        let b = vec![q().integer(3), q().integer(4), q().integer(7)];
        let x = solve(&m, &b).unwrap();
        assert_eq!(m.apply(&x), b);
        let bad = vec![q().integer(3), q().integer(4), q().integer(100)];
        assert!(solve(&m, &bad).is_none());
    }

    #[test]
    fn span_tracker_greedy() {
        let mut t = SpanTracker::new(3, q());
        assert!(t.insert(&[q().integer(1), q().integer(1), q().zero()]));
        assert!(!t.insert(&[q().integer(2), q().integer(2), q().zero()]));
        assert!(t.insert(&[q().zero(), q().integer(1), q().integer(1)]));
        assert_eq!(t.rank(), 2);
        assert!(t.contains(&[q().integer(1), q().integer(2), q().integer(1)]));
        assert!(!t.contains(&[q().integer(1), q().integer(0), q().integer(1)]));
    }

    #[test]
    fn fraction_free_rows_stay_integral() {
        // After elimination (before leading-one restoration is the internal
        // detail); here we just confirm exactness on a fraction-heavy input.
        let f = q();
        let mut m = Matrix::zero(2, 2, f);
        m.set(0, 0, f.ratio(1.into(), 2.into()).unwrap());
        m.set(0, 1, f.ratio(1.into(), 3.into()).unwrap());
        m.set(1, 0, f.ratio(1.into(), 4.into()).unwrap());
        m.set(1, 1, f.ratio(1.into(), 6.into()).unwrap());
        let red = rref(m);
        assert_eq!(red.rank(), 1);
    }
}
