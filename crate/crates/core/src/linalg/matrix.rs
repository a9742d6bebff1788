//! Dense matrices over an exact field.

use std::fmt;

use crate::error::Error;
use crate::linalg::field::{Field, Scalar};

/// Column vector over an exact field.
pub type Vector = Vec<Scalar>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Reduced row-echelon form together with rank and pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: ExactMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl ExactMatrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        ExactMatrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from rows. Every entry must belong to `field` and all rows
    /// must have the same length.
    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Self, Error> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(n_rows * n_cols);
        for row in rows {
            if row.len() != n_cols {
                return Err(Error::Shape(format!(
                    "ragged rows: expected {n_cols} columns, found {}",
                    row.len()
                )));
            }
            for s in row {
                if s.field() != field {
                    return Err(Error::MixedFields(field, s.field()));
                }
                data.push(s);
            }
        }
        Ok(ExactMatrix {
            field,
            rows: n_rows,
            cols: n_cols,
            data,
        })
    }

    pub fn from_i64_rows(field: Field, rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Self::from_rows(field, rows).expect("integer rows are well formed")
    }

    /// Matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(field: Field, rows: usize, columns: &[Vector]) -> Result<Self, Error> {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::Shape(format!(
                    "column {j} has length {}, expected {rows}",
                    col.len()
                )));
            }
            for (i, s) in col.iter().enumerate() {
                if s.field() != field {
                    return Err(Error::MixedFields(field, s.field()));
                }
                m.set(i, j, s.clone());
            }
        }
        Ok(m)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        debug_assert_eq!(v.field(), self.field);
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix, Error> {
        if self.field != other.field {
            return Err(Error::MixedFields(self.field, other.field));
        }
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j) + &(a * b);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &ExactMatrix) -> Result<ExactMatrix, Error> {
        if self.field != other.field {
            return Err(Error::MixedFields(self.field, other.field));
        }
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Shape("cannot add matrices of different shapes".into()));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Ok(ExactMatrix { data, ..*self })
    }

    pub fn scale(&self, s: &Scalar) -> ExactMatrix {
        let data = self.data.iter().map(|a| a * s).collect();
        ExactMatrix { data, ..*self }
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(self.field.zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }

    /// Sub-matrix on the given rows and columns.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> ExactMatrix {
        let mut m = Self::zeros(self.field, rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                m.set(i, j, self.get(r, c).clone());
            }
        }
        m
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &ExactMatrix) -> Result<ExactMatrix, Error> {
        if self.field != other.field {
            return Err(Error::MixedFields(self.field, other.field));
        }
        if self.cols != other.cols && self.rows > 0 && other.rows > 0 {
            return Err(Error::Shape("column counts differ".into()));
        }
        let cols = if self.rows > 0 { self.cols } else { other.cols };
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(ExactMatrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols,
            data,
        })
    }

    /// The unique reduced row-echelon form.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).inv().expect("pivot is non-zero");
            for c in col..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in col..m.cols {
                    let pv = m.get(row, c);
                    if pv.is_zero() {
                        continue;
                    }
                    let v = m.get(r, c) - &(&factor * pv);
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref {
            rank: pivots.len(),
            matrix: m,
            pivots,
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the null space `{v : Mv = 0}`, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let rref = self.rref();
        let free: Vec<usize> = (0..self.cols)
            .filter(|c| !rref.pivots.contains(c))
            .collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (r, &p) in rref.pivots.iter().enumerate() {
                    v[p] = -rref.matrix.get(r, f);
                }
                v
            })
            .collect()
    }

    /// One solution of `Mx = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vector> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let mut aug = Self::zeros(self.field, self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, b[r].clone());
        }
        let rref = aug.rref();
        if rref.pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (r, &p) in rref.pivots.iter().enumerate() {
            x[p] = rref.matrix.get(r, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<ExactMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let mut aug = Self::zeros(self.field, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, self.field.one());
        }
        let rref = aug.rref();
        if rref.pivots.len() < n || rref.pivots[n - 1] != n - 1 {
            return None;
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        let rows: Vec<usize> = (0..n).collect();
        Some(rref.matrix.select(&rows, &cols))
    }
}

impl Rref {
    /// The non-zero rows of the reduced form.
    pub fn row_basis(&self) -> ExactMatrix {
        let rows: Vec<usize> = (0..self.rank).collect();
        let cols: Vec<usize> = (0..self.matrix.cols()).collect();
        self.matrix.select(&rows, &cols)
    }
}

/// Coordinates with respect to a fixed list of linearly independent vectors.
#[derive(Clone, Debug)]
pub struct SpanCoordinates {
    basis: ExactMatrix,
    rows: Vec<usize>,
    inverse: ExactMatrix,
}

impl SpanCoordinates {
    /// `None` when the vectors are linearly dependent.
    pub fn new(field: Field, len: usize, vectors: &[Vector]) -> Option<Self> {
        let basis = ExactMatrix::from_columns(field, len, vectors).ok()?;
        let pivots = basis.transpose().rref().pivots;
        if pivots.len() != vectors.len() {
            return None;
        }
        let cols: Vec<usize> = (0..vectors.len()).collect();
        let inverse = basis.select(&pivots, &cols).inverse()?;
        Some(SpanCoordinates {
            basis,
            rows: pivots,
            inverse,
        })
    }

    pub fn len(&self) -> usize {
        self.basis.cols()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.cols() == 0
    }

    /// Coefficients `c` with `v = sum c_k b_k`, or `None` when `v` is outside the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        let restricted: Vector = self.rows.iter().map(|&r| v[r].clone()).collect();
        let c = self.inverse.apply(&restricted);
        (self.basis.apply(&c) == v).then_some(c)
    }
}

/// Rank of a list of vectors of equal length.
pub fn rank_of(field: Field, len: usize, vectors: &[Vector]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let rows = vectors.to_vec();
    debug_assert!(rows.iter().all(|v| v.len() == len));
    ExactMatrix::from_rows(field, rows)
        .expect("vectors share one field")
        .rank()
}

/// Dimension of the algebra of matrices commuting with every matrix in `mats`.
pub fn commutant_dimension(field: Field, n: usize, mats: &[ExactMatrix]) -> usize {
    // Unknown T is flattened row-major: index t(p, q) = p * n + q.
    let mut rows: Vec<Vector> = Vec::new();
    for m in mats {
        for r in 0..n {
            for s in 0..n {
                let mut eq = vec![field.zero(); n * n];
                for q in 0..n {
                    let v = m.get(q, s);
                    if !v.is_zero() {
                        eq[r * n + q] = &eq[r * n + q] + v;
                    }
                }
                for p in 0..n {
                    let v = m.get(r, p);
                    if !v.is_zero() {
                        eq[p * n + s] = &eq[p * n + s] - v;
                    }
                }
                if eq.iter().any(|x| !x.is_zero()) {
                    rows.push(eq);
                }
            }
        }
    }
    n * n - rank_of(field, n * n, &rows)
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
