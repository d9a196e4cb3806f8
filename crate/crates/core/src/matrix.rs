//! Dense matrices over a finite field, exact Gaussian elimination, and the
//! submatrix conditions used to certify rate-one-half codes.

use std::fmt;
use std::ops::{Index, IndexMut};

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::gf::{format_elem, Elem, Field, FieldRef};

#[derive(Clone)]
pub struct Matrix {
    field: FieldRef,
    rows: usize,
    cols: usize,
    data: Vec<Elem>, // row-major
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        *self.field == *other.field
            && self.rows == other.rows
            && self.cols == other.cols
            && self.data == other.data
    }
}

impl Eq for Matrix {}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|&a| format_elem(a)).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Elem;

    fn index(&self, (r, c): (usize, usize)) -> &Elem {
        assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Elem {
        assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl Matrix {
    pub fn new(field: &FieldRef, rows: usize, cols: usize, data: Vec<Elem>) -> Result<Matrix> {
        if rows * cols != data.len() {
            return Err(Error::Dimension(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        if data.iter().any(|a| a.index() >= field.order()) {
            return Err(Error::OutOfRange("matrix entry outside the field".into()));
        }
        Ok(Matrix {
            field: field.clone(),
            rows,
            cols,
            data,
        })
    }

    pub fn zeros(field: &FieldRef, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![Elem::ZERO; rows * cols],
        }
    }

    pub fn identity(field: &FieldRef, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = Elem::ONE;
        }
        m
    }

    /// Builds from row vectors; `cols` is needed when there are no rows.
    pub fn from_rows(field: &FieldRef, cols: usize, rows: &[Vec<Elem>]) -> Result<Matrix> {
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::Dimension(format!(
                "row of length {} in a {cols}-column matrix",
                r.len()
            )));
        }
        Matrix::new(field, rows.len(), cols, rows.concat())
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn data(&self) -> &[Elem] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<Elem> {
        (0..self.rows).map(|r| self[(r, c)]).collect()
    }

    fn same_field(&self, other: &Matrix) -> Result<()> {
        if *self.field != *other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self[(i, l)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] = f.add(out[(i, j)], f.mul(a, other[(l, j)]));
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(c, r)] = self[(r, c)];
            }
        }
        out
    }

    /// Entrywise Frobenius conjugation x ↦ x^q.
    pub fn conj(&self) -> Result<Matrix> {
        self.field.require_square()?;
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = self.field.conj(*a);
        }
        Ok(out)
    }

    pub fn scale(&self, c: Elem) -> Matrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = self.field.mul(*a, c);
        }
        out
    }

    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        if self.rows != other.rows {
            return Err(Error::Dimension("hstack needs equal row counts".into()));
        }
        let rows: Vec<Vec<Elem>> = (0..self.rows)
            .map(|r| [self.row(r), other.row(r)].concat())
            .collect();
        Matrix::from_rows(&self.field, self.cols + other.cols, &rows)
    }

    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        if self.cols != other.cols {
            return Err(Error::Dimension("vstack needs equal column counts".into()));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix::new(&self.field, self.rows + other.rows, self.cols, data)
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &r in rows {
            for &c in cols {
                data.push(self[(r, c)]);
            }
        }
        Matrix {
            field: self.field.clone(),
            rows: rows.len(),
            cols: cols.len(),
            data,
        }
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let rows: Vec<usize> = (0..self.rows).collect();
        self.submatrix(&rows, cols)
    }

    pub fn det(&self) -> Result<Elem> {
        if self.rows != self.cols {
            return Err(Error::Dimension(format!(
                "determinant of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let mut buf = self.data.clone();
        Ok(det_in_place(&self.field, &mut buf, self.rows))
    }

    /// Reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = f.inv(self[(r, c)]).expect("pivot is nonzero");
            for j in 0..self.cols {
                self[(r, j)] = f.mul(self[(r, j)], inv);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self[(i, c)];
                if factor.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let v = f.mul(factor, self[(r, j)]);
                    self[(i, j)] = f.sub(self[(i, j)], v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = self.hstack(&Matrix::identity(&self.field, n))?;
        let pivots = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular);
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        let rows: Vec<usize> = (0..n).collect();
        Ok(aug.submatrix(&rows, &cols))
    }

    /// Basis (as rows) of {v : M vᵗ = 0}.
    pub fn null_space(&self) -> Matrix {
        let f = &self.field;
        let mut red = self.clone();
        let pivots = red.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![Elem::ZERO; self.cols];
            v[fc] = Elem::ONE;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(red[(r, fc)]);
            }
            basis.push(v);
        }
        Matrix::from_rows(f, self.cols, &basis).expect("basis rows have full width")
    }

    /// Row-reduced basis of the row space (zero rows dropped).
    pub fn row_space_basis(&self) -> Matrix {
        let mut red = self.clone();
        let rank = red.rref().len();
        let rows: Vec<usize> = (0..rank).collect();
        let cols: Vec<usize> = (0..self.cols).collect();
        red.submatrix(&rows, &cols)
    }
}

/// Determinant by elimination on a row-major n×n buffer, which is clobbered.
pub fn det_in_place(f: &Field, buf: &mut [Elem], n: usize) -> Elem {
    debug_assert_eq!(buf.len(), n * n);
    let mut det = Elem::ONE;
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !buf[r * n + c].is_zero()) else {
            return Elem::ZERO;
        };
        if p != c {
            for j in c..n {
                buf.swap(p * n + j, c * n + j);
            }
            det = f.neg(det);
        }
        let pivot = buf[c * n + c];
        det = f.mul(det, pivot);
        let inv = f.inv(pivot).expect("pivot is nonzero");
        for r in c + 1..n {
            let factor = f.mul(buf[r * n + c], inv);
            if factor.is_zero() {
                continue;
            }
            for j in c + 1..n {
                let v = f.mul(factor, buf[c * n + j]);
                buf[r * n + j] = f.sub(buf[r * n + j], v);
            }
        }
    }
    det
}

/// A submatrix (0-based row and column indices) that violates a condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubmatrixFailure {
    pub j: usize,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl fmt::Display for SubmatrixFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one = |v: &[usize]| v.iter().map(|i| (i + 1).to_string()).join(",");
        write!(
            f,
            "j={} rows {{{}}} cols {{{}}}",
            self.j,
            one(&self.rows),
            one(&self.cols)
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorReport {
    pub checked: u64,
    pub failure: Option<SubmatrixFailure>,
}

impl MinorReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks that every j×j submatrix is nonsingular for j = `j_from`..=`j_max`,
/// row subsets outermost, both in lexicographic order.
pub fn minors_nonsingular_range(m: &Matrix, j_from: usize, j_max: usize) -> MinorReport {
    let f = &m.field;
    let mut checked = 0;
    let mut buf = Vec::new();
    for j in j_from.max(1)..=j_max.min(m.rows).min(m.cols) {
        for rows in (0..m.rows).combinations(j) {
            for cols in (0..m.cols).combinations(j) {
                buf.clear();
                for &r in &rows {
                    buf.extend(cols.iter().map(|&c| m[(r, c)]));
                }
                checked += 1;
                if det_in_place(f, &mut buf, j).is_zero() {
                    return MinorReport {
                        checked,
                        failure: Some(SubmatrixFailure { j, rows, cols }),
                    };
                }
            }
        }
    }
    MinorReport {
        checked,
        failure: None,
    }
}

/// Every j×j submatrix nonsingular for j = 1..=j_max.
pub fn all_minors_nonsingular(m: &Matrix, j_max: usize) -> Result<MinorReport> {
    if j_max > m.rows.min(m.cols) {
        return Err(Error::OutOfRange(format!(
            "j_max {j_max} exceeds min({}, {})",
            m.rows, m.cols
        )));
    }
    Ok(minors_nonsingular_range(m, 1, j_max))
}

/// For a k×k matrix: every j × (k−d+1+j) submatrix has rank j, j = 1..d−1.
pub fn rect_rank_condition(m: &Matrix, d: usize) -> Result<MinorReport> {
    let k = m.rows;
    if m.cols != k {
        return Err(Error::Dimension(
            "rect_rank_condition needs a square matrix".into(),
        ));
    }
    if d == 0 || d > k + 1 {
        return Err(Error::OutOfRange(format!(
            "distance {d} outside 1..={}",
            k + 1
        )));
    }
    let mut checked = 0;
    for j in 1..d {
        let width = k + 1 + j - d;
        for rows in (0..k).combinations(j) {
            for cols in (0..k).combinations(width) {
                checked += 1;
                if m.submatrix(&rows, &cols).rank() < j {
                    return Ok(MinorReport {
                        checked,
                        failure: Some(SubmatrixFailure { j, rows, cols }),
                    });
                }
            }
        }
    }
    Ok(MinorReport {
        checked,
        failure: None,
    })
}
