//! Dense linear algebra over the prime field: Gaussian elimination with
//! deterministic first-nonzero pivoting, reduced row echelon form, LU
//! factorization and an incremental span for dependency detection.

use crate::error::Error;
use crate::field::{Fp, PrimeField};

/// Row-major dense matrix over the prime field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Fp>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Mat {
        Mat { rows, cols, data: vec![Fp::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Fp::ONE;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Fp>>) -> Mat {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c);
            data.extend(row);
        }
        Mat { rows: r, cols: c, data }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_cols(cols: &[Vec<Fp>]) -> Mat {
        let c = cols.len();
        let r = cols.first().map_or(0, |col| col.len());
        let mut m = Mat::zeros(r, c);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), r);
            for (i, &v) in col.iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Fp] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Fp> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn mul_vec(&self, v: &[Fp], k: &PrimeField) -> Vec<Fp> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Fp::ZERO;
                for j in 0..self.cols {
                    let a = self[(i, j)];
                    if !a.is_zero() && !v[j].is_zero() {
                        acc = k.add(acc, k.mul(a, v[j]));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn mul_mat(&self, other: &Mat, k: &PrimeField) -> Mat {
        assert_eq!(self.cols, other.rows);
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self[(i, l)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other[(l, j)];
                    if !b.is_zero() {
                        out[(i, j)] = k.add(out[(i, j)], k.mul(a, b));
                    }
                }
            }
        }
        out
    }

    /// In-place reduced row echelon form; returns the pivot column of each
    /// pivot row, in row order.
    pub fn rref(&mut self, k: &PrimeField) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, pr);
            let inv = k.inv(self[(r, c)]).expect("pivot nonzero");
            for j in c..self.cols {
                self[(r, j)] = k.mul(self[(r, j)], inv);
            }
            for i in 0..self.rows {
                if i != r && !self[(i, c)].is_zero() {
                    let f = self[(i, c)];
                    for j in c..self.cols {
                        let s = k.mul(f, self[(r, j)]);
                        self[(i, j)] = k.sub(self[(i, j)], s);
                    }
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

    /// Matrix inverse via Gauss–Jordan, or `SingularBlock`.
    pub fn inverse(&self, k: &PrimeField) -> Result<Mat, Error> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Mat::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)];
            }
            aug[(i, n + i)] = Fp::ONE;
        }
        let pivots = aug.rref(k);
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
            return Err(Error::SingularBlock);
        }
        let mut inv = Mat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = aug[(i, n + j)];
            }
        }
        Ok(inv)
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = Fp;
    fn index(&self, (i, j): (usize, usize)) -> &Fp {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Fp {
        &mut self.data[i * self.cols + j]
    }
}

/// Solves `A x = b` for every right-hand side column in `rhs`, requiring a
/// unique solution. Rank deficiency yields `NonUniqueSolution` and an
/// inconsistent system yields `NoSolution`.
pub fn solve_unique(a: &Mat, rhs: &[Vec<Fp>], k: &PrimeField) -> Result<Vec<Vec<Fp>>, Error> {
    let n = a.ncols();
    let m = a.nrows();
    let extra = rhs.len();
    let mut aug = Mat::zeros(m, n + extra);
    for i in 0..m {
        for j in 0..n {
            aug[(i, j)] = a[(i, j)];
        }
        for (e, b) in rhs.iter().enumerate() {
            assert_eq!(b.len(), m, "dimension mismatch");
            aug[(i, n + e)] = b[i];
        }
    }
    let pivots = aug.rref(k);
    let rank = pivots.iter().take_while(|&&c| c < n).count();
    // a pivot in a right-hand-side column means that column is inconsistent
    if pivots.iter().any(|&c| c >= n) {
        return Err(Error::NoSolution);
    }
    if rank < n {
        return Err(Error::NonUniqueSolution);
    }
    let mut out = vec![vec![Fp::ZERO; n]; extra];
    for (row, &c) in pivots.iter().enumerate() {
        for e in 0..extra {
            out[e][c] = aug[(row, n + e)];
        }
    }
    Ok(out)
}

/// Solves `A x = b` allowing an underdetermined system: returns the
/// canonical echelon solution with all free variables set to zero, or
/// `None` if inconsistent.
pub fn solve_any(a: &Mat, b: &[Fp], k: &PrimeField) -> Option<Vec<Fp>> {
    let n = a.ncols();
    let m = a.nrows();
    let mut aug = Mat::zeros(m, n + 1);
    for i in 0..m {
        for j in 0..n {
            aug[(i, j)] = a[(i, j)];
        }
        aug[(i, n)] = b[i];
    }
    let pivots = aug.rref(k);
    if pivots.iter().any(|&c| c == n) {
        return None;
    }
    // with all free variables at zero, each pivot equals the rhs entry
    let mut x = vec![Fp::ZERO; n];
    for (row, &c) in pivots.iter().enumerate() {
        x[c] = aug[(row, n)];
    }
    Some(x)
}

/// Incrementally maintained row space used to detect linear dependence.
/// Vectors are reduced against an echelon basis; dependent vectors come
/// back with their expansion in terms of previously inserted vectors.
pub struct IncrementalSpan {
    dim: usize,
    // echelon rows with their pivot columns, plus the expression of each
    // row as a combination of the inserted vectors
    rows: Vec<(usize, Vec<Fp>, Vec<Fp>)>,
    inserted: usize,
}

pub enum SpanOutcome {
    /// Vector was independent and joined the span (insertion index given).
    Independent(usize),
    /// Vector equals the given combination of previously inserted vectors.
    Dependent(Vec<Fp>),
}

impl IncrementalSpan {
    pub fn new(dim: usize) -> IncrementalSpan {
        IncrementalSpan { dim, rows: Vec::new(), inserted: 0 }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn offer(&mut self, v: &[Fp], k: &PrimeField) -> SpanOutcome {
        assert_eq!(v.len(), self.dim);
        let mut v = v.to_vec();
        let mut combo = vec![Fp::ZERO; self.inserted];
        for (pivot, row, expr) in &self.rows {
            let c = v[*pivot];
            if c.is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if !row[j].is_zero() {
                    v[j] = k.sub(v[j], k.mul(c, row[j]));
                }
            }
            for j in 0..expr.len() {
                if !expr[j].is_zero() {
                    combo[j] = k.add(combo[j], k.mul(c, expr[j]));
                }
            }
        }
        match v.iter().position(|c| !c.is_zero()) {
            None => SpanOutcome::Dependent(combo),
            Some(pivot) => {
                let inv = k.inv(v[pivot]).expect("nonzero pivot");
                let row: Vec<Fp> = v.iter().map(|&c| k.mul(c, inv)).collect();
                let mut expr: Vec<Fp> = combo.iter().map(|&c| k.mul(k.neg(c), inv)).collect();
                expr.push(inv);
                self.inserted += 1;
                for (_, _, e) in &mut self.rows {
                    e.resize(self.inserted, Fp::ZERO);
                }
                expr.resize(self.inserted, Fp::ZERO);
                self.rows.push((pivot, row, expr));
                SpanOutcome::Independent(self.inserted - 1)
            }
        }
    }
}
