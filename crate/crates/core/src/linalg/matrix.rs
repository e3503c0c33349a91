//! Dense matrices and vectors over GF(p).
//!
//! Entries are stored row-major as reduced `u32` values sharing a single
//! characteristic, so "all entries share p" holds by construction.

use std::fmt;

use rand::Rng;

use super::field::{Felt, Prime};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vector {
    p: Prime,
    entries: Vec<u32>,
}

impl Vector {
    /// Builds a vector, rejecting entries outside `[0, p)`.
    pub fn new(p: Prime, entries: Vec<u32>) -> Result<Self> {
        if let Some(&bad) = entries.iter().find(|&&v| v >= p.get()) {
            return Err(Error::EntryOutOfRange {
                value: bad as u64,
                p: p.get(),
            });
        }
        Ok(Vector { p, entries })
    }

    /// Builds a vector, reducing every entry mod p.
    pub fn from_values(p: Prime, values: &[u64]) -> Self {
        Vector {
            p,
            entries: values.iter().map(|&v| p.reduce(v)).collect(),
        }
    }

    pub fn zeros(p: Prime, len: usize) -> Self {
        Vector {
            p,
            entries: vec![0; len],
        }
    }

    pub fn ones(p: Prime, len: usize) -> Self {
        Vector {
            p,
            entries: vec![1 % p.get(); len],
        }
    }

    /// The `i`-th standard basis vector.
    pub fn unit(p: Prime, len: usize, i: usize) -> Self {
        let mut v = Self::zeros(p, len);
        v.entries[i] = 1;
        v
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> Felt {
        self.p.elt(self.entries[i] as u64)
    }

    pub fn values(&self) -> &[u32] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&v| v == 0)
    }

    pub fn weight(&self) -> usize {
        self.entries.iter().filter(|&&v| v != 0).count()
    }

    /// Hamming distance.
    pub fn distance(&self, other: &Vector) -> Result<usize> {
        self.p.ensure_same(other.p)?;
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                actual: other.len(),
            });
        }
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .filter(|(a, b)| a != b)
            .count())
    }

    pub fn add(&self, other: &Vector) -> Result<Vector> {
        self.p.ensure_same(other.p)?;
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                actual: other.len(),
            });
        }
        let p = self.p;
        Ok(Vector {
            p,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| p.reduce(a as u64 + b as u64))
                .collect(),
        })
    }

    pub fn scale(&self, c: Felt) -> Result<Vector> {
        self.p.ensure_same(c.prime())?;
        let p = self.p;
        Ok(Vector {
            p,
            entries: self
                .entries
                .iter()
                .map(|&a| p.reduce(a as u64 * c.value() as u64))
                .collect(),
        })
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Result of Gauss-Jordan elimination.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    p: Prime,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    /// Builds a matrix from row-major entries, rejecting any entry outside `[0, p)`.
    pub fn new(p: Prime, rows: usize, cols: usize, data: Vec<u32>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyMatrix);
        }
        if data.len() != rows * cols {
            return Err(Error::LengthMismatch {
                expected: rows * cols,
                actual: data.len(),
            });
        }
        if let Some(&bad) = data.iter().find(|&&v| v >= p.get()) {
            return Err(Error::EntryOutOfRange {
                value: bad as u64,
                p: p.get(),
            });
        }
        Ok(Matrix {
            p,
            rows,
            cols,
            data,
        })
    }

    /// Builds a matrix from nested rows, reducing each entry mod p.
    ///
    /// Panics on ragged or empty input; intended for literals in tests and examples.
    pub fn from_rows(p: Prime, rows: &[&[u64]]) -> Self {
        assert!(!rows.is_empty() && !rows[0].is_empty(), "empty matrix literal");
        let cols = rows[0].len();
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix literal");
        Self::from_fn(p, rows.len(), cols, |i, j| rows[i][j])
    }

    pub fn from_fn(p: Prime, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u64) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(p.reduce(f(i, j)));
            }
        }
        Matrix {
            p,
            rows,
            cols,
            data,
        }
    }

    pub fn zeros(p: Prime, rows: usize, cols: usize) -> Self {
        Self::from_fn(p, rows, cols, |_, _| 0)
    }

    pub fn identity(p: Prime, n: usize) -> Self {
        Self::from_fn(p, n, n, |i, j| (i == j) as u64)
    }

    pub fn diagonal(diag: &[Felt]) -> Self {
        let p = diag[0].prime();
        Self::from_fn(p, diag.len(), diag.len(), |i, j| {
            if i == j {
                diag[i].value() as u64
            } else {
                0
            }
        })
    }

    /// Stacks vectors as rows. Returns `None` for an empty list.
    pub fn from_row_vectors(vs: &[Vector]) -> Result<Option<Self>> {
        let Some(first) = vs.first() else {
            return Ok(None);
        };
        let (p, cols) = (first.prime(), first.len());
        let mut data = Vec::with_capacity(vs.len() * cols);
        for v in vs {
            p.ensure_same(v.prime())?;
            if v.len() != cols {
                return Err(Error::LengthMismatch {
                    expected: cols,
                    actual: v.len(),
                });
            }
            data.extend_from_slice(v.values());
        }
        Matrix::new(p, vs.len(), cols, data).map(Some)
    }

    pub fn random<R: Rng + ?Sized>(p: Prime, rows: usize, cols: usize, rng: &mut R) -> Self {
        Self::from_fn(p, rows, cols, |_, _| rng.gen_range(0..p.get() as u64))
    }

    pub fn prime(&self) -> Prime {
        self.p
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

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Felt {
        self.p.elt(self.data[i * self.cols + j] as u64)
    }

    #[inline]
    pub fn value(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Felt) -> Result<()> {
        self.p.ensure_same(v.prime())?;
        self.data[i * self.cols + j] = v.value();
        Ok(())
    }

    pub fn values(&self) -> &[u32] {
        &self.data
    }

    pub fn row(&self, i: usize) -> Vector {
        Vector {
            p: self.p,
            entries: self.data[i * self.cols..(i + 1) * self.cols].to_vec(),
        }
    }

    pub fn col(&self, j: usize) -> Vector {
        Vector {
            p: self.p,
            entries: (0..self.rows).map(|i| self.value(i, j)).collect(),
        }
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.value(i, j) == 0))
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.rows).all(|i| (0..i.min(self.cols)).all(|j| self.value(i, j) == 0))
    }

    pub fn diagonal_entries(&self) -> Vec<Felt> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.p, self.cols, self.rows, |i, j| self.value(j, i) as u64)
    }

    fn ensure_same_shape(&self, other: &Matrix, op: &'static str) -> Result<()> {
        self.p.ensure_same(other.p)?;
        if self.shape() != other.shape() {
            return Err(Error::ShapeMismatch {
                op,
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.ensure_same_shape(other, "add")?;
        let p = self.p;
        Ok(Matrix {
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| p.reduce(a as u64 + b as u64))
                .collect(),
            ..self.clone()
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.ensure_same_shape(other, "sub")?;
        let p = self.p;
        let q = p.get() as u64;
        Ok(Matrix {
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| p.reduce(a as u64 + q - b as u64))
                .collect(),
            ..self.clone()
        })
    }

    pub fn scale(&self, c: Felt) -> Result<Matrix> {
        self.p.ensure_same(c.prime())?;
        let p = self.p;
        Ok(Matrix {
            data: self
                .data
                .iter()
                .map(|&a| p.reduce(a as u64 * c.value() as u64))
                .collect(),
            ..self.clone()
        })
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.p.ensure_same(other.p)?;
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch {
                op: "mul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let q = self.p.get() as u64;
        let mut out = vec![0u32; self.rows * other.cols];
        let mut acc = vec![0u64; other.cols];
        for i in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self.value(i, k) as u64;
                if a == 0 {
                    continue;
                }
                let brow = &other.data[k * other.cols..(k + 1) * other.cols];
                for (slot, &b) in acc.iter_mut().zip(brow) {
                    *slot = (*slot + a * b as u64) % q;
                }
            }
            for (j, &v) in acc.iter().enumerate() {
                out[i * other.cols + j] = v as u32;
            }
        }
        Ok(Matrix {
            p: self.p,
            rows: self.rows,
            cols: other.cols,
            data: out,
        })
    }

    pub fn mul_vec(&self, v: &Vector) -> Result<Vector> {
        self.p.ensure_same(v.p)?;
        if self.cols != v.len() {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                actual: v.len(),
            });
        }
        let q = self.p.get() as u64;
        let entries = (0..self.rows)
            .map(|i| {
                let row = &self.data[i * self.cols..(i + 1) * self.cols];
                row.iter()
                    .zip(&v.entries)
                    .fold(0u64, |acc, (&a, &b)| (acc + a as u64 * b as u64) % q) as u32
            })
            .collect();
        Ok(Vector { p: self.p, entries })
    }

    /// Row-vector times matrix: `v · M`.
    pub fn left_mul_vec(&self, v: &Vector) -> Result<Vector> {
        self.p.ensure_same(v.p)?;
        if self.rows != v.len() {
            return Err(Error::LengthMismatch {
                expected: self.rows,
                actual: v.len(),
            });
        }
        let q = self.p.get() as u64;
        let mut acc = vec![0u64; self.cols];
        for (i, &c) in v.entries.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (slot, &m) in acc.iter_mut().zip(&self.data[i * self.cols..(i + 1) * self.cols]) {
                *slot = (*slot + c as u64 * m as u64) % q;
            }
        }
        Ok(Vector {
            p: self.p,
            entries: acc.into_iter().map(|v| v as u32).collect(),
        })
    }

    /// Reduced row-echelon form by Gauss-Jordan elimination.
    pub fn rref(&self) -> Rref {
        let q = self.p.get() as u64;
        let (rows, cols) = self.shape();
        let mut m: Vec<u64> = self.data.iter().map(|&v| v as u64).collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| m[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    m.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = self.p.elt(m[r * cols + c]).inv().expect("pivot is nonzero").value() as u64;
            for j in c..cols {
                m[r * cols + j] = m[r * cols + j] * inv % q;
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let f = m[i * cols + c];
                if f == 0 {
                    continue;
                }
                let neg = q - f;
                for j in c..cols {
                    m[i * cols + j] = (m[i * cols + j] + neg * m[r * cols + j]) % q;
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            matrix: Matrix {
                p: self.p,
                rows,
                cols,
                data: m.into_iter().map(|v| v as u32).collect(),
            },
            rank: r,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Null-space basis, one vector per RREF free column in increasing order.
    /// The vector for free column `f` has a 1 at `f` and zeros at the other free columns.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let Rref {
            matrix: r, pivots, ..
        } = self.rref();
        let q = self.p.get();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut entries = vec![0u32; self.cols];
                entries[f] = 1;
                for (row, &pc) in pivots.iter().enumerate() {
                    let v = r.value(row, f);
                    entries[pc] = if v == 0 { 0 } else { q - v };
                }
                Vector { p: self.p, entries }
            })
            .collect()
    }

    /// Inverse via RREF of `[M | I]`.
    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let aug = Matrix::from_fn(self.p, n, 2 * n, |i, j| {
            if j < n {
                self.value(i, j) as u64
            } else {
                (j - n == i) as u64
            }
        });
        let red = aug.rref();
        if red.pivots.len() < n || red.pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        Ok(Matrix::from_fn(self.p, n, n, |i, j| {
            red.matrix.value(i, n + j) as u64
        }))
    }

    /// Kronecker product; block `(i, j)` is `self[i, j] · other`.
    pub fn kronecker(&self, other: &Matrix) -> Result<Matrix> {
        self.p.ensure_same(other.p)?;
        let (r2, c2) = other.shape();
        let p = self.p;
        Ok(Matrix::from_fn(p, self.rows * r2, self.cols * c2, |i, j| {
            self.value(i / r2, j / c2) as u64 * other.value(i % r2, j % c2) as u64
        }))
    }

    /// Column-stacking vectorization.
    pub fn vec(&self) -> Vector {
        let entries = (0..self.cols)
            .flat_map(|j| (0..self.rows).map(move |i| (i, j)))
            .map(|(i, j)| self.value(i, j))
            .collect();
        Vector { p: self.p, entries }
    }

    /// Inverse of [`Matrix::vec`].
    pub fn unvec(v: &Vector, rows: usize, cols: usize) -> Result<Matrix> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyMatrix);
        }
        if v.len() != rows * cols {
            return Err(Error::LengthMismatch {
                expected: rows * cols,
                actual: v.len(),
            });
        }
        Ok(Matrix::from_fn(v.p, rows, cols, |i, j| {
            v.entries[j * rows + i] as u64
        }))
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = (self.p.get() - 1).to_string().len();
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>width$}", self.value(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
