use std::collections::BTreeMap;
use std::fmt;

use super::Scalar;
use crate::error::Error;

/// Sparse vector: column index to nonzero entry.
pub type SparseVec = BTreeMap<usize, Scalar>;

/// Adds `factor * src` into `dst`, dropping entries that cancel.
pub fn axpy(dst: &mut SparseVec, factor: &Scalar, src: &SparseVec) {
    for (&c, v) in src {
        let delta = factor * v;
        match dst.get_mut(&c) {
            Some(e) => {
                *e += &delta;
                if e.is_zero() {
                    dst.remove(&c);
                }
            }
            None => {
                if !delta.is_zero() {
                    dst.insert(c, delta);
                }
            }
        }
    }
}

pub fn dense_to_sparse(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn sparse_to_dense(v: &SparseVec, len: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); len];
    for (&i, x) in v {
        out[i] = x.clone();
    }
    out
}

/// Row-sparse matrix over the rationals. Zero entries are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![SparseVec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_dense(rows: &[Vec<Scalar>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Matrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged matrix");
            m.data[i] = dense_to_sparse(r);
        }
        m
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let dense: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect())
            .collect();
        Matrix::from_dense(&dense)
    }

    pub fn from_sparse_rows(cols: usize, rows: Vec<SparseVec>) -> Self {
        debug_assert!(rows.iter().all(|r| r.keys().all(|&c| c < cols)));
        let data: Vec<SparseVec> = rows
            .into_iter()
            .map(|r| r.into_iter().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        Matrix {
            rows: data.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.data[r].get(&c).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert!(r < self.rows && c < self.cols);
        if v.is_zero() {
            self.data[r].remove(&c);
        } else {
            self.data[r].insert(c, v);
        }
    }

    pub fn row(&self, r: usize) -> &SparseVec {
        &self.data[r]
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.len()).sum()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for (r, row) in self.data.iter().enumerate() {
            for (&c, v) in row {
                t.data[c].insert(r, v.clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        self.data
            .iter()
            .map(|row| row.iter().map(|(&c, x)| x * &v[c]).sum())
            .collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for (r, row) in self.data.iter().enumerate() {
            let mut acc = SparseVec::new();
            for (&k, x) in row {
                axpy(&mut acc, x, &other.data[k]);
            }
            out.data[r] = acc;
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_empty())
    }

    /// Reduced row echelon form together with the pivot column of each nonzero row.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut ech = Echelon::new(self.cols);
        for row in &self.data {
            ech.insert(row.clone());
        }
        let (rows, pivots) = ech.into_reduced();
        let mut m = Matrix::from_sparse_rows(self.cols, rows);
        m.rows = m.data.len();
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new(self.cols);
        for row in &self.data {
            ech.insert(row.clone());
        }
        ech.rank()
    }

    /// Basis of the right null space `{v : M v = 0}`, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let pivot_of: BTreeMap<usize, usize> =
            pivots.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_of.contains_key(&free) {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (i, &pc) in pivots.iter().enumerate() {
                if let Some(x) = r.data[i].get(&free) {
                    v[pc] = -x;
                }
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of `M x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        // Augment with the right-hand side as an extra column.
        let aug_col = self.cols;
        let mut ech = Echelon::new(self.cols + 1);
        for (row, rhs) in self.data.iter().zip(b) {
            let mut r = row.clone();
            if !rhs.is_zero() {
                r.insert(aug_col, rhs.clone());
            }
            ech.insert(r);
        }
        let (rows, pivots) = ech.into_reduced();
        if pivots.contains(&aug_col) {
            return None;
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (row, &pc) in rows.iter().zip(&pivots) {
            if let Some(v) = row.get(&aug_col) {
                x[pc] = v.clone();
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Result<Matrix, Error> {
        if self.rows != self.cols {
            return Err(Error::Input("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut ech = Echelon::new(2 * n);
        for (i, row) in self.data.iter().enumerate() {
            let mut r = row.clone();
            r.insert(n + i, Scalar::one());
            ech.insert(r);
        }
        let (rows, pivots) = ech.into_reduced();
        if pivots.len() < n || pivots[..n].iter().enumerate().any(|(i, &p)| p != i) {
            return Err(Error::Input("matrix is singular".into()));
        }
        let mut inv = Matrix::zeros(n, n);
        for (i, row) in rows.iter().take(n).enumerate() {
            for (&c, v) in row.range(n..) {
                inv.set(i, c - n, v.clone());
            }
        }
        Ok(inv)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Incrementally built echelon basis of a row space. Each stored row is
/// normalized so that its leading (smallest) column holds 1.
#[derive(Clone, Debug)]
pub struct Echelon {
    cols: usize,
    pivots: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new(cols: usize) -> Self {
        Echelon {
            cols,
            pivots: BTreeMap::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Reduces `row` against the stored pivots; the result is zero iff the
    /// row lies in the span.
    pub fn reduce(&self, mut row: SparseVec) -> SparseVec {
        let mut start = 0;
        loop {
            let next = row
                .range(start..)
                .find(|(c, _)| self.pivots.contains_key(c))
                .map(|(&c, v)| (c, v.clone()));
            match next {
                Some((c, v)) => {
                    axpy(&mut row, &-v, &self.pivots[&c]);
                    start = c + 1;
                }
                None => return row,
            }
        }
    }

    pub fn contains(&self, row: &SparseVec) -> bool {
        self.reduce(row.clone()).is_empty()
    }

    /// Adds a row; returns `true` when it enlarged the span.
    pub fn insert(&mut self, row: SparseVec) -> bool {
        let row = self.reduce(row);
        let Some((&lead, lv)) = row.iter().next() else {
            return false;
        };
        let inv = lv.inv().expect("nonzero leading entry");
        let row: SparseVec = row.into_iter().map(|(c, v)| (c, v * &inv)).collect();
        self.pivots.insert(lead, row);
        true
    }

    /// Fully reduced rows (pivot columns cleared in every other row), sorted by pivot.
    pub fn into_reduced(self) -> (Vec<SparseVec>, Vec<usize>) {
        let mut pivots = self.pivots;
        let cols: Vec<usize> = pivots.keys().copied().collect();
        // Back-substitute from the last pivot upward.
        for (idx, &c) in cols.iter().enumerate().rev() {
            let pivot_row = pivots[&c].clone();
            for &other in &cols[..idx] {
                let row = pivots.get_mut(&other).unwrap();
                if let Some(v) = row.get(&c).cloned() {
                    axpy(row, &-v, &pivot_row);
                }
            }
        }
        let rows = cols.iter().map(|c| pivots.remove(c).unwrap()).collect();
        (rows, cols)
    }

    pub fn reduced_rows(&self) -> Vec<SparseVec> {
        self.clone().into_reduced().0
    }
}
