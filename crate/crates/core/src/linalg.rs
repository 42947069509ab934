//! Dense exact linear algebra over a [`Field`].
//!
//! Pivoting always takes the first nonzero entry in a column, so every
//! echelon form, kernel basis and subspace basis produced here is a
//! deterministic function of the input.

use crate::field::Field;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("the linear system has no solution")]
    NoSolution,
}

/// A row-major dense matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<K: Field> {
    field: K,
    rows: usize,
    cols: usize,
    data: Vec<K::Elem>,
}

/// Result of [`Matrix::rref`].
#[derive(Clone, Debug, PartialEq)]
pub struct Rref<K: Field> {
    pub matrix: Matrix<K>,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl<K: Field> Matrix<K> {
    pub fn zeros(field: &K, rows: usize, cols: usize) -> Self {
        Matrix { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &K, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: &K, rows: Vec<Vec<K::Elem>>, cols: usize) -> Self {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r);
        }
        Matrix { field: field.clone(), rows: nrows, cols, data }
    }

    pub fn from_i64(field: &K, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows.iter().map(|r| r.iter().map(|&v| field.from_i64(v)).collect()).collect();
        Self::from_rows(field, rows, cols)
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(field: &K, rows: usize, columns: &[Vec<K::Elem>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, v) in c.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn field(&self) -> &K {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &K::Elem {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: K::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[K::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<K::Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<K::Elem>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| self.field.is_zero(v))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix<K>) -> Matrix<K> {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let k = &self.field;
        let mut out = Self::zeros(k, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if k.is_zero(a) {
                    continue;
                }
                let orow = other.row(l);
                let base = i * out.cols;
                for (j, b) in orow.iter().enumerate() {
                    if !k.is_zero(b) {
                        let cur = &out.data[base + j];
                        out.data[base + j] = k.add(cur, &k.mul(a, b));
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[K::Elem]) -> Vec<K::Elem> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        let k = &self.field;
        (0..self.rows)
            .map(|i| {
                let mut acc = k.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !k.is_zero(a) && !k.is_zero(b) {
                        acc = k.add(&acc, &k.mul(a, b));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix<K>) -> Matrix<K> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let k = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| k.add(a, b)).collect();
        Matrix { field: k.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix<K>) -> Matrix<K> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let k = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| k.sub(a, b)).collect();
        Matrix { field: k.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &K::Elem) -> Matrix<K> {
        let k = &self.field;
        let data = self.data.iter().map(|a| k.mul(a, c)).collect();
        Matrix { field: k.clone(), rows: self.rows, cols: self.cols, data }
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &Matrix<K>) -> Matrix<K> {
        assert_eq!(self.rows, other.rows);
        let mut out = Self::zeros(&self.field, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    /// Places `other` below `self`.
    pub fn vstack(&self, other: &Matrix<K>) -> Matrix<K> {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Matrix<K>) -> Matrix<K> {
        let mut out = Self::zeros(&self.field, self.rows + other.rows, self.cols + other.cols);
        out.set_block(0, 0, self);
        out.set_block(self.rows, self.cols, other);
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix<K>) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r0 + i, c0 + j, block.get(i, j).clone());
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix<K> {
        let mut out = Self::zeros(&self.field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out.set(i, j, self.get(r0 + i, c0 + j).clone());
            }
        }
        out
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kronecker(&self, other: &Matrix<K>) -> Matrix<K> {
        let k = &self.field;
        let mut out = Self::zeros(k, self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if k.is_zero(a) {
                    continue;
                }
                for p in 0..other.rows {
                    for q in 0..other.cols {
                        let b = other.get(p, q);
                        if !k.is_zero(b) {
                            out.set(i * other.rows + p, j * other.cols + q, k.mul(a, b));
                        }
                    }
                }
            }
        }
        out
    }

    /// Reduced row-echelon form with first-nonzero pivoting.
    pub fn rref(&self) -> Rref<K> {
        let k = self.field.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !k.is_zero(m.get(i, c))) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = k.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in c..m.cols {
                let v = k.mul(m.get(r, j), &inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if k.is_zero(&f) {
                    continue;
                }
                for j in c..m.cols {
                    let pv = m.get(r, j);
                    if !k.is_zero(pv) {
                        let v = k.sub(m.get(i, j), &k.mul(&f, pv));
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        let rank = pivots.len();
        Rref { matrix: m, pivots, rank }
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
        self.rref().rank
    }

    /// A basis of the right kernel, one vector per free column, in column order.
    pub fn kernel_basis(&self) -> Vec<Vec<K::Elem>> {
        let k = &self.field;
        let Rref { matrix, pivots, .. } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![k.zero(); self.cols];
            v[free] = k.one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = k.neg(matrix.get(r, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Some `x` with `self · x = b`.
    pub fn solve(&self, b: &[K::Elem]) -> Result<Vec<K::Elem>, LinalgError> {
        if b.len() != self.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.rows, got: b.len() });
        }
        let k = &self.field;
        let aug = self.hstack(&Matrix::from_columns(k, self.rows, &[b.to_vec()]));
        let Rref { matrix, pivots, .. } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Err(LinalgError::NoSolution);
        }
        let mut x = vec![k.zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = matrix.get(r, self.cols).clone();
        }
        Ok(x)
    }

    pub fn inverse(&self) -> Option<Matrix<K>> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(&self.field, n));
        let r = aug.rref();
        if r.rank < n || r.pivots[n - 1] != n - 1 {
            return None;
        }
        Some(r.matrix.block(0, n, n, n))
    }
}

/// A linear subspace of `K^n`, stored by its canonical reduced-echelon basis.
///
/// Two subspaces are equal iff their stored bases are identical.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<K: Field> {
    field: K,
    ambient: usize,
    basis: Vec<Vec<K::Elem>>,
    pivots: Vec<usize>,
}

impl<K: Field> Subspace<K> {
    pub fn zero(field: &K, ambient: usize) -> Self {
        Subspace { field: field.clone(), ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn whole(field: &K, ambient: usize) -> Self {
        let id = Matrix::identity(field, ambient);
        Self::from_rref(field, ambient, &id.rref())
    }

    pub fn span(field: &K, ambient: usize, vectors: &[Vec<K::Elem>]) -> Self {
        if vectors.is_empty() {
            return Self::zero(field, ambient);
        }
        let m = Matrix::from_rows(field, vectors.to_vec(), ambient);
        Self::from_rref(field, ambient, &m.rref())
    }

    fn from_rref(field: &K, ambient: usize, r: &Rref<K>) -> Self {
        let basis = (0..r.rank).map(|i| r.matrix.row(i).to_vec()).collect();
        Subspace { field: field.clone(), ambient, basis, pivots: r.pivots.clone() }
    }

    /// Column space of a matrix.
    pub fn image(m: &Matrix<K>) -> Self {
        Self::span(m.field(), m.rows(), &m.columns())
    }

    pub fn kernel(m: &Matrix<K>) -> Self {
        Self::span(m.field(), m.cols(), &m.kernel_basis())
    }

    pub fn field(&self) -> &K {
        &self.field
    }
    pub fn ambient(&self) -> usize {
        self.ambient
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }
    pub fn basis(&self) -> &[Vec<K::Elem>] {
        &self.basis
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// The residue of `v` after eliminating the pivot coordinates.
    pub fn reduce(&self, v: &[K::Elem]) -> Vec<K::Elem> {
        let k = &self.field;
        let mut w = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let f = w[p].clone();
            if k.is_zero(&f) {
                continue;
            }
            for (wi, ri) in w.iter_mut().zip(row) {
                if !k.is_zero(ri) {
                    *wi = k.sub(wi, &k.mul(&f, ri));
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[K::Elem]) -> bool {
        self.reduce(v).iter().all(|x| self.field.is_zero(x))
    }

    pub fn contains_subspace(&self, other: &Subspace<K>) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Coordinates of `v` in the stored basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[K::Elem]) -> Option<Vec<K::Elem>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn sum(&self, other: &Subspace<K>) -> Subspace<K> {
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Self::span(&self.field, self.ambient, &vs)
    }

    pub fn intersect(&self, other: &Subspace<K>) -> Subspace<K> {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.field, self.ambient);
        }
        let k = &self.field;
        let mut cols = self.basis.clone();
        cols.extend(other.basis.iter().map(|v| v.iter().map(|x| k.neg(x)).collect()));
        let m = Matrix::from_columns(k, self.ambient, &cols);
        let vecs: Vec<_> = m
            .kernel_basis()
            .into_iter()
            .map(|coef| {
                let mut v = vec![k.zero(); self.ambient];
                for (c, b) in coef.iter().zip(&self.basis) {
                    if k.is_zero(c) {
                        continue;
                    }
                    for (vi, bi) in v.iter_mut().zip(b) {
                        *vi = k.add(vi, &k.mul(c, bi));
                    }
                }
                v
            })
            .collect();
        Self::span(k, self.ambient, &vecs)
    }

    /// Image of the subspace under a linear map.
    pub fn map(&self, m: &Matrix<K>) -> Subspace<K> {
        assert_eq!(m.cols(), self.ambient);
        let vecs: Vec<_> = self.basis.iter().map(|v| m.mul_vec(v)).collect();
        Self::span(&self.field, m.rows(), &vecs)
    }

    /// Greedily extends a basis of `sub` (which must lie inside `self`) by
    /// stored basis vectors of `self`; returns only the added vectors.
    pub fn complement_of(&self, sub: &Subspace<K>) -> Vec<Vec<K::Elem>> {
        let k = &self.field;
        // Incremental echelon rows (pivot, row with 1 at pivot); each row
        // vanishes at the pivots of the rows before it.
        let mut rows: Vec<(usize, Vec<K::Elem>)> = Vec::new();
        let insert = |v: &[K::Elem], rows: &mut Vec<(usize, Vec<K::Elem>)>| -> bool {
            let mut w = v.to_vec();
            for (p, r) in rows.iter() {
                let c = w[*p].clone();
                if k.is_zero(&c) {
                    continue;
                }
                for (x, y) in w.iter_mut().zip(r) {
                    if !k.is_zero(y) {
                        *x = k.sub(x, &k.mul(&c, y));
                    }
                }
            }
            let Some(p) = w.iter().position(|x| !k.is_zero(x)) else {
                return false;
            };
            let inv = k.inv(&w[p]).expect("nonzero");
            let w: Vec<K::Elem> = w.iter().map(|x| k.mul(x, &inv)).collect();
            rows.push((p, w));
            true
        };
        for v in &sub.basis {
            insert(v, &mut rows);
        }
        self.basis.iter().filter(|v| insert(v, &mut rows)).cloned().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn f101() -> PrimeField {
        PrimeField::new(101).unwrap()
    }

    #[test]
    fn rref_of_identity() {
        let k = f101();
        let r = Matrix::identity(&k, 2).rref();
        assert_eq!(r.matrix, Matrix::identity(&k, 2));
        assert_eq!(r.pivots, vec![0, 1]);
        assert_eq!(r.rank, 2);
    }

    #[test]
    fn rref_of_zero() {
        let k = f101();
        let z = Matrix::zeros(&k, 3, 3);
        let r = z.rref();
        assert_eq!(r.matrix, z);
        assert!(r.pivots.is_empty());
        assert_eq!(r.rank, 0);
    }

    #[test]
    fn rank_one_example() {
        let k = f101();
        let m = Matrix::from_i64(&k, &[&[1, 2], &[2, 4]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernels() {
        let k = f101();
        assert!(Matrix::identity(&k, 3).kernel_basis().is_empty());
        let z = Matrix::zeros(&k, 2, 3);
        let kb = z.kernel_basis();
        assert_eq!(kb.len(), 3);
        assert_eq!(Subspace::span(&k, 3, &kb).dim(), 3);
        let m = Matrix::from_i64(&k, &[&[1, 2], &[2, 4]]);
        let kb = m.kernel_basis();
        assert_eq!(kb.len(), 1);
        assert!(m.mul_vec(&kb[0]).iter().all(|x| *x == 0));
        // proportional to (2, -1)
        assert_eq!(k.mul(&kb[0][0], &k.from_i64(-1)), k.mul(&kb[0][1], &2));
    }

    #[test]
    fn solving() {
        let k = f101();
        let id = Matrix::identity(&k, 3);
        let b = vec![4, 5, 6];
        assert_eq!(id.solve(&b).unwrap(), b);
        let z = Matrix::zeros(&k, 2, 2);
        assert_eq!(z.solve(&[1, 0]), Err(LinalgError::NoSolution));
        assert!(matches!(z.solve(&[1]), Err(LinalgError::DimensionMismatch { .. })));
        let m = Matrix::from_i64(&k, &[&[1, 1], &[0, 1]]);
        assert_eq!(m.solve(&[3, 2]).unwrap(), vec![1, 2]);
    }

    #[test]
    fn rationals_cross_check() {
        let q = Rationals;
        let m = Matrix::from_i64(&q, &[&[2, 1, 0], &[4, 2, 0], &[0, 0, 3]]);
        assert_eq!(m.rank(), 2);
        let kb = m.kernel_basis();
        assert_eq!(kb.len(), 1);
        assert!(m.mul_vec(&kb[0]).iter().all(|x| q.is_zero(x)));
        let x = m.solve(&[q.from_i64(1), q.from_i64(2), q.from_i64(1)]).unwrap();
        assert_eq!(x[2], q.inv(&q.from_i64(3)).unwrap());
    }

    #[test]
    fn inverse_roundtrip() {
        let k = f101();
        let m = Matrix::from_i64(&k, &[&[1, 2], &[3, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(&k, 2));
        assert!(Matrix::from_i64(&k, &[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn subspace_lattice() {
        let k = f101();
        let u = Subspace::span(&k, 3, &[vec![1, 0, 0], vec![0, 1, 0]]);
        let w = Subspace::span(&k, 3, &[vec![0, 1, 0], vec![0, 0, 1]]);
        let i = u.intersect(&w);
        assert_eq!(i, Subspace::span(&k, 3, &[vec![0, 5, 0]]));
        assert_eq!(u.sum(&w), Subspace::whole(&k, 3));
        assert_eq!(u.complement_of(&i).len(), 1);
    }
}
