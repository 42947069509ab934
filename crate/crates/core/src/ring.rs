//! A common interface over the two ring engines, used by the generic
//! complex constructions, and matrices with entries in such a ring.

use std::fmt::Debug;

use crate::artin::{FGModule, FiniteLocalAlgebra};
use crate::complex::FreeComplex;
use crate::field::Field;
use crate::poly::{GradedQuotientRing, PolyOf, Presentation};

pub trait CommRing: Clone + Debug + Send + Sync {
    type Elem: Clone + Debug + PartialEq + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn render(&self, a: &Self::Elem) -> String;

    /// Internal degree of a homogeneous element of a graded ring.
    fn degree(&self, _a: &Self::Elem) -> Option<i32> {
        None
    }

    fn eq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.is_zero(&self.sub(a, b))
    }

    fn signed(&self, a: &Self::Elem, negate: bool) -> Self::Elem {
        if negate {
            self.neg(a)
        } else {
            a.clone()
        }
    }
}

/// Module-level queries each engine answers about homology modules.
pub trait HomologyRing: CommRing {
    type Module: Clone + Debug;

    fn module_is_zero(&self, m: &Self::Module) -> bool;
    /// `dim_k` when finite.
    fn module_length(&self, m: &Self::Module) -> Option<u64>;
    fn module_num_generators(&self, m: &Self::Module) -> usize;
    /// Whether the module is isomorphic to `R/(gens)`.
    fn module_cyclic_iso(&self, m: &Self::Module, gens: &[Self::Elem]) -> bool;
    /// `H_i` of a free complex over this ring.
    fn free_homology(&self, c: &FreeComplex<Self>, i: i32) -> Self::Module;
}

impl<K: Field> CommRing for FiniteLocalAlgebra<K> {
    type Elem = Vec<K::Elem>;

    fn zero(&self) -> Self::Elem {
        FiniteLocalAlgebra::zero(self)
    }
    fn one(&self) -> Self::Elem {
        FiniteLocalAlgebra::one(self)
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        FiniteLocalAlgebra::add(self, a, b)
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        FiniteLocalAlgebra::sub(self, a, b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        FiniteLocalAlgebra::neg(self, a)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        FiniteLocalAlgebra::mul(self, a, b)
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        FiniteLocalAlgebra::is_zero(self, a)
    }
    fn from_i64(&self, v: i64) -> Self::Elem {
        self.scalar(self.field().from_i64(v))
    }
    fn render(&self, a: &Self::Elem) -> String {
        FiniteLocalAlgebra::render(self, a)
    }
}

impl<K: Field> HomologyRing for FiniteLocalAlgebra<K> {
    type Module = FGModule<K>;

    fn module_is_zero(&self, m: &FGModule<K>) -> bool {
        m.is_zero()
    }
    fn module_length(&self, m: &FGModule<K>) -> Option<u64> {
        Some(m.dim() as u64)
    }
    fn module_num_generators(&self, m: &FGModule<K>) -> usize {
        m.num_generators()
    }
    fn module_cyclic_iso(&self, m: &FGModule<K>, gens: &[Self::Elem]) -> bool {
        m.cyclic_iso(self, &self.ideal(gens))
    }
    fn free_homology(&self, c: &FreeComplex<Self>, i: i32) -> FGModule<K> {
        self.free_complex_homology(c, i)
    }
}

impl<K: Field> CommRing for GradedQuotientRing<K> {
    type Elem = PolyOf<K>;

    fn zero(&self) -> Self::Elem {
        self.ring().zero()
    }
    fn one(&self) -> Self::Elem {
        self.ring().one()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.ring().add(a, b)
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.ring().sub(a, b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.ring().neg(a)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        GradedQuotientRing::mul(self, a, b)
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero() || GradedQuotientRing::is_zero(self, a)
    }
    fn from_i64(&self, v: i64) -> Self::Elem {
        self.ring().constant(self.field().from_i64(v))
    }
    fn render(&self, a: &Self::Elem) -> String {
        self.ring().render(a)
    }
    fn degree(&self, a: &Self::Elem) -> Option<i32> {
        if a.is_homogeneous() {
            a.degree().map(|d| d as i32)
        } else {
            None
        }
    }
}

impl<K: Field> HomologyRing for GradedQuotientRing<K> {
    type Module = Presentation<K>;

    fn module_is_zero(&self, m: &Presentation<K>) -> bool {
        m.is_zero(self)
    }
    fn module_length(&self, m: &Presentation<K>) -> Option<u64> {
        m.length(self)
    }
    fn module_num_generators(&self, m: &Presentation<K>) -> usize {
        m.num_generators(self)
    }
    fn module_cyclic_iso(&self, m: &Presentation<K>, gens: &[Self::Elem]) -> bool {
        m.cyclic_iso(self, gens)
    }
    fn free_homology(&self, c: &FreeComplex<Self>, i: i32) -> Presentation<K> {
        self.free_complex_homology(c, i)
    }
}

/// A dense matrix over a [`CommRing`]; operations take the ring explicitly.
#[derive(Clone, Debug, PartialEq)]
pub struct RMatrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone + PartialEq> RMatrix<E> {
    pub fn zeros<R: CommRing<Elem = E>>(ring: &R, rows: usize, cols: usize) -> Self {
        RMatrix { rows, cols, data: vec![ring.zero(); rows * cols] }
    }

    pub fn identity<R: CommRing<Elem = E>>(ring: &R, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    pub fn from_columns<R: CommRing<Elem = E>>(ring: &R, rows: usize, cols: &[Vec<E>]) -> Self {
        let mut m = Self::zeros(ring, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length");
            for (i, v) in c.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    /// A 1×n row.
    pub fn row_vector(entries: Vec<E>) -> Self {
        RMatrix { rows: 1, cols: entries.len(), data: entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }
    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<E>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero<R: CommRing<Elem = E>>(&self, ring: &R) -> bool {
        self.data.iter().all(|x| ring.is_zero(x))
    }

    pub fn mul<R: CommRing<Elem = E>>(&self, ring: &R, other: &RMatrix<E>) -> RMatrix<E> {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut out = Self::zeros(ring, self.rows, other.cols);
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = self.get(i, t);
                if ring.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(t, j);
                    if ring.is_zero(b) {
                        continue;
                    }
                    let v = ring.add(out.get(i, j), &ring.mul(a, b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec<R: CommRing<Elem = E>>(&self, ring: &R, v: &[E]) -> Vec<E> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        (0..self.rows)
            .map(|i| {
                let mut acc = ring.zero();
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !ring.is_zero(a) && !ring.is_zero(x) {
                        acc = ring.add(&acc, &ring.mul(a, x));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add<R: CommRing<Elem = E>>(&self, ring: &R, other: &RMatrix<E>) -> RMatrix<E> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        RMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| ring.add(a, b)).collect(),
        }
    }

    pub fn neg<R: CommRing<Elem = E>>(&self, ring: &R) -> RMatrix<E> {
        RMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| ring.neg(a)).collect() }
    }

    pub fn signed<R: CommRing<Elem = E>>(&self, ring: &R, negate: bool) -> RMatrix<E> {
        if negate {
            self.neg(ring)
        } else {
            self.clone()
        }
    }

    pub fn transpose(&self) -> RMatrix<E> {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        RMatrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &RMatrix<E>) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r0 + i, c0 + j, block.get(i, j).clone());
            }
        }
    }

    /// Equality up to the ring's notion of zero.
    pub fn ring_eq<R: CommRing<Elem = E>>(&self, ring: &R, other: &RMatrix<E>) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.data.iter().zip(&other.data).all(|(a, b)| ring.eq(a, b))
    }

    pub fn render<R: CommRing<Elem = E>>(&self, ring: &R) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| ring.render(self.get(i, j))).collect()).collect()
    }
}
