//! Quotients `P/I` of a polynomial ring by a homogeneous ideal, and ideal
//! arithmetic inside them.

use super::groebner::{buchberger, GroebnerBasis, ModuleGb};
use super::{Monomial, PolyOf, PolyRing, Vector};
use crate::field::Field;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuotientError {
    #[error("relation {0} is not homogeneous")]
    Inhomogeneous(String),
    #[error("relation {0} has a nonzero constant term, so the quotient is not local")]
    NotLocal(String),
    #[error("the quotient is not artinian (the staircase is infinite)")]
    NotArtinian,
}

/// Result of a colon computation `(J : f)` in `A = P/I`.
#[derive(Clone, Debug, PartialEq)]
pub enum Colon<E> {
    /// `f ∈ J`, so the colon is all of `A`.
    Whole,
    /// Minimal homogeneous generators (possibly empty, meaning the zero ideal).
    Ideal(Vec<super::Poly<E>>),
}

/// `A = P/I` for a homogeneous ideal `I` generated in positive degrees.
#[derive(Clone, Debug)]
pub struct GradedQuotientRing<K: Field> {
    ring: PolyRing<K>,
    relations: Vec<PolyOf<K>>,
    gb: GroebnerBasis<K>,
}

impl<K: Field> GradedQuotientRing<K> {
    pub fn new(ring: PolyRing<K>, relations: Vec<PolyOf<K>>) -> Result<Self, QuotientError> {
        let relations: Vec<_> = relations.into_iter().filter(|r| !r.is_zero()).collect();
        for r in &relations {
            if !r.is_homogeneous() {
                return Err(QuotientError::Inhomogeneous(ring.render(r)));
            }
            if r.degree() == Some(0) {
                return Err(QuotientError::NotLocal(ring.render(r)));
            }
        }
        let gb = buchberger(&ring, &relations);
        Ok(GradedQuotientRing { ring, relations, gb })
    }

    pub fn polynomial_ring(ring: PolyRing<K>) -> Self {
        Self::new(ring, Vec::new()).expect("no relations")
    }

    pub fn ring(&self) -> &PolyRing<K> {
        &self.ring
    }
    pub fn field(&self) -> &K {
        self.ring.field()
    }
    pub fn relations(&self) -> &[PolyOf<K>] {
        &self.relations
    }
    pub fn gb(&self) -> &GroebnerBasis<K> {
        &self.gb
    }
    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn reduce(&self, f: &PolyOf<K>) -> PolyOf<K> {
        self.gb.reduce(f)
    }

    pub fn reduce_vector(&self, v: &[PolyOf<K>]) -> Vector<K> {
        v.iter().map(|p| self.reduce(p)).collect()
    }

    pub fn is_zero(&self, f: &PolyOf<K>) -> bool {
        self.gb.contains(f)
    }

    pub fn mul(&self, a: &PolyOf<K>, b: &PolyOf<K>) -> PolyOf<K> {
        self.reduce(&self.ring.mul(a, b))
    }

    /// `A/(elems)`.
    pub fn quotient_by(&self, elems: &[PolyOf<K>]) -> Result<Self, QuotientError> {
        let mut rels = self.relations.clone();
        rels.extend(elems.iter().cloned());
        Self::new(self.ring.clone(), rels)
    }

    /// Number of standard monomials in degrees `0..=upto`.
    pub fn hilbert_function(&self, upto: u32) -> Vec<u64> {
        (0..=upto)
            .map(|d| {
                Monomial::all_of_degree(self.nvars(), d)
                    .iter()
                    .filter(|m| self.gb.is_standard(m))
                    .count() as u64
            })
            .collect()
    }

    /// Krull dimension: the largest set of variables whose monomials all
    /// avoid the leading-term ideal.
    pub fn krull_dim(&self) -> usize {
        krull_dim_of_leads(self.nvars(), &self.gb.leading_monomials())
    }

    pub fn is_artinian(&self) -> bool {
        self.krull_dim() == 0
    }

    /// The standard monomials, by degree and then descending term order.
    pub fn quotient_basis(&self) -> Result<Vec<Monomial>, QuotientError> {
        quotient_basis_of(&self.gb)
    }

    /// Reduced Gröbner basis of `J + I`.
    pub fn ideal_gb(&self, gens: &[PolyOf<K>]) -> GroebnerBasis<K> {
        let mut all = self.relations.clone();
        all.extend(gens.iter().cloned());
        buchberger(&self.ring, &all)
    }

    /// Equality of ideals `J1 + I = J2 + I`.
    pub fn ideal_eq(&self, a: &[PolyOf<K>], b: &[PolyOf<K>]) -> bool {
        self.ideal_gb(a).generators() == self.ideal_gb(b).generators()
    }

    pub fn ideal_contains(&self, gens: &[PolyOf<K>], f: &PolyOf<K>) -> bool {
        self.ideal_gb(gens).contains(f)
    }

    /// Whether `m` (the ideal of the variables) contains every element listed.
    pub fn in_maximal_ideal(&self, f: &PolyOf<K>) -> bool {
        self.ring.field().is_zero(&self.ring.constant_term(f))
    }

    /// Submodule Gröbner basis of `⟨gens⟩ + I·A^rank` computed in `P^rank`.
    pub fn submodule_gb(&self, rank: usize, shifts: Option<&[i32]>, gens: &[Vector<K>]) -> ModuleGb<K> {
        let mut all: Vec<Vector<K>> = gens.to_vec();
        for c in 0..rank {
            for g in self.gb.generators() {
                let mut v = vec![self.ring.zero(); rank];
                v[c] = g;
                all.push(v);
            }
        }
        ModuleGb::compute(&self.ring, rank, shifts, &all)
    }

    /// Generators of the kernel of `A^m → A^rank` sending `e_j` to `cols[j]`.
    ///
    /// `target_shifts` are the degrees of the basis of `A^rank`; they are
    /// used to steer the Gröbner computation when all inputs are homogeneous.
    pub fn syzygies(&self, rank: usize, target_shifts: Option<&[i32]>, cols: &[Vector<K>]) -> Vec<Vector<K>> {
        self.syzygies_graded(rank, target_shifts, None, cols)
    }

    /// [`syzygies`](Self::syzygies) with explicit source degrees, needed when
    /// some columns vanish and so carry no degree of their own.
    pub fn syzygies_graded(
        &self,
        rank: usize,
        target_shifts: Option<&[i32]>,
        source_shifts: Option<&[i32]>,
        cols: &[Vector<K>],
    ) -> Vec<Vector<K>> {
        let m = cols.len();
        if m == 0 {
            return Vec::new();
        }
        let tshift = target_shifts.map(|s| s.to_vec()).unwrap_or_else(|| vec![0; rank]);
        let mut shifts = tshift.clone();
        for (j, col) in cols.iter().enumerate() {
            let own = PolyRing::<K>::vector_degree(col, &tshift);
            shifts.push(source_shifts.map(|s| s[j]).or(own).unwrap_or(0));
        }
        let total = rank + m;
        let mut aug: Vec<Vector<K>> = Vec::with_capacity(m + rank * self.relations.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rank, "column has wrong rank");
            let mut v = vec![self.ring.zero(); total];
            for (c, p) in col.iter().enumerate() {
                v[c] = p.clone();
            }
            v[rank + j] = self.ring.one();
            aug.push(v);
        }
        for c in 0..rank {
            for g in self.gb.generators() {
                let mut v = vec![self.ring.zero(); total];
                v[c] = g;
                aug.push(v);
            }
        }
        let gb = ModuleGb::compute(&self.ring, total, Some(&shifts), &aug);
        let mut out = Vec::new();
        for (e, lead) in gb.elements().iter().zip(gb.leading_terms()) {
            if lead.0 < rank {
                continue;
            }
            let s: Vector<K> = e[rank..].iter().map(|p| self.reduce(p)).collect();
            if !PolyRing::<K>::vector_is_zero(&s) {
                out.push(s);
            }
        }
        out
    }

    /// Indices of a minimal generating subset of the homogeneous vectors
    /// `gens` of `A^rank` (graded Nakayama): lowest degree first, then input
    /// position.
    pub fn minimal_generators(&self, rank: usize, shifts: &[i32], gens: &[Vector<K>]) -> Vec<usize> {
        let mut order: Vec<usize> = (0..gens.len())
            .filter(|&i| !PolyRing::<K>::vector_is_zero(&self.reduce_vector(&gens[i])))
            .collect();
        order.sort_by_key(|&i| (PolyRing::<K>::vector_degree(&gens[i], shifts).unwrap_or(0), i));
        let mut kept: Vec<usize> = Vec::new();
        let mut gb = self.submodule_gb(rank, Some(shifts), &[]);
        for i in order {
            if gb.contains(&gens[i]) {
                continue;
            }
            kept.push(i);
            let vs: Vec<Vector<K>> = kept.iter().map(|&j| gens[j].clone()).collect();
            gb = self.submodule_gb(rank, Some(shifts), &vs);
        }
        kept.sort_unstable();
        kept
    }

    /// Minimal homogeneous generators of the ideal `J` (modulo `I`).
    pub fn minimize_ideal(&self, gens: &[PolyOf<K>]) -> Vec<PolyOf<K>> {
        let vecs: Vec<Vector<K>> = gens.iter().map(|g| vec![self.reduce(g)]).collect();
        self.minimal_generators(1, &[0], &vecs)
            .into_iter()
            .map(|i| vecs[i][0].clone())
            .collect()
    }

    /// `(J : f) = {a ∈ A : a·f ∈ J}`.
    pub fn colon(&self, j: &[PolyOf<K>], f: &PolyOf<K>) -> Colon<K::Elem> {
        if self.ideal_contains(j, f) {
            return Colon::Whole;
        }
        let mut cols: Vec<Vector<K>> = vec![vec![f.clone()]];
        cols.extend(j.iter().map(|g| vec![g.clone()]));
        let syz = self.syzygies(1, Some(&[0]), &cols);
        let firsts: Vec<PolyOf<K>> = syz.into_iter().map(|s| s[0].clone()).collect();
        Colon::Ideal(self.minimize_ideal(&firsts))
    }

    /// `ann_A(f)`; the zero element yields [`Colon::Whole`].
    pub fn annihilator(&self, f: &PolyOf<K>) -> Colon<K::Elem> {
        self.colon(&[], f)
    }

    /// `ann_A(J)` for an ideal `J`, as minimal generators (`Whole` when `J ⊆ I`).
    pub fn annihilator_of_ideal(&self, j: &[PolyOf<K>]) -> Colon<K::Elem> {
        let nonzero: Vec<PolyOf<K>> = j.iter().map(|g| self.reduce(g)).filter(|g| !g.is_zero()).collect();
        if nonzero.is_empty() {
            return Colon::Whole;
        }
        let col: Vector<K> = nonzero.clone();
        let shifts: Vec<i32> = vec![0; nonzero.len()];
        let syz = self.syzygies(nonzero.len(), Some(&shifts), &[col]);
        let firsts: Vec<PolyOf<K>> = syz.into_iter().map(|s| s[0].clone()).collect();
        Colon::Ideal(self.minimize_ideal(&firsts))
    }
}

impl<E: Clone> Colon<E> {
    pub fn is_whole(&self) -> bool {
        matches!(self, Colon::Whole)
    }
}

impl<K: Field> GradedQuotientRing<K> {
    /// Turns a colon result into generators (the whole ring becomes `[1]`).
    pub fn colon_generators(&self, c: &Colon<K::Elem>) -> Vec<PolyOf<K>> {
        match c {
            Colon::Whole => vec![self.ring.one()],
            Colon::Ideal(g) => g.clone(),
        }
    }
}

pub(crate) fn krull_dim_of_leads(n: usize, leads: &[Monomial]) -> usize {
    if leads.iter().any(|m| m.is_one()) {
        return 0;
    }
    let mut best = 0;
    for mask in 0u32..(1u32 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let avoids = leads.iter().all(|m| {
            m.exponents().iter().enumerate().any(|(i, &e)| e > 0 && mask & (1 << i) == 0)
        });
        if avoids {
            best = size;
        }
    }
    best
}

/// Standard monomials of a zero-dimensional Gröbner basis.
pub(crate) fn quotient_basis_of<K: Field>(gb: &GroebnerBasis<K>) -> Result<Vec<Monomial>, QuotientError> {
    let n = gb.ring().nvars();
    if gb.is_unit_ideal() {
        return Ok(Vec::new());
    }
    if krull_dim_of_leads(n, &gb.leading_monomials()) > 0 {
        return Err(QuotientError::NotArtinian);
    }
    let mut out = Vec::new();
    for d in 0.. {
        let mut layer: Vec<Monomial> =
            Monomial::all_of_degree(n, d).into_iter().filter(|m| gb.is_standard(m)).collect();
        if layer.is_empty() {
            break;
        }
        layer.sort_by(|a, b| gb.ring().cmp(b, a));
        out.extend(layer);
    }
    Ok(out)
}

/// Standard-monomial basis of `P/J` for an arbitrary (possibly inhomogeneous)
/// ideal `J`, together with its Gröbner basis.
pub fn quotient_basis<K: Field>(
    ring: &PolyRing<K>,
    gens: &[PolyOf<K>],
) -> Result<(GroebnerBasis<K>, Vec<Monomial>), QuotientError> {
    let gb = buchberger(ring, gens);
    let basis = quotient_basis_of(&gb)?;
    Ok((gb, basis))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::poly::MonomialOrder;

    fn qring(names: &[&str], rels: &[&str]) -> GradedQuotientRing<PrimeField> {
        let r = PolyRing::new(PrimeField::new(101).unwrap(), names, MonomialOrder::GrevLex);
        let rels = rels.iter().map(|s| r.parse(s).unwrap()).collect();
        GradedQuotientRing::new(r, rels).unwrap()
    }

    #[test]
    fn hilbert_functions_and_dimension() {
        let a = qring(&["x", "y", "z"], &["x^2", "y^2 + x*z", "z^2"]);
        assert_eq!(a.hilbert_function(4), vec![1, 3, 3, 1, 0]);
        assert_eq!(a.krull_dim(), 0);
        assert_eq!(a.quotient_basis().unwrap().len(), 8);
        let p = qring(&["x"], &[]);
        assert_eq!(p.hilbert_function(3), vec![1, 1, 1, 1]);
        assert_eq!(p.krull_dim(), 1);
        let b = qring(&["x", "y"], &["x*y"]);
        assert_eq!(b.hilbert_function(4), vec![1, 2, 2, 2, 2]);
        assert_eq!(b.krull_dim(), 1);
        assert_eq!(b.quotient_basis(), Err(QuotientError::NotArtinian));
        let c = qring(&["x", "y", "z"], &["x*y", "x*z"]);
        assert_eq!(c.krull_dim(), 2);
    }

    #[test]
    fn quotient_basis_of_maximal_ideal() {
        let p = qring(&["x"], &["x"]);
        assert_eq!(p.quotient_basis().unwrap(), vec![Monomial::one(1)]);
    }

    #[test]
    fn annihilators() {
        let a = qring(&["x", "y"], &["x*y"]);
        let r = a.ring().clone();
        assert_eq!(a.annihilator(&r.var(0)), Colon::Ideal(vec![r.var(1)]));
        let b = qring(&["x", "y", "z"], &["x*y", "x*z"]);
        let r = b.ring().clone();
        assert_eq!(b.annihilator(&r.var(1)), Colon::Ideal(vec![r.var(0)]));
        let ann_x = b.colon_generators(&b.annihilator(&r.var(0)));
        assert!(b.ideal_eq(&ann_x, &[r.var(1), r.var(2)]));
        let ann_yz = b.colon_generators(&b.annihilator_of_ideal(&[r.var(1), r.var(2)]));
        assert!(b.ideal_eq(&ann_yz, &[r.var(0)]));
        assert!(b.annihilator(&r.zero()).is_whole());
        assert_eq!(b.annihilator(&r.one()), Colon::Ideal(vec![]));
    }

    #[test]
    fn syzygies_of_regular_pair_and_of_x2_xy() {
        let p = qring(&["x", "y"], &[]);
        let r = p.ring().clone();
        let syz = p.syzygies(1, Some(&[0]), &[vec![r.var(0)], vec![r.var(1)]]);
        assert_eq!(syz.len(), 1);
        let s = &syz[0];
        assert!(r.add(&r.mul(&s[0], &r.var(0)), &r.mul(&s[1], &r.var(1))).is_zero());
        assert_eq!(s[0].degree(), Some(1));
        let syz = p.syzygies(1, Some(&[0]), &[vec![r.parse("x^2").unwrap()], vec![r.parse("x*y").unwrap()]]);
        assert_eq!(syz.len(), 1);
        let expect = vec![r.var(1), r.neg(&r.var(0))];
        let s = &syz[0];
        assert!(s == &expect || s == &vec![r.neg(&r.var(1)), r.var(0)]);
        assert!(p.syzygies(1, Some(&[0]), &[vec![r.var(0)]]).is_empty());
    }
}
