//! Buchberger's algorithm for submodules of free modules `P^r`.
//!
//! Vectors are compared position-over-term: the component with the smallest
//! index dominates, and within a component the ring's monomial order decides.
//! Ideals are the rank-one case.

use std::collections::HashSet;

use super::{Monomial, Poly, PolyOf, PolyRing, Vector};
use crate::field::Field;

/// A reduced, monic Gröbner basis of a submodule of `P^r`.
#[derive(Clone, Debug)]
pub struct ModuleGb<K: Field> {
    ring: PolyRing<K>,
    rank: usize,
    shifts: Vec<i32>,
    elems: Vec<Vector<K>>,
    leads: Vec<(usize, Monomial)>,
}

fn lead_of<E: Clone>(v: &[Poly<E>]) -> Option<(usize, Monomial)> {
    v.iter()
        .enumerate()
        .find(|(_, p)| !p.is_zero())
        .map(|(c, p)| (c, p.leading_monomial().unwrap().clone()))
}

fn vec_monic<K: Field>(ring: &PolyRing<K>, v: &[PolyOf<K>]) -> Vector<K> {
    let Some(c) = v.iter().find(|p| !p.is_zero()) else {
        return v.to_vec();
    };
    let inv = ring.field().inv(&c.leading().unwrap().1).unwrap();
    v.iter().map(|p| ring.scale(p, &inv)).collect()
}

/// `v - c·m·g`, touching only components from `from` on.
fn sub_multiple<K: Field>(
    ring: &PolyRing<K>,
    v: &mut [PolyOf<K>],
    g: &[PolyOf<K>],
    m: &Monomial,
    c: &K::Elem,
    from: usize,
) {
    for idx in from..v.len() {
        if g[idx].is_zero() {
            continue;
        }
        let t = ring.mul_term(&g[idx], m, c);
        v[idx] = ring.sub(&v[idx], &t);
    }
}

/// Full reduction of `v` by monic `elems` (skipping index `skip`).
fn reduce_by<K: Field>(
    ring: &PolyRing<K>,
    v: &[PolyOf<K>],
    elems: &[Vector<K>],
    leads: &[(usize, Monomial)],
    skip: Option<usize>,
) -> Vector<K> {
    let mut v = v.to_vec();
    for c in 0..v.len() {
        let mut idx = 0;
        while idx < v[c].terms.len() {
            let (m, coef) = v[c].terms[idx].clone();
            let hit = leads
                .iter()
                .enumerate()
                .find(|(j, (lc, lm))| Some(*j) != skip && *lc == c && lm.divides(&m));
            match hit {
                Some((j, (_, lm))) => {
                    let q = m.div(lm);
                    sub_multiple(ring, &mut v, &elems[j], &q, &coef, c);
                }
                None => idx += 1,
            }
        }
    }
    v
}

impl<K: Field> ModuleGb<K> {
    /// Gröbner basis of the submodule generated by `gens` in `P^rank`.
    /// `shifts` (degree of each basis vector) only steers pair selection.
    pub fn compute(
        ring: &PolyRing<K>,
        rank: usize,
        shifts: Option<&[i32]>,
        gens: &[Vector<K>],
    ) -> Self {
        let shifts = shifts.map(|s| s.to_vec()).unwrap_or_else(|| vec![0; rank]);
        let mut elems: Vec<Vector<K>> = Vec::new();
        let mut leads: Vec<(usize, Monomial)> = Vec::new();
        for g in gens {
            assert_eq!(g.len(), rank, "generator has wrong rank");
            if let Some(l) = lead_of(g) {
                elems.push(vec_monic(ring, g));
                leads.push(l);
            }
        }
        let mut pending: Vec<(usize, usize)> = Vec::new();
        let mut pending_set: HashSet<(usize, usize)> = HashSet::new();
        for j in 0..elems.len() {
            for i in 0..j {
                if leads[i].0 == leads[j].0 {
                    pending.push((i, j));
                    pending_set.insert((i, j));
                }
            }
        }
        let sugar = |leads: &[(usize, Monomial)], i: usize, j: usize| -> i64 {
            leads[i].1.lcm(&leads[j].1).degree() as i64 + shifts[leads[i].0] as i64
        };
        while !pending.is_empty() {
            let (best, _) = pending
                .iter()
                .enumerate()
                .min_by_key(|(_, &(i, j))| (sugar(&leads, i, j), j, i))
                .unwrap();
            let (i, j) = pending.swap_remove(best);
            pending_set.remove(&(i, j));
            let c = leads[i].0;
            let lcm = leads[i].1.lcm(&leads[j].1);
            if rank == 1 && leads[i].1.coprime(&leads[j].1) {
                continue;
            }
            let chain = (0..elems.len()).any(|k| {
                k != i
                    && k != j
                    && leads[k].0 == c
                    && leads[k].1.divides(&lcm)
                    && !pending_set.contains(&(i.min(k), i.max(k)))
                    && !pending_set.contains(&(j.min(k), j.max(k)))
            });
            if chain {
                continue;
            }
            let one = ring.field().one();
            let mut s = vec![Poly::zero(); rank];
            sub_multiple(ring, &mut s, &elems[j], &lcm.div(&leads[j].1), &ring.field().neg(&one), c);
            sub_multiple(ring, &mut s, &elems[i], &lcm.div(&leads[i].1), &one, c);
            let r = reduce_by(ring, &s, &elems, &leads, None);
            if let Some(l) = lead_of(&r) {
                let n = elems.len();
                elems.push(vec_monic(ring, &r));
                leads.push(l);
                for t in 0..n {
                    if leads[t].0 == leads[n].0 {
                        pending.push((t, n));
                        pending_set.insert((t, n));
                    }
                }
            }
        }
        // Interreduce: drop elements whose leading term is divisible by another's.
        let mut keep: Vec<usize> = Vec::new();
        for i in 0..elems.len() {
            let redundant = (0..elems.len()).any(|j| {
                j != i
                    && leads[j].0 == leads[i].0
                    && leads[j].1.divides(&leads[i].1)
                    && (leads[j].1 != leads[i].1 || j < i)
            });
            if !redundant {
                keep.push(i);
            }
        }
        let kept: Vec<Vector<K>> = keep.iter().map(|&i| elems[i].clone()).collect();
        let kept_leads: Vec<(usize, Monomial)> = keep.iter().map(|&i| leads[i].clone()).collect();
        let mut reduced: Vec<(Vector<K>, (usize, Monomial))> = (0..kept.len())
            .map(|i| {
                let r = reduce_by(ring, &kept[i], &kept, &kept_leads, Some(i));
                (vec_monic(ring, &r), kept_leads[i].clone())
            })
            .collect();
        reduced.sort_by(|a, b| {
            a.1 .0.cmp(&b.1 .0).then_with(|| ring.cmp(&a.1 .1, &b.1 .1))
        });
        let (elems, leads) = reduced.into_iter().unzip();
        ModuleGb { ring: ring.clone(), rank, shifts, elems, leads }
    }

    pub fn ring(&self) -> &PolyRing<K> {
        &self.ring
    }
    pub fn rank(&self) -> usize {
        self.rank
    }
    pub fn shifts(&self) -> &[i32] {
        &self.shifts
    }
    pub fn elements(&self) -> &[Vector<K>] {
        &self.elems
    }
    /// `(component, leading monomial)` of each element.
    pub fn leading_terms(&self) -> &[(usize, Monomial)] {
        &self.leads
    }

    /// The unique normal form of `v` modulo the submodule.
    pub fn reduce(&self, v: &[PolyOf<K>]) -> Vector<K> {
        reduce_by(&self.ring, v, &self.elems, &self.leads, None)
    }

    pub fn contains(&self, v: &[PolyOf<K>]) -> bool {
        PolyRing::<K>::vector_is_zero(&self.reduce(v))
    }

    /// Whether every vector of `gens` lies in the submodule.
    pub fn contains_all(&self, gens: &[Vector<K>]) -> bool {
        gens.iter().all(|g| self.contains(g))
    }

    /// Whether monomial `m` in component `c` is a standard (non-leading) term.
    pub fn is_standard(&self, c: usize, m: &Monomial) -> bool {
        !self.leads.iter().any(|(lc, lm)| *lc == c && lm.divides(m))
    }
}

/// A reduced Gröbner basis of an ideal.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<K: Field> {
    inner: ModuleGb<K>,
}

impl<K: Field> GroebnerBasis<K> {
    pub fn ring(&self) -> &PolyRing<K> {
        &self.inner.ring
    }

    pub fn generators(&self) -> Vec<PolyOf<K>> {
        self.inner.elems.iter().map(|v| v[0].clone()).collect()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.inner.leads.iter().map(|l| l.1.clone()).collect()
    }

    pub fn reduce(&self, f: &PolyOf<K>) -> PolyOf<K> {
        self.inner.reduce(std::slice::from_ref(f)).pop().unwrap()
    }

    pub fn contains(&self, f: &PolyOf<K>) -> bool {
        self.reduce(f).is_zero()
    }

    /// True when the ideal is the whole ring.
    pub fn is_unit_ideal(&self) -> bool {
        self.inner.leads.iter().any(|l| l.1.is_one())
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.inner.elems.is_empty()
    }

    pub fn is_standard(&self, m: &Monomial) -> bool {
        self.inner.is_standard(0, m)
    }

    pub fn as_module(&self) -> &ModuleGb<K> {
        &self.inner
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens` in the ring's order.
pub fn buchberger<K: Field>(ring: &PolyRing<K>, gens: &[PolyOf<K>]) -> GroebnerBasis<K> {
    let vecs: Vec<Vector<K>> = gens.iter().map(|g| vec![g.clone()]).collect();
    GroebnerBasis { inner: ModuleGb::compute(ring, 1, None, &vecs) }
}

pub fn normal_form<K: Field>(f: &PolyOf<K>, gb: &GroebnerBasis<K>) -> PolyOf<K> {
    gb.reduce(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::poly::MonomialOrder;

    fn ring(names: &[&str]) -> PolyRing<PrimeField> {
        PolyRing::new(PrimeField::new(101).unwrap(), names, MonomialOrder::GrevLex)
    }

    fn p(r: &PolyRing<PrimeField>, s: &str) -> Poly<u64> {
        r.parse(s).unwrap()
    }

    #[test]
    fn principal_monomial_ideal() {
        let r = ring(&["x", "y"]);
        let gb = buchberger(&r, &[p(&r, "x")]);
        assert_eq!(gb.generators(), vec![p(&r, "x")]);
    }

    #[test]
    fn already_groebner_inputs() {
        let r = ring(&["x", "y"]);
        let gb = buchberger(&r, &[p(&r, "x^2"), p(&r, "x*y")]);
        assert_eq!(gb.generators().len(), 2);
        let r3 = ring(&["x", "y", "z"]);
        let gb = buchberger(&r3, &[p(&r3, "x*y"), p(&r3, "x*z")]);
        assert_eq!(gb.generators().len(), 2);
    }

    #[test]
    fn normal_forms() {
        let r = ring(&["x", "y"]);
        let gb = buchberger(&r, &[p(&r, "x^2")]);
        assert_eq!(normal_form(&p(&r, "x^2 + y"), &gb), p(&r, "y"));
        assert!(normal_form(&r.zero(), &gb).is_zero());
        let r3 = ring(&["x", "y", "z"]);
        let gb = buchberger(&r3, &[p(&r3, "x^2"), p(&r3, "z^2"), p(&r3, "y^2 + x*z")]);
        assert_eq!(normal_form(&p(&r3, "y*(y^2 + x*z)"), &gb), r3.zero());
        assert_eq!(normal_form(&p(&r3, "y^3"), &gb), p(&r3, "-x*y*z"));
    }

    #[test]
    fn groebner_basis_completes_s_pairs() {
        let r = ring(&["x", "y"]);
        // (x^2 - y, x*y - 1) needs new elements.
        let gb = buchberger(&r, &[p(&r, "x^2 - y"), p(&r, "x*y - 1")]);
        assert!(gb.contains(&p(&r, "y^2 - x")));
        assert!(gb.contains(&p(&r, "x^3 - 1")));
        assert!(!gb.contains(&p(&r, "x")));
    }

    #[test]
    fn unit_ideal_detected() {
        let r = ring(&["x", "y"]);
        let gb = buchberger(&r, &[p(&r, "x"), p(&r, "x + 1")]);
        assert!(gb.is_unit_ideal());
        assert_eq!(gb.generators(), vec![r.one()]);
    }
}
