//! Finitely presented graded modules over a [`GradedQuotientRing`].

use super::quotient::{krull_dim_of_leads, Colon, GradedQuotientRing};
use super::{Monomial, PolyOf, PolyRing, Vector};
use crate::field::Field;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GradedModuleError {
    #[error("module data is not homogeneous")]
    NotHomogeneous,
}

/// `A^r / U`: generator degrees and relation vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct Presentation<K: Field> {
    pub shifts: Vec<i32>,
    pub relations: Vec<Vector<K>>,
}

/// `(N + U) / U` inside `A^r`, with `N` spanned by `gens` and `U` by `rels`.
#[derive(Clone, Debug, PartialEq)]
pub struct Subquotient<K: Field> {
    pub shifts: Vec<i32>,
    pub gens: Vec<Vector<K>>,
    pub rels: Vec<Vector<K>>,
}

impl<K: Field> Presentation<K> {
    pub fn free(shifts: Vec<i32>) -> Self {
        Presentation { shifts, relations: Vec::new() }
    }

    /// `A/J` as a cyclic module generated in degree 0.
    pub fn cyclic(gens: &[PolyOf<K>]) -> Self {
        Presentation { shifts: vec![0], relations: gens.iter().map(|g| vec![g.clone()]).collect() }
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.relations.iter().all(|r| PolyRing::<K>::vector_is_homogeneous(r, &self.shifts))
    }

    /// Removes generators made redundant by relations with a unit entry,
    /// so that the rank equals the minimal number of generators.
    pub fn minimize(&self, a: &GradedQuotientRing<K>) -> Presentation<K> {
        let ring = a.ring();
        let k = ring.field();
        let mut shifts = self.shifts.clone();
        let mut rels: Vec<Vector<K>> = self
            .relations
            .iter()
            .map(|r| a.reduce_vector(r))
            .filter(|r| !PolyRing::<K>::vector_is_zero(r))
            .collect();
        loop {
            let found = rels.iter().enumerate().find_map(|(ri, r)| {
                r.iter()
                    .position(|p| !p.is_zero() && p.degree() == Some(0))
                    .map(|c| (ri, c))
            });
            let Some((ri, c)) = found else { break };
            let rho = rels.remove(ri);
            let u_inv = k.inv(&rho[c].terms()[0].1).unwrap();
            for s in rels.iter_mut() {
                if s[c].is_zero() {
                    continue;
                }
                let factor = ring.scale(&s[c], &u_inv);
                let t = ring.vector_scale(&rho, &factor);
                *s = a.reduce_vector(&ring.vector_sub(s, &t));
            }
            for s in rels.iter_mut() {
                s.remove(c);
            }
            shifts.remove(c);
            rels.retain(|r| !PolyRing::<K>::vector_is_zero(r));
        }
        Presentation { shifts, relations: rels }
    }

    pub fn num_generators(&self, a: &GradedQuotientRing<K>) -> usize {
        self.minimize(a).rank()
    }

    pub fn is_zero(&self, a: &GradedQuotientRing<K>) -> bool {
        self.num_generators(a) == 0
    }

    /// `ann_A(M) = {a : a·e_c ∈ U for all c}`.
    pub fn annihilator(&self, a: &GradedQuotientRing<K>) -> Colon<K::Elem> {
        let m = self.minimize(a);
        let r = m.rank();
        if r == 0 {
            return Colon::Whole;
        }
        let ring = a.ring();
        let big = r * r;
        let mut cols: Vec<Vector<K>> = Vec::new();
        let mut diag = vec![ring.zero(); big];
        for c in 0..r {
            diag[c * r + c] = ring.one();
        }
        cols.push(diag);
        for c in 0..r {
            for u in &m.relations {
                let mut v = vec![ring.zero(); big];
                for (i, p) in u.iter().enumerate() {
                    v[c * r + i] = p.clone();
                }
                cols.push(v);
            }
        }
        let shifts: Vec<i32> = (0..big).map(|i| m.shifts[i % r] - m.shifts[i / r]).collect();
        let syz = a.syzygies(big, Some(&shifts), &cols);
        let firsts: Vec<PolyOf<K>> = syz.into_iter().map(|s| s[0].clone()).collect();
        Colon::Ideal(a.minimize_ideal(&firsts))
    }

    /// Whether `M ≅ A/J`: `M` is cyclic and `ann(M) = J`.
    pub fn cyclic_iso(&self, a: &GradedQuotientRing<K>, j: &[PolyOf<K>]) -> bool {
        if self.num_generators(a) != 1 {
            return false;
        }
        let ann = a.colon_generators(&self.annihilator(a));
        a.ideal_eq(&ann, j)
    }

    fn standard_terms(&self, a: &GradedQuotientRing<K>) -> (super::ModuleGb<K>, bool) {
        let gb = a.submodule_gb(self.rank(), Some(&self.shifts), &self.relations);
        let n = a.nvars();
        let finite = (0..self.rank()).all(|c| {
            let leads: Vec<Monomial> = gb
                .leading_terms()
                .iter()
                .filter(|l| l.0 == c)
                .map(|l| l.1.clone())
                .collect();
            krull_dim_of_leads(n, &leads) == 0
        });
        (gb, finite)
    }

    /// `dim_k M` when finite.
    pub fn length(&self, a: &GradedQuotientRing<K>) -> Option<u64> {
        let (gb, finite) = self.standard_terms(a);
        if !finite {
            return None;
        }
        let n = a.nvars();
        let mut total = 0u64;
        for c in 0..self.rank() {
            for d in 0.. {
                let cnt = Monomial::all_of_degree(n, d)
                    .iter()
                    .filter(|m| gb.is_standard(c, m))
                    .count() as u64;
                if cnt == 0 {
                    break;
                }
                total += cnt;
            }
        }
        Some(total)
    }

    /// `dim_k M_d` for `d` in `from..=to`.
    pub fn hilbert_function(&self, a: &GradedQuotientRing<K>, from: i32, to: i32) -> Vec<u64> {
        let (gb, _) = self.standard_terms(a);
        let n = a.nvars();
        (from..=to)
            .map(|d| {
                (0..self.rank())
                    .map(|c| {
                        let e = d - self.shifts[c];
                        if e < 0 {
                            return 0;
                        }
                        Monomial::all_of_degree(n, e as u32)
                            .iter()
                            .filter(|m| gb.is_standard(c, m))
                            .count() as u64
                    })
                    .sum()
            })
            .collect()
    }

    pub fn render(&self, ring: &PolyRing<K>) -> String {
        let rels: Vec<String> = self.relations.iter().map(|r| ring.render_vector(r)).collect();
        format!("A^{} / ({})", self.rank(), rels.join(", "))
    }
}

impl<K: Field> Subquotient<K> {
    /// A presentation of the subquotient on its given generators, minimized.
    pub fn to_presentation(&self, a: &GradedQuotientRing<K>) -> Presentation<K> {
        let degree = |g: &Vector<K>| PolyRing::<K>::vector_degree(g, &self.shifts).unwrap_or(0);
        let gen_shifts: Vec<i32> = self.gens.iter().map(degree).collect();
        let mut cols = self.gens.clone();
        cols.extend(self.rels.iter().cloned());
        let src: Vec<i32> = cols.iter().map(degree).collect();
        let syz = a.syzygies_graded(self.shifts.len(), Some(&self.shifts), Some(&src), &cols);
        let ng = self.gens.len();
        let relations: Vec<Vector<K>> = syz
            .into_iter()
            .map(|s| s[..ng].to_vec())
            .filter(|s| !PolyRing::<K>::vector_is_zero(s))
            .collect();
        Presentation { shifts: gen_shifts, relations }.minimize(a)
    }
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
    fn cyclic_module_counts() {
        let a = qring(&["x", "y"], &[]);
        let r = a.ring().clone();
        let m = Presentation::cyclic(&[r.var(0), r.var(1)]);
        assert_eq!(m.num_generators(&a), 1);
        assert_eq!(m.length(&a), Some(1));
        assert!(m.cyclic_iso(&a, &[r.var(0), r.var(1)]));
        let free = Presentation::<PrimeField>::free(vec![0, 0, 1]);
        assert_eq!(free.num_generators(&a), 3);
        assert_eq!(free.length(&a), None);
    }

    #[test]
    fn unit_relations_are_pruned() {
        let a = qring(&["x", "y"], &[]);
        let r = a.ring().clone();
        let m = Presentation {
            shifts: vec![1, 0],
            relations: vec![vec![r.one(), r.var(0)], vec![r.zero(), r.var(1)]],
        };
        assert!(m.is_homogeneous());
        let min = m.minimize(&a);
        assert_eq!(min.rank(), 1);
        assert!(min.cyclic_iso(&a, &[r.var(1)]));
    }

    #[test]
    fn syzygy_module_of_x2_xy_is_cyclic() {
        let a = qring(&["x", "y"], &[]);
        let r = a.ring().clone();
        let cols = vec![vec![r.parse("x^2").unwrap()], vec![r.parse("x*y").unwrap()]];
        let syz = a.syzygies(1, Some(&[0]), &cols);
        let kept = a.minimal_generators(2, &[2, 2], &syz);
        assert_eq!(kept.len(), 1);
    }

    #[test]
    fn annihilator_of_a_noncyclic_module() {
        let a = qring(&["x", "y"], &[]);
        let r = a.ring().clone();
        // A/(x) ⊕ A/(y): annihilator (xy).
        let m = Presentation {
            shifts: vec![0, 0],
            relations: vec![vec![r.var(0), r.zero()], vec![r.zero(), r.var(1)]],
        };
        let ann = a.colon_generators(&m.annihilator(&a));
        assert!(a.ideal_eq(&ann, &[r.parse("x*y").unwrap()]));
    }
}
