use super::free::FreeComplex;
use crate::artin::{FGModule, FiniteLocalAlgebra};
use crate::field::Field;
use crate::linalg::{Matrix, Subspace};
use crate::poly::{GradedQuotientRing, PolyRing, Presentation, Subquotient, Vector};
use crate::ring::{HomologyRing, RMatrix};

/// `sup`, `inf` and amplitude of a complex, read off its homology.
/// A complex with zero homology has neither `sup` nor `inf`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Amplitude {
    pub sup: Option<i32>,
    pub inf: Option<i32>,
}

impl Amplitude {
    pub fn from_nonzero(degrees: impl IntoIterator<Item = i32>) -> Self {
        let ds: Vec<i32> = degrees.into_iter().collect();
        Amplitude { sup: ds.iter().copied().max(), inf: ds.iter().copied().min() }
    }

    pub fn amp(&self) -> Option<i32> {
        Some(self.sup? - self.inf?)
    }

    pub fn is_acyclic(&self) -> bool {
        self.sup.is_none()
    }
}

/// Homology of a free complex over either engine.
pub fn homology<R: HomologyRing>(c: &FreeComplex<R>, i: i32) -> R::Module {
    c.ring().free_homology(c, i)
}

pub fn amplitude<R: HomologyRing>(c: &FreeComplex<R>) -> Amplitude {
    let r = c.ring();
    Amplitude::from_nonzero((c.lo()..=c.hi()).filter(|&i| !r.module_is_zero(&homology(c, i))))
}

/// `A^r` as a k-matrix over the generator-major basis of [`FGModule::free`].
fn power<K: Field>(a: &FiniteLocalAlgebra<K>, m: &FGModule<K>, r: usize) -> FGModule<K> {
    (0..r).fold(FGModule::zero(a), |acc, _| acc.direct_sum(m))
}

/// A bounded complex of modules over a [`FiniteLocalAlgebra`], with
/// differentials given as k-matrices.
#[derive(Clone, Debug)]
pub struct ModuleComplex<K: Field> {
    lo: i32,
    modules: Vec<FGModule<K>>,
    /// `diffs[k]: M_{lo+k} → M_{lo+k-1}`.
    diffs: Vec<Matrix<K>>,
}

impl<K: Field> ModuleComplex<K> {
    /// `N ⊗_A F` for a free complex `F`; `N^{rank F_i}` in degree `i`.
    pub fn tensor_free_with_module(a: &FiniteLocalAlgebra<K>, f: &FreeComplex<FiniteLocalAlgebra<K>>, n: &FGModule<K>) -> Self {
        let k = a.field();
        if f.is_empty() {
            return ModuleComplex { lo: 0, modules: vec![], diffs: vec![] };
        }
        let dn = n.dim();
        let modules: Vec<FGModule<K>> = (f.lo()..=f.hi()).map(|i| power(a, n, f.rank(i))).collect();
        let diffs = (f.lo()..=f.hi())
            .map(|i| {
                let d = f.differential(i);
                let mut m = Matrix::zeros(k, d.rows() * dn, d.cols() * dn);
                for r in 0..d.rows() {
                    for c in 0..d.cols() {
                        let e = d.get(r, c);
                        if !a.is_zero(e) {
                            m.set_block(r * dn, c * dn, &n.act_matrix(e));
                        }
                    }
                }
                m
            })
            .collect();
        ModuleComplex { lo: f.lo(), modules, diffs }
    }

    /// The free complex itself, viewed as a complex of modules.
    pub fn from_free(a: &FiniteLocalAlgebra<K>, f: &FreeComplex<FiniteLocalAlgebra<K>>) -> Self {
        Self::tensor_free_with_module(a, f, &FGModule::regular(a))
    }

    /// `Hom_A(M, F) = Hom_A(M, A) ⊗_A F` for a free complex `F`.
    pub fn hom_from_module(a: &FiniteLocalAlgebra<K>, m: &FGModule<K>, f: &FreeComplex<FiniteLocalAlgebra<K>>) -> Self {
        Self::tensor_free_with_module(a, f, &m.dual(a).module)
    }

    pub fn lo(&self) -> i32 {
        self.lo
    }
    pub fn hi(&self) -> i32 {
        self.lo + self.modules.len() as i32 - 1
    }

    pub fn module(&self, i: i32) -> Option<&FGModule<K>> {
        if i < self.lo || i > self.hi() {
            None
        } else {
            Some(&self.modules[(i - self.lo) as usize])
        }
    }

    fn dim(&self, i: i32) -> usize {
        self.module(i).map_or(0, |m| m.dim())
    }

    fn differential(&self, i: i32, field: &K) -> Matrix<K> {
        if i > self.lo && i <= self.hi() {
            self.diffs[(i - self.lo) as usize].clone()
        } else {
            Matrix::zeros(field, self.dim(i - 1), self.dim(i))
        }
    }

    pub fn check_d_squared(&self, a: &FiniteLocalAlgebra<K>) -> bool {
        let k = a.field();
        (self.lo + 1..=self.hi()).all(|i| self.differential(i - 1, k).mul(&self.differential(i, k)).is_zero())
    }

    pub fn homology(&self, a: &FiniteLocalAlgebra<K>, i: i32) -> FGModule<K> {
        let k = a.field();
        let Some(m) = self.module(i) else {
            return FGModule::zero(a);
        };
        let z = if self.dim(i - 1) == 0 || m.dim() == 0 {
            Subspace::whole(k, m.dim())
        } else {
            Subspace::kernel(&self.differential(i, k))
        };
        let b = if self.dim(i + 1) == 0 || m.dim() == 0 {
            Subspace::zero(k, m.dim())
        } else {
            Subspace::image(&self.differential(i + 1, k))
        };
        m.subquotient(&z, &b)
    }

    pub fn homology_dims(&self, a: &FiniteLocalAlgebra<K>) -> Vec<(i32, usize)> {
        (self.lo..=self.hi()).map(|i| (i, self.homology(a, i).dim())).collect()
    }

    pub fn amplitude(&self, a: &FiniteLocalAlgebra<K>) -> Amplitude {
        Amplitude::from_nonzero(self.homology_dims(a).into_iter().filter(|(_, d)| *d > 0).map(|(i, _)| i))
    }

    /// `Σ (-1)^i dim M_i`.
    pub fn euler_characteristic(&self) -> i64 {
        (self.lo..=self.hi()).map(|i| if i.rem_euclid(2) == 0 { 1 } else { -1 } * self.dim(i) as i64).sum()
    }
}

/// One term of a [`GradedComplex`]: the subquotient `(N + U)/U` of a graded
/// free module.
#[derive(Clone, Debug)]
struct GradedTerm<K: Field> {
    shifts: Vec<i32>,
    /// `None` means the whole ambient module.
    gens: Option<Vec<Vector<K>>>,
    rels: Vec<Vector<K>>,
}

/// A bounded complex of graded subquotients of free modules over a
/// [`GradedQuotientRing`], with differentials induced by maps of the
/// ambient free modules.
#[derive(Clone, Debug)]
pub struct GradedComplex<K: Field> {
    lo: i32,
    terms: Vec<GradedTerm<K>>,
    /// `diffs[k]` on the ambient modules, degree `lo + k` to `lo + k - 1`.
    diffs: Vec<RMatrix<crate::poly::PolyOf<K>>>,
}

fn kron_identity<K: Field>(a: &GradedQuotientRing<K>, d: &RMatrix<crate::poly::PolyOf<K>>, m: usize) -> RMatrix<crate::poly::PolyOf<K>> {
    let mut out = RMatrix::zeros(a, d.rows() * m, d.cols() * m);
    for r in 0..d.rows() {
        for c in 0..d.cols() {
            let e = d.get(r, c);
            if e.is_zero() {
                continue;
            }
            for j in 0..m {
                out.set(r * m + j, c * m + j, e.clone());
            }
        }
    }
    out
}

impl<K: Field> GradedComplex<K> {
    pub fn from_free(f: &FreeComplex<GradedQuotientRing<K>>) -> Self {
        Self::tensor_with_module(f, &Presentation::free(vec![0]))
    }

    /// `M ⊗_A F`; generator `j` of `M` in block `b` sits at `b·m + j`.
    pub fn tensor_with_module(f: &FreeComplex<GradedQuotientRing<K>>, m: &Presentation<K>) -> Self {
        let a = f.ring();
        let r = m.rank();
        if f.is_empty() {
            return GradedComplex { lo: 0, terms: vec![], diffs: vec![] };
        }
        let terms = (f.lo()..=f.hi())
            .map(|i| {
                let degs = f.degrees(i);
                let shifts: Vec<i32> = degs.iter().flat_map(|d| m.shifts.iter().map(move |s| d + s)).collect();
                let mut rels = Vec::new();
                for b in 0..degs.len() {
                    for u in &m.relations {
                        let mut v = vec![a.ring().zero(); degs.len() * r];
                        for (j, p) in u.iter().enumerate() {
                            v[b * r + j] = p.clone();
                        }
                        rels.push(v);
                    }
                }
                GradedTerm { shifts, gens: None, rels }
            })
            .collect();
        let diffs = (f.lo()..=f.hi()).map(|i| kron_identity(a, &f.differential(i), r)).collect();
        GradedComplex { lo: f.lo(), terms, diffs }
    }

    /// `Hom_A(M, F)` as a subcomplex of `Hom_A(A^m, F)`; the map sending
    /// generator `j` of `M` into block `b` sits at `b·m + j`.
    pub fn hom_from_module(m: &Presentation<K>, f: &FreeComplex<GradedQuotientRing<K>>) -> Self {
        let a = f.ring();
        let r = m.rank();
        if f.is_empty() {
            return GradedComplex { lo: 0, terms: vec![], diffs: vec![] };
        }
        let hom_gens = hom_to_ring(a, m);
        let terms = (f.lo()..=f.hi())
            .map(|i| {
                let degs = f.degrees(i);
                let shifts: Vec<i32> = degs.iter().flat_map(|d| m.shifts.iter().map(move |s| d - s)).collect();
                let mut gens = Vec::new();
                for b in 0..degs.len() {
                    for phi in &hom_gens {
                        let mut v = vec![a.ring().zero(); degs.len() * r];
                        for (j, p) in phi.iter().enumerate() {
                            v[b * r + j] = p.clone();
                        }
                        gens.push(v);
                    }
                }
                GradedTerm { shifts, gens: Some(gens), rels: vec![] }
            })
            .collect();
        let diffs = (f.lo()..=f.hi()).map(|i| kron_identity(a, &f.differential(i), r)).collect();
        GradedComplex { lo: f.lo(), terms, diffs }
    }

    pub fn lo(&self) -> i32 {
        self.lo
    }
    pub fn hi(&self) -> i32 {
        self.lo + self.terms.len() as i32 - 1
    }

    fn term(&self, i: i32) -> Option<&GradedTerm<K>> {
        if i < self.lo || i > self.hi() {
            None
        } else {
            Some(&self.terms[(i - self.lo) as usize])
        }
    }

    fn generators(&self, a: &GradedQuotientRing<K>, i: i32) -> Vec<Vector<K>> {
        let Some(t) = self.term(i) else { return vec![] };
        let raw = match &t.gens {
            Some(g) => g.clone(),
            None => (0..t.shifts.len()).map(|j| a.ring().unit_vector(t.shifts.len(), j)).collect(),
        };
        raw.iter()
            .map(|v| a.reduce_vector(v))
            .filter(|v| !PolyRing::<K>::vector_is_zero(v))
            .collect()
    }

    fn relations(&self, a: &GradedQuotientRing<K>, i: i32) -> Vec<Vector<K>> {
        let Some(t) = self.term(i) else { return vec![] };
        t.rels
            .iter()
            .map(|v| a.reduce_vector(v))
            .filter(|v| !PolyRing::<K>::vector_is_zero(v))
            .collect()
    }

    pub fn homology(&self, a: &GradedQuotientRing<K>, i: i32) -> Presentation<K> {
        let Some(t) = self.term(i) else {
            return Presentation::free(vec![]);
        };
        let gens = self.generators(a, i);
        if gens.is_empty() {
            return Presentation::free(vec![]);
        }
        let deg = |v: &Vector<K>, s: &[i32]| PolyRing::<K>::vector_degree(v, s).unwrap_or(0);
        // Cycles: combinations of N_i whose boundary lies in U_{i-1}.
        let cycles: Vec<Vector<K>> = match self.term(i - 1) {
            Some(below) if !below.shifts.is_empty() => {
                let d = &self.diffs[(i - self.lo) as usize];
                let mut cols: Vec<Vector<K>> = gens.iter().map(|g| d.mul_vec(a, g)).collect();
                let mut src: Vec<i32> = gens.iter().map(|g| deg(g, &t.shifts)).collect();
                let rels_below = self.relations(a, i - 1);
                src.extend(rels_below.iter().map(|u| deg(u, &below.shifts)));
                cols.extend(rels_below);
                let syz = a.syzygies_graded(below.shifts.len(), Some(&below.shifts), Some(&src), &cols);
                syz.iter()
                    .map(|s| {
                        let mut v = vec![a.ring().zero(); t.shifts.len()];
                        for (c, g) in s.iter().zip(&gens) {
                            if !c.is_zero() {
                                v = a.ring().vector_add(&v, &a.ring().vector_scale(g, c));
                            }
                        }
                        a.reduce_vector(&v)
                    })
                    .filter(|v| !PolyRing::<K>::vector_is_zero(v))
                    .collect()
            }
            _ => gens,
        };
        let mut rels = self.relations(a, i);
        if self.term(i + 1).is_some() {
            let d = &self.diffs[(i + 1 - self.lo) as usize];
            rels.extend(
                self.generators(a, i + 1)
                    .iter()
                    .map(|g| a.reduce_vector(&d.mul_vec(a, g)))
                    .filter(|v| !PolyRing::<K>::vector_is_zero(v)),
            );
        }
        Subquotient { shifts: t.shifts.clone(), gens: cycles, rels }.to_presentation(a)
    }

    pub fn amplitude(&self, a: &GradedQuotientRing<K>) -> Amplitude {
        Amplitude::from_nonzero((self.lo..=self.hi()).filter(|&i| !self.homology(a, i).is_zero(a)))
    }
}

/// Generators of `Hom_A(M, A) ⊆ A^m`: images of the generators of `M`,
/// homogeneous of degree `-shift_j` in coordinate `j`.
pub fn hom_to_ring<K: Field>(a: &GradedQuotientRing<K>, m: &Presentation<K>) -> Vec<Vector<K>> {
    let r = m.rank();
    if m.relations.is_empty() {
        return (0..r).map(|j| a.ring().unit_vector(r, j)).collect();
    }
    let rels: Vec<&Vector<K>> = m.relations.iter().collect();
    let cols: Vec<Vector<K>> = (0..r).map(|j| rels.iter().map(|u| u[j].clone()).collect()).collect();
    let target: Vec<i32> = rels
        .iter()
        .map(|u| -PolyRing::<K>::vector_degree(u, &m.shifts).unwrap_or(0))
        .collect();
    let src: Vec<i32> = m.shifts.iter().map(|s| -s).collect();
    a.syzygies_graded(rels.len(), Some(&target), Some(&src), &cols)
}

impl<K: Field> FiniteLocalAlgebra<K> {
    pub(crate) fn free_complex_homology(&self, c: &FreeComplex<Self>, i: i32) -> FGModule<K> {
        ModuleComplex::from_free(self, c).homology(self, i)
    }
}

impl<K: Field> GradedQuotientRing<K> {
    pub(crate) fn free_complex_homology(&self, c: &FreeComplex<Self>, i: i32) -> Presentation<K> {
        GradedComplex::from_free(c).homology(self, i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::KoszulComplex;
    use crate::field::PrimeField;
    use crate::poly::MonomialOrder;

    fn pring(names: &[&str]) -> PolyRing<PrimeField> {
        PolyRing::new(PrimeField::new(101).unwrap(), names, MonomialOrder::GrevLex)
    }

    #[test]
    fn koszul_homology_on_a_regular_sequence() {
        let r = pring(&["x", "y"]);
        let a = GradedQuotientRing::polynomial_ring(r.clone());
        let k = KoszulComplex::new(&a, &[r.var(0), r.var(1)]);
        let amp = amplitude(k.complex());
        assert_eq!(amp, Amplitude { sup: Some(0), inf: Some(0) });
        assert!(homology(k.complex(), 0).cyclic_iso(&a, &[r.var(0), r.var(1)]));
    }

    #[test]
    fn koszul_h1_of_x2_xy() {
        let r = pring(&["x", "y"]);
        let a = GradedQuotientRing::polynomial_ring(r.clone());
        let k = KoszulComplex::new(&a, &r.parse_list("x^2, x*y").unwrap());
        let h1 = homology(k.complex(), 1);
        assert_eq!(h1.num_generators(&a), 1);
        assert!(h1.cyclic_iso(&a, &[r.var(0)]));
        assert!(homology(k.complex(), 2).is_zero(&a));
    }

    #[test]
    fn artinian_koszul_top_homology_is_annihilator() {
        let r = pring(&["x", "y", "z"]);
        let rels = r.parse_list("x^2, y^2 + x*z, z^2").unwrap();
        let a = FiniteLocalAlgebra::from_presentation(&r, &rels).unwrap();
        let xs: Vec<_> = ["x", "y", "z"].iter().map(|v| a.parse(v).unwrap()).collect();
        let k = KoszulComplex::new(&a, &xs);
        let amp = amplitude(k.complex());
        assert_eq!(amp.amp(), Some(3));
        let h3 = homology(k.complex(), 3);
        assert_eq!(h3.dim(), a.annihilator_of(&a.ideal(&xs)).dim());
        let mc = ModuleComplex::from_free(&a, k.complex());
        assert!(mc.check_d_squared(&a));
        let chi: i64 = mc.homology_dims(&a).iter().map(|(i, d)| if i % 2 == 0 { *d as i64 } else { -(*d as i64) }).sum();
        assert_eq!(chi, mc.euler_characteristic());
    }

    #[test]
    fn hom_complex_of_a_cyclic_module() {
        // A = k[x,y]/(xy), M = A/(x), K = K(x; A).
        let r = pring(&["x", "y"]);
        let a = GradedQuotientRing::new(r.clone(), vec![r.parse("x*y").unwrap()]).unwrap();
        let m = Presentation::cyclic(&[r.var(0)]);
        let k = KoszulComplex::new(&a, &[r.var(0)]);
        let h = GradedComplex::hom_from_module(&m, k.complex());
        let amp = h.amplitude(&a);
        assert_eq!(amp.inf, Some(0));
        let t = GradedComplex::tensor_with_module(k.complex(), &m);
        assert_eq!(t.amplitude(&a).amp(), Some(1));
        assert_eq!(amplitude(k.complex()).amp(), Some(1));
    }
}
