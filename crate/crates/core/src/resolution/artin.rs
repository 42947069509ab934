use super::{ext_vanishing, find_period, Certificate, Checked, GDim, GDimEstimate, PeriodicityCertificate, SeriesPrefix};
use crate::artin::{Elem, FGModule, FiniteLocalAlgebra};
use crate::complex::FreeComplex;
use crate::field::Field;
use crate::linalg::{Matrix, Subspace};
use crate::ring::RMatrix;

/// A minimal free resolution over a [`FiniteLocalAlgebra`], computed
/// lazily.
///
/// Each `d_{i+1}` is a function of `d_i` alone (generators of the kernel
/// are the echelon basis vectors completing `m·ker d_i`), so a literal
/// repetition `d_{s+p} = d_s` repeats forever.
#[derive(Clone, Debug)]
pub struct ArtinianResolution<K: Field> {
    algebra: FiniteLocalAlgebra<K>,
    module: FGModule<K>,
    /// `dim M × b_0·dim A`.
    augmentation: Matrix<K>,
    betti: Vec<usize>,
    /// `diffs[i - 1] = d_i: A^{b_i} → A^{b_{i-1}}`.
    diffs: Vec<RMatrix<Elem<K>>>,
    terminated: bool,
}

/// The k-matrix of an A-matrix on generator-major coordinates.
pub(crate) fn k_matrix<K: Field>(a: &FiniteLocalAlgebra<K>, n: &FGModule<K>, d: &RMatrix<Elem<K>>) -> Matrix<K> {
    let dn = n.dim();
    let mut m = Matrix::zeros(a.field(), d.rows() * dn, d.cols() * dn);
    for r in 0..d.rows() {
        for c in 0..d.cols() {
            let e = d.get(r, c);
            if !a.is_zero(e) {
                m.set_block(r * dn, c * dn, &n.act_matrix(e));
            }
        }
    }
    m
}

/// `Hom(d, N)` on `N^{rows} → N^{cols}`: `(n_r) ↦ (Σ_r d[r][c]·n_r)_c`.
fn k_matrix_dual<K: Field>(a: &FiniteLocalAlgebra<K>, n: &FGModule<K>, d: &RMatrix<Elem<K>>) -> Matrix<K> {
    let dn = n.dim();
    let mut m = Matrix::zeros(a.field(), d.cols() * dn, d.rows() * dn);
    for r in 0..d.rows() {
        for c in 0..d.cols() {
            let e = d.get(r, c);
            if !a.is_zero(e) {
                m.set_block(c * dn, r * dn, &n.act_matrix(e));
            }
        }
    }
    m
}

fn power<K: Field>(a: &FiniteLocalAlgebra<K>, n: &FGModule<K>, r: usize) -> FGModule<K> {
    (0..r).fold(FGModule::zero(a), |acc, _| acc.direct_sum(n))
}

/// `m·S` for a subspace of `A^rank`, acting blockwise.
fn m_times_free<K: Field>(a: &FiniteLocalAlgebra<K>, rank: usize, sub: &Subspace<K>) -> Subspace<K> {
    let d = a.dim();
    let mut vs = Vec::new();
    for v in sub.basis() {
        for l in a.mult_table().iter().skip(1) {
            let mut w = Vec::with_capacity(v.len());
            for j in 0..rank {
                w.extend(l.mul_vec(&v[j * d..(j + 1) * d]));
            }
            vs.push(w);
        }
    }
    Subspace::span(a.field(), rank * d, &vs)
}

impl<K: Field> ArtinianResolution<K> {
    pub fn new(a: &FiniteLocalAlgebra<K>, m: &FGModule<K>) -> Self {
        let k = a.field();
        let gens = m.minimal_generators();
        let cols: Vec<Vec<K::Elem>> = gens
            .iter()
            .flat_map(|g| (0..a.dim()).map(move |i| m.act(&a.basis_elem(i), g)))
            .collect();
        let augmentation = Matrix::from_columns(k, m.dim(), &cols);
        ArtinianResolution {
            algebra: a.clone(),
            module: m.clone(),
            augmentation,
            betti: vec![gens.len()],
            diffs: Vec::new(),
            terminated: false,
        }
    }

    /// Resolves up to `F_length` (or until the resolution stops).
    pub fn resolve(a: &FiniteLocalAlgebra<K>, m: &FGModule<K>, length: usize) -> Self {
        let mut r = Self::new(a, m);
        r.extend_to(length);
        r
    }

    pub fn algebra(&self) -> &FiniteLocalAlgebra<K> {
        &self.algebra
    }
    pub fn module(&self) -> &FGModule<K> {
        &self.module
    }

    /// Index of the last computed term.
    pub fn length(&self) -> usize {
        self.diffs.len()
    }

    pub fn is_terminated(&self) -> bool {
        self.terminated
    }

    pub fn betti(&self) -> &[usize] {
        &self.betti
    }

    /// `d_i` for `1 ≤ i ≤ length`.
    pub fn differential(&self, i: usize) -> &RMatrix<Elem<K>> {
        &self.diffs[i - 1]
    }

    pub fn differentials(&self) -> &[RMatrix<Elem<K>>] {
        &self.diffs
    }

    fn last_map(&self) -> Matrix<K> {
        match self.diffs.last() {
            None => self.augmentation.clone(),
            Some(d) => k_matrix(&self.algebra, &FGModule::regular(&self.algebra), d),
        }
    }

    /// Computes one more step; returns false once the resolution has stopped.
    pub fn step(&mut self) -> bool {
        if self.terminated {
            return false;
        }
        let a = &self.algebra;
        let k = a.field();
        let b = *self.betti.last().unwrap();
        let top = b * a.dim();
        let last = self.last_map();
        let ker = if last.rows() == 0 { Subspace::whole(k, top) } else { Subspace::kernel(&last) };
        if ker.is_zero() {
            self.terminated = true;
            return false;
        }
        let gens = ker.complement_of(&m_times_free(a, b, &ker));
        let d = a.dim();
        let cols: Vec<Vec<Elem<K>>> = gens.iter().map(|g| (0..b).map(|j| g[j * d..(j + 1) * d].to_vec()).collect()).collect();
        let mut mat = RMatrix::zeros(a, b, cols.len());
        for (c, col) in cols.into_iter().enumerate() {
            for (r, e) in col.into_iter().enumerate() {
                mat.set(r, c, e);
            }
        }
        self.betti.push(gens.len());
        self.diffs.push(mat);
        true
    }

    pub fn extend_to(&mut self, length: usize) {
        while self.length() < length && self.step() {}
    }

    /// All entries of every differential lie in `m`.
    pub fn is_minimal(&self) -> bool {
        let a = &self.algebra;
        self.diffs.iter().all(|d| (0..d.rows()).all(|r| (0..d.cols()).all(|c| !a.is_unit(d.get(r, c)))))
    }

    /// `im d_{i+1} = ker d_i` (and `im d_1 = ker ε`) at every computed step.
    pub fn is_exact(&self) -> bool {
        let a = &self.algebra;
        let k = a.field();
        let reg = FGModule::regular(a);
        let mut prev = self.augmentation.clone();
        for d in &self.diffs {
            let dm = k_matrix(a, &reg, d);
            let ker = if prev.rows() == 0 { Subspace::whole(k, prev.cols()) } else { Subspace::kernel(&prev) };
            if Subspace::image(&dm) != ker || !prev.mul(&dm).is_zero() {
                return false;
            }
            prev = dm;
        }
        true
    }

    pub fn periodicity(&self) -> Option<PeriodicityCertificate> {
        if self.terminated {
            return Some(PeriodicityCertificate { onset: self.length() + 1, period: 1 });
        }
        find_period(&self.diffs, |_, _| true)
    }

    /// A certificate describing every term beyond the computed ones.
    pub fn tail(&self) -> Option<Certificate> {
        if self.terminated {
            return Some(Certificate::Terminated { length: self.length() });
        }
        find_period(&self.diffs, |_, _| true).map(|p| Certificate::Periodic { onset: p.onset, period: p.period })
    }

    /// The truncated resolution `F_0 ← … ← F_length` as a free complex.
    pub fn complex(&self) -> FreeComplex<FiniteLocalAlgebra<K>> {
        let a = &self.algebra;
        let mut diffs = vec![RMatrix::zeros(a, 0, self.betti[0])];
        diffs.extend(self.diffs.iter().cloned());
        FreeComplex::new(a, 0, &self.betti, None, diffs).expect("resolution shapes")
    }

    /// The `i`-th syzygy module `ker(d_{i-1})` (`Ω^0 = M`).
    pub fn syzygy(&mut self, i: usize) -> FGModule<K> {
        if i == 0 {
            return self.module.clone();
        }
        self.extend_to(i);
        let a = &self.algebra;
        if i > self.length() {
            return FGModule::zero(a);
        }
        let free = FGModule::free(a, self.betti[i - 1]);
        let img = Subspace::image(&k_matrix(a, &FGModule::regular(a), &self.diffs[i - 1]));
        free.subquotient(&img, &Subspace::zero(a.field(), free.dim()))
    }

    fn d_or_zero(&self, i: usize) -> RMatrix<Elem<K>> {
        let a = &self.algebra;
        if i >= 1 && i <= self.length() {
            self.diffs[i - 1].clone()
        } else {
            let rows = if i >= 1 && i - 1 < self.betti.len() { self.betti[i - 1] } else { 0 };
            let cols = self.betti.get(i).copied().unwrap_or(0);
            RMatrix::zeros(a, rows, cols)
        }
    }

    fn b(&self, i: usize) -> usize {
        self.betti.get(i).copied().unwrap_or(0)
    }

    /// `Ext^i_A(M, N)`.
    pub fn ext(&mut self, n: &FGModule<K>, i: usize) -> FGModule<K> {
        self.extend_to(i + 1);
        let a = self.algebra.clone();
        let k = a.field();
        let here = power(&a, n, self.b(i));
        if here.dim() == 0 {
            return FGModule::zero(&a);
        }
        let out = k_matrix_dual(&a, n, &self.d_or_zero(i + 1));
        let z = if out.rows() == 0 { Subspace::whole(k, here.dim()) } else { Subspace::kernel(&out) };
        let inc = k_matrix_dual(&a, n, &self.d_or_zero(i));
        let bnd = if inc.cols() == 0 { Subspace::zero(k, here.dim()) } else { Subspace::image(&inc) };
        here.subquotient(&z, &bnd)
    }

    /// `Tor_i^A(M, N)`.
    pub fn tor(&mut self, n: &FGModule<K>, i: usize) -> FGModule<K> {
        self.extend_to(i + 1);
        let a = self.algebra.clone();
        let k = a.field();
        let here = power(&a, n, self.b(i));
        if here.dim() == 0 {
            return FGModule::zero(&a);
        }
        let out = k_matrix(&a, n, &self.d_or_zero(i));
        let z = if out.rows() == 0 { Subspace::whole(k, here.dim()) } else { Subspace::kernel(&out) };
        let inc = k_matrix(&a, n, &self.d_or_zero(i + 1));
        let bnd = if inc.cols() == 0 { Subspace::zero(k, here.dim()) } else { Subspace::image(&inc) };
        here.subquotient(&z, &bnd)
    }

    /// `dim Tor_i(M, k) = b_i` for `i ≤ len`.
    pub fn poincare_prefix(&mut self, len: usize) -> SeriesPrefix {
        self.extend_to(len);
        let coefficients = (0..=len).map(|i| self.b(i) as u64).collect();
        SeriesPrefix { coefficients, tail: self.tail() }
    }

    /// Whether `Ext^i(M, A) = 0` for all `i ≥ 1`.
    pub fn ext_vanishing_against_ring(&mut self, cutoff: usize) -> Checked {
        self.ext_vanishing_from(1, cutoff)
    }

    /// Whether `Ext^i(M, A) = 0` for all `i ≥ from`.
    pub fn ext_vanishing_from(&mut self, from: usize, cutoff: usize) -> Checked {
        let a = self.algebra.clone();
        if a.is_gorenstein() {
            return Checked::yes(Certificate::SelfInjective, "A is Gorenstein, hence self-injective");
        }
        let reg = FGModule::regular(&a);
        let cell = std::cell::RefCell::new(self);
        ext_vanishing(
            from,
            cutoff,
            |i| cell.borrow_mut().ext(&reg, i).is_zero(),
            |len| {
                let mut r = cell.borrow_mut();
                r.extend_to(len);
                r.tail()
            },
            "M",
        )
    }
}

/// `dim Ext^i(k, N)` for `i ≤ len`.
pub fn bass_prefix<K: Field>(a: &FiniteLocalAlgebra<K>, n: &FGModule<K>, len: usize) -> SeriesPrefix {
    let mut r = ArtinianResolution::new(a, &FGModule::residue_field(a));
    let coefficients = (0..=len).map(|i| r.ext(n, i).dim() as u64).collect();
    SeriesPrefix { coefficients, tail: r.tail() }
}

/// Total reflexivity of `M`: biduality is an isomorphism and
/// `Ext^{≥1}(M, A) = Ext^{≥1}(M*, A) = 0`.
pub fn totally_reflexive_test<K: Field>(a: &FiniteLocalAlgebra<K>, m: &FGModule<K>, cutoff: usize) -> Checked {
    let bidual = m.biduality_map(a);
    if bidual.rows() != bidual.cols() || bidual.rank() != bidual.cols() {
        return Checked::no("the biduality map M -> M** is not an isomorphism");
    }
    let mut res = ArtinianResolution::new(a, m);
    let first = res.ext_vanishing_against_ring(cutoff);
    if first.status != super::Status::CertifiedYes {
        return first;
    }
    let dual = m.dual(a).module;
    let mut dres = ArtinianResolution::new(a, &dual);
    let mut second = dres.ext_vanishing_against_ring(cutoff);
    second.reason = second.reason.replacen("M:", "M*:", 1);
    if second.status != super::Status::CertifiedYes {
        return second;
    }
    let certificate = match (first.certificate, second.certificate) {
        (Certificate::SelfInjective, _) => Certificate::SelfInjective,
        (c, _) => c,
    };
    Checked::yes(certificate, format!("biduality holds; {}; {}", first.reason, second.reason))
}

/// G-dimension over an artinian ring is `0` or infinite.
pub fn gdim_estimate<K: Field>(a: &FiniteLocalAlgebra<K>, m: &FGModule<K>, cutoff: usize) -> (GDimEstimate, Checked) {
    let tr = totally_reflexive_test(a, m, cutoff);
    let value = match tr.status {
        super::Status::CertifiedYes => GDimEstimate { value: GDim::Finite(0), certified: true },
        super::Status::CertifiedNo => GDimEstimate { value: GDim::Infinite, certified: true },
        super::Status::Inconclusive => GDimEstimate { value: GDim::AtLeast(0), certified: false },
    };
    (value, tr)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::poly::{MonomialOrder, PolyRing};
    use crate::resolution::Status;

    fn alg(names: &[&str], rels: &str) -> FiniteLocalAlgebra<PrimeField> {
        let r = PolyRing::new(PrimeField::new(101).unwrap(), names, MonomialOrder::GrevLex);
        FiniteLocalAlgebra::from_presentation(&r, &r.parse_list(rels).unwrap()).unwrap()
    }

    #[test]
    fn residue_field_over_square_zero_ring_doubles() {
        let a = alg(&["x", "y"], "x^2, x*y, y^2");
        let mut r = ArtinianResolution::resolve(&a, &FGModule::residue_field(&a), 4);
        assert_eq!(r.betti(), &[1, 2, 4, 8, 16]);
        assert!(r.is_minimal());
        assert!(r.is_exact());
        assert!(r.periodicity().is_none());
        let k = FGModule::residue_field(&a);
        let dims: Vec<usize> = (0..4).map(|i| r.ext(&k, i).dim()).collect();
        assert_eq!(dims, vec![1, 2, 4, 8]);
        let t = totally_reflexive_test(&a, &k, 4);
        assert_eq!(t.status, Status::CertifiedNo);
    }

    #[test]
    fn ezd_quotient_is_periodic() {
        let a = alg(&["x", "y", "z"], "x^2, y^2 + x*z, z^2");
        let x = a.parse("x").unwrap();
        let m = FGModule::cyclic(&a, &a.ideal(&[x]));
        let mut r = ArtinianResolution::resolve(&a, &m, 4);
        assert_eq!(r.betti(), &[1, 1, 1, 1, 1]);
        let p = r.periodicity().unwrap();
        assert!(p.period <= 2);
        let k = FGModule::residue_field(&a);
        assert_eq!((0..4).map(|i| r.tor(&k, i).dim()).collect::<Vec<_>>(), vec![1, 1, 1, 1]);
        let t = totally_reflexive_test(&a, &m, 10);
        assert_eq!(t.status, Status::CertifiedYes);
    }

    #[test]
    fn free_module_terminates() {
        let a = alg(&["x", "y"], "x^2, x*y, y^2");
        let mut r = ArtinianResolution::resolve(&a, &FGModule::free(&a, 2), 3);
        assert!(r.is_terminated());
        assert_eq!(r.length(), 0);
        assert_eq!(r.tail(), Some(Certificate::Terminated { length: 0 }));
        assert!(r.ext(&FGModule::residue_field(&a), 1).is_zero());
        let t = totally_reflexive_test(&a, &FGModule::free(&a, 1), 3);
        assert_eq!(t.status, Status::CertifiedYes);
    }

    #[test]
    fn periodic_resolution_against_non_gorenstein_ring() {
        // A = k[x,y]/(x^2, xy): M = A/(x) has ann(x) = (x, y), not an EZD.
        let a = alg(&["x", "y"], "x^2, x*y, y^3");
        let m = FGModule::cyclic(&a, &a.ideal(&[a.parse("x").unwrap()]));
        let mut r = ArtinianResolution::new(&a, &m);
        let c = r.ext_vanishing_against_ring(6);
        assert_eq!(c.status, Status::CertifiedNo);
    }
}
