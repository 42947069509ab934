use super::{ext_vanishing, find_period, Certificate, Checked, GDim, GDimEstimate, PeriodicityCertificate, SeriesPrefix, Status};
use crate::complex::{FreeComplex, GradedComplex};
use crate::field::Field;
use crate::poly::{GradedQuotientRing, PolyOf, PolyRing, Presentation, Vector};
use crate::ring::RMatrix;

/// A graded minimal free resolution over a [`GradedQuotientRing`],
/// computed lazily.
///
/// Kernels are reduced Gröbner-basis syzygies, pruned to minimal generators
/// by degree then position, so `d_{i+1}` is determined by `d_i` up to a
/// uniform shift of degrees.
#[derive(Clone, Debug)]
pub struct GradedResolution<K: Field> {
    ring: GradedQuotientRing<K>,
    module: Presentation<K>,
    /// Generator degrees of `F_i`.
    shifts: Vec<Vec<i32>>,
    /// `diffs[i - 1] = d_i`.
    diffs: Vec<RMatrix<PolyOf<K>>>,
    terminated: bool,
}

fn columns_to_matrix<K: Field>(a: &GradedQuotientRing<K>, rows: usize, cols: &[Vector<K>]) -> RMatrix<PolyOf<K>> {
    RMatrix::from_columns(a, rows, cols)
}

impl<K: Field> GradedResolution<K> {
    pub fn new(a: &GradedQuotientRing<K>, m: &Presentation<K>) -> Self {
        let m = m.minimize(a);
        GradedResolution { ring: a.clone(), shifts: vec![m.shifts.clone()], module: m, diffs: Vec::new(), terminated: false }
    }

    pub fn resolve(a: &GradedQuotientRing<K>, m: &Presentation<K>, length: usize) -> Self {
        let mut r = Self::new(a, m);
        r.extend_to(length);
        r
    }

    pub fn ring(&self) -> &GradedQuotientRing<K> {
        &self.ring
    }
    /// The minimized presentation that was resolved.
    pub fn module(&self) -> &Presentation<K> {
        &self.module
    }
    pub fn length(&self) -> usize {
        self.diffs.len()
    }
    pub fn is_terminated(&self) -> bool {
        self.terminated
    }
    pub fn betti(&self) -> Vec<usize> {
        self.shifts.iter().map(|s| s.len()).collect()
    }
    pub fn shifts(&self, i: usize) -> &[i32] {
        &self.shifts[i]
    }
    pub fn differential(&self, i: usize) -> &RMatrix<PolyOf<K>> {
        &self.diffs[i - 1]
    }

    pub fn step(&mut self) -> bool {
        if self.terminated {
            return false;
        }
        let a = &self.ring;
        let top = self.shifts.last().unwrap().clone();
        let candidates: Vec<Vector<K>> = match self.diffs.last() {
            None => self.module.relations.clone(),
            Some(d) => {
                let below = &self.shifts[self.shifts.len() - 2];
                a.syzygies_graded(below.len(), Some(below), Some(&top), &d.columns())
            }
        };
        let candidates: Vec<Vector<K>> = candidates
            .iter()
            .map(|v| a.reduce_vector(v))
            .filter(|v| !PolyRing::<K>::vector_is_zero(v))
            .collect();
        if candidates.is_empty() || top.is_empty() {
            self.terminated = true;
            return false;
        }
        let keep = a.minimal_generators(top.len(), &top, &candidates);
        let cols: Vec<Vector<K>> = keep.iter().map(|&i| candidates[i].clone()).collect();
        let new_shifts: Vec<i32> = cols
            .iter()
            .map(|c| PolyRing::<K>::vector_degree(c, &top).expect("nonzero column"))
            .collect();
        self.diffs.push(columns_to_matrix(a, top.len(), &cols));
        self.shifts.push(new_shifts);
        true
    }

    pub fn extend_to(&mut self, length: usize) {
        while self.length() < length && self.step() {}
    }

    pub fn is_minimal(&self) -> bool {
        let a = &self.ring;
        self.diffs.iter().all(|d| d.columns().iter().flatten().all(|p| a.in_maximal_ideal(p)))
    }

    /// `d_{i-1} d_i = 0` modulo the ring relations at every computed step.
    pub fn is_complex(&self) -> bool {
        let a = &self.ring;
        self.diffs.windows(2).all(|w| w[0].mul(a, &w[1]).is_zero(a))
    }

    fn shift_offset(&self, i: usize, j: usize) -> Option<i32> {
        let (x, y) = (&self.shifts[i], &self.shifts[j]);
        if x.len() != y.len() {
            return None;
        }
        let Some(off) = x.first().zip(y.first()).map(|(a, b)| b - a) else {
            return Some(0);
        };
        x.iter().zip(y).all(|(a, b)| b - a == off).then_some(off)
    }

    pub fn periodicity(&self) -> Option<PeriodicityCertificate> {
        if self.terminated {
            return Some(PeriodicityCertificate { onset: self.length() + 1, period: 1 });
        }
        find_period(&self.diffs, |s, p| {
            let lo = self.shift_offset(s - 1, s + p - 1);
            let hi = self.shift_offset(s, s + p);
            lo.is_some() && lo == hi
        })
    }

    pub fn tail(&self) -> Option<Certificate> {
        if self.terminated {
            return Some(Certificate::Terminated { length: self.length() });
        }
        self.periodicity().map(|p| Certificate::Periodic { onset: p.onset, period: p.period })
    }

    /// `F_0 ← … ← F_length` as a free complex with internal degrees.
    pub fn complex(&self) -> FreeComplex<GradedQuotientRing<K>> {
        let a = &self.ring;
        let betti = self.betti();
        let mut diffs = vec![RMatrix::zeros(a, 0, betti[0])];
        diffs.extend(self.diffs.iter().cloned());
        FreeComplex::new(a, 0, &betti, Some(self.shifts.clone()), diffs).expect("resolution shapes")
    }

    /// `Ω^i M = coker d_{i+1}`, presented on `F_i`.
    pub fn syzygy(&mut self, i: usize) -> Presentation<K> {
        self.extend_to(i + 1);
        if i >= self.shifts.len() {
            return Presentation::free(vec![]);
        }
        let relations = if i < self.length() { self.diffs[i].columns() } else { vec![] };
        Presentation { shifts: self.shifts[i].clone(), relations }
    }

    /// `Ext^i_A(M, N)` as a graded presentation.
    pub fn ext(&mut self, n: &Presentation<K>, i: usize) -> Presentation<K> {
        self.extend_to(i + 1);
        let dual = self.complex().dual();
        GradedComplex::tensor_with_module(&dual, n).homology(&self.ring, -(i as i32))
    }

    /// `Tor_i^A(M, N)`.
    pub fn tor(&mut self, n: &Presentation<K>, i: usize) -> Presentation<K> {
        self.extend_to(i + 1);
        GradedComplex::tensor_with_module(&self.complex(), n).homology(&self.ring, i as i32)
    }

    pub fn poincare_prefix(&mut self, len: usize) -> SeriesPrefix {
        self.extend_to(len);
        let b = self.betti();
        let coefficients = (0..=len).map(|i| b.get(i).copied().unwrap_or(0) as u64).collect();
        SeriesPrefix { coefficients, tail: self.tail() }
    }

    pub fn ext_vanishing_against_ring(&mut self, cutoff: usize) -> Checked {
        self.ext_vanishing_from(1, cutoff)
    }

    /// Whether `Ext^i(M, A) = 0` for all `i ≥ from`.
    pub fn ext_vanishing_from(&mut self, from: usize, cutoff: usize) -> Checked {
        let free = Presentation::free(vec![0]);
        let cell = std::cell::RefCell::new(self);
        ext_vanishing(
            from,
            cutoff,
            |i| {
                let mut r = cell.borrow_mut();
                let a = r.ring.clone();
                r.ext(&free, i).is_zero(&a)
            },
            |len| {
                let mut r = cell.borrow_mut();
                r.extend_to(len);
                r.tail()
            },
            "M",
        )
    }
}

/// The residue field `A/m` as a graded module.
pub fn residue_field<K: Field>(a: &GradedQuotientRing<K>) -> Presentation<K> {
    let vars: Vec<PolyOf<K>> = (0..a.nvars()).map(|i| a.ring().var(i)).collect();
    Presentation::cyclic(&vars)
}

/// `dim Ext^i(k, N)` for `i ≤ len`, when finite.
pub fn bass_prefix<K: Field>(a: &GradedQuotientRing<K>, n: &Presentation<K>, len: usize) -> (Vec<Option<u64>>, Option<Certificate>) {
    let mut r = GradedResolution::new(a, &residue_field(a));
    let coeffs = (0..=len).map(|i| r.ext(n, i).length(a)).collect();
    (coeffs, r.tail())
}

/// `Tr M = coker(d_1^T)` for a minimal presentation of `M`.
pub fn transpose<K: Field>(a: &GradedQuotientRing<K>, m: &Presentation<K>) -> Presentation<K> {
    let mut r = GradedResolution::new(a, m);
    r.extend_to(1);
    if r.length() == 0 {
        return Presentation::free(vec![]);
    }
    let d = r.differential(1).transpose();
    Presentation { shifts: r.shifts(1).iter().map(|s| -s).collect(), relations: d.columns() }
}

/// `M` is totally reflexive iff `Ext^{≥1}(M, A) = 0 = Ext^{≥1}(Tr M, A)`.
pub fn totally_reflexive_test<K: Field>(a: &GradedQuotientRing<K>, m: &Presentation<K>, cutoff: usize) -> Checked {
    let mut res = GradedResolution::new(a, m);
    let first = res.ext_vanishing_against_ring(cutoff);
    if first.status != Status::CertifiedYes {
        return first;
    }
    let t = transpose(a, m);
    let mut tres = GradedResolution::new(a, &t);
    let mut second = tres.ext_vanishing_against_ring(cutoff);
    second.reason = second.reason.replacen("M:", "Tr M:", 1);
    if second.status != Status::CertifiedYes {
        return second;
    }
    Checked::yes(first.certificate, format!("{}; {}", first.reason, second.reason))
}

/// G-dimension from the first totally reflexive syzygy. Finite G-dimension
/// never exceeds `depth_bound` (the depth of the ring).
pub fn gdim_estimate<K: Field>(a: &GradedQuotientRing<K>, m: &Presentation<K>, depth_bound: usize, cutoff: usize) -> GDimEstimate {
    let mut res = GradedResolution::new(a, m);
    let mut all_no = true;
    for g in 0..=depth_bound {
        let omega = res.syzygy(g);
        let tr = totally_reflexive_test(a, &omega, cutoff);
        match tr.status {
            Status::CertifiedYes => {
                return GDimEstimate { value: if all_no { GDim::Finite(g) } else { GDim::AtMost(g) }, certified: all_no };
            }
            Status::Inconclusive => all_no = false,
            Status::CertifiedNo => {}
        }
    }
    if all_no {
        return GDimEstimate { value: GDim::Infinite, certified: true };
    }
    let free = Presentation::free(vec![0]);
    let top = (1..=depth_bound).rev().find(|&i| !res.ext(&free, i).is_zero(a)).unwrap_or(0);
    GDimEstimate { value: GDim::AtLeast(top), certified: false }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::poly::MonomialOrder;

    fn qring(names: &[&str], rels: &str) -> GradedQuotientRing<PrimeField> {
        let r = PolyRing::new(PrimeField::new(101).unwrap(), names, MonomialOrder::GrevLex);
        let rels = if rels.is_empty() { vec![] } else { r.parse_list(rels).unwrap() };
        GradedQuotientRing::new(r, rels).unwrap()
    }

    #[test]
    fn koszul_resolution_of_residue_field() {
        let a = qring(&["x", "y", "z"], "");
        let mut r = GradedResolution::resolve(&a, &residue_field(&a), 5);
        assert_eq!(r.betti(), vec![1, 3, 3, 1]);
        assert!(r.is_terminated());
        assert!(r.is_minimal());
        assert!(r.is_complex());
        assert_eq!(r.shifts(3), &[3]);
        let free = Presentation::free(vec![0]);
        assert!(r.ext(&free, 2).is_zero(&a));
        assert_eq!(r.ext(&free, 3).length(&a), Some(1));
    }

    #[test]
    fn square_zero_ring_betti_doubling() {
        let a = qring(&["x", "y"], "x^2, x*y, y^2");
        let mut r = GradedResolution::resolve(&a, &residue_field(&a), 4);
        assert_eq!(r.betti(), vec![1, 2, 4, 8, 16]);
        let k = residue_field(&a);
        assert_eq!(r.tor(&k, 2).length(&a), Some(4));
    }

    #[test]
    fn dual_numbers_periodic() {
        let a = qring(&["x"], "x^2");
        let r = GradedResolution::resolve(&a, &residue_field(&a), 4);
        assert_eq!(r.betti(), vec![1, 1, 1, 1, 1]);
        let p = r.periodicity().unwrap();
        assert_eq!(p.period, 1);
        let t = totally_reflexive_test(&a, &residue_field(&a), 6);
        assert_eq!(t.status, Status::CertifiedYes);
    }

    #[test]
    fn gdim_of_residue_field_over_polynomial_ring() {
        let a = qring(&["x", "y"], "");
        let g = gdim_estimate(&a, &residue_field(&a), 2, 5);
        assert_eq!(g, GDimEstimate { value: GDim::Finite(2), certified: true });
    }
}
