use itertools::Itertools;

use super::free::{ChainMap, FreeComplex};
use crate::ring::{CommRing, RMatrix};

/// The Koszul complex `K(x̲; R)` with its exterior multiplication.
///
/// The basis of `K_p` is the `p`-subsets of `{0, …, n-1}` in lexicographic
/// order, and `d(e_S) = Σ_t (-1)^t x_{s_t} e_{S∖s_t}`.
#[derive(Clone, Debug)]
pub struct KoszulComplex<R: CommRing> {
    ring: R,
    sequence: Vec<R::Elem>,
    subsets: Vec<Vec<Vec<usize>>>,
    complex: FreeComplex<R>,
}

/// A homogeneous element of a Koszul complex: degree and coefficients on the
/// subset basis of that degree.
#[derive(Clone, Debug, PartialEq)]
pub struct KoszulElem<E> {
    pub degree: usize,
    pub coeffs: Vec<E>,
}

/// Sign of the permutation sorting the concatenation `s ++ t`, or `None`
/// if they share an index.
fn wedge_sign(s: &[usize], t: &[usize]) -> Option<bool> {
    let mut inversions = 0usize;
    for a in s {
        for b in t {
            if a == b {
                return None;
            }
            if a > b {
                inversions += 1;
            }
        }
    }
    Some(inversions % 2 == 1)
}

impl<R: CommRing> KoszulComplex<R> {
    pub fn new(ring: &R, sequence: &[R::Elem]) -> Self {
        let n = sequence.len();
        let subsets: Vec<Vec<Vec<usize>>> = (0..=n).map(|p| (0..n).combinations(p).collect()).collect();
        let index = |p: usize, s: &[usize]| subsets[p].iter().position(|t| t == s).unwrap();
        let mut diffs = Vec::with_capacity(n + 1);
        diffs.push(RMatrix::zeros(ring, 0, 1));
        for p in 1..=n {
            let mut m = RMatrix::zeros(ring, subsets[p - 1].len(), subsets[p].len());
            for (j, s) in subsets[p].iter().enumerate() {
                for (t, &st) in s.iter().enumerate() {
                    let rest: Vec<usize> = s.iter().copied().filter(|&v| v != st).collect();
                    m.set(index(p - 1, &rest), j, ring.signed(&sequence[st], t % 2 == 1));
                }
            }
            diffs.push(m);
        }
        let ranks: Vec<usize> = subsets.iter().map(|s| s.len()).collect();
        let degs: Vec<i32> = sequence.iter().map(|x| ring.degree(x).unwrap_or(0)).collect();
        let degrees: Vec<Vec<i32>> =
            subsets.iter().map(|ss| ss.iter().map(|s| s.iter().map(|&i| degs[i]).sum()).collect()).collect();
        let complex = FreeComplex::new(ring, 0, &ranks, Some(degrees), diffs).expect("Koszul shapes");
        KoszulComplex { ring: ring.clone(), sequence: sequence.to_vec(), subsets, complex }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }
    pub fn sequence(&self) -> &[R::Elem] {
        &self.sequence
    }
    pub fn length(&self) -> usize {
        self.sequence.len()
    }
    pub fn complex(&self) -> &FreeComplex<R> {
        &self.complex
    }
    pub fn basis(&self, p: usize) -> &[Vec<usize>] {
        &self.subsets[p]
    }

    pub fn basis_elem(&self, p: usize, j: usize) -> KoszulElem<R::Elem> {
        let mut coeffs = vec![self.ring.zero(); self.subsets[p].len()];
        coeffs[j] = self.ring.one();
        KoszulElem { degree: p, coeffs }
    }

    fn zero_elem(&self, p: usize) -> KoszulElem<R::Elem> {
        KoszulElem { degree: p, coeffs: vec![self.ring.zero(); self.subsets.get(p).map_or(0, |s| s.len())] }
    }

    pub fn differential(&self, a: &KoszulElem<R::Elem>) -> KoszulElem<R::Elem> {
        if a.degree == 0 {
            return KoszulElem { degree: 0, coeffs: vec![] };
        }
        let d = self.complex.differential(a.degree as i32);
        KoszulElem { degree: a.degree - 1, coeffs: d.mul_vec(&self.ring, &a.coeffs) }
    }

    /// The exterior product.
    pub fn multiply(&self, a: &KoszulElem<R::Elem>, b: &KoszulElem<R::Elem>) -> KoszulElem<R::Elem> {
        let r = &self.ring;
        let deg = a.degree + b.degree;
        let mut out = self.zero_elem(deg);
        if deg > self.length() {
            return out;
        }
        for (i, ca) in a.coeffs.iter().enumerate() {
            if r.is_zero(ca) {
                continue;
            }
            for (j, cb) in b.coeffs.iter().enumerate() {
                if r.is_zero(cb) {
                    continue;
                }
                let (s, t) = (&self.subsets[a.degree][i], &self.subsets[b.degree][j]);
                let Some(neg) = wedge_sign(s, t) else { continue };
                let u: Vec<usize> = s.iter().chain(t.iter()).copied().sorted().collect();
                let k = self.subsets[deg].iter().position(|v| *v == u).unwrap();
                out.coeffs[k] = r.add(&out.coeffs[k], &r.signed(&r.mul(ca, cb), neg));
            }
        }
        out
    }

    fn elem_eq(&self, a: &KoszulElem<R::Elem>, b: &KoszulElem<R::Elem>) -> bool {
        a.coeffs.len() == b.coeffs.len() && a.coeffs.iter().zip(&b.coeffs).all(|(x, y)| self.ring.eq(x, y))
    }

    fn elem_add(&self, a: &KoszulElem<R::Elem>, b: &KoszulElem<R::Elem>, negate_b: bool) -> KoszulElem<R::Elem> {
        KoszulElem {
            degree: a.degree,
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| self.ring.add(x, &self.ring.signed(y, negate_b)))
                .collect(),
        }
    }

    /// Leibniz rule `d(ab) = d(a)b + (-1)^{|a|} a d(b)` on every pair of
    /// basis elements.
    pub fn check_leibniz(&self) -> bool {
        let n = self.length();
        for p in 0..=n {
            for q in 0..=n - p {
                for i in 0..self.subsets[p].len() {
                    for j in 0..self.subsets[q].len() {
                        let (a, b) = (self.basis_elem(p, i), self.basis_elem(q, j));
                        let lhs = self.differential(&self.multiply(&a, &b));
                        if p + q == 0 {
                            continue;
                        }
                        let first = if p == 0 { self.zero_elem(p + q - 1) } else { self.multiply(&self.differential(&a), &b) };
                        let second = if q == 0 { self.zero_elem(p + q - 1) } else { self.multiply(&a, &self.differential(&b)) };
                        let rhs = self.elem_add(&first, &second, p % 2 == 1);
                        if !self.elem_eq(&lhs, &rhs) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// `ab = (-1)^{|a||b|} ba` and `e_i e_i = 0` on basis elements.
    pub fn check_graded_commutative(&self) -> bool {
        let n = self.length();
        for p in 0..=n {
            for q in 0..=n {
                for i in 0..self.subsets[p].len() {
                    for j in 0..self.subsets[q].len() {
                        let (a, b) = (self.basis_elem(p, i), self.basis_elem(q, j));
                        let ab = self.multiply(&a, &b);
                        let ba = self.multiply(&b, &a);
                        let ba = KoszulElem {
                            degree: ba.degree,
                            coeffs: ba.coeffs.iter().map(|c| self.ring.signed(c, p * q % 2 == 1)).collect(),
                        };
                        if !self.elem_eq(&ab, &ba) {
                            return false;
                        }
                    }
                }
            }
        }
        (0..n).all(|i| {
            let e = self.basis_elem(1, i);
            self.multiply(&e, &e).coeffs.iter().all(|c| self.ring.is_zero(c))
        })
    }
}

/// `R//x`: the cone of multiplication by `x` on `R`.
///
/// For `R = K(x_1, …, x_{n-1})` and `x = x_n` this is `K(x_1, …, x_n)` up
/// to the basis change `e_S ↦ e_S`, `(0, e_S) ↦ (-1)^{|S|} e_{S ∪ {n}}`.
pub fn koszul_object<R: CommRing>(r: &FreeComplex<R>, x: &R::Elem) -> FreeComplex<R> {
    ChainMap::scalar(r, x).cone()
}

/// Iterated [`koszul_object`] starting from the ring in degree 0.
pub fn iterated_koszul_object<R: CommRing>(ring: &R, xs: &[R::Elem]) -> FreeComplex<R> {
    xs.iter().fold(FreeComplex::concentrated(ring, 0, 1), |c, x| koszul_object(&c, x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::artin::FiniteLocalAlgebra;
    use crate::field::PrimeField;
    use crate::poly::{GradedQuotientRing, MonomialOrder, PolyRing};

    fn eight() -> FiniteLocalAlgebra<PrimeField> {
        let r = PolyRing::new(PrimeField::new(101).unwrap(), &["x", "y", "z"], MonomialOrder::GrevLex);
        let rels = r.parse_list("x^2, y^2 + x*z, z^2").unwrap();
        FiniteLocalAlgebra::from_presentation(&r, &rels).unwrap()
    }

    #[test]
    fn koszul_ranks_and_rules() {
        let a = eight();
        let xs: Vec<_> = ["x", "y", "z"].iter().map(|v| a.parse(v).unwrap()).collect();
        let k = KoszulComplex::new(&a, &xs);
        assert_eq!(k.complex().ranks(), vec![1, 3, 3, 1]);
        assert!(k.complex().check_d_squared());
        assert!(k.check_leibniz());
        assert!(k.check_graded_commutative());
        let empty = KoszulComplex::new(&a, &[]);
        assert_eq!(empty.complex().ranks(), vec![1]);
    }

    #[test]
    fn cone_matches_koszul_after_sign_change() {
        let r = PolyRing::new(PrimeField::new(101).unwrap(), &["x", "y", "z"], MonomialOrder::GrevLex);
        let a = GradedQuotientRing::polynomial_ring(r.clone());
        let xs = vec![r.var(0), r.var(1), r.var(2)];
        let k = KoszulComplex::new(&a, &xs);
        let k2 = KoszulComplex::new(&a, &xs[..2]);
        let c = koszul_object(k2.complex(), &xs[2]);
        assert!(c.check_d_squared());
        assert_eq!(c.ranks(), k.complex().ranks());
        // Chain isomorphism cone → K(x,y,z).
        let maps: Vec<(i32, RMatrix<_>)> = (0..=3)
            .map(|p: i32| {
                let n = c.rank(p);
                let mut m = RMatrix::zeros(&a, n, n);
                let mut col = 0;
                let own: &[Vec<usize>] = if p <= 2 { k2.basis(p as usize) } else { &[] };
                for s in own {
                    let t = k.basis(p as usize).iter().position(|u| u == s).unwrap();
                    m.set(t, col, a.one());
                    col += 1;
                }
                if p >= 1 {
                    for s in k2.basis(p as usize - 1) {
                        let mut u = s.clone();
                        u.push(2);
                        let t = k.basis(p as usize).iter().position(|v| *v == u).unwrap();
                        m.set(t, col, a.signed(&a.one(), s.len() % 2 == 1));
                        col += 1;
                    }
                }
                (p, m)
            })
            .collect();
        let f = ChainMap { source: c, target: k.complex().clone(), maps };
        assert!(f.commutes());
    }

    #[test]
    fn tensor_of_koszul_is_koszul() {
        let r = PolyRing::new(PrimeField::new(101).unwrap(), &["x", "y"], MonomialOrder::GrevLex);
        let a = GradedQuotientRing::polynomial_ring(r.clone());
        let kx = KoszulComplex::new(&a, &[r.var(0)]);
        let ky = KoszulComplex::new(&a, &[r.var(1)]);
        let kxy = KoszulComplex::new(&a, &[r.var(0), r.var(1)]);
        let t = kx.complex().tensor(ky.complex());
        // Degree 1 of the tensor is (1⊗f, e⊗1) = (e_1, e_0).
        let mut swap = RMatrix::zeros(&a, 2, 2);
        swap.set(0, 1, a.one());
        swap.set(1, 0, a.one());
        let maps = vec![(0, RMatrix::identity(&a, 1)), (1, swap), (2, RMatrix::identity(&a, 1))];
        let f = ChainMap { source: t, target: kxy.complex().clone(), maps };
        assert!(f.commutes());
    }
}
