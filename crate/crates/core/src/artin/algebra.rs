use std::fmt;

use crate::field::Field;
use crate::linalg::{Matrix, Subspace};
use crate::poly::{quotient_basis, PolyOf, PolyRing, QuotientError};

use super::module::FGModule;

/// Element of a [`FiniteLocalAlgebra`]: coordinates in its basis.
pub type Elem<K> = Vec<<K as Field>::Elem>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error(transparent)]
    Quotient(#[from] QuotientError),
    #[error("the quotient is the zero ring")]
    ZeroRing,
    #[error("the algebra is not local: {0}")]
    NotLocal(String),
    #[error("multiplication table is not {0}")]
    BadTable(&'static str),
    #[error("element is not in the algebra's presentation: {0}")]
    Parse(String),
}

/// Why an element fails to be an exact zero divisor.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EzdFailure {
    Zero,
    Unit,
    AnnihilatorNotCyclic { generators: usize },
    DoubleAnnihilatorMismatch,
}

impl fmt::Display for EzdFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EzdFailure::Zero => write!(f, "the element is zero"),
            EzdFailure::Unit => write!(f, "the element is a unit"),
            EzdFailure::AnnihilatorNotCyclic { generators } => {
                write!(f, "the annihilator needs {generators} generators")
            }
            EzdFailure::DoubleAnnihilatorMismatch => {
                write!(f, "the annihilator of the partner is not the ideal of the element")
            }
        }
    }
}

/// A commutative artinian local algebra given by a basis and a
/// multiplication table.
///
/// Basis element 0 is the unit and the remaining basis elements span the
/// maximal ideal, so an element is a unit iff its first coordinate is nonzero.
#[derive(Clone, Debug)]
pub struct FiniteLocalAlgebra<K: Field> {
    field: K,
    labels: Vec<String>,
    /// `mult[i]` is the matrix of multiplication by basis element `i`.
    mult: Vec<Matrix<K>>,
    ring: Option<PolyRing<K>>,
    /// Images of the presentation variables.
    var_images: Vec<Elem<K>>,
}

impl<K: Field> FiniteLocalAlgebra<K> {
    /// `P/J` for an ideal `J` whose quotient is finite-dimensional and local.
    pub fn from_presentation(ring: &PolyRing<K>, relations: &[PolyOf<K>]) -> Result<Self, AlgebraError> {
        let (gb, basis) = quotient_basis(ring, relations)?;
        if basis.is_empty() {
            return Err(AlgebraError::ZeroRing);
        }
        let k = ring.field();
        let dim = basis.len();
        let index = |m: &crate::poly::Monomial| basis.iter().position(|b| b == m);
        let coords = |p: &PolyOf<K>| -> Elem<K> {
            let mut v = vec![k.zero(); dim];
            for (m, c) in gb.reduce(p).terms() {
                v[index(m).expect("normal form uses standard monomials")] = c.clone();
            }
            v
        };
        let mut mult = Vec::with_capacity(dim);
        for bi in &basis {
            let cols: Vec<Elem<K>> = basis
                .iter()
                .map(|bj| coords(&ring.monomial(bi.mul(bj), k.one())))
                .collect();
            mult.push(Matrix::from_columns(k, dim, &cols));
        }
        let labels = basis.iter().map(|m| ring.render_monomial(m)).collect();
        let var_images = (0..ring.nvars()).map(|i| coords(&ring.var(i))).collect();
        let alg = FiniteLocalAlgebra { field: k.clone(), labels, mult, ring: Some(ring.clone()), var_images };
        alg.verify()?;
        Ok(alg)
    }

    /// An algebra from an explicit table; `mult[i]` multiplies by basis element `i`.
    pub fn from_table(field: &K, labels: Vec<String>, mult: Vec<Matrix<K>>) -> Result<Self, AlgebraError> {
        let alg = FiniteLocalAlgebra { field: field.clone(), labels, mult, ring: None, var_images: Vec::new() };
        alg.verify()?;
        Ok(alg)
    }

    /// The residue field as a one-dimensional algebra.
    pub fn residue_field(field: &K) -> Self {
        FiniteLocalAlgebra {
            field: field.clone(),
            labels: vec!["1".into()],
            mult: vec![Matrix::identity(field, 1)],
            ring: None,
            var_images: Vec::new(),
        }
    }

    /// Checks unit, commutativity, associativity and locality.
    pub fn verify(&self) -> Result<(), AlgebraError> {
        let k = &self.field;
        let d = self.dim();
        if d == 0 || self.mult.len() != d || self.labels.len() != d {
            return Err(AlgebraError::BadTable("well-formed"));
        }
        if self.mult[0] != Matrix::identity(k, d) {
            return Err(AlgebraError::BadTable("unital with basis element 0 as unit"));
        }
        for i in 0..d {
            for j in 0..d {
                if self.mult[i].column(j) != self.mult[j].column(i) {
                    return Err(AlgebraError::BadTable("commutative"));
                }
            }
        }
        for i in 0..d {
            for j in 0..d {
                let prod = self.mult[i].column(j);
                if self.mult[i].mul(&self.mult[j]) != self.mult_matrix(&prod) {
                    return Err(AlgebraError::BadTable("associative"));
                }
            }
        }
        for i in 1..d {
            for j in 1..d {
                if !k.is_zero(self.mult[i].get(0, j)) {
                    return Err(AlgebraError::NotLocal("the non-unit basis part is not an ideal".into()));
                }
            }
        }
        let mut power = self.maximal();
        for _ in 0..=d {
            if power.is_zero() {
                return Ok(());
            }
            power = self.ideal_product(&power, &self.maximal());
        }
        Err(AlgebraError::NotLocal("the maximal ideal is not nilpotent".into()))
    }

    pub fn field(&self) -> &K {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.labels.len()
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn mult_table(&self) -> &[Matrix<K>] {
        &self.mult
    }
    pub fn presentation_ring(&self) -> Option<&PolyRing<K>> {
        self.ring.as_ref()
    }
    pub fn var_images(&self) -> &[Elem<K>] {
        &self.var_images
    }

    pub fn zero(&self) -> Elem<K> {
        vec![self.field.zero(); self.dim()]
    }

    pub fn one(&self) -> Elem<K> {
        self.basis_elem(0)
    }

    pub fn basis_elem(&self, i: usize) -> Elem<K> {
        let mut v = self.zero();
        v[i] = self.field.one();
        v
    }

    pub fn scalar(&self, c: K::Elem) -> Elem<K> {
        let mut v = self.zero();
        v[0] = c;
        v
    }

    pub fn is_zero(&self, a: &[K::Elem]) -> bool {
        a.iter().all(|x| self.field.is_zero(x))
    }

    pub fn is_unit(&self, a: &[K::Elem]) -> bool {
        !self.field.is_zero(&a[0])
    }

    pub fn add(&self, a: &[K::Elem], b: &[K::Elem]) -> Elem<K> {
        a.iter().zip(b).map(|(x, y)| self.field.add(x, y)).collect()
    }

    pub fn sub(&self, a: &[K::Elem], b: &[K::Elem]) -> Elem<K> {
        a.iter().zip(b).map(|(x, y)| self.field.sub(x, y)).collect()
    }

    pub fn neg(&self, a: &[K::Elem]) -> Elem<K> {
        a.iter().map(|x| self.field.neg(x)).collect()
    }

    pub fn scale(&self, a: &[K::Elem], c: &K::Elem) -> Elem<K> {
        a.iter().map(|x| self.field.mul(x, c)).collect()
    }

    /// Matrix of multiplication by `a`.
    pub fn mult_matrix(&self, a: &[K::Elem]) -> Matrix<K> {
        let mut m = Matrix::zeros(&self.field, self.dim(), self.dim());
        for (i, c) in a.iter().enumerate() {
            if !self.field.is_zero(c) {
                m = m.add(&self.mult[i].scale(c));
            }
        }
        m
    }

    pub fn mul(&self, a: &[K::Elem], b: &[K::Elem]) -> Elem<K> {
        let k = &self.field;
        let mut out = self.zero();
        for (i, c) in a.iter().enumerate() {
            if k.is_zero(c) {
                continue;
            }
            let col = self.mult[i].mul_vec(b);
            for (o, v) in out.iter_mut().zip(col) {
                *o = k.add(o, &k.mul(c, &v));
            }
        }
        out
    }

    pub fn pow(&self, a: &[K::Elem], e: u32) -> Elem<K> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Inverse of a unit.
    pub fn inverse(&self, a: &[K::Elem]) -> Option<Elem<K>> {
        let x = self.mult_matrix(a).solve(&self.one()).ok()?;
        Some(x)
    }

    /// The image of a polynomial in the presentation variables.
    pub fn element_from_poly(&self, p: &PolyOf<K>) -> Result<Elem<K>, AlgebraError> {
        if self.ring.is_none() {
            return Err(AlgebraError::Parse("algebra has no presentation".into()));
        }
        let mut acc = self.zero();
        for (m, c) in p.terms() {
            let mut t = self.scalar(c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = self.mul(&t, &self.pow(&self.var_images[i], e as u32));
                }
            }
            acc = self.add(&acc, &t);
        }
        Ok(acc)
    }

    pub fn parse(&self, text: &str) -> Result<Elem<K>, AlgebraError> {
        let ring = self.ring.as_ref().ok_or_else(|| AlgebraError::Parse("no presentation".into()))?;
        let p = ring.parse(text).map_err(|e| AlgebraError::Parse(e.to_string()))?;
        self.element_from_poly(&p)
    }

    /// Renders as a combination of basis labels, e.g. `x*y - 2*z`.
    pub fn render(&self, a: &[K::Elem]) -> String {
        let k = &self.field;
        let mut s = String::new();
        for (i, c) in a.iter().enumerate() {
            if k.is_zero(c) {
                continue;
            }
            let (neg, mag) = match k.to_i64(c) {
                Some(v) if v < 0 => (true, k.render(&k.neg(c))),
                _ => (false, k.render(c)),
            };
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let label = &self.labels[i];
            if label == "1" {
                s.push_str(&mag);
            } else if mag == "1" {
                s.push_str(label);
            } else {
                s.push_str(&format!("{mag}*{label}"));
            }
        }
        if s.is_empty() {
            "0".into()
        } else {
            s
        }
    }

    pub fn maximal(&self) -> Subspace<K> {
        let vs: Vec<Elem<K>> = (1..self.dim()).map(|i| self.basis_elem(i)).collect();
        Subspace::span(&self.field, self.dim(), &vs)
    }

    pub fn whole(&self) -> Subspace<K> {
        Subspace::whole(&self.field, self.dim())
    }

    pub fn zero_ideal(&self) -> Subspace<K> {
        Subspace::zero(&self.field, self.dim())
    }

    /// The ideal generated by `gens`.
    pub fn ideal(&self, gens: &[Elem<K>]) -> Subspace<K> {
        let mut vs = Vec::with_capacity(gens.len() * self.dim());
        for g in gens {
            for m in &self.mult {
                vs.push(m.mul_vec(g));
            }
        }
        Subspace::span(&self.field, self.dim(), &vs)
    }

    pub fn ideal_product(&self, a: &Subspace<K>, b: &Subspace<K>) -> Subspace<K> {
        let mut vs = Vec::new();
        for x in a.basis() {
            for y in b.basis() {
                vs.push(self.mul(x, y));
            }
        }
        Subspace::span(&self.field, self.dim(), &vs)
    }

    /// `ann(a) = ker(multiplication by a)`.
    pub fn annihilator(&self, a: &[K::Elem]) -> Subspace<K> {
        Subspace::kernel(&self.mult_matrix(a))
    }

    pub fn annihilator_of(&self, ideal: &Subspace<K>) -> Subspace<K> {
        if ideal.is_zero() {
            return self.whole();
        }
        let mut stacked: Option<Matrix<K>> = None;
        for g in ideal.basis() {
            let m = self.mult_matrix(g);
            stacked = Some(match stacked {
                None => m,
                Some(s) => s.vstack(&m),
            });
        }
        Subspace::kernel(&stacked.unwrap())
    }

    /// `(I : a) = {y : y·a ∈ I}`.
    pub fn colon(&self, ideal: &Subspace<K>, a: &[K::Elem]) -> Subspace<K> {
        let m = self.mult_matrix(a);
        // y ↦ residue of a·y modulo I; kernel of that map.
        let cols: Vec<Elem<K>> = (0..self.dim()).map(|j| ideal.reduce(&m.column(j))).collect();
        Subspace::kernel(&Matrix::from_columns(&self.field, self.dim(), &cols))
    }

    pub fn socle(&self) -> Subspace<K> {
        self.annihilator_of(&self.maximal())
    }

    pub fn is_gorenstein(&self) -> bool {
        self.socle().dim() == 1
    }

    /// `dim m/m²`.
    pub fn embedding_dim(&self) -> usize {
        let m = self.maximal();
        m.dim() - self.ideal_product(&m, &m).dim()
    }

    /// Smallest `t` with `m^t = 0`.
    pub fn loewy_length(&self) -> usize {
        let m = self.maximal();
        let mut p = self.whole();
        let mut t = 0;
        while !p.is_zero() {
            p = self.ideal_product(&p, &m);
            t += 1;
        }
        t
    }

    /// Minimal generators of an ideal: the stored basis vectors of `I` that
    /// extend `m·I` to `I`, in reduced-echelon order.
    pub fn minimal_generators(&self, ideal: &Subspace<K>) -> Vec<Elem<K>> {
        let mi = self.ideal_product(&self.maximal(), ideal);
        ideal.complement_of(&mi)
    }

    /// Minimal generators of `m`, which also generate the algebra.
    pub fn algebra_generators(&self) -> Vec<Elem<K>> {
        self.minimal_generators(&self.maximal())
    }

    /// Whether `I` is a proper ideal (contained in `m`).
    pub fn is_proper(&self, ideal: &Subspace<K>) -> bool {
        self.maximal().contains_subspace(ideal)
    }

    /// `A/I` and the projection matrix `A → A/I`.
    ///
    /// The basis of `A/I` consists of the basis elements of `A` that are not
    /// pivots of `I`'s echelon form, in their original order.
    pub fn quotient(&self, ideal: &Subspace<K>) -> (FiniteLocalAlgebra<K>, Matrix<K>) {
        assert!(self.is_proper(ideal), "quotient by a non-proper ideal");
        let k = &self.field;
        let keep: Vec<usize> = (0..self.dim()).filter(|j| !ideal.pivots().contains(j)).collect();
        let qd = keep.len();
        let project = |v: &[K::Elem]| -> Elem<K> {
            let r = ideal.reduce(v);
            keep.iter().map(|&j| r[j].clone()).collect()
        };
        let proj_cols: Vec<Elem<K>> = (0..self.dim()).map(|j| project(&self.basis_elem(j))).collect();
        let proj = Matrix::from_columns(k, qd, &proj_cols);
        let mult = keep
            .iter()
            .map(|&a| {
                let cols: Vec<Elem<K>> = keep.iter().map(|&b| project(&self.mult[a].column(b))).collect();
                Matrix::from_columns(k, qd, &cols)
            })
            .collect();
        let labels = keep.iter().map(|&j| self.labels[j].clone()).collect();
        let var_images = self.var_images.iter().map(|v| project(v)).collect();
        let q = FiniteLocalAlgebra { field: k.clone(), labels, mult, ring: self.ring.clone(), var_images };
        (q, proj)
    }

    /// Tests whether `x` is an exact zero divisor and returns the partner:
    /// the first minimal generator of `ann(x)` in echelon order.
    pub fn exact_zero_divisor(&self, x: &[K::Elem]) -> Result<Elem<K>, EzdFailure> {
        if self.is_zero(x) {
            return Err(EzdFailure::Zero);
        }
        if self.is_unit(x) {
            return Err(EzdFailure::Unit);
        }
        let ann = self.annihilator(x);
        let gens = self.minimal_generators(&ann);
        if gens.len() != 1 {
            return Err(EzdFailure::AnnihilatorNotCyclic { generators: gens.len() });
        }
        let y = gens[0].clone();
        if self.annihilator(&y) != self.ideal(&[x.to_vec()]) {
            return Err(EzdFailure::DoubleAnnihilatorMismatch);
        }
        Ok(y)
    }

    /// `A ⋉ M` with `(a, m)(a', m') = (aa', a m' + a' m)`.
    pub fn trivial_extension(&self, module: &FGModule<K>) -> FiniteLocalAlgebra<K> {
        let k = &self.field;
        let d = self.dim();
        let e = module.dim();
        let n = d + e;
        let mut mult = Vec::with_capacity(n);
        for i in 0..d {
            let mut m = Matrix::zeros(k, n, n);
            m.set_block(0, 0, &self.mult[i]);
            m.set_block(d, d, &module.action()[i]);
            mult.push(m);
        }
        for j in 0..e {
            let mut m = Matrix::zeros(k, n, n);
            let ej: Vec<K::Elem> = (0..e).map(|t| if t == j { k.one() } else { k.zero() }).collect();
            for a in 0..d {
                let col = module.action()[a].mul_vec(&ej);
                for (t, v) in col.into_iter().enumerate() {
                    m.set(d + t, a, v);
                }
            }
            mult.push(m);
        }
        let mut labels = self.labels.clone();
        labels.extend((0..e).map(|j| format!("[{}]", module.label(j))));
        let var_images = self
            .var_images
            .iter()
            .map(|v| {
                let mut w = v.clone();
                w.extend(std::iter::repeat_n(k.zero(), e));
                w
            })
            .collect();
        FiniteLocalAlgebra { field: k.clone(), labels, mult, ring: self.ring.clone(), var_images }
    }

    /// A uniformly random element.
    pub fn random_element<R: rand::Rng + ?Sized>(&self, rng: &mut R) -> Elem<K> {
        (0..self.dim()).map(|_| self.field.random(rng)).collect()
    }

    /// A random element of the maximal ideal.
    pub fn random_nonunit<R: rand::Rng + ?Sized>(&self, rng: &mut R) -> Elem<K> {
        let mut v = self.random_element(rng);
        v[0] = self.field.zero();
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::poly::MonomialOrder;

    pub(crate) fn alg(names: &[&str], rels: &[&str]) -> FiniteLocalAlgebra<PrimeField> {
        let r = PolyRing::new(PrimeField::new(101).unwrap(), names, MonomialOrder::GrevLex);
        let rels: Vec<_> = rels.iter().map(|s| r.parse(s).unwrap()).collect();
        FiniteLocalAlgebra::from_presentation(&r, &rels).unwrap()
    }

    #[test]
    fn dimensions_from_presentations() {
        assert_eq!(alg(&["x", "y", "z"], &["x^2", "y^2 + x*z", "z^2"]).dim(), 8);
        assert_eq!(alg(&["x"], &["x"]).dim(), 1);
        let b = alg(&["x", "y"], &["x^2", "x*y", "y^2"]);
        assert_eq!(b.dim(), 3);
        assert_eq!(b.labels(), &["1", "x", "y"]);
    }

    #[test]
    fn rejects_non_local_and_non_artinian() {
        let r = PolyRing::new(PrimeField::new(101).unwrap(), &["x", "y"], MonomialOrder::GrevLex);
        let e = FiniteLocalAlgebra::from_presentation(&r, &[r.parse("x - x^2").unwrap(), r.var(1)]);
        assert!(matches!(e, Err(AlgebraError::NotLocal(_))));
        let e = FiniteLocalAlgebra::from_presentation(&r, &[r.parse("x*y").unwrap()]);
        assert_eq!(e.unwrap_err(), AlgebraError::Quotient(QuotientError::NotArtinian));
    }

    #[test]
    fn annihilators_and_socles() {
        let a = alg(&["x", "y", "z"], &["x^2", "y^2 + x*z", "z^2"]);
        assert_eq!(a.annihilator(&a.one()).dim(), 0);
        assert_eq!(a.annihilator(&a.zero()).dim(), 8);
        assert_eq!(a.annihilator(&a.parse("x").unwrap()).dim(), 4);
        assert!(a.is_gorenstein());
        let b = alg(&["x", "y"], &["x^2", "x*y", "y^2"]);
        assert_eq!(b.socle().dim(), 2);
        assert!(!b.is_gorenstein());
        assert!(FiniteLocalAlgebra::residue_field(&PrimeField::new(101).unwrap()).is_gorenstein());
    }

    #[test]
    fn exact_zero_divisors() {
        let a = alg(&["x", "y", "z"], &["x^2", "y^2 + x*z", "z^2"]);
        let x = a.parse("x").unwrap();
        let y = a.exact_zero_divisor(&x).unwrap();
        assert_eq!(a.ideal(&[y]), a.ideal(&[x]));
        let b = alg(&["x", "y"], &["x^2", "x*y", "y^2"]);
        assert_eq!(
            b.exact_zero_divisor(&b.parse("x").unwrap()),
            Err(EzdFailure::AnnihilatorNotCyclic { generators: 2 })
        );
        assert_eq!(b.exact_zero_divisor(&b.one()), Err(EzdFailure::Unit));
    }

    #[test]
    fn quotients_keep_the_unit_first() {
        let a = alg(&["x", "y", "z"], &["x^2", "y^2 + x*z", "z^2"]);
        let i = a.ideal(&[a.parse("x").unwrap()]);
        let (q, proj) = a.quotient(&i);
        assert_eq!(q.dim(), 4);
        assert!(q.is_gorenstein());
        q.verify().unwrap();
        assert_eq!(proj.mul_vec(&a.one()), q.one());
        let y = q.parse("y").unwrap();
        assert!(q.is_zero(&q.mul(&y, &y)));
    }
}
