use crate::field::Field;
use crate::linalg::{Matrix, Subspace};

use super::algebra::FiniteLocalAlgebra;

/// A finitely generated module over a [`FiniteLocalAlgebra`], stored as the
/// matrix by which each algebra basis element acts.
#[derive(Clone, Debug, PartialEq)]
pub struct FGModule<K: Field> {
    field: K,
    dim: usize,
    action: Vec<Matrix<K>>,
    labels: Vec<String>,
}

/// `Hom_A(M, N)`: a k-basis of A-linear maps and the module structure on it.
#[derive(Clone, Debug)]
pub struct HomSpace<K: Field> {
    /// Each map as a `dim N × dim M` matrix.
    pub maps: Vec<Matrix<K>>,
    pub module: FGModule<K>,
}

impl<K: Field> FGModule<K> {
    pub fn new(field: &K, dim: usize, action: Vec<Matrix<K>>, labels: Vec<String>) -> Self {
        FGModule { field: field.clone(), dim, action, labels }
    }

    pub fn zero(a: &FiniteLocalAlgebra<K>) -> Self {
        let k = a.field();
        FGModule { field: k.clone(), dim: 0, action: vec![Matrix::zeros(k, 0, 0); a.dim()], labels: vec![] }
    }

    /// `A^r`, ordered generator-major: coordinate `j·dim A + i` is the
    /// coefficient of basis element `i` in component `j`.
    pub fn free(a: &FiniteLocalAlgebra<K>, rank: usize) -> Self {
        let k = a.field();
        let d = a.dim();
        let action = a
            .mult_table()
            .iter()
            .map(|l| {
                let mut m = Matrix::zeros(k, d * rank, d * rank);
                for j in 0..rank {
                    m.set_block(j * d, j * d, l);
                }
                m
            })
            .collect();
        let labels = (0..rank)
            .flat_map(|j| {
                a.labels().iter().map(move |l| if rank == 1 { l.clone() } else { format!("e{}*{}", j + 1, l) })
            })
            .collect();
        FGModule { field: k.clone(), dim: d * rank, action, labels }
    }

    pub fn regular(a: &FiniteLocalAlgebra<K>) -> Self {
        Self::free(a, 1)
    }

    /// `A/I`, on the basis elements of `A` that greedily complete `I`.
    pub fn cyclic(a: &FiniteLocalAlgebra<K>, ideal: &Subspace<K>) -> Self {
        let free = Self::regular(a);
        free.subquotient(&a.whole(), ideal)
    }

    pub fn residue_field(a: &FiniteLocalAlgebra<K>) -> Self {
        Self::cyclic(a, &a.maximal())
    }

    /// An ideal `I ⊆ A` as a module, on its echelon basis.
    pub fn from_ideal(a: &FiniteLocalAlgebra<K>, ideal: &Subspace<K>) -> Self {
        Self::regular(a).subquotient(ideal, &Subspace::zero(a.field(), a.dim()))
    }

    pub fn field(&self) -> &K {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn action(&self) -> &[Matrix<K>] {
        &self.action
    }
    pub fn label(&self, j: usize) -> &str {
        &self.labels[j]
    }
    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    pub fn act_matrix(&self, a: &[K::Elem]) -> Matrix<K> {
        let mut m = Matrix::zeros(&self.field, self.dim, self.dim);
        for (i, c) in a.iter().enumerate() {
            if !self.field.is_zero(c) {
                m = m.add(&self.action[i].scale(c));
            }
        }
        m
    }

    pub fn act(&self, a: &[K::Elem], v: &[K::Elem]) -> Vec<K::Elem> {
        self.act_matrix(a).mul_vec(v)
    }

    /// Checks that the unit acts as the identity and the action is multiplicative.
    pub fn verify(&self, a: &FiniteLocalAlgebra<K>) -> bool {
        if self.action.len() != a.dim() || self.action[0] != Matrix::identity(&self.field, self.dim) {
            return false;
        }
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let prod = a.mult_table()[i].column(j);
                if self.action[i].mul(&self.action[j]) != self.act_matrix(&prod) {
                    return false;
                }
            }
        }
        true
    }

    /// The submodule generated by `gens`.
    pub fn submodule(&self, gens: &[Vec<K::Elem>]) -> Subspace<K> {
        let vs: Vec<Vec<K::Elem>> =
            gens.iter().flat_map(|g| self.action.iter().map(move |m| m.mul_vec(g))).collect();
        Subspace::span(&self.field, self.dim, &vs)
    }

    /// `m·S` for an A-stable subspace `S`.
    pub fn m_times(&self, sub: &Subspace<K>) -> Subspace<K> {
        let vs: Vec<Vec<K::Elem>> = sub
            .basis()
            .iter()
            .flat_map(|v| self.action.iter().skip(1).map(move |m| m.mul_vec(v)))
            .collect();
        Subspace::span(&self.field, self.dim, &vs)
    }

    /// Minimal generators of an A-stable subspace: echelon basis vectors
    /// completing `m·S` to `S`.
    pub fn minimal_generators_of(&self, sub: &Subspace<K>) -> Vec<Vec<K::Elem>> {
        sub.complement_of(&self.m_times(sub))
    }

    pub fn minimal_generators(&self) -> Vec<Vec<K::Elem>> {
        self.minimal_generators_of(&Subspace::whole(&self.field, self.dim))
    }

    pub fn num_generators(&self) -> usize {
        let whole = Subspace::whole(&self.field, self.dim);
        self.dim - self.m_times(&whole).dim()
    }

    /// `ann_A(M)` as an ideal of `A`.
    pub fn annihilator(&self, a: &FiniteLocalAlgebra<K>) -> Subspace<K> {
        let rows = self.dim * self.dim;
        if rows == 0 {
            return a.whole();
        }
        let cols: Vec<Vec<K::Elem>> = self
            .action
            .iter()
            .map(|m| (0..self.dim).flat_map(|i| m.row(i).to_vec()).collect())
            .collect();
        Subspace::kernel(&Matrix::from_columns(&self.field, rows, &cols))
    }

    /// Whether `M ≅ A/I`: `M` is cyclic and `ann(M) = I`.
    pub fn cyclic_iso(&self, a: &FiniteLocalAlgebra<K>, ideal: &Subspace<K>) -> bool {
        self.num_generators() == 1 && self.annihilator(a) == *ideal
    }

    pub fn is_free(&self, a: &FiniteLocalAlgebra<K>) -> bool {
        self.dim == self.num_generators() * a.dim()
    }

    /// `M` is injective iff its Matlis dual is free.
    pub fn is_injective(&self, a: &FiniteLocalAlgebra<K>) -> bool {
        self.matlis_dual().is_free(a)
    }

    /// `Hom_k(M, k)` with the transposed action.
    pub fn matlis_dual(&self) -> Self {
        FGModule {
            field: self.field.clone(),
            dim: self.dim,
            action: self.action.iter().map(|m| m.transpose()).collect(),
            labels: self.labels.iter().map(|l| format!("{l}^*")).collect(),
        }
    }

    pub fn direct_sum(&self, other: &FGModule<K>) -> Self {
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        FGModule {
            field: self.field.clone(),
            dim: self.dim + other.dim,
            action: self.action.iter().zip(&other.action).map(|(a, b)| a.direct_sum(b)).collect(),
            labels,
        }
    }

    /// `Z/B` for A-stable subspaces `B ⊆ Z`, on the echelon basis vectors of
    /// `Z` that complete `B`.
    pub fn subquotient(&self, z: &Subspace<K>, b: &Subspace<K>) -> Self {
        self.subquotient_with_basis(z, b).0
    }

    /// Like [`subquotient`](Self::subquotient), also returning the chosen
    /// representatives in the ambient space.
    pub fn subquotient_with_basis(&self, z: &Subspace<K>, b: &Subspace<K>) -> (Self, Vec<Vec<K::Elem>>) {
        let k = &self.field;
        let reps = z.complement_of(b);
        let q = reps.len();
        if q == 0 {
            let action = vec![Matrix::zeros(k, 0, 0); self.action.len()];
            return (FGModule { field: k.clone(), dim: 0, action, labels: vec![] }, reps);
        }
        let mut cols = reps.clone();
        cols.extend(b.basis().iter().cloned());
        let basis_matrix = Matrix::from_columns(k, self.dim, &cols);
        let coords = |v: &[K::Elem]| -> Vec<K::Elem> {
            let x = basis_matrix.solve(v).expect("A-stable subspace");
            x[..q].to_vec()
        };
        let action = self
            .action
            .iter()
            .map(|m| {
                let cs: Vec<Vec<K::Elem>> = reps.iter().map(|r| coords(&m.mul_vec(r))).collect();
                Matrix::from_columns(k, q, &cs)
            })
            .collect();
        let labels = reps.iter().map(|r| self.render_vector(r)).collect();
        (FGModule { field: k.clone(), dim: q, action, labels }, reps)
    }

    fn render_vector(&self, v: &[K::Elem]) -> String {
        let k = &self.field;
        let parts: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !k.is_zero(c))
            .map(|(i, c)| {
                if k.is_one(c) {
                    self.labels[i].clone()
                } else {
                    format!("{}*{}", k.render(c), self.labels[i])
                }
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("+")
        }
    }

    /// `Hom_A(M, N)`, computed as the maps commuting with the algebra generators.
    pub fn hom(a: &FiniteLocalAlgebra<K>, m: &FGModule<K>, n: &FGModule<K>) -> HomSpace<K> {
        let k = a.field();
        let (dm, dn) = (m.dim, n.dim);
        let unknowns = dm * dn;
        if unknowns == 0 {
            return HomSpace { maps: vec![], module: FGModule::zero(a) };
        }
        // Unknown f as a dn×dm matrix, flattened row-major: f[r][c] at r*dm + c.
        let gens = a.algebra_generators();
        let mut rows: Vec<Vec<K::Elem>> = Vec::new();
        for g in &gens {
            let mg = m.act_matrix(g);
            let ng = n.act_matrix(g);
            // (N_g f − f M_g)[r][c] = Σ_t N_g[r][t] f[t][c] − Σ_t f[r][t] M_g[t][c]
            for r in 0..dn {
                for c in 0..dm {
                    let mut row = vec![k.zero(); unknowns];
                    for t in 0..dn {
                        let v = ng.get(r, t);
                        if !k.is_zero(v) {
                            row[t * dm + c] = k.add(&row[t * dm + c], v);
                        }
                    }
                    for t in 0..dm {
                        let v = mg.get(t, c);
                        if !k.is_zero(v) {
                            row[r * dm + t] = k.sub(&row[r * dm + t], v);
                        }
                    }
                    rows.push(row);
                }
            }
        }
        let space = if rows.is_empty() {
            Subspace::whole(k, unknowns)
        } else {
            Subspace::kernel(&Matrix::from_rows(k, rows, unknowns))
        };
        let to_matrix = |v: &[K::Elem]| -> Matrix<K> {
            Matrix::from_rows(k, (0..dn).map(|r| v[r * dm..(r + 1) * dm].to_vec()).collect(), dm)
        };
        let maps: Vec<Matrix<K>> = space.basis().iter().map(|v| to_matrix(v)).collect();
        let h = maps.len();
        let action = (0..a.dim())
            .map(|i| {
                let ni = &n.action[i];
                let cs: Vec<Vec<K::Elem>> = maps
                    .iter()
                    .map(|f| {
                        let g = ni.mul(f);
                        let flat: Vec<K::Elem> = (0..dn).flat_map(|r| g.row(r).to_vec()).collect();
                        space.coordinates(&flat).expect("Hom is an A-module")
                    })
                    .collect();
                Matrix::from_columns(k, h, &cs)
            })
            .collect();
        let labels = (0..h).map(|i| format!("f{}", i + 1)).collect();
        HomSpace { maps, module: FGModule { field: k.clone(), dim: h, action, labels } }
    }

    /// `Hom_A(M, A)`.
    pub fn dual(&self, a: &FiniteLocalAlgebra<K>) -> HomSpace<K> {
        Self::hom(a, self, &Self::regular(a))
    }

    /// The biduality map `M → M**` as a `dim M** × dim M` matrix, where
    /// `M* = Hom(M, A)` and `M** = Hom(M*, A)` are taken on their computed bases.
    pub fn biduality_map(&self, a: &FiniteLocalAlgebra<K>) -> Matrix<K> {
        let k = a.field();
        let star = self.dual(a);
        let double = FGModule::hom(a, &star.module, &FGModule::regular(a));
        // ev_m(f) = f(m); as a map Hom(M,A) → A its matrix has columns f_j(m).
        let flat = |g: &Matrix<K>| -> Vec<K::Elem> { (0..g.rows()).flat_map(|r| g.row(r).to_vec()).collect() };
        let dd_space = Subspace::span(
            k,
            a.dim() * star.maps.len(),
            &double.maps.iter().map(flat).collect::<Vec<_>>(),
        );
        let cols: Vec<Vec<K::Elem>> = (0..self.dim)
            .map(|c| {
                let mut e = vec![k.zero(); self.dim];
                e[c] = k.one();
                let ev_cols: Vec<Vec<K::Elem>> = star.maps.iter().map(|f| f.mul_vec(&e)).collect();
                let ev = Matrix::from_columns(k, a.dim(), &ev_cols);
                dd_space.coordinates(&flat(&ev)).expect("evaluation is A-linear")
            })
            .collect();
        Matrix::from_columns(k, double.maps.len(), &cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::poly::{MonomialOrder, PolyRing};

    fn alg(names: &[&str], rels: &[&str]) -> FiniteLocalAlgebra<PrimeField> {
        let r = PolyRing::new(PrimeField::new(101).unwrap(), names, MonomialOrder::GrevLex);
        let rels: Vec<_> = rels.iter().map(|s| r.parse(s).unwrap()).collect();
        FiniteLocalAlgebra::from_presentation(&r, &rels).unwrap()
    }

    fn a8() -> FiniteLocalAlgebra<PrimeField> {
        alg(&["x", "y", "z"], &["x^2", "y^2 + x*z", "z^2"])
    }

    #[test]
    fn module_constructions_verify() {
        let a = a8();
        assert!(FGModule::free(&a, 2).verify(&a));
        let k = FGModule::residue_field(&a);
        assert_eq!(k.dim(), 1);
        assert!(k.verify(&a));
        let i = a.ideal(&[a.parse("x").unwrap()]);
        let q = FGModule::cyclic(&a, &i);
        assert_eq!(q.dim(), 4);
        assert!(q.verify(&a));
        assert!(q.cyclic_iso(&a, &i));
        assert!(FGModule::from_ideal(&a, &i).verify(&a));
    }

    #[test]
    fn matlis_duals() {
        let a = a8();
        let dual = FGModule::regular(&a).matlis_dual();
        assert!(dual.verify(&a));
        assert!(dual.cyclic_iso(&a, &a.zero_ideal()));
        let b = alg(&["x", "y"], &["x^2", "x*y", "y^2"]);
        let bd = FGModule::regular(&b).matlis_dual();
        assert_eq!(bd.num_generators(), 2);
        assert_eq!(bd.matlis_dual(), {
            let mut r = FGModule::regular(&b);
            r.labels = r.labels.iter().map(|l| format!("{l}^*^*")).collect();
            r
        });
        assert!(bd.is_injective(&b));
        assert!(!FGModule::regular(&b).is_injective(&b));
    }

    #[test]
    fn hom_dimensions() {
        let a = a8();
        let k = FGModule::residue_field(&a);
        let reg = FGModule::regular(&a);
        assert_eq!(FGModule::hom(&a, &k, &reg).maps.len(), 1);
        assert_eq!(FGModule::hom(&a, &reg, &reg).maps.len(), 8);
        let i = a.ideal(&[a.parse("x").unwrap()]);
        let q = FGModule::cyclic(&a, &i);
        let h = q.dual(&a);
        // Hom(A/(x), A) ≅ ann(x) ≅ A/(x).
        assert_eq!(h.maps.len(), 4);
        assert!(h.module.cyclic_iso(&a, &i));
        let bd = q.biduality_map(&a);
        assert_eq!(bd.rank(), 4);
    }

    #[test]
    fn trivial_extensions() {
        let b = alg(&["x", "y"], &["x^2", "x*y", "y^2"]);
        let d = FGModule::regular(&b).matlis_dual();
        let t = b.trivial_extension(&d);
        t.verify().unwrap();
        assert_eq!(t.dim(), 6);
        assert!(t.is_gorenstein());
        let t2 = b.trivial_extension(&FGModule::regular(&b));
        t2.verify().unwrap();
        assert_eq!(t2.dim(), 6);
        assert!(!t2.is_gorenstein());
        let t0 = b.trivial_extension(&FGModule::zero(&b));
        assert_eq!(t0.dim(), 3);
    }
}
