use super::CriteriaError;
use crate::artin::{AlgebraError, Elem, FiniteLocalAlgebra};
use crate::field::Field;
use crate::poly::{GradedQuotientRing, PolyOf, PolyRing, QuotientError};

/// Which engine computes in a [`LocalRing`].
#[derive(Clone, Debug)]
pub enum Engine<K: Field> {
    /// `m`-primary presentation: a finite-dimensional algebra.
    Artinian(FiniteLocalAlgebra<K>),
    /// Homogeneous presentation with a positive-dimensional quotient.
    Graded(GradedQuotientRing<K>),
}

/// `P/I` routed to the engine that can compute with it.
#[derive(Clone, Debug)]
pub struct LocalRing<K: Field> {
    ring: PolyRing<K>,
    relations: Vec<PolyOf<K>>,
    engine: Engine<K>,
}

impl<K: Field> LocalRing<K> {
    /// Artinian when the staircase is finite, graded when the relations are
    /// homogeneous, otherwise unsupported.
    pub fn new(ring: &PolyRing<K>, relations: &[PolyOf<K>]) -> Result<Self, CriteriaError> {
        let relations: Vec<PolyOf<K>> = relations.iter().filter(|r| !r.is_zero()).cloned().collect();
        let engine = match FiniteLocalAlgebra::from_presentation(ring, &relations) {
            Ok(a) => Engine::Artinian(a),
            Err(AlgebraError::Quotient(QuotientError::NotArtinian)) => {
                if let Some(bad) = relations.iter().find(|r| !r.is_homogeneous()) {
                    return Err(CriteriaError::Unsupported(format!(
                        "relation {} is not homogeneous and the quotient is not artinian",
                        ring.render(bad)
                    )));
                }
                Engine::Graded(GradedQuotientRing::new(ring.clone(), relations.clone())?)
            }
            Err(e) => return Err(e.into()),
        };
        Ok(LocalRing { ring: ring.clone(), relations, engine })
    }

    pub fn parse_new(ring: &PolyRing<K>, relations: &str) -> Result<Self, CriteriaError> {
        Self::new(ring, &ring.parse_list(relations)?)
    }

    pub fn ring(&self) -> &PolyRing<K> {
        &self.ring
    }
    pub fn relations(&self) -> &[PolyOf<K>] {
        &self.relations
    }
    pub fn engine(&self) -> &Engine<K> {
        &self.engine
    }
    pub fn is_artinian(&self) -> bool {
        matches!(self.engine, Engine::Artinian(_))
    }

    pub fn artinian(&self) -> Option<&FiniteLocalAlgebra<K>> {
        match &self.engine {
            Engine::Artinian(a) => Some(a),
            Engine::Graded(_) => None,
        }
    }

    pub fn graded(&self) -> Option<&GradedQuotientRing<K>> {
        match &self.engine {
            Engine::Graded(g) => Some(g),
            Engine::Artinian(_) => None,
        }
    }

    /// `dim_k` for artinian rings.
    pub fn vector_dim(&self) -> Option<usize> {
        self.artinian().map(|a| a.dim())
    }

    pub fn krull_dim(&self) -> usize {
        match &self.engine {
            Engine::Artinian(_) => 0,
            Engine::Graded(g) => g.krull_dim(),
        }
    }

    pub fn parse(&self, text: &str) -> Result<PolyOf<K>, CriteriaError> {
        Ok(self.ring.parse(text)?)
    }

    pub fn parse_list(&self, text: &str) -> Result<Vec<PolyOf<K>>, CriteriaError> {
        Ok(self.ring.parse_list(text)?)
    }

    pub fn render(&self, p: &PolyOf<K>) -> String {
        self.ring.render(p)
    }

    pub fn render_all(&self, ps: &[PolyOf<K>]) -> Vec<String> {
        ps.iter().map(|p| self.render(p)).collect()
    }

    /// Normal form of `p` in the quotient.
    pub fn reduce(&self, p: &PolyOf<K>) -> PolyOf<K> {
        match &self.engine {
            Engine::Graded(g) => g.reduce(p),
            Engine::Artinian(a) => {
                let e = a.element_from_poly(p).expect("element of the presentation ring");
                self.poly_from_element(a, &e)
            }
        }
    }

    pub fn is_zero(&self, p: &PolyOf<K>) -> bool {
        self.reduce(p).is_zero()
    }

    /// Rewrites an artinian element as a polynomial in the staircase basis.
    pub fn poly_from_element(&self, a: &FiniteLocalAlgebra<K>, e: &[K::Elem]) -> PolyOf<K> {
        let k = a.field();
        let terms = a
            .labels()
            .iter()
            .zip(e)
            .filter(|(_, c)| !k.is_zero(c))
            .map(|(l, c)| {
                let m = self.ring.parse(l).expect("staircase labels are monomials");
                self.ring.scale(&m, c)
            })
            .collect::<Vec<_>>();
        terms.iter().fold(self.ring.zero(), |acc, t| self.ring.add(&acc, t))
    }

    pub fn element(&self, p: &PolyOf<K>) -> Result<Elem<K>, CriteriaError> {
        match &self.engine {
            Engine::Artinian(a) => Ok(a.element_from_poly(p)?),
            Engine::Graded(_) => Err(CriteriaError::NeedsArtinian),
        }
    }

    pub fn elements(&self, ps: &[PolyOf<K>]) -> Result<Vec<Elem<K>>, CriteriaError> {
        ps.iter().map(|p| self.element(p)).collect()
    }

    pub fn in_maximal_ideal(&self, p: &PolyOf<K>) -> bool {
        let k = self.ring.field();
        k.is_zero(&self.ring.constant_term(p))
    }

    /// Errors unless every element lies in `m` (and, for the graded engine,
    /// is homogeneous).
    pub fn check_sequence(&self, xs: &[PolyOf<K>]) -> Result<(), CriteriaError> {
        for x in xs {
            if !self.in_maximal_ideal(x) {
                return Err(CriteriaError::NotInMaximalIdeal(self.render(x)));
            }
            if !self.is_artinian() && !x.is_homogeneous() {
                return Err(CriteriaError::Inhomogeneous(self.render(x)));
            }
        }
        Ok(())
    }

    /// `A/(elems)`, rerouted: a graded ring may become artinian.
    pub fn quotient(&self, elems: &[PolyOf<K>]) -> Result<Self, CriteriaError> {
        self.check_sequence(elems)?;
        let mut rels = self.relations.clone();
        rels.extend(elems.iter().cloned());
        LocalRing::new(&self.ring, &rels)
    }

    /// Whether the ideal `(a)` equals `(b)` in this ring.
    pub fn ideal_eq(&self, a: &[PolyOf<K>], b: &[PolyOf<K>]) -> bool {
        match &self.engine {
            Engine::Graded(g) => g.ideal_eq(a, b),
            Engine::Artinian(alg) => {
                let ea = self.elements(a).expect("artinian elements");
                let eb = self.elements(b).expect("artinian elements");
                alg.ideal(&ea) == alg.ideal(&eb)
            }
        }
    }

    /// Whether `f ∈ (gens)`.
    pub fn ideal_contains(&self, gens: &[PolyOf<K>], f: &PolyOf<K>) -> bool {
        match &self.engine {
            Engine::Graded(g) => g.ideal_contains(gens, f),
            Engine::Artinian(alg) => {
                let eg = self.elements(gens).expect("artinian elements");
                alg.ideal(&eg).contains(&self.element(f).expect("artinian element"))
            }
        }
    }

    /// Minimal generators of `ann(gens)`; `None` when `(gens) = 0`.
    pub fn annihilator_of(&self, gens: &[PolyOf<K>]) -> Option<Vec<PolyOf<K>>> {
        match &self.engine {
            Engine::Graded(g) => match g.annihilator_of_ideal(gens) {
                crate::poly::Colon::Whole => None,
                crate::poly::Colon::Ideal(v) => Some(v),
            },
            Engine::Artinian(a) => {
                let es = self.elements(gens).expect("artinian elements");
                let ideal = a.ideal(&es);
                if ideal.is_zero() {
                    return None;
                }
                let ann = a.annihilator_of(&ideal);
                Some(a.minimal_generators(&ann).iter().map(|e| self.poly_from_element(a, e)).collect())
            }
        }
    }

    pub fn describe(&self) -> String {
        let rels = self.render_all(&self.relations).join(", ");
        let base = self.ring.to_string();
        match &self.engine {
            Engine::Artinian(a) => format!("{base}/({rels}), artinian of dimension {}", a.dim()),
            Engine::Graded(g) => format!("{base}/({rels}), graded of Krull dimension {}", g.krull_dim()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::poly::MonomialOrder;

    fn ring(names: &[&str]) -> PolyRing<PrimeField> {
        PolyRing::new(PrimeField::new(101).unwrap(), names, MonomialOrder::GrevLex)
    }

    #[test]
    fn routes_to_the_right_engine() {
        let r = ring(&["x", "y", "z"]);
        let a = LocalRing::parse_new(&r, "x^2, y^2 + x*z, z^2").unwrap();
        assert_eq!(a.vector_dim(), Some(8));
        let r2 = ring(&["x", "y"]);
        let g = LocalRing::parse_new(&r2, "x*y").unwrap();
        assert!(!g.is_artinian());
        assert_eq!(g.krull_dim(), 1);
        let p = LocalRing::parse_new(&r2, "").unwrap();
        assert_eq!(p.krull_dim(), 2);
        assert!(matches!(LocalRing::parse_new(&r2, "x*y + x^3"), Err(CriteriaError::Unsupported(_))));
    }

    #[test]
    fn quotients_reroute_and_ideals_compare() {
        let r = ring(&["x", "y"]);
        let g = LocalRing::parse_new(&r, "x*y").unwrap();
        let q = g.quotient(&r.parse_list("x + y").unwrap()).unwrap();
        assert!(q.is_artinian());
        assert_eq!(q.vector_dim(), Some(2));
        let a = LocalRing::parse_new(&r, "x^2, y^2").unwrap();
        let xy = r.parse_list("x*y").unwrap();
        let ann = a.annihilator_of(&r.parse_list("x").unwrap()).unwrap();
        assert!(a.ideal_eq(&ann, &r.parse_list("x").unwrap()));
        assert!(a.ideal_contains(&ann, &xy[0]));
        assert!(matches!(a.quotient(&r.parse_list("1 + x").unwrap()), Err(CriteriaError::NotInMaximalIdeal(_))));
    }
}
