use serde::Serialize;
use serde_json::json;

use super::local::{Engine, LocalRing};
use super::{CheckReport, Verdict};
use crate::complex::{amplitude, homology, KoszulComplex};
use crate::field::Field;
use crate::poly::{GradedQuotientRing, PolyOf};
use crate::resolution::Certificate;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GorensteinRoute {
    /// Artinian: the socle is one-dimensional.
    Socle,
    /// The minimal generators of the defining ideal form a regular sequence.
    CompleteIntersection,
    /// Cohen-Macaulay of type one (or larger).
    CohenMacaulayType,
    /// depth < dim, so not Cohen-Macaulay.
    NotCohenMacaulay,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GorensteinOutcome {
    pub verdict: Verdict,
    pub route: GorensteinRoute,
    pub krull_dim: usize,
    pub depth: usize,
    /// `dim_k Ext^depth(k, A)`.
    pub cm_type: Option<u64>,
    /// Number of minimal generators of the defining ideal, graded case.
    pub ideal_generators: Option<usize>,
}

impl GorensteinOutcome {
    pub fn report(&self) -> CheckReport {
        let criterion = match self.route {
            GorensteinRoute::Socle => "artinian with one-dimensional socle",
            GorensteinRoute::CompleteIntersection => "defining ideal generated by a regular sequence",
            GorensteinRoute::CohenMacaulayType => "Cohen-Macaulay of type one",
            GorensteinRoute::NotCohenMacaulay => "depth below Krull dimension",
        };
        CheckReport::new(criterion, self.verdict, Certificate::Exact, serde_json::to_value(self).expect("serializable"))
    }
}

/// `depth A = n - sup K(vars; A)` and the type `dim_k H_sup`, from the
/// Koszul complex on the variables.
pub fn depth_and_type<K: Field>(g: &GradedQuotientRing<K>) -> (usize, u64) {
    let n = g.nvars();
    let vars: Vec<PolyOf<K>> = (0..n).map(|i| g.ring().var(i)).collect();
    let kc = KoszulComplex::new(g, &vars);
    let sup = amplitude(kc.complex()).sup.expect("H_0 = k is nonzero");
    let top = homology(kc.complex(), sup);
    let t = top.length(g).expect("Koszul homology on the variables has finite length");
    (n - sup as usize, t)
}

/// Decides Gorensteinness: socle dimension for artinian rings, complete
/// intersections directly, otherwise depth, Krull dimension and type.
pub fn gorenstein_ring_test<K: Field>(a: &LocalRing<K>) -> GorensteinOutcome {
    match a.engine() {
        Engine::Artinian(alg) => {
            let t = alg.socle().dim() as u64;
            GorensteinOutcome {
                verdict: Verdict::from_bool(t == 1),
                route: GorensteinRoute::Socle,
                krull_dim: 0,
                depth: 0,
                cm_type: Some(t),
                ideal_generators: None,
            }
        }
        Engine::Graded(g) => {
            let p = GradedQuotientRing::polynomial_ring(g.ring().clone());
            let gens = p.minimize_ideal(g.relations());
            let dim = g.krull_dim();
            let ci = gens.is_empty() || {
                let kc = KoszulComplex::new(&p, &gens);
                homology(kc.complex(), 1).is_zero(&p)
            };
            if ci {
                return GorensteinOutcome {
                    verdict: Verdict::Yes,
                    route: GorensteinRoute::CompleteIntersection,
                    krull_dim: dim,
                    depth: dim,
                    cm_type: Some(1),
                    ideal_generators: Some(gens.len()),
                };
            }
            let (depth, t) = depth_and_type(g);
            if depth < dim {
                return GorensteinOutcome {
                    verdict: Verdict::No,
                    route: GorensteinRoute::NotCohenMacaulay,
                    krull_dim: dim,
                    depth,
                    cm_type: None,
                    ideal_generators: Some(gens.len()),
                };
            }
            GorensteinOutcome {
                verdict: Verdict::from_bool(t == 1),
                route: GorensteinRoute::CohenMacaulayType,
                krull_dim: dim,
                depth,
                cm_type: Some(t),
                ideal_generators: Some(gens.len()),
            }
        }
    }
}

impl GorensteinOutcome {
    pub fn summary(&self) -> serde_json::Value {
        json!({ "verdict": self.verdict, "route": self.route })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::poly::{MonomialOrder, PolyRing};

    fn ring(names: &[&str], rels: &str) -> LocalRing<PrimeField> {
        let r = PolyRing::new(PrimeField::new(101).unwrap(), names, MonomialOrder::GrevLex);
        LocalRing::parse_new(&r, rels).unwrap()
    }

    #[test]
    fn ladder() {
        let g = gorenstein_ring_test(&ring(&["x", "y"], "x*y"));
        assert_eq!((g.verdict, g.route), (Verdict::Yes, GorensteinRoute::CompleteIntersection));
        let g = gorenstein_ring_test(&ring(&["x", "y", "z"], "x*y, x*z"));
        assert_eq!(g.verdict, Verdict::No);
        assert_eq!(g.krull_dim, 2);
        let g = gorenstein_ring_test(&ring(&["x", "y"], "x^2, x*y"));
        assert_eq!(g.verdict, Verdict::No);
        assert_eq!(g.route, GorensteinRoute::NotCohenMacaulay);
        let g = gorenstein_ring_test(&ring(&["x", "y", "z"], "x^2, y^2 + x*z, z^2"));
        assert_eq!((g.verdict, g.cm_type), (Verdict::Yes, Some(1)));
        let g = gorenstein_ring_test(&ring(&["x", "y"], "x^2, x*y, y^2"));
        assert_eq!((g.verdict, g.cm_type), (Verdict::No, Some(2)));
        let g = gorenstein_ring_test(&ring(&["x", "y", "z"], "x*y, x*z, y*z"));
        assert_eq!((g.verdict, g.route, g.cm_type), (Verdict::No, GorensteinRoute::CohenMacaulayType, Some(2)));
    }
}
