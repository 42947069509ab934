use rand::seq::SliceRandom;
use rand::Rng;

use super::local::{Engine, LocalRing};
use crate::field::Field;
use crate::poly::{Monomial, PolyOf};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SequenceStyle {
    /// Single standard monomials of positive degree.
    Monomial,
    /// Two-term combinations of standard monomials.
    Sparse,
    /// Random elements of the maximal ideal.
    Dense,
}

fn standard_monomials<K: Field>(a: &LocalRing<K>) -> Vec<PolyOf<K>> {
    let r = a.ring();
    match a.engine() {
        Engine::Artinian(alg) => alg.labels().iter().skip(1).map(|l| r.parse(l).expect("staircase label")).collect(),
        Engine::Graded(g) => (1..=2)
            .flat_map(|d| Monomial::all_of_degree(r.nvars(), d))
            .map(|m| r.monomial(m, r.field().one()))
            .filter(|p| !g.is_zero(p))
            .collect(),
    }
}

/// Up to `len` elements of `m`, each nonzero modulo the previous ones.
/// Graded rings get homogeneous elements.
pub fn random_sequence<K: Field, R: Rng + ?Sized>(a: &LocalRing<K>, rng: &mut R, len: usize, style: SequenceStyle) -> Vec<PolyOf<K>> {
    let r = a.ring();
    let k = r.field();
    let monos = standard_monomials(a);
    if monos.is_empty() {
        return Vec::new();
    }
    let nonzero = |rng: &mut R| loop {
        let c = k.random(rng);
        if !k.is_zero(&c) {
            break c;
        }
    };
    let mut out: Vec<PolyOf<K>> = Vec::new();
    let mut attempts = 0;
    while out.len() < len && attempts < 50 * len {
        attempts += 1;
        let cand = match style {
            SequenceStyle::Monomial => monos.choose(rng).unwrap().clone(),
            SequenceStyle::Sparse => {
                let f = monos.choose(rng).unwrap();
                let same: Vec<&PolyOf<K>> = monos.iter().filter(|g| a.is_artinian() || g.degree() == f.degree()).collect();
                let g = same.choose(rng).unwrap();
                r.add(f, &r.scale(g, &nonzero(rng)))
            }
            SequenceStyle::Dense => match a.engine() {
                Engine::Artinian(alg) => a.poly_from_element(alg, &alg.random_nonunit(rng)),
                Engine::Graded(_) => {
                    let d = monos.choose(rng).unwrap().degree();
                    monos
                        .iter()
                        .filter(|g| g.degree() == d)
                        .fold(r.zero(), |acc, g| r.add(&acc, &r.scale(g, &k.random(rng))))
                }
            },
        };
        if cand.is_zero() || a.ideal_contains(&out, &cand) {
            continue;
        }
        out.push(cand);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::poly::{MonomialOrder, PolyRing};
    use rand::SeedableRng;

    #[test]
    fn sequences_avoid_redundant_elements() {
        let r = PolyRing::new(PrimeField::new(101).unwrap(), &["x", "y", "z"], MonomialOrder::GrevLex);
        let a = LocalRing::parse_new(&r, "x^2, y^2 + x*z, z^2").unwrap();
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for style in [SequenceStyle::Monomial, SequenceStyle::Sparse, SequenceStyle::Dense] {
            let xs = random_sequence(&a, &mut rng, 3, style);
            assert!(!xs.is_empty());
            for i in 0..xs.len() {
                assert!(!a.ideal_contains(&xs[..i], &xs[i]));
            }
        }
    }
}
