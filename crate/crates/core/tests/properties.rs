//! Randomized structural invariants over the artinian corpus rings.

mod common;

use common::{artinian, ARTINIAN};
use gorcheck_core::artin::FGModule;
use gorcheck_core::complex::{amplitude, homology, ChainMap, KoszulComplex};
use gorcheck_core::criteria::{
    gorenstein_ring_test, quasi_gorenstein_direct, random_sequence, LocalRing, SequenceStyle, Verdict,
};
use gorcheck_core::field::{Field, PrimeField};
use gorcheck_core::linalg::{Matrix, Subspace};
use gorcheck_core::poly::PolyOf;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const STYLES: [SequenceStyle; 3] = [SequenceStyle::Monomial, SequenceStyle::Sparse, SequenceStyle::Dense];

fn draw(ring: usize, seed: u64, len: usize, style: usize) -> (LocalRing<PrimeField>, Vec<PolyOf<PrimeField>>) {
    let a = artinian(ring);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let xs = random_sequence(&a, &mut rng, len, STYLES[style % 3]);
    (a, xs)
}

fn same(a: &Subspace<PrimeField>, b: &Subspace<PrimeField>) -> bool {
    a.contains_subspace(b) && b.contains_subspace(a)
}

fn inputs(max_len: usize) -> impl Strategy<Value = (usize, u64, usize, usize)> {
    (0..ARTINIAN.len(), any::<u64>(), 1..=max_len, 0..3usize)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(80))]

    /// QG(A→B) and QG(B→C) give QG(A→C); QG(A→C) and QG(A→B) give QG(B→C).
    #[test]
    fn quasi_gorenstein_maps_compose_along_towers((ring, seed, _, style) in inputs(1)) {
        let (a, xs) = draw(ring, seed, 2, style);
        prop_assume!(xs.len() == 2);
        let b = a.quotient(&xs[..1]).unwrap();
        let ab = quasi_gorenstein_direct(&a, &xs[..1], 10).unwrap().verdict;
        let bc = quasi_gorenstein_direct(&b, &xs[1..], 10).unwrap().verdict;
        let ac = quasi_gorenstein_direct(&a, &xs, 10).unwrap().verdict;
        prop_assume!(ab.is_decided() && bc.is_decided() && ac.is_decided());
        if ab == Verdict::Yes && bc == Verdict::Yes {
            prop_assert_eq!(ac, Verdict::Yes);
        }
        if ac == Verdict::Yes && ab == Verdict::Yes {
            prop_assert_eq!(bc, Verdict::Yes);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    /// Along a quasi-Gorenstein map, source and target are Gorenstein together.
    #[test]
    fn quasi_gorenstein_maps_preserve_gorensteinness((ring, seed, len, style) in inputs(2)) {
        let (a, xs) = draw(ring, seed, len, style);
        let qg = quasi_gorenstein_direct(&a, &xs, 10).unwrap();
        prop_assume!(qg.verdict == Verdict::Yes);
        let src = gorenstein_ring_test(&a).verdict;
        let dst = gorenstein_ring_test(&a.quotient(&xs).unwrap()).verdict;
        prop_assume!(src.is_decided() && dst.is_decided());
        prop_assert_eq!(src, dst);
    }

    /// H_0 of the Koszul complex is A/(x) and its top homology is ann(x).
    #[test]
    fn koszul_homology_ends((ring, seed, len, style) in inputs(3)) {
        let (a, xs) = draw(ring, seed, len, style);
        let alg = a.artinian().unwrap();
        let es = a.elements(&xs).unwrap();
        let id = alg.ideal(&es);
        let k = KoszulComplex::new(alg, &es);
        prop_assert!(homology(k.complex(), 0).cyclic_iso(alg, &id));
        let top = homology(k.complex(), es.len() as i32);
        prop_assert_eq!(top.dim(), alg.annihilator_of(&id).dim());
        prop_assert_eq!(amplitude(k.complex()).inf, Some(0));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    /// ann³ = ann, I ⊆ ann², ann(I + J) = ann I ∩ ann J.
    #[test]
    fn annihilator_lattice_laws((ring, seed, len, style) in inputs(3)) {
        let (a, xs) = draw(ring, seed, len, style);
        let alg = a.artinian().unwrap();
        let es = a.elements(&xs).unwrap();
        let (left, right) = es.split_at(es.len() / 2);
        let i = alg.ideal(left);
        let j = alg.ideal(right);
        let ann = alg.annihilator_of(&i);
        let ann2 = alg.annihilator_of(&ann);
        prop_assert!(ann2.contains_subspace(&i));
        prop_assert!(same(&alg.annihilator_of(&ann2), &ann));
        let sum = alg.annihilator_of(&i.sum(&j));
        prop_assert!(same(&sum, &ann.intersect(&alg.annihilator_of(&j))));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(80))]

    /// D(D(M)) ≅ M for cyclic M; D preserves length and annihilator.
    #[test]
    fn matlis_duality_is_an_involution((ring, seed, len, style) in inputs(2)) {
        let (a, xs) = draw(ring, seed, len, style);
        let alg = a.artinian().unwrap();
        let id = alg.ideal(&a.elements(&xs).unwrap());
        let m = FGModule::cyclic(alg, &id);
        let d = m.matlis_dual();
        let dd = d.matlis_dual();
        prop_assert!(d.verify(alg) && dd.verify(alg));
        prop_assert_eq!(d.dim(), m.dim());
        prop_assert!(same(&d.annihilator(alg), &m.annihilator(alg)));
        prop_assert!(dd.cyclic_iso(alg, &id));
        prop_assert!(FGModule::regular(alg).matlis_dual().is_injective(alg));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn rank_plus_nullity_is_the_column_count(
        rows in 1..7usize,
        cols in 1..7usize,
        entries in proptest::collection::vec(-3i64..4, 36),
    ) {
        let k = PrimeField::new(101).unwrap();
        let data: Vec<Vec<u64>> = (0..rows).map(|i| (0..cols).map(|j| k.from_i64(entries[i * 6 + j])).collect()).collect();
        let m = Matrix::from_rows(&k, data, cols);
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.len(), cols);
        prop_assert_eq!(m.rank(), m.transpose().rank());
        for v in &kernel {
            prop_assert!(m.mul_vec(v).iter().all(|c| k.is_zero(c)));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    /// d∘d = 0 for Koszul complexes and their shifts, tensors, duals, homs and cones.
    #[test]
    fn differentials_square_to_zero((ring, seed, len, style) in inputs(3), shift in -2i32..3) {
        let (a, xs) = draw(ring, seed, len, style);
        let alg = a.artinian().unwrap();
        let es = a.elements(&xs).unwrap();
        let (left, right) = es.split_at(es.len().div_ceil(2));
        let k1 = KoszulComplex::new(alg, left);
        let k2 = KoszulComplex::new(alg, right);
        let (c1, c2) = (k1.complex(), k2.complex());
        prop_assert!(c1.check_d_squared());
        prop_assert!(c1.shift(shift).check_d_squared());
        prop_assert!(c1.tensor(c2).check_d_squared());
        prop_assert!(c1.hom(c2).check_d_squared());
        prop_assert!(c1.dual().check_d_squared());
        let f = ChainMap::scalar(c1, &es[0]);
        prop_assert!(f.commutes());
        prop_assert!(f.cone().check_d_squared());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    /// The Koszul complex is a graded-commutative DG algebra.
    #[test]
    fn koszul_differential_is_a_derivation((ring, seed, len, style) in inputs(3)) {
        let (a, xs) = draw(ring, seed, len, style);
        let alg = a.artinian().unwrap();
        let k = KoszulComplex::new(alg, &a.elements(&xs).unwrap());
        prop_assert!(k.check_leibniz());
        prop_assert!(k.check_graded_commutative());
    }
}
