//! Hand-computed values checked through the public API.

mod common;

use common::{artinian, local, pring};
use gorcheck_core::artin::FGModule;
use gorcheck_core::complex::{amplitude, homology, KoszulComplex};
use gorcheck_core::criteria::{
    annihilator_checks, gorenstein_ring_test, is_exact_element, quasi_gorenstein_direct, top_bottom_criterion, ExactKind,
    Verdict,
};
use gorcheck_core::field::{PrimeField, Rationals};
use gorcheck_core::linalg::Matrix;
use gorcheck_core::poly::{pfaffian_ideal, GradedQuotientRing, MonomialOrder, PolyRing, Presentation};
use gorcheck_core::resolution::{artinian_bass_prefix, ArtinianResolution, Certificate, GradedResolution};

#[test]
fn corpus_rings_are_artinian_with_expected_socles() {
    for (i, (_, _, gor)) in common::ARTINIAN.iter().enumerate() {
        let a = artinian(i);
        let alg = a.artinian().expect("artinian");
        assert_eq!(alg.is_gorenstein(), *gor, "{}", a.describe());
    }
}

#[test]
fn rank_agrees_over_prime_field_and_rationals() {
    let rows: &[&[i64]] = &[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]];
    let p = Matrix::from_i64(&PrimeField::new(101).unwrap(), rows);
    let q = Matrix::from_i64(&Rationals, rows);
    assert_eq!(p.rank(), 2);
    assert_eq!(q.rank(), 2);
    assert_eq!(p.kernel_basis().len(), 1);
    // Rank drops modulo 3 only where the determinant vanishes there.
    let m = Matrix::from_i64(&PrimeField::new(3).unwrap(), &[&[1, 1], &[1, 4]]);
    assert_eq!(m.rank(), 1);
}

#[test]
fn hilbert_functions() {
    let r = pring(&["x", "y", "z"]);
    let a = GradedQuotientRing::new(r.clone(), r.parse_list("x^2, y^2 + x*z, z^2").unwrap()).unwrap();
    assert_eq!(a.hilbert_function(4), vec![1, 3, 3, 1, 0]);
    let r2 = pring(&["x", "y"]);
    let node = GradedQuotientRing::new(r2.clone(), vec![r2.parse("x*y").unwrap()]).unwrap();
    assert_eq!(node.hilbert_function(3), vec![1, 2, 2, 2]);
    assert_eq!(node.krull_dim(), 1);
}

#[test]
fn residue_field_betti_numbers_double_when_m_squared_is_zero() {
    let a = local(&["x", "y"], "x^2, x*y, y^2");
    let alg = a.artinian().unwrap();
    let r = ArtinianResolution::resolve(alg, &FGModule::residue_field(alg), 4);
    assert_eq!(r.betti(), &[1, 2, 4, 8, 16]);
    assert!(r.is_minimal() && r.is_exact());
}

#[test]
fn residue_field_betti_numbers_of_a_complete_intersection() {
    let a = local(&["x", "y"], "x^2, y^2");
    let alg = a.artinian().unwrap();
    let r = ArtinianResolution::resolve(alg, &FGModule::residue_field(alg), 4);
    assert_eq!(r.betti(), &[1, 2, 3, 4, 5]);
}

#[test]
fn koszul_resolution_over_a_polynomial_ring_terminates() {
    let r = pring(&["x", "y"]);
    let a = GradedQuotientRing::polynomial_ring(r.clone());
    let mut res = GradedResolution::new(&a, &Presentation::cyclic(&[r.var(0), r.var(1)]));
    res.extend_to(4);
    assert_eq!(res.betti(), vec![1, 2, 1]);
    assert_eq!(res.shifts(2), &[2]);
    assert_eq!(res.tail(), Some(Certificate::Terminated { length: 2 }));
    let k = Presentation::cyclic(&[]);
    let lens: Vec<_> = (0..4).map(|i| res.ext(&k, i).length(&a)).collect();
    assert_eq!(lens, vec![Some(0), Some(0), Some(1), Some(0)]);
}

#[test]
fn gorenstein_rings_have_bass_numbers_one_then_zero() {
    let a = local(&["x", "y", "z"], "x^2, y^2 + x*z, z^2");
    let alg = a.artinian().unwrap();
    let bass = artinian_bass_prefix(alg, &FGModule::regular(alg), 3);
    assert_eq!(bass.coefficients, vec![1, 0, 0, 0]);
    let b = local(&["x", "y"], "x^2, x*y, y^2");
    let bass = artinian_bass_prefix(b.artinian().unwrap(), &FGModule::regular(b.artinian().unwrap()), 2);
    assert_eq!(bass.coefficients[0], 2);
}

#[test]
fn koszul_homology_on_x2_xy() {
    let r = pring(&["x", "y"]);
    let a = GradedQuotientRing::polynomial_ring(r.clone());
    let k = KoszulComplex::new(&a, &r.parse_list("x^2, x*y").unwrap());
    let amp = amplitude(k.complex());
    assert_eq!((amp.inf, amp.sup), (Some(0), Some(1)));
    assert!(homology(k.complex(), 1).cyclic_iso(&a, &[r.var(0)]));
    let ring = local(&["x", "y"], "");
    let tb = top_bottom_criterion(&ring, &r.parse_list("x^2, x*y").unwrap()).unwrap();
    assert!(!tb.passes);
    assert_eq!(tb.top_annihilator, vec!["x".to_string()]);
}

#[test]
fn exact_zero_divisor_on_the_node() {
    let a = local(&["x", "y"], "x*y");
    let e = is_exact_element(&a, &a.parse("x").unwrap()).unwrap();
    match &e.kind {
        ExactKind::ExactZeroDivisor { partner } => assert_eq!(partner, "y"),
        k => panic!("unexpected {k:?}"),
    }
    assert!(quasi_gorenstein_direct(&a, &[a.parse("x").unwrap()], 10).unwrap().verdict == Verdict::Yes);
}

#[test]
fn annihilator_of_y_z_on_a_line_and_a_plane() {
    let a = local(&["x", "y", "z"], "x*y, x*z");
    let xs = a.parse_list("y, z").unwrap();
    let c = annihilator_checks(&a, &xs).unwrap();
    assert_eq!(c.annihilator, vec!["x".to_string()]);
    assert!(c.cyclic_iso);
    assert_eq!(gorenstein_ring_test(&a).verdict, Verdict::No);
    assert_eq!(gorenstein_ring_test(&a.quotient(&xs).unwrap()).verdict, Verdict::Yes);
}

#[test]
fn five_generic_pfaffians() {
    use rand::SeedableRng;
    let k = PrimeField::new(101).unwrap();
    let r = PolyRing::new(k, &["x", "y", "z"], MonomialOrder::GrevLex);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    let m = gorcheck_core::poly::random_alternating_linear(&r, 5, &mut rng);
    let pf = pfaffian_ideal(&r, &m).unwrap();
    assert_eq!(pf.len(), 5);
    assert!(pf.iter().all(|f| f.degree() == Some(2)));
    let q = GradedQuotientRing::new(r.clone(), pf.clone()).unwrap();
    assert!(q.is_artinian());
    assert_eq!(q.hilbert_function(3), vec![1, 3, 1, 0]);
    assert_eq!(GradedQuotientRing::polynomial_ring(r).minimize_ideal(&pf).len(), 5);
}
