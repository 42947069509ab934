use serde::Serialize;
use serde_json::json;

use super::exact::is_exact_sequence;
use super::gorenstein::gorenstein_ring_test;
use super::local::{Engine, LocalRing};
use super::qg::{quasi_gorenstein_direct, ExtEntry, QgOutcome};
use super::{CheckReport, CriteriaError, Verdict};
use crate::artin::{FGModule, FiniteLocalAlgebra};
use crate::complex::{amplitude, homology, Amplitude, FreeComplex, GradedComplex, KoszulComplex, ModuleComplex};
use crate::field::Field;
use crate::linalg::{Matrix, Subspace};
use crate::poly::{PolyOf, Presentation};
use crate::resolution::{
    artinian_totally_reflexive_test, graded_totally_reflexive_test, ArtinianResolution, Certificate, GradedResolution, Status,
};
use crate::ring::HomologyRing;

/// `A ⋉ D` and the map `A → A ⋉ D`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrivialExt {
    pub dim: usize,
    pub socle_dim: usize,
    pub gorenstein: bool,
    /// `A → A ⋉ D` tested through `Ext_A(A ⋉ D, A)`.
    pub map: QgOutcome,
}

impl TrivialExt {
    pub fn report(&self) -> CheckReport {
        CheckReport::new(
            "trivial extension: socle dimension, and Ext of the extension over the base",
            Verdict::from_bool(self.gorenstein),
            Certificate::Exact,
            serde_json::to_value(self).expect("serializable"),
        )
    }
}

pub fn trivial_ext_checks<K: Field>(a: &FiniteLocalAlgebra<K>, d: &FGModule<K>, cutoff: usize) -> TrivialExt {
    let s = a.trivial_extension(d);
    let socle_dim = s.socle().dim();
    TrivialExt { dim: s.dim(), socle_dim, gorenstein: socle_dim == 1, map: qg_along_trivial_extension(a, d, cutoff) }
}

fn flatten<K: Field>(m: &Matrix<K>) -> Vec<K::Elem> {
    (0..m.rows()).flat_map(|r| m.row(r).to_vec()).collect()
}

/// Whether `A → S = A ⋉ D` is quasi-Gorenstein: `Hom_A(S, A) ≅ S` as
/// S-modules, `S` reflexive over `A` and `Ext^{≥1}_A(S, A) = 0`.
pub fn qg_along_trivial_extension<K: Field>(a: &FiniteLocalAlgebra<K>, d: &FGModule<K>, cutoff: usize) -> QgOutcome {
    let k = a.field();
    let s = a.trivial_extension(d);
    let (da, ds) = (a.dim(), s.dim());
    let s_over_a = FGModule::new(k, ds, s.mult_table()[..da].to_vec(), s.labels().to_vec());
    let hom = FGModule::hom(a, &s_over_a, &FGModule::regular(a));
    let h = hom.maps.len();
    let mut ext = vec![ExtEntry { degree: 0, length: Some(h as u64), zero: h == 0 }];
    let no = |ext, reason: &str| QgOutcome { verdict: Verdict::No, certificate: Certificate::Exact, shift: None, ext, reason: reason.into() };
    if h != ds {
        return no(ext, "Hom_A(S, A) and S have different dimensions");
    }
    let span = Subspace::span(k, da * ds, &hom.maps.iter().map(flatten).collect::<Vec<_>>());
    // (s·f)(t) = f(s t)
    let action: Vec<Matrix<K>> = s
        .mult_table()
        .iter()
        .map(|ms| {
            let cols: Vec<Vec<K::Elem>> =
                hom.maps.iter().map(|f| span.coordinates(&flatten(&f.mul(ms))).expect("Hom_A(S, A) is an S-module")).collect();
            Matrix::from_columns(k, h, &cols)
        })
        .collect();
    let over_s = FGModule::new(k, h, action, (0..h).map(|i| format!("f{}", i + 1)).collect());
    if !over_s.cyclic_iso(&s, &s.zero_ideal()) {
        return no(ext, "Hom_A(S, A) is not a free S-module of rank one");
    }
    let bidual = s_over_a.biduality_map(a);
    if bidual.rows() != bidual.cols() || bidual.rank() != bidual.cols() {
        return no(ext, "S is not reflexive over A");
    }
    let mut res = ArtinianResolution::new(a, &s_over_a);
    let c = res.ext_vanishing_from(1, cutoff);
    if c.certificate != Certificate::SelfInjective {
        let reg = FGModule::regular(a);
        for i in 1..=res.length().min(cutoff) {
            let e = res.ext(&reg, i);
            ext.push(ExtEntry { degree: i, length: Some(e.dim() as u64), zero: e.is_zero() });
            if !e.is_zero() {
                break;
            }
        }
    }
    let verdict: Verdict = (&c).into();
    QgOutcome { verdict, certificate: c.certificate, shift: (verdict == Verdict::Yes).then_some(0), ext, reason: c.reason }
}

/// `F ⊗ G` for resolutions `F` of `A/I` and `G` of `A/J`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TensorResolution {
    pub verdict: Verdict,
    pub i_in_j: bool,
    pub qg_i: Verdict,
    /// The resolution of `A/I` terminated within the cutoff.
    pub pd_i_finite: bool,
    pub qg_j: Verdict,
    /// Ranks of `F ⊗ G` in degrees `0, 1, 2, …` (both truncated at 2).
    pub ranks: Vec<usize>,
    /// `H_0(F ⊗ G) ≅ A/J`.
    pub h0_iso: bool,
    /// `H_1(F ⊗ G) = Tor_1(A/I, A/J)`.
    pub tor1_length: Option<u64>,
    pub tor1_nonzero: bool,
    pub reason: String,
}

impl TensorResolution {
    pub fn report(&self) -> CheckReport {
        CheckReport::new(
            "tensor product of resolutions: H_0 = A/J and Tor_1(A/I, A/J) nonzero",
            self.verdict,
            Certificate::Exact,
            serde_json::to_value(self).expect("serializable"),
        )
    }
}

fn tensor_summary<R: HomologyRing>(f: &FreeComplex<R>, g: &FreeComplex<R>, j: &[R::Elem]) -> (Vec<usize>, bool, Option<u64>, bool) {
    let t = f.tensor(g);
    let r = t.ring();
    let h0 = homology(&t, 0);
    let h1 = homology(&t, 1);
    let ranks = (0..=t.hi().max(0)).map(|i| t.rank(i)).collect();
    (ranks, r.module_cyclic_iso(&h0, j), r.module_length(&h1), !r.module_is_zero(&h1))
}

pub fn tensor_resolution_construction<K: Field>(
    a: &LocalRing<K>,
    i: &[PolyOf<K>],
    j: &[PolyOf<K>],
    cutoff: usize,
) -> Result<TensorResolution, CriteriaError> {
    a.check_sequence(i)?;
    a.check_sequence(j)?;
    let i_in_j = i.iter().all(|f| a.ideal_contains(j, f));
    let qg_i = quasi_gorenstein_direct(a, i, cutoff)?.verdict;
    let qg_j = quasi_gorenstein_direct(a, j, cutoff)?.verdict;
    let (pd_i_finite, summary) = match a.engine() {
        Engine::Artinian(alg) => {
            let id = alg.ideal(&a.elements(i)?);
            let jd = a.elements(j)?;
            let mut fi = ArtinianResolution::new(alg, &FGModule::cyclic(alg, &id));
            fi.extend_to(cutoff + 1);
            let fj = ArtinianResolution::resolve(alg, &FGModule::cyclic(alg, &alg.ideal(&jd)), 2);
            let fi2 = ArtinianResolution::resolve(alg, &FGModule::cyclic(alg, &id), 2);
            (fi.is_terminated(), tensor_summary(&fi2.complex(), &fj.complex(), &jd))
        }
        Engine::Graded(g) => {
            let mut fi = GradedResolution::new(g, &Presentation::cyclic(i));
            fi.extend_to(cutoff + 1);
            let fj = GradedResolution::resolve(g, &Presentation::cyclic(j), 2);
            let fi2 = GradedResolution::resolve(g, &Presentation::cyclic(i), 2);
            let jr: Vec<PolyOf<K>> = j.iter().map(|f| g.reduce(f)).collect();
            (fi.is_terminated(), tensor_summary(&fi2.complex(), &fj.complex(), &jr))
        }
    };
    let (ranks, h0_iso, tor1_length, tor1_nonzero) = summary;
    let preconditions = i_in_j && qg_i == Verdict::Yes && pd_i_finite && qg_j == Verdict::Yes;
    let (verdict, reason) = if !h0_iso {
        (Verdict::No, "H_0 of the tensor product is not A/J".to_string())
    } else if preconditions {
        (Verdict::Yes, "preconditions hold and H_0 = A/J".to_string())
    } else {
        let mut failed = Vec::new();
        if !i_in_j {
            failed.push("I is not contained in J");
        }
        if qg_i != Verdict::Yes {
            failed.push("A -> A/I not certified quasi-Gorenstein");
        }
        if !pd_i_finite {
            failed.push("A/I has no finite resolution within the cutoff");
        }
        if qg_j != Verdict::Yes {
            failed.push("A -> A/J not certified quasi-Gorenstein");
        }
        (Verdict::Unknown, format!("quantities computed, preconditions not met: {}", failed.join("; ")))
    };
    Ok(TensorResolution { verdict, i_in_j, qg_i, pd_i_finite, qg_j, ranks, h0_iso, tor1_length, tor1_nonzero, reason })
}

/// `dim H_d(Hom(F_M, K))` against `Σ_i C(n, i) dim Ext^{i-d}(M, A)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomExtRow {
    pub degree: i32,
    pub hom_homology: usize,
    pub from_ext: usize,
}

/// Amplitudes and G-dimension data for `M ⊗ K(x̲)` with
/// `M = A/((x̲) + J)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GpChecks {
    pub verdict: Verdict,
    pub n: usize,
    pub koszul: Amplitude,
    pub module_tensor_koszul: Amplitude,
    /// `inf Hom_A(M, K)`; `Gdim_K(M ⊗ K) = -inf`.
    pub hom_inf: Option<i32>,
    pub gdim_over_koszul: Option<i32>,
    pub ezd_sequence: bool,
    pub gorenstein: Verdict,
    pub module_totally_reflexive: Verdict,
    /// `amp(M ⊗ K) = amp K = n`, asserted for sequences of exact zero divisors.
    pub amplitudes_asserted: Option<bool>,
    /// `inf Hom(M, K) = 0`, asserted for Gorenstein `A` and totally reflexive `M`.
    pub gdim_zero_asserted: Option<bool>,
    /// Artinian rings only.
    pub hom_ext_rows: Vec<HomExtRow>,
    pub hom_ext_agree: Option<bool>,
}

impl GpChecks {
    pub fn report(&self) -> CheckReport {
        CheckReport::new(
            "Koszul amplitudes and G-dimension of M tensor K, asserted where hypotheses are verified",
            self.verdict,
            Certificate::Exact,
            serde_json::to_value(self).expect("serializable"),
        )
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

pub fn gp_dg_module_checks<K: Field>(
    a: &LocalRing<K>,
    xs: &[PolyOf<K>],
    extra: &[PolyOf<K>],
    cutoff: usize,
) -> Result<GpChecks, CriteriaError> {
    a.check_sequence(xs)?;
    a.check_sequence(extra)?;
    let n = xs.len();
    let (stages, _) = is_exact_sequence(a, xs)?;
    let ezd_sequence = stages.iter().all(|s| s.is_ezd());
    let gorenstein = gorenstein_ring_test(a).verdict;
    let mut ideal = xs.to_vec();
    ideal.extend(extra.iter().cloned());
    let (koszul, module_tensor_koszul, hom_amp, tr, rows) = match a.engine() {
        Engine::Artinian(alg) => {
            let es = a.elements(xs)?;
            let kc = KoszulComplex::new(alg, &es);
            let m = FGModule::cyclic(alg, &alg.ideal(&a.elements(&ideal)?));
            let amp_k = amplitude(kc.complex());
            let amp_mk = ModuleComplex::tensor_free_with_module(alg, kc.complex(), &m).amplitude(alg);
            let hom = ModuleComplex::hom_from_module(alg, &m, kc.complex()).amplitude(alg);
            let tr = artinian_totally_reflexive_test(alg, &m, cutoff);
            let len = n + 2;
            let mut res = ArtinianResolution::resolve(alg, &m, len);
            let reg = FGModule::regular(alg);
            let ext: Vec<usize> = (0..len).map(|j| res.ext(&reg, j).dim()).collect();
            let c = res.complex().hom(kc.complex());
            let lo = n as i32 - len as i32 + 1;
            let rows = (lo..=n as i32)
                .map(|d| {
                    let from_ext = (0..=n)
                        .filter(|&i| i as i32 >= d)
                        .map(|i| binomial(n, i) * ext[(i as i32 - d) as usize])
                        .sum();
                    HomExtRow { degree: d, hom_homology: homology(&c, d).dim(), from_ext }
                })
                .collect::<Vec<_>>();
            (amp_k, amp_mk, hom, tr, rows)
        }
        Engine::Graded(g) => {
            let red: Vec<PolyOf<K>> = xs.iter().map(|x| g.reduce(x)).collect();
            let kc = KoszulComplex::new(g, &red);
            let m = Presentation::cyclic(&ideal);
            let amp_k = amplitude(kc.complex());
            let amp_mk = GradedComplex::tensor_with_module(kc.complex(), &m).amplitude(g);
            let hom = GradedComplex::hom_from_module(&m, kc.complex()).amplitude(g);
            let tr = graded_totally_reflexive_test(g, &m, cutoff);
            (amp_k, amp_mk, hom, tr, Vec::new())
        }
    };
    let module_totally_reflexive: Verdict = tr.status.into();
    let amplitudes_asserted =
        ezd_sequence.then(|| module_tensor_koszul.amp() == Some(n as i32) && koszul.amp() == Some(n as i32));
    let gdim_zero_asserted =
        (gorenstein == Verdict::Yes && tr.status == Status::CertifiedYes).then(|| hom_amp.inf == Some(0));
    let hom_ext_agree = (!rows.is_empty()).then(|| rows.iter().all(|r| r.hom_homology == r.from_ext));
    let checks: Vec<bool> = [amplitudes_asserted, gdim_zero_asserted, hom_ext_agree].into_iter().flatten().collect();
    let verdict = if checks.iter().any(|c| !c) {
        Verdict::No
    } else if checks.is_empty() {
        Verdict::Unknown
    } else {
        Verdict::Yes
    };
    Ok(GpChecks {
        verdict,
        n,
        koszul,
        module_tensor_koszul,
        hom_inf: hom_amp.inf,
        gdim_over_koszul: hom_amp.inf.map(|i| -i),
        ezd_sequence,
        gorenstein,
        module_totally_reflexive,
        amplitudes_asserted,
        gdim_zero_asserted,
        hom_ext_rows: rows,
        hom_ext_agree,
    })
}

impl TensorResolution {
    pub fn summary(&self) -> serde_json::Value {
        json!({ "verdict": self.verdict, "h0_iso": self.h0_iso, "tor1_nonzero": self.tor1_nonzero })
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
    fn trivial_extensions() {
        let b = ring(&["x", "y"], "x^2, x*y, y^2");
        let alg = b.artinian().unwrap();
        let t = trivial_ext_checks(alg, &FGModule::regular(alg).matlis_dual(), 10);
        assert!(t.gorenstein);
        assert_eq!(t.dim, 6);
        let t = trivial_ext_checks(alg, &FGModule::regular(alg), 10);
        assert!(!t.gorenstein);
        assert_eq!(t.map.verdict, Verdict::Yes, "{}", t.map.reason);
        let a = ring(&["x", "y", "z"], "x^2, y^2 + x*z, z^2");
        let alg = a.artinian().unwrap();
        let t = trivial_ext_checks(alg, &FGModule::regular(alg), 10);
        assert!(t.gorenstein);
        assert_eq!(t.map.verdict, Verdict::Yes);
        assert_eq!(t.map.certificate, Certificate::SelfInjective);
    }

    #[test]
    fn tensor_resolutions() {
        let a = ring(&["x", "y", "z"], "x^2, y^2 + x*z, z^2");
        let t = tensor_resolution_construction(&a, &a.parse_list("x").unwrap(), &a.parse_list("x, y, z").unwrap(), 6).unwrap();
        assert!(t.h0_iso && t.tor1_nonzero && t.i_in_j);
        assert_eq!(t.tor1_length, Some(1));
        assert!(!t.pd_i_finite);
        assert_eq!(t.verdict, Verdict::Unknown);
        let t = tensor_resolution_construction(&a, &[], &[], 6).unwrap();
        assert!(t.h0_iso && !t.tor1_nonzero);
        assert_eq!(t.verdict, Verdict::Yes);
        let p = ring(&["x", "y"], "");
        let t = tensor_resolution_construction(&p, &p.parse_list("x").unwrap(), &p.parse_list("x, y").unwrap(), 6).unwrap();
        assert_eq!(t.verdict, Verdict::Yes, "{}", t.reason);
        assert!(t.tor1_nonzero);
    }

    #[test]
    fn dg_module_checks() {
        let a = ring(&["x", "y"], "x*y");
        let g = gp_dg_module_checks(&a, &a.parse_list("x").unwrap(), &[], 10).unwrap();
        assert_eq!(g.module_tensor_koszul.amp(), Some(1));
        assert_eq!(g.koszul.amp(), Some(1));
        assert_eq!(g.hom_inf, Some(0));
        assert_eq!(g.verdict, Verdict::Yes);
        let b = ring(&["x", "y", "z"], "x^2, y^2 + x*z, z^2");
        let g = gp_dg_module_checks(&b, &b.parse_list("x, y, z").unwrap(), &[], 10).unwrap();
        assert_eq!(g.koszul.amp(), Some(3));
        assert_eq!(g.hom_ext_agree, Some(true), "{:?}", g.hom_ext_rows);
        let g = gp_dg_module_checks(&b, &b.parse_list("x").unwrap(), &b.parse_list("y").unwrap(), 10).unwrap();
        assert_eq!(g.hom_ext_agree, Some(true), "{:?}", g.hom_ext_rows);
    }
}
