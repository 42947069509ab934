use serde::Serialize;
use serde_json::json;

use super::exact::{is_exact_sequence, ExactElement};
use super::local::{Engine, LocalRing};
use super::{CheckReport, CriteriaError, Verdict};
use crate::artin::FGModule;
use crate::complex::{amplitude, homology, Amplitude, KoszulComplex};
use crate::field::Field;
use crate::poly::{Colon, PolyOf, Presentation, Subquotient};
use crate::resolution::{graded_totally_reflexive_test, ArtinianResolution, Certificate, GradedResolution, Status};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtEntry {
    pub degree: usize,
    /// `None` for a module of infinite length.
    pub length: Option<u64>,
    pub zero: bool,
}

/// Outcome of testing `A → A/I` for being quasi-Gorenstein.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QgOutcome {
    pub verdict: Verdict,
    pub certificate: Certificate,
    /// The degree `g` carrying `Ext^g(A/I, A) ≅ A/I`, also `Gdim_A A/I`.
    pub shift: Option<usize>,
    pub ext: Vec<ExtEntry>,
    pub reason: String,
}

impl QgOutcome {
    fn new(verdict: Verdict, certificate: Certificate, shift: Option<usize>, ext: Vec<ExtEntry>, reason: impl Into<String>) -> Self {
        QgOutcome { verdict, certificate, shift, ext, reason: reason.into() }
    }

    pub fn report(&self) -> CheckReport {
        CheckReport::new(
            "Ext(A/I, A) concentrated in one degree g and cyclic with annihilator I there, with finite G-dimension",
            self.verdict,
            self.certificate,
            json!({
                "shift": self.shift,
                "gdim": self.shift,
                "ext": self.ext,
                "reason": self.reason,
            }),
        )
    }
}

/// Decides whether `A → A/I` is quasi-Gorenstein from `Ext_A(A/I, A)`.
///
/// Artinian rings force `g = 0`, so the test is `ann(I) ≅ A/I` plus total
/// reflexivity of `A/I`. For graded rings the first nonzero `Ext^g` must be
/// `≅ A/I`, higher Ext must vanish with a certified tail, and the
/// G-dimension must be finite (terminating resolution, or a totally
/// reflexive `g`-th syzygy).
pub fn quasi_gorenstein_direct<K: Field>(a: &LocalRing<K>, ideal: &[PolyOf<K>], cutoff: usize) -> Result<QgOutcome, CriteriaError> {
    a.check_sequence(ideal)?;
    match a.engine() {
        Engine::Artinian(alg) => {
            let id = alg.ideal(&a.elements(ideal)?);
            let b = FGModule::cyclic(alg, &id);
            let ann = alg.annihilator_of(&id);
            let mut ext = vec![ExtEntry { degree: 0, length: Some(ann.dim() as u64), zero: ann.is_zero() }];
            if !FGModule::from_ideal(alg, &ann).cyclic_iso(alg, &id) {
                return Ok(QgOutcome::new(Verdict::No, Certificate::Exact, None, ext, "Hom(A/I, A) = ann(I) is not isomorphic to A/I"));
            }
            let bidual = b.biduality_map(alg);
            if bidual.rows() != bidual.cols() || bidual.rank() != bidual.cols() {
                return Ok(QgOutcome::new(Verdict::No, Certificate::Exact, None, ext, "A/I is not reflexive, so its G-dimension is infinite"));
            }
            let mut res = ArtinianResolution::new(alg, &b);
            let c = res.ext_vanishing_from(1, cutoff);
            if c.certificate != Certificate::SelfInjective {
                let reg = FGModule::regular(alg);
                let top = res.length().min(cutoff);
                for i in 1..=top {
                    let e = res.ext(&reg, i);
                    ext.push(ExtEntry { degree: i, length: Some(e.dim() as u64), zero: e.is_zero() });
                    if !e.is_zero() {
                        break;
                    }
                }
            }
            let verdict: Verdict = (&c).into();
            let shift = (verdict == Verdict::Yes).then_some(0);
            Ok(QgOutcome::new(verdict, c.certificate, shift, ext, c.reason))
        }
        Engine::Graded(g) => {
            let b = Presentation::cyclic(ideal);
            let free = Presentation::free(vec![0]);
            let mut res = GradedResolution::new(g, &b);
            let mut ext = Vec::new();
            let mut first = None;
            for i in 0..=cutoff {
                let e = res.ext(&free, i);
                let zero = e.is_zero(g);
                ext.push(ExtEntry { degree: i, length: if zero { Some(0) } else { e.length(g) }, zero });
                if !zero {
                    first = Some((i, e));
                    break;
                }
            }
            let Some((shift, eg)) = first else {
                return Ok(QgOutcome::new(
                    Verdict::Unknown,
                    Certificate::UpToCutoff { cutoff },
                    None,
                    ext,
                    format!("Ext^i(A/I, A) = 0 for i <= {cutoff}"),
                ));
            };
            if !eg.cyclic_iso(g, ideal) {
                return Ok(QgOutcome::new(
                    Verdict::No,
                    Certificate::Exact,
                    None,
                    ext,
                    format!("the first nonzero Ext^{shift}(A/I, A) is not isomorphic to A/I"),
                ));
            }
            let c = res.ext_vanishing_from(shift + 1, cutoff);
            match c.status {
                Status::CertifiedNo => return Ok(QgOutcome::new(Verdict::No, Certificate::Exact, None, ext, c.reason)),
                Status::Inconclusive => return Ok(QgOutcome::new(Verdict::Unknown, c.certificate, None, ext, c.reason)),
                Status::CertifiedYes => {}
            }
            if let Certificate::Terminated { .. } = c.certificate {
                return Ok(QgOutcome::new(Verdict::Yes, c.certificate, Some(shift), ext, format!("{}; projective dimension is finite", c.reason)));
            }
            let syz = res.syzygy(shift);
            let tr = graded_totally_reflexive_test(g, &syz, cutoff);
            let reason = format!("{}; syzygy {shift} totally reflexive: {}", c.reason, tr.reason);
            Ok(match tr.status {
                Status::CertifiedYes => QgOutcome::new(Verdict::Yes, c.certificate, Some(shift), ext, reason),
                Status::CertifiedNo => QgOutcome::new(Verdict::No, Certificate::Exact, None, ext, reason),
                Status::Inconclusive => QgOutcome::new(Verdict::Unknown, tr.certificate, None, ext, reason),
            })
        }
    }
}

/// Homology amplitude of `K(x̲; A)`.
pub fn koszul_sup<K: Field>(a: &LocalRing<K>, xs: &[PolyOf<K>]) -> Result<Amplitude, CriteriaError> {
    a.check_sequence(xs)?;
    Ok(match a.engine() {
        Engine::Artinian(alg) => amplitude(KoszulComplex::new(alg, &a.elements(xs)?).complex()),
        Engine::Graded(g) => {
            let red: Vec<PolyOf<K>> = xs.iter().map(|x| g.reduce(x)).collect();
            amplitude(KoszulComplex::new(g, &red).complex())
        }
    })
}

/// The top homology `H_sup` of a Koszul complex compared with `H_0 = A/(x̲)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TopBottom {
    pub sup: i32,
    pub top_generators: usize,
    pub top_length: Option<u64>,
    /// Minimal generators of `ann(H_sup)`.
    pub top_annihilator: Vec<String>,
    /// `H_sup ≅ A/(x̲)`.
    pub passes: bool,
}

impl TopBottom {
    pub fn report(&self) -> CheckReport {
        CheckReport::new(
            "top and bottom Koszul homology isomorphic (necessary for the augmentation to be quasi-Gorenstein)",
            Verdict::from_bool(self.passes),
            Certificate::Exact,
            json!({
                "outcome": if self.passes { "criterion passes" } else { "obstruction found" },
                "sup": self.sup,
                "top_generators": self.top_generators,
                "top_length": self.top_length,
                "top_annihilator": self.top_annihilator,
            }),
        )
    }
}

pub fn top_bottom_criterion<K: Field>(a: &LocalRing<K>, xs: &[PolyOf<K>]) -> Result<TopBottom, CriteriaError> {
    a.check_sequence(xs)?;
    match a.engine() {
        Engine::Artinian(alg) => {
            let es = a.elements(xs)?;
            let kc = KoszulComplex::new(alg, &es);
            let sup = amplitude(kc.complex()).sup.expect("H_0 = A/(x) is nonzero");
            let h = homology(kc.complex(), sup);
            let ann = h.annihilator(alg);
            let top_annihilator = alg.minimal_generators(&ann).iter().map(|e| alg.render(e)).collect();
            Ok(TopBottom {
                sup,
                top_generators: h.num_generators(),
                top_length: Some(h.dim() as u64),
                top_annihilator,
                passes: h.cyclic_iso(alg, &alg.ideal(&es)),
            })
        }
        Engine::Graded(g) => {
            let red: Vec<PolyOf<K>> = xs.iter().map(|x| g.reduce(x)).collect();
            let kc = KoszulComplex::new(g, &red);
            let sup = amplitude(kc.complex()).sup.expect("H_0 = A/(x) is nonzero");
            let h = homology(kc.complex(), sup);
            let ann = g.colon_generators(&h.annihilator(g));
            Ok(TopBottom {
                sup,
                top_generators: h.num_generators(g),
                top_length: h.length(g),
                top_annihilator: a.render_all(&ann),
                passes: h.cyclic_iso(g, &red),
            })
        }
    }
}

/// Whether `K(x̲) → A/(x̲)` is quasi-Gorenstein, decided by exactness of
/// the sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KoszulAugmentation {
    pub verdict: Verdict,
    pub stages: Vec<ExactElement>,
    pub koszul: Amplitude,
    /// `Gdim_K H_0(K) = -sup K`, reported when the verdict is yes.
    pub gdim_of_h0: Option<i32>,
    pub annihilator_nonzero: bool,
}

impl KoszulAugmentation {
    pub fn report(&self) -> CheckReport {
        CheckReport::new(
            "sequence is exact (each element regular or an exact zero divisor modulo the previous)",
            self.verdict,
            Certificate::Exact,
            serde_json::to_value(self).expect("serializable"),
        )
    }
}

pub fn koszul_augmentation_qg<K: Field>(a: &LocalRing<K>, xs: &[PolyOf<K>]) -> Result<KoszulAugmentation, CriteriaError> {
    let (stages, rep) = is_exact_sequence(a, xs)?;
    let koszul = koszul_sup(a, xs)?;
    let annihilator_nonzero = a.annihilator_of(xs).is_none_or(|g| !g.is_empty());
    let gdim_of_h0 = (rep.verdict == Verdict::Yes).then(|| -koszul.sup.unwrap_or(0));
    Ok(KoszulAugmentation { verdict: rep.verdict, stages, koszul, gdim_of_h0, annihilator_nonzero })
}

/// `ann(x̲)` compared with `A/(x̲)` and the double annihilator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnnihilatorChecks {
    pub annihilator: Vec<String>,
    pub nonzero: bool,
    /// `ann(x̲) ≅ A/(x̲)` as modules.
    pub cyclic_iso: bool,
    /// `ann(ann(x̲)) = (x̲)`.
    pub double_annihilator: bool,
}

pub fn annihilator_checks<K: Field>(a: &LocalRing<K>, xs: &[PolyOf<K>]) -> Result<AnnihilatorChecks, CriteriaError> {
    a.check_sequence(xs)?;
    match a.engine() {
        Engine::Artinian(alg) => {
            let id = alg.ideal(&a.elements(xs)?);
            let ann = alg.annihilator_of(&id);
            Ok(AnnihilatorChecks {
                annihilator: alg.minimal_generators(&ann).iter().map(|e| alg.render(e)).collect(),
                nonzero: !ann.is_zero(),
                cyclic_iso: FGModule::from_ideal(alg, &ann).cyclic_iso(alg, &id),
                double_annihilator: alg.annihilator_of(&ann) == id,
            })
        }
        Engine::Graded(g) => {
            let ann = match g.annihilator_of_ideal(xs) {
                Colon::Whole => vec![g.ring().one()],
                Colon::Ideal(v) => v,
            };
            let module = Subquotient { shifts: vec![0], gens: ann.iter().map(|p| vec![p.clone()]).collect(), rels: vec![] }.to_presentation(g);
            let double = g.colon_generators(&g.annihilator_of_ideal(&ann));
            Ok(AnnihilatorChecks {
                annihilator: a.render_all(&ann),
                nonzero: !ann.is_empty(),
                cyclic_iso: !ann.is_empty() && module.cyclic_iso(g, xs),
                double_annihilator: g.ideal_eq(&double, xs),
            })
        }
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
    fn direct_test_on_small_examples() {
        let p = ring(&["x", "y"], "");
        let q = quasi_gorenstein_direct(&p, &p.parse_list("x, y").unwrap(), 10).unwrap();
        assert_eq!(q.verdict, Verdict::Yes);
        assert_eq!(q.shift, Some(2));
        let a = ring(&["x", "y", "z"], "x^2, y^2 + x*z, z^2");
        let q = quasi_gorenstein_direct(&a, &a.parse_list("x").unwrap(), 10).unwrap();
        assert_eq!((q.verdict, q.shift), (Verdict::Yes, Some(0)));
        let q = quasi_gorenstein_direct(&a, &a.parse_list("y").unwrap(), 10).unwrap();
        assert_eq!(q.verdict, Verdict::No);
    }

    #[test]
    fn graded_periodic_case_certifies() {
        let a = ring(&["x", "y"], "x*y");
        let q = quasi_gorenstein_direct(&a, &a.parse_list("x").unwrap(), 10).unwrap();
        assert_eq!((q.verdict, q.shift), (Verdict::Yes, Some(0)), "{}", q.reason);
        let b = ring(&["x", "y", "z"], "x*y, x*z");
        let q = quasi_gorenstein_direct(&b, &b.parse_list("y, z").unwrap(), 10).unwrap();
        assert_eq!(q.verdict, Verdict::No, "{}", q.reason);
    }

    #[test]
    fn top_bottom_examples() {
        let p = ring(&["x", "y"], "");
        let t = top_bottom_criterion(&p, &p.parse_list("x^2, x*y").unwrap()).unwrap();
        assert_eq!(t.sup, 1);
        assert!(!t.passes);
        assert_eq!(t.top_annihilator, vec!["x".to_string()]);
        let a = ring(&["x", "y", "z"], "x^2, y^2 + x*z, z^2");
        let t = top_bottom_criterion(&a, &a.parse_list("x, y, z").unwrap()).unwrap();
        assert!(t.passes);
        assert_eq!(t.sup, 3);
        let b = ring(&["x", "y", "z"], "x*y, x*z");
        let t = top_bottom_criterion(&b, &b.parse_list("y, z").unwrap()).unwrap();
        assert!(t.passes);
    }

    #[test]
    fn augmentation_and_annihilators() {
        let a = ring(&["x", "y", "z"], "x^2, y^2 + x*z, z^2");
        let xs = a.parse_list("x, y, z").unwrap();
        let k = koszul_augmentation_qg(&a, &xs).unwrap();
        assert_eq!(k.verdict, Verdict::Yes);
        assert_eq!(k.gdim_of_h0, Some(-3));
        let c = annihilator_checks(&a, &xs).unwrap();
        assert!(c.nonzero && c.cyclic_iso && c.double_annihilator);
        let p = ring(&["x", "y"], "");
        let k = koszul_augmentation_qg(&p, &p.parse_list("x^2, x*y").unwrap()).unwrap();
        assert_eq!(k.verdict, Verdict::No);
        let b = ring(&["x", "y", "z"], "x*y, x*z");
        let c = annihilator_checks(&b, &b.parse_list("y, z").unwrap()).unwrap();
        assert_eq!(c.annihilator, vec!["x".to_string()]);
        assert!(c.cyclic_iso);
    }
}
