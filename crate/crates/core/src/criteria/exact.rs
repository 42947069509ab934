use serde::Serialize;
use serde_json::json;

use super::local::{Engine, LocalRing};
use super::{CheckReport, CriteriaError, Verdict};
use crate::artin::EzdFailure;
use crate::field::Field;
use crate::poly::{Colon, PolyOf};
use crate::resolution::Certificate;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ExactKind {
    Regular,
    ExactZeroDivisor { partner: String },
    NotExact { failure: EzdFailure },
}

/// Whether one element is regular or an exact zero divisor, with the
/// annihilators that decide it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactElement {
    pub element: String,
    pub kind: ExactKind,
    /// Minimal generators of `ann(x)`; empty for a regular element.
    pub annihilator: Vec<String>,
    /// Minimal generators of `ann(y)` for the candidate partner `y`.
    pub partner_annihilator: Option<Vec<String>>,
}

impl ExactElement {
    pub fn is_exact(&self) -> bool {
        !matches!(self.kind, ExactKind::NotExact { .. })
    }
    pub fn is_ezd(&self) -> bool {
        matches!(self.kind, ExactKind::ExactZeroDivisor { .. })
    }
}

/// Classifies `x ∈ m` as regular, an exact zero divisor, or neither.
pub fn is_exact_element<K: Field>(a: &LocalRing<K>, x: &PolyOf<K>) -> Result<ExactElement, CriteriaError> {
    a.check_sequence(std::slice::from_ref(x))?;
    let element = a.render(x);
    let out = |kind, annihilator, partner_annihilator| ExactElement { element: element.clone(), kind, annihilator, partner_annihilator };
    match a.engine() {
        Engine::Artinian(alg) => {
            let e = a.element(x)?;
            let ann = alg.annihilator(&e);
            if ann.is_zero() {
                return Ok(out(ExactKind::Regular, vec![], None));
            }
            let ann_gens: Vec<String> = alg.minimal_generators(&ann).iter().map(|g| alg.render(g)).collect();
            match alg.exact_zero_divisor(&e) {
                Ok(y) => {
                    let partner_ann: Vec<String> = alg.minimal_generators(&alg.annihilator(&y)).iter().map(|g| alg.render(g)).collect();
                    Ok(out(ExactKind::ExactZeroDivisor { partner: alg.render(&y) }, ann_gens, Some(partner_ann)))
                }
                Err(failure) => {
                    let partner_ann = match &failure {
                        EzdFailure::DoubleAnnihilatorMismatch => {
                            let y = &alg.minimal_generators(&ann)[0];
                            Some(alg.minimal_generators(&alg.annihilator(y)).iter().map(|g| alg.render(g)).collect())
                        }
                        _ => None,
                    };
                    Ok(out(ExactKind::NotExact { failure }, ann_gens, partner_ann))
                }
            }
        }
        Engine::Graded(g) => {
            let gens = match g.annihilator(x) {
                Colon::Whole => return Ok(out(ExactKind::NotExact { failure: EzdFailure::Zero }, vec!["1".into()], None)),
                Colon::Ideal(gens) => gens,
            };
            if gens.is_empty() {
                return Ok(out(ExactKind::Regular, vec![], None));
            }
            let ann_gens = a.render_all(&gens);
            if gens.len() != 1 {
                let failure = EzdFailure::AnnihilatorNotCyclic { generators: gens.len() };
                return Ok(out(ExactKind::NotExact { failure }, ann_gens, None));
            }
            let y = &gens[0];
            let ann_y = g.colon_generators(&g.annihilator(y));
            let partner_ann = Some(a.render_all(&ann_y));
            if g.ideal_eq(&ann_y, std::slice::from_ref(x)) {
                Ok(out(ExactKind::ExactZeroDivisor { partner: a.render(y) }, ann_gens, partner_ann))
            } else {
                Ok(out(ExactKind::NotExact { failure: EzdFailure::DoubleAnnihilatorMismatch }, ann_gens, partner_ann))
            }
        }
    }
}

impl ExactElement {
    pub fn report(&self) -> CheckReport {
        CheckReport::new(
            "regular or exact zero divisor (annihilator of the partner equals the principal ideal)",
            Verdict::from_bool(self.is_exact()),
            Certificate::Exact,
            serde_json::to_value(self).expect("serializable"),
        )
    }
}

/// `A → A/(x_1) → … → A/(x_1, …, x_n)`; `stages[i] = A/(x_1, …, x_i)`.
#[derive(Clone, Debug)]
pub struct RingTower<K: Field> {
    sequence: Vec<PolyOf<K>>,
    stages: Vec<LocalRing<K>>,
}

impl<K: Field> RingTower<K> {
    pub fn new(base: &LocalRing<K>, sequence: &[PolyOf<K>]) -> Result<Self, CriteriaError> {
        base.check_sequence(sequence)?;
        let mut stages = vec![base.clone()];
        for i in 1..=sequence.len() {
            stages.push(base.quotient(&sequence[..i])?);
        }
        Ok(RingTower { sequence: sequence.to_vec(), stages })
    }

    pub fn base(&self) -> &LocalRing<K> {
        &self.stages[0]
    }
    pub fn sequence(&self) -> &[PolyOf<K>] {
        &self.sequence
    }
    pub fn len(&self) -> usize {
        self.sequence.len()
    }
    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }
    pub fn stage(&self, i: usize) -> &LocalRing<K> {
        &self.stages[i]
    }
    pub fn stages(&self) -> &[LocalRing<K>] {
        &self.stages
    }
    pub fn top(&self) -> &LocalRing<K> {
        self.stages.last().unwrap()
    }
}

/// Each `x_i` classified over `A/(x_1, …, x_{i-1})`.
pub fn is_exact_sequence<K: Field>(a: &LocalRing<K>, xs: &[PolyOf<K>]) -> Result<(Vec<ExactElement>, CheckReport), CriteriaError> {
    let tower = RingTower::new(a, xs)?;
    let stages: Vec<ExactElement> = xs
        .iter()
        .enumerate()
        .map(|(i, x)| is_exact_element(tower.stage(i), x))
        .collect::<Result<_, _>>()?;
    let exact = stages.iter().all(|s| s.is_exact());
    let first_failure = stages.iter().position(|s| !s.is_exact()).map(|i| i + 1);
    let report = CheckReport::new(
        "each element regular or an exact zero divisor modulo the previous ones",
        Verdict::from_bool(exact),
        Certificate::Exact,
        json!({
            "sequence": a.render_all(xs),
            "stages": stages,
            "first_failing_position": first_failure,
        }),
    );
    Ok((stages, report))
}
