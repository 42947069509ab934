use gorcheck_core::artin::{FGModule, FiniteLocalAlgebra};
use gorcheck_core::complex::{homology, KoszulComplex};
use gorcheck_core::criteria::{
    gorenstein_ring_test, gp_dg_module_checks, is_exact_element, is_exact_sequence, koszul_augmentation_qg,
    quasi_gorenstein_direct, tensor_resolution_construction, top_bottom_criterion, trivial_ext_checks, CheckReport,
    Engine, Verdict,
};
use gorcheck_core::field::{Field, PrimeField, Rationals};
use gorcheck_core::poly::{pfaffian_ideal, random_alternating_linear, GradedQuotientRing, MonomialOrder, PolyOf, PolyRing, Presentation};
use gorcheck_core::resolution::{artinian_bass_prefix, graded_bass_prefix, ArtinianResolution, Certificate, GradedResolution};
use rand::SeedableRng;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::report::Report;
use crate::ringfile::{FieldSpec, HandleError, RingFile, RingHandle};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    ExactElement,
    ExactSequence,
    Ezd,
    Gorenstein,
    QuasiGorenstein,
    KoszulAugmentation,
    TopBottom,
}

impl CheckKind {
    pub fn name(self) -> &'static str {
        match self {
            CheckKind::ExactElement => "exact-element",
            CheckKind::ExactSequence => "exact-sequence",
            CheckKind::Ezd => "ezd",
            CheckKind::Gorenstein => "gorenstein",
            CheckKind::QuasiGorenstein => "quasi-gorenstein",
            CheckKind::KoszulAugmentation => "koszul-augmentation",
            CheckKind::TopBottom => "top-bottom",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum ExtensionModule {
    /// The Matlis dual of the ring.
    Dual,
    /// The ring itself.
    Ring,
    /// The residue field.
    Residue,
}

/// A command that runs against a ring file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Command {
    Define,
    Check { kind: CheckKind, args: String },
    KoszulHomology { sequence: String },
    Resolve { module: String, length: usize },
    Ext { module: String, target: String, max: usize },
    Tor { module: String, target: String, max: usize },
    Poincare { module: String, max: usize },
    Bass { module: String, max: usize },
    TrivialExtension { with: ExtensionModule },
    TensorResolution { i: String, j: String },
    GpChecks { sequence: String, extra: String },
}

impl Command {
    pub fn echo(&self) -> String {
        match self {
            Command::Define => "define".into(),
            Command::Check { kind, args } => format!("check {} {}", kind.name(), args).trim_end().to_string(),
            Command::KoszulHomology { sequence } => format!("koszul homology {sequence}"),
            Command::Resolve { module, length } => format!("resolve --module {module} --length {length}"),
            Command::Ext { module, target, max } => format!("ext --module {module} --target {target} --max {max}"),
            Command::Tor { module, target, max } => format!("tor --module {module} --target {target} --max {max}"),
            Command::Poincare { module, max } => format!("poincare --module {module} --max {max}"),
            Command::Bass { module, max } => format!("bass --module {module} --max {max}"),
            Command::TrivialExtension { with } => format!("trivial-extension --with {}", serde_json::to_value(with).unwrap().as_str().unwrap()),
            Command::TensorResolution { i, j } => format!("tensor-resolution --i {i} --j {j}"),
            Command::GpChecks { sequence, extra } => format!("gp-checks --sequence {sequence} --extra {extra}"),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CommandError {
    /// Bad arguments: exit status 1.
    #[error("{0}")]
    Usage(String),
    /// The engines could not handle the input: exit status 2.
    #[error("{0}")]
    Engine(String),
}

impl CommandError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CommandError::Usage(_) => 1,
            CommandError::Engine(_) => 2,
        }
    }
}

impl From<HandleError> for CommandError {
    fn from(e: HandleError) -> Self {
        CommandError::Engine(e.to_string())
    }
}

impl From<gorcheck_core::criteria::CriteriaError> for CommandError {
    fn from(e: gorcheck_core::criteria::CriteriaError) -> Self {
        CommandError::Engine(e.to_string())
    }
}

/// Runs a command on a parsed ring file over the field it declares.
pub fn run_file(file: &RingFile, cmd: &Command, cutoff: usize) -> Result<Report, CommandError> {
    match file.field {
        FieldSpec::Prime(p) => {
            let k = PrimeField::new(p).map_err(|e| CommandError::Engine(e.to_string()))?;
            run(&RingHandle::new(file.clone(), k)?, cmd, cutoff)
        }
        FieldSpec::Rationals => run(&RingHandle::new(file.clone(), Rationals)?, cmd, cutoff),
    }
}

fn one<K: Field>(h: &RingHandle<K>, arg: &str) -> Result<PolyOf<K>, CommandError> {
    let xs = h.elements(arg)?;
    match xs.as_slice() {
        [x] => Ok(x.clone()),
        _ => Err(CommandError::Usage(format!("expected one element, got {}", xs.len()))),
    }
}

fn residue_or<K: Field>(h: &RingHandle<K>, arg: &str) -> Result<Vec<PolyOf<K>>, CommandError> {
    if arg.trim().is_empty() {
        return Ok(vec![]);
    }
    Ok(h.elements(arg)?)
}

pub fn run<K: Field>(h: &RingHandle<K>, cmd: &Command, cutoff: usize) -> Result<Report, CommandError> {
    let a = &h.ring;
    let echo = cmd.echo();
    let check = |c: CheckReport| Ok(Report::from_check(echo.clone(), c));
    match cmd {
        Command::Define => Ok(Report::data(echo, define(h))),
        Command::Check { kind, args } => match kind {
            CheckKind::ExactElement => check(is_exact_element(a, &one(h, args)?)?.report()),
            CheckKind::Ezd => {
                let e = is_exact_element(a, &one(h, args)?)?;
                let mut r = e.report();
                r.criterion = "annihilator is principal, generated by a partner whose annihilator is the element".into();
                r.verdict = Verdict::from_bool(e.is_ezd());
                check(r)
            }
            CheckKind::ExactSequence => check(is_exact_sequence(a, &h.elements(args)?)?.1),
            CheckKind::Gorenstein => {
                let xs = residue_or(h, args)?;
                let q = if xs.is_empty() { a.clone() } else { a.quotient(&xs)? };
                let mut r = gorenstein_ring_test(&q).report();
                r.evidence["ring"] = json!(q.describe());
                check(r)
            }
            CheckKind::QuasiGorenstein => check(quasi_gorenstein_direct(a, &residue_or(h, args)?, cutoff)?.report()),
            CheckKind::KoszulAugmentation => check(koszul_augmentation_qg(a, &h.elements(args)?)?.report()),
            CheckKind::TopBottom => check(top_bottom_criterion(a, &h.elements(args)?)?.report()),
        },
        Command::KoszulHomology { sequence } => Ok(Report::data(echo, koszul_homology(h, &h.elements(sequence)?)?)),
        Command::Resolve { module, length } => Ok(Report::data(echo, resolve(h, &residue_or(h, module)?, *length))),
        Command::Ext { module, target, max } => {
            Ok(Report::data(echo, ext_tor(h, &residue_or(h, module)?, &residue_or(h, target)?, *max, true)))
        }
        Command::Tor { module, target, max } => {
            Ok(Report::data(echo, ext_tor(h, &residue_or(h, module)?, &residue_or(h, target)?, *max, false)))
        }
        Command::Poincare { module, max } => Ok(Report::data(echo, poincare(h, &residue_or(h, module)?, *max))),
        Command::Bass { module, max } => Ok(Report::data(echo, bass(h, &residue_or(h, module)?, *max))),
        Command::TrivialExtension { with } => {
            let alg = a.artinian().ok_or_else(|| CommandError::Engine("trivial extensions need an artinian ring".into()))?;
            let d = match with {
                ExtensionModule::Dual => FGModule::regular(alg).matlis_dual(),
                ExtensionModule::Ring => FGModule::regular(alg),
                ExtensionModule::Residue => FGModule::residue_field(alg),
            };
            check(trivial_ext_checks(alg, &d, cutoff).report())
        }
        Command::TensorResolution { i, j } => {
            check(tensor_resolution_construction(a, &residue_or(h, i)?, &residue_or(h, j)?, cutoff)?.report())
        }
        Command::GpChecks { sequence, extra } => {
            check(gp_dg_module_checks(a, &h.elements(sequence)?, &residue_or(h, extra)?, cutoff)?.report())
        }
    }
}

fn define<K: Field>(h: &RingHandle<K>) -> serde_json::Value {
    let a = &h.ring;
    let sequences: Vec<_> = h.file.sequences.iter().map(|(n, l)| json!({"name": n, "elements": l.text})).collect();
    let mut v = json!({
        "ring": a.describe(),
        "variables": a.ring().names(),
        "relations": a.render_all(a.relations()),
        "sequences": sequences,
    });
    match a.engine() {
        Engine::Artinian(alg) => {
            v["engine"] = json!("artinian");
            v["dimension"] = json!(alg.dim());
            v["basis"] = json!(alg.labels());
            v["socle_dimension"] = json!(alg.socle().dim());
            v["embedding_dimension"] = json!(alg.embedding_dim());
            v["loewy_length"] = json!(alg.loewy_length());
        }
        Engine::Graded(g) => {
            v["engine"] = json!("graded");
            v["krull_dimension"] = json!(g.krull_dim());
            v["hilbert_function"] = json!(g.hilbert_function(6));
        }
    }
    v
}

fn koszul_homology<K: Field>(h: &RingHandle<K>, xs: &[PolyOf<K>]) -> Result<serde_json::Value, CommandError> {
    let a = &h.ring;
    a.check_sequence(xs)?;
    let n = xs.len() as i32;
    let rows: Vec<serde_json::Value> = match a.engine() {
        Engine::Artinian(alg) => {
            let kc = KoszulComplex::new(alg, &a.elements(xs)?);
            (0..=n)
                .map(|i| {
                    let m = homology(kc.complex(), i);
                    let ann: Vec<String> = alg.minimal_generators(&m.annihilator(alg)).iter().map(|e| alg.render(e)).collect();
                    json!({"degree": i, "dimension": m.dim(), "generators": m.num_generators(), "annihilator": ann})
                })
                .collect()
        }
        Engine::Graded(g) => {
            let red: Vec<PolyOf<K>> = xs.iter().map(|x| g.reduce(x)).collect();
            let kc = KoszulComplex::new(g, &red);
            (0..=n)
                .map(|i| {
                    let m = homology(kc.complex(), i).minimize(g);
                    json!({
                        "degree": i,
                        "presentation": m.render(g.ring()),
                        "generator_degrees": m.shifts,
                        "length": m.length(g),
                        "annihilator": a.render_all(&g.colon_generators(&m.annihilator(g))),
                    })
                })
                .collect()
        }
    };
    Ok(json!({"sequence": a.render_all(xs), "homology": rows}))
}

fn cyclic_module<K: Field>(alg: &FiniteLocalAlgebra<K>, h: &RingHandle<K>, ideal: &[PolyOf<K>]) -> Result<FGModule<K>, CommandError> {
    Ok(FGModule::cyclic(alg, &alg.ideal(&h.ring.elements(ideal)?)))
}

fn resolve<K: Field>(h: &RingHandle<K>, ideal: &[PolyOf<K>], length: usize) -> serde_json::Value {
    let a = &h.ring;
    let module = format!("A/({})", a.render_all(ideal).join(", "));
    match a.engine() {
        Engine::Artinian(alg) => {
            let m = cyclic_module(alg, h, ideal).expect("artinian elements");
            let r = ArtinianResolution::resolve(alg, &m, length);
            json!({"module": module, "betti": r.betti(), "minimal": r.is_minimal(), "exact": r.is_exact(), "tail": r.tail()})
        }
        Engine::Graded(g) => {
            let r = GradedResolution::resolve(g, &Presentation::cyclic(ideal), length);
            let shifts: Vec<Vec<i32>> = (0..r.betti().len()).map(|i| r.shifts(i).to_vec()).collect();
            json!({"module": module, "betti": r.betti(), "shifts": shifts, "minimal": r.is_minimal(), "complex": r.is_complex(), "tail": r.tail()})
        }
    }
}

fn ext_tor<K: Field>(h: &RingHandle<K>, m: &[PolyOf<K>], n: &[PolyOf<K>], max: usize, ext: bool) -> serde_json::Value {
    let a = &h.ring;
    let name = if ext { "Ext" } else { "Tor" };
    let rows: Vec<serde_json::Value> = match a.engine() {
        Engine::Artinian(alg) => {
            let mm = cyclic_module(alg, h, m).expect("artinian elements");
            let nn = cyclic_module(alg, h, n).expect("artinian elements");
            let mut r = ArtinianResolution::new(alg, &mm);
            (0..=max)
                .map(|i| {
                    let e = if ext { r.ext(&nn, i) } else { r.tor(&nn, i) };
                    json!({"degree": i, "length": e.dim(), "generators": e.num_generators()})
                })
                .collect()
        }
        Engine::Graded(g) => {
            let nn = Presentation::cyclic(n);
            let mut r = GradedResolution::new(g, &Presentation::cyclic(m));
            (0..=max)
                .map(|i| {
                    let e = if ext { r.ext(&nn, i) } else { r.tor(&nn, i) };
                    let e = e.minimize(g);
                    json!({"degree": i, "length": e.length(g), "generators": e.rank(), "presentation": e.render(g.ring())})
                })
                .collect()
        }
    };
    json!({
        "functor": name,
        "module": format!("A/({})", a.render_all(m).join(", ")),
        "target": format!("A/({})", a.render_all(n).join(", ")),
        "values": rows,
    })
}

fn poincare<K: Field>(h: &RingHandle<K>, m: &[PolyOf<K>], max: usize) -> serde_json::Value {
    let a = &h.ring;
    let p = match a.engine() {
        Engine::Artinian(alg) => ArtinianResolution::new(alg, &cyclic_module(alg, h, m).expect("artinian elements")).poincare_prefix(max),
        Engine::Graded(g) => GradedResolution::new(g, &Presentation::cyclic(m)).poincare_prefix(max),
    };
    json!({"module": format!("A/({})", a.render_all(m).join(", ")), "coefficients": p.coefficients, "complete": p.is_complete(), "tail": p.tail})
}

fn bass<K: Field>(h: &RingHandle<K>, m: &[PolyOf<K>], max: usize) -> serde_json::Value {
    let a = &h.ring;
    let (coefficients, tail): (Vec<Option<u64>>, Option<Certificate>) = match a.engine() {
        Engine::Artinian(alg) => {
            let p = artinian_bass_prefix(alg, &cyclic_module(alg, h, m).expect("artinian elements"), max);
            (p.coefficients.into_iter().map(Some).collect(), p.tail)
        }
        Engine::Graded(g) => graded_bass_prefix(g, &Presentation::cyclic(m), max),
    };
    json!({"module": format!("A/({})", a.render_all(m).join(", ")), "coefficients": coefficients, "tail": tail})
}

/// Sub-maximal pfaffians of a seeded random alternating matrix of linear
/// forms, with the structure of their quotient.
pub fn pfaffian_report(size: usize, vars: &[String], p: u64, seed: u64) -> Result<Report, CommandError> {
    let k = PrimeField::new(p).map_err(|e| CommandError::Usage(e.to_string()))?;
    let ring = PolyRing::with_names(k, vars.to_vec(), MonomialOrder::GrevLex);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let m = random_alternating_linear(&ring, size, &mut rng);
    let pf = pfaffian_ideal(&ring, &m).map_err(|e| CommandError::Usage(e.to_string()))?;
    let minimal = GradedQuotientRing::polynomial_ring(ring.clone()).minimize_ideal(&pf);
    let echo = format!("pfaffian-ideal --size {size} --vars {} --field {p} --seed {seed}", vars.join(","));
    let matrix: Vec<Vec<String>> = m.iter().map(|row| row.iter().map(|f| ring.render(f)).collect()).collect();
    let mut evidence = json!({
        "matrix": matrix,
        "pfaffians": pf.iter().map(|f| ring.render(f)).collect::<Vec<_>>(),
        "minimal_generators": minimal.len(),
        "ambient_dimension": vars.len(),
        "complete_intersection": minimal.len() <= vars.len(),
    });
    let q = gorcheck_core::criteria::LocalRing::new(&ring, &pf)?;
    evidence["ring"] = json!(q.describe());
    let g = gorenstein_ring_test(&q);
    evidence["socle_dimension"] = json!(q.artinian().map(|a| a.socle().dim()));
    evidence["artinian"] = json!(q.is_artinian());
    let mut r = Report::from_check(echo, g.report());
    r.evidence = evidence;
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn file(src: &str) -> RingFile {
        RingFile::parse(src).unwrap()
    }

    #[test]
    fn checks_on_the_dimension_eight_ring() {
        let f = file("field 101\nvars x, y, z\nrelations x^2, y^2 + x*z, z^2\nsequence s = x, y, z\n");
        let r = run_file(&f, &Command::Check { kind: CheckKind::ExactSequence, args: "s".into() }, 10).unwrap();
        assert_eq!(r.verdict, Some(Verdict::Yes));
        let r = run_file(&f, &Command::Check { kind: CheckKind::ExactSequence, args: "y, x, z".into() }, 10).unwrap();
        assert_eq!(r.verdict, Some(Verdict::No));
        let r = run_file(&f, &Command::Define, 10).unwrap();
        assert_eq!(r.evidence["dimension"], 8);
        let r = run_file(&f, &Command::Resolve { module: "x".into(), length: 4 }, 10).unwrap();
        assert_eq!(r.evidence["betti"], json!([1, 1, 1, 1, 1]));
    }

    #[test]
    fn data_commands_over_graded_rings() {
        let f = file("vars x, y\n");
        let r = run_file(&f, &Command::KoszulHomology { sequence: "x^2, x*y".into() }, 10).unwrap();
        assert_eq!(r.evidence["homology"][1]["annihilator"], json!(["x"]));
        let r = run_file(&f, &Command::Tor { module: "m".into(), target: "m".into(), max: 3 }, 10).unwrap();
        let lens: Vec<u64> = r.evidence["values"].as_array().unwrap().iter().map(|v| v["length"].as_u64().unwrap()).collect();
        assert_eq!(lens, vec![1, 2, 1, 0]);
        let g = file("vars x, y\nrelations x^2, x*y\n");
        let r = run_file(&g, &Command::Check { kind: CheckKind::Gorenstein, args: String::new() }, 10).unwrap();
        assert_eq!(r.verdict, Some(Verdict::No));
    }

    #[test]
    fn errors_are_classified() {
        let f = file("vars x, y\nrelations x*y + x^3\n");
        let e = run_file(&f, &Command::Define, 10).unwrap_err();
        assert_eq!(e.exit_code(), 2);
        let f = file("vars x, y\nrelations x*y\n");
        let e = run_file(&f, &Command::Check { kind: CheckKind::ExactElement, args: "x, y".into() }, 10).unwrap_err();
        assert_eq!(e.exit_code(), 1);
    }

    #[test]
    fn pfaffians_of_a_generic_matrix() {
        let vars: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
        let r = pfaffian_report(5, &vars, 101, 1).unwrap();
        assert_eq!(r.evidence["minimal_generators"], 5);
        assert_eq!(r.evidence["socle_dimension"], 1);
        assert_eq!(r.verdict, Some(Verdict::Yes));
    }
}
