//! Regression corpus: named rings, commands and the verdicts they must give.

use gorcheck_core::criteria::Verdict;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::commands::{run_file, CheckKind, Command};
use crate::report::Report;
use crate::ringfile::RingFile;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Case {
    pub name: String,
    /// Ring file source.
    pub ring: String,
    pub command: Command,
    pub expected: Verdict,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CaseResult {
    pub case: String,
    pub command: String,
    pub expected: Verdict,
    /// `None` when the command failed or produced no verdict.
    pub verdict: Option<Verdict>,
    pub error: Option<String>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CorpusOutcome {
    pub report: Report,
    pub results: Vec<CaseResult>,
    pub warning: Option<String>,
}

impl CorpusOutcome {
    pub fn mismatches(&self) -> Vec<&str> {
        self.results.iter().filter(|r| !r.passed).map(|r| r.case.as_str()).collect()
    }

    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }
}

const DIM8: &str = "field 101\nvars x, y, z\nrelations x^2, y^2 + x*z, z^2\n";
const PLANE: &str = "field 101\nvars x, y\n";
const NODE: &str = "field 101\nvars x, y\nrelations x*y\n";
const LINE_AND_PLANE: &str = "field 101\nvars x, y, z\nrelations x*y, x*z\n";
const FAT_POINT: &str = "field 101\nvars x, y\nrelations x^2, x*y\n";
const SQUARE_ZERO: &str = "field 101\nvars x, y\nrelations x^2, x*y, y^2\n";

fn check(name: &str, ring: &str, kind: CheckKind, args: &str, expected: Verdict) -> Case {
    Case { name: name.into(), ring: ring.into(), command: Command::Check { kind, args: args.into() }, expected }
}

/// The built-in corpus.
pub fn builtin() -> Vec<Case> {
    use CheckKind::*;
    use Verdict::{No, Yes};
    vec![
        check("dim8-ring-is-gorenstein", DIM8, Gorenstein, "", Yes),
        check("dim8-xyz-is-exact", DIM8, ExactSequence, "x, y, z", Yes),
        check("dim8-yxz-is-not-exact", DIM8, ExactSequence, "y, x, z", No),
        check("dim8-mod-x-is-gorenstein", DIM8, Gorenstein, "x", Yes),
        check("dim8-mod-xy-is-gorenstein", DIM8, Gorenstein, "x, y", Yes),
        check("dim8-mod-xyz-is-gorenstein", DIM8, Gorenstein, "x, y, z", Yes),
        check("dim8-mod-y-is-not-gorenstein", DIM8, Gorenstein, "y", No),
        check("dim8-x-is-ezd", DIM8, Ezd, "x", Yes),
        check("dim8-y-is-not-exact", DIM8, ExactElement, "y", No),
        check("dim8-map-to-mod-x-is-qg", DIM8, QuasiGorenstein, "x", Yes),
        check("dim8-map-to-mod-y-is-not-qg", DIM8, QuasiGorenstein, "y", No),
        check("dim8-augmentation-xyz-is-qg", DIM8, KoszulAugmentation, "x, y, z", Yes),
        check("dim8-augmentation-yxz-is-not-qg", DIM8, KoszulAugmentation, "y, x, z", No),
        check("dim8-top-bottom-xyz", DIM8, TopBottom, "x, y, z", Yes),
        check("plane-top-bottom-obstruction", PLANE, TopBottom, "x^2, x*y", No),
        check("plane-augmentation-x2-xy-is-not-qg", PLANE, KoszulAugmentation, "x^2, x*y", No),
        check("plane-mod-x2-xy-is-not-gorenstein", PLANE, Gorenstein, "x^2, x*y", No),
        check("fat-point-is-not-gorenstein", FAT_POINT, Gorenstein, "", No),
        check("plane-map-to-mod-m-is-qg", PLANE, QuasiGorenstein, "x, y", Yes),
        check("node-is-gorenstein", NODE, Gorenstein, "", Yes),
        check("node-x-is-ezd", NODE, Ezd, "x", Yes),
        check("node-map-to-mod-x-is-qg", NODE, QuasiGorenstein, "x", Yes),
        check("node-augmentation-x-is-qg", NODE, KoszulAugmentation, "x", Yes),
        Case {
            name: "node-mod-x-tensor-koszul-has-gdim-zero".into(),
            ring: NODE.into(),
            command: Command::GpChecks { sequence: "x".into(), extra: String::new() },
            expected: Yes,
        },
        check("line-and-plane-yz-is-not-exact", LINE_AND_PLANE, ExactSequence, "y, z", No),
        check("line-and-plane-is-not-gorenstein", LINE_AND_PLANE, Gorenstein, "", No),
        check("line-and-plane-mod-yz-is-gorenstein", LINE_AND_PLANE, Gorenstein, "y, z", Yes),
        check("line-and-plane-map-to-mod-yz-is-not-qg", LINE_AND_PLANE, QuasiGorenstein, "y, z", No),
        check("square-zero-is-not-gorenstein", SQUARE_ZERO, Gorenstein, "", No),
    ]
}

pub fn parse_cases(src: &str) -> Result<Vec<Case>, serde_json::Error> {
    serde_json::from_str(src)
}

fn run_case(case: &Case, cutoff: usize) -> CaseResult {
    let outcome = RingFile::parse(&case.ring)
        .map_err(|e| format!("ring file: {e}"))
        .and_then(|f| run_file(&f, &case.command, cutoff).map_err(|e| e.to_string()));
    let (verdict, error) = match outcome {
        Ok(r) => (r.verdict, None),
        Err(e) => (None, Some(e)),
    };
    CaseResult {
        case: case.name.clone(),
        command: case.command.echo(),
        expected: case.expected,
        verdict,
        passed: verdict == Some(case.expected),
        error,
    }
}

/// Runs every case in parallel; results keep the input order.
pub fn run(cases: &[Case], cutoff: usize) -> CorpusOutcome {
    let results: Vec<CaseResult> = cases.par_iter().map(|c| run_case(c, cutoff)).collect();
    let warning = cases.is_empty().then(|| "corpus is empty; nothing was checked".to_string());
    let failed: Vec<&str> = results.iter().filter(|r| !r.passed).map(|r| r.case.as_str()).collect();
    let mut report = Report::data(
        "corpus run",
        json!({
            "cases": results.len(),
            "passed": results.len() - failed.len(),
            "mismatches": failed,
            "warning": warning,
            "results": results,
        }),
    );
    report.verdict = Some(Verdict::from_bool(failed.is_empty()));
    CorpusOutcome { report, results, warning }
}
