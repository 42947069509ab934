use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gorcheck_cli::commands::{pfaffian_report, run_file, CheckKind, Command, CommandError, ExtensionModule};
use gorcheck_cli::corpus;
use gorcheck_cli::report::Report;
use gorcheck_cli::ringfile::RingFile;

#[derive(Parser, Debug)]
#[command(name = "gorcheck", version, about = "Decide Gorenstein-type properties of local algebras")]
struct Cli {
    /// Highest homological degree examined when a property has no finite certificate.
    #[arg(long, global = true, default_value_t = 10)]
    cutoff: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Include wall-clock time in reports. Off by default so reports are reproducible.
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct RingArg {
    /// Ring presentation file.
    #[arg(long, short)]
    ring: PathBuf,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Parse a ring file and describe the ring.
    Define(RingArg),
    /// Run a decision procedure.
    Check {
        kind: CheckKind,
        /// Elements, a declared sequence name, or `m`. Empty for `gorenstein` on the ring itself.
        #[arg(default_value = "")]
        args: String,
        #[command(flatten)]
        ring: RingArg,
    },
    /// Koszul complex computations.
    Koszul {
        #[command(subcommand)]
        what: KoszulCmd,
    },
    /// Minimal free resolution of A/I.
    Resolve {
        #[command(flatten)]
        ring: RingArg,
        /// Generators of I; `m` for the residue field.
        #[arg(long, default_value = "m")]
        module: String,
        #[arg(long, default_value_t = 5)]
        length: usize,
    },
    /// Ext^i(A/I, A/J).
    Ext(FunctorArgs),
    /// Tor_i(A/I, A/J).
    Tor(FunctorArgs),
    /// Betti numbers of A/I.
    Poincare(SeriesArgs),
    /// Bass numbers of A/I.
    Bass(SeriesArgs),
    /// Sub-maximal pfaffians of a seeded random alternating matrix of linear forms.
    PfaffianIdeal {
        #[arg(long, default_value_t = 5)]
        size: usize,
        #[arg(long, value_delimiter = ',', default_value = "x,y,z")]
        vars: Vec<String>,
        #[arg(long, default_value_t = 101)]
        field: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Trivial extension A ⋉ D and the map A → A ⋉ D (artinian rings).
    TrivialExtension {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long, value_enum, default_value_t = ExtensionModule::Dual)]
        with: ExtensionModule,
    },
    /// Tensor a resolution of A/I with A/J.
    TensorResolution {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long, default_value = "")]
        i: String,
        #[arg(long, default_value = "m")]
        j: String,
    },
    /// G-dimension checks for M = A/((x)+extra) tensored with the Koszul complex on x.
    GpChecks {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        sequence: String,
        #[arg(long, default_value = "")]
        extra: String,
    },
    /// The regression corpus.
    Corpus {
        #[command(subcommand)]
        what: CorpusCmd,
    },
}

#[derive(Subcommand, Debug)]
enum KoszulCmd {
    /// Homology of the Koszul complex on a sequence.
    Homology {
        sequence: String,
        #[command(flatten)]
        ring: RingArg,
    },
}

#[derive(Subcommand, Debug)]
enum CorpusCmd {
    /// Run the built-in corpus, or the cases in a JSON file.
    Run { file: Option<PathBuf> },
    /// Print the built-in corpus as JSON.
    Dump,
}

#[derive(Args, Debug)]
struct FunctorArgs {
    #[command(flatten)]
    ring: RingArg,
    #[arg(long, default_value = "m")]
    module: String,
    /// Generators of J; empty for A itself.
    #[arg(long, default_value = "")]
    target: String,
    #[arg(long, default_value_t = 4)]
    max: usize,
}

#[derive(Args, Debug)]
struct SeriesArgs {
    #[command(flatten)]
    ring: RingArg,
    #[arg(long, default_value = "m")]
    module: String,
    #[arg(long, default_value_t = 5)]
    max: usize,
}

enum Failure {
    Command(CommandError),
    Mismatch(Box<Report>, Vec<String>),
}

impl From<CommandError> for Failure {
    fn from(e: CommandError) -> Self {
        Failure::Command(e)
    }
}

fn load(r: &RingArg) -> Result<RingFile, CommandError> {
    RingFile::read(&r.ring).map_err(|e| {
        if e.line == 0 {
            CommandError::Usage(e.message)
        } else {
            CommandError::Engine(format!("{}: {e}", r.ring.display()))
        }
    })
}

fn on_ring(r: &RingArg, cmd: Command, cutoff: usize) -> Result<Report, Failure> {
    Ok(run_file(&load(r)?, &cmd, cutoff)?)
}

fn execute(cli: &Cli) -> Result<Report, Failure> {
    let cutoff = cli.cutoff;
    match &cli.command {
        Cmd::Define(r) => on_ring(r, Command::Define, cutoff),
        Cmd::Check { kind, args, ring } => on_ring(ring, Command::Check { kind: *kind, args: args.clone() }, cutoff),
        Cmd::Koszul { what: KoszulCmd::Homology { sequence, ring } } => {
            on_ring(ring, Command::KoszulHomology { sequence: sequence.clone() }, cutoff)
        }
        Cmd::Resolve { ring, module, length } => {
            on_ring(ring, Command::Resolve { module: module.clone(), length: *length }, cutoff)
        }
        Cmd::Ext(a) => on_ring(&a.ring, Command::Ext { module: a.module.clone(), target: a.target.clone(), max: a.max }, cutoff),
        Cmd::Tor(a) => on_ring(&a.ring, Command::Tor { module: a.module.clone(), target: a.target.clone(), max: a.max }, cutoff),
        Cmd::Poincare(a) => on_ring(&a.ring, Command::Poincare { module: a.module.clone(), max: a.max }, cutoff),
        Cmd::Bass(a) => on_ring(&a.ring, Command::Bass { module: a.module.clone(), max: a.max }, cutoff),
        Cmd::PfaffianIdeal { size, vars, field, seed } => Ok(pfaffian_report(*size, vars, *field, *seed)?),
        Cmd::TrivialExtension { ring, with } => on_ring(ring, Command::TrivialExtension { with: *with }, cutoff),
        Cmd::TensorResolution { ring, i, j } => on_ring(ring, Command::TensorResolution { i: i.clone(), j: j.clone() }, cutoff),
        Cmd::GpChecks { ring, sequence, extra } => {
            on_ring(ring, Command::GpChecks { sequence: sequence.clone(), extra: extra.clone() }, cutoff)
        }
        Cmd::Corpus { what: CorpusCmd::Dump } => {
            let cases = serde_json::to_value(corpus::builtin()).expect("cases serialize");
            Ok(Report::data("corpus dump", cases))
        }
        Cmd::Corpus { what: CorpusCmd::Run { file } } => {
            let cases = match file {
                None => corpus::builtin(),
                Some(path) => {
                    let src = std::fs::read_to_string(path)
                        .map_err(|e| CommandError::Usage(format!("cannot read {}: {e}", path.display())))?;
                    corpus::parse_cases(&src).map_err(|e| CommandError::Usage(format!("{}: {e}", path.display())))?
                }
            };
            let out = corpus::run(&cases, cutoff);
            if let Some(w) = &out.warning {
                eprintln!("warning: {w}");
            }
            let bad: Vec<String> = out.mismatches().into_iter().map(String::from).collect();
            if bad.is_empty() {
                Ok(out.report)
            } else {
                Err(Failure::Mismatch(Box::new(out.report), bad))
            }
        }
    }
}

fn emit(cli: &Cli, report: &Report) -> Result<(), CommandError> {
    let text = match cli.format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json() + "\n",
    };
    match &cli.output {
        Some(path) => std::fs::write(path, text).map_err(|e| CommandError::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let start = Instant::now();
    let result = execute(&cli);
    let stamp = |mut r: Report| {
        if cli.timings {
            r.elapsed_ms = Some(start.elapsed().as_millis());
        }
        r
    };
    match result {
        Ok(r) => match emit(&cli, &stamp(r)) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(e.exit_code() as u8)
            }
        },
        Err(Failure::Command(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
        Err(Failure::Mismatch(r, names)) => {
            let _ = emit(&cli, &stamp(*r));
            for n in names {
                eprintln!("mismatch: {n}");
            }
            ExitCode::from(3)
        }
    }
}
