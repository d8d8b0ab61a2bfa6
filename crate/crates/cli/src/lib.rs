//! The `atomlab` command line.
//!
//! Reports go to the output stream and diagnostics to the error stream.
//! Exit codes: 0 success, 1 bad input, 2 capacity exceeded, 3 internal
//! inconsistency.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use atomlab::atoms::{classify, AtomicStructure};
use atomlab::census;
use atomlab::ingest::{render_dfa, to_json, witness, LanguageSpec};
use atomlab::report::{
    atomaton_json, atomaton_table, atoms_line, census_table, psi_row, Analysis, ClassReport,
    ComplexityTable, SemigroupReport,
};
use atomlab::{Dfa, Error, StateSet, DEFAULT_CAP};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_CAPACITY: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "atomlab",
    version,
    about = "Atoms, átomata and transition semigroups of regular languages"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Maximum number of elements a semigroup closure may produce.
    #[arg(long, global = true, env = "ATOMLAB_CAP", default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Suppress notices on the error stream.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Args, Debug)]
struct Input {
    /// DFA file (text or JSON).
    file: Option<PathBuf>,
    /// Regular expression instead of a file.
    #[arg(long, conflicts_with = "file")]
    regex: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the atoms.
    Atoms(Input),
    /// Print the átomaton.
    Atomaton(Input),
    /// Quotient complexity of atoms against their upper bounds.
    AtomComplexity {
        #[command(flatten)]
        input: Input,
        /// A single atom, e.g. `1,2` or `{}`.
        #[arg(long)]
        subset: Option<String>,
    },
    /// Transition semigroup statistics.
    Semigroup(Input),
    /// The row Ψ(n,0) … Ψ(n,n).
    Psi { n: usize },
    /// Class membership and decider agreement.
    Classify(Input),
    /// Everything.
    Analyze(Input),
    /// Emit the n-state witness DFA.
    Witness { n: usize },
    /// Enumerate (or sample) minimal DFAs and cross-check the deciders.
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        sigma: usize,
        /// Sample this many random DFAs instead of enumerating.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum Failure {
    Lib(Error),
    Inconsistent(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

struct Session<'a> {
    format: Format,
    cap: usize,
    quiet: bool,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Session<'_> {
    fn load(&mut self, input: &Input) -> Result<Dfa, Failure> {
        let spec = match (&input.file, &input.regex) {
            (Some(path), None) => LanguageSpec::DfaFile(path.clone()),
            (None, Some(pattern)) => LanguageSpec::Regex(pattern.clone()),
            _ => return Err(Error::InvalidArgument("give a DFA file or --regex".into()).into()),
        };
        let dfa = spec.build()?;
        if dfa.is_minimal() {
            return Ok(dfa);
        }
        let minimal = dfa.minimize();
        if !self.quiet {
            let _ = writeln!(
                self.err,
                "note: input DFA is not minimal; using its minimal DFA ({} → {} states)",
                dfa.n(),
                minimal.n()
            );
        }
        Ok(minimal)
    }

    fn emit<T: Serialize>(&mut self, table: impl FnOnce() -> String, value: impl FnOnce() -> T) {
        let text = match self.format {
            Format::Table => table(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&value()).expect("reports serialize");
                s.push('\n');
                s
            }
        };
        let _ = self.out.write_all(text.as_bytes());
    }

    fn execute(&mut self, command: Command) -> Result<(), Failure> {
        match command {
            Command::Atoms(input) => {
                let s = AtomicStructure::new(&self.load(&input)?)?;
                self.emit(
                    || format!("{}\n", atoms_line(&s)),
                    || json!({ "atoms": s.poset().atoms(), "count": s.poset().len() }),
                );
            }
            Command::Atomaton(input) => {
                let s = AtomicStructure::new(&self.load(&input)?)?;
                self.emit(|| atomaton_table(&s), || atomaton_json(&s));
            }
            Command::AtomComplexity { input, subset } => {
                let s = AtomicStructure::new(&self.load(&input)?)?;
                let table = match subset {
                    Some(text) => {
                        let atom = StateSet::parse(s.n(), &text)?;
                        if !s.poset().contains(atom) {
                            return Err(
                                Error::InvalidArgument(format!("{atom} is not an atom")).into()
                            );
                        }
                        ComplexityTable(
                            s.complexity_table()?
                                .into_iter()
                                .filter(|r| r.atom == atom)
                                .collect(),
                        )
                    }
                    None => ComplexityTable(s.complexity_table()?),
                };
                self.emit(|| table.render(), || &table);
            }
            Command::Semigroup(input) => {
                let report = SemigroupReport::build(&self.load(&input)?, self.cap)?;
                self.emit(|| report.render(), || &report);
            }
            Command::Psi { n } => {
                let row = psi_row(n)?;
                let values: Vec<u64> = row
                    .split(' ')
                    .map(|v| v.parse().expect("numeric"))
                    .collect();
                self.emit(|| format!("{row}\n"), || json!({ "n": n, "psi": values }));
            }
            Command::Classify(input) => {
                let report = ClassReport::from_verdicts(&classify(&self.load(&input)?, self.cap)?);
                self.emit(|| report.render(), || &report);
                if !report.is_consistent() {
                    return Err(Failure::Inconsistent(
                        "classification broke a theorem".into(),
                    ));
                }
            }
            Command::Analyze(input) => {
                let dfa = self.load(&input)?;
                let structure = AtomicStructure::new(&dfa)?;
                let analysis = Analysis::build(&dfa, self.cap)?;
                self.emit(|| analysis.render(&structure), || &analysis);
                if !analysis.is_consistent() {
                    return Err(Failure::Inconsistent("analysis broke a theorem".into()));
                }
            }
            Command::Witness { n } => {
                let dfa = witness(n)?;
                match self.format {
                    Format::Table => {
                        let _ = self.out.write_all(render_dfa(&dfa).as_bytes());
                    }
                    Format::Json => {
                        let _ = writeln!(self.out, "{}", to_json(&dfa));
                    }
                }
            }
            Command::Census {
                n,
                sigma,
                samples,
                seed,
            } => {
                let report = match samples {
                    Some(count) => census::random(n, sigma, count, seed, self.cap)?,
                    None => census::exhaustive(n, sigma, self.cap)?,
                };
                self.emit(|| census_table(&report), || &report);
                if !report.is_consistent() {
                    for (dfa, outcome) in &report.examples.inconsistent {
                        let _ = writeln!(
                            self.err,
                            "inconsistent instance {:?}:\n{}",
                            outcome,
                            render_dfa(dfa)
                        );
                    }
                    return Err(Failure::Inconsistent(
                        "census found theorem violations".into(),
                    ));
                }
            }
        }
        Ok(())
    }
}

/// Runs the command line `args` (program name first) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_INPUT
                }
            };
        }
    };
    let mut session = Session {
        format: cli.format,
        cap: cli.cap,
        quiet: cli.quiet,
        out,
        err,
    };
    match session.execute(cli.command) {
        Ok(()) => EXIT_OK,
        Err(Failure::Lib(e)) => {
            let _ = writeln!(session.err, "error: {e}");
            match e {
                Error::Capacity { .. } => EXIT_CAPACITY,
                Error::Internal(_) => EXIT_INTERNAL,
                _ => EXIT_INPUT,
            }
        }
        Err(Failure::Inconsistent(msg)) => {
            let _ = writeln!(session.err, "error: {msg}");
            EXIT_INTERNAL
        }
    }
}
