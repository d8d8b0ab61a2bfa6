//! Building DFAs from files, generator lists, witness families and regular
//! expressions.

mod format;
mod regex;

pub use format::{from_json, parse_dfa, render_dfa, to_json, DfaJson};
pub use regex::{regex_to_dfa, regex_to_dfa_over};

use std::path::PathBuf;

use crate::automata::Dfa;
use crate::error::{Error, Result};
use crate::transform::{StateSet, Transformation, MAX_DEGREE};

/// Where a language comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LanguageSpec {
    /// A file in the DFA text format (or its JSON mirror).
    DfaFile(PathBuf),
    /// Letters given directly as transformations.
    Generators {
        letters: Vec<(String, Transformation)>,
        initial: usize,
        finals: StateSet,
    },
    Regex(String),
}

impl LanguageSpec {
    /// The DFA this describes; not necessarily minimal.
    pub fn build(&self) -> Result<Dfa> {
        match self {
            LanguageSpec::DfaFile(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::invalid(format!("cannot read {}: {e}", path.display())))?;
                parse_dfa(&text)
            }
            LanguageSpec::Generators {
                letters,
                initial,
                finals,
            } => {
                let (alphabet, ts): (Vec<String>, Vec<Transformation>) =
                    letters.iter().cloned().unzip();
                let dfa = Dfa::from_transformations(alphabet, &ts, *initial, *finals)?;
                if dfa.language_is_empty() {
                    return Err(Error::EmptyLanguage);
                }
                Ok(dfa)
            }
            LanguageSpec::Regex(pattern) => regex_to_dfa(pattern),
        }
    }
}

/// A minimal DFA whose transition semigroup is all of `T_n`: letters `a`
/// (the cycle `k ↦ k+1`), `b` (the transposition `(1,2)`) and `c` (the
/// unitary map `n → 1`), initial state 1, final state `n`.
///
/// For `n = 2` the letters are `(1,2)` and `(1 → 2)`; for `n = 1` the result
/// is the one-state acceptor of `a*`.
pub fn witness(n: usize) -> Result<Dfa> {
    if n == 0 {
        return Err(Error::invalid("witness needs n ≥ 1"));
    }
    if n > MAX_DEGREE {
        return Err(Error::Capacity {
            what: format!("witness of degree {n}"),
            limit: MAX_DEGREE,
        });
    }
    let names = |xs: &[&str]| xs.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    let dfa = match n {
        1 => Dfa::new(names(&["a"]), vec![vec![1]], 1, &[1])?,
        2 => Dfa::from_transformations(
            names(&["a", "b"]),
            &[
                Transformation::transposition(2, 1, 2)?,
                Transformation::unitary(2, 1, 2)?,
            ],
            1,
            StateSet::from_states(2, [2])?,
        )?,
        _ => Dfa::from_transformations(
            names(&["a", "b", "c"]),
            &[
                Transformation::cycle(n)?,
                Transformation::transposition(n, 1, 2)?,
                Transformation::unitary(n, n, 1)?,
            ],
            1,
            StateSet::from_states(n, [n])?,
        )?,
    };
    if !dfa.is_minimal() {
        return Err(Error::Internal(format!("witness({n}) is not minimal")));
    }
    Ok(dfa)
}
