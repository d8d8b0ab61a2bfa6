//! The line-oriented DFA file format and its JSON mirror.
//!
//! ```text
//! # {a, aa}
//! n: 4
//! alphabet: a
//! initial: 1
//! final: 2 3
//! a: 2 3 4 4
//! ```
//!
//! A symbol line lists `δ_a(1) .. δ_a(n)`, or uses one of the generator
//! keywords `identity`, `perm-cycle`, `swap i j` (transposition) or
//! `merge i j` (the unitary map `i → j`).

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::automata::Dfa;
use crate::error::{Error, Result};

const HEADER_KEYS: [&str; 4] = ["n", "alphabet", "initial", "final"];

fn parse_index(line: usize, tok: &str, n: usize) -> Result<usize> {
    let value: usize = tok
        .parse()
        .map_err(|_| Error::parse(line, format!("`{tok}` is not a state number")))?;
    if value == 0 || value > n {
        return Err(Error::Range { line, value, n });
    }
    Ok(value)
}

fn parse_row(line: usize, value: &str, n: usize) -> Result<Vec<usize>> {
    let toks: Vec<&str> = value.split_whitespace().collect();
    let pair = |args: &[&str]| -> Result<(usize, usize)> {
        match args {
            [i, j] => {
                let (i, j) = (parse_index(line, i, n)?, parse_index(line, j, n)?);
                if i == j {
                    return Err(Error::parse(
                        line,
                        "generator keyword needs two distinct states",
                    ));
                }
                Ok((i, j))
            }
            _ => Err(Error::parse(line, "generator keyword takes two states")),
        }
    };
    let mut row: Vec<usize> = (1..=n).collect();
    match toks.as_slice() {
        ["identity"] => {}
        ["perm-cycle"] => row = (1..=n).map(|q| q % n + 1).collect(),
        ["swap", args @ ..] => {
            let (i, j) = pair(args)?;
            row.swap(i - 1, j - 1);
        }
        ["merge", args @ ..] => {
            let (i, j) = pair(args)?;
            row[i - 1] = j;
        }
        _ => {
            if toks.len() != n {
                return Err(Error::parse(
                    line,
                    format!("expected {n} entries, found {}", toks.len()),
                ));
            }
            row = toks
                .iter()
                .map(|t| parse_index(line, t, n))
                .collect::<Result<_>>()?;
        }
    }
    Ok(row)
}

/// Parses a DFA from the text format, or from JSON when the input starts
/// with `{`. Rejects DFAs whose language is empty.
pub fn parse_dfa(text: &str) -> Result<Dfa> {
    let dfa = if text.trim_start().starts_with('{') {
        from_json(text)?
    } else {
        parse_text(text)?
    };
    if dfa.language_is_empty() {
        return Err(Error::EmptyLanguage);
    }
    Ok(dfa)
}

fn parse_text(text: &str) -> Result<Dfa> {
    // key -> (line number, value)
    let mut entries: HashMap<String, (usize, String)> = HashMap::new();
    let mut order = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content.split_once(':').ok_or_else(|| {
            Error::parse(line, format!("expected `key: value`, found `{content}`"))
        })?;
        let key = key.trim().to_string();
        if key.is_empty() {
            return Err(Error::parse(line, "missing key before `:`"));
        }
        if entries.contains_key(&key) {
            return Err(Error::parse(line, format!("duplicate key `{key}`")));
        }
        order.push(key.clone());
        entries.insert(key, (line, value.trim().to_string()));
    }
    let last_line = text.lines().count().max(1);
    let header = |key: &str| {
        entries
            .get(key)
            .cloned()
            .ok_or_else(|| Error::parse(last_line, format!("missing `{key}:` line")))
    };

    let (n_line, n_text) = header("n")?;
    let n: usize = n_text
        .parse()
        .map_err(|_| Error::parse(n_line, format!("`{n_text}` is not a state count")))?;
    if n == 0 {
        return Err(Error::parse(n_line, "a DFA needs at least one state"));
    }

    let (alpha_line, alpha_text) = header("alphabet")?;
    let alphabet: Vec<String> = alpha_text.split_whitespace().map(str::to_string).collect();
    if alphabet.is_empty() {
        return Err(Error::parse(alpha_line, "alphabet must not be empty"));
    }
    for (i, sym) in alphabet.iter().enumerate() {
        if HEADER_KEYS.contains(&sym.as_str()) {
            return Err(Error::parse(
                alpha_line,
                format!("`{sym}` is a reserved key"),
            ));
        }
        if alphabet[..i].contains(sym) {
            return Err(Error::parse(
                alpha_line,
                format!("duplicate symbol `{sym}`"),
            ));
        }
    }

    let (init_line, init_text) = header("initial")?;
    let initial = parse_index(init_line, init_text.trim(), n)?;

    let (final_line, final_text) = header("final")?;
    let finals = final_text
        .split_whitespace()
        .map(|t| parse_index(final_line, t, n))
        .collect::<Result<Vec<_>>>()?;

    for key in &order {
        if !HEADER_KEYS.contains(&key.as_str()) && !alphabet.contains(key) {
            let line = entries[key].0;
            return Err(Error::parse(
                line,
                format!("`{key}` is not in the alphabet"),
            ));
        }
    }

    let mut rows = Vec::with_capacity(alphabet.len());
    for sym in &alphabet {
        let (line, value) = entries
            .get(sym)
            .ok_or_else(|| Error::parse(alpha_line, format!("missing row for symbol `{sym}`")))?;
        rows.push(parse_row(*line, value, n)?);
    }
    Dfa::new(alphabet, rows, initial, &finals)
}

/// Renders a DFA in the text format with explicit rows. Parsing the output
/// gives back the same DFA.
pub fn render_dfa(dfa: &Dfa) -> String {
    let join = |xs: &[usize]| {
        xs.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut out = String::new();
    out.push_str(&format!("n: {}\n", dfa.n()));
    out.push_str(&format!("alphabet: {}\n", dfa.alphabet().join(" ")));
    out.push_str(&format!("initial: {}\n", dfa.initial()));
    let finals = dfa.finals();
    if finals.is_empty() {
        out.push_str("final:\n");
    } else {
        out.push_str(&format!("final: {}\n", join(&finals)));
    }
    for (a, sym) in dfa.alphabet().iter().enumerate() {
        out.push_str(&format!("{sym}: {}\n", join(&dfa.row(a))));
    }
    out
}

/// JSON mirror of the text format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DfaJson {
    pub n: usize,
    pub alphabet: Vec<String>,
    pub initial: usize,
    #[serde(rename = "final")]
    pub finals: Vec<usize>,
    pub delta: BTreeMap<String, Vec<usize>>,
}

impl From<&Dfa> for DfaJson {
    fn from(dfa: &Dfa) -> Self {
        DfaJson {
            n: dfa.n(),
            alphabet: dfa.alphabet().to_vec(),
            initial: dfa.initial(),
            finals: dfa.finals(),
            delta: dfa
                .alphabet()
                .iter()
                .enumerate()
                .map(|(a, s)| (s.clone(), dfa.row(a)))
                .collect(),
        }
    }
}

impl TryFrom<DfaJson> for Dfa {
    type Error = Error;

    fn try_from(json: DfaJson) -> Result<Dfa> {
        let mut rows = Vec::with_capacity(json.alphabet.len());
        for sym in &json.alphabet {
            let row = json
                .delta
                .get(sym)
                .ok_or_else(|| Error::invalid(format!("missing row for symbol `{sym}`")))?;
            if row.len() != json.n {
                return Err(Error::invalid(format!(
                    "row for `{sym}` has {} entries, expected {}",
                    row.len(),
                    json.n
                )));
            }
            rows.push(row.clone());
        }
        if let Some(extra) = json.delta.keys().find(|k| !json.alphabet.contains(k)) {
            return Err(Error::invalid(format!("`{extra}` is not in the alphabet")));
        }
        Dfa::new(json.alphabet, rows, json.initial, &json.finals)
    }
}

pub fn to_json(dfa: &Dfa) -> String {
    serde_json::to_string_pretty(&DfaJson::from(dfa)).expect("DFA serializes")
}

pub fn from_json(text: &str) -> Result<Dfa> {
    let json: DfaJson = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    Dfa::try_from(json)
}

#[cfg(test)]
mod tests {
    use super::*;

    const A_OR_AA: &str =
        "# the language {a, aa}\nn: 4\nalphabet: a\ninitial: 1\nfinal: 2 3\na: 2 3 4 4\n";

    #[test]
    fn parses_a_or_aa() {
        let d = parse_dfa(A_OR_AA).unwrap();
        assert_eq!(d.n(), 4);
        assert_eq!(d.row(0), vec![2, 3, 4, 4]);
        assert_eq!(d.finals(), vec![2, 3]);
        assert_eq!(d.initial(), 1);
    }

    #[test]
    fn parses_sigma_star() {
        let d = parse_dfa("n: 1\nalphabet: a\ninitial: 1\nfinal: 1\na: 1\n").unwrap();
        assert_eq!(d.n(), 1);
        assert!(d.accepts(&[0, 0, 0]));
    }

    #[test]
    fn range_error() {
        let err = parse_dfa("n: 4\nalphabet: a\ninitial: 1\nfinal: 2 3\na: 2 3 5 4\n").unwrap_err();
        assert_eq!(
            err,
            Error::Range {
                line: 5,
                value: 5,
                n: 4
            }
        );
    }

    #[test]
    fn malformed_lines() {
        let err = parse_dfa("n: 2\nalphabet a\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let dup = parse_dfa("n: 2\nn: 2\nalphabet: a\ninitial: 1\nfinal: 2\na: 2 2\n").unwrap_err();
        assert!(matches!(dup, Error::Parse { line: 2, .. }));
        let missing = parse_dfa("n: 2\nalphabet: a b\ninitial: 1\nfinal: 2\na: 2 2\n").unwrap_err();
        assert!(matches!(missing, Error::Parse { line: 2, .. }));
        let unknown =
            parse_dfa("n: 2\nalphabet: a\ninitial: 1\nfinal: 2\na: 2 2\nb: 1 1\n").unwrap_err();
        assert!(matches!(unknown, Error::Parse { line: 6, .. }));
        let short = parse_dfa("n: 2\nalphabet: a\ninitial: 1\nfinal: 2\na: 2\n").unwrap_err();
        assert!(matches!(short, Error::Parse { line: 5, .. }));
    }

    #[test]
    fn rejects_empty_language() {
        let err = parse_dfa("n: 2\nalphabet: a\ninitial: 1\nfinal:\na: 2 2\n").unwrap_err();
        assert_eq!(err, Error::EmptyLanguage);
        let unreachable =
            parse_dfa("n: 2\nalphabet: a\ninitial: 1\nfinal: 2\na: 1 2\n").unwrap_err();
        assert_eq!(unreachable, Error::EmptyLanguage);
    }

    #[test]
    fn generator_keywords() {
        let text = "n: 5\nalphabet: a b c\ninitial: 1\nfinal: 5\na: perm-cycle\nb: swap 1 2\nc: merge 5 1\n";
        let d = parse_dfa(text).unwrap();
        assert_eq!(d.row(0), vec![2, 3, 4, 5, 1]);
        assert_eq!(d.row(1), vec![2, 1, 3, 4, 5]);
        assert_eq!(d.row(2), vec![1, 2, 3, 4, 1]);
        assert_eq!(
            render_dfa(&d),
            "n: 5\nalphabet: a b c\ninitial: 1\nfinal: 5\na: 2 3 4 5 1\nb: 2 1 3 4 5\nc: 1 2 3 4 1\n"
        );
        assert!(parse_dfa("n: 3\nalphabet: a\ninitial: 1\nfinal: 3\na: swap 1 1\n").is_err());
        assert!(parse_dfa("n: 3\nalphabet: a\ninitial: 1\nfinal: 3\na: merge 1 4\n").is_err());
    }

    #[test]
    fn render_roundtrip_a_or_aa() {
        let d = parse_dfa(A_OR_AA).unwrap();
        let text = render_dfa(&d);
        assert_eq!(
            text,
            "n: 4\nalphabet: a\ninitial: 1\nfinal: 2 3\na: 2 3 4 4\n"
        );
        assert_eq!(parse_dfa(&text).unwrap(), d);
    }

    #[test]
    fn json_mirror() {
        let d = parse_dfa(A_OR_AA).unwrap();
        let json = to_json(&d);
        assert!(json.contains("\"final\""));
        assert_eq!(parse_dfa(&json).unwrap(), d);
        assert!(from_json("{\"n\": 2}").is_err());
    }
}
