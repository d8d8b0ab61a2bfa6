//! Regular expressions to minimal DFAs through iterated quotients
//! (Brzozowski derivatives).
//!
//! Syntax: any character other than `| * ( ) ~ _` and whitespace is a
//! literal; `|` is union, juxtaposition is concatenation, postfix `*` is
//! star, `~` is the empty set and `_` is the empty word.

use std::collections::{BTreeSet, HashMap};

use crate::automata::Dfa;
use crate::error::{Error, Result};

/// Expressions kept in a normal form (unions flattened, sorted and deduped;
/// concatenations right-nested; unit and zero laws applied), which bounds
/// the number of distinct derivatives.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Re {
    Empty,
    Eps,
    Lit(usize),
    Cat(Box<Re>, Box<Re>),
    Alt(BTreeSet<Re>),
    Star(Box<Re>),
}

fn alt(a: Re, b: Re) -> Re {
    let mut set = BTreeSet::new();
    for r in [a, b] {
        match r {
            Re::Empty => {}
            Re::Alt(inner) => set.extend(inner),
            other => {
                set.insert(other);
            }
        }
    }
    match set.len() {
        0 => Re::Empty,
        1 => set.into_iter().next().expect("one element"),
        _ => Re::Alt(set),
    }
}

fn cat(a: Re, b: Re) -> Re {
    match (a, b) {
        (Re::Empty, _) | (_, Re::Empty) => Re::Empty,
        (Re::Eps, r) | (r, Re::Eps) => r,
        (Re::Cat(x, y), r) => cat(*x, cat(*y, r)),
        (l, r) => Re::Cat(Box::new(l), Box::new(r)),
    }
}

fn star(a: Re) -> Re {
    match a {
        Re::Empty | Re::Eps => Re::Eps,
        s @ Re::Star(_) => s,
        other => Re::Star(Box::new(other)),
    }
}

impl Re {
    fn nullable(&self) -> bool {
        match self {
            Re::Empty | Re::Lit(_) => false,
            Re::Eps | Re::Star(_) => true,
            Re::Cat(a, b) => a.nullable() && b.nullable(),
            Re::Alt(set) => set.iter().any(Re::nullable),
        }
    }

    /// `c⁻¹ L(self)`.
    fn derive(&self, c: usize) -> Re {
        match self {
            Re::Empty | Re::Eps => Re::Empty,
            Re::Lit(x) => {
                if *x == c {
                    Re::Eps
                } else {
                    Re::Empty
                }
            }
            Re::Cat(a, b) => {
                let left = cat(a.derive(c), (**b).clone());
                if a.nullable() {
                    alt(left, b.derive(c))
                } else {
                    left
                }
            }
            Re::Alt(set) => set.iter().fold(Re::Empty, |acc, r| alt(acc, r.derive(c))),
            Re::Star(a) => cat(a.derive(c), self.clone()),
        }
    }
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    symbols: &'a mut Vec<String>,
    fixed: bool,
}

const META: &[char] = &['|', '*', '(', ')', '~', '_'];

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn union(&mut self) -> Result<Re> {
        let mut r = self.concat()?;
        while self.peek() == Some('|') {
            self.pos += 1;
            r = alt(r, self.concat()?);
        }
        Ok(r)
    }

    fn concat(&mut self) -> Result<Re> {
        let mut parts = Vec::new();
        while let Some(c) = self.peek() {
            if c == '|' || c == ')' {
                break;
            }
            parts.push(self.postfix()?);
        }
        if parts.is_empty() {
            return Err(self.error("empty expression (use `_` for the empty word)"));
        }
        Ok(parts.into_iter().rev().fold(Re::Eps, |acc, r| cat(r, acc)))
    }

    fn postfix(&mut self) -> Result<Re> {
        let mut r = self.atom()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            r = star(r);
        }
        Ok(r)
    }

    fn atom(&mut self) -> Result<Re> {
        let c = self
            .peek()
            .ok_or_else(|| self.error("unexpected end of pattern"))?;
        match c {
            '(' => {
                self.pos += 1;
                let r = self.union()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(r)
            }
            '~' => {
                self.pos += 1;
                Ok(Re::Empty)
            }
            '_' => {
                self.pos += 1;
                Ok(Re::Eps)
            }
            '|' | '*' | ')' => Err(self.error(format!("unexpected `{c}`"))),
            lit => {
                let sym = lit.to_string();
                let idx = match self.symbols.iter().position(|s| *s == sym) {
                    Some(i) => i,
                    None if self.fixed => {
                        return Err(self.error(format!("`{lit}` is not in the alphabet")))
                    }
                    None => {
                        self.symbols.push(sym);
                        self.symbols.len() - 1
                    }
                };
                self.pos += 1;
                Ok(Re::Lit(idx))
            }
        }
    }
}

fn parse(pattern: &str, symbols: &mut Vec<String>, fixed: bool) -> Result<Re> {
    let mut p = Parser {
        chars: pattern.chars().collect(),
        pos: 0,
        symbols,
        fixed,
    };
    let r = p.union()?;
    if let Some(c) = p.peek() {
        return Err(p.error(format!("unexpected `{c}`")));
    }
    Ok(r)
}

fn build(re: Re, alphabet: Vec<String>) -> Result<Dfa> {
    let sigma = alphabet.len();
    let mut ids: HashMap<Re, usize> = HashMap::from([(re.clone(), 0)]);
    let mut states = vec![re];
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); sigma];
    let mut head = 0;
    while head < states.len() {
        let current = states[head].clone();
        head += 1;
        for (c, row) in rows.iter_mut().enumerate() {
            let d = current.derive(c);
            let fresh = states.len();
            let id = *ids.entry(d.clone()).or_insert_with(|| {
                states.push(d);
                fresh
            });
            row.push(id + 1);
        }
    }
    let finals: Vec<usize> = states
        .iter()
        .enumerate()
        .filter(|(_, r)| r.nullable())
        .map(|(i, _)| i + 1)
        .collect();
    if finals.is_empty() {
        return Err(Error::EmptyLanguage);
    }
    Ok(Dfa::new(alphabet, rows, 1, &finals)?.minimize())
}

/// Minimal DFA of `pattern` over the symbols it mentions, in order of first
/// appearance.
pub fn regex_to_dfa(pattern: &str) -> Result<Dfa> {
    let mut symbols = Vec::new();
    let re = parse(pattern, &mut symbols, false)?;
    if re == Re::Empty {
        return Err(Error::EmptyLanguage);
    }
    if symbols.is_empty() {
        return Err(Error::invalid(
            "pattern mentions no symbols; use regex_to_dfa_over to fix an alphabet",
        ));
    }
    build(re, symbols)
}

/// Minimal DFA of `pattern` over a given single-character alphabet.
pub fn regex_to_dfa_over(pattern: &str, alphabet: &[&str]) -> Result<Dfa> {
    if let Some(bad) = alphabet.iter().find(|s| {
        s.chars().count() != 1 || s.chars().any(|c| c.is_whitespace() || META.contains(&c))
    }) {
        return Err(Error::invalid(format!("`{bad}` cannot be a regex literal")));
    }
    let mut symbols: Vec<String> = alphabet.iter().map(|s| s.to_string()).collect();
    let re = parse(pattern, &mut symbols, true)?;
    build(re, symbols)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finite_language_a_or_aa() {
        let d = regex_to_dfa("a|aa").unwrap();
        let expected = Dfa::new(vec!["a".into()], vec![vec![2, 3, 4, 4]], 1, &[2, 3]).unwrap();
        assert_eq!(d.n(), 4);
        assert!(d.isomorphic(&expected).unwrap());
    }

    #[test]
    fn empty_language_rejected() {
        assert_eq!(
            regex_to_dfa_over("~", &["a"]).unwrap_err(),
            Error::EmptyLanguage
        );
        assert_eq!(regex_to_dfa("a~").unwrap_err(), Error::EmptyLanguage);
        assert_eq!(regex_to_dfa("~").unwrap_err(), Error::EmptyLanguage);
        assert!(matches!(regex_to_dfa("_"), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn universal_language() {
        let d = regex_to_dfa("(a|b)*").unwrap();
        assert_eq!(d.n(), 1);
        assert_eq!(d.finals(), vec![1]);
        assert_eq!(d.alphabet(), &["a".to_string(), "b".to_string()]);
    }

    #[test]
    fn epsilon_and_whitespace() {
        let d = regex_to_dfa_over("_ | a b", &["a", "b"]).unwrap();
        assert!(d.accepts(&[]));
        assert!(d.accepts(&[0, 1]));
        assert!(!d.accepts(&[0]));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert!(matches!(
            regex_to_dfa("a|"),
            Err(Error::Syntax { position: 2, .. })
        ));
        assert!(matches!(
            regex_to_dfa("(ab"),
            Err(Error::Syntax { position: 3, .. })
        ));
        assert!(matches!(
            regex_to_dfa("a)"),
            Err(Error::Syntax { position: 1, .. })
        ));
        assert!(matches!(
            regex_to_dfa("*a"),
            Err(Error::Syntax { position: 0, .. })
        ));
        assert!(matches!(
            regex_to_dfa_over("c", &["a"]),
            Err(Error::Syntax { .. })
        ));
    }

    #[test]
    fn star_of_star_normalizes() {
        assert_eq!(star(star(Re::Lit(0))), star(Re::Lit(0)));
        assert_eq!(alt(Re::Lit(0), Re::Lit(0)), Re::Lit(0));
        assert_eq!(cat(Re::Eps, Re::Lit(1)), Re::Lit(1));
    }
}
