//! Censuses of minimal DFAs: exhaustive enumeration at a fixed size, or
//! random sampling, with both maximal-atomicity deciders and the class
//! chain checked on every instance.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::atoms::{classify, Classification};
use crate::automata::Dfa;
use crate::error::{Error, Result};
use crate::ingest::render_dfa;
use crate::transform::{StateSet, Transformation};

/// Upper bound on the number of raw DFAs an exhaustive census may visit.
pub const MAX_ENUMERATION: u64 = 50_000_000;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClassCounts {
    pub total: u64,
    #[serde(rename = "FTS")]
    pub fts: u64,
    #[serde(rename = "STS")]
    pub sts: u64,
    #[serde(rename = "MAL")]
    pub mal: u64,
    #[serde(rename = "MNA")]
    pub mna: u64,
    #[serde(rename = "MCR")]
    pub mcr: u64,
}

impl ClassCounts {
    fn add(&mut self, c: &Classification, weight: u64) {
        self.total += weight;
        self.fts += weight * c.fts as u64;
        self.sts += weight * c.sts as u64;
        self.mal += weight * c.mal as u64;
        self.mna += weight * c.mna as u64;
        self.mcr += weight * c.mcr as u64;
    }
}

/// Verdicts for one minimal DFA.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub classes: Classification,
    pub deciders_agree: bool,
    /// Atom count equals the state count of the minimal DFA of the reverse.
    pub atoms_match_reverse: bool,
    pub violations: Vec<String>,
}

impl Outcome {
    pub fn is_consistent(&self) -> bool {
        self.deciders_agree && self.atoms_match_reverse && self.violations.is_empty()
    }
}

pub fn evaluate(dfa: &Dfa, cap: usize) -> Result<Outcome> {
    let v = classify(dfa, cap)?;
    Ok(Outcome {
        deciders_agree: v.deciders_agree(),
        atoms_match_reverse: v.semantic.atom_count == v.reverse_complexity,
        violations: v.classes.violations(),
        classes: v.classes,
    })
}

/// Representative instances found during a census.
#[derive(Clone, Debug, Default)]
pub struct CensusExamples {
    /// In STS but not FTS.
    pub sts_not_fts: Option<Dfa>,
    /// In MNA but not MAL.
    pub mna_not_mal: Option<Dfa>,
    pub inconsistent: Vec<(Dfa, Outcome)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusReport {
    pub n: usize,
    pub sigma: usize,
    pub mode: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// DFAs generated before minimality filtering.
    pub enumerated: u64,
    pub minimal: u64,
    pub minimal_up_to_isomorphism: u64,
    pub raw: ClassCounts,
    pub up_to_isomorphism: ClassCounts,
    pub disagreements: u64,
    pub atom_count_mismatches: u64,
    pub chain_violations: u64,
    #[serde(skip)]
    pub examples: CensusExamples,
}

impl CensusReport {
    pub fn is_consistent(&self) -> bool {
        self.disagreements == 0 && self.atom_count_mismatches == 0 && self.chain_violations == 0
    }
}

fn summarize(
    n: usize,
    sigma: usize,
    mode: &'static str,
    seed: Option<u64>,
    enumerated: u64,
    classes: HashMap<Dfa, u64>,
    cap: usize,
) -> Result<CensusReport> {
    let mut keyed: Vec<(String, Dfa, u64)> = classes
        .into_iter()
        .map(|(d, w)| (render_dfa(&d), d, w))
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    let outcomes = keyed
        .par_iter()
        .map(|(_, d, _)| evaluate(d, cap))
        .collect::<Result<Vec<_>>>()?;

    let mut report = CensusReport {
        n,
        sigma,
        mode,
        seed,
        enumerated,
        minimal: 0,
        minimal_up_to_isomorphism: keyed.len() as u64,
        raw: ClassCounts::default(),
        up_to_isomorphism: ClassCounts::default(),
        disagreements: 0,
        atom_count_mismatches: 0,
        chain_violations: 0,
        examples: CensusExamples::default(),
    };
    for ((_, dfa, weight), outcome) in keyed.into_iter().zip(outcomes) {
        let c = &outcome.classes;
        report.minimal += weight;
        report.raw.add(c, weight);
        report.up_to_isomorphism.add(c, 1);
        report.disagreements += !outcome.deciders_agree as u64;
        report.atom_count_mismatches += !outcome.atoms_match_reverse as u64;
        report.chain_violations += !outcome.violations.is_empty() as u64;
        if c.sts && !c.fts && report.examples.sts_not_fts.is_none() {
            report.examples.sts_not_fts = Some(dfa.clone());
        }
        if c.mna && !c.mal && report.examples.mna_not_mal.is_none() {
            report.examples.mna_not_mal = Some(dfa.clone());
        }
        if !outcome.is_consistent() {
            report.examples.inconsistent.push((dfa, outcome));
        }
    }
    Ok(report)
}

/// Every minimal `n`-state DFA over `sigma` letters with a non-empty
/// language, counted both as raw transition tables (every choice of initial
/// state and final set) and up to isomorphism.
pub fn exhaustive(n: usize, sigma: usize, cap: usize) -> Result<CensusReport> {
    if n < 2 || sigma == 0 {
        return Err(Error::invalid("census needs n ≥ 2 and at least one letter"));
    }
    let letters_total = (n as u64)
        .checked_pow((n * sigma) as u32)
        .filter(|&t| t.saturating_mul(n as u64 * (1u64 << n)) <= MAX_ENUMERATION)
        .ok_or_else(|| Error::Capacity {
            what: format!("exhaustive census at n={n}, |Σ|={sigma}"),
            limit: MAX_ENUMERATION as usize,
        })?;
    let alphabet: Vec<String> = (0..sigma).map(symbol_name).collect();
    let enumerated = letters_total * n as u64 * ((1u64 << n) - 1);

    let classes = (0..letters_total)
        .into_par_iter()
        .fold(HashMap::new, |mut acc: HashMap<Dfa, u64>, code| {
            let rows = decode_rows(code, n, sigma);
            for initial in 1..=n {
                for bits in 1u32..(1 << n) {
                    let finals: Vec<usize> =
                        (1..=n).filter(|q| bits & (1 << (q - 1)) != 0).collect();
                    let dfa = Dfa::new(alphabet.clone(), rows.clone(), initial, &finals)
                        .expect("enumerated tables are valid");
                    if dfa.is_minimal() {
                        *acc.entry(dfa.canonical()).or_insert(0) += 1;
                    }
                }
            }
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (d, w) in b {
                *a.entry(d).or_insert(0) += w;
            }
            a
        });
    summarize(n, sigma, "exhaustive", None, enumerated, classes, cap)
}

/// `count` random minimal `n`-state DFAs over `sigma` letters.
pub fn random(n: usize, sigma: usize, count: usize, seed: u64, cap: usize) -> Result<CensusReport> {
    let dfas = random_minimal_dfas(n, sigma, count, seed)?;
    let mut classes: HashMap<Dfa, u64> = HashMap::new();
    for d in dfas {
        *classes.entry(d.canonical()).or_insert(0) += 1;
    }
    summarize(n, sigma, "random", Some(seed), count as u64, classes, cap)
}

fn symbol_name(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("x{i}")
    }
}

fn decode_rows(mut code: u64, n: usize, sigma: usize) -> Vec<Vec<usize>> {
    let mut rows = vec![vec![0; n]; sigma];
    for row in rows.iter_mut() {
        for entry in row.iter_mut() {
            *entry = (code % n as u64) as usize + 1;
            code /= n as u64;
        }
    }
    rows
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Transformation {
    let mut row: Vec<usize> = (1..=n).collect();
    row.shuffle(rng);
    Transformation::new(&row).expect("valid permutation")
}

/// A letter drawn from a mixture of shapes: uniform transformations,
/// permutations, rank `n - 1` maps, unitaries, transpositions and cycles.
pub fn random_letter<R: Rng>(rng: &mut R, n: usize) -> Transformation {
    let uniform = |rng: &mut R| {
        let row: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=n)).collect();
        Transformation::new(&row).expect("valid row")
    };
    if n < 2 {
        return uniform(rng);
    }
    let pair = |rng: &mut R| {
        let i = rng.gen_range(1..=n);
        let mut j = rng.gen_range(1..n);
        if j >= i {
            j += 1;
        }
        (i, j)
    };
    match rng.gen_range(0..6) {
        0 => uniform(rng),
        1 => random_permutation(rng, n),
        2 => {
            let (i, j) = pair(rng);
            let p = random_permutation(rng, n);
            p.after(&Transformation::unitary(n, i, j).expect("distinct"))
        }
        3 => {
            let (i, j) = pair(rng);
            Transformation::unitary(n, i, j).expect("distinct")
        }
        4 => {
            let (i, j) = pair(rng);
            Transformation::transposition(n, i, j).expect("distinct")
        }
        _ => {
            let p = random_permutation(rng, n);
            let c = Transformation::cycle(n).expect("valid degree");
            p.after(&c).after(&p.inverse().expect("permutation"))
        }
    }
}

/// Random DFA with letters from [`random_letter`], initial state 1 and a
/// random non-empty final set; not necessarily minimal.
pub fn random_dfa<R: Rng>(rng: &mut R, n: usize, sigma: usize) -> Dfa {
    let alphabet: Vec<String> = (0..sigma).map(symbol_name).collect();
    let letters: Vec<Transformation> = (0..sigma).map(|_| random_letter(rng, n)).collect();
    let finals = loop {
        let bits = rng.gen_range(1u32..(1 << n));
        if n == 1 || bits != (1 << n) - 1 {
            break StateSet::from_bits(n, bits).expect("within degree");
        }
    };
    Dfa::from_transformations(alphabet, &letters, 1, finals).expect("valid letters")
}

/// Rejection-samples `count` minimal DFAs with exactly `n` states.
pub fn random_minimal_dfas(n: usize, sigma: usize, count: usize, seed: u64) -> Result<Vec<Dfa>> {
    if n < 2 || sigma == 0 {
        return Err(Error::invalid(
            "random census needs n ≥ 2 and at least one letter",
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0usize;
    while out.len() < count {
        attempts += 1;
        if attempts > 1000 * (count + 1) {
            return Err(Error::invalid(format!(
                "could not sample {count} minimal DFAs with {n} states over {sigma} letters"
            )));
        }
        let d = random_dfa(&mut rng, n, sigma);
        if d.is_minimal() {
            out.push(d);
        }
    }
    Ok(out)
}
