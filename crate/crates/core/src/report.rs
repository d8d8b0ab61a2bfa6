//! Plain-text tables and JSON documents for analysis results.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::atoms::{
    classify, psi, transition_semigroup, AtomRow, AtomicStructure, Classification, Verdicts,
};
use crate::automata::Dfa;
use crate::census::CensusReport;
use crate::error::Result;
use crate::semigroup::GroupTag;
use crate::transform::{StateSet, Transformation};

/// Atoms in increasing order, space separated: `∅ {1} {1,2} {2,3}`.
pub fn atoms_line(structure: &AtomicStructure) -> String {
    join(structure.poset().atoms().iter().map(|s| s.to_string()), " ")
}

/// `Ψ(n, 0) … Ψ(n, n)`, space separated.
pub fn psi_row(n: usize) -> Result<String> {
    let row = (0..=n)
        .map(|k| psi(n, k).map(|v| v.to_string()))
        .collect::<Result<Vec<_>>>()?;
    Ok(row.join(" "))
}

fn join(items: impl Iterator<Item = String>, sep: &str) -> String {
    items.collect::<Vec<_>>().join(sep)
}

fn render_grid(rows: &[Vec<String>]) -> String {
    let columns = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..columns)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c > 0 {
                line.push_str(" | ");
            }
            let pad = widths[c] - cell.chars().count();
            line.push_str(cell);
            line.extend(std::iter::repeat_n(' ', pad));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn marker(initial: bool, last: bool) -> &'static str {
    match (initial, last) {
        (true, true) => "↔",
        (true, false) => "→",
        (false, true) => "←",
        (false, false) => "",
    }
}

/// Rows of the átomaton in breadth-first order from the final atom: marker,
/// atom, then one cell per letter (blank when there is no transition).
pub fn atomaton_rows(structure: &AtomicStructure) -> Vec<Vec<String>> {
    let nfa = structure.atomaton();
    let initials = nfa.initials();
    let finals = nfa.finals();
    structure
        .poset()
        .discovery_order()
        .iter()
        .map(|s| {
            let mut row = vec![
                marker(initials.contains(s), finals.contains(s)).to_string(),
                s.to_string(),
            ];
            for a in 0..nfa.alphabet().len() {
                let targets = nfa.eta(s, a);
                row.push(if targets.is_empty() {
                    String::new()
                } else {
                    format!("{{{}}}", join(targets.iter().map(|t| t.to_string()), ","))
                });
            }
            row
        })
        .collect()
}

pub fn atomaton_table(structure: &AtomicStructure) -> String {
    let mut rows = vec![{
        let mut header = vec![String::new(), "η".to_string()];
        header.extend(structure.dfa().alphabet().iter().cloned());
        header
    }];
    rows.extend(atomaton_rows(structure));
    render_grid(&rows)
}

/// The átomaton as data, rows in the same order as [`atomaton_table`].
#[derive(Clone, Debug, Serialize)]
pub struct AtomatonJson {
    pub alphabet: Vec<String>,
    pub atoms: Vec<StateSet>,
    pub initial: Vec<StateSet>,
    #[serde(rename = "final")]
    pub finals: Vec<StateSet>,
    pub eta: BTreeMap<String, Vec<(StateSet, Vec<StateSet>)>>,
}

pub fn atomaton_json(structure: &AtomicStructure) -> AtomatonJson {
    let nfa = structure.atomaton();
    let order = structure.poset().discovery_order();
    AtomatonJson {
        alphabet: nfa.alphabet().to_vec(),
        atoms: order.to_vec(),
        initial: nfa.initials().into_iter().collect(),
        finals: nfa.finals().into_iter().collect(),
        eta: nfa
            .alphabet()
            .iter()
            .enumerate()
            .map(|(a, name)| {
                let row = order
                    .iter()
                    .map(|s| (*s, nfa.eta(s, a).into_iter().collect()))
                    .collect();
                (name.clone(), row)
            })
            .collect(),
    }
}

/// Per-atom complexities keyed by atom, in atom order.
#[derive(Clone, Debug)]
pub struct ComplexityTable(pub Vec<AtomRow>);

impl Serialize for ComplexityTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            achieved: u64,
            target: u64,
        }
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for row in &self.0 {
            map.serialize_entry(
                &row.atom,
                &Entry {
                    achieved: row.achieved,
                    target: row.target,
                },
            )?;
        }
        map.end()
    }
}

impl ComplexityTable {
    pub fn render(&self) -> String {
        let mut rows = vec![vec![
            "atom".to_string(),
            "|S|".into(),
            "achieved".into(),
            "psi".into(),
        ]];
        for r in &self.0 {
            rows.push(vec![
                r.atom.to_string(),
                r.atom.len().to_string(),
                r.achieved.to_string(),
                r.target.to_string(),
            ]);
        }
        render_grid(&rows)
    }
}

/// Summary of a transition semigroup and its group of units.
#[derive(Clone, Debug, Serialize)]
pub struct SemigroupReport {
    pub degree: usize,
    pub size: usize,
    pub generators: Vec<Transformation>,
    pub rank_histogram: BTreeMap<usize, usize>,
    pub group_order: usize,
    pub group_generators: Vec<String>,
    pub set_transitive: BTreeMap<usize, bool>,
    pub has_rank_n_minus_1: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub recognition: Option<GroupTag>,
}

impl SemigroupReport {
    pub fn build(dfa: &Dfa, cap: usize) -> Result<SemigroupReport> {
        let n = dfa.n();
        let semigroup = transition_semigroup(dfa, cap)?;
        let group = semigroup.permutation_subgroup()?;
        let set_transitive = (0..=n)
            .map(|k| Ok((k, group.is_k_set_transitive(k)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        let recognition = if !group.is_empty() && group.is_set_transitive() {
            Some(group.recognize()?)
        } else {
            None
        };
        Ok(SemigroupReport {
            degree: n,
            size: semigroup.len(),
            generators: semigroup.generators().to_vec(),
            rank_histogram: semigroup.rank_histogram(),
            group_order: group.order(),
            group_generators: group
                .generators()
                .iter()
                .map(Transformation::cycle_notation)
                .collect(),
            set_transitive,
            has_rank_n_minus_1: n >= 2 && semigroup.contains_rank(n - 1),
            recognition,
        })
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "size: {}", self.size);
        let hist = join(
            self.rank_histogram.iter().map(|(r, c)| format!("{r}:{c}")),
            " ",
        );
        let _ = writeln!(out, "rank histogram: {hist}");
        let _ = writeln!(out, "group order: {}", self.group_order);
        if !self.group_generators.is_empty() {
            let _ = writeln!(out, "group generators: {}", self.group_generators.join(" "));
        }
        let st = join(
            self.set_transitive
                .iter()
                .map(|(k, t)| format!("{k}:{}", if *t { "yes" } else { "no" })),
            " ",
        );
        let _ = writeln!(out, "set-transitive: {st}");
        let _ = writeln!(out, "rank n-1 element: {}", yes_no(self.has_rank_n_minus_1));
        match self.recognition {
            Some(tag) => {
                let _ = writeln!(out, "group: {tag}");
            }
            None => {
                let _ = writeln!(out, "group: not set-transitive");
            }
        }
        out
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Class flags plus the agreement of the two maximal-atomicity deciders.
#[derive(Clone, Debug, Serialize)]
pub struct ClassReport {
    #[serde(flatten)]
    pub classes: Classification,
    pub deciders_agree: bool,
    pub atom_count: usize,
    pub reverse_complexity: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub violations: Vec<String>,
}

impl ClassReport {
    pub fn from_verdicts(v: &Verdicts) -> ClassReport {
        ClassReport {
            classes: v.classes.clone(),
            deciders_agree: v.deciders_agree(),
            atom_count: v.semantic.atom_count,
            reverse_complexity: v.reverse_complexity,
            violations: v.classes.violations(),
        }
    }

    /// Deciders agree, the chain holds and the atom count matches the
    /// reverse.
    pub fn is_consistent(&self) -> bool {
        self.deciders_agree
            && self.violations.is_empty()
            && self.atom_count == self.reverse_complexity
    }

    pub fn render(&self) -> String {
        let c = &self.classes;
        let mut out = String::new();
        for (name, flag) in [
            ("FTS", c.fts),
            ("STS", c.sts),
            ("MAL", c.mal),
            ("MNA", c.mna),
            ("MCR", c.mcr),
        ] {
            let _ = writeln!(out, "{name}: {flag}");
        }
        let _ = writeln!(out, "deciders_agree: {}", self.deciders_agree);
        let _ = writeln!(
            out,
            "atoms: {}, reverse complexity: {}",
            self.atom_count, self.reverse_complexity
        );
        for v in &self.violations {
            let _ = writeln!(out, "violation: {v}");
        }
        out
    }
}

/// Everything at once.
#[derive(Clone, Debug, Serialize)]
pub struct Analysis {
    pub n: usize,
    pub alphabet: Vec<String>,
    pub atoms: Vec<StateSet>,
    pub atom_complexities: ComplexityTable,
    pub semigroup: SemigroupReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub flags: Option<ClassReport>,
    pub deciders_agree: bool,
}

impl Analysis {
    pub fn build(dfa: &Dfa, cap: usize) -> Result<Analysis> {
        let structure = AtomicStructure::new(dfa)?;
        let semigroup = SemigroupReport::build(dfa, cap)?;
        let (flags, deciders_agree, rows) = if dfa.n() >= 2 {
            let v = classify(dfa, cap)?;
            let report = ClassReport::from_verdicts(&v);
            let agree = report.deciders_agree;
            (Some(report), agree, v.semantic.rows)
        } else {
            (None, true, structure.complexity_table()?)
        };
        Ok(Analysis {
            n: dfa.n(),
            alphabet: dfa.alphabet().to_vec(),
            atoms: structure.poset().atoms().to_vec(),
            atom_complexities: ComplexityTable(rows),
            semigroup,
            flags,
            deciders_agree,
        })
    }

    pub fn is_consistent(&self) -> bool {
        self.flags.as_ref().is_none_or(ClassReport::is_consistent)
    }

    pub fn render(&self, structure: &AtomicStructure) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "states: {}, alphabet: {}",
            self.n,
            self.alphabet.join(" ")
        );
        let _ = writeln!(
            out,
            "\natoms ({}): {}",
            self.atoms.len(),
            atoms_line(structure)
        );
        let _ = writeln!(out, "\natomaton:\n{}", atomaton_table(structure));
        let _ = writeln!(
            out,
            "atom complexities:\n{}",
            self.atom_complexities.render()
        );
        let _ = writeln!(out, "semigroup:\n{}", self.semigroup.render());
        match &self.flags {
            Some(flags) => {
                let _ = write!(out, "classes:\n{}", flags.render());
            }
            None => {
                let _ = writeln!(out, "classes: one-state DFA, trivially maximally atomic");
            }
        }
        out
    }
}

pub fn census_table(report: &CensusReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{} census, n={}, |Σ|={}{}",
        report.mode,
        report.n,
        report.sigma,
        report
            .seed
            .map(|s| format!(", seed={s}"))
            .unwrap_or_default()
    );
    let _ = writeln!(out, "generated: {}", report.enumerated);
    let _ = writeln!(
        out,
        "minimal: {} raw, {} up to isomorphism\n",
        report.minimal, report.minimal_up_to_isomorphism
    );
    let mut rows = vec![vec!["class".to_string(), "raw".into(), "up to iso".into()]];
    let (r, i) = (&report.raw, &report.up_to_isomorphism);
    for (name, a, b) in [
        ("FTS", r.fts, i.fts),
        ("STS", r.sts, i.sts),
        ("MAL", r.mal, i.mal),
        ("MNA", r.mna, i.mna),
        ("MCR", r.mcr, i.mcr),
    ] {
        rows.push(vec![name.to_string(), a.to_string(), b.to_string()]);
    }
    out.push_str(&render_grid(&rows));
    let _ = writeln!(
        out,
        "\ndecider disagreements: {}\nchain violations: {}\natom/reverse mismatches: {}",
        report.disagreements, report.chain_violations, report.atom_count_mismatches
    );
    out
}
