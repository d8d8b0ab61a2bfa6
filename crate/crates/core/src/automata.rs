//! Deterministic and nondeterministic automata.
//!
//! States are 1-based labels in the public API. Words are slices of symbol
//! indices into the automaton's alphabet and are read left to right, so the
//! induced transformations satisfy `δ_{xa} = δ_a ∘ δ_x`.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::semigroup::Semigroup;
use crate::transform::{StateSet, Transformation};

fn check_alphabet(alphabet: &[String]) -> Result<()> {
    if alphabet.is_empty() {
        return Err(Error::invalid("alphabet must not be empty"));
    }
    let mut seen = BTreeSet::new();
    for sym in alphabet {
        if sym.is_empty() || sym.chars().any(char::is_whitespace) {
            return Err(Error::invalid(format!("bad alphabet symbol `{sym}`")));
        }
        if !seen.insert(sym) {
            return Err(Error::invalid(format!("duplicate alphabet symbol `{sym}`")));
        }
    }
    Ok(())
}

/// Splits `text` into symbol indices. Single-character alphabets may be
/// written without separators (`aab`); otherwise symbols are separated by
/// whitespace.
fn parse_word(alphabet: &[String], text: &str) -> Result<Vec<usize>> {
    let lookup = |tok: &str| {
        alphabet
            .iter()
            .position(|s| s == tok)
            .ok_or_else(|| Error::invalid(format!("unknown symbol `{tok}`")))
    };
    let text = text.trim();
    if text.is_empty() || text == "ε" {
        return Ok(Vec::new());
    }
    let single_chars = alphabet.iter().all(|s| s.chars().count() == 1);
    if single_chars && !text.contains(char::is_whitespace) {
        text.chars()
            .map(|c| lookup(c.encode_utf8(&mut [0; 4])))
            .collect()
    } else {
        text.split_whitespace().map(lookup).collect()
    }
}

/// A complete deterministic automaton with states `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dfa {
    alphabet: Vec<String>,
    // next[a][q], 0-based
    next: Vec<Vec<u32>>,
    initial: u32,
    finals: Vec<bool>,
}

impl Dfa {
    /// Builds a DFA from per-symbol rows `[δ_a(1), ..., δ_a(n)]`, all 1-based.
    pub fn new(
        alphabet: Vec<String>,
        rows: Vec<Vec<usize>>,
        initial: usize,
        finals: &[usize],
    ) -> Result<Dfa> {
        check_alphabet(&alphabet)?;
        if rows.len() != alphabet.len() {
            return Err(Error::invalid(format!(
                "{} transition rows for {} symbols",
                rows.len(),
                alphabet.len()
            )));
        }
        let n = rows[0].len();
        if n == 0 {
            return Err(Error::invalid("a DFA needs at least one state"));
        }
        let mut next = Vec::with_capacity(rows.len());
        for (sym, row) in alphabet.iter().zip(&rows) {
            if row.len() != n {
                return Err(Error::invalid(format!(
                    "row for `{sym}` has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&q| q == 0 || q > n) {
                return Err(Error::invalid(format!(
                    "target {bad} of `{sym}` not in 1..={n}"
                )));
            }
            next.push(row.iter().map(|&q| (q - 1) as u32).collect());
        }
        if initial == 0 || initial > n {
            return Err(Error::invalid(format!(
                "initial state {initial} not in 1..={n}"
            )));
        }
        let mut flags = vec![false; n];
        for &f in finals {
            if f == 0 || f > n {
                return Err(Error::invalid(format!("final state {f} not in 1..={n}")));
            }
            flags[f - 1] = true;
        }
        Ok(Dfa {
            alphabet,
            next,
            initial: (initial - 1) as u32,
            finals: flags,
        })
    }

    /// Builds a DFA whose letters act as the given transformations.
    pub fn from_transformations(
        alphabet: Vec<String>,
        letters: &[Transformation],
        initial: usize,
        finals: StateSet,
    ) -> Result<Dfa> {
        let rows = letters.iter().map(|t| t.images()).collect();
        let finals: Vec<usize> = finals.iter().collect();
        let dfa = Dfa::new(alphabet, rows, initial, &finals)?;
        if letters.iter().any(|t| t.degree() != dfa.n()) {
            return Err(Error::invalid("letters have different degrees"));
        }
        Ok(dfa)
    }

    fn from_raw(
        alphabet: Vec<String>,
        next: Vec<Vec<u32>>,
        initial: u32,
        finals: Vec<bool>,
    ) -> Dfa {
        Dfa {
            alphabet,
            next,
            initial,
            finals,
        }
    }

    pub fn n(&self) -> usize {
        self.finals.len()
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn initial(&self) -> usize {
        self.initial as usize + 1
    }

    pub fn is_final(&self, q: usize) -> bool {
        self.finals[q - 1]
    }

    /// Final states, increasing.
    pub fn finals(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&q| self.is_final(q)).collect()
    }

    /// Final states as a [`StateSet`]; requires `n ≤ 16`.
    pub fn final_set(&self) -> Result<StateSet> {
        StateSet::from_states(self.n(), self.finals())
    }

    /// `δ(q, a)` with 1-based states.
    pub fn step(&self, q: usize, symbol: usize) -> usize {
        self.next[symbol][q - 1] as usize + 1
    }

    /// The row `[δ_a(1), ..., δ_a(n)]`.
    pub fn row(&self, symbol: usize) -> Vec<usize> {
        self.next[symbol].iter().map(|&q| q as usize + 1).collect()
    }

    /// The transformation of `Q_n` performed by one letter; requires `n ≤ 16`.
    pub fn letter(&self, symbol: usize) -> Result<Transformation> {
        Transformation::new(&self.row(symbol))
    }

    pub fn letters(&self) -> Result<Vec<Transformation>> {
        (0..self.alphabet.len()).map(|a| self.letter(a)).collect()
    }

    pub fn parse_word(&self, text: &str) -> Result<Vec<usize>> {
        parse_word(&self.alphabet, text)
    }

    fn check_word(&self, word: &[usize]) -> Result<()> {
        match word.iter().find(|&&a| a >= self.alphabet.len()) {
            Some(a) => Err(Error::invalid(format!(
                "symbol index {a} outside the alphabet"
            ))),
            None => Ok(()),
        }
    }

    /// State reached from `q` after reading `word`.
    pub fn run(&self, q: usize, word: &[usize]) -> usize {
        let mut q = q as u32 - 1;
        for &a in word {
            q = self.next[a][q as usize];
        }
        q as usize + 1
    }

    pub fn accepts(&self, word: &[usize]) -> bool {
        self.is_final(self.run(self.initial(), word))
    }

    /// `δ_w`: `δ_w(i)` is the state reached from `i` on `w`; identity for `ε`.
    pub fn induced(&self, word: &[usize]) -> Result<Transformation> {
        self.check_word(word)?;
        let mut t = Transformation::identity(self.n())?;
        for &a in word {
            t = self.letter(a)?.after(&t);
        }
        Ok(t)
    }

    /// The closure of the letter transformations.
    pub fn transition_semigroup(&self, cap: usize) -> Result<Semigroup> {
        Semigroup::closure(&self.letters()?, cap)
    }

    /// States reachable from the initial state, in breadth-first order.
    fn bfs_order(&self) -> Vec<u32> {
        let mut seen = vec![false; self.n()];
        let mut order = vec![self.initial];
        seen[self.initial as usize] = true;
        let mut head = 0;
        while head < order.len() {
            let q = order[head] as usize;
            head += 1;
            for row in &self.next {
                let r = row[q];
                if !seen[r as usize] {
                    seen[r as usize] = true;
                    order.push(r);
                }
            }
        }
        order
    }

    pub fn reachable_count(&self) -> usize {
        self.bfs_order().len()
    }

    /// Relabels reachable states in breadth-first order from the initial
    /// state, dropping unreachable ones. Two DFAs without unreachable states
    /// are isomorphic iff their canonical forms are equal (given equal
    /// alphabets).
    pub fn canonical(&self) -> Dfa {
        let order = self.bfs_order();
        let mut label = vec![u32::MAX; self.n()];
        for (new, &old) in order.iter().enumerate() {
            label[old as usize] = new as u32;
        }
        let next = self
            .next
            .iter()
            .map(|row| {
                order
                    .iter()
                    .map(|&q| label[row[q as usize] as usize])
                    .collect()
            })
            .collect();
        let finals = order.iter().map(|&q| self.finals[q as usize]).collect();
        Dfa::from_raw(self.alphabet.clone(), next, 0, finals)
    }

    /// Reachable, partition-refined DFA, relabelled breadth-first. Dead
    /// states are kept.
    pub fn minimize(&self) -> Dfa {
        let d = self.canonical();
        let n = d.n();
        let mut class: Vec<u32> = d.finals.iter().map(|&f| f as u32).collect();
        let mut classes = class.iter().collect::<BTreeSet<_>>().len();
        // Moore refinement: split by (class, classes of successors) until stable.
        loop {
            let mut ids: HashMap<Vec<u32>, u32> = HashMap::new();
            let mut refined = vec![0u32; n];
            for q in 0..n {
                let mut sig = Vec::with_capacity(d.next.len() + 1);
                sig.push(class[q]);
                sig.extend(d.next.iter().map(|row| class[row[q] as usize]));
                let fresh = ids.len() as u32;
                refined[q] = *ids.entry(sig).or_insert(fresh);
            }
            let count = ids.len();
            class = refined;
            if count == classes {
                break;
            }
            classes = count;
        }
        let rep: Vec<usize> = {
            let mut rep = vec![usize::MAX; classes];
            for q in (0..n).rev() {
                rep[class[q] as usize] = q;
            }
            rep
        };
        let next = d
            .next
            .iter()
            .map(|row| rep.iter().map(|&q| class[row[q] as usize]).collect())
            .collect();
        let finals = rep.iter().map(|&q| d.finals[q]).collect();
        Dfa::from_raw(d.alphabet.clone(), next, class[0], finals).canonical()
    }

    /// All states reachable and pairwise distinguishable.
    pub fn is_minimal(&self) -> bool {
        self.reachable_count() == self.n() && self.minimize().n() == self.n()
    }

    /// Whether no final state is reachable.
    pub fn language_is_empty(&self) -> bool {
        self.bfs_order().iter().all(|&q| !self.finals[q as usize])
    }

    /// Isomorphism of minimal DFAs over the same symbols, via the unique
    /// candidate map grown from the initial states.
    pub fn isomorphic(&self, other: &Dfa) -> Result<bool> {
        if !self.is_minimal() || !other.is_minimal() {
            return Err(Error::invalid("isomorphism test requires minimal DFAs"));
        }
        if self.n() != other.n() {
            return Ok(false);
        }
        let mut symbols = Vec::with_capacity(self.alphabet.len());
        for sym in &self.alphabet {
            match other.alphabet.iter().position(|s| s == sym) {
                Some(b) => symbols.push(b),
                None => return Ok(false),
            }
        }
        if other.alphabet.len() != symbols.len() {
            return Ok(false);
        }
        let mut map = vec![u32::MAX; self.n()];
        map[self.initial as usize] = other.initial;
        let mut queue = VecDeque::from([self.initial]);
        while let Some(p) = queue.pop_front() {
            let q = map[p as usize];
            if self.finals[p as usize] != other.finals[q as usize] {
                return Ok(false);
            }
            for (a, &b) in symbols.iter().enumerate() {
                let pn = self.next[a][p as usize];
                let qn = other.next[b][q as usize];
                if map[pn as usize] == u32::MAX {
                    map[pn as usize] = qn;
                    queue.push_back(pn);
                } else if map[pn as usize] != qn {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Language equivalence over a shared alphabet, by product search.
    pub fn equivalent(&self, other: &Dfa) -> bool {
        if self.alphabet != other.alphabet {
            return false;
        }
        let start = (self.initial, other.initial);
        let mut seen = std::collections::HashSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some((p, q)) = queue.pop_front() {
            if self.finals[p as usize] != other.finals[q as usize] {
                return false;
            }
            for a in 0..self.alphabet.len() {
                let pair = (self.next[a][p as usize], other.next[a][q as usize]);
                if seen.insert(pair) {
                    queue.push_back(pair);
                }
            }
        }
        true
    }

    /// The DFA viewed as an NFA with singleton transitions.
    pub fn as_nfa(&self) -> Nfa<usize> {
        let eta = (0..self.n())
            .map(|q| self.next.iter().map(|row| vec![row[q] as usize]).collect())
            .collect();
        Nfa {
            states: (1..=self.n()).collect(),
            alphabet: self.alphabet.clone(),
            eta,
            initials: vec![self.initial as usize],
            finals: (0..self.n()).filter(|&q| self.finals[q]).collect(),
        }
    }

    /// `D^R`: initial states are the old finals, the single final state is the
    /// old initial state, and `η^R(q, a) = δ_a⁻¹(q)`.
    pub fn reverse(&self) -> Nfa<usize> {
        let n = self.n();
        let mut eta = vec![vec![Vec::new(); self.alphabet.len()]; n];
        for (a, row) in self.next.iter().enumerate() {
            for (p, &q) in row.iter().enumerate() {
                eta[q as usize][a].push(p);
            }
        }
        Nfa {
            states: (1..=n).collect(),
            alphabet: self.alphabet.clone(),
            eta,
            initials: (0..n).filter(|&q| self.finals[q]).collect(),
            finals: vec![self.initial as usize],
        }
    }
}

/// A nondeterministic automaton over arbitrary ordered state values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nfa<Q> {
    states: Vec<Q>,
    alphabet: Vec<String>,
    // eta[state][symbol] = sorted state indices
    eta: Vec<Vec<Vec<usize>>>,
    initials: Vec<usize>,
    finals: Vec<usize>,
}

impl<Q: Clone + Ord> Nfa<Q> {
    /// Builds an NFA. `eta(q, a)` gives the successors of `q` on symbol `a`.
    pub fn new<F>(
        states: Vec<Q>,
        alphabet: Vec<String>,
        mut eta: F,
        initials: &[Q],
        finals: &[Q],
    ) -> Result<Nfa<Q>>
    where
        F: FnMut(&Q, usize) -> Vec<Q>,
    {
        check_alphabet(&alphabet)?;
        let index: std::collections::BTreeMap<&Q, usize> =
            states.iter().enumerate().map(|(i, q)| (q, i)).collect();
        if index.len() != states.len() {
            return Err(Error::invalid("duplicate NFA state"));
        }
        let find = |q: &Q| {
            index
                .get(q)
                .copied()
                .ok_or_else(|| Error::invalid("transition or marker refers to an unknown state"))
        };
        let mut table = Vec::with_capacity(states.len());
        for q in &states {
            let mut row = Vec::with_capacity(alphabet.len());
            for a in 0..alphabet.len() {
                let mut targets = eta(q, a).iter().map(find).collect::<Result<Vec<_>>>()?;
                targets.sort_unstable();
                targets.dedup();
                row.push(targets);
            }
            table.push(row);
        }
        let mut ini = initials.iter().map(find).collect::<Result<Vec<_>>>()?;
        ini.sort_unstable();
        ini.dedup();
        let mut fin = finals.iter().map(find).collect::<Result<Vec<_>>>()?;
        fin.sort_unstable();
        fin.dedup();
        Ok(Nfa {
            states,
            alphabet,
            eta: table,
            initials: ini,
            finals: fin,
        })
    }

    pub fn states(&self) -> &[Q] {
        &self.states
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    fn index_of(&self, q: &Q) -> Option<usize> {
        self.states.iter().position(|s| s == q)
    }

    /// `η(q, a)`; empty for states that do not belong to the NFA.
    pub fn eta(&self, q: &Q, symbol: usize) -> BTreeSet<Q> {
        self.index_of(q)
            .map(|i| {
                self.eta[i][symbol]
                    .iter()
                    .map(|&j| self.states[j].clone())
                    .collect()
            })
            .unwrap_or_default()
    }

    pub fn initials(&self) -> BTreeSet<Q> {
        self.initials
            .iter()
            .map(|&i| self.states[i].clone())
            .collect()
    }

    pub fn finals(&self) -> BTreeSet<Q> {
        self.finals
            .iter()
            .map(|&i| self.states[i].clone())
            .collect()
    }

    /// The same NFA started from a different set of initial states.
    pub fn with_initials(&self, initials: &[Q]) -> Result<Nfa<Q>> {
        let mut ini = initials
            .iter()
            .map(|q| {
                self.index_of(q)
                    .ok_or_else(|| Error::invalid("initial state not in the NFA"))
            })
            .collect::<Result<Vec<_>>>()?;
        ini.sort_unstable();
        ini.dedup();
        Ok(Nfa {
            initials: ini,
            ..self.clone()
        })
    }

    fn step_set(&self, set: &[usize], symbol: usize) -> Vec<usize> {
        let mut out: Vec<usize> = set
            .iter()
            .flat_map(|&q| self.eta[q][symbol].iter().copied())
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn parse_word(&self, text: &str) -> Result<Vec<usize>> {
        parse_word(&self.alphabet, text)
    }

    pub fn accepts(&self, word: &[usize]) -> bool {
        let mut current = self.initials.clone();
        for &a in word {
            current = self.step_set(&current, a);
        }
        current.iter().any(|q| self.finals.binary_search(q).is_ok())
    }

    /// Subset construction over the reachable subsets. The empty subset is an
    /// ordinary state when reachable. States are numbered breadth-first from
    /// the initial subset.
    pub fn determinize(&self) -> Determinized<Q> {
        let start = self.initials.clone();
        let mut ids: HashMap<Vec<usize>, u32> = HashMap::from([(start.clone(), 0)]);
        let mut subsets = vec![start];
        let mut next: Vec<Vec<u32>> = vec![Vec::new(); self.alphabet.len()];
        let mut head = 0;
        while head < subsets.len() {
            let current = subsets[head].clone();
            head += 1;
            for (a, row) in next.iter_mut().enumerate() {
                let target = self.step_set(&current, a);
                let fresh = ids.len() as u32;
                let id = *ids.entry(target.clone()).or_insert_with(|| {
                    subsets.push(target);
                    fresh
                });
                row.push(id);
            }
        }
        let finals = subsets
            .iter()
            .map(|s| s.iter().any(|q| self.finals.binary_search(q).is_ok()))
            .collect();
        let labels = subsets
            .iter()
            .map(|s| s.iter().map(|&i| self.states[i].clone()).collect())
            .collect();
        Determinized {
            dfa: Dfa::from_raw(self.alphabet.clone(), next, 0, finals),
            subsets: labels,
        }
    }
}

/// Result of the subset construction: a DFA and, for each of its states, the
/// subset of NFA states it stands for.
#[derive(Clone, Debug)]
pub struct Determinized<Q> {
    pub dfa: Dfa,
    /// `subsets[q - 1]` is the subset represented by DFA state `q`.
    pub subsets: Vec<BTreeSet<Q>>,
}

impl<Q> Determinized<Q> {
    pub fn subset(&self, q: usize) -> &BTreeSet<Q> {
        &self.subsets[q - 1]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(s: &[&str]) -> Vec<String> {
        s.iter().map(|x| x.to_string()).collect()
    }

    fn a_or_aa() -> Dfa {
        Dfa::new(sym(&["a"]), vec![vec![2, 3, 4, 4]], 1, &[2, 3]).unwrap()
    }

    fn bset(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    #[test]
    fn reverse_of_a_or_aa() {
        let r = a_or_aa().reverse();
        assert_eq!(r.eta(&2, 0), bset(&[1]));
        assert_eq!(r.eta(&3, 0), bset(&[2]));
        assert_eq!(r.eta(&4, 0), bset(&[3, 4]));
        assert_eq!(r.eta(&1, 0), bset(&[]));
        assert_eq!(r.initials(), bset(&[2, 3]));
        assert_eq!(r.finals(), bset(&[1]));
    }

    #[test]
    fn reverse_of_single_state_loop() {
        let d = Dfa::new(sym(&["a"]), vec![vec![1]], 1, &[1]).unwrap();
        let r = d.reverse();
        assert_eq!(r, d.as_nfa());
    }

    #[test]
    fn double_reverse_of_permutation_dfa() {
        let d = Dfa::new(
            sym(&["a", "b"]),
            vec![vec![2, 3, 1], vec![2, 1, 3]],
            1,
            &[3],
        )
        .unwrap();
        let rr = d.reverse().determinize();
        // Reversed permutation letters are again deterministic: each η^R(q,a)
        // is a singleton, and reversing once more restores δ.
        for q in 1..=3 {
            for a in 0..2 {
                let back = d.reverse().eta(&q, a);
                assert_eq!(back.len(), 1);
                let p = *back.iter().next().unwrap();
                assert_eq!(d.step(p, a), q);
            }
        }
        assert_eq!(rr.dfa.n(), 3);
    }

    #[test]
    fn determinize_reverse_of_a_or_aa() {
        let det = a_or_aa().reverse().determinize();
        let want: Vec<BTreeSet<usize>> = vec![bset(&[2, 3]), bset(&[1, 2]), bset(&[1]), bset(&[])];
        assert_eq!(det.subsets, want);
        assert_eq!(det.dfa.row(0), vec![2, 3, 4, 4]);
        assert_eq!(det.dfa.finals(), vec![2, 3]);
        assert_eq!(det.dfa.initial(), 1);
    }

    #[test]
    fn determinize_dfa_is_identity_on_reachable_part() {
        let d = a_or_aa();
        let det = d.as_nfa().determinize();
        assert_eq!(det.dfa, d.canonical());
    }

    #[test]
    fn minimize_a_or_aa_is_stable() {
        let d = a_or_aa();
        assert!(d.is_minimal());
        assert_eq!(d.minimize(), d);
        assert!(d.minimize().isomorphic(&d).unwrap());
    }

    #[test]
    fn minimize_merges_duplicate_sinks() {
        // 1 -a-> 2, 1 -b-> 3; 2 and 3 are accepting sinks.
        let d = Dfa::new(
            sym(&["a", "b"]),
            vec![vec![2, 2, 3], vec![3, 2, 3]],
            1,
            &[2, 3],
        )
        .unwrap();
        assert!(!d.is_minimal());
        let m = d.minimize();
        assert_eq!(m.n(), 2);
        assert!(m.equivalent(&d));
    }

    #[test]
    fn minimize_keeps_dead_state() {
        let m = a_or_aa().minimize();
        assert_eq!(m.n(), 4);
        assert_eq!(m.finals(), vec![2, 3]);
    }

    #[test]
    fn reverse_complexity_counts_atoms_of_example() {
        let d = a_or_aa();
        assert_eq!(d.reverse().determinize().dfa.minimize().n(), 4);
    }

    #[test]
    fn isomorphism() {
        let d = a_or_aa();
        // Same DFA with states relabelled 1↔4, 2↔3.
        let relabelled = Dfa::new(sym(&["a"]), vec![vec![1, 1, 2, 3]], 4, &[2, 3]).unwrap();
        assert!(d.isomorphic(&relabelled).unwrap());
        let x = Dfa::new(sym(&["a"]), vec![vec![2, 1]], 1, &[1]).unwrap();
        let y = Dfa::new(sym(&["a"]), vec![vec![2, 1]], 1, &[2]).unwrap();
        assert!(!x.isomorphic(&y).unwrap());
        let not_minimal = Dfa::new(sym(&["a"]), vec![vec![2, 1]], 1, &[1, 2]).unwrap();
        assert!(x.isomorphic(&not_minimal).is_err());
    }

    #[test]
    fn a_or_aa_and_its_reverse_determinization_are_isomorphic() {
        // {a, aa} is its own reverse, so D and D^{RD} coincide up to labels.
        let d = a_or_aa();
        let rd = d.reverse().determinize().dfa;
        assert!(d.isomorphic(&rd).unwrap());
    }

    #[test]
    fn induced_transformations() {
        let d = a_or_aa();
        let a = d.parse_word("a").unwrap();
        assert_eq!(d.induced(&a).unwrap().images(), vec![2, 3, 4, 4]);
        assert!(d.induced(&[]).unwrap().is_identity());
        let aa = d.parse_word("aa").unwrap();
        assert_eq!(d.induced(&aa).unwrap().images(), vec![3, 4, 4, 4]);
        assert!(d.induced(&[1]).is_err());
        assert!(d.parse_word("ab").is_err());
    }

    #[test]
    fn induced_reads_left_to_right() {
        let d = Dfa::new(
            sym(&["a", "b"]),
            vec![vec![2, 2, 3], vec![3, 1, 3]],
            1,
            &[3],
        )
        .unwrap();
        for text in ["ab", "ba", "aab", "bab"] {
            let w = d.parse_word(text).unwrap();
            let t = d.induced(&w).unwrap();
            for q in 1..=3 {
                assert_eq!(t.apply(q), d.run(q, &w));
            }
            assert_eq!(d.accepts(&w), d.is_final(t.apply(d.initial())));
        }
    }

    #[test]
    fn transition_semigroups() {
        let s = a_or_aa().transition_semigroup(1000).unwrap();
        assert_eq!(s.len(), 3);
        let ranks: Vec<usize> = s.elements().iter().map(|t| t.rank()).collect();
        assert_eq!(
            ranks.iter().copied().collect::<BTreeSet<_>>(),
            bset(&[1, 2, 3])
        );
        let id = Dfa::new(sym(&["a"]), vec![vec![1, 2]], 1, &[2]).unwrap();
        assert_eq!(id.transition_semigroup(10).unwrap().len(), 1);
    }

    #[test]
    fn constructor_validation() {
        assert!(Dfa::new(vec![], vec![], 1, &[]).is_err());
        assert!(Dfa::new(sym(&["a"]), vec![vec![2, 3]], 1, &[]).is_err());
        assert!(Dfa::new(sym(&["a"]), vec![vec![1, 2]], 3, &[]).is_err());
        assert!(Dfa::new(sym(&["a", "a"]), vec![vec![1], vec![1]], 1, &[]).is_err());
        assert!(Dfa::new(sym(&["a"]), vec![vec![1, 2]], 1, &[0]).is_err());
    }

    #[test]
    fn multi_char_symbols_need_spaces() {
        let d = Dfa::new(sym(&["ab", "c"]), vec![vec![2, 2], vec![1, 1]], 1, &[2]).unwrap();
        assert_eq!(d.parse_word("ab c ab").unwrap(), vec![0, 1, 0]);
        assert!(d.parse_word("abc").is_err());
    }
}
