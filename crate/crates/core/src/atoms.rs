//! Atoms of a regular language and the átomaton.
//!
//! For a minimal DFA with states `Q_n` and quotients `K_1..K_n`, the atom
//! `A_S` is the intersection of the `K_i` with `i ∈ S` and the complements of
//! the others. `A_S` is non-empty exactly when `S = δ_w⁻¹(F)` for some word
//! `w`, so atoms are identified with subsets of `Q_n` throughout.
//!
//! The átomaton moves between atoms through atomic intervals: from the
//! interval `[[V, U]]` (atoms `T` with `V ⊆ T ⊆ U`) a word `w` leads to
//! `[[δ_w(V), Δ_w(U)]]` where `Δ_w(U) = Q_n \ δ_w(Q_n \ U)`.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::automata::{Dfa, Nfa};
use crate::combin::binomial;
use crate::error::{Error, Result};
use crate::semigroup::{PermGroup, Semigroup};
use crate::transform::{StateSet, Transformation, MAX_DEGREE};

/// Largest degree for which the full transition semigroup is generated.
pub const SEMIGROUP_MAX_DEGREE: usize = 10;

/// `Ψ(n, k)`, the largest possible quotient complexity of an atom `A_S`
/// with `|S| = k` in a language of complexity `n`.
pub fn psi(n: usize, k: usize) -> Result<u64> {
    if n == 0 || k > n {
        return Err(Error::invalid(format!(
            "psi({n},{k}) needs n ≥ 1 and 0 ≤ k ≤ n"
        )));
    }
    if n > 62 {
        return Err(Error::invalid(format!("psi({n},{k}) overflows")));
    }
    if k == 0 || k == n {
        return Ok((1u64 << n) - 1);
    }
    let mut total = 1u64;
    for v in 1..=k {
        for u in k..n {
            total += binomial(n, u) * binomial(u, v);
        }
    }
    Ok(total)
}

/// Whether `(v, u)` is an `S`-type; `(-1, -1)` denotes the empty interval.
pub fn s_type_check(s: StateSet, v: i64, u: i64) -> bool {
    let n = s.degree() as i64;
    let k = s.len() as i64;
    if (v, u) == (-1, -1) {
        return 1 <= k && k < n;
    }
    if k == 0 {
        v == 0 && (0..=n - 1).contains(&u)
    } else if k == n {
        (1..=n).contains(&v) && u == n
    } else {
        (1..=k).contains(&v) && (k..=n - 1).contains(&u)
    }
}

/// The atoms `T` with `lower ⊆ T ⊆ upper`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomicInterval {
    pub lower: StateSet,
    pub upper: StateSet,
    /// Sorted.
    pub members: Vec<StateSet>,
}

impl AtomicInterval {
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// `(|⋂ members|, |⋃ members|)`, or `(-1, -1)` when empty.
    pub fn kind(&self) -> (i64, i64) {
        match self.bounds() {
            None => (-1, -1),
            Some((meet, join)) => (meet.len() as i64, join.len() as i64),
        }
    }

    /// Intersection and union of the members.
    pub fn bounds(&self) -> Option<(StateSet, StateSet)> {
        let first = *self.members.first()?;
        Some(
            self.members
                .iter()
                .fold((first, first), |(meet, join), &m| {
                    (meet.intersection(m), join.union(m))
                }),
        )
    }
}

/// The subsets `S` of `Q_n` for which `A_S` is an atom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomicPoset {
    n: usize,
    atoms: Vec<StateSet>,
    member: Vec<bool>,
    // word w with δ_w⁻¹(F) = S, per atom, in the order of `atoms`
    witnesses: Vec<Vec<usize>>,
    discovery: Vec<StateSet>,
}

impl AtomicPoset {
    pub fn degree(&self) -> usize {
        self.n
    }

    /// Atoms in [`StateSet`] order.
    pub fn atoms(&self) -> &[StateSet] {
        &self.atoms
    }

    /// Atoms in the order a breadth-first search from the final atom
    /// meets them.
    pub fn discovery_order(&self) -> &[StateSet] {
        &self.discovery
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    #[inline]
    pub fn contains(&self, s: StateSet) -> bool {
        s.degree() == self.n && self.member[s.bits() as usize]
    }

    /// A shortest word in the atom `A_S`, if `S` is an atom.
    pub fn witness(&self, s: StateSet) -> Option<&[usize]> {
        let i = self.atoms.binary_search(&s).ok()?;
        Some(&self.witnesses[i])
    }

    /// `[[lower, upper]]`.
    pub fn interval(&self, lower: StateSet, upper: StateSet) -> AtomicInterval {
        let mut members: Vec<StateSet> = StateSet::between(lower, upper)
            .filter(|&s| self.contains(s))
            .collect();
        members.sort();
        AtomicInterval {
            lower,
            upper,
            members,
        }
    }

    /// Intersection and union of `[[lower, upper]]`, which determine the
    /// interval uniquely; `None` for the empty interval.
    fn canonical_bounds(&self, lower: StateSet, upper: StateSet) -> Option<(StateSet, StateSet)> {
        let mut acc: Option<(StateSet, StateSet)> = None;
        for s in StateSet::between(lower, upper).filter(|&s| self.contains(s)) {
            acc = Some(match acc {
                None => (s, s),
                Some((meet, join)) => (meet.intersection(s), join.union(s)),
            });
        }
        acc
    }
}

/// Per-state count of how many distinct interval types occur.
pub type TypeCounts = HashMap<(i64, i64), usize>;

/// A minimal DFA together with its atomic poset.
#[derive(Clone, Debug)]
pub struct AtomicStructure {
    dfa: Dfa,
    letters: Vec<Transformation>,
    finals: StateSet,
    poset: AtomicPoset,
}

impl AtomicStructure {
    /// Requires a minimal DFA with at most [`MAX_DEGREE`] states.
    pub fn new(dfa: &Dfa) -> Result<AtomicStructure> {
        if dfa.n() > MAX_DEGREE {
            return Err(Error::Capacity {
                what: format!("atom analysis of a {}-state DFA", dfa.n()),
                limit: MAX_DEGREE,
            });
        }
        if !dfa.is_minimal() {
            return Err(Error::invalid(
                "atoms are defined on the minimal DFA; minimize first",
            ));
        }
        let letters = dfa.letters()?;
        let finals = dfa.final_set()?;
        let poset = Self::reachable_in_reverse(dfa.n(), &letters, finals);
        Ok(AtomicStructure {
            dfa: dfa.clone(),
            letters,
            finals,
            poset,
        })
    }

    /// Breadth-first search of `{δ_w⁻¹(F)}`. Reading `a` from
    /// `X = δ_w⁻¹(F)` gives `δ_a⁻¹(X) = δ_{aw}⁻¹(F)`, so witnesses grow on
    /// the left.
    fn reachable_in_reverse(n: usize, letters: &[Transformation], finals: StateSet) -> AtomicPoset {
        let mut member = vec![false; 1 << n];
        let mut found = vec![(finals, Vec::new())];
        member[finals.bits() as usize] = true;
        let mut head = 0;
        while head < found.len() {
            let (x, word) = found[head].clone();
            head += 1;
            for (a, t) in letters.iter().enumerate() {
                let y = t.preimage(x);
                if !member[y.bits() as usize] {
                    member[y.bits() as usize] = true;
                    let mut w = Vec::with_capacity(word.len() + 1);
                    w.push(a);
                    w.extend_from_slice(&word);
                    found.push((y, w));
                }
            }
        }
        let discovery = found.iter().map(|(s, _)| *s).collect();
        found.sort_by_key(|a| a.0);
        let (atoms, witnesses) = found.into_iter().unzip();
        AtomicPoset {
            n,
            atoms,
            member,
            witnesses,
            discovery,
        }
    }

    pub fn dfa(&self) -> &Dfa {
        &self.dfa
    }

    pub fn n(&self) -> usize {
        self.dfa.n()
    }

    pub fn letters(&self) -> &[Transformation] {
        &self.letters
    }

    pub fn poset(&self) -> &AtomicPoset {
        &self.poset
    }

    /// The unique final atom, `A_F`.
    pub fn final_atom(&self) -> StateSet {
        self.finals
    }

    /// The `S` with `w ∈ A_S`: `{i : δ_w(i) ∈ F}`.
    pub fn atom_of_word(&self, word: &[usize]) -> Result<StateSet> {
        let t = self.dfa.induced(word)?;
        Ok(t.preimage(self.finals))
    }

    fn check_set(&self, s: StateSet) -> Result<()> {
        if s.degree() != self.n() {
            return Err(Error::invalid(format!(
                "set {s} has degree {}, DFA has {} states",
                s.degree(),
                self.n()
            )));
        }
        Ok(())
    }

    /// `η_w([[V, U]]) = [[δ_w(V), Δ_w(U)]]`.
    pub fn eta_on_interval(
        &self,
        lower: StateSet,
        upper: StateSet,
        word: &[usize],
    ) -> Result<AtomicInterval> {
        self.check_set(lower)?;
        self.check_set(upper)?;
        let t = self.dfa.induced(word)?;
        Ok(self.poset.interval(t.image(lower), t.co_image(upper)))
    }

    /// The átomaton, with atoms as states. `η_a(S) = [[δ_a(S), Δ_a(S)]]`,
    /// initial atoms are those containing the initial state, and the final
    /// atom is `F`.
    pub fn atomaton(&self) -> Nfa<StateSet> {
        let q1 = self.dfa.initial();
        let initials: Vec<StateSet> = self
            .poset
            .atoms()
            .iter()
            .copied()
            .filter(|s| s.contains(q1))
            .collect();
        Nfa::new(
            self.poset.atoms().to_vec(),
            self.dfa.alphabet().to_vec(),
            |s, a| {
                let t = &self.letters[a];
                self.poset.interval(t.image(*s), t.co_image(*s)).members
            },
            &initials,
            &[self.finals],
        )
        .expect("átomaton states are exactly the atoms")
    }

    /// Quotient complexity of the atom `A_S`.
    ///
    /// Runs the subset construction on the átomaton started at `S`, keeping
    /// each reachable set of atoms as an atomic interval and identifying
    /// intervals with equal members. The resulting DFA is checked to be
    /// minimal.
    pub fn atom_complexity(&self, s: StateSet) -> Result<u64> {
        Ok(self.atom_dfa(s)?.0.len() as u64)
    }

    /// Number of reachable intervals of each type in the minimal DFA of `A_S`.
    pub fn atom_interval_types(&self, s: StateSet) -> Result<TypeCounts> {
        let mut counts = TypeCounts::new();
        for state in self.atom_dfa(s)?.0 {
            let kind = match state {
                None => (-1, -1),
                Some((meet, join)) => (meet.len() as i64, join.len() as i64),
            };
            *counts.entry(kind).or_insert(0) += 1;
        }
        Ok(counts)
    }

    #[allow(clippy::type_complexity)]
    fn atom_dfa(&self, s: StateSet) -> Result<(Vec<Option<(StateSet, StateSet)>>, Dfa)> {
        self.check_set(s)?;
        if !self.poset.contains(s) {
            return Err(Error::invalid(format!("{s} is not an atom")));
        }
        let sigma = self.letters.len();
        let start = Some((s, s));
        let mut ids: HashMap<Option<(StateSet, StateSet)>, usize> = HashMap::from([(start, 0)]);
        let mut states = vec![start];
        let mut rows: Vec<Vec<usize>> = vec![Vec::new(); sigma];
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            let current = states[i];
            for (a, t) in self.letters.iter().enumerate() {
                let target = current
                    .and_then(|(lo, hi)| self.poset.canonical_bounds(t.image(lo), t.co_image(hi)));
                let fresh = states.len();
                let id = *ids.entry(target).or_insert_with(|| {
                    states.push(target);
                    queue.push_back(fresh);
                    fresh
                });
                rows[a].push(id + 1);
            }
        }
        let finals: Vec<usize> = states
            .iter()
            .enumerate()
            .filter(|(_, st)| matches!(st, Some((lo, hi)) if lo.is_subset(&self.finals) && self.finals.is_subset(hi)))
            .map(|(i, _)| i + 1)
            .collect();
        let dfa = Dfa::new(self.dfa.alphabet().to_vec(), rows, 1, &finals)?;
        let merged = dfa.minimize().n();
        if merged != states.len() {
            return Err(Error::Internal(format!(
                "minimal DFA of atom {s} should have {} states but minimizes to {merged}",
                states.len()
            )));
        }
        Ok((states, dfa))
    }

    /// Per-atom complexities compared with `Ψ(n, |S|)`.
    pub fn complexity_table(&self) -> Result<Vec<AtomRow>> {
        self.poset
            .atoms()
            .iter()
            .map(|&s| {
                Ok(AtomRow {
                    atom: s,
                    achieved: self.atom_complexity(s)?,
                    target: psi(self.n(), s.len())?,
                })
            })
            .collect()
    }

    /// Maximal atomicity measured directly: `2^n` atoms (one when `n = 1`),
    /// each meeting `Ψ(n, |S|)`.
    pub fn semantic_verdict(&self) -> Result<SemanticVerdict> {
        let n = self.n();
        let atom_target = if n == 1 { 1 } else { 1u64 << n };
        let rows = self.complexity_table()?;
        let maximal =
            self.poset.len() as u64 == atom_target && rows.iter().all(|r| r.achieved == r.target);
        Ok(SemanticVerdict {
            maximal,
            atom_count: self.poset.len(),
            atom_target,
            rows,
        })
    }
}

/// One atom's achieved complexity against its bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AtomRow {
    pub atom: StateSet,
    pub achieved: u64,
    pub target: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemanticVerdict {
    pub maximal: bool,
    pub atom_count: usize,
    pub atom_target: u64,
    pub rows: Vec<AtomRow>,
}

/// Maximal atomicity decided from the transition semigroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraicVerdict {
    pub maximal: bool,
    pub semigroup_size: usize,
    pub group_order: usize,
    pub set_transitive: bool,
    pub has_rank_n_minus_1: bool,
}

/// Transition semigroup of a DFA, refusing degrees where `n^n` is out of reach.
pub fn transition_semigroup(dfa: &Dfa, cap: usize) -> Result<Semigroup> {
    if dfa.n() > SEMIGROUP_MAX_DEGREE {
        return Err(Error::Capacity {
            what: format!("transition semigroup of a {}-state DFA", dfa.n()),
            limit: SEMIGROUP_MAX_DEGREE,
        });
    }
    dfa.transition_semigroup(cap)
}

fn algebraic_from(n: usize, semigroup: &Semigroup, group: &PermGroup) -> AlgebraicVerdict {
    let set_transitive = group.is_set_transitive();
    let has_rank_n_minus_1 = n >= 2 && semigroup.contains_rank(n - 1);
    let maximal = match n {
        1 => true,
        2 => semigroup.len() == 4,
        _ => set_transitive && has_rank_n_minus_1,
    };
    AlgebraicVerdict {
        maximal,
        semigroup_size: semigroup.len(),
        group_order: group.order(),
        set_transitive,
        has_rank_n_minus_1,
    }
}

pub fn atoms_of(dfa: &Dfa) -> Result<AtomicPoset> {
    Ok(AtomicStructure::new(dfa)?.poset)
}

pub fn atomaton(dfa: &Dfa) -> Result<Nfa<StateSet>> {
    Ok(AtomicStructure::new(dfa)?.atomaton())
}

pub fn atom_complexity(dfa: &Dfa, s: StateSet) -> Result<u64> {
    AtomicStructure::new(dfa)?.atom_complexity(s)
}

pub fn is_maximally_atomic_semantic(dfa: &Dfa) -> Result<SemanticVerdict> {
    AtomicStructure::new(dfa)?.semantic_verdict()
}

/// `n = 1`: always. `n = 2`: the semigroup is all of `T_2`. Otherwise the
/// permutation subgroup is set-transitive and some element has rank `n - 1`.
pub fn is_maximally_atomic_algebraic(dfa: &Dfa, cap: usize) -> Result<AlgebraicVerdict> {
    if !dfa.is_minimal() {
        return Err(Error::invalid("the algebraic test applies to minimal DFAs"));
    }
    let semigroup = transition_semigroup(dfa, cap)?;
    let group = semigroup.permutation_subgroup()?;
    Ok(algebraic_from(dfa.n(), &semigroup, &group))
}

/// Membership in the five language classes, each computed on its own.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    #[serde(rename = "FTS")]
    pub fts: bool,
    #[serde(rename = "STS")]
    pub sts: bool,
    #[serde(rename = "MAL")]
    pub mal: bool,
    #[serde(rename = "MNA")]
    pub mna: bool,
    #[serde(rename = "MCR")]
    pub mcr: bool,
}

impl Classification {
    /// Broken links of the chain `FTS ⊆ STS = MAL ⊆ MNA = MCR`.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.fts && !self.sts {
            out.push("FTS without STS".to_string());
        }
        if self.sts != self.mal {
            out.push(format!("STS={} but MAL={}", self.sts, self.mal));
        }
        if self.mal && !self.mna {
            out.push("MAL without MNA".to_string());
        }
        if self.mna != self.mcr {
            out.push(format!("MNA={} but MCR={}", self.mna, self.mcr));
        }
        out
    }
}

/// Everything the deciders compute for one minimal DFA.
#[derive(Clone, Debug)]
pub struct Verdicts {
    pub semantic: SemanticVerdict,
    pub algebraic: AlgebraicVerdict,
    pub classes: Classification,
    pub reverse_complexity: usize,
}

impl Verdicts {
    pub fn deciders_agree(&self) -> bool {
        self.semantic.maximal == self.algebraic.maximal
    }
}

/// Runs both deciders and the class tests. Requires `n ≥ 2`.
pub fn classify(dfa: &Dfa, cap: usize) -> Result<Verdicts> {
    let n = dfa.n();
    if n < 2 {
        return Err(Error::invalid("classification needs at least two states"));
    }
    let structure = AtomicStructure::new(dfa)?;
    let semigroup = transition_semigroup(dfa, cap)?;
    let group = semigroup.permutation_subgroup()?;
    let algebraic = algebraic_from(n, &semigroup, &group);
    let semantic = structure.semantic_verdict()?;
    let reverse_complexity = dfa.reverse().determinize().dfa.minimize().n();
    let max_atoms = 1usize << n;
    let classes = Classification {
        fts: semigroup.is_full(),
        sts: algebraic.maximal,
        mal: semantic.maximal,
        mna: structure.poset().len() == max_atoms,
        mcr: reverse_complexity == max_atoms,
    };
    Ok(Verdicts {
        semantic,
        algebraic,
        classes,
        reverse_complexity,
    })
}
