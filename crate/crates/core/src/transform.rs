//! Transformations of `Q_n = {1..n}` and subsets of `Q_n`.
//!
//! Labels are 1-based at every public boundary; internally both types store
//! 0-based positions.

use std::cmp::Ordering;
use std::fmt;

use serde::ser::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported degree.
pub const MAX_DEGREE: usize = 16;

fn check_degree(n: usize) -> Result<()> {
    if n == 0 || n > MAX_DEGREE {
        return Err(Error::invalid(format!(
            "degree {n} outside supported range 1..={MAX_DEGREE}"
        )));
    }
    Ok(())
}

/// A subset of `Q_n`, stored as a bit word (bit `i-1` set iff `i` is a member).
///
/// Sets are ordered by size first and then lexicographically by their sorted
/// members, so `∅ < {1} < {3} < {1,2} < {2,3}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct StateSet {
    n: u8,
    bits: u32,
}

impl StateSet {
    pub fn empty(n: usize) -> Self {
        debug_assert!(n <= MAX_DEGREE);
        StateSet {
            n: n as u8,
            bits: 0,
        }
    }

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_DEGREE);
        StateSet {
            n: n as u8,
            bits: Self::mask(n),
        }
    }

    fn mask(n: usize) -> u32 {
        if n == 32 {
            u32::MAX
        } else {
            (1u32 << n) - 1
        }
    }

    /// Builds a set from 1-based labels.
    pub fn from_states<I: IntoIterator<Item = usize>>(n: usize, states: I) -> Result<Self> {
        check_degree(n)?;
        let mut bits = 0u32;
        for s in states {
            if s == 0 || s > n {
                return Err(Error::invalid(format!("state {s} not in 1..={n}")));
            }
            bits |= 1 << (s - 1);
        }
        Ok(StateSet { n: n as u8, bits })
    }

    /// Builds a set from its raw bit word.
    pub fn from_bits(n: usize, bits: u32) -> Result<Self> {
        check_degree(n)?;
        if bits & !Self::mask(n) != 0 {
            return Err(Error::invalid(format!(
                "bit word {bits:#b} exceeds degree {n}"
            )));
        }
        Ok(StateSet { n: n as u8, bits })
    }

    #[inline]
    pub(crate) fn raw(n: usize, bits: u32) -> Self {
        StateSet { n: n as u8, bits }
    }

    /// Parses a comma- or space-separated list of labels. `∅`, `{}` and the
    /// empty string denote the empty set.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let body = text
            .trim()
            .trim_start_matches('{')
            .trim_end_matches('}')
            .trim();
        if body.is_empty() || body == "∅" {
            return Self::from_states(n, std::iter::empty());
        }
        let labels = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<usize>()
                    .map_err(|_| Error::invalid(format!("`{s}` is not a state label")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_states(n, labels)
    }

    #[inline]
    pub fn bits(&self) -> u32 {
        self.bits
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    /// Membership test for a 1-based label.
    #[inline]
    pub fn contains(&self, state: usize) -> bool {
        state >= 1 && state <= self.degree() && self.bits & (1 << (state - 1)) != 0
    }

    pub fn with(self, state: usize) -> Self {
        debug_assert!(state >= 1 && state <= self.degree());
        StateSet {
            bits: self.bits | 1 << (state - 1),
            ..self
        }
    }

    pub fn without(self, state: usize) -> Self {
        debug_assert!(state >= 1 && state <= self.degree());
        StateSet {
            bits: self.bits & !(1 << (state - 1)),
            ..self
        }
    }

    #[inline]
    pub fn complement(self) -> Self {
        StateSet {
            bits: !self.bits & Self::mask(self.degree()),
            ..self
        }
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        StateSet {
            bits: self.bits | other.bits,
            ..self
        }
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        StateSet {
            bits: self.bits & other.bits,
            ..self
        }
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        StateSet {
            bits: self.bits & !other.bits,
            ..self
        }
    }

    #[inline]
    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits & !other.bits == 0
    }

    /// Members in increasing order, 1-based.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let bits = self.bits;
        (0..self.degree())
            .filter(move |i| bits & (1 << i) != 0)
            .map(|i| i + 1)
    }

    /// Every subset of `Q_n`, in bit-word order.
    pub fn all(n: usize) -> impl Iterator<Item = StateSet> {
        (0..1u32 << n).map(move |bits| StateSet::raw(n, bits))
    }

    /// Every `k`-subset of `Q_n`, in bit-word order.
    pub fn of_size(n: usize, k: usize) -> impl Iterator<Item = StateSet> {
        Self::all(n).filter(move |s| s.len() == k)
    }

    /// All sets `X` with `lower ⊆ X ⊆ upper`; empty when `lower ⊄ upper`.
    pub fn between(lower: Self, upper: Self) -> impl Iterator<Item = StateSet> {
        let n = lower.degree();
        let valid = lower.is_subset(&upper);
        let free = upper.bits & !lower.bits;
        // Standard submask walk over `free`, starting from `free` itself.
        let mut next = if valid { Some(free) } else { None };
        std::iter::from_fn(move || {
            let sub = next?;
            next = if sub == 0 {
                None
            } else {
                Some((sub - 1) & free)
            };
            Some(StateSet::raw(n, lower.bits | sub))
        })
    }
}

impl Ord for StateSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then(self.len().cmp(&other.len()))
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for StateSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("∅");
        }
        f.write_str("{")?;
        for (k, s) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A total map `t: Q_n → Q_n`.
///
/// Ordering is lexicographic on the image row, so sorted collections of
/// transformations of one degree are canonical.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transformation {
    n: u8,
    map: [u8; MAX_DEGREE],
}

impl Transformation {
    /// Builds a transformation from its image row `[t(1), ..., t(n)]`.
    pub fn new(images: &[usize]) -> Result<Self> {
        let n = images.len();
        check_degree(n)?;
        let mut map = [0u8; MAX_DEGREE];
        for (i, &img) in images.iter().enumerate() {
            if img == 0 || img > n {
                return Err(Error::invalid(format!(
                    "image {img} of state {} not in 1..={n}",
                    i + 1
                )));
            }
            map[i] = (img - 1) as u8;
        }
        Ok(Transformation { n: n as u8, map })
    }

    pub fn identity(n: usize) -> Result<Self> {
        check_degree(n)?;
        let mut map = [0u8; MAX_DEGREE];
        for (i, m) in map.iter_mut().enumerate().take(n) {
            *m = i as u8;
        }
        Ok(Transformation { n: n as u8, map })
    }

    /// The unitary transformation `(i → j)`.
    pub fn unitary(n: usize, i: usize, j: usize) -> Result<Self> {
        Self::check_pair(n, i, j)?;
        let mut t = Self::identity(n)?;
        t.map[i - 1] = (j - 1) as u8;
        Ok(t)
    }

    /// The transposition `(i, j)`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        Self::check_pair(n, i, j)?;
        let mut t = Self::identity(n)?;
        t.map.swap(i - 1, j - 1);
        Ok(t)
    }

    /// The cycle `k ↦ k+1`, `n ↦ 1`.
    pub fn cycle(n: usize) -> Result<Self> {
        check_degree(n)?;
        let mut map = [0u8; MAX_DEGREE];
        for (i, m) in map.iter_mut().enumerate().take(n) {
            *m = ((i + 1) % n) as u8;
        }
        Ok(Transformation { n: n as u8, map })
    }

    fn check_pair(n: usize, i: usize, j: usize) -> Result<()> {
        check_degree(n)?;
        if i == j {
            return Err(Error::invalid(format!("states must differ, got {i} twice")));
        }
        if i == 0 || j == 0 || i > n || j > n {
            return Err(Error::invalid(format!("states ({i},{j}) not in 1..={n}")));
        }
        Ok(())
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.n as usize
    }

    /// `t(i)` for a 1-based label.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.map[i - 1] as usize + 1
    }

    /// The image row `[t(1), ..., t(n)]`.
    pub fn images(&self) -> Vec<usize> {
        self.slice().iter().map(|&x| x as usize + 1).collect()
    }

    #[inline]
    pub(crate) fn slice(&self) -> &[u8] {
        &self.map[..self.degree()]
    }

    /// `s ∘ t`, i.e. `i ↦ s(t(i))`.
    pub fn compose(&self, t: &Transformation) -> Result<Transformation> {
        if self.n != t.n {
            return Err(Error::invalid(format!(
                "cannot compose degree {} with degree {}",
                self.n, t.n
            )));
        }
        Ok(self.after(t))
    }

    /// Unchecked `self ∘ t`.
    #[inline]
    pub(crate) fn after(&self, t: &Transformation) -> Transformation {
        let mut map = [0u8; MAX_DEGREE];
        for (m, &x) in map.iter_mut().zip(t.slice()) {
            *m = self.map[x as usize];
        }
        Transformation { n: self.n, map }
    }

    pub fn rank(&self) -> usize {
        let mut seen = 0u32;
        for &x in self.slice() {
            seen |= 1 << x;
        }
        seen.count_ones() as usize
    }

    #[inline]
    pub fn is_permutation(&self) -> bool {
        self.rank() == self.degree()
    }

    #[inline]
    pub fn is_identity(&self) -> bool {
        self.slice()
            .iter()
            .enumerate()
            .all(|(i, &x)| i == x as usize)
    }

    /// `t(S)`.
    #[inline]
    pub fn image(&self, s: StateSet) -> StateSet {
        let mut bits = 0u32;
        let mut rest = s.bits();
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            bits |= 1 << self.map[i];
            rest &= rest - 1;
        }
        StateSet::raw(self.degree(), bits)
    }

    /// `t⁻¹(S) = {j : t(j) ∈ S}`.
    #[inline]
    pub fn preimage(&self, s: StateSet) -> StateSet {
        let target = s.bits();
        let mut bits = 0u32;
        for (j, &x) in self.slice().iter().enumerate() {
            if target & (1 << x) != 0 {
                bits |= 1 << j;
            }
        }
        StateSet::raw(self.degree(), bits)
    }

    /// `im t`.
    pub fn image_set(&self) -> StateSet {
        self.image(StateSet::full(self.degree()))
    }

    /// `coim t = Q_n \ im t`.
    pub fn coimage(&self) -> StateSet {
        self.image_set().complement()
    }

    /// `Δ_t(S) = Q_n \ t(Q_n \ S)`.
    #[inline]
    pub fn co_image(&self, s: StateSet) -> StateSet {
        self.image(s.complement()).complement()
    }

    pub fn inverse(&self) -> Option<Transformation> {
        if !self.is_permutation() {
            return None;
        }
        let mut map = [0u8; MAX_DEGREE];
        for (i, &x) in self.slice().iter().enumerate() {
            map[x as usize] = i as u8;
        }
        Some(Transformation { n: self.n, map })
    }

    /// Parity of a permutation; `None` for singular transformations.
    pub fn is_even(&self) -> Option<bool> {
        let cycles = self.cycles()?;
        let transpositions: usize = cycles.iter().map(|c| c.len() - 1).sum();
        Some(transpositions.is_multiple_of(2))
    }

    /// Non-trivial cycles of a permutation, each starting at its smallest label.
    pub fn cycles(&self) -> Option<Vec<Vec<usize>>> {
        if !self.is_permutation() {
            return None;
        }
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.map[i] as usize;
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        Some(out)
    }

    /// Cycle notation such as `(1 2 3)(4 5)`; `()` for the identity. Falls
    /// back to the image row for singular transformations.
    pub fn cycle_notation(&self) -> String {
        match self.cycles() {
            None => self.to_string(),
            Some(cycles) if cycles.is_empty() => "()".to_string(),
            Some(cycles) => cycles
                .iter()
                .map(|c| {
                    let inner: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                    format!("({})", inner.join(" "))
                })
                .collect(),
        }
    }
}

impl fmt::Display for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, x) in self.slice().iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", x + 1)?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Serialized as its display form, e.g. `"{1,2}"`.
impl Serialize for StateSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Serialized as the 1-based image row.
impl Serialize for Transformation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.images())
    }
}
