use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::combin::{binomial, factorial};
use crate::error::{Error, Result};
use crate::transform::{StateSet, Transformation};

/// A group of permutations of `Q_n`.
///
/// The empty group (order 0) stands for "no permutations at all", which is
/// what a transition semigroup without permutations yields.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGroup {
    n: usize,
    elements: Vec<Transformation>,
    generators: Vec<Transformation>,
}

/// Set-transitive groups, identified up to conjugacy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum GroupTag {
    #[serde(rename = "SYMMETRIC")]
    Symmetric,
    #[serde(rename = "ALTERNATING")]
    Alternating,
    #[serde(rename = "AGL_1_5")]
    Agl15,
    #[serde(rename = "PGL_2_5")]
    Pgl25,
    #[serde(rename = "PSL_2_8")]
    Psl28,
    #[serde(rename = "PGammaL_2_8")]
    PGammaL28,
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupTag::Symmetric => "SYMMETRIC",
            GroupTag::Alternating => "ALTERNATING",
            GroupTag::Agl15 => "AGL_1_5",
            GroupTag::Pgl25 => "PGL_2_5",
            GroupTag::Psl28 => "PSL_2_8",
            GroupTag::PGammaL28 => "PGammaL_2_8",
        })
    }
}

/// Group generated by `gens`, as a hash set. `gens` must be permutations.
fn generate(n: usize, gens: &[Transformation]) -> HashSet<Transformation> {
    let id = Transformation::identity(n).expect("degree checked by caller");
    let mut seen = HashSet::from([id]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g.after(&x);
            if seen.insert(y) {
                queue.push_back(y);
            }
        }
    }
    seen
}

impl PermGroup {
    pub fn empty(n: usize) -> Self {
        PermGroup {
            n,
            elements: Vec::new(),
            generators: Vec::new(),
        }
    }

    pub fn trivial(n: usize) -> Result<Self> {
        Self::generated_by(n, &[])
    }

    /// The group generated by a list of permutations of degree `n`.
    pub fn generated_by(n: usize, gens: &[Transformation]) -> Result<Self> {
        Transformation::identity(n)?;
        for g in gens {
            if g.degree() != n {
                return Err(Error::invalid(format!(
                    "generator {g} does not have degree {n}"
                )));
            }
            if !g.is_permutation() {
                return Err(Error::invalid(format!(
                    "generator {g} is not a permutation"
                )));
            }
        }
        let mut elements: Vec<_> = generate(n, gens).into_iter().collect();
        elements.sort_unstable();
        Ok(PermGroup {
            n,
            elements,
            generators: gens.to_vec(),
        })
    }

    /// `S_n`, generated by `(1,2)` and the `n`-cycle.
    pub fn symmetric(n: usize) -> Result<Self> {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Transformation::transposition(n, 1, 2)?);
            gens.push(Transformation::cycle(n)?);
        }
        Self::generated_by(n, &gens)
    }

    /// `A_n`, generated by the 3-cycles `(1 2 k)`.
    pub fn alternating(n: usize) -> Result<Self> {
        let mut gens = Vec::new();
        for k in 3..=n {
            let mut row: Vec<usize> = (1..=n).collect();
            row[0] = 2;
            row[1] = k;
            row[k - 1] = 1;
            gens.push(Transformation::new(&row)?);
        }
        Self::generated_by(n, &gens)
    }

    /// Wraps a set of permutations already known to be closed under
    /// composition, verifying that it really is a group and extracting a
    /// small generating set for orbit computations.
    pub(crate) fn from_elements(n: usize, mut elements: Vec<Transformation>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        let id = Transformation::identity(n)?;
        if elements.binary_search(&id).is_err() {
            return Err(Error::Internal(
                "permutations of a closed semigroup do not contain the identity".into(),
            ));
        }
        let mut generators = Vec::new();
        let mut generated = HashSet::from([id]);
        for g in &elements {
            if !generated.contains(g) {
                generators.push(*g);
                generated = generate(n, &generators);
            }
        }
        if generated.len() != elements.len() {
            return Err(Error::Internal(format!(
                "permutation set of size {} generates a group of order {}",
                elements.len(),
                generated.len()
            )));
        }
        Ok(PermGroup {
            n,
            elements,
            generators,
        })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    /// `|G|`; zero for the empty group.
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Transformation] {
        &self.elements
    }

    pub fn generators(&self) -> &[Transformation] {
        &self.generators
    }

    pub fn contains(&self, p: &Transformation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    fn check_set(&self, s: StateSet) -> Result<()> {
        if s.degree() != self.n {
            return Err(Error::invalid(format!(
                "set {s} has degree {}, group has degree {}",
                s.degree(),
                self.n
            )));
        }
        Ok(())
    }

    /// `{g(S) : g ∈ G}` by breadth-first search over the generators.
    pub fn orbit(&self, s: StateSet) -> Result<BTreeSet<StateSet>> {
        if self.is_empty() {
            return Err(Error::invalid("orbit of the empty group is undefined"));
        }
        self.check_set(s)?;
        let mut orbit = BTreeSet::from([s]);
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for g in &self.generators {
                let y = g.image(x);
                if orbit.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        Ok(orbit)
    }

    /// `{g(S) : g ∈ G}` by applying every element.
    pub fn orbit_by_elements(&self, s: StateSet) -> Result<BTreeSet<StateSet>> {
        if self.is_empty() {
            return Err(Error::invalid("orbit of the empty group is undefined"));
        }
        self.check_set(s)?;
        Ok(self.elements.iter().map(|g| g.image(s)).collect())
    }

    fn check_k(&self, k: usize) -> Result<()> {
        if k > self.n {
            return Err(Error::invalid(format!(
                "subset size {k} exceeds degree {}",
                self.n
            )));
        }
        Ok(())
    }

    /// Whether `G` acts transitively on the `k`-subsets of `Q_n`.
    pub fn is_k_set_transitive(&self, k: usize) -> Result<bool> {
        self.check_k(k)?;
        if self.is_empty() {
            return Ok(false);
        }
        if k == 0 || k == self.n {
            return Ok(true);
        }
        let first = StateSet::from_bits(self.n, (1u32 << k) - 1)?;
        Ok(self.orbit(first)?.len() as u64 == binomial(self.n, k))
    }

    /// Set-transitivity, checking a single subset size: `k = 1` up to degree 3
    /// and `k = ⌊n/2⌋` from degree 4 on, where k-set-transitivity with
    /// `2 ≤ k ≤ n/2` propagates to every other size.
    pub fn is_set_transitive(&self) -> bool {
        let n = self.n;
        let k = if n <= 3 { 1.min(n) } else { n / 2 };
        if n == 1 {
            return !self.is_empty();
        }
        self.is_k_set_transitive(k).expect("k within range")
    }

    /// Set-transitivity checked for every `0 ≤ k ≤ n`.
    pub fn is_set_transitive_exhaustive(&self) -> bool {
        (0..=self.n).all(|k| self.is_k_set_transitive(k).expect("k within range"))
    }

    /// Number of orbits on the `k`-subsets. For the empty group no two
    /// subsets are identified.
    pub fn orbit_count(&self, k: usize) -> Result<usize> {
        self.check_k(k)?;
        if self.is_empty() {
            return Ok(binomial(self.n, k) as usize);
        }
        let mut visited = vec![false; 1 << self.n];
        let mut count = 0;
        for s in StateSet::of_size(self.n, k) {
            if visited[s.bits() as usize] {
                continue;
            }
            count += 1;
            for member in self.orbit(s)? {
                visited[member.bits() as usize] = true;
            }
        }
        Ok(count)
    }

    /// Identifies a set-transitive group from its degree and order.
    pub fn recognize(&self) -> Result<GroupTag> {
        if !self.is_set_transitive() {
            return Err(Error::invalid(format!(
                "group of degree {} and order {} is not set-transitive",
                self.n,
                self.order()
            )));
        }
        let order = self.order() as u64;
        let full = factorial(self.n);
        let tag = match (self.n, order) {
            (_, o) if o == full => GroupTag::Symmetric,
            (_, o) if 2 * o == full => GroupTag::Alternating,
            (5, 20) => GroupTag::Agl15,
            (6, 120) => GroupTag::Pgl25,
            (9, 504) => GroupTag::Psl28,
            (9, 1512) => GroupTag::PGammaL28,
            (n, o) => {
                return Err(Error::Internal(format!(
                    "set-transitive group of degree {n} and order {o} matches no known family"
                )))
            }
        };
        Ok(tag)
    }
}
