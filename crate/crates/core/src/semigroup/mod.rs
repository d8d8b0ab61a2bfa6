//! Transformation semigroups and their permutation subgroups.

mod catalog;
mod group;

pub use catalog::{agl_1_5, pgammal_2_8, pgl_2_5, psl_2_8};
pub use group::{GroupTag, PermGroup};

use std::collections::{BTreeMap, HashSet, VecDeque};

use crate::combin::factorial;
use crate::error::{Error, Result};
use crate::transform::Transformation;

/// Default bound on the number of elements a closure may produce.
pub const DEFAULT_CAP: usize = 2_000_000;

/// A finite set of transformations closed under composition, together with
/// the generators it was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Semigroup {
    n: usize,
    elements: Vec<Transformation>,
    generators: Vec<Transformation>,
}

impl Semigroup {
    /// Worklist closure of `generators` under composition.
    ///
    /// The identity is present only when some product of generators equals it.
    pub fn closure(generators: &[Transformation], cap: usize) -> Result<Semigroup> {
        let first = generators
            .first()
            .ok_or_else(|| Error::invalid("closure needs at least one generator"))?;
        let n = first.degree();
        if let Some(bad) = generators.iter().find(|g| g.degree() != n) {
            return Err(Error::invalid(format!(
                "generator {bad} has degree {}, expected {n}",
                bad.degree()
            )));
        }
        if cap == 0 {
            return Err(Error::invalid("closure cap must be at least 1"));
        }
        let over = || Error::Capacity {
            what: "semigroup closure".to_string(),
            limit: cap,
        };

        let mut letters: Vec<Transformation> = generators.to_vec();
        letters.sort();
        letters.dedup();

        let mut seen: HashSet<Transformation> = HashSet::new();
        let mut queue = VecDeque::new();
        for g in &letters {
            if seen.insert(*g) {
                queue.push_back(*g);
            }
        }
        if seen.len() > cap {
            return Err(over());
        }
        // x = δ_w, so g ∘ x = δ_{wg}: every product of generators is reached.
        while let Some(x) = queue.pop_front() {
            for g in &letters {
                let y = g.after(&x);
                if seen.insert(y) {
                    if seen.len() > cap {
                        return Err(over());
                    }
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Transformation> = seen.into_iter().collect();
        elements.sort_unstable();
        Ok(Semigroup {
            n,
            elements,
            generators: generators.to_vec(),
        })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    /// Elements in canonical (sorted) order.
    pub fn elements(&self) -> &[Transformation] {
        &self.elements
    }

    pub fn generators(&self) -> &[Transformation] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, t: &Transformation) -> bool {
        self.elements.binary_search(t).is_ok()
    }

    /// Whether `|T| = n^n`.
    pub fn is_full(&self) -> bool {
        self.len() as u64 == (self.n as u64).pow(self.n as u32)
    }

    pub fn contains_rank(&self, r: usize) -> bool {
        self.elements.iter().any(|t| t.rank() == r)
    }

    /// Whether all `n(n-1)` unitary transformations are present.
    pub fn contains_all_unitary(&self) -> bool {
        let n = self.n;
        (1..=n).all(|i| {
            (1..=n)
                .filter(|&j| j != i)
                .all(|j| self.contains(&Transformation::unitary(n, i, j).expect("valid pair")))
        })
    }

    /// Whether all `n^n - n!` singular transformations are present.
    pub fn contains_all_singular(&self) -> bool {
        let singular = self.elements.iter().filter(|t| !t.is_permutation()).count() as u64;
        singular == (self.n as u64).pow(self.n as u32) - factorial(self.n)
    }

    /// Number of elements of each rank, for ranks that occur.
    pub fn rank_histogram(&self) -> BTreeMap<usize, usize> {
        let mut hist = BTreeMap::new();
        for t in &self.elements {
            *hist.entry(t.rank()).or_insert(0) += 1;
        }
        hist
    }

    /// The group of permutations in the semigroup; order 0 when there are none.
    pub fn permutation_subgroup(&self) -> Result<PermGroup> {
        let perms: Vec<Transformation> = self
            .elements
            .iter()
            .filter(|t| t.is_permutation())
            .copied()
            .collect();
        if perms.is_empty() {
            return Ok(PermGroup::empty(self.n));
        }
        PermGroup::from_elements(self.n, perms)
    }
}
