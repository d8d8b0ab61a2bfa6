#![allow(dead_code)]

use atomlab::census::random_permutation;
use atomlab::{PermGroup, Transformation};
use rand::seq::SliceRandom;
use rand::Rng;

/// A permutation moving only the points of a random subset.
pub fn partial_permutation<R: Rng>(rng: &mut R, n: usize) -> Transformation {
    let mut support: Vec<usize> = (1..=n).filter(|_| rng.gen_bool(0.6)).collect();
    let mut shuffled = support.clone();
    shuffled.shuffle(rng);
    let mut row: Vec<usize> = (1..=n).collect();
    for (from, to) in support.drain(..).zip(shuffled) {
        row[from - 1] = to;
    }
    Transformation::new(&row).unwrap()
}

/// Groups from one to three generators, mixing full-support and
/// partial-support permutations so that intransitive groups show up.
pub fn random_group<R: Rng>(rng: &mut R, n: usize) -> PermGroup {
    let count = rng.gen_range(1..=3);
    let gens: Vec<Transformation> = (0..count)
        .map(|_| {
            if rng.gen_bool(0.5) {
                random_permutation(rng, n)
            } else {
                partial_permutation(rng, n)
            }
        })
        .collect();
    PermGroup::generated_by(n, &gens).unwrap()
}

/// A transformation of rank exactly `n - 1`.
pub fn random_rank_n_minus_1<R: Rng>(rng: &mut R, n: usize) -> Transformation {
    let i = rng.gen_range(1..=n);
    let mut j = rng.gen_range(1..n);
    if j >= i {
        j += 1;
    }
    let p = random_permutation(rng, n);
    let q = random_permutation(rng, n);
    p.compose(&Transformation::unitary(n, i, j).unwrap())
        .unwrap()
        .compose(&q)
        .unwrap()
}

/// Every word over `sigma` letters of length at most `max_len`, shortest
/// first.
pub fn words(sigma: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for a in 0..sigma {
                let mut v: Vec<usize> = w.clone();
                v.push(a);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}
