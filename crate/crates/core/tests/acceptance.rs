//! One line per acceptance criterion; exits non-zero if any fails.

mod common;

use std::cell::Cell;
use std::time::{Duration, Instant};

use atomlab::atoms::{classify, AtomicStructure};
use atomlab::census::{self, CensusReport};
use atomlab::ingest::{regex_to_dfa, witness};
use atomlab::report::atomaton_rows;
use atomlab::semigroup::{agl_1_5, pgammal_2_8, pgl_2_5, psl_2_8};
use atomlab::{Dfa, GroupTag, PermGroup, Semigroup, StateSet, Transformation, DEFAULT_CAP};
use common::{random_group, random_rank_n_minus_1};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

/// Running tally of atom-count versus reverse-complexity checks.
#[derive(Default)]
struct ReverseTally {
    checked: Cell<u64>,
    failed: Cell<u64>,
}

impl ReverseTally {
    fn check(&self, dfa: &Dfa) -> std::result::Result<(), String> {
        let atoms = AtomicStructure::new(dfa)
            .map_err(|e| e.to_string())?
            .poset()
            .len();
        let reverse = dfa.reverse().determinize().dfa.minimize().n();
        self.checked.set(self.checked.get() + 1);
        if atoms != reverse {
            self.failed.set(self.failed.get() + 1);
        }
        Ok(())
    }

    fn absorb(&self, report: &CensusReport) {
        self.checked
            .set(self.checked.get() + report.minimal_up_to_isomorphism);
        self.failed
            .set(self.failed.get() + report.atom_count_mismatches);
    }
}

fn set(n: usize, text: &str) -> StateSet {
    StateSet::parse(n, text).unwrap()
}

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// The atom bound evaluated from its double sum.
fn bound(n: u64, k: u64) -> u64 {
    if k == 0 || k == n {
        return (1 << n) - 1;
    }
    1 + (1..=k)
        .flat_map(|v| (k..n).map(move |u| binom(n, u) * binom(u, v)))
        .sum::<u64>()
}

fn example_one(tally: &ReverseTally) -> Outcome {
    let dfa = regex_to_dfa("a|aa").map_err(|e| e.to_string())?;
    tally.check(&dfa)?;
    let expected = Dfa::new(vec!["a".into()], vec![vec![2, 3, 4, 4]], 1, &[2, 3]).unwrap();
    ensure!(
        dfa.isomorphic(&expected).unwrap(),
        "a|aa does not give the 4-state DFA"
    );
    let s = AtomicStructure::new(&expected).unwrap();
    let atoms = s.poset().atoms().to_vec();
    let want = vec![set(4, "∅"), set(4, "1"), set(4, "1,2"), set(4, "2,3")];
    ensure!(atoms == want, "atoms {atoms:?}");
    let expected = [
        ["←", "{2,3}", ""],
        ["→", "{1,2}", "{{2,3}}"],
        ["→", "{1}", "{{1,2}}"],
        ["", "∅", "{∅,{1}}"],
    ];
    let rows = atomaton_rows(&s);
    ensure!(rows.len() == expected.len(), "{} rows", rows.len());
    for (row, want) in rows.iter().zip(expected) {
        ensure!(
            *row == want.map(String::from).to_vec(),
            "row {row:?} != {want:?}"
        );
    }
    Ok("atoms ∅ {1} {1,2} {2,3}; átomaton table matches in all 12 cells".into())
}

fn interval_update(tally: &ReverseTally) -> Outcome {
    let dfa = regex_to_dfa("a|aa").map_err(|e| e.to_string())?;
    tally.check(&dfa)?;
    let s = AtomicStructure::new(&dfa).unwrap();
    let image = s.eta_on_interval(set(4, "∅"), set(4, "1,2"), &[0]).unwrap();
    ensure!(
        (image.lower, image.upper) == (set(4, "∅"), set(4, "1,2,3")),
        "bounds [[{}, {}]]",
        image.lower,
        image.upper
    );
    let want = vec![set(4, "∅"), set(4, "1"), set(4, "1,2"), set(4, "2,3")];
    ensure!(image.members == want, "members {:?}", image.members);
    Ok("η_a([[∅,{1,2}]]) = [[∅,{1,2,3}]] = {∅,{1},{1,2},{2,3}}".into())
}

fn bound_attainment(tally: &ReverseTally) -> Outcome {
    let rows = [(3, vec![7, 10, 10, 7]), (4, vec![15, 29, 43, 29, 15])];
    for (n, row) in rows {
        let computed: Vec<u64> = (0..=n).map(|k| bound(n, k)).collect();
        ensure!(computed == row, "double sum for n={n} gives {computed:?}");
        let dfa = witness(n as usize).map_err(|e| e.to_string())?;
        tally.check(&dfa)?;
        let v = classify(&dfa, DEFAULT_CAP).map_err(|e| e.to_string())?;
        ensure!(
            v.semantic.maximal && v.algebraic.maximal,
            "witness({n}) not maximally atomic"
        );
        ensure!(
            v.semantic.rows.len() == 1 << n,
            "witness({n}) has {} atoms",
            v.semantic.rows.len()
        );
        for r in &v.semantic.rows {
            ensure!(
                r.achieved == row[r.atom.len()],
                "witness({n}) atom {} has complexity {}",
                r.atom,
                r.achieved
            );
        }
    }
    Ok("witness(3) meets 7 10 10 7, witness(4) meets 15 29 43 29 15 on every atom".into())
}

struct Censuses {
    reports: Vec<CensusReport>,
}

fn run_censuses() -> Result<Censuses, String> {
    let reports = vec![
        census::exhaustive(3, 2, DEFAULT_CAP).map_err(|e| e.to_string())?,
        census::random(4, 3, 500, 2024, DEFAULT_CAP).map_err(|e| e.to_string())?,
        census::random(5, 3, 200, 2025, DEFAULT_CAP).map_err(|e| e.to_string())?,
    ];
    Ok(Censuses { reports })
}

fn decider_equivalence(c: &Censuses) -> Outcome {
    let mut parts = Vec::new();
    for r in &c.reports {
        ensure!(
            r.disagreements == 0,
            "{} disagreements at n={}",
            r.disagreements,
            r.n
        );
        parts.push(format!("n={} {}: {} DFAs", r.n, r.mode, r.minimal));
    }
    let exhaustive = &c.reports[0];
    ensure!(
        exhaustive.raw.mal == exhaustive.raw.sts,
        "MAL and STS counts differ"
    );
    Ok(format!("0 disagreements ({})", parts.join(", ")))
}

fn all_unitary_atoms(tally: &ReverseTally) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in 3..=6 {
        let mut unitary = Vec::new();
        for i in 1..=n {
            for j in (1..=n).filter(|&j| j != i) {
                unitary.push(Transformation::unitary(n, i, j).unwrap());
            }
        }
        for _ in 0..100 {
            let mut letters = unitary.clone();
            for _ in 0..rng.gen_range(0..3) {
                letters.push(census::random_letter(&mut rng, n));
            }
            let alphabet = (0..letters.len()).map(|i| format!("x{i}")).collect();
            let finals = StateSet::from_bits(n, rng.gen_range(1..(1u32 << n) - 1)).unwrap();
            let dfa = Dfa::from_transformations(alphabet, &letters, 1, finals).unwrap();
            ensure!(dfa.is_minimal(), "generated DFA is not minimal");
            let atoms = AtomicStructure::new(&dfa).unwrap().poset().len();
            ensure!(atoms == 1 << n, "{atoms} atoms at n={n}");
            tally.check(&dfa)?;
        }
    }
    Ok("400 DFAs with all unitary letters, each with 2^n atoms".into())
}

fn alternating_witness() -> Result<Dfa, String> {
    let letters = [
        Transformation::new(&[2, 3, 1, 4]).unwrap(),
        Transformation::new(&[1, 3, 4, 2]).unwrap(),
        Transformation::unitary(4, 1, 2).unwrap(),
    ];
    let dfa = Dfa::from_transformations(
        vec!["a".into(), "b".into(), "c".into()],
        &letters,
        1,
        StateSet::parse(4, "4").unwrap(),
    )
    .map_err(|e| e.to_string())?;
    ensure!(dfa.is_minimal(), "A_4 witness is not minimal");
    Ok(dfa)
}

fn class_chain(c: &Censuses, tally: &ReverseTally) -> Outcome {
    for r in &c.reports {
        ensure!(
            r.chain_violations == 0,
            "{} chain violations at n={}",
            r.chain_violations,
            r.n
        );
    }
    let dfa = alternating_witness()?;
    tally.check(&dfa)?;
    let v = classify(&dfa, DEFAULT_CAP).map_err(|e| e.to_string())?;
    let group = dfa
        .transition_semigroup(DEFAULT_CAP)
        .unwrap()
        .permutation_subgroup()
        .unwrap();
    ensure!(
        group.recognize() == Ok(GroupTag::Alternating),
        "A_4 witness has group of order {}",
        group.order()
    );
    ensure!(
        v.classes.sts && v.classes.mal && !v.classes.fts,
        "A_4 witness: {:?}",
        v.classes
    );
    let strict = c
        .reports
        .iter()
        .find_map(|r| r.examples.mna_not_mal.clone());
    let Some(mna) = strict else {
        return Err("no census instance has 2^n atoms without maximal atomicity".into());
    };
    let m = classify(&mna, DEFAULT_CAP).map_err(|e| e.to_string())?;
    ensure!(
        m.classes.mna && m.classes.mcr && !m.classes.mal,
        "MNA example: {:?}",
        m.classes
    );
    let short = m
        .semantic
        .rows
        .iter()
        .find(|r| r.achieved < r.target)
        .unwrap();
    Ok(format!(
        "0 violations; A_4 witness in STS∖FTS; census DFA with {} states in MNA∖MAL (atom {} reaches {} of {})",
        mna.n(),
        short.atom,
        short.achieved,
        short.target
    ))
}

fn group_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut transitive_seen = 0;
    for n in 4..=7 {
        for _ in 0..100 {
            let g = random_group(&mut rng, n);
            for k in 2..=n / 2 {
                let ok = |k| g.is_k_set_transitive(k).unwrap();
                if ok(k) {
                    transitive_seen += 1;
                    ensure!(
                        ok(n - k),
                        "degree {n}: {k}- but not {}-set-transitive",
                        n - k
                    );
                    for l in (0..=k).chain(n - k..=n) {
                        ensure!(ok(l), "degree {n}: {k}- but not {l}-set-transitive");
                    }
                }
                let (now, before) = (g.orbit_count(k).unwrap(), g.orbit_count(k - 1).unwrap());
                ensure!(
                    now >= before,
                    "degree {n}: {now} orbits on {k}-sets < {before}"
                );
            }
        }
    }
    let mut pairs = 0;
    for n in 3..=5 {
        let mut done = 0;
        while done < 50 {
            let g = random_group(&mut rng, n);
            if !g.is_k_set_transitive(2).unwrap() {
                continue;
            }
            let mut gens = g.generators().to_vec();
            gens.push(random_rank_n_minus_1(&mut rng, n));
            let t = Semigroup::closure(&gens, DEFAULT_CAP).map_err(|e| e.to_string())?;
            ensure!(
                t.contains_all_singular(),
                "degree {n}: singular maps missing"
            );
            done += 1;
            pairs += 1;
        }
    }
    Ok(format!(
        "400 random groups ({transitive_seen} set-transitive cases), {pairs} (G,t) pairs generate all singular maps"
    ))
}

fn recognition() -> Outcome {
    let cases: [(usize, Vec<Transformation>, usize, GroupTag); 4] = [
        (5, agl_1_5(), 20, GroupTag::Agl15),
        (6, pgl_2_5(), 120, GroupTag::Pgl25),
        (9, psl_2_8(), 504, GroupTag::Psl28),
        (9, pgammal_2_8(), 1512, GroupTag::PGammaL28),
    ];
    for (n, gens, order, tag) in cases {
        let closure = Semigroup::closure(&gens, DEFAULT_CAP).map_err(|e| e.to_string())?;
        ensure!(
            closure.len() == order,
            "{tag}: closure has {} elements",
            closure.len()
        );
        let g = PermGroup::generated_by(n, &gens).unwrap();
        ensure!(g.is_set_transitive_exhaustive(), "{tag} not set-transitive");
        ensure!(
            g.recognize() == Ok(tag),
            "{tag} recognized as {:?}",
            g.recognize()
        );
    }
    for n in 3..=7 {
        let s = PermGroup::symmetric(n).unwrap();
        let a = PermGroup::alternating(n).unwrap();
        ensure!(s.recognize() == Ok(GroupTag::Symmetric), "S_{n}");
        ensure!(a.recognize() == Ok(GroupTag::Alternating), "A_{n}");
    }
    Ok(
        "AGL_1_5 (20), PGL_2_5 (120), PSL_2_8 (504), PGammaL_2_8 (1512), S_n and A_n for n=3..7"
            .into(),
    )
}

fn main() {
    let tally = ReverseTally::default();
    let mut failures = 0;
    let mut report = |id: u32, name: &str, limit: Duration, f: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let result = f();
        let elapsed = start.elapsed();
        let result = match result {
            Ok(msg) if elapsed > limit => Err(format!("{msg}; took {elapsed:?}, limit {limit:?}")),
            other => other,
        };
        match result {
            Ok(msg) => println!("PASS [{id}] {name}: {msg} ({} ms)", elapsed.as_millis()),
            Err(msg) => {
                failures += 1;
                println!("FAIL [{id}] {name}: {msg} ({} ms)", elapsed.as_millis());
            }
        }
    };
    let secs = Duration::from_secs;

    report(1, "atoms and átomaton of a|aa", secs(1), &mut || {
        example_one(&tally)
    });
    report(2, "interval update", secs(1), &mut || {
        interval_update(&tally)
    });
    report(3, "atom bound attainment", secs(10), &mut || {
        bound_attainment(&tally)
    });
    let mut censuses = None;
    report(4, "decider equivalence", secs(120), &mut || {
        let c = run_censuses()?;
        for r in &c.reports {
            tally.absorb(r);
        }
        let out = decider_equivalence(&c);
        censuses = Some(c);
        out
    });
    report(
        5,
        "all unitary letters give 2^n atoms",
        secs(60),
        &mut || all_unitary_atoms(&tally),
    );
    report(6, "class chain", secs(120), &mut || match &censuses {
        Some(c) => class_chain(c, &tally),
        None => Err("censuses unavailable".into()),
    });
    report(
        7,
        "group-theory properties",
        secs(120),
        &mut group_properties,
    );
    report(8, "group recognition", secs(60), &mut recognition);
    report(
        9,
        "atom count equals reverse complexity",
        secs(1),
        &mut || {
            let (checked, failed) = (tally.checked.get(), tally.failed.get());
            ensure!(failed == 0, "{failed} of {checked} DFAs differ");
            Ok(format!("{checked} DFAs checked, 0 exceptions"))
        },
    );

    if failures > 0 {
        println!("{failures} criteria failed");
        std::process::exit(1);
    }
}
