//! Census of minimal unknot presentations: positive band words of length
//! `n - 1` whose permutation is an `n`-cycle, grouped into conjugacy orbits.

use std::collections::HashSet;
use std::fmt::Write as _;

use rayon::prelude::*;

use super::{decide, SweepError, SweepPredicate, Verdict};
use crate::band::{closure_invariants, generators, BandGenerator, BandWord, ClosureInvariants};
use crate::word_graph::{conjugacy_orbit_members, GraphError, WordKey, DEFAULT_GRAPH_BUDGET};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRecord {
    /// Least member of the orbit by key.
    pub representative: BandWord,
    pub orbit_size: usize,
    pub orbit_exact: bool,
    pub verdict: Verdict,
    pub invariants: ClosureInvariants,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub strands: u32,
    pub predicate: String,
    /// Number of words enumerated before grouping into orbits.
    pub enumerated: usize,
    /// One record per orbit, sorted by representative key.
    pub records: Vec<CensusRecord>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusOptions {
    pub decide_budget: usize,
    pub orbit_budget: usize,
    /// Run the per-orbit decisions on the rayon pool.
    pub parallel: bool,
}

impl Default for CensusOptions {
    fn default() -> Self {
        Self {
            decide_budget: super::DEFAULT_DECIDE_BUDGET,
            orbit_budget: DEFAULT_GRAPH_BUDGET,
            parallel: true,
        }
    }
}

/// All positive words of length `n - 1` whose permutation is an `n`-cycle,
/// in key order.
///
/// `k = n - 1` transpositions multiply to an `n`-cycle exactly when, as edges
/// on the strands, they form a spanning tree; the enumeration only extends
/// prefixes whose bands join distinct components.
pub fn unknot_words(n: u32) -> Vec<BandWord> {
    let gens = generators(n);
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut component: Vec<u32> = (0..=n).collect();
    let mut prefix = Vec::with_capacity(n as usize - 1);
    extend_forest(n, &gens, &mut component, &mut prefix, &mut out);
    out
}

fn extend_forest(
    n: u32,
    gens: &[BandGenerator],
    component: &mut Vec<u32>,
    prefix: &mut Vec<BandGenerator>,
    out: &mut Vec<BandWord>,
) {
    if prefix.len() == n as usize - 1 {
        out.push(BandWord::from_letters_unchecked(n, prefix.clone()));
        return;
    }
    for &g in gens {
        let (a, b) = (component[g.t() as usize], component[g.s() as usize]);
        if a == b {
            continue;
        }
        let saved = component.clone();
        for c in component.iter_mut() {
            if *c == a {
                *c = b;
            }
        }
        prefix.push(g);
        extend_forest(n, gens, component, prefix, out);
        prefix.pop();
        *component = saved;
    }
}

pub fn census(n: u32, predicate: &SweepPredicate, budget: usize) -> Result<Census, SweepError> {
    census_with(
        n,
        predicate,
        CensusOptions {
            decide_budget: budget,
            ..CensusOptions::default()
        },
    )
}

pub fn census_with(
    n: u32,
    predicate: &SweepPredicate,
    options: CensusOptions,
) -> Result<Census, SweepError> {
    if n < 2 {
        return Err(SweepError::TooFewStrands(n));
    }
    if options.decide_budget == 0 || options.orbit_budget == 0 {
        return Err(SweepError::ZeroBudget);
    }
    let words = unknot_words(n);
    let mut assigned: HashSet<WordKey> = HashSet::with_capacity(words.len());
    let mut orbits = Vec::new();
    // Words arrive in key order, so the first unassigned word of an orbit
    // is its least member.
    for w in &words {
        if assigned.contains(&WordKey::of(w)) {
            continue;
        }
        let orbit = match conjugacy_orbit_members(w, options.orbit_budget) {
            Ok(o) => o,
            Err(GraphError::ZeroBudget) => return Err(SweepError::ZeroBudget),
            Err(e) => unreachable!("orbit search failed: {e}"),
        };
        assigned.extend(orbit.keys().iter().cloned());
        orbits.push((w.clone(), orbit.size(), orbit.is_exact()));
    }

    let run = |(rep, size, exact): &(BandWord, usize, bool)| {
        let verdict = decide(rep, predicate, options.decide_budget).expect("k = n - 1 >= 1");
        CensusRecord {
            invariants: closure_invariants(rep),
            representative: rep.clone(),
            orbit_size: *size,
            orbit_exact: *exact,
            verdict,
        }
    };
    let records = if options.parallel {
        orbits.par_iter().map(run).collect()
    } else {
        orbits.iter().map(run).collect()
    };
    Ok(Census {
        strands: n,
        predicate: predicate.name().to_string(),
        enumerated: words.len(),
        records,
    })
}

impl CensusRecord {
    /// Tab-separated line: representative, orbit size (suffixed `+` when the
    /// orbit search was cut off), verdict, components, Euler characteristic.
    pub fn to_line(&self) -> String {
        format!(
            "{}\t{}{}\t{}\t{}\t{}",
            self.representative,
            self.orbit_size,
            if self.orbit_exact { "" } else { "+" },
            self.verdict.kind().as_str(),
            self.invariants.components,
            self.invariants.euler
        )
    }
}

impl Census {
    pub fn header(&self) -> String {
        format!(
            "n={} k={} words={} orbits={} predicate={}",
            self.strands,
            self.strands - 1,
            self.enumerated,
            self.records.len(),
            self.predicate
        )
    }

    pub fn to_text(&self) -> String {
        let mut out = self.header();
        out.push('\n');
        for r in &self.records {
            writeln!(out, "{}", r.to_line()).unwrap();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::band::{is_unknot_presentation, parse_band_word};

    #[test]
    fn unknot_word_counts() {
        assert_eq!(unknot_words(2).len(), 1);
        assert_eq!(unknot_words(3).len(), 6);
        assert_eq!(unknot_words(4).len(), 96);
        assert_eq!(unknot_words(5).len(), 3000);
    }

    #[test]
    fn unknot_words_are_sorted_and_unknotted() {
        let words = unknot_words(4);
        for pair in words.windows(2) {
            assert!(WordKey::of(&pair[0]) < WordKey::of(&pair[1]));
        }
        assert!(words.iter().all(is_unknot_presentation));
    }

    #[test]
    fn n3_census() {
        let c = census(3, &SweepPredicate::any(), 1000).unwrap();
        assert_eq!(c.enumerated, 6);
        assert_eq!(c.records.len(), 1);
        let r = &c.records[0];
        assert_eq!(
            r.representative,
            parse_band_word("a(2,1) a(3,1)", 3).unwrap()
        );
        assert_eq!(r.orbit_size, 6);
        assert_eq!(
            c.to_text(),
            "n=3 k=2 words=6 orbits=1 predicate=any\na(2,1) a(3,1)\t6\tmutually-braided\t1\t1\n"
        );
    }

    #[test]
    fn rejects_small_n() {
        assert_eq!(
            census(1, &SweepPredicate::any(), 10),
            Err(SweepError::TooFewStrands(1))
        );
    }
}
