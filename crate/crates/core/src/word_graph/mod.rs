//! Finite graphs over positive band words of fixed length.
//!
//! Relation moves preserve length, so the equality class of a word (closure
//! under relation moves) and its conjugacy orbit (relation moves plus
//! cycling) are finite. Both are computed by breadth-first search with a
//! visited set keyed on [`WordKey`] and an explicit state budget; running out
//! of budget is always reported, never silently truncated.

mod handle;
mod key;

use std::collections::{HashSet, VecDeque};
use std::fmt::Write as _;

use thiserror::Error;

pub use handle::artin_equal;
pub use key::{canonical_key, WordKey};

use crate::band::{BandError, BandWord};
use crate::rewriting::{cycle, for_each_relation_move};

/// Default number of states a closure may visit.
pub const DEFAULT_GRAPH_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("search budget of {budget} states exhausted")]
    BudgetExhausted { budget: usize },
    #[error("budget must be at least 1")]
    ZeroBudget,
    #[error(transparent)]
    Band(#[from] BandError),
}

/// Which moves generate the graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MoveSet {
    /// Commutation and triple relations: equality in the band monoid.
    Relations,
    /// Relations plus cycling: conjugacy of closed braids.
    RelationsAndCycle,
}

/// Order in which a state's successors are queued. The closure does not
/// depend on it; it exists so that this can be tested.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExplorationOrder {
    #[default]
    Forward,
    Reverse,
}

/// Summary of an explored class or orbit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitReport {
    /// Member with the least key.
    pub representative: BandWord,
    pub members: usize,
    pub budget_exhausted: bool,
}

/// The members of an explored class or orbit, sorted by key.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    strands: u32,
    length: usize,
    members: Vec<WordKey>,
    budget_exhausted: bool,
}

impl Orbit {
    pub fn keys(&self) -> &[WordKey] {
        &self.members
    }

    pub fn words(&self) -> impl Iterator<Item = BandWord> + '_ {
        self.members.iter().map(WordKey::decode)
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn is_exact(&self) -> bool {
        !self.budget_exhausted
    }

    pub fn contains(&self, w: &BandWord) -> bool {
        self.members.binary_search(&WordKey::of(w)).is_ok()
    }

    pub fn representative(&self) -> BandWord {
        self.members[0].decode()
    }

    pub fn report(&self) -> OrbitReport {
        OrbitReport {
            representative: self.representative(),
            members: self.members.len(),
            budget_exhausted: self.budget_exhausted,
        }
    }

    /// Text dump: a header `n=<n> k=<k> size=<m> exact=<bool>` followed by
    /// one member per line in key order.
    pub fn dump(&self) -> String {
        let mut out = format!(
            "n={} k={} size={} exact={}\n",
            self.strands,
            self.length,
            self.members.len(),
            self.is_exact()
        );
        for w in self.words() {
            writeln!(out, "{w}").unwrap();
        }
        out
    }
}

fn successors(w: &BandWord, moves: MoveSet, order: ExplorationOrder) -> Vec<BandWord> {
    let mut out = Vec::new();
    for_each_relation_move(w.letters(), |_, position, (a, b)| {
        let mut letters = w.letters().to_vec();
        letters[position] = a;
        letters[position + 1] = b;
        out.push(BandWord::from_letters_unchecked(w.strands(), letters));
    });
    if moves == MoveSet::RelationsAndCycle && !w.is_empty() {
        out.push(cycle(w).expect("non-empty"));
    }
    if order == ExplorationOrder::Reverse {
        out.reverse();
    }
    out
}

// Breadth-first closure; stops early when `stop` returns true for a newly
// reached word. Returns the visited keys and whether the budget ran out.
fn bfs(
    start: &BandWord,
    moves: MoveSet,
    budget: usize,
    order: ExplorationOrder,
    mut stop: impl FnMut(&WordKey) -> bool,
) -> Result<(HashSet<WordKey>, bool, bool), GraphError> {
    if budget == 0 {
        return Err(GraphError::ZeroBudget);
    }
    let mut visited = HashSet::new();
    let start_key = WordKey::of(start);
    let found = stop(&start_key);
    visited.insert(start_key);
    if found {
        return Ok((visited, false, true));
    }
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(w) = queue.pop_front() {
        for next in successors(&w, moves, order) {
            let key = WordKey::of(&next);
            if visited.contains(&key) {
                continue;
            }
            if visited.len() == budget {
                return Ok((visited, true, false));
            }
            let found = stop(&key);
            visited.insert(key);
            if found {
                return Ok((visited, false, true));
            }
            queue.push_back(next);
        }
    }
    Ok((visited, false, false))
}

/// Closure of `{w}` under `moves`, with an explicit successor order.
pub fn closure_with_order(
    w: &BandWord,
    moves: MoveSet,
    budget: usize,
    order: ExplorationOrder,
) -> Result<Orbit, GraphError> {
    let (visited, exhausted, _) = bfs(w, moves, budget, order, |_| false)?;
    let mut members: Vec<WordKey> = visited.into_iter().collect();
    members.sort_unstable();
    Ok(Orbit {
        strands: w.strands(),
        length: w.len(),
        members,
        budget_exhausted: exhausted,
    })
}

/// All words equal to `w` in the band monoid (within `budget` states).
pub fn equality_class_members(w: &BandWord, budget: usize) -> Result<Orbit, GraphError> {
    closure_with_order(w, MoveSet::Relations, budget, ExplorationOrder::Forward)
}

pub fn equality_class(w: &BandWord, budget: usize) -> Result<OrbitReport, GraphError> {
    equality_class_members(w, budget).map(|o| o.report())
}

/// All words reachable from `w` by relation moves and cycling.
pub fn conjugacy_orbit_members(w: &BandWord, budget: usize) -> Result<Orbit, GraphError> {
    closure_with_order(
        w,
        MoveSet::RelationsAndCycle,
        budget,
        ExplorationOrder::Forward,
    )
}

pub fn conjugacy_orbit(w: &BandWord, budget: usize) -> Result<OrbitReport, GraphError> {
    conjugacy_orbit_members(w, budget).map(|o| o.report())
}

fn connected(
    u: &BandWord,
    v: &BandWord,
    moves: MoveSet,
    budget: usize,
) -> Result<bool, GraphError> {
    if u.strands() != v.strands() {
        return Err(BandError::StrandMismatch {
            left: u.strands(),
            right: v.strands(),
        }
        .into());
    }
    if u.len() != v.len() {
        return Ok(false);
    }
    let target = WordKey::of(v);
    let (_, exhausted, found) = bfs(u, moves, budget, ExplorationOrder::Forward, |k| {
        *k == target
    })?;
    match (found, exhausted) {
        (true, _) => Ok(true),
        (false, true) => Err(GraphError::BudgetExhausted { budget }),
        (false, false) => Ok(false),
    }
}

/// Equality of positive words in the band monoid. Words of different
/// lengths are never equal.
pub fn monoid_equal(u: &BandWord, v: &BandWord, budget: usize) -> Result<bool, GraphError> {
    connected(u, v, MoveSet::Relations, budget)
}

/// Whether `v` lies in the conjugacy orbit of `u`.
pub fn orbit_contains(u: &BandWord, v: &BandWord, budget: usize) -> Result<bool, GraphError> {
    connected(u, v, MoveSet::RelationsAndCycle, budget)
}

/// Least key over the conjugacy orbit of a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinKey {
    pub key: WordKey,
    /// False when the orbit was cut off by the budget.
    pub exact: bool,
}

pub fn min_orbit_key(w: &BandWord, budget: usize) -> Result<MinKey, GraphError> {
    let orbit = conjugacy_orbit_members(w, budget)?;
    Ok(MinKey {
        key: orbit.members[0].clone(),
        exact: orbit.is_exact(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::band::parse_band_word;

    fn w(n: u32, text: &str) -> BandWord {
        parse_band_word(text, n).unwrap()
    }

    fn strings(o: &Orbit) -> Vec<String> {
        o.words().map(|x| x.to_string()).collect()
    }

    #[test]
    fn equality_class_examples() {
        let c = equality_class_members(&w(3, "a(3,2) a(2,1)"), 100).unwrap();
        assert_eq!(
            strings(&c),
            ["a(2,1) a(3,1)", "a(3,1) a(3,2)", "a(3,2) a(2,1)"]
        );
        assert!(c.is_exact());
        assert_eq!(
            equality_class(&w(3, "a(2,1) a(3,2)"), 100).unwrap().members,
            1
        );
        let e = equality_class(&BandWord::empty(3), 1).unwrap();
        assert_eq!((e.members, e.budget_exhausted), (1, false));
    }

    #[test]
    fn budget_is_reported() {
        let r = equality_class(&w(3, "a(3,2) a(2,1)"), 2).unwrap();
        assert_eq!((r.members, r.budget_exhausted), (2, true));
        let r = equality_class(&w(3, "a(3,2) a(2,1)"), 3).unwrap();
        assert_eq!((r.members, r.budget_exhausted), (3, false));
        assert_eq!(
            equality_class(&w(3, "a(3,2)"), 0),
            Err(GraphError::ZeroBudget)
        );
        assert_eq!(
            monoid_equal(
                &w(4, "a(2,1) a(4,3) a(3,2)"),
                &w(4, "a(2,1) a(3,2) a(2,1)"),
                1
            ),
            Err(GraphError::BudgetExhausted { budget: 1 })
        );
    }

    #[test]
    fn monoid_equal_examples() {
        let u = w(3, "a(3,2) a(2,1)");
        assert_eq!(monoid_equal(&u, &w(3, "a(3,1) a(3,2)"), 100), Ok(true));
        assert_eq!(monoid_equal(&u, &w(3, "a(2,1) a(3,2)"), 100), Ok(false));
        assert_eq!(monoid_equal(&u, &u, 1), Ok(true));
        assert_eq!(monoid_equal(&u, &w(3, "a(3,2)"), 1), Ok(false));
        assert!(matches!(
            monoid_equal(&u, &w(4, "a(3,2) a(2,1)"), 10),
            Err(GraphError::Band(BandError::StrandMismatch { .. }))
        ));
    }

    #[test]
    fn conjugacy_orbit_examples() {
        let o = conjugacy_orbit_members(&w(3, "a(3,2) a(2,1)"), 100).unwrap();
        assert_eq!(o.size(), 6);
        assert_eq!(o.representative(), w(3, "a(2,1) a(3,1)"));
        assert_eq!(
            conjugacy_orbit(&w(3, "a(2,1) a(2,1)"), 100)
                .unwrap()
                .members,
            1
        );
        assert_eq!(conjugacy_orbit(&w(2, "a(2,1)"), 100).unwrap().members, 1);
        assert_eq!(
            orbit_contains(&w(3, "a(3,2) a(2,1)"), &w(3, "a(2,1) a(3,2)"), 100),
            Ok(true)
        );
        assert_eq!(
            orbit_contains(&w(3, "a(3,2) a(2,1)"), &w(3, "a(2,1) a(2,1)"), 100),
            Ok(false)
        );
    }

    #[test]
    fn min_orbit_key_example() {
        let m = min_orbit_key(&w(3, "a(3,1) a(3,2)"), 100).unwrap();
        assert_eq!(m.key.ordinals(), [0, 1]);
        assert!(m.exact);
    }

    #[test]
    fn orbit_dump_format() {
        let o = conjugacy_orbit_members(&w(3, "a(3,2) a(2,1)"), 100).unwrap();
        let dump = o.dump();
        let mut lines = dump.lines();
        assert_eq!(lines.next(), Some("n=3 k=2 size=6 exact=true"));
        assert_eq!(lines.next(), Some("a(2,1) a(3,1)"));
        assert_eq!(dump.lines().count(), 7);
    }

    #[test]
    fn exploration_order_does_not_matter() {
        for text in ["a(3,2) a(2,1) a(4,3)", "a(4,1) a(3,2) a(2,1) a(4,3)"] {
            let word = w(4, text);
            for moves in [MoveSet::Relations, MoveSet::RelationsAndCycle] {
                let a =
                    closure_with_order(&word, moves, 10_000, ExplorationOrder::Forward).unwrap();
                let b =
                    closure_with_order(&word, moves, 10_000, ExplorationOrder::Reverse).unwrap();
                assert_eq!(a, b);
            }
        }
    }
}
