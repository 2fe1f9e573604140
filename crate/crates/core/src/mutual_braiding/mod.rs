//! Search for an admissible sweep: a closed sequence of relation moves
//! interleaved with exactly `k` admissible cyclings that returns a word of
//! length `k` to itself.
//!
//! States are pairs `(word, i)` where `i` counts the cyclings performed so
//! far. Relation moves keep `i`; a cycling advances it and is allowed only
//! when the [`SweepPredicate`] admits the current word at step `i`. The
//! search accepts at `(w, k)`. Since there are finitely many words of length
//! `k` on `n` strands, the state space is finite and breadth-first search is
//! a complete decision procedure within its budget.

mod census;
mod certificate;
mod predicate;

use std::collections::{HashSet, VecDeque};

use thiserror::Error;

pub use census::{census, census_with, unknot_words, Census, CensusOptions, CensusRecord};
pub use certificate::{CertificateFile, CertificateFormatError, SweepCertificate, VALID_MARKER};
pub use predicate::SweepPredicate;

use crate::band::BandWord;
use crate::rewriting::{apply_move, cycle, neighbors, Move, MoveError};
use crate::word_graph::WordKey;

/// Default number of sweep states a decision may visit.
pub const DEFAULT_DECIDE_BUDGET: usize = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SweepError {
    #[error("the empty word has no sweep")]
    EmptyWord,
    #[error("budget must be at least 1")]
    ZeroBudget,
    #[error("census needs at least 2 strands, got {0}")]
    TooFewStrands(u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplayError {
    #[error("move {index}: {source}")]
    InapplicableMove {
        index: usize,
        #[source]
        source: MoveError,
    },
    #[error("expected {expected} cyclings, found {found}")]
    CycleCountMismatch { expected: usize, found: usize },
    #[error("move {index}: cycling not admissible at step {step}")]
    InadmissibleCycle { index: usize, step: usize },
    #[error("sweep does not close: ended at {0}")]
    NotClosed(BandWord),
}

/// A position in the sweep search.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SweepState {
    pub word: BandWord,
    /// Number of cyclings performed, `0..=k`.
    pub step: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    MutuallyBraided(SweepCertificate),
    /// The reachable state space was exhausted without acceptance.
    NotMutuallyBraided {
        states_explored: usize,
    },
    Indeterminate {
        budget: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VerdictKind {
    MutuallyBraided,
    NotMutuallyBraided,
    Indeterminate,
}

impl VerdictKind {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictKind::MutuallyBraided => "mutually-braided",
            VerdictKind::NotMutuallyBraided => "not-mutually-braided",
            VerdictKind::Indeterminate => "indeterminate",
        }
    }

    pub fn parse(text: &str) -> Option<Self> {
        [
            VerdictKind::MutuallyBraided,
            VerdictKind::NotMutuallyBraided,
            VerdictKind::Indeterminate,
        ]
        .into_iter()
        .find(|k| k.as_str() == text)
    }
}

impl Verdict {
    pub fn kind(&self) -> VerdictKind {
        match self {
            Verdict::MutuallyBraided(_) => VerdictKind::MutuallyBraided,
            Verdict::NotMutuallyBraided { .. } => VerdictKind::NotMutuallyBraided,
            Verdict::Indeterminate { .. } => VerdictKind::Indeterminate,
        }
    }

    pub fn certificate(&self) -> Option<&SweepCertificate> {
        match self {
            Verdict::MutuallyBraided(c) => Some(c),
            _ => None,
        }
    }
}

struct Node {
    word: BandWord,
    step: usize,
    parent: Option<(usize, Move)>,
}

fn path_to(nodes: &[Node], mut index: usize) -> Vec<Move> {
    let mut moves = Vec::new();
    while let Some((parent, mv)) = nodes[index].parent {
        moves.push(mv);
        index = parent;
    }
    moves.reverse();
    moves
}

/// Decides whether `w` admits an admissible sweep under `predicate`.
///
/// The returned certificate is a shortest one; among shortest certificates
/// it is the least when moves are compared by their text form.
pub fn decide(
    w: &BandWord,
    predicate: &SweepPredicate,
    budget: usize,
) -> Result<Verdict, SweepError> {
    if w.is_empty() {
        return Err(SweepError::EmptyWord);
    }
    if budget == 0 {
        return Err(SweepError::ZeroBudget);
    }
    let k = w.len();
    let mut visited: HashSet<(WordKey, usize)> = HashSet::new();
    visited.insert((WordKey::of(w), 0));
    let mut nodes = vec![Node {
        word: w.clone(),
        step: 0,
        parent: None,
    }];
    let mut queue = VecDeque::from([0usize]);

    while let Some(current) = queue.pop_front() {
        let (word, step) = (&nodes[current].word, nodes[current].step);
        let mut edges: Vec<(String, Move, BandWord, usize)> = neighbors(word)
            .into_iter()
            .map(|(mv, next)| (mv.to_string(), mv, next, step))
            .collect();
        if step < k && predicate.admits(word, step) {
            let next = cycle(word).expect("non-empty");
            edges.push((Move::Cycle.to_string(), Move::Cycle, next, step + 1));
        }
        // Lexicographic successor order makes the first accepting path the
        // least among the shortest ones.
        edges.sort_by(|a, b| a.0.cmp(&b.0));

        for (_, mv, next, next_step) in edges {
            let state = (WordKey::of(&next), next_step);
            if visited.contains(&state) {
                continue;
            }
            if visited.len() == budget {
                return Ok(Verdict::Indeterminate { budget });
            }
            visited.insert(state);
            let accepted = next_step == k && next == *w;
            nodes.push(Node {
                word: next,
                step: next_step,
                parent: Some((current, mv)),
            });
            let index = nodes.len() - 1;
            if accepted {
                return Ok(Verdict::MutuallyBraided(SweepCertificate {
                    initial: w.clone(),
                    predicate: predicate.name().to_string(),
                    moves: path_to(&nodes, index),
                }));
            }
            queue.push_back(index);
        }
    }
    Ok(Verdict::NotMutuallyBraided {
        states_explored: visited.len(),
    })
}

/// Every word visited by the certificate, starting with the initial word.
/// When `predicate` is given, each cycling is re-checked against it.
pub fn replay_trace(
    c: &SweepCertificate,
    predicate: Option<&SweepPredicate>,
) -> Result<Vec<SweepState>, ReplayError> {
    let mut trace = vec![SweepState {
        word: c.initial.clone(),
        step: 0,
    }];
    for (index, &mv) in c.moves.iter().enumerate() {
        let SweepState { word, step } = trace.last().expect("non-empty");
        if mv.is_cycle() {
            if let Some(p) = predicate {
                if !p.admits(word, *step) {
                    return Err(ReplayError::InadmissibleCycle { index, step: *step });
                }
            }
        }
        let next = apply_move(word, mv)
            .map_err(|source| ReplayError::InapplicableMove { index, source })?;
        let step = step + usize::from(mv.is_cycle());
        trace.push(SweepState { word: next, step });
    }
    let found = c.cycle_count();
    if found != c.initial.len() {
        return Err(ReplayError::CycleCountMismatch {
            expected: c.initial.len(),
            found,
        });
    }
    Ok(trace)
}

/// Applies the certificate's moves and returns the final word.
pub fn replay(
    c: &SweepCertificate,
    predicate: Option<&SweepPredicate>,
) -> Result<BandWord, ReplayError> {
    replay_trace(c, predicate).map(|mut t| t.pop().expect("non-empty").word)
}

/// Full validity check: replay succeeds and the sweep closes up on the
/// initial word.
pub fn verify(c: &SweepCertificate, predicate: Option<&SweepPredicate>) -> Result<(), ReplayError> {
    let last = replay(c, predicate)?;
    if last != c.initial {
        return Err(ReplayError::NotClosed(last));
    }
    Ok(())
}

/// True iff `decide` gives the same kind of verdict for every word.
pub fn orbit_decide_consistency(
    orbit: &[BandWord],
    predicate: &SweepPredicate,
    budget: usize,
) -> bool {
    let mut kinds = orbit
        .iter()
        .map(|w| decide(w, predicate, budget).map(|v| v.kind()));
    match kinds.next() {
        None => true,
        Some(first) => kinds.all(|k| k == first),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::band::parse_band_word;
    use crate::word_graph::{conjugacy_orbit_members, equality_class};

    fn w(n: u32, text: &str) -> BandWord {
        parse_band_word(text, n).unwrap()
    }

    #[test]
    fn any_accepts_by_bare_rotation() {
        for (n, text) in [
            (3, "a(2,1) a(3,1)"),
            (4, "a(4,1) a(3,2) a(4,3)"),
            (2, "a(2,1)"),
        ] {
            let word = w(n, text);
            let v = decide(&word, &SweepPredicate::any(), 1000).unwrap();
            let c = v.certificate().expect("accepted");
            assert_eq!(c.moves, vec![Move::Cycle; word.len()]);
            assert_eq!(verify(c, Some(&SweepPredicate::any())), Ok(()));
        }
    }

    #[test]
    fn never_explores_the_equality_class() {
        let word = w(3, "a(2,1) a(2,1)");
        assert_eq!(
            decide(&word, &SweepPredicate::never(), 100),
            Ok(Verdict::NotMutuallyBraided { states_explored: 1 })
        );
        let word = w(3, "a(3,2) a(2,1)");
        assert_eq!(
            decide(&word, &SweepPredicate::never(), 100),
            Ok(Verdict::NotMutuallyBraided {
                states_explored: equality_class(&word, 100).unwrap().members
            })
        );
    }

    #[test]
    fn adjacent_first_fixture() {
        let word = w(3, "a(3,2) a(2,1)");
        let p = SweepPredicate::adjacent_first();
        let v = decide(&word, &p, 1000).unwrap();
        let c = v.certificate().unwrap();
        assert_eq!(c.moves, vec![Move::Cycle, Move::Cycle]);
        assert_eq!(verify(c, Some(&p)), Ok(()));

        // a(3,1) leads, so a relation move must come first.
        let word = w(3, "a(3,1) a(3,2)");
        let c = decide(&word, &p, 1000)
            .unwrap()
            .certificate()
            .cloned()
            .unwrap();
        assert_eq!(verify(&c, Some(&p)), Ok(()));
        assert_eq!(c.cycle_count(), 2);
        assert!(!c.moves[0].is_cycle());
    }

    #[test]
    fn errors() {
        assert_eq!(
            decide(&BandWord::empty(3), &SweepPredicate::any(), 10),
            Err(SweepError::EmptyWord)
        );
        assert_eq!(
            decide(&w(3, "a(2,1)"), &SweepPredicate::any(), 0),
            Err(SweepError::ZeroBudget)
        );
        assert_eq!(
            decide(&w(4, "a(2,1) a(4,3) a(3,2)"), &SweepPredicate::never(), 2),
            Ok(Verdict::Indeterminate { budget: 2 })
        );
    }

    #[test]
    fn replay_examples() {
        let word = w(4, "a(3,1) a(4,2) a(2,1)");
        let c = SweepCertificate {
            initial: word.clone(),
            predicate: "any".into(),
            moves: vec![Move::Cycle; 3],
        };
        assert_eq!(replay(&c, None), Ok(word.clone()));

        let bad = SweepCertificate {
            moves: vec![
                Move::Commute { position: 1 },
                Move::Cycle,
                Move::Cycle,
                Move::Cycle,
            ],
            ..c.clone()
        };
        assert!(matches!(
            replay(&bad, None),
            Err(ReplayError::InapplicableMove { index: 0, .. })
        ));

        let short = SweepCertificate {
            moves: vec![Move::Cycle; 2],
            ..c.clone()
        };
        assert_eq!(
            replay(&short, None),
            Err(ReplayError::CycleCountMismatch {
                expected: 3,
                found: 2
            })
        );

        assert_eq!(
            replay(&c, Some(&SweepPredicate::adjacent_first())),
            Err(ReplayError::InadmissibleCycle { index: 0, step: 0 })
        );
    }

    #[test]
    fn verify_rejects_open_sweeps() {
        let c = SweepCertificate {
            initial: w(3, "a(3,2) a(2,1)"),
            predicate: "any".into(),
            moves: vec![
                Move::Triple {
                    position: 0,
                    target: 0,
                },
                Move::Cycle,
                Move::Cycle,
            ],
        };
        assert_eq!(
            verify(&c, None),
            Err(ReplayError::NotClosed(w(3, "a(2,1) a(3,1)")))
        );
    }

    #[test]
    fn consistency_examples() {
        let orbit: Vec<BandWord> = conjugacy_orbit_members(&w(3, "a(2,1) a(3,1)"), 100)
            .unwrap()
            .words()
            .collect();
        assert_eq!(orbit.len(), 6);
        assert!(orbit_decide_consistency(
            &orbit,
            &SweepPredicate::any(),
            1000
        ));
        assert!(orbit_decide_consistency(
            &orbit,
            &SweepPredicate::never(),
            1000
        ));
        assert!(orbit_decide_consistency(
            &orbit[..1],
            &SweepPredicate::adjacent_first(),
            1000
        ));
        assert!(orbit_decide_consistency(&[], &SweepPredicate::any(), 1000));
    }
}
