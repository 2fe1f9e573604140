//! The band relations as a length-preserving rewriting system on adjacent
//! letter pairs, plus cycling.
//!
//! Two relation families act on a pair `x y` at positions `i, i+1`:
//!
//! * commutation: `a(t,s) a(r,q) = a(r,q) a(t,s)` when
//!   `(t-r)(t-q)(s-r)(s-q) > 0` (disjoint or nested bands);
//! * the triple relation: `a(t,s) a(s,r) = a(s,r) a(t,r) = a(t,r) a(t,s)`
//!   for `t > s > r`.
//!
//! Moves are enumerated position-ascending, commutation before the triple
//! relation, triple target 0 before target 1.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::band::{BandGenerator, BandWord};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("move {mv} does not apply at position {position}: {reason}")]
    InapplicableMove {
        mv: Move,
        position: usize,
        reason: String,
    },
    #[error("cannot cycle the empty word")]
    EmptyWord,
    #[error("cannot parse move `{0}`")]
    Parse(String),
}

/// One elementary step on a positive band word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Move {
    /// Swap the commuting pair at `position, position + 1`.
    Commute { position: usize },
    /// Replace the triple-relation pair at `position` by one of its two
    /// alternative forms (`target` is 0 or 1).
    Triple { position: usize, target: u8 },
    /// Move the leading letter to the end.
    Cycle,
}

impl Move {
    pub fn is_cycle(self) -> bool {
        matches!(self, Move::Cycle)
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Commute { position } => write!(f, "C@{position}"),
            Move::Triple { position, target } => write!(f, "T@{position}>{target}"),
            Move::Cycle => f.write_str("R"),
        }
    }
}

impl FromStr for Move {
    type Err = MoveError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let bad = || MoveError::Parse(text.to_string());
        let digits = |s: &str| -> Result<usize, MoveError> {
            if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            s.parse().map_err(|_| bad())
        };
        if text == "R" {
            return Ok(Move::Cycle);
        }
        if let Some(rest) = text.strip_prefix("C@") {
            return Ok(Move::Commute {
                position: digits(rest)?,
            });
        }
        if let Some(rest) = text.strip_prefix("T@") {
            let (pos, target) = rest.split_once('>').ok_or_else(bad)?;
            let target = match target {
                "0" => 0,
                "1" => 1,
                _ => return Err(bad()),
            };
            return Ok(Move::Triple {
                position: digits(pos)?,
                target,
            });
        }
        Err(bad())
    }
}

/// Commutation test for `x = a(t,s)`, `y = a(r,q)`.
pub fn r1_commutes(x: BandGenerator, y: BandGenerator) -> bool {
    let (t, s) = (i64::from(x.t()), i64::from(x.s()));
    let (r, q) = (i64::from(y.t()), i64::from(y.s()));
    (t - r) * (t - q) * (s - r) * (s - q) > 0
}

// The three spellings of a(t,s)a(s,r) for t > s > r, in target order.
fn triple_forms(t: u32, s: u32, r: u32) -> [(BandGenerator, BandGenerator); 3] {
    let g = |a, b| BandGenerator::new(a, b).expect("t > s > r");
    [(g(t, s), g(s, r)), (g(s, r), g(t, r)), (g(t, r), g(t, s))]
}

// Recovers (t, s, r) and the form index if (x, y) is one of the three spellings.
fn match_triple(x: BandGenerator, y: BandGenerator) -> Option<((u32, u32, u32), usize)> {
    if x.s() == y.t() {
        // a(t,s) a(s,r)
        Some(((x.t(), x.s(), y.s()), 0))
    } else if x.s() == y.s() && y.t() > x.t() {
        // a(s,r) a(t,r)
        Some(((y.t(), x.t(), x.s()), 1))
    } else if x.t() == y.t() && y.s() > x.s() {
        // a(t,r) a(t,s)
        Some(((x.t(), y.s(), x.s()), 2))
    } else {
        None
    }
}

/// The two alternative spellings of a triple-relation pair, or nothing.
pub fn r2_variants(x: BandGenerator, y: BandGenerator) -> Vec<(BandGenerator, BandGenerator)> {
    match match_triple(x, y) {
        Some(((t, s, r), form)) => triple_forms(t, s, r)
            .into_iter()
            .enumerate()
            .filter(|&(i, _)| i != form)
            .map(|(_, pair)| pair)
            .collect(),
        None => Vec::new(),
    }
}

/// Calls `visit` for every relation move applicable to `letters`, in the
/// canonical order, with the rewritten pair at that position.
pub(crate) fn for_each_relation_move(
    letters: &[BandGenerator],
    mut visit: impl FnMut(Move, usize, (BandGenerator, BandGenerator)),
) {
    for (position, pair) in letters.windows(2).enumerate() {
        let (x, y) = (pair[0], pair[1]);
        if r1_commutes(x, y) {
            visit(Move::Commute { position }, position, (y, x));
        } else if let Some(((t, s, r), form)) = match_triple(x, y) {
            let forms = triple_forms(t, s, r);
            let mut target = 0u8;
            for (i, replacement) in forms.into_iter().enumerate() {
                if i != form {
                    visit(Move::Triple { position, target }, position, replacement);
                    target += 1;
                }
            }
        }
    }
}

/// Every relation move applicable to `w` with its result. Never includes
/// [`Move::Cycle`].
pub fn neighbors(w: &BandWord) -> Vec<(Move, BandWord)> {
    let mut out = Vec::new();
    for_each_relation_move(w.letters(), |mv, position, (a, b)| {
        let mut letters = w.letters().to_vec();
        letters[position] = a;
        letters[position + 1] = b;
        out.push((mv, BandWord::from_letters_unchecked(w.strands(), letters)));
    });
    out
}

/// Rotation moving the leading letter to the end.
pub fn cycle(w: &BandWord) -> Result<BandWord, MoveError> {
    if w.is_empty() {
        return Err(MoveError::EmptyWord);
    }
    let mut letters = w.letters().to_vec();
    letters.rotate_left(1);
    Ok(BandWord::from_letters_unchecked(w.strands(), letters))
}

pub fn apply_move(w: &BandWord, m: Move) -> Result<BandWord, MoveError> {
    let inapplicable = |position: usize, reason: String| MoveError::InapplicableMove {
        mv: m,
        position,
        reason,
    };
    let position = match m {
        Move::Cycle => return cycle(w),
        Move::Commute { position } | Move::Triple { position, .. } => position,
    };
    if position + 1 >= w.len() {
        return Err(inapplicable(
            position,
            format!("word of length {} has no pair there", w.len()),
        ));
    }
    let (x, y) = (w.letters()[position], w.letters()[position + 1]);
    let (a, b) = match m {
        Move::Commute { .. } => {
            if !r1_commutes(x, y) {
                return Err(inapplicable(
                    position,
                    format!("{x} and {y} do not commute"),
                ));
            }
            (y, x)
        }
        Move::Triple { target, .. } => {
            let variants = r2_variants(x, y);
            if variants.is_empty() {
                return Err(inapplicable(
                    position,
                    format!("{x} {y} is not a triple-relation pair"),
                ));
            }
            *variants
                .get(usize::from(target))
                .ok_or_else(|| inapplicable(position, format!("no target {target}")))?
        }
        Move::Cycle => unreachable!(),
    };
    let mut letters = w.letters().to_vec();
    letters[position] = a;
    letters[position + 1] = b;
    Ok(BandWord::from_letters_unchecked(w.strands(), letters))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::band::{parse_band_word, permutation};

    fn g(t: u32, s: u32) -> BandGenerator {
        BandGenerator::new(t, s).unwrap()
    }

    fn w(n: u32, text: &str) -> BandWord {
        parse_band_word(text, n).unwrap()
    }

    #[test]
    fn commutation_examples() {
        assert!(r1_commutes(g(2, 1), g(4, 3)));
        assert!(r1_commutes(g(4, 1), g(3, 2)));
        assert!(!r1_commutes(g(3, 1), g(4, 2)));
        assert!(!r1_commutes(g(2, 1), g(2, 1)));
        assert!(!r1_commutes(g(3, 1), g(2, 1)));
    }

    #[test]
    fn triple_examples() {
        assert_eq!(
            r2_variants(g(3, 2), g(2, 1)),
            vec![(g(2, 1), g(3, 1)), (g(3, 1), g(3, 2))]
        );
        assert_eq!(
            r2_variants(g(2, 1), g(3, 1)),
            vec![(g(3, 2), g(2, 1)), (g(3, 1), g(3, 2))]
        );
        assert_eq!(
            r2_variants(g(3, 1), g(3, 2)),
            vec![(g(3, 2), g(2, 1)), (g(2, 1), g(3, 1))]
        );
        assert!(r2_variants(g(2, 1), g(3, 2)).is_empty());
        assert!(r2_variants(g(3, 1), g(2, 1)).is_empty());
        assert!(r2_variants(g(3, 2), g(3, 1)).is_empty());
        assert!(r2_variants(g(2, 1), g(4, 3)).is_empty());
    }

    #[test]
    fn neighbor_examples() {
        let out = neighbors(&w(3, "a(3,2) a(2,1)"));
        let words: Vec<String> = out.iter().map(|(_, x)| x.to_string()).collect();
        assert_eq!(words, ["a(2,1) a(3,1)", "a(3,1) a(3,2)"]);
        assert_eq!(
            out.iter().map(|(m, _)| *m).collect::<Vec<_>>(),
            [
                Move::Triple {
                    position: 0,
                    target: 0
                },
                Move::Triple {
                    position: 0,
                    target: 1
                }
            ]
        );

        let out = neighbors(&w(4, "a(2,1) a(4,3)"));
        assert_eq!(out.len(), 1);
        assert_eq!(
            out[0],
            (Move::Commute { position: 0 }, w(4, "a(4,3) a(2,1)"))
        );

        assert!(neighbors(&w(4, "a(3,1) a(4,2)")).is_empty());
        assert!(neighbors(&w(4, "a(2,1)")).is_empty());
    }

    #[test]
    fn apply_move_examples() {
        assert_eq!(
            apply_move(
                &w(3, "a(3,2) a(2,1)"),
                Move::Triple {
                    position: 0,
                    target: 0
                }
            )
            .unwrap(),
            w(3, "a(2,1) a(3,1)")
        );
        assert_eq!(
            apply_move(&w(3, "a(2,1) a(3,1)"), Move::Cycle).unwrap(),
            w(3, "a(3,1) a(2,1)")
        );
        assert!(matches!(
            apply_move(&w(3, "a(2,1) a(3,1)"), Move::Commute { position: 0 }),
            Err(MoveError::InapplicableMove { position: 0, .. })
        ));
        assert!(matches!(
            apply_move(&w(3, "a(2,1) a(3,1)"), Move::Commute { position: 1 }),
            Err(MoveError::InapplicableMove { position: 1, .. })
        ));
        assert!(matches!(
            apply_move(
                &w(4, "a(2,1) a(4,3)"),
                Move::Triple {
                    position: 0,
                    target: 0
                }
            ),
            Err(MoveError::InapplicableMove { .. })
        ));
        assert!(matches!(
            apply_move(
                &w(3, "a(3,2) a(2,1)"),
                Move::Triple {
                    position: 0,
                    target: 2
                }
            ),
            Err(MoveError::InapplicableMove { .. })
        ));
    }

    #[test]
    fn cycle_examples() {
        assert_eq!(
            cycle(&w(3, "a(2,1) a(3,2)")).unwrap(),
            w(3, "a(3,2) a(2,1)")
        );
        assert_eq!(cycle(&w(3, "a(3,1)")).unwrap(), w(3, "a(3,1)"));
        assert_eq!(cycle(&BandWord::empty(3)), Err(MoveError::EmptyWord));
        let word = w(5, "a(5,1) a(3,2) a(4,2) a(2,1)");
        let mut x = word.clone();
        for _ in 0..word.len() {
            x = cycle(&x).unwrap();
        }
        assert_eq!(x, word);
    }

    #[test]
    fn cycle_conjugates_permutation() {
        let word = w(4, "a(3,1) a(4,2) a(2,1)");
        let first = word.letters()[0];
        let tau = permutation(&BandWord::new(4, vec![first]).unwrap());
        let expected = tau.then(&permutation(&word)).then(&tau);
        assert_eq!(permutation(&cycle(&word).unwrap()), expected);
    }

    #[test]
    fn move_text_round_trip() {
        for m in [
            Move::Cycle,
            Move::Commute { position: 0 },
            Move::Commute { position: 17 },
            Move::Triple {
                position: 3,
                target: 1,
            },
        ] {
            assert_eq!(m.to_string().parse::<Move>().unwrap(), m);
        }
        for bad in ["", "C@", "C@-1", "T@1", "T@1>2", "r", "C@1 ", "X"] {
            assert!(bad.parse::<Move>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn relation_moves_preserve_permutation_exhaustively_n5() {
        let n = 5;
        let gens = crate::band::generators(n);
        for &x in &gens {
            for &y in &gens {
                let word = BandWord::new(n, vec![x, y]).unwrap();
                let p = permutation(&word);
                for (m, next) in neighbors(&word) {
                    assert_eq!(permutation(&next), p, "{word} --{m}--> {next}");
                    assert!(neighbors(&next).iter().any(|(_, back)| *back == word));
                    assert_eq!(apply_move(&word, m).unwrap(), next);
                }
                assert_eq!(r1_commutes(x, y), r1_commutes(y, x));
            }
        }
    }
}
