//! Positive braid words in band generators.
//!
//! The crate is organised bottom-up:
//!
//! * [`band`]: generators `a(t,s)`, positive band words, Artin words, the
//!   permutation of a braid and the invariants of its closure;
//! * [`rewriting`]: the commutation and triple relations as explicit moves
//!   on adjacent letters, plus cycling;
//! * [`word_graph`]: equality classes and conjugacy orbits by breadth-first
//!   search, packed word keys, and a handle-reduction word-problem oracle;
//! * [`mutual_braiding`]: the sweep search with its replayable certificates
//!   and the census of minimal unknot presentations.
//!
//! ```
//! use bandbraid::band::parse_band_word;
//! use bandbraid::mutual_braiding::{decide, verify, SweepPredicate};
//!
//! let w = parse_band_word("a(3,1) a(3,2)", 3).unwrap();
//! let p = SweepPredicate::adjacent_first();
//! let verdict = decide(&w, &p, 1_000).unwrap();
//! let cert = verdict.certificate().unwrap();
//! assert!(verify(cert, Some(&p)).is_ok());
//! ```

pub mod band;
pub mod mutual_braiding;
pub mod rewriting;
pub mod word_graph;

pub use band::{BandGenerator, BandWord};
pub use rewriting::Move;

// The guide's code listings run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/band-words.md")]
    mod band_words {}
    #[doc = include_str!("../../../book/src/relations.md")]
    mod relations {}
    #[doc = include_str!("../../../book/src/word-graph.md")]
    mod word_graph {}
    #[doc = include_str!("../../../book/src/sweeps.md")]
    mod sweeps {}
    #[doc = include_str!("../../../book/src/census.md")]
    mod census {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
