use std::fmt;
use std::sync::Arc;

use crate::band::BandWord;

type AdmitFn = dyn Fn(&BandWord, usize) -> bool + Send + Sync;

#[derive(Clone)]
enum Kind {
    Any,
    AdjacentFirst,
    Never,
    Custom(Arc<AdmitFn>),
}

/// Decides whether the leading letter may be cycled at sweep step `i`.
///
/// The test must be deterministic and depend only on the current word and
/// the step index. Shipped presets:
///
/// * `any`: always admissible; every word is accepted by bare rotation.
/// * `adjacent-first`: the leading letter must be an adjacent band `a(s+1,s)`.
/// * `never`: never admissible; the search can only explore the equality class.
///
/// Anything else is built with [`SweepPredicate::custom`].
#[derive(Clone)]
pub struct SweepPredicate {
    name: String,
    kind: Kind,
}

impl SweepPredicate {
    pub const PRESETS: [&'static str; 3] = ["any", "adjacent-first", "never"];

    pub fn any() -> Self {
        Self {
            name: "any".into(),
            kind: Kind::Any,
        }
    }

    pub fn adjacent_first() -> Self {
        Self {
            name: "adjacent-first".into(),
            kind: Kind::AdjacentFirst,
        }
    }

    pub fn never() -> Self {
        Self {
            name: "never".into(),
            kind: Kind::Never,
        }
    }

    pub fn custom(
        name: impl Into<String>,
        test: impl Fn(&BandWord, usize) -> bool + Send + Sync + 'static,
    ) -> Self {
        Self {
            name: name.into(),
            kind: Kind::Custom(Arc::new(test)),
        }
    }

    /// Looks up a shipped preset by name.
    pub fn preset(name: &str) -> Option<Self> {
        match name {
            "any" => Some(Self::any()),
            "adjacent-first" => Some(Self::adjacent_first()),
            "never" => Some(Self::never()),
            _ => None,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_custom(&self) -> bool {
        matches!(self.kind, Kind::Custom(_))
    }

    pub fn admits(&self, word: &BandWord, step: usize) -> bool {
        match &self.kind {
            Kind::Any => true,
            Kind::AdjacentFirst => word.letters().first().is_some_and(|g| g.is_adjacent()),
            Kind::Never => false,
            Kind::Custom(f) => f(word, step),
        }
    }
}

impl fmt::Debug for SweepPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SweepPredicate")
            .field("name", &self.name)
            .finish_non_exhaustive()
    }
}
