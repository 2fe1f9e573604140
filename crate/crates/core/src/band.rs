//! Band generators, positive band words, Artin words and the bookkeeping of
//! the closed braid (permutation, component count, Euler characteristic).
//!
//! Strands are numbered from 1. A band generator `a(t,s)` joins strands
//! `s < t`; the strand count `n` is carried by the word, never by the
//! generator, so one generator value can be reused across words.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Errors raised while building or parsing words.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BandError {
    #[error("band a({t},{s}) needs t > s")]
    IndexOrder { t: u32, s: u32 },
    #[error("strand index out of range in {what} for n = {n}")]
    OutOfRange { what: String, n: u32 },
    #[error("negative Artin letter s{index}^-1 has no positive band image")]
    NegativeLetter { index: u32 },
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: u32, right: u32 },
}

/// One positive band `a(t,s)` between strands `t > s >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BandGenerator {
    t: u32,
    s: u32,
}

impl BandGenerator {
    /// Builds `a(t,s)` without an ambient strand bound.
    pub fn new(t: u32, s: u32) -> Result<Self, BandError> {
        if t <= s {
            return Err(BandError::IndexOrder { t, s });
        }
        if s < 1 {
            return Err(BandError::OutOfRange {
                what: format!("a({t},{s})"),
                n: t,
            });
        }
        Ok(Self { t, s })
    }

    /// The band `a(i+1,i)` spanning adjacent strands, i.e. the Artin letter `s<i>`.
    pub fn adjacent(i: u32) -> Result<Self, BandError> {
        Self::new(i + 1, i)
    }

    pub fn t(self) -> u32 {
        self.t
    }

    pub fn s(self) -> u32 {
        self.s
    }

    pub fn is_adjacent(self) -> bool {
        self.t == self.s + 1
    }

    /// Position of this generator in the order `a(2,1), a(3,1), a(3,2), a(4,1), ...`.
    pub fn ordinal(self) -> u32 {
        (self.t - 1) * (self.t - 2) / 2 + (self.s - 1)
    }

    /// Inverse of [`BandGenerator::ordinal`].
    pub fn from_ordinal(ordinal: u32) -> Self {
        // smallest t with t(t-1)/2 > ordinal
        let mut t = 2u32;
        while t * (t - 1) / 2 <= ordinal {
            t += 1;
        }
        let s = ordinal - (t - 1) * (t - 2) / 2 + 1;
        Self { t, s }
    }
}

impl fmt::Display for BandGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a({},{})", self.t, self.s)
    }
}

/// Validates `a(t,s)` against the strand count `n`.
pub fn make_generator(t: u32, s: u32, n: u32) -> Result<BandGenerator, BandError> {
    let g = BandGenerator::new(t, s)?;
    if t > n {
        return Err(BandError::OutOfRange {
            what: g.to_string(),
            n,
        });
    }
    Ok(g)
}

/// Number of band generators on `n` strands.
pub fn generator_count(n: u32) -> u32 {
    n * n.saturating_sub(1) / 2
}

/// All band generators on `n` strands, in ordinal order.
pub fn generators(n: u32) -> Vec<BandGenerator> {
    (0..generator_count(n))
        .map(BandGenerator::from_ordinal)
        .collect()
}

/// A positive word in band generators on `n` strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BandWord {
    n: u32,
    letters: Vec<BandGenerator>,
}

impl BandWord {
    pub fn new(n: u32, letters: Vec<BandGenerator>) -> Result<Self, BandError> {
        if let Some(bad) = letters.iter().find(|g| g.t > n) {
            return Err(BandError::OutOfRange {
                what: bad.to_string(),
                n,
            });
        }
        Ok(Self { n, letters })
    }

    pub fn empty(n: u32) -> Self {
        Self {
            n,
            letters: Vec::new(),
        }
    }

    /// Builds a word from `(t, s)` pairs.
    pub fn from_pairs(n: u32, pairs: &[(u32, u32)]) -> Result<Self, BandError> {
        let letters = pairs
            .iter()
            .map(|&(t, s)| make_generator(t, s, n))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { n, letters })
    }

    // Callers guarantee every letter fits on n strands.
    pub(crate) fn from_letters_unchecked(n: u32, letters: Vec<BandGenerator>) -> Self {
        debug_assert!(letters.iter().all(|g| g.t <= n));
        Self { n, letters }
    }

    pub fn strands(&self) -> u32 {
        self.n
    }

    pub fn letters(&self) -> &[BandGenerator] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Exponent sum; equal to the length for a positive word.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.len() as i64
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &BandWord) -> Result<BandWord, BandError> {
        if self.n != other.n {
            return Err(BandError::StrandMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self { n: self.n, letters })
    }
}

impl fmt::Display for BandWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Sign of an Artin letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

/// A classical generator `s<i>` or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ArtinLetter {
    pub index: u32,
    pub sign: Sign,
}

impl ArtinLetter {
    pub fn pos(index: u32) -> Self {
        Self {
            index,
            sign: Sign::Positive,
        }
    }

    pub fn neg(index: u32) -> Self {
        Self {
            index,
            sign: Sign::Negative,
        }
    }

    pub fn inverse(self) -> Self {
        Self {
            index: self.index,
            sign: self.sign.flip(),
        }
    }
}

impl fmt::Display for ArtinLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Positive => write!(f, "s{}", self.index),
            Sign::Negative => write!(f, "s{}^-1", self.index),
        }
    }
}

/// A word in the classical generators on `n` strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArtinWord {
    n: u32,
    letters: Vec<ArtinLetter>,
}

impl ArtinWord {
    pub fn new(n: u32, letters: Vec<ArtinLetter>) -> Result<Self, BandError> {
        if let Some(bad) = letters.iter().find(|l| l.index == 0 || l.index >= n) {
            return Err(BandError::OutOfRange {
                what: bad.to_string(),
                n,
            });
        }
        Ok(Self { n, letters })
    }

    pub fn strands(&self) -> u32 {
        self.n
    }

    pub fn letters(&self) -> &[ArtinLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign.value()).sum()
    }

    pub fn inverse(&self) -> ArtinWord {
        Self {
            n: self.n,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn concat(&self, other: &ArtinWord) -> Result<ArtinWord, BandError> {
        if self.n != other.n {
            return Err(BandError::StrandMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self { n: self.n, letters })
    }

    /// Permutation induced by `s<i> -> (i i+1)`, same left-to-right convention
    /// as [`permutation`].
    pub fn permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.n);
        for l in &self.letters {
            p.swap_values(l.index, l.index + 1);
        }
        p
    }
}

impl fmt::Display for ArtinWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Expands every band into classical generators:
/// `a(t,s) = s(t-1) ... s(s+1) · s(s) · s(s+1)^-1 ... s(t-1)^-1`.
pub fn band_to_artin(w: &BandWord) -> ArtinWord {
    let mut letters = Vec::new();
    for g in w.letters() {
        letters.extend(((g.s + 1)..g.t).rev().map(ArtinLetter::pos));
        letters.push(ArtinLetter::pos(g.s));
        letters.extend(((g.s + 1)..g.t).map(ArtinLetter::neg));
    }
    ArtinWord { n: w.n, letters }
}

/// Maps each positive `s<i>` to `a(i+1,i)`.
pub fn positive_artin_to_band(w: &ArtinWord) -> Result<BandWord, BandError> {
    let letters = w
        .letters()
        .iter()
        .map(|l| match l.sign {
            Sign::Positive => Ok(BandGenerator {
                t: l.index + 1,
                s: l.index,
            }),
            Sign::Negative => Err(BandError::NegativeLetter { index: l.index }),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(BandWord { n: w.n, letters })
}

/// A permutation of the strands `1..=n`.
///
/// Composition reads left to right: in `p.then(&q)` the strand is first moved
/// by `p`, then by `q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: u32) -> Self {
        Self {
            images: (1..=n).collect(),
        }
    }

    /// Builds a permutation from its 1-based image list.
    pub fn from_images(images: Vec<u32>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let idx = (i as usize).checked_sub(1)?;
            if idx >= n || std::mem::replace(&mut seen[idx], true) {
                return None;
            }
        }
        Some(Self { images })
    }

    pub fn transposition(n: u32, a: u32, b: u32) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(a as usize - 1, b as usize - 1);
        p
    }

    pub fn degree(&self) -> u32 {
        self.images.len() as u32
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Image of strand `i` (1-based).
    pub fn apply(&self, i: u32) -> u32 {
        self.images[i as usize - 1]
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Self {
            images: self.images.iter().map(|&i| other.apply(i)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img as usize - 1] = i as u32 + 1;
        }
        Self { images }
    }

    // Post-composition with the transposition (a b).
    fn swap_values(&mut self, a: u32, b: u32) {
        for img in &mut self.images {
            if *img == a {
                *img = b;
            } else if *img == b {
                *img = a;
            }
        }
    }

    pub fn cycle_count(&self) -> u32 {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i] as usize - 1;
            }
        }
        cycles
    }

    pub fn is_full_cycle(&self) -> bool {
        !self.images.is_empty() && self.cycle_count() == 1
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, img) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{img}")?;
        }
        Ok(())
    }
}

/// Underlying permutation of the braid: each `a(t,s)` acts as the
/// transposition `(s t)`, first letter first.
pub fn permutation(w: &BandWord) -> Permutation {
    let mut p = Permutation::identity(w.n);
    for g in w.letters() {
        p.swap_values(g.s, g.t);
    }
    p
}

/// Invariants of the closed braid and its Bennequin surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ClosureInvariants {
    pub components: u32,
    /// Euler characteristic `n - k` of the surface built from `n` discs and `k` bands.
    pub euler: i64,
    pub exponent_sum: i64,
}

pub fn closure_invariants(w: &BandWord) -> ClosureInvariants {
    ClosureInvariants {
        components: permutation(w).cycle_count(),
        euler: i64::from(w.n) - w.len() as i64,
        exponent_sum: w.exponent_sum(),
    }
}

/// True when the Bennequin surface is a disc: `k = n - 1` bands and a
/// connected closure. Such a closed braid is the unknot.
pub fn is_unknot_presentation(w: &BandWord) -> bool {
    w.len() as i64 == i64::from(w.n) - 1 && closure_invariants(w).components == 1
}

/// Parses a word in the grammar `item (WS item)*` where an item is
/// `a(t,s)` or the positive Artin shorthand `s<i>`. Blank text is the empty word.
pub fn parse_band_word(text: &str, n: u32) -> Result<BandWord, BandError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut letters = Vec::new();
    loop {
        let before = p.pos;
        p.skip_ws();
        if p.at_end() {
            break;
        }
        if !letters.is_empty() && p.pos == before {
            return Err(p.error("expected whitespace between letters"));
        }
        let start = p.pos;
        let g = match p.peek() {
            Some(b'a') => {
                p.pos += 1;
                p.expect(b'(')?;
                let t = p.int()?;
                p.expect(b',')?;
                let s = p.int()?;
                p.expect(b')')?;
                if t <= s {
                    return Err(BandError::IndexOrder { t, s });
                }
                if s < 1 || t > n {
                    return Err(BandError::OutOfRange {
                        what: format!("a({t},{s}) at offset {start}"),
                        n,
                    });
                }
                BandGenerator { t, s }
            }
            Some(b's') => {
                p.pos += 1;
                let i = p.int()?;
                if i < 1 || i >= n {
                    return Err(BandError::OutOfRange {
                        what: format!("s{i} at offset {start}"),
                        n,
                    });
                }
                BandGenerator { t: i + 1, s: i }
            }
            _ => return Err(p.error("expected `a(t,s)` or `s<i>`")),
        };
        letters.push(g);
    }
    Ok(BandWord { n, letters })
}

/// Canonical text form: letters as `a(t,s)` separated by single spaces.
pub fn format_band_word(w: &BandWord) -> String {
    w.to_string()
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn error(&self, message: &str) -> BandError {
        BandError::Syntax {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), BandError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", c as char)))
        }
    }

    fn int(&mut self) -> Result<u32, BandError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a decimal integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or(BandError::Syntax {
                offset: start,
                message: "integer too large".into(),
            })
    }
}

impl FromStr for BandGenerator {
    type Err = BandError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let w = parse_band_word(s, u32::MAX)?;
        match w.letters() {
            [g] => Ok(*g),
            _ => Err(BandError::Syntax {
                offset: 0,
                message: "expected exactly one generator".into(),
            }),
        }
    }
}
