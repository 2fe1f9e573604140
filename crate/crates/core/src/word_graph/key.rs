use std::cmp::Ordering;
use std::fmt;

use crate::band::{generator_count, BandGenerator, BandWord};

/// Injective encoding of a word on `n` strands as its sequence of generator
/// ordinals, read as a base-`n(n-1)/2` number with the first letter most
/// significant.
///
/// Keys for the same `(n, k)` compare lexicographically on the ordinal
/// sequence. When `G^k` fits in 128 bits the digits are packed into a single
/// integer; otherwise they are kept as a slice.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WordKey {
    n: u32,
    len: u32,
    digits: Digits,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Digits {
    Packed(u128),
    Wide(Box<[u32]>),
}

fn packable(n: u32, len: usize) -> bool {
    u32::try_from(len)
        .ok()
        .and_then(|k| u128::from(generator_count(n)).checked_pow(k))
        .is_some()
}

impl WordKey {
    pub fn of(w: &BandWord) -> Self {
        Self::from_letters(w.strands(), w.letters())
    }

    pub(crate) fn from_letters(n: u32, letters: &[BandGenerator]) -> Self {
        let digits = if packable(n, letters.len()) {
            let base = u128::from(generator_count(n));
            Digits::Packed(
                letters
                    .iter()
                    .fold(0u128, |acc, g| acc * base + u128::from(g.ordinal())),
            )
        } else {
            Digits::Wide(letters.iter().map(|g| g.ordinal()).collect())
        };
        Self {
            n,
            len: letters.len() as u32,
            digits,
        }
    }

    pub fn strands(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// The packed integer, when the word is short enough to have one.
    pub fn packed(&self) -> Option<u128> {
        match self.digits {
            Digits::Packed(v) => Some(v),
            Digits::Wide(_) => None,
        }
    }

    /// Generator ordinals, first letter first.
    pub fn ordinals(&self) -> Vec<u32> {
        match &self.digits {
            Digits::Wide(d) => d.to_vec(),
            Digits::Packed(mut v) => {
                let base = u128::from(generator_count(self.n));
                let mut out = vec![0u32; self.len as usize];
                if base > 1 {
                    for slot in out.iter_mut().rev() {
                        *slot = (v % base) as u32;
                        v /= base;
                    }
                }
                out
            }
        }
    }

    pub fn decode(&self) -> BandWord {
        let letters = self
            .ordinals()
            .into_iter()
            .map(BandGenerator::from_ordinal)
            .collect();
        BandWord::from_letters_unchecked(self.n, letters)
    }
}

impl Ord for WordKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then(self.len.cmp(&other.len))
            .then_with(|| match (&self.digits, &other.digits) {
                (Digits::Packed(a), Digits::Packed(b)) => a.cmp(b),
                (Digits::Wide(a), Digits::Wide(b)) => a.cmp(b),
                _ => self.ordinals().cmp(&other.ordinals()),
            })
    }
}

impl PartialOrd for WordKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for WordKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.ordinals())
    }
}

/// The packed encoding of `w`.
pub fn canonical_key(w: &BandWord) -> WordKey {
    WordKey::of(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::band::{generators, parse_band_word};

    #[test]
    fn key_examples() {
        let k = canonical_key(&parse_band_word("a(2,1)", 3).unwrap());
        assert_eq!(k.ordinals(), [0]);
        let k = canonical_key(&parse_band_word("a(3,1) a(3,2)", 3).unwrap());
        assert_eq!(k.ordinals(), [1, 2]);
        assert_eq!(k.packed(), Some(5));
    }

    #[test]
    fn degenerate_bases() {
        let one = BandWord::empty(1);
        assert_eq!(canonical_key(&one).decode(), one);
        let w = parse_band_word("a(2,1) a(2,1) a(2,1)", 2).unwrap();
        let k = canonical_key(&w);
        assert_eq!(k.packed(), Some(0));
        assert_eq!(k.decode(), w);
        assert_ne!(k, canonical_key(&parse_band_word("a(2,1)", 2).unwrap()));
    }

    #[test]
    fn wide_keys_round_trip_and_order() {
        // 45 generators on 10 strands; 45^30 overflows u128.
        let gens = generators(10);
        let a: Vec<_> = (0..30).map(|i| gens[(i * 7) % gens.len()]).collect();
        let mut b = a.clone();
        b[29] = gens[44];
        let wa = BandWord::new(10, a).unwrap();
        let wb = BandWord::new(10, b).unwrap();
        let (ka, kb) = (canonical_key(&wa), canonical_key(&wb));
        assert!(ka.packed().is_none());
        assert_eq!(ka.decode(), wa);
        assert_eq!(ka.cmp(&kb), ka.ordinals().cmp(&kb.ordinals()));
    }

    #[test]
    fn packed_order_is_lexicographic_n4_k3() {
        let gens = generators(4);
        let mut keys = Vec::new();
        for &x in &gens {
            for &y in &gens {
                for &z in &gens {
                    keys.push(canonical_key(&BandWord::new(4, vec![x, y, z]).unwrap()));
                }
            }
        }
        for pair in keys.windows(2) {
            assert!(pair[0] < pair[1]);
            assert!(pair[0].ordinals() < pair[1].ordinals());
        }
    }
}
