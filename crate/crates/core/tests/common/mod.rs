#![allow(dead_code)]

use bandbraid::band::{generators, BandWord};

/// Every positive word of length `k` on `n` strands, in ordinal order.
pub fn all_words(n: u32, k: usize) -> Vec<BandWord> {
    let gens = generators(n);
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                gens.iter().map(move |&g| {
                    let mut next: Vec<_> = prefix.clone();
                    next.push(g);
                    next
                })
            })
            .collect();
    }
    out.into_iter()
        .map(|letters| BandWord::new(n, letters).unwrap())
        .collect()
}

/// Brute-force transposition product with images tracked as a plain array:
/// strand x is sent through each letter's swap in turn.
pub fn brute_permutation(w: &BandWord) -> Vec<u32> {
    (1..=w.strands())
        .map(|start| {
            w.letters().iter().fold(start, |x, g| {
                if x == g.s() {
                    g.t()
                } else if x == g.t() {
                    g.s()
                } else {
                    x
                }
            })
        })
        .collect()
}

pub fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// (n-1)! * n^(n-2)
pub fn cycle_factorization_count(n: u64) -> u64 {
    factorial(n - 1) * n.pow(n as u32 - 2)
}
