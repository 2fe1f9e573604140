//! Word problem in the braid group by handle reduction.
//!
//! A `s<i>`-handle is a factor `s<i>^e u s<i>^-e` where `u` has no letter of
//! index `<= i`. Reducing it deletes the two ends and replaces every
//! `s<i+1>^d` in `u` by `s<i+1>^-e s<i>^d s<i+1>^e`. A handle-free word is
//! either empty or has its lowest generator occurring with one sign only,
//! and is then a non-trivial braid. This module is an independent check on
//! the band rewriting and is not tuned for speed.

use crate::band::{ArtinWord, Sign};

fn signed(w: &ArtinWord) -> Vec<i32> {
    w.letters()
        .iter()
        .map(|l| match l.sign {
            Sign::Positive => l.index as i32,
            Sign::Negative => -(l.index as i32),
        })
        .collect()
}

// Leftmost-ending handle; its interior is handle-free, so the reduction is
// always a permitted one.
fn find_handle(w: &[i32]) -> Option<(usize, usize)> {
    for end in 0..w.len() {
        let i = w[end].abs();
        for start in (0..end).rev() {
            let j = w[start].abs();
            if j <= i {
                if w[start] == -w[end] {
                    return Some((start, end));
                }
                break;
            }
        }
    }
    None
}

fn reduce_handle(w: &[i32], start: usize, end: usize) -> Vec<i32> {
    let i = w[start].abs();
    let e = w[start].signum();
    let mut out = Vec::with_capacity(w.len() + 2 * (end - start));
    out.extend_from_slice(&w[..start]);
    for &x in &w[start + 1..end] {
        if x.abs() == i + 1 {
            let d = x.signum();
            out.extend_from_slice(&[-e * (i + 1), d * i, e * (i + 1)]);
        } else {
            out.push(x);
        }
    }
    out.extend_from_slice(&w[end + 1..]);
    out
}

/// Handle-free word equivalent to `w`, as signed generator indices.
pub(crate) fn handle_reduce(w: &ArtinWord) -> Vec<i32> {
    let mut word = signed(w);
    while let Some((start, end)) = find_handle(&word) {
        word = reduce_handle(&word, start, end);
    }
    word
}

/// True iff `u` and `v` are the same braid.
///
/// # Panics
///
/// If the strand counts differ.
pub fn artin_equal(u: &ArtinWord, v: &ArtinWord) -> bool {
    assert_eq!(u.strands(), v.strands(), "strand count mismatch");
    let quotient = u.concat(&v.inverse()).expect("same strand count");
    handle_reduce(&quotient).is_empty()
}
