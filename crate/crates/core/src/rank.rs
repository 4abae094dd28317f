//! Rank and unrank: the bijection between series members and their
//! zero-based indices in length-then-alphabetical order.
//!
//! rank(w) = M_(n-1) + (number of length-n words alphabetically below w),
//! where the second term is summed digit by digit: at each position, every
//! admissible smaller digit choice contributes the count of valid
//! completions from the resulting height. "0" is index 0, and for n >= 2
//! the first digit is pinned to 1, so the walk starts at position two with
//! height 1. Unranking runs the same walk in reverse.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::counting;
use crate::word::{Digit, Word};

const DIGITS: [Digit; 3] = [Digit::Zero, Digit::One, Digit::Two];

/// Admissible next height, if the digit keeps the path valid: never
/// negative, and low enough to return to 0 in the remaining steps.
fn step(h: usize, d: Digit, remaining_after: usize) -> Option<usize> {
    let next = h as i64 + d.delta();
    if next < 0 || next as usize > remaining_after {
        return None;
    }
    Some(next as usize)
}

/// The series index of a word.
pub fn rank(w: &Word) -> BigUint {
    if w.is_zero() {
        return BigUint::zero();
    }
    let n = w.len();
    let mut index = counting::motzkin(n - 1);
    let mut h = 1usize;
    for (pos, &d) in w.digits().iter().enumerate().skip(1) {
        let remaining_after = n - 1 - pos;
        for c in DIGITS {
            if c >= d {
                break;
            }
            if let Some(next) = step(h, c, remaining_after) {
                index += counting::completions(remaining_after, next);
            }
        }
        h = step(h, d, remaining_after).expect("valid words never leave the grid");
    }
    index
}

/// The word at a series index.
pub fn unrank(index: &BigUint) -> Word {
    if index.is_zero() {
        return Word::zero();
    }
    // Find the range: M_(n-1) <= index < M_n, n >= 2.
    let mut n = 2usize;
    while counting::motzkin(n) <= *index {
        n += 1;
    }
    let mut offset = index - counting::motzkin(n - 1);

    let mut digits = vec![Digit::One];
    let mut h = 1usize;
    for pos in 1..n {
        let remaining_after = n - 1 - pos;
        for c in DIGITS {
            let Some(next) = step(h, c, remaining_after) else {
                continue;
            };
            let count = counting::completions(remaining_after, next);
            if offset < count {
                digits.push(c);
                h = next;
                break;
            }
            offset -= count;
        }
    }
    debug_assert!(offset.is_zero());
    Word::from_digits(digits).expect("unranking walks only valid prefixes")
}
