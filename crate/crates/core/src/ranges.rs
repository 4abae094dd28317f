//! Range arithmetic: boundary words and values, their series indices,
//! consistency checks for the boundary recurrences, and the closed-form
//! checkpoints used to accelerate searches.
//!
//! Range n is the block of members whose words have exactly n digits.
//! Closed forms used here, all for n >= 2:
//! - min value: 3^(n-1) + 2, word 1 0^(n-2) 2, index M_(n-1);
//! - max value: 5 * 3^(n-2k) * (9^k - 1) / 8 with k = n/2, word
//!   (12)^k 0^(n-2k), index M_n - 1.
//!
//! Range 1 is the degenerate {0} with word "0" and index 0.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::counting;
use crate::error::{Error, Result};
use crate::numeral::{number_to_word, word_to_number};
use crate::word::Word;

/// Boundary bundle for one range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RangeInfo {
    pub n: usize,
    pub min_word: Word,
    pub max_word: Word,
    pub min_value: BigUint,
    pub max_value: BigUint,
    /// Series index of the minimum: M_(n-1) for n >= 2, 0 for n = 1.
    pub start_index: BigUint,
    /// Series index of the maximum: M_n - 1 for n >= 2, 0 for n = 1.
    pub end_index: BigUint,
    /// Number of "12" pairs in the maximum word, k = n / 2.
    pub k: usize,
}

/// The smallest value of range n.
pub fn min_value(n: usize) -> BigUint {
    assert!(n >= 1, "ranges are numbered from 1");
    if n == 1 {
        return BigUint::zero();
    }
    BigUint::from(3u32).pow(n as u32 - 1) + 2u32
}

/// The largest value of range n, 5 * 3^(n-2k) * (9^k - 1) / 8 with k = n/2.
/// The formula also covers n = 1: k = 0 gives 0.
pub fn max_value(n: usize) -> BigUint {
    assert!(n >= 1, "ranges are numbered from 1");
    let k = n / 2;
    let nine_pow = BigUint::from(9u32).pow(k as u32);
    let geometric = (nine_pow - 1u32) / 8u32;
    BigUint::from(5u32) * BigUint::from(3u32).pow((n - 2 * k) as u32) * geometric
}

/// All boundary data for range n.
pub fn range_info(n: usize) -> RangeInfo {
    assert!(n >= 1, "ranges are numbered from 1");
    let (start_index, end_index) = if n == 1 {
        (BigUint::zero(), BigUint::zero())
    } else {
        (counting::motzkin(n - 1), counting::motzkin(n) - 1u32)
    };
    RangeInfo {
        n,
        min_word: Word::range_min(n),
        max_word: Word::range_max(n),
        min_value: min_value(n),
        max_value: max_value(n),
        start_index,
        end_index,
        k: n / 2,
    }
}

/// Verifies the two minimum-value recurrences around n against the closed
/// form, for n >= 3:
/// - min(n+1) = 3 * (min(n) - 2) + 2, equivalently 3 * (min(n) - 1) - 1,
///   checked both upward (n to n+1) and downward (n-1 to n);
/// - min(n+1) = 4 * min(n) - 3 * min(n-1).
pub fn min_value_recurrences_check(n: usize) -> bool {
    assert!(n >= 3, "the second recurrence needs two predecessors");
    let prev = min_value(n - 1);
    let cur = min_value(n);
    let next = min_value(n + 1);

    let up_a = BigUint::from(3u32) * (&cur - 2u32) + 2u32 == next;
    let up_b = BigUint::from(3u32) * (&cur - 1u32) - 1u32 == next;
    let down = BigUint::from(3u32) * (&prev - 2u32) + 2u32 == cur;
    let second = BigUint::from(4u32) * &cur - BigUint::from(3u32) * &prev == next;
    up_a && up_b && down && second
}

/// Verifies the maximum-value recurrence from n to n+1 against the closed
/// form, plus the divisibility facts: 5 divides every range maximum, and
/// 15 divides the maxima of odd ranges.
///
/// max(n+1) = 3 * max(n) for even n, 3 * max(n) + 5 for odd n. The odd
/// branch also seeds the sequence at n = 1: 3 * 0 + 5 = 5 = max of range 2.
pub fn max_value_recurrences_check(n: usize) -> bool {
    assert!(n >= 1, "ranges are numbered from 1");
    let cur = max_value(n);
    let next = max_value(n + 1);
    let recurrence = if n.is_multiple_of(2) {
        BigUint::from(3u32) * &cur == next
    } else {
        BigUint::from(3u32) * &cur + 5u32 == next
    };
    let div5 = n == 1 || (&cur % 5u32).is_zero();
    let div15 = n.is_multiple_of(2) || n == 1 || (&cur % 15u32).is_zero();
    recurrence && div5 && div15
}

/// Named members with closed-form words, values and indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckpointKind {
    /// Range minimum, 1 0^(n-2) 2, index M_(n-1). Domain n >= 1.
    Min,
    /// Range maximum, (12)^k 0^(n-2k), index M_n - 1. Domain n >= 1.
    Max,
    /// 12 0^(n-2), index M_n - M_(n-2). Domain n >= 2.
    A,
    /// 102 0^(n-3), index 2M_(n-1) - M_(n-2) - M_(n-3). Domain n >= 3.
    B,
    /// 10122 0^(n-5), index 2M_(n-1) - M_(n-2) - M_(n-3) - M_(n-5).
    /// Domain n >= 5.
    D,
}

impl CheckpointKind {
    pub fn name(self) -> &'static str {
        match self {
            CheckpointKind::Min => "min",
            CheckpointKind::Max => "max",
            CheckpointKind::A => "a",
            CheckpointKind::B => "b",
            CheckpointKind::D => "d",
        }
    }

    /// Smallest range the checkpoint exists in.
    pub fn min_range(self) -> usize {
        match self {
            CheckpointKind::Min | CheckpointKind::Max => 1,
            CheckpointKind::A => 2,
            CheckpointKind::B => 3,
            CheckpointKind::D => 5,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Checkpoint {
    pub kind: CheckpointKind,
    pub n: usize,
    pub word: Word,
    pub value: BigUint,
    pub index: BigUint,
}

/// The checkpoint of the given kind in range n.
pub fn checkpoint(kind: CheckpointKind, n: usize) -> Result<Checkpoint> {
    let min = kind.min_range();
    if n < min {
        return Err(Error::RangeTooSmall { n, min });
    }
    let m = counting::motzkin;
    let (word, index) = match kind {
        CheckpointKind::Min => (Word::range_min(n), range_info(n).start_index),
        CheckpointKind::Max => (Word::range_max(n), range_info(n).end_index),
        CheckpointKind::A => (pattern_word("12", n), m(n) - m(n - 2)),
        CheckpointKind::B => (pattern_word("102", n), {
            BigUint::from(2u32) * m(n - 1) - m(n - 2) - m(n - 3)
        }),
        CheckpointKind::D => (pattern_word("10122", n), {
            BigUint::from(2u32) * m(n - 1) - m(n - 2) - m(n - 3) - m(n - 5)
        }),
    };
    let value = word_to_number(&word);
    Ok(Checkpoint {
        kind,
        n,
        word,
        value,
        index,
    })
}

/// `head` padded with zeros to length n.
fn pattern_word(head: &str, n: usize) -> Word {
    let mut s = String::with_capacity(n);
    s.push_str(head);
    while s.len() < n {
        s.push('0');
    }
    Word::parse(&s).expect("checkpoint patterns are valid words")
}

/// The range a series member belongs to: the digit count of its ternary
/// code. Errors with NotInSeries for non-members.
pub fn locate(m: &BigUint) -> Result<usize> {
    Ok(number_to_word(m)?.len())
}
