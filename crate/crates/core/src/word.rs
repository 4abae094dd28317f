//! Motzkin words over the digits {0, 1, 2}.
//!
//! A word encodes a well-formed parenthesis string with neutral symbols:
//! 1 is '(', 2 is ')', 0 is a filler. Validity means the 1s and 2s balance
//! overall and no suffix has more 1s than 2s (equivalently, no prefix has
//! more 2s than 1s). The canonical form has no leading zero, except the
//! one-digit word "0" itself.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A single ternary digit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Digit {
    Zero = 0,
    One = 1,
    Two = 2,
}

impl Digit {
    pub fn from_char(c: char) -> Option<Digit> {
        match c {
            '0' => Some(Digit::Zero),
            '1' => Some(Digit::One),
            '2' => Some(Digit::Two),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Digit::Zero => '0',
            Digit::One => '1',
            Digit::Two => '2',
        }
    }

    /// Numeric value 0, 1 or 2.
    pub fn value(self) -> u8 {
        self as u8
    }

    /// Height change of the corresponding path step: +1, 0 or -1.
    pub fn delta(self) -> i64 {
        match self {
            Digit::Zero => 0,
            Digit::One => 1,
            Digit::Two => -1,
        }
    }
}

/// One step of the lattice-path image of a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Up,
    Flat,
    Down,
}

/// A validated canonical Motzkin word.
///
/// Invariants (enforced by every constructor):
/// - non-empty, digits in {0, 1, 2};
/// - count(1) == count(2);
/// - every suffix has count(1) <= count(2);
/// - first digit is 1, or the word is exactly "0".
///
/// `Ord` follows the series order: shorter words first, equal lengths
/// alphabetically with 0 < 1 < 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    digits: Vec<Digit>,
}

impl Word {
    /// The one-digit word "0", the first member of the series.
    pub fn zero() -> Word {
        Word {
            digits: vec![Digit::Zero],
        }
    }

    /// Strict parse: rejects anything that is not a canonical valid word.
    pub fn parse(s: &str) -> Result<Word> {
        let digits = digits_of(s)?;
        Word::from_digits(digits)
    }

    /// Validates a digit sequence as a canonical word.
    pub fn from_digits(digits: Vec<Digit>) -> Result<Word> {
        validate_digits(&digits)?;
        Ok(Word { digits })
    }

    /// Parses a word that may carry a zero prefix, and strips it.
    /// An all-zero input collapses to "0".
    pub fn canonicalize(s: &str) -> Result<Word> {
        let digits = digits_of(s)?;
        let first_nonzero = digits.iter().position(|d| *d != Digit::Zero);
        let trimmed = match first_nonzero {
            None => vec![Digit::Zero],
            Some(i) => digits[i..].to_vec(),
        };
        Word::from_digits(trimmed)
    }

    pub fn digits(&self) -> &[Digit] {
        &self.digits
    }

    /// Word length, i.e. the range the word belongs to. Always >= 1.
    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// True for the word "0".
    pub fn is_zero(&self) -> bool {
        self.digits == [Digit::Zero]
    }

    /// The parenthesis image: 1 -> '(', 2 -> ')', 0 -> '0'.
    pub fn to_parens(&self) -> String {
        self.digits
            .iter()
            .map(|d| match d {
                Digit::Zero => '0',
                Digit::One => '(',
                Digit::Two => ')',
            })
            .collect()
    }

    /// Parses the parenthesis image back into a word.
    pub fn from_parens(s: &str) -> Result<Word> {
        let mut digits = Vec::with_capacity(s.len());
        for (position, c) in s.chars().enumerate() {
            let d = match c {
                '(' => Digit::One,
                ')' => Digit::Two,
                '0' => Digit::Zero,
                found => return Err(Error::BadSymbol { position, found }),
            };
            digits.push(d);
        }
        Word::from_digits(digits)
    }

    /// The lattice-path image: 1 -> Up, 0 -> Flat, 2 -> Down.
    pub fn to_path(&self) -> Vec<Step> {
        self.digits
            .iter()
            .map(|d| match d {
                Digit::Zero => Step::Flat,
                Digit::One => Step::Up,
                Digit::Two => Step::Down,
            })
            .collect()
    }

    /// Rebuilds a word from path steps (inverse of `to_path`).
    pub fn from_path(steps: &[Step]) -> Result<Word> {
        let digits = steps
            .iter()
            .map(|s| match s {
                Step::Up => Digit::One,
                Step::Flat => Digit::Zero,
                Step::Down => Digit::Two,
            })
            .collect();
        Word::from_digits(digits)
    }

    /// Path heights after each step. Starts implicitly at 0, ends at 0,
    /// never negative.
    pub fn heights(&self) -> Vec<usize> {
        let mut h: i64 = 0;
        self.digits
            .iter()
            .map(|d| {
                h += d.delta();
                h as usize
            })
            .collect()
    }

    /// The smallest word of range n: "0" for n = 1, else 1 0^(n-2) 2.
    pub fn range_min(n: usize) -> Word {
        assert!(n >= 1, "ranges are numbered from 1");
        if n == 1 {
            return Word::zero();
        }
        let mut digits = vec![Digit::Zero; n];
        digits[0] = Digit::One;
        digits[n - 1] = Digit::Two;
        Word { digits }
    }

    /// The largest word of range n: "0" for n = 1, else (12)^k 0^(n-2k)
    /// with k = n / 2.
    pub fn range_max(n: usize) -> Word {
        assert!(n >= 1, "ranges are numbered from 1");
        if n == 1 {
            return Word::zero();
        }
        let k = n / 2;
        let mut digits = Vec::with_capacity(n);
        for _ in 0..k {
            digits.push(Digit::One);
            digits.push(Digit::Two);
        }
        digits.resize(n, Digit::Zero);
        Word { digits }
    }

    /// True iff this word is the alphabetical maximum of its range.
    pub fn is_range_max(&self) -> bool {
        *self == Word::range_max(self.len())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.digits {
            write!(f, "{}", d.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        Word::parse(s)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.digits.cmp(&other.digits))
    }
}

fn digits_of(s: &str) -> Result<Vec<Digit>> {
    if s.is_empty() {
        return Err(Error::EmptyInput);
    }
    s.chars()
        .enumerate()
        .map(|(position, c)| {
            Digit::from_char(c).ok_or(Error::BadDigit { position, found: c })
        })
        .collect()
}

/// Checks all word invariants on a digit sequence.
///
/// Error precedence: EmptyInput, then NonCanonical (leading zero), then
/// UnbalancedTotal, then SuffixBalancePositive with the start of the
/// longest offending suffix.
pub fn validate_digits(digits: &[Digit]) -> Result<()> {
    if digits.is_empty() {
        return Err(Error::EmptyInput);
    }
    if digits[0] == Digit::Zero && digits.len() > 1 {
        return Err(Error::NonCanonical);
    }
    let ones = digits.iter().filter(|d| **d == Digit::One).count();
    let twos = digits.iter().filter(|d| **d == Digit::Two).count();
    if ones != twos {
        return Err(Error::UnbalancedTotal { ones, twos });
    }
    // Scan suffixes right to left; balance = count(1) - count(2) must stay <= 0.
    let mut balance: i64 = 0;
    for (i, d) in digits.iter().enumerate().rev() {
        balance += d.delta();
        if balance > 0 {
            return Err(Error::SuffixBalancePositive { suffix_start: i });
        }
    }
    Ok(())
}
