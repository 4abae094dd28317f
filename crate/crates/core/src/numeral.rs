//! Words as base-3 numerals.
//!
//! Reading a canonical word as a ternary numeral gives its decimal value;
//! the ordered set of these values is the series the rest of the crate
//! works with. Conversion back doubles as a membership test: a number
//! belongs to the series exactly when its ternary digits form a valid
//! canonical word.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::word::{Digit, Word};

/// The base-3 value of a word.
pub fn word_to_number(w: &Word) -> BigUint {
    let mut acc = BigUint::zero();
    for d in w.digits() {
        acc = acc * 3u32 + d.value();
    }
    acc
}

/// The word whose base-3 digits spell `m`, if `m` is in the series.
pub fn number_to_word(m: &BigUint) -> Result<Word> {
    if m.is_zero() {
        return Ok(Word::zero());
    }
    let digits: Vec<Digit> = m
        .to_radix_be(3)
        .into_iter()
        .map(|d| match d {
            0 => Digit::Zero,
            1 => Digit::One,
            _ => Digit::Two,
        })
        .collect();
    Word::from_digits(digits).map_err(|_| Error::NotInSeries { value: m.clone() })
}

/// A series member: a value paired with its word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesMember {
    value: BigUint,
    word: Word,
}

impl SeriesMember {
    pub fn from_word(word: Word) -> SeriesMember {
        let value = word_to_number(&word);
        SeriesMember { value, word }
    }

    pub fn from_value(value: BigUint) -> Result<SeriesMember> {
        let word = number_to_word(&value)?;
        Ok(SeriesMember { value, word })
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    /// The range this member belongs to (its word length).
    pub fn range(&self) -> usize {
        self.word.len()
    }

    /// Multiplies by 3^k, appending k zeros to the word.
    ///
    /// Members of range n >= 2 stay in the series (range n + k). The
    /// member 0 is excluded: its word would gain a zero prefix and
    /// collapse right back.
    pub fn shift(&self, k: usize) -> Result<SeriesMember> {
        if self.range() < 2 {
            return Err(Error::RangeTooSmall {
                n: self.range(),
                min: 2,
            });
        }
        let mut digits = self.word.digits().to_vec();
        digits.resize(digits.len() + k, Digit::Zero);
        let word = Word::from_digits(digits).expect("appending zeros keeps a word valid");
        Ok(SeriesMember {
            value: &self.value * BigUint::from(3u32).pow(k as u32),
            word,
        })
    }
}

impl fmt::Display for SeriesMember {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}_3", self.value, self.word)
    }
}
