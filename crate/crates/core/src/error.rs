use num_bigint::BigUint;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// The empty word is not a member of the language.
    #[error("empty input: the empty word is excluded")]
    EmptyInput,

    /// A character outside {0, 1, 2} appeared in a word.
    #[error("bad digit {found:?} at position {position}: words use only 0, 1, 2")]
    BadDigit { position: usize, found: char },

    /// Total counts of 1 and 2 differ, so the parentheses cannot match.
    #[error("unbalanced word: {ones} ones vs {twos} twos")]
    UnbalancedTotal { ones: usize, twos: usize },

    /// Some suffix contains more 1s than 2s (an opener with no closer after it).
    #[error("suffix starting at position {suffix_start} has more 1s than 2s")]
    SuffixBalancePositive { suffix_start: usize },

    /// A leading zero on a word other than "0" (zero prefixes carry no value).
    #[error("non-canonical word: leading zero")]
    NonCanonical,

    /// A character outside {'(', '0', ')'} in a parenthesis string.
    #[error("bad symbol {found:?} at position {position}: expected '(', '0' or ')'")]
    BadSymbol { position: usize, found: char },

    /// The number's ternary digits do not form a valid canonical word.
    #[error("{value} is not a member of the series")]
    NotInSeries { value: BigUint },

    /// An operation was asked for a range below its domain.
    #[error("range {n} is too small here (needs n >= {min})")]
    RangeTooSmall { n: usize, min: usize },

    /// The word is the maximum of its range; no suffix rewrite applies.
    #[error("word is the maximum of its range; the next member opens the next range")]
    IsRangeMax,

    /// No rewrite rule matches the pattern (malformed pattern; the suffix
    /// parser never produces one).
    #[error("no rewrite rule matches the suffix pattern")]
    NoRule,
}

pub type Result<T> = std::result::Result<T, Error>;
