//! Motzkin words read as ternary numerals.
//!
//! A word over the digits {0, 1, 2} is a member of the series when, read
//! as '(' for 1, ')' for 2 and a flat step for 0, it is a balanced
//! bracketing, and when it carries no leading zeros (the single word "0"
//! is the one exception). Reading members as base-3 numbers and sorting
//! by length, then alphabetically, matches sorting by numeric value, so
//! the series is a strictly increasing sequence of integers and every
//! member has a well defined index, successor and length range.
//!
//! The crate covers the whole toolkit around that ordering:
//!
//! * [`Word`] parsing, validation and the bracket/path views,
//! * value conversion and the [`SeriesMember`] pairing ([`numeral`]),
//! * Motzkin-number counting and the completion table ([`counting`]),
//! * per-length range boundaries and named checkpoints ([`ranges`]),
//! * the constant-time successor rewrite and its brute-force
//!   cross-check ([`successor`]),
//! * index-to-word and word-to-index maps ([`rank`]),
//! * the `3^n + 2` family and its primality apparatus ([`special`]),
//! * lattice-path drawings ([`render`]).

pub mod counting;
pub mod error;
pub mod numeral;
pub mod ranges;
pub mod rank;
pub mod render;
pub mod special;
pub mod successor;
pub mod word;

pub use counting::{completions, diff_motzkin, motzkin, CountTable};
pub use error::{Error, Result};
pub use numeral::{number_to_word, word_to_number, SeriesMember};
pub use ranges::{
    checkpoint, locate, max_value, max_value_recurrences_check, min_value,
    min_value_recurrences_check, range_info, Checkpoint, CheckpointKind, RangeInfo,
};
pub use rank::{rank, unrank};
pub use render::{render_ascii, render_svg, ASCII_LEGEND};
pub use special::{
    check_not_perfect_power, check_not_sum_of_two_primes, check_not_triangular,
    identity_checks, is_prime, is_prime_with_rounds, prime_index_scan,
    prime_index_scan_with_rounds, special, Evidence, IdentityReport, PrimalityVerdict,
    SpecialKind, SpecialNumber, Verdict, DEFAULT_ROUNDS,
};
pub use successor::{
    apply_rule, is_twin, parse_suffix, succ_bruteforce, succ_value, succ_word, twins_in_range,
    Rule, SuffixPattern,
};
pub use word::{Digit, Step, Word};
