//! The successor function on the ordered series, by suffix rewriting.
//!
//! For a word that is not the maximum of its range, the next word differs
//! only in a short suffix of the shape x 2^k (12)^l [0] with x in {0, 1}.
//! Parsing that suffix right to left picks one of five rewrite rules; the
//! replacement has the same length and the same 1-vs-2 balance, and is the
//! alphabetically next valid suffix. A range maximum rolls over to the
//! minimum of the next range. A digit-at-a-time brute-force oracle and the
//! twin detector (members differing by exactly 1) live here too.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::numeral::{number_to_word, word_to_number};
use crate::word::{Digit, Word};

/// The parsed rewrite site: suffix x 2^twos (12)^pairs, then one optional
/// trailing zero.
///
/// `lead` is 0 or 1; a lead of 1 forces twos >= 2 (a suffix "1(12)^l" has
/// positive balance, and "12(12)^l" would have been munched as pairs).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuffixPattern {
    pub lead: Digit,
    pub twos: usize,
    pub pairs: usize,
    pub trailing_zero: bool,
}

impl SuffixPattern {
    /// Digit count of the suffix.
    pub fn len(&self) -> usize {
        1 + self.twos + 2 * self.pairs + usize::from(self.trailing_zero)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// count(1) - count(2) over the suffix: -twos for lead 0,
    /// 1 - twos for lead 1.
    pub fn balance(&self) -> i64 {
        self.lead.delta() - self.twos as i64
    }

    /// Two-character tag naming the suffix shape: its first digit and its
    /// last (0 when a trailing zero is present, else 2).
    pub fn type_tag(&self) -> String {
        let last = if self.trailing_zero { '0' } else { '2' };
        format!("{}\u{2022}{}", self.lead.as_char(), last)
    }

    /// The suffix spelled out.
    pub fn digits(&self) -> Vec<Digit> {
        let mut out = Vec::with_capacity(self.len());
        out.push(self.lead);
        out.extend(std::iter::repeat_n(Digit::Two, self.twos));
        for _ in 0..self.pairs {
            out.push(Digit::One);
            out.push(Digit::Two);
        }
        if self.trailing_zero {
            out.push(Digit::Zero);
        }
        out
    }

    /// Which rewrite rule applies.
    pub fn rule(&self) -> Rule {
        match (self.lead, self.trailing_zero, self.pairs) {
            (Digit::Zero, false, 0) => Rule::ZeroTwos,
            (Digit::Zero, false, _) => Rule::ZeroTwosPairs,
            (Digit::One, false, _) => Rule::OneTwosPairs,
            (Digit::Zero, true, _) => Rule::ZeroTwosPairsZero,
            (Digit::One, true, _) => Rule::OneTwosPairsZero,
            (Digit::Two, _, _) => unreachable!("suffix lead is 0 or 1"),
        }
    }
}

/// The five suffix rewrite rules, named after the input shape.
/// Every rule preserves length and balance and increases the suffix
/// alphabetically by the smallest possible step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    /// 0 2^k -> 2 0 2^(k-1), k >= 1.
    ZeroTwos,
    /// 0 2^k (12)^l -> 1 0^(2l-1) 2^(k+1), l >= 1.
    ZeroTwosPairs,
    /// 1 2^k (12)^l -> 2 0^(2l+2) 2^(k-2), k >= 2.
    OneTwosPairs,
    /// 0 2^k (12)^l 0 -> 1 0^(2l) 2^(k+1); covers "00" -> "12" at k = l = 0.
    ZeroTwosPairsZero,
    /// 1 2^k (12)^l 0 -> 2 0^(2l+3) 2^(k-2), k >= 2.
    OneTwosPairsZero,
}

/// Parses the rewrite site at the end of `w`.
///
/// Right to left: strip at most one trailing zero, then the longest run of
/// "12" pairs, then the longest run of 2s; the next digit is the lead.
/// Consuming the whole word means `w` is its range maximum ((12)^l, or
/// (12)^l 0, or "0") and no suffix rewrite exists.
pub fn parse_suffix(w: &Word) -> Result<SuffixPattern> {
    let digits = w.digits();
    let mut i = digits.len();

    let trailing_zero = digits[i - 1] == Digit::Zero;
    if trailing_zero {
        i -= 1;
    }
    let mut pairs = 0;
    while i >= 2 && digits[i - 1] == Digit::Two && digits[i - 2] == Digit::One {
        pairs += 1;
        i -= 2;
    }
    let mut twos = 0;
    while i >= 1 && digits[i - 1] == Digit::Two {
        twos += 1;
        i -= 1;
    }
    if i == 0 {
        return Err(Error::IsRangeMax);
    }
    let lead = digits[i - 1];
    debug_assert!(
        lead != Digit::One || twos >= 2,
        "a lead 1 always carries at least two 2s"
    );
    Ok(SuffixPattern {
        lead,
        twos,
        pairs,
        trailing_zero,
    })
}

/// The replacement suffix for a pattern. Same length, same balance,
/// alphabetically next.
pub fn apply_rule(p: &SuffixPattern) -> Result<Vec<Digit>> {
    let (k, l) = (p.twos, p.pairs);
    let rule = match p.rule() {
        Rule::ZeroTwos if k >= 1 => Rule::ZeroTwos,
        Rule::ZeroTwosPairs => Rule::ZeroTwosPairs,
        Rule::OneTwosPairs if k >= 2 => Rule::OneTwosPairs,
        Rule::ZeroTwosPairsZero => Rule::ZeroTwosPairsZero,
        Rule::OneTwosPairsZero if k >= 2 => Rule::OneTwosPairsZero,
        _ => return Err(Error::NoRule),
    };
    let mut out = Vec::with_capacity(p.len());
    let mut push = |d: Digit, count: usize| out.extend(std::iter::repeat_n(d, count));
    match rule {
        Rule::ZeroTwos => {
            push(Digit::Two, 1);
            push(Digit::Zero, 1);
            push(Digit::Two, k - 1);
        }
        Rule::ZeroTwosPairs => {
            push(Digit::One, 1);
            push(Digit::Zero, 2 * l - 1);
            push(Digit::Two, k + 1);
        }
        Rule::OneTwosPairs => {
            push(Digit::Two, 1);
            push(Digit::Zero, 2 * l + 2);
            push(Digit::Two, k - 2);
        }
        Rule::ZeroTwosPairsZero => {
            push(Digit::One, 1);
            push(Digit::Zero, 2 * l);
            push(Digit::Two, k + 1);
        }
        Rule::OneTwosPairsZero => {
            push(Digit::Two, 1);
            push(Digit::Zero, 2 * l + 3);
            push(Digit::Two, k - 2);
        }
    }
    debug_assert_eq!(out.len(), p.len());
    Ok(out)
}

/// The next word in the series.
///
/// A range maximum (including "0") rolls over to the minimum of the next
/// range; otherwise the parsed suffix is rewritten in place.
pub fn succ_word(w: &Word) -> Word {
    if w.is_range_max() {
        return Word::range_min(w.len() + 1);
    }
    let pattern = parse_suffix(w).expect("a non-maximal word has a rewrite site");
    let replacement = apply_rule(&pattern).expect("parsed patterns always match a rule");
    let keep = w.len() - pattern.len();
    let mut digits = Vec::with_capacity(w.len());
    digits.extend_from_slice(&w.digits()[..keep]);
    digits.extend(replacement);
    Word::from_digits(digits).expect("rewrites preserve validity")
}

/// The next series value after the member `m`.
pub fn succ_value(m: &BigUint) -> Result<BigUint> {
    let w = number_to_word(m)?;
    Ok(word_to_number(&succ_word(&w)))
}

/// Brute-force successor: try m+1, m+2, ... until the ternary digits form
/// a valid canonical word. Kept as an independent oracle for `succ_value`.
///
/// One shortcut, harmless to independence: no member's code starts with 2,
/// so when the candidate's leading digit reaches 2 the search jumps
/// straight to 3^n (the next power of three). Without it the walk from
/// one range into the next would touch a third of the range for nothing.
pub fn succ_bruteforce(m: &BigUint) -> Result<BigUint> {
    let w = number_to_word(m)?;
    let mut digits: Vec<u8> = w.digits().iter().map(|d| d.value()).collect();
    loop {
        increment(&mut digits);
        if digits[0] == 2 {
            // Jump to 3^len: 1 followed by len zeros.
            let len = digits.len();
            digits.clear();
            digits.push(1);
            digits.resize(len + 1, 0);
        }
        if is_valid_code(&digits) {
            return Ok(digits
                .iter()
                .fold(BigUint::from(0u32), |acc, d| acc * 3u32 + *d));
        }
    }
}

/// Base-3 increment, big-endian digits, growing on overflow.
fn increment(digits: &mut Vec<u8>) {
    for d in digits.iter_mut().rev() {
        if *d < 2 {
            *d += 1;
            return;
        }
        *d = 0;
    }
    digits.insert(0, 1);
}

/// Validity of a big-endian digit code as a canonical word, without
/// touching the Word machinery (this is the oracle's own check).
fn is_valid_code(digits: &[u8]) -> bool {
    if digits.len() > 1 && digits[0] == 0 {
        return false;
    }
    let mut balance: i64 = 0;
    for d in digits.iter().rev() {
        match d {
            1 => balance += 1,
            2 => balance -= 1,
            _ => {}
        }
        if balance > 0 {
            return false;
        }
    }
    balance == 0
}

/// True iff `m` is half of a twin pair (its neighbor at distance 1 is
/// also a member).
pub fn is_twin(m: &BigUint) -> Result<bool> {
    number_to_word(m)?;
    let up = number_to_word(&(m + 1u32)).is_ok();
    let down = *m >= BigUint::from(1u32) && number_to_word(&(m - 1u32)).is_ok();
    Ok(up || down)
}

/// All twin pairs of range n, ascending.
pub fn twins_in_range(n: usize) -> Vec<(BigUint, BigUint)> {
    let mut out = Vec::new();
    let mut w = Word::range_min(n);
    let mut v = word_to_number(&w);
    while !w.is_range_max() {
        let next = succ_word(&w);
        let next_v = word_to_number(&next);
        if &next_v - &v == BigUint::from(1u32) {
            out.push((v.clone(), next_v.clone()));
        }
        w = next;
        v = next_v;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn word(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn parse_named_suffixes() {
        let p = parse_suffix(&word("1001220")).unwrap();
        assert_eq!(
            p,
            SuffixPattern {
                lead: Digit::One,
                twos: 2,
                pairs: 0,
                trailing_zero: true
            }
        );
        assert_eq!(p.type_tag(), "1\u{2022}0");
        assert_eq!(p.len(), 4);
        assert_eq!(p.balance(), -1);

        let p = parse_suffix(&word("10021212")).unwrap();
        assert_eq!(
            p,
            SuffixPattern {
                lead: Digit::Zero,
                twos: 1,
                pairs: 2,
                trailing_zero: false
            }
        );
        assert_eq!(p.type_tag(), "0\u{2022}2");

        let p = parse_suffix(&word("120012120")).unwrap();
        assert_eq!(
            p,
            SuffixPattern {
                lead: Digit::Zero,
                twos: 0,
                pairs: 2,
                trailing_zero: true
            }
        );

        assert_eq!(parse_suffix(&word("1212")), Err(Error::IsRangeMax));
        assert_eq!(parse_suffix(&word("12120")), Err(Error::IsRangeMax));
        assert_eq!(parse_suffix(&word("0")), Err(Error::IsRangeMax));
    }

    #[test]
    fn two_trailing_zeros_parse_as_the_00_site() {
        // Only one zero is stripped; the lead is the second one.
        let p = parse_suffix(&word("1200")).unwrap();
        assert_eq!(
            p,
            SuffixPattern {
                lead: Digit::Zero,
                twos: 0,
                pairs: 0,
                trailing_zero: true
            }
        );
        assert_eq!(apply_rule(&p).unwrap(), word("12").digits().to_vec());
    }

    fn rewrite(s: &str) -> String {
        let p = parse_suffix(&Word::parse(s).unwrap()).unwrap();
        apply_rule(&p)
            .unwrap()
            .iter()
            .map(|d| d.as_char())
            .collect()
    }

    #[test]
    fn rule_outputs() {
        // 0 2^k family.
        assert_eq!(rewrite("102"), "20");
        // 0 2^k (12)^l family, here k = 1, l = 5: 1 0^9 2^2.
        assert_eq!(rewrite("1021212121212"), "100000000022");
        // 1 2^k (12)^l 0 family ("1220" -> "2000").
        assert_eq!(rewrite("1001220"), "2000");
        // "00" -> "12".
        assert_eq!(rewrite("1200"), "12");
    }

    #[test]
    fn malformed_patterns_have_no_rule() {
        let p = SuffixPattern {
            lead: Digit::One,
            twos: 1,
            pairs: 0,
            trailing_zero: false,
        };
        assert_eq!(apply_rule(&p), Err(Error::NoRule));
        let p = SuffixPattern {
            lead: Digit::Zero,
            twos: 0,
            pairs: 0,
            trailing_zero: false,
        };
        assert_eq!(apply_rule(&p), Err(Error::NoRule));
    }

    #[test]
    fn named_successors() {
        let cases = [
            ("0", "12"),
            ("12120", "100002"),
            ("10122", "10200"),
            ("11122212", "11200002"),
            ("1200", "1212"),
            ("12012", "12102"),
        ];
        for (input, want) in cases {
            assert_eq!(succ_word(&word(input)).to_string(), want, "{input}");
        }
    }

    #[test]
    fn rewrite_walkthrough_lines() {
        // Seven spot checks covering every rule. Each tuple: input word,
        // expected suffix (type tag, length, balance, k, l), result.
        let cases = [
            ("1001220", "1\u{2022}0", 4, -1, 2, 0, "1002000"),
            ("10021212", "0\u{2022}2", 6, -1, 1, 2, "10100022"),
            ("11122212", "1\u{2022}2", 6, -2, 3, 1, "11200002"),
            ("120012120", "0\u{2022}0", 6, 0, 0, 2, "120100002"),
            ("1101102222", "0\u{2022}2", 5, -4, 4, 0, "1101120222"),
            ("1112221212", "1\u{2022}2", 8, -2, 3, 2, "1120000002"),
            ("10011222120", "1\u{2022}0", 7, -2, 3, 1, "10012000002"),
        ];
        for (input, tag, len, balance, k, l, want) in cases {
            let w = word(input);
            let p = parse_suffix(&w).unwrap();
            assert_eq!(p.type_tag(), tag, "{input}");
            assert_eq!(p.len(), len, "{input}");
            assert_eq!(p.balance(), balance, "{input}");
            assert_eq!(p.twos, k, "{input}");
            assert_eq!(p.pairs, l, "{input}");
            assert_eq!(succ_word(&w).to_string(), want, "{input}");
        }
    }

    #[test]
    fn named_successor_values() {
        assert_eq!(succ_value(&big(686444)).unwrap(), big(708596));
        assert_eq!(succ_value(&big(5)).unwrap(), big(11));
        assert_eq!(succ_value(&big(45)).unwrap(), big(50));
        assert_eq!(succ_value(&big(0)).unwrap(), big(5));
        assert_eq!(succ_value(&big(98)).unwrap(), big(99));
        assert_eq!(succ_value(&big(150)).unwrap(), big(245));
        assert_eq!(
            succ_value(&big(7)),
            Err(Error::NotInSeries { value: big(7) })
        );
    }

    #[test]
    fn bruteforce_oracle() {
        assert_eq!(succ_bruteforce(&big(23960)).unwrap(), big(23964));
        assert_eq!(succ_bruteforce(&big(0)).unwrap(), big(5));
        assert_eq!(succ_bruteforce(&big(150)).unwrap(), big(245));
        // Crossing a range boundary exercises the leading-2 jump.
        assert_eq!(succ_bruteforce(&big(110715)).unwrap(), big(177149));
    }

    #[test]
    fn twins() {
        assert!(is_twin(&big(44)).unwrap());
        assert!(is_twin(&big(45)).unwrap());
        assert!(is_twin(&big(98)).unwrap());
        assert!(!is_twin(&big(5)).unwrap());
        assert!(!is_twin(&big(0)).unwrap());

        assert_eq!(twins_in_range(4), vec![(big(44), big(45))]);
        assert_eq!(
            twins_in_range(6),
            vec![
                (big(260), big(261)),
                (big(395), big(396)),
                (big(449), big(450))
            ]
        );
        assert_eq!(twins_in_range(2), vec![]);
    }
}
