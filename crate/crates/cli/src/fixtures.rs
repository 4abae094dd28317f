//! Vendored series listings and the errata diff.
//!
//! The listing format is one line per block: a running start index, a
//! colon, then comma-separated items ending with a semicolon. Twins are
//! printed as `a/b`, and a pair may straddle a line break as a dangling
//! `a/` completed by the first item of the next line. A trailing `...`
//! marks truncation. The parser is deliberately tolerant about spacing
//! and never corrects a payload: discrepancies against the generated
//! series are reported, not repaired.

use std::fmt;

use num_bigint::BigUint;

use motzkin::{unrank, word_to_number, Word};

/// Where a fixture came from; decides how payloads are compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    /// Ternary-word listing, compared string-wise.
    WordListing,
    /// Decimal-value listing, compared numerically.
    ValueListing,
    /// Produced by this tool, for round trips.
    Generated { words: bool },
}

impl Source {
    /// Words compare as strings, values as integers.
    pub fn is_words(self) -> bool {
        match self {
            Source::WordListing => true,
            Source::ValueListing => false,
            Source::Generated { words } => words,
        }
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: missing ':' after the start index")]
    MissingColon { line: usize },
    #[error("line {line}: bad start index {found:?}")]
    BadLabel { line: usize, found: String },
    #[error("line {line}: start index {found} but {expected} entries seen so far")]
    LabelOutOfStep {
        line: usize,
        found: usize,
        expected: usize,
    },
    #[error("line {line}: bad item {found:?}")]
    BadItem { line: usize, found: String },
    #[error("dangling pair marker at end of input")]
    DanglingPair,
}

/// A parsed listing: payloads in series order, plus the positions the
/// listing itself marked as twin pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureFile {
    source: Source,
    entries: Vec<String>,
    slash_pairs: Vec<(usize, usize)>,
}

impl FixtureFile {
    /// Parses listing text. Every line label must equal the running
    /// entry count, so a skipped or doubled line is caught here.
    pub fn parse(text: &str, source: Source) -> Result<FixtureFile, ParseError> {
        let mut entries: Vec<String> = Vec::new();
        let mut slash_pairs = Vec::new();
        let mut pair_open = false;

        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() {
                continue;
            }
            let (label, rest) = trimmed
                .split_once(':')
                .ok_or(ParseError::MissingColon { line })?;
            let found: usize = label
                .trim()
                .parse()
                .map_err(|_| ParseError::BadLabel {
                    line,
                    found: label.trim().to_string(),
                })?;
            if found != entries.len() {
                return Err(ParseError::LabelOutOfStep {
                    line,
                    found,
                    expected: entries.len(),
                });
            }

            for item in rest.trim().trim_end_matches(';').split(',') {
                let item = item.trim();
                if item.is_empty() || item == "..." {
                    continue;
                }
                let dangling = item.ends_with('/');
                let mut parts = item.split('/').filter(|p| !p.is_empty()).peekable();
                while let Some(part) = parts.next() {
                    let part = part.trim();
                    if part.is_empty() || !part.chars().all(|c| c.is_ascii_digit()) {
                        return Err(ParseError::BadItem {
                            line,
                            found: item.to_string(),
                        });
                    }
                    if pair_open {
                        slash_pairs.push((entries.len() - 1, entries.len()));
                        pair_open = false;
                    }
                    entries.push(part.to_string());
                    if parts.peek().is_some() {
                        pair_open = true;
                    }
                }
                if dangling {
                    pair_open = true;
                }
            }
        }
        if pair_open {
            return Err(ParseError::DanglingPair);
        }
        Ok(FixtureFile {
            source,
            entries,
            slash_pairs,
        })
    }

    /// The true series rendered as a fixture, `count` entries from
    /// index 0. Twins get the slash notation, so round trips exercise
    /// every branch of the parser.
    pub fn generated(count: usize, words: bool) -> FixtureFile {
        let mut entries = Vec::with_capacity(count);
        let mut slash_pairs = Vec::new();
        let mut w = Word::zero();
        let mut prev: Option<BigUint> = None;
        for i in 0..count {
            if i > 0 {
                w = motzkin::succ_word(&w);
            }
            let value = word_to_number(&w);
            // Word listings carry no twin notation.
            if !words && prev.is_some_and(|p| value == p + 1u32) {
                slash_pairs.push((i - 1, i));
            }
            entries.push(if words {
                w.to_string()
            } else {
                value.to_string()
            });
            prev = Some(value);
        }
        FixtureFile {
            source: Source::Generated { words },
            entries,
            slash_pairs,
        }
    }

    pub fn source(&self) -> Source {
        self.source
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Payloads in order; entry `i` claims to be series index `i`.
    pub fn entries(&self) -> &[String] {
        &self.entries
    }

    /// Index pairs the listing printed with a slash (or a dangling
    /// slash across a line break).
    pub fn slash_pairs(&self) -> &[(usize, usize)] {
        &self.slash_pairs
    }

    /// Twin pairs by adjacency of the printed values: consecutive
    /// entries that parse as integers differing by one. Independent of
    /// the slash marks, so the two can be cross-checked.
    pub fn adjacent_twins(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..self.entries.len() {
            let (a, b) = (&self.entries[i - 1], &self.entries[i]);
            if let (Ok(a), Ok(b)) = (a.parse::<BigUint>(), b.parse::<BigUint>()) {
                if b == a + 1u32 {
                    out.push((i - 1, i));
                }
            }
        }
        out
    }

    /// Renders in the listing format: thirteen items per line, start
    /// indices as labels, slash notation for marked pairs.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut i = 0;
        let mut line_start = 0;
        while i < self.entries.len() {
            if i == line_start {
                out.push_str(&format!("{i}: "));
            } else {
                out.push_str(", ");
            }
            if self.slash_pairs.contains(&(i, i + 1)) {
                out.push_str(&format!("{}/{}", self.entries[i], self.entries[i + 1]));
                i += 2;
            } else {
                out.push_str(&self.entries[i]);
                i += 1;
            }
            if i - line_start >= 13 || i >= self.entries.len() {
                out.push_str(";\n");
                line_start = i;
            }
        }
        out
    }
}

/// One disagreement between a fixture and the generated series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Erratum {
    pub index: usize,
    pub printed: String,
    pub recomputed: String,
    pub rule: String,
}

impl fmt::Display for Erratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "index {}: printed {} but the series has {} ({})",
            self.index, self.printed, self.recomputed, self.rule
        )
    }
}

/// Result of an element-wise compare against the generated series.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct ErrataReport {
    pub checked: usize,
    pub errata: Vec<Erratum>,
    /// Slash marks that are not actual twins, or twins the listing
    /// failed to mark. Empty on the vendored listings.
    pub twin_mark_mismatches: Vec<String>,
}

impl ErrataReport {
    pub fn is_clean(&self) -> bool {
        self.errata.is_empty() && self.twin_mark_mismatches.is_empty()
    }
}

/// Compares every fixture entry against the true member at its index.
/// Word fixtures compare string-wise, value fixtures numerically.
/// Twin slash marks are cross-checked against `is_twin` over the
/// overlap (a pair is marked at the smaller member's index).
pub fn diff_fixtures(fixture: &FixtureFile) -> ErrataReport {
    let mut report = ErrataReport {
        checked: fixture.len(),
        ..ErrataReport::default()
    };

    let mut w = Word::zero();
    for (i, printed) in fixture.entries().iter().enumerate() {
        if i > 0 {
            w = motzkin::succ_word(&w);
        }
        let (truth, rule) = if fixture.source().is_words() {
            (w.to_string(), describe_word_mismatch(printed, &w))
        } else {
            (word_to_number(&w).to_string(), "value mismatch".to_string())
        };
        let matches = if fixture.source().is_words() {
            printed == &truth
        } else {
            printed.parse::<BigUint>().ok() == Some(word_to_number(&w))
        };
        if !matches {
            report.errata.push(Erratum {
                index: i,
                printed: printed.clone(),
                recomputed: truth,
                rule,
            });
        }
    }

    // Slash marks vs actual twin adjacency on the true series.
    if !fixture.source().is_words() {
        let marked: Vec<(usize, usize)> = fixture.slash_pairs().to_vec();
        let mut w = Word::zero();
        let mut prev_value = word_to_number(&w);
        let mut actual = Vec::new();
        for i in 1..fixture.len() {
            w = motzkin::succ_word(&w);
            let value = word_to_number(&w);
            if value == &prev_value + 1u32 {
                actual.push((i - 1, i));
            }
            prev_value = value;
        }
        for pair in &marked {
            if !actual.contains(pair) {
                report
                    .twin_mark_mismatches
                    .push(format!("marked pair at {}..{} is not a twin", pair.0, pair.1));
            }
        }
        for pair in &actual {
            if !marked.contains(pair) {
                report.twin_mark_mismatches.push(format!(
                    "twin at {}..{} carries no slash mark",
                    pair.0, pair.1
                ));
            }
        }
    }
    report
}

fn describe_word_mismatch(printed: &str, truth: &Word) -> String {
    match Word::parse(printed) {
        Err(e) => format!("not a series member: {e}"),
        Ok(w) => {
            let r = motzkin::rank(&w);
            if w == *truth {
                "match".to_string()
            } else {
                format!("member of index {r}, out of place here")
            }
        }
    }
}

/// Convenience: the true member at `index`, as word or decimal string.
pub fn generated_payload(index: usize, words: bool) -> String {
    let w = unrank(&BigUint::from(index));
    if words {
        w.to_string()
    } else {
        word_to_number(&w).to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_block_format() {
        let f = FixtureFile::parse(
            "0: 0, 5, 11, 15;\n4: 29, 33, 44/45, 50;\n",
            Source::ValueListing,
        )
        .unwrap();
        assert_eq!(f.len(), 9);
        assert_eq!(f.entries()[6], "44");
        assert_eq!(f.entries()[7], "45");
        assert_eq!(f.slash_pairs(), &[(6, 7)]);
        assert_eq!(f.adjacent_twins(), vec![(6, 7)]);
    }

    #[test]
    fn dangling_slash_joins_across_lines() {
        let f = FixtureFile::parse(
            "0: 0, 5, 44/\n3: 45, 50, ...;\n",
            Source::ValueListing,
        )
        .unwrap();
        assert_eq!(f.entries(), &["0", "5", "44", "45", "50"]);
        assert_eq!(f.slash_pairs(), &[(2, 3)]);
    }

    #[test]
    fn label_integrity() {
        let err = FixtureFile::parse("0: 0, 5;\n3: 11;\n", Source::ValueListing).unwrap_err();
        assert_eq!(
            err,
            ParseError::LabelOutOfStep {
                line: 2,
                found: 3,
                expected: 2
            }
        );
        assert!(matches!(
            FixtureFile::parse("0: 0, 1x;\n", Source::ValueListing),
            Err(ParseError::BadItem { line: 1, .. })
        ));
        assert!(matches!(
            FixtureFile::parse("0: 0, 5/\n", Source::ValueListing),
            Err(ParseError::DanglingPair)
        ));
    }

    #[test]
    fn generated_is_clean_and_round_trips() {
        for words in [true, false] {
            let f = FixtureFile::generated(200, words);
            let report = diff_fixtures(&f);
            assert!(report.is_clean(), "{report:?}");

            let back = FixtureFile::parse(&f.to_text(), f.source()).unwrap();
            assert_eq!(back.entries(), f.entries());
            assert_eq!(back.slash_pairs(), f.slash_pairs());
        }
    }

    #[test]
    fn flags_a_planted_typo() {
        let mut f = FixtureFile::generated(50, false);
        f.entries[20] = "270".to_string();
        let report = diff_fixtures(&f);
        assert_eq!(report.errata.len(), 1);
        assert_eq!(report.errata[0].index, 20);
        assert_eq!(report.errata[0].printed, "270");
    }
}
