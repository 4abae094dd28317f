//! The acceptance gate: twelve criteria, one test each, covering the
//! golden listings, the oracle equivalences, the closed forms, the
//! number-family properties and the OEIS cross-checks. Each test ends
//! with an explicit `criterion N: pass` line (visible under
//! `--nocapture`); the harness line per test doubles as the pass/fail
//! report.

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use num_bigint::BigUint;

use motzkin::{
    checkpoint, check_not_perfect_power, check_not_sum_of_two_primes, check_not_triangular,
    diff_motzkin, identity_checks, is_prime, is_prime_with_rounds, motzkin, number_to_word,
    prime_index_scan, rank, special, succ_bruteforce, succ_value, succ_word, twins_in_range,
    unrank, word_to_number, CheckpointKind, Evidence, SpecialKind, Verdict, Word, DEFAULT_ROUNDS,
};
use motzkin_cli::fixtures::{diff_fixtures, FixtureFile, Source};
use motzkin_cli::oeis::{self, SeqId};

fn fixture_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn read_fixture(name: &str, source: Source) -> FixtureFile {
    let text = std::fs::read_to_string(fixture_dir().join(name)).unwrap();
    FixtureFile::parse(&text, source).unwrap()
}

/// Walks the series in order through all words of length <= max_len,
/// calling back with (index, word).
fn walk_series(max_len: usize, mut f: impl FnMut(usize, &Word)) {
    let mut w = Word::parse("0").unwrap();
    let mut i = 0usize;
    loop {
        f(i, &w);
        if w.len() == max_len && w.is_range_max() {
            return;
        }
        w = succ_word(&w);
        i += 1;
    }
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

#[test]
fn a01_word_listing_matches_generated_series() {
    let fixture = read_fixture("series-words.txt", Source::WordListing);
    assert!(fixture.len() >= 400, "listing covers the first 400 words");

    let report = diff_fixtures(&fixture);
    assert!(report.errata.len() <= 5);
    // The one known flaw: the final entry repeats its predecessor
    // instead of the true word.
    assert_eq!(report.errata.len(), 1);
    let e = &report.errata[0];
    assert_eq!((e.index, e.printed.as_str()), (401, "101000202"));
    assert_eq!(e.recomputed, "101000220");
    assert_eq!(fixture.entries()[400], "101000202", "predecessor it duplicates");
    assert!(report.errata.iter().all(|e| e.index >= 400));

    println!(
        "criterion 1: pass — {} words match, {} erratum (duplicate tail entry)",
        fixture.len() - report.errata.len(),
        report.errata.len()
    );
}

#[test]
fn a02_value_listing_matches_and_marks_twins() {
    let fixture = read_fixture("series-values.txt", Source::ValueListing);
    assert!(fixture.len() >= 600, "listing covers the first 600 values");

    let report = diff_fixtures(&fixture);
    assert_eq!(report.errata.len(), 1, "{:?}", report.errata);
    let e = &report.errata[0];
    assert_eq!((e.index, e.printed.as_str()), (186, "270"));
    assert_eq!(e.recomputed, "2702", "printed value lost its last digit");

    // Twins read off the printed values coincide with the true twin
    // adjacency, excluding pairs touching the corrupt entry.
    let mut truth = Vec::new();
    let mut values = Vec::with_capacity(fixture.len());
    let mut w = Word::parse("0").unwrap();
    for i in 0..fixture.len() {
        if i > 0 {
            w = succ_word(&w);
        }
        values.push(word_to_number(&w));
    }
    for i in 1..values.len() {
        if values[i] == &values[i - 1] + 1u32 {
            truth.push((i - 1, i));
        }
    }
    let touches_erratum = |p: &(usize, usize)| p.0 == 186 || p.1 == 186;
    let printed: Vec<_> = fixture
        .adjacent_twins()
        .into_iter()
        .filter(|p| !touches_erratum(p))
        .collect();
    let expected: Vec<_> = truth.iter().copied().filter(|p| !touches_erratum(p)).collect();
    assert_eq!(printed, expected, "printed adjacency = true twin adjacency");

    // The slash marks miss exactly the three pairs the listing printed
    // with a comma; the dangling line-break slashes are all joined.
    assert_eq!(
        report.twin_mark_mismatches.len(),
        3,
        "{:?}",
        report.twin_mark_mismatches
    );
    for (pair, msg) in [(278, 279), (283, 284), (295, 296)]
        .iter()
        .zip(&report.twin_mark_mismatches)
    {
        assert!(msg.contains(&format!("{}..{}", pair.0, pair.1)), "{msg}");
        assert!(msg.contains("no slash mark"), "{msg}");
    }

    println!(
        "criterion 2: pass — {} values, 1 erratum, {} twins cross-checked",
        fixture.len(),
        expected.len()
    );
}

#[test]
fn a03_rewrite_successor_equals_exhaustive_successor() {
    let start = Instant::now();
    let mut steps = 0usize;
    walk_series(12, |_, w| {
        let v = word_to_number(w);
        let fast = succ_value(&v).unwrap();
        let slow = succ_bruteforce(&v).unwrap();
        assert_eq!(fast, slow, "diverged after {v}");
        steps += 1;
    });
    let elapsed = start.elapsed();
    assert!(steps > 15_510);
    assert!(
        elapsed < Duration::from_secs(30),
        "sweep took {elapsed:?}"
    );
    println!(
        "criterion 3: pass — {steps} successors agree with the oracle in {elapsed:?}"
    );
}

#[test]
fn a04_named_values() {
    let succ = |v: u64| {
        let next = succ_value(&big(v)).unwrap();
        u64::try_from(&next).unwrap()
    };
    assert_eq!(succ(0), 5);
    assert_eq!(succ(5), 11);
    assert_eq!(succ(98), 99);
    assert_eq!(succ(150), 245);
    assert_eq!(succ(686_444), 708_596);

    assert_eq!(rank(&number_to_word(&big(23_960)).unwrap()), big(1218));
    assert_eq!(word_to_number(&unrank(&big(1219))), big(23_964));

    let b10 = checkpoint(CheckpointKind::B, 10).unwrap();
    assert_eq!(b10.value, big(24_057));
    assert_eq!(b10.index, big(1220));

    println!("criterion 4: pass — successor, rank and checkpoint landmarks all exact");
}

#[test]
fn a05_range_boundaries_and_recurrences() {
    let minima = [5u64, 11, 29, 83, 245, 731, 2189, 6563, 19_685, 59_051, 177_149];
    let maxima = [5u64, 15, 50, 150, 455, 1365, 4100, 12_300, 36_905, 110_715];
    for (n, want) in (2..=12).zip(minima) {
        assert_eq!(motzkin::min_value(n), big(want), "minimum of range {n}");
    }
    for (n, want) in (2..=11).zip(maxima) {
        assert_eq!(motzkin::max_value(n), big(want), "maximum of range {n}");
    }
    for n in 3..=40 {
        assert!(motzkin::min_value_recurrences_check(n), "min recurrences at {n}");
    }
    for n in 1..=40 {
        assert!(motzkin::max_value_recurrences_check(n), "max recurrences at {n}");
    }
    assert_eq!(motzkin::min_value(12) - motzkin::max_value(11), big(66_434));

    println!("criterion 5: pass — boundary sequences and all four recurrences, n <= 40");
}

#[test]
fn a06_index_formulas() {
    // Closed-form indices of every checkpoint, verified exhaustively by
    // chain position through range 12.
    let mut expected: HashMap<String, BigUint> = HashMap::new();
    for kind in [
        CheckpointKind::Min,
        CheckpointKind::Max,
        CheckpointKind::A,
        CheckpointKind::B,
        CheckpointKind::D,
    ] {
        for n in kind.min_range()..=12 {
            let cp = checkpoint(kind, n).unwrap();
            // Min(1) and Max(1) are both "0" with index 0; the map entry
            // is the same, which insert simply overwrites.
            expected.insert(cp.word.to_string(), cp.index.clone());
        }
    }
    let mut seen = 0usize;
    walk_series(12, |i, w| {
        if let Some(index) = expected.get(&w.to_string()) {
            assert_eq!(index, &big(i as u64), "checkpoint {w} sits at position {i}");
            seen += 1;
        }
    });
    assert_eq!(seen, expected.len());

    // And by ranking DP far beyond the walk.
    for n in 2..=40 {
        assert_eq!(rank(&Word::range_min(n)), motzkin(n - 1));
        assert_eq!(rank(&Word::range_max(n)), motzkin(n) - 1u32);
    }
    for kind in [CheckpointKind::A, CheckpointKind::B, CheckpointKind::D] {
        for n in kind.min_range()..=40 {
            let cp = checkpoint(kind, n).unwrap();
            assert_eq!(rank(&cp.word), cp.index, "{:?} at n {n}", kind);
        }
    }

    println!(
        "criterion 6: pass — {seen} checkpoint positions by walk (n <= 12), formulas by rank (n <= 40)"
    );
}

#[test]
fn a07_counting_values() {
    let m: [u64; 11] = [1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188];
    for (n, want) in m.iter().enumerate() {
        assert_eq!(motzkin(n), big(*want), "M_{n}");
    }
    let u: [u64; 14] = [
        1, 1, 2, 5, 12, 30, 76, 196, 512, 1353, 3610, 9713, 26_324, 71_799,
    ];
    for (n, want) in (1..=14).zip(u) {
        assert_eq!(diff_motzkin(n), big(want), "U_{n}");
    }
    println!("criterion 7: pass — Motzkin and difference numbers exact through n = 14");
}

#[test]
fn a08_family_table_and_properties() {
    let e = [3u64, 5, 11, 29, 83, 245, 731, 2189, 6563, 19_685, 59_051];
    let ebar = [3u64, 7, 19, 55, 163, 487, 1459, 4375, 13_123, 39_367, 118_099];
    let mersenne = [1u64, 3, 7, 15, 31, 63, 127, 255, 511, 1023];
    for n in 0..=10 {
        assert_eq!(special(SpecialKind::E, n).value, big(e[n]));
        assert_eq!(special(SpecialKind::Ebar, n).value, big(ebar[n]));
        if n >= 1 {
            assert_eq!(special(SpecialKind::Mersenne, n).value, big(mersenne[n - 1]));
        }
    }
    for n in 0..=60 {
        let id = identity_checks(n);
        assert!(id.sum && id.difference, "sum/difference identities at {n}");
        if n <= 30 {
            assert!(id.residues, "residues at {n}");
        }
    }
    for n in 1..=1000 {
        assert!(check_not_triangular(n), "E_{n} triangular?");
        assert!(check_not_perfect_power(n), "E_{n} perfect power?");
    }
    for n in 2..=60 {
        assert!(check_not_sum_of_two_primes(n), "E_{n} = p + q?");
    }
    println!("criterion 8: pass — family rows n <= 10, identities n <= 60, impossibility properties");
}

#[test]
fn a09_prime_indices_derived_by_testing() {
    // The set below is what primality testing yields for 3^n + 2 with
    // n <= 139. Published tabulations of this family sometimes differ
    // in two places, both reproducible errors: 26 belongs (the member
    // is prime, below the deterministic witness bound) and 112 does
    // not (11 divides it). Both facts are pinned here.
    let start = Instant::now();
    let derived = prime_index_scan(SpecialKind::E, 139);
    assert_eq!(
        derived,
        [0, 1, 2, 3, 4, 8, 10, 14, 15, 24, 26, 36, 63, 98, 110, 123, 126, 139]
    );

    let e26 = is_prime(&special(SpecialKind::E, 26).value);
    assert_eq!(e26.verdict, Verdict::Prime);

    let e112 = is_prime(&special(SpecialKind::E, 112).value);
    assert_eq!(e112.verdict, Verdict::Composite);
    assert_eq!(e112.evidence, Some(Evidence::Factor(big(11))));

    // The 61-digit member: its digits settle the printed "+3" variant
    // (3^126 + 3 is divisible by 3, so it could never be prime).
    let e126 = special(SpecialKind::E, 126).value;
    assert_eq!(
        e126.to_string(),
        "1310020508637620352391208095712502073964245732475093456566331"
    );
    assert_ne!(e126, BigUint::from(3u32).pow(126) + 3u32);
    let verdict = is_prime_with_rounds(&e126, DEFAULT_ROUNDS).verdict;
    assert_eq!(verdict, Verdict::ProbablePrime { rounds: 40 });

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(20), "scan took {elapsed:?}");
    println!(
        "criterion 9: pass — 18 prime indices derived for n <= 139 in {elapsed:?} \
         (26 in, 112 out: factor 11)"
    );
}

#[test]
fn a10_twin_law_and_density() {
    let expected_counts = [1usize, 1, 3, 7, 18, 46, 120, 316, 841];
    let mut densities = Vec::new();
    for (n, want) in (4..=12).zip(expected_counts) {
        let pairs = twins_in_range(n);
        assert_eq!(pairs.len(), want, "twin count in range {n}");
        for (a, b) in &pairs {
            assert_eq!(b - a, big(1));
            assert_eq!(b % 9u32, BigUint::ZERO, "larger twin {b} divisible by 9");
            assert_eq!(succ_value(b).unwrap(), b + 5u32, "Succ({b}) = {b} + 5");
        }
        let size = diff_motzkin(n);
        let ratio = pairs.len() as f64 / u64::try_from(&size).unwrap() as f64;
        assert!(ratio.is_finite());
        densities.push(format!("{n}:{ratio:.3}"));
    }
    println!(
        "criterion 10: pass — twin laws exhaustive n <= 12; per-range density {}",
        densities.join(" ")
    );
}

#[test]
fn a11_oeis_agreement_from_vendored_cache() {
    let dir = fixture_dir().join("oeis");
    let mut checked = Vec::new();
    for id in SeqId::ALL {
        match oeis::check_cached(id, &dir, 30) {
            Ok(report) => {
                assert!(
                    report.agrees,
                    "{} diverges: {:?}",
                    id.tag(),
                    report.first_divergence
                );
                assert!(report.compared >= 31, "{} window too small", id.tag());
                let want_shift = if id == SeqId::A052919 { 1 } else { 0 };
                assert_eq!(report.shift, want_shift, "{} offset", id.tag());
                checked.push(id.tag());
            }
            Err(oeis::OeisError::CacheMissing(tag, path)) => {
                // Explicit skip status, never a silent pass.
                println!(
                    "criterion 11: SKIPPED — no vendored b-file for {tag} at {}",
                    path.display()
                );
                return;
            }
            Err(e) => panic!("{e}"),
        }
    }
    println!(
        "criterion 11: pass — {} agree with their generators for n <= 30",
        checked.join(", ")
    );
}

#[test]
fn a12_round_trips() {
    // Word <-> number, exhaustive through range 12.
    let mut count = 0usize;
    walk_series(12, |_, w| {
        assert_eq!(&number_to_word(&word_to_number(w)).unwrap(), w);
        count += 1;
    });

    // Rank <-> unrank on 1000 reproducible pseudorandom indices
    // up to 10^9 (splitmix64 steps, fixed seed).
    let mut state = 0x9e3779b97f4a7c15u64;
    for _ in 0..1000 {
        state = state.wrapping_mul(0xbf58476d1ce4e5b9).wrapping_add(0x94d049bb133111eb);
        let index = big(state % 1_000_000_001);
        assert_eq!(rank(&unrank(&index)), index);
    }

    // Bracket and lattice-path views invert, exhaustive through range 8.
    walk_series(8, |_, w| {
        assert_eq!(&Word::from_parens(&w.to_parens()).unwrap(), w);
        assert_eq!(&Word::from_path(&w.to_path()).unwrap(), w);
    });

    println!("criterion 12: pass — {count} members round-trip; 1000 random ranks invert");
}
