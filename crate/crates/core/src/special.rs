//! The special number families tied to range boundaries: E_n = 3^n + 2
//! (every range minimum is one of these) and the mirror-coded companion
//! Ebar_n = 2 * 3^n + 1, with Mersenne numbers 2^n - 1 as a comparison
//! row. Includes primality testing, prime-index scans, and the checkable
//! arithmetic properties of E_n.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;

/// Primes below 100_000, smallest first.
static SMALL_PRIMES: Lazy<Vec<u64>> = Lazy::new(|| {
    let bound = 100_000usize;
    let mut sieve = vec![true; bound];
    sieve[0] = false;
    sieve[1] = false;
    let mut p = 2;
    while p * p < bound {
        if sieve[p] {
            let mut q = p * p;
            while q < bound {
                sieve[q] = false;
                q += p;
            }
        }
        p += 1;
    }
    (2..bound).filter(|i| sieve[*i]).map(|i| i as u64).collect()
});

/// The three number families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpecialKind {
    /// E_n = 3^n + 2.
    E,
    /// Ebar_n = 2 * 3^n + 1 (the mirror-coded range minimum).
    Ebar,
    /// 2^n - 1, n >= 1 (comparison row).
    Mersenne,
}

impl SpecialKind {
    pub fn name(self) -> &'static str {
        match self {
            SpecialKind::E => "E",
            SpecialKind::Ebar => "Ebar",
            SpecialKind::Mersenne => "Mersenne",
        }
    }

    /// Smallest meaningful n for the family.
    pub fn first_index(self) -> usize {
        match self {
            SpecialKind::E | SpecialKind::Ebar => 0,
            SpecialKind::Mersenne => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialNumber {
    pub kind: SpecialKind,
    pub n: usize,
    pub value: BigUint,
}

/// The n-th member of a family.
pub fn special(kind: SpecialKind, n: usize) -> SpecialNumber {
    assert!(
        n >= kind.first_index(),
        "{} is defined from n = {}",
        kind.name(),
        kind.first_index()
    );
    let value = match kind {
        SpecialKind::E => BigUint::from(3u32).pow(n as u32) + 2u32,
        SpecialKind::Ebar => BigUint::from(2u32) * BigUint::from(3u32).pow(n as u32) + 1u32,
        SpecialKind::Mersenne => BigUint::from(2u32).pow(n as u32) - 1u32,
    };
    SpecialNumber { kind, n, value }
}

/// How sure the primality test is.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// Certain: below the deterministic witness bound (or tiny).
    Prime,
    /// Certain: a factor or a strong witness exists. 0 and 1 also land
    /// here (they are not prime).
    Composite,
    /// Passed `rounds` strong-probable-prime rounds above the
    /// deterministic bound; never silently upgraded to Prime.
    ProbablePrime { rounds: u32 },
}

impl Verdict {
    /// Prime or probable-prime.
    pub fn passes(&self) -> bool {
        !matches!(self, Verdict::Composite)
    }
}

/// Why a composite verdict is certain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence {
    /// A nontrivial factor found by trial division.
    Factor(BigUint),
    /// A Miller-Rabin witness of compositeness.
    Witness(BigUint),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimalityVerdict {
    pub value: BigUint,
    pub verdict: Verdict,
    pub evidence: Option<Evidence>,
}

/// Strong-probable-prime test to base `a`. True means "passes".
fn sprp(n: &BigUint, a: &BigUint, d: &BigUint, s: u32) -> bool {
    let a = a % n;
    if a.is_zero() {
        return true;
    }
    let n_minus_1 = n - 1u32;
    let mut x = a.modpow(d, n);
    if x.is_one() || x == n_minus_1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == n_minus_1 {
            return true;
        }
    }
    false
}

/// The first thirteen prime bases (2 through 41) decide primality for
/// everything below this bound (about 3.3e24), comfortably past u64.
static DETERMINISTIC_BOUND: Lazy<BigUint> =
    Lazy::new(|| BigUint::parse_bytes(b"3317044064679887385961981", 10).unwrap());

const DETERMINISTIC_BASES: usize = 13;

/// Default number of strong-probable-prime rounds above the bound.
pub const DEFAULT_ROUNDS: u32 = 40;

/// Primality with the default round count.
pub fn is_prime(v: &BigUint) -> PrimalityVerdict {
    is_prime_with_rounds(v, DEFAULT_ROUNDS)
}

/// Primality test: trial division by small primes, then Miller-Rabin
/// with the first prime bases. Deterministic below ~3.3e24; above that,
/// `rounds` bases give a ProbablePrime verdict at best. Fully
/// deterministic across runs: the bases are fixed, not sampled.
pub fn is_prime_with_rounds(v: &BigUint, rounds: u32) -> PrimalityVerdict {
    let rounds = rounds.max(1);
    let two = BigUint::from(2u32);
    if *v < two {
        return PrimalityVerdict {
            value: v.clone(),
            verdict: Verdict::Composite,
            evidence: None,
        };
    }
    for p in SMALL_PRIMES.iter().take(168) {
        // First 168 primes: all below 1000.
        let p = BigUint::from(*p);
        if (v % &p).is_zero() {
            return if *v == p {
                PrimalityVerdict {
                    value: v.clone(),
                    verdict: Verdict::Prime,
                    evidence: None,
                }
            } else {
                PrimalityVerdict {
                    value: v.clone(),
                    verdict: Verdict::Composite,
                    evidence: Some(Evidence::Factor(p)),
                }
            };
        }
    }
    if *v < BigUint::from(1_000_000u32) {
        // No factor below 1000 and v < 1000^2: prime.
        return PrimalityVerdict {
            value: v.clone(),
            verdict: Verdict::Prime,
            evidence: None,
        };
    }

    let deterministic = *v < *DETERMINISTIC_BOUND;
    let bases = if deterministic {
        DETERMINISTIC_BASES
    } else {
        rounds as usize
    };
    let d0 = v - 1u32;
    let s = d0.trailing_zeros().unwrap_or(0) as u32;
    let d = &d0 >> s;
    for a in SMALL_PRIMES.iter().take(bases) {
        let a = BigUint::from(*a);
        if !sprp(v, &a, &d, s) {
            return PrimalityVerdict {
                value: v.clone(),
                verdict: Verdict::Composite,
                evidence: Some(Evidence::Witness(a)),
            };
        }
    }
    PrimalityVerdict {
        value: v.clone(),
        verdict: if deterministic {
            Verdict::Prime
        } else {
            Verdict::ProbablePrime {
                rounds: bases as u32,
            }
        },
        evidence: None,
    }
}

/// Indices n <= n_max whose family member is prime or probable-prime,
/// ascending. Meant for desk-scale bounds (a few hundred).
pub fn prime_index_scan(kind: SpecialKind, n_max: usize) -> Vec<usize> {
    prime_index_scan_with_rounds(kind, n_max, DEFAULT_ROUNDS)
}

pub fn prime_index_scan_with_rounds(
    kind: SpecialKind,
    n_max: usize,
    rounds: u32,
) -> Vec<usize> {
    (kind.first_index()..=n_max)
        .filter(|n| {
            is_prime_with_rounds(&special(kind, *n).value, rounds)
                .verdict
                .passes()
        })
        .collect()
}

/// True iff E_n is not a sum of two primes. E_n is odd, so the only
/// candidate split is 2 + (E_n - 2); n = 1 is the lone exception:
/// E_1 = 5 = 2 + 3.
pub fn check_not_sum_of_two_primes(n: usize) -> bool {
    let e = special(SpecialKind::E, n).value;
    !is_prime(&(e - 2u32)).verdict.passes()
}

/// True iff E_n is not a triangular number k(k+1)/2, tested via the
/// discriminant: E triangular iff 8E + 1 is a perfect square. n = 0 is
/// the lone exception: E_0 = 3 = 2*3/2.
pub fn check_not_triangular(n: usize) -> bool {
    let e = special(SpecialKind::E, n).value;
    let disc = BigUint::from(8u32) * e + 1u32;
    let root = disc.sqrt();
    &root * &root != disc
}

/// True iff E_n is not a perfect power k^s with s > 1.
///
/// Only prime exponents need testing (k^(pt) = (k^t)^p), each by an exact
/// integer root. For n >= 2, E_n = 2 (mod 9), and 2 is a primitive root
/// mod 9, so x^s = 2 (mod 9) is unsolvable whenever gcd(s, 6) > 1; that
/// rules out s = 2 and s = 3 without a root test.
pub fn check_not_perfect_power(n: usize) -> bool {
    let e = special(SpecialKind::E, n).value;
    let skip_2_3 = (&e % 9u32) == BigUint::from(2u32);
    let bits = e.bits();
    for s in SMALL_PRIMES.iter().take_while(|p| **p <= bits) {
        if skip_2_3 && (*s == 2 || *s == 3) {
            continue;
        }
        let root = e.nth_root(*s as u32);
        if root.pow(*s as u32) == e {
            return false;
        }
    }
    true
}

/// Exact identities and residue facts for one n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdentityReport {
    /// E_n + Ebar_n == 3 * (3^n + 1).
    pub sum: bool,
    /// Ebar_n - E_n == 3^n - 1.
    pub difference: bool,
    /// E_n mod p != 2 for every prime p != 3 below 100_000.
    pub residues: bool,
}

impl IdentityReport {
    pub fn all(&self) -> bool {
        self.sum && self.difference && self.residues
    }
}

pub fn identity_checks(n: usize) -> IdentityReport {
    let e = special(SpecialKind::E, n).value;
    let ebar = special(SpecialKind::Ebar, n).value;
    let pow = BigUint::from(3u32).pow(n as u32);
    let sum = &e + &ebar == BigUint::from(3u32) * (&pow + 1u32);
    let difference = &ebar - &e == &pow - 1u32;
    let two = BigUint::from(2u32);
    let residues = SMALL_PRIMES
        .iter()
        .filter(|p| **p != 3)
        .all(|p| (&e % *p) != two);
    IdentityReport {
        sum,
        difference,
        residues,
    }
}
