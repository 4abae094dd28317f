//! Motzkin numbers, difference numbers, and lattice-path completion counts.
//!
//! Everything is driven by one table: T(m, h) counts the digit sequences of
//! length m that bring a path from height h down to 0 without dipping below
//! the axis. T(n, 0) is the Motzkin number M_n, and the partial sums the
//! ranking module needs are just other cells of the same table.

use std::sync::RwLock;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;

/// Memoized table of completion counts T(m, h).
///
/// Recurrence: T(0, 0) = 1, T(0, h) = 0 for h > 0, and
/// T(m, h) = T(m-1, h) + T(m-1, h+1) + T(m-1, h-1), the last term only
/// when h > 0. Cells with h > m are zero (the path cannot come down in
/// time) and are not stored.
///
/// Rows extend lazily under a write lock; lookups take a read lock, so
/// concurrent readers are safe.
pub struct CountTable {
    rows: RwLock<Vec<Vec<BigUint>>>,
}

impl CountTable {
    pub fn new() -> CountTable {
        CountTable {
            rows: RwLock::new(vec![vec![BigUint::one()]]),
        }
    }

    /// T(m, h): completions of length m from height h.
    pub fn completions(&self, m: usize, h: usize) -> BigUint {
        if h > m {
            return BigUint::zero();
        }
        self.ensure(m);
        self.rows.read().unwrap()[m][h].clone()
    }

    /// The Motzkin number M_n = T(n, 0).
    pub fn motzkin(&self, n: usize) -> BigUint {
        self.completions(n, 0)
    }

    /// The difference Motzkin number U_n, the size of range n.
    ///
    /// U_n = M_n - M_(n-1) for n >= 2. U_1 = 1: range 1 is the singleton
    /// {"0"}, while M_1 - M_0 = 0 because M_0 counts the excluded empty
    /// word. The published sequence 1, 1, 2, 5, 12, 30, ... starts with
    /// that 1.
    pub fn diff_motzkin(&self, n: usize) -> BigUint {
        assert!(n >= 1, "ranges are numbered from 1");
        if n == 1 {
            return BigUint::one();
        }
        self.motzkin(n) - self.motzkin(n - 1)
    }

    fn ensure(&self, m: usize) {
        if self.rows.read().unwrap().len() > m {
            return;
        }
        let mut rows = self.rows.write().unwrap();
        while rows.len() <= m {
            let prev = rows.last().unwrap();
            let mm = rows.len();
            let mut row = Vec::with_capacity(mm + 1);
            for h in 0..=mm {
                let mut cell = BigUint::zero();
                if h < prev.len() {
                    cell += &prev[h];
                }
                if h + 1 < prev.len() {
                    cell += &prev[h + 1];
                }
                if h > 0 && h - 1 < prev.len() {
                    cell += &prev[h - 1];
                }
                row.push(cell);
            }
            rows.push(row);
        }
    }
}

impl Default for CountTable {
    fn default() -> Self {
        CountTable::new()
    }
}

static TABLE: Lazy<CountTable> = Lazy::new(CountTable::new);

/// The process-wide shared table.
pub fn table() -> &'static CountTable {
    &TABLE
}

/// M_n via the shared table.
pub fn motzkin(n: usize) -> BigUint {
    TABLE.motzkin(n)
}

/// U_n via the shared table.
pub fn diff_motzkin(n: usize) -> BigUint {
    TABLE.diff_motzkin(n)
}

/// T(m, h) via the shared table.
pub fn completions(m: usize, h: usize) -> BigUint {
    TABLE.completions(m, h)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn motzkin_numbers() {
        let expected: [u64; 15] = [
            1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798, 15511, 41835, 113634,
        ];
        for (n, want) in expected.iter().enumerate() {
            assert_eq!(motzkin(n), small(*want), "M_{n}");
        }
    }

    #[test]
    fn difference_numbers() {
        let expected: [u64; 14] = [
            1, 1, 2, 5, 12, 30, 76, 196, 512, 1353, 3610, 9713, 26324, 71799,
        ];
        for (i, want) in expected.iter().enumerate() {
            assert_eq!(diff_motzkin(i + 1), small(*want), "U_{}", i + 1);
        }
    }

    #[test]
    fn completion_counts() {
        assert_eq!(completions(0, 0), small(1));
        assert_eq!(completions(0, 3), small(0));
        assert_eq!(completions(2, 1), small(2));
        assert_eq!(completions(4, 0), small(9));
        assert_eq!(completions(5, 2), small(25));
        // Height out of reach.
        assert_eq!(completions(3, 4), small(0));
        // Full row m = 3.
        let row: Vec<BigUint> = (0..=3).map(|h| completions(3, h)).collect();
        assert_eq!(row, vec![small(4), small(5), small(3), small(1)]);
    }

    #[test]
    fn recurrence_holds_on_sampled_cells() {
        // Deterministic sample spread over the table.
        for m in 1..40usize {
            for h in (0..=m).step_by(3) {
                let lhs = completions(m, h);
                let mut rhs = completions(m - 1, h) + completions(m - 1, h + 1);
                if h > 0 {
                    rhs += completions(m - 1, h - 1);
                }
                assert_eq!(lhs, rhs, "T({m},{h})");
            }
        }
    }

    #[test]
    fn monotone_growth() {
        for n in 1..30 {
            assert!(motzkin(n + 1) > motzkin(n));
        }
    }

    #[test]
    fn local_table_matches_shared() {
        let local = CountTable::new();
        assert_eq!(local.motzkin(12), motzkin(12));
        assert_eq!(local.diff_motzkin(12), diff_motzkin(12));
    }
}
