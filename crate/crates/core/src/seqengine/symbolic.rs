use super::SeqError;
use crate::exactalg::{Poly, RatFunc};
use std::collections::HashMap;

/// Default largest index the symbolic table will evaluate.
pub const DEFAULT_MAX_INDEX: u64 = 1024;

/// `d(c) = (3c^3 + c)/(c^2 + 2c - 1)`, the value of `T(3)` forced by `T(2) = c`.
pub fn d_formula() -> RatFunc {
    RatFunc::new(Poly::from_ints(&[0, 1, 0, 3]), Poly::from_ints(&[-1, 2, 1]))
        .expect("nonzero denominator")
}

/// Memoized `T(n)` as a rational function of `c`, with `T(0) = 0`,
/// `T(1) = 1`, `T(2) = c` and `T(3) = d(c)`.
///
/// Filling requires `&mut self`; share across threads behind a lock.
#[derive(Clone, Debug)]
pub struct SymbolicTable {
    cache: HashMap<u64, RatFunc>,
    c: RatFunc,
    d_minus_c: RatFunc,
    max_index: u64,
}

impl Default for SymbolicTable {
    fn default() -> Self {
        Self::new()
    }
}

impl SymbolicTable {
    pub fn new() -> Self {
        Self::with_max_index(DEFAULT_MAX_INDEX)
    }

    pub fn with_max_index(max_index: u64) -> Self {
        Self::with_d(d_formula(), max_index)
    }

    /// A table seeded with an arbitrary value for `T(3)`.
    pub fn with_d(d: RatFunc, max_index: u64) -> Self {
        let c = RatFunc::var();
        let d_minus_c = &d - &c;
        let cache = HashMap::from([
            (0, RatFunc::zero()),
            (1, RatFunc::one()),
            (2, c.clone()),
            (3, d),
        ]);
        SymbolicTable {
            cache,
            c,
            d_minus_c,
            max_index,
        }
    }

    pub fn max_index(&self) -> u64 {
        self.max_index
    }

    pub fn d(&self) -> &RatFunc {
        &self.cache[&3]
    }

    /// Number of memoized entries.
    pub fn cached(&self) -> usize {
        self.cache.len()
    }

    pub fn get(&mut self, n: u64) -> Result<RatFunc, SeqError> {
        if n > self.max_index {
            return Err(SeqError::OutOfRange {
                index: n,
                max: self.max_index,
            });
        }
        Ok(self.fill(n).clone())
    }

    fn fill(&mut self, n: u64) -> &RatFunc {
        if !self.cache.contains_key(&n) {
            let value = if n.is_multiple_of(2) {
                let half = n / 2;
                let a = self.fill(half).clone();
                let b = self.fill(half - 1).clone();
                &(&self.c * &a) + &b
            } else {
                let k = n.div_ceil(2);
                let a = self.fill(k).clone();
                let b = self.fill(k - 1).clone();
                &a + &(&self.d_minus_c * &b)
            };
            self.cache.insert(n, value);
        }
        &self.cache[&n]
    }
}
