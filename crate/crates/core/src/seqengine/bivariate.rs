use super::SeqError;
use crate::exactalg::Poly2;
use std::collections::HashMap;

pub const DEFAULT_BIVARIATE_MAX_INDEX: u64 = 256;

/// Memoized `T(n)` as a polynomial in `c` and a free `d = T(3)`.
///
/// The recursions only multiply by `c` and `d - c`, so every entry stays a
/// polynomial.
#[derive(Clone, Debug)]
pub struct BivariateTable {
    cache: HashMap<u64, Poly2>,
    c: Poly2,
    d_minus_c: Poly2,
    max_index: u64,
}

impl Default for BivariateTable {
    fn default() -> Self {
        Self::new()
    }
}

impl BivariateTable {
    pub fn new() -> Self {
        Self::with_max_index(DEFAULT_BIVARIATE_MAX_INDEX)
    }

    pub fn with_max_index(max_index: u64) -> Self {
        let c = Poly2::var_c();
        let d = Poly2::var_d();
        let d_minus_c = &d - &c;
        let one = Poly2::from_c(crate::exactalg::Poly::one());
        let cache = HashMap::from([(0, Poly2::zero()), (1, one), (2, c.clone()), (3, d)]);
        BivariateTable {
            cache,
            c,
            d_minus_c,
            max_index,
        }
    }

    pub fn max_index(&self) -> u64 {
        self.max_index
    }

    pub fn get(&mut self, n: u64) -> Result<Poly2, SeqError> {
        if n > self.max_index {
            return Err(SeqError::OutOfRange {
                index: n,
                max: self.max_index,
            });
        }
        Ok(self.fill(n).clone())
    }

    fn fill(&mut self, n: u64) -> &Poly2 {
        if !self.cache.contains_key(&n) {
            let value = if n.is_multiple_of(2) {
                let a = self.fill(n / 2).clone();
                let b = self.fill(n / 2 - 1).clone();
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
