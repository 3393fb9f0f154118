#![allow(dead_code)]

use proptest::prelude::*;
use trirule::exactalg::{ratio, RatFunc, Rational};
use trirule::Poly;

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(p, q)| ratio(p, q))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    small_rational().prop_filter("nonzero", |r| *r != ratio(0, 1))
}

pub fn poly(max_len: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(small_rational(), 0..=max_len).prop_map(Poly::new)
}

pub fn nonzero_poly(max_len: usize) -> impl Strategy<Value = Poly> {
    poly(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

pub fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly(4), nonzero_poly(4)).prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

/// A polynomial with known rational roots: linear factors times a random cofactor.
pub fn rooted_poly() -> impl Strategy<Value = (Poly, Vec<Rational>)> {
    (
        prop::collection::vec(small_rational(), 0..=4),
        nonzero_poly(4),
    )
        .prop_map(|(roots, cof)| {
            let f = roots.iter().fold(cof, |acc, r| &acc * &Poly::linear(r));
            (f, roots)
        })
}
