mod common;

use common::small_rational;
use proptest::prelude::*;
use std::collections::HashMap;
use trirule::classifier::{branch_analysis, certify_branches};
use trirule::exactalg::{int, Rational};
use trirule::seqengine::{residual, residual_numerator, SymbolicTable};

/// Runs the two recursions directly on numbers, with T(3) = d(c0).
fn numeric_sequence(c0: &Rational, max_n: usize) -> Vec<Rational> {
    let d = (int(3) * c0 * c0 * c0 + c0) / (c0 * c0 + int(2) * c0 - int(1));
    let mut t: HashMap<usize, Rational> =
        HashMap::from([(0, int(0)), (1, int(1)), (2, c0.clone()), (3, d.clone())]);
    for n in 4..=max_n {
        let value = if n % 2 == 0 {
            c0 * &t[&(n / 2)] + &t[&(n / 2 - 1)]
        } else {
            let k = n.div_ceil(2);
            &t[&k] + (&d - c0) * &t[&(k - 1)]
        };
        t.insert(n, value);
    }
    (0..=max_n).map(|n| t[&n].clone()).collect()
}

#[test]
fn residuals_are_symmetric() {
    let mut table = SymbolicTable::new();
    for m in 2..=12u64 {
        for n in m..=(120 / m) {
            assert_eq!(
                residual(&mut table, m, n).unwrap(),
                residual(&mut table, n, m).unwrap(),
                "({m}, {n})"
            );
        }
    }
}

#[test]
fn non_surviving_value_breaks_nine() {
    let mut table = SymbolicTable::new();
    let num = residual_numerator(&mut table, 3, 3).unwrap();
    assert_ne!(num.eval(&int(2)), int(0));
}

#[test]
fn closed_branches_certify_at_two_hundred() {
    let mut branches = branch_analysis();
    certify_branches(&mut branches, 200);
    assert_eq!(branches[0].certified, Some(true));
    assert_eq!(branches[1].certified, Some(true));
    assert_eq!(branches[2].certified, None);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn symbolic_values_specialise_like_the_numeric_recursion(c0 in small_rational()) {
        let mut table = SymbolicTable::new();
        let expected = numeric_sequence(&c0, 96);
        for (n, value) in expected.iter().enumerate() {
            let got = table.get(n as u64).unwrap().eval(&c0);
            prop_assert_eq!(got.as_ref(), Some(value));
        }
    }
}
