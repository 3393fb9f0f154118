mod common;

use common::*;
use num_traits::{One, Zero};
use proptest::prelude::*;
use trirule::exactalg::{extract_rational_roots, rational_roots, RatFunc, RfOp};
use trirule::Poly;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn rational_field_axioms(a in small_rational(), b in small_rational(), c in small_rational()) {
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * a.recip()).is_one());
        }
    }

    #[test]
    fn divrem_reconstructs(f in poly(8), g in nonzero_poly(5)) {
        let (q, r) = f.divrem(&g).unwrap();
        prop_assert_eq!(&(&q * &g) + &r, f);
        prop_assert!(r.degree() < g.degree());
    }

    #[test]
    fn gcd_divides_both(f in poly(6), g in poly(6)) {
        prop_assume!(!(f.is_zero() && g.is_zero()));
        let d = Poly::gcd(&f, &g).unwrap();
        prop_assert!(d.leading().unwrap().is_one());
        prop_assert!(f.divisible_by(&d).unwrap());
        prop_assert!(g.divisible_by(&d).unwrap());
    }

    #[test]
    fn ratfunc_canonical_form_is_unique(n in poly(4), d in nonzero_poly(4), k in nonzero_poly(3)) {
        let base = RatFunc::new(n.clone(), d.clone()).unwrap();
        let scaled = RatFunc::new(&n * &k, &d * &k).unwrap();
        prop_assert_eq!(&scaled, &base);
        prop_assert!(base.den().leading().unwrap().is_one());
        if !base.is_zero() {
            prop_assert!(Poly::gcd(base.num(), base.den()).unwrap().is_constant());
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in ratfunc(), b in ratfunc(), x in small_rational(), op in 0usize..3) {
        let (ea, eb) = (a.eval(&x), b.eval(&x));
        prop_assume!(ea.is_some() && eb.is_some());
        let (ea, eb) = (ea.unwrap(), eb.unwrap());
        let (op, expected) = match op {
            0 => (RfOp::Add, &ea + &eb),
            1 => (RfOp::Sub, &ea - &eb),
            _ => (RfOp::Mul, &ea * &eb),
        };
        prop_assert_eq!(RatFunc::apply(op, &a, &b).eval(&x), Some(expected));
    }

    #[test]
    fn roots_are_roots_and_cofactor_is_root_free((f, planted) in rooted_poly()) {
        let fact = extract_rational_roots(&f).unwrap();
        for r in &fact.roots {
            prop_assert!(f.eval(&r.root).is_zero());
        }
        for p in &planted {
            prop_assert!(fact.roots.iter().any(|r| &r.root == p));
        }
        let rebuilt = fact.roots.iter().fold(fact.cofactor.clone(), |acc, r| {
            &acc * &Poly::linear(&r.root).pow(r.multiplicity)
        });
        prop_assert_eq!(rebuilt, f);
        if !fact.cofactor.is_constant() {
            prop_assert!(rational_roots(&fact.cofactor).unwrap().is_empty());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn gcd_scales_with_common_factor(f in poly(4), g in poly(4), h in nonzero_poly(3)) {
        prop_assume!(!(f.is_zero() && g.is_zero()));
        let lhs = Poly::gcd(&(&f * &h), &(&g * &h)).unwrap();
        let rhs = &h.monic() * &Poly::gcd(&f, &g).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
