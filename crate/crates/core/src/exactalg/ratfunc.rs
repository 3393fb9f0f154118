use super::poly::Poly;
use super::rational::Rational;
use super::AlgebraError;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Quotient of two polynomials in `c`, kept in lowest terms with a monic
/// denominator. Zero is `0/1`.
///
/// Canonical form makes the representation unique, so the derived
/// `PartialEq` is equality of rational functions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

/// Field operation selector for [`RatFunc::apply`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RfOp {
    Add,
    Sub,
    Mul,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = Poly::gcd(&num, &den).expect("denominator is nonzero");
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (
                num.divrem(&g).expect("gcd is nonzero").0,
                den.divrem(&g).expect("gcd is nonzero").0,
            )
        };
        let lc = den.leading().expect("denominator is nonzero").recip();
        RatFunc {
            num: num.scale(&lc),
            den: den.scale(&lc),
        }
    }

    pub fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn from_poly(num: Poly) -> Self {
        RatFunc {
            num,
            den: Poly::one(),
        }
    }

    pub fn constant(value: Rational) -> Self {
        Self::from_poly(Poly::constant(value))
    }

    /// The indeterminate `c`.
    pub fn var() -> Self {
        Self::from_poly(Poly::var())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == 0
    }

    /// Value at `x`, or `None` when `x` is a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let den = self.den.eval(x);
        if den.is_zero() {
            return None;
        }
        Some(self.num.eval(x) / den)
    }

    pub fn apply(op: RfOp, a: &RatFunc, b: &RatFunc) -> RatFunc {
        match op {
            RfOp::Add => a.add_impl(b, false),
            RfOp::Sub => a.add_impl(b, true),
            RfOp::Mul => a.mul_impl(b),
        }
    }

    /// Sum with cancellation restricted to the gcd of the denominators.
    fn add_impl(&self, other: &RatFunc, negate: bool) -> RatFunc {
        let rhs_num = if negate {
            -&other.num
        } else {
            other.num.clone()
        };
        if self.is_zero() {
            return RatFunc {
                num: rhs_num,
                den: other.den.clone(),
            };
        }
        if other.is_zero() {
            return self.clone();
        }
        let g = Poly::gcd(&self.den, &other.den).expect("denominators are nonzero");
        if g.is_constant() {
            let num = &(&self.num * &other.den) + &(&rhs_num * &self.den);
            return Self::monic_den(num, &self.den * &other.den);
        }
        let left = exact_quotient(&self.den, &g);
        let right = exact_quotient(&other.den, &g);
        let num = &(&self.num * &right) + &(&rhs_num * &left);
        if num.is_zero() {
            return Self::zero();
        }
        let h = Poly::gcd(&num, &g).expect("numerator is nonzero");
        if h.is_constant() {
            Self::monic_den(num, &left * &other.den)
        } else {
            Self::monic_den(
                exact_quotient(&num, &h),
                &left * &exact_quotient(&other.den, &h),
            )
        }
    }

    /// Product with cross-cancellation of the coprime inputs.
    fn mul_impl(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let g1 = Poly::gcd(&self.num, &other.den).expect("nonzero operands");
        let g2 = Poly::gcd(&other.num, &self.den).expect("nonzero operands");
        let num = &exact_quotient(&self.num, &g1) * &exact_quotient(&other.num, &g2);
        let den = &exact_quotient(&self.den, &g2) * &exact_quotient(&other.den, &g1);
        Self::monic_den(num, den)
    }

    /// Rescales a coprime pair so the denominator is monic.
    fn monic_den(num: Poly, den: Poly) -> RatFunc {
        if num.is_zero() {
            return Self::zero();
        }
        match den.leading() {
            Some(lc) if lc.is_one() => RatFunc { num, den },
            Some(lc) => {
                let inv = lc.recip();
                RatFunc {
                    num: num.scale(&inv),
                    den: den.scale(&inv),
                }
            }
            None => unreachable!("denominator is nonzero"),
        }
    }

    pub fn scale(&self, k: &Rational) -> RatFunc {
        if k.is_zero() {
            return Self::zero();
        }
        RatFunc {
            num: self.num.scale(k),
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $op:expr) => {
        impl $trait<&RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &RatFunc) -> RatFunc {
                RatFunc::apply($op, self, rhs)
            }
        }
        impl $trait<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                RatFunc::apply($op, &self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, RfOp::Add);
forward_binop!(Sub, sub, RfOp::Sub);
forward_binop!(Mul, mul, RfOp::Mul);

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

/// `(num)/(den)`, or just the numerator when the denominator is `1`.
impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

fn exact_quotient(f: &Poly, g: &Poly) -> Poly {
    if g.degree() == 0 {
        return f.scale(&g.coeffs()[0].recip());
    }
    f.divrem(g).expect("divisor is nonzero").0
}
