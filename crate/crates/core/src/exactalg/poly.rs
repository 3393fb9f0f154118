use super::rational::Rational;
use super::AlgebraError;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Dense univariate polynomial over the rationals in the indeterminate `c`.
///
/// `coeffs[i]` is the coefficient of `c^i`. The zero polynomial is the empty
/// vector and no nonzero polynomial carries trailing zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    /// Builds a polynomial from ascending coefficients, stripping trailing zeros.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Ascending integer coefficients.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&k| Rational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(value: Rational) -> Self {
        Self::new(vec![value])
    }

    /// The indeterminate `c`.
    pub fn var() -> Self {
        Self::from_ints(&[0, 1])
    }

    /// The monic linear factor `c - root`.
    pub fn linear(root: &Rational) -> Self {
        Self::new(vec![-root.clone(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `c^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Degree, with `-1` for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for the zero polynomial and nonzero constants alike.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * k).collect(),
        }
    }

    /// Divides through by the leading coefficient. The zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, a| acc * x + a)
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn divrem(&self, divisor: &Poly) -> Result<(Poly, Poly), AlgebraError> {
        let lead = divisor.leading().ok_or(AlgebraError::DivisionByZero)?;
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let inv = lead.recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + dd] * &inv;
            if !q.is_zero() {
                for (j, b) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &q * b;
                }
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// True when `divisor` divides `self` with zero remainder.
    pub fn divisible_by(&self, divisor: &Poly) -> Result<bool, AlgebraError> {
        Ok(self.divrem(divisor)?.1.is_zero())
    }

    /// Exact quotient; errors only on a zero divisor. A nonzero remainder is discarded.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly, AlgebraError> {
        let (q, r) = self.divrem(divisor)?;
        debug_assert!(r.is_zero(), "inexact division");
        Ok(q)
    }

    /// Monic gcd by the Euclidean remainder sequence, each remainder made monic.
    pub fn gcd(f: &Poly, g: &Poly) -> Result<Poly, AlgebraError> {
        if f.is_zero() && g.is_zero() {
            return Err(AlgebraError::GcdOfZeros);
        }
        let mut a = f.monic();
        let mut b = g.monic();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b)?;
            a = b;
            b = r.monic();
        }
        Ok(a)
    }

    /// Equality up to a nonzero rational scalar.
    pub fn eq_up_to_scalar(&self, other: &Poly) -> bool {
        self.monic() == other.monic()
    }

    /// Multiplies by the lcm of the denominators and divides by the content,
    /// giving a primitive integer polynomial with positive leading coefficient.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        use num_integer::Integer;
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, a| acc.lcm(a.denom()));
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|a| (a * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, a| acc.gcd(a));
        if !content.is_zero() {
            let sign_fix = if ints.last().is_some_and(Signed::is_negative) {
                -content
            } else {
                content
            };
            for a in &mut ints {
                *a /= &sign_fix;
            }
        }
        ints
    }

    fn add_impl(&self, other: &Poly, negate: bool) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = other.coeffs.get(i);
            out.push(match (a, b, negate) {
                (Some(a), Some(b), false) => a + b,
                (Some(a), Some(b), true) => a - b,
                (Some(a), None, _) => a.clone(),
                (None, Some(b), false) => b.clone(),
                (None, Some(b), true) => -b,
                (None, None, _) => unreachable!(),
            });
        }
        Poly::new(out)
    }

    fn mul_impl(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    /// Non-negative integer power.
    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                $body(self, rhs)
            }
        }
        impl $trait<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                $body(&self, &rhs)
            }
        }
        impl $trait<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                $body(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &Poly, b: &Poly| a.add_impl(b, false));
forward_binop!(Sub, sub, |a: &Poly, b: &Poly| a.add_impl(b, true));
forward_binop!(Mul, mul, |a: &Poly, b: &Poly| a.mul_impl(b));

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// Descending powers, explicit `^`, no `*`: `3c^3 + c`, `(1/2)c^2 - 1/3`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (power, a) in self.coeffs.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let abs = a.abs();
            match (first, a.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            if power == 0 {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                if abs.is_integer() {
                    write!(f, "{abs}")?;
                } else {
                    write!(f, "({abs})")?;
                }
            }
            f.write_str("c")?;
            if power > 1 {
                write!(f, "^{power}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, ratio};

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn normalize_strips_trailing_zeros() {
        assert_eq!(p(&[0, 0]), Poly::zero());
        assert_eq!(p(&[0, 0]).coeffs().len(), 0);
        assert_eq!(p(&[0, 0]).degree(), -1);
        assert_eq!(p(&[-1, 2, 1]).coeffs(), &[int(-1), int(2), int(1)]);
        assert_eq!(p(&[5, 0, 0]).coeffs(), &[int(5)]);
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&Poly::zero() * &p(&[1, 2, 3]), Poly::zero());
        let c = Poly::var();
        let prod = &(&c * &p(&[-3, 1])) * &p(&[-1, 1]);
        assert_eq!(prod, p(&[0, 3, -4, 1]));
        let q = p(&[-1, 2, 1]);
        assert_eq!(&q * &q, p(&[1, -4, 2, 4, 1]));
        assert_eq!(q.pow(2), p(&[1, -4, 2, 4, 1]));
    }

    #[test]
    fn divrem_examples() {
        let f = p(&[-1, 2, 1]);
        assert_eq!(f.divrem(&Poly::one()).unwrap(), (f.clone(), Poly::zero()));
        let (q, r) = p(&[0, 1, 0, 3]).divrem(&f).unwrap();
        assert_eq!(q, p(&[-6, 3]));
        assert_eq!(r, p(&[-6, 16]));
        let (q, r) = p(&[0, 3, -4, 1]).divrem(&p(&[-3, 1])).unwrap();
        assert_eq!(q, p(&[0, -1, 1]));
        assert!(r.is_zero());
        assert_eq!(f.divrem(&Poly::zero()), Err(AlgebraError::DivisionByZero));
    }

    #[test]
    fn gcd_examples() {
        let f = p(&[2, 4]);
        assert_eq!(Poly::gcd(&f, &Poly::zero()).unwrap(), f.monic());
        assert_eq!(
            Poly::gcd(&p(&[0, 1, 0, 3]), &p(&[-1, 2, 1])).unwrap(),
            Poly::one()
        );
        assert_eq!(
            Poly::gcd(&Poly::zero(), &Poly::zero()),
            Err(AlgebraError::GcdOfZeros)
        );
        let h = p(&[1, 1]);
        assert_eq!(Poly::gcd(&h, &h).unwrap(), h);
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p(&[-1, 2, 1]).eval(&int(0)), int(-1));
        assert_eq!(p(&[0, 1, 0, 3]).eval(&int(3)), int(84));
        assert_eq!(p(&[-1, 1, 0, 2]).eval(&ratio(1, 2)), ratio(-1, 4));
    }

    #[test]
    fn rendering() {
        assert_eq!(p(&[0, 1, 0, 3]).to_string(), "3c^3 + c");
        assert_eq!(p(&[-1, 2, 1]).to_string(), "c^2 + 2c - 1");
        assert_eq!(p(&[-1, 1, 0, 2]).to_string(), "2c^3 + c - 1");
        assert_eq!(p(&[3, 0, -1]).to_string(), "-c^2 + 3");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(p(&[-3, 1]).to_string(), "c - 3");
        assert_eq!(p(&[0, 1]).to_string(), "c");
        let half = Poly::new(vec![ratio(-1, 3), int(0), ratio(1, 2)]);
        assert_eq!(half.to_string(), "(1/2)c^2 - 1/3");
    }

    #[test]
    fn primitive_integer_form() {
        let f = Poly::new(vec![ratio(-1, 2), ratio(1, 3), ratio(-2, 3)]);
        let ints: Vec<i64> = f
            .primitive_integer()
            .iter()
            .map(|b| i64::try_from(b).unwrap())
            .collect();
        assert_eq!(ints, vec![3, -2, 4]);
    }

    #[test]
    fn scalar_equality() {
        assert!(p(&[2, 4]).eq_up_to_scalar(&p(&[-1, -2])));
        assert!(!p(&[2, 4]).eq_up_to_scalar(&p(&[1, 1])));
        assert!(Poly::zero().eq_up_to_scalar(&Poly::zero()));
    }
}
