use super::poly::Poly;
use super::ratfunc::RatFunc;
use std::fmt;
use std::ops::{Add, Mul, Sub};

/// Polynomial in a second indeterminate `d` with coefficients in `Q[c]`.
///
/// `coeffs[j]` is the coefficient of `d^j`; no trailing zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly2 {
    coeffs: Vec<Poly>,
}

impl Poly2 {
    pub fn new(mut coeffs: Vec<Poly>) -> Self {
        while coeffs.last().is_some_and(Poly::is_zero) {
            coeffs.pop();
        }
        Poly2 { coeffs }
    }

    pub fn zero() -> Self {
        Poly2 { coeffs: Vec::new() }
    }

    /// A polynomial in `c` alone.
    pub fn from_c(p: Poly) -> Self {
        Self::new(vec![p])
    }

    /// The indeterminate `d`.
    pub fn var_d() -> Self {
        Self::new(vec![Poly::zero(), Poly::one()])
    }

    /// The indeterminate `c`.
    pub fn var_c() -> Self {
        Self::from_c(Poly::var())
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    /// Coefficient of `d^j`.
    pub fn coeff(&self, j: usize) -> Poly {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    /// Degree in `d`, `-1` for zero.
    pub fn degree_d(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Substitutes a rational function of `c` for `d`.
    pub fn eval_d(&self, d: &RatFunc) -> RatFunc {
        self.coeffs.iter().rev().fold(RatFunc::zero(), |acc, a| {
            &(&acc * d) + &RatFunc::from_poly(a.clone())
        })
    }

    fn add_impl(&self, other: &Poly2, negate: bool) -> Poly2 {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly2::new(
            (0..n)
                .map(|j| {
                    let (a, b) = (self.coeff(j), other.coeff(j));
                    if negate {
                        a - b
                    } else {
                        a + b
                    }
                })
                .collect(),
        )
    }

    fn mul_impl(&self, other: &Poly2) -> Poly2 {
        if self.is_zero() || other.is_zero() {
            return Poly2::zero();
        }
        let mut out = vec![Poly::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly2::new(out)
    }
}

impl Add<&Poly2> for &Poly2 {
    type Output = Poly2;
    fn add(self, rhs: &Poly2) -> Poly2 {
        self.add_impl(rhs, false)
    }
}

impl Sub<&Poly2> for &Poly2 {
    type Output = Poly2;
    fn sub(self, rhs: &Poly2) -> Poly2 {
        self.add_impl(rhs, true)
    }
}

impl Mul<&Poly2> for &Poly2 {
    type Output = Poly2;
    fn mul(self, rhs: &Poly2) -> Poly2 {
        self.mul_impl(rhs)
    }
}

/// Descending powers of `d`, each coefficient parenthesised: `(c^2 + 2c - 1)d + (-3c^3 - c)`.
impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (j, a) in self.coeffs.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "({a})")?,
                1 => write!(f, "({a})d")?,
                _ => write!(f, "({a})d^{j}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_substitution() {
        let c = Poly2::var_c();
        let d = Poly2::var_d();
        // (d - c) * c = cd - c^2
        let e = &(&d - &c) * &c;
        assert_eq!(e.coeff(0), Poly::from_ints(&[0, 0, -1]));
        assert_eq!(e.coeff(1), Poly::from_ints(&[0, 1]));
        assert_eq!(e.degree_d(), 1);
        assert!((&e - &e).is_zero());

        let dval =
            RatFunc::new(Poly::from_ints(&[0, 1, 0, 3]), Poly::from_ints(&[-1, 2, 1])).unwrap();
        let sq = (&d * &d).eval_d(&dval);
        assert_eq!(sq, &dval * &dval);
        assert_eq!(e.to_string(), "(c)d + (-c^2)");
    }
}
