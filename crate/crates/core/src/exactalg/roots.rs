use super::poly::Poly;
use super::rational::Rational;
use super::AlgebraError;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

/// A rational root together with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalRoot {
    pub root: Rational,
    pub multiplicity: u32,
}

/// `f = cofactor * prod (c - root)^multiplicity`, where the cofactor has no
/// rational roots and keeps the scalar content of `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootFactorization {
    pub roots: Vec<RationalRoot>,
    pub cofactor: Poly,
}

/// Rational roots of `f` with multiplicities, in ascending order.
pub fn rational_roots(f: &Poly) -> Result<Vec<RationalRoot>, AlgebraError> {
    Ok(extract_rational_roots(f)?.roots)
}

/// Finds every rational root by the rational root theorem and deflates it out.
///
/// `f` is first scaled to a primitive integer polynomial; every candidate
/// `±p/q` with `p | a_0` and `q | a_n` is tested, zero roots being split off
/// beforehand so that `a_0 != 0`.
pub fn extract_rational_roots(f: &Poly) -> Result<RootFactorization, AlgebraError> {
    if f.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let ints = f.primitive_integer();
    let zero_mult = ints.iter().take_while(|a| a.is_zero()).count();
    let trimmed = &ints[zero_mult..];

    let mut roots = Vec::new();
    let mut cofactor = f.clone();
    if zero_mult > 0 {
        cofactor = Poly::new(f.coeffs()[zero_mult..].to_vec());
        roots.push(RationalRoot {
            root: Rational::zero(),
            multiplicity: zero_mult as u32,
        });
    }

    if trimmed.len() > 1 {
        let constant = trimmed[0].magnitude();
        let leading = trimmed[trimmed.len() - 1].magnitude();
        let qs = divisors(leading);
        for p in divisors(constant) {
            for q in &qs {
                if !p.gcd(q).is_one() {
                    continue;
                }
                for sign in [-1, 1] {
                    if cofactor.degree() < 1 {
                        break;
                    }
                    let candidate = Rational::new(
                        BigInt::from(sign) * BigInt::from(p.clone()),
                        BigInt::from(q.clone()),
                    );
                    let multiplicity = deflate(&mut cofactor, &candidate);
                    if multiplicity > 0 {
                        roots.push(RationalRoot {
                            root: candidate,
                            multiplicity,
                        });
                    }
                }
            }
        }
    }
    roots.sort_by(|a, b| a.root.cmp(&b.root));
    Ok(RootFactorization { roots, cofactor })
}

/// Divides out `(c - root)` as many times as it divides exactly.
fn deflate(f: &mut Poly, root: &Rational) -> u32 {
    let linear = Poly::linear(root);
    let mut multiplicity = 0;
    while f.degree() >= 1 && f.eval(root).is_zero() {
        let (q, r) = f.divrem(&linear).expect("linear factor is nonzero");
        debug_assert!(r.is_zero());
        *f = q;
        multiplicity += 1;
    }
    multiplicity
}

/// Positive divisors of `n > 0` by trial division.
fn divisors(n: &BigUint) -> Vec<BigUint> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = BigUint::one();
    while &i * &i <= *n {
        if (n % &i).is_zero() {
            let pair = n / &i;
            if pair != i {
                large.push(pair);
            }
            small.push(i.clone());
        }
        i += 1u32;
    }
    small.extend(large.into_iter().rev());
    small
}
