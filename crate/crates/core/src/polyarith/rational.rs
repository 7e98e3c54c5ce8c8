use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{IntPolynomial, PolyError};

/// Reduced quotient of integer polynomials.
///
/// Canonical form: the polynomial gcd of numerator and denominator is a unit,
/// their integer contents are coprime, and the denominator's leading
/// coefficient is positive. The zero function is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: IntPolynomial,
    den: IntPolynomial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl RationalFunction {
    pub fn new(num: IntPolynomial, den: IntPolynomial) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::ZeroDenominator);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn from_poly(p: IntPolynomial) -> Self {
        RationalFunction {
            num: p,
            den: IntPolynomial::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(IntPolynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(IntPolynomial::one())
    }

    fn reduce(num: IntPolynomial, den: IntPolynomial) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den).primitive_part();
        let (mut num, mut den) = if g.is_constant() {
            (num, den)
        } else {
            (
                num.exact_divide(&g).expect("gcd divides numerator"),
                den.exact_divide(&g).expect("gcd divides denominator"),
            )
        };
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = IntPolynomial::new(num.coeffs().iter().map(|a| a / &c).collect());
            den = IntPolynomial::new(den.coeffs().iter().map(|a| a / &c).collect());
        }
        if den.leading().is_some_and(|l| l.is_negative()) {
            num = -num;
            den = -den;
        }
        RationalFunction { num, den }
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::reduce(
            &(&self.num * &other.den) + &(&other.num * &self.den),
            &self.den * &other.den,
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::reduce(&self.num * &other.num, &self.den * &other.den)
    }

    pub fn recip(&self) -> Result<Self, PolyError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// `self(1/t)`, with both parts multiplied by `t^D`, `D = max(deg num, deg den)`.
    pub fn reciprocal_substitution(&self) -> Result<Self, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroInput);
        }
        let dn = self.num.degree().unwrap_or(0);
        let dd = self.den.degree().unwrap_or(0);
        let d = dn.max(dd);
        let flip = |p: &IntPolynomial, deg: usize| {
            let mut c = p.coeffs().to_vec();
            c.reverse();
            IntPolynomial::new(c).shift(d - deg)
        };
        Ok(Self::reduce(flip(&self.num, dn), flip(&self.den, dd)))
    }

    /// First `n` power-series coefficients at `t = 0`, by exact long division.
    pub fn taylor_coefficients(&self, n: usize) -> Result<Vec<BigInt>, PolyError> {
        let d0 = self.den.constant_term();
        if d0.is_zero() {
            return Err(PolyError::PoleAtOrigin);
        }
        let mut out: Vec<BigInt> = Vec::with_capacity(n);
        let den = self.den.coeffs();
        for k in 0..n {
            let mut acc = self.num.coeff(k);
            for j in 1..den.len().min(k + 1) {
                acc -= &den[j] * &out[k - j];
            }
            let (q, r) = acc.div_rem(&d0);
            if !r.is_zero() {
                return Err(PolyError::NonIntegralCoefficient { index: k });
            }
            out.push(q);
        }
        Ok(out)
    }
}

/// Exact signed sum in canonical form.
pub fn rational_sum<'a, I>(terms: I) -> RationalFunction
where
    I: IntoIterator<Item = (Sign, &'a RationalFunction)>,
{
    terms
        .into_iter()
        .fold(RationalFunction::zero(), |acc, (sign, rf)| match sign {
            Sign::Plus => acc.add(rf),
            Sign::Minus => acc.sub(rf),
        })
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn canonical_form() {
        let r = rf(&[2, 2], &[-2, 0, 2]); // (2+2t)/(2t^2-2) = 1/(t-1)
        assert_eq!(r.numerator(), &p(&[1]));
        assert_eq!(r.denominator(), &p(&[-1, 1]));
        let s = rf(&[1], &[1, -1]); // 1/(1-t) = -1/(t-1)
        assert_eq!(s.numerator(), &p(&[-1]));
        assert_eq!(s.denominator(), &p(&[-1, 1]));
        assert!(RationalFunction::new(p(&[1]), IntPolynomial::zero()).is_err());
    }

    #[test]
    fn signed_sums() {
        let one = RationalFunction::one();
        let two_over = rf(&[2], &[1, 1]);
        let s = rational_sum([(Sign::Plus, &one), (Sign::Minus, &two_over)]);
        assert_eq!(s, rf(&[-1, 1], &[1, 1]));

        let q = rf(&[3, 1], &[1, 0, 2]);
        assert_eq!(rational_sum([(Sign::Plus, &q)]), q);

        let c = rf(&[1], &[-1, 1]);
        let z = rational_sum([(Sign::Plus, &c), (Sign::Minus, &c)]);
        assert_eq!(z.numerator(), &IntPolynomial::zero());
        assert_eq!(z.denominator(), &IntPolynomial::one());
    }

    #[test]
    fn reciprocal_substitution_examples() {
        let r = rf(&[-1, 1], &[1, 1]);
        assert_eq!(r.reciprocal_substitution().unwrap(), rf(&[1, -1], &[1, 1]));
        let c = rf(&[7], &[1]);
        assert_eq!(c.reciprocal_substitution().unwrap(), c);
        let x = rf(&[1, 0, 3], &[2, 5]);
        assert_eq!(
            x.reciprocal_substitution().unwrap().reciprocal_substitution().unwrap(),
            x
        );
        assert!(RationalFunction::zero().reciprocal_substitution().is_err());
    }

    #[test]
    fn taylor_examples() {
        let d = rf(&[1, 1], &[1, -1]);
        let ints = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(d.taylor_coefficients(4).unwrap(), ints(&[1, 2, 2, 2]));
        let a2 = RationalFunction::from_poly(p(&[1, 2, 2, 1]));
        assert_eq!(a2.taylor_coefficients(4).unwrap(), ints(&[1, 2, 2, 1]));
        assert_eq!(RationalFunction::one().taylor_coefficients(3).unwrap(), ints(&[1, 0, 0]));
        assert!(matches!(
            rf(&[1], &[0, 1]).taylor_coefficients(2),
            Err(PolyError::PoleAtOrigin)
        ));
        assert!(matches!(
            rf(&[1], &[2, 1]).taylor_coefficients(2),
            Err(PolyError::NonIntegralCoefficient { index: 0 })
        ));
    }
}
