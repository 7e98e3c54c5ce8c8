use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::PolyError;

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
///
/// Coefficients are stored in ascending degree order and never carry a
/// trailing zero, so the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// The linear polynomial `t - 1`.
    pub fn t_minus_one() -> Self {
        Self::from_i64s(&[-1, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Coefficient of `t^k`; zero beyond the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    }

    /// Sign of `p(x)` for rational `x`, computed without forming the rational value.
    pub fn sign_at(&self, x: &BigRational) -> i32 {
        // b^n p(a/b) is an integer with the same sign as p(a/b) because b > 0.
        let (a, b) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut bpow = BigInt::one();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            acc = acc * a + c * &bpow;
            if i > 0 {
                bpow *= b;
            }
        }
        sign_of(&acc)
    }

    /// gcd of the coefficients, nonnegative; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divide out the content and make the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() {
            return Self::zero();
        }
        let c = if self.leading().is_some_and(|l| l.is_negative()) { -c } else { c };
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|a| a / &c).collect(),
        }
    }

    /// Division over the integers; fails unless `q` divides `self` exactly.
    pub fn exact_divide(&self, q: &IntPolynomial) -> Result<IntPolynomial, PolyError> {
        if q.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let dq = q.degree().unwrap_or(0);
        let lq = q.leading().cloned().unwrap_or_default();
        let mut rem = self.coeffs.clone();
        let Some(dp) = self.degree() else {
            return Ok(Self::zero());
        };
        if dp < dq {
            return Err(PolyError::NotDivisible {
                remainder: self.clone(),
            });
        }
        let mut quot = vec![BigInt::zero(); dp - dq + 1];
        for k in (0..=dp - dq).rev() {
            let top = &rem[k + dq];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(&lq);
            if !r.is_zero() {
                return Err(PolyError::NotDivisible {
                    remainder: IntPolynomial::new(rem),
                });
            }
            for (j, qc) in q.coeffs.iter().enumerate() {
                rem[k + j] -= &c * qc;
            }
            quot[k] = c;
        }
        let remainder = IntPolynomial::new(rem);
        if remainder.is_zero() {
            Ok(IntPolynomial::new(quot))
        } else {
            Err(PolyError::NotDivisible { remainder })
        }
    }

    /// Pseudo-remainder together with the number of elimination steps `s`,
    /// so that the result is congruent to `lc(q)^s * self` modulo `q`.
    pub fn pseudo_rem(&self, q: &IntPolynomial) -> (IntPolynomial, u32) {
        let dq = q.degree().expect("pseudo_rem by zero polynomial");
        let lq = q.leading().unwrap().clone();
        let mut r = self.clone();
        let mut steps = 0;
        while let Some(dr) = r.degree() {
            if dr < dq {
                break;
            }
            let lr = r.leading().unwrap().clone();
            r = &r.scale(&lq) - &q.scale(&lr).shift(dr - dq);
            steps += 1;
        }
        (r, steps)
    }

    /// Greatest common divisor with positive leading coefficient
    /// (primitive part times the gcd of contents).
    pub fn gcd(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() {
            return normalize_sign(other.clone());
        }
        if other.is_zero() {
            return normalize_sign(self.clone());
        }
        let cont = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let (r, _) = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part().scale(&cont)
    }

    /// Square-free decomposition `self = c * prod_i f_i^i` (Yun); entry `i-1`
    /// holds `f_i`, each primitive with positive leading coefficient.
    pub fn squarefree_factors(&self) -> Vec<IntPolynomial> {
        let p = self.primitive_part();
        if p.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let mut out = Vec::new();
        let dp = p.derivative();
        let mut a = p.gcd(&dp).primitive_part();
        let mut b = p.exact_divide(&a).expect("gcd divides").primitive_part();
        let mut c = dp.exact_divide(&a).expect("gcd divides derivative");
        let mut d = &c - &b.derivative();
        while b.degree().unwrap_or(0) > 0 {
            a = b.gcd(&d).primitive_part();
            out.push(a.clone());
            b = b.exact_divide(&a).expect("gcd divides").primitive_part();
            c = d.exact_divide(&a).expect("gcd divides");
            d = &c - &b.derivative();
        }
        while out.last().is_some_and(|f| f.is_constant()) {
            out.pop();
        }
        out
    }

    /// Square-free part, primitive with positive leading coefficient.
    pub fn squarefree_part(&self) -> IntPolynomial {
        let p = self.primitive_part();
        if p.is_constant() {
            return p;
        }
        let g = p.gcd(&p.derivative());
        p.exact_divide(&g).expect("gcd divides").primitive_part()
    }

    pub fn pow(&self, e: u32) -> IntPolynomial {
        (0..e).fold(IntPolynomial::one(), |acc, _| &acc * self)
    }
}

fn normalize_sign(p: IntPolynomial) -> IntPolynomial {
    if p.leading().is_some_and(|l| l.is_negative()) {
        -p
    } else {
        p
    }
}

pub(crate) fn sign_of(x: &BigInt) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: &IntPolynomial) -> IntPolynomial {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// `[n] = 1 + t + ... + t^(n-1)`.
pub fn bracket(n: u32) -> Result<IntPolynomial, PolyError> {
    if n == 0 {
        return Err(PolyError::InvalidBracket(n));
    }
    Ok(IntPolynomial::new(vec![BigInt::one(); n as usize]))
}

/// `[n_1, ..., n_k] = [n_1] ... [n_k]`; the empty product is 1.
pub fn bracket_product(ns: &[u32]) -> Result<IntPolynomial, PolyError> {
    ns.iter().try_fold(IntPolynomial::one(), |acc, &n| Ok(&acc * &bracket(n)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn brackets() {
        assert_eq!(bracket(2).unwrap(), p(&[1, 1]));
        assert_eq!(bracket(1).unwrap(), p(&[1]));
        assert_eq!(bracket(4).unwrap(), p(&[1, 1, 1, 1]));
        assert!(matches!(bracket(0), Err(PolyError::InvalidBracket(0))));
    }

    #[test]
    fn bracket_products() {
        assert_eq!(bracket_product(&[2, 3]).unwrap(), p(&[1, 2, 2, 1]));
        assert_eq!(bracket_product(&[]).unwrap(), IntPolynomial::one());
        assert_eq!(
            bracket_product(&[2, 6, 10]).unwrap().eval(&BigInt::one()),
            BigInt::from(120)
        );
        assert!(bracket_product(&[2, 0]).is_err());
    }

    #[test]
    fn zero_has_no_degree() {
        assert_eq!(IntPolynomial::zero().degree(), None);
        assert_eq!(p(&[0, 0]).degree(), None);
        assert_eq!(p(&[3, 0, 0]).degree(), Some(0));
    }

    #[test]
    fn exact_division() {
        assert_eq!(p(&[-1, 0, 1]).exact_divide(&p(&[-1, 1])).unwrap(), p(&[1, 1]));
        let q = p(&[5, -3, 2]);
        assert_eq!(q.exact_divide(&IntPolynomial::one()).unwrap(), q);
        match p(&[1, 0, 1]).exact_divide(&p(&[-1, 1])) {
            Err(PolyError::NotDivisible { remainder }) => assert!(!remainder.is_zero()),
            other => panic!("unexpected {other:?}"),
        }
        // divisible over Q but not over Z
        assert!(p(&[1, 1]).exact_divide(&p(&[1, 2])).is_err());
    }

    #[test]
    fn gcd_and_squarefree() {
        let a = p(&[-1, 1]); // t - 1
        let b = p(&[1, 1]); // t + 1
        let x = &(&a * &a) * &b;
        let y = &(&a * &b) * &p(&[2, 0, 1]);
        assert_eq!(x.gcd(&y), &a * &b);
        assert_eq!(x.squarefree_part(), &a * &b);
        assert_eq!(x.squarefree_factors(), vec![b.clone(), a.clone()]);
        assert_eq!(p(&[6, 4]).gcd(&p(&[9, 6])), p(&[3, 2]));
    }

    #[test]
    fn sign_at_rational() {
        let q = p(&[-1, 4, 5]); // 5t^2 + 4t - 1
        let fifth = BigRational::new(1.into(), 5.into());
        assert_eq!(q.sign_at(&fifth), 0);
        assert_eq!(q.sign_at(&BigRational::zero()), -1);
        assert_eq!(q.sign_at(&BigRational::one()), 1);
    }
}
