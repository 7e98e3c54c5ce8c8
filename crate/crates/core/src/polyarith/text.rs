//! ASCII polynomial syntax in the variable `t`, e.g. `5t^2+4t-1`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{IntPolynomial, PolyError};

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if c.is_negative() {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl FromStr for IntPolynomial {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, PolyError> {
        // whitespace may separate terms and operators but not split a term
        let raw: Vec<char> = s.chars().collect();
        let mut src: Vec<char> = Vec::with_capacity(raw.len());
        let mut gap = false;
        for &c in &raw {
            if c.is_whitespace() {
                gap = true;
                continue;
            }
            if gap && (c.is_ascii_alphanumeric() || c == '^')
                && src.last().is_some_and(|p: &char| p.is_ascii_alphanumeric() || *p == '^')
            {
                return Err(PolyError::Parse(format!("unexpected whitespace inside a term in {s:?}")));
            }
            gap = false;
            src.push(c);
        }
        if src.is_empty() {
            return Err(PolyError::Parse("empty polynomial".into()));
        }
        let err = |pos: usize, msg: &str| PolyError::Parse(format!("{msg} at offset {pos} in {s:?}"));
        let mut coeffs: Vec<BigInt> = Vec::new();
        let mut i = 0;
        while i < src.len() {
            let mut negative = false;
            if src[i] == '+' || src[i] == '-' {
                negative = src[i] == '-';
                i += 1;
            } else if i > 0 {
                return Err(err(i, "expected '+' or '-'"));
            }
            let start = i;
            while i < src.len() && src[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = src[start..i].iter().collect();
            let mut coeff = if digits.is_empty() {
                None
            } else {
                Some(digits.parse::<BigInt>().map_err(|_| err(start, "bad integer"))?)
            };
            if coeff.is_some() && i < src.len() && src[i] == '*' {
                i += 1;
                if i >= src.len() || src[i] != 't' {
                    return Err(err(i, "expected 't' after '*'"));
                }
            }
            let mut power = 0usize;
            if i < src.len() && src[i] == 't' {
                i += 1;
                power = 1;
                if i < src.len() && src[i] == '^' {
                    i += 1;
                    let ps = i;
                    while i < src.len() && src[i].is_ascii_digit() {
                        i += 1;
                    }
                    if ps == i {
                        return Err(err(ps, "expected exponent"));
                    }
                    let e: String = src[ps..i].iter().collect();
                    power = e.parse().map_err(|_| err(ps, "exponent too large"))?;
                }
                coeff.get_or_insert_with(BigInt::one);
            }
            let Some(mut c) = coeff else {
                return Err(err(start, "expected a term"));
            };
            if negative {
                c = -c;
            }
            if coeffs.len() <= power {
                coeffs.resize(power + 1, BigInt::zero());
            }
            coeffs[power] += c;
        }
        Ok(IntPolynomial::new(coeffs))
    }
}
