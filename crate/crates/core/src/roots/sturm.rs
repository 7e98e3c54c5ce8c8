use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::RootEnclosure;
use crate::polyarith::IntPolynomial;

/// Sturm sequence of a square-free polynomial. Remainders are scaled by
/// positive constants only, so sign patterns are preserved.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<IntPolynomial>,
}

impl SturmChain {
    pub fn new(p: &IntPolynomial) -> Self {
        let mut chain = vec![p.clone()];
        let d = p.derivative();
        if !d.is_zero() {
            chain.push(d);
        }
        while chain.len() >= 2 {
            let a = &chain[chain.len() - 2];
            let b = &chain[chain.len() - 1];
            if b.is_constant() {
                break;
            }
            let (r, steps) = a.pseudo_rem(b);
            if r.is_zero() {
                break;
            }
            // lc(b)^steps * a = q * b + r; the true remainder is r / lc(b)^steps
            let flip = b.leading().unwrap().is_negative() && steps % 2 == 1;
            let next = if flip { r } else { -r };
            let c = next.content();
            chain.push(IntPolynomial::new(next.coeffs().iter().map(|x| x / &c).collect()));
        }
        SturmChain { chain }
    }

    pub fn variations(&self, x: &BigRational) -> usize {
        let mut last = 0;
        let mut count = 0;
        for q in &self.chain {
            let s = q.sign_at(x);
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    pub fn count(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations(a).saturating_sub(self.variations(b))
    }
}

/// Integer `B` with every real root strictly inside `(-B, B)`.
pub fn cauchy_bound(p: &IntPolynomial) -> BigInt {
    let lc = p.leading().expect("nonzero polynomial").abs();
    let max = p.coeffs().iter().map(|c| c.abs()).max().unwrap_or_default();
    (max + &lc - 1u32) / &lc + 2u32
}

fn midpoint(a: &BigRational, b: &BigRational) -> BigRational {
    (a + b) / BigRational::from_integer(BigInt::from(2))
}

/// Isolating intervals for the distinct real roots of a square-free `p`,
/// in increasing order. Each entry is `(lo, hi)`; `lo == hi` marks an exact root.
pub(crate) fn isolate_squarefree(p: &IntPolynomial) -> Vec<(BigRational, BigRational)> {
    if p.is_constant() {
        return Vec::new();
    }
    let chain = SturmChain::new(p);
    let b = BigRational::from_integer(cauchy_bound(p));
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        match chain.count(&lo, &hi) {
            0 => {}
            1 => {
                if p.sign_at(&hi) == 0 {
                    out.push((hi.clone(), hi));
                } else {
                    out.push((lo, hi));
                }
            }
            _ => {
                let mid = midpoint(&lo, &hi);
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    out.into_iter().map(|iv| sharpen(p, iv)).collect()
}

/// Shrink an isolating interval of a square-free `p` (with `p(hi) != 0`)
/// until its width is at most `width`, stopping early on an exact root.
pub(crate) fn refine(p: &IntPolynomial, iv: (BigRational, BigRational), width: &BigRational) -> (BigRational, BigRational) {
    let (mut lo, mut hi) = iv;
    if lo == hi {
        return (lo, hi);
    }
    let s_hi = p.sign_at(&hi);
    while &(&hi - &lo) > width {
        let mid = midpoint(&lo, &hi);
        match p.sign_at(&mid) {
            0 => return (mid.clone(), mid),
            s if s == s_hi => hi = mid,
            _ => lo = mid,
        }
    }
    (lo, hi)
}

/// Rational roots of a primitive square-free `p` have the form `A / lc(p)`.
/// Narrow below `1 / |lc|` and test the single candidate exactly.
fn sharpen(p: &IntPolynomial, iv: (BigRational, BigRational)) -> (BigRational, BigRational) {
    if iv.0 == iv.1 {
        return iv;
    }
    let lc = p.leading().unwrap().abs();
    let w = BigRational::new(BigInt::one(), &lc * 2u32);
    let (lo, hi) = refine(p, iv, &w);
    if lo == hi {
        return (lo, hi);
    }
    let lcr = BigRational::from_integer(lc.clone());
    let a = (&hi * &lcr).floor();
    let candidate = a / lcr;
    if candidate > lo && candidate < hi && p.sign_at(&candidate) == 0 {
        return (candidate.clone(), candidate);
    }
    (lo, hi)
}

/// Multiplicity of the root enclosed by `iv` among the square-free factors.
pub(crate) fn multiplicity(factors: &[IntPolynomial], iv: &(BigRational, BigRational)) -> u32 {
    for (i, f) in factors.iter().enumerate() {
        let hit = if iv.0 == iv.1 {
            f.sign_at(&iv.0) == 0
        } else {
            f.sign_at(&iv.1) != 0 && SturmChain::new(f).count(&iv.0, &iv.1) == 1
        };
        if hit {
            return i as u32 + 1;
        }
    }
    unreachable!("enclosed root belongs to some square-free factor")
}

pub fn sturm_isolate(p: &IntPolynomial) -> Vec<RootEnclosure> {
    if p.is_zero() {
        return Vec::new();
    }
    let sqf = p.squarefree_part();
    let factors = p.squarefree_factors();
    isolate_squarefree(&sqf)
        .into_iter()
        .map(|iv| {
            let multiplicity = multiplicity(&factors, &iv);
            RootEnclosure { lo: iv.0, hi: iv.1, multiplicity, is_real: true }
        })
        .collect()
}
