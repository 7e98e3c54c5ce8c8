//! Simultaneous complex root approximation with inclusion discs.
//!
//! For distinct approximations `z_i` of the roots of `p` (degree `n`, leading
//! coefficient `lc`), put `w_i = p(z_i) / (lc * prod_{j != i} (z_i - z_j))`.
//! The roots of `p` are the eigenvalues of `diag(z) - w 1^T`, so by
//! Gerschgorin every root lies in some disc centred at `z_i - w_i` with radius
//! `(n - 1)|w_i|`, and a union of `k` discs disjoint from the rest holds
//! exactly `k` roots counted with multiplicity.

use num_bigint::BigInt;
use num_complex::Complex;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::polyarith::IntPolynomial;

type C = Complex<BigRational>;

fn rat(x: f64) -> BigRational {
    BigRational::from_float(x).unwrap_or_else(BigRational::zero)
}

fn round_dyadic(x: &BigRational, bits: u32) -> BigRational {
    let scaled = (x.numer() << bits as usize).div_floor(x.denom());
    BigRational::new(scaled, BigInt::one() << bits as usize)
}

fn round_c(z: &C, bits: u32) -> C {
    Complex::new(round_dyadic(&z.re, bits), round_dyadic(&z.im, bits))
}

fn norm_sqr(z: &C) -> BigRational {
    &z.re * &z.re + &z.im * &z.im
}

fn eval_c(p: &IntPolynomial, z: &C) -> C {
    let mut acc = Complex::new(BigRational::zero(), BigRational::zero());
    for c in p.coeffs().iter().rev() {
        acc = acc * z + Complex::new(BigRational::from_integer(c.clone()), BigRational::zero());
    }
    acc
}

fn div_c(a: &C, b: &C) -> C {
    let d = norm_sqr(b);
    Complex::new(
        (&a.re * &b.re + &a.im * &b.im) / &d,
        (&a.im * &b.re - &a.re * &b.im) / &d,
    )
}

/// Floating-point Aberth iteration; returns approximations of all roots.
pub(crate) fn aberth_f64(p: &IntPolynomial) -> Vec<Complex<f64>> {
    let n = p.degree().unwrap_or(0);
    if n == 0 {
        return Vec::new();
    }
    let c: Vec<f64> = p.coeffs().iter().map(|x| x.to_f64().unwrap_or(f64::MAX)).collect();
    let lc = c[n];
    // Fujiwara-type radius for the starting circle
    let r = (0..n)
        .map(|k| (c[k] / lc).abs().powf(1.0 / (n - k) as f64))
        .fold(0.0f64, f64::max)
        .max(1e-3);
    let mut z: Vec<Complex<f64>> = (0..n)
        .map(|k| Complex::from_polar(r, 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / n as f64))
        .collect();
    let eval = |x: Complex<f64>| {
        let mut v = Complex::new(0.0, 0.0);
        let mut d = Complex::new(0.0, 0.0);
        for &a in c.iter().rev() {
            d = d * x + v;
            v = v * x + a;
        }
        (v, d)
    };
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (v, d) = eval(z[i]);
            if v.norm() == 0.0 {
                continue;
            }
            let ratio = v / d;
            let s: Complex<f64> = (0..n).filter(|&j| j != i).map(|j| (z[i] - z[j]).inv()).sum();
            let step = ratio / (Complex::new(1.0, 0.0) - ratio * s);
            if step.is_finite() {
                z[i] -= step;
                moved = moved.max(step.norm() / z[i].norm().max(1e-300));
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

/// One Weierstrass correction vector at exact rational precision.
fn corrections(p: &IntPolynomial, z: &[C]) -> Option<Vec<C>> {
    let lc = Complex::new(BigRational::from_integer(p.leading()?.clone()), BigRational::zero());
    let mut w = Vec::with_capacity(z.len());
    for i in 0..z.len() {
        let mut den = lc.clone();
        for j in 0..z.len() {
            if j != i {
                den *= &z[i] - &z[j];
            }
        }
        if den.re.is_zero() && den.im.is_zero() {
            return None;
        }
        w.push(div_c(&eval_c(p, &z[i]), &den));
    }
    Some(w)
}

/// Square root bounds of a nonnegative rational: `lo <= sqrt(x) <= hi`.
fn sqrt_bounds(x: &BigRational, bits: u32) -> (BigRational, BigRational) {
    let scale = BigInt::one() << (2 * bits as usize);
    let scaled = (x.numer() * &scale) / x.denom();
    let s = scaled.sqrt();
    let unit = BigInt::one() << bits as usize;
    (
        BigRational::new(s.clone(), unit.clone()),
        BigRational::new(s + 1u32, unit),
    )
}

#[derive(Clone, Debug)]
pub(crate) struct Disc {
    /// Lower and upper bounds for `|center| - r` and `|center| + r`.
    pub inner: BigRational,
    pub outer: BigRational,
}

#[derive(Clone, Debug)]
pub(crate) struct DiscCertificate {
    pub precision: u32,
    pub smallest: Disc,
    /// Smallest lower modulus bound over the remaining discs.
    pub others_inner: Option<BigRational>,
}

pub(crate) enum DiscOutcome {
    Separated(DiscCertificate),
    Failed { precision: u32, reason: String },
}

fn disc(center: C, w: &C, n: usize, bits: u32) -> Disc {
    let k = BigRational::from_integer(BigInt::from(n as u64 - 1));
    let radius_sqr = &k * &k * norm_sqr(w);
    let (_, r_hi) = sqrt_bounds(&radius_sqr, bits);
    let (m_lo, m_hi) = sqrt_bounds(&norm_sqr(&center), bits);
    Disc { inner: m_lo - &r_hi, outer: m_hi + r_hi }
}

/// Try to certify that the root of smallest modulus of the square-free `p`
/// lies in a disc whose modulus range is disjoint from every other disc.
pub(crate) fn separate_smallest(p: &IntPolynomial, max_bits: u32) -> DiscOutcome {
    let n = p.degree().unwrap_or(0);
    if n == 0 {
        return DiscOutcome::Failed { precision: 0, reason: "constant polynomial".into() };
    }
    let mut z: Vec<C> = aberth_f64(p).into_iter().map(|c| Complex::new(rat(c.re), rat(c.im))).collect();
    let mut bits = 64u32;
    let mut last_reason = String::new();
    while bits <= max_bits {
        z = z.iter().map(|c| round_c(c, bits)).collect();
        // Weierstrass steps until the corrections reach the rounding level
        // or stop shrinking
        let unit = BigRational::from_integer(BigInt::one() << (2 * bits as usize));
        let mut best: Option<BigRational> = None;
        let mut stalls = 0;
        for _ in 0..64 {
            let Some(w) = corrections(p, &z) else { break };
            let worst = w.iter().map(norm_sqr).max().unwrap_or_else(BigRational::zero);
            if &worst * &unit <= BigRational::one() {
                break;
            }
            match &best {
                Some(b) if &worst * BigRational::from_integer(BigInt::from(4)) > *b => stalls += 1,
                _ => stalls = 0,
            }
            if stalls >= 3 {
                break;
            }
            best = Some(best.map_or(worst.clone(), |b| b.min(worst)));
            z = z.iter().zip(&w).map(|(zi, wi)| round_c(&(zi - wi), bits)).collect();
        }
        let Some(w) = corrections(p, &z) else {
            last_reason = "coincident approximations".into();
            bits *= 2;
            continue;
        };
        let discs: Vec<Disc> = z
            .iter()
            .zip(&w)
            .map(|(zi, wi)| disc(zi - wi, wi, n, bits + 16))
            .collect();
        let (idx, _) = discs
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.outer.cmp(&b.1.outer))
            .expect("at least one disc");
        let others_inner = discs
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != idx)
            .map(|(_, d)| d.inner.clone())
            .min();
        let separated = match &others_inner {
            None => true,
            Some(m) => &discs[idx].outer < m,
        };
        if separated {
            return DiscOutcome::Separated(DiscCertificate {
                precision: bits,
                smallest: discs[idx].clone(),
                others_inner,
            });
        }
        last_reason = format!(
            "smallest disc reaches modulus {:.6e}, another disc starts at {:.6e}",
            discs[idx].outer.to_f64().unwrap_or(f64::NAN),
            others_inner.and_then(|m| m.to_f64()).unwrap_or(f64::NAN)
        );
        bits *= 2;
    }
    DiscOutcome::Failed { precision: max_bits, reason: last_reason }
}
