//! Real root isolation, smallest-modulus root certification, growth rates and
//! Perron verdicts.

mod discs;
mod perron;
mod sturm;

pub use perron::{perron_check, strip_cyclotomic, PerronMethod, PerronStatus, PerronVerdict};
pub use sturm::{cauchy_bound, sturm_isolate, SturmChain};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::polyarith::{IntPolynomial, RationalFunction};
use discs::{separate_smallest, DiscOutcome};

/// Largest working precision of the complex certification path.
pub const MAX_CERTIFICATION_BITS: u32 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootsError {
    #[error("polynomial has no roots")]
    NoRoots,
    #[error("polynomial vanishes at t = 0; divide out the factor t first")]
    ZeroAtOrigin,
    #[error("not certified at {precision} bits: {reason}")]
    NotCertified { precision: u32, reason: String },
}

pub(crate) fn rat_str<S: Serializer>(x: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(x)
}

/// Real interval `[lo, hi]` isolating one distinct root; `lo == hi` is an
/// exact rational root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootEnclosure {
    #[serde(serialize_with = "rat_str")]
    pub lo: BigRational,
    #[serde(serialize_with = "rat_str")]
    pub hi: BigRational,
    pub multiplicity: u32,
    pub is_real: bool,
}

impl RootEnclosure {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SeparationCertificate {
    /// Hypotheses of the `sum a_k t^k - 1` criterion hold, and Sturm finds a
    /// single real root of modulus at most `radius`.
    Prop1 {
        #[serde(serialize_with = "rat_str")]
        radius: BigRational,
        real_roots_within_radius: usize,
    },
    /// Inclusion discs: the smallest root has modulus at most `smallest_outer`
    /// and every other root has modulus at least `others_inner`.
    Discs {
        precision_bits: u32,
        #[serde(serialize_with = "rat_str")]
        smallest_outer: BigRational,
        #[serde(serialize_with = "opt_rat_str")]
        others_inner: Option<BigRational>,
    },
}

fn opt_rat_str<S: Serializer>(x: &Option<BigRational>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.collect_str(v),
        None => s.serialize_none(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmallestRoot {
    pub root: RootEnclosure,
    pub certificate: SeparationCertificate,
}

/// `p = sum_{k>=1} a_k t^k - 1` with `a_k >= 0`, degree at least 2 and
/// support gcd 1.
pub fn prop1_applies(p: &IntPolynomial) -> bool {
    let Some(n) = p.degree() else { return false };
    if n < 2 || p.constant_term() != -BigInt::one() {
        return false;
    }
    if p.coeffs()[1..].iter().any(|c| c.is_negative()) {
        return false;
    }
    let g = (1..=n).filter(|&k| !p.coeff(k).is_zero()).fold(0usize, |g, k| g.gcd(&k));
    g == 1
}

fn two_pow_neg(bits: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << bits as usize)
}

fn enclosure(p: &IntPolynomial, iv: (BigRational, BigRational)) -> RootEnclosure {
    let factors = p.squarefree_factors();
    let multiplicity = sturm::multiplicity(&factors, &iv);
    RootEnclosure { lo: iv.0, hi: iv.1, multiplicity, is_real: true }
}

/// Root of smallest modulus with a certificate that it is real and strictly
/// smaller in modulus than every other root.
pub fn smallest_modulus_root(p: &IntPolynomial, precision: u32) -> Result<SmallestRoot, RootsError> {
    if p.degree().unwrap_or(0) == 0 {
        return Err(RootsError::NoRoots);
    }
    if p.constant_term().is_zero() {
        return Err(RootsError::ZeroAtOrigin);
    }
    let sqf = p.squarefree_part();
    let width = two_pow_neg(precision);
    if prop1_applies(p) {
        let chain = SturmChain::new(&sqf);
        let (zero, one) = (BigRational::zero(), BigRational::one());
        if chain.count(&zero, &one) == 1 {
            let iv = sturm::isolate_squarefree(&sqf)
                .into_iter()
                .map(|iv| positive_part(&sqf, iv))
                .find(|(lo, _)| lo >= &zero)
                .expect("one root in (0, 1]");
            let iv = sturm::refine(&sqf, iv, &width);
            let radius = iv.1.clone();
            let within = chain.count(&-&radius, &radius) + usize::from(sqf.sign_at(&-&radius) == 0);
            if within == 1 {
                return Ok(SmallestRoot {
                    root: enclosure(p, iv),
                    certificate: SeparationCertificate::Prop1 { radius, real_roots_within_radius: within },
                });
            }
        }
    }
    match separate_smallest(&sqf, MAX_CERTIFICATION_BITS) {
        DiscOutcome::Failed { precision, reason } => Err(RootsError::NotCertified { precision, reason }),
        DiscOutcome::Separated(cert) => {
            // The smallest disc holds exactly one root and is alone in its
            // modulus range, so that root equals its conjugate: it is real.
            let outer = cert.smallest.outer.clone();
            let candidates: Vec<(BigRational, BigRational)> = sturm::isolate_squarefree(&sqf)
                .into_iter()
                .map(|iv| sturm::refine(&sqf, iv, &(&outer / BigRational::from_integer(4.into()))))
                .filter(|(lo, hi)| hi >= &-&outer && lo <= &outer)
                .collect();
            let [iv] = candidates.as_slice() else {
                return Err(RootsError::NotCertified {
                    precision: cert.precision,
                    reason: format!("{} real roots within the certified radius", candidates.len()),
                });
            };
            let iv = sturm::refine(&sqf, iv.clone(), &width);
            Ok(SmallestRoot {
                root: enclosure(p, iv),
                certificate: SeparationCertificate::Discs {
                    precision_bits: cert.precision,
                    smallest_outer: outer,
                    others_inner: cert.others_inner,
                },
            })
        }
    }
}

/// Restrict an isolating interval to its positive part when the root is positive.
fn positive_part(p: &IntPolynomial, iv: (BigRational, BigRational)) -> (BigRational, BigRational) {
    let zero = BigRational::zero();
    if iv.0 < zero && iv.1 > zero && p.sign_at(&zero) != 0 && p.sign_at(&zero) != p.sign_at(&iv.1) {
        return (zero, iv.1);
    }
    iv
}

/// Rational enclosure of the growth rate `tau = 1 / R`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TauEnclosure {
    #[serde(serialize_with = "rat_str")]
    pub lo: BigRational,
    #[serde(serialize_with = "rat_str")]
    pub hi: BigRational,
    /// Enclosure of the radius of convergence `R`.
    pub radius: RootEnclosure,
}

impl TauEnclosure {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum GrowthRate {
    /// No pole in `(0, 1]`: the series is a polynomial or has radius above 1.
    Finite,
    Rate(TauEnclosure),
}

/// Smallest positive real root of the reduced denominator, which is the
/// radius of convergence since the series has nonnegative coefficients.
pub fn growth_rate(growth: &RationalFunction, precision: u32) -> Result<GrowthRate, RootsError> {
    let den = growth.denominator();
    if den.is_constant() {
        return Ok(GrowthRate::Finite);
    }
    if den.constant_term().is_zero() {
        return Err(RootsError::ZeroAtOrigin);
    }
    let sqf = den.squarefree_part();
    let zero = BigRational::zero();
    let one = BigRational::one();
    let Some(iv) = sturm::isolate_squarefree(&sqf)
        .into_iter()
        .filter(|(_, hi)| hi > &zero)
        .map(|iv| positive_part(&sqf, iv))
        .find(|(lo, _)| lo >= &zero)
    else {
        return Ok(GrowthRate::Finite);
    };
    let (mut lo, mut hi) = iv;
    if hi > one {
        if lo >= one {
            return Ok(GrowthRate::Finite);
        }
        match sqf.sign_at(&one) {
            0 => {
                lo = one.clone();
                hi = one.clone();
            }
            s if s == sqf.sign_at(&hi) => hi = one.clone(),
            _ => return Ok(GrowthRate::Finite),
        }
    }
    let eps = two_pow_neg(precision);
    let s_hi = sqf.sign_at(&hi);
    while lo != hi && &hi - &lo > &lo * &eps {
        let mid = (&lo + &hi) / BigRational::from_integer(2.into());
        match sqf.sign_at(&mid) {
            0 => {
                lo = mid.clone();
                hi = mid;
            }
            s if s == s_hi => hi = mid,
            _ => lo = mid,
        }
    }
    let radius = enclosure(den, (lo, hi));
    Ok(GrowthRate::Rate(TauEnclosure {
        lo: radius.hi.recip(),
        hi: radius.lo.recip(),
        radius,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn isolate_examples() {
        let e = sturm_isolate(&p(&[-1, 4, 5]));
        assert_eq!(e.len(), 2);
        assert!(e[0].is_exact() && e[0].lo == r(-1, 1));
        assert!(e[1].is_exact() && e[1].lo == r(1, 5));
        assert!(sturm_isolate(&p(&[1, 0, 1])).is_empty());
        let d = sturm_isolate(&p(&[1, -2, 1]));
        assert_eq!(d.len(), 1);
        assert_eq!((d[0].lo.clone(), d[0].multiplicity), (r(1, 1), 2));
    }

    #[test]
    fn prop1_examples() {
        assert!(prop1_applies(&p(&[-1, 1, 1])));
        assert!(!prop1_applies(&p(&[-1, 0, 3, 0, 2])));
        assert!(!prop1_applies(&p(&[-1, -1, 1])));
        assert!(!prop1_applies(&p(&[-1, 4])));
    }

    #[test]
    fn smallest_root_examples() {
        let s = smallest_modulus_root(&p(&[-1, 4, 5]), 64).unwrap();
        assert!(s.root.is_exact() && s.root.lo == r(1, 5));
        assert!(matches!(s.certificate, SeparationCertificate::Prop1 { .. }));

        let g = smallest_modulus_root(&p(&[-1, 1, 1]), 40).unwrap();
        assert!(g.root.width() <= two_pow_neg(40));
        let golden = (5f64.sqrt() - 1.0) / 2.0;
        assert!(g.root.lo <= BigRational::from_float(golden).unwrap());
        assert!(g.root.hi >= BigRational::from_float(golden).unwrap());

        assert!(matches!(
            smallest_modulus_root(&p(&[-1, 0, 1]), 64),
            Err(RootsError::NotCertified { .. })
        ));
        assert_eq!(smallest_modulus_root(&p(&[0, 1, 1]), 64), Err(RootsError::ZeroAtOrigin));
    }

    #[test]
    fn general_path_certifies_non_prop1_polynomials() {
        // 1 - 3t + t^2: roots (3 ± sqrt 5)/2, smallest 0.381966
        let s = smallest_modulus_root(&p(&[1, -3, 1]), 50).unwrap();
        assert!(matches!(s.certificate, SeparationCertificate::Discs { .. }));
        let x = BigRational::from_float((3.0 - 5f64.sqrt()) / 2.0).unwrap();
        assert!(s.root.lo <= x && x <= s.root.hi);
        // complex pair of modulus 1/2 beats the real root 3/4: not certifiable
        // as real, so the outcome is an error
        let q = &p(&[1, 0, 4]) * &p(&[-3, 4]);
        assert!(smallest_modulus_root(&q, 50).is_err());
    }

    #[test]
    fn growth_rate_examples() {
        let octa = RationalFunction::new(
            crate::polyarith::bracket_product(&[2, 2, 2]).unwrap(),
            &IntPolynomial::t_minus_one() * &p(&[-1, 4, 5]),
        )
        .unwrap();
        let GrowthRate::Rate(t) = growth_rate(&octa, 64).unwrap() else { panic!() };
        assert!(t.is_exact() && t.lo == r(5, 1));
        let dihedral = RationalFunction::new(p(&[1, 1]), p(&[1, -1])).unwrap();
        let GrowthRate::Rate(t) = growth_rate(&dihedral, 64).unwrap() else { panic!() };
        assert!(t.is_exact() && t.lo == r(1, 1));
        let a2 = RationalFunction::from_poly(p(&[1, 2, 2, 1]));
        assert_eq!(growth_rate(&a2, 64).unwrap(), GrowthRate::Finite);
    }
}
