use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Serialize, Serializer};

use super::{growth_rate, smallest_modulus_root, GrowthRate, SeparationCertificate, SmallestRoot, TauEnclosure};
use crate::polyarith::{bracket, IntPolynomial, RationalFunction};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PerronStatus {
    Perron,
    NotCertified,
    NotApplicable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PerronMethod {
    Prop1,
    GeneralCertification,
}

fn opt_poly<S: Serializer>(p: &Option<IntPolynomial>, s: S) -> Result<S::Ok, S::Error> {
    match p {
        Some(p) => s.collect_str(p),
        None => s.serialize_none(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PerronVerdict {
    pub status: PerronStatus,
    pub method: Option<PerronMethod>,
    pub tau: Option<TauEnclosure>,
    /// Denominator with the cyclotomic alphabet divided out.
    #[serde(serialize_with = "opt_poly")]
    pub core: Option<IntPolynomial>,
    /// Cyclotomic multiplier that put the core into the `sum a_k t^k - 1` form.
    #[serde(serialize_with = "opt_poly")]
    pub cofactor: Option<IntPolynomial>,
    pub certificate: Option<SeparationCertificate>,
    pub reason: String,
}

impl PerronVerdict {
    fn new(status: PerronStatus, reason: impl Into<String>) -> Self {
        PerronVerdict {
            status,
            method: None,
            tau: None,
            core: None,
            cofactor: None,
            certificate: None,
            reason: reason.into(),
        }
    }
}

/// Divide out `t - 1` and `[2], ..., [10]` until none of them divides.
pub fn strip_cyclotomic(p: &IntPolynomial) -> IntPolynomial {
    let alphabet: Vec<IntPolynomial> = std::iter::once(IntPolynomial::t_minus_one())
        .chain((2..=10).map(|n| bracket(n).expect("n >= 1")))
        .collect();
    let mut core = p.clone();
    loop {
        let mut changed = false;
        for q in &alphabet {
            while core.degree().unwrap_or(0) >= q.degree().unwrap_or(0) {
                match core.exact_divide(q) {
                    Ok(next) => {
                        core = next;
                        changed = true;
                    }
                    Err(_) => break,
                }
            }
        }
        if !changed {
            return core;
        }
    }
}

fn cyclotomic(d: u32) -> IntPolynomial {
    // t^d - 1 divided by the cyclotomic polynomials of the proper divisors
    let mut c = vec![BigInt::from(-1)];
    c.resize(d as usize, BigInt::from(0));
    c.push(BigInt::one());
    let mut p = IntPolynomial::new(c);
    for e in 1..d {
        if d.is_multiple_of(e) {
            p = p.exact_divide(&cyclotomic(e)).expect("divisor cyclotomic factor");
        }
    }
    p
}

const COFACTOR_DEGREE: usize = 12;

/// Products of cyclotomic polynomials of order 2..=10 up to total degree 12,
/// by increasing degree.
fn cofactors() -> &'static [IntPolynomial] {
    static CACHE: OnceLock<Vec<IntPolynomial>> = OnceLock::new();
    CACHE.get_or_init(|| {
        let base: Vec<IntPolynomial> = (2..=10).map(cyclotomic).collect();
        let mut out = vec![(0usize, Vec::<usize>::new(), IntPolynomial::one())];
        let mut frontier = vec![(0usize, 0usize, IntPolynomial::one(), Vec::<usize>::new())];
        while let Some((deg, start, poly, idx)) = frontier.pop() {
            for (k, phi) in base.iter().enumerate().skip(start) {
                let d = deg + phi.degree().unwrap();
                if d > COFACTOR_DEGREE {
                    continue;
                }
                let next = &poly * phi;
                let mut key = idx.clone();
                key.push(k);
                out.push((d, key.clone(), next.clone()));
                frontier.push((d, k, next, key));
            }
        }
        out.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        out.into_iter().map(|(_, _, p)| p).collect()
    })
}

/// Perron verdict for the growth rate of a growth function.
pub fn perron_check(growth: &RationalFunction, precision: u32) -> PerronVerdict {
    let tau = match growth_rate(growth, precision) {
        Ok(GrowthRate::Finite) => {
            return PerronVerdict::new(PerronStatus::NotApplicable, "no pole in (0, 1]: finite growth")
        }
        Ok(GrowthRate::Rate(t)) => t,
        Err(e) => return PerronVerdict::new(PerronStatus::NotCertified, e.to_string()),
    };
    if tau.is_exact() && tau.lo.is_one() {
        let mut v = PerronVerdict::new(PerronStatus::NotApplicable, "growth rate is 1");
        v.tau = Some(tau);
        return v;
    }
    let mut core = strip_cyclotomic(growth.denominator());
    if core.constant_term().is_positive() {
        core = -core;
    }
    let mut verdict = PerronVerdict::new(PerronStatus::NotCertified, "");
    verdict.core = Some(core.clone());
    if tau.radius.multiplicity > 1 {
        verdict.reason = format!("smallest pole has multiplicity {}", tau.radius.multiplicity);
        verdict.tau = Some(tau);
        return verdict;
    }

    let accept = |verdict: &mut PerronVerdict, s: SmallestRoot, method: PerronMethod| {
        verdict.status = PerronStatus::Perron;
        verdict.method = Some(method);
        verdict.certificate = Some(s.certificate);
        verdict.reason = "smallest-modulus pole is real, positive, simple and strictly dominant".into();
    };

    if core.constant_term() == -BigInt::one() {
        if let Some(cof) = cofactors().iter().find(|c| super::prop1_applies(&(&core * *c))) {
            if let Ok(s) = smallest_modulus_root(&(&core * cof), precision) {
                if matches!(s.certificate, SeparationCertificate::Prop1 { .. }) && overlaps(&s, &tau) {
                    verdict.cofactor = Some(cof.clone());
                    accept(&mut verdict, s, PerronMethod::Prop1);
                    verdict.tau = Some(tau);
                    return verdict;
                }
            }
        }
    }
    match smallest_modulus_root(&core, precision) {
        Ok(s) if !s.root.lo.is_negative() && overlaps(&s, &tau) => {
            let method = match s.certificate {
                SeparationCertificate::Prop1 { .. } => PerronMethod::Prop1,
                SeparationCertificate::Discs { .. } => PerronMethod::GeneralCertification,
            };
            accept(&mut verdict, s, method);
        }
        Ok(s) => {
            verdict.reason = format!("smallest-modulus root lies in [{}, {}], not at the radius of convergence", s.root.lo, s.root.hi);
            verdict.certificate = Some(s.certificate);
        }
        Err(e) => verdict.reason = e.to_string(),
    }
    verdict.tau = Some(tau);
    verdict
}

fn overlaps(s: &SmallestRoot, tau: &TauEnclosure) -> bool {
    s.root.lo <= tau.radius.hi && tau.radius.lo <= s.root.hi
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic(2), IntPolynomial::from_i64s(&[1, 1]));
        assert_eq!(cyclotomic(6), IntPolynomial::from_i64s(&[1, -1, 1]));
        assert_eq!(cyclotomic(10), IntPolynomial::from_i64s(&[1, -1, 1, -1, 1]));
        assert_eq!(cyclotomic(9).degree(), Some(6));
        assert!(cofactors()[0].is_one());
        assert!(cofactors().iter().all(|c| c.degree().unwrap() <= COFACTOR_DEGREE));
    }

    #[test]
    fn strips_bracket_alphabet() {
        let h = IntPolynomial::from_i64s(&[-1, 1, 1]);
        let den = &(&h * &bracket(3).unwrap()) * &IntPolynomial::t_minus_one().pow(2);
        assert_eq!(strip_cyclotomic(&den), h);
    }
}
