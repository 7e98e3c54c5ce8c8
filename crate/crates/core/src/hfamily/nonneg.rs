use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use super::{closed_form_origin, detect_family, extract_h, h_closed_form, steinberg_from_counts, HFamily};
use crate::polyarith::IntPolynomial;
use crate::polyhedron::{check_lemma2, CountVector};
use crate::roots::prop1_applies;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Precondition {
    pub name: String,
    pub pass: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RequiredSign {
    #[serde(rename = "= -1")]
    MinusOne,
    #[serde(rename = ">= 0")]
    NonNegative,
    #[serde(rename = "> 0")]
    Positive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoefficientCheck {
    pub index: usize,
    pub origin: String,
    #[serde(serialize_with = "big_str")]
    pub value: BigInt,
    pub required: RequiredSign,
    pub pass: bool,
}

fn big_str<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match x.to_i64() {
        Some(v) => s.serialize_i64(v),
        None => s.collect_str(x),
    }
}

fn opt_poly<S: Serializer>(p: &Option<IntPolynomial>, s: S) -> Result<S::Ok, S::Error> {
    match p {
        Some(p) => s.collect_str(p),
        None => s.serialize_none(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonnegReport {
    pub family: HFamily,
    pub preconditions: Vec<Precondition>,
    #[serde(serialize_with = "opt_poly")]
    pub h: Option<IntPolynomial>,
    pub coefficients: Vec<CoefficientCheck>,
    pub prop1_applies: bool,
    /// `H = a_1 t - 1` with `a_1 > 0`: a single positive root `1/a_1`.
    pub linear_case: bool,
    pub status: String,
    pub pass: bool,
}

impl NonnegReport {
    pub fn preconditions_hold(&self) -> bool {
        self.preconditions.iter().all(|p| p.pass)
    }
}

fn preconditions(family: HFamily, c: &CountVector) -> Vec<Precondition> {
    let mut out = vec![
        Precondition { name: "identities (3)-(12) with the cusp inequality".into(), pass: check_lemma2(c, true).pass },
        Precondition { name: "f >= 5".into(), pass: c.f >= 5 },
        Precondition {
            name: format!("detected family is {family}"),
            pass: detect_family(c).is_ok_and(|f| f == family),
        },
    ];
    let (name, pass) = match family {
        HFamily::H2 => ("only right angles", c.edge_orders().iter().all(|&m| m == 2)),
        HFamily::H23 => ("e3 >= 1", c.em(3) >= 1),
        HFamily::H236 => ("e6 >= 1", c.em(6) >= 1),
        HFamily::H25 => ("e5 = 1", c.em(5) == 1),
        HFamily::H2356 => ("e5 >= 1 and (e3 >= 1 or e6 >= 1)", c.em(5) >= 1 && (c.em(3) >= 1 || c.em(6) >= 1)),
        HFamily::H23456 => ("e4 >= 1", c.em(4) >= 1),
    };
    out.push(Precondition { name: name.into(), pass });
    out
}

/// Coefficient-sign report for `H` of the given family at these counts.
pub fn nonnegativity_check(family: HFamily, counts: &CountVector) -> NonnegReport {
    let preconditions = preconditions(family, counts);
    let h = match family {
        HFamily::H23456 => steinberg_from_counts(counts).and_then(|g| extract_h(&g, family)),
        _ => h_closed_form(family, counts),
    };
    let mut report = NonnegReport {
        family,
        preconditions,
        h: None,
        coefficients: Vec::new(),
        prop1_applies: false,
        linear_case: false,
        status: String::new(),
        pass: false,
    };
    let h = match h {
        Ok(h) => h,
        Err(e) => {
            report.status = format!("error: {e}");
            return report;
        }
    };
    let top = h.degree().unwrap_or(0).max(family.nominal_degree());
    for k in 0..=top {
        let value = h.coeff(k);
        let required = if k == 0 {
            RequiredSign::MinusOne
        } else if family.strictly_positive_indices().contains(&k) {
            RequiredSign::Positive
        } else {
            RequiredSign::NonNegative
        };
        let pass = match required {
            RequiredSign::MinusOne => value == -BigInt::one(),
            RequiredSign::NonNegative => !value.is_negative(),
            RequiredSign::Positive => value.is_positive(),
        };
        let origin = closed_form_origin(family, k).unwrap_or_else(|| "Steinberg sum over counts".into());
        report.coefficients.push(CoefficientCheck { index: k, origin, value, required, pass });
    }
    report.prop1_applies = prop1_applies(&h);
    report.linear_case = h.degree() == Some(1) && h.constant_term() == -BigInt::one() && h.coeff(1) > BigInt::zero();
    let coeffs_ok = report.coefficients.iter().all(|c| c.pass);
    report.pass = report.preconditions_hold() && coeffs_ok && (report.prop1_applies || report.linear_case);
    report.status = if !report.preconditions_hold() {
        "precondition_failed".into()
    } else if report.pass {
        "pass".into()
    } else {
        "fail".into()
    };
    report.h = Some(h);
    report
}
