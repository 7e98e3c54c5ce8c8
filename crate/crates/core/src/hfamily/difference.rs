use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use super::tables::{closed_form_rows, PRINTED_DIFFERENCE, PRINTED_DIFFERENCE_CONSTANT_DOUBLED};
use super::{eval_rows_doubled, extract_h, steinberg_from_counts, HFamily, HFamilyError};
use crate::polyarith::IntPolynomial;
use crate::polyhedron::CountVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LineStatus {
    Agree,
    Disagree,
    /// The printed line repeats a subscript; compared but not authoritative.
    Suspect,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DifferenceLine {
    pub degree: usize,
    pub printed: String,
    /// Printed coefficient at these counts, times two.
    pub printed_doubled: i64,
    /// Derived coefficient of the difference, times two.
    pub derived_doubled: i64,
    pub status: LineStatus,
}

fn poly_str<S: Serializer>(p: &IntPolynomial, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(p)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DifferenceReport {
    /// `H` of the full family, from the Steinberg sum.
    #[serde(serialize_with = "poly_str")]
    pub h_full: IntPolynomial,
    /// Twice the `{2,3,5,6}` closed form at the same counts with
    /// `f' = f - (v224 + v234 + v244)/2`; `f'` may be a half-integer.
    #[serde(serialize_with = "poly_str")]
    pub h_reduced_doubled: IntPolynomial,
    /// `2 H_full - h_reduced_doubled`.
    #[serde(serialize_with = "poly_str")]
    pub difference_doubled: IntPolynomial,
    pub nonnegative: bool,
    /// Zero difference exactly when `v224 = v234 = v244 = 0`.
    pub zero_iff_no_quarter_angles: bool,
    pub lines: Vec<DifferenceLine>,
}

impl DifferenceReport {
    pub fn line(&self, degree: usize) -> Option<&DifferenceLine> {
        self.lines.iter().find(|l| l.degree == degree)
    }
}

fn printed_text(terms: &[(&str, i64)]) -> String {
    terms
        .iter()
        .map(|(sub, c)| if c % 2 == 0 { format!("{}v{sub}", c / 2) } else { format!("{c}/2 v{sub}") })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Compare the full-family `H` against the reduced closed form and against
/// the printed difference polynomial.
pub fn difference_identity(counts: &CountVector) -> Result<DifferenceReport, HFamilyError> {
    HFamily::H23456.allows(counts)?;
    let h_full = extract_h(&steinberg_from_counts(counts)?, HFamily::H23456)?;
    let quarter = [counts.vt(2, 2, 4), counts.vt(2, 3, 4), counts.vt(2, 4, 4)];
    let s: u64 = quarter.iter().sum();
    let twice_f = 2 * counts.f as i64 - s as i64;
    let rows = closed_form_rows(HFamily::H2356).expect("tabulated");
    let h_reduced_doubled = IntPolynomial::from_i64s(&eval_rows_doubled(rows, counts, Some(twice_f)));
    let difference_doubled = &h_full.scale(&BigInt::from(2)) - &h_reduced_doubled;
    let value = |sub: &str| -> i64 {
        match sub {
            "224" => quarter[0] as i64,
            "234" => quarter[1] as i64,
            _ => quarter[2] as i64,
        }
    };
    let coeff = |k: usize| -> i64 { i64::try_from(difference_doubled.coeff(k)).unwrap_or(i64::MAX) };
    let mut lines: Vec<DifferenceLine> = PRINTED_DIFFERENCE
        .iter()
        .map(|&(degree, terms)| {
            let printed_doubled: i64 = terms.iter().map(|(sub, c)| c * value(sub)).sum();
            let derived_doubled = coeff(degree);
            let repeated = terms.iter().enumerate().any(|(i, (a, _))| terms[..i].iter().any(|(b, _)| a == b));
            let status = if repeated {
                LineStatus::Suspect
            } else if printed_doubled == derived_doubled {
                LineStatus::Agree
            } else {
                LineStatus::Disagree
            };
            DifferenceLine { degree, printed: printed_text(terms), printed_doubled, derived_doubled, status }
        })
        .collect();
    let derived0 = coeff(0);
    lines.push(DifferenceLine {
        degree: 0,
        printed: (PRINTED_DIFFERENCE_CONSTANT_DOUBLED / 2).to_string(),
        printed_doubled: PRINTED_DIFFERENCE_CONSTANT_DOUBLED,
        derived_doubled: derived0,
        status: if derived0 == PRINTED_DIFFERENCE_CONSTANT_DOUBLED { LineStatus::Agree } else { LineStatus::Disagree },
    });
    let nonnegative = difference_doubled.coeffs().iter().all(|c| c.sign() != num_bigint::Sign::Minus);
    Ok(DifferenceReport {
        zero_iff_no_quarter_angles: difference_doubled.is_zero() == (s == 0),
        nonnegative,
        h_full,
        h_reduced_doubled,
        difference_doubled,
        lines,
    })
}
