//! H-polynomials of noncompact Coxeter polyhedra with dihedral angles
//! pi/m, m in {2, 3, 4, 5, 6}: closed forms, extraction from growth
//! functions, nonnegativity reports and a sampler of admissible counts.

mod difference;
mod nonneg;
mod sampler;
mod tables;

pub use difference::{difference_identity, DifferenceLine, DifferenceReport, LineStatus};
pub use nonneg::{nonnegativity_check, CoefficientCheck, NonnegReport, Precondition, RequiredSign};
pub use sampler::{sample_admissible_counts, DEFAULT_ATTEMPTS_PER_SAMPLE};

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::coxeter::{finite_parabolic_subsets, solomon_series, CoxeterMatrix, Order};
use crate::polyarith::{bracket_product, rational_sum, IntPolynomial, PolyError, RationalFunction, Sign};
use crate::polyhedron::CountVector;
use tables::{closed_form_rows, Var, VARS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HFamily {
    H2,
    H23,
    H236,
    H25,
    H2356,
    H23456,
}

pub const ALL_FAMILIES: [HFamily; 6] =
    [HFamily::H2, HFamily::H23, HFamily::H236, HFamily::H25, HFamily::H2356, HFamily::H23456];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HFamilyError {
    #[error("edge order {0} is outside the angle families (orders 2 to 6)")]
    OutOfScope(u32),
    #[error("unknown family {0:?}")]
    InvalidFamily(String),
    #[error("no closed form is tabulated for {0}")]
    NoClosedForm(HFamily),
    #[error("coefficient of t^{degree} is {doubled}/2, not an integer: counts violate the double-count parities")]
    Parity { degree: usize, doubled: i64 },
    #[error("vertex type {vertex} does not occur in family {family}")]
    FamilyMismatch { family: HFamily, vertex: String },
    #[error("growth function does not factor as (t-1) H(t) / {base}: remainder {remainder}")]
    Inexact { base: String, remainder: String },
    #[error("sampler found {found} of {requested} vectors for {family} in {attempts} attempts")]
    SamplerExhausted { family: HFamily, found: usize, requested: usize, attempts: u64 },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

impl HFamily {
    pub fn tag(self) -> &'static str {
        match self {
            HFamily::H2 => "H2",
            HFamily::H23 => "H23",
            HFamily::H236 => "H236",
            HFamily::H25 => "H25",
            HFamily::H2356 => "H2356",
            HFamily::H23456 => "H23456",
        }
    }

    pub fn base_degrees(self) -> &'static [u32] {
        match self {
            HFamily::H2 => &[2, 2, 2],
            HFamily::H23 => &[2, 2, 3, 4],
            HFamily::H236 => &[2, 2, 4, 6],
            HFamily::H25 => &[2, 2, 2, 5],
            HFamily::H2356 | HFamily::H23456 => &[2, 4, 6, 10],
        }
    }

    /// Bracket product `B` with `1/f_P = (t-1) H / B`.
    pub fn cyclotomic_base(self) -> IntPolynomial {
        bracket_product(self.base_degrees()).expect("degrees are positive")
    }

    /// Degree of H for generic counts.
    pub fn nominal_degree(self) -> usize {
        match self {
            HFamily::H2 => 2,
            HFamily::H23 | HFamily::H25 => 6,
            HFamily::H236 => 9,
            HFamily::H2356 | HFamily::H23456 => 17,
        }
    }

    /// Vertex types that can occur: `[2,2,2,2]` for the four-valent cusp,
    /// sorted triples otherwise.
    pub fn vertex_types(self) -> &'static [&'static [u32]] {
        const H2: &[&[u32]] = &[&[2, 2, 2, 2], &[2, 2, 2]];
        const H23: &[&[u32]] = &[&[2, 2, 2, 2], &[2, 2, 2], &[2, 2, 3], &[2, 3, 3], &[3, 3, 3]];
        const H236: &[&[u32]] =
            &[&[2, 2, 2, 2], &[2, 2, 2], &[2, 2, 3], &[2, 3, 3], &[3, 3, 3], &[2, 2, 6], &[2, 3, 6]];
        const H25: &[&[u32]] = &[&[2, 2, 2, 2], &[2, 2, 2], &[2, 2, 5]];
        const H2356: &[&[u32]] = &[
            &[2, 2, 2, 2],
            &[2, 2, 2],
            &[2, 2, 3],
            &[2, 2, 5],
            &[2, 2, 6],
            &[2, 3, 3],
            &[2, 3, 5],
            &[2, 3, 6],
            &[3, 3, 3],
        ];
        const H23456: &[&[u32]] = &[
            &[2, 2, 2, 2],
            &[2, 2, 2],
            &[2, 2, 3],
            &[2, 2, 4],
            &[2, 2, 5],
            &[2, 2, 6],
            &[2, 3, 3],
            &[2, 3, 4],
            &[2, 3, 5],
            &[2, 3, 6],
            &[2, 4, 4],
            &[3, 3, 3],
        ];
        match self {
            HFamily::H2 => H2,
            HFamily::H23 => H23,
            HFamily::H236 => H236,
            HFamily::H25 => H25,
            HFamily::H2356 => H2356,
            HFamily::H23456 => H23456,
        }
    }

    /// Coefficient indices that the family's nonnegativity argument proves
    /// strictly positive.
    pub fn strictly_positive_indices(self) -> &'static [usize] {
        match self {
            HFamily::H2 => &[],
            HFamily::H23 => &[3, 5],
            HFamily::H236 => &[7, 8],
            HFamily::H25 => &[2, 3, 4, 5],
            HFamily::H2356 | HFamily::H23456 => &[15],
        }
    }

    fn allows(self, counts: &CountVector) -> Result<(), HFamilyError> {
        let allowed = self.vertex_types();
        if counts.v2222 > 0 && !allowed.contains(&&[2u32, 2, 2, 2][..]) {
            return Err(HFamilyError::FamilyMismatch { family: self, vertex: "2222".into() });
        }
        for (t, &c) in &counts.v_triple {
            if c > 0 && !allowed.contains(&&t[..]) {
                return Err(HFamilyError::FamilyMismatch {
                    family: self,
                    vertex: t.iter().map(|m| m.to_string()).collect(),
                });
            }
        }
        Ok(())
    }
}

impl fmt::Display for HFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for HFamily {
    type Err = HFamilyError;

    fn from_str(s: &str) -> Result<Self, HFamilyError> {
        ALL_FAMILIES
            .into_iter()
            .find(|f| f.tag().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| HFamilyError::InvalidFamily(s.to_string()))
    }
}

impl Serialize for HFamily {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

/// Smallest family covering the edge orders present.
pub fn detect_family(counts: &CountVector) -> Result<HFamily, HFamilyError> {
    let orders = counts.edge_orders();
    if let Some(&m) = orders.iter().find(|&&m| m >= 7) {
        return Err(HFamilyError::OutOfScope(m));
    }
    let within = |set: &[u32]| orders.iter().all(|m| set.contains(m));
    Ok(if counts.em(4) > 0 {
        HFamily::H23456
    } else if within(&[2]) {
        HFamily::H2
    } else if within(&[2, 3]) {
        HFamily::H23
    } else if within(&[2, 5]) && counts.em(5) == 1 {
        HFamily::H25
    } else if within(&[2, 3, 6]) {
        HFamily::H236
    } else {
        HFamily::H2356
    })
}

fn var_value(counts: &CountVector, v: Var) -> i64 {
    let x = match v {
        Var::V2222 => counts.v2222,
        Var::V223 => counts.vt(2, 2, 3),
        Var::V225 => counts.vt(2, 2, 5),
        Var::V226 => counts.vt(2, 2, 6),
        Var::V233 => counts.vt(2, 3, 3),
        Var::V235 => counts.vt(2, 3, 5),
        Var::V236 => counts.vt(2, 3, 6),
        Var::V333 => counts.vt(3, 3, 3),
        Var::F => counts.f,
    };
    x as i64
}

/// Evaluate rows, keeping each coefficient doubled; `twice_f` replaces `2f` when given.
fn eval_rows_doubled(rows: &[tables::Row], counts: &CountVector, twice_f: Option<i64>) -> Vec<i64> {
    rows.iter()
        .map(|row| {
            let mut doubled = row[9];
            for (k, &v) in VARS.iter().enumerate() {
                doubled += match (v, twice_f) {
                    (Var::F, Some(tf)) => row[k] / 2 * tf,
                    _ => row[k] * var_value(counts, v),
                };
            }
            doubled
        })
        .collect()
}

fn eval_rows(rows: &[tables::Row], counts: &CountVector) -> Result<IntPolynomial, HFamilyError> {
    let doubled = eval_rows_doubled(rows, counts, None);
    if let Some((degree, &d)) = doubled.iter().enumerate().find(|(_, d)| *d % 2 != 0) {
        return Err(HFamilyError::Parity { degree, doubled: d });
    }
    Ok(IntPolynomial::new(doubled.iter().map(|d| BigInt::from(d / 2)).collect()))
}

/// The tabulated H-polynomial with counts substituted.
pub fn h_closed_form(family: HFamily, counts: &CountVector) -> Result<IntPolynomial, HFamilyError> {
    let rows = closed_form_rows(family).ok_or(HFamilyError::NoClosedForm(family))?;
    family.allows(counts)?;
    eval_rows(rows, counts)
}

/// Symbolic origin of the coefficient of `t^k` in the closed form.
pub fn closed_form_origin(family: HFamily, k: usize) -> Option<String> {
    closed_form_rows(family).and_then(|rows| rows.get(k)).map(tables::row_text)
}

/// `H` from `1/f_P = (t-1) H / base`, by exact division.
pub fn extract_h(growth: &RationalFunction, family: HFamily) -> Result<IntPolynomial, HFamilyError> {
    let inv = growth.recip()?;
    let base = family.cyclotomic_base();
    let num = &base * inv.numerator();
    let den = &IntPolynomial::t_minus_one() * inv.denominator();
    num.exact_divide(&den).map_err(|e| match e {
        PolyError::NotDivisible { remainder } => HFamilyError::Inexact {
            base: format!("[{}]", family.base_degrees().iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")),
            remainder: remainder.to_string(),
        },
        other => HFamilyError::Poly(other),
    })
}

fn finite_growth(matrix: &CoxeterMatrix) -> IntPolynomial {
    let all: Vec<usize> = (0..matrix.rank()).collect();
    let catalog = finite_parabolic_subsets(matrix);
    let top = catalog.subsets.iter().find(|s| s.generators == all).expect("finite group");
    solomon_series(&top.labels)
}

/// Growth function from counts alone, assuming the finite parabolics are
/// exactly the empty set, facets, edges and finite vertices.
pub fn steinberg_from_counts(counts: &CountVector) -> Result<RationalFunction, HFamilyError> {
    let t = |k: usize| IntPolynomial::monomial(BigInt::from(1), k);
    let term = |coeff: u64, poly: &IntPolynomial| -> Result<RationalFunction, PolyError> {
        let deg = poly.degree().unwrap_or(0);
        RationalFunction::new(t(deg).scale(&BigInt::from(coeff)), poly.clone())
    };
    let mut terms: Vec<(Sign, RationalFunction)> = vec![(Sign::Plus, RationalFunction::one())];
    terms.push((Sign::Minus, term(counts.f, &solomon_series(&[crate::coxeter::FiniteTypeLabel::A(1)]))?));
    for (&m, &c) in &counts.e_m {
        let pair = CoxeterMatrix::from_pairs(2, &[(0, 1, Order::Finite(m))]).expect("valid order");
        terms.push((Sign::Plus, term(c, &finite_growth(&pair))?));
    }
    for (tr, &c) in &counts.v_triple {
        let corner = CoxeterMatrix::from_pairs(
            3,
            &[(0, 1, Order::Finite(tr[0])), (1, 2, Order::Finite(tr[1])), (0, 2, Order::Finite(tr[2]))],
        )
        .expect("valid orders");
        let all = [0, 1, 2];
        if finite_parabolic_subsets(&corner).contains(&all) {
            terms.push((Sign::Minus, term(c, &finite_growth(&corner))?));
        }
    }
    let inv = rational_sum(terms.iter().map(|(s, r)| (*s, r)));
    Ok(inv.recip()?)
}
