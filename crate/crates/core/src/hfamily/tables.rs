//! Closed-form H-polynomials, stored with every coefficient doubled so that
//! half-integer expressions stay integral.

use super::HFamily;

/// Count variables appearing in the closed forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Var {
    V2222,
    V223,
    V225,
    V226,
    V233,
    V235,
    V236,
    V333,
    F,
}

pub(crate) const VARS: [Var; 9] = [
    Var::V2222,
    Var::V223,
    Var::V225,
    Var::V226,
    Var::V233,
    Var::V235,
    Var::V236,
    Var::V333,
    Var::F,
];

impl Var {
    pub(crate) fn symbol(self) -> &'static str {
        match self {
            Var::V2222 => "v2222",
            Var::V223 => "v223",
            Var::V225 => "v225",
            Var::V226 => "v226",
            Var::V233 => "v233",
            Var::V235 => "v235",
            Var::V236 => "v236",
            Var::V333 => "v333",
            Var::F => "f",
        }
    }
}

/// Doubled coefficient of `t^k`: weights for [`VARS`] followed by a constant.
pub(crate) type Row = [i64; 10];

// index k holds the doubled coefficient of t^k
const H2: [Row; 3] = [
    [0, 0, 0, 0, 0, 0, 0, 0, 0, -2],
    [0, 0, 0, 0, 0, 0, 0, 0, 2, -8],
    [2, 0, 0, 0, 0, 0, 0, 0, 0, -2],
];

const H23: [Row; 7] = [
    [0, 0, 0, 0, 0, 0, 0, 0, 0, -2],
    [0, 0, 0, 0, 0, 0, 0, 0, 2, -10],
    [2, 1, 0, 0, 2, 0, 0, 3, 2, -14],
    [2, 0, 0, 0, 2, 0, 0, 4, 4, -20],
    [4, 1, 0, 0, 2, 0, 0, 5, 2, -14],
    [2, 0, 0, 0, 0, 0, 0, 4, 2, -10],
    [2, 0, 0, 0, 0, 0, 0, 2, 0, -2],
];

const H236: [Row; 10] = [
    [0, 0, 0, 0, 0, 0, 0, 0, 0, -2],
    [0, 0, 0, 0, 0, 0, 0, 0, 2, -10],
    [2, 1, 0, 1, 2, 0, 2, 3, 2, -14],
    [2, 0, 0, 1, 2, 0, 3, 4, 4, -22],
    [4, 1, 0, 2, 2, 0, 5, 5, 4, -24],
    [4, 1, 0, 2, 2, 0, 7, 7, 4, -24],
    [4, 0, 0, 1, 2, 0, 7, 6, 4, -22],
    [4, 1, 0, 1, 2, 0, 6, 5, 2, -14],
    [2, 0, 0, 0, 0, 0, 4, 4, 2, -10],
    [2, 0, 0, 0, 0, 0, 2, 2, 0, -2],
];

const H25: [Row; 7] = [
    [0, 0, 0, 0, 0, 0, 0, 0, 0, -2],
    [0, 0, 0, 0, 0, 0, 0, 0, 2, -10],
    [2, 0, 0, 0, 0, 0, 0, 0, 2, -10],
    [2, 0, 0, 0, 0, 0, 0, 0, 2, -10],
    [2, 0, 0, 0, 0, 0, 0, 0, 2, -10],
    [2, 0, 0, 0, 0, 0, 0, 0, 2, -10],
    [2, 0, 0, 0, 0, 0, 0, 0, 0, -2],
];

const H2356: [Row; 18] = [
    [0, 0, 0, 0, 0, 0, 0, 0, 0, -2],
    [0, 0, 0, 0, 0, 0, 0, 0, 2, -10],
    [2, 1, 1, 1, 2, 2, 2, 3, 2, -16],
    [2, 0, 1, 1, 2, 3, 3, 4, 6, -32],
    [6, 2, 3, 3, 4, 7, 7, 8, 6, -40],
    [6, 1, 2, 3, 4, 9, 10, 11, 10, -56],
    [10, 2, 4, 4, 6, 12, 14, 14, 10, -62],
    [10, 2, 3, 4, 6, 13, 16, 16, 12, -70],
    [12, 2, 4, 4, 6, 14, 18, 18, 12, -72],
    [12, 2, 4, 4, 6, 14, 18, 18, 12, -72],
    [12, 2, 3, 4, 6, 13, 18, 18, 12, -70],
    [12, 2, 4, 4, 6, 12, 18, 18, 10, -62],
    [10, 1, 2, 3, 4, 9, 16, 15, 10, -56],
    [10, 2, 3, 3, 4, 7, 15, 14, 6, -40],
    [6, 0, 1, 1, 2, 3, 11, 10, 6, -32],
    [6, 1, 1, 1, 2, 2, 8, 7, 2, -16],
    [2, 0, 0, 0, 0, 0, 4, 4, 2, -10],
    [2, 0, 0, 0, 0, 0, 2, 2, 0, -2],
];

pub(crate) fn closed_form_rows(family: HFamily) -> Option<&'static [Row]> {
    match family {
        HFamily::H2 => Some(&H2),
        HFamily::H23 => Some(&H23),
        HFamily::H236 => Some(&H236),
        HFamily::H25 => Some(&H25),
        HFamily::H2356 => Some(&H2356),
        HFamily::H23456 => None,
    }
}

/// Human-readable form of a doubled row, e.g. `(2v2222 + 2v333 - 2)/2`.
pub(crate) fn row_text(row: &Row) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (v, &c) in VARS.iter().zip(row.iter()) {
        if c != 0 {
            parts.push(if c == 1 { v.symbol().to_string() } else { format!("{c}{}", v.symbol()) });
        }
    }
    let mut s = parts.join(" + ");
    let k = row[9];
    if k != 0 || s.is_empty() {
        if s.is_empty() {
            s = k.to_string();
        } else if k < 0 {
            s = format!("{s} - {}", -k);
        } else {
            s = format!("{s} + {k}");
        }
    }
    format!("({s})/2")
}

/// The printed difference `H_23456 - H_2356`, line by line from `t^17` down:
/// doubled coefficients keyed by vertex-type subscript, as typeset (some lines
/// repeat a subscript), and the printed constant doubled.
pub(crate) const PRINTED_DIFFERENCE: [(usize, &[(&str, i64)]); 17] = [
    (17, &[("224", 2)]),
    (16, &[("224", 1), ("234", 1), ("244", 5)]),
    (15, &[("224", 2), ("234", 3), ("244", 9)]),
    (14, &[("224", 4), ("234", 6), ("244", 13)]),
    (13, &[("224", 5), ("234", 9), ("244", 17)]),
    (12, &[("224", 7), ("234", 12), ("244", 21)]),
    (11, &[("224", 8), ("234", 14), ("244", 23)]),
    (10, &[("244", 9), ("234", 15), ("244", 24)]),
    (9, &[("224", 9), ("234", 15), ("244", 24)]),
    (8, &[("244", 9), ("234", 15), ("244", 24)]),
    (7, &[("224", 9), ("234", 15), ("244", 22)]),
    (6, &[("224", 8), ("234", 14), ("244", 19)]),
    (5, &[("244", 7), ("234", 12), ("244", 15)]),
    (4, &[("224", 5), ("234", 9), ("244", 11)]),
    (3, &[("224", 4), ("234", 6), ("244", 7)]),
    (2, &[("224", 2), ("234", 3), ("244", 3)]),
    (1, &[("224", 1), ("234", 1), ("244", 1)]),
];

pub(crate) const PRINTED_DIFFERENCE_CONSTANT_DOUBLED: i64 = -2;
