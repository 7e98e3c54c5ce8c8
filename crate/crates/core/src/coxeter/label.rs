use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use super::{CoxeterError, CoxeterMatrix, Order};

/// Irreducible finite Coxeter type.
///
/// `I2(3)` and `I2(4)` never occur: they are `A2` and `B2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FiniteTypeLabel {
    A(u32),
    B(u32),
    D(u32),
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    I2(u32),
}

use FiniteTypeLabel::*;

impl FiniteTypeLabel {
    /// Validating constructor for the families with a parameter.
    pub fn checked(self) -> Result<Self, CoxeterError> {
        let ok = match self {
            A(n) => n >= 1,
            B(n) => n >= 2,
            D(n) => n >= 4,
            I2(m) => m >= 3,
            _ => true,
        };
        if !ok {
            return Err(CoxeterError::InvalidLabel(format!("{self}")));
        }
        Ok(match self {
            I2(3) => A(2),
            I2(4) => B(2),
            other => other,
        })
    }

    pub fn rank(self) -> usize {
        match self {
            A(n) | B(n) | D(n) => n as usize,
            E6 => 6,
            E7 => 7,
            E8 => 8,
            F4 | H4 => 4,
            H3 => 3,
            I2(_) => 2,
        }
    }

    /// Exponents in the order of the classical table.
    pub fn exponents(self) -> Vec<u32> {
        match self {
            A(n) => (1..=n).collect(),
            B(n) => (1..=n).map(|k| 2 * k - 1).collect(),
            D(n) => {
                let mut e: Vec<u32> = (1..n).map(|k| 2 * k - 1).collect();
                e.push(n - 1);
                e
            }
            E6 => vec![1, 4, 5, 7, 8, 11],
            E7 => vec![1, 5, 7, 9, 11, 13, 17],
            E8 => vec![1, 7, 11, 13, 17, 19, 23, 29],
            F4 => vec![1, 5, 7, 11],
            H3 => vec![1, 5, 9],
            H4 => vec![1, 11, 19, 29],
            I2(m) => vec![1, m - 1],
        }
    }

    /// Group order, the product of `(exponent + 1)`.
    pub fn order(self) -> BigInt {
        self.exponents().into_iter().map(|e| BigInt::from(e + 1)).product()
    }

    /// Standard Coxeter matrix with the generator numbering used throughout
    /// the crate (and by the permutation models in `oracle`).
    pub fn coxeter_matrix(self) -> CoxeterMatrix {
        let f = Order::Finite;
        let path = |n: usize, labels: &[u32]| -> Vec<(usize, usize, Order)> {
            (0..n.saturating_sub(1))
                .map(|i| (i, i + 1, f(*labels.get(i).unwrap_or(&3))))
                .collect()
        };
        let (rank, pairs) = match self {
            A(n) => (n as usize, path(n as usize, &[])),
            B(n) => (n as usize, path(n as usize, &[4])),
            D(n) => {
                let n = n as usize;
                let mut p: Vec<_> = (1..n - 1).map(|i| (i, i + 1, f(3))).collect();
                p.push((0, 2, f(3)));
                (n, p)
            }
            E6 | E7 | E8 => {
                let n = self.rank();
                // chain 0-2-3-...-(n-1), node 1 hangs off node 3
                let mut p = vec![(0, 2, f(3)), (1, 3, f(3))];
                p.extend((2..n - 1).map(|i| (i, i + 1, f(3))));
                (n, p)
            }
            F4 => (4, path(4, &[3, 4, 3])),
            H3 => (3, path(3, &[5, 3])),
            H4 => (4, path(4, &[5, 3, 3])),
            I2(m) => (2, vec![(0, 1, f(m))]),
        };
        CoxeterMatrix::from_pairs(rank, &pairs).expect("classical diagrams are valid")
    }
}

impl fmt::Display for FiniteTypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            A(n) => write!(f, "A{n}"),
            B(n) => write!(f, "B{n}"),
            D(n) => write!(f, "D{n}"),
            E6 => write!(f, "E6"),
            E7 => write!(f, "E7"),
            E8 => write!(f, "E8"),
            F4 => write!(f, "F4"),
            H3 => write!(f, "H3"),
            H4 => write!(f, "H4"),
            I2(m) => write!(f, "I2({m})"),
        }
    }
}

impl Serialize for FiniteTypeLabel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for FiniteTypeLabel {
    type Err = CoxeterError;

    /// Accepts `A3`, `B2`, `D4`, `E6`, `F4`, `H3`, `I2(7)` and `I2_7`.
    fn from_str(s: &str) -> Result<Self, CoxeterError> {
        let bad = || CoxeterError::InvalidLabel(s.to_string());
        let t = s.trim();
        let label = match t.to_ascii_uppercase().as_str() {
            "E6" => E6,
            "E7" => E7,
            "E8" => E8,
            "F4" => F4,
            "H3" => H3,
            "H4" => H4,
            u if u.starts_with("I2") => {
                let rest = u[2..].trim_start_matches(['(', '_']).trim_end_matches(')');
                I2(rest.parse().map_err(|_| bad())?)
            }
            u => {
                let (fam, n) = u.split_at(1);
                let n: u32 = n.parse().map_err(|_| bad())?;
                match fam {
                    "A" => A(n),
                    "B" => B(n),
                    "D" => D(n),
                    _ => return Err(bad()),
                }
            }
        };
        label.checked()
    }
}

/// Result of matching a connected diagram against the finite classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    Finite(FiniteTypeLabel),
    NotFinite,
}

/// Recognize the connected Coxeter diagram induced on `subset`.
pub fn classify_component(matrix: &CoxeterMatrix, subset: &[usize]) -> Result<Classification, CoxeterError> {
    let n = subset.len();
    if n == 0 {
        return Err(CoxeterError::Malformed("empty generator subset".into()));
    }
    if matrix.components(subset).len() != 1 {
        return Err(CoxeterError::Disconnected(subset.to_vec()));
    }
    if n == 1 {
        return Ok(Classification::Finite(A(1)));
    }
    let mut edges: Vec<(usize, usize, u32)> = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            match matrix.order(subset[a], subset[b]) {
                Order::Infinite => return Ok(Classification::NotFinite),
                Order::Finite(m) if m >= 3 => edges.push((a, b, m)),
                _ => {}
            }
        }
    }
    if edges.len() != n - 1 {
        // connected with at least n edges: contains a cycle
        return Ok(Classification::NotFinite);
    }
    if n == 2 {
        return Ok(Classification::Finite(I2(edges[0].2).checked()?));
    }
    let mut degree = vec![0usize; n];
    for &(a, b, _) in &edges {
        degree[a] += 1;
        degree[b] += 1;
    }
    let big: Vec<&(usize, usize, u32)> = edges.iter().filter(|e| e.2 > 3).collect();
    let branch: Vec<usize> = (0..n).filter(|&v| degree[v] >= 3).collect();
    let nt = n as u32;
    if branch.is_empty() {
        // a path
        if big.is_empty() {
            return Ok(Classification::Finite(A(nt)));
        }
        if big.len() > 1 {
            return Ok(Classification::NotFinite);
        }
        let &(a, b, m) = big[0];
        let at_end = degree[a] == 1 || degree[b] == 1;
        let label = match (m, at_end, n) {
            (4, true, _) => Some(B(nt)),
            (4, false, 4) => Some(F4),
            (5, true, 3) => Some(H3),
            (5, true, 4) => Some(H4),
            _ => None,
        };
        return Ok(label.map_or(Classification::NotFinite, Classification::Finite));
    }
    if branch.len() > 1 || degree[branch[0]] > 3 || !big.is_empty() {
        return Ok(Classification::NotFinite);
    }
    // star with three arms; measure arm lengths from the branch node
    let centre = branch[0];
    let neighbours = |v: usize| -> Vec<usize> {
        edges
            .iter()
            .filter_map(|&(a, b, _)| if a == v { Some(b) } else if b == v { Some(a) } else { None })
            .collect()
    };
    let mut arms: Vec<u32> = neighbours(centre)
        .into_iter()
        .map(|start| {
            let (mut prev, mut cur, mut len) = (centre, start, 1);
            loop {
                let next: Vec<usize> = neighbours(cur).into_iter().filter(|&w| w != prev).collect();
                match next.as_slice() {
                    [w] => {
                        prev = cur;
                        cur = *w;
                        len += 1;
                    }
                    _ => break len,
                }
            }
        })
        .collect();
    arms.sort_unstable();
    let label = match arms.as_slice() {
        [1, 1, k] => Some(D(k + 3)),
        [1, 2, 2] => Some(E6),
        [1, 2, 3] => Some(E7),
        [1, 2, 4] => Some(E8),
        _ => None,
    };
    Ok(label.map_or(Classification::NotFinite, Classification::Finite))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all(m: &CoxeterMatrix) -> Classification {
        let s: Vec<usize> = (0..m.rank()).collect();
        classify_component(m, &s).unwrap()
    }

    #[test]
    fn classification_examples() {
        let one = CoxeterMatrix::from_pairs(1, &[]).unwrap();
        assert_eq!(all(&one), Classification::Finite(A(1)));
        let i26 = CoxeterMatrix::from_pairs(2, &[(0, 1, Order::Finite(6))]).unwrap();
        assert_eq!(all(&i26), Classification::Finite(I2(6)));
        let tri = CoxeterMatrix::from_pairs(
            3,
            &[(0, 1, Order::Finite(3)), (1, 2, Order::Finite(3)), (0, 2, Order::Finite(3))],
        )
        .unwrap();
        assert_eq!(all(&tri), Classification::NotFinite);
    }

    #[test]
    fn standard_diagrams_classify_to_themselves() {
        let labels = [
            A(1), A(2), A(5), B(2), B(3), B(6), D(4), D(5), D(7), E6, E7, E8, F4, H3, H4, I2(5), I2(6), I2(12),
        ];
        for l in labels {
            assert_eq!(all(&l.coxeter_matrix()), Classification::Finite(l), "{l}");
        }
    }

    #[test]
    fn disconnected_subset_rejected() {
        let m = A(1).coxeter_matrix();
        let two = CoxeterMatrix::from_pairs(2, &[]).unwrap();
        assert!(classify_component(&m, &[0]).is_ok());
        assert!(matches!(classify_component(&two, &[0, 1]), Err(CoxeterError::Disconnected(_))));
    }

    #[test]
    fn exponent_table() {
        assert_eq!(H3.exponents(), vec![1, 5, 9]);
        assert_eq!(A(1).exponents(), vec![1]);
        assert_eq!(E8.exponents(), vec![1, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(D(4).exponents(), vec![1, 3, 5, 3]);
        assert_eq!(I2(7).exponents(), vec![1, 6]);
    }

    #[test]
    fn label_parsing() {
        assert_eq!("A3".parse::<FiniteTypeLabel>().unwrap(), A(3));
        assert_eq!("I2(7)".parse::<FiniteTypeLabel>().unwrap(), I2(7));
        assert_eq!("i2_4".parse::<FiniteTypeLabel>().unwrap(), B(2));
        assert_eq!("I2(3)".parse::<FiniteTypeLabel>().unwrap(), A(2));
        assert!("D3".parse::<FiniteTypeLabel>().is_err());
        assert!("B1".parse::<FiniteTypeLabel>().is_err());
        assert!("X4".parse::<FiniteTypeLabel>().is_err());
        assert!("I2(2)".parse::<FiniteTypeLabel>().is_err());
    }

    #[test]
    fn classical_orders() {
        // |W| for the exceptional types
        let expect = [(E6, 51840u64), (E7, 2903040), (E8, 696729600), (F4, 1152), (H3, 120), (H4, 14400)];
        for (l, n) in expect {
            assert_eq!(l.order(), BigInt::from(n), "{l}");
        }
    }
}
