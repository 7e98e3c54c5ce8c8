//! Word-length enumeration over permutation models of small finite Coxeter groups.

use std::collections::HashSet;

use num_bigint::BigInt;
use thiserror::Error;

use crate::coxeter::{FiniteTypeLabel, Order};
use crate::polyarith::IntPolynomial;

/// Default bound on the number of enumerated elements.
pub const DEFAULT_ELEMENT_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("no permutation model for {0}")]
    Unsupported(FiniteTypeLabel),
    #[error("enumeration exceeded {cap} elements")]
    ElementCap { cap: usize },
    #[error("generators {i} and {j} have product order {found}, expected {expected}")]
    WrongOrder { i: usize, j: usize, found: usize, expected: Order },
}

/// Permutation in one-line notation: `p[x]` is the image of point `x`.
pub type Permutation = Vec<u16>;

fn compose(a: &[u16], b: &[u16]) -> Permutation {
    // apply a, then b
    a.iter().map(|&x| b[x as usize]).collect()
}

fn element_order(p: &[u16]) -> usize {
    let id: Permutation = (0..p.len() as u16).collect();
    let mut cur = p.to_vec();
    let mut k = 1;
    while cur != id {
        cur = compose(&cur, p);
        k += 1;
    }
    k
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConcreteGroupModel {
    pub label: FiniteTypeLabel,
    /// Number of points acted on.
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

/// Signed permutations of `n` coordinates act on points `0..2n`;
/// point `k + n` stands for `-k`.
fn signed(n: usize, images: &[(usize, usize, bool)]) -> Permutation {
    let mut p: Permutation = (0..2 * n as u16).collect();
    for &(from, to, flip) in images {
        let (pos, neg) = if flip { (to + n, to) } else { (to, to + n) };
        p[from] = pos as u16;
        p[from + n] = neg as u16;
    }
    p
}

fn swap_coords(n: usize, a: usize, b: usize) -> Permutation {
    signed(n, &[(a, b, false), (b, a, false)])
}

pub fn build_model(label: FiniteTypeLabel) -> Result<ConcreteGroupModel, OracleError> {
    use FiniteTypeLabel::*;
    let (degree, generators) = match label {
        A(n) if n <= 5 => {
            let n = n as usize;
            let gens = (0..n)
                .map(|i| {
                    let mut p: Permutation = (0..=n as u16).collect();
                    p.swap(i, i + 1);
                    p
                })
                .collect();
            (n + 1, gens)
        }
        B(n) if n <= 4 => {
            let n = n as usize;
            let mut gens = vec![signed(n, &[(0, 0, true)])];
            gens.extend((1..n).map(|i| swap_coords(n, i - 1, i)));
            (2 * n, gens)
        }
        D(n) if n <= 5 => {
            let n = n as usize;
            let mut gens = vec![signed(n, &[(0, 1, true), (1, 0, true)])];
            gens.extend((1..n).map(|i| swap_coords(n, i - 1, i)));
            (2 * n, gens)
        }
        I2(m) if m <= 12 => {
            let m = m as u16;
            let s0 = (0..m).map(|i| (m - i) % m).collect();
            let s1 = (0..m).map(|i| (m + 1 - i) % m).collect();
            (m as usize, vec![s0, s1])
        }
        other => return Err(OracleError::Unsupported(other)),
    };
    let model = ConcreteGroupModel { label, degree, generators };
    model.verify_orders()?;
    Ok(model)
}

impl ConcreteGroupModel {
    fn verify_orders(&self) -> Result<(), OracleError> {
        let matrix = self.label.coxeter_matrix();
        for i in 0..self.generators.len() {
            for j in i..self.generators.len() {
                let found = element_order(&compose(&self.generators[i], &self.generators[j]));
                let expected = matrix.order(i, j);
                let ok = match expected {
                    Order::Finite(m) => found == m as usize,
                    Order::Infinite => false,
                };
                if !ok {
                    return Err(OracleError::WrongOrder { i, j, found, expected });
                }
            }
        }
        Ok(())
    }
}

pub fn bfs_growth(model: &ConcreteGroupModel) -> Result<IntPolynomial, OracleError> {
    bfs_growth_capped(model, DEFAULT_ELEMENT_CAP)
}

/// Sphere sizes of the Cayley graph, enumerated level by level.
pub fn bfs_growth_capped(model: &ConcreteGroupModel, cap: usize) -> Result<IntPolynomial, OracleError> {
    let id: Permutation = (0..model.degree as u16).collect();
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut level = vec![id];
    let mut counts: Vec<BigInt> = Vec::new();
    while !level.is_empty() {
        counts.push(BigInt::from(level.len()));
        let mut next = Vec::new();
        for w in &level {
            for s in &model.generators {
                let ws = compose(w, s);
                if seen.insert(ws.clone()) {
                    if seen.len() > cap {
                        return Err(OracleError::ElementCap { cap });
                    }
                    next.push(ws);
                }
            }
        }
        level = next;
    }
    Ok(IntPolynomial::new(counts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::solomon_series;
    use FiniteTypeLabel::*;

    #[test]
    fn small_examples() {
        assert_eq!(bfs_growth(&build_model(A(2)).unwrap()).unwrap(), IntPolynomial::from_i64s(&[1, 2, 2, 1]));
        assert_eq!(bfs_growth(&build_model(A(1)).unwrap()).unwrap(), IntPolynomial::from_i64s(&[1, 1]));
        assert_eq!(
            bfs_growth(&build_model(B(2)).unwrap()).unwrap(),
            IntPolynomial::from_i64s(&[1, 2, 2, 2, 1])
        );
        let b3 = bfs_growth(&build_model(B(3)).unwrap()).unwrap();
        assert_eq!(b3.eval(&BigInt::from(1)), BigInt::from(48));
    }

    #[test]
    fn matches_solomon_on_all_supported_labels() {
        let mut labels: Vec<FiniteTypeLabel> = (1..=5).map(A).collect();
        labels.extend((2..=4).map(B));
        labels.extend([D(4), D(5)]);
        labels.extend((5..=12).map(I2));
        for l in labels {
            let g = bfs_growth(&build_model(l).unwrap()).unwrap();
            assert_eq!(g, solomon_series(&[l]), "{l}");
            let c = g.coeffs();
            assert!(c.iter().eq(c.iter().rev()), "{l} not palindromic");
        }
    }

    #[test]
    fn unsupported_and_cap() {
        assert_eq!(build_model(H3), Err(OracleError::Unsupported(H3)));
        assert_eq!(build_model(A(6)), Err(OracleError::Unsupported(A(6))));
        let a5 = build_model(A(5)).unwrap();
        assert_eq!(bfs_growth_capped(&a5, 100), Err(OracleError::ElementCap { cap: 100 }));
    }
}
