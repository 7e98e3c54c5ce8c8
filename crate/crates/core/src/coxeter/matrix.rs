use std::fmt;

use serde_json::Value;

use super::CoxeterError;

/// Order `m_ij` of the product of two generators; `Infinite` means no relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Order {
    Finite(u32),
    Infinite,
}

impl Order {
    /// Coxeter-graph edge: labels 3 and up, including infinity.
    pub fn is_edge(self) -> bool {
        !matches!(self, Order::Finite(1) | Order::Finite(2))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Order::Finite(m) => Some(m),
            Order::Infinite => None,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(m) => write!(f, "{m}"),
            Order::Infinite => write!(f, "inf"),
        }
    }
}

/// Symmetric matrix of generator-pair orders with ones on the diagonal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterMatrix {
    rank: usize,
    orders: Vec<Order>,
}

impl CoxeterMatrix {
    pub fn new(orders: Vec<Vec<Order>>) -> Result<Self, CoxeterError> {
        let rank = orders.len();
        for (i, row) in orders.iter().enumerate() {
            if row.len() != rank {
                return Err(CoxeterError::Malformed(format!(
                    "row {i} has {} entries, expected {rank}",
                    row.len()
                )));
            }
        }
        for i in 0..rank {
            if orders[i][i] != Order::Finite(1) {
                return Err(CoxeterError::Diagonal { index: i, found: orders[i][i] });
            }
            for j in i + 1..rank {
                if orders[i][j] != orders[j][i] {
                    return Err(CoxeterError::Asymmetric { i, j });
                }
                if matches!(orders[i][j], Order::Finite(0) | Order::Finite(1)) {
                    return Err(CoxeterError::OffDiagonalOne { i, j });
                }
            }
        }
        Ok(CoxeterMatrix {
            rank,
            orders: orders.into_iter().flatten().collect(),
        })
    }

    /// Build from the strict upper triangle given as `(i, j, m)` triples;
    /// unspecified pairs default to 2 (commuting generators).
    pub fn from_pairs(rank: usize, pairs: &[(usize, usize, Order)]) -> Result<Self, CoxeterError> {
        let mut m = vec![vec![Order::Finite(2); rank]; rank];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = Order::Finite(1);
        }
        for &(i, j, o) in pairs {
            if i >= rank || j >= rank || i == j {
                return Err(CoxeterError::Malformed(format!("bad generator pair ({i}, {j})")));
            }
            m[i][j] = o;
            m[j][i] = o;
        }
        Self::new(m)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self, i: usize, j: usize) -> Order {
        self.orders[i * self.rank + j]
    }

    pub fn rows(&self) -> Vec<Vec<Order>> {
        self.orders.chunks(self.rank.max(1)).map(|r| r.to_vec()).collect()
    }

    /// Parse the JSON document `{"rank": n, "orders": [[...], ...]}`.
    ///
    /// `orders` is either the full square matrix or its upper triangle
    /// (row `i` holding columns `i..n`). Infinity is `"inf"` or `0`.
    pub fn parse(document: &str) -> Result<Self, CoxeterError> {
        let v: Value = serde_json::from_str(document)
            .map_err(|e| CoxeterError::Malformed(format!("invalid JSON: {e}")))?;
        Self::from_json(&v)
    }

    pub fn from_json(v: &Value) -> Result<Self, CoxeterError> {
        let rank = v
            .get("rank")
            .and_then(Value::as_u64)
            .ok_or_else(|| CoxeterError::Malformed("missing or non-integer field \"rank\"".into()))?
            as usize;
        let rows = v
            .get("orders")
            .and_then(Value::as_array)
            .ok_or_else(|| CoxeterError::Malformed("missing array field \"orders\"".into()))?;
        if rows.len() != rank {
            return Err(CoxeterError::Malformed(format!(
                "\"orders\" has {} rows but rank is {rank}",
                rows.len()
            )));
        }
        let mut parsed: Vec<Vec<Order>> = Vec::with_capacity(rank);
        for (i, row) in rows.iter().enumerate() {
            let row = row
                .as_array()
                .ok_or_else(|| CoxeterError::Malformed(format!("orders[{i}] is not an array")))?;
            let entries = row
                .iter()
                .enumerate()
                .map(|(j, e)| parse_order(e).map_err(|msg| CoxeterError::Malformed(format!("orders[{i}][{j}]: {msg}"))))
                .collect::<Result<Vec<_>, _>>()?;
            parsed.push(entries);
        }
        let triangular = parsed.iter().enumerate().all(|(i, r)| r.len() == rank - i)
            && parsed.iter().any(|r| r.len() != rank);
        if triangular {
            let mut full = vec![vec![Order::Finite(1); rank]; rank];
            for (i, r) in parsed.iter().enumerate() {
                for (k, &o) in r.iter().enumerate() {
                    full[i][i + k] = o;
                    full[i + k][i] = o;
                }
            }
            // diagonal came from the document; keep its value for validation
            for (i, r) in parsed.iter().enumerate() {
                full[i][i] = r[0];
            }
            return Self::new(full);
        }
        Self::new(parsed)
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows()
            .into_iter()
            .map(|r| {
                Value::Array(
                    r.into_iter()
                        .map(|o| match o {
                            Order::Finite(m) => Value::from(m),
                            Order::Infinite => Value::from("inf"),
                        })
                        .collect(),
                )
            })
            .collect();
        serde_json::json!({ "rank": self.rank, "orders": rows })
    }

    /// Connected components of the Coxeter graph restricted to `subset`.
    pub fn components(&self, subset: &[usize]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; subset.len()];
        let mut out = Vec::new();
        for start in 0..subset.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![subset[start]];
            let mut stack = vec![start];
            while let Some(a) = stack.pop() {
                for b in 0..subset.len() {
                    if !seen[b] && self.order(subset[a], subset[b]).is_edge() {
                        seen[b] = true;
                        comp.push(subset[b]);
                        stack.push(b);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

fn parse_order(v: &Value) -> Result<Order, String> {
    match v {
        Value::String(s) if s == "inf" || s == "∞" => Ok(Order::Infinite),
        Value::Number(n) => match n.as_u64() {
            Some(0) => Ok(Order::Infinite),
            Some(m) if m <= u32::MAX as u64 => Ok(Order::Finite(m as u32)),
            _ => Err(format!("invalid order {n}")),
        },
        other => Err(format!("invalid order {other}")),
    }
}
