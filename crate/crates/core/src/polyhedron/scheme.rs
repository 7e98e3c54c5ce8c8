use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::PolyhedronError;
use crate::coxeter::{CoxeterMatrix, Order};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub facets: [usize; 2],
    pub m: u32,
}

/// Validated combinatorial polyhedron with dihedral-angle labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyhedronScheme {
    pub facets: Vec<String>,
    pub edges: Vec<Edge>,
    /// Cyclically ordered facet indices, three or four per vertex.
    pub vertices: Vec<Vec<usize>>,
    /// Value of the document's `noncompact` field, if present.
    pub declared_noncompact: Option<bool>,
    edge_index: HashMap<(usize, usize), usize>,
}

/// Vertex classification by incident edge orders, sorted ascending.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexType {
    Cusp2222,
    EuclideanCusp(u32, u32, u32),
    FiniteVertex(u32, u32, u32),
}

impl VertexType {
    pub fn is_cusp(self) -> bool {
        !matches!(self, VertexType::FiniteVertex(..))
    }

    /// Orders of the incident edges.
    pub fn orders(self) -> Vec<u32> {
        match self {
            VertexType::Cusp2222 => vec![2; 4],
            VertexType::EuclideanCusp(a, b, c) | VertexType::FiniteVertex(a, b, c) => vec![a, b, c],
        }
    }

    /// `Some` for three-valent vertices.
    pub fn triple(self) -> Option<[u32; 3]> {
        match self {
            VertexType::Cusp2222 => None,
            VertexType::EuclideanCusp(a, b, c) | VertexType::FiniteVertex(a, b, c) => Some([a, b, c]),
        }
    }

    /// Classify a vertex from its incident edge orders (any cyclic order).
    pub fn from_orders(orders: &[u32]) -> Option<VertexType> {
        match orders {
            [_, _, _, _] => orders.iter().all(|&m| m == 2).then_some(VertexType::Cusp2222),
            [_, _, _] => {
                let mut s = [orders[0], orders[1], orders[2]];
                s.sort_unstable();
                let [a, b, c] = s.map(u64::from);
                if a < 2 {
                    return None;
                }
                // compare 1/a + 1/b + 1/c with 1
                let lhs = b * c + a * c + a * b;
                let rhs = a * b * c;
                match lhs.cmp(&rhs) {
                    std::cmp::Ordering::Greater => Some(VertexType::FiniteVertex(s[0], s[1], s[2])),
                    std::cmp::Ordering::Equal => Some(VertexType::EuclideanCusp(s[0], s[1], s[2])),
                    std::cmp::Ordering::Less => None,
                }
            }
            _ => None,
        }
    }

    /// Compact key: `2222`, `236`, `2210`.
    pub fn key(self) -> String {
        self.orders().iter().map(|m| m.to_string()).collect()
    }
}

impl Serialize for VertexType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.key())
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeDoc {
    facets: [String; 2],
    m: u32,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SchemeDoc {
    #[serde(default)]
    #[allow(dead_code)]
    name: Option<String>,
    facets: Vec<String>,
    edges: Vec<EdgeDoc>,
    vertices: Vec<Vec<String>>,
    #[serde(default)]
    noncompact: Option<bool>,
}

fn key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

pub fn parse_polyhedron(document: &str) -> Result<PolyhedronScheme, PolyhedronError> {
    let doc: SchemeDoc = serde_json::from_str(document).map_err(|e| PolyhedronError::Malformed(e.to_string()))?;
    let mut names: BTreeMap<&str, usize> = BTreeMap::new();
    for (i, f) in doc.facets.iter().enumerate() {
        if names.insert(f, i).is_some() {
            return Err(PolyhedronError::DuplicateFacet(f.clone()));
        }
    }
    let lookup = |name: &str, context: String| {
        names
            .get(name)
            .copied()
            .ok_or_else(|| PolyhedronError::UnknownFacet { name: name.to_string(), context })
    };
    let mut edges = Vec::with_capacity(doc.edges.len());
    let mut edge_index = HashMap::new();
    for (k, e) in doc.edges.iter().enumerate() {
        let [a, b] = &e.facets;
        let ia = lookup(a, format!("edges[{k}]"))?;
        let ib = lookup(b, format!("edges[{k}]"))?;
        if ia == ib {
            return Err(PolyhedronError::SelfEdge(a.clone()));
        }
        if e.m < 2 {
            return Err(PolyhedronError::InvalidOrder { a: a.clone(), b: b.clone(), m: e.m });
        }
        if edge_index.insert(key(ia, ib), k).is_some() {
            return Err(PolyhedronError::DuplicateEdge(a.clone(), b.clone()));
        }
        edges.push(Edge { facets: [ia, ib], m: e.m });
    }
    let mut incidence = vec![0usize; edges.len()];
    let mut vertices = Vec::with_capacity(doc.vertices.len());
    for (index, vtx) in doc.vertices.iter().enumerate() {
        if !(3..=4).contains(&vtx.len()) {
            return Err(PolyhedronError::VertexArity { index, len: vtx.len() });
        }
        let ids = vtx
            .iter()
            .map(|n| lookup(n, format!("vertices[{index}]")))
            .collect::<Result<Vec<usize>, _>>()?;
        for (p, &x) in ids.iter().enumerate() {
            if ids[..p].contains(&x) {
                return Err(PolyhedronError::RepeatedFacet { index, name: vtx[p].clone() });
            }
        }
        for p in 0..ids.len() {
            let q = (p + 1) % ids.len();
            match edge_index.get(&key(ids[p], ids[q])) {
                Some(&k) => incidence[k] += 1,
                None => {
                    return Err(PolyhedronError::NonEdgePair {
                        index,
                        a: vtx[p].clone(),
                        b: vtx[q].clone(),
                    })
                }
            }
        }
        vertices.push(ids);
    }
    for (k, &count) in incidence.iter().enumerate() {
        if count != 2 {
            let [a, b] = &doc.edges[k].facets;
            return Err(PolyhedronError::EdgeEndpoints { a: a.clone(), b: b.clone(), count });
        }
    }
    Ok(PolyhedronScheme {
        facets: doc.facets,
        edges,
        vertices,
        declared_noncompact: doc.noncompact,
        edge_index,
    })
}

impl PolyhedronScheme {
    pub fn edge_order(&self, a: usize, b: usize) -> Option<u32> {
        self.edge_index.get(&key(a, b)).map(|&k| self.edges[k].m)
    }

    /// Orders of the edges around a vertex tuple, in cyclic order.
    pub fn vertex_orders(&self, vertex: &[usize]) -> Option<Vec<u32>> {
        (0..vertex.len())
            .map(|p| self.edge_order(vertex[p], vertex[(p + 1) % vertex.len()]))
            .collect()
    }

    pub fn vertex_types(&self) -> Result<Vec<VertexType>, PolyhedronError> {
        self.vertices.iter().map(|v| vertex_type(self, v)).collect()
    }

    /// The declared flag, or else whether any vertex is a cusp.
    pub fn is_noncompact(&self) -> Result<bool, PolyhedronError> {
        match self.declared_noncompact {
            Some(flag) => Ok(flag),
            None => Ok(self.vertex_types()?.iter().any(|t| t.is_cusp())),
        }
    }
}

pub fn vertex_type(scheme: &PolyhedronScheme, vertex: &[usize]) -> Result<VertexType, PolyhedronError> {
    let index = scheme.vertices.iter().position(|v| v.as_slice() == vertex);
    let orders = scheme
        .vertex_orders(vertex)
        .ok_or_else(|| PolyhedronError::Malformed(format!("vertex {vertex:?} is not part of the scheme")))?;
    VertexType::from_orders(&orders).ok_or(PolyhedronError::NotCoxeterVertex {
        index: index.unwrap_or(usize::MAX),
        orders,
    })
}

/// One generator per facet; non-adjacent facets get infinite order.
pub fn to_coxeter_matrix(scheme: &PolyhedronScheme) -> CoxeterMatrix {
    let n = scheme.facets.len();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let o = scheme.edge_order(i, j).map_or(Order::Infinite, Order::Finite);
            pairs.push((i, j, o));
        }
    }
    CoxeterMatrix::from_pairs(n, &pairs).expect("scheme edges have order at least 2")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn vertex_classification() {
        assert_eq!(VertexType::from_orders(&[2, 2, 2, 2]), Some(VertexType::Cusp2222));
        assert_eq!(VertexType::from_orders(&[6, 2, 3]), Some(VertexType::EuclideanCusp(2, 3, 6)));
        assert_eq!(VertexType::from_orders(&[3, 3, 3]), Some(VertexType::EuclideanCusp(3, 3, 3)));
        assert_eq!(VertexType::from_orders(&[5, 3, 2]), Some(VertexType::FiniteVertex(2, 3, 5)));
        assert_eq!(VertexType::from_orders(&[2, 2, 11]), Some(VertexType::FiniteVertex(2, 2, 11)));
        assert_eq!(VertexType::from_orders(&[2, 3, 7]), None);
        assert_eq!(VertexType::from_orders(&[2, 3, 2, 2]), None);
    }

    proptest! {
        #[test]
        fn vertex_type_ignores_rotation_and_reflection(
            o in proptest::collection::vec(2u32..9, 3..=4),
            r in 0usize..4,
        ) {
            let base = VertexType::from_orders(&o);
            let mut rot = o.clone();
            rot.rotate_left(r % o.len());
            prop_assert_eq!(VertexType::from_orders(&rot), base);
            rot.reverse();
            prop_assert_eq!(VertexType::from_orders(&rot), base);
        }
    }
}
