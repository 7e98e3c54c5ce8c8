use std::collections::BTreeMap;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{PolyhedronError, PolyhedronScheme, VertexType};

/// Tallies of facets, edges, vertices, edges per order and vertices per type.
///
/// Three-valent vertex types (finite vertices and Euclidean cusps) are keyed
/// by their sorted order triple. Zero entries may be absent.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CountVector {
    pub f: u64,
    pub e: u64,
    pub v: u64,
    pub e_m: BTreeMap<u32, u64>,
    pub v2222: u64,
    pub v_triple: BTreeMap<[u32; 3], u64>,
}

/// Sorted triple that can occur at a vertex: finite or a Euclidean cusp.
pub fn is_admissible_triple(t: [u32; 3]) -> bool {
    t[0] <= t[1] && t[1] <= t[2] && VertexType::from_orders(&t).is_some()
}

impl CountVector {
    pub fn em(&self, m: u32) -> u64 {
        self.e_m.get(&m).copied().unwrap_or(0)
    }

    /// Count of vertices of type `(a, b, c)` in any order.
    pub fn vt(&self, a: u32, b: u32, c: u32) -> u64 {
        let mut t = [a, b, c];
        t.sort_unstable();
        self.v_triple.get(&t).copied().unwrap_or(0)
    }

    /// Orders `m` with `e_m > 0`.
    pub fn edge_orders(&self) -> Vec<u32> {
        self.e_m.iter().filter(|(_, &c)| c > 0).map(|(&m, _)| m).collect()
    }

    /// Derive edge and facet counts from vertex counts by double counting and
    /// Euler's formula. Fails when some `2 e_m` is odd or `f` would be negative.
    pub fn from_vertex_counts(v2222: u64, triples: &BTreeMap<[u32; 3], u64>) -> Result<CountVector, PolyhedronError> {
        let mut twice: BTreeMap<u32, u64> = BTreeMap::new();
        *twice.entry(2).or_default() += 4 * v2222;
        let mut v = v2222;
        for (&t, &c) in triples {
            if !is_admissible_triple(t) {
                return Err(PolyhedronError::InvalidCounts(format!("vertex type {t:?} is not admissible")));
            }
            v += c;
            for m in t {
                *twice.entry(m).or_default() += c;
            }
        }
        let mut e_m = BTreeMap::new();
        for (m, t) in twice {
            if t % 2 != 0 {
                return Err(PolyhedronError::InvalidCounts(format!("2·e{m} = {t} is odd")));
            }
            if t > 0 {
                e_m.insert(m, t / 2);
            }
        }
        let e: u64 = e_m.values().sum();
        if e + 2 < v {
            return Err(PolyhedronError::InvalidCounts("Euler's formula gives a negative facet count".into()));
        }
        Ok(CountVector {
            f: e + 2 - v,
            e,
            v,
            e_m,
            v2222,
            v_triple: triples.iter().filter(|(_, &c)| c > 0).map(|(&t, &c)| (t, c)).collect(),
        })
    }

    /// Flat map with keys `f`, `e`, `v`, `e<m>`, `v2222` and `v<abc>`
    /// (`v2_2_10` when an order has two digits).
    pub fn to_map(&self) -> BTreeMap<String, u64> {
        let mut out = BTreeMap::new();
        out.insert("f".to_string(), self.f);
        out.insert("e".to_string(), self.e);
        out.insert("v".to_string(), self.v);
        out.insert("v2222".to_string(), self.v2222);
        for (m, c) in &self.e_m {
            out.insert(format!("e{m}"), *c);
        }
        for (t, c) in &self.v_triple {
            out.insert(triple_key(*t), *c);
        }
        out
    }

    pub fn from_map(map: &BTreeMap<String, u64>) -> Result<CountVector, PolyhedronError> {
        let mut cv = CountVector::default();
        let bad = |k: &str| PolyhedronError::InvalidCounts(format!("unknown count key {k:?}"));
        for (k, &c) in map {
            match k.as_str() {
                "f" => cv.f = c,
                "e" => cv.e = c,
                "v" => cv.v = c,
                "v2222" => cv.v2222 = c,
                _ if k.starts_with('e') => {
                    let m: u32 = k[1..].parse().map_err(|_| bad(k))?;
                    if m < 2 {
                        return Err(bad(k));
                    }
                    cv.e_m.insert(m, c);
                }
                _ if k.starts_with('v') => {
                    let t = parse_triple(&k[1..]).ok_or_else(|| bad(k))?;
                    if !is_admissible_triple(t) {
                        return Err(PolyhedronError::InvalidCounts(format!("{k} is not an admissible vertex type")));
                    }
                    cv.v_triple.insert(t, c);
                }
                _ => return Err(bad(k)),
            }
        }
        Ok(cv)
    }
}

fn triple_key(t: [u32; 3]) -> String {
    if t.iter().all(|&m| m < 10) {
        format!("v{}{}{}", t[0], t[1], t[2])
    } else {
        format!("v{}_{}_{}", t[0], t[1], t[2])
    }
}

fn parse_triple(s: &str) -> Option<[u32; 3]> {
    let parts: Vec<u32> = if s.contains('_') {
        s.split('_').map(|p| p.parse().ok()).collect::<Option<_>>()?
    } else {
        s.chars().map(|c| c.to_digit(10)).collect::<Option<_>>()?
    };
    <[u32; 3]>::try_from(parts).ok()
}

impl Serialize for CountVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_map().serialize(s)
    }
}

impl<'de> Deserialize<'de> for CountVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let map = BTreeMap::<String, u64>::deserialize(d)?;
        CountVector::from_map(&map).map_err(serde::de::Error::custom)
    }
}

pub fn count_vector(scheme: &PolyhedronScheme) -> Result<CountVector, PolyhedronError> {
    let mut cv = CountVector {
        f: scheme.facets.len() as u64,
        e: scheme.edges.len() as u64,
        v: scheme.vertices.len() as u64,
        ..CountVector::default()
    };
    for e in &scheme.edges {
        *cv.e_m.entry(e.m).or_default() += 1;
    }
    for t in scheme.vertex_types()? {
        match t.triple() {
            None => cv.v2222 += 1,
            Some(tr) => *cv.v_triple.entry(tr).or_default() += 1,
        }
    }
    Ok(cv)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_roundtrip() {
        let mut triples = BTreeMap::new();
        triples.insert([2, 2, 12], 2);
        triples.insert([2, 3, 6], 2);
        triples.insert([2, 2, 6], 2);
        triples.insert([2, 3, 3], 2);
        let cv = CountVector::from_vertex_counts(1, &triples).unwrap();
        let map = cv.to_map();
        assert!(map.contains_key("v2_2_12"));
        assert_eq!(CountVector::from_map(&map).unwrap(), cv);
        let json = serde_json::to_string(&cv).unwrap();
        assert_eq!(serde_json::from_str::<CountVector>(&json).unwrap(), cv);
    }

    #[test]
    fn from_vertex_counts_rejects_odd_edges() {
        let mut triples = BTreeMap::new();
        triples.insert([2, 2, 5], 1);
        assert!(CountVector::from_vertex_counts(1, &triples).is_err());
        triples.insert([2, 2, 5], 2);
        triples.insert([2, 2, 2], 2);
        let cv = CountVector::from_vertex_counts(1, &triples).unwrap();
        assert_eq!((cv.f, cv.e, cv.v, cv.em(5)), (5, 8, 5, 1));
    }

    #[test]
    fn rejects_bad_keys() {
        let mut m = BTreeMap::new();
        m.insert("v237".to_string(), 1);
        assert!(CountVector::from_map(&m).is_err());
        let mut m = BTreeMap::new();
        m.insert("x".to_string(), 1);
        assert!(CountVector::from_map(&m).is_err());
    }
}
