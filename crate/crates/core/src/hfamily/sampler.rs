use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{nonnegativity_check, HFamily, HFamilyError};
use crate::polyhedron::{check_lemma2, CountVector};

pub const DEFAULT_ATTEMPTS_PER_SAMPLE: u64 = 200_000;

const MAX_ENTRY: u64 = 40;

fn within_bounds(c: &CountVector) -> bool {
    c.to_map().values().all(|&x| x <= MAX_ENTRY)
}

fn draw(family: HFamily, rng: &mut ChaCha8Rng) -> (u64, BTreeMap<[u32; 3], u64>) {
    let mut v2222 = 0;
    let mut triples = BTreeMap::new();
    for t in family.vertex_types() {
        let count = if rng.gen_bool(0.4) { 0 } else { rng.gen_range(1..=8) };
        match t {
            [_, _, _, _] => v2222 = count,
            [a, b, c] => {
                triples.insert([*a, *b, *c], count);
            }
            _ => unreachable!(),
        }
    }
    if family == HFamily::H25 {
        triples.insert([2, 2, 5], 2);
    }
    (v2222, triples)
}

/// Seeded rejection sampler over vertex-type counts.
///
/// Edge and facet counts follow from double counting and Euler's formula;
/// a draw is kept when every entry is at most 40 and the family's
/// preconditions (including the cusp inequality and `f >= 5`) hold.
pub fn sample_admissible_counts(
    family: HFamily,
    seed: u64,
    n: usize,
    attempts_per_sample: u64,
) -> Result<Vec<CountVector>, HFamilyError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let budget = attempts_per_sample.saturating_mul(n as u64);
    let mut out = Vec::with_capacity(n);
    let mut attempts = 0;
    while out.len() < n {
        if attempts >= budget {
            return Err(HFamilyError::SamplerExhausted { family, found: out.len(), requested: n, attempts });
        }
        attempts += 1;
        let (v2222, triples) = draw(family, &mut rng);
        let Ok(c) = CountVector::from_vertex_counts(v2222, &triples) else {
            continue;
        };
        if !within_bounds(&c) || !check_lemma2(&c, true).pass {
            continue;
        }
        if nonnegativity_check(family, &c).preconditions_hold() {
            out.push(c);
        }
    }
    Ok(out)
}
