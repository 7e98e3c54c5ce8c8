use serde::Serialize;

use super::{classify_component, Classification, CoxeterError, CoxeterMatrix, FiniteTypeLabel};
use crate::polyarith::{bracket_product, rational_sum, IntPolynomial, RationalFunction, Sign};

/// One finite standard parabolic subgroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParabolicSubset {
    pub generators: Vec<usize>,
    /// Component types, sorted.
    pub labels: Vec<FiniteTypeLabel>,
    #[serde(serialize_with = "display_str")]
    pub growth: IntPolynomial,
}

fn display_str<S: serde::Serializer>(p: &IntPolynomial, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(p)
}

/// All finite standard parabolic subgroups in lexicographic order, `∅` first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParabolicCatalog {
    pub subsets: Vec<ParabolicSubset>,
}

impl ParabolicCatalog {
    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    pub fn contains(&self, generators: &[usize]) -> bool {
        self.subsets.iter().any(|s| s.generators == generators)
    }
}

/// Growth polynomial of a finite Coxeter system from its component types.
pub fn solomon_series(labels: &[FiniteTypeLabel]) -> IntPolynomial {
    let degrees: Vec<u32> = labels
        .iter()
        .flat_map(|l| l.exponents())
        .map(|e| e + 1)
        .collect();
    bracket_product(&degrees).expect("exponent degrees are at least 2")
}

fn finite_labels(matrix: &CoxeterMatrix, subset: &[usize]) -> Option<Vec<FiniteTypeLabel>> {
    let mut labels = Vec::new();
    for comp in matrix.components(subset) {
        match classify_component(matrix, &comp).expect("components are connected") {
            Classification::Finite(l) => labels.push(l),
            Classification::NotFinite => return None,
        }
    }
    labels.sort_unstable();
    Some(labels)
}

pub fn finite_parabolic_subsets(matrix: &CoxeterMatrix) -> ParabolicCatalog {
    let mut subsets = Vec::new();
    let mut current = Vec::new();
    extend(matrix, &mut current, 0, &mut subsets);
    ParabolicCatalog { subsets }
}

// DFS adding only larger indices; a subset that is not finite is not extended.
fn extend(matrix: &CoxeterMatrix, current: &mut Vec<usize>, from: usize, out: &mut Vec<ParabolicSubset>) {
    let Some(labels) = finite_labels(matrix, current) else {
        return;
    };
    out.push(ParabolicSubset {
        generators: current.clone(),
        growth: solomon_series(&labels),
        labels,
    });
    for g in from..matrix.rank() {
        current.push(g);
        extend(matrix, current, g + 1, out);
        current.pop();
    }
}

/// Growth series of the whole group as a reduced rational function.
pub fn steinberg_growth(matrix: &CoxeterMatrix) -> Result<RationalFunction, CoxeterError> {
    let catalog = finite_parabolic_subsets(matrix);
    let terms: Vec<(Sign, RationalFunction)> = catalog
        .subsets
        .iter()
        .map(|s| {
            let sign = if s.generators.len() % 2 == 0 { Sign::Plus } else { Sign::Minus };
            let term = RationalFunction::from_poly(s.growth.clone()).recip().expect("growth polynomial is nonzero");
            (sign, term)
        })
        .collect();
    let sum = rational_sum(terms.iter().map(|(s, r)| (*s, r)));
    if sum.is_zero() {
        return Err(CoxeterError::ZeroAlternatingSum);
    }
    Ok(sum.reciprocal_substitution()?.recip()?)
}
