use std::path::PathBuf;
use std::time::Instant;

use coxgrow::coxeter::steinberg_growth;
use coxgrow::hfamily::{
    detect_family, difference_identity, extract_h, h_closed_form, nonnegativity_check, sample_admissible_counts,
    steinberg_from_counts, HFamily, LineStatus, ALL_FAMILIES, DEFAULT_ATTEMPTS_PER_SAMPLE,
};
use coxgrow::polyarith::IntPolynomial;
use coxgrow::polyhedron::{count_vector, parse_polyhedron, to_coxeter_matrix, CountVector};

fn load(name: &str) -> (CountVector, coxgrow::coxeter::CoxeterMatrix) {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "fixtures", &format!("{name}.json")].iter().collect();
    let s = parse_polyhedron(&std::fs::read_to_string(path).unwrap()).unwrap();
    (count_vector(&s).unwrap(), to_coxeter_matrix(&s))
}

const FAMILY_FIXTURES: [(&str, HFamily); 6] = [
    ("octahedron", HFamily::H2),
    ("h23_cube", HFamily::H23),
    ("h236_pyramid", HFamily::H236),
    ("h25_pyramid", HFamily::H25),
    ("h2356_pyramid", HFamily::H2356),
    ("h23456_cube", HFamily::H23456),
];

#[test]
fn fixtures_detect_their_family() {
    for (name, fam) in FAMILY_FIXTURES {
        let (c, _) = load(name);
        assert_eq!(detect_family(&c).unwrap(), fam, "{name}");
    }
}

#[test]
fn matrix_steinberg_agrees_with_count_level_sum() {
    for (name, _) in FAMILY_FIXTURES {
        let (c, m) = load(name);
        assert_eq!(steinberg_growth(&m).unwrap(), steinberg_from_counts(&c).unwrap(), "{name}");
    }
}

#[test]
fn closed_forms_match_extraction_on_fixtures() {
    for (name, fam) in FAMILY_FIXTURES.iter().take(5) {
        let (c, m) = load(name);
        let h = extract_h(&steinberg_growth(&m).unwrap(), *fam).unwrap();
        assert_eq!(h, h_closed_form(*fam, &c).unwrap(), "{name}");
    }
}

#[test]
fn octahedron_h_is_quadratic() {
    let (c, _) = load("octahedron");
    assert_eq!(h_closed_form(HFamily::H2, &c).unwrap(), IntPolynomial::from_i64s(&[-1, 4, 5]));
}

#[test]
fn sampled_counts_match_closed_forms_and_are_nonnegative() {
    let start = Instant::now();
    for fam in ALL_FAMILIES {
        let samples = sample_admissible_counts(fam, 11, 100, DEFAULT_ATTEMPTS_PER_SAMPLE).unwrap();
        assert_eq!(samples.len(), 100);
        for c in &samples {
            let g = steinberg_from_counts(c).unwrap();
            let h = extract_h(&g, fam).unwrap();
            if fam != HFamily::H23456 {
                assert_eq!(h, h_closed_form(fam, c).unwrap(), "{fam} {:?}", c.to_map());
            }
            let r = nonnegativity_check(fam, c);
            assert!(r.pass, "{fam} {:?}: {}", c.to_map(), r.status);
        }
    }
    assert!(start.elapsed().as_secs() < 60);
}

#[test]
fn sampler_is_deterministic() {
    let a = sample_admissible_counts(HFamily::H236, 3, 10, DEFAULT_ATTEMPTS_PER_SAMPLE).unwrap();
    let b = sample_admissible_counts(HFamily::H236, 3, 10, DEFAULT_ATTEMPTS_PER_SAMPLE).unwrap();
    assert_eq!(a, b);
}

#[test]
fn precondition_failure_is_reported() {
    let (c, _) = load("octahedron");
    let r = nonnegativity_check(HFamily::H23, &c);
    assert!(!r.pass);
    assert_eq!(r.status, "precondition_failed");
}

#[test]
fn difference_identity_on_cube_fixture() {
    let (c, _) = load("h23456_cube");
    let d = difference_identity(&c).unwrap();
    assert!(d.nonnegative);
    assert!(d.zero_iff_no_quarter_angles);
    assert_eq!(d.line(17).unwrap().derived_doubled as u64, 2 * c.vt(2, 4, 4));
    let t16 = d.line(16).unwrap();
    assert_eq!(t16.derived_doubled as u64, c.vt(2, 2, 4) + c.vt(2, 3, 4) + 5 * c.vt(2, 4, 4));
    assert_eq!(t16.status, LineStatus::Agree);
    for k in [10, 8, 5] {
        assert_eq!(d.line(k).unwrap().status, LineStatus::Suspect, "t^{k}");
    }
    assert_eq!(d.line(17).unwrap().status, LineStatus::Disagree);
    assert_eq!(d.line(0).unwrap().status, LineStatus::Disagree);
}

#[test]
fn difference_vanishes_without_quarter_angles() {
    for c in sample_admissible_counts(HFamily::H2356, 5, 20, DEFAULT_ATTEMPTS_PER_SAMPLE).unwrap() {
        let d = difference_identity(&c).unwrap();
        assert!(d.difference_doubled.is_zero());
    }
}

#[test]
fn difference_is_nonnegative_on_samples() {
    for c in sample_admissible_counts(HFamily::H23456, 9, 50, DEFAULT_ATTEMPTS_PER_SAMPLE).unwrap() {
        let d = difference_identity(&c).unwrap();
        assert!(d.zero_iff_no_quarter_angles);
        assert!(d.nonnegative, "{:?}", c.to_map());
    }
}
