//! One PASS/FAIL line per acceptance criterion.
//!
//! Criteria listed in `UNATTAINABLE` are implemented as stated and are
//! expected to print FAIL; the test fails if any other criterion fails or if
//! an unattainable one starts passing.

mod common;

use std::time::{Duration, Instant};

use coxgrow::coxeter::{solomon_series, steinberg_growth, CoxeterMatrix, FiniteTypeLabel};
use coxgrow::hfamily::{
    difference_identity, extract_h, h_closed_form, nonnegativity_check, sample_admissible_counts,
    steinberg_from_counts, HFamily, LineStatus, ALL_FAMILIES, DEFAULT_ATTEMPTS_PER_SAMPLE,
};
use coxgrow::oracle::{bfs_growth, build_model};
use coxgrow::polyarith::{bracket_product, IntPolynomial, RationalFunction};
use coxgrow::polyhedron::{check_lemma2, count_vector, parse_polyhedron, to_coxeter_matrix, CountVector};
use coxgrow::roots::{
    growth_rate, perron_check, smallest_modulus_root, GrowthRate, PerronMethod, PerronStatus, SeparationCertificate,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The printed `t^17` term of the difference polynomial names `v224`; the
/// Steinberg sum gives `v244` (the cusp count), so criterion 4 cannot pass.
const UNATTAINABLE: [u32; 1] = [4];

const FIXTURES: [&str; 8] = [
    "octahedron",
    "h23_cube",
    "h236_pyramid",
    "h25_pyramid",
    "h2356_pyramid",
    "h23456_cube",
    "simplex_336",
    "simplex_353",
];

type Verdict = Result<String, String>;

struct Fixture {
    counts: CountVector,
    matrix: CoxeterMatrix,
    noncompact: bool,
}

fn load(name: &'static str) -> Fixture {
    let s = parse_polyhedron(&common::fixture(&format!("{name}.json"))).unwrap();
    Fixture {
        counts: count_vector(&s).unwrap(),
        matrix: to_coxeter_matrix(&s),
        noncompact: s.is_noncompact().unwrap(),
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || format!("took {elapsed:?}, limit {limit:?}"))
}

fn labels() -> Vec<FiniteTypeLabel> {
    let mut out: Vec<FiniteTypeLabel> = ["A1", "A2", "A3", "A4", "B2", "B3", "D4"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    out.extend((5..=12).map(FiniteTypeLabel::I2));
    out
}

fn criterion_1() -> Verdict {
    let start = Instant::now();
    for l in labels() {
        let bfs = bfs_growth(&build_model(l).map_err(|e| format!("{l}: {e}"))?).map_err(|e| format!("{l}: {e}"))?;
        ensure(bfs == solomon_series(&[l]), || format!("{l}: BFS {bfs} differs from Solomon"))?;
    }
    within(start.elapsed(), Duration::from_secs(10))?;
    Ok(format!("{} types in {:?}", labels().len(), start.elapsed()))
}

fn criterion_2() -> Verdict {
    for l in labels() {
        let sol = solomon_series(&[l]);
        let st = steinberg_growth(&l.coxeter_matrix()).map_err(|e| format!("{l}: {e}"))?;
        ensure(st == RationalFunction::from_poly(sol.clone()), || format!("{l}: Steinberg gives {st}"))?;
        let bfs = bfs_growth(&build_model(l).unwrap()).unwrap();
        let model_order = bfs.eval(&BigInt::one());
        ensure(sol.eval(&BigInt::one()) == model_order, || format!("{l}: f(1) differs from model order"))?;
        ensure(model_order == l.order(), || format!("{l}: model order {model_order}"))?;
    }
    Ok("Steinberg = Solomon and f(1) = |W| for every type".into())
}

fn criterion_3() -> Verdict {
    let start = Instant::now();
    let fx = load("octahedron");
    ensure(fx.counts.f == 8 && fx.counts.v2222 == 6, || "unexpected octahedron counts".into())?;
    let g = steinberg_growth(&fx.matrix).map_err(|e| e.to_string())?;
    let expected_recip = RationalFunction::new(
        &IntPolynomial::t_minus_one() * &IntPolynomial::from_i64s(&[-1, 4, 5]),
        bracket_product(&[2, 2, 2]).unwrap(),
    )
    .unwrap();
    ensure(g.recip().unwrap() == expected_recip, || format!("1/f_P = {}", g.recip().unwrap()))?;
    let h = extract_h(&g, HFamily::H2).map_err(|e| e.to_string())?;
    let closed = h_closed_form(HFamily::H2, &fx.counts).map_err(|e| e.to_string())?;
    ensure(h == closed && h == IntPolynomial::from_i64s(&[-1, 4, 5]), || format!("H = {h}, closed form {closed}"))?;
    let five = BigRational::from_integer(5.into());
    match growth_rate(&g, 128).map_err(|e| e.to_string())? {
        GrowthRate::Rate(t) => ensure(t.lo == five && t.hi == five, || format!("tau in [{}, {}]", t.lo, t.hi))?,
        GrowthRate::Finite => return Err("finite growth".into()),
    }
    let v = perron_check(&g, 128);
    ensure(v.status == PerronStatus::Perron && v.method == Some(PerronMethod::Prop1), || {
        format!("verdict {:?} via {:?}", v.status, v.method)
    })?;
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("tau = 5 exactly, H = {h}, Perron via Prop1 in {:?}", start.elapsed()))
}

fn criterion_4() -> Verdict {
    let families = [
        ("octahedron", HFamily::H2),
        ("h23_cube", HFamily::H23),
        ("h236_pyramid", HFamily::H236),
        ("h25_pyramid", HFamily::H25),
        ("h2356_pyramid", HFamily::H2356),
    ];
    for (name, fam) in families {
        let fx = load(name);
        let h = extract_h(&steinberg_growth(&fx.matrix).unwrap(), fam).map_err(|e| format!("{name}: {e}"))?;
        let closed = h_closed_form(fam, &fx.counts).map_err(|e| format!("{name}: {e}"))?;
        ensure(h == closed, || format!("{name}: extracted {h}, closed form {closed}"))?;
    }
    let fx = load("h23456_cube");
    let c = &fx.counts;
    let (v224, v234, v244) = (c.vt(2, 2, 4) as i64, c.vt(2, 3, 4) as i64, c.vt(2, 4, 4) as i64);
    let d = difference_identity(c).map_err(|e| e.to_string())?;
    let t16 = d.line(16).unwrap().derived_doubled;
    ensure(t16 == v224 + v234 + 5 * v244, || format!("t^16 doubled coefficient {t16}"))?;
    let flagged: Vec<usize> = d.lines.iter().filter(|l| l.status == LineStatus::Suspect).map(|l| l.degree).collect();
    ensure(flagged == [10, 8, 5], || format!("suspect lines {flagged:?}"))?;
    let t17 = d.line(17).unwrap().derived_doubled;
    ensure(t17 == 2 * v224, || {
        format!(
            "closed forms agree on 5 fixtures and t^16 and the repeated-subscript lines t^10, t^8, t^5 are flagged, \
             but the t^17 coefficient is {} (= v244) while the printed term is v224 = {v224}",
            t17 / 2
        )
    })?;
    Ok("closed forms, t^17, t^16 and flagged lines all confirmed".into())
}

fn prop1_form(p: &IntPolynomial) -> bool {
    let Some(n) = p.degree() else { return false };
    let support: Vec<usize> = (1..=n).filter(|&k| !p.coeff(k).is_zero()).collect();
    n >= 2
        && p.constant_term() == -BigInt::one()
        && (1..=n).all(|k| !p.coeff(k).is_negative())
        && support.iter().fold(0, |g, &k| g.gcd(&k)) == 1
}

/// Indices whose coefficient is strictly positive, per family.
fn strictly_positive(f: HFamily) -> &'static [usize] {
    match f {
        HFamily::H2 => &[],
        HFamily::H23 => &[3, 5],
        HFamily::H236 => &[7, 8],
        HFamily::H25 => &[2, 3, 4, 5],
        HFamily::H2356 | HFamily::H23456 => &[15],
    }
}

fn criterion_5() -> Verdict {
    let start = Instant::now();
    let mut linear = 0;
    let mut total = 0;
    for fam in ALL_FAMILIES {
        let samples = sample_admissible_counts(fam, 2024, 100, DEFAULT_ATTEMPTS_PER_SAMPLE).map_err(|e| e.to_string())?;
        for c in &samples {
            total += 1;
            ensure(nonnegativity_check(fam, c).preconditions_hold(), || format!("{fam}: sample outside preconditions"))?;
            let h = extract_h(&steinberg_from_counts(c).unwrap(), fam).map_err(|e| format!("{fam}: {e}"))?;
            let at = |k: usize| h.coeff(k);
            ensure(at(0) == -BigInt::one(), || format!("{fam} {:?}: constant {}", c.to_map(), at(0)))?;
            let deg = h.degree().unwrap_or(0);
            ensure((1..=deg).all(|k| !at(k).is_negative()), || format!("{fam} {:?}: H = {h}", c.to_map()))?;
            ensure(strictly_positive(fam).iter().all(|&k| at(k).is_positive()), || {
                format!("{fam} {:?}: H = {h}", c.to_map())
            })?;
            if !prop1_form(&h) {
                // v2222 = 1 leaves H2 linear with the single positive root 1/(f-4)
                ensure(fam == HFamily::H2 && c.v2222 == 1 && deg == 1, || {
                    format!("{fam} {:?}: H = {h} not in Prop1 form", c.to_map())
                })?;
                linear += 1;
            }
        }
    }
    within(start.elapsed(), Duration::from_secs(60))?;
    Ok(format!(
        "{total} samples, 0 failures, {linear} linear H2 samples (v2222 = 1) outside Prop1's degree >= 2, in {:?}",
        start.elapsed()
    ))
}

fn criterion_6() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut done = 0;
    while done < 500 {
        let n = rng.gen_range(2..=8usize);
        let mut c: Vec<i64> = vec![-1];
        c.extend((1..n).map(|_| rng.gen_range(0..=9)));
        c.push(rng.gen_range(1..=9));
        let p = IntPolynomial::from_i64s(&c);
        if !prop1_form(&p) {
            continue;
        }
        done += 1;
        let r = smallest_modulus_root(&p, 64).map_err(|e| format!("{p}: {e}"))?;
        ensure(matches!(r.certificate, SeparationCertificate::Prop1 { .. }), || format!("{p}: wrong certificate"))?;
        let (lo, hi) = (r.root.lo.to_f64().unwrap(), r.root.hi.to_f64().unwrap());
        ensure(r.root.is_real && lo > 0.0 && hi < 1.0, || format!("{p}: root in [{lo}, {hi}]"))?;
        let inside = common::zeros_inside(&p, lo - 1e-3, 1e-3);
        ensure(inside == 0, || format!("{p}: grid scan finds {inside} zeros below modulus {lo}"))?;
        let near = common::companion_roots(&p).iter().filter(|z| z.norm() < lo + 1e-9).count();
        ensure(near == 1, || format!("{p}: {near} companion roots at the smallest modulus"))?;
    }
    Ok("500 polynomials certified; grid scan and companion eigenvalues agree".into())
}

fn criterion_7() -> Verdict {
    let mut perron = 0;
    for name in FIXTURES {
        let fx = load(name);
        if !fx.noncompact {
            continue;
        }
        let v = perron_check(&steinberg_growth(&fx.matrix).unwrap(), 128);
        ensure(v.status == PerronStatus::Perron, || format!("{name}: {:?} ({})", v.status, v.reason))?;
        perron += 1;
    }
    let mut controls = 0;
    for l in ["A3", "B3", "D4", "H3", "I2(7)"] {
        let l: FiniteTypeLabel = l.parse().unwrap();
        let v = perron_check(&steinberg_growth(&l.coxeter_matrix()).unwrap(), 128);
        ensure(v.status == PerronStatus::NotApplicable, || format!("{l}: {:?}", v.status))?;
        controls += 1;
    }
    for den in ["t^2-1", "t^3-1", "t^4-1", "-t^2+1"] {
        let g = RationalFunction::new(IntPolynomial::one(), den.parse().unwrap()).unwrap();
        let v = perron_check(&g, 128);
        ensure(v.status != PerronStatus::Perron, || format!("1/({den}) reported Perron"))?;
        controls += 1;
    }
    Ok(format!("{perron} non-compact fixtures Perron, {controls} controls not Perron"))
}

fn criterion_8() -> Verdict {
    for name in FIXTURES {
        let fx = load(name);
        let a = steinberg_growth(&fx.matrix).unwrap().taylor_coefficients(30).map_err(|e| format!("{name}: {e}"))?;
        ensure(a[0].is_one(), || format!("{name}: a0 = {}", a[0]))?;
        ensure(a[1] == BigInt::from(fx.counts.f), || format!("{name}: a1 = {}", a[1]))?;
        ensure(a.iter().all(|x| !x.is_negative()), || format!("{name}: negative coefficient"))?;
    }
    Ok(format!("{} fixtures, 30 coefficients each", FIXTURES.len()))
}

fn criterion_9() -> Verdict {
    for name in FIXTURES {
        let fx = load(name);
        let r = check_lemma2(&fx.counts, fx.noncompact);
        ensure(r.pass, || format!("{name}: {:?}", r.failures().map(|c| &c.id).collect::<Vec<_>>()))?;
    }
    let base = load("octahedron").counts;
    let mut keys: Vec<String> = base.to_map().into_keys().collect();
    keys.extend(["e3", "e4", "e5", "e6", "e7", "v222", "v223", "v224", "v225", "v226", "v227", "v233", "v234", "v235", "v236", "v244", "v333"].map(String::from));
    keys.sort();
    keys.dedup();
    let mut hit = std::collections::BTreeSet::new();
    let mut mutants = 0;
    for key in &keys {
        for delta in [1i64, -1] {
            let mut map = base.to_map();
            let cur = *map.get(key).unwrap_or(&0) as i64;
            if cur + delta < 0 {
                continue;
            }
            map.insert(key.clone(), (cur + delta) as u64);
            let m = CountVector::from_map(&map).map_err(|e| format!("{key}{delta:+}: {e}"))?;
            let failures: Vec<String> = check_lemma2(&m, true).failures().map(|c| c.id.clone()).collect();
            ensure(!failures.is_empty(), || format!("{key}{delta:+} breaks no identity"))?;
            hit.extend(failures.into_iter().map(|id| id.split_whitespace().next().unwrap().to_string()));
            mutants += 1;
        }
    }
    let mut zero_cusps = base.clone();
    zero_cusps.v2222 = 0;
    let cusp = check_lemma2(&zero_cusps, true);
    ensure(cusp.failures().any(|c| c.id == "(12)"), || "(12) not triggered by removing cusps".into())?;
    hit.insert("(12)".into());
    let ids: Vec<String> = (3..=12).map(|k| format!("({k})")).collect();
    let missing: Vec<&String> = ids.iter().filter(|id| !hit.contains(*id)).collect();
    ensure(missing.is_empty(), || format!("identities never broken: {missing:?}"))?;
    Ok(format!("{} fixtures pass; {mutants} single-count mutants each break an identity, covering (3)-(12)", FIXTURES.len()))
}

fn main() {
    let criteria: [(u32, fn() -> Verdict); 9] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
    ];
    let mut unexpected = Vec::new();
    for (k, f) in criteria {
        let result = f();
        match &result {
            Ok(detail) => println!("criterion {k}: PASS ({detail})"),
            Err(detail) => println!("criterion {k}: FAIL ({detail})"),
        }
        if result.is_ok() == UNATTAINABLE.contains(&k) {
            unexpected.push(k);
        }
    }
    if !unexpected.is_empty() {
        println!("criteria with unexpected outcome: {unexpected:?}");
        std::process::exit(1);
    }
}
