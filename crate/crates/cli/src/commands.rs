use std::collections::BTreeMap;

use coxgrow::coxeter::{solomon_series, steinberg_growth, CoxeterMatrix, FiniteTypeLabel};
use coxgrow::hfamily::{
    detect_family, difference_identity, extract_h, h_closed_form, nonnegativity_check, sample_admissible_counts,
    HFamily, HFamilyError, DEFAULT_ATTEMPTS_PER_SAMPLE,
};
use coxgrow::oracle::{bfs_growth, build_model};
use coxgrow::polyarith::{IntPolynomial, RationalFunction};
use coxgrow::polyhedron::{
    check_lemma2, count_vector, parse_polyhedron, to_coxeter_matrix, CountVector, PolyhedronError, PolyhedronScheme,
};
use coxgrow::roots::{growth_rate, perron_check, smallest_modulus_root, sturm_isolate, PerronStatus, RootsError};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 1;
pub const EXIT_VALIDATION: u8 = 2;
pub const EXIT_UNCERTIFIED: u8 = 3;

/// A report together with its exit code.
pub struct Outcome {
    pub report: Value,
    pub code: u8,
}

/// Input error: exit 1 with a structured diagnostic.
#[derive(Debug)]
pub struct InputError {
    pub kind: &'static str,
    pub message: String,
}

impl InputError {
    pub fn new(kind: &'static str, message: impl ToString) -> Self {
        InputError { kind, message: message.to_string() }
    }

    pub fn to_json(&self) -> Value {
        json!({ "error": self.kind, "message": self.message })
    }
}

pub struct Settings {
    pub series: usize,
    pub precision: u32,
    pub matrix: bool,
    pub noncompact: bool,
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn skipped(reason: impl ToString) -> Value {
    json!({ "status": "skipped", "reason": reason.to_string() })
}

fn digest(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}

fn read(path: &std::path::Path) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|e| InputError::new("io", format!("{}: {e}", path.display())))
}

fn growth_json(g: &RationalFunction, n: usize) -> (Value, Value) {
    let function = json!({ "numerator": g.numerator().to_string(), "denominator": g.denominator().to_string() });
    let series = match g.taylor_coefficients(n) {
        Ok(c) => Value::Array(c.iter().map(|x| Value::String(x.to_string())).collect()),
        Err(e) => skipped(e),
    };
    (function, series)
}

/// Parsed polyhedron with its counts, or the vertex that breaks the
/// finite-or-cusp classification.
enum Polyhedron {
    Valid { scheme: PolyhedronScheme, counts: CountVector, noncompact: bool },
    BadVertex { message: String },
}

fn load_polyhedron(text: &str, force_noncompact: bool) -> Result<Polyhedron, InputError> {
    let scheme = parse_polyhedron(text).map_err(|e| InputError::new("polyhedron", e))?;
    match count_vector(&scheme) {
        Ok(counts) => {
            let declared = scheme.is_noncompact().map_err(|e| InputError::new("polyhedron", e))?;
            Ok(Polyhedron::Valid { noncompact: force_noncompact || declared, scheme, counts })
        }
        Err(e @ PolyhedronError::NotCoxeterVertex { .. }) => Ok(Polyhedron::BadVertex { message: e.to_string() }),
        Err(e) => Err(InputError::new("polyhedron", e)),
    }
}

fn vertex_failure(input: String, message: String) -> Outcome {
    Outcome {
        report: json!({
            "input": input,
            "vertex_types": { "pass": false, "reason": message },
        }),
        code: EXIT_VALIDATION,
    }
}

pub fn growth(path: &std::path::Path, s: &Settings) -> Result<Outcome, InputError> {
    let text = read(path)?;
    let mut report = serde_json::Map::new();
    report.insert("input".into(), Value::String(digest(text.as_bytes())));
    let mut code = EXIT_OK;
    let (matrix, counts) = if s.matrix {
        let m = CoxeterMatrix::parse(&text).map_err(|e| InputError::new("matrix", e))?;
        (m, None)
    } else {
        match load_polyhedron(&text, s.noncompact)? {
            Polyhedron::Valid { scheme, counts, noncompact } => (to_coxeter_matrix(&scheme), Some((counts, noncompact))),
            Polyhedron::BadVertex { message } => {
                return Ok(vertex_failure(digest(text.as_bytes()), message));
            }
        }
    };
    match &counts {
        Some((c, noncompact)) => {
            let lemma = check_lemma2(c, *noncompact);
            if !lemma.pass {
                code = EXIT_VALIDATION;
            }
            report.insert("counts".into(), to_value(c));
            report.insert("identities".into(), to_value(&lemma));
        }
        None => {
            report.insert("counts".into(), skipped("matrix input"));
            report.insert("identities".into(), skipped("matrix input"));
        }
    }
    let g = steinberg_growth(&matrix).map_err(|e| InputError::new("matrix", e))?;
    let (function, series) = growth_json(&g, s.series);
    report.insert("growth_function".into(), function);
    report.insert("series".into(), series);

    let family = counts.as_ref().map(|(c, _)| detect_family(c));
    match family {
        Some(Ok(fam)) => {
            let c = &counts.as_ref().unwrap().0;
            let h = extract_h(&g, fam);
            report.insert(
                "h".into(),
                match &h {
                    Ok(h) => json!({ "family": fam, "polynomial": h.to_string() }),
                    Err(e) => skipped(e),
                },
            );
            let nn = nonnegativity_check(fam, c);
            if nn.preconditions_hold() && !nn.pass {
                code = code.max(EXIT_VALIDATION);
            }
            report.insert("nonnegativity".into(), to_value(&nn));
        }
        Some(Err(e)) => {
            report.insert("h".into(), skipped(&e));
            report.insert("nonnegativity".into(), skipped(e));
        }
        None => {
            report.insert("h".into(), skipped("matrix input"));
            report.insert("nonnegativity".into(), skipped("matrix input"));
        }
    }
    match growth_rate(&g, s.precision) {
        Ok(rate) => {
            report.insert("growth_rate".into(), to_value(&rate));
        }
        Err(e) => {
            if code == EXIT_OK {
                code = EXIT_UNCERTIFIED;
            }
            report.insert("growth_rate".into(), skipped(e));
        }
    }
    let verdict = perron_check(&g, s.precision);
    if verdict.status == PerronStatus::NotCertified && code == EXIT_OK {
        code = EXIT_UNCERTIFIED;
    }
    report.insert("perron".into(), to_value(&verdict));
    Ok(Outcome { report: Value::Object(report), code })
}

pub fn check(path: &std::path::Path, s: &Settings) -> Result<Outcome, InputError> {
    let text = read(path)?;
    let input = digest(text.as_bytes());
    match load_polyhedron(&text, s.noncompact)? {
        Polyhedron::BadVertex { message } => Ok(vertex_failure(input, message)),
        Polyhedron::Valid { counts, noncompact, .. } => {
            let lemma = check_lemma2(&counts, noncompact);
            Ok(Outcome {
                code: if lemma.pass { EXIT_OK } else { EXIT_VALIDATION },
                report: json!({
                    "input": input,
                    "vertex_types": { "pass": true },
                    "noncompact": noncompact,
                    "counts": to_value(&counts),
                    "identities": to_value(&lemma),
                }),
            })
        }
    }
}

pub fn hverify(path: &std::path::Path, s: &Settings) -> Result<Outcome, InputError> {
    let text = read(path)?;
    let input = digest(text.as_bytes());
    let (scheme, counts) = match load_polyhedron(&text, s.noncompact)? {
        Polyhedron::BadVertex { message } => return Ok(vertex_failure(input, message)),
        Polyhedron::Valid { scheme, counts, .. } => (scheme, counts),
    };
    let family = match detect_family(&counts) {
        Ok(f) => f,
        Err(e) => {
            return Ok(Outcome {
                report: json!({ "input": input, "family": skipped(&e) }),
                code: EXIT_VALIDATION,
            })
        }
    };
    let g = steinberg_growth(&to_coxeter_matrix(&scheme)).map_err(|e| InputError::new("matrix", e))?;
    let extracted = extract_h(&g, family);
    let mut report = serde_json::Map::new();
    report.insert("input".into(), Value::String(input));
    report.insert("family".into(), to_value(&family));
    report.insert("counts".into(), to_value(&counts));
    let extracted = match extracted {
        Ok(h) => h,
        Err(e) => {
            report.insert("extracted".into(), skipped(&e));
            return Ok(Outcome { report: Value::Object(report), code: EXIT_VALIDATION });
        }
    };
    report.insert("extracted".into(), Value::String(extracted.to_string()));
    let code = match h_closed_form(family, &counts) {
        Ok(closed) => {
            let top = extracted.degree().unwrap_or(0).max(closed.degree().unwrap_or(0));
            let rows: Vec<Value> = (0..=top)
                .map(|k| {
                    let (a, b) = (extracted.coeff(k), closed.coeff(k));
                    json!({ "index": k, "extracted": a.to_string(), "closed_form": b.to_string(), "equal": a == b })
                })
                .collect();
            let equal = extracted == closed;
            report.insert("closed_form".into(), Value::String(closed.to_string()));
            report.insert("coefficients".into(), Value::Array(rows));
            report.insert("equal".into(), Value::Bool(equal));
            report.insert("difference".into(), skipped(format!("family {family} has a tabulated closed form")));
            if equal { EXIT_OK } else { EXIT_VALIDATION }
        }
        Err(HFamilyError::NoClosedForm(_)) => {
            let d = difference_identity(&counts).map_err(|e| InputError::new("counts", e))?;
            let ok = d.nonnegative && d.zero_iff_no_quarter_angles;
            report.insert("closed_form".into(), skipped(format!("no tabulated closed form for {family}")));
            report.insert("difference".into(), to_value(&d));
            if ok { EXIT_OK } else { EXIT_VALIDATION }
        }
        Err(e) => {
            report.insert("closed_form".into(), skipped(&e));
            EXIT_VALIDATION
        }
    };
    Ok(Outcome { report: Value::Object(report), code })
}

pub fn sample(family: &str, seed: u64, n: usize, out: Option<&std::path::Path>) -> Result<Outcome, InputError> {
    let family: HFamily = family.parse().map_err(|e| InputError::new("family", e))?;
    let samples = match sample_admissible_counts(family, seed, n, DEFAULT_ATTEMPTS_PER_SAMPLE) {
        Ok(s) => s,
        Err(e) => {
            return Ok(Outcome {
                report: json!({ "family": family, "seed": seed, "requested": n, "sampler": skipped(e) }),
                code: EXIT_UNCERTIFIED,
            })
        }
    };
    let mut failures = Vec::new();
    for (i, c) in samples.iter().enumerate() {
        let r = nonnegativity_check(family, c);
        if !r.pass {
            failures.push(json!({ "sample": i, "counts": to_value(c), "status": r.status }));
        }
    }
    if let Some(path) = out {
        let maps: Vec<BTreeMap<String, u64>> = samples.iter().map(CountVector::to_map).collect();
        let body = serde_json::to_string_pretty(&maps).expect("maps serialize") + "\n";
        std::fs::write(path, body).map_err(|e| InputError::new("io", format!("{}: {e}", path.display())))?;
    }
    let passed = samples.len() - failures.len();
    Ok(Outcome {
        code: if failures.is_empty() { EXIT_OK } else { EXIT_VALIDATION },
        report: json!({
            "family": family,
            "seed": seed,
            "requested": n,
            "passed": passed,
            "failed": failures.len(),
            "failures": failures,
        }),
    })
}

fn parse_poly(text: &str) -> Result<IntPolynomial, InputError> {
    text.parse().map_err(|e| InputError::new("poly", e))
}

pub fn roots(poly: &str, s: &Settings) -> Result<Outcome, InputError> {
    let p = parse_poly(poly)?;
    if p.degree().unwrap_or(0) == 0 {
        return Err(InputError::new("poly", "polynomial must have positive degree"));
    }
    let real = sturm_isolate(&p);
    let (smallest, code) = match smallest_modulus_root(&p, s.precision) {
        Ok(r) => (to_value(&r), EXIT_OK),
        Err(e @ RootsError::NotCertified { .. }) => (skipped(e), EXIT_UNCERTIFIED),
        Err(e) => (skipped(e), EXIT_OK),
    };
    Ok(Outcome {
        report: json!({ "polynomial": p.to_string(), "real_roots": to_value(&real), "smallest_modulus": smallest }),
        code,
    })
}

pub fn perron(path: Option<&std::path::Path>, poly: Option<&str>, s: &Settings) -> Result<Outcome, InputError> {
    let (input, g) = match (path, poly) {
        (_, Some(p)) => {
            let den = parse_poly(p)?;
            let g = RationalFunction::new(IntPolynomial::one(), den).map_err(|e| InputError::new("poly", e))?;
            (Value::String(p.to_string()), g)
        }
        (Some(path), None) => {
            let text = read(path)?;
            let matrix = if s.matrix {
                CoxeterMatrix::parse(&text).map_err(|e| InputError::new("matrix", e))?
            } else {
                let scheme = parse_polyhedron(&text).map_err(|e| InputError::new("polyhedron", e))?;
                to_coxeter_matrix(&scheme)
            };
            let g = steinberg_growth(&matrix).map_err(|e| InputError::new("matrix", e))?;
            (Value::String(digest(text.as_bytes())), g)
        }
        (None, None) => return Err(InputError::new("usage", "give an input file or --poly")),
    };
    let verdict = perron_check(&g, s.precision);
    let code = if verdict.status == PerronStatus::NotCertified { EXIT_UNCERTIFIED } else { EXIT_OK };
    Ok(Outcome { report: json!({ "input": input, "verdict": to_value(&verdict) }), code })
}

fn parse_label(label: &str) -> Result<FiniteTypeLabel, InputError> {
    label.parse().map_err(|e| InputError::new("type", e))
}

pub fn solomon(label: &str, s: &Settings) -> Result<Outcome, InputError> {
    let l = parse_label(label)?;
    let f = solomon_series(&[l]);
    let (_, series) = growth_json(&RationalFunction::from_poly(f.clone()), s.series);
    Ok(Outcome {
        report: json!({
            "type": l.to_string(),
            "exponents": l.exponents(),
            "order": l.order().to_string(),
            "growth": f.to_string(),
            "series": series,
        }),
        code: EXIT_OK,
    })
}

pub fn oracle(label: &str) -> Result<Outcome, InputError> {
    let l = parse_label(label)?;
    let model = build_model(l).map_err(|e| InputError::new("type", e))?;
    let bfs = bfs_growth(&model).map_err(|e| InputError::new("type", e))?;
    let sol = solomon_series(&[l]);
    let agree = bfs == sol;
    Ok(Outcome {
        report: json!({
            "type": l.to_string(),
            "permutation_degree": model.degree,
            "bfs_growth": bfs.to_string(),
            "solomon": sol.to_string(),
            "agree": agree,
        }),
        code: if agree { EXIT_OK } else { EXIT_VALIDATION },
    })
}
