#![allow(dead_code)]

use std::f64::consts::TAU;
use std::path::PathBuf;

use coxgrow::polyarith::IntPolynomial;
use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::ToPrimitive;

pub fn fixture(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "fixtures", name].iter().collect();
    std::fs::read_to_string(path).unwrap()
}

fn f64_coeffs(p: &IntPolynomial) -> Vec<f64> {
    p.coeffs().iter().map(|c| c.to_f64().unwrap()).collect()
}

fn horner(c: &[f64], z: Complex64) -> Complex64 {
    c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a)
}

/// Number of zeros inside `|z| = r`, by summing argument increments of `p`
/// along the circle at arc-length resolution `step`.
pub fn zeros_inside(p: &IntPolynomial, r: f64, step: f64) -> i64 {
    let c = f64_coeffs(p);
    let n = ((TAU * r / step).ceil() as usize).max(64);
    let mut total = 0.0;
    let mut prev = horner(&c, Complex64::new(r, 0.0)).arg();
    for k in 1..=n {
        let z = Complex64::from_polar(r, TAU * k as f64 / n as f64);
        let a = horner(&c, z).arg();
        let mut d = a - prev;
        while d > std::f64::consts::PI {
            d -= TAU;
        }
        while d < -std::f64::consts::PI {
            d += TAU;
        }
        total += d;
        prev = a;
    }
    (total / TAU).round() as i64
}

/// All complex roots as eigenvalues of the companion matrix.
pub fn companion_roots(p: &IntPolynomial) -> Vec<Complex64> {
    let c = f64_coeffs(p);
    let n = c.len() - 1;
    let lead = c[n];
    let m = DMatrix::from_fn(n, n, |i, j| {
        if i == 0 {
            -c[n - 1 - j] / lead
        } else if i == j + 1 {
            1.0
        } else {
            0.0
        }
    });
    m.complex_eigenvalues().iter().copied().collect()
}
