//! Growth functions and growth rates of Coxeter systems, with a focus on
//! cofinite hyperbolic Coxeter polyhedra in dimension three.
//!
//! The pipeline runs from a combinatorial polyhedron (or a raw Coxeter
//! matrix) through Steinberg's alternating sum over finite parabolic
//! subgroups to an exact growth function, and from there to a certified
//! enclosure of the growth rate and a Perron verdict.

pub mod polyarith;
pub mod coxeter;
pub mod oracle;
pub mod polyhedron;
pub mod roots;
pub mod hfamily;
