//! Source NP problems and desk-scale brute-force oracles.
//!
//! These solvers exist to verify the reductions on small instances; they are
//! deliberately exhaustive and return the lexicographically least
//! certificate, which keeps every downstream artifact deterministic.

mod nmts;
mod sat;
mod vdp2;
mod x3c;

pub use nmts::{solve_2nmts, Nmts2Instance};
pub use sat::{solve_sat, CnfInstance, Literal};
pub use vdp2::{solve_vdp2, Vdp2Instance};
pub use x3c::{solve_x3c, X3cInstance};

/// A validated certificate for one of the source problems.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolutionCertificate {
    /// Indices into the X3C set family forming an exact cover.
    Cover(Vec<usize>),
    /// The two permutations of `1..=k` solving a 2NMTS instance.
    Matching(Vec<u64>, Vec<u64>),
    /// A satisfying Boolean assignment, indexed by variable.
    Assignment(Vec<bool>),
    /// Two vertex-disjoint paths, as vertex sequences.
    Paths(Vec<usize>, Vec<usize>),
}
