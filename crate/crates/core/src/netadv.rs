//! Pairwise net advantages and the majority-graph codec.
//!
//! `netadv(i, j)` is the number of voters ranking `i` ahead of `j` minus the
//! number ranking `j` ahead of `i`. The matrix is antisymmetric with zero
//! diagonal, and all off-diagonal entries share the parity of the voter
//! count, so a matrix with mixed parities is realizable by no election.

use crate::election::{CandidateId, Election};
use crate::error::Error;
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// Antisymmetric integer matrix of pairwise net advantages, in votes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NetAdvMatrix {
    m: usize,
    entries: Vec<i64>,
}

impl NetAdvMatrix {
    /// The zero matrix over `m` candidates.
    pub fn zero(m: usize) -> Self {
        NetAdvMatrix { m, entries: vec![0; m * m] }
    }

    /// Builds from a row-major entry table, checking antisymmetry.
    pub fn from_entries(m: usize, entries: Vec<i64>) -> Result<Self> {
        if entries.len() != m * m {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for an {m}x{m} matrix",
                entries.len()
            )));
        }
        let mat = NetAdvMatrix { m, entries };
        for i in 0..m {
            if mat.get(i, i) != 0 {
                return Err(Error::InvalidMatrix(format!("nonzero diagonal at {i}")));
            }
            for j in 0..i {
                if mat.get(i, j) != -mat.get(j, i) {
                    return Err(Error::InvalidMatrix(format!(
                        "entries ({i},{j}) and ({j},{i}) are not antisymmetric"
                    )));
                }
            }
        }
        Ok(mat)
    }

    /// Tallies the matrix of an election; `entries[i][j] = adv(i,j) - adv(j,i)`.
    pub fn from_election(e: &Election) -> Self {
        let m = e.candidate_count();
        let mut mat = NetAdvMatrix::zero(m);
        for wb in e.ballots() {
            let r = wb.ballot.ranking();
            let c = wb.count as i64;
            for a in 0..m {
                for b in (a + 1)..m {
                    let (hi, lo) = (r[a].index(), r[b].index());
                    mat.entries[hi * m + lo] += c;
                    mat.entries[lo * m + hi] -= c;
                }
            }
        }
        mat
    }

    pub fn candidate_count(&self) -> usize {
        self.m
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.m + j]
    }

    /// Sets `netadv(i, j) = v` and `netadv(j, i) = -v`.
    pub fn set_pair(&mut self, i: usize, j: usize, v: i64) {
        assert_ne!(i, j, "diagonal entries are fixed at zero");
        self.entries[i * self.m + j] = v;
        self.entries[j * self.m + i] = -v;
    }

    /// Shared parity of all off-diagonal entries.
    ///
    /// Every election has uniform parity (equal to its voter-count parity),
    /// so a mixed matrix is rejected as unrealizable.
    pub fn parity(&self) -> Result<Parity> {
        if self.m < 2 {
            return Ok(Parity::Even);
        }
        let first = self.get(0, 1).rem_euclid(2);
        for i in 0..self.m {
            for j in 0..self.m {
                if i != j && self.get(i, j).rem_euclid(2) != first {
                    return Err(Error::MixedParity);
                }
            }
        }
        Ok(if first == 0 { Parity::Even } else { Parity::Odd })
    }

    /// Sum of `|netadv|` over unordered pairs.
    pub fn total_margin(&self) -> u64 {
        let mut t = 0u64;
        for i in 0..self.m {
            for j in (i + 1)..self.m {
                t += self.get(i, j).unsigned_abs();
            }
        }
        t
    }
}

/// Candidate with positive net advantage over every opponent, if one exists.
///
/// At most one candidate can beat all others, so the result is unique; cycles
/// and ties yield `None`.
pub fn condorcet_winner(mat: &NetAdvMatrix) -> Option<CandidateId> {
    let m = mat.candidate_count();
    (0..m)
        .find(|&i| (0..m).all(|j| j == i || mat.get(i, j) > 0))
        .map(CandidateId)
}

/// Weighted directed graph of strict pairwise victories.
///
/// Zero-margin pairs carry no edge, so the codec stays total over matrices
/// with ties (the even-parity case).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MajorityGraph {
    pub m: usize,
    /// `(winner, loser, margin)` with `margin > 0`, at most one per pair.
    pub edges: Vec<(CandidateId, CandidateId, u64)>,
}

/// Encodes a matrix as its majority graph; lossless for nonzero margins.
pub fn to_majority_graph(mat: &NetAdvMatrix) -> MajorityGraph {
    let m = mat.candidate_count();
    let mut edges = Vec::new();
    for i in 0..m {
        for j in (i + 1)..m {
            let v = mat.get(i, j);
            if v > 0 {
                edges.push((CandidateId(i), CandidateId(j), v as u64));
            } else if v < 0 {
                edges.push((CandidateId(j), CandidateId(i), (-v) as u64));
            }
        }
    }
    MajorityGraph { m, edges }
}

/// Inverse of [`to_majority_graph`]; absent pairs become zero margins.
pub fn from_majority_graph(g: &MajorityGraph) -> Result<NetAdvMatrix> {
    let mut mat = NetAdvMatrix::zero(g.m);
    for &(w, l, margin) in &g.edges {
        if w == l || w.index() >= g.m || l.index() >= g.m {
            return Err(Error::InvalidMatrix(format!(
                "edge ({}, {}) out of range",
                w.index(),
                l.index()
            )));
        }
        if margin == 0 {
            return Err(Error::InvalidMatrix(format!(
                "zero-weight edge ({}, {}); ties carry no edge",
                w.index(),
                l.index()
            )));
        }
        if mat.get(w.index(), l.index()) != 0 {
            return Err(Error::InvalidMatrix(format!(
                "duplicate or opposing edges for pair ({}, {})",
                w.index(),
                l.index()
            )));
        }
        mat.set_pair(w.index(), l.index(), margin as i64);
    }
    Ok(mat)
}
