//! Tideman ranked pairs.
//!
//! Positive-margin pairs are processed in descending margin order, ties
//! broken lexicographically on `(winner, loser)` under a caller-supplied
//! candidate ordering. A pair is locked unless it would close a cycle. The
//! locked graph is acyclic, so a source exists; when several do, the
//! tiebreak-least source is returned. Zero-margin pairs are never locked.

use crate::election::CandidateId;
use crate::error::Error;
use crate::netadv::NetAdvMatrix;
use crate::Result;

/// The acyclic graph of locked pairwise victories.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LockedGraph {
    pub m: usize,
    /// Locked `(winner, loser)` pairs in lock order.
    pub edges: Vec<(CandidateId, CandidateId)>,
}

impl LockedGraph {
    /// Candidates with no incoming locked edge, ascending.
    pub fn sources(&self) -> Vec<CandidateId> {
        let mut has_in = vec![false; self.m];
        for &(_, l) in &self.edges {
            has_in[l.index()] = true;
        }
        (0..self.m).filter(|&c| !has_in[c]).map(CandidateId).collect()
    }

    fn reaches(&self, adj: &[Vec<usize>], from: usize, to: usize) -> bool {
        let mut stack = vec![from];
        let mut seen = vec![false; self.m];
        while let Some(v) = stack.pop() {
            if v == to {
                return true;
            }
            if seen[v] {
                continue;
            }
            seen[v] = true;
            stack.extend(adj[v].iter().copied());
        }
        false
    }
}

/// Runs ranked pairs; returns the winner and the locked graph.
pub fn ranked_pairs_winner(
    mat: &NetAdvMatrix,
    tiebreak: &[CandidateId],
) -> Result<(CandidateId, LockedGraph)> {
    let m = mat.candidate_count();
    if m == 0 {
        return Err(Error::InvalidInstance("ranked pairs over zero candidates".into()));
    }
    if tiebreak.len() != m {
        return Err(Error::DimensionMismatch(format!(
            "tiebreak order over {} candidates for m={m}",
            tiebreak.len()
        )));
    }
    let mut rank = vec![usize::MAX; m];
    for (pos, c) in tiebreak.iter().enumerate() {
        if c.index() >= m || rank[c.index()] != usize::MAX {
            return Err(Error::InvalidInstance("tiebreak order is not a permutation".into()));
        }
        rank[c.index()] = pos;
    }

    let mut pairs: Vec<(i64, usize, usize)> = Vec::new();
    for i in 0..m {
        for j in 0..m {
            if i != j && mat.get(i, j) > 0 {
                pairs.push((mat.get(i, j), i, j));
            }
        }
    }
    pairs.sort_by(|a, b| {
        b.0.cmp(&a.0).then(rank[a.1].cmp(&rank[b.1])).then(rank[a.2].cmp(&rank[b.2]))
    });

    let mut graph = LockedGraph { m, edges: Vec::new() };
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (_, w, l) in pairs {
        // Adding w -> l closes a cycle iff l already reaches w.
        if !graph.reaches(&adj, l, w) {
            adj[w].push(l);
            graph.edges.push((CandidateId(w), CandidateId(l)));
        }
    }

    let winner = *graph
        .sources()
        .iter()
        .min_by_key(|c| rank[c.index()])
        .expect("a DAG always has a source");
    Ok((winner, graph))
}
