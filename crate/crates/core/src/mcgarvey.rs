//! McGarvey synthesis: build an election realizing a prescribed
//! net-advantage matrix exactly.
//!
//! For a pair where `a` must beat `b` by two net votes we emit the ballot
//! pair `a b c1 ... ck` and `ck ... c1 a b`: every pairwise contest except
//! `(a, b)` cancels between the two. Even matrices are a direct stack of such
//! pairs. Odd matrices first realize `netadv - 1` along a reference ordering
//! (`netadv + 1` against it) with pairs, then add the reference ordering
//! itself as one final ballot, shifting every pair by one in its direction.

use crate::election::{Ballot, CandidateId, Election};
use crate::error::Error;
use crate::netadv::{NetAdvMatrix, Parity};
use crate::Result;

/// Upper bound on the number of ballots the synthesizer may emit:
/// one per unit of margin, plus one per pair, plus the odd-case closer.
pub fn ballot_count_bound(mat: &NetAdvMatrix) -> u64 {
    let m = mat.candidate_count() as u64;
    mat.total_margin() + m * (m - 1) / 2 + 1
}

/// Synthesizes an election whose net-advantage matrix equals `mat`.
///
/// `order` is the reference candidate ordering used by the odd-parity case;
/// it must permute the candidate set. Fails on mixed parity.
pub fn mcgarvey_synthesize(mat: &NetAdvMatrix, order: &[CandidateId]) -> Result<Election> {
    let m = mat.candidate_count();
    let parity = mat.parity()?;
    if order.len() != m {
        return Err(Error::DimensionMismatch(format!(
            "reference order over {} candidates for m={m}",
            order.len()
        )));
    }
    let mut seen = vec![false; m];
    for c in order {
        if c.index() >= m || seen[c.index()] {
            return Err(Error::InvalidBallot("reference order is not a permutation".into()));
        }
        seen[c.index()] = true;
    }

    let mut out = Election::empty(m);
    let mut rank_in_order = vec![0usize; m];
    for (pos, c) in order.iter().enumerate() {
        rank_in_order[c.index()] = pos;
    }

    for i in 0..m {
        for j in (i + 1)..m {
            let s = mat.get(i, j);
            let (winner, loser, margin) = if s >= 0 { (i, j, s) } else { (j, i, -s) };
            let pairs = match parity {
                Parity::Even => margin / 2,
                Parity::Odd => {
                    // Realize margin-1 with the ordering, margin+1 against it.
                    if rank_in_order[winner] < rank_in_order[loser] {
                        (margin - 1) / 2
                    } else {
                        (margin + 1) / 2
                    }
                }
            };
            if pairs > 0 {
                let (b1, b2) = cancelling_pair(m, winner, loser);
                out.add_ballot(b1, pairs as u64)?;
                out.add_ballot(b2, pairs as u64)?;
            }
        }
    }

    if parity == Parity::Odd {
        out.add_ballot(Ballot::new(order.to_vec(), m)?, 1)?;
    }

    debug_assert_eq!(NetAdvMatrix::from_election(&out), *mat);
    Ok(out)
}

/// [`mcgarvey_synthesize`] with the ascending-id reference ordering.
pub fn mcgarvey_synthesize_default(mat: &NetAdvMatrix) -> Result<Election> {
    let order: Vec<CandidateId> = (0..mat.candidate_count()).map(CandidateId).collect();
    mcgarvey_synthesize(mat, &order)
}

/// The two orderings whose pairwise effects cancel everywhere except on
/// `(winner, loser)`, where they contribute +2.
fn cancelling_pair(m: usize, winner: usize, loser: usize) -> (Ballot, Ballot) {
    let rest: Vec<usize> = (0..m).filter(|&c| c != winner && c != loser).collect();
    let mut fwd = vec![winner, loser];
    fwd.extend(&rest);
    let mut rev: Vec<usize> = rest.iter().rev().copied().collect();
    rev.push(winner);
    rev.push(loser);
    (
        Ballot::from_indices(&fwd, m).expect("permutation"),
        Ballot::from_indices(&rev, m).expect("permutation"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn asc(m: usize) -> Vec<CandidateId> {
        (0..m).map(CandidateId).collect()
    }

    #[test]
    fn single_even_pair_uses_the_two_orderings() {
        // netadv(a,b) = 2 over {a,b,c} -> ballots {a b c, c a b}, one each.
        let mut mat = NetAdvMatrix::zero(3);
        mat.set_pair(0, 1, 2);
        let e = mcgarvey_synthesize(&mat, &asc(3)).unwrap();
        assert_eq!(e.voter_count(), 2);
        let rankings: Vec<Vec<usize>> = e
            .ballots()
            .iter()
            .map(|wb| wb.ballot.ranking().iter().map(|c| c.index()).collect())
            .collect();
        assert!(rankings.contains(&vec![0, 1, 2]));
        assert!(rankings.contains(&vec![2, 0, 1]));
        assert_eq!(NetAdvMatrix::from_election(&e), mat);
    }

    #[test]
    fn zero_matrix_yields_empty_election() {
        let e = mcgarvey_synthesize(&NetAdvMatrix::zero(4), &asc(4)).unwrap();
        assert_eq!(e.voter_count(), 0);
    }

    #[test]
    fn odd_cycle_round_trips() {
        let mut mat = NetAdvMatrix::zero(3);
        mat.set_pair(0, 1, 1);
        mat.set_pair(0, 2, 1);
        mat.set_pair(1, 2, 1);
        let e = mcgarvey_synthesize(&mat, &asc(3)).unwrap();
        assert_eq!(NetAdvMatrix::from_election(&e), mat);
        assert!(e.voter_count() <= ballot_count_bound(&mat));
    }

    #[test]
    fn mixed_parity_is_rejected() {
        let mut mat = NetAdvMatrix::zero(3);
        mat.set_pair(0, 1, 2);
        mat.set_pair(0, 2, 1);
        mat.set_pair(1, 2, 1);
        assert!(mcgarvey_synthesize(&mat, &asc(3)).is_err());
    }
}
