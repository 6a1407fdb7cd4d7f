//! Positional scoring protocols.

use crate::election::{CandidateId, Election};
use crate::error::Error;
use crate::rules::WinnerSet;
use crate::Result;

/// A family of per-position point vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScoringRule {
    /// `(m-1, m-2, ..., 0)`.
    Borda,
    /// `(1, 0, ..., 0)`.
    Plurality,
    /// `(1, ..., 1, 0)`.
    Veto,
    /// Any explicit non-increasing vector.
    Custom(Vec<u64>),
}

impl ScoringRule {
    /// The point vector for an `m`-candidate election.
    pub fn vector(&self, m: usize) -> Result<Vec<u64>> {
        if m == 0 {
            return Err(Error::InvalidInstance("scoring over zero candidates".into()));
        }
        let v = match self {
            ScoringRule::Borda => (0..m).rev().map(|p| p as u64).collect(),
            ScoringRule::Plurality => {
                let mut v = vec![0; m];
                v[0] = 1;
                v
            }
            ScoringRule::Veto => {
                let mut v = vec![1; m];
                v[m - 1] = 0;
                v
            }
            ScoringRule::Custom(v) => v.clone(),
        };
        if v.len() != m {
            return Err(Error::DimensionMismatch(format!(
                "score vector of length {} for m={m}",
                v.len()
            )));
        }
        if v.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInstance("score vector must be non-increasing".into()));
        }
        Ok(v)
    }
}

/// Tallies a scoring protocol; returns per-candidate totals and the argmax set.
pub fn scoring_winners(e: &Election, vector: &[u64]) -> Result<(Vec<u64>, WinnerSet)> {
    let m = e.candidate_count();
    if vector.len() != m {
        return Err(Error::DimensionMismatch(format!(
            "score vector of length {} for m={m}",
            vector.len()
        )));
    }
    let mut scores = vec![0u64; m];
    for wb in e.ballots() {
        for (pos, c) in wb.ballot.ranking().iter().enumerate() {
            scores[c.index()] += wb.count * vector[pos];
        }
    }
    let best = *scores.iter().max().expect("m >= 1");
    let winners = WinnerSet::new(
        scores
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == best)
            .map(|(i, _)| CandidateId(i))
            .collect(),
    );
    Ok((scores, winners))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::election::{Ballot, WeightedBallot};

    #[test]
    fn borda_single_ballot() {
        // a > b > c gives two points to a, one to b, none to c.
        let e = Election::new(
            3,
            vec![WeightedBallot {
                ballot: Ballot::from_indices(&[0, 1, 2], 3).unwrap(),
                count: 1,
            }],
        )
        .unwrap();
        let v = ScoringRule::Borda.vector(3).unwrap();
        let (scores, winners) = scoring_winners(&e, &v).unwrap();
        assert_eq!(scores, vec![2, 1, 0]);
        assert!(winners.is_unique(CandidateId(0)));
    }

    #[test]
    fn empty_election_everyone_ties_at_zero() {
        let e = Election::empty(3);
        let v = ScoringRule::Borda.vector(3).unwrap();
        let (scores, winners) = scoring_winners(&e, &v).unwrap();
        assert_eq!(scores, vec![0, 0, 0]);
        assert_eq!(winners.winners().len(), 3);
    }

    #[test]
    fn plurality_majority() {
        let e = Election::new(
            2,
            vec![
                WeightedBallot { ballot: Ballot::from_indices(&[0, 1], 2).unwrap(), count: 3 },
                WeightedBallot { ballot: Ballot::from_indices(&[1, 0], 2).unwrap(), count: 2 },
            ],
        )
        .unwrap();
        let v = ScoringRule::Plurality.vector(2).unwrap();
        let (scores, winners) = scoring_winners(&e, &v).unwrap();
        assert_eq!(scores, vec![3, 2]);
        assert!(winners.is_unique(CandidateId(0)));
    }

    #[test]
    fn vector_length_mismatch_is_an_error() {
        let e = Election::empty(3);
        assert!(scoring_winners(&e, &[1, 0]).is_err());
        assert!(ScoringRule::Custom(vec![1, 2, 0]).vector(3).is_err());
    }
}
