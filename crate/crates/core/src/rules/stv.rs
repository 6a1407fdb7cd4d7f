//! Single transferable vote.
//!
//! Each round gives every ballot's point to its highest-ranked surviving
//! candidate. A candidate holding a strict majority of all points wins alone
//! and the count stops. Otherwise every candidate holding the minimum tally
//! is removed simultaneously and support transfers onward; if a round removes
//! the last survivors, that round's removals are the winners.

use crate::election::{CandidateId, Election};
use crate::error::Error;
use crate::rules::WinnerSet;
use crate::Result;

/// One counting round: the tallies of the still-standing candidates and what
/// happened to them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StvRound {
    /// `(candidate, points)` for every candidate alive at the start of the
    /// round, ascending by candidate.
    pub tallies: Vec<(CandidateId, u64)>,
    /// Candidates removed this round; empty when the round ended by majority.
    pub eliminated: Vec<CandidateId>,
    /// Set when a candidate reached a strict majority this round.
    pub majority_winner: Option<CandidateId>,
}

/// Full record of an STV count.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EliminationTrace {
    pub rounds: Vec<StvRound>,
}

impl EliminationTrace {
    /// Eliminated candidates in round order, flattened.
    pub fn elimination_order(&self) -> Vec<Vec<CandidateId>> {
        self.rounds.iter().map(|r| r.eliminated.clone()).collect()
    }
}

/// Runs the count; requires at least one voter and one candidate.
pub fn stv_winners(e: &Election) -> Result<(WinnerSet, EliminationTrace)> {
    let m = e.candidate_count();
    if m == 0 {
        return Err(Error::InvalidInstance("stv over zero candidates".into()));
    }
    let total = e.voter_count();
    if total == 0 {
        return Err(Error::InvalidInstance("stv needs at least one voter".into()));
    }

    let mut alive = vec![true; m];
    let mut trace = EliminationTrace::default();

    loop {
        let mut tally = vec![0u64; m];
        for wb in e.ballots() {
            if let Some(top) = wb.ballot.top_surviving(&alive) {
                tally[top.index()] += wb.count;
            }
        }
        let standing: Vec<(CandidateId, u64)> = (0..m)
            .filter(|&c| alive[c])
            .map(|c| (CandidateId(c), tally[c]))
            .collect();

        if let Some(&(winner, _)) = standing.iter().find(|&&(_, t)| 2 * t > total) {
            trace.rounds.push(StvRound {
                tallies: standing,
                eliminated: Vec::new(),
                majority_winner: Some(winner),
            });
            return Ok((WinnerSet::new(vec![winner]), trace));
        }

        let min = standing.iter().map(|&(_, t)| t).min().expect("alive candidates remain");
        let eliminated: Vec<CandidateId> =
            standing.iter().filter(|&&(_, t)| t == min).map(|&(c, _)| c).collect();
        for c in &eliminated {
            alive[c.index()] = false;
        }
        let none_left = alive.iter().all(|&a| !a);
        trace.rounds.push(StvRound {
            tallies: standing,
            eliminated: eliminated.clone(),
            majority_winner: None,
        });
        if none_left {
            return Ok((WinnerSet::new(eliminated), trace));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::election::{Ballot, WeightedBallot};

    fn wb(idx: &[usize], m: usize, count: u64) -> WeightedBallot {
        WeightedBallot { ballot: Ballot::from_indices(idx, m).unwrap(), count }
    }

    #[test]
    fn immediate_majority() {
        // 3 of 5 first-place points is a strict majority.
        let e = Election::new(
            3,
            vec![wb(&[0, 1, 2], 3, 3), wb(&[1, 0, 2], 3, 1), wb(&[2, 1, 0], 3, 1)],
        )
        .unwrap();
        let (winners, trace) = stv_winners(&e).unwrap();
        assert!(winners.is_unique(CandidateId(0)));
        assert_eq!(trace.rounds.len(), 1);
        assert_eq!(trace.rounds[0].majority_winner, Some(CandidateId(0)));
    }

    #[test]
    fn single_candidate_wins() {
        let e = Election::new(1, vec![wb(&[0], 1, 1)]).unwrap();
        let (winners, _) = stv_winners(&e).unwrap();
        assert!(winners.is_unique(CandidateId(0)));
    }

    #[test]
    fn symmetric_tie_eliminates_both() {
        let e = Election::new(2, vec![wb(&[0, 1], 2, 1), wb(&[1, 0], 2, 1)]).unwrap();
        let (winners, trace) = stv_winners(&e).unwrap();
        assert_eq!(winners.winners(), &[CandidateId(0), CandidateId(1)]);
        assert_eq!(trace.rounds.len(), 1);
        assert_eq!(trace.rounds[0].eliminated.len(), 2);
    }

    #[test]
    fn transfers_follow_surviving_preferences() {
        // c is eliminated first; its supporter transfers to b, which then
        // holds 3 of 5 points.
        let e = Election::new(
            3,
            vec![wb(&[0, 1, 2], 3, 2), wb(&[1, 0, 2], 3, 2), wb(&[2, 1, 0], 3, 1)],
        )
        .unwrap();
        let (winners, trace) = stv_winners(&e).unwrap();
        assert!(winners.is_unique(CandidateId(1)));
        assert_eq!(trace.rounds[0].eliminated, vec![CandidateId(2)]);
    }

    #[test]
    fn tallies_conserve_voters() {
        let e = Election::new(
            4,
            vec![
                wb(&[0, 1, 2, 3], 4, 4),
                wb(&[1, 2, 3, 0], 4, 3),
                wb(&[2, 3, 1, 0], 4, 2),
                wb(&[3, 0, 1, 2], 4, 2),
            ],
        )
        .unwrap();
        let (_, trace) = stv_winners(&e).unwrap();
        for round in &trace.rounds {
            let sum: u64 = round.tallies.iter().map(|&(_, t)| t).sum();
            assert_eq!(sum, e.voter_count());
        }
    }
}
