//! Copeland voting and its second-order tie-break variant.

use num_rational::Ratio;

use crate::election::{CandidateId, Election};
use crate::error::Error;
use crate::netadv::NetAdvMatrix;
use crate::rules::WinnerSet;
use crate::Result;

/// The tie weight of Copeland voting, an exact rational in `[0, 1]`.
///
/// Llull's system is alpha = 1; "Copeland voting" in the narrow sense is
/// usually read as alpha = 1/2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct CopelandAlpha(Ratio<i64>);

impl CopelandAlpha {
    pub fn new(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::InvalidInstance("alpha with zero denominator".into()));
        }
        let r = Ratio::new(numer, denom);
        if r < Ratio::from_integer(0) || r > Ratio::from_integer(1) {
            return Err(Error::InvalidInstance(format!("alpha {r} outside [0, 1]")));
        }
        Ok(CopelandAlpha(r))
    }

    pub fn zero() -> Self {
        CopelandAlpha(Ratio::from_integer(0))
    }

    pub fn half() -> Self {
        CopelandAlpha(Ratio::new(1, 2))
    }

    pub fn one() -> Self {
        CopelandAlpha(Ratio::from_integer(1))
    }

    pub fn ratio(self) -> Ratio<i64> {
        self.0
    }
}

impl std::fmt::Display for CopelandAlpha {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.to_integer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

/// Exact Copeland scores: pairwise wins plus `alpha` per pairwise tie.
pub fn copeland_scores(mat: &NetAdvMatrix, alpha: CopelandAlpha) -> Vec<Ratio<i64>> {
    let m = mat.candidate_count();
    (0..m)
        .map(|i| {
            let mut wins = 0i64;
            let mut ties = 0i64;
            for j in 0..m {
                if j == i {
                    continue;
                }
                match mat.get(i, j) {
                    v if v > 0 => wins += 1,
                    0 => ties += 1,
                    _ => {}
                }
            }
            Ratio::from_integer(wins) + alpha.ratio() * Ratio::from_integer(ties)
        })
        .collect()
}

/// Copeland winners: the exact-score argmax set.
pub fn copeland_winners(mat: &NetAdvMatrix, alpha: CopelandAlpha) -> (Vec<Ratio<i64>>, WinnerSet) {
    let scores = copeland_scores(mat, alpha);
    let best = scores.iter().max().expect("m >= 1").clone();
    let winners = WinnerSet::new(
        scores
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == best)
            .map(|(i, _)| CandidateId(i))
            .collect(),
    );
    (scores, winners)
}

/// Second-order Copeland on a pairwise matrix.
///
/// Candidates are compared first by Copeland score, then by the sum of the
/// Copeland scores of their strictly defeated opponents.
pub fn second_order_copeland_winners_from_matrix(
    mat: &NetAdvMatrix,
    alpha: CopelandAlpha,
) -> WinnerSet {
    let m = mat.candidate_count();
    let first = copeland_scores(mat, alpha);
    let keys: Vec<(Ratio<i64>, Ratio<i64>)> = (0..m)
        .map(|i| {
            let defeated_sum = (0..m)
                .filter(|&j| j != i && mat.get(i, j) > 0)
                .map(|j| first[j])
                .fold(Ratio::from_integer(0), |a, b| a + b);
            (first[i], defeated_sum)
        })
        .collect();
    let best = keys.iter().max().expect("m >= 1").clone();
    WinnerSet::new(
        keys.iter()
            .enumerate()
            .filter(|(_, k)| **k == best)
            .map(|(i, _)| CandidateId(i))
            .collect(),
    )
}

/// Second-order Copeland winners of an election.
pub fn second_order_copeland_winners(e: &Election, alpha: CopelandAlpha) -> WinnerSet {
    second_order_copeland_winners_from_matrix(&NetAdvMatrix::from_election(e), alpha)
}
