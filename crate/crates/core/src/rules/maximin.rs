//! Maximin (Simpson-Kramer): maximize the worst pairwise net advantage.

use crate::election::CandidateId;
use crate::netadv::NetAdvMatrix;
use crate::rules::WinnerSet;

/// Per-candidate maximin scores (minimum net advantage over all opponents)
/// and the argmax winner set. A sole candidate wins vacuously.
pub fn maximin_winners(mat: &NetAdvMatrix) -> (Vec<i64>, WinnerSet) {
    let m = mat.candidate_count();
    if m == 1 {
        return (vec![i64::MAX], WinnerSet::new(vec![CandidateId(0)]));
    }
    let scores: Vec<i64> = (0..m)
        .map(|i| (0..m).filter(|&j| j != i).map(|j| mat.get(i, j)).min().expect("m >= 2"))
        .collect();
    let best = *scores.iter().max().expect("m >= 1");
    let winners = WinnerSet::new(
        scores
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == best)
            .map(|(i, _)| CandidateId(i))
            .collect(),
    );
    (scores, winners)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positive_minimum_is_the_condorcet_winner() {
        let mut mat = NetAdvMatrix::zero(3);
        mat.set_pair(0, 1, 2);
        mat.set_pair(0, 2, 2);
        let (scores, winners) = maximin_winners(&mat);
        assert_eq!(scores[0], 2);
        assert!(winners.is_unique(CandidateId(0)));
    }

    #[test]
    fn all_zero_ties_everyone() {
        let (scores, winners) = maximin_winners(&NetAdvMatrix::zero(3));
        assert_eq!(scores, vec![0, 0, 0]);
        assert_eq!(winners.winners().len(), 3);
    }

    #[test]
    fn asymmetric_cycle() {
        // 0 -> 1 (1), 1 -> 2 (1), 2 -> 0 (3): minima are -3, -1, -1, so the
        // two candidates losing narrowly beat the one losing by 3.
        let mut mat = NetAdvMatrix::zero(3);
        mat.set_pair(0, 1, 1);
        mat.set_pair(1, 2, 1);
        mat.set_pair(2, 0, 3);
        let (scores, winners) = maximin_winners(&mat);
        assert_eq!(scores, vec![-3, -1, -1]);
        assert_eq!(winners.winners(), &[CandidateId(1), CandidateId(2)]);
    }

    #[test]
    fn sole_candidate() {
        let (_, winners) = maximin_winners(&NetAdvMatrix::zero(1));
        assert!(winners.is_unique(CandidateId(0)));
    }
}
