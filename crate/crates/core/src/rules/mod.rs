//! Winner determination for every implemented voting rule.
//!
//! All scores are integers or exact rationals; nothing here touches floating
//! point. Every function is a pure function of its inputs.

mod copeland;
mod maximin;
mod ranked_pairs;
mod scoring;
mod stv;

pub use copeland::{
    copeland_scores, copeland_winners, second_order_copeland_winners,
    second_order_copeland_winners_from_matrix, CopelandAlpha,
};
pub use maximin::maximin_winners;
pub use ranked_pairs::{ranked_pairs_winner, LockedGraph};
pub use scoring::{scoring_winners, ScoringRule};
pub use stv::{stv_winners, EliminationTrace, StvRound};

use crate::election::{Ballot, CandidateId, Election};
use crate::error::Error;
use crate::netadv::NetAdvMatrix;
use crate::Result;

/// Non-empty set of winning candidates, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WinnerSet {
    winners: Vec<CandidateId>,
}

impl WinnerSet {
    pub fn new(mut winners: Vec<CandidateId>) -> Self {
        winners.sort();
        winners.dedup();
        assert!(!winners.is_empty(), "winner sets are non-empty");
        WinnerSet { winners }
    }

    pub fn winners(&self) -> &[CandidateId] {
        &self.winners
    }

    pub fn contains(&self, c: CandidateId) -> bool {
        self.winners.binary_search(&c).is_ok()
    }

    /// True iff `c` is the one and only winner.
    pub fn is_unique(&self, c: CandidateId) -> bool {
        self.winners.len() == 1 && self.winners[0] == c
    }
}

/// Identifier of a voting rule together with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rule {
    Scoring(ScoringRule),
    Stv,
    Copeland(CopelandAlpha),
    SecondOrderCopeland(CopelandAlpha),
    Maximin,
    /// Ranked pairs with the ascending-id tiebreak ordering.
    RankedPairs,
}

impl Rule {
    pub fn borda() -> Rule {
        Rule::Scoring(ScoringRule::Borda)
    }

    /// True for the rules the greedy manipulation heuristic supports.
    pub fn is_score_based(&self) -> bool {
        matches!(self, Rule::Scoring(_) | Rule::Copeland(_) | Rule::Maximin)
    }
}

impl std::fmt::Display for Rule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Rule::Scoring(ScoringRule::Borda) => write!(f, "borda"),
            Rule::Scoring(ScoringRule::Plurality) => write!(f, "plurality"),
            Rule::Scoring(ScoringRule::Veto) => write!(f, "veto"),
            Rule::Scoring(ScoringRule::Custom(v)) => {
                write!(f, "scoring:")?;
                for (i, p) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
            Rule::Stv => write!(f, "stv"),
            Rule::Copeland(a) => write!(f, "copeland[{a}]"),
            Rule::SecondOrderCopeland(a) => write!(f, "second-order-copeland[{a}]"),
            Rule::Maximin => write!(f, "maximin"),
            Rule::RankedPairs => write!(f, "ranked-pairs"),
        }
    }
}

/// Evaluates `rule` on a full election.
pub fn evaluate(rule: &Rule, e: &Election) -> Result<WinnerSet> {
    RuleEvaluator::new(rule, e)?.winners_with(&[])
}

/// Rule evaluation against a fixed base election plus varying extra ballots.
///
/// The UCM solvers call this once per candidate coalition profile, so the
/// base tallies (positional scores, net-advantage matrix) are computed once
/// and each probe only adds the coalition's contribution.
pub struct RuleEvaluator<'a> {
    rule: Rule,
    base: &'a Election,
    m: usize,
    score_vector: Option<Vec<u64>>,
    base_scores: Option<Vec<u64>>,
    base_netadv: Option<NetAdvMatrix>,
}

impl<'a> RuleEvaluator<'a> {
    pub fn new(rule: &Rule, base: &'a Election) -> Result<Self> {
        let m = base.candidate_count();
        if m == 0 {
            return Err(Error::InvalidInstance("election with no candidates".into()));
        }
        let mut ev = RuleEvaluator {
            rule: rule.clone(),
            base,
            m,
            score_vector: None,
            base_scores: None,
            base_netadv: None,
        };
        match &ev.rule {
            Rule::Scoring(s) => {
                let v = s.vector(m)?;
                let (scores, _) = scoring_winners(base, &v)?;
                ev.base_scores = Some(scores);
                ev.score_vector = Some(v);
            }
            Rule::Stv => {}
            Rule::Copeland(_) | Rule::SecondOrderCopeland(_) | Rule::Maximin | Rule::RankedPairs => {
                ev.base_netadv = Some(NetAdvMatrix::from_election(base));
            }
        }
        Ok(ev)
    }

    pub fn rule(&self) -> &Rule {
        &self.rule
    }

    fn netadv_with(&self, extra: &[Ballot]) -> NetAdvMatrix {
        let mut mat = self.base_netadv.clone().expect("netadv precomputed");
        for b in extra {
            let r = b.ranking();
            for a in 0..self.m {
                for c in (a + 1)..self.m {
                    let v = mat.get(r[a].index(), r[c].index());
                    mat.set_pair(r[a].index(), r[c].index(), v + 1);
                }
            }
        }
        mat
    }

    /// Winners of the base election extended by `extra` unit ballots.
    pub fn winners_with(&self, extra: &[Ballot]) -> Result<WinnerSet> {
        for b in extra {
            if b.len() != self.m {
                return Err(Error::DimensionMismatch(
                    "extra ballot has the wrong candidate count".into(),
                ));
            }
        }
        match &self.rule {
            Rule::Scoring(_) => {
                let v = self.score_vector.as_ref().expect("vector precomputed");
                let mut scores = self.base_scores.clone().expect("scores precomputed");
                for b in extra {
                    for (pos, c) in b.ranking().iter().enumerate() {
                        scores[c.index()] += v[pos];
                    }
                }
                let best = *scores.iter().max().expect("m >= 1");
                Ok(WinnerSet::new(
                    scores
                        .iter()
                        .enumerate()
                        .filter(|(_, &s)| s == best)
                        .map(|(i, _)| CandidateId(i))
                        .collect(),
                ))
            }
            Rule::Stv => {
                let full = self.base.with_extra_ballots(extra)?;
                Ok(stv_winners(&full)?.0)
            }
            Rule::Copeland(alpha) => {
                let mat = self.netadv_with(extra);
                Ok(copeland_winners(&mat, *alpha).1)
            }
            Rule::SecondOrderCopeland(alpha) => {
                let mat = self.netadv_with(extra);
                Ok(second_order_copeland_winners_from_matrix(&mat, *alpha))
            }
            Rule::Maximin => {
                let mat = self.netadv_with(extra);
                Ok(maximin_winners(&mat).1)
            }
            Rule::RankedPairs => {
                let mat = self.netadv_with(extra);
                let order: Vec<CandidateId> = (0..self.m).map(CandidateId).collect();
                let (winner, _) = ranked_pairs_winner(&mat, &order)?;
                Ok(WinnerSet::new(vec![winner]))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::election::WeightedBallot;

    fn ballot(idx: &[usize], m: usize) -> Ballot {
        Ballot::from_indices(idx, m).unwrap()
    }

    /// Two-candidate odd-voter elections collapse to majority rule for
    /// every implemented rule.
    #[test]
    fn two_candidate_collapse_smoke() {
        let e = Election::new(
            2,
            vec![
                WeightedBallot { ballot: ballot(&[0, 1], 2), count: 3 },
                WeightedBallot { ballot: ballot(&[1, 0], 2), count: 2 },
            ],
        )
        .unwrap();
        let rules = [
            Rule::Scoring(ScoringRule::Borda),
            Rule::Scoring(ScoringRule::Plurality),
            Rule::Scoring(ScoringRule::Veto),
            Rule::Stv,
            Rule::Copeland(CopelandAlpha::half()),
            Rule::SecondOrderCopeland(CopelandAlpha::half()),
            Rule::Maximin,
            Rule::RankedPairs,
        ];
        for rule in &rules {
            let w = evaluate(rule, &e).unwrap();
            assert!(w.is_unique(CandidateId(0)), "{rule} failed the majority collapse");
        }
    }
}
