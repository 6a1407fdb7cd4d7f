//! Ballots and elections.
//!
//! A ballot is a strict, complete linear order over the candidate set,
//! stored most-preferred first. Elections store ballots as a multiset with
//! multiplicities because the reduction builders emit voter blocks whose
//! sizes grow quadratically with the source instance.

use crate::error::Error;
use crate::Result;

/// Index of a candidate within one election, in `[0, m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CandidateId(pub usize);

impl CandidateId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl std::fmt::Display for CandidateId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A strict complete ranking of all `m` candidates, best first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ballot {
    ranking: Vec<CandidateId>,
}

impl Ballot {
    /// Builds a ballot, checking that `ranking` permutes `[0, m)`.
    pub fn new(ranking: Vec<CandidateId>, m: usize) -> Result<Self> {
        if ranking.len() != m {
            return Err(Error::InvalidBallot(format!(
                "ranking has {} entries for {} candidates",
                ranking.len(),
                m
            )));
        }
        let mut seen = vec![false; m];
        for c in &ranking {
            if c.index() >= m {
                return Err(Error::InvalidBallot(format!(
                    "candidate {} out of range for m={}",
                    c.index(),
                    m
                )));
            }
            if seen[c.index()] {
                return Err(Error::InvalidBallot(format!(
                    "candidate {} ranked twice",
                    c.index()
                )));
            }
            seen[c.index()] = true;
        }
        Ok(Ballot { ranking })
    }

    /// Ranking from an index list, most-preferred first.
    pub fn from_indices(indices: &[usize], m: usize) -> Result<Self> {
        Ballot::new(indices.iter().map(|&i| CandidateId(i)).collect(), m)
    }

    pub fn ranking(&self) -> &[CandidateId] {
        &self.ranking
    }

    pub fn len(&self) -> usize {
        self.ranking.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranking.is_empty()
    }

    /// 0-based position of `c` in the ranking (0 = most preferred).
    pub fn position_of(&self, c: CandidateId) -> usize {
        self.ranking
            .iter()
            .position(|&x| x == c)
            .expect("candidate in range by construction")
    }

    /// True if `a` is ranked ahead of `b`.
    pub fn prefers(&self, a: CandidateId, b: CandidateId) -> bool {
        self.position_of(a) < self.position_of(b)
    }

    /// Most preferred candidate among those still `alive`.
    pub fn top_surviving(&self, alive: &[bool]) -> Option<CandidateId> {
        self.ranking.iter().copied().find(|c| alive[c.index()])
    }
}

/// A ballot together with how many voters cast it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedBallot {
    pub ballot: Ballot,
    pub count: u64,
}

/// A full election: `m` candidates and a multiset of ballots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Election {
    m: usize,
    ballots: Vec<WeightedBallot>,
}

impl Election {
    /// Builds an election, validating every ballot against `m` and dropping
    /// nothing: zero-count blocks are rejected.
    pub fn new(m: usize, ballots: Vec<WeightedBallot>) -> Result<Self> {
        for wb in &ballots {
            if wb.ballot.len() != m {
                return Err(Error::DimensionMismatch(format!(
                    "ballot over {} candidates in an election with m={}",
                    wb.ballot.len(),
                    m
                )));
            }
            if wb.count == 0 {
                return Err(Error::InvalidBallot("stored ballot with count 0".into()));
            }
        }
        Ok(Election { m, ballots })
    }

    /// An election with no voters.
    pub fn empty(m: usize) -> Self {
        Election { m, ballots: Vec::new() }
    }

    pub fn candidate_count(&self) -> usize {
        self.m
    }

    pub fn ballots(&self) -> &[WeightedBallot] {
        &self.ballots
    }

    /// Total number of voters, `n`.
    pub fn voter_count(&self) -> u64 {
        self.ballots.iter().map(|b| b.count).sum()
    }

    /// Appends one ballot with multiplicity `count`.
    pub fn add_ballot(&mut self, ballot: Ballot, count: u64) -> Result<()> {
        if ballot.len() != self.m {
            return Err(Error::DimensionMismatch(format!(
                "ballot over {} candidates in an election with m={}",
                ballot.len(),
                self.m
            )));
        }
        if count == 0 {
            return Err(Error::InvalidBallot("cannot add a ballot with count 0".into()));
        }
        // Merge with an existing identical block if present.
        if let Some(existing) = self.ballots.iter_mut().find(|wb| wb.ballot == ballot) {
            existing.count += count;
        } else {
            self.ballots.push(WeightedBallot { ballot, count });
        }
        Ok(())
    }

    /// A copy of the election with extra unit-count ballots appended.
    pub fn with_extra_ballots(&self, extra: &[Ballot]) -> Result<Election> {
        let mut out = self.clone();
        for b in extra {
            out.add_ballot(b.clone(), 1)?;
        }
        Ok(out)
    }
}

/// All `m!` ballots over `m` candidates in lexicographic ranking order.
pub fn all_ballots(m: usize) -> Vec<Ballot> {
    use itertools::Itertools;
    (0..m)
        .permutations(m)
        .map(|p| Ballot::from_indices(&p, m).expect("permutation"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ballot_must_be_permutation() {
        assert!(Ballot::from_indices(&[0, 1, 2], 3).is_ok());
        assert!(Ballot::from_indices(&[0, 1, 1], 3).is_err());
        assert!(Ballot::from_indices(&[0, 1], 3).is_err());
        assert!(Ballot::from_indices(&[0, 3, 1], 3).is_err());
    }

    #[test]
    fn election_counts_voters() {
        let mut e = Election::empty(2);
        e.add_ballot(Ballot::from_indices(&[0, 1], 2).unwrap(), 3).unwrap();
        e.add_ballot(Ballot::from_indices(&[1, 0], 2).unwrap(), 2).unwrap();
        assert_eq!(e.voter_count(), 5);
        // merging keeps one block per distinct ballot
        e.add_ballot(Ballot::from_indices(&[0, 1], 2).unwrap(), 1).unwrap();
        assert_eq!(e.ballots().len(), 2);
        assert_eq!(e.voter_count(), 6);
    }

    #[test]
    fn all_ballots_is_lexicographic() {
        let b = all_ballots(3);
        assert_eq!(b.len(), 6);
        assert_eq!(b[0].ranking()[0].index(), 0);
        assert_eq!(b[5].ranking(), &[CandidateId(2), CandidateId(1), CandidateId(0)]);
    }
}
