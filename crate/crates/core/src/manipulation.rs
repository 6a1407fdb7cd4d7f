//! The unweighted coalitional manipulation (UCM) decision problem.
//!
//! An instance fixes a rule, the non-manipulators' election, a coalition
//! size `t`, and a preferred candidate. The question is whether some list of
//! `t` coalition ballots makes the preferred candidate the unique winner.
//! Coalition ballots are exchangeable, so the exact solver enumerates
//! unordered multisets of ballots rather than tuples.

use crate::election::{all_ballots, Ballot, CandidateId, Election};
use crate::error::Error;
use crate::rules::{Rule, RuleEvaluator};
use crate::Result;

/// A UCM decision-problem instance.
#[derive(Debug, Clone)]
pub struct UcmInstance {
    pub rule: Rule,
    /// Votes of the non-manipulators.
    pub base: Election,
    /// Number of manipulators, `t >= 1`.
    pub coalition_size: usize,
    pub preferred: CandidateId,
}

impl UcmInstance {
    pub fn new(
        rule: Rule,
        base: Election,
        coalition_size: usize,
        preferred: CandidateId,
    ) -> Result<Self> {
        if coalition_size == 0 {
            return Err(Error::InvalidInstance("coalition size must be positive".into()));
        }
        if preferred.index() >= base.candidate_count() {
            return Err(Error::InvalidInstance(format!(
                "preferred candidate {} out of range",
                preferred.index()
            )));
        }
        Ok(UcmInstance { rule, base, coalition_size, preferred })
    }

    pub fn candidate_count(&self) -> usize {
        self.base.candidate_count()
    }
}

/// A list of coalition ballots certifying a yes instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub ballots: Vec<Ballot>,
}

/// Caps on exhaustive search work.
#[derive(Debug, Clone, Copy)]
pub struct SearchBudget {
    pub max_profiles: u64,
}

impl SearchBudget {
    pub fn profiles(max_profiles: u64) -> Result<Self> {
        if max_profiles == 0 {
            return Err(Error::InvalidInstance("budget must be positive".into()));
        }
        Ok(SearchBudget { max_profiles })
    }

    pub fn unlimited() -> Self {
        SearchBudget { max_profiles: u64::MAX }
    }
}

/// Outcome of the exact solver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UcmAnswer {
    Found(Witness),
    /// All profiles examined; none makes the preferred candidate win.
    NoWitness,
    BudgetExceeded,
}

impl UcmAnswer {
    pub fn is_yes(&self) -> bool {
        matches!(self, UcmAnswer::Found(_))
    }
}

/// Outcome of a restricted (family) search. `NoneInFamily` makes no claim
/// about ballots outside the family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyAnswer {
    Found(Witness),
    NoneInFamily,
    BudgetExceeded,
}

impl FamilyAnswer {
    pub fn is_yes(&self) -> bool {
        matches!(self, FamilyAnswer::Found(_))
    }
}

/// True iff evaluating the rule on base plus witness ballots makes the
/// preferred candidate the unique winner.
pub fn verify_witness(inst: &UcmInstance, witness: &Witness) -> Result<bool> {
    if witness.ballots.len() != inst.coalition_size {
        return Err(Error::DimensionMismatch(format!(
            "witness has {} ballots for coalition size {}",
            witness.ballots.len(),
            inst.coalition_size
        )));
    }
    let ev = RuleEvaluator::new(&inst.rule, &inst.base)?;
    Ok(ev.winners_with(&witness.ballots)?.is_unique(inst.preferred))
}

/// `rank`-th permutation of `0..m` in lexicographic order (factoradic unrank).
fn nth_permutation(m: usize, mut rank: u64) -> Vec<usize> {
    let mut pool: Vec<usize> = (0..m).collect();
    let mut fact = vec![1u64; m + 1];
    for i in 1..=m {
        fact[i] = fact[i - 1] * i as u64;
    }
    let mut out = Vec::with_capacity(m);
    for i in (0..m).rev() {
        let f = fact[i];
        let idx = (rank / f) as usize;
        rank %= f;
        out.push(pool.remove(idx));
    }
    out
}

fn factorial_checked(m: usize) -> Option<u64> {
    let mut f = 1u64;
    for i in 2..=m as u64 {
        f = f.checked_mul(i)?;
    }
    Some(f)
}

/// Exhaustive search over unordered multisets of coalition ballots in
/// lexicographic order. The first witness found is therefore the
/// lexicographically least one.
pub fn brute_force_ucm(inst: &UcmInstance, budget: &SearchBudget) -> Result<UcmAnswer> {
    let m = inst.candidate_count();
    let t = inst.coalition_size;
    let total_ballots = factorial_checked(m)
        .ok_or_else(|| Error::InvalidInstance(format!("{m}! overflows the search index")))?;
    let ev = RuleEvaluator::new(&inst.rule, &inst.base)?;

    // Cache the full ballot list when it is small; unrank lazily otherwise.
    let cached: Option<Vec<Ballot>> =
        if total_ballots <= 50_000 { Some(all_ballots(m)) } else { None };
    let ballot_at = |rank: u64| -> Ballot {
        match &cached {
            Some(v) => v[rank as usize].clone(),
            None => Ballot::from_indices(&nth_permutation(m, rank), m).expect("permutation"),
        }
    };

    let mut indices = vec![0u64; t];
    let mut current: Vec<Ballot> = indices.iter().map(|&r| ballot_at(r)).collect();
    let mut examined = 0u64;
    loop {
        if examined >= budget.max_profiles {
            return Ok(UcmAnswer::BudgetExceeded);
        }
        examined += 1;
        if ev.winners_with(&current)?.is_unique(inst.preferred) {
            return Ok(UcmAnswer::Found(Witness { ballots: current }));
        }
        // Next non-decreasing index tuple.
        let mut pos = t;
        loop {
            if pos == 0 {
                return Ok(UcmAnswer::NoWitness);
            }
            pos -= 1;
            if indices[pos] + 1 < total_ballots {
                let v = indices[pos] + 1;
                for slot in pos..t {
                    indices[slot] = v;
                    current[slot] = ballot_at(v);
                }
                break;
            }
        }
    }
}

/// A generator of candidate coalition ballots for one coalition slot.
#[derive(Debug, Clone)]
pub enum BallotFamily {
    /// Every one of the `m!` ballots.
    Full,
    /// A single fixed ballot.
    Fixed(Ballot),
    /// Per-slot candidate choices for a leading prefix; the suffix is the
    /// remaining candidates in ascending order. Non-injective prefix
    /// combinations are skipped.
    PrefixPattern { slots: Vec<Vec<CandidateId>> },
    /// An explicit ballot list.
    Enumerated(Vec<Ballot>),
}

impl BallotFamily {
    /// Materializes the family for an `m`-candidate election.
    pub fn ballots(&self, m: usize) -> Result<Vec<Ballot>> {
        match self {
            BallotFamily::Full => {
                let total = factorial_checked(m).unwrap_or(u64::MAX);
                if total > 1_000_000 {
                    return Err(Error::InvalidInstance(format!(
                        "full family over m={m} is too large to materialize"
                    )));
                }
                Ok(all_ballots(m))
            }
            BallotFamily::Fixed(b) => {
                if b.len() != m {
                    return Err(Error::DimensionMismatch(
                        "fixed ballot has the wrong candidate count".into(),
                    ));
                }
                Ok(vec![b.clone()])
            }
            BallotFamily::PrefixPattern { slots } => {
                if slots.len() > m {
                    return Err(Error::DimensionMismatch("prefix longer than the ballot".into()));
                }
                if slots.iter().any(|s| s.is_empty()) {
                    return Err(Error::InvalidInstance("empty choice set in a prefix slot".into()));
                }
                let mut out = Vec::new();
                let mut choice = vec![0usize; slots.len()];
                'outer: loop {
                    let prefix: Vec<CandidateId> =
                        choice.iter().zip(slots).map(|(&c, s)| s[c]).collect();
                    let mut seen = vec![false; m];
                    let mut ok = true;
                    for c in &prefix {
                        if c.index() >= m || seen[c.index()] {
                            ok = false;
                            break;
                        }
                        seen[c.index()] = true;
                    }
                    if ok {
                        let mut full: Vec<usize> = prefix.iter().map(|c| c.index()).collect();
                        full.extend((0..m).filter(|&c| !seen[c]));
                        out.push(Ballot::from_indices(&full, m)?);
                    }
                    // Advance the per-slot choice vector.
                    let mut pos = slots.len();
                    loop {
                        if pos == 0 {
                            break 'outer;
                        }
                        pos -= 1;
                        choice[pos] += 1;
                        if choice[pos] < slots[pos].len() {
                            break;
                        }
                        choice[pos] = 0;
                    }
                }
                if out.is_empty() {
                    return Err(Error::InvalidInstance(
                        "prefix pattern generates no valid ballot".into(),
                    ));
                }
                Ok(out)
            }
            BallotFamily::Enumerated(ballots) => {
                if ballots.is_empty() {
                    return Err(Error::InvalidInstance("empty enumerated family".into()));
                }
                for b in ballots {
                    if b.len() != m {
                        return Err(Error::DimensionMismatch(
                            "enumerated ballot has the wrong candidate count".into(),
                        ));
                    }
                }
                Ok(ballots.clone())
            }
        }
    }
}

/// Exhaustive search over the product of one ballot family per coalition
/// slot, in lexicographic slot order.
pub fn restricted_search(
    inst: &UcmInstance,
    families: &[BallotFamily],
    budget: &SearchBudget,
) -> Result<FamilyAnswer> {
    if families.len() != inst.coalition_size {
        return Err(Error::DimensionMismatch(format!(
            "{} families for coalition size {}",
            families.len(),
            inst.coalition_size
        )));
    }
    let m = inst.candidate_count();
    let slots: Vec<Vec<Ballot>> =
        families.iter().map(|f| f.ballots(m)).collect::<Result<_>>()?;
    let ev = RuleEvaluator::new(&inst.rule, &inst.base)?;

    let mut choice = vec![0usize; slots.len()];
    let mut examined = 0u64;
    loop {
        if examined >= budget.max_profiles {
            return Ok(FamilyAnswer::BudgetExceeded);
        }
        examined += 1;
        let profile: Vec<Ballot> =
            choice.iter().zip(&slots).map(|(&c, s)| s[c].clone()).collect();
        if ev.winners_with(&profile)?.is_unique(inst.preferred) {
            return Ok(FamilyAnswer::Found(Witness { ballots: profile }));
        }
        let mut pos = slots.len();
        loop {
            if pos == 0 {
                return Ok(FamilyAnswer::NoneInFamily);
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < slots[pos].len() {
                break;
            }
            choice[pos] = 0;
        }
    }
}

/// Greedy manipulation for score-based rules.
///
/// Each coalition ballot is built top-down: the preferred candidate first,
/// then repeatedly the unplaced candidate with the lowest current score
/// (ties to the lowest id). For scoring protocols a placement that would
/// already push a candidate to the preferred candidate's guaranteed total is
/// refused, and exhausting the options fails. The result is verified before
/// being returned, so a returned witness is always genuine; `None` signals
/// heuristic failure, not infeasibility.
pub fn greedy_manipulate(inst: &UcmInstance) -> Result<Option<Witness>> {
    if !inst.rule.is_score_based() {
        return Err(Error::InvalidInstance(format!(
            "greedy manipulation does not support {}",
            inst.rule
        )));
    }
    let m = inst.candidate_count();
    let t = inst.coalition_size;
    let p = inst.preferred;

    let mut built: Vec<Ballot> = Vec::with_capacity(t);
    match &inst.rule {
        Rule::Scoring(s) => {
            let v = s.vector(m)?;
            let mut scores = crate::rules::scoring_winners(&inst.base, &v)?.0;
            let p_final = scores[p.index()] + t as u64 * v[0];
            for _ in 0..t {
                let mut order = vec![p];
                let mut placed = vec![false; m];
                placed[p.index()] = true;
                for pos in 1..m {
                    // Lowest current score first, among candidates that can
                    // still afford this position's points.
                    let pick = (0..m)
                        .filter(|&c| !placed[c])
                        .filter(|&c| scores[c] + v[pos] < p_final)
                        .min_by_key(|&c| (scores[c], c));
                    match pick {
                        Some(c) => {
                            placed[c] = true;
                            order.push(CandidateId(c));
                        }
                        None => return Ok(None),
                    }
                }
                for (pos, c) in order.iter().enumerate() {
                    scores[c.index()] += v[pos];
                }
                built.push(Ballot::new(order, m)?);
            }
        }
        Rule::Copeland(alpha) => {
            for _ in 0..t {
                let profile = inst.base.with_extra_ballots(&built)?;
                let mat = crate::netadv::NetAdvMatrix::from_election(&profile);
                let scores = crate::rules::copeland_scores(&mat, *alpha);
                built.push(lowest_score_ballot(m, p, |c| scores[c].clone())?);
            }
        }
        Rule::Maximin => {
            for _ in 0..t {
                let profile = inst.base.with_extra_ballots(&built)?;
                let mat = crate::netadv::NetAdvMatrix::from_election(&profile);
                let scores = crate::rules::maximin_winners(&mat).0;
                built.push(lowest_score_ballot(m, p, |c| scores[c])?);
            }
        }
        _ => unreachable!("guarded by is_score_based"),
    }

    let witness = Witness { ballots: built };
    if verify_witness(inst, &witness)? {
        Ok(Some(witness))
    } else {
        Ok(None)
    }
}

/// Preferred first, then ascending by `score` (ties to the lowest id).
fn lowest_score_ballot<S: Ord>(
    m: usize,
    preferred: CandidateId,
    score: impl Fn(usize) -> S,
) -> Result<Ballot> {
    let mut rest: Vec<usize> = (0..m).filter(|&c| c != preferred.index()).collect();
    rest.sort_by(|&a, &b| score(a).cmp(&score(b)).then(a.cmp(&b)));
    let mut order = vec![preferred.index()];
    order.extend(rest);
    Ballot::from_indices(&order, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::election::WeightedBallot;
    use crate::rules::ScoringRule;

    fn wb(idx: &[usize], m: usize, count: u64) -> WeightedBallot {
        WeightedBallot { ballot: Ballot::from_indices(idx, m).unwrap(), count }
    }

    #[test]
    fn sole_voter_elects_anyone() {
        // m=2, empty base, t=1: the single manipulator decides every rule.
        let inst = UcmInstance::new(Rule::borda(), Election::empty(2), 1, CandidateId(0)).unwrap();
        let w = Witness { ballots: vec![Ballot::from_indices(&[0, 1], 2).unwrap()] };
        assert!(verify_witness(&inst, &w).unwrap());
        let l = Witness { ballots: vec![Ballot::from_indices(&[1, 0], 2).unwrap()] };
        assert!(!verify_witness(&inst, &l).unwrap());
    }

    #[test]
    fn ranking_preferred_last_fails_against_dominant_opponent() {
        let base = Election::new(3, vec![wb(&[1, 0, 2], 3, 3)]).unwrap();
        let inst = UcmInstance::new(Rule::borda(), base, 2, CandidateId(0)).unwrap();
        let w = Witness {
            ballots: vec![
                Ballot::from_indices(&[1, 2, 0], 3).unwrap(),
                Ballot::from_indices(&[2, 1, 0], 3).unwrap(),
            ],
        };
        assert!(!verify_witness(&inst, &w).unwrap());
    }

    #[test]
    fn witness_length_is_checked() {
        let inst = UcmInstance::new(Rule::borda(), Election::empty(2), 2, CandidateId(0)).unwrap();
        let w = Witness { ballots: vec![Ballot::from_indices(&[0, 1], 2).unwrap()] };
        assert!(verify_witness(&inst, &w).is_err());
    }

    #[test]
    fn brute_force_borda_single_manipulator() {
        // Base 2 x (b > a > c); exhausting all 6 ballots fixes the answer.
        let base = Election::new(3, vec![wb(&[1, 0, 2], 3, 2)]).unwrap();
        let inst = UcmInstance::new(Rule::borda(), base, 1, CandidateId(0)).unwrap();
        let answer = brute_force_ucm(&inst, &SearchBudget::unlimited()).unwrap();
        // a gets 2+2=4 with a>c>b while b gets 4+0: a tie, not a unique win;
        // no single ballot can do better, so the answer is no.
        assert_eq!(answer, UcmAnswer::NoWitness);
    }

    #[test]
    fn brute_force_finds_trivial_completion() {
        // Preferred already the unique winner: the first p-first ballot works.
        let base = Election::new(3, vec![wb(&[0, 1, 2], 3, 2)]).unwrap();
        let inst = UcmInstance::new(Rule::borda(), base, 1, CandidateId(0)).unwrap();
        match brute_force_ucm(&inst, &SearchBudget::unlimited()).unwrap() {
            UcmAnswer::Found(w) => {
                assert_eq!(w.ballots[0].ranking()[0], CandidateId(0));
                assert!(verify_witness(&inst, &w).unwrap());
            }
            other => panic!("expected a witness, got {other:?}"),
        }
    }

    #[test]
    fn budget_is_reported_distinctly() {
        let base = Election::new(3, vec![wb(&[1, 0, 2], 3, 2)]).unwrap();
        let inst = UcmInstance::new(Rule::borda(), base, 1, CandidateId(0)).unwrap();
        let answer = brute_force_ucm(&inst, &SearchBudget::profiles(2).unwrap()).unwrap();
        assert_eq!(answer, UcmAnswer::BudgetExceeded);
    }

    #[test]
    fn fixed_family_is_witness_verification() {
        let base = Election::new(3, vec![wb(&[0, 1, 2], 3, 2)]).unwrap();
        let inst = UcmInstance::new(Rule::borda(), base, 1, CandidateId(0)).unwrap();
        let b = Ballot::from_indices(&[0, 2, 1], 3).unwrap();
        let fam = vec![BallotFamily::Fixed(b.clone())];
        match restricted_search(&inst, &fam, &SearchBudget::unlimited()).unwrap() {
            FamilyAnswer::Found(w) => assert_eq!(w.ballots, vec![b]),
            other => panic!("expected the fixed ballot to win, got {other:?}"),
        }
    }

    #[test]
    fn full_family_product_agrees_with_brute_force() {
        let base = Election::new(
            4,
            vec![wb(&[1, 0, 2, 3], 4, 2), wb(&[2, 3, 1, 0], 4, 1)],
        )
        .unwrap();
        for preferred in 0..4 {
            let inst =
                UcmInstance::new(Rule::borda(), base.clone(), 2, CandidateId(preferred)).unwrap();
            let bf = brute_force_ucm(&inst, &SearchBudget::unlimited()).unwrap();
            let fam = vec![BallotFamily::Full, BallotFamily::Full];
            let rs = restricted_search(&inst, &fam, &SearchBudget::unlimited()).unwrap();
            assert_eq!(bf.is_yes(), rs.is_yes());
        }
    }

    #[test]
    fn exchangeability() {
        let base = Election::new(3, vec![wb(&[1, 0, 2], 3, 1)]).unwrap();
        let inst = UcmInstance::new(Rule::borda(), base, 2, CandidateId(0)).unwrap();
        let a = Ballot::from_indices(&[0, 2, 1], 3).unwrap();
        let b = Ballot::from_indices(&[0, 1, 2], 3).unwrap();
        let w1 = Witness { ballots: vec![a.clone(), b.clone()] };
        let w2 = Witness { ballots: vec![b, a] };
        assert_eq!(verify_witness(&inst, &w1).unwrap(), verify_witness(&inst, &w2).unwrap());
    }

    #[test]
    fn greedy_borda_example() {
        // Base b > a > c; greedy emits a > c > b and a wins 3-2-1.
        let base = Election::new(3, vec![wb(&[1, 0, 2], 3, 1)]).unwrap();
        let inst = UcmInstance::new(Rule::borda(), base, 1, CandidateId(0)).unwrap();
        let w = greedy_manipulate(&inst).unwrap().expect("greedy succeeds");
        assert_eq!(
            w.ballots[0].ranking(),
            &[CandidateId(0), CandidateId(2), CandidateId(1)]
        );
    }

    #[test]
    fn greedy_maximin_condorcet_base() {
        let base = Election::new(3, vec![wb(&[0, 1, 2], 3, 3)]).unwrap();
        let inst = UcmInstance::new(Rule::Maximin, base, 1, CandidateId(0)).unwrap();
        let w = greedy_manipulate(&inst).unwrap().expect("preferred is already Condorcet");
        assert_eq!(w.ballots[0].ranking()[0], CandidateId(0));
    }

    #[test]
    fn greedy_rejects_unsupported_rules() {
        let inst = UcmInstance::new(Rule::Stv, Election::empty(2), 1, CandidateId(0)).unwrap();
        assert!(greedy_manipulate(&inst).is_err());
    }

    #[test]
    fn prefix_pattern_family() {
        let slots = vec![vec![CandidateId(0), CandidateId(1)], vec![CandidateId(2)]];
        let fam = BallotFamily::PrefixPattern { slots };
        let ballots = fam.ballots(4).unwrap();
        assert_eq!(ballots.len(), 2);
        assert_eq!(
            ballots[0].ranking(),
            &[CandidateId(0), CandidateId(2), CandidateId(1), CandidateId(3)]
        );
    }

    #[test]
    fn unranking_matches_materialized_order() {
        let listed = all_ballots(4);
        for (rank, b) in listed.iter().enumerate() {
            let un = nth_permutation(4, rank as u64);
            assert_eq!(Ballot::from_indices(&un, 4).unwrap(), *b);
        }
    }
}
