//! Voting rules, unweighted coalitional manipulation (UCM), and executable
//! NP-hardness reductions.
//!
//! The crate has four layers:
//!
//! * [`election`] / [`netadv`] / [`mcgarvey`] — ballots, elections, pairwise
//!   net-advantage matrices, the majority-graph codec, and McGarvey vote
//!   synthesis (building an election that realizes a prescribed net-advantage
//!   matrix exactly).
//! * [`rules`] — winner determination: positional scoring (Borda, plurality,
//!   veto, custom vectors), single transferable vote with an elimination
//!   trace, Copeland\u{2071} with exact rational tie parameters, second-order
//!   Copeland, maximin, and Tideman ranked pairs.
//! * [`manipulation`] — the UCM decision problem: witness verification, an
//!   exact brute-force solver over coalition ballot multisets, restricted
//!   structured search over ballot families, and the greedy heuristic.
//! * [`np`] / [`reductions`] — source NP problems (X3C, 2NMTS, 3SAT/3,4-SAT,
//!   VDP2) with desk-scale exhaustive solvers, and executable versions of the
//!   six hardness constructions mapping them to UCM instances, with witness
//!   constructors, solution extractors, and oracle-backed verification.
//!
//! [`io`] defines the line-oriented file formats used by the CLI and
//! [`table1`] produces the seeded desk-scale solver comparison report.

pub mod election;
pub mod error;
pub mod gen;
pub mod io;
pub mod manipulation;
pub mod mcgarvey;
pub mod netadv;
pub mod np;
pub mod reductions;
pub mod rules;
pub mod table1;

pub use election::{Ballot, CandidateId, Election, WeightedBallot};
pub use error::Error;
pub use manipulation::{
    brute_force_ucm, greedy_manipulate, restricted_search, verify_witness, BallotFamily,
    FamilyAnswer, SearchBudget, UcmAnswer, UcmInstance, Witness,
};
pub use mcgarvey::mcgarvey_synthesize;
pub use netadv::{condorcet_winner, MajorityGraph, NetAdvMatrix, Parity};
pub use rules::{CopelandAlpha, Rule, ScoringRule, WinnerSet};

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
