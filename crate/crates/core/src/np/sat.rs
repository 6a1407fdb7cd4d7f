//! 3SAT and 3,4-SAT (exactly three literals per clause; in the 3,4 variant
//! every variable occurs in exactly four clauses).

use crate::error::Error;
use crate::manipulation::SearchBudget;
use crate::Result;

/// A literal: a variable index with a negation flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub var: usize,
    pub negated: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal { var, negated: false }
    }

    pub fn neg(var: usize) -> Self {
        Literal { var, negated: true }
    }

    pub fn complement(self) -> Self {
        Literal { var: self.var, negated: !self.negated }
    }

    pub fn eval(self, assignment: &[bool]) -> bool {
        assignment[self.var] != self.negated
    }
}

/// A CNF formula with exactly three literals per clause.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfInstance {
    num_vars: usize,
    clauses: Vec<[Literal; 3]>,
}

impl CnfInstance {
    pub fn new(num_vars: usize, clauses: Vec<[Literal; 3]>) -> Result<Self> {
        if num_vars == 0 || clauses.is_empty() {
            return Err(Error::InvalidInstance("empty formula".into()));
        }
        for clause in &clauses {
            for lit in clause {
                if lit.var >= num_vars {
                    return Err(Error::InvalidInstance(format!(
                        "variable {} out of range",
                        lit.var
                    )));
                }
            }
        }
        Ok(CnfInstance { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[[Literal; 3]] {
        &self.clauses
    }

    /// Validates the 3,4-SAT restriction: each variable occurs in exactly
    /// four clauses (over both polarities).
    pub fn validate_34(&self) -> Result<()> {
        let mut occurrences = vec![0usize; self.num_vars];
        for clause in &self.clauses {
            for lit in clause {
                occurrences[lit.var] += 1;
            }
        }
        for (v, &occ) in occurrences.iter().enumerate() {
            if occ != 4 {
                return Err(Error::InvalidInstance(format!(
                    "variable {v} occurs in {occ} clauses; 3,4-SAT requires exactly 4"
                )));
            }
        }
        Ok(())
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.num_vars
            && self.clauses.iter().all(|cl| cl.iter().any(|lit| lit.eval(assignment)))
    }
}

/// Exhaustive search over all `2^|U|` assignments, all-false first.
pub fn solve_sat(inst: &CnfInstance, budget: &SearchBudget) -> Result<Option<Vec<bool>>> {
    let u = inst.num_vars();
    if u > 24 {
        return Err(Error::InvalidInstance(format!(
            "{u} variables exceed the exhaustive-solver range (24)"
        )));
    }
    let mut examined = 0u64;
    for mask in 0u64..(1u64 << u) {
        if examined >= budget.max_profiles {
            return Err(Error::BudgetExceeded);
        }
        examined += 1;
        let assignment: Vec<bool> = (0..u).map(|v| mask >> v & 1 == 1).collect();
        if inst.is_satisfied_by(&assignment) {
            return Ok(Some(assignment));
        }
    }
    Ok(None)
}
