//! 2-numerical matching with target sums.

use crate::error::Error;
use crate::manipulation::SearchBudget;
use crate::Result;

/// A 2NMTS instance: positive targets `a_1..a_k` with sum `k(k+1)`.
///
/// The canonical problem statement also bounds `a_i <= 2k`; values above
/// that bound are accepted here (they just make the instance trivially
/// unsatisfiable, since two permutation values sum to at most `2k`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nmts2Instance {
    targets: Vec<u64>,
}

impl Nmts2Instance {
    pub fn new(targets: Vec<u64>) -> Result<Self> {
        let k = targets.len() as u64;
        if k == 0 {
            return Err(Error::InvalidInstance("2nmts needs k >= 1".into()));
        }
        if targets.iter().any(|&a| a == 0) {
            return Err(Error::InvalidInstance("2nmts targets must be positive".into()));
        }
        let sum: u64 = targets.iter().sum();
        if sum != k * (k + 1) {
            return Err(Error::InvalidInstance(format!(
                "2nmts targets sum to {sum}, expected k(k+1) = {}",
                k * (k + 1)
            )));
        }
        Ok(Nmts2Instance { targets })
    }

    pub fn k(&self) -> usize {
        self.targets.len()
    }

    pub fn targets(&self) -> &[u64] {
        &self.targets
    }

    /// True iff the targets satisfy `1 <= a_i <= 2k`.
    pub fn within_canonical_bounds(&self) -> bool {
        let bound = 2 * self.targets.len() as u64;
        self.targets.iter().all(|&a| a >= 1 && a <= bound)
    }

    /// Checks a candidate certificate: two permutations of `1..=k` with
    /// `psi1[i] + psi2[i] = a_i` everywhere.
    pub fn is_matching(&self, psi1: &[u64], psi2: &[u64]) -> bool {
        let k = self.k();
        if psi1.len() != k || psi2.len() != k {
            return false;
        }
        for psi in [psi1, psi2] {
            let mut seen = vec![false; k];
            for &v in psi {
                if v < 1 || v > k as u64 || seen[(v - 1) as usize] {
                    return false;
                }
                seen[(v - 1) as usize] = true;
            }
        }
        (0..k).all(|i| psi1[i] + psi2[i] == self.targets[i])
    }
}

/// Exhaustive search: enumerate `psi1` in lexicographic order and derive
/// `psi2 = a - psi1`, so the first hit is the least certificate.
pub fn solve_2nmts(
    inst: &Nmts2Instance,
    budget: &SearchBudget,
) -> Result<Option<(Vec<u64>, Vec<u64>)>> {
    let k = inst.k();
    let mut psi1: Vec<u64> = Vec::with_capacity(k);
    let mut used = vec![false; k];
    let mut examined = 0u64;

    fn rec(
        inst: &Nmts2Instance,
        psi1: &mut Vec<u64>,
        used: &mut [bool],
        examined: &mut u64,
        budget: &SearchBudget,
    ) -> Result<Option<(Vec<u64>, Vec<u64>)>> {
        let k = inst.k();
        if psi1.len() == k {
            *examined += 1;
            if *examined > budget.max_profiles {
                return Err(Error::BudgetExceeded);
            }
            let psi2: Vec<u64> = (0..k).map(|i| inst.targets()[i] - psi1[i]).collect();
            if inst.is_matching(psi1, &psi2) {
                return Ok(Some((psi1.clone(), psi2)));
            }
            return Ok(None);
        }
        let i = psi1.len();
        for v in 1..=k as u64 {
            if used[(v - 1) as usize] {
                continue;
            }
            // psi2[i] must be a value in 1..=k, so prune early.
            let a = inst.targets()[i];
            if a <= v || a - v > k as u64 {
                continue;
            }
            used[(v - 1) as usize] = true;
            psi1.push(v);
            if let Some(found) = rec(inst, psi1, used, examined, budget)? {
                return Ok(Some(found));
            }
            psi1.pop();
            used[(v - 1) as usize] = false;
        }
        Ok(None)
    }

    rec(inst, &mut psi1, &mut used, &mut examined, budget)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forced_singleton() {
        let inst = Nmts2Instance::new(vec![2]).unwrap();
        let (p1, p2) = solve_2nmts(&inst, &SearchBudget::unlimited()).unwrap().unwrap();
        assert_eq!((p1, p2), (vec![1], vec![1]));
    }

    #[test]
    fn two_targets_solvable() {
        let inst = Nmts2Instance::new(vec![2, 4]).unwrap();
        let (p1, p2) = solve_2nmts(&inst, &SearchBudget::unlimited()).unwrap().unwrap();
        assert!(inst.is_matching(&p1, &p2));
        assert_eq!((p1, p2), (vec![1, 2], vec![1, 2]));
    }

    #[test]
    fn unsatisfiable_minimum() {
        // a_1 = 1 needs psi values summing to 1; the minimum is 1+1 = 2.
        let inst = Nmts2Instance::new(vec![1, 5]).unwrap();
        assert_eq!(solve_2nmts(&inst, &SearchBudget::unlimited()).unwrap(), None);
        assert!(!inst.within_canonical_bounds());
    }

    #[test]
    fn sum_condition_is_validated() {
        assert!(Nmts2Instance::new(vec![2, 3]).is_err());
        assert!(Nmts2Instance::new(vec![0, 6]).is_err());
    }
}
