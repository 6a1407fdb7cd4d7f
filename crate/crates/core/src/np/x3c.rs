//! Exact cover by three-sets.

use crate::error::Error;
use crate::manipulation::SearchBudget;
use crate::Result;

/// An X3C instance: a universe of `3k` elements (numbered `0..3k`) and a
/// family of size-3 subsets. Duplicate sets are allowed; they never change
/// satisfiability.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct X3cInstance {
    k: usize,
    sets: Vec<[usize; 3]>,
}

impl X3cInstance {
    pub fn new(k: usize, sets: Vec<[usize; 3]>) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidInstance("x3c needs k >= 1".into()));
        }
        if sets.is_empty() {
            return Err(Error::InvalidInstance("x3c needs at least one set".into()));
        }
        let mut normalized = Vec::with_capacity(sets.len());
        for s in &sets {
            let mut s = *s;
            s.sort();
            if s[0] == s[1] || s[1] == s[2] {
                return Err(Error::InvalidInstance(format!(
                    "set {s:?} does not have three distinct elements"
                )));
            }
            if s[2] >= 3 * k {
                return Err(Error::InvalidInstance(format!(
                    "set {s:?} leaves the universe of {} elements",
                    3 * k
                )));
            }
            normalized.push(s);
        }
        Ok(X3cInstance { k, sets: normalized })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Universe size, `3k`.
    pub fn universe(&self) -> usize {
        3 * self.k
    }

    pub fn sets(&self) -> &[[usize; 3]] {
        &self.sets
    }

    /// Checks a candidate cover: `k` indices whose sets partition the universe.
    pub fn is_exact_cover(&self, indices: &[usize]) -> bool {
        if indices.len() != self.k {
            return false;
        }
        let mut hit = vec![false; self.universe()];
        for &i in indices {
            if i >= self.sets.len() {
                return false;
            }
            for &e in &self.sets[i] {
                if hit[e] {
                    return false;
                }
                hit[e] = true;
            }
        }
        hit.iter().all(|&h| h)
    }
}

/// Exhaustive search over `C(n, k)` selections, in lexicographic order.
pub fn solve_x3c(inst: &X3cInstance, budget: &SearchBudget) -> Result<Option<Vec<usize>>> {
    let n = inst.sets().len();
    let k = inst.k();
    if k > n {
        return Ok(None);
    }
    let mut pick: Vec<usize> = (0..k).collect();
    let mut examined = 0u64;
    loop {
        if examined >= budget.max_profiles {
            return Err(Error::BudgetExceeded);
        }
        examined += 1;
        if inst.is_exact_cover(&pick) {
            return Ok(Some(pick));
        }
        // Next k-combination of 0..n.
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(None);
            }
            i -= 1;
            if pick[i] + 1 <= n - (k - i) {
                pick[i] += 1;
                for j in (i + 1)..k {
                    pick[j] = pick[j - 1] + 1;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_covering_set() {
        let inst = X3cInstance::new(1, vec![[0, 1, 2]]).unwrap();
        assert_eq!(solve_x3c(&inst, &SearchBudget::unlimited()).unwrap(), Some(vec![0]));
    }

    #[test]
    fn multisets_are_rejected() {
        assert!(X3cInstance::new(1, vec![[0, 1, 1]]).is_err());
        assert!(X3cInstance::new(1, vec![[0, 1, 3]]).is_err());
    }

    #[test]
    fn overlapping_family() {
        // Only {0,1,2} + {3,4,5} covers; the third set overlaps both.
        let inst = X3cInstance::new(2, vec![[0, 1, 2], [3, 4, 5], [0, 3, 4]]).unwrap();
        assert_eq!(solve_x3c(&inst, &SearchBudget::unlimited()).unwrap(), Some(vec![0, 1]));
    }

    #[test]
    fn no_cover() {
        let inst = X3cInstance::new(2, vec![[0, 1, 2], [2, 3, 4], [3, 4, 5]]).unwrap();
        assert_eq!(solve_x3c(&inst, &SearchBudget::unlimited()).unwrap(), None);
    }

    #[test]
    fn budget_is_enforced() {
        let inst = X3cInstance::new(2, vec![[0, 1, 2], [2, 3, 4], [3, 4, 5]]).unwrap();
        assert!(matches!(
            solve_x3c(&inst, &SearchBudget::profiles(1).unwrap()),
            Err(Error::BudgetExceeded)
        ));
    }
}
