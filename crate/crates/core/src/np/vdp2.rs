//! The vertex-disjoint two-path problem.

use std::collections::BTreeSet;

use crate::error::Error;
use crate::manipulation::SearchBudget;
use crate::Result;

/// A VDP2 instance: a digraph and four distinct terminals `u, u', v, v'`.
/// The question is whether vertex-disjoint paths `u -> ... -> u'` and
/// `v -> ... -> v'` exist (disjoint including endpoints across paths).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vdp2Instance {
    num_vertices: usize,
    edges: BTreeSet<(usize, usize)>,
    pub u: usize,
    pub u_end: usize,
    pub v: usize,
    pub v_end: usize,
}

impl Vdp2Instance {
    pub fn new(
        num_vertices: usize,
        edges: Vec<(usize, usize)>,
        u: usize,
        u_end: usize,
        v: usize,
        v_end: usize,
    ) -> Result<Self> {
        let terminals = [u, u_end, v, v_end];
        for &t in &terminals {
            if t >= num_vertices {
                return Err(Error::InvalidInstance(format!("terminal {t} out of range")));
            }
        }
        let mut distinct = terminals.to_vec();
        distinct.sort();
        distinct.dedup();
        if distinct.len() != 4 {
            return Err(Error::InvalidInstance("the four terminals must be distinct".into()));
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a >= num_vertices || b >= num_vertices || a == b {
                return Err(Error::InvalidInstance(format!("bad edge ({a}, {b})")));
            }
            set.insert((a, b));
        }
        Ok(Vdp2Instance { num_vertices, edges: set, u, u_end, v, v_end })
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a, b))
    }

    fn successors(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.range((a, 0)..(a, usize::MAX)).map(|&(_, b)| b)
    }

    /// All simple paths from `from` to `to`, lexicographically by vertex
    /// sequence, avoiding `banned` vertices.
    fn simple_paths(&self, from: usize, to: usize, banned: &[bool]) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut path = vec![from];
        let mut on_path = vec![false; self.num_vertices];
        on_path[from] = true;
        self.paths_rec(to, banned, &mut path, &mut on_path, &mut out);
        out
    }

    fn paths_rec(
        &self,
        to: usize,
        banned: &[bool],
        path: &mut Vec<usize>,
        on_path: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let last = *path.last().expect("path non-empty");
        if last == to {
            out.push(path.clone());
            return;
        }
        for next in self.successors(last) {
            if on_path[next] || banned[next] {
                continue;
            }
            on_path[next] = true;
            path.push(next);
            self.paths_rec(to, banned, path, on_path, out);
            path.pop();
            on_path[next] = false;
        }
    }

    /// Checks a candidate certificate.
    pub fn are_disjoint_paths(&self, path_u: &[usize], path_v: &[usize]) -> bool {
        let valid = |path: &[usize], from: usize, to: usize| {
            !path.is_empty()
                && path[0] == from
                && *path.last().unwrap() == to
                && path.windows(2).all(|w| self.has_edge(w[0], w[1]))
                && {
                    let mut seen = vec![false; self.num_vertices];
                    path.iter().all(|&x| {
                        if seen[x] {
                            false
                        } else {
                            seen[x] = true;
                            true
                        }
                    })
                }
        };
        if !valid(path_u, self.u, self.u_end) || !valid(path_v, self.v, self.v_end) {
            return false;
        }
        let u_set: BTreeSet<usize> = path_u.iter().copied().collect();
        path_v.iter().all(|x| !u_set.contains(x))
    }
}

/// Exhaustive search over pairs of simple paths; returns the
/// lexicographically least disjoint pair.
pub fn solve_vdp2(
    inst: &Vdp2Instance,
    budget: &SearchBudget,
) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    let no_ban = vec![false; inst.num_vertices()];
    let u_paths = inst.simple_paths(inst.u, inst.u_end, &no_ban);
    let mut examined = 0u64;
    for pu in &u_paths {
        let mut banned = vec![false; inst.num_vertices()];
        for &x in pu {
            banned[x] = true;
        }
        if banned[inst.v] || banned[inst.v_end] {
            continue;
        }
        for pv in inst.simple_paths(inst.v, inst.v_end, &banned) {
            if examined >= budget.max_profiles {
                return Err(Error::BudgetExceeded);
            }
            examined += 1;
            debug_assert!(inst.are_disjoint_paths(pu, &pv));
            return Ok(Some((pu.clone(), pv)));
        }
        examined += 1;
        if examined >= budget.max_profiles {
            return Err(Error::BudgetExceeded);
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn direct_edges() {
        let inst = Vdp2Instance::new(4, vec![(0, 1), (2, 3)], 0, 1, 2, 3).unwrap();
        let (pu, pv) = solve_vdp2(&inst, &SearchBudget::unlimited()).unwrap().unwrap();
        assert_eq!((pu, pv), (vec![0, 1], vec![2, 3]));
    }

    #[test]
    fn shared_cut_vertex_blocks_both() {
        // Every u-u' path and the only v-v' path cross vertex 4.
        let inst = Vdp2Instance::new(
            6,
            vec![(0, 4), (4, 1), (2, 4), (4, 3), (0, 5), (5, 4)],
            0,
            1,
            2,
            3,
        )
        .unwrap();
        assert_eq!(solve_vdp2(&inst, &SearchBudget::unlimited()).unwrap(), None);
    }

    #[test]
    fn terminals_must_be_distinct() {
        assert!(Vdp2Instance::new(4, vec![(0, 1)], 0, 1, 2, 2).is_err());
    }

    #[test]
    fn certificate_checker_rejects_overlap() {
        let inst = Vdp2Instance::new(5, vec![(0, 4), (4, 1), (2, 4), (4, 3)], 0, 1, 2, 3).unwrap();
        assert!(!inst.are_disjoint_paths(&[0, 4, 1], &[2, 4, 3]));
    }
}
