use std::collections::{HashMap, VecDeque};

use super::Limits;
use crate::error::{input, Error, Result};
use crate::periodic::PeriodicGraph;

/// A finite digraph of per-cell assignments. Arcs join assignments that may
/// sit in consecutive cells, so bi-infinite walks are exactly the global
/// solutions and cycles are exactly the periodic ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransferSystem {
    pub constraint_kind: String,
    states: Vec<Vec<usize>>,
    successors: Vec<Vec<usize>>,
}

impl TransferSystem {
    /// `successors[i]` must hold indices into `states`; they are sorted and
    /// deduplicated here.
    pub fn new(
        constraint_kind: impl Into<String>,
        states: Vec<Vec<usize>>,
        mut successors: Vec<Vec<usize>>,
    ) -> Result<Self> {
        if successors.len() != states.len() {
            return input("one successor list per state is required");
        }
        for list in &mut successors {
            list.sort_unstable();
            list.dedup();
            if list.last().is_some_and(|&j| j >= states.len()) {
                return input("transition to a missing state");
            }
        }
        Ok(TransferSystem {
            constraint_kind: constraint_kind.into(),
            states,
            successors,
        })
    }

    pub fn states(&self) -> &[Vec<usize>] {
        &self.states
    }

    pub fn successors(&self, state: usize) -> &[usize] {
        &self.successors[state]
    }

    pub fn transition_count(&self) -> usize {
        self.successors.iter().map(Vec::len).sum()
    }

    pub fn has_transition(&self, from: usize, to: usize) -> bool {
        self.successors[from].binary_search(&to).is_ok()
    }

    /// States that lie on some cycle candidate: repeatedly drop states with
    /// no incoming or no outgoing arc among the survivors.
    fn trimmed(&self, self_loops: bool) -> Vec<bool> {
        let n = self.states.len();
        let mut alive = vec![true; n];
        let mut indeg = vec![0usize; n];
        let mut outdeg = vec![0usize; n];
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (i, succ) in self.successors.iter().enumerate() {
            for &j in succ {
                if i == j && !self_loops {
                    continue;
                }
                outdeg[i] += 1;
                indeg[j] += 1;
                preds[j].push(i);
            }
        }
        let mut queue: VecDeque<usize> = (0..n).filter(|&i| indeg[i] == 0 || outdeg[i] == 0).collect();
        while let Some(x) = queue.pop_front() {
            if !alive[x] {
                continue;
            }
            alive[x] = false;
            for &j in &self.successors[x] {
                if (j != x || self_loops) && alive[j] {
                    indeg[j] -= 1;
                    if indeg[j] == 0 {
                        queue.push_back(j);
                    }
                }
            }
            for &i in &preds[x] {
                if alive[i] {
                    outdeg[i] -= 1;
                    if outdeg[i] == 0 {
                        queue.push_back(i);
                    }
                }
            }
        }
        alive
    }
}

/// A shortest cycle of the transition digraph, as the list of its states
/// starting from the smallest state on any shortest cycle; `None` if the
/// digraph is acyclic.
pub fn find_cycle(ts: &TransferSystem) -> Option<Vec<usize>> {
    shortest_cycle(ts, true)
}

/// Like [`find_cycle`] but ignoring self-loops, so the returned cycle
/// visits at least two distinct states.
pub fn find_cycle_without_self_loops(ts: &TransferSystem) -> Option<Vec<usize>> {
    shortest_cycle(ts, false)
}

fn shortest_cycle(ts: &TransferSystem, self_loops: bool) -> Option<Vec<usize>> {
    let alive = ts.trimmed(self_loops);
    let n = ts.states.len();
    if self_loops {
        if let Some(s) = (0..n).find(|&s| alive[s] && ts.has_transition(s, s)) {
            return Some(vec![s]);
        }
    }
    let mut best: Option<Vec<usize>> = None;
    let mut stamp = vec![usize::MAX; n];
    let mut parent = vec![0usize; n];
    let mut dist = vec![0usize; n];
    for s in (0..n).filter(|&s| alive[s]) {
        let bound = best.as_ref().map_or(usize::MAX, Vec::len);
        stamp[s] = s;
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        'bfs: while let Some(x) = queue.pop_front() {
            if dist[x] + 1 >= bound {
                break;
            }
            for &y in ts.successors(x) {
                if !alive[y] || y == x {
                    continue;
                }
                if y == s {
                    let mut cycle = vec![x];
                    let mut z = x;
                    while z != s {
                        z = parent[z];
                        cycle.push(z);
                    }
                    cycle.reverse();
                    best = Some(cycle);
                    break 'bfs;
                }
                if stamp[y] != s {
                    stamp[y] = s;
                    parent[y] = x;
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        if best.as_ref().is_some_and(|c| c.len() == 2) {
            break;
        }
    }
    best
}

/// Calls `visit` on every proper coloring of one cell (`d = 0` specs) with
/// `banned[v]` excluded at `v`, in lexicographic order with vertex 0 most
/// significant. Stops early when `visit` returns an error.
pub(crate) fn for_each_cell_coloring(
    pg: &PeriodicGraph,
    k: usize,
    banned: &[Vec<usize>],
    visit: &mut dyn FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    let n = pg.cell_size();
    let mut inner: Vec<Vec<usize>> = vec![Vec::new(); n];
    for s in pg.specs().iter().filter(|s| s.d == 0) {
        inner[s.v].push(s.u);
    }
    fn rec(
        inner: &[Vec<usize>],
        banned: &[Vec<usize>],
        k: usize,
        current: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]) -> Result<()>,
    ) -> Result<()> {
        let w = current.len();
        if w == inner.len() {
            return visit(current);
        }
        for c in 0..k {
            if inner[w].iter().all(|&u| current[u] != c) && !banned[w].contains(&c) {
                current.push(c);
                rec(inner, banned, k, current, visit)?;
                current.pop();
            }
        }
        Ok(())
    }
    rec(&inner, banned, k, &mut Vec::with_capacity(n), visit)
}

/// All proper cell colorings; errors once more than `cap` exist.
pub(crate) fn cell_colorings(pg: &PeriodicGraph, k: usize, cap: usize) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let none = vec![Vec::new(); pg.cell_size()];
    for_each_cell_coloring(pg, k, &none, &mut |c| {
        if out.len() == cap {
            return Err(Error::ResourceCap {
                what: "transfer states",
                count: cap + 1,
                cap,
            });
        }
        out.push(c.to_vec());
        Ok(())
    })?;
    Ok(out)
}

/// Transfer system of proper `k`-colorings of a nearest-neighbor lift:
/// states are proper cell colorings, and `s → t` iff every crossing spec
/// `(u, v, 1)` has `s(u) ≠ t(v)`.
pub fn build_transfer_coloring(pg: &PeriodicGraph, k: usize, limits: &Limits) -> Result<TransferSystem> {
    if k == 0 {
        return input("number of colors must be positive");
    }
    if !pg.is_nearest_neighbor() {
        return input("transfer systems need a nearest-neighbor presentation; normalize first");
    }
    let states = cell_colorings(pg, k, limits.state_cap)?;
    let index: HashMap<&[usize], usize> =
        states.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
    let crossing: Vec<(usize, usize)> =
        pg.specs().iter().filter(|s| s.d == 1).map(|s| (s.u, s.v)).collect();
    let transition_cap = limits.state_cap.saturating_mul(16);
    let mut transitions = 0usize;
    let mut successors = Vec::with_capacity(states.len());
    let mut banned = vec![Vec::new(); pg.cell_size()];
    for s in &states {
        banned.iter_mut().for_each(Vec::clear);
        for &(u, v) in &crossing {
            banned[v].push(s[u]);
        }
        let mut succ = Vec::new();
        for_each_cell_coloring(pg, k, &banned, &mut |t| {
            transitions += 1;
            if transitions > transition_cap {
                return Err(Error::ResourceCap {
                    what: "transfer transitions",
                    count: transitions,
                    cap: transition_cap,
                });
            }
            succ.push(index[t]);
            Ok(())
        })?;
        successors.push(succ);
    }
    TransferSystem::new("proper-coloring", states, successors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::periodic::examples::*;

    fn system(states: usize, arcs: &[(usize, usize)]) -> TransferSystem {
        let mut succ = vec![Vec::new(); states];
        for &(a, b) in arcs {
            succ[a].push(b);
        }
        TransferSystem::new("test", (0..states).map(|i| vec![i]).collect(), succ).unwrap()
    }

    #[test]
    fn path_systems() {
        let limits = Limits::default();
        let ts = build_transfer_coloring(&path(), 2, &limits).unwrap();
        assert_eq!(ts.states().len(), 2);
        assert_eq!(ts.transition_count(), 2);
        assert!(ts.has_transition(0, 1) && ts.has_transition(1, 0));
        let ts = build_transfer_coloring(&path(), 1, &limits).unwrap();
        assert_eq!(ts.states().len(), 1);
        assert_eq!(ts.transition_count(), 0);
    }

    #[test]
    fn triangular_strip_system() {
        let ts = build_transfer_coloring(&triangular_strip(), 3, &Limits::default()).unwrap();
        assert_eq!(ts.states().len(), 6);
        assert_eq!(ts.transition_count(), 6);
        assert_eq!(find_cycle(&ts).unwrap().len(), 3);
    }

    #[test]
    fn cycles_in_small_digraphs() {
        assert_eq!(find_cycle(&system(2, &[(0, 1), (1, 0)])), Some(vec![0, 1]));
        assert_eq!(find_cycle(&system(2, &[(0, 1)])), None);
        assert_eq!(find_cycle(&system(3, &[(0, 1), (1, 2), (2, 2)])), Some(vec![2]));
        assert_eq!(find_cycle_without_self_loops(&system(3, &[(0, 1), (1, 2), (2, 2)])), None);
        // two cycles of length 3 and one of length 2 reached later
        let ts = system(5, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 3)]);
        assert_eq!(find_cycle(&ts), Some(vec![3, 4]));
    }

    #[test]
    fn state_cap_is_enforced() {
        let limits = Limits { state_cap: 3 };
        let err = build_transfer_coloring(&path(), 4, &limits).unwrap_err();
        assert!(matches!(err, Error::ResourceCap { .. }));
    }

    #[test]
    fn requires_nearest_neighbor_form() {
        assert!(build_transfer_coloring(&four_regular_line(), 3, &Limits::default()).is_err());
    }
}
