use std::collections::HashMap;

use super::transfer::{find_cycle, TransferSystem};
use super::{ungroup_edges, Limits};
use crate::error::{input, Error, Result};
use crate::periodic::{AssignmentKind, PeriodicAssignment, PeriodicGraph};

/// Exact-degree constraint on a nearest-neighbor lift. A state is the set
/// of selected crossing specs between two consecutive cells, as a bitmask
/// over the crossing specs in spec order.
struct FactorModel<'a> {
    pg: &'a PeriodicGraph,
    k: usize,
    crossing: Vec<usize>,
    interior: Vec<usize>,
    memo: HashMap<Vec<usize>, Option<Vec<bool>>>,
}

impl<'a> FactorModel<'a> {
    fn new(pg: &'a PeriodicGraph, k: usize) -> Self {
        let (crossing, interior) = (0..pg.specs().len()).partition(|&i| pg.specs()[i].d == 1);
        FactorModel {
            pg,
            k,
            crossing,
            interior,
            memo: HashMap::new(),
        }
    }

    /// Degrees each cell vertex still needs from interior edges when the
    /// crossing edges into the cell are `incoming` and out of it `outgoing`.
    fn need(&self, incoming: usize, outgoing: usize) -> Option<Vec<usize>> {
        let mut need = vec![self.k; self.pg.cell_size()];
        for (bit, &idx) in self.crossing.iter().enumerate() {
            let s = &self.pg.specs()[idx];
            if incoming >> bit & 1 == 1 {
                need[s.v] = need[s.v].checked_sub(1)?;
            }
            if outgoing >> bit & 1 == 1 {
                need[s.u] = need[s.u].checked_sub(1)?;
            }
        }
        Some(need)
    }

    /// Interior edges (flags over `self.interior`) meeting the degrees left
    /// by the two interfaces of a cell.
    fn complete(&mut self, incoming: usize, outgoing: usize) -> Option<Vec<bool>> {
        let need = self.need(incoming, outgoing)?;
        if let Some(hit) = self.memo.get(&need) {
            return hit.clone();
        }
        let specs = self.pg.specs();
        let edges: Vec<(usize, usize)> = self.interior.iter().map(|&i| (specs[i].u, specs[i].v)).collect();
        // interior edges at each vertex not yet decided, for pruning
        let mut open = vec![0usize; self.pg.cell_size()];
        for &(u, v) in &edges {
            open[u] += 1;
            open[v] += 1;
        }
        let mut left = need.clone();
        let mut chosen = Vec::with_capacity(edges.len());
        let found = if left.iter().zip(&open).all(|(l, o)| l <= o) {
            search(&edges, &mut left, &mut open, &mut chosen)
        } else {
            false
        };
        let result = found.then_some(chosen);
        self.memo.insert(need, result.clone());
        result
    }
}

fn search(edges: &[(usize, usize)], left: &mut [usize], open: &mut [usize], chosen: &mut Vec<bool>) -> bool {
    let i = chosen.len();
    if i == edges.len() {
        return left.iter().all(|&x| x == 0);
    }
    let (u, v) = edges[i];
    open[u] -= 1;
    open[v] -= 1;
    if left[u] > 0 && left[v] > 0 {
        left[u] -= 1;
        left[v] -= 1;
        chosen.push(true);
        if left[u] <= open[u] && left[v] <= open[v] && search(edges, left, open, chosen) {
            return true;
        }
        chosen.pop();
        left[u] += 1;
        left[v] += 1;
    }
    chosen.push(false);
    if left[u] <= open[u] && left[v] <= open[v] && search(edges, left, open, chosen) {
        return true;
    }
    chosen.pop();
    open[u] += 1;
    open[v] += 1;
    false
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        return input("factor degree must be positive");
    }
    Ok(())
}

fn build(model: &mut FactorModel, k: usize, limits: &Limits) -> Result<TransferSystem> {
    check_k(k)?;
    if !model.pg.is_nearest_neighbor() {
        return input("transfer systems need a nearest-neighbor presentation; normalize first");
    }
    let c = model.crossing.len();
    let count = if c < usize::BITS as usize { 1usize << c } else { usize::MAX };
    if count > limits.state_cap {
        return Err(Error::ResourceCap {
            what: "transfer states",
            count,
            cap: limits.state_cap,
        });
    }
    let transition_cap = limits.state_cap.saturating_mul(16);
    let mut transitions = 0usize;
    let mut successors = Vec::with_capacity(count);
    for a in 0..count {
        let mut succ = Vec::new();
        for b in 0..count {
            if model.complete(a, b).is_some() {
                transitions += 1;
                if transitions > transition_cap {
                    return Err(Error::ResourceCap {
                        what: "transfer transitions",
                        count: transitions,
                        cap: transition_cap,
                    });
                }
                succ.push(b);
            }
        }
        successors.push(succ);
    }
    let states = (0..count).map(|m| (0..c).map(|bit| m >> bit & 1).collect()).collect();
    TransferSystem::new(format!("{k}-factor"), states, successors)
}

/// Transfer system of `k`-factors of a nearest-neighbor lift: states are
/// the selected crossing specs between consecutive cells (bit `j` of state
/// `i` is crossing spec `j`, in spec order), and `A → B` iff some set of
/// interior edges gives every cell vertex degree exactly `k` when `A`
/// enters and `B` leaves the cell.
pub fn build_transfer_factor(pg: &PeriodicGraph, k: usize, limits: &Limits) -> Result<TransferSystem> {
    build(&mut FactorModel::new(pg, k), k, limits)
}

/// Periodic spanning `k`-regular subgraph of the lift, or `None` if the
/// lift has none.
pub fn periodic_k_factor(pg: &PeriodicGraph, k: usize, limits: &Limits) -> Result<Option<PeriodicAssignment>> {
    check_k(k)?;
    let normalized = pg.normalize_nearest_neighbor();
    let mut model = FactorModel::new(&normalized, k);
    let ts = build(&mut model, k, limits)?;
    let Some(cycle) = find_cycle(&ts) else {
        return Ok(None);
    };
    let p = cycle.len();
    let items = normalized.specs().len();
    let mut values = vec![0usize; p * items];
    for r in 0..p {
        let (incoming, outgoing) = (cycle[(r + p - 1) % p], cycle[r]);
        for (bit, &idx) in model.crossing.iter().enumerate() {
            values[r * items + idx] = outgoing >> bit & 1;
        }
        let inner = model.complete(incoming, outgoing).expect("cycle arcs are completable");
        for (&idx, &on) in model.interior.iter().zip(&inner) {
            values[r * items + idx] = usize::from(on);
        }
    }
    let grouped = PeriodicAssignment::new(AssignmentKind::EdgeSubset, p, items, values)?;
    let factor = ungroup_edges(pg, &normalized, &grouped).minimize_period();
    assert!(factor.is_k_factor_of(pg, k)?, "factor failed window validation");
    Ok(Some(factor))
}

/// A periodic perfect matching (a 1-factor), or `None` if the lift has none.
pub fn periodic_perfect_matching(pg: &PeriodicGraph, limits: &Limits) -> Result<Option<PeriodicAssignment>> {
    periodic_k_factor(pg, 1, limits)
}
