//! The color-change rule under leaks, forcing processes, and the set of
//! forces that can occur in some forcing process.
//!
//! A blue vertex `u` forces its neighbor `v` when `v` is the only white
//! neighbor of `u` and no leak disables `u -> v`. The rule is monotone, so
//! exhaustive application reaches the same fixed point in any order.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::leak::{ArcSet, Forbidden, LeakSet};
use crate::vertex_set::VertexSet;

/// One application of the color-change rule, `tail -> head`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Force {
    pub tail: usize,
    pub head: usize,
}

impl Force {
    pub const fn new(tail: usize, head: usize) -> Self {
        Self { tail, head }
    }
}

impl fmt::Display for Force {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}>{}", self.tail, self.head)
    }
}

impl Serialize for Force {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// An ordered list of forces.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct ForcingProcess(pub Vec<Force>);

impl ForcingProcess {
    pub fn new(forces: Vec<Force>) -> Self {
        Self(forces)
    }

    pub fn forces(&self) -> &[Force] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn heads(&self, n: usize) -> VertexSet {
        VertexSet::from_vertices(n, self.0.iter().map(|f| f.head))
    }

    /// Forces as a multiset, ignoring order.
    pub fn force_set(&self) -> Vec<Force> {
        let mut v = self.0.clone();
        v.sort_unstable();
        v
    }
}

impl FromIterator<Force> for ForcingProcess {
    fn from_iter<I: IntoIterator<Item = Force>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureResult {
    #[serde(rename = "final")]
    pub final_set: VertexSet,
    /// Forces ordered by round, then by `(tail, head)`.
    pub process: ForcingProcess,
    /// Blue set before any force, then after each synchronous round.
    pub rounds: Vec<VertexSet>,
}

impl ClosureResult {
    pub fn is_complete(&self) -> bool {
        self.final_set.is_full()
    }
}

#[inline]
fn valid_force_from(g: &Graph, blue: &VertexSet, forbidden: &Forbidden, u: usize) -> Option<Force> {
    let v = g.neighbors(u).unique_outside(blue)?;
    let f = Force::new(u, v);
    (!forbidden.forbids(f)).then_some(f)
}

/// Every force valid right now from the blue set `s` under leaks `l`.
pub fn valid_forces(g: &Graph, s: &VertexSet, l: &LeakSet) -> BTreeSet<Force> {
    let forbidden = l.forbidden(g);
    s.iter().filter_map(|u| valid_force_from(g, s, &forbidden, u)).collect()
}

/// Fixed point of the rule from `b`, without a trace.
pub fn closure_set(g: &Graph, b: &VertexSet, forbidden: &Forbidden) -> VertexSet {
    let mut blue = b.clone();
    loop {
        let mut changed = false;
        for u in 0..g.n() {
            if !blue.contains(u) {
                continue;
            }
            if let Some(f) = valid_force_from(g, &blue, forbidden, u) {
                blue.insert(f.head);
                changed = true;
            }
        }
        if !changed {
            return blue;
        }
    }
}

/// Synchronous closure with a witnessing process and per-round blue sets.
pub fn closure_traced(g: &Graph, b: &VertexSet, forbidden: &Forbidden) -> ClosureResult {
    let mut blue = b.clone();
    let mut rounds = vec![blue.clone()];
    let mut process = Vec::new();
    loop {
        let mut round: Vec<Force> = Vec::new();
        let mut heads = VertexSet::empty(g.n());
        // tails ascend, so the first force claiming a head has the smallest tail
        for u in blue.iter() {
            if let Some(f) = valid_force_from(g, &blue, forbidden, u) {
                if heads.insert(f.head) {
                    round.push(f);
                }
            }
        }
        if round.is_empty() {
            break;
        }
        blue.union_with(&heads);
        process.extend(round);
        rounds.push(blue.clone());
    }
    ClosureResult {
        final_set: blue,
        process: ForcingProcess(process),
        rounds,
    }
}

/// The blue set reached from `b` under leaks `l`, with a witnessing process.
pub fn closure(g: &Graph, b: &VertexSet, l: &LeakSet) -> ClosureResult {
    closure_traced(g, b, &l.forbidden(g))
}

pub fn is_zero_forcing_set(g: &Graph, b: &VertexSet) -> bool {
    closure_set(g, b, &Forbidden::none(g.n())).is_full()
}

fn check_structure(g: &Graph, f: &ForcingProcess) -> Result<()> {
    let mut heads = BTreeSet::new();
    for force in f.forces() {
        if !g.has_edge(force.tail, force.head) {
            return Err(Error::MalformedProcess(format!("{force} is not an edge")));
        }
        if !heads.insert(force.head) {
            return Err(Error::MalformedProcess(format!("vertex {} forced twice", force.head)));
        }
    }
    Ok(())
}

/// Applies `forces` greedily from `b`, in any order that keeps each valid.
///
/// Returns the final blue set, or `None` if some force can never fire. Greedy
/// is complete here: heads are distinct and blue sets only grow, so applying
/// one force never invalidates another pending force whose head is white.
fn greedy_apply(g: &Graph, b: &VertexSet, forces: &[Force], forbidden: &Forbidden) -> Option<VertexSet> {
    let mut blue = b.clone();
    let mut pending: Vec<Force> = forces.to_vec();
    if pending.iter().any(|f| blue.contains(f.head)) {
        return None;
    }
    while !pending.is_empty() {
        let before = pending.len();
        pending.retain(|&f| {
            let fires = blue.contains(f.tail)
                && g.neighbors(f.tail).unique_outside(&blue) == Some(f.head)
                && !forbidden.forbids(f);
            if fires {
                blue.insert(f.head);
            }
            !fires
        });
        if pending.len() == before {
            return None;
        }
    }
    Some(blue)
}

/// Whether the forces of `f` can all be applied from `b` under `l` in some order.
pub fn validate_process(g: &Graph, b: &VertexSet, l: &LeakSet, f: &ForcingProcess) -> Result<bool> {
    check_structure(g, f)?;
    Ok(greedy_apply(g, b, f.forces(), &l.forbidden(g)).is_some())
}

/// Splits `f` into the forces whose head lies outside `s` and the rest,
/// keeping relative order in both.
pub fn restrict_process(f: &ForcingProcess, s: &VertexSet) -> (ForcingProcess, ForcingProcess) {
    let (inside, outside): (Vec<Force>, Vec<Force>) = f.forces().iter().partition(|x| s.contains(x.head));
    (ForcingProcess(outside), ForcingProcess(inside))
}

/// Whether `b` can color exactly `b_prime` blue using only forces of `f`.
pub fn obtainable(g: &Graph, b: &VertexSet, f: &ForcingProcess, b_prime: &VertexSet) -> Result<bool> {
    if !b.is_subset(b_prime) {
        return Err(Error::Contract("B is not a subset of B'".into()));
    }
    let target = b_prime.difference(b);
    let used: Vec<Force> = f.forces().iter().filter(|x| target.contains(x.head)).copied().collect();
    let Some(reached) = greedy_apply(g, b, &used, &Forbidden::none(g.n())) else {
        return Ok(false);
    };
    Ok(&reached == b_prime)
}

/// Follows `f` up to `b_prime`, then finishes with the forces of `f_prime`
/// whose heads are still white.
pub fn splice_processes(
    g: &Graph,
    b: &VertexSet,
    f: &ForcingProcess,
    f_prime: &ForcingProcess,
    b_prime: &VertexSet,
) -> Result<ForcingProcess> {
    let none = LeakSet::empty();
    if !validate_process(g, b, &none, f)? {
        return Err(Error::Contract("F is not a valid process from B".into()));
    }
    if !validate_process(g, b, &none, f_prime)? {
        return Err(Error::Contract("F' is not a valid process from B".into()));
    }
    if !obtainable(g, b, f, b_prime)? {
        return Err(Error::Contract("B' is not obtainable from B using F".into()));
    }
    let (_, kept) = restrict_process(f, b_prime);
    let (tail, _) = restrict_process(f_prime, b_prime);
    let spliced: ForcingProcess = kept.0.into_iter().chain(tail.0).collect();
    if !validate_process(g, b, &none, &spliced)? {
        return Err(Error::Contract("spliced process does not validate".into()));
    }
    Ok(spliced)
}

/// Every force `u -> v` that occurs in some forcing process of `b` under `l`.
///
/// For each white `v`, the closure with all forces into `v` blocked is the
/// largest set reachable while `v` stays white; `u -> v` is possible exactly
/// when `u` and all its other neighbors lie in that set and no leak disables it.
pub fn possible_forces(g: &Graph, b: &VertexSet, l: &LeakSet) -> BTreeSet<Force> {
    let forbidden = l.forbidden(g);
    let mut out = BTreeSet::new();
    for v in b.complement().iter() {
        let mut blocked = forbidden.clone();
        blocked.block_head(v, g);
        let reach = closure_set(g, b, &blocked);
        for u in g.neighbors(v).iter() {
            let f = Force::new(u, v);
            if reach.contains(u) && g.neighbors(u).count_outside(&reach) == 1 && !forbidden.forbids(f) {
                out.insert(f);
            }
        }
    }
    out
}

/// Arcs of `arcs` that currently block `s`: tail in `s` and head the tail's
/// only neighbor outside `s`.
pub fn active_leaks(g: &Graph, s: &VertexSet, arcs: &ArcSet) -> ArcSet {
    arcs.iter()
        .filter(|a| a.tail < g.n() && s.contains(a.tail) && g.neighbors(a.tail).unique_outside(s) == Some(a.head))
        .copied()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;
    use crate::leak::{is_independent, Leak};

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied())
    }

    fn proc(fs: &[(usize, usize)]) -> ForcingProcess {
        fs.iter().map(|&(t, h)| Force::new(t, h)).collect()
    }

    fn forces(fs: &[(usize, usize)]) -> BTreeSet<Force> {
        fs.iter().map(|&(t, h)| Force::new(t, h)).collect()
    }

    #[test]
    fn valid_force_examples() {
        let p3 = Family::Path(3).build().unwrap();
        assert_eq!(valid_forces(&p3, &set(3, &[0]), &LeakSet::empty()), forces(&[(0, 1)]));
        assert!(valid_forces(&p3, &set(3, &[0]), &LeakSet::new([Leak::arc(0, 1)])).is_empty());

        let g = Family::CompleteTimesK2(3).build().unwrap();
        assert_eq!(
            valid_forces(&g, &set(6, &[0, 1, 2]), &LeakSet::new([Leak::Vertex(0)])),
            forces(&[(1, 4), (2, 5)])
        );
    }

    #[test]
    fn closure_examples() {
        let p3 = Family::Path(3).build().unwrap();
        let r = closure(&p3, &set(3, &[0]), &LeakSet::empty());
        assert_eq!(r.final_set.to_vec(), vec![0, 1, 2]);
        assert_eq!(r.process, proc(&[(0, 1), (1, 2)]));
        assert_eq!(r.rounds.len(), 3);

        let g = Family::CompleteTimesK2(3).build().unwrap();
        let l = LeakSet::new([Leak::arc(0, 3), Leak::arc(1, 4)]);
        let r = closure(&g, &set(6, &[0, 1, 2]), &l);
        assert_eq!(r.final_set.to_vec(), vec![0, 1, 2, 5]);

        let paw = Family::Paw.build().unwrap();
        let r = closure(&paw, &set(4, &[1, 3]), &LeakSet::empty());
        assert!(r.is_complete());
        // round two has two forcers for 2; the smaller tail is recorded
        assert_eq!(r.process, proc(&[(3, 0), (0, 2)]));
        assert!(validate_process(&paw, &set(4, &[1, 3]), &LeakSet::empty(), &proc(&[(3, 0), (1, 2)])).unwrap());
    }

    #[test]
    fn rounds_are_strictly_increasing() {
        let g = Family::Cycle(6).build().unwrap();
        let r = closure(&g, &set(6, &[0, 1]), &LeakSet::empty());
        assert!(r.rounds.windows(2).all(|w| w[0].is_subset(&w[1]) && w[0] != w[1]));
        assert_eq!(r.rounds.last(), Some(&r.final_set));
        assert_eq!(r.final_set, set(6, &[0, 1]).union(&r.process.heads(6)));
    }

    #[test]
    fn zero_forcing_examples() {
        let paw = Family::Paw.build().unwrap();
        assert!(is_zero_forcing_set(&paw, &set(4, &[1, 3])));
        assert!(!is_zero_forcing_set(&paw, &set(4, &[3])));
        assert_eq!(
            closure(&paw, &set(4, &[3]), &LeakSet::empty()).final_set.to_vec(),
            vec![0, 3]
        );
        for g in [paw, Family::Complete(4).build().unwrap(), Graph::empty(0)] {
            assert!(is_zero_forcing_set(&g, &g.vertices()));
        }
    }

    #[test]
    fn validate_examples() {
        let p3 = Family::Path(3).build().unwrap();
        let b = set(3, &[0]);
        let none = LeakSet::empty();
        assert!(validate_process(&p3, &b, &none, &proc(&[(0, 1), (1, 2)])).unwrap());
        assert!(validate_process(&p3, &b, &none, &proc(&[(1, 2), (0, 1)])).unwrap());
        assert!(!validate_process(&p3, &b, &LeakSet::new([Leak::Vertex(1)]), &proc(&[(0, 1), (1, 2)])).unwrap());
        assert!(matches!(
            validate_process(&p3, &b, &none, &proc(&[(0, 1), (2, 1)])),
            Err(Error::MalformedProcess(_))
        ));
        assert!(matches!(
            validate_process(&p3, &b, &none, &proc(&[(0, 2)])),
            Err(Error::MalformedProcess(_))
        ));
        // forcing an already-blue vertex is rejected
        assert!(!validate_process(&p3, &set(3, &[0, 1]), &none, &proc(&[(0, 1)])).unwrap());
    }

    #[test]
    fn restrict_examples() {
        let f = proc(&[(0, 1), (1, 2)]);
        assert_eq!(restrict_process(&f, &set(3, &[2])), (proc(&[(0, 1)]), proc(&[(1, 2)])));
        assert_eq!(restrict_process(&f, &set(3, &[])), (f.clone(), proc(&[])));
        assert_eq!(restrict_process(&proc(&[]), &set(3, &[1])), (proc(&[]), proc(&[])));
    }

    #[test]
    fn obtainable_examples() {
        let p3 = Family::Path(3).build().unwrap();
        let b = set(3, &[0]);
        let f = proc(&[(0, 1), (1, 2)]);
        assert!(obtainable(&p3, &b, &f, &b).unwrap());
        assert!(obtainable(&p3, &b, &f, &set(3, &[0, 1, 2])).unwrap());
        assert!(obtainable(&p3, &b, &f, &set(3, &[0, 1])).unwrap());
        assert!(!obtainable(&p3, &b, &f, &set(3, &[0, 2])).unwrap());
        assert!(matches!(
            obtainable(&p3, &b, &f, &set(3, &[1])),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn splice_examples() {
        let p4 = Family::Path(4).build().unwrap();
        let b = set(4, &[0, 3]);
        let f = proc(&[(0, 1), (3, 2)]);
        let f2 = proc(&[(3, 2), (2, 1)]);
        let out = splice_processes(&p4, &b, &f, &f2, &set(4, &[0, 2, 3])).unwrap();
        assert_eq!(out, proc(&[(3, 2), (2, 1)]));
        assert!(validate_process(&p4, &b, &LeakSet::empty(), &out).unwrap());

        // splicing a process with itself keeps its forces
        let out = splice_processes(&p4, &b, &f, &f, &set(4, &[0, 1, 3])).unwrap();
        assert_eq!(out.force_set(), f.force_set());

        // B' = B yields F' exactly
        assert_eq!(splice_processes(&p4, &b, &f, &f2, &b).unwrap(), f2);

        assert!(matches!(
            splice_processes(&p4, &b, &proc(&[(1, 2)]), &f2, &b),
            Err(Error::Contract(m)) if m.starts_with("F ")
        ));
        assert!(matches!(
            splice_processes(&p4, &b, &proc(&[(0, 1)]), &f2, &set(4, &[0, 2, 3])),
            Err(Error::Contract(m)) if m.starts_with("B'")
        ));
    }

    #[test]
    fn possible_force_examples() {
        let p3 = Family::Path(3).build().unwrap();
        assert_eq!(
            possible_forces(&p3, &set(3, &[0, 2]), &LeakSet::empty()),
            forces(&[(0, 1), (2, 1)])
        );
        assert_eq!(
            possible_forces(&p3, &set(3, &[0]), &LeakSet::empty()),
            forces(&[(0, 1), (1, 2)])
        );

        let g = Family::CompleteTimesK2(3).build().unwrap();
        let mut expected = forces(&[(0, 3), (1, 4), (2, 5)]);
        for a in 3..6 {
            for b in 3..6 {
                if a != b {
                    expected.insert(Force::new(a, b));
                }
            }
        }
        assert_eq!(possible_forces(&g, &set(6, &[0, 1, 2]), &LeakSet::empty()), expected);
        assert!(possible_forces(&g, &g.vertices(), &LeakSet::empty()).is_empty());
    }

    #[test]
    fn active_leaks_are_independent() {
        let g = Family::CompleteTimesK2(3).build().unwrap();
        let all: ArcSet = g
            .edges()
            .flat_map(|(u, v)| [Force::new(u, v), Force::new(v, u)])
            .collect();
        for mask in 0u64..64 {
            let s = VertexSet::from_mask(6, mask);
            assert!(is_independent(&active_leaks(&g, &s, &all)));
        }
    }
}
