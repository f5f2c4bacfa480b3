//! Membership tests and minimum-size searches for every leak flavor.
//!
//! Everything here is plain exhaustion. Candidate blue sets are tried by
//! size, in colexicographic order within a size; leak sets are tried in the
//! order [`enumerate_leak_sets`] yields them. Reported witnesses, counterexamples
//! and counters match a sequential scan regardless of how many threads run.

use rayon::prelude::*;
use serde::Serialize;

use crate::forcing::{closure_set, is_zero_forcing_set, possible_forces};
use crate::graph::Graph;
use crate::leak::{enumerate_leak_sets, enumerate_placements, LeakBudget, LeakKind, LeakPattern, LeakSet};
use crate::vertex_set::VertexSet;

/// A leak set that stops the blue set, and where it stalls.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub leaks: LeakSet,
    pub stalled: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub counterexample: Option<Counterexample>,
    #[serde(skip)]
    pub leaksets_checked: u64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub subsets_checked: u64,
    pub leaksets_checked: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NumberResult {
    pub value: usize,
    pub witness: VertexSet,
    #[serde(skip)]
    pub stats: SearchStats,
}

/// Runs the closure of `b` under each leak set until one leaves a vertex white.
pub fn check_against<I>(g: &Graph, b: &VertexSet, leak_sets: I) -> Verdict
where
    I: IntoIterator<Item = LeakSet>,
{
    let mut checked = 0;
    for leaks in leak_sets {
        checked += 1;
        let stalled = closure_set(g, b, &leaks.forbidden(g));
        if !stalled.is_full() {
            return Verdict {
                holds: false,
                counterexample: Some(Counterexample { leaks, stalled }),
                leaksets_checked: checked,
            };
        }
    }
    Verdict {
        holds: true,
        counterexample: None,
        leaksets_checked: checked,
    }
}

/// Whether `b` colors `g` despite every leak set allowed by `budget`.
pub fn check_leaky_set(g: &Graph, b: &VertexSet, budget: LeakBudget) -> Verdict {
    check_against(g, b, enumerate_leak_sets(g, budget))
}

/// Whether `b` colors `g` despite every placement of every sub-pattern of `pattern`.
pub fn check_pattern_leaky_set(g: &Graph, b: &VertexSet, pattern: &LeakPattern) -> Verdict {
    let placements = enumerate_placements(g, pattern);
    check_against(g, b, placements.into_iter().map(LeakSet::from_arcs))
}

/// Minimum size of an ℓ-leaky forcing set of the budget's flavor.
pub fn leaky_number(g: &Graph, budget: LeakBudget) -> NumberResult {
    let zero = min_passing(g, 0, |b| {
        let holds = is_zero_forcing_set(g, b);
        (holds, 1)
    });
    if budget.ell == 0 {
        return zero;
    }
    let mut result = min_passing(g, zero.value, |b| {
        let v = check_leaky_set(g, b, budget);
        (v.holds, v.leaksets_checked)
    });
    result.stats.subsets_checked += zero.stats.subsets_checked;
    result.stats.leaksets_checked += zero.stats.leaksets_checked;
    result
}

/// Minimum size of a set that survives every placement of `pattern`.
pub fn pattern_leaky_number(g: &Graph, pattern: &LeakPattern) -> NumberResult {
    let placements: Vec<LeakSet> = enumerate_placements(g, pattern)
        .into_iter()
        .map(LeakSet::from_arcs)
        .collect();
    let zero = min_passing(g, 0, |b| (is_zero_forcing_set(g, b), 1));
    let mut result = min_passing(g, zero.value, |b| {
        let v = check_against(g, b, placements.iter().cloned());
        (v.holds, v.leaksets_checked)
    });
    result.stats.subsets_checked += zero.stats.subsets_checked;
    result.stats.leaksets_checked += zero.stats.leaksets_checked;
    result
}

/// Membership via the two-forcer characterization instead of leak enumeration:
/// `b` is ℓ-leaky iff it is (ℓ-1)-leaky and, for every set of at most ℓ-1
/// vertex leaks, every white vertex has possible forces from two distinct tails.
pub fn check_via_characterization(g: &Graph, b: &VertexSet, ell: usize) -> bool {
    if ell == 0 {
        return is_zero_forcing_set(g, b);
    }
    if !check_via_characterization(g, b, ell - 1) {
        return false;
    }
    let white = b.complement();
    enumerate_leak_sets(g, LeakBudget::new(LeakKind::Vertex, ell - 1)).all(|leaks| {
        let possible = possible_forces(g, b, &leaks);
        white.iter().all(|v| {
            let mut tails = possible.iter().filter(|f| f.head == v).map(|f| f.tail);
            match tails.next() {
                Some(first) => tails.any(|t| t != first),
                None => false,
            }
        })
    })
}

/// Next `k`-subset of `0..n` in colexicographic order, in place.
fn next_colex(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in 0..k {
        let limit = if i + 1 < k { c[i + 1] } else { n };
        if c[i] + 1 < limit {
            c[i] += 1;
            for (j, slot) in c.iter_mut().enumerate().take(i) {
                *slot = j;
            }
            return true;
        }
    }
    false
}

/// All `k`-subsets of `0..n` in colexicographic order.
pub fn colex_subsets(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    let mut current: Option<Vec<usize>> = (k <= n).then(|| (0..k).collect());
    std::iter::from_fn(move || {
        let c = current.as_mut()?;
        let out = VertexSet::from_vertices(n, c.iter().copied());
        if !next_colex(c, n) {
            current = None;
        }
        Some(out)
    })
}

const CHUNK: usize = 64;

/// Smallest set (first in colex order) of size at least `start` passing `check`.
///
/// `check` returns whether the set passes and how many leak sets it examined.
/// Candidates are evaluated in parallel chunks; counters only include
/// candidates up to and including the witness.
fn min_passing<F>(g: &Graph, start: usize, check: F) -> NumberResult
where
    F: Fn(&VertexSet) -> (bool, u64) + Sync,
{
    let n = g.n();
    let mut stats = SearchStats::default();
    for k in start..=n {
        let mut subsets = colex_subsets(n, k).peekable();
        while subsets.peek().is_some() {
            let chunk: Vec<VertexSet> = subsets.by_ref().take(CHUNK).collect();
            let outcomes: Vec<(bool, u64)> = chunk.par_iter().map(&check).collect();
            for (b, (holds, leaksets)) in chunk.into_iter().zip(outcomes) {
                stats.subsets_checked += 1;
                stats.leaksets_checked += leaksets;
                if holds {
                    return NumberResult {
                        value: k,
                        witness: b,
                        stats,
                    };
                }
            }
        }
    }
    unreachable!("the full vertex set passes every leak budget")
}
