//! Random instances for property checks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::forcing::{Force, ForcingProcess};
use crate::graph::Graph;
use crate::leak::{LeakKind, LeakSet};
use crate::vertex_set::VertexSet;

/// Erdős–Rényi graph on `n` vertices with edge probability `p`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).expect("distinct in-range endpoints");
            }
        }
    }
    g
}

pub fn random_subset<R: Rng>(rng: &mut R, n: usize) -> VertexSet {
    VertexSet::from_vertices(n, (0..n).filter(|_| rng.gen_bool(0.5)))
}

/// Up to `max` distinct leaks of `kind`, drawn uniformly from its universe.
pub fn random_leaks<R: Rng>(rng: &mut R, g: &Graph, kind: LeakKind, max: usize) -> LeakSet {
    let universe = kind.universe(g);
    let k = rng.gen_range(0..=max.min(universe.len()));
    LeakSet::new(universe.choose_multiple(rng, k).copied())
}

/// Runs the rule from `b` without leaks, picking a uniformly random valid
/// force at every step, until nothing can fire.
pub fn random_process<R: Rng>(rng: &mut R, g: &Graph, b: &VertexSet) -> ForcingProcess {
    let mut blue = b.clone();
    let mut forces = Vec::new();
    loop {
        let valid: Vec<Force> = blue
            .iter()
            .filter_map(|u| g.neighbors(u).unique_outside(&blue).map(|v| Force::new(u, v)))
            .collect();
        let Some(&f) = valid.choose(rng) else {
            return ForcingProcess::new(forces);
        };
        blue.insert(f.head);
        forces.push(f);
    }
}

/// A random set obtained from `b` by firing a random valid prefix of `f`'s
/// forces in a random compatible order.
pub fn random_obtained<R: Rng>(rng: &mut R, g: &Graph, b: &VertexSet, f: &ForcingProcess) -> VertexSet {
    let steps = rng.gen_range(0..=f.len());
    let mut blue = b.clone();
    let mut pending: Vec<Force> = f.forces().to_vec();
    for _ in 0..steps {
        let ready: Vec<usize> = (0..pending.len())
            .filter(|&i| {
                let x = pending[i];
                blue.contains(x.tail) && g.neighbors(x.tail).unique_outside(&blue) == Some(x.head)
            })
            .collect();
        let Some(&i) = ready.choose(rng) else { break };
        blue.insert(pending.swap_remove(i).head);
    }
    blue
}
