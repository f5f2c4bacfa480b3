use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::forcing::Force;
use crate::graph::Graph;
use crate::leak::LeakSet;
use crate::vertex_set::VertexSet;

/// Which transitions of the blue-set state space count as possible forces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OracleMode {
    /// Only forces on some path that goes on to color the whole graph.
    Completing,
    /// Every force valid in some reachable state.
    Reachable,
}

pub const DEFAULT_STATE_CAP: usize = 1 << 16;

/// Possible forces by explicit search over every reachable blue set.
///
/// Transitions are single forces `u -> v` that are valid in a state and not
/// disabled by `l`. This shares nothing with the blocked-closure route in
/// [`crate::forcing::possible_forces`] beyond the graph and the leak set.
pub fn possible_forces_oracle(
    g: &Graph,
    b: &VertexSet,
    l: &LeakSet,
    mode: OracleMode,
    state_cap: usize,
) -> Result<BTreeSet<Force>> {
    let n = g.n();
    let mut index: HashMap<VertexSet, usize> = HashMap::new();
    let mut states: Vec<VertexSet> = Vec::new();
    let mut transitions: Vec<(usize, usize, Force)> = Vec::new();
    let mut queue = VecDeque::new();

    index.insert(b.clone(), 0);
    states.push(b.clone());
    queue.push_back(0);

    while let Some(s) = queue.pop_front() {
        let blue = states[s].clone();
        for u in blue.iter() {
            let white: Vec<usize> = g.neighbors(u).iter().filter(|&w| !blue.contains(w)).collect();
            if white.len() != 1 {
                continue;
            }
            let f = Force::new(u, white[0]);
            if l.disables(f) {
                continue;
            }
            let mut next = blue.clone();
            next.insert(f.head);
            let t = match index.get(&next) {
                Some(&t) => t,
                None => {
                    if states.len() >= state_cap {
                        return Err(Error::ResourceCap { cap: state_cap });
                    }
                    let t = states.len();
                    index.insert(next.clone(), t);
                    states.push(next);
                    queue.push_back(t);
                    t
                }
            };
            transitions.push((s, t, f));
        }
    }

    let keep: Vec<bool> = match mode {
        OracleMode::Reachable => vec![true; states.len()],
        OracleMode::Completing => {
            let mut co = vec![false; states.len()];
            if let Some(&full) = index.get(&VertexSet::full(n)) {
                let mut preds: Vec<Vec<usize>> = vec![Vec::new(); states.len()];
                for &(s, t, _) in &transitions {
                    preds[t].push(s);
                }
                co[full] = true;
                let mut stack = vec![full];
                while let Some(t) = stack.pop() {
                    for &s in &preds[t] {
                        if !co[s] {
                            co[s] = true;
                            stack.push(s);
                        }
                    }
                }
            }
            co
        }
    };

    Ok(transitions
        .into_iter()
        .filter(|&(_, t, _)| keep[t])
        .map(|(_, _, f)| f)
        .collect())
}
