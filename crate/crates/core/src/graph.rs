//! Simple undirected graphs on dense vertex ids and the named fixture families.

use std::fmt;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency is stored as one [`VertexSet`] per vertex and kept symmetric.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![VertexSet::empty(n); n],
        }
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds the edge `uv`. Adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Each edge once as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let mut seen = VertexSet::empty(n);
        let mut stack = vec![0];
        seen.insert(0);
        while let Some(u) = stack.pop() {
            for v in self.adj[u].iter() {
                if seen.insert(v) {
                    stack.push(v);
                }
            }
        }
        seen.is_full()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = (0..self.n()).map(|v| self.degree(v)).collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        degrees
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Named graph families used as fixtures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Path on `n` vertices, `0-1-...-(n-1)`.
    Path(usize),
    /// Cycle on `n >= 3` vertices.
    Cycle(usize),
    Complete(usize),
    /// Star with center 0 and `k` leaves `1..=k`.
    Star(usize),
    /// Triangle `0,1,2` with pendant vertex 3 attached to 0.
    Paw,
    /// `K_k □ K_2`: vertices `0..k` form one clique, `k..2k` the other,
    /// and `i` is matched to `i + k`.
    CompleteTimesK2(usize),
}

impl Family {
    pub fn build(self) -> Result<Graph> {
        let positive = |k: usize, what: &str| {
            if k == 0 {
                Err(Error::Parameter(format!("{what} needs a positive size")))
            } else {
                Ok(k)
            }
        };
        match self {
            Family::Path(n) => {
                let n = positive(n, "path")?;
                Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
            }
            Family::Cycle(n) => {
                if n < 3 {
                    return Err(Error::Parameter(format!("cycle needs at least 3 vertices, got {n}")));
                }
                Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
            }
            Family::Complete(n) => {
                let n = positive(n, "complete graph")?;
                Graph::from_edges(n, clique_edges(0..n))
            }
            Family::Star(k) => {
                let k = positive(k, "star")?;
                Graph::from_edges(k + 1, (1..=k).map(|i| (0, i)))
            }
            Family::Paw => Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)]),
            Family::CompleteTimesK2(k) => {
                let k = positive(k, "cartesian product")?;
                let edges = clique_edges(0..k)
                    .chain(clique_edges(k..2 * k))
                    .chain((0..k).map(|i| (i, i + k)));
                Graph::from_edges(2 * k, edges)
            }
        }
    }

    /// Parses `name` with integer `params`, e.g. `("cycle", [5])`.
    pub fn from_name(name: &str, params: &[usize]) -> Result<Self> {
        let one = || match params {
            [k] => Ok(*k),
            _ => Err(Error::Parameter(format!("{name} takes exactly one size parameter"))),
        };
        Ok(match name {
            "path" => Family::Path(one()?),
            "cycle" => Family::Cycle(one()?),
            "complete" => Family::Complete(one()?),
            "star" => Family::Star(one()?),
            "paw" if params.is_empty() => Family::Paw,
            "cartesian_product" | "complete_times_k2" => Family::CompleteTimesK2(one()?),
            _ => return Err(Error::Parameter(format!("unknown family {name:?}"))),
        })
    }
}

fn clique_edges(range: std::ops::Range<usize>) -> impl Iterator<Item = (usize, usize)> {
    let end = range.end;
    range.flat_map(move |u| (u + 1..end).map(move |v| (u, v)))
}

/// Builds a named family; shorthand for [`Family::from_name`] plus [`Family::build`].
pub fn generate_family(name: &str, params: &[usize]) -> Result<Graph> {
    Family::from_name(name, params)?.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_range() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn cartesian_fixture_labeling() {
        let g = Family::CompleteTimesK2(3).build().unwrap();
        assert_eq!(g.n(), 6);
        let mut edges: Vec<_> = g.edges().collect();
        edges.sort();
        let mut expected = vec![(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)];
        expected.sort();
        assert_eq!(edges, expected);
        for k in 1..6 {
            let g = Family::CompleteTimesK2(k).build().unwrap();
            assert!((0..g.n()).all(|v| g.degree(v) == k), "K_{k} x K_2 must be {k}-regular");
        }
    }

    #[test]
    fn paw_and_small_families() {
        let paw = Family::Paw.build().unwrap();
        assert_eq!(paw.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (0, 3), (1, 2)]);
        assert_eq!(paw.degree_sequence(), vec![3, 2, 2, 1]);

        let k1 = generate_family("path", &[1]).unwrap();
        assert_eq!((k1.n(), k1.edge_count()), (1, 0));
        assert_eq!(generate_family("cycle", &[5]).unwrap().edge_count(), 5);
        assert_eq!(generate_family("star", &[4]).unwrap().degree(0), 4);
        assert_eq!(generate_family("complete", &[5]).unwrap().edge_count(), 10);
    }

    #[test]
    fn nonpositive_sizes_fail() {
        assert!(matches!(generate_family("path", &[0]), Err(Error::Parameter(_))));
        assert!(matches!(
            generate_family("cartesian_product", &[0]),
            Err(Error::Parameter(_))
        ));
        assert!(matches!(generate_family("cycle", &[2]), Err(Error::Parameter(_))));
        assert!(matches!(generate_family("wheel", &[4]), Err(Error::Parameter(_))));
    }

    #[test]
    fn empty_graph_is_legal() {
        let g = Graph::empty(0);
        assert_eq!(g.n(), 0);
        assert!(g.is_connected());
        assert_eq!(g.edges().count(), 0);
    }
}
