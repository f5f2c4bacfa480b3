//! Leaks: vertices, edges and arcs that may not carry a force.
//!
//! A vertex leak `v` disables every force `v -> u`, an edge leak `uv` disables
//! `u -> v` and `v -> u`, and an arc leak `u -> v` disables only that force.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::forcing::Force;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A set of arc leaks.
pub type ArcSet = BTreeSet<Force>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Leak {
    Vertex(usize),
    /// Stored with the smaller endpoint first.
    Edge(usize, usize),
    Arc(Force),
}

impl Leak {
    pub fn edge(u: usize, v: usize) -> Self {
        Leak::Edge(u.min(v), u.max(v))
    }

    pub fn arc(tail: usize, head: usize) -> Self {
        Leak::Arc(Force::new(tail, head))
    }

    #[inline]
    pub fn disables(&self, f: Force) -> bool {
        match *self {
            Leak::Vertex(v) => f.tail == v,
            Leak::Edge(u, v) => (f.tail == u && f.head == v) || (f.tail == v && f.head == u),
            Leak::Arc(a) => a == f,
        }
    }

    /// Whether the leak counts as touched by `s`: a vertex leak inside `s`,
    /// an edge leak with an endpoint in `s`, or an arc whose tail is in `s`.
    pub fn touched_by(&self, s: &VertexSet) -> bool {
        match *self {
            Leak::Vertex(v) => s.contains(v),
            Leak::Edge(u, v) => s.contains(u) || s.contains(v),
            Leak::Arc(a) => s.contains(a.tail),
        }
    }

    fn check_against(&self, g: &Graph) -> Result<()> {
        let n = g.n();
        let in_range = |v: usize| {
            if v < n {
                Ok(())
            } else {
                Err(Error::VertexRange { vertex: v, n })
            }
        };
        match *self {
            Leak::Vertex(v) => in_range(v),
            Leak::Edge(u, v) | Leak::Arc(Force { tail: u, head: v }) => {
                in_range(u)?;
                in_range(v)?;
                if g.has_edge(u, v) {
                    Ok(())
                } else {
                    Err(Error::NotAdjacent(u, v))
                }
            }
        }
    }
}

impl fmt::Display for Leak {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Leak::Vertex(v) => write!(f, "v:{v}"),
            Leak::Edge(u, v) => write!(f, "e:{u}-{v}"),
            Leak::Arc(a) => write!(f, "a:{}>{}", a.tail, a.head),
        }
    }
}

impl Serialize for Leak {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A duplicate-free, sorted collection of leaks.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LeakSet(Vec<Leak>);

impl LeakSet {
    pub fn new<I: IntoIterator<Item = Leak>>(leaks: I) -> Self {
        let mut v: Vec<Leak> = leaks.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self(v)
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_arcs<I: IntoIterator<Item = Force>>(arcs: I) -> Self {
        Self::new(arcs.into_iter().map(Leak::Arc))
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        Self::new(vertices.into_iter().map(Leak::Vertex))
    }

    /// Wraps a vector that is already strictly increasing.
    fn from_sorted(v: Vec<Leak>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        Self(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Leak> {
        self.0.iter()
    }

    pub fn contains(&self, leak: &Leak) -> bool {
        self.0.binary_search(leak).is_ok()
    }

    pub fn union(&self, other: &LeakSet) -> LeakSet {
        LeakSet::new(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn disables(&self, f: Force) -> bool {
        self.0.iter().any(|l| l.disables(f))
    }

    pub fn vertex_leaks(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().filter_map(|l| match l {
            Leak::Vertex(v) => Some(*v),
            _ => None,
        })
    }

    pub fn edge_leaks(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().filter_map(|l| match l {
            Leak::Edge(u, v) => Some((*u, *v)),
            _ => None,
        })
    }

    pub fn arcs(&self) -> ArcSet {
        self.0
            .iter()
            .filter_map(|l| match l {
                Leak::Arc(a) => Some(*a),
                _ => None,
            })
            .collect()
    }

    pub fn is_arcs_only(&self) -> bool {
        self.0.iter().all(|l| matches!(l, Leak::Arc(_)))
    }

    /// Checks vertex ranges and that edge and arc leaks sit on edges of `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        self.0.iter().try_for_each(|l| l.check_against(g))
    }

    /// Parses the leak grammar and validates the result against `g`.
    pub fn parse_for(text: &str, g: &Graph) -> Result<Self> {
        let set = parse_leak_string(text)?;
        set.validate(g)?;
        Ok(set)
    }

    /// Per-tail sets of forbidden heads, for fast rule application on `g`.
    pub fn forbidden(&self, g: &Graph) -> Forbidden {
        let mut f = Forbidden::none(g.n());
        for leak in &self.0 {
            match *leak {
                Leak::Vertex(v) => f.block_tail(v, g),
                Leak::Edge(u, v) => {
                    f.block(u, v);
                    f.block(v, u);
                }
                Leak::Arc(a) => f.block(a.tail, a.head),
            }
        }
        f
    }
}

impl fmt::Display for LeakSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().join(","))
    }
}

impl FromStr for LeakSet {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_leak_string(s)
    }
}

impl Serialize for LeakSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.0.iter())
    }
}

impl FromIterator<Leak> for LeakSet {
    fn from_iter<I: IntoIterator<Item = Leak>>(iter: I) -> Self {
        Self::new(iter)
    }
}

/// Compiled form of a leak set: for each tail, the heads it may not force.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Forbidden {
    heads: Vec<VertexSet>,
}

impl Forbidden {
    pub fn none(n: usize) -> Self {
        Self {
            heads: vec![VertexSet::empty(n); n],
        }
    }

    pub fn block(&mut self, tail: usize, head: usize) {
        self.heads[tail].insert(head);
    }

    fn block_tail(&mut self, tail: usize, g: &Graph) {
        self.heads[tail].union_with(g.neighbors(tail));
    }

    /// Forbids every force into `head`.
    pub fn block_head(&mut self, head: usize, g: &Graph) {
        for w in g.neighbors(head).iter() {
            self.heads[w].insert(head);
        }
    }

    #[inline]
    pub fn forbids(&self, f: Force) -> bool {
        self.heads[f.tail].contains(f.head)
    }
}

pub fn parse_leak_string(text: &str) -> Result<LeakSet> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(LeakSet::empty());
    }
    let mut leaks = Vec::new();
    let mut column = 1;
    for item in text.split(',') {
        leaks.push(parse_leak_item(item, column)?);
        column += item.len() + 1;
    }
    Ok(LeakSet::new(leaks))
}

fn parse_leak_item(item: &str, column: usize) -> Result<Leak> {
    let syntax = |offset: usize, reason: String| Error::LeakSyntax {
        column: column + offset,
        reason,
    };
    let id = |s: &str, offset: usize| {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(syntax(offset, format!("expected vertex id, found {s:?}")));
        }
        s.parse::<usize>()
            .map_err(|e| syntax(offset, format!("bad vertex id {s:?}: {e}")))
    };
    let pair = |body: &str, sep: char| {
        let Some((a, b)) = body.split_once(sep) else {
            return Err(syntax(2, format!("expected `<u>{sep}<v>`")));
        };
        let u = id(a, 2)?;
        let v = id(b, 3 + a.len())?;
        if u == v {
            return Err(syntax(
                2,
                format!("self-{} on {u}", if sep == '>' { "arc" } else { "edge" }),
            ));
        }
        Ok((u, v))
    };
    match item.split_once(':') {
        Some(("v", body)) => Ok(Leak::Vertex(id(body, 2)?)),
        Some(("e", body)) => pair(body, '-').map(|(u, v)| Leak::edge(u, v)),
        Some(("a", body)) => pair(body, '>').map(|(u, v)| Leak::arc(u, v)),
        _ => Err(syntax(0, format!("expected `v:`, `e:` or `a:` item, found {item:?}"))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LeakKind {
    Vertex,
    Edge,
    Specified,
    Mixed,
}

impl LeakKind {
    pub const ALL: [LeakKind; 4] = [LeakKind::Vertex, LeakKind::Edge, LeakKind::Specified, LeakKind::Mixed];

    /// Every leak of this kind that can matter on `g`, sorted.
    pub fn universe(self, g: &Graph) -> Vec<Leak> {
        let vertices = || (0..g.n()).map(Leak::Vertex);
        let edges = || g.edges().map(|(u, v)| Leak::Edge(u, v));
        let arcs = || g.edges().flat_map(|(u, v)| [Leak::arc(u, v), Leak::arc(v, u)]).sorted();
        match self {
            LeakKind::Vertex => vertices().collect(),
            LeakKind::Edge => edges().collect(),
            LeakKind::Specified => arcs().collect(),
            LeakKind::Mixed => vertices().chain(edges()).chain(arcs()).collect(),
        }
    }
}

impl fmt::Display for LeakKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LeakKind::Vertex => "vertex",
            LeakKind::Edge => "edge",
            LeakKind::Specified => "specified",
            LeakKind::Mixed => "mixed",
        })
    }
}

impl FromStr for LeakKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "vertex" => Ok(LeakKind::Vertex),
            "edge" => Ok(LeakKind::Edge),
            "specified" => Ok(LeakKind::Specified),
            "mixed" => Ok(LeakKind::Mixed),
            _ => Err(Error::Parameter(format!("unknown leak kind {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct LeakBudget {
    pub kind: LeakKind,
    pub ell: usize,
}

impl LeakBudget {
    pub fn new(kind: LeakKind, ell: usize) -> Self {
        Self { kind, ell }
    }
}

/// Every leak set of the budget's kind with at most `ell` members.
///
/// Sets come out by size, then lexicographically over the sorted universe.
pub fn enumerate_leak_sets(g: &Graph, budget: LeakBudget) -> impl Iterator<Item = LeakSet> {
    let universe = budget.kind.universe(g);
    let max = budget.ell.min(universe.len());
    (0..=max).flat_map(move |k| leak_sets_of_size(universe.clone(), k))
}

/// Every leak set of `kind` with exactly `k` members, lexicographically.
pub fn enumerate_leak_sets_of_size(g: &Graph, kind: LeakKind, k: usize) -> impl Iterator<Item = LeakSet> {
    leak_sets_of_size(kind.universe(g), k)
}

fn leak_sets_of_size(universe: Vec<Leak>, k: usize) -> impl Iterator<Item = LeakSet> {
    universe.into_iter().combinations(k).map(LeakSet::from_sorted)
}

/// Splits `l` into the leaks untouched by `s` and those touched by it.
pub fn split_by_touch(l: &LeakSet, s: &VertexSet) -> (LeakSet, LeakSet) {
    let (touched, untouched): (Vec<Leak>, Vec<Leak>) = l.iter().partition(|leak| leak.touched_by(s));
    (LeakSet::from_sorted(untouched), LeakSet::from_sorted(touched))
}

/// Tails and heads of an arc-only leak set.
pub fn tails_heads(l: &LeakSet) -> Result<(BTreeSet<usize>, BTreeSet<usize>)> {
    if let Some(bad) = l.iter().find(|leak| !matches!(leak, Leak::Arc(_))) {
        return Err(Error::Contract(format!("tails/heads need arcs only, found {bad}")));
    }
    Ok(arc_tails_heads(&l.arcs()))
}

pub fn arc_tails_heads(arcs: &ArcSet) -> (BTreeSet<usize>, BTreeSet<usize>) {
    (
        arcs.iter().map(|a| a.tail).collect(),
        arcs.iter().map(|a| a.head).collect(),
    )
}

/// Distinct tails, and no head is also a tail.
pub fn is_independent(arcs: &ArcSet) -> bool {
    let (tails, heads) = arc_tails_heads(arcs);
    tails.len() == arcs.len() && tails.is_disjoint(&heads)
}

/// Size of the largest independent subset of `arcs`.
pub fn independence_number(arcs: &ArcSet) -> usize {
    let arcs: Vec<Force> = arcs.iter().copied().collect();
    let mut best = 0;
    let mut tails = BTreeSet::new();
    let mut heads = BTreeSet::new();
    grow_independent(&arcs, 0, &mut tails, &mut heads, &mut best);
    best
}

fn grow_independent(
    arcs: &[Force],
    next: usize,
    tails: &mut BTreeSet<usize>,
    heads: &mut BTreeSet<usize>,
    best: &mut usize,
) {
    *best = (*best).max(tails.len());
    if tails.len() + (arcs.len() - next) <= *best {
        return;
    }
    for i in next..arcs.len() {
        let a = arcs[i];
        if tails.contains(&a.tail) || heads.contains(&a.tail) || tails.contains(&a.head) {
            continue;
        }
        tails.insert(a.tail);
        let fresh_head = heads.insert(a.head);
        grow_independent(arcs, i + 1, tails, heads, best);
        tails.remove(&a.tail);
        if fresh_head {
            heads.remove(&a.head);
        }
    }
}

/// A leak shape: a digraph on abstract node labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LeakPattern {
    arcs: BTreeSet<(usize, usize)>,
}

impl LeakPattern {
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(arcs: I) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in arcs {
            if a == b {
                return Err(Error::Parameter(format!("pattern self-arc on node {a}")));
            }
            set.insert((a, b));
        }
        Ok(Self { arcs: set })
    }

    /// Parses an arc list in leak grammar, e.g. `a:0>1,a:2>1`.
    pub fn parse(text: &str) -> Result<Self> {
        let set = parse_leak_string(text)?;
        if !set.is_arcs_only() {
            return Err(Error::Parameter("patterns may only contain `a:` items".into()));
        }
        Self::new(set.arcs().into_iter().map(|a| (a.tail, a.head)))
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arcs.iter().copied()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn nodes(&self) -> BTreeSet<usize> {
        self.arcs.iter().flat_map(|&(a, b)| [a, b]).collect()
    }

    pub fn as_arc_set(&self) -> ArcSet {
        self.arcs.iter().map(|&(a, b)| Force::new(a, b)).collect()
    }

    pub fn independence_number(&self) -> usize {
        independence_number(&self.as_arc_set())
    }

    pub fn single_arc() -> Self {
        Self::new([(0, 1)]).unwrap()
    }

    /// `k` vertex-disjoint arcs `2i -> 2i+1`.
    pub fn disjoint_arcs(k: usize) -> Self {
        Self::new((0..k).map(|i| (2 * i, 2 * i + 1))).unwrap()
    }

    /// `k` arcs `i -> k` sharing the head `k`.
    pub fn in_star(k: usize) -> Self {
        Self::new((0..k).map(|i| (i, k))).unwrap()
    }

    /// `k` arcs `0 -> i` sharing the tail 0.
    pub fn out_star(k: usize) -> Self {
        Self::new((1..=k).map(|i| (0, i))).unwrap()
    }

    /// Directed path `0 -> 1 -> ... -> k`.
    pub fn directed_path(k: usize) -> Self {
        Self::new((0..k).map(|i| (i, i + 1))).unwrap()
    }

    pub fn two_cycle() -> Self {
        Self::new([(0, 1), (1, 0)]).unwrap()
    }
}

impl fmt::Display for LeakPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.arcs.iter().map(|(a, b)| format!("a:{a}>{b}")).join(","))
    }
}

impl Serialize for LeakPattern {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.arcs.iter().map(|(a, b)| format!("a:{a}>{b}")))
    }
}

/// Every placement of every sub-pattern of `pattern` onto `g` under an
/// injective node map, keeping only placements whose arcs all land on edges.
///
/// Output is duplicate-free, ordered by size (largest first) and then
/// lexicographically; the empty placement comes last.
pub fn enumerate_placements(g: &Graph, pattern: &LeakPattern) -> Vec<ArcSet> {
    let arcs: Vec<(usize, usize)> = pattern.arcs().collect();
    assert!(arcs.len() < 32, "pattern too large for subset enumeration");
    let mut found: BTreeSet<Vec<Force>> = BTreeSet::new();
    found.insert(Vec::new());
    for mask in 1u32..(1u32 << arcs.len()) {
        let sub: Vec<(usize, usize)> = (0..arcs.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| arcs[i])
            .collect();
        let nodes: Vec<usize> = sub
            .iter()
            .flat_map(|&(a, b)| [a, b])
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        if nodes.len() > g.n() {
            continue;
        }
        let mut image = vec![usize::MAX; nodes.len()];
        let mut used = VertexSet::empty(g.n());
        place_nodes(g, &sub, &nodes, 0, &mut image, &mut used, &mut found);
    }
    let mut out: Vec<ArcSet> = found.into_iter().map(|v| v.into_iter().collect()).collect();
    out.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    out
}

fn place_nodes(
    g: &Graph,
    sub: &[(usize, usize)],
    nodes: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut VertexSet,
    found: &mut BTreeSet<Vec<Force>>,
) {
    let slot = |label: usize| nodes.binary_search(&label).expect("label in node list");
    if depth == nodes.len() {
        let mut placed: Vec<Force> = sub
            .iter()
            .map(|&(a, b)| Force::new(image[slot(a)], image[slot(b)]))
            .collect();
        placed.sort_unstable();
        found.insert(placed);
        return;
    }
    for v in 0..g.n() {
        if used.contains(v) {
            continue;
        }
        image[depth] = v;
        // every arc whose endpoints are now both placed must land on an edge
        let fits = sub.iter().all(|&(a, b)| {
            let (sa, sb) = (slot(a), slot(b));
            sa > depth || sb > depth || (sa != depth && sb != depth) || g.has_edge(image[sa], image[sb])
        });
        if fits {
            used.insert(v);
            place_nodes(g, sub, nodes, depth + 1, image, used, found);
            used.remove(v);
        }
    }
    image[depth] = usize::MAX;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn arcs(list: &[(usize, usize)]) -> ArcSet {
        list.iter().map(|&(t, h)| Force::new(t, h)).collect()
    }

    #[test]
    fn disables_by_kind() {
        let f01 = Force::new(0, 1);
        let f10 = Force::new(1, 0);
        assert!(LeakSet::new([Leak::Vertex(0)]).disables(f01));
        assert!(!LeakSet::new([Leak::Vertex(0)]).disables(f10));
        assert!(LeakSet::new([Leak::edge(1, 0)]).disables(f10));
        assert!(LeakSet::new([Leak::edge(0, 1)]).disables(f01));
        assert!(!LeakSet::new([Leak::arc(0, 1)]).disables(f10));
        assert!(LeakSet::new([Leak::arc(0, 1)]).disables(f01));
        assert!(!LeakSet::empty().disables(f01));
    }

    #[test]
    fn forbidden_matches_disables() {
        let g = Family::CompleteTimesK2(3).build().unwrap();
        let l = LeakSet::new([Leak::Vertex(0), Leak::edge(4, 5), Leak::arc(2, 5)]);
        let fb = l.forbidden(&g);
        for (u, v) in g.edges() {
            for f in [Force::new(u, v), Force::new(v, u)] {
                assert_eq!(fb.forbids(f), l.disables(f), "{f}");
            }
        }
    }

    #[test]
    fn enumeration_examples() {
        let p3 = Family::Path(3).build().unwrap();
        let sets: Vec<String> = enumerate_leak_sets(&p3, LeakBudget::new(LeakKind::Vertex, 1))
            .map(|s| s.to_string())
            .collect();
        assert_eq!(sets, vec!["", "v:0", "v:1", "v:2"]);

        let sets: Vec<String> = enumerate_leak_sets(&p3, LeakBudget::new(LeakKind::Specified, 1))
            .map(|s| s.to_string())
            .collect();
        assert_eq!(sets, vec!["", "a:0>1", "a:1>0", "a:1>2", "a:2>1"]);

        let k3 = Family::Complete(3).build().unwrap();
        assert_eq!(
            enumerate_leak_sets(&k3, LeakBudget::new(LeakKind::Mixed, 1)).count(),
            13
        );
        // budget beyond the universe stops at the full universe
        assert_eq!(enumerate_leak_sets(&p3, LeakBudget::new(LeakKind::Edge, 9)).count(), 4);
    }

    #[test]
    fn split_examples() {
        let s0 = VertexSet::from_vertices(3, [0]);
        let (u, t) = split_by_touch(&LeakSet::new([Leak::edge(0, 1)]), &s0);
        assert!(u.is_empty());
        assert_eq!(t.to_string(), "e:0-1");

        let (u, t) = split_by_touch(&LeakSet::new([Leak::arc(0, 1)]), &VertexSet::from_vertices(3, [1]));
        assert_eq!(u.to_string(), "a:0>1");
        assert!(t.is_empty());

        let (u, t) = split_by_touch(&LeakSet::new([Leak::Vertex(2)]), &VertexSet::from_vertices(3, [0, 1]));
        assert_eq!(u.to_string(), "v:2");
        assert!(t.is_empty());
    }

    #[test]
    fn tails_heads_examples() {
        let (t, h) = tails_heads(&LeakSet::from_arcs(arcs(&[(0, 1), (2, 1)]))).unwrap();
        assert_eq!(
            (t.into_iter().collect::<Vec<_>>(), h.into_iter().collect::<Vec<_>>()),
            (vec![0, 2], vec![1])
        );
        let (t, h) = tails_heads(&LeakSet::empty()).unwrap();
        assert!(t.is_empty() && h.is_empty());
        let (t, h) = tails_heads(&LeakSet::from_arcs(arcs(&[(0, 1), (1, 2)]))).unwrap();
        assert_eq!((t.len(), h.len()), (2, 2));
        assert!(matches!(
            tails_heads(&LeakSet::new([Leak::Vertex(0)])),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn independence_examples() {
        assert!(is_independent(&arcs(&[(0, 3), (1, 4), (2, 5)])));
        assert!(is_independent(&arcs(&[(0, 2), (1, 2)])));
        assert!(!is_independent(&arcs(&[(0, 1), (1, 2)])));
        assert_eq!(independence_number(&arcs(&[(0, 3), (1, 4), (2, 5)])), 3);
        assert_eq!(independence_number(&arcs(&[(0, 2), (1, 2)])), 2);
        assert_eq!(independence_number(&ArcSet::new()), 0);
        assert_eq!(LeakPattern::two_cycle().independence_number(), 1);
        assert_eq!(LeakPattern::out_star(3).independence_number(), 1);
        assert_eq!(LeakPattern::directed_path(2).independence_number(), 1);
        assert_eq!(LeakPattern::directed_path(3).independence_number(), 2);
    }

    #[test]
    fn leak_grammar() {
        let l = parse_leak_string("v:3,e:1-2,a:4>5").unwrap();
        assert_eq!(l, LeakSet::new([Leak::Vertex(3), Leak::edge(1, 2), Leak::arc(4, 5)]));
        assert_eq!(l.to_string(), "v:3,e:1-2,a:4>5");
        assert_eq!(parse_leak_string("e:2-1").unwrap().to_string(), "e:1-2");
        assert!(parse_leak_string("").unwrap().is_empty());
        assert!(matches!(
            parse_leak_string("a:0>0"),
            Err(Error::LeakSyntax { column: 3, .. })
        ));
        assert!(matches!(
            parse_leak_string("v:1,x:2"),
            Err(Error::LeakSyntax { column: 5, .. })
        ));
        assert!(matches!(
            parse_leak_string("v:1,e:2"),
            Err(Error::LeakSyntax { column: 7, .. })
        ));
        assert!(matches!(
            parse_leak_string("a:1>z"),
            Err(Error::LeakSyntax { column: 5, .. })
        ));
        assert!(matches!(
            parse_leak_string("v:1,"),
            Err(Error::LeakSyntax { column: 5, .. })
        ));
    }

    #[test]
    fn leak_validation() {
        let p3 = Family::Path(3).build().unwrap();
        assert!(LeakSet::parse_for("v:2,e:0-1,a:2>1", &p3).is_ok());
        assert_eq!(LeakSet::parse_for("e:0-2", &p3), Err(Error::NotAdjacent(0, 2)));
        assert_eq!(
            LeakSet::parse_for("v:3", &p3),
            Err(Error::VertexRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn placement_examples() {
        let p3 = Family::Path(3).build().unwrap();
        let single = enumerate_placements(&p3, &LeakPattern::single_arc());
        assert_eq!(
            single,
            vec![
                arcs(&[(0, 1)]),
                arcs(&[(1, 0)]),
                arcs(&[(1, 2)]),
                arcs(&[(2, 1)]),
                ArcSet::new()
            ]
        );
        // P3 has no two vertex-disjoint edges
        let two = enumerate_placements(&p3, &LeakPattern::disjoint_arcs(2));
        assert_eq!(two, single);

        let g = Family::CompleteTimesK2(3).build().unwrap();
        let l1 = enumerate_placements(&g, &LeakPattern::disjoint_arcs(3));
        assert!(l1.contains(&arcs(&[(0, 3), (1, 4), (2, 5)])));
        assert!(l1.iter().all(|p| p.iter().all(|a| g.has_edge(a.tail, a.head))));
    }

    #[test]
    fn pattern_parsing() {
        let p = LeakPattern::parse("a:0>2,a:1>2").unwrap();
        assert_eq!(p, LeakPattern::in_star(2));
        assert!(LeakPattern::parse("v:1").is_err());
        assert_eq!(p.to_string(), "a:0>2,a:1>2");
    }
}
