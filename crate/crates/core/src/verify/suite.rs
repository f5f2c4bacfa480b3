use std::collections::BTreeMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::oracle::{possible_forces_oracle, OracleMode, DEFAULT_STATE_CAP};
use super::sample;
use crate::forcing::{closure_set, is_zero_forcing_set, possible_forces, splice_processes, validate_process};
use crate::format::emit_graph6;
use crate::graph::{Family, Graph};
use crate::leak::{enumerate_leak_sets_of_size, split_by_touch, LeakBudget, LeakKind, LeakPattern, LeakSet};
use crate::solver::{
    check_leaky_set, check_pattern_leaky_set, check_via_characterization, leaky_number, pattern_leaky_number,
};
use crate::vertex_set::VertexSet;

pub const FLAVOR_EQUIVALENCE: &str = "flavor_equivalence";
pub const FLAVOR_NUMBERS: &str = "flavor_numbers";
pub const CHARACTERIZATION: &str = "characterization";
pub const FAILURE_LEMMA: &str = "failure_lemma";
pub const SPLICE: &str = "splice";
pub const INDEPENDENCE_BOUND: &str = "independence_bound";
pub const INDEPENDENCE_ONE: &str = "independence_one";
pub const POSSIBLE_FORCES: &str = "possible_forces_oracle";

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub ell_max: usize,
    /// Random splices per graph.
    pub splice_samples: usize,
    /// Random `(B, L)` pairs per graph compared against the state-space oracle.
    pub oracle_samples: usize,
    pub state_cap: usize,
    pub seed: u64,
    /// Graphs above this order skip the checks that enumerate every blue set.
    pub max_exhaustive_n: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            ell_max: 2,
            splice_samples: 64,
            oracle_samples: 16,
            state_cap: DEFAULT_STATE_CAP,
            seed: 0x1ea4_f0ce,
            max_exhaustive_n: 10,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub check: String,
    pub graph6: String,
    pub set: Vec<usize>,
    pub leaks: String,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub instances: u64,
    pub violations: u64,
}

impl Tally {
    fn add(&mut self, other: Tally) {
        self.instances += other.instances;
        self.violations += other.violations;
    }
}

/// Computed pattern numbers next to the specified-leak number they are bounded by.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PatternNote {
    pub graph6: String,
    pub pattern: String,
    pub independence: usize,
    pub pattern_number: usize,
    pub specified_number: usize,
}

/// For `K_k □ K_2` in the generator labeling: whether one clique survives a
/// perfect matching of arc leaks pointing across.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimNote {
    pub graph6: String,
    pub set: VertexSet,
    pub pattern: LeakPattern,
    pub holds: bool,
    pub counterexample: Option<LeakSet>,
}

/// Outcome of one or more checks on one graph.
#[derive(Debug, Clone, Default)]
pub struct GraphCheck {
    pub tallies: BTreeMap<&'static str, Tally>,
    pub violations: Vec<Violation>,
    pub resource_errors: Vec<String>,
    pub pattern_notes: Vec<PatternNote>,
    pub claims: Vec<ClaimNote>,
}

impl GraphCheck {
    fn record(&mut self, check: &'static str, ok: bool, violation: impl FnOnce() -> Violation) {
        let t = self.tallies.entry(check).or_default();
        t.instances += 1;
        if !ok {
            t.violations += 1;
            self.violations.push(violation());
        }
    }

    pub fn merge(&mut self, other: GraphCheck) {
        for (k, t) in other.tallies {
            self.tallies.entry(k).or_default().add(t);
        }
        self.violations.extend(other.violations);
        self.resource_errors.extend(other.resource_errors);
        self.pattern_notes.extend(other.pattern_notes);
        self.claims.extend(other.claims);
    }

    pub fn tally(&self, check: &str) -> Tally {
        self.tallies.get(check).copied().unwrap_or_default()
    }

    pub fn violation_count(&self) -> u64 {
        self.tallies.values().map(|t| t.violations).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub graphs: usize,
    pub ell_max: usize,
    pub checks: BTreeMap<String, Tally>,
    pub totals: Tally,
    pub violations: Vec<Violation>,
    pub resource_errors: Vec<String>,
    pub pattern_notes: Vec<PatternNote>,
    pub claims: Vec<ClaimNote>,
    #[serde(skip)]
    pub runtime_ms: u128,
}

fn g6(g: &Graph) -> String {
    emit_graph6(g).unwrap_or_else(|_| format!("<n={}>", g.n()))
}

fn kind_index(kind: LeakKind) -> usize {
    LeakKind::ALL.iter().position(|&k| k == kind).expect("listed kind")
}

/// Membership of every blue set, per leak budget `0..=ell_max` and flavor.
#[derive(Debug, Clone)]
pub struct MembershipTable {
    n: usize,
    /// `holds[ell][kind][mask]`
    holds: Vec<[Vec<bool>; 4]>,
}

impl MembershipTable {
    pub fn holds(&self, ell: usize, kind: LeakKind, mask: u64) -> bool {
        self.holds[ell][kind_index(kind)][mask as usize]
    }

    pub fn ell_max(&self) -> usize {
        self.holds.len() - 1
    }

    pub fn masks(&self) -> std::ops::Range<u64> {
        0..1u64 << self.n
    }

    /// Smallest size of a passing set.
    pub fn number(&self, ell: usize, kind: LeakKind) -> usize {
        self.masks()
            .filter(|&m| self.holds(ell, kind, m))
            .map(|m| m.count_ones() as usize)
            .min()
            .expect("the full set always passes")
    }
}

pub fn membership_table(g: &Graph, ell_max: usize) -> MembershipTable {
    let n = g.n();
    assert!(n < 32, "membership tables enumerate all 2^n blue sets");
    let masks = 0..1u64 << n;
    let zero: Vec<bool> = masks
        .clone()
        .map(|m| is_zero_forcing_set(g, &VertexSet::from_mask(n, m)))
        .collect();
    let mut holds = vec![[zero.clone(), zero.clone(), zero.clone(), zero]];
    for ell in 1..=ell_max {
        let row = LeakKind::ALL.map(|kind| {
            masks
                .clone()
                .map(|m| {
                    // membership is monotone in ell: a failure at ell - 1 is a failure here
                    holds[ell - 1][kind_index(kind)][m as usize]
                        && check_leaky_set(g, &VertexSet::from_mask(n, m), LeakBudget::new(kind, ell)).holds
                })
                .collect()
        });
        holds.push(row);
    }
    MembershipTable { n, holds }
}

/// Per-set agreement of the four flavors, and equality of their numbers.
pub fn check_flavor_equivalence(g: &Graph, table: &MembershipTable) -> GraphCheck {
    let mut out = GraphCheck::default();
    let word = g6(g);
    for ell in 1..=table.ell_max() {
        for m in table.masks() {
            let verdicts = LeakKind::ALL.map(|k| table.holds(ell, k, m));
            let agree = verdicts.iter().all(|&v| v == verdicts[0]);
            out.record(FLAVOR_EQUIVALENCE, agree, || Violation {
                check: FLAVOR_EQUIVALENCE.into(),
                graph6: word.clone(),
                set: VertexSet::from_mask(g.n(), m).to_vec(),
                leaks: String::new(),
                detail: format!("ell={ell} vertex/edge/specified/mixed verdicts {verdicts:?}"),
            });
        }
        let numbers = LeakKind::ALL.map(|k| table.number(ell, k));
        out.record(FLAVOR_NUMBERS, numbers.iter().all(|&z| z == numbers[0]), || Violation {
            check: FLAVOR_NUMBERS.into(),
            graph6: word.clone(),
            set: Vec::new(),
            leaks: String::new(),
            detail: format!("ell={ell} numbers {numbers:?}"),
        });
    }
    out
}

/// The two-forcer characterization against brute-force vertex membership.
pub fn check_characterization(g: &Graph, table: &MembershipTable) -> GraphCheck {
    let mut out = GraphCheck::default();
    let word = g6(g);
    for ell in 1..=table.ell_max() {
        for m in table.masks() {
            let b = VertexSet::from_mask(g.n(), m);
            let via = check_via_characterization(g, &b, ell);
            let brute = table.holds(ell, LeakKind::Vertex, m);
            out.record(CHARACTERIZATION, via == brute, || Violation {
                check: CHARACTERIZATION.into(),
                graph6: word.clone(),
                set: b.to_vec(),
                leaks: String::new(),
                detail: format!("ell={ell} characterization={via} brute_force={brute}"),
            });
        }
    }
    out
}

/// For every (ℓ-1)-leaky set and every leak set of size k in {ℓ, ℓ+1} of the
/// same flavor, at most k - ℓ leaks stay untouched by the stalled closure.
pub fn check_failure_lemmas(g: &Graph, table: &MembershipTable) -> GraphCheck {
    let mut out = GraphCheck::default();
    let word = g6(g);
    let n = g.n();
    for ell in 1..=table.ell_max() {
        for kind in LeakKind::ALL {
            let sets: Vec<VertexSet> = table
                .masks()
                .filter(|&m| table.holds(ell - 1, kind, m))
                .map(|m| VertexSet::from_mask(n, m))
                .collect();
            for k in [ell, ell + 1] {
                for leaks in enumerate_leak_sets_of_size(g, kind, k) {
                    let forbidden = leaks.forbidden(g);
                    for b in &sets {
                        let reached = closure_set(g, b, &forbidden);
                        let (untouched, _) = split_by_touch(&leaks, &reached);
                        out.record(FAILURE_LEMMA, untouched.len() + ell <= k, || Violation {
                            check: FAILURE_LEMMA.into(),
                            graph6: word.clone(),
                            set: b.to_vec(),
                            leaks: leaks.to_string(),
                            detail: format!("{kind} ell={ell} k={k}: {} untouched", untouched.len()),
                        });
                    }
                }
            }
        }
    }
    out
}

/// Random process switching: following one process up to an obtained set and
/// finishing with another must give a process that still colors the graph.
pub fn check_splices<R: Rng>(g: &Graph, samples: usize, rng: &mut R) -> GraphCheck {
    let mut out = GraphCheck::default();
    let n = g.n();
    let word = g6(g);
    let none = LeakSet::empty();
    for _ in 0..samples {
        // a random superset of a random set tends to be zero forcing
        let mut b = sample::random_subset(rng, n);
        while !is_zero_forcing_set(g, &b) {
            let white: Vec<usize> = b.complement().iter().collect();
            b.insert(white[rng.gen_range(0..white.len())]);
        }
        let f = sample::random_process(rng, g, &b);
        let f_prime = sample::random_process(rng, g, &b);
        let b_prime = sample::random_obtained(rng, g, &b, &f);
        let outcome = splice_processes(g, &b, &f, &f_prime, &b_prime).and_then(|s| {
            let colors_all = b.union(&s.heads(n)).is_full();
            Ok(validate_process(g, &b, &none, &s)? && colors_all)
        });
        out.record(SPLICE, matches!(outcome, Ok(true)), || Violation {
            check: SPLICE.into(),
            graph6: word.clone(),
            set: b.to_vec(),
            leaks: String::new(),
            detail: format!(
                "F=[{}] F'=[{}] B'={} -> {outcome:?}",
                f.forces().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","),
                f_prime
                    .forces()
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
                b_prime
            ),
        });
    }
    out
}

/// Leak shapes exercised by the independence checks.
pub fn pattern_library() -> Vec<(&'static str, LeakPattern)> {
    vec![
        ("single_arc", LeakPattern::single_arc()),
        ("disjoint_arcs_2", LeakPattern::disjoint_arcs(2)),
        ("disjoint_arcs_3", LeakPattern::disjoint_arcs(3)),
        ("in_star_2", LeakPattern::in_star(2)),
        ("out_star_2", LeakPattern::out_star(2)),
        ("directed_path_2", LeakPattern::directed_path(2)),
        ("two_cycle", LeakPattern::two_cycle()),
    ]
}

/// Pattern numbers are bounded by the specified number at the pattern's
/// independence number; at independence one, membership coincides per set.
pub fn check_independence_patterns(g: &Graph, table: Option<&MembershipTable>) -> GraphCheck {
    let mut out = GraphCheck::default();
    let word = g6(g);
    let n = g.n();
    let mut specified: BTreeMap<usize, usize> = BTreeMap::new();
    for (name, pattern) in pattern_library() {
        if pattern.nodes().len() > n {
            continue;
        }
        let independence = pattern.independence_number();
        let zp = pattern_leaky_number(g, &pattern).value;
        let zs = *specified
            .entry(independence)
            .or_insert_with(|| leaky_number(g, LeakBudget::new(LeakKind::Specified, independence)).value);
        out.record(INDEPENDENCE_BOUND, zp <= zs, || Violation {
            check: INDEPENDENCE_BOUND.into(),
            graph6: word.clone(),
            set: Vec::new(),
            leaks: pattern.to_string(),
            detail: format!("{name}: pattern number {zp} > specified number {zs} at I={independence}"),
        });
        out.pattern_notes.push(PatternNote {
            graph6: word.clone(),
            pattern: name.into(),
            independence,
            pattern_number: zp,
            specified_number: zs,
        });

        if independence == 1 {
            if let Some(table) = table.filter(|t| t.ell_max() >= 1) {
                for m in table.masks() {
                    let b = VertexSet::from_mask(n, m);
                    let by_pattern = check_pattern_leaky_set(g, &b, &pattern).holds;
                    let by_budget = table.holds(1, LeakKind::Specified, m);
                    out.record(INDEPENDENCE_ONE, by_pattern == by_budget, || Violation {
                        check: INDEPENDENCE_ONE.into(),
                        graph6: word.clone(),
                        set: b.to_vec(),
                        leaks: pattern.to_string(),
                        detail: format!("{name}: pattern={by_pattern} specified_1={by_budget}"),
                    });
                }
            }
        }
    }

    if n >= 2 && n.is_multiple_of(2) {
        let k = n / 2;
        if Family::CompleteTimesK2(k).build().is_ok_and(|h| &h == g) {
            let set = VertexSet::from_vertices(n, 0..k);
            let pattern = LeakPattern::disjoint_arcs(k);
            let v = check_pattern_leaky_set(g, &set, &pattern);
            out.claims.push(ClaimNote {
                graph6: word,
                set,
                pattern,
                holds: v.holds,
                counterexample: v.counterexample.map(|c| c.leaks),
            });
        }
    }
    out
}

/// Blocked-closure possible forces against the state-space oracle.
///
/// The reachable-states oracle must match everywhere. The completing oracle
/// must match when the closure colors the whole graph and be empty otherwise.
pub fn check_possible_forces<I>(g: &Graph, instances: I, state_cap: usize) -> GraphCheck
where
    I: IntoIterator<Item = (VertexSet, LeakSet)>,
{
    let mut out = GraphCheck::default();
    let word = g6(g);
    for (b, leaks) in instances {
        let fast = possible_forces(g, &b, &leaks);
        let complete = closure_set(g, &b, &leaks.forbidden(g)).is_full();
        let oracles = possible_forces_oracle(g, &b, &leaks, OracleMode::Reachable, state_cap).and_then(|reach| {
            possible_forces_oracle(g, &b, &leaks, OracleMode::Completing, state_cap).map(|done| (reach, done))
        });
        let (reach, done) = match oracles {
            Ok(pair) => pair,
            Err(e) => {
                out.resource_errors.push(format!("{word} B={b} L={leaks}: {e}"));
                continue;
            }
        };
        let ok = reach == fast && if complete { done == fast } else { done.is_empty() };
        out.record(POSSIBLE_FORCES, ok, || Violation {
            check: POSSIBLE_FORCES.into(),
            graph6: word.clone(),
            set: b.to_vec(),
            leaks: leaks.to_string(),
            detail: format!("blocked={fast:?} reachable={reach:?} completing={done:?}"),
        });
    }
    out
}

fn check_graph(g: &Graph, index: usize, config: &SuiteConfig) -> GraphCheck {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ (index as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let mut out = GraphCheck::default();
    let exhaustive = g.n() <= config.max_exhaustive_n;
    let table = exhaustive.then(|| membership_table(g, config.ell_max));
    if let Some(table) = &table {
        out.merge(check_flavor_equivalence(g, table));
        out.merge(check_characterization(g, table));
        out.merge(check_failure_lemmas(g, table));
        out.merge(check_independence_patterns(g, Some(table)));
    } else {
        out.resource_errors.push(format!(
            "{}: n={} above exhaustive limit {}",
            g6(g),
            g.n(),
            config.max_exhaustive_n
        ));
    }
    out.merge(check_splices(g, config.splice_samples, &mut rng));
    let instances: Vec<(VertexSet, LeakSet)> = (0..config.oracle_samples)
        .map(|_| {
            let b = sample::random_subset(&mut rng, g.n());
            let l = sample::random_leaks(&mut rng, g, LeakKind::Mixed, 2);
            (b, l)
        })
        .collect();
    out.merge(check_possible_forces(g, instances, config.state_cap));
    out
}

/// Runs every check on every graph with default sampling.
pub fn run_theorem_suite(corpus: &[Graph], ell_max: usize) -> SuiteReport {
    run_theorem_suite_with(
        corpus,
        &SuiteConfig {
            ell_max,
            ..SuiteConfig::default()
        },
    )
}

pub fn run_theorem_suite_with(corpus: &[Graph], config: &SuiteConfig) -> SuiteReport {
    let start = Instant::now();
    let per_graph: Vec<GraphCheck> = corpus
        .par_iter()
        .enumerate()
        .map(|(i, g)| check_graph(g, i, config))
        .collect();
    let mut all = GraphCheck::default();
    for c in per_graph {
        all.merge(c);
    }
    all.violations.sort();
    let checks: BTreeMap<String, Tally> = all.tallies.iter().map(|(k, t)| (k.to_string(), *t)).collect();
    let mut totals = Tally::default();
    for t in checks.values() {
        totals.add(*t);
    }
    SuiteReport {
        graphs: corpus.len(),
        ell_max: config.ell_max,
        checks,
        totals,
        violations: all.violations,
        resource_errors: all.resource_errors,
        pattern_notes: all.pattern_notes,
        claims: all.claims,
        runtime_ms: start.elapsed().as_millis(),
    }
}
