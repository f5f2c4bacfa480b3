//! Brute-force oracles and the runner that checks the leak-equivalence
//! results instance by instance over a graph corpus.

mod oracle;
pub mod sample;
mod suite;

pub use oracle::{possible_forces_oracle, OracleMode, DEFAULT_STATE_CAP};
pub use suite::{
    check_characterization, check_failure_lemmas, check_flavor_equivalence, check_independence_patterns,
    check_possible_forces, check_splices, membership_table, pattern_library, run_theorem_suite, run_theorem_suite_with,
    ClaimNote, GraphCheck, MembershipTable, PatternNote, SuiteConfig, SuiteReport, Tally, Violation, CHARACTERIZATION,
    FAILURE_LEMMA, FLAVOR_EQUIVALENCE, FLAVOR_NUMBERS, INDEPENDENCE_BOUND, INDEPENDENCE_ONE, POSSIBLE_FORCES, SPLICE,
};
