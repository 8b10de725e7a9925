//! Theorem checkers, small-graph enumeration and the exhaustive suite.

mod checks;
mod enumerate;
mod report;
mod suite;

pub use checks::{
    check_bounds, check_deletion_lemmas, check_deletion_lemmas_with, check_interlacing,
    EqualityFlags, InterlacingCheck, LemmaFailure, LemmaReport, LemmaSelection, TheoremReport,
    TheoremStatuses,
};
pub use enumerate::{
    canonical_code, enumerate_codes, enumerate_underlying_graphs, graph_from_code,
    signature_representatives, GraphCode, SignatureRepresentatives, ENUMERATION_CAP,
};
pub use report::{parse_sg_token, report_record, report_table, sg_token, summary_records, summary_table};
pub use suite::{
    run_suite, CrossTab, EqualityCensus, OrderStats, SuiteOptions, SuiteSummary, Violation,
    DEFAULT_MAX_N,
};
