//! Multi-stage, language-specific code cleaning: structural filters,
//! syntax validation, signal density, and two-level deduplication
//! (normalized-fingerprint exact, SimHash near).

mod checks;
mod dedup;
mod pipeline;
mod rules;
mod scan;

pub use checks::{
    bad_pattern_check, check_syntax, check_syntax_hooked, file_length_filter, format_check,
    long_line_filter, signal_density, signal_density_verdict, Verdict,
};
pub use dedup::{
    fingerprint_normalized, hamming_distance, normalize_for_dedup, simhash64, DedupIndex,
};
pub use pipeline::{
    run_code_pipeline, run_code_pipeline_hooked, unknown_language_report, SyntaxHook,
    DENSITY_THRESHOLD, RULE_ORDER,
};
pub use rules::{builtin_rules, load_rules, parse_rules, rules_to_toml, LanguageRuleSet};
pub use scan::strip_comments;
