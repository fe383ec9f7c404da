//! textmill — a corpus curation and analysis toolkit.
//!
//! The crate bundles the pieces of a pretraining data pipeline that are
//! useful at desk scale:
//!
//! - line-delimited document I/O and filter reports ([`doc`])
//! - language-specific code cleaning with two-level deduplication
//!   ([`code_filter`])
//! - LaTeX/math content validation ([`math_validator`])
//! - a seven-domain taxonomy with a code-density boundary rule
//!   ([`domain_classifier`])
//! - a hashed n-gram structural classifier for selecting highly
//!   structured math samples ([`scaffold`])
//! - quality-tier stratification and fixed-budget mixture planning
//!   ([`mixer`])
//! - a numerical simulator of top-k MoE routing with stochastic warmup
//!   ([`router`])
//! - expert-routing distribution comparison via Jensen–Shannon
//!   divergence ([`routing_analysis`])
//!
//! Everything is deterministic for a fixed seed; all randomness flows
//! through explicitly seeded generators.

pub mod cli;
pub mod code_filter;
pub mod doc;
pub mod domain_classifier;
pub mod error;
pub mod hash;
pub mod math_validator;
pub mod mixer;
pub mod router;
pub mod routing_analysis;
pub mod scaffold;

pub use doc::{count_tokens, parse_document_line, Decision, Document, DomainLabel, FilterReport, Provenance};
pub use error::{Error, Result};
