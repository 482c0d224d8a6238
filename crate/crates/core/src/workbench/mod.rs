//! Enumeration, conjecture harness and rendering.

pub mod enumerate;
pub mod harness;
pub mod render;

pub use enumerate::{canonical, enumerate, enumerate_closed_paths, Dedup, EnumerationConfig, Filters};
pub use harness::{
    evaluate, load_log, run_harness, summarize, HarnessConfig, HarnessRecord, HarnessSummary, HeightOutcome,
    KoenigOutcome,
};
pub use render::render;
