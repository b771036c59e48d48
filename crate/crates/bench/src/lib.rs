//! Benchmark-only crate; see `benches/pipeline.rs`.

/// Parameter pairs exercised by the benchmarks, chosen to span short
/// and long continued-fraction expansions.
pub const PAIRS: &[(i64, i64)] = &[(12, 7), (30, 19), (64, 49)];

/// Pairs for the full quiver pipeline, where default search bounds
/// grow with `r`.
pub const QUIVER_PAIRS: &[(i64, i64)] = &[(5, 3), (12, 7)];
