//! Criterion benchmarks for `betti-core`; see `benches/core.rs`.
