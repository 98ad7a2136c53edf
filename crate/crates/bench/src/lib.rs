//! Criterion benchmarks for `skolem-core`; see `benches/pipeline.rs`.
