//! Criterion benchmarks for the cascade engine live under `benches/`.
