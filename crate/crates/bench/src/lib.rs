//! Criterion benchmarks for the jacring engine live in `benches/`.
