//! Criterion benchmarks for `cayaut`; see `benches/`.
