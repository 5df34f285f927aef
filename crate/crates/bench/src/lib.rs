//! Criterion benchmarks for `sgp-core`; see `benches/`.
