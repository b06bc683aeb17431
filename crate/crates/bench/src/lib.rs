//! Criterion benchmarks for `wittflag-core`; see `benches/`.
