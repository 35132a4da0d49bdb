//! Criterion benchmarks for `branchcover`; see `benches/`.
