//! Criterion benchmarks for the wrightlab kernels; see `benches/`.
