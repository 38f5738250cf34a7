//! Criterion benchmarks for the mocposite kernels live in `benches/`.
