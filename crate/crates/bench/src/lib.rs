//! Benchmarks for the kernelization pipelines and solvers; see `benches/`.
