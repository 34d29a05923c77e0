//! Benchmarks for the `superbbw` engine live in `benches/`.
