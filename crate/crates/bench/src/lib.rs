//! Criterion timings for the hot paths; see `benches/core_ops.rs`.
//! Run with `cargo bench -p burgess-bench`.
