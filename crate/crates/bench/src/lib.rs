//! Benchmarks only; see benches/series.rs.
