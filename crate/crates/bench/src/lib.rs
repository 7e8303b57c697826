//! Benchmarks for `sppk-core` live in `benches/`. This crate has no API.
