//! Benchmarks live in `benches/`; this crate only re-exports the library
//! they measure.

pub use efl_core;
