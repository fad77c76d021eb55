//! Pseudo-random bit generation by discrete chaotic iterations.
//!
//! A Boolean system of `N` cells is iterated under the vectorial negation,
//! one cell at a time, with the cell index (the *strategy*) and the number of
//! iterations between two emitted states (the *return gap*) both driven by the
//! logistic map `y -> 4y(1 - y)`. The emitted states, read component by
//! component, form the output bit stream.
//!
//! Besides the [`generator`], the crate carries the tools used to judge the
//! stream: a subset of the SP 800-22 [`battery`] with P-value uniformity
//! aggregation, correlation/spectrum/cycle [`analysis`], and a one-time-pad
//! [`cipher`] for 8-bit grayscale rasters.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod analysis;
pub mod battery;
pub mod bits;
pub mod cipher;
pub mod fft;
pub mod generator;
pub mod special;

pub use generator::{
    generate_bits, CellState, GapSet, Generator, GeneratorConfig, GeneratorError, SeedSpec,
};
