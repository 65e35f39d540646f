//! Shared fixtures for the kernel benchmarks.

use rea_core::symmetry::Symmetry;

pub fn dj(n: usize) -> Symmetry {
    Symmetry::drinfeld_jimbo(n).expect("validated construction")
}
