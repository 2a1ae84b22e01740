#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod admissibility;
pub mod catalog;
pub mod oracle;
pub mod quotients;
pub mod search;
pub mod series;

pub use num_complex::Complex64;
