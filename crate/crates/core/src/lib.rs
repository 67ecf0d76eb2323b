//! Braid groups for computational group theory and cryptanalysis.

pub mod attacks;
pub mod braid_core;
pub mod config;
pub mod conjugacy;
pub mod error;
pub mod normal_form;
pub mod protocols;
pub mod rng;
pub mod selftest;
pub mod word_problem;

pub use error::{Error, Result};
