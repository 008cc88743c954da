//! Linkable Dynkin diagrams and linkable braiding matrices.

pub mod arith;
pub mod braiding;
pub mod cli;
pub mod cycles;
pub mod diagram;
pub mod existence;
pub mod families;
pub mod presentation;
pub mod realization;
