//! Symbolic verification of the centrally extended psl(2|2) Yangian.

pub mod drinfeld_tower;
pub mod first_realization;
pub mod free_superalgebra;
pub mod hopf_structure;
pub mod lie_core;
pub mod reduction_engine;
pub mod yangian_presentation;
