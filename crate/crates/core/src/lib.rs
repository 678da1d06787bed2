pub mod canonical;
pub mod cli;
pub mod enumeration;
pub mod group;
pub mod json;
pub mod laws;
pub mod ops;
pub mod structures;
pub mod substructure;
pub mod transforms;
