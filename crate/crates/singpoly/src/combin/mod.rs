//! Partitions, compositions, tableaux and quasistaircase indexing.

pub mod partition;
pub mod tableau;

pub use partition::{minimal_lambda, quasistaircase, rank, Composition, Family, Partition, QsParams};
pub use tableau::{Tableau, TableauKind};
