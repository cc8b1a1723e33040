//! Frieze patterns, cluster mutation and the type A cluster category.

pub mod laurent;
pub mod quiver;
pub mod seed;
pub mod exchange;
pub mod polygon;
pub mod frieze;
pub mod arquiver;
