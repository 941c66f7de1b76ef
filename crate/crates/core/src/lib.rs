//! Convex permutominoes: lattice model, ECO generation, succession-rule
//! counting, exact generating-function series and a brute-force oracle.

pub mod census;
pub mod closed;
pub mod eco;
pub mod grid;
pub mod oracle;
pub mod record;
pub mod series;
pub mod verify;

pub use grid::{Class, Column, ColumnPolyomino, GridError, Label, Permutomino, Side};
