//! Exact computations around Young diagrams and the representations of the
//! symmetric group: Kostka numbers and their recurrences, permutation
//! characters of Young subgroups, the multiplicity linear system, and the
//! realization of induced representations and Specht modules in spaces of
//! polynomial forms.
//!
//! Everything is exact. Integers count, and rational arithmetic is
//! arbitrary precision.

pub mod brute;
pub mod characters;
pub mod error;
pub mod exactla;
pub mod forms;
pub mod limits;
pub mod linsys;
pub mod partitions;
pub mod perm;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
pub use partitions::{enumerate_partitions, Partition};
pub use tableaux::{enumerate_ssyt, enumerate_standard, kostka, Tableau, Weight};
