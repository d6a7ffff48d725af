//! Permutation-group machinery for deciding when almost conjugate subgroups
//! are conjugate, plus prime decomposition types of number fields.
//!
//! The crate is `no_std` and only needs an allocator.

#![no_std]

extern crate alloc;

pub mod arith;
pub mod catalog;
pub mod error;
pub mod gassmann;
pub mod group;
pub mod perm;
pub mod structure;
mod util;

pub use error::{Error, PermError, Result};
pub use group::{generate_elements, ConjugacyClass, ElemId, GSet, PermGroup, Subgroup};
pub use perm::{parse_cycle_notation, CycleType, Permutation};
pub use util::{is_prime, primes_below};
