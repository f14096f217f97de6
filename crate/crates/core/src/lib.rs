//! Finite proximity frames and their duals.
//!
//! Everything here works on finite bounded distributive lattices. At this
//! scale the Priestley topology is discrete, so each construction reduces to
//! exact set computations on bitmaps:
//!
//! * [`order`]: posets, lattices, generated filters and ideals;
//! * [`priestley`]: prime filters, `η`, upset lattices;
//! * [`subordination`]: relations on a lattice, the axioms S1–S8, round
//!   filters and ends;
//! * [`gleason`]: the relation `R` on prime filters, its quotient, and the
//!   end correspondence;
//! * [`morphism`]: meet-hemimorphisms, hemirelations, `★`-composition;
//! * [`pospace`]: finite compact pospaces and `Ω`.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod bitset;
pub mod corpus;
pub mod error;
pub mod exhaust;
pub mod gleason;
pub mod morphism;
pub mod order;
pub mod pospace;
pub mod priestley;
pub mod relation;
pub mod subordination;

pub use bitset::ElementSet;
pub use error::{Error, Result};
pub use order::{Lattice, OrderError, Poset};
pub use relation::{Relation, Verdict, Witness};
