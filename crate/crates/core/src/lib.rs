//! Root systems, ad-nilpotent ideals of the positive root poset, dominant
//! regions of the Shi arrangement and their realization by alcoves.

#![allow(clippy::needless_range_loop)]

pub mod affine;
pub mod classify;
pub mod error;
pub mod ideals;
pub mod lattice;
pub mod linalg;
pub mod roots;
pub mod rootset;
pub mod verify;
pub mod weyl;

pub use affine::{AffineElement, AffineRoot, KVector};
pub use error::{Error, Result};
pub use ideals::Ideal;
pub use roots::{CartanType, Coweight, Root, RootId, RootSystem, Series};
pub use rootset::RootSet;
pub use weyl::WeylElement;
