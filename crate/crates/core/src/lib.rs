//! Exact arithmetic for twist families of L-space knots.
//!
//! The crate is `no_std` and only needs `alloc`. It covers:
//!
//! * [`laurent`]: sparse Laurent polynomials in one and two variables;
//! * [`twistalex`]: link-polynomial validation, transport under twisting,
//!   genus bounds, and L-space knot polynomial certificates;
//! * [`seifert`]: Seifert fibered spaces over the sphere, their L-space
//!   decision procedure, and one-parameter surgery families;
//! * [`braid`]: braid words, closures, Burau Alexander polynomials, positive
//!   braid censuses, and torus / twisted torus braids;
//! * [`homology`]: Smith normal form and first homology of surgery
//!   presentations.
#![no_std]

extern crate alloc;

pub mod braid;
pub mod homology;
pub mod laurent;
pub mod rational;
pub mod seifert;
pub mod twistalex;

pub use laurent::{Breadth, KnotPoly1, LaurentError, LinkPoly2};
