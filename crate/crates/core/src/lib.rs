//! Certified evaluation of explicit Jordan-type bounds for finite linear groups.
//!
//! The crate is layered bottom-up:
//!
//! * [`exactnum`]: exact integers/rationals, dyadic interval arithmetic and
//!   certified comparison of symbolic bound expressions;
//! * [`catalog`]: embedded group data tables with query operations;
//! * [`estimates`]: closed-form bound functions;
//! * [`jordan`]: the irreducible-bound search, the closure over sums of degrees
//!   and the top-level bound API;
//! * [`verifier`]: lemma checks, table regeneration and diff reports.

pub mod catalog;
pub mod estimates;
pub mod exactnum;
pub mod jordan;
pub mod verifier;
