//! Construction and verification of standard-form codeword stabilized
//! (CWS) quantum codes.
//!
//! A code is a graph plus a set of classical words. Searching for the best
//! code on a graph reduces to a maximum clique problem. See the guide in
//! `book/` for a walk through the modules.
//!
//! ```
//! use cws_core::bitgraph::Graph;
//! use cws_core::cwsmap::verify_code;
//! use cws_core::pauli::symmetric_error_set;
//!
//! let e = symmetric_error_set(3, 2)?;
//! // the triangle's graph state detects every single-qubit error
//! assert!(verify_code(&Graph::complete(3), &e, &[0])?.pure);
//! # Ok::<(), cws_core::Error>(())
//! ```

pub mod bitgraph;
pub mod bounds;
pub mod campaign;
pub mod clique;
pub mod cwsmap;
pub mod error;
pub mod evolve;
pub mod pauli;
pub mod qoracle;
pub mod util;

pub use error::{Error, Result};

/// Book chapters, compiled as doc-tests so the guide cannot drift.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/errors.md")]
    mod errors {}
    #[doc = include_str!("../../../book/src/cliques.md")]
    mod cliques {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    mod oracle {}
    #[doc = include_str!("../../../book/src/bounds.md")]
    mod bounds {}
    #[doc = include_str!("../../../book/src/evolve.md")]
    mod evolve {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
