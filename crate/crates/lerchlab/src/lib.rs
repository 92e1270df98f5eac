pub mod diff_ops;
pub mod eigenspace;
pub mod error;
pub mod harness;
pub mod lerch;
pub mod quadrature;
pub mod report;
pub mod special_functions;
pub mod twisted;

pub use error::{LerchError, Result};

/// The book chapters, compiled here so their snippets run as doctests.
#[cfg(doctest)]
pub mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/lerch-functions.md")]
    pub mod lerch_functions {}
    #[doc = include_str!("../../../book/src/twisted-periodicity.md")]
    pub mod twisted_periodicity {}
    #[doc = include_str!("../../../book/src/hecke-operators.md")]
    pub mod hecke_operators {}
    #[doc = include_str!("../../../book/src/differential-operators.md")]
    pub mod differential_operators {}
    #[doc = include_str!("../../../book/src/eigenspaces.md")]
    pub mod eigenspaces {}
    #[doc = include_str!("../../../book/src/characterization.md")]
    pub mod characterization {}
    #[doc = include_str!("../../../book/src/harness.md")]
    pub mod harness {}
    #[doc = include_str!("../../../book/src/numerics.md")]
    pub mod numerics {}
}
