//! Gaussian-type special functions built on umbral images.

pub mod config;
pub mod error;
pub mod fresnel;
pub mod gauss_trig;
pub mod levy;
pub mod oracle;
pub mod quasi_gauss;
pub mod special;

pub use config::EvalConfig;
pub use error::{Error, Result};

// The guide's code blocks run as doc-tests, one module per chapter.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/umbral-series.md")]
    mod umbral_series {}
    #[doc = include_str!("../../../book/src/gauss-trig.md")]
    mod gauss_trig {}
    #[doc = include_str!("../../../book/src/quasi-gauss.md")]
    mod quasi_gauss {}
    #[doc = include_str!("../../../book/src/levy.md")]
    mod levy {}
    #[doc = include_str!("../../../book/src/fresnel.md")]
    mod fresnel {}
    #[doc = include_str!("../../../book/src/quadrature.md")]
    mod quadrature {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
