//! Foundational special functions and the generic umbral series evaluator.

mod dawson;
pub(crate) mod dd;
mod gamma;
mod hermite;
mod hypergeometric;
mod series;
mod umbral;

pub use dawson::{dawson, erfi, DAWSON_SERIES_LIMIT, ERFI_LIMIT};
pub use gamma::{gamma, ln_gamma, pochhammer};
pub use hermite::{hermite_classical, hermite_two_var};
pub use hypergeometric::{hyp1f1, hyp1f1_derivative, hyp1f2, hyp2f1, KUMMER_THRESHOLD};
pub use series::SeriesResult;
pub use umbral::{umbral_exp, umbral_geometric, UmbralWeight};

pub(crate) use gamma::sin_pi;
pub(crate) use series::{require_converged, Summation};
