//! Quadrature used to check closed forms and to evaluate integral
//! representations. Nothing here calls the closed forms it is used to test.

mod gauss_kronrod;
mod oscillatory;
mod principal_value;
mod semi_infinite;

pub use gauss_kronrod::{adaptive_quad, QuadResult};
pub use oscillatory::{oscillatory_tail_quad, MAX_PIECES};
pub use principal_value::{principal_value_quad, EXCISIONS};
pub use semi_infinite::{semi_infinite_quad, semi_infinite_quad_with, whole_line_quad, SemiInfinite, TailMap};

use std::cell::RefCell;

use crate::error::{Error, Result};

/// Carries the first error raised inside an integrand out of the `f64`
/// closure the quadrature expects. A trapped call evaluates to NaN, which
/// makes the quadrature stop; `finish` then reports the original error.
#[derive(Default)]
pub(crate) struct Trap {
    first: RefCell<Option<Error>>,
}

impl Trap {
    pub fn call(&self, r: Result<f64>) -> f64 {
        match r {
            Ok(v) => v,
            Err(e) => {
                self.first.borrow_mut().get_or_insert(e);
                f64::NAN
            }
        }
    }

    pub fn finish<T>(self, r: Result<T>) -> Result<T> {
        match self.first.into_inner() {
            Some(e) => Err(e),
            None => r,
        }
    }
}
