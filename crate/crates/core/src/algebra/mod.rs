//! Exact monomial and monomial-ideal arithmetic.
//!
//! Ideals are always kept as their unique minimal generating set in
//! canonical (graded) order, so equality is structural equality.

mod ideal;
mod monomial;

pub use ideal::MonomialIdeal;
pub use monomial::Monomial;
