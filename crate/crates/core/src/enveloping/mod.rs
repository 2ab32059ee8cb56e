//! Words in the generators of `U(gl(m0|m1+n))`, PBW normal forms, the
//! polarization representation and the Capelli devirtualization.

mod action;
mod adjoint;
mod devirt;
mod element;
mod pbw;

pub use action::{act, act_word};
pub use adjoint::{adjoint, is_central};
pub use devirt::{devirtualize, is_irregular};
pub use element::{supercommutator, word_is_odd, EnvelopingElement, Generator, Word};
pub use pbw::{pbw_normal_form, PbwOrder};

use crate::combinatorics::Tableau;
use crate::{Error, Result};

/// The bitableau monomial `e_{S,T}`: the product of `e_{S(c),T(c)}` over the
/// cells in row-major order, leftmost cell leftmost.
pub fn bitableau_monomial(s: &Tableau, t: &Tableau) -> Result<Word> {
    if s.shape() != t.shape() {
        return Err(Error::ShapeMismatch { left: s.shape().to_string(), right: t.shape().to_string() });
    }
    Ok(s.word().iter().zip(t.word()).map(|(&a, &b)| Generator::new(a, b)).collect())
}
