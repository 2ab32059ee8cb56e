//! Exact symbolic computation in the center of the enveloping algebra `U(gl(n))`.
//!
//! Central elements are built from *virtual presentations*: products of
//! generators of an auxiliary enveloping superalgebra `U(gl(m0|m1+n))` that are
//! pushed back into `U(gl(n))` by the Capelli devirtualization map. On top of
//! that the crate provides
//!
//! * the combinatorial substrate (partitions, tableaux, strips, characters),
//! * the supersymmetric polynomial algebra `C[M_{m0|m1+n,d}]` with
//!   superpolarizations, biproducts and bitableaux,
//! * PBW normal forms, the polarization representation and centrality tests,
//! * Capelli / Young-Capelli / double Young-Capelli bitableaux, Schur elements,
//!   the Capelli generators `H_k(n)` and the Nazarov-Umeda generators `I_k(n)`,
//! * shifted symmetric polynomials and the Harish-Chandra isomorphism.
//!
//! All arithmetic is exact over [`Rational`].

pub mod central;
pub mod combinatorics;
pub mod enveloping;
mod error;
pub mod json;
pub mod linalg;
pub mod shifted;
pub mod spec;
pub mod superspace;
pub mod verify;

pub use error::{Error, Result};

pub use central::{CentralElement, ElementCache, Provenance, VirtualPool};
pub use combinatorics::{Cell, Orientation, Partition, Strip, Tableau};
pub use enveloping::{EnvelopingElement, Generator, PbwOrder, Word};
pub use shifted::{EstarPolynomial, ShiftedPolynomial};
pub use superspace::{SuperMonomial, SuperPolynomial, SuperVariable, Symbol, SymbolClass};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Exact rational coefficient used throughout the crate.
pub type Rational = num_rational::BigRational;

pub(crate) fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[cfg(test)]
pub(crate) fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub(crate) fn sign(odd: bool) -> Rational {
    if odd {
        -Rational::one()
    } else {
        Rational::one()
    }
}

/// Renders a rational as `"p/q"`, or `"p"` when integral.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}
