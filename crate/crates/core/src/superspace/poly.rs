use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::Symbol;
use crate::{format_rational, Rational};

/// The variable `(a|j)` of `C[M_{m0|m1+n,d}]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SuperVariable {
    pub symbol: Symbol,
    pub place: u32,
}

impl SuperVariable {
    pub const fn new(symbol: Symbol, place: u32) -> Self {
        SuperVariable { symbol, place }
    }

    /// `|(a|j)| = |a| + 1`.
    pub fn is_odd(self) -> bool {
        !self.symbol.is_odd()
    }
}

impl fmt::Display for SuperVariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.symbol, self.place)
    }
}

/// A normal-ordered product of variables: sorted, with even variables
/// possibly repeated and odd variables at most once.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SuperMonomial(Vec<SuperVariable>);

impl SuperMonomial {
    pub fn one() -> Self {
        SuperMonomial(Vec::new())
    }

    /// Normal-orders a product written in the given order.
    ///
    /// Returns the canonical monomial together with the sign of the
    /// reordering, or `None` when an odd variable is repeated.
    pub fn from_product(vars: Vec<SuperVariable>) -> Option<(Self, bool)> {
        let odd: Vec<SuperVariable> = vars.iter().copied().filter(|v| v.is_odd()).collect();
        let mut inversions = 0usize;
        for i in 0..odd.len() {
            for j in i + 1..odd.len() {
                match odd[i].cmp(&odd[j]) {
                    std::cmp::Ordering::Greater => inversions += 1,
                    std::cmp::Ordering::Equal => return None,
                    std::cmp::Ordering::Less => {}
                }
            }
        }
        let mut vars = vars;
        vars.sort_unstable();
        Some((SuperMonomial(vars), inversions % 2 == 1))
    }

    pub fn variables(&self) -> &[SuperVariable] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Z2-degree of the monomial.
    pub fn is_odd(&self) -> bool {
        self.0.iter().filter(|v| v.is_odd()).count() % 2 == 1
    }

    /// Product in normal order, with its sign; `None` if it vanishes.
    pub fn mul(&self, other: &SuperMonomial) -> Option<(SuperMonomial, bool)> {
        let mut vars = self.0.clone();
        vars.extend_from_slice(&other.0);
        Self::from_product(vars)
    }

    pub fn is_proper(&self) -> bool {
        self.0.iter().all(|v| v.symbol.is_proper())
    }
}

impl fmt::Display for SuperMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for v in &self.0 {
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// An exact rational linear combination of normal-ordered monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SuperPolynomial {
    terms: BTreeMap<SuperMonomial, Rational>,
}

impl SuperPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(SuperMonomial::one(), c);
        p
    }

    pub fn variable(symbol: Symbol, place: u32) -> Self {
        Self::monomial(vec![SuperVariable::new(symbol, place)])
    }

    /// The product of `vars` in the written order.
    pub fn monomial(vars: Vec<SuperVariable>) -> Self {
        let mut p = Self::zero();
        if let Some((m, odd)) = SuperMonomial::from_product(vars) {
            p.add_term(m, crate::sign(odd));
        }
        p
    }

    pub fn add_term(&mut self, m: SuperMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SuperMonomial, &Rational)> {
        self.terms.iter()
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &SuperMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        SuperPolynomial { terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    /// Applies the left superderivation `D^l_{a,b}`, which sends `(c|j)` to
    /// `δ_{bc} (a|j)`.
    pub fn superpolarize(&self, a: Symbol, b: Symbol) -> Self {
        let d_odd = a.is_odd() != b.is_odd();
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let vars = m.variables();
            let mut prefix_odd = false;
            for (k, v) in vars.iter().enumerate() {
                if v.symbol == b {
                    let mut next = vars.to_vec();
                    next[k] = SuperVariable::new(a, v.place);
                    if let Some((nm, odd)) = SuperMonomial::from_product(next) {
                        let flip = odd ^ (d_odd && prefix_odd);
                        out.add_term(nm, if flip { -c.clone() } else { c.clone() });
                    }
                }
                prefix_odd ^= v.is_odd();
            }
        }
        out
    }

    /// Largest place index occurring, zero for constants.
    pub fn max_place(&self) -> u32 {
        self.terms.keys().flat_map(|m| m.variables().iter().map(|v| v.place)).max().unwrap_or(0)
    }

    /// `true` when every variable is `(i|j)` with `i` proper.
    pub fn is_proper(&self) -> bool {
        self.terms.keys().all(SuperMonomial::is_proper)
    }

    /// When `self = c·other` for a scalar `c`, returns `c`.
    pub fn ratio_to(&self, other: &SuperPolynomial) -> Option<Rational> {
        if other.is_zero() {
            return if self.is_zero() { Some(Rational::zero()) } else { None };
        }
        let (m, c) = other.terms.iter().next().expect("nonzero");
        let ratio = self.coeff(m) / c;
        (other.scale(&ratio) == *self).then_some(ratio)
    }
}

impl Add for &SuperPolynomial {
    type Output = SuperPolynomial;

    fn add(self, rhs: &SuperPolynomial) -> SuperPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SuperPolynomial {
    type Output = SuperPolynomial;

    fn sub(self, rhs: &SuperPolynomial) -> SuperPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &SuperPolynomial {
    type Output = SuperPolynomial;

    fn neg(self) -> SuperPolynomial {
        self.scale(&-Rational::one())
    }
}

impl Mul for &SuperPolynomial {
    type Output = SuperPolynomial;

    fn mul(self, rhs: &SuperPolynomial) -> SuperPolynomial {
        let mut out = SuperPolynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                if let Some((m, odd)) = m1.mul(m2) {
                    let c = c1 * c2;
                    out.add_term(m, if odd { -c } else { c });
                }
            }
        }
        out
    }
}

impl fmt::Display for SuperPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let is_const = m.degree() == 0;
            if !abs.is_one() || is_const {
                f.write_str(&format_rational(&abs))?;
                if !is_const {
                    f.write_str("·")?;
                }
            }
            if !is_const {
                write!(f, "{m}")?;
            }
        }
        Ok(())
    }
}
