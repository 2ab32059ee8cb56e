use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::superspace::Symbol;
use crate::{format_rational, sign, Error, Rational, Result};

/// The basis element `e_{a,b}` of `gl(m0|m1+n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Generator {
    pub row: Symbol,
    pub col: Symbol,
}

impl Generator {
    pub const fn new(row: Symbol, col: Symbol) -> Self {
        Generator { row, col }
    }

    /// `e_{i,j}` of `gl(n)`.
    pub const fn proper(i: u32, j: u32) -> Self {
        Generator::new(Symbol::proper(i), Symbol::proper(j))
    }

    /// `|e_{a,b}| = |a| + |b|`.
    pub fn is_odd(self) -> bool {
        self.row.is_odd() != self.col.is_odd()
    }

    pub fn is_proper(self) -> bool {
        self.row.is_proper() && self.col.is_proper()
    }

    /// Annihilates a virtual symbol when acting by polarization.
    pub fn annihilates_virtual(self) -> bool {
        self.col.is_virtual()
    }

    pub fn creates_virtual(self) -> bool {
        self.row.is_virtual()
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e[{},{}]", self.row, self.col)
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid generator {s:?}"));
        let inner = s.trim().strip_prefix("e[").and_then(|r| r.strip_suffix(']')).ok_or_else(bad)?;
        let (a, b) = inner.split_once(',').ok_or_else(bad)?;
        Ok(Generator::new(a.parse()?, b.parse()?))
    }
}

/// A product of generators, stored as written: index 0 is the leftmost
/// factor and the last factor acts first.
pub type Word = Vec<Generator>;

/// Z2-degree of a word.
pub fn word_is_odd(word: &[Generator]) -> bool {
    word.iter().filter(|g| g.is_odd()).count() % 2 == 1
}

/// An exact rational linear combination of words in the generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EnvelopingElement {
    terms: BTreeMap<Word, Rational>,
}

impl EnvelopingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(Rational::one())
    }

    pub fn scalar(c: Rational) -> Self {
        Self::from_word(Vec::new(), c)
    }

    pub fn generator(g: Generator) -> Self {
        Self::from_word(vec![g], Rational::one())
    }

    pub fn from_word(word: Word, c: Rational) -> Self {
        let mut x = Self::zero();
        x.add_term(word, c);
        x
    }

    pub(crate) fn from_map(terms: BTreeMap<Word, Rational>) -> Self {
        EnvelopingElement { terms }
    }

    pub fn add_term(&mut self, word: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(word) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Word, Rational> {
        self.terms
    }

    pub fn coeff(&self, word: &[Generator]) -> Rational {
        self.terms.get(word).cloned().unwrap_or_else(Rational::zero)
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Filtration degree: the maximal word length.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_proper(&self) -> bool {
        self.terms.keys().all(|w| w.iter().all(|g| g.is_proper()))
    }

    /// Largest proper index occurring in any generator.
    pub fn max_index(&self) -> u32 {
        self.terms
            .keys()
            .flat_map(|w| w.iter().flat_map(|g| [g.row, g.col]))
            .filter(|s| s.is_proper())
            .map(|s| s.index)
            .max()
            .unwrap_or(0)
    }

    /// The scalar term.
    pub fn constant_term(&self) -> Rational {
        self.coeff(&[])
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        EnvelopingElement { terms: self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect() }
    }
}

/// `[e_{a,b}, e_{c,d}] = δ_{bc} e_{a,d} − (−1)^{|e_{a,b}||e_{c,d}|} δ_{ad} e_{c,b}`.
pub fn supercommutator(g: Generator, h: Generator) -> EnvelopingElement {
    let mut out = EnvelopingElement::zero();
    if g.col == h.row {
        out.add_term(vec![Generator::new(g.row, h.col)], Rational::one());
    }
    if g.row == h.col {
        out.add_term(vec![Generator::new(h.row, g.col)], -sign(g.is_odd() && h.is_odd()));
    }
    out
}

impl Add for &EnvelopingElement {
    type Output = EnvelopingElement;

    fn add(self, rhs: &EnvelopingElement) -> EnvelopingElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &EnvelopingElement {
    type Output = EnvelopingElement;

    fn sub(self, rhs: &EnvelopingElement) -> EnvelopingElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &EnvelopingElement {
    type Output = EnvelopingElement;

    fn neg(self) -> EnvelopingElement {
        self.scale(&-Rational::one())
    }
}

/// Concatenation product; no normalization.
impl Mul for &EnvelopingElement {
    type Output = EnvelopingElement;

    fn mul(self, rhs: &EnvelopingElement) -> EnvelopingElement {
        let mut out = EnvelopingElement::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &rhs.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(w, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for EnvelopingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if w.is_empty() {
                f.write_str(&format_rational(&abs))?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{}·", format_rational(&abs))?;
            }
            let factors: Vec<String> = w.iter().map(ToString::to_string).collect();
            f.write_str(&factors.join("·"))?;
        }
        Ok(())
    }
}
