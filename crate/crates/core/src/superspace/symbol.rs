use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Alphabet a symbol is drawn from.
///
/// The declaration order is the canonical order used when sorting variables
/// inside a monomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SymbolClass {
    /// The letters `1..n` of the proper (negative) space.
    Proper,
    /// Negative virtual symbols `β_t`.
    VirtualNegative,
    /// Positive virtual symbols `α_s`.
    VirtualPositive,
    /// Auxiliary symbol used to define biproducts.
    Gamma,
    /// Places `1..d`.
    Place,
}

impl SymbolClass {
    pub fn name(self) -> &'static str {
        match self {
            SymbolClass::Proper => "proper",
            SymbolClass::VirtualNegative => "virtual_negative",
            SymbolClass::VirtualPositive => "virtual_positive",
            SymbolClass::Gamma => "gamma",
            SymbolClass::Place => "place",
        }
    }

    pub fn from_name(s: &str) -> Result<Self> {
        Ok(match s {
            "proper" => SymbolClass::Proper,
            "virtual_negative" => SymbolClass::VirtualNegative,
            "virtual_positive" => SymbolClass::VirtualPositive,
            "gamma" => SymbolClass::Gamma,
            "place" => SymbolClass::Place,
            _ => return Err(Error::Parse(format!("unknown symbol class {s:?}"))),
        })
    }

    /// Z2-degree of the symbols of this class.
    ///
    /// Positive virtual symbols and the auxiliary `γ` are even, so that the
    /// variables `(α|j)` and `(γ|j)` are odd.
    pub fn is_odd(self) -> bool {
        !matches!(self, SymbolClass::VirtualPositive | SymbolClass::Gamma)
    }

    pub fn is_virtual(self) -> bool {
        matches!(self, SymbolClass::VirtualPositive | SymbolClass::VirtualNegative)
    }
}

/// A letter of one of the graded alphabets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Symbol {
    pub class: SymbolClass,
    pub index: u32,
}

impl Symbol {
    pub const fn new(class: SymbolClass, index: u32) -> Self {
        Symbol { class, index }
    }

    pub const fn proper(i: u32) -> Self {
        Symbol::new(SymbolClass::Proper, i)
    }

    /// Positive virtual symbol `α_i`.
    pub const fn alpha(i: u32) -> Self {
        Symbol::new(SymbolClass::VirtualPositive, i)
    }

    /// Negative virtual symbol `β_i`.
    pub const fn beta(i: u32) -> Self {
        Symbol::new(SymbolClass::VirtualNegative, i)
    }

    pub const fn gamma(i: u32) -> Self {
        Symbol::new(SymbolClass::Gamma, i)
    }

    pub const fn place(j: u32) -> Self {
        Symbol::new(SymbolClass::Place, j)
    }

    pub fn is_odd(self) -> bool {
        self.class.is_odd()
    }

    pub fn is_proper(self) -> bool {
        self.class == SymbolClass::Proper
    }

    pub fn is_virtual(self) -> bool {
        self.class.is_virtual()
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.class {
            SymbolClass::Proper => write!(f, "{}", self.index),
            SymbolClass::VirtualPositive => write!(f, "a{}", self.index),
            SymbolClass::VirtualNegative => write!(f, "b{}", self.index),
            SymbolClass::Gamma => write!(f, "g{}", self.index),
            SymbolClass::Place => write!(f, "p{}", self.index),
        }
    }
}

impl FromStr for Symbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid symbol {s:?}"));
        let (class, digits) = match s.chars().next() {
            Some('a') => (SymbolClass::VirtualPositive, &s[1..]),
            Some('b') => (SymbolClass::VirtualNegative, &s[1..]),
            Some('g') => (SymbolClass::Gamma, &s[1..]),
            Some('p') => (SymbolClass::Place, &s[1..]),
            Some(c) if c.is_ascii_digit() => (SymbolClass::Proper, s),
            _ => return Err(bad()),
        };
        let index: u32 = digits.parse().map_err(|_| bad())?;
        if index == 0 {
            return Err(bad());
        }
        Ok(Symbol::new(class, index))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees() {
        assert!(!Symbol::alpha(1).is_odd());
        assert!(Symbol::beta(1).is_odd());
        assert!(Symbol::proper(1).is_odd());
        assert!(Symbol::place(1).is_odd());
        assert!(!Symbol::gamma(1).is_odd());
    }

    #[test]
    fn canonical_class_order() {
        assert!(Symbol::proper(9) < Symbol::beta(1));
        assert!(Symbol::beta(9) < Symbol::alpha(1));
        assert!(Symbol::alpha(9) < Symbol::gamma(1));
    }

    #[test]
    fn text_form() {
        for s in ["3", "a2", "b1", "g1", "p4"] {
            assert_eq!(s.parse::<Symbol>().unwrap().to_string(), s);
        }
        assert!("x1".parse::<Symbol>().is_err());
        assert!("0".parse::<Symbol>().is_err());
    }
}
