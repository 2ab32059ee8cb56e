use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{e_star, h_star, ShiftedPolynomial};
use crate::{format_rational, Error, Rational, Result};

/// A polynomial in abstract generators `E_1, …, E_n`, keyed by exponent
/// vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EstarPolynomial {
    n: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl EstarPolynomial {
    pub fn zero(n: usize) -> Self {
        EstarPolynomial { n, terms: BTreeMap::new() }
    }

    /// The single generator `E_k`.
    pub fn generator(k: usize, n: usize) -> Self {
        assert!((1..=n).contains(&k));
        let mut e = vec![0; n];
        e[k - 1] = 1;
        let mut p = Self::zero(n);
        p.add_term(e, Rational::one());
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, c: Rational) {
        assert_eq!(exponents.len(), self.n);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponents.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exponents);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Substitutes `E_k ↦ images[k−1]` in any ring given by `one`, `mul`, `add`
    /// and `scale`.
    pub fn substitute<T: Clone>(
        &self,
        one: T,
        images: &[T],
        mul: impl Fn(&T, &T) -> Result<T>,
        add: impl Fn(&T, &T) -> T,
        scale: impl Fn(&T, &Rational) -> T,
        zero: T,
    ) -> Result<T> {
        assert_eq!(images.len(), self.n, "one image per generator");
        let mut powers: Vec<Vec<T>> = images.iter().map(|g| vec![one.clone(), g.clone()]).collect();
        let mut out = zero;
        for (e, c) in &self.terms {
            let mut term = one.clone();
            for (k, &m) in e.iter().enumerate() {
                while powers[k].len() <= m as usize {
                    let next = mul(&powers[k][powers[k].len() - 1], &images[k])?;
                    powers[k].push(next);
                }
                if m > 0 {
                    term = mul(&term, &powers[k][m as usize])?;
                }
            }
            out = add(&out, &scale(&term, c));
        }
        Ok(out)
    }

    /// `E_k ↦ images[k−1]` among shifted polynomials.
    pub fn substitute_shifted(&self, images: &[ShiftedPolynomial]) -> ShiftedPolynomial {
        let m = images.first().map_or(0, ShiftedPolynomial::n);
        self.substitute(
            ShiftedPolynomial::one(m),
            images,
            |a, b| Ok(a * b),
            |a, b| a + b,
            |a, c| a.scale(c),
            ShiftedPolynomial::zero(m),
        )
        .expect("polynomial arithmetic is infallible")
    }

    /// `E_k ↦ e*_k(n)`.
    pub fn to_shifted(&self) -> ShiftedPolynomial {
        self.substitute_shifted(&estar_generators(self.n))
    }
}

fn estar_generators(n: usize) -> Vec<ShiftedPolynomial> {
    (1..=n).map(|k| e_star(k, n).expect("k <= n")).collect()
}

/// Expresses a shifted symmetric polynomial in `e*_1, …, e*_n` by peeling
/// graded-lexicographic leading terms.
pub fn express_in_estar_basis(p: &ShiftedPolynomial) -> Result<EstarPolynomial> {
    if !p.is_shifted_symmetric() {
        return Err(Error::NotShiftedSymmetric);
    }
    let n = p.n();
    let gens = estar_generators(n);
    let mut rem = p.clone();
    let mut out = EstarPolynomial::zero(n);
    while let Some((lead, c)) = rem.leading_term() {
        if lead.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotShiftedSymmetric);
        }
        let e: Vec<u32> = (0..n).map(|k| lead[k] - lead.get(k + 1).copied().unwrap_or(0)).collect();
        let c = c.clone();
        let mut mono = EstarPolynomial::zero(n);
        mono.add_term(e, Rational::one());
        let product = mono.substitute_shifted(&gens);
        rem = &rem - &product.scale(&c);
        out.add_term(mono.terms.into_keys().next().expect("one term"), c);
    }
    Ok(out)
}

/// The involution `e*_k ↦ h*_k`.
pub fn omega(p: &ShiftedPolynomial) -> Result<ShiftedPolynomial> {
    let basis = express_in_estar_basis(p)?;
    let images: Vec<ShiftedPolynomial> = (1..=p.n()).map(|k| h_star(k, p.n())).collect();
    Ok(basis.substitute_shifted(&images))
}

/// `π*`: sets the last variable to zero.
pub fn pi_star(p: &ShiftedPolynomial) -> ShiftedPolynomial {
    p.drop_last_variable()
}

/// `i*`: the same `e*`-polynomial in one more variable.
pub fn i_star(p: &ShiftedPolynomial) -> Result<ShiftedPolynomial> {
    let basis = express_in_estar_basis(p)?;
    let n = p.n() + 1;
    let images: Vec<ShiftedPolynomial> = (1..n).map(|k| e_star(k, n).expect("k <= n")).collect();
    if images.is_empty() {
        return Ok(ShiftedPolynomial::constant(n, basis.terms.get(&Vec::new()).cloned().unwrap_or_else(Rational::zero)));
    }
    Ok(basis.substitute_shifted(&images))
}

impl fmt::Display for EstarPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let gens: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &m)| m > 0)
                .map(|(i, &m)| if m == 1 { format!("E{}", i + 1) } else { format!("E{}^{}", i + 1, m) })
                .collect();
            if gens.is_empty() {
                f.write_str(&format_rational(&abs))?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}·", format_rational(&abs))?;
                }
                f.write_str(&gens.join("·"))?;
            }
        }
        Ok(())
    }
}
