use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::Partition;
use crate::{format_rational, int, Error, Rational, Result};

/// An exact polynomial in `x_1, …, x_n`, keyed by exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ShiftedPolynomial {
    n: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

/// Graded lexicographic key: total degree first, then lexicographic.
fn grlex(e: &[u32]) -> (u32, &[u32]) {
    (e.iter().sum(), e)
}

impl ShiftedPolynomial {
    pub fn zero(n: usize) -> Self {
        ShiftedPolynomial { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Rational::one())
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        let mut p = Self::zero(n);
        p.add_term(vec![0; n], c);
        p
    }

    /// The variable `x_i`, 1-based.
    pub fn var(n: usize, i: usize) -> Self {
        assert!((1..=n).contains(&i), "variable index {i} out of range for n = {n}");
        let mut e = vec![0; n];
        e[i - 1] = 1;
        let mut p = Self::zero(n);
        p.add_term(e, Rational::one());
        p
    }

    /// `x_i + c`.
    pub fn var_plus(n: usize, i: usize, c: i64) -> Self {
        &Self::var(n, i) + &Self::constant(n, int(c))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, c: Rational) {
        assert_eq!(exponents.len(), self.n, "exponent vector length");
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

    pub fn coeff(&self, e: &[u32]) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        ShiftedPolynomial { n: self.n, terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.n), |acc, _| &acc * self)
    }

    /// Leading term in graded lexicographic order.
    pub fn leading_term(&self) -> Option<(&Vec<u32>, &Rational)> {
        self.terms.iter().max_by(|a, b| grlex(a.0).cmp(&grlex(b.0)))
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.n, "evaluation point length");
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    term *= x;
                }
            }
            total += term;
        }
        total
    }

    /// Evaluation at `x_i = μ_i`, padding `μ` with zeros.
    pub fn eval_at_partition(&self, mu: &Partition) -> Result<Rational> {
        if mu.len() > self.n {
            return Err(Error::Precondition(format!(
                "partition {mu} has more than {} parts",
                self.n
            )));
        }
        let point: Vec<Rational> = (0..self.n).map(|i| int(mu.part(i) as i64)).collect();
        Ok(self.eval(&point))
    }

    /// Substitutes a polynomial (in `m` variables) for each variable.
    pub fn compose(&self, images: &[ShiftedPolynomial]) -> ShiftedPolynomial {
        assert_eq!(images.len(), self.n, "one image per variable");
        let m = images.first().map_or(0, |p| p.n);
        let mut out = ShiftedPolynomial::zero(m);
        let mut powers: Vec<Vec<ShiftedPolynomial>> = images.iter().map(|p| vec![ShiftedPolynomial::one(m), p.clone()]).collect();
        for (e, c) in &self.terms {
            let mut term = ShiftedPolynomial::constant(m, c.clone());
            for (i, &k) in e.iter().enumerate() {
                while powers[i].len() <= k as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][k as usize];
            }
            out = &out + &term;
        }
        out
    }

    /// `p(…, x_i, x_{i+1}, …) = p(…, x_{i+1} − 1, x_i + 1, …)` for all `i < n`.
    pub fn is_shifted_symmetric(&self) -> bool {
        (1..self.n).all(|i| {
            let images: Vec<ShiftedPolynomial> = (1..=self.n)
                .map(|j| {
                    if j == i {
                        Self::var_plus(self.n, i + 1, -1)
                    } else if j == i + 1 {
                        Self::var_plus(self.n, i, 1)
                    } else {
                        Self::var(self.n, j)
                    }
                })
                .collect();
            self.compose(&images) == *self
        })
    }

    /// `x_{n} = 0`: the polynomial in the first `n − 1` variables.
    pub fn drop_last_variable(&self) -> ShiftedPolynomial {
        let mut out = ShiftedPolynomial::zero(self.n.saturating_sub(1));
        for (e, c) in &self.terms {
            if e.last().copied().unwrap_or(0) == 0 {
                out.add_term(e[..e.len().saturating_sub(1)].to_vec(), c.clone());
            }
        }
        out
    }

    /// The same polynomial viewed in `m >= n` variables.
    pub fn with_variables(&self, m: usize) -> ShiftedPolynomial {
        assert!(m >= self.n);
        let mut out = ShiftedPolynomial::zero(m);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2.resize(m, 0);
            out.add_term(e2, c.clone());
        }
        out
    }

    /// Exact quotient `self / d`; fails when `d` does not divide `self`.
    pub fn div_exact(&self, d: &ShiftedPolynomial) -> Result<ShiftedPolynomial> {
        let (lead_e, lead_c) = d.leading_term().ok_or(Error::DivisionFailed)?;
        let (lead_e, lead_c) = (lead_e.clone(), lead_c.clone());
        let mut rem = self.clone();
        let mut quotient = ShiftedPolynomial::zero(self.n);
        while let Some((e, c)) = rem.leading_term() {
            if e.iter().zip(&lead_e).any(|(a, b)| a < b) {
                return Err(Error::DivisionFailed);
            }
            let qe: Vec<u32> = e.iter().zip(&lead_e).map(|(a, b)| a - b).collect();
            let qc = c / &lead_c;
            let mut mono = ShiftedPolynomial::zero(self.n);
            mono.add_term(qe, qc);
            rem = &rem - &(&mono * d);
            quotient = &quotient + &mono;
        }
        Ok(quotient)
    }
}

impl Add for &ShiftedPolynomial {
    type Output = ShiftedPolynomial;

    fn add(self, rhs: &ShiftedPolynomial) -> ShiftedPolynomial {
        assert_eq!(self.n, rhs.n, "variable count");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &ShiftedPolynomial {
    type Output = ShiftedPolynomial;

    fn sub(self, rhs: &ShiftedPolynomial) -> ShiftedPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &ShiftedPolynomial {
    type Output = ShiftedPolynomial;

    fn neg(self) -> ShiftedPolynomial {
        self.scale(&-Rational::one())
    }
}

impl Mul for &ShiftedPolynomial {
    type Output = ShiftedPolynomial;

    fn mul(self, rhs: &ShiftedPolynomial) -> ShiftedPolynomial {
        assert_eq!(self.n, rhs.n, "variable count");
        let mut out = ShiftedPolynomial::zero(self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for ShiftedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut sorted: Vec<_> = self.terms.iter().collect();
        sorted.sort_by(|a, b| grlex(b.0).cmp(&grlex(a.0)));
        for (k, (e, c)) in sorted.into_iter().enumerate() {
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, k) })
                .collect();
            if vars.is_empty() {
                f.write_str(&format_rational(&abs))?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}·", format_rational(&abs))?;
                }
                f.write_str(&vars.join("·"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_display() {
        let x1 = ShiftedPolynomial::var(2, 1);
        let x2 = ShiftedPolynomial::var(2, 2);
        let p = &(&x1 * &x1) - &x2.scale(&crate::frac(1, 2));
        assert_eq!(p.to_string(), "x1^2 - 1/2·x2");
        assert_eq!(p.eval(&[int(2), int(4)]), int(2));
        assert_eq!(p.degree(), 2);
    }

    #[test]
    fn shifted_symmetry() {
        let n = 2;
        let sum = &ShiftedPolynomial::var(n, 1) + &ShiftedPolynomial::var(n, 2);
        assert!(sum.is_shifted_symmetric());
        // (x1 + 1) x2 is shifted symmetric; x1 x2 is not.
        let e2 = &ShiftedPolynomial::var_plus(n, 1, 1) * &ShiftedPolynomial::var(n, 2);
        assert!(e2.is_shifted_symmetric());
        assert!(!(&ShiftedPolynomial::var(n, 1) * &ShiftedPolynomial::var(n, 2)).is_shifted_symmetric());
    }

    #[test]
    fn exact_division() {
        let a = &ShiftedPolynomial::var_plus(3, 1, 2) - &ShiftedPolynomial::var(3, 3);
        let b = &(&ShiftedPolynomial::var(3, 2) * &ShiftedPolynomial::var(3, 2)) + &ShiftedPolynomial::one(3);
        assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
        assert_eq!((&a * &b).div_exact(&a).unwrap(), b);
        assert_eq!((&(&a * &b) + &ShiftedPolynomial::one(3)).div_exact(&a), Err(Error::DivisionFailed));
    }

    #[test]
    fn restriction() {
        let p = &ShiftedPolynomial::var(3, 1) * &ShiftedPolynomial::var_plus(3, 3, 2);
        assert_eq!(p.drop_last_variable(), ShiftedPolynomial::var(2, 1).scale(&int(2)));
        assert_eq!(ShiftedPolynomial::var(2, 2).with_variables(3), ShiftedPolynomial::var(3, 2));
    }
}
