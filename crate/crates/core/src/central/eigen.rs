use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::CentralElement;
use crate::combinatorics::Partition;
use crate::enveloping::act;
use crate::superspace::highest_weight_vector;
use crate::{Error, Rational, Result};

/// The eigenvalue of a central element on a highest weight vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenvalueRecord {
    /// Highest weight of the vector.
    pub mu: Partition,
    pub value: Rational,
}

/// The scalar by which `x` acts on `(D_λ|D^P_λ)` in `C[M_{n,d}]`.
pub fn eigenvalue_on(x: &CentralElement, shape: &Partition, d: usize) -> Result<Rational> {
    let v = highest_weight_vector(shape, x.n(), d)?;
    act(x.body(), &v).ratio_to(&v).ok_or(Error::NotEigenvector)
}

fn scalar_on(x: &CentralElement, shape: &Partition) -> Result<Rational> {
    eigenvalue_on(x, shape, shape.first())
}

/// The scalar by which `x` acts on the highest weight vector of weight `μ`,
/// namely `(D_{μ̃}|D^P_{μ̃})`. Requires `ℓ(μ) <= n`.
pub fn eigenvalue(x: &CentralElement, mu: &Partition) -> Result<Rational> {
    if mu.len() > x.n() {
        return Err(Error::Precondition(format!("weight {mu} has more than {} parts", x.n())));
    }
    scalar_on(x, &mu.conjugate())
}

/// The scalar by which `x` acts on `(D_μ|D^P_μ)`, the highest weight vector
/// of the irreducible module labelled by `μ` (highest weight `μ̃`).
/// Requires `μ_1 <= n`.
pub fn module_eigenvalue(x: &CentralElement, mu: &Partition) -> Result<Rational> {
    if mu.first() > x.n() {
        return Err(Error::Precondition(format!("module {mu} needs mu_1 <= {}", x.n())));
    }
    scalar_on(x, mu)
}

impl CentralElement {
    /// Eigenvalues at several weights, in input order.
    pub fn eigenvalues(&self, weights: &[Partition]) -> Result<Vec<EigenvalueRecord>> {
        weights
            .par_iter()
            .map(|mu| Ok(EigenvalueRecord { mu: mu.clone(), value: eigenvalue(self, mu)? }))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::central::{capelli_h, nazarov_umeda_i, schur_element};
    use crate::combinatorics::{horizontal_strips, vertical_strips};
    use crate::int;
    use num_bigint::BigInt;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn trace_counts_boxes() {
        let h1 = capelli_h(1, 3).unwrap();
        for mu in Partition::all_up_to(4).into_iter().filter(|m| m.len() <= 3) {
            assert_eq!(eigenvalue(&h1, &mu).unwrap(), int(mu.size() as i64));
        }
    }

    #[test]
    fn schur_on_its_own_weight() {
        let s = schur_element(&p("2,1"), 2).unwrap();
        assert_eq!(eigenvalue(&s, &p("2,1")).unwrap(), int(3));
        assert_eq!(eigenvalue(&s, &p("3")).unwrap(), int(0));
        assert_eq!(eigenvalue(&s, &p("1,1")).unwrap(), int(0));
    }

    #[test]
    fn strip_sums() {
        let n = 3;
        for mu in Partition::all_up_to(5).into_iter().filter(|m| m.first() <= n && m.len() <= n) {
            for k in 1..=3 {
                let h: BigInt = horizontal_strips(&mu, k).iter().map(|s| BigInt::from(s.factorial())).sum();
                let v: BigInt = vertical_strips(&mu, k).iter().map(|s| BigInt::from(s.factorial())).sum();
                assert_eq!(module_eigenvalue(&capelli_h(k, n).unwrap(), &mu).unwrap(), Rational::from_integer(h));
                assert_eq!(module_eigenvalue(&nazarov_umeda_i(k, n).unwrap(), &mu).unwrap(), Rational::from_integer(v));
            }
        }
    }

    #[test]
    fn preconditions() {
        let s = schur_element(&p("1"), 2).unwrap();
        assert!(eigenvalue(&s, &p("1,1,1")).is_err());
        assert!(module_eigenvalue(&s, &p("3")).is_err());
    }

    #[test]
    fn non_central_input() {
        let x = CentralElement::trusted(
            crate::EnvelopingElement::generator(crate::Generator::proper(2, 1)),
            2,
            crate::central::Provenance::User,
        );
        assert_eq!(eigenvalue(&x, &p("1")), Err(Error::NotEigenvector));
    }
}
