use super::{CentralElement, ElementCache, Provenance};
use crate::enveloping::EnvelopingElement;
use crate::shifted::{express_in_estar_basis, EstarPolynomial};
use crate::Result;

/// The polynomial `P` with `x = P(H_1(n), …, H_n(n))`.
pub fn h_polynomial(x: &CentralElement) -> Result<EstarPolynomial> {
    express_in_estar_basis(&x.harish_chandra()?)
}

/// The duality `W_n`: `P(H_1(n), …, H_n(n)) ↦ P(I_1(n), …, I_n(n))`.
pub fn duality_w(x: &CentralElement) -> Result<CentralElement> {
    let n = x.n();
    let poly = h_polynomial(x)?;
    let cache = ElementCache::global();
    let images = (1..=n).map(|k| Ok(cache.nazarov_umeda_i(k, n)?.into_body())).collect::<Result<Vec<_>>>()?;
    let body = poly.substitute(
        EnvelopingElement::one(),
        &images,
        |a, b| a.pbw_mul(b),
        |a, b| a + b,
        |a, c| a.scale(c),
        EnvelopingElement::zero(),
    )?;
    Ok(CentralElement::trusted(body, n, Provenance::Dual(Box::new(x.provenance().clone()))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::central::{capelli_h, nazarov_umeda_i, schur_element};
    use crate::combinatorics::Partition;

    #[test]
    fn generators_swap() {
        for k in 1..=2 {
            assert_eq!(duality_w(&capelli_h(k, 2).unwrap()).unwrap().body(), nazarov_umeda_i(k, 2).unwrap().body());
        }
        let h = capelli_h(2, 2).unwrap();
        assert_eq!(duality_w(&duality_w(&h).unwrap()).unwrap().body(), h.body());
    }

    #[test]
    fn conjugates_schur_elements() {
        let two: Partition = "2".parse().unwrap();
        let col = two.conjugate();
        assert_eq!(duality_w(&schur_element(&two, 2).unwrap()).unwrap().body(), schur_element(&col, 2).unwrap().body());
    }
}
