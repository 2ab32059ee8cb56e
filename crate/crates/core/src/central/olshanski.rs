use super::{h_polynomial, CentralElement, ElementCache, Provenance};
use crate::enveloping::{pbw_normal_form, EnvelopingElement, PbwOrder};
use crate::{Error, Result};

/// Splits `x ∈ ζ(n+1)` into the part kept by the Olshanski projection and the
/// part in the left ideal generated by the `e_{i,n+1}`, both in the order
/// with second index `n+1` rightmost.
pub fn olshanski_split(x: &CentralElement) -> Result<(EnvelopingElement, EnvelopingElement)> {
    let m = x.n() as u32;
    if m == 0 {
        return Err(Error::Precondition("cannot project from U(gl(0))".into()));
    }
    let ordered = pbw_normal_form(x.body(), PbwOrder::ColumnLast(m))?;
    let mut kept = EnvelopingElement::zero();
    let mut dropped = EnvelopingElement::zero();
    for (w, c) in ordered.terms() {
        if w.iter().any(|g| g.col.index == m) {
            dropped.add_term(w.clone(), c.clone());
        } else if w.iter().any(|g| g.row.index == m) {
            return Err(Error::OlshanskiSurvivor(m as usize));
        } else {
            kept.add_term(w.clone(), c.clone());
        }
    }
    Ok((kept, dropped))
}

/// The Olshanski projection `ζ(n+1) → ζ(n)`.
pub fn olshanski_project(x: &CentralElement) -> Result<CentralElement> {
    let (kept, _) = olshanski_split(x)?;
    let body = pbw_normal_form(&kept, PbwOrder::Standard)?;
    Ok(CentralElement::trusted(body, x.n() - 1, Provenance::Projected(Box::new(x.provenance().clone()))))
}

/// The embedding `ζ(n) → ζ(n+1)` sending the polynomial in `H_1(n), …, H_n(n)`
/// representing `x` to the same polynomial in `H_k(n+1)`.
pub fn embed(x: &CentralElement) -> Result<CentralElement> {
    let n = x.n();
    let poly = h_polynomial(x)?;
    let cache = ElementCache::global();
    let images = (1..=n).map(|k| Ok(cache.capelli_h(k, n + 1)?.into_body())).collect::<Result<Vec<_>>>()?;
    let body = poly.substitute(
        EnvelopingElement::one(),
        &images,
        |a, b| a.pbw_mul(b),
        |a, b| a + b,
        |a, c| a.scale(c),
        EnvelopingElement::zero(),
    )?;
    Ok(CentralElement::trusted(body, n + 1, Provenance::Embedded(Box::new(x.provenance().clone()))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::central::{capelli_bitableau, capelli_h, nazarov_umeda_i, schur_element, VirtualPool};
    use crate::combinatorics::Partition;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn capelli_elements_project() {
        let h24 = capelli_h(2, 4).unwrap();
        assert_eq!(olshanski_project(&h24).unwrap().body(), capelli_h(2, 3).unwrap().body());
        let (_, dropped) = olshanski_split(&h24).unwrap();
        let mut expected = EnvelopingElement::zero();
        for i in 1..=3 {
            let s = format!("4 {i}").parse().unwrap();
            let t = format!("{i} 4").parse().unwrap();
            expected = &expected + &capelli_bitableau(&s, &t, VirtualPool::default()).unwrap();
        }
        assert_eq!(pbw_normal_form(&dropped, PbwOrder::Standard).unwrap(), expected);
        for n in 1..=2 {
            assert!(olshanski_project(&capelli_h(n + 1, n + 1).unwrap()).unwrap().body().is_zero());
        }
    }

    #[test]
    fn schur_and_permanental_elements_project() {
        assert_eq!(olshanski_project(&schur_element(&p("2"), 3).unwrap()).unwrap().body(), schur_element(&p("2"), 2).unwrap().body());
        assert_eq!(olshanski_project(&nazarov_umeda_i(2, 3).unwrap()).unwrap().body(), nazarov_umeda_i(2, 2).unwrap().body());
    }

    #[test]
    fn embedding() {
        assert_eq!(embed(&capelli_h(2, 2).unwrap()).unwrap().body(), capelli_h(2, 3).unwrap().body());
        assert_eq!(embed(&schur_element(&p("1"), 2).unwrap()).unwrap().body(), schur_element(&p("1"), 3).unwrap().body());
        let x = capelli_h(1, 2).unwrap().mul(&nazarov_umeda_i(2, 2).unwrap()).unwrap();
        assert_eq!(olshanski_project(&embed(&x).unwrap()).unwrap().body(), x.body());
    }

    #[test]
    fn rejects_non_centralizer_input() {
        let x = CentralElement::trusted(
            EnvelopingElement::generator(crate::Generator::proper(2, 1)),
            2,
            Provenance::User,
        );
        assert_eq!(olshanski_project(&x), Err(Error::OlshanskiSurvivor(2)));
    }
}
