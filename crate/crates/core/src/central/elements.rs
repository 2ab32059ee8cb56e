use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::One;

use super::bitableaux::ImmanantForm;
use super::{capelli_immanant, devirtualize_terms, CentralElement, Provenance, VirtualPool};
use crate::combinatorics::{factorial, permutations, row_increasing, Partition};
use crate::enveloping::{bitableau_monomial, pbw_normal_form, EnvelopingElement, Generator, PbwOrder, Word};
use crate::superspace::Symbol;
use crate::{int, sign, Error, Rational, Result};

fn inverse_factorial(k: usize) -> Rational {
    Rational::new(BigInt::one(), BigInt::from(factorial(k)))
}

/// `Π_j 1/h_j!` for the multiplicities `h_j` of a weakly increasing tuple.
fn multiplicity_weight(idx: &[usize]) -> Rational {
    idx.iter()
        .chunk_by(|&&i| i)
        .into_iter()
        .fold(Rational::one(), |acc, (_, g)| acc * inverse_factorial(g.count()))
}

/// The Schur element
/// `S_λ(n) = (1/H(λ̃)) Σ_S [box S|box S]` over row-increasing `S` of shape `λ̃`.
pub fn schur_element(lambda: &Partition, n: usize) -> Result<CentralElement> {
    if lambda.len() > n {
        return Err(Error::Precondition(format!("S_{lambda}({n}) needs at most {n} parts")));
    }
    let shape = lambda.conjugate();
    let weight = Rational::new(BigInt::one(), BigInt::from(shape.hook_number()));
    let pool = VirtualPool::default();
    let (c, d) = (pool.coderuyts(&shape), pool.deruyts(&shape));
    let middle = [bitableau_monomial(&c, &d)?, bitableau_monomial(&d, &c)?].concat();
    let terms = row_increasing(&shape, n)
        .iter()
        .map(|s| Ok(([bitableau_monomial(s, &c)?, middle.clone(), bitableau_monomial(&c, s)?].concat(), weight.clone())))
        .collect::<Result<Vec<_>>>()?;
    let body = if lambda.is_empty() { EnvelopingElement::one() } else { devirtualize_terms(terms)? };
    Ok(CentralElement::trusted(body, n, Provenance::Schur(lambda.clone())))
}

/// `p(e_{i_k,γ}⋯e_{i_1,γ} e_{γ,i_1}⋯e_{γ,i_k})` for a single virtual `γ`.
fn star_row_word(idx: &[usize], virt: Symbol) -> Word {
    let left = idx.iter().rev().map(|&i| Generator::new(Symbol::proper(i as u32), virt));
    let right = idx.iter().map(|&i| Generator::new(virt, Symbol::proper(i as u32)));
    left.chain(right).collect()
}

/// The Capelli element `H_k(n) = Σ_{i_1<…<i_k} [i_k…i_1|i_1…i_k]`.
pub fn capelli_h(k: usize, n: usize) -> Result<CentralElement> {
    if k == 0 || k > n {
        return Err(Error::Precondition(format!("H_{k}({n}) needs 1 <= k <= n")));
    }
    let terms = (1..=n).combinations(k).map(|idx| (star_row_word(&idx, Symbol::alpha(1)), Rational::one())).collect();
    Ok(CentralElement::trusted(devirtualize_terms(terms)?, n, Provenance::CapelliH(k)))
}

/// The Nazarov-Umeda element
/// `I_k(n) = Σ_{i_1≤…≤i_k} (Π h_j!)^{-1} [i_k…i_1|i_1…i_k]^*`.
pub fn nazarov_umeda_i(k: usize, n: usize) -> Result<CentralElement> {
    if k == 0 {
        return Err(Error::Precondition("I_k(n) needs k >= 1".into()));
    }
    let terms = (1..=n)
        .combinations_with_replacement(k)
        .map(|idx| (star_row_word(&idx, Symbol::beta(1)), multiplicity_weight(&idx)))
        .collect();
    Ok(CentralElement::trusted(devirtualize_terms(terms)?, n, Provenance::NazarovUmedaI(k)))
}

/// Column determinant `Σ_σ sgn(σ) a_{σ(1),1} ⋯ a_{σ(k),k}`, unnormalized.
pub fn cdet(a: &[Vec<EnvelopingElement>]) -> EnvelopingElement {
    column_expansion(a, true)
}

/// Column permanent `Σ_σ a_{σ(1),1} ⋯ a_{σ(k),k}`, unnormalized.
pub fn cper(a: &[Vec<EnvelopingElement>]) -> EnvelopingElement {
    column_expansion(a, false)
}

fn column_expansion(a: &[Vec<EnvelopingElement>], signed: bool) -> EnvelopingElement {
    let mut out = EnvelopingElement::zero();
    for (perm, odd) in permutations(a.len()) {
        let mut term = EnvelopingElement::scalar(sign(signed && odd));
        for (col, &row) in perm.iter().enumerate() {
            term = &term * &a[row][col];
        }
        out = &out + &term;
    }
    out
}

fn entry(i: usize, j: usize, shift: i64) -> EnvelopingElement {
    &EnvelopingElement::generator(Generator::proper(i as u32, j as u32)) + &EnvelopingElement::scalar(int(shift))
}

/// `H_k(n)` as `Σ_{i_1<…<i_k} cdet[e_{i_r,i_c} + (k−r)δ_{rc}]`.
pub fn capelli_h_cdet(k: usize, n: usize) -> Result<EnvelopingElement> {
    if k == 0 || k > n {
        return Err(Error::Precondition(format!("H_{k}({n}) needs 1 <= k <= n")));
    }
    let mut out = EnvelopingElement::zero();
    for idx in (1..=n).combinations(k) {
        let a: Vec<Vec<EnvelopingElement>> = (0..k)
            .map(|r| (0..k).map(|c| entry(idx[r], idx[c], if r == c { (k - 1 - r) as i64 } else { 0 })).collect())
            .collect();
        out = &out + &cdet(&a);
    }
    pbw_normal_form(&out, PbwOrder::Standard)
}

/// `I_k(n)` as `Σ_{i_1≤…≤i_k} (Π h_j!)^{-1} cper[e_{i_r,i_c} − (k−c)[i_r = i_c]]`.
pub fn nazarov_umeda_i_cper(k: usize, n: usize) -> Result<EnvelopingElement> {
    if k == 0 {
        return Err(Error::Precondition("I_k(n) needs k >= 1".into()));
    }
    let mut out = EnvelopingElement::zero();
    for idx in (1..=n).combinations_with_replacement(k) {
        let a: Vec<Vec<EnvelopingElement>> = (0..k)
            .map(|r| {
                (0..k)
                    .map(|c| entry(idx[r], idx[c], if idx[r] == idx[c] { -((k - 1 - c) as i64) } else { 0 }))
                    .collect()
            })
            .collect();
        out = &out + &cper(&a).scale(&multiplicity_weight(&idx));
    }
    pbw_normal_form(&out, PbwOrder::Standard)
}

/// `(−1)^{h choose 2} Σ_{h_1+…+h_n=h} (Π h_i!)^{-1}
/// Cimm_μ[1^{h_1}⋯n^{h_n}; 1^{h_1}⋯n^{h_n}]` with `μ = λ`; this equals `S_λ(n)`.
pub fn schur_from_immanants(lambda: &Partition, n: usize) -> Result<EnvelopingElement> {
    if lambda.len() > n {
        return Err(Error::Precondition(format!("S_{lambda}({n}) needs at most {n} parts")));
    }
    diagonal_immanant_sum(lambda, n)
}

/// `(−1)^{h choose 2} Σ_{h_1+…+h_n=h} (Π h_i!)^{-1} Cimm_μ[1^{h_1}⋯n^{h_n}; 1^{h_1}⋯n^{h_n}]`.
pub fn diagonal_immanant_sum(mu: &Partition, n: usize) -> Result<EnvelopingElement> {
    let h = mu.size();
    if h == 0 {
        return Ok(EnvelopingElement::one());
    }
    let global = sign(h * (h - 1) / 2 % 2 == 1);
    let mut out = EnvelopingElement::zero();
    for idx in (1..=n).combinations_with_replacement(h) {
        let word: Vec<u32> = idx.iter().map(|&i| i as u32).collect();
        let cimm = capelli_immanant(mu, &word, &word, ImmanantForm::PermuteLeft, VirtualPool::default())?;
        out = &out + &cimm.scale(&(&global * multiplicity_weight(&idx)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn e(i: u32, j: u32) -> EnvelopingElement {
        EnvelopingElement::generator(Generator::proper(i, j))
    }

    fn trace(n: u32) -> EnvelopingElement {
        (1..=n).fold(EnvelopingElement::zero(), |acc, i| &acc + &e(i, i))
    }

    #[test]
    fn degree_one_elements() {
        for n in 1..=3 {
            assert_eq!(*capelli_h(1, n).unwrap().body(), trace(n as u32));
            assert_eq!(*nazarov_umeda_i(1, n).unwrap().body(), trace(n as u32));
            assert_eq!(*schur_element(&p("1"), n).unwrap().body(), trace(n as u32));
        }
        assert_eq!(*schur_element(&Partition::empty(), 2).unwrap().body(), EnvelopingElement::one());
    }

    #[test]
    fn capelli_h2() {
        let expected = &(&(&e(1, 1) + &EnvelopingElement::one()) * &e(2, 2)) - &(&e(2, 1) * &e(1, 2));
        let expected = pbw_normal_form(&expected, PbwOrder::Standard).unwrap();
        assert_eq!(*capelli_h(2, 2).unwrap().body(), expected);
        assert_eq!(capelli_h_cdet(2, 2).unwrap(), expected);
    }

    #[test]
    fn cdet_and_cper_forms() {
        for n in 1..=3 {
            for k in 1..=n {
                assert_eq!(*capelli_h(k, n).unwrap().body(), capelli_h_cdet(k, n).unwrap(), "H_{k}({n})");
            }
            for k in 1..=3 {
                assert_eq!(*nazarov_umeda_i(k, n).unwrap().body(), nazarov_umeda_i_cper(k, n).unwrap(), "I_{k}({n})");
            }
        }
    }

    #[test]
    fn schur_of_row_and_column() {
        for n in 1..=3 {
            for k in 1..=n {
                assert_eq!(schur_element(&Partition::column(k), n).unwrap().body(), capelli_h(k, n).unwrap().body());
            }
            for k in 1..=3 {
                assert_eq!(schur_element(&Partition::row(k), n).unwrap().body(), nazarov_umeda_i(k, n).unwrap().body());
            }
        }
    }

    #[test]
    fn centrality() {
        for n in 1..=3 {
            for size in 1..=3 {
                for lambda in Partition::all_of_size(size).into_iter().filter(|l| l.len() <= n) {
                    assert!(schur_element(&lambda, n).unwrap().is_central().unwrap(), "{lambda} n={n}");
                }
            }
        }
    }

    #[test]
    fn quantum_immanants() {
        for lambda in [p("1"), p("2"), p("1,1")] {
            let s = schur_element(&lambda, 2).unwrap();
            assert_eq!(*s.body(), schur_from_immanants(&lambda, 2).unwrap(), "{lambda}");
            let conj = lambda.conjugate();
            assert_eq!(*schur_element(&conj, 2).unwrap().body(), diagonal_immanant_sum(&conj, 2).unwrap());
        }
    }

    #[test]
    fn preconditions() {
        assert!(capelli_h(3, 2).is_err());
        assert!(capelli_h(0, 2).is_err());
        assert!(nazarov_umeda_i(0, 2).is_err());
        assert!(schur_element(&p("1,1,1"), 2).is_err());
    }
}
