//! Standard-basis coordinates by exact linear algebra.

use std::collections::BTreeMap;

use super::{bitableau, SuperMonomial, SuperPolynomial, Symbol, SymbolClass};
use crate::combinatorics::{standard_proper, Partition, Tableau};
use crate::{linalg, Error, Rational, Result};

fn as_places(t: &Tableau) -> Tableau {
    let entries = t.word().iter().map(|s| Symbol::place(s.index)).collect();
    Tableau::new(t.shape().clone(), entries).expect("same shape")
}

/// Standard bitableaux `(S|T)` of degree `h` in `C[M_{n,d}]`: rows strictly
/// increasing and columns weakly increasing on both sides.
pub fn standard_bitableaux(h: usize, n: usize, d: usize) -> Vec<(Tableau, Tableau)> {
    let mut out = Vec::new();
    for lambda in Partition::all_of_size(h) {
        let left = standard_proper(&lambda, n);
        let right = standard_proper(&lambda, d);
        for s in &left {
            for t in &right {
                out.push((s.clone(), as_places(t)));
            }
        }
    }
    out
}

type Content = (Vec<(Symbol, usize)>, Vec<(u32, usize)>);

fn content_of_monomial(m: &SuperMonomial) -> Content {
    let mut rows: BTreeMap<Symbol, usize> = BTreeMap::new();
    let mut places: BTreeMap<u32, usize> = BTreeMap::new();
    for v in m.variables() {
        *rows.entry(v.symbol).or_default() += 1;
        *places.entry(v.place).or_default() += 1;
    }
    (rows.into_iter().collect(), places.into_iter().collect())
}

fn content_of_bitableau(s: &Tableau, t: &Tableau) -> Content {
    let mut rows: BTreeMap<Symbol, usize> = BTreeMap::new();
    let mut places: BTreeMap<u32, usize> = BTreeMap::new();
    for x in s.word() {
        *rows.entry(*x).or_default() += 1;
    }
    for x in t.word() {
        *places.entry(x.index).or_default() += 1;
    }
    (rows.into_iter().collect(), places.into_iter().collect())
}

fn to_vector(p: &SuperPolynomial) -> BTreeMap<SuperMonomial, Rational> {
    p.terms().map(|(m, c)| (m.clone(), c.clone())).collect()
}

/// Coordinates of a multihomogeneous `p ∈ C[M_{n,d}]` in the basis of
/// standard bitableaux with the same content.
pub fn straighten(p: &SuperPolynomial, n: usize, d: usize) -> Result<Vec<((Tableau, Tableau), Rational)>> {
    if !p.is_proper() {
        return Err(Error::Precondition("straightening needs a proper polynomial".into()));
    }
    let Some((first, _)) = p.terms().next() else { return Ok(Vec::new()) };
    let content = content_of_monomial(first);
    if p.terms().any(|(m, _)| content_of_monomial(m) != content) {
        return Err(Error::Precondition("polynomial is not multihomogeneous".into()));
    }
    let basis: Vec<(Tableau, Tableau)> = standard_bitableaux(first.degree(), n, d)
        .into_iter()
        .filter(|(s, t)| content_of_bitableau(s, t) == content)
        .collect();
    let columns: Vec<_> = basis
        .iter()
        .map(|(s, t)| bitableau(s, t).map(|b| to_vector(&b)))
        .collect::<Result<_>>()?;
    let coords = linalg::solve_sparse(&columns, &to_vector(p))?;
    Ok(basis.into_iter().zip(coords).filter(|(_, c)| *c != Rational::from_integer(0.into())).collect())
}

/// Dimension of the span of all `(X|D^P_λ)` with `X` a filling of `λ` by
/// `{1..n}`.
pub fn schur_module_dimension(lambda: &Partition, n: usize) -> Result<usize> {
    let h = lambda.size();
    let places = Tableau::place_deruyts(lambda);
    let mut vectors = Vec::new();
    let total = n.pow(h as u32);
    for code in 0..total {
        let mut c = code;
        let entries = (0..h)
            .map(|_| {
                let i = c % n;
                c /= n;
                Symbol::new(SymbolClass::Proper, i as u32 + 1)
            })
            .collect();
        let x = Tableau::new(lambda.clone(), entries)?;
        let b = bitableau(&x, &places)?;
        if !b.is_zero() {
            vectors.push(to_vector(&b));
        }
    }
    Ok(linalg::rank_sparse(&vectors))
}
