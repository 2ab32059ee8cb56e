use super::{SuperPolynomial, SuperVariable, Symbol, SymbolClass};
use crate::combinatorics::{Partition, Tableau};
use crate::{sign, Error, Result};

const GAMMA: Symbol = Symbol::gamma(1);

/// The biproduct `(ω|ϖ) = D_{z_1,γ} ⋯ D_{z_p,γ}((γ|j_1) ⋯ (γ|j_q))`, zero
/// unless `p = q`.
pub fn biproduct(omega: &[Symbol], places: &[u32]) -> SuperPolynomial {
    if omega.len() != places.len() {
        return SuperPolynomial::zero();
    }
    let mut p = SuperPolynomial::monomial(
        places.iter().map(|&j| SuperVariable::new(GAMMA, j)).collect(),
    );
    for &z in omega.iter().rev() {
        if p.is_zero() {
            break;
        }
        p = p.superpolarize(z, GAMMA);
    }
    p
}

/// Z2-degree of a word of symbols.
pub fn word_is_odd(word: &[Symbol]) -> bool {
    word.iter().filter(|s| s.is_odd()).count() % 2 == 1
}

fn places_of(row: &[Symbol]) -> Result<Vec<u32>> {
    row.iter()
        .map(|s| match s.class {
            SymbolClass::Place => Ok(s.index),
            _ => Err(Error::Precondition(format!("{s} is not a place"))),
        })
        .collect()
}

/// The bitableau `(S|T)`, zero when the shapes differ.
///
/// `T` must be filled with places.
pub fn bitableau(s: &Tableau, t: &Tableau) -> Result<SuperPolynomial> {
    let t_rows = t.rows().into_iter().map(places_of).collect::<Result<Vec<_>>>()?;
    if s.shape() != t.shape() {
        return Ok(SuperPolynomial::zero());
    }
    let mut out = SuperPolynomial::one();
    let mut odd = false;
    let mut places_odd = false;
    for (omega, varpi) in s.rows().into_iter().zip(&t_rows) {
        odd ^= word_is_odd(omega) && places_odd;
        places_odd ^= varpi.len() % 2 == 1;
        out = &out * &biproduct(omega, varpi);
        if out.is_zero() {
            return Ok(out);
        }
    }
    Ok(out.scale(&sign(odd)))
}

/// The vector `(D_λ|D^P_λ)`; it is a highest weight vector of weight `λ̃`
/// in `C[M_{n,d}]`.
pub fn highest_weight_vector(lambda: &Partition, n: usize, d: usize) -> Result<SuperPolynomial> {
    if lambda.first() > n || lambda.first() > d {
        return Err(Error::Precondition(format!(
            "highest weight vector of shape {lambda} needs n, d >= {}",
            lambda.first()
        )));
    }
    bitableau(&Tableau::deruyts(lambda), &Tableau::place_deruyts(lambda))
}

/// `d^l_{z,z'}` on a word of `Super[A_0 ∪ A_1 ∪ L]`: signed list of words.
pub fn polarize_word(z: Symbol, zp: Symbol, word: &[Symbol]) -> Vec<(Vec<Symbol>, bool)> {
    let d_odd = z.is_odd() != zp.is_odd();
    let mut prefix_odd = false;
    let mut out = Vec::new();
    for (k, &x) in word.iter().enumerate() {
        if x == zp {
            let mut w = word.to_vec();
            w[k] = z;
            out.push((w, d_odd && prefix_odd));
        }
        prefix_odd ^= x.is_odd();
    }
    out
}

/// Row-by-row expansion of `e_{z,z'} · (S|T)`:
/// `Σ_s (-1)^{(|z|+|z'|) ε_s} (ω_1, …, d(ω_s), …, ω_p | T)` with
/// `ε_s = |ω_1| + ⋯ + |ω_{s-1}|`.
pub fn polarize_bitableau(z: Symbol, zp: Symbol, s: &Tableau, t: &Tableau) -> Result<SuperPolynomial> {
    let d_odd = z.is_odd() != zp.is_odd();
    let rows: Vec<Vec<Symbol>> = s.rows().into_iter().map(<[Symbol]>::to_vec).collect();
    let mut out = SuperPolynomial::zero();
    let mut eps = false;
    for (r, row) in rows.iter().enumerate() {
        for (w, odd) in polarize_word(z, zp, row) {
            let mut new_rows = rows.clone();
            new_rows[r] = w;
            let term = bitableau(&Tableau::from_rows(new_rows)?, t)?;
            out = &out + &term.scale(&sign(odd ^ (d_odd && eps)));
        }
        eps ^= word_is_odd(row);
    }
    Ok(out)
}

/// Subsets of `0..n` of size `k` as increasing index lists.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    (0..n).combinations(k).collect()
}

/// Parity of the shuffle that brings `chosen ++ rest` back to increasing
/// order, counting only the transpositions for which `odd` holds on both
/// elements.
fn shuffle_odd(chosen: &[usize], rest: &[usize], odd: impl Fn(usize) -> bool) -> bool {
    let mut parity = false;
    for &a in chosen {
        for &b in rest {
            if b < a && odd(a) && odd(b) {
                parity = !parity;
            }
        }
    }
    parity
}

/// Right-hand side of the Laplace expansion splitting the place word:
/// `Σ (-1)^{|ϖ_(1)||ω_2|} (ω_1|ϖ_(1))(ω_2|ϖ_(2))`, the coproduct taken in the
/// exterior algebra of places.
pub fn laplace_split_places(omega1: &[Symbol], omega2: &[Symbol], places: &[u32]) -> SuperPolynomial {
    let mut out = SuperPolynomial::zero();
    if omega1.len() + omega2.len() != places.len() {
        return out;
    }
    let w2_odd = word_is_odd(omega2);
    for chosen in subsets(places.len(), omega1.len()) {
        let rest: Vec<usize> = (0..places.len()).filter(|i| !chosen.contains(i)).collect();
        let p1: Vec<u32> = chosen.iter().map(|&i| places[i]).collect();
        let p2: Vec<u32> = rest.iter().map(|&i| places[i]).collect();
        let odd = shuffle_odd(&chosen, &rest, |_| true) ^ (p1.len() % 2 == 1 && w2_odd);
        let term = &biproduct(omega1, &p1) * &biproduct(omega2, &p2);
        out = &out + &term.scale(&sign(odd));
    }
    out
}

/// Right-hand side of the Laplace expansion splitting the symbol word:
/// `Σ (-1)^{|ϖ_1||ω_(2)|} (ω_(1)|ϖ_1)(ω_(2)|ϖ_2)`, the coproduct taken in the
/// supersymmetric algebra.
pub fn laplace_split_symbols(omega: &[Symbol], places1: &[u32], places2: &[u32]) -> SuperPolynomial {
    let mut out = SuperPolynomial::zero();
    if places1.len() + places2.len() != omega.len() {
        return out;
    }
    for chosen in subsets(omega.len(), places1.len()) {
        let rest: Vec<usize> = (0..omega.len()).filter(|i| !chosen.contains(i)).collect();
        let w1: Vec<Symbol> = chosen.iter().map(|&i| omega[i]).collect();
        let w2: Vec<Symbol> = rest.iter().map(|&i| omega[i]).collect();
        let odd = shuffle_odd(&chosen, &rest, |i| omega[i].is_odd())
            ^ (places1.len() % 2 == 1 && word_is_odd(&w2));
        let term = &biproduct(&w1, places1) * &biproduct(&w2, places2);
        out = &out + &term.scale(&sign(odd));
    }
    out
}

/// Checks both Laplace expansions of `(ω_1ω_2|ϖ)`: the place word is split
/// after `|ω_1|` letters for the second one.
pub fn laplace_check(omega1: &[Symbol], omega2: &[Symbol], places: &[u32]) -> bool {
    let omega: Vec<Symbol> = omega1.iter().chain(omega2).copied().collect();
    let lhs = biproduct(&omega, places);
    let by_places = laplace_split_places(omega1, omega2, places);
    let cut = omega1.len().min(places.len());
    let by_symbols = laplace_split_symbols(&omega, &places[..cut], &places[cut..]);
    lhs == by_places && lhs == by_symbols
}

/// `(-1)^{C(p,2)} det[(i_r|j_s)]` computed by the Leibniz formula.
pub fn signed_minor(rows: &[Symbol], places: &[u32]) -> SuperPolynomial {
    let p = rows.len();
    let mut out = SuperPolynomial::zero();
    for (perm, odd) in crate::combinatorics::permutations(p) {
        let vars = (0..p).map(|r| SuperVariable::new(rows[r], places[perm[r]])).collect();
        out = &out + &SuperPolynomial::monomial(vars).scale(&sign(odd));
    }
    out.scale(&sign(p * p.saturating_sub(1) / 2 % 2 == 1))
}
