use itertools::Itertools;

use super::ShiftedPolynomial;
use crate::combinatorics::{permutations, rssyt, Partition};
use crate::{int, Error, Result};

/// `e*_k(x_1, …, x_n) = Σ_{i_1<…<i_k} (x_{i_1}+k−1)(x_{i_2}+k−2)⋯x_{i_k}`.
pub fn e_star(k: usize, n: usize) -> Result<ShiftedPolynomial> {
    if k > n {
        return Err(Error::Precondition(format!("e*_{k} needs k <= n = {n}")));
    }
    let mut out = ShiftedPolynomial::zero(n);
    for idx in (1..=n).combinations(k) {
        let term = idx
            .iter()
            .enumerate()
            .fold(ShiftedPolynomial::one(n), |acc, (r, &i)| &acc * &ShiftedPolynomial::var_plus(n, i, (k - 1 - r) as i64));
        out = &out + &term;
    }
    Ok(out)
}

/// `h*_k(x_1, …, x_n) = Σ_{i_1≤…≤i_k} (x_{i_1}−k+1)(x_{i_2}−k+2)⋯x_{i_k}`.
pub fn h_star(k: usize, n: usize) -> ShiftedPolynomial {
    let mut out = ShiftedPolynomial::zero(n);
    for idx in (1..=n).combinations_with_replacement(k) {
        let term = idx
            .iter()
            .enumerate()
            .fold(ShiftedPolynomial::one(n), |acc, (r, &i)| &acc * &ShiftedPolynomial::var_plus(n, i, r as i64 + 1 - k as i64));
        out = &out + &term;
    }
    out
}

/// Falling factorial `(p)_m = p(p−1)⋯(p−m+1)`.
fn falling(p: &ShiftedPolynomial, m: usize) -> ShiftedPolynomial {
    (0..m).fold(ShiftedPolynomial::one(p.n()), |acc, r| &acc * &(p - &ShiftedPolynomial::constant(p.n(), int(r as i64))))
}

fn determinant(matrix: &[Vec<ShiftedPolynomial>], n: usize) -> ShiftedPolynomial {
    let mut out = ShiftedPolynomial::zero(n);
    for (perm, odd) in permutations(matrix.len()) {
        let mut term = if odd { -&ShiftedPolynomial::one(n) } else { ShiftedPolynomial::one(n) };
        for (r, &c) in perm.iter().enumerate() {
            term = &term * &matrix[r][c];
        }
        out = &out + &term;
    }
    out
}

/// `s*_λ` as the ratio `det[(x_i+n−i)_{λ_j+n−j}] / det[(x_i+n−i)_{n−j}]`.
pub fn s_star(lambda: &Partition, n: usize) -> Result<ShiftedPolynomial> {
    if lambda.len() > n {
        return Err(Error::Precondition(format!("s*_{lambda} needs at most {n} parts")));
    }
    let shifted: Vec<ShiftedPolynomial> = (1..=n).map(|i| ShiftedPolynomial::var_plus(n, i, (n - i) as i64)).collect();
    let matrix = |exp: &dyn Fn(usize) -> usize| -> Vec<Vec<ShiftedPolynomial>> {
        shifted.iter().map(|y| (0..n).map(|j| falling(y, exp(j))).collect()).collect()
    };
    let numerator = determinant(&matrix(&|j| lambda.part(j) + n - 1 - j), n);
    let denominator = determinant(&matrix(&|j| n - 1 - j), n);
    numerator.div_exact(&denominator)
}

/// `s*_λ` as `Σ_T Π_{s∈λ} (x_{T(s)} − c(s))` over reverse semistandard `T`.
pub fn s_star_rssyt(lambda: &Partition, n: usize) -> ShiftedPolynomial {
    let mut out = ShiftedPolynomial::zero(n);
    for t in rssyt(lambda, n) {
        let mut term = ShiftedPolynomial::one(n);
        for cell in lambda.cells() {
            let i = t.get(cell).expect("cell in shape").index as usize;
            term = &term * &ShiftedPolynomial::var_plus(n, i, -cell.content());
        }
        out = &out + &term;
    }
    out
}

/// Whether the Jacobian of `e*_1, …, e*_n` has full rank at `point`.
pub fn jacobian_full_rank(n: usize, point: &[crate::Rational]) -> Result<bool> {
    let mut rows = Vec::with_capacity(n);
    for k in 1..=n {
        let p = e_star(k, n)?;
        let row = (0..n)
            .map(|i| {
                let mut d = ShiftedPolynomial::zero(n);
                for (e, c) in p.terms() {
                    if e[i] > 0 {
                        let mut e2 = e.clone();
                        e2[i] -= 1;
                        d.add_term(e2, c * int(e[i] as i64));
                    }
                }
                d.eval(point)
            })
            .collect();
        rows.push(row);
    }
    Ok(crate::linalg::rank(&rows) == n)
}
