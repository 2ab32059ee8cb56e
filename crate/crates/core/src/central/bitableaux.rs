use itertools::Itertools;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::{devirtualize_terms, VirtualPool};
use crate::combinatorics::{cycle_type, permutations, sym_character, Partition, Tableau};
use crate::enveloping::{bitableau_monomial, EnvelopingElement, Word};
use crate::superspace::Symbol;
use crate::{int, sign, Error, Rational, Result};

fn check_pair(s: &Tableau, t: &Tableau) -> Result<()> {
    if s.shape() != t.shape() {
        return Err(Error::ShapeMismatch { left: s.shape().to_string(), right: t.shape().to_string() });
    }
    if let Some(x) = s.word().iter().chain(t.word()).find(|x| !x.is_proper()) {
        return Err(Error::NonProperSymbol(x.to_string()));
    }
    Ok(())
}

fn concat(parts: &[Word]) -> Word {
    parts.concat()
}

fn capelli_word(s: &Tableau, t: &Tableau, pool: VirtualPool) -> Result<Word> {
    let c = pool.coderuyts(s.shape());
    Ok(concat(&[bitableau_monomial(s, &c)?, bitableau_monomial(&c, t)?]))
}

fn young_capelli_word(s: &Tableau, t: &Tableau, pool: VirtualPool) -> Result<Word> {
    let c = pool.coderuyts(s.shape());
    let d = pool.deruyts(s.shape());
    Ok(concat(&[bitableau_monomial(s, &c)?, bitableau_monomial(&c, &d)?, bitableau_monomial(&d, t)?]))
}

fn double_young_capelli_word(s: &Tableau, t: &Tableau, pool: VirtualPool) -> Result<Word> {
    let c = pool.coderuyts(s.shape());
    let d = pool.deruyts(s.shape());
    Ok(concat(&[
        bitableau_monomial(s, &c)?,
        bitableau_monomial(&c, &d)?,
        bitableau_monomial(&d, &c)?,
        bitableau_monomial(&c, t)?,
    ]))
}

/// The Capelli bitableau `[S|T] = p(e_{S,C*} e_{C*,T})`.
pub fn capelli_bitableau(s: &Tableau, t: &Tableau, pool: VirtualPool) -> Result<EnvelopingElement> {
    check_pair(s, t)?;
    devirtualize_terms(vec![(capelli_word(s, t, pool)?, Rational::one())])
}

/// The Young-Capelli bitableau `[S|box T] = p(e_{S,C*} e_{C*,D*} e_{D*,T})`.
pub fn young_capelli(s: &Tableau, t: &Tableau, pool: VirtualPool) -> Result<EnvelopingElement> {
    check_pair(s, t)?;
    devirtualize_terms(vec![(young_capelli_word(s, t, pool)?, Rational::one())])
}

/// The double Young-Capelli bitableau
/// `[box S|box T] = p(e_{S,C*} e_{C*,D*} e_{D*,C*} e_{C*,T})`.
pub fn double_young_capelli(s: &Tableau, t: &Tableau, pool: VirtualPool) -> Result<EnvelopingElement> {
    check_pair(s, t)?;
    devirtualize_terms(vec![(double_young_capelli_word(s, t, pool)?, Rational::one())])
}

/// Tableaux obtained from `t` by permuting the entries of each column,
/// with repetitions.
fn column_permuted(t: &Tableau) -> Vec<Tableau> {
    let columns = t.columns();
    columns
        .iter()
        .map(|col| (0..col.len()).permutations(col.len()).collect::<Vec<_>>())
        .multi_cartesian_product()
        .map(|perms| {
            let rows: Vec<Vec<Symbol>> = t
                .rows()
                .iter()
                .enumerate()
                .map(|(r, row)| (0..row.len()).map(|c| columns[c][perms[c][r]]).collect())
                .collect();
            Tableau::from_rows(rows).expect("same shape")
        })
        .collect()
}

/// Tableaux obtained from `t` by permuting each row, with the parity of the
/// combined permutation.
fn row_permuted(t: &Tableau) -> Vec<(Tableau, bool)> {
    let rows = t.rows();
    rows.iter()
        .map(|row| permutations(row.len()))
        .multi_cartesian_product()
        .map(|perms| {
            let odd = perms.iter().fold(false, |acc, (_, o)| acc ^ o);
            let permuted = rows.iter().zip(&perms).map(|(row, (p, _))| p.iter().map(|&i| row[i]).collect()).collect();
            (Tableau::from_rows(permuted).expect("same shape"), odd)
        })
        .collect()
}

/// `Σ [S|T̄]` over all column permutations `T̄` of `T`.
pub fn young_capelli_expanded(s: &Tableau, t: &Tableau, pool: VirtualPool) -> Result<EnvelopingElement> {
    check_pair(s, t)?;
    let terms = column_permuted(t)
        .iter()
        .map(|tbar| Ok((capelli_word(s, tbar, pool)?, Rational::one())))
        .collect::<Result<Vec<_>>>()?;
    devirtualize_terms(terms)
}

/// `(−1)^{h choose 2} Σ_σ (−1)^{|σ|} [S|box T^σ]` over row permutations `σ`,
/// with `h = |λ|`.
pub fn double_young_capelli_expanded(s: &Tableau, t: &Tableau, pool: VirtualPool) -> Result<EnvelopingElement> {
    check_pair(s, t)?;
    let h = s.shape().size();
    let global = h * h.saturating_sub(1) / 2 % 2 == 1;
    let terms = row_permuted(t)
        .iter()
        .map(|(ts, odd)| Ok((young_capelli_word(s, ts, pool)?, sign(global ^ odd))))
        .collect::<Result<Vec<_>>>()?;
    devirtualize_terms(terms)
}

fn column(symbols: &[Symbol]) -> Tableau {
    Tableau::from_rows(symbols.iter().map(|&x| vec![x]).collect()).expect("column shape")
}

fn column_word(left: &[Symbol], right: &[Symbol], pool: VirtualPool) -> Result<Word> {
    capelli_word(&column(left), &column(right), pool)
}

/// The column Capelli bitableau with the given left and right columns.
pub fn column_capelli(left: &[Symbol], right: &[Symbol], pool: VirtualPool) -> Result<EnvelopingElement> {
    if left.len() != right.len() {
        return Err(Error::SizeMismatch(format!("columns of length {} and {}", left.len(), right.len())));
    }
    let (l, r) = (column(left), column(right));
    check_pair(&l, &r)?;
    capelli_bitableau(&l, &r, pool)
}

/// Expansion of `[S|T]` into column Capelli bitableaux, permuting within the
/// rows of `S` (or of `T` when `permute_right`).
pub fn column_laplace_expansion(
    s: &Tableau,
    t: &Tableau,
    permute_right: bool,
    pool: VirtualPool,
) -> Result<EnvelopingElement> {
    check_pair(s, t)?;
    let (moving, fixed) = if permute_right { (t, s) } else { (s, t) };
    let fixed_word = fixed.word().to_vec();
    let terms = row_permuted(moving)
        .into_iter()
        .map(|(m, odd)| {
            let w = if permute_right {
                column_word(&fixed_word, m.word(), pool)?
            } else {
                column_word(m.word(), &fixed_word, pool)?
            };
            Ok((w, sign(odd)))
        })
        .collect::<Result<Vec<_>>>()?;
    devirtualize_terms(terms)
}

/// Which index sequence the symmetric group permutes in a Capelli immanant.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ImmanantForm {
    #[default]
    PermuteLeft,
    PermuteRight,
}

/// The Capelli immanant `Cimm_μ[i; j] = Σ_σ χ^μ(σ) [i_σ | j]` in column
/// Capelli bitableaux.
pub fn capelli_immanant(
    mu: &Partition,
    left: &[u32],
    right: &[u32],
    form: ImmanantForm,
    pool: VirtualPool,
) -> Result<EnvelopingElement> {
    let h = mu.size();
    if left.len() != h || right.len() != h {
        return Err(Error::SizeMismatch(format!(
            "immanant of shape {mu} needs words of length {h}, got {} and {}",
            left.len(),
            right.len()
        )));
    }
    let l: Vec<Symbol> = left.iter().map(|&i| Symbol::proper(i)).collect();
    let r: Vec<Symbol> = right.iter().map(|&i| Symbol::proper(i)).collect();
    let mut terms = Vec::new();
    for (perm, _) in permutations(h) {
        let chi = sym_character(mu, &cycle_type(&perm))?;
        if chi == 0 {
            continue;
        }
        let w = match form {
            ImmanantForm::PermuteLeft => column_word(&perm.iter().map(|&k| l[k]).collect::<Vec<_>>(), &r, pool)?,
            ImmanantForm::PermuteRight => column_word(&l, &perm.iter().map(|&k| r[k]).collect::<Vec<_>>(), pool)?,
        };
        terms.push((w, int(chi)));
    }
    devirtualize_terms(terms)
}
