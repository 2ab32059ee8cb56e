use super::ShiftedPolynomial;
use crate::enveloping::{pbw_normal_form, EnvelopingElement, PbwOrder};
use crate::{Error, Result};

/// The Harish-Chandra image: the purely Cartan part of the standard PBW form
/// with `e_{ii} ↦ x_i`.
pub fn harish_chandra(x: &EnvelopingElement, n: usize) -> Result<ShiftedPolynomial> {
    let normal;
    let x = if x.is_pbw_canonical() {
        x
    } else {
        normal = pbw_normal_form(x, PbwOrder::Standard)?;
        &normal
    };
    if x.max_index() as usize > n {
        return Err(Error::Precondition(format!("element uses indices beyond n = {n}")));
    }
    let mut out = ShiftedPolynomial::zero(n);
    for (word, c) in x.terms() {
        if word.iter().all(|g| g.row == g.col) {
            let mut e = vec![0; n];
            for g in word {
                e[g.row.index as usize - 1] += 1;
            }
            out.add_term(e, c.clone());
        }
    }
    if !out.is_shifted_symmetric() {
        return Err(Error::NotShiftedSymmetric);
    }
    Ok(out)
}
