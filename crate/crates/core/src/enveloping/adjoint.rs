use super::{pbw_normal_form, supercommutator, EnvelopingElement, Generator, PbwOrder};
use crate::{Error, Result};

/// `ad(g)(x)`: the derivation extending `y ↦ [g, y]` to words.
///
/// `g` must be a proper generator, so no signs occur.
pub fn adjoint(g: Generator, x: &EnvelopingElement) -> Result<EnvelopingElement> {
    if !g.is_proper() {
        return Err(Error::NonProperSymbol(g.to_string()));
    }
    let mut out = EnvelopingElement::zero();
    for (w, c) in x.terms() {
        for k in 0..w.len() {
            for (b, cb) in supercommutator(g, w[k]).terms() {
                let mut v = w.clone();
                v[k] = b[0];
                out.add_term(v, c * cb);
            }
        }
    }
    Ok(out)
}

/// `true` when `ad(e_{ij})(x)` normalizes to zero for all `i, j <= n`.
pub fn is_central(x: &EnvelopingElement, n: u32) -> Result<bool> {
    for i in 1..=n {
        for j in 1..=n {
            let image = adjoint(Generator::proper(i, j), x)?;
            if !pbw_normal_form(&image, PbwOrder::Standard)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
