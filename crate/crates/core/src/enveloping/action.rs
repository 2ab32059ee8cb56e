use rayon::prelude::*;

use super::{EnvelopingElement, Generator};
use crate::superspace::SuperPolynomial;

/// `ρ(w)(p)` for a single word: the last factor acts first.
pub fn act_word(word: &[Generator], p: &SuperPolynomial) -> SuperPolynomial {
    let mut q = p.clone();
    for g in word.iter().rev() {
        if q.is_zero() {
            break;
        }
        q = q.superpolarize(g.row, g.col);
    }
    q
}

/// `ρ(x)(p)`, each generator `e_{a,b}` acting as the superpolarization
/// `D^l_{a,b}`.
pub fn act(x: &EnvelopingElement, p: &SuperPolynomial) -> SuperPolynomial {
    let terms: Vec<_> = x.terms().collect();
    terms
        .par_iter()
        .map(|(w, c)| act_word(w, p).scale(c))
        .reduce(SuperPolynomial::zero, |a, b| &a + &b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn var(s: &str, j: u32) -> SuperPolynomial {
        SuperPolynomial::variable(s.parse().unwrap(), j)
    }

    fn g(s: &str) -> Generator {
        s.parse().unwrap()
    }

    #[test]
    fn polarization_action() {
        let x = EnvelopingElement::generator(Generator::proper(1, 2));
        assert_eq!(act(&x, &var("2", 1)), var("1", 1));
        let two = EnvelopingElement::from_word(vec![g("e[1,a1]"), g("e[a1,3]")], crate::int(1));
        assert_eq!(act(&two, &var("3", 1)), var("1", 1));
        assert!(act(&x, &SuperPolynomial::zero()).is_zero());
    }

    #[test]
    fn representation_respects_brackets() {
        // e12 e21 - e21 e12 acts as e11 - e22.
        let p = &(&var("1", 1) * &var("2", 2)) + &(&var("2", 1) * &var("2", 3));
        let e = |i, j| EnvelopingElement::generator(Generator::proper(i, j));
        let lhs = &(&e(1, 2) * &e(2, 1)) - &(&e(2, 1) * &e(1, 2));
        let rhs = &e(1, 1) - &e(2, 2);
        assert_eq!(act(&lhs, &p), act(&rhs, &p));
    }
}
