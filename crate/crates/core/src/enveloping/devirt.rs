use std::collections::BTreeMap;

use num_traits::Zero;

use super::{pbw_normal_form, supercommutator, EnvelopingElement, Generator, PbwOrder, Word};
use crate::superspace::Symbol;
use crate::{sign, Error, Rational, Result};

/// `true` when some right subword annihilates a virtual symbol more often
/// than the factors strictly to its right create it.
pub fn is_irregular(word: &[Generator]) -> bool {
    let mut created: Vec<(Symbol, usize)> = Vec::new();
    let mut annihilated: Vec<(Symbol, usize)> = Vec::new();
    let bump = |counts: &mut Vec<(Symbol, usize)>, s: Symbol| -> usize {
        match counts.iter_mut().find(|(x, _)| *x == s) {
            Some((_, c)) => {
                *c += 1;
                *c
            }
            None => {
                counts.push((s, 1));
                1
            }
        }
    };
    for g in word.iter().rev() {
        if g.col.is_virtual() {
            let a = bump(&mut annihilated, g.col);
            let c = created.iter().find(|(x, _)| *x == g.col).map_or(0, |(_, c)| *c);
            if a > c {
                return true;
            }
        }
        if g.row.is_virtual() {
            bump(&mut created, g.row);
        }
    }
    false
}

/// Pending words keyed by `(length, distance of the rightmost annihilator
/// from the right end, word)`; both rewriting moves strictly decrease the
/// first two components.
struct Queue {
    pending: BTreeMap<(usize, usize, Word), Rational>,
    proper: BTreeMap<Word, Rational>,
}

impl Queue {
    fn push(&mut self, word: Word, c: Rational) -> Result<()> {
        if c.is_zero() {
            return Ok(());
        }
        let Some(r) = word.iter().rposition(|g| g.annihilates_virtual()) else {
            if let Some(g) = word.iter().find(|g| !g.is_proper()) {
                return Err(Error::NotBalanced(format!("{g} creates a symbol that is never annihilated")));
            }
            accumulate(&mut self.proper, word, c);
            return Ok(());
        };
        let dist = word.len() - 1 - r;
        if dist == 0 || is_irregular(&word) {
            return Ok(());
        }
        let key = (word.len(), dist, word);
        let entry = self.pending.entry(key).or_insert_with(Rational::zero);
        *entry += c;
        Ok(())
    }
}

fn accumulate(map: &mut BTreeMap<Word, Rational>, word: Word, c: Rational) {
    let entry = map.entry(word.clone()).or_insert_with(Rational::zero);
    *entry += c;
    if entry.is_zero() {
        map.remove(&word);
    }
}

/// The Capelli devirtualization `p`: rewrites a virtual presentation into the
/// PBW normal form of its image in `U(gl(n))`.
///
/// The rightmost factor annihilating a virtual symbol is pushed to the right
/// by supercommutator swaps; the bracket terms are shorter words. A word whose
/// rightmost factor annihilates a virtual symbol lies in the left ideal
/// generated by irregular expressions and is dropped.
pub fn devirtualize(x: &EnvelopingElement) -> Result<EnvelopingElement> {
    let mut queue = Queue { pending: BTreeMap::new(), proper: BTreeMap::new() };
    for (w, c) in x.terms() {
        queue.push(w.clone(), c.clone())?;
    }
    while let Some(((_, dist, word), c)) = queue.pending.pop_last() {
        if c.is_zero() {
            continue;
        }
        let r = word.len() - 1 - dist;
        let (g, y) = (word[r], word[r + 1]);
        let mut swapped = word.clone();
        swapped.swap(r, r + 1);
        queue.push(swapped, &c * sign(g.is_odd() && y.is_odd()))?;
        for (b, cb) in supercommutator(g, y).terms() {
            let mut shorter = Vec::with_capacity(word.len() - 1);
            shorter.extend_from_slice(&word[..r]);
            shorter.push(b[0]);
            shorter.extend_from_slice(&word[r + 2..]);
            queue.push(shorter, &c * cb)?;
        }
    }
    pbw_normal_form(&EnvelopingElement::from_map(queue.proper), PbwOrder::Standard)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> Word {
        s.split_whitespace().map(|g| g.parse().unwrap()).collect()
    }

    fn elem(s: &str) -> EnvelopingElement {
        EnvelopingElement::from_word(word(s), crate::int(1))
    }

    #[test]
    fn irregular_words() {
        assert!(is_irregular(&word("e[a1,2] e[1,a1] e[2,a1] e[a1,1]")));
        assert!(!is_irregular(&word("e[1,a1] e[a1,2]")));
        assert!(!is_irregular(&word("e[1,2] e[2,1]")));
        assert!(is_irregular(&word("e[a1,2] e[1,a1]")));
    }

    #[test]
    fn single_contraction() {
        assert_eq!(devirtualize(&elem("e[1,a1] e[a1,2]")).unwrap(), elem("e[1,2]"));
        assert!(devirtualize(&elem("e[a1,2] e[1,a1]")).unwrap().is_zero());
        assert!(devirtualize(&elem("e[1,b1] e[b1,1]")).unwrap() == elem("e[1,1]"));
    }

    #[test]
    fn column_determinant() {
        let x = devirtualize(&elem("e[2,a1] e[1,a1] e[a1,1] e[a1,2]")).unwrap();
        let expected = &(&elem("e[1,1] e[2,2]") + &elem("e[2,2]")) - &elem("e[2,1] e[1,2]");
        assert_eq!(x, expected);
    }

    #[test]
    fn unbalanced_input() {
        assert!(matches!(devirtualize(&elem("e[a1,1]")), Err(Error::NotBalanced(_))));
    }
}
