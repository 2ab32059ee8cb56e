use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{supercommutator, EnvelopingElement, Generator, Word};
use crate::{Error, Rational, Result};

/// A total order on the generators of `gl(n)` used to sort PBW monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PbwOrder {
    /// Lowering `e_{ij}` (`i > j`) first, then Cartan, then raising; within a
    /// block, lexicographic on `(i, j)`.
    Standard,
    /// Raising first, then Cartan, then lowering.
    RaisingFirst,
    /// Generators with column `m` last; otherwise as [`PbwOrder::Standard`].
    ColumnLast(u32),
}

impl PbwOrder {
    fn key(self, g: Generator) -> (bool, u8, u32, u32) {
        let (i, j) = (g.row.index, g.col.index);
        let block = |lower: u8, upper: u8| match i.cmp(&j) {
            std::cmp::Ordering::Greater => lower,
            std::cmp::Ordering::Equal => 1,
            std::cmp::Ordering::Less => upper,
        };
        match self {
            PbwOrder::Standard => (false, block(0, 2), i, j),
            PbwOrder::RaisingFirst => (false, block(2, 0), i, j),
            PbwOrder::ColumnLast(m) => (j == m, block(0, 2), i, j),
        }
    }

    pub fn compare(self, a: Generator, b: Generator) -> std::cmp::Ordering {
        self.key(a).cmp(&self.key(b))
    }

    pub fn is_sorted(self, word: &[Generator]) -> bool {
        word.windows(2).all(|w| self.key(w[0]) <= self.key(w[1]))
    }
}

type Terms = Rc<Vec<(Word, Rational)>>;

thread_local! {
    static INSERT_CACHE: RefCell<HashMap<(PbwOrder, Generator, Word), Terms>> =
        RefCell::new(HashMap::new());
}

/// `g · v` in normal form, for `v` already sorted.
fn insert(order: PbwOrder, g: Generator, v: &[Generator]) -> Terms {
    if v.first().is_none_or(|&h| order.key(g) <= order.key(h)) {
        let mut w = Vec::with_capacity(v.len() + 1);
        w.push(g);
        w.extend_from_slice(v);
        return Rc::new(vec![(w, Rational::one())]);
    }
    let key = (order, g, v.to_vec());
    if let Some(hit) = INSERT_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return hit;
    }
    let (h, rest) = (v[0], &v[1..]);
    let mut acc: BTreeMap<Word, Rational> = BTreeMap::new();
    // g h rest = h (g rest) + [g, h] rest
    for (w, c) in insert(order, g, rest).iter() {
        for (w2, c2) in insert(order, h, w).iter() {
            add(&mut acc, w2, c * c2);
        }
    }
    for (bracket, c) in supercommutator(g, h).terms() {
        for (w2, c2) in insert(order, bracket[0], rest).iter() {
            add(&mut acc, w2, c * c2);
        }
    }
    let result: Terms = Rc::new(acc.into_iter().collect());
    INSERT_CACHE.with(|c| c.borrow_mut().insert(key, result.clone()));
    result
}

fn add(acc: &mut BTreeMap<Word, Rational>, w: &Word, c: Rational) {
    if c.is_zero() {
        return;
    }
    let entry = acc.entry(w.clone()).or_insert_with(Rational::zero);
    *entry += c;
    if entry.is_zero() {
        acc.remove(w);
    }
}

/// Normal form of a single proper word.
pub(crate) fn normalize_word(order: PbwOrder, word: &[Generator]) -> BTreeMap<Word, Rational> {
    let mut acc: BTreeMap<Word, Rational> = BTreeMap::new();
    acc.insert(Vec::new(), Rational::one());
    for &g in word.iter().rev() {
        let mut next = BTreeMap::new();
        for (v, c) in &acc {
            for (w, c2) in insert(order, g, v).iter() {
                add(&mut next, w, c * c2);
            }
        }
        acc = next;
    }
    acc
}

/// Rewrites every word of a proper element into sorted order with
/// `g y = y g + [g, y]`.
pub fn pbw_normal_form(x: &EnvelopingElement, order: PbwOrder) -> Result<EnvelopingElement> {
    if let Some(g) = x.terms().flat_map(|(w, _)| w.iter()).find(|g| !g.is_proper()) {
        return Err(Error::NonProperSymbol(g.to_string()));
    }
    let mut acc: BTreeMap<Word, Rational> = BTreeMap::new();
    for (w, c) in x.terms() {
        if order.is_sorted(w) {
            add(&mut acc, w, c.clone());
            continue;
        }
        for (w2, c2) in normalize_word(order, w) {
            add(&mut acc, &w2, c * c2);
        }
    }
    Ok(EnvelopingElement::from_map(acc))
}

impl EnvelopingElement {
    /// `true` when the element is proper and every word is sorted in the
    /// standard PBW order.
    pub fn is_pbw_canonical(&self) -> bool {
        self.terms().all(|(w, _)| w.iter().all(|g| g.is_proper()) && PbwOrder::Standard.is_sorted(w))
    }

    /// Product followed by standard PBW normalization.
    pub fn pbw_mul(&self, other: &EnvelopingElement) -> Result<EnvelopingElement> {
        pbw_normal_form(&(self * other), PbwOrder::Standard)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn e(i: u32, j: u32) -> EnvelopingElement {
        EnvelopingElement::generator(Generator::proper(i, j))
    }

    #[test]
    fn one_commutator_step() {
        let x = &e(2, 1) * &e(1, 2);
        let nf = pbw_normal_form(&x, PbwOrder::RaisingFirst).unwrap();
        let expected = &(&(&e(1, 2) * &e(2, 1)) + &e(2, 2)) - &e(1, 1);
        assert_eq!(nf, expected);
        assert_eq!(pbw_normal_form(&x, PbwOrder::Standard).unwrap(), x);
    }

    #[test]
    fn fixed_points() {
        let sq = &e(1, 1) * &e(1, 1);
        assert_eq!(pbw_normal_form(&sq, PbwOrder::Standard).unwrap(), sq);
        let virt = EnvelopingElement::generator(Generator::new(
            crate::Symbol::alpha(1),
            crate::Symbol::proper(1),
        ));
        assert!(matches!(pbw_normal_form(&virt, PbwOrder::Standard), Err(Error::NonProperSymbol(_))));
    }

    #[test]
    fn column_last_order() {
        let x = &e(1, 3) * &e(3, 1);
        let nf = pbw_normal_form(&x, PbwOrder::ColumnLast(3)).unwrap();
        assert_eq!(nf, &(&(&e(3, 1) * &e(1, 3)) + &e(1, 1)) - &e(3, 3));
    }

    fn word_strategy(n: u32, max: usize) -> impl Strategy<Value = Vec<(u32, u32)>> {
        prop::collection::vec((1..=n, 1..=n), 0..=max)
    }

    fn element(word: &[(u32, u32)]) -> EnvelopingElement {
        word.iter().fold(EnvelopingElement::one(), |acc, &(i, j)| &acc * &e(i, j))
    }

    /// Reduces by swapping a randomly chosen descent until sorted.
    fn random_strategy(x: &EnvelopingElement, order: PbwOrder, seed: u64) -> EnvelopingElement {
        let mut state = seed;
        let mut pending: Vec<(Word, Rational)> = x.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
        let mut out = EnvelopingElement::zero();
        while let Some((w, c)) = pending.pop() {
            let descents: Vec<usize> =
                (0..w.len().saturating_sub(1)).filter(|&i| order.key(w[i]) > order.key(w[i + 1])).collect();
            if descents.is_empty() {
                out.add_term(w, c);
                continue;
            }
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let i = descents[(state >> 33) as usize % descents.len()];
            let mut swapped = w.clone();
            swapped.swap(i, i + 1);
            pending.push((swapped, c.clone()));
            for (b, cb) in supercommutator(w[i], w[i + 1]).terms() {
                let mut shorter = w[..i].to_vec();
                shorter.push(b[0]);
                shorter.extend_from_slice(&w[i + 2..]);
                pending.push((shorter, &c * cb));
            }
        }
        out
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn independent_of_rewriting_order(word in word_strategy(3, 5), seed in any::<u64>()) {
            let x = element(&word);
            for order in [PbwOrder::Standard, PbwOrder::RaisingFirst, PbwOrder::ColumnLast(3)] {
                prop_assert_eq!(pbw_normal_form(&x, order).unwrap(), random_strategy(&x, order, seed));
            }
        }

        #[test]
        fn normal_form_is_sorted_and_idempotent(word in word_strategy(3, 5)) {
            let nf = pbw_normal_form(&element(&word), PbwOrder::Standard).unwrap();
            prop_assert!(nf.is_pbw_canonical());
            prop_assert!(nf.degree() <= word.len());
            prop_assert_eq!(pbw_normal_form(&nf, PbwOrder::Standard).unwrap(), nf.clone());
        }
    }
}
