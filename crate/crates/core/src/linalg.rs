//! Exact Gaussian elimination over the rationals.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::{Error, Rational, Result};

/// Row-reduces `rows` in place and returns the pivot columns.
fn reduce(rows: &mut [Vec<Rational>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

/// Rank of a dense matrix given by rows.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut m = rows.to_vec();
    reduce(&mut m, ncols).len()
}

/// Rank of a family of sparse vectors indexed by any ordered key.
pub fn rank_sparse<K: Ord + Clone>(vectors: &[BTreeMap<K, Rational>]) -> usize {
    let (_, rows) = densify(vectors);
    rank(&rows)
}

fn densify<K: Ord + Clone>(vectors: &[BTreeMap<K, Rational>]) -> (Vec<K>, Vec<Vec<Rational>>) {
    let mut keys: Vec<K> = vectors.iter().flat_map(|v| v.keys().cloned()).collect();
    keys.sort();
    keys.dedup();
    let index: BTreeMap<&K, usize> = keys.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let rows = vectors
        .iter()
        .map(|v| {
            let mut row = vec![Rational::zero(); keys.len()];
            for (k, c) in v {
                row[index[k]] = c.clone();
            }
            row
        })
        .collect();
    (keys, rows)
}

/// Solves `Σ_i x_i · columns[i] = target` for sparse vectors.
///
/// Requires the columns to be linearly independent, so that the solution is
/// unique; fails with [`Error::InconsistentSystem`] otherwise or when no
/// solution exists.
pub fn solve_sparse<K: Ord + Clone>(
    columns: &[BTreeMap<K, Rational>],
    target: &BTreeMap<K, Rational>,
) -> Result<Vec<Rational>> {
    let mut all = columns.to_vec();
    all.push(target.clone());
    let (keys, cols) = densify(&all);
    let n = columns.len();
    // Augmented system: one row per key, one column per unknown plus the target.
    let mut rows: Vec<Vec<Rational>> =
        (0..keys.len()).map(|r| (0..=n).map(|c| cols[c][r].clone()).collect()).collect();
    let pivots = reduce(&mut rows, n + 1);
    if pivots.contains(&n) {
        return Err(Error::InconsistentSystem("target is not in the span".into()));
    }
    if pivots.len() < n {
        return Err(Error::InconsistentSystem(format!(
            "{} unknowns but rank {}",
            n,
            pivots.len()
        )));
    }
    Ok(rows.into_iter().take(n).map(|row| row[n].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int;

    fn v(entries: &[(u32, i64)]) -> BTreeMap<u32, Rational> {
        entries.iter().map(|&(k, c)| (k, int(c))).collect()
    }

    #[test]
    fn ranks() {
        let rows = vec![vec![int(1), int(2)], vec![int(2), int(4)], vec![int(0), int(1)]];
        assert_eq!(rank(&rows), 2);
        assert_eq!(rank(&[]), 0);
        assert_eq!(rank_sparse(&[v(&[(1, 1)]), v(&[(1, 2)])]), 1);
    }

    #[test]
    fn solves_unique_systems() {
        let cols = vec![v(&[(0, 1), (1, 1)]), v(&[(0, 1), (1, -1)])];
        let x = solve_sparse(&cols, &v(&[(0, 3), (1, 1)])).unwrap();
        assert_eq!(x, vec![int(2), int(1)]);
        assert!(solve_sparse(&cols, &v(&[(2, 1)])).is_err());
        let dependent = vec![v(&[(0, 1)]), v(&[(0, 2)])];
        assert!(solve_sparse(&dependent, &v(&[(0, 1)])).is_err());
    }
}
