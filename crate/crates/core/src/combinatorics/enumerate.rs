use itertools::Itertools;

use super::{Partition, Tableau};
use crate::superspace::Symbol;

/// Fills `shape` row by row, each row drawn independently from `rows(len)`,
/// keeping the fillings accepted by `keep`.
fn fillings(
    shape: &Partition,
    row_choices: impl Fn(usize) -> Vec<Vec<u32>>,
    keep: impl Fn(&[Vec<u32>]) -> bool,
) -> Vec<Tableau> {
    let mut out = Vec::new();
    let choices: Vec<Vec<Vec<u32>>> = shape.parts().iter().map(|&l| row_choices(l)).collect();
    let mut current: Vec<Vec<u32>> = Vec::with_capacity(choices.len());
    fn rec(
        choices: &[Vec<Vec<u32>>],
        current: &mut Vec<Vec<u32>>,
        keep: &dyn Fn(&[Vec<u32>]) -> bool,
        out: &mut Vec<Tableau>,
    ) {
        if !keep(current) {
            return;
        }
        let Some((first, rest)) = choices.split_first() else {
            let rows = current
                .iter()
                .map(|r| r.iter().map(|&i| Symbol::proper(i)).collect())
                .collect();
            out.push(Tableau::from_rows(rows).expect("rows follow the shape"));
            return;
        };
        for row in first {
            current.push(row.clone());
            rec(rest, current, keep, out);
            current.pop();
        }
    }
    rec(&choices, &mut current, &keep, &mut out);
    out
}

fn strictly_increasing_rows(n: usize) -> impl Fn(usize) -> Vec<Vec<u32>> {
    move |len| (1..=n as u32).combinations(len).collect()
}

fn weakly_decreasing_rows(n: usize) -> impl Fn(usize) -> Vec<Vec<u32>> {
    move |len| {
        (1..=n as u32)
            .rev()
            .combinations_with_replacement(len)
            .collect()
    }
}

/// Columns of the last row compared against the row above with `ok`.
fn column_condition(ok: fn(u32, u32) -> bool) -> impl Fn(&[Vec<u32>]) -> bool {
    move |rows: &[Vec<u32>]| match rows {
        [.., above, below] => below.iter().zip(above).all(|(&b, &a)| ok(a, b)),
        _ => true,
    }
}

/// Tableaux over `{1..n}` whose rows are strictly increasing.
pub fn row_increasing(shape: &Partition, n: usize) -> Vec<Tableau> {
    fillings(shape, strictly_increasing_rows(n), |_| true)
}

/// Reverse semistandard tableaux over `{1..n}`: rows weakly decreasing,
/// columns strictly decreasing.
pub fn rssyt(shape: &Partition, n: usize) -> Vec<Tableau> {
    fillings(shape, weakly_decreasing_rows(n), column_condition(|a, b| a > b))
}

/// Tableaux over `{1..n}` with rows strictly increasing and columns weakly
/// increasing.
pub fn standard_proper(shape: &Partition, n: usize) -> Vec<Tableau> {
    fillings(shape, strictly_increasing_rows(n), column_condition(|a, b| a <= b))
}

/// All permutations of `0..k` in lexicographic order, with their parity
/// (`true` for odd).
pub fn permutations(k: usize) -> Vec<(Vec<usize>, bool)> {
    (0..k)
        .permutations(k)
        .map(|p| {
            let inversions = (0..k).tuple_combinations().filter(|&(i, j)| p[i] > p[j]).count();
            (p, inversions % 2 == 1)
        })
        .collect()
}
