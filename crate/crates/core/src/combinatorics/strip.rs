use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::partition::factorial;
use super::{Cell, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    Horizontal,
    Vertical,
}

/// A set of cells of a diagram with no two cells in the same column
/// (horizontal) or the same row (vertical).
///
/// The strip need not be a skew shape.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Strip {
    cells: Vec<Cell>,
    orientation: Orientation,
}

impl Strip {
    /// Returns `None` when two cells collide in a column (horizontal) or a row
    /// (vertical).
    pub fn new(mut cells: Vec<Cell>, orientation: Orientation) -> Option<Self> {
        cells.sort();
        cells.dedup();
        let key = |c: &Cell| match orientation {
            Orientation::Horizontal => c.col,
            Orientation::Vertical => c.row,
        };
        let mut keys: Vec<usize> = cells.iter().map(key).collect();
        keys.sort_unstable();
        if keys.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some(Strip { cells, orientation })
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Maximal groups of cells sharing a row (horizontal) or a column
    /// (vertical).
    pub fn components(&self) -> Vec<Vec<Cell>> {
        let key = |c: &Cell| match self.orientation {
            Orientation::Horizontal => c.row,
            Orientation::Vertical => c.col,
        };
        let mut sorted = self.cells.clone();
        sorted.sort_by_key(|c| (key(c), *c));
        let mut out: Vec<Vec<Cell>> = Vec::new();
        for c in sorted {
            match out.last_mut() {
                Some(group) if key(&group[0]) == key(&c) => group.push(c),
                _ => out.push(vec![c]),
            }
        }
        out
    }

    /// Product of the factorials of the component sizes.
    pub fn factorial(&self) -> BigUint {
        self.components().iter().map(|g| factorial(g.len())).product()
    }
}

/// All `k`-cell strips of the given orientation inside `mu`, in lexicographic
/// order of their sorted cell lists.
pub fn strips(mu: &Partition, k: usize, orientation: Orientation) -> Vec<Strip> {
    let cells: Vec<Cell> = {
        let mut v: Vec<Cell> = mu.cells().collect();
        v.sort();
        v
    };
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(k);
    choose(&cells, 0, k, orientation, &mut chosen, &mut out);
    out
}

fn choose(
    cells: &[Cell],
    start: usize,
    k: usize,
    orientation: Orientation,
    chosen: &mut Vec<Cell>,
    out: &mut Vec<Strip>,
) {
    if chosen.len() == k {
        out.push(Strip { cells: chosen.clone(), orientation });
        return;
    }
    for i in start..cells.len() {
        let c = cells[i];
        let clash = chosen.iter().any(|d| match orientation {
            Orientation::Horizontal => d.col == c.col,
            Orientation::Vertical => d.row == c.row,
        });
        if clash {
            continue;
        }
        chosen.push(c);
        choose(cells, i + 1, k, orientation, chosen, out);
        chosen.pop();
    }
}

pub fn horizontal_strips(mu: &Partition, k: usize) -> Vec<Strip> {
    strips(mu, k, Orientation::Horizontal)
}

pub fn vertical_strips(mu: &Partition, k: usize) -> Vec<Strip> {
    strips(mu, k, Orientation::Vertical)
}
