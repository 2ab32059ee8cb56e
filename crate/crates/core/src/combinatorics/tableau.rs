use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Cell, Partition};
use crate::superspace::{Symbol, SymbolClass};
use crate::{Error, Result};

/// A filling of a Ferrers diagram by graded symbols, stored row by row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tableau {
    shape: Partition,
    entries: Vec<Symbol>,
}

impl Tableau {
    pub fn new(shape: Partition, entries: Vec<Symbol>) -> Result<Self> {
        if entries.len() != shape.size() {
            return Err(Error::SizeMismatch(format!(
                "{} entries for a shape of size {}",
                entries.len(),
                shape.size()
            )));
        }
        Ok(Tableau { shape, entries })
    }

    /// Builds a tableau from its rows; the shape is read off the row lengths.
    pub fn from_rows(rows: Vec<Vec<Symbol>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        if rows.iter().any(Vec::is_empty) {
            return Err(Error::Parse("empty row in tableau".into()));
        }
        Ok(Tableau { shape, entries: rows.into_iter().flatten().collect() })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Entries in row-major order, i.e. the word of the tableau.
    pub fn word(&self) -> &[Symbol] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<&[Symbol]> {
        let mut rest = &self.entries[..];
        self.shape
            .parts()
            .iter()
            .map(|&len| {
                let (row, tail) = rest.split_at(len);
                rest = tail;
                row
            })
            .collect()
    }

    /// Column `c` (1-based), read top to bottom.
    pub fn column(&self, c: usize) -> Vec<Symbol> {
        self.rows().into_iter().filter(|r| r.len() >= c).map(|r| r[c - 1]).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Symbol>> {
        (1..=self.shape.first()).map(|c| self.column(c)).collect()
    }

    pub fn get(&self, cell: Cell) -> Option<Symbol> {
        if !self.shape.contains_cell(cell) {
            return None;
        }
        let offset: usize = self.shape.parts()[..cell.row - 1].iter().sum();
        Some(self.entries[offset + cell.col - 1])
    }

    /// `c_T(x)`: number of occurrences of `x` in the tableau.
    pub fn content(&self, x: Symbol) -> usize {
        self.entries.iter().filter(|&&s| s == x).count()
    }

    /// Number of entries of odd Z2-degree.
    pub fn odd_count(&self) -> usize {
        self.entries.iter().filter(|s| s.is_odd()).count()
    }

    pub fn is_proper(&self) -> bool {
        self.entries.iter().all(|s| s.is_proper())
    }

    /// Row `r` filled with `f(r, 1..λ_r)`.
    fn fill(shape: &Partition, f: impl Fn(usize, usize) -> Symbol) -> Self {
        let entries = shape.cells().map(|c| f(c.row, c.col)).collect();
        Tableau { shape: shape.clone(), entries }
    }

    /// Proper Deruyts tableau `D_λ`: row `r` is `1 2 … λ_r`.
    pub fn deruyts(shape: &Partition) -> Self {
        Self::fill(shape, |_, c| Symbol::proper(c as u32))
    }

    /// Place Deruyts tableau `D^P_λ`: row `r` is the places `1 … λ_r`.
    pub fn place_deruyts(shape: &Partition) -> Self {
        Self::fill(shape, |_, c| Symbol::place(c as u32))
    }

    /// Virtual Deruyts tableau `D*_λ` on the negative symbols
    /// `β_{offset+1}, β_{offset+2}, …`.
    pub fn virtual_deruyts(shape: &Partition, offset: u32) -> Self {
        Self::fill(shape, |_, c| Symbol::beta(offset + c as u32))
    }

    /// Virtual Coderuyts tableau `C*_λ`: row `r` is constantly `α_{offset+r}`.
    pub fn coderuyts(shape: &Partition, offset: u32) -> Self {
        Self::fill(shape, |r, _| Symbol::alpha(offset + r as u32))
    }

    /// Deruyts-type tableau over an arbitrary class.
    pub fn deruyts_in(shape: &Partition, class: SymbolClass) -> Self {
        Self::fill(shape, |_, c| Symbol::new(class, c as u32))
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        f.write_str(&rows.join(";"))
    }
}

impl FromStr for Tableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(Tableau { shape: Partition::empty(), entries: Vec::new() });
        }
        let rows = s
            .split(';')
            .map(|row| row.split_whitespace().map(str::parse).collect::<Result<Vec<Symbol>>>())
            .collect::<Result<Vec<_>>>()?;
        Tableau::from_rows(rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn distinguished_tableaux() {
        assert_eq!(Tableau::deruyts(&p("2,1")).to_string(), "1 2;1");
        assert_eq!(Tableau::coderuyts(&p("2,2"), 0).to_string(), "a1 a1;a2 a2");
        assert_eq!(Tableau::virtual_deruyts(&p("2,1"), 0).to_string(), "b1 b2;b1");
        assert_eq!(Tableau::place_deruyts(&p("3")).to_string(), "p1 p2 p3");
        assert_eq!(Tableau::coderuyts(&p("1,1"), 2).to_string(), "a3;a4");
    }

    #[test]
    fn columns_and_content() {
        let t: Tableau = "1 2 2;3 1".parse().unwrap();
        assert_eq!(t.shape(), &p("3,2"));
        assert_eq!(t.column(1), vec![Symbol::proper(1), Symbol::proper(3)]);
        assert_eq!(t.column(3), vec![Symbol::proper(2)]);
        assert_eq!(t.content(Symbol::proper(2)), 2);
        assert_eq!(t.content(Symbol::proper(1)), 2);
        assert_eq!(t.get(Cell::new(2, 2)), Some(Symbol::proper(1)));
        assert_eq!(t.get(Cell::new(2, 3)), None);
    }

    #[test]
    fn round_trip() {
        for s in ["1 2;1", "a1 a1;a2 a2", "b1 b2;b1", "", "p1"] {
            assert_eq!(s.parse::<Tableau>().unwrap().to_string(), s);
        }
        assert!("1;1 2".parse::<Tableau>().is_err());
    }
}
