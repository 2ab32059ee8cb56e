//! Element specifications of the form `KIND:payload@n=N`.
//!
//! | kind | payload | element |
//! |------|---------|---------|
//! | `S` | partition `2,1` | Schur element |
//! | `H` | `k` | Capelli element `H_k(n)` |
//! | `I` | `k` | Nazarov-Umeda element `I_k(n)` |
//! | `CB`, `YC`, `DYC` | tableaux `S|T`, rows split by `;` | Capelli, Young-Capelli, double Young-Capelli bitableau |
//! | `CIMM` | `shape|i_1 … i_h|j_1 … j_h` | Capelli immanant |

use std::fmt;
use std::str::FromStr;

use crate::central::{
    capelli_bitableau, capelli_immanant, double_young_capelli, young_capelli, CentralElement, ElementCache,
    ImmanantForm, VirtualPool,
};
use crate::enveloping::EnvelopingElement;
use crate::{Error, Partition, Result, Tableau};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ElementKind {
    Schur(Partition),
    CapelliH(usize),
    NazarovUmedaI(usize),
    Capelli(Tableau, Tableau),
    YoungCapelli(Tableau, Tableau),
    DoubleYoungCapelli(Tableau, Tableau),
    Immanant { shape: Partition, left: Vec<u32>, right: Vec<u32> },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ElementSpec {
    pub kind: ElementKind,
    pub n: usize,
}

/// A constructed element: central ones carry their provenance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BuiltElement {
    Central(CentralElement),
    Body { body: EnvelopingElement, n: usize },
}

impl BuiltElement {
    pub fn body(&self) -> &EnvelopingElement {
        match self {
            BuiltElement::Central(x) => x.body(),
            BuiltElement::Body { body, .. } => body,
        }
    }

    pub fn n(&self) -> usize {
        match self {
            BuiltElement::Central(x) => x.n(),
            BuiltElement::Body { n, .. } => *n,
        }
    }

    pub fn central(&self) -> Option<&CentralElement> {
        match self {
            BuiltElement::Central(x) => Some(x),
            BuiltElement::Body { .. } => None,
        }
    }
}

fn parse_err(s: &str, why: &str) -> Error {
    Error::Parse(format!("element spec {s:?}: {why}"))
}

fn parse_pair(s: &str, payload: &str) -> Result<(Tableau, Tableau)> {
    let (a, b) = payload.split_once('|').ok_or_else(|| parse_err(s, "expected S|T"))?;
    Ok((a.parse()?, b.parse()?))
}

fn parse_word(s: &str, w: &str) -> Result<Vec<u32>> {
    w.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u32>().map_err(|_| parse_err(s, &format!("bad index {t:?}"))))
        .collect()
}

fn check_entries(s: &str, entries: impl IntoIterator<Item = u32>, n: usize) -> Result<()> {
    for i in entries {
        if i == 0 || i as usize > n {
            return Err(parse_err(s, &format!("index {i} outside 1..={n}")));
        }
    }
    Ok(())
}

fn check_tableaux(s: &str, a: &Tableau, b: &Tableau, n: usize) -> Result<()> {
    if let Some(x) = a.word().iter().chain(b.word()).find(|x| !x.is_proper()) {
        return Err(Error::NonProperSymbol(x.to_string()));
    }
    check_entries(s, a.word().iter().chain(b.word()).map(|x| x.index), n)
}

impl FromStr for ElementSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let (body, n) = t.rsplit_once("@n=").ok_or_else(|| parse_err(s, "missing @n=N"))?;
        let n: usize = n.trim().parse().map_err(|_| parse_err(s, "bad n"))?;
        let (kind, payload) = body.split_once(':').ok_or_else(|| parse_err(s, "missing KIND:"))?;
        let count = |p: &str| p.trim().parse::<usize>().map_err(|_| parse_err(s, "expected an integer"));
        let kind = match kind.trim() {
            "S" => ElementKind::Schur(payload.parse()?),
            "H" => ElementKind::CapelliH(count(payload)?),
            "I" => ElementKind::NazarovUmedaI(count(payload)?),
            "CB" => {
                let (a, b) = parse_pair(s, payload)?;
                check_tableaux(s, &a, &b, n)?;
                ElementKind::Capelli(a, b)
            }
            "YC" => {
                let (a, b) = parse_pair(s, payload)?;
                check_tableaux(s, &a, &b, n)?;
                ElementKind::YoungCapelli(a, b)
            }
            "DYC" => {
                let (a, b) = parse_pair(s, payload)?;
                check_tableaux(s, &a, &b, n)?;
                ElementKind::DoubleYoungCapelli(a, b)
            }
            "CIMM" => {
                let parts: Vec<&str> = payload.split('|').collect();
                let [shape, left, right] = parts[..] else {
                    return Err(parse_err(s, "expected shape|left|right"));
                };
                let (left, right) = (parse_word(s, left)?, parse_word(s, right)?);
                check_entries(s, left.iter().chain(&right).copied(), n)?;
                ElementKind::Immanant { shape: shape.parse()?, left, right }
            }
            other => return Err(parse_err(s, &format!("unknown kind {other:?}"))),
        };
        Ok(ElementSpec { kind, n })
    }
}

fn word(w: &[u32]) -> String {
    w.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

impl fmt::Display for ElementSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ElementKind::Schur(l) => write!(f, "S:{l}")?,
            ElementKind::CapelliH(k) => write!(f, "H:{k}")?,
            ElementKind::NazarovUmedaI(k) => write!(f, "I:{k}")?,
            ElementKind::Capelli(a, b) => write!(f, "CB:{a}|{b}")?,
            ElementKind::YoungCapelli(a, b) => write!(f, "YC:{a}|{b}")?,
            ElementKind::DoubleYoungCapelli(a, b) => write!(f, "DYC:{a}|{b}")?,
            ElementKind::Immanant { shape, left, right } => write!(f, "CIMM:{shape}|{}|{}", word(left), word(right))?,
        }
        write!(f, "@n={}", self.n)
    }
}

impl ElementSpec {
    /// Largest `|λ|`, `k` or word length mentioned by the spec.
    pub fn size(&self) -> usize {
        match &self.kind {
            ElementKind::Schur(l) => l.size(),
            ElementKind::CapelliH(k) | ElementKind::NazarovUmedaI(k) => *k,
            ElementKind::Capelli(a, _) | ElementKind::YoungCapelli(a, _) | ElementKind::DoubleYoungCapelli(a, _) => {
                a.shape().size()
            }
            ElementKind::Immanant { shape, .. } => shape.size(),
        }
    }

    pub fn build(&self, cache: &ElementCache) -> Result<BuiltElement> {
        let pool = VirtualPool::default();
        let n = self.n;
        let body = |body: EnvelopingElement| BuiltElement::Body { body, n };
        Ok(match &self.kind {
            ElementKind::Schur(l) => BuiltElement::Central(cache.schur(l, n)?),
            ElementKind::CapelliH(k) => BuiltElement::Central(cache.capelli_h(*k, n)?),
            ElementKind::NazarovUmedaI(k) => BuiltElement::Central(cache.nazarov_umeda_i(*k, n)?),
            ElementKind::Capelli(a, b) => body(capelli_bitableau(a, b, pool)?),
            ElementKind::YoungCapelli(a, b) => body(young_capelli(a, b, pool)?),
            ElementKind::DoubleYoungCapelli(a, b) => body(double_young_capelli(a, b, pool)?),
            ElementKind::Immanant { shape, left, right } => {
                body(capelli_immanant(shape, left, right, ImmanantForm::PermuteLeft, pool)?)
            }
        })
    }
}
