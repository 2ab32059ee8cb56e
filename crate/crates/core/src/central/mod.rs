//! Central elements of `U(gl(n))`: Capelli-type bitableaux, Schur elements,
//! the determinantal and permanental generators, eigenvalues on highest
//! weight vectors, and the maps between centers.

mod bitableaux;
mod duality;
mod eigen;
mod elements;
mod olshanski;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use bitableaux::{
    capelli_bitableau, capelli_immanant, column_capelli, column_laplace_expansion, double_young_capelli,
    double_young_capelli_expanded, young_capelli, young_capelli_expanded, ImmanantForm,
};
pub use duality::{duality_w, h_polynomial};
pub use eigen::{eigenvalue, eigenvalue_on, module_eigenvalue, EigenvalueRecord};
pub use elements::{
    capelli_h, capelli_h_cdet, cdet, cper, nazarov_umeda_i, nazarov_umeda_i_cper, schur_element,
    diagonal_immanant_sum, schur_from_immanants,
};
pub use olshanski::{embed, olshanski_project, olshanski_split};

use crate::combinatorics::{Partition, Tableau};
use crate::enveloping::{devirtualize, is_central, pbw_normal_form, EnvelopingElement, PbwOrder, Word};
use crate::shifted::{harish_chandra, ShiftedPolynomial};
use crate::{Error, Rational, Result};

/// How a central element was obtained.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Schur(Partition),
    CapelliH(usize),
    NazarovUmedaI(usize),
    Immanant(Partition),
    Projected(Box<Provenance>),
    Embedded(Box<Provenance>),
    Dual(Box<Provenance>),
    User,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Schur(l) => write!(f, "S:{l}"),
            Provenance::CapelliH(k) => write!(f, "H:{k}"),
            Provenance::NazarovUmedaI(k) => write!(f, "I:{k}"),
            Provenance::Immanant(l) => write!(f, "CIMM:{l}"),
            Provenance::Projected(p) => write!(f, "project({p})"),
            Provenance::Embedded(p) => write!(f, "embed({p})"),
            Provenance::Dual(p) => write!(f, "dual({p})"),
            Provenance::User => f.write_str("user"),
        }
    }
}

/// An element of the center of `U(gl(n))` in standard PBW form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralElement {
    body: EnvelopingElement,
    n: usize,
    provenance: Provenance,
}

impl CentralElement {
    /// Normalizes `body` and checks that it is central in `U(gl(n))`.
    pub fn new(body: &EnvelopingElement, n: usize, provenance: Provenance) -> Result<Self> {
        let body = pbw_normal_form(body, PbwOrder::Standard)?;
        if body.max_index() as usize > n || !is_central(&body, n as u32)? {
            return Err(Error::NotCentral(n));
        }
        Ok(CentralElement { body, n, provenance })
    }

    /// Wraps an element known to be central by construction.
    pub(crate) fn trusted(body: EnvelopingElement, n: usize, provenance: Provenance) -> Self {
        debug_assert!(body.is_pbw_canonical());
        CentralElement { body, n, provenance }
    }

    pub fn body(&self) -> &EnvelopingElement {
        &self.body
    }

    pub fn into_body(self) -> EnvelopingElement {
        self.body
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn is_central(&self) -> Result<bool> {
        is_central(&self.body, self.n as u32)
    }

    pub fn harish_chandra(&self) -> Result<ShiftedPolynomial> {
        harish_chandra(&self.body, self.n)
    }

    /// Maximal word length of the PBW form.
    pub fn filtration_degree(&self) -> usize {
        self.body.degree()
    }

    pub fn mul(&self, other: &CentralElement) -> Result<CentralElement> {
        check_same_n(self, other)?;
        Ok(CentralElement::trusted(self.body.pbw_mul(&other.body)?, self.n, Provenance::User))
    }

    pub fn add(&self, other: &CentralElement) -> Result<CentralElement> {
        check_same_n(self, other)?;
        Ok(CentralElement::trusted(&self.body + &other.body, self.n, Provenance::User))
    }

    pub fn scale(&self, c: &Rational) -> CentralElement {
        CentralElement::trusted(self.body.scale(c), self.n, Provenance::User)
    }

    pub fn with_provenance(mut self, provenance: Provenance) -> Self {
        self.provenance = provenance;
        self
    }
}

fn check_same_n(a: &CentralElement, b: &CentralElement) -> Result<()> {
    if a.n != b.n {
        return Err(Error::SizeMismatch(format!("elements of U(gl({})) and U(gl({}))", a.n, b.n)));
    }
    Ok(())
}

impl fmt::Display for CentralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.body.fmt(f)
    }
}

/// Offsets selecting the virtual symbols used for Coderuyts (`α`) and
/// Deruyts (`β`) tableaux.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VirtualPool {
    pub alpha_offset: u32,
    pub beta_offset: u32,
}

impl VirtualPool {
    pub const fn new(alpha_offset: u32, beta_offset: u32) -> Self {
        VirtualPool { alpha_offset, beta_offset }
    }

    /// `C*_λ`: row `r` filled with `α_{offset+r}`.
    pub fn coderuyts(&self, shape: &Partition) -> Tableau {
        Tableau::coderuyts(shape, self.alpha_offset)
    }

    /// `D*_λ`: column `c` filled with `β_{offset+c}`.
    pub fn deruyts(&self, shape: &Partition) -> Tableau {
        Tableau::virtual_deruyts(shape, self.beta_offset)
    }
}

/// Devirtualizes a sum of words, splitting the work across threads.
pub(crate) fn devirtualize_terms(terms: Vec<(Word, Rational)>) -> Result<EnvelopingElement> {
    let chunk = terms.len().div_ceil(4 * rayon::current_num_threads()).max(1);
    terms
        .par_chunks(chunk)
        .map(|part| {
            let mut x = EnvelopingElement::zero();
            for (w, c) in part {
                x.add_term(w.clone(), c.clone());
            }
            devirtualize(&x)
        })
        .try_reduce(EnvelopingElement::zero, |a, b| Ok(&a + &b))
}

/// A thread-safe memo of named elements keyed by provenance and `n`.
#[derive(Debug, Default)]
pub struct ElementCache {
    entries: Mutex<HashMap<(Provenance, usize), CentralElement>>,
}

impl ElementCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// The process-wide cache.
    pub fn global() -> &'static ElementCache {
        static CACHE: OnceLock<ElementCache> = OnceLock::new();
        CACHE.get_or_init(ElementCache::new)
    }

    pub fn get_or_build(
        &self,
        provenance: &Provenance,
        n: usize,
        build: impl FnOnce() -> Result<CentralElement>,
    ) -> Result<CentralElement> {
        let key = (provenance.clone(), n);
        if let Some(x) = self.entries.lock().expect("cache lock").get(&key) {
            return Ok(x.clone());
        }
        let x = build()?;
        self.entries.lock().expect("cache lock").insert(key, x.clone());
        Ok(x)
    }

    pub fn schur(&self, lambda: &Partition, n: usize) -> Result<CentralElement> {
        self.get_or_build(&Provenance::Schur(lambda.clone()), n, || schur_element(lambda, n))
    }

    pub fn capelli_h(&self, k: usize, n: usize) -> Result<CentralElement> {
        self.get_or_build(&Provenance::CapelliH(k), n, || capelli_h(k, n))
    }

    pub fn nazarov_umeda_i(&self, k: usize, n: usize) -> Result<CentralElement> {
        self.get_or_build(&Provenance::NazarovUmedaI(k), n, || nazarov_umeda_i(k, n))
    }

    pub fn len(&self) -> usize {
        self.entries.lock().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
