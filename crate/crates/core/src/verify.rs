//! Verification suites and randomized oracles.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::central::{
    duality_w, embed, eigenvalue, module_eigenvalue, olshanski_project, ElementCache,
};
use crate::combinatorics::{horizontal_strips, vertical_strips, Partition};
use crate::enveloping::{act, devirtualize, pbw_normal_form, EnvelopingElement, Generator, PbwOrder, Word};
use crate::linalg::solve_sparse;
use crate::shifted::{e_star, h_star, s_star, s_star_rssyt};
use crate::superspace::{SuperMonomial, SuperPolynomial, SuperVariable, Symbol};
use crate::{Error, Rational, Result};

/// Names accepted by [`run_suite`].
pub const SUITES: [&str; 5] = ["core", "schur", "duality", "olshanski", "hc"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, result: Result<bool>) -> Self {
        let name = name.into();
        match result {
            Ok(passed) => Check { name, passed, detail: String::new() },
            Err(e) => Check { name, passed: false, detail: e.to_string() },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "passed": self.passed(),
            "total": self.checks.len(),
            "failed": self.checks.iter().filter(|c| !c.passed).count(),
            "checks": self.checks,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub max_size: usize,
    pub max_n: usize,
    pub seed: u64,
    pub samples: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { max_size: 3, max_n: 3, seed: 0, samples: 20 }
    }
}

pub fn run_suite(name: &str, opts: &VerifyOptions) -> Result<SuiteReport> {
    let cache = ElementCache::global();
    let checks = match name {
        "core" => core_suite(opts, cache),
        "schur" => schur_suite(opts, cache),
        "duality" => duality_suite(opts, cache),
        "olshanski" => olshanski_suite(opts, cache),
        "hc" => hc_suite(opts, cache),
        other => return Err(Error::Precondition(format!("unknown suite {other:?}"))),
    };
    Ok(SuiteReport { suite: name.to_string(), checks })
}

fn partitions(max_size: usize, fits: impl Fn(&Partition) -> bool) -> Vec<Partition> {
    Partition::all_up_to(max_size).into_iter().filter(|l| fits(l)).collect()
}

fn strip_sum(strips: Vec<crate::Strip>) -> Rational {
    Rational::from_integer(strips.iter().map(|s| BigInt::from(s.factorial())).sum())
}

fn core_suite(opts: &VerifyOptions, cache: &ElementCache) -> Vec<Check> {
    let mut checks = Vec::new();
    for n in 1..=opts.max_n {
        for k in 1..=n.min(opts.max_size) {
            checks.push(Check::new(format!("H_{k}({n}) is central"), cache.capelli_h(k, n).and_then(|x| x.is_central())));
            checks.push(Check::new(format!("I_{k}({n}) is central"), cache.nazarov_umeda_i(k, n).and_then(|x| x.is_central())));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let n = opts.max_n.clamp(1, 3) as u32;
    let basis = polynomial_basis(n, 3, 3);
    for s in 0..opts.samples {
        let m = random_balanced_monomial(&mut rng, n, 6, 3);
        let label = m.iter().map(Generator::to_string).join("·");
        checks.push(Check::new(format!("sample {s}: action of p({label})"), virtual_action_agrees(&m, &basis)));
        checks.push(Check::new(format!("sample {s}: linear-system oracle for {label}"), oracle_agrees(&m, n)));
    }
    checks
}

fn schur_suite(opts: &VerifyOptions, cache: &ElementCache) -> Vec<Check> {
    let mut checks = Vec::new();
    for n in 1..=opts.max_n {
        let shapes = partitions(opts.max_size, |l| l.len() <= n);
        for lambda in &shapes {
            let s = match cache.schur(lambda, n) {
                Ok(s) => s,
                Err(e) => {
                    checks.push(Check::new(format!("S_{lambda}({n})"), Err(e)));
                    continue;
                }
            };
            checks.push(Check::new(format!("S_{lambda}({n}) is central"), s.is_central()));
            let result = shapes.iter().try_fold(true, |ok, mu| {
                let v = eigenvalue(&s, mu)?;
                let expected = if mu == lambda {
                    Rational::from_integer(lambda.hook_number().into())
                } else if mu.size() <= lambda.size() || !lambda.is_contained_in(mu) {
                    Rational::from_integer(0.into())
                } else {
                    return Ok(ok);
                };
                Ok(ok && v == expected)
            });
            checks.push(Check::new(format!("S_{lambda}({n}) triangularity and vanishing"), result));
        }
    }
    checks
}

fn duality_suite(opts: &VerifyOptions, cache: &ElementCache) -> Vec<Check> {
    let mut checks = Vec::new();
    for n in 1..=opts.max_n {
        let modules = partitions(opts.max_size, |m| m.first() <= n && m.len() <= n);
        for k in 1..=n.min(opts.max_size) {
            let result = (|| {
                let (h, i) = (cache.capelli_h(k, n)?, cache.nazarov_umeda_i(k, n)?);
                let (es, hs) = (e_star(k, n)?, h_star(k, n));
                for mu in &modules {
                    let ok = module_eigenvalue(&h, mu)? == strip_sum(horizontal_strips(mu, k))
                        && module_eigenvalue(&i, mu)? == strip_sum(vertical_strips(mu, k))
                        && es.eval_at_partition(&mu.conjugate())? == hs.eval_at_partition(mu)?;
                    if !ok {
                        return Ok(false);
                    }
                }
                Ok(duality_w(&h)?.body() == i.body())
            })();
            checks.push(Check::new(format!("strip eigenvalues and W(H_{k}({n})) = I_{k}({n})"), result));
        }
        for lambda in partitions(opts.max_size, |l| l.first() <= n && l.len() <= n) {
            let result = (|| {
                let s = cache.schur(&lambda, n)?;
                let w = duality_w(&s)?;
                Ok(w.body() == cache.schur(&lambda.conjugate(), n)?.body() && duality_w(&w)?.body() == s.body())
            })();
            checks.push(Check::new(format!("W(S_{lambda}({n})) = S_{}({n}) and W² = id", lambda.conjugate()), result));
        }
    }
    checks
}

fn olshanski_suite(opts: &VerifyOptions, cache: &ElementCache) -> Vec<Check> {
    let mut checks = Vec::new();
    for n in 1..opts.max_n {
        for k in 1..=(n + 1).min(opts.max_size) {
            let result = (|| {
                let p = olshanski_project(&cache.capelli_h(k, n + 1)?)?;
                Ok(if k <= n { p.body() == cache.capelli_h(k, n)?.body() } else { p.body().is_zero() })
            })();
            checks.push(Check::new(format!("π(H_{k}({}))", n + 1), result));
            let result = (|| {
                let p = olshanski_project(&cache.nazarov_umeda_i(k, n + 1)?)?;
                Ok(p.body() == cache.nazarov_umeda_i(k, n)?.body())
            })();
            checks.push(Check::new(format!("π(I_{k}({}))", n + 1), result));
        }
        for lambda in partitions(opts.max_size, |l| l.len() <= n) {
            let result = (|| {
                let p = olshanski_project(&cache.schur(&lambda, n + 1)?)?;
                let s = cache.schur(&lambda, n)?;
                Ok(p.body() == s.body() && olshanski_project(&embed(&s)?)?.body() == s.body())
            })();
            checks.push(Check::new(format!("π(S_{lambda}({})) and π∘i", n + 1), result));
        }
    }
    checks
}

fn hc_suite(opts: &VerifyOptions, cache: &ElementCache) -> Vec<Check> {
    let mut checks = Vec::new();
    for n in 1..=opts.max_n {
        for lambda in partitions(opts.max_size, |l| l.len() <= n) {
            let result = (|| {
                let chi = cache.schur(&lambda, n)?.harish_chandra()?;
                Ok(chi == s_star(&lambda, n)? && chi == s_star_rssyt(&lambda, n))
            })();
            checks.push(Check::new(format!("χ(S_{lambda}({n})) = s*"), result));
        }
        for k in 1..=n.min(opts.max_size) {
            let result = (|| {
                Ok(cache.capelli_h(k, n)?.harish_chandra()? == e_star(k, n)?
                    && cache.nazarov_umeda_i(k, n)?.harish_chandra()? == h_star(k, n))
            })();
            checks.push(Check::new(format!("χ(H_{k}({n})) = e*, χ(I_{k}({n})) = h*"), result));
        }
    }
    checks
}

/// Number of factors `e_{a,b}` with `a` proper; bounds the filtration degree
/// of the devirtualized word.
pub fn proper_creating_count(word: &[Generator]) -> usize {
    word.iter().filter(|g| g.row.is_proper()).count()
}

/// A random balanced monomial in `U(gl(m0|m1+n))`: proper factors and chains
/// `e_{i,v_1} e_{v_1,v_2} ⋯ e_{v_r,j}` through virtual symbols, shuffled.
pub fn random_balanced_monomial(rng: &mut impl Rng, n: u32, max_factors: usize, max_proper_creating: usize) -> Word {
    let virtuals = [Symbol::alpha(1), Symbol::alpha(2), Symbol::beta(1), Symbol::beta(2)];
    loop {
        let mut word = Vec::new();
        let budget = rng.gen_range(1..=max_proper_creating);
        for _ in 0..budget {
            let i = Symbol::proper(rng.gen_range(1..=n));
            let j = Symbol::proper(rng.gen_range(1..=n));
            let length = rng.gen_range(0..=2);
            if length == 0 {
                word.push(Generator::new(i, j));
                continue;
            }
            let chain: Vec<Symbol> = virtuals.choose_multiple(rng, length).copied().collect();
            word.push(Generator::new(i, chain[0]));
            for w in chain.windows(2) {
                word.push(Generator::new(w[0], w[1]));
            }
            word.push(Generator::new(chain[length - 1], j));
        }
        if word.len() <= max_factors && word.iter().any(|g| !g.is_proper()) {
            word.shuffle(rng);
            return word;
        }
    }
}

/// All monomials of degree `<= max_degree` in the variables `(i|j)`,
/// `i <= n`, `j <= d`.
pub fn polynomial_basis(n: u32, d: u32, max_degree: usize) -> Vec<SuperPolynomial> {
    let vars: Vec<SuperVariable> =
        (1..=n).cartesian_product(1..=d).map(|(i, j)| SuperVariable { symbol: Symbol::proper(i), place: j }).collect();
    (0..=max_degree)
        .flat_map(|k| vars.iter().copied().combinations_with_replacement(k).collect::<Vec<_>>())
        .map(SuperPolynomial::monomial)
        .collect()
}

/// `act(p(M), P) = act(M, P)` for every `P` in `basis`.
pub fn virtual_action_agrees(m: &Word, basis: &[SuperPolynomial]) -> Result<bool> {
    let virt = EnvelopingElement::from_word(m.clone(), Rational::from_integer(1.into()));
    let proper = devirtualize(&virt)?;
    Ok(basis.par_iter().all(|p| act(&proper, p) == act(&virt, p)))
}

/// Standard PBW monomials of length `<= m` in the generators of `gl(n)`.
pub fn pbw_monomials(n: u32, m: usize) -> Vec<Word> {
    let mut gens: Vec<Generator> = (1..=n).cartesian_product(1..=n).map(|(i, j)| Generator::proper(i, j)).collect();
    gens.sort_by(|a, b| PbwOrder::Standard.compare(*a, *b));
    (0..=m).flat_map(|k| gens.iter().copied().combinations_with_replacement(k).collect::<Vec<_>>()).collect()
}

/// Recovers the PBW coefficients of `p(M)` by solving the linear system
/// "same action on every monomial of degree `<= m`", with `m` the number of
/// proper-creating factors and `m` places.
pub fn linear_system_oracle(m: &Word, n: u32) -> Result<EnvelopingElement> {
    let degree = proper_creating_count(m);
    let basis = polynomial_basis(n, degree.max(1) as u32, degree);
    let unknowns = pbw_monomials(n, degree);
    let image = |x: &EnvelopingElement| -> BTreeMap<(usize, SuperMonomial), Rational> {
        let mut out = BTreeMap::new();
        for (k, p) in basis.iter().enumerate() {
            for (mono, c) in act(x, p).terms() {
                out.insert((k, mono.clone()), c.clone());
            }
        }
        out
    };
    let one = Rational::from_integer(1.into());
    let columns: Vec<_> =
        unknowns.par_iter().map(|w| image(&EnvelopingElement::from_word(w.clone(), one.clone()))).collect();
    let target = image(&EnvelopingElement::from_word(m.clone(), one));
    let coeffs = solve_sparse(&columns, &target)?;
    let mut out = EnvelopingElement::zero();
    for (w, c) in unknowns.into_iter().zip(coeffs) {
        out.add_term(w, c);
    }
    pbw_normal_form(&out, PbwOrder::Standard)
}

/// Rewriting and the linear-system oracle give the same element.
pub fn oracle_agrees(m: &Word, n: u32) -> Result<bool> {
    let rewritten = devirtualize(&EnvelopingElement::from_word(m.clone(), Rational::from_integer(1.into())))?;
    Ok(rewritten == linear_system_oracle(m, n)?)
}
