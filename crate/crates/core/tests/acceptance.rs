//! Acceptance criteria. Each criterion prints one PASS/FAIL line; the process
//! exits nonzero when any criterion fails.

use std::process::ExitCode;
use std::sync::Mutex;
use std::time::Instant;

use capelli_core::central::{
    capelli_h_cdet, cper, duality_w, eigenvalue, embed, module_eigenvalue, olshanski_project,
    schur_from_immanants,
};
use capelli_core::combinatorics::{horizontal_strips, vertical_strips};
use capelli_core::enveloping::{pbw_normal_form, EnvelopingElement, Generator};
use capelli_core::linalg::rank;
use capelli_core::shifted::{e_star, h_star, s_star, s_star_rssyt};
use capelli_core::verify::{oracle_agrees, polynomial_basis, random_balanced_monomial, virtual_action_agrees};
use capelli_core::{CentralElement, ElementCache, Partition, PbwOrder, Rational, Result};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    checks: usize,
    failures: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { checks: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

/// Every central element built by the criteria, for the centrality check.
static BUILT: Mutex<Vec<CentralElement>> = Mutex::new(Vec::new());

fn keep(x: &CentralElement) {
    BUILT.lock().unwrap().push(x.clone());
}

fn cache() -> &'static ElementCache {
    ElementCache::global()
}

fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn hook(l: &Partition) -> Rational {
    Rational::from_integer(l.hook_number().into())
}

fn shapes(max: usize, n: usize) -> Vec<Partition> {
    Partition::all_up_to(max).into_iter().filter(|l| l.len() <= n).collect()
}

fn strip_sum(strips: Vec<capelli_core::Strip>) -> Rational {
    Rational::from_integer(strips.iter().map(|s| BigInt::from(s.factorial())).sum())
}

fn schur_action() -> Result<Outcome> {
    let mut out = Outcome::new();
    for n in [2, 3] {
        let all = shapes(4, n);
        for lambda in &all {
            let s = cache().schur(lambda, n)?;
            keep(&s);
            for mu in all.iter().filter(|mu| mu.size() <= lambda.size()) {
                let expected = if mu == lambda { hook(lambda) } else { int(0) };
                let got = eigenvalue(&s, mu)?;
                out.check(got == expected, || format!("S_{lambda}({n}) at {mu}: {got} != {expected}"));
            }
        }
    }
    Ok(out)
}

fn vanishing() -> Result<Outcome> {
    let mut out = Outcome::new();
    let n = 3;
    let all = shapes(5, n);
    for lambda in &all {
        let s = cache().schur(lambda, n)?;
        keep(&s);
        for mu in all.iter().filter(|mu| !lambda.is_contained_in(mu)) {
            let got = eigenvalue(&s, mu)?;
            out.check(got == int(0), || format!("S_{lambda}({n}) at {mu}: {got}"));
        }
    }
    Ok(out)
}

fn capelli_cdet() -> Result<Outcome> {
    let mut out = Outcome::new();
    for n in 1..=4 {
        for k in 1..=n {
            let h = cache().capelli_h(k, n)?;
            keep(&h);
            let det = capelli_h_cdet(k, n)?;
            out.check(*h.body() == det, || format!("H_{k}({n}) differs from its cdet form"));
        }
    }
    Ok(out)
}

/// The ten column permanents of `I_3(3)`, with their weights.
const I33: [(i64, [[&str; 3]; 3]); 10] = [
    (6, [["e11-2", "e11-1", "e11"], ["e11-2", "e11-1", "e11"], ["e11-2", "e11-1", "e11"]]),
    (2, [["e11-2", "e11-1", "e12"], ["e11-2", "e11-1", "e12"], ["e21", "e21", "e22"]]),
    (2, [["e11-2", "e11-1", "e13"], ["e11-2", "e11-1", "e13"], ["e31", "e31", "e33"]]),
    (2, [["e11-2", "e12", "e12"], ["e21", "e22-1", "e22"], ["e21", "e22-1", "e22"]]),
    (1, [["e11-2", "e12", "e13"], ["e21", "e22-1", "e23"], ["e31", "e32", "e33"]]),
    (2, [["e11-2", "e13", "e13"], ["e31", "e33-1", "e33"], ["e31", "e33-1", "e33"]]),
    (6, [["e22-2", "e22-1", "e22"], ["e22-2", "e22-1", "e22"], ["e22-2", "e22-1", "e22"]]),
    (2, [["e22-2", "e22-1", "e23"], ["e22-2", "e22-1", "e23"], ["e32", "e32", "e33"]]),
    (2, [["e22-2", "e23", "e23"], ["e32", "e33-1", "e33"], ["e32", "e33-1", "e33"]]),
    (6, [["e33-2", "e33-1", "e33"], ["e33-2", "e33-1", "e33"], ["e33-2", "e33-1", "e33"]]),
];

fn matrix_entry(s: &str) -> EnvelopingElement {
    let digits: Vec<u32> = s[1..3].chars().map(|c| c.to_digit(10).unwrap()).collect();
    let g = EnvelopingElement::generator(Generator::proper(digits[0], digits[1]));
    let shift = if s.len() > 3 { s[3..].parse::<i64>().unwrap() } else { 0 };
    &g + &EnvelopingElement::scalar(int(shift))
}

fn nazarov_umeda_example() -> Result<Outcome> {
    let mut out = Outcome::new();
    let mut expected = EnvelopingElement::zero();
    for (weight, rows) in I33 {
        let a: Vec<Vec<EnvelopingElement>> = rows.iter().map(|r| r.iter().map(|e| matrix_entry(e)).collect()).collect();
        expected = &expected + &cper(&a).scale(&Rational::new(1.into(), weight.into()));
    }
    let expected = pbw_normal_form(&expected, PbwOrder::Standard)?;
    let i33 = cache().nazarov_umeda_i(3, 3)?;
    keep(&i33);
    out.check(*i33.body() == expected, || "I_3(3) differs from the ten-term permanent sum".into());
    Ok(out)
}

fn quantum_immanants() -> Result<Outcome> {
    let mut out = Outcome::new();
    let n = 3;
    for lambda in shapes(3, n).into_iter().filter(|l| !l.is_empty()) {
        let s = cache().schur(&lambda, n)?;
        let imm = schur_from_immanants(&lambda, n)?;
        out.check(*s.body() == imm, || format!("S_{lambda}({n}) differs from its immanant sum"));
    }
    Ok(out)
}

fn harish_chandra() -> Result<Outcome> {
    let mut out = Outcome::new();
    for n in 1..=3 {
        for lambda in shapes(4, n) {
            let chi = cache().schur(&lambda, n)?.harish_chandra()?;
            out.check(chi == s_star(&lambda, n)?, || format!("χ(S_{lambda}({n})) != determinant s*"));
            out.check(chi == s_star_rssyt(&lambda, n), || format!("χ(S_{lambda}({n})) != tableau s*"));
        }
        for k in 1..=n {
            let chi = cache().capelli_h(k, n)?.harish_chandra()?;
            out.check(chi == e_star(k, n)?, || format!("χ(H_{k}({n})) != e*_{k}"));
        }
        for k in 1..=3 {
            let i = cache().nazarov_umeda_i(k, n)?;
            keep(&i);
            out.check(i.harish_chandra()? == h_star(k, n), || format!("χ(I_{k}({n})) != h*_{k}"));
        }
    }
    Ok(out)
}

fn strip_eigenvalues() -> Result<Outcome> {
    let mut out = Outcome::new();
    let n = 3;
    let box3: Vec<Partition> = shapes(9, 3).into_iter().filter(|m| m.first() <= 3).collect();
    for k in 1..=3 {
        let (h, i) = (cache().capelli_h(k, n)?, cache().nazarov_umeda_i(k, n)?);
        let (es, hs) = (e_star(k, n)?, h_star(k, n));
        for mu in &box3 {
            let got = module_eigenvalue(&h, mu)?;
            let want = strip_sum(horizontal_strips(mu, k));
            out.check(got == want, || format!("H_{k} on module {mu}: {got} != {want}"));
            let got = module_eigenvalue(&i, mu)?;
            let want = strip_sum(vertical_strips(mu, k));
            out.check(got == want, || format!("I_{k} on module {mu}: {got} != {want}"));
            let (a, b) = (es.eval_at_partition(&mu.conjugate())?, hs.eval_at_partition(mu)?);
            out.check(a == b, || format!("e*_{k}({}) = {a} but h*_{k}({mu}) = {b}", mu.conjugate()));
        }
    }
    Ok(out)
}

fn duality() -> Result<Outcome> {
    let mut out = Outcome::new();
    let n = 3;
    for lambda in ["2,1", "2", "1,1", "3"] {
        let lambda: Partition = lambda.parse()?;
        let s = cache().schur(&lambda, n)?;
        let w = duality_w(&s)?;
        keep(&w);
        let conj = cache().schur(&lambda.conjugate(), n)?;
        keep(&conj);
        out.check(w.body() == conj.body(), || format!("W(S_{lambda}) != S_{}", lambda.conjugate()));
        out.check(duality_w(&w)?.body() == s.body(), || format!("W²(S_{lambda}) != S_{lambda}"));
    }
    Ok(out)
}

fn olshanski() -> Result<Outcome> {
    let mut out = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for n in [2, 3] {
        for k in 1..=n + 1 {
            let p = olshanski_project(&cache().capelli_h(k, n + 1)?)?;
            keep(&p);
            if k <= n {
                out.check(p.body() == cache().capelli_h(k, n)?.body(), || format!("π(H_{k}({})) != H_{k}({n})", n + 1));
            } else {
                out.check(p.body().is_zero(), || format!("π(H_{k}({})) != 0", n + 1));
            }
        }
        for k in 1..=3 {
            let p = olshanski_project(&cache().nazarov_umeda_i(k, n + 1)?)?;
            keep(&p);
            out.check(p.body() == cache().nazarov_umeda_i(k, n)?.body(), || format!("π(I_{k}({})) != I_{k}({n})", n + 1));
        }
        let basis: Vec<CentralElement> =
            shapes(3, n).iter().map(|l| cache().schur(l, n)).collect::<Result<_>>()?;
        for (lambda, s) in shapes(3, n).iter().zip(&basis) {
            let up = cache().schur(lambda, n + 1)?;
            keep(&up);
            let p = olshanski_project(&up)?;
            out.check(p.body() == s.body(), || format!("π(S_{lambda}({})) != S_{lambda}({n})", n + 1));
            let e = embed(s)?;
            keep(&e);
            out.check(olshanski_project(&e)?.body() == s.body(), || format!("π∘i != id on S_{lambda}({n})"));
        }
        for t in 0..5 {
            let mut x = basis[0].scale(&int(0));
            for s in &basis {
                x = x.add(&s.scale(&Rational::new(rng.gen_range(-5..=5).into(), rng.gen_range(1..=3).into())))?;
            }
            let h1 = cache().capelli_h(1, n)?;
            let x = x.add(&h1.mul(&h1)?.mul(&h1)?.scale(&int(rng.gen_range(-2..=2))))?;
            keep(&x);
            let e = embed(&x)?;
            keep(&e);
            out.check(olshanski_project(&e)?.body() == x.body(), || format!("π∘i != id on random element {t} at n={n}"));
        }
    }
    Ok(out)
}

fn devirtualization_oracle() -> Result<Outcome> {
    let mut out = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let bases = [polynomial_basis(2, 3, 3), polynomial_basis(3, 3, 3)];
    for sample in 0..200 {
        let n: u32 = rng.gen_range(2..=3);
        let m = random_balanced_monomial(&mut rng, n, 6, 3);
        let label = || m.iter().map(|g| g.to_string()).collect::<Vec<_>>().join("·");
        out.check(virtual_action_agrees(&m, &bases[n as usize - 2])?, || format!("sample {sample}: action differs for {}", label()));
        out.check(oracle_agrees(&m, n)?, || format!("sample {sample}: oracle differs for {}", label()));
    }
    Ok(out)
}

fn centrality_and_basis() -> Result<Outcome> {
    let mut out = Outcome::new();
    let built = BUILT.lock().unwrap().clone();
    for x in &built {
        out.check(x.is_central()?, || format!("{} at n={} is not central", x.provenance(), x.n()));
    }
    for n in [2, 3] {
        let lambdas = shapes(3, n);
        let points: Vec<Partition> = shapes(3, n);
        let rows = lambdas
            .iter()
            .map(|l| {
                let chi = cache().schur(l, n)?.harish_chandra()?;
                points.iter().map(|mu| chi.eval_at_partition(mu)).collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        out.check(rank(&rows) == lambdas.len(), || format!("evaluation matrix at n={n} is rank deficient"));
    }
    Ok(out)
}

type Criterion = (&'static str, fn() -> Result<Outcome>);

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("Schur elements act triangularly on highest weight vectors", schur_action),
        ("Schur elements vanish off containing weights", vanishing),
        ("H_k(n) equals its column determinant form", capelli_cdet),
        ("I_3(3) equals the ten-term column permanent sum", nazarov_umeda_example),
        ("Schur elements equal diagonal Capelli immanant sums", quantum_immanants),
        ("Harish-Chandra images are s*, e*, h*", harish_chandra),
        ("strip eigenvalues and e*_k(μ̃) = h*_k(μ)", strip_eigenvalues),
        ("duality W swaps conjugate Schur elements and is an involution", duality),
        ("Olshanski projection and embedding", olshanski),
        ("devirtualization agrees with the virtual action and the linear oracle", devirtualization_oracle),
        ("centrality of all constructed elements and basis rank", centrality_and_basis),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(o) if o.failures.is_empty() => {
                println!("criterion {:2}: PASS  {name} ({} checks, {secs:.1}s)", k + 1, o.checks);
            }
            Ok(o) => {
                failed += 1;
                println!("criterion {:2}: FAIL  {name} ({} of {} checks failed, {secs:.1}s)", k + 1, o.failures.len(), o.checks);
                for f in o.failures.iter().take(5) {
                    println!("    {f}");
                }
            }
            Err(e) => {
                failed += 1;
                println!("criterion {:2}: FAIL  {name} (error: {e}, {secs:.1}s)", k + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
