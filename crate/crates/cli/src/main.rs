use std::fmt::Write as _;
use std::process::ExitCode;

use capelli_core::central::{duality_w, eigenvalue, eigenvalue_on, embed, module_eigenvalue, olshanski_project, EigenvalueRecord};
use capelli_core::json::{central_to_json, eigenvalue_to_json, enveloping_to_json, estar_to_json, shifted_to_json};
use capelli_core::shifted::express_in_estar_basis;
use capelli_core::spec::{BuiltElement, ElementSpec};
use capelli_core::verify::{run_suite, VerifyOptions, SUITES};
use capelli_core::{format_rational, CentralElement, ElementCache, Error, Partition};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

const ELEMENT_MAX_SIZE: usize = 6;
const ELEMENT_MAX_N: usize = 5;
const VERIFY_MAX_SIZE: usize = 5;
const VERIFY_MAX_N: usize = 4;

#[derive(Parser)]
#[command(name = "capelli", version, about = "Exact computations in the center of U(gl(n))")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<std::path::PathBuf>,
    /// Worker threads for parallel sections.
    #[arg(long, global = true, env = "CAPELLI_THREADS")]
    threads: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the PBW form of an element.
    Element(Target),
    /// Eigenvalues on highest weight vectors.
    Eigen {
        #[command(flatten)]
        target: Target,
        /// Highest weight; without it, all weights up to --max-size are listed.
        #[arg(long)]
        mu: Option<Partition>,
        /// Treat --mu as a module label (highest weight μ̃).
        #[arg(long)]
        module: bool,
        /// Number of places of the polynomial representation.
        #[arg(long)]
        d: Option<usize>,
    },
    /// Harish-Chandra image as a shifted symmetric polynomial.
    Hc {
        #[command(flatten)]
        target: Target,
        /// Also express the image in the e* basis.
        #[arg(long)]
        estar: bool,
    },
    /// Run verification suites.
    Verify {
        /// Suite name, or "all".
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 3)]
        max_size: usize,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random samples for the devirtualization checks.
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Apply the duality W_n.
    Dual(Target),
    /// Olshanski projection to n − 1, or with --embed the embedding to n + 1.
    Project {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        embed: bool,
    },
}

/// An element given by `--spec`, or by `--lambda`/`--k` with `--n`.
#[derive(Args)]
struct Target {
    /// Element spec such as S:2,1@n=3, H:2@n=4, CB:2 1|1 2@n=2.
    #[arg(long)]
    spec: Option<String>,
    /// Shorthand for S:<lambda>@n=<n>.
    #[arg(long, requires = "n", conflicts_with_all = ["spec", "k"])]
    lambda: Option<Partition>,
    /// Shorthand for H:<k>@n=<n>.
    #[arg(long, requires = "n", conflicts_with = "spec")]
    k: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = ELEMENT_MAX_SIZE)]
    max_size: usize,
    #[arg(long, default_value_t = ELEMENT_MAX_N)]
    max_n: usize,
}

enum Failure {
    Usage(String),
    Verification(String),
    Computation(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Computation(e)
    }
}

impl Target {
    fn spec(&self) -> Result<ElementSpec, Failure> {
        let text = match (&self.spec, &self.lambda, self.k, self.n) {
            (Some(s), _, _, _) => s.clone(),
            (None, Some(l), _, Some(n)) => format!("S:{l}@n={n}"),
            (None, None, Some(k), Some(n)) => format!("H:{k}@n={n}"),
            _ => return Err(Failure::Usage("give --spec, or --lambda/--k with --n".into())),
        };
        let spec: ElementSpec = text.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?;
        if spec.size() > self.max_size || spec.n > self.max_n {
            return Err(Failure::Usage(format!(
                "{spec} exceeds the caps --max-size {} --max-n {}",
                self.max_size, self.max_n
            )));
        }
        Ok(spec)
    }

    fn build(&self) -> Result<(ElementSpec, BuiltElement), Failure> {
        let spec = self.spec()?;
        let built = spec.build(ElementCache::global()).map_err(|e| match e {
            Error::Precondition(_) | Error::ShapeMismatch { .. } | Error::SizeMismatch(_) => Failure::Usage(e.to_string()),
            e => Failure::Computation(e),
        })?;
        Ok((spec, built))
    }

    fn central(&self) -> Result<(ElementSpec, CentralElement), Failure> {
        let (spec, built) = self.build()?;
        match built {
            BuiltElement::Central(x) => Ok((spec, x)),
            BuiltElement::Body { body, n } => {
                let x = CentralElement::new(&body, n, capelli_core::Provenance::User)
                    .map_err(|_| Failure::Usage(format!("{spec} is not central")))?;
                Ok((spec, x))
            }
        }
    }
}

fn render(format: Format, text: String, value: Value) -> String {
    match format {
        Format::Text => text,
        Format::Json => serde_json::to_string_pretty(&value).expect("JSON renders"),
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let format = cli.format;
    match &cli.command {
        Command::Element(target) => {
            let (spec, built) = target.build()?;
            let value = match &built {
                BuiltElement::Central(x) => json!({ "spec": spec.to_string(), "central": central_to_json(x) }),
                BuiltElement::Body { body, n } => {
                    json!({ "spec": spec.to_string(), "n": n, "element": enveloping_to_json(body) })
                }
            };
            Ok(render(format, built.body().to_string(), value))
        }
        Command::Eigen { target, mu, module, d } => {
            let (spec, x) = target.central()?;
            let weights = match mu {
                Some(mu) => vec![mu.clone()],
                None => Partition::all_up_to(target.max_size.min(ELEMENT_MAX_SIZE))
                    .into_iter()
                    .filter(|m| if *module { m.first() <= x.n() } else { m.len() <= x.n() })
                    .collect(),
            };
            let records = weights
                .into_iter()
                .map(|mu| {
                    let shape = if *module { mu.clone() } else { mu.conjugate() };
                    let value = match d {
                        Some(d) => eigenvalue_on(&x, &shape, *d),
                        None if *module => module_eigenvalue(&x, &mu),
                        None => eigenvalue(&x, &mu),
                    }
                    .map_err(|e| match e {
                        Error::Precondition(m) => Failure::Usage(m),
                        e => Failure::Computation(e),
                    })?;
                    Ok(EigenvalueRecord { mu, value })
                })
                .collect::<Result<Vec<_>, Failure>>()?;
            let text = if mu.is_some() {
                format_rational(&records[0].value)
            } else {
                records.iter().fold(String::new(), |mut s, r| {
                    let label = if r.mu.is_empty() { "∅".to_string() } else { r.mu.to_string() };
                    let _ = writeln!(s, "{label}\t{}", format_rational(&r.value));
                    s
                })
            };
            let value = json!({
                "spec": spec.to_string(),
                "convention": if *module { "module" } else { "weight" },
                "eigenvalues": records.iter().map(eigenvalue_to_json).collect::<Vec<_>>(),
            });
            Ok(render(format, text.trim_end().to_string(), value))
        }
        Command::Hc { target, estar } => {
            let (spec, x) = target.central()?;
            let chi = x.harish_chandra()?;
            let mut text = chi.to_string();
            let mut value = json!({ "spec": spec.to_string(), "image": shifted_to_json(&chi) });
            if *estar {
                let basis = express_in_estar_basis(&chi)?;
                let _ = write!(text, "\n= {basis}");
                value["estar"] = estar_to_json(&basis);
            }
            Ok(render(format, text, value))
        }
        Command::Dual(target) => {
            let (spec, x) = target.central()?;
            let w = duality_w(&x)?;
            Ok(render(format, w.to_string(), json!({ "spec": spec.to_string(), "central": central_to_json(&w) })))
        }
        Command::Project { target, embed: up } => {
            let (spec, x) = target.central()?;
            let y = if *up {
                embed(&x)?
            } else {
                if x.n() < 2 {
                    return Err(Failure::Usage("projection needs n >= 2".into()));
                }
                olshanski_project(&x)?
            };
            Ok(render(format, y.to_string(), json!({ "spec": spec.to_string(), "central": central_to_json(&y) })))
        }
        Command::Verify { suite, max_size, max_n, seed, samples } => {
            if *max_size > VERIFY_MAX_SIZE || *max_n > VERIFY_MAX_N {
                return Err(Failure::Usage(format!(
                    "verify caps are --max-size <= {VERIFY_MAX_SIZE} and --max-n <= {VERIFY_MAX_N}"
                )));
            }
            let names: Vec<&str> = if suite == "all" {
                SUITES.to_vec()
            } else if SUITES.contains(&suite.as_str()) {
                vec![suite.as_str()]
            } else {
                return Err(Failure::Usage(format!("unknown suite {suite:?}; choose from {}", SUITES.join(", "))));
            };
            let opts = VerifyOptions { max_size: *max_size, max_n: *max_n, seed: *seed, samples: *samples };
            let reports = names.iter().map(|s| run_suite(s, &opts)).collect::<Result<Vec<_>, _>>()?;
            let passed = reports.iter().all(|r| r.passed());
            let mut text = String::new();
            for r in &reports {
                for c in &r.checks {
                    let status = if c.passed { "PASS" } else { "FAIL" };
                    let _ = write!(text, "{status} [{}] {}", r.suite, c.name);
                    if !c.detail.is_empty() {
                        let _ = write!(text, ": {}", c.detail);
                    }
                    text.push('\n');
                }
            }
            let total: usize = reports.iter().map(|r| r.checks.len()).sum();
            let failed: usize = reports.iter().map(|r| r.checks.iter().filter(|c| !c.passed).count()).sum();
            let _ = write!(text, "{} of {total} checks passed", total - failed);
            let value = json!({ "passed": passed, "suites": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>() });
            let out = render(format, text, value);
            if passed {
                Ok(out)
            } else {
                Err(Failure::Verification(out))
            }
        }
    }
}

fn emit(cli: &Cli, text: &str) -> std::io::Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, format!("{text}\n")),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if rayon::ThreadPoolBuilder::new().num_threads(t).build_global().is_err() {
            eprintln!("error: could not configure {t} threads");
            return ExitCode::from(2);
        }
    }
    let (text, code) = match run(&cli) {
        Ok(text) => (text, 0),
        Err(Failure::Verification(text)) => (text, 1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Computation(e)) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    if let Err(e) = emit(&cli, &text) {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    ExitCode::from(code)
}
