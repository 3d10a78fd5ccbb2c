use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use shifted_crystal::crystal::{self, CrystalWord};
use shifted_crystal::expansions::{self as ex, CoefficientRequest, Method};
use shifted_crystal::par::Execution;
use shifted_crystal::shapes::{self, Partition, SkewShape, StrictPartition};
use shifted_crystal::ssdt::{self, DecompTableau};
use shifted_crystal::tableaux::{enumerate_semistandard, Alphabet, PrimedTableau};
use shifted_crystal::verify::{self, Options, Suite};

/// Shifted tableaux, q(n)-crystals and Schur P-positive expansions.
#[derive(Parser)]
#[command(name = "shifted-crystal", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Shape flags shared by `coeff` and `enumerate`. Partitions are
/// comma-separated and weakly decreasing, e.g. `4,3,1`.
#[derive(clap::Args, Clone)]
struct Shapes {
    #[arg(long)]
    lambda: Option<String>,
    #[arg(long)]
    mu: Option<String>,
    #[arg(long)]
    nu: Option<String>,
    #[arg(long)]
    r: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Coefficients of one expansion, as JSON keyed by partition.
    Coeff {
        family: Family,
        #[command(flatten)]
        shapes: Shapes,
        #[arg(long, default_value = "all")]
        method: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the tableaux of one indexing set.
    Enumerate {
        set: TableauSet,
        #[command(flatten)]
        shapes: Shapes,
        /// Largest entry, for `ssdt` and `sst`.
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the q(n)-crystal on a tableau set; prints a JSON summary.
    Crystal {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        skew_inner: Option<String>,
        #[arg(long, value_enum, default_value = "ssdt")]
        model: Model,
        /// Write the graph in DOT format here.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Run verification suites; exits nonzero if any check fails.
    Verify {
        /// Suite name, or `all`.
        #[arg(long, required_unless_present = "list")]
        suite: Option<String>,
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long)]
        sequential: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print the suite names and exit.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    /// P_mu P_nu in the P-basis (--mu, --nu).
    ShiftedLr,
    /// s_{lambda/delta_r} in the P-basis (--lambda, --r).
    #[value(alias = "a")]
    Staircase,
    /// s_{delta_(r+1)/mu} in the P-basis (--mu, --r).
    #[value(alias = "b")]
    ArdilaSerrano,
    /// P_lambda in the Schur basis (--lambda).
    #[value(alias = "g")]
    Schur,
    /// Skew decomposition tableau function of lambda/mu (--lambda, --mu).
    SkewSsdt,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableauSet {
    /// Decomposition tableaux of lambda or lambda/mu with entries <= n.
    Ssdt,
    /// Unprimed tableaux of lambda/mu with entries <= n.
    Sst,
    /// Lattice rule for shifted LR (--lambda, --mu, --nu).
    F,
    /// Doubled-word lattice rule for shifted LR (--lambda, --mu, --nu).
    Lrs,
    /// Staircase skew Schur rule (--lambda, --r, --nu).
    A,
    /// Standard staircase filling rule (--mu, --r, --nu).
    B,
    /// Schur expansion rule (--lambda strict, --mu).
    G,
    /// Skew decomposition rule (--lambda, --mu, --nu).
    Fskew,
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    Ssdt,
    Ssyt,
}

fn strict(flag: &str, v: &Option<String>) -> Result<StrictPartition> {
    let s = v.as_deref().with_context(|| format!("--{flag} is required"))?;
    s.parse().with_context(|| format!("--{flag} {s:?} is not a strict partition"))
}

fn partition(flag: &str, v: &Option<String>) -> Result<Partition> {
    let s = v.as_deref().with_context(|| format!("--{flag} is required"))?;
    s.parse().with_context(|| format!("--{flag} {s:?} is not a partition"))
}

fn rank(v: Option<usize>) -> Result<usize> {
    v.context("--r is required")
}

fn request(family: Family, s: &Shapes) -> Result<CoefficientRequest> {
    Ok(match family {
        Family::ShiftedLr => CoefficientRequest::ShiftedLr { mu: strict("mu", &s.mu)?, nu: strict("nu", &s.nu)? },
        Family::Staircase => {
            CoefficientRequest::SkewSchurStaircase { lambda: partition("lambda", &s.lambda)?, r: rank(s.r)? }
        }
        Family::ArdilaSerrano => CoefficientRequest::ArdilaSerrano { mu: partition("mu", &s.mu)?, r: rank(s.r)? },
        Family::Schur => CoefficientRequest::SchurExpansion { lambda: strict("lambda", &s.lambda)? },
        Family::SkewSsdt => {
            CoefficientRequest::SkewSsdt { lambda: strict("lambda", &s.lambda)?, mu: strict("mu", &s.mu)? }
        }
    })
}

fn keyed(m: &BTreeMap<Partition, u64>) -> Value {
    Value::Object(m.iter().map(|(k, v)| (k.to_string(), json!(v))).collect())
}

/// Returns the JSON document and whether all methods agreed.
fn coeff(family: Family, shapes: &Shapes, method: &str) -> Result<(Value, bool)> {
    let req = request(family, shapes)?;
    if method != "all" {
        let m: Method = method.parse()?;
        if !req.methods().contains(&m) {
            bail!("method {m} is not available for {}", req.family());
        }
        return Ok((keyed(&req.expand(m)?), true));
    }
    let mut per = Map::new();
    let mut results = Vec::new();
    for m in req.methods() {
        let r = req.expand(m)?;
        per.insert(m.to_string(), keyed(&r));
        results.push(r);
    }
    let agree = results.len() >= 2 && results.windows(2).all(|w| w[0] == w[1]);
    let doc = json!({
        "family": req.family(),
        "coefficients": keyed(&results[0]),
        "methods": per,
        "agree": agree,
    });
    Ok((doc, agree))
}

fn primed_rows(t: &PrimedTableau) -> Value {
    t.rows()
        .iter()
        .map(|r| r.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" "))
        .collect()
}

fn plain_rows(t: &DecompTableau) -> Value {
    t.rows()
        .iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
        .collect()
}

fn listing(tableaux: Vec<Value>) -> Value {
    json!({ "count": tableaux.len(), "tableaux": tableaux })
}

fn inner_or_empty(v: &Option<String>) -> Result<StrictPartition> {
    if v.is_some() {
        strict("mu", v)
    } else {
        Ok(StrictPartition::empty())
    }
}

fn enumerate(set: TableauSet, s: &Shapes, n: Option<u32>) -> Result<Value> {
    let primed = |ts: Vec<PrimedTableau>| listing(ts.iter().map(primed_rows).collect());
    Ok(match set {
        TableauSet::Ssdt => {
            let shape = SkewShape::shifted(&strict("lambda", &s.lambda)?, &inner_or_empty(&s.mu)?)?;
            let n = n.context("--n is required")?;
            listing(ssdt::enumerate_ssdt(&shape, n)?.iter().map(plain_rows).collect())
        }
        TableauSet::Sst => {
            let inner = if s.mu.is_some() { partition("mu", &s.mu)? } else { Partition::empty() };
            let shape = SkewShape::unshifted(&partition("lambda", &s.lambda)?, &inner)?;
            let n = n.context("--n is required")?;
            primed(enumerate_semistandard(&shape, n, None, Alphabet::Unprimed).collect())
        }
        TableauSet::F => primed(ex::enum_f(&strict("lambda", &s.lambda)?, &strict("mu", &s.mu)?, &strict("nu", &s.nu)?)),
        TableauSet::Lrs => {
            primed(ex::enum_lrs(&strict("lambda", &s.lambda)?, &strict("mu", &s.mu)?, &strict("nu", &s.nu)?))
        }
        TableauSet::A => primed(ex::enum_a(&partition("lambda", &s.lambda)?, rank(s.r)?, &strict("nu", &s.nu)?)?),
        TableauSet::B => primed(ex::enum_b(&partition("mu", &s.mu)?, rank(s.r)?, &strict("nu", &s.nu)?)?),
        TableauSet::G => primed(ex::enum_g(&strict("lambda", &s.lambda)?, &partition("mu", &s.mu)?)),
        TableauSet::Fskew => {
            primed(ex::enum_fskew(&strict("lambda", &s.lambda)?, &strict("mu", &s.mu)?, &strict("nu", &s.nu)?)?)
        }
    })
}

fn crystal_cmd(lambda: &str, n: usize, inner: &Option<String>, model: Model) -> Result<crystal::Graph> {
    let lam = Some(lambda.to_string());
    let words: Vec<CrystalWord> = match model {
        Model::Ssdt => {
            let shape = SkewShape::shifted(&strict("lambda", &lam)?, &inner_or_empty(inner)?)?;
            let ts = ssdt::enumerate_ssdt(&shape, n as u32)?;
            ts.iter().map(|t| CrystalWord::from_ssdt(t, n)).collect::<Result<_, _>>()?
        }
        // Only lambda/delta_r carries a q(n)-structure on its reading words.
        Model::Ssyt => {
            let inner = if inner.is_some() { partition("skew-inner", inner)? } else { Partition::empty() };
            let r = inner.len();
            if inner != shapes::staircase(r).as_partition() {
                bail!("--model ssyt needs --skew-inner to be a staircase r,r-1,...,1; got {inner:?}");
            }
            ex::staircase_sst(&partition("lambda", &lam)?, r, n)?
                .iter()
                .map(|t| ex::sst_word(t, n))
                .collect::<Result<_, _>>()?
        }
    };
    if words.is_empty() {
        bail!("no tableaux of shape {lambda} with entries <= {n}");
    }
    Ok(crystal::graph_of(&words)?)
}

fn emit(doc: &Value, out: &Option<PathBuf>) -> Result<()> {
    let text = serde_json::to_string_pretty(doc)?;
    match out {
        Some(p) => std::fs::write(p, text + "\n").with_context(|| format!("writing {}", p.display())),
        None => {
            // A closed pipe is not an error for a one-shot command.
            match writeln!(std::io::stdout().lock(), "{text}") {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
                _ => Ok(()),
            }
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Coeff { family, shapes, method, out } => {
            let (doc, agree) = coeff(family, &shapes, &method)?;
            emit(&doc, &out)?;
            Ok(agree)
        }
        Command::Enumerate { set, shapes, n, out } => {
            emit(&enumerate(set, &shapes, n)?, &out)?;
            Ok(true)
        }
        Command::Crystal { lambda, n, skew_inner, model, dot } => {
            let g = crystal_cmd(&lambda, n, &skew_inner, model)?;
            let comps = crystal::decompose(&g.vertices)?;
            if let Some(p) = &dot {
                std::fs::write(p, crystal::export_dot(&g)).with_context(|| format!("writing {}", p.display()))?;
            }
            let bar = g.edges.iter().filter(|e| e.label == crystal::EdgeLabel::Bar).count();
            let summary = json!({
                "n": g.n,
                "vertices": g.vertices.len(),
                "edges": g.edges.len(),
                "bar_edges": bar,
                "components": comps.iter().map(|(k, v)| (k.to_string(), json!(v))).collect::<Map<_, _>>(),
            });
            emit(&summary, &None)?;
            Ok(true)
        }
        Command::Verify { suite, max_size, seed, samples, sequential, out, list } => {
            if list {
                for s in Suite::ALL {
                    println!("{:<28} {}", s.name(), s.describe());
                }
                return Ok(true);
            }
            let suites = match suite.as_deref() {
                Some("all") => Suite::ALL.to_vec(),
                Some(name) => vec![name
                    .parse::<Suite>()
                    .map_err(|_| anyhow::anyhow!("unknown suite {name:?}; `verify --list` shows the names"))?],
                None => unreachable!("clap requires --suite"),
            };
            let exec = if sequential { Execution::Sequential } else { Execution::default_for_build() };
            let opts = Options { max_size, seed, samples, exec };
            let mut reports = Vec::new();
            for s in suites {
                let rep = verify::run(s, &opts)?;
                eprintln!("{rep}");
                reports.push(rep);
            }
            let ok = reports.iter().all(|r| r.passed());
            emit(&json!({ "passed": ok, "reports": reports }), &out)?;
            Ok(ok)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
