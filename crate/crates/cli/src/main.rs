mod cache;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use layerlie::algebra::DEFAULT_MAX_DEGREE;
use layerlie::charcalc::{self, ordered_upto, verify_bound, verify_upto, Check, Tables, VerifyReport};
use layerlie::layercalc::{count_weights_bruteforce, dim_at};
use layerlie::weylgroup::DEFAULT_MAX_ORDER;
use layerlie::{Algebra, Error, LieType, Rational, Weight};
use serde::Serialize;

use cache::Cache;
use render::{Format, Output};

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser, Debug)]
#[command(
    name = "layerlie",
    version,
    about = "Exact dimension and layer polynomials, characters and layer decompositions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format (matrices default to csv, everything else to text).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Bypass the result cache.
    #[arg(long, global = true)]
    no_cache: bool,

    /// Cache directory (overrides LAYERLIE_CACHE_DIR).
    #[arg(long, global = true, value_name = "DIR")]
    cache_dir: Option<PathBuf>,

    /// Refuse to enumerate Weyl groups larger than this.
    #[arg(long, global = true, value_name = "N", default_value_t = DEFAULT_MAX_ORDER)]
    max_order: u64,

    /// Refuse to expand polynomials of higher degree (number of positive roots).
    #[arg(long, global = true, value_name = "N", default_value_t = DEFAULT_MAX_DEGREE)]
    max_degree: usize,
}

#[derive(Subcommand, Debug, Clone, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Command {
    /// Dimension D(lambda) of the irreducible module.
    Dim(AlgWeight),
    /// The Weyl dimension polynomial D.
    Dimpoly(AlgOnly),
    /// The layer polynomial R.
    Layerpoly(AlgOnly),
    /// Number of distinct weights R(lambda).
    Count {
        #[command(flatten)]
        target: AlgWeight,
        /// Cross-check against a direct count over the dominant weights.
        #[arg(long)]
        brute: bool,
    },
    /// Orbit sum m_lambda in irreducible characters.
    OrbitSum(AlgWeight),
    /// Layer sum L_lambda in irreducible characters.
    LayerSum(AlgWeight),
    /// Character of L(lambda) in orbit sums (weight multiplicities).
    Char(AlgWeight),
    /// Character of L(lambda) in layer sums.
    Decompose(AlgWeight),
    /// A matrix over all dominant weights with R at most R(lambda).
    Table {
        #[command(flatten)]
        target: AlgWeight,
        #[arg(long, value_enum, default_value_t = MatrixKind::OrbitSum)]
        matrix: MatrixKind,
    },
    /// Check the identities relating the expansions.
    Verify {
        algebra: String,
        /// Check every dominant weight below this one.
        #[arg(long, value_name = "LABELS", allow_hyphen_values = true)]
        upto: Option<String>,
        /// Check every dominant weight with R at most this bound.
        #[arg(long, value_name = "N", conflicts_with = "upto")]
        bound: Option<u64>,
        /// Comma-separated checks, or `all`.
        #[arg(long, default_value = "all")]
        checks: String,
    },
}

#[derive(Args, Debug, Clone, Serialize)]
struct AlgOnly {
    /// Algebra, e.g. G2 or b3.
    algebra: String,
}

#[derive(Args, Debug, Clone, Serialize)]
struct AlgWeight {
    /// Algebra, e.g. G2 or b3.
    algebra: String,
    /// Comma-separated Dynkin labels, e.g. 1,1.
    #[arg(allow_hyphen_values = true)]
    labels: String,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
enum MatrixKind {
    /// Orbit sums in characters.
    OrbitSum,
    /// Characters in orbit sums.
    Char,
    /// Layer sums in characters.
    LayerSum,
    /// Characters in layer sums.
    Decompose,
    /// 1 where the column weight lies below the row weight.
    Dominance,
}

/// Failure of a command before any output is produced.
enum Failure {
    Usage(String),
    Counterexample(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Counterexample(c) => Failure::Counterexample(c.to_string()),
            e => Failure::Usage(e.to_string()),
        }
    }
}

fn default_bound(rank: usize) -> u64 {
    match rank {
        0..=2 => 200,
        3 => 120,
        _ => 60,
    }
}

fn parse_weight(alg: &Algebra, labels: &str) -> Result<Weight, Failure> {
    let w: Weight = labels.parse().map_err(|e| Failure::Usage(format!("bad labels {labels:?}: {e}")))?;
    alg.check_arity(&w)?;
    Ok(w)
}

fn dominant_weight(alg: &Algebra, labels: &str) -> Result<Weight, Failure> {
    let w = parse_weight(alg, labels)?;
    alg.check_dominant(&w)?;
    Ok(w)
}

fn run(cli: &Cli, format: Format) -> Result<Output, Failure> {
    let cmd = &cli.command;
    let algebra = match cmd {
        Command::Dim(a) | Command::OrbitSum(a) | Command::LayerSum(a) | Command::Char(a) | Command::Decompose(a) => {
            &a.algebra
        }
        Command::Count { target, .. } | Command::Table { target, .. } => &target.algebra,
        Command::Dimpoly(a) | Command::Layerpoly(a) => &a.algebra,
        Command::Verify { algebra, .. } => algebra,
    };
    let lie_type: LieType = algebra.parse()?;
    let alg = Algebra::with_limits(lie_type, cli.max_order, cli.max_degree);
    let lt = alg.root_system().lie_type().to_string();
    match cmd {
        Command::Dim(a) => {
            let w = parse_weight(&alg, &a.labels)?;
            render::scalar(format, &lt, &w, "dim", &dim_at(alg.root_system(), &w))
        }
        Command::Dimpoly(_) => render::polynomial(format, alg.dim_polynomial()?),
        Command::Layerpoly(_) => {
            let lp = alg.layer_polynomial()?;
            let mut out = render::polynomial(format, &lp.poly)?;
            if !lp.report.conforms() {
                out.stderr.push(format!("note: layer polynomial shape differs from expectation: {:?}", lp.report));
            }
            Ok(out)
        }
        Command::Count { target, brute } => {
            let w = dominant_weight(&alg, &target.labels)?;
            let r = alg.layer_polynomial()?.poly.eval_int(w.labels());
            let mut out = render::scalar(format, &lt, &w, "count", &r)?;
            if *brute {
                let n = Rational::from_integer(count_weights_bruteforce(alg.root_system(), &w).into());
                if n != r {
                    return Err(Failure::Counterexample(format!(
                        "layer polynomial count fails at {w}: R = {r}, direct count = {n}"
                    )));
                }
                out.stderr.push(format!("direct count agrees: {n}"));
            }
            Ok(out)
        }
        Command::OrbitSum(a) => {
            let w = dominant_weight(&alg, &a.labels)?;
            let e = charcalc::orbit_sum_expansion(alg.root_system(), &w, alg.weyl_table()?)?;
            render::expansion(format, &e, Some(&ordered_upto(&alg, &w)?), "ch")
        }
        Command::LayerSum(a) => {
            let w = dominant_weight(&alg, &a.labels)?;
            let e = charcalc::layer_sum_expansion(alg.root_system(), &w, alg.zgroup_table());
            render::expansion(format, &e, Some(&ordered_upto(&alg, &w)?), "ch")
        }
        Command::Char(a) => {
            let w = dominant_weight(&alg, &a.labels)?;
            let e = charcalc::character_in_orbit_basis(&alg, &w)?;
            render::expansion(format, &e, Some(&ordered_upto(&alg, &w)?), "m")
        }
        Command::Decompose(a) => {
            let w = dominant_weight(&alg, &a.labels)?;
            let e = charcalc::layer_decomposition(&alg, &w)?;
            render::expansion(format, &e, Some(&ordered_upto(&alg, &w)?), "L")
        }
        Command::Table { target, matrix } => {
            let w = dominant_weight(&alg, &target.labels)?;
            let order = ordered_upto(&alg, &w)?;
            let t = Tables::build(&alg, &order)?.map_err(|f| Failure::Counterexample(format!("{f:?}")))?;
            let m = match matrix {
                MatrixKind::OrbitSum => &t.orbit_sums,
                MatrixKind::Char => &t.characters,
                MatrixKind::LayerSum => &t.layer_sums,
                MatrixKind::Decompose => &t.layer_decompositions,
                MatrixKind::Dominance => &t.dominance,
            };
            render::matrix(format, m)
        }
        Command::Verify { upto, bound, checks, .. } => {
            let checks = Check::parse_list(checks).map_err(Failure::Usage)?;
            let report: VerifyReport = match upto {
                Some(labels) => verify_upto(&alg, &dominant_weight(&alg, labels)?, &checks)?,
                None => {
                    let b = bound.unwrap_or_else(|| default_bound(alg.rank()));
                    verify_bound(&alg, &Rational::from_integer(b.into()), &checks)?
                }
            };
            let mut out = render::report(format, &report)?;
            if !report.all_pass() {
                out.status = 1;
            }
            Ok(out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format.unwrap_or(match cli.command {
        Command::Table { .. } => Format::Csv,
        _ => Format::Text,
    });
    let cache = if cli.no_cache { None } else { Cache::open(cli.cache_dir.clone(), VERSION) };
    let key = serde_json::json!({
        "command": &cli.command,
        "format": format,
        "max_order": cli.max_order,
        "max_degree": cli.max_degree,
    });

    if let Some(hit) = cache.as_ref().and_then(|c| c.get(&key)) {
        print!("{}", hit.stdout);
        return ExitCode::from(hit.status);
    }
    match run(&cli, format) {
        Ok(out) => {
            for line in &out.stderr {
                eprintln!("{line}");
            }
            print!("{}", out.stdout);
            if let Some(c) = &cache {
                c.put(&key, &out);
            }
            ExitCode::from(out.status)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Counterexample(msg)) => {
            eprintln!("counterexample: {msg}");
            ExitCode::from(1)
        }
    }
}
