mod config;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use treecalc::arith::{AlphaPoly, Rational};
use treecalc::combinat::{BinaryTree, Family, PlaneTree, PERMUTATION_GUARD};
use treecalc::identities::{self, DuLiuVariant, IdentityReport, Statistic};
use treecalc::series::operators::{
    duliu_operator, integral_product, plane_q_operator, postnikov_operator, QSeriesOfT,
};
use treecalc::series::{fixed_point_binary, fixed_point_mary, fixed_point_plane, TruncatedSeries};
use treecalc::Error;

use config::{CliConfig, FileConfig, FlagConfig, Format};
use render::Output;

const EXIT_MISMATCH: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_GUARD: u8 = 3;

/// Largest `n` for which `--oracle` enumerates `S_n`.
const HOOK_ORACLE_GUARD: usize = 10;

#[derive(Parser, Debug)]
#[command(name = "treecalc", version, about = "Exact tree expansions and hook length identities")]
struct Cli {
    /// TOML file with defaults (max_degree, order, format, unsafe_large)
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Default size for `--n` [env: TREECALC_MAX_DEGREE] [default: 7]
    #[arg(long, global = true)]
    max_degree: Option<usize>,
    /// Truncation order of series [env: TREECALC_ORDER] [default: 8]
    #[arg(long, global = true)]
    order: Option<usize>,
    /// Lift the guards on enumerations and expansions
    #[arg(long, global = true)]
    unsafe_large: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hook length formula for a binary tree such as "((_,_),((_,_),_))"
    Hook {
        tree: String,
        #[arg(long, value_enum, default_value = "none")]
        q: QMode,
        /// Also enumerate the fiber of the decreasing-tree map
        #[arg(long)]
        oracle: bool,
    },
    /// Check an identity; exits 1 when the two sides differ
    Identity {
        #[command(subcommand)]
        which: IdentityCmd,
        #[arg(long, global = true)]
        per_tree: bool,
    },
    /// Tree expansion of a fixed-point equation
    Expand {
        #[arg(value_enum)]
        equation: Equation,
        /// Arity parameter of du-liu (trees are (m+1)-ary)
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long)]
        per_tree: bool,
    },
    /// Enumerate a combinatorial family in canonical order
    Enumerate {
        #[arg(value_enum)]
        family: FamilyName,
        #[arg(long)]
        n: Option<usize>,
        /// Arity parameter of mary-trees
        #[arg(long, default_value_t = 2)]
        m: usize,
        #[arg(long)]
        count_only: bool,
    },
}

#[derive(Subcommand, Debug)]
enum IdentityCmd {
    /// (n+1)^(n-1) = n!/2^n Σ_T ∏(1 + 1/h_v)
    Postnikov {
        #[arg(long)]
        n: Option<usize>,
    },
    /// Σ (n+1)^(n-1) t^n/n! against g = exp(t g) and its tree expansion
    Eisenstein,
    /// Tree sums of per-node hook factors as polynomials in α
    Duliu {
        #[arg(long, value_parser = parse_variant)]
        variant: DuLiuVariant,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 1)]
        m: usize,
    },
    /// f = (1 + t f^m)^α against the integro-algebraic fixed point
    Lagrange {
        #[arg(long, default_value_t = 1)]
        m: usize,
    },
    /// Binomial coefficients of F_T(1) against packed words grouped by tree
    Ft {
        #[arg(long)]
        tree: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum QMode {
    Imaj,
    Inv,
    None,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Equation {
    InverseLinear,
    Postnikov,
    Duliu,
    PlaneQ,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyName {
    BinaryTrees,
    MaryTrees,
    PlaneTrees,
    Permutations,
    PackedWords,
}

fn parse_variant(s: &str) -> Result<DuLiuVariant, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug)]
enum Failure {
    Parse(String),
    Guard(String),
    Other(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::SizeGuard { .. } => Failure::Guard(e.to_string()),
            Error::Parse(_)
            | Error::VariantArityMismatch { .. }
            | Error::BasisMismatch { .. }
            | Error::EmptyOperand => Failure::Parse(e.to_string()),
            _ => Failure::Other(e.to_string()),
        }
    }
}

fn guard(what: &'static str, size: usize, limit: usize, cfg: &CliConfig) -> Result<(), Failure> {
    if size > limit && !cfg.unsafe_large {
        return Err(Error::SizeGuard { what, size, limit }.into());
    }
    Ok(())
}

fn run_hook(tree: &str, q: QMode, oracle: bool, cfg: &CliConfig) -> Result<Output, Failure> {
    let t: BinaryTree = tree.parse()?;
    let n = t.node_count();
    let stat = match q {
        QMode::Imaj => Some(Statistic::Imaj),
        QMode::Inv => Some(Statistic::Inversions),
        QMode::None => None,
    };
    let (key, value) = match stat {
        None => ("count", identities::hook_count(&t)?.to_string()),
        Some(Statistic::Imaj) => ("polynomial", identities::qhook_imaj(&t)?.to_string()),
        Some(Statistic::Inversions) => ("polynomial", identities::qhook_inv(&t)?.to_string()),
    };
    let mut payload = json!({"tree": t.to_string(), "nodes": n, key: value});
    if let Some(s) = stat {
        payload["statistic"] = json!(if s == Statistic::Imaj { "imaj" } else { "inv" });
    }
    if !oracle {
        return Ok(Output::plain(payload));
    }
    guard("permutations for the oracle", n, HOOK_ORACLE_GUARD.min(PERMUTATION_GUARD), cfg)?;
    let brute = match stat {
        None => identities::fiber_sizes(n).get(&t).copied().unwrap_or(0).to_string(),
        Some(s) => identities::fiber_polynomials(n, s)
            .remove(&t)
            .unwrap_or_default()
            .to_string(),
    };
    let equal = brute == value;
    payload["oracle"] = json!(brute);
    payload["equal"] = json!(equal);
    Ok(Output::plain(payload).failing_unless(equal))
}

fn report_output(report: IdentityReport) -> Output {
    let equal = report.equal;
    let table = report.per_tree.as_ref().map(|rows| {
        rows.iter()
            .map(|r| vec![r["tree"].as_str().unwrap_or_default().to_string(), r["value"].as_str().unwrap_or_default().to_string()])
            .collect()
    });
    let payload = serde_json::to_value(&report).expect("report serializes");
    Output { payload, table: table.map(|rows| (vec!["tree", "value"], rows)), success: equal }
}

fn run_identity(which: &IdentityCmd, per_tree: bool, cfg: &CliConfig) -> Result<Output, Failure> {
    let n_or_default = |n: &Option<usize>| n.unwrap_or(cfg.max_degree);
    let report = match which {
        IdentityCmd::Postnikov { n } => {
            let n = n_or_default(n);
            identities::postnikov_check(n, per_tree)?
        }
        IdentityCmd::Eisenstein => identities::eisenstein_check(cfg.truncation_order)?,
        IdentityCmd::Duliu { variant, n, m } => {
            identities::duliu_check(*variant, n_or_default(n), *m, per_tree)?
        }
        IdentityCmd::Lagrange { m } => identities::lagrange_fixed_point_check(*m, cfg.truncation_order)?,
        IdentityCmd::Ft { tree } => {
            let t: PlaneTree = tree.parse()?;
            identities::ft_check(&t, cfg.unsafe_large)?
        }
    };
    Ok(report_output(report))
}

fn expansion_output(mut payload: Value, equation: &str) -> Output {
    payload["equation"] = json!(equation);
    let table = payload.get("terms").and_then(Value::as_array).map(|terms| {
        terms
            .iter()
            .map(|row| {
                let coeffs: Vec<&str> = row["term"]
                    .as_array()
                    .map(|a| a.iter().filter_map(Value::as_str).collect())
                    .unwrap_or_default();
                vec![row["tree"].as_str().unwrap_or_default().to_string(), coeffs.join(";")]
            })
            .collect()
    });
    Output { payload, table: table.map(|rows| (vec!["tree", "term"], rows)), success: true }
}

fn run_expand(equation: Equation, m: usize, per_tree: bool, cfg: &CliConfig) -> Result<Output, Failure> {
    let order = cfg.truncation_order;
    let out = match equation {
        Equation::InverseLinear => {
            guard("expansion order", order, 12, cfg)?;
            let one = TruncatedSeries::<Rational>::one(order);
            let x = fixed_point_binary(integral_product, &one)?;
            expansion_output(x.to_json(per_tree), "inverse-linear")
        }
        Equation::Postnikov => {
            guard("expansion order", order, 12, cfg)?;
            let one = TruncatedSeries::<Rational>::one(order);
            let x = fixed_point_binary(postnikov_operator, &one)?;
            expansion_output(x.to_json(per_tree), "postnikov")
        }
        Equation::Duliu => {
            guard("expansion order", order, 8, cfg)?;
            guard("du-liu m", m, 3, cfg)?;
            if m == 0 {
                return Err(Failure::Parse("du-liu needs m >= 1".into()));
            }
            let one = TruncatedSeries::<AlphaPoly>::one(order);
            let op = |args: &[&TruncatedSeries<AlphaPoly>]| duliu_operator(m, args);
            let x = fixed_point_mary(m, op, &one)?;
            let mut payload = x.to_json(per_tree);
            payload["m"] = json!(m);
            expansion_output(payload, "duliu")
        }
        Equation::PlaneQ => {
            guard("expansion order", order, 7, cfg)?;
            let one = QSeriesOfT::one(order);
            let x = fixed_point_plane(plane_q_operator, &one)?;
            expansion_output(x.to_json(per_tree), "plane-q")
        }
    };
    Ok(out)
}

fn run_enumerate(
    family: FamilyName,
    n: Option<usize>,
    m: usize,
    count_only: bool,
    cfg: &CliConfig,
) -> Result<Output, Failure> {
    let n = n.unwrap_or(cfg.max_degree);
    let (name, fam) = match family {
        FamilyName::BinaryTrees => ("binary-trees", Family::BinaryTrees { n }),
        FamilyName::MaryTrees => ("mary-trees", Family::MAryTrees { m, n }),
        FamilyName::PlaneTrees => ("plane-trees", Family::PlaneTrees { n }),
        FamilyName::Permutations => ("permutations", Family::Permutations { n }),
        FamilyName::PackedWords => ("packed-words", Family::PackedWords { n }),
    };
    if count_only {
        let count = fam.count(cfg.unsafe_large)?;
        return Ok(Output::plain(json!({"family": name, "n": n, "count": count})));
    }
    let items: Vec<String> = fam.encodings(cfg.unsafe_large)?.collect();
    let rows = items.iter().map(|s| vec![s.clone()]).collect();
    Ok(Output {
        payload: json!({"family": name, "n": n, "count": items.len(), "items": items}),
        table: Some((vec!["item"], rows)),
        success: true,
    })
}

fn run(cli: &Cli) -> Result<(Output, Format), Failure> {
    let file = cli
        .config
        .as_deref()
        .map(FileConfig::load)
        .transpose()
        .map_err(Failure::Parse)?;
    let flags = FlagConfig {
        max_degree: cli.max_degree,
        order: cli.order,
        format: cli.format,
        unsafe_large: cli.unsafe_large,
    };
    let cfg = CliConfig::resolve(&flags, file.as_ref(), &|k| std::env::var(k).ok())
        .map_err(Failure::Parse)?;
    let out = match &cli.command {
        Command::Hook { tree, q, oracle } => run_hook(tree, *q, *oracle, &cfg)?,
        Command::Identity { which, per_tree } => run_identity(which, *per_tree, &cfg)?,
        Command::Expand { equation, m, per_tree } => run_expand(*equation, *m, *per_tree, &cfg)?,
        Command::Enumerate { family, n, m, count_only } => {
            run_enumerate(*family, *n, *m, *count_only, &cfg)?
        }
    };
    Ok((out, cfg.output_format))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, format)) => match out.print(format) {
            Ok(()) if out.success => ExitCode::SUCCESS,
            Ok(()) => ExitCode::from(EXIT_MISMATCH),
            Err(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(EXIT_PARSE)
            }
        },
        Err(Failure::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_PARSE)
        }
        Err(Failure::Guard(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_GUARD)
        }
        Err(Failure::Other(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_MISMATCH)
        }
    }
}
