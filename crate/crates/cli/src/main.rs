//! `edgedeg`: invariants of one graph, verification sweeps, and family tables.
//!
//! Exit codes: 0 success, 1 violations found, 2 usage or parse error,
//! 3 budget exceeded.

mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use edgedeg::bipartite::{decorate_default, q_report, DEFAULT_SUBSET_CAP};
use edgedeg::cameron_walker::{cw_decompose, cw_invariants, is_cameron_walker, is_c5};
use edgedeg::families::{cycle_alt_sum, family_degree_report, path_alt_sum, t_ladder, Family};
use edgedeg::formats::encode_graph6;
use edgedeg::homology::{regularity, DEFAULT_HOMOLOGY_CAP};
use edgedeg::independence::{independence_number, induced_matching_number, matching_number};
use edgedeg::verify::{run_check, SweepConfig, SweepReport, CHECK_IDS};
use edgedeg::{f_vector, summarize, Error, Graph, VertexSet};
use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

#[derive(Parser)]
#[command(name = "edgedeg", version, about = "h-polynomial degree and regularity of edge ideals")]
struct Cli {
    /// Worker threads for parallel work (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the invariants of one graph (or every graph6 line of a file).
    Invariants(InvariantsArgs),
    /// Run a verification sweep by id, or `all`.
    Verify(VerifyArgs),
    /// Closed-form and enumerated values for paths or cycles.
    Table(TableArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Path,
    Cycle,
}

#[derive(Args)]
#[group(required = true, multiple = false, id = "source")]
struct Source {
    /// Edge-list file (`n m` header) or file of graph6 lines.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    graph6: Option<String>,
    /// e.g. `path:7`, `cycle:6`, `kbipartite:3,2`, `star:4`, `complete:5`, `trianglestar:2`.
    #[arg(long)]
    family: Option<String>,
}

#[derive(Args)]
struct Format {
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    #[arg(long)]
    csv: bool,
}

#[derive(Args)]
struct InvariantsArgs {
    #[command(flatten)]
    source: Source,
    #[command(flatten)]
    format: Format,
    /// Largest vertex count for the homology-based regularity.
    #[arg(long, default_value_t = DEFAULT_HOMOLOGY_CAP)]
    budget: usize,
}

#[derive(Args)]
struct VerifyArgs {
    /// Check id, or `all`.
    id: String,
    /// Largest n for the path and cycle checks.
    #[arg(long, default_value_t = 18)]
    max_n: usize,
    /// Largest order of the exhaustive connected corpus.
    #[arg(long)]
    exhaustive: Option<usize>,
    /// Orders up to this are enumerated as labeled graphs, larger ones as isomorphism classes.
    #[arg(long, default_value_t = 7)]
    labeled_up_to: usize,
    #[arg(long, default_value_t = 8)]
    exhaustive_bipartite: usize,
    /// Number of random instances.
    #[arg(long)]
    random: Option<usize>,
    #[arg(long)]
    random_max_n: Option<usize>,
    /// Sampling stride for the Hilbert-function check.
    #[arg(long, default_value_t = 1000)]
    stride: usize,
    #[arg(long, default_value_t = 0x5eed)]
    seed: u64,
    /// Largest vertex count for the homology-based regularity.
    #[arg(long, default_value_t = DEFAULT_HOMOLOGY_CAP)]
    budget: usize,
    /// Largest `|U \ U_L|` whose subsets are enumerated.
    #[arg(long, default_value_t = DEFAULT_SUBSET_CAP)]
    subset_cap: usize,
    #[command(flatten)]
    format: Format,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    max_n: u64,
    /// Largest n whose degree is also computed by enumeration.
    #[arg(long, default_value_t = 24)]
    budget: u64,
    #[command(flatten)]
    format: Format,
}

/// Failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded { .. } | Error::SubsetBudgetExceeded { .. } => 3,
            Error::TheoremViolation(_) | Error::CalibrationFailed(_) | Error::InternalInconsistency(_) => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn big(x: &BigInt) -> Value {
    Value::Number(x.to_string().parse::<Number>().expect("an integer is a JSON number"))
}

fn bigs(xs: &[BigInt]) -> Value {
    Value::Array(xs.iter().map(big).collect())
}

fn set(s: VertexSet) -> Value {
    json!(s.iter().collect::<Vec<_>>())
}

fn load(source: &Source) -> Result<Vec<Graph>, Failure> {
    if let Some(path) = &source.input {
        let text = std::fs::read_to_string(path).map_err(|e| Failure {
            code: 2,
            message: format!("{}: {e}", path.display()),
        })?;
        return Ok(input::parse_file_contents(&text)?);
    }
    if let Some(s) = &source.graph6 {
        return Ok(vec![edgedeg::formats::parse_graph6(s.trim())?]);
    }
    let spec = source.family.as_deref().expect("clap enforces one source");
    Ok(vec![input::parse_family(spec)?])
}

fn invariants(g: &Graph, budget: usize) -> Result<Map<String, Value>, Failure> {
    let s = summarize(g)?;
    let fv = f_vector(g);
    let reg = regularity(g, budget)?;
    let (nu, mu) = (induced_matching_number(g), matching_number(g));
    debug_assert_eq!(independence_number(g), s.alpha);
    let mut m = Map::new();
    m.insert("graph6".into(), json!(encode_graph6(g)));
    m.insert("n".into(), json!(g.n()));
    m.insert("edges".into(), json!(g.edge_count()));
    m.insert("connected".into(), json!(g.is_connected()));
    m.insert("f_vector".into(), bigs(fv.counts()));
    m.insert("alpha".into(), json!(s.alpha));
    m.insert("g".into(), big(&s.g));
    m.insert("ladder".into(), bigs(&s.ladder));
    m.insert("d_prime".into(), json!(s.d_prime));
    m.insert("h".into(), bigs(s.h.coeffs()));
    m.insert("pole_order".into(), json!(s.pole_order));
    m.insert("deg_h".into(), json!(s.deg_h));
    m.insert("nu".into(), json!(nu));
    m.insert("mu".into(), json!(mu));
    m.insert("reg".into(), json!(reg));
    m.insert("reg_plus_deg_h".into(), json!(reg + s.deg_h));
    m.insert("five_cycle".into(), json!(is_c5(g)));
    let cw = g.n() >= 2 && is_cameron_walker(g);
    m.insert("cameron_walker".into(), json!(cw));
    if cw {
        let st = cw_decompose(g)?;
        let (deg, reg_formula) = cw_invariants(&st);
        m.insert(
            "cw_structure".into(),
            json!({
                "shape": st.shape,
                "r": st.r,
                "d": st.d,
                "k": st.k,
                "leaf_count": st.leaf_count,
                "triangle_count": st.triangle_count,
                "deg_h_formula": deg,
                "reg_formula": reg_formula,
            }),
        );
    }
    if g.n() >= 2 && g.is_connected() && g.is_bipartite() {
        let dec = decorate_default(g)?;
        let q = q_report(&dec, DEFAULT_SUBSET_CAP)?;
        m.insert("q".into(), json!(q.q));
        m.insert("attains_alpha".into(), json!(q.attains_alpha));
        m.insert(
            "bipartite".into(),
            json!({
                "u": set(dec.bip.u),
                "v": set(dec.bip.v),
                "v_w": set(dec.v_w),
                "u_l": set(dec.u_l),
                "x": q.x_members.iter().map(|&s| set(s)).collect::<Vec<_>>(),
            }),
        );
    }
    Ok(m)
}

const INVARIANT_COLUMNS: [&str; 11] = [
    "graph6", "n", "edges", "alpha", "g", "deg_h", "h", "nu", "mu", "reg", "cameron_walker",
];

fn csv_cell(v: Option<&Value>) -> String {
    match v {
        None | Some(Value::Null) => String::new(),
        Some(Value::String(s)) => s.clone(),
        Some(Value::Array(a)) => a.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "),
        Some(other) => other.to_string(),
    }
}

fn cmd_invariants(args: &InvariantsArgs) -> Result<(), Failure> {
    let graphs = load(&args.source)?;
    let records = graphs
        .iter()
        .map(|g| invariants(g, args.budget))
        .collect::<Result<Vec<_>, _>>()?;
    if args.format.csv {
        println!("{}", INVARIANT_COLUMNS.join(","));
        for r in &records {
            let row: Vec<String> = INVARIANT_COLUMNS.iter().map(|c| csv_cell(r.get(*c))).collect();
            println!("{}", row.join(","));
        }
    } else if records.len() == 1 {
        println!("{}", Value::Object(records.into_iter().next().expect("one record")));
    } else {
        println!("{}", Value::Array(records.into_iter().map(Value::Object).collect()));
    }
    Ok(())
}

fn cmd_verify(args: &VerifyArgs) -> Result<bool, Failure> {
    let cfg = SweepConfig {
        max_n: args.max_n,
        exhaustive: args.exhaustive,
        labeled_up_to: args.labeled_up_to,
        exhaustive_bipartite: args.exhaustive_bipartite,
        random: args.random,
        random_max_n: args.random_max_n,
        sample_stride: args.stride,
        seed: args.seed,
        homology_cap: args.budget,
        subset_cap: args.subset_cap,
    };
    let ids: Vec<&str> = if args.id == "all" {
        CHECK_IDS.to_vec()
    } else {
        vec![args.id.as_str()]
    };
    let reports = ids
        .iter()
        .map(|id| run_check(id, &cfg))
        .collect::<Result<Vec<SweepReport>, _>>()
        .map_err(|e| match e {
            // an unknown id is a usage error
            Error::NotApplicable(m) => Failure { code: 2, message: m },
            e => Failure::from(e),
        })?;
    if args.format.csv {
        println!("theorem_id,corpus_spec,instances_checked,violations,wall_time");
        for r in &reports {
            println!(
                "{},\"{}\",{},{},{:.3}",
                r.theorem_id,
                r.corpus_spec,
                r.instances_checked,
                r.violations.join(" "),
                r.wall_time
            );
        }
    } else if reports.len() == 1 {
        println!("{}", serde_json::to_string(&reports[0]).expect("report serializes"));
    } else {
        println!("{}", serde_json::to_string(&reports).expect("reports serialize"));
    }
    Ok(reports.iter().all(SweepReport::passed))
}

fn cmd_table(args: &TableArgs) -> Result<(), Failure> {
    let (family, first) = match args.family {
        FamilyArg::Path => (Family::Path, 1),
        FamilyArg::Cycle => (Family::Cycle, 3),
    };
    let mut rows = Vec::new();
    for n in first..=args.max_n {
        let r = family_degree_report(family, n, args.budget)?;
        let (g, t) = match family {
            Family::Path => (path_alt_sum(n), Some(t_ladder(n))),
            Family::Cycle => (cycle_alt_sum(n), None),
        };
        rows.push((r, g, t));
    }
    if args.format.json {
        let v: Vec<Value> = rows
            .iter()
            .map(|(r, g, t)| {
                json!({
                    "n": r.n,
                    "alpha": r.alpha,
                    "g": g,
                    "T_n": t.as_ref().map(big),
                    "deg_formula": r.deg_formula,
                    "deg_brute": r.deg_brute,
                })
            })
            .collect();
        println!("{}", Value::Array(v));
    } else {
        println!("n,alpha,g,T_n,deg_formula,deg_brute");
        for (r, g, t) in &rows {
            let t = t.as_ref().map(|t| t.to_string()).unwrap_or_default();
            let brute = r.deg_brute.map(|d| d.to_string()).unwrap_or_default();
            println!("{},{},{},{},{},{}", r.n, r.alpha, g, t, r.deg_formula, brute);
        }
    }
    if let Some((r, ..)) = rows.iter().find(|(r, ..)| !r.consistent()) {
        return Err(Failure {
            code: 1,
            message: format!("formula degree {} disagrees with enumeration at n = {}", r.deg_formula, r.n),
        });
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            eprintln!("edgedeg: cannot size the worker pool: {e}");
            return ExitCode::from(2);
        }
    }
    let outcome = match &cli.command {
        Command::Invariants(a) => cmd_invariants(a).map(|_| true),
        Command::Verify(a) => cmd_verify(a),
        Command::Table(a) => cmd_table(a).map(|_| true),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("edgedeg: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
