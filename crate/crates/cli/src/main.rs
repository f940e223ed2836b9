use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lpbc::catalog::{self, theorem1_list, Family};
use lpbc::classifier::{
    enumerate_bicircular_corpus, enumerate_lpm_corpus, member_direct, member_theorem1,
    verify_theorem1, VerifyOptions,
};
use lpbc::format::{self, parse_input};
use lpbc::latticepath::{is_lattice_path, matroid_of_lpm, LatticePathPresentation};
use lpbc::{bicircular, BasisMatroid, Config, ElementSet, Error, Representation};

#[derive(Parser, Debug)]
#[command(name = "lpbc", version, about = "Bicircular and lattice path matroid toolkit")]
struct Cli {
    /// Backtracking nodes allowed per search.
    #[arg(long, global = true, env = "LPBC_NODE_BUDGET")]
    node_budget: Option<u64>,
    /// Largest ground set accepted by membership checks.
    #[arg(long, global = true, env = "LPBC_MAX_ELEMENTS")]
    max_elements: Option<usize>,
    /// Accepted for compatibility; every algorithm is deterministic.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct InputArg {
    /// Input file; standard input when omitted or `-`.
    input: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a matroid and print it in matroid format.
    Construct(ConstructArgs),
    /// Print the bases.
    Bases(InputArg),
    /// Print the circuits, smallest first.
    Circuits(InputArg),
    /// Print the rank of the matroid or of a subset.
    Rank {
        #[command(flatten)]
        input: InputArg,
        /// Comma-separated subset.
        #[arg(long, value_parser = parse_set)]
        set: Option<ElementSet>,
    },
    /// Print the dual matroid.
    Dual(InputArg),
    /// Contract and delete elements, relabeling the rest to 1..n.
    Minor {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, value_parser = parse_set, default_value = "")]
        contract: ElementSet,
        #[arg(long, value_parser = parse_set, default_value = "")]
        delete: ElementSet,
    },
    /// Decide class membership.
    Check(CheckArgs),
    /// The excluded minors of the bicircular lattice path class.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Print an exhaustive corpus, one matroid per isomorphism class.
    Corpus {
        #[command(subcommand)]
        kind: CorpusKind,
    },
    /// Run a verification harness.
    Verify {
        #[command(subcommand)]
        what: VerifyWhat,
    },
}

#[derive(Args, Debug)]
#[group(skip)]
struct ConstructArgs {
    /// U_{r,n}.
    #[arg(long, group = "source", num_args = 2, value_names = ["R", "N"])]
    uniform: Option<Vec<usize>>,
    /// One of P, Pprime, A, B, C, D, E.
    #[arg(long, group = "source", requires = "n")]
    family: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    /// Lower and upper path step strings.
    #[arg(long, group = "source", num_args = 2, value_names = ["P", "Q"])]
    lpm: Option<Vec<String>>,
    /// A catalog name such as `W^3` or `B4,2`.
    #[arg(long, group = "source")]
    name: Option<String>,
    /// Any supported input format.
    #[arg(long, group = "source")]
    from: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[command(flatten)]
    input: InputArg,
    #[arg(long, value_enum, conflicts_with_all = ["lattice_path", "bicircular"])]
    class: Option<Class>,
    #[arg(long)]
    lattice_path: bool,
    #[arg(long, conflicts_with = "lattice_path")]
    bicircular: bool,
    /// For `--class lpbc`, test both classes instead of the excluded minors.
    #[arg(long)]
    direct: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Class {
    Lpbc,
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    /// One line per entry.
    List,
    /// Print a named matroid.
    Emit {
        name: String,
        #[arg(long = "as", value_enum, default_value = "matroid")]
        kind: EmitKind,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum EmitKind {
    Matroid,
    Graph,
    Lpm,
}

#[derive(Subcommand, Debug)]
enum CorpusKind {
    Lpm {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    Bicircular {
        #[arg(long, default_value_t = 5)]
        max_edges: usize,
        #[arg(long, default_value_t = 3)]
        max_vertices: usize,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyWhat {
    Theorem1 {
        #[arg(long, default_value_t = 8)]
        lpm_max_n: usize,
        #[arg(long, default_value_t = 7)]
        max_edges: usize,
        #[arg(long, default_value_t = 4)]
        max_vertices: usize,
    },
}

fn parse_set(s: &str) -> Result<ElementSet, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .ok()
                .filter(|&e| (1..=lpbc::MAX_ELEMENTS).contains(&e))
                .ok_or_else(|| format!("bad element {t:?}"))
        })
        .collect()
}

#[derive(Debug)]
enum Failure {
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

fn read_text(input: &InputArg) -> Result<String, Failure> {
    match &input.input {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)
            .map_err(|e| Failure::Io(format!("{}: {e}", p.display()))),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn read_matroid(input: &InputArg) -> Result<BasisMatroid, Failure> {
    Ok(parse_input(&read_text(input)?)?.to_matroid()?)
}

fn config(cli: &Cli) -> Config {
    let mut c = Config::default();
    if let Some(b) = cli.node_budget {
        c.node_budget = b;
    }
    if let Some(m) = cli.max_elements {
        c.max_elements = m;
    }
    c
}

fn construct(args: &ConstructArgs) -> Result<BasisMatroid, Failure> {
    if let Some(u) = &args.uniform {
        let (r, n) = (u[0], u[1]);
        if r > n || n > lpbc::MAX_ELEMENTS {
            return Err(Error::BadParameters(format!("U{r},{n}")).into());
        }
        return Ok(BasisMatroid::uniform(r, n));
    }
    if let Some(name) = &args.family {
        let n = args.n.expect("required by clap");
        let need_k = || args.k.ok_or_else(|| Error::BadParameters(format!("family {name} needs --k")));
        let f = match name.as_str() {
            "P" => Family::P(n),
            "Pprime" | "P'" => Family::Pprime(n),
            "A" => Family::A(n),
            "B" => Family::B(n, need_k()?),
            "C" => Family::C(n, need_k()?),
            "D" => Family::D(n),
            "E" => Family::E(n),
            other => return Err(Error::UnknownName(other.to_string()).into()),
        };
        return Ok(catalog::family(f)?);
    }
    if let Some(pq) = &args.lpm {
        return Ok(matroid_of_lpm(&LatticePathPresentation::from_strings(&pq[0], &pq[1])?));
    }
    if let Some(name) = &args.name {
        return Ok(catalog::lookup(name)?);
    }
    read_matroid(&InputArg {
        input: args.from.clone(),
    })
}

fn run(cli: &Cli, out: &mut String) -> Result<bool, Failure> {
    use std::fmt::Write as _;
    let config = config(cli);
    match &cli.command {
        Command::Construct(args) => out.push_str(&format::write_matroid(&construct(args)?)),
        Command::Bases(input) => {
            for b in read_matroid(input)?.bases_lex() {
                writeln!(out, "{}", join(&b)).unwrap();
            }
        }
        Command::Circuits(input) => {
            for c in read_matroid(input)?.circuits() {
                writeln!(out, "{}", join(&c.to_vec())).unwrap();
            }
        }
        Command::Rank { input, set } => {
            let m = read_matroid(input)?;
            let r = match set {
                Some(s) => {
                    if !s.is_subset(m.ground()) {
                        return Err(Error::ElementOutOfRange {
                            element: s.max_element(),
                            n: m.n(),
                        }
                        .into());
                    }
                    m.rank_of(*s)
                }
                None => m.rank(),
            };
            writeln!(out, "rank {r}").unwrap();
        }
        Command::Dual(input) => out.push_str(&format::write_matroid(&read_matroid(input)?.dual())),
        Command::Minor {
            input,
            contract,
            delete,
        } => {
            let m = read_matroid(input)?;
            out.push_str(&format::write_matroid(&m.minor(*contract, *delete)?));
        }
        Command::Check(args) => return check(args, &config, out),
        Command::Catalog { action } => match action {
            CatalogAction::List => {
                for e in theorem1_list() {
                    let kinds: Vec<&str> = e.representations.iter().map(Representation::kind).collect();
                    writeln!(
                        out,
                        "{} group {} n {} r {} bases {} representations {}",
                        e.name,
                        e.group.label(),
                        e.matroid.n(),
                        e.matroid.rank(),
                        e.matroid.num_bases(),
                        kinds.join(",")
                    )
                    .unwrap();
                }
            }
            CatalogAction::Emit { name, kind } => match kind {
                EmitKind::Matroid => out.push_str(&format::write_matroid(&catalog::lookup(name)?)),
                EmitKind::Graph => {
                    let g = catalog::theorem1_entry(name)
                        .ok()
                        .and_then(|e| e.graph().cloned())
                        .map_or_else(|| catalog::figure_graph(name), Ok)?;
                    out.push_str(&format::write_graph(&g));
                }
                EmitKind::Lpm => {
                    let l = catalog::theorem1_entry(name)?
                        .lattice_path()
                        .ok_or_else(|| Error::UnknownName(format!("{name} has no lattice path presentation")))?;
                    out.push_str(&format::write_lpm(l));
                }
            },
        },
        Command::Corpus { kind } => match kind {
            CorpusKind::Lpm { max_n } => {
                for (i, e) in enumerate_lpm_corpus(*max_n).iter().enumerate() {
                    writeln!(out, "# lpm#{i} {}", e.presentation).unwrap();
                    out.push_str(&format::write_matroid(&e.matroid));
                }
            }
            CorpusKind::Bicircular {
                max_edges,
                max_vertices,
            } => {
                for (i, e) in enumerate_bicircular_corpus(*max_edges, *max_vertices)
                    .iter()
                    .enumerate()
                {
                    writeln!(out, "# bicircular#{i}").unwrap();
                    out.push_str(&format::write_matroid(&e.matroid));
                }
            }
        },
        Command::Verify { what } => match what {
            VerifyWhat::Theorem1 {
                lpm_max_n,
                max_edges,
                max_vertices,
            } => {
                let report = verify_theorem1(&VerifyOptions {
                    config,
                    lpm_max_n: *lpm_max_n,
                    bicircular_max_edges: *max_edges,
                    bicircular_max_vertices: *max_vertices,
                });
                write!(out, "{report}").unwrap();
                return Ok(report.passed());
            }
        },
    }
    Ok(true)
}

fn check(args: &CheckArgs, config: &Config, out: &mut String) -> Result<bool, Failure> {
    use std::fmt::Write as _;
    let m = read_matroid(&args.input)?;
    if args.lattice_path {
        let (lp, w) = is_lattice_path(&m, config, &mut config.budget())?;
        writeln!(out, "lattice-path {lp}").unwrap();
        if let Some(w) = w {
            out.push_str(&format::write_witness(&w));
        }
        return Ok(lp);
    }
    if args.bicircular {
        let g = bicircular::is_bicircular(&m, &mut config.budget())?;
        writeln!(out, "bicircular {}", g.is_some()).unwrap();
        if let Some(g) = &g {
            out.push_str(&format::write_graph(g));
        }
        return Ok(g.is_some());
    }
    let v = if args.direct {
        member_direct(&m, config)?
    } else {
        member_theorem1(&m, config)?
    };
    writeln!(out, "member {}", v.member).unwrap();
    if let (Some(lp), Some(bic)) = (v.lattice_path, v.bicircular) {
        writeln!(out, "lattice-path {lp}\nbicircular {bic}").unwrap();
    }
    if let Some(w) = &v.witness {
        out.push_str(&format::write_witness(w));
    }
    Ok(v.member)
}

fn join(items: &[usize]) -> String {
    items.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(&cli, &mut out);
    let _ = io::stdout().write_all(out.as_bytes());
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
