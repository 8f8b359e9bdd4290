//! `msupp`: multidegree supports from the command line.
//!
//! Every subcommand reads one JSON document (a path, inline text, or stdin)
//! and writes one JSON document to stdout. Diagnostics go to stderr.
//! Exit status: 0 on success, 2 for invalid input, 3 when a size or budget
//! limit is hit.

mod schema;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Value};

use msupp::hilbert::{self, fixtures, MonomialIdeal, SimplicialComplex};
use msupp::polymatroid::{self, RankFunction, SubspaceFamily};
use msupp::schubert::{self, Convention, Diagram, Permutation};
use msupp::subset::Subset;
use msupp::support::{compositions, Support};
use msupp::{flagmoduli, mixedvol, LatticePolytope};

#[derive(Parser, Debug)]
#[command(
    name = "msupp",
    version,
    about = "Exact multidegree supports of multiprojective varieties"
)]
struct Cli {
    /// JSON input: a file path, inline JSON, or `-` for stdin.
    #[arg(long, global = true)]
    input: Option<String>,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Coordinates for reported supports.
    #[arg(long, global = true, value_enum, default_value_t = ConventionArg::Msupp)]
    convention: ConventionArg,
    /// Timing and progress notes on stderr.
    #[arg(long, short, global = true)]
    verbose: bool,
    /// Worker threads for parallel steps (output does not depend on it).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Print the JSON schema of an input type and exit.
    #[arg(long, value_name = "NAME")]
    schema: Option<String>,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ConventionArg {
    /// Multidegree types `n`.
    Msupp,
    /// Exponents `m - n` of the multidegree polynomial.
    Exponent,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Schubert polynomial of a permutation and its support.
    Schubert {
        /// One-line notation, e.g. `3,2,1` or `321`.
        #[arg(long)]
        perm: String,
    },
    /// θ statistic of a Rothe diagram (from --perm) or of a diagram read from input.
    Theta {
        #[arg(long)]
        perm: Option<String>,
        /// Row subset, e.g. `2,3`; the whole table when omitted.
        #[arg(long)]
        subset: Option<String>,
    },
    /// Support from a rank table.
    MsuppRank {
        /// Projective dimensions `m`, needed for `--convention exponent`.
        #[arg(long)]
        proj_dims: Option<String>,
    },
    /// Support of the linear polymatroid of a subspace family.
    MsuppLinear {
        /// Projective dimensions `m`; each defaults to the ambient dimension.
        #[arg(long)]
        proj_dims: Option<String>,
    },
    /// Exchange-axiom check of a support.
    Mconvex,
    /// K-polynomial of a monomial ideal.
    Kpoly,
    /// Terms of K(1 - t) of total degree equal to the codimension.
    Multidegree,
    /// Stanley–Reisner ideal of a simplicial complex.
    SrIdeal {
        #[arg(long)]
        fixture: Option<String>,
        /// Each vertex gets a block of `m + 1` variables.
        #[arg(long, default_value_t = 0)]
        block_dim: usize,
    },
    /// Incidence vectors of the largest facets.
    FacetSupport {
        #[arg(long)]
        fixture: Option<String>,
    },
    /// Mixed-volume table of a polytope tuple.
    Mixedvol,
    /// Dimension and segment criteria for a polytope tuple.
    Positivity {
        /// Type `n`, e.g. `1,1`; every type when omitted.
        #[arg(long)]
        n: Option<String>,
    },
    /// Support of the complete flag variety of a (p+1)-space.
    Flag {
        #[arg(long)]
        p: usize,
    },
    /// Support of the iterated Keel–Tevelev embedding of M̄_{0,p+3}.
    M0n {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        count_only: bool,
    },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Parse { path: String, message: String },
    Io(String),
    Lib(msupp::Error),
}

impl From<msupp::Error> for CliError {
    fn from(e: msupp::Error) -> Self {
        CliError::Lib(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(e) if e.is_budget() => 3,
            _ => 2,
        }
    }

    fn report(&self) -> String {
        match self {
            CliError::Usage(m) => format!("error: {m}"),
            CliError::Parse { path, message } => {
                format!("error: invalid input at `{path}`: {message}")
            }
            CliError::Io(m) => format!("error: {m}"),
            CliError::Lib(e) => format!("error: {e}"),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

struct Ctx {
    input: Option<String>,
    convention: ConventionArg,
    verbose: bool,
    started: Instant,
}

impl Ctx {
    fn note(&self, msg: &str) {
        if self.verbose {
            eprintln!("[{:>8.3}s] {msg}", self.started.elapsed().as_secs_f64());
        }
    }

    fn raw_input(&self) -> CliResult<String> {
        match self.input.as_deref() {
            None | Some("-") => {
                let mut s = String::new();
                io::stdin()
                    .read_to_string(&mut s)
                    .map_err(|e| CliError::Io(format!("reading stdin: {e}")))?;
                Ok(s)
            }
            Some(text) if text.trim_start().starts_with(['{', '[']) => Ok(text.to_string()),
            Some(path) => {
                fs::read_to_string(path).map_err(|e| CliError::Io(format!("reading {path}: {e}")))
            }
        }
    }

    fn read<T: DeserializeOwned>(&self) -> CliResult<T> {
        parse_json(&self.raw_input()?)
    }
}

fn parse_json<T: DeserializeOwned>(text: &str) -> CliResult<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        CliError::Parse {
            path,
            message: e.into_inner().to_string(),
        }
    })
}

fn parse_list(text: &str, what: &str) -> CliResult<Vec<u32>> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| CliError::Usage(format!("bad {what} `{text}`")))
        })
        .collect()
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("library types serialize")
}

fn support_doc(s: &Support, convention: ConventionArg) -> Value {
    let mut v = to_value(s);
    v["count"] = json!(s.len());
    v["convention"] = json!(match convention {
        ConventionArg::Msupp => "msupp",
        ConventionArg::Exponent => "exponent",
    });
    v
}

/// Applies `--convention` to a support given in multidegree types.
fn in_convention(
    s: &Support,
    convention: ConventionArg,
    dims: Option<&[u32]>,
) -> CliResult<Support> {
    match convention {
        ConventionArg::Msupp => Ok(s.clone()),
        ConventionArg::Exponent => {
            let dims = dims
                .ok_or_else(|| CliError::Usage("--convention exponent needs --proj-dims".into()))?;
            Ok(s.complement(dims)?)
        }
    }
}

fn proj_dims(text: Option<&str>, p: usize) -> CliResult<Option<Vec<u32>>> {
    let Some(text) = text else { return Ok(None) };
    let dims = parse_list(text, "--proj-dims")?;
    if dims.len() != p {
        return Err(CliError::Lib(msupp::Error::DimensionMismatch {
            expected: p,
            got: dims.len(),
        }));
    }
    Ok(Some(dims))
}

fn complex_input(ctx: &Ctx, fixture: Option<&str>) -> CliResult<SimplicialComplex> {
    match fixture {
        Some(name) => fixtures::by_name(name).ok_or_else(|| {
            CliError::Usage(format!(
                "unknown fixture `{name}` (known: {})",
                fixtures::NAMES.join(", ")
            ))
        }),
        None => ctx.read(),
    }
}

#[derive(Deserialize)]
struct PolytopeList {
    polytopes: Vec<LatticePolytope>,
}

fn permutation(text: &str) -> CliResult<Permutation> {
    Ok(Permutation::parse(text)?)
}

fn run(cmd: &Command, ctx: &Ctx) -> CliResult<Value> {
    Ok(match cmd {
        Command::Schubert { perm } => {
            let pi = permutation(perm)?;
            let poly = schubert::schubert_polynomial(&pi);
            ctx.note(&format!("{} terms", poly.num_terms()));
            let conv = match ctx.convention {
                ConventionArg::Msupp => Convention::Msupp,
                ConventionArg::Exponent => Convention::Exponent,
            };
            let support = schubert::schubert_polynomial_support(&pi, conv);
            json!({
                "permutation": pi.one_line(),
                "length": schubert::length(&pi),
                "polynomial": to_value(&poly),
                "display": poly.to_string(),
                "support": support_doc(&support, ctx.convention),
            })
        }
        Command::Theta { perm, subset } => {
            let d: Diagram = match perm {
                Some(p) => schubert::rothe_diagram(&permutation(p)?),
                None => ctx.read()?,
            };
            match subset {
                Some(text) => {
                    let rows: Vec<usize> = parse_list(text, "--subset")?
                        .into_iter()
                        .map(|x| x as usize)
                        .collect();
                    if let Some(&bad) = rows.iter().find(|&&r| r == 0 || r > d.p()) {
                        return Err(CliError::Usage(format!("row {bad} outside [{}]", d.p())));
                    }
                    let s = Subset::from_elements(&rows);
                    json!({ "subset": s, "theta": schubert::theta(&d, s) })
                }
                None => {
                    let table = schubert::theta_table(&d);
                    json!({ "p": d.p(), "values": table.values() })
                }
            }
        }
        Command::MsuppRank { proj_dims: dims } => {
            let r: RankFunction = ctx.read()?;
            let report = polymatroid::validate_rank_function(&r);
            if !report.valid {
                eprintln!("error: not a rank function");
                return Ok(json!({ "valid": false, "report": to_value(&report) }));
            }
            let s = polymatroid::msupp_from_rank(&r)?;
            let dims = proj_dims(dims.as_deref(), r.p())?;
            support_doc(
                &in_convention(&s, ctx.convention, dims.as_deref())?,
                ctx.convention,
            )
        }
        Command::MsuppLinear { proj_dims: dims } => {
            let fam: SubspaceFamily = ctx.read()?;
            let r = polymatroid::linear_rank(&fam)?;
            ctx.note(&format!("rank table over {}", fam.field()));
            let s = polymatroid::msupp_from_rank(&r)?;
            let dims = proj_dims(dims.as_deref(), fam.p())?
                .unwrap_or_else(|| vec![fam.ambient() as u32; fam.p()]);
            let mut doc = support_doc(
                &in_convention(&s, ctx.convention, Some(&dims))?,
                ctx.convention,
            );
            doc["rank"] = to_value(&r);
            doc["proj_dims"] = json!(dims);
            doc
        }
        Command::Mconvex => {
            let s: Support = ctx.read()?;
            let report = polymatroid::is_mconvex(&s)?;
            let mut v = to_value(&report);
            v["count"] = json!(s.len());
            v
        }
        Command::Kpoly => {
            let ideal: MonomialIdeal = ctx.read()?;
            to_value(&hilbert::kpolynomial(&ideal))
        }
        Command::Multidegree => {
            let ideal: MonomialIdeal = ctx.read()?;
            eprintln!(
                "warning: output is C(R;t); it equals the multidegree polynomial only if (0 :_R N^inf) = 0, which is not checked"
            );
            let dim = hilbert::krull_dimension(&ideal)?;
            let poly = hilbert::multidegree_polynomial(&ideal)?;
            let exps = poly.support()?;
            let mut doc = json!({
                "dim": dim,
                "codim": ideal.nvars() - dim,
                "polynomial": to_value(&poly),
            });
            let grading = ideal.grading();
            let support = match (ctx.convention, grading.block_sizes()) {
                (ConventionArg::Exponent, _) => Some(exps),
                (ConventionArg::Msupp, Some(sizes)) if sizes.iter().all(|&s| s > 0) => {
                    let m: Vec<u32> = sizes.iter().map(|&s| s as u32 - 1).collect();
                    let fits = exps.points().all(|e| e.iter().zip(&m).all(|(a, b)| a <= b));
                    if !fits {
                        eprintln!("warning: exponents exceed the block dimensions; support omitted in msupp coordinates");
                    }
                    fits.then(|| exps.complement(&m)).transpose()?
                }
                (ConventionArg::Msupp, _) => {
                    eprintln!(
                        "warning: grading is not standard; support omitted in msupp coordinates"
                    );
                    None
                }
            };
            if let Some(s) = support {
                doc["support"] = support_doc(&s, ctx.convention);
            }
            doc
        }
        Command::SrIdeal { fixture, block_dim } => {
            let c = complex_input(ctx, fixture.as_deref())?;
            to_value(&hilbert::stanley_reisner_ideal_blocks(&c, *block_dim))
        }
        Command::FacetSupport { fixture } => {
            let c = complex_input(ctx, fixture.as_deref())?;
            let s = hilbert::facet_support(&c);
            let mut doc = support_doc(&s, ConventionArg::Msupp);
            doc["f_vector"] = json!(c.f_vector());
            doc["mconvex"] = to_value(&polymatroid::is_mconvex(&s)?);
            doc
        }
        Command::Mixedvol => {
            let list: PolytopeList = ctx.read()?;
            to_value(&mixedvol::mixed_volumes(&list.polytopes)?)
        }
        Command::Positivity { n } => {
            let list: PolytopeList = ctx.read()?;
            let ks = &list.polytopes;
            let d = ks.first().ok_or(msupp::Error::Empty("polytope list"))?.d();
            let types = match n {
                Some(text) => vec![parse_list(text, "--n")?],
                None => compositions(d as u32, ks.len()),
            };
            let rows: Vec<Value> = types
                .iter()
                .map(|n| {
                    let witness = mixedvol::independent_segments(ks, n)?;
                    Ok(json!({
                        "n": n,
                        "positivity": mixedvol::positivity_criterion(ks, n)?,
                        "segments": witness.is_some(),
                        "witness": witness.map(|segs| segs.iter().map(|s| json!({
                            "body": s.body,
                            "from": s.from.iter().map(msupp::scalar::format_rational).collect::<Vec<_>>(),
                            "to": s.to.iter().map(msupp::scalar::format_rational).collect::<Vec<_>>(),
                        })).collect::<Vec<_>>()),
                    }))
                })
                .collect::<CliResult<_>>()?;
            json!({ "d": d, "p": ks.len(), "types": rows })
        }
        Command::Flag { p } => {
            let s = flagmoduli::flag_msupp(*p)?;
            let mut doc = json!({ "p": p, "support": support_doc(&s, ConventionArg::Msupp), "count": s.len() });
            if *p <= 6 {
                let cmp = flagmoduli::flag_comparison(*p)?;
                for r in &cmp.readings {
                    ctx.note(&format!(
                        "display reading {:?}: agrees = {}",
                        r.reading, r.agrees
                    ));
                }
                doc["comparison"] = to_value(&cmp.readings);
            } else {
                ctx.note("comparison skipped for p > 6");
            }
            doc
        }
        Command::M0n { p, count_only } => {
            let s = flagmoduli::m0n_msupp(*p)?;
            if *count_only {
                json!(s.len())
            } else {
                support_doc(&s, ConventionArg::Msupp)
            }
        }
    })
}

fn emit(value: &Value, output: Option<&PathBuf>) -> CliResult<()> {
    let mut text = serde_json::to_string_pretty(value).expect("values serialize");
    text.push('\n');
    match output {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::Io(format!("writing {}: {e}", path.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io(format!("writing stdout: {e}"))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = (|| -> CliResult<()> {
        if let Some(n) = cli.threads {
            rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global()
                .map_err(|e| CliError::Usage(format!("--threads: {e}")))?;
        }
        if let Some(name) = &cli.schema {
            let s = schema::schema(name).ok_or_else(|| {
                CliError::Usage(format!(
                    "unknown schema `{name}` (known: {})",
                    schema::NAMES.join(", ")
                ))
            })?;
            return emit(&s, cli.output.as_ref());
        }
        let cmd = cli
            .command
            .as_ref()
            .ok_or_else(|| CliError::Usage("no subcommand given (see --help)".into()))?;
        let ctx = Ctx {
            input: cli.input.clone(),
            convention: cli.convention,
            verbose: cli.verbose,
            started: Instant::now(),
        };
        let value = run(cmd, &ctx)?;
        ctx.note("done");
        emit(&value, cli.output.as_ref())
    })();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", e.report());
            ExitCode::from(e.exit_code())
        }
    }
}
