//! `arcperm`: enumerate, encode, verify and export.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on bad usage or
//! input. `ARCPERM_MAX_N` overrides the size caps.

use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;
use std::str::FromStr;

use arcperm::bijections::{phi, phi_inverse, psi_shape_inverse, psi_shape_map};
use arcperm::export::{export_arc_graph, export_dominance, export_weak_u};
use arcperm::families::{generate_family, DescentWord, Family, PsiCode};
use arcperm::shuffles::shuffle_union;
use arcperm::tableaux::{generate_hook_n, generate_t_n, StandardTableau};
use arcperm::verify::{find_claim, registry, VerifyReport};
use arcperm::Permutation;
use clap::{Args, Parser, Subcommand, ValueEnum};

const FAMILY_CAP: usize = 12;
const EXHAUSTIVE_CAP: usize = 8;

#[derive(Parser)]
#[command(name = "arcperm", version, about = "Arc permutations, unimodal permutations and friends")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List a family: L, U, A, Z, T, HOOK or SHUF.
    Gen {
        /// `N FAMILY` in either order.
        args: Vec<String>,
        #[arg(long = "n", id = "n_flag")]
        n_flag: Option<usize>,
        #[arg(long = "family", id = "family_flag")]
        family_flag: Option<String>,
        #[arg(long, value_enum, default_value_t = ListFormat::Lines)]
        format: ListFormat,
        #[command(flatten)]
        out: Out,
    },
    /// Run a registered claim over a range of degrees, e.g. `verify regev 4..7`.
    Verify {
        claim: Option<String>,
        range: Option<String>,
        #[arg(long = "range", id = "range_flag")]
        range_flag: Option<String>,
        /// List the registered claims.
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        out: Out,
    },
    /// Encode an arc permutation as a psi code or a descent word (nu).
    Encode {
        perm: String,
        #[arg(value_enum, default_value_t = Scheme::Psi)]
        scheme: Scheme,
    },
    /// Decode a psi code (`3,0,1,0,0,0`) or a descent word (`A[AD]D`).
    Decode {
        code: String,
        #[arg(value_enum, default_value_t = Scheme::Psi)]
        scheme: Scheme,
    },
    /// Apply one of the maps from non-unimodal arc permutations to tableaux.
    Biject {
        /// A permutation, or with `--inverse` a tableau such as `1 2 4 / 3 / 5`.
        input: String,
        #[arg(value_enum, default_value_t = MapKind::Phi)]
        map: MapKind,
        #[arg(long)]
        inverse: bool,
    },
    /// Export X_n, the Hasse diagram of Weak(U_n), or the dominance box.
    Graph {
        /// `N KIND` in either order; KIND is xn, weak-u or dominance.
        args: Vec<String>,
        #[arg(long = "n", id = "n_flag")]
        n_flag: Option<usize>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
        format: GraphFormat,
        #[command(flatten)]
        out: Out,
    },
}

#[derive(Args)]
struct Out {
    /// Write to a file instead of stdout.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ListFormat {
    Lines,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Scheme {
    Psi,
    Nu,
}

#[derive(Clone, Copy, ValueEnum)]
enum MapKind {
    Phi,
    Shape,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphKind {
    Xn,
    WeakU,
    Dominance,
}

/// Failure modes mapped onto exit codes.
enum Failure {
    Usage(String),
    Verification,
}

impl From<arcperm::Error> for Failure {
    fn from(e: arcperm::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn cap(default: usize) -> usize {
    std::env::var("ARCPERM_MAX_N").ok().and_then(|v| v.parse().ok()).unwrap_or(default)
}

fn overridden() -> bool {
    std::env::var("ARCPERM_MAX_N").ok().and_then(|v| v.parse::<usize>().ok()).is_some()
}

fn pick<T>(positional: Option<T>, flag: Option<T>, what: &str) -> Result<T, Failure> {
    match (positional, flag) {
        (Some(_), Some(_)) => Err(Failure::Usage(format!("{what} given twice"))),
        (Some(v), None) | (None, Some(v)) => Ok(v),
        (None, None) => Err(Failure::Usage(format!("missing {what}"))),
    }
}

fn check_cap(n: usize, limit: usize) -> Outcome {
    if n > limit {
        return Err(Failure::Usage(format!("n = {n} exceeds the cap {limit} (set ARCPERM_MAX_N to raise it)")));
    }
    Ok(())
}

fn emit(out: &Out, text: &str) -> Outcome {
    match &out.out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn json_string(value: serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(&value).expect("serializable");
    s.push('\n');
    s
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Gen { args, n_flag, family_flag, format, out } => {
            let (n, family) = split_positionals(args)?;
            let n = pick(n, n_flag, "n")?;
            let family = pick(family, family_flag, "family")?;
            check_cap(n, cap(FAMILY_CAP))?;
            let items = list_family(n, &family)?;
            let text = match format {
                ListFormat::Lines => {
                    let mut s: String = items.iter().map(|i| format!("{i}\n")).collect();
                    s.push_str(&format!("# count {}\n", items.len()));
                    s
                }
                ListFormat::Json => json_string(serde_json::json!({
                    "n": n,
                    "family": family.to_uppercase(),
                    "items": items,
                    "count": items.len(),
                })),
            };
            emit(&out, &text)
        }
        Command::Verify { claim, range, range_flag, list, out } => {
            if list {
                let text: String = registry()
                    .iter()
                    .map(|c| format!("{:<22} n in {}..{}  {}\n", c.id, c.min_n, c.max_n, c.summary))
                    .collect();
                return emit(&out, &text);
            }
            let id = claim.ok_or_else(|| Failure::Usage("missing claim id".into()))?;
            let claim = find_claim(&id)?;
            let range = match (range, range_flag) {
                (None, None) => format!("{}..{}", claim.min_n.max(2), claim.max_n.min(cap(EXHAUSTIVE_CAP))),
                (r, f) => pick(r, f, "range")?,
            };
            let (lo, hi) = parse_range(&range)?;
            let limit = cap(EXHAUSTIVE_CAP);
            let mut checks = Vec::new();
            for n in lo..=hi {
                check_cap(n, limit)?;
                let rows = if overridden() { claim.run_uncapped(n)? } else { claim.run(n)? };
                checks.extend(rows);
            }
            let passed = checks.iter().all(|c| c.ok);
            let report = VerifyReport { claim: id, checks, passed };
            emit(&out, &json_string(serde_json::to_value(&report).expect("serializable")))?;
            if passed {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
        Command::Encode { perm, scheme } => {
            let p = Permutation::from_str(&perm)?;
            let code = match scheme {
                Scheme::Psi => PsiCode::encode(&p)?.to_string(),
                Scheme::Nu => DescentWord::encode(&p)?.to_string(),
            };
            println!("{code}");
            Ok(())
        }
        Command::Decode { code, scheme } => {
            let p = match scheme {
                Scheme::Psi => PsiCode::from_str(&code)?.decode(),
                Scheme::Nu => DescentWord::from_str(&code)?.decode(),
            };
            println!("{p}");
            Ok(())
        }
        Command::Biject { input, map, inverse } => {
            if inverse {
                let t = StandardTableau::from_str(&input)?;
                let p = match map {
                    MapKind::Phi => phi_inverse(&t)?,
                    MapKind::Shape => psi_shape_inverse(&t)?,
                };
                println!("{p}");
            } else {
                let p = Permutation::from_str(&input)?;
                let t = match map {
                    MapKind::Phi => phi(&p)?,
                    MapKind::Shape => psi_shape_map(&p)?,
                };
                println!("{t}");
            }
            Ok(())
        }
        Command::Graph { args, n_flag, format, out } => {
            let (n, what) = split_positionals(args)?;
            let n = pick(n, n_flag, "n")?;
            let what = what.ok_or_else(|| Failure::Usage("missing graph kind".into()))?;
            let what = GraphKind::from_str(&what, true).map_err(Failure::Usage)?;
            check_cap(n, cap(EXHAUSTIVE_CAP))?;
            let export = match what {
                GraphKind::Xn => export_arc_graph(n)?,
                GraphKind::WeakU => export_weak_u(n)?,
                GraphKind::Dominance => export_dominance(n)?,
            };
            let text = match format {
                GraphFormat::Json => {
                    let mut s = export.to_json();
                    s.push('\n');
                    s
                }
                GraphFormat::Dot => export.to_dot(),
            };
            emit(&out, &text)
        }
    }
}

fn list_family(n: usize, family: &str) -> Result<Vec<String>, Failure> {
    let upper = family.to_uppercase();
    let strings = |v: Vec<StandardTableau>| v.iter().map(|t| t.to_string()).collect();
    Ok(match upper.as_str() {
        "T" => strings(generate_t_n(n)),
        "HOOK" => strings(generate_hook_n(n)),
        "SHUF" => shuffle_union(n).iter().map(|p| p.to_string()).collect(),
        other => {
            let f = Family::from_str(other)?;
            generate_family(n, f).iter().map(|p| p.to_string()).collect()
        }
    })
}

/// At most one number and one word, in any order.
fn split_positionals(args: Vec<String>) -> Result<(Option<usize>, Option<String>), Failure> {
    let (mut n, mut word) = (None, None);
    for a in args {
        let slot_taken = match a.parse::<usize>() {
            Ok(v) => n.replace(v).is_some(),
            Err(_) => word.replace(a).is_some(),
        };
        if slot_taken {
            return Err(Failure::Usage("too many positional arguments".into()));
        }
    }
    Ok((n, word))
}

fn parse_range(s: &str) -> Result<(usize, usize), Failure> {
    let bad = || Failure::Usage(format!("bad range {s:?}; expected a..b or a single n"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => {
            let b = b.trim_start_matches('=');
            (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?)
        }
        None => {
            let v = s.trim().parse().map_err(|_| bad())?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
