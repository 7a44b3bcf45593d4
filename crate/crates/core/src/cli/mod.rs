//! Command-line front end. [`run`] does all the work and returns the text
//! and exit code, so the binary is a thin wrapper and tests can drive it
//! directly.
//!
//! Exit codes: 0 success, 1 negative result (no representation, UNSAT,
//! nonempty diff, ...), 2 usage or input error.

mod report;

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::algebra::Algebra;
use crate::bounds::{union_bound, union_bound_threshold};
use crate::constructions::{construct, construct_4_7_abelian, Construction};
use crate::error::Error;
use crate::group::{AbelianGroup, FiniteGroup};
use crate::sat::{
    decode, emit_dimacs, encode_with, parse_dimacs, solve, EncodeOptions, SolveResult,
};
use crate::search::{random_search, Search, DEFAULT_LIMIT};
use crate::verifier::{verify, Coloring};

pub use report::{
    expected_cyclic_spec, published_spec, ranges, AlgebraRow, Cell, Method, ReportOptions,
    SpectrumReport, SAT_LIMIT,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(
    name = "cyspec",
    version,
    about = "Cyclic spectra of the relation algebras 1_7 .. 7_7"
)]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a coloring and list every violation.
    Verify(VerifyArgs),
    /// Closed-form representation, if there is one.
    Construct(ConstructArgs),
    /// All representations over Z/n, by exhaustive search.
    Search(SearchArgs),
    /// Every n in a range admitting a representation over Z/n.
    Spectrum(SpectrumArgs),
    /// Sample random symmetric colorings.
    Random(RandomArgs),
    /// Write the CNF encoding in DIMACS format.
    Cnf(CnfArgs),
    /// Run the embedded SAT solver on an encoding or a DIMACS file.
    Solve(SolveArgs),
    /// The union bound for random 7_7 colorings.
    Bounds(BoundsArgs),
    /// Expected against computed cyclic spectra for all seven algebras.
    Report(ReportArgs),
}

#[derive(Args, Debug)]
struct VerifyArgs {
    algebra: Algebra,
    /// Order of the cyclic group.
    #[arg(long, conflicts_with_all = ["group", "coloring"])]
    n: Option<usize>,
    /// Abelian group as a factor list, e.g. 4x3.
    #[arg(long, conflicts_with = "coloring")]
    group: Option<String>,
    /// Elements colored a, comma separated. Product-group elements are
    /// dotted coordinates such as 1.0.
    #[arg(long = "A", value_name = "LIST", conflicts_with = "coloring")]
    a: Option<String>,
    /// Coloring JSON, inline or as @path.
    #[arg(long)]
    coloring: Option<String>,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    algebra: Algebra,
    #[arg(required_unless_present = "group", conflicts_with = "group")]
    n: Option<usize>,
    /// Build over a finite abelian group instead (4_7 only).
    #[arg(long)]
    group: Option<String>,
}

#[derive(Args, Debug)]
struct SearchArgs {
    algebra: Algebra,
    #[arg(long)]
    n: usize,
    /// Exhaustive search cap.
    #[arg(long, default_value_t = DEFAULT_LIMIT)]
    limit: usize,
    /// Keep one representative per orbit under unit multiplication.
    #[arg(long)]
    canonical: bool,
}

#[derive(Args, Debug)]
struct SpectrumArgs {
    algebra: Algebra,
    #[arg(long, default_value_t = 3)]
    lo: usize,
    #[arg(long, default_value_t = DEFAULT_LIMIT)]
    hi: usize,
    #[arg(long, default_value_t = DEFAULT_LIMIT)]
    limit: usize,
}

#[derive(Args, Debug)]
struct RandomArgs {
    algebra: Algebra,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    seed: u64,
    #[arg(long, default_value_t = 10_000)]
    iters: u64,
}

#[derive(Args, Debug)]
struct CnfArgs {
    algebra: Algebra,
    n: usize,
    /// Write to this file instead of standard output.
    #[arg(long, value_name = "PATH")]
    dimacs: Option<std::path::PathBuf>,
    /// Fix the class {1, n-1} to color b.
    #[arg(long)]
    symmetry_break: bool,
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[arg(required_unless_present = "dimacs", requires = "n")]
    algebra: Option<Algebra>,
    n: Option<usize>,
    /// Solve this DIMACS file instead of an encoding.
    #[arg(long, value_name = "PATH", conflicts_with_all = ["algebra", "n"])]
    dimacs: Option<std::path::PathBuf>,
}

#[derive(Args, Debug)]
struct BoundsArgs {
    #[arg(long, default_value_t = 3)]
    lo: usize,
    #[arg(long, default_value_t = 40)]
    max: usize,
}

#[derive(Args, Debug)]
struct ReportArgs {
    #[arg(long, default_value_t = 3)]
    lo: usize,
    #[arg(long, default_value_t = 40)]
    hi: usize,
    #[arg(long, default_value_t = DEFAULT_LIMIT)]
    limit: usize,
    /// Seed for random search past the SAT limit.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 10_000)]
    iters: u64,
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type CmdResult = Result<(i32, String), Failure>;

/// Parses `argv` (program name first) and runs the subcommand.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let json = cli.json;
    let result = match cli.command {
        Command::Verify(a) => cmd_verify(a, json),
        Command::Construct(a) => cmd_construct(a, json),
        Command::Search(a) => cmd_search(a, json),
        Command::Spectrum(a) => cmd_spectrum(a, json),
        Command::Random(a) => cmd_random(a, json),
        Command::Cnf(a) => cmd_cnf(a, json),
        Command::Solve(a) => cmd_solve(a, json),
        Command::Bounds(a) => cmd_bounds(a, json),
        Command::Report(a) => cmd_report(a, json),
    };
    match result {
        Ok((code, stdout)) => Outcome {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(Failure::Usage(msg)) => Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Lib(e)) => Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn code(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    }
}

fn parse_group(text: &str) -> Result<AbelianGroup, Failure> {
    text.parse()
        .map_err(|e| Failure::Usage(format!("--group `{text}`: {e}")))
}

fn parse_elements(group: &AbelianGroup, list: &str) -> Result<Vec<usize>, Failure> {
    let bad = |tok: &str| Failure::Usage(format!("--A: cannot read element `{tok}` of {group}"));
    list.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|tok| {
            if group.is_cyclic() && !tok.contains('.') {
                return tok.parse::<usize>().map_err(|_| bad(tok));
            }
            let coords = tok
                .split('.')
                .map(|c| c.parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| bad(tok))?;
            group.from_coords(&coords).map_err(Failure::Lib)
        })
        .collect()
}

fn read_coloring(arg: &str) -> Result<Coloring, Failure> {
    let text = match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("--coloring {path}: {e}")))?,
        None => arg.to_string(),
    };
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("--coloring: {e}")))
}

fn cmd_verify(args: VerifyArgs, json: bool) -> CmdResult {
    let coloring = match (&args.coloring, &args.a) {
        (Some(c), _) => read_coloring(c)?,
        (None, Some(list)) => {
            let group = match (args.n, &args.group) {
                (Some(n), None) => AbelianGroup::cyclic(n)?,
                (None, Some(g)) => parse_group(g)?,
                _ => {
                    return Err(Failure::Usage(
                        "--A needs exactly one of --n or --group".into(),
                    ))
                }
            };
            let a = parse_elements(&group, list)?;
            Coloring::new(group, a)?
        }
        (None, None) => {
            return Err(Failure::Usage(
                "give --coloring, or --A with --n or --group".into(),
            ))
        }
    };
    let violations = verify(&args.algebra, &coloring);
    let valid = violations.is_empty();
    let out = if json {
        to_json(&json!({
            "algebra": args.algebra,
            "coloring": coloring,
            "valid": valid,
            "violations": violations,
        }))
    } else if valid {
        "valid\n".to_string()
    } else {
        let mut s = format!("invalid: {} violation(s)\n", violations.len());
        for v in &violations {
            let _ = writeln!(s, "  {v}");
        }
        s
    };
    Ok((code(valid), out))
}

fn cmd_construct(args: ConstructArgs, json: bool) -> CmdResult {
    let (label, result) = match (args.n, &args.group) {
        (Some(n), _) => (format!("Z/{n}"), construct(&args.algebra, n)?),
        (None, Some(g)) => {
            let group = parse_group(g)?;
            let label = group.to_string();
            if group.is_cyclic() {
                (label, construct(&args.algebra, group.order())?)
            } else if args.algebra.index() == 4 {
                match construct_4_7_abelian(&group) {
                    Ok(c) => (label, Construction::Coloring(c)),
                    Err(Error::No47Subgroup(_)) => (label, Construction::NoConstruction),
                    Err(e) => return Err(e.into()),
                }
            } else {
                return Err(Failure::Usage(format!(
                    "--group: only 4_7 has a construction over non-cyclic groups, not {}",
                    args.algebra
                )));
            }
        }
        (None, None) => unreachable!("clap requires n or --group"),
    };
    let ok = result.coloring().is_some();
    let out = if json {
        to_json(&json!({ "algebra": args.algebra, "group": label, "construction": result }))
    } else {
        match result.coloring() {
            Some(c) => format!("{}\n", serde_json::to_string(c).map_err(Error::from)?),
            None => format!("{}\n", result.sentinel_name()),
        }
    };
    Ok((code(ok), out))
}

fn cmd_search(args: SearchArgs, json: bool) -> CmdResult {
    let search = Search::with_limit(args.limit)?;
    let masks = search.find_all_masks(&args.algebra, args.n, args.canonical)?;
    let out = if json {
        let reps: Vec<_> = masks
            .iter()
            .map(
                |m| json!({ "mask": m.to_string(), "bits": m.bits(), "coloring": m.to_coloring() }),
            )
            .collect();
        to_json(&json!({
            "algebra": args.algebra,
            "n": args.n,
            "canonical": args.canonical,
            "count": masks.len(),
            "representations": reps,
        }))
    } else if masks.is_empty() {
        format!("no representation of {} over Z/{}\n", args.algebra, args.n)
    } else {
        let mut s = format!(
            "{} representation(s) of {} over Z/{}{}\n",
            masks.len(),
            args.algebra,
            args.n,
            if args.canonical {
                " up to automorphism"
            } else {
                ""
            }
        );
        for m in &masks {
            let _ = writeln!(s, "  {m}  {}", m.to_coloring());
        }
        s
    };
    Ok((code(!masks.is_empty()), out))
}

fn cmd_spectrum(args: SpectrumArgs, json: bool) -> CmdResult {
    let search = Search::with_limit(args.limit)?;
    let spec = search.spectrum(&args.algebra, args.lo, args.hi)?;
    let out = if json {
        to_json(&json!({ "algebra": args.algebra, "lo": args.lo, "hi": args.hi, "spectrum": spec }))
    } else {
        format!(
            "CySp({}) ∩ [{}, {}] = {{{}}}\n",
            args.algebra,
            args.lo,
            args.hi,
            ranges(&spec).trim_matches(|c| c == '{' || c == '}')
        )
    };
    Ok((code(!spec.is_empty()), out))
}

fn cmd_random(args: RandomArgs, json: bool) -> CmdResult {
    let found = random_search(&args.algebra, args.n, args.iters, args.seed)?;
    let out = if json {
        to_json(&json!({
            "algebra": args.algebra,
            "n": args.n,
            "seed": args.seed,
            "iters": args.iters,
            "found": found.is_some(),
            "coloring": found,
        }))
    } else {
        match &found {
            Some(c) => format!("{c}\n"),
            None => format!("NotFound after {} samples\n", args.iters),
        }
    };
    Ok((code(found.is_some()), out))
}

fn cmd_cnf(args: CnfArgs, json: bool) -> CmdResult {
    let opts = EncodeOptions {
        symmetry_break: args.symmetry_break,
    };
    let (formula, map) = encode_with(&args.algebra, args.n, opts)?;
    let text = emit_dimacs(&formula, Some(&map));
    if let Some(path) = &args.dimacs {
        std::fs::write(path, &text).map_err(Error::from)?;
    }
    let out = if json {
        to_json(&json!({
            "algebra": args.algebra,
            "n": args.n,
            "num_vars": formula.num_vars(),
            "num_clauses": formula.clauses().len(),
            "path": args.dimacs,
            "dimacs": if args.dimacs.is_none() { Some(&text) } else { None },
        }))
    } else if let Some(path) = &args.dimacs {
        format!(
            "wrote p cnf {} {} to {}\n",
            formula.num_vars(),
            formula.clauses().len(),
            path.display()
        )
    } else {
        text
    };
    Ok((EXIT_OK, out))
}

fn cmd_solve(args: SolveArgs, json: bool) -> CmdResult {
    if let Some(path) = &args.dimacs {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("--dimacs {}: {e}", path.display())))?;
        let formula = parse_dimacs(&text)?;
        let result = solve(&formula);
        let out = match (&result, json) {
            (SolveResult::Sat(m), true) => to_json(&json!({ "result": "SAT", "model": signed(m) })),
            (SolveResult::Unsat, true) => to_json(&json!({ "result": "UNSAT" })),
            (SolveResult::Sat(m), false) => {
                let lits: Vec<String> = signed(m).iter().map(i32::to_string).collect();
                format!("SAT\nv {} 0\n", lits.join(" "))
            }
            (SolveResult::Unsat, false) => "UNSAT\n".into(),
        };
        return Ok((code(result.is_sat()), out));
    }
    let (algebra, n) = match (args.algebra, args.n) {
        (Some(a), Some(n)) => (a, n),
        _ => {
            return Err(Failure::Usage(
                "solve needs <ALGEBRA> <N> or --dimacs".into(),
            ))
        }
    };
    let (formula, map) = encode_with(&algebra, n, EncodeOptions::default())?;
    let coloring = match solve(&formula) {
        SolveResult::Sat(m) => Some(decode(&m, &map)?),
        SolveResult::Unsat => None,
    };
    let out = if json {
        to_json(&json!({
            "algebra": algebra,
            "n": n,
            "result": if coloring.is_some() { "SAT" } else { "UNSAT" },
            "coloring": coloring,
        }))
    } else {
        match &coloring {
            Some(c) => format!("{}\n", serde_json::to_string(c).map_err(Error::from)?),
            None => "UNSAT\n".into(),
        }
    };
    Ok((code(coloring.is_some()), out))
}

fn signed(model: &[bool]) -> Vec<i32> {
    model
        .iter()
        .enumerate()
        .map(|(i, &v)| if v { i as i32 + 1 } else { -(i as i32 + 1) })
        .collect()
}

fn cmd_bounds(args: BoundsArgs, json: bool) -> CmdResult {
    if args.lo > args.max {
        return Err(Failure::Usage(format!(
            "--lo {} is above --max {}",
            args.lo, args.max
        )));
    }
    let rows = (args.lo..=args.max)
        .map(union_bound)
        .collect::<Result<Vec<_>, _>>()?;
    let threshold = union_bound_threshold();
    let label = "least n with 3(n-1)(3/4)^((n-2)/2) < 1; past it a random symmetric coloring \
                 represents 7_7 with positive probability (7_7 itself is representable from n = 12)";
    let out = if json {
        to_json(&json!({ "rows": rows, "threshold": threshold, "threshold_meaning": label }))
    } else {
        let mut s = format!("{:>5}  {:>14}  below_one\n", "n", "p_value");
        for r in &rows {
            let _ = writeln!(s, "{:>5}  {:>14.6}  {}", r.n, r.p_value, r.below_one);
        }
        let _ = writeln!(s, "\nunion bound threshold: {threshold}\n  ({label})");
        s
    };
    Ok((EXIT_OK, out))
}

fn cmd_report(args: ReportArgs, json: bool) -> CmdResult {
    let opts = ReportOptions {
        limit: args.limit,
        seed: args.seed,
        iters: args.iters,
    };
    let report = SpectrumReport::compute(args.lo, args.hi, opts)?;
    let out = if json {
        to_json(&report)
    } else {
        report.render()
    };
    Ok((code(report.all_diffs_empty()), out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cli(args: &str) -> Outcome {
        run(std::iter::once("cyspec").chain(args.split_whitespace()))
    }

    #[test]
    fn spec_examples() {
        let o = cli("verify 5_7 --n 5 --A 1,4");
        assert_eq!((o.code, o.stdout.as_str()), (0, "valid\n"));
        let o = cli("search 6_7 --n 10");
        assert_eq!(o.code, 1);
        assert!(o.stdout.contains("no representation"));
    }

    #[test]
    fn usage_errors_name_the_flag() {
        let o = cli("search 6_7 --nn 10");
        assert_eq!(o.code, 2);
        assert!(o.stderr.contains("--nn"));
        let o = cli("verify 5_7 --A 1,4");
        assert_eq!(o.code, 2);
        assert!(o.stderr.contains("--n"));
        let o = cli("verify 9_7 --n 5 --A 1");
        assert_eq!(o.code, 2);
    }

    #[test]
    fn product_group_elements() {
        // 4_7 over Z/4 x Z/4: a = nonzero elements of the subgroup 0 x Z/4
        let o = cli("verify 4_7 --group 4x4 --A 0.1,0.2,0.3");
        assert_eq!(o.code, 0, "{}", o.stdout);
        let o = cli("construct 4_7 --group 4x4 --json");
        assert_eq!(o.code, 0);
        let o = cli("construct 4_7 --group 2x2");
        assert_eq!((o.code, o.stdout.as_str()), (1, "NoConstruction\n"));
        assert_eq!(cli("construct 6_7 --group 2x4").code, 2);
    }

    #[test]
    fn help_is_success() {
        let o = cli("--help");
        assert_eq!(o.code, 0);
        assert!(o.stdout.contains("report"));
    }
}
