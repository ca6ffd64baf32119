//! Command-line front end. Exit codes: 0 success, 1 verification failure, 2 usage or
//! other errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::balls::{ball_enumerate, ball_size, double_ball_size_counted};
use crate::bounds::{
    best_bounds_with, describe_near_factorial, BoundEntry, BoundOptions, Provenance, RadiusChoice,
};
use crate::code::{format_generator_file, parse_code_file, parse_generator_file};
use crate::constructions::{construct_size4, permutation_at_distance};
use crate::coset::{closure, cyclic_subgroup_source, search, verify_table};
use crate::epc::{
    count_equidistant_cliques, epc_extension_check_with, max_clique_exact, shell, DistanceMatrix,
    CACHE_ENV,
};
use crate::error::{Error, Result};
use crate::perm::{kendall_distance, Permutation};
use crate::tables::table_rows;
use crate::young::{
    build_coset_matrix, build_coset_matrix_unrestricted, ip_relaxation_upper, verify_lemma5,
    DEFAULT_ELL_CAP,
};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "permkit",
    version,
    about = "Permutation codes under the Kendall tau metric"
)]
pub struct Cli {
    /// Worker threads (affects wall time only).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Kendall distance between two permutations, e.g. `dist "1 2 3" "2 1 3"`.
    Dist { p: String, q: String },
    /// Size of a Kendall ball (or double ball) of radius R in S_N.
    Ball(BallArgs),
    /// Lower and upper bounds on P(n, d) with provenance.
    Bounds(BoundsArgs),
    /// The size-4 code at distance floor(2/3 C(n,2)).
    Construct4 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// A permutation at distance exactly D from the identity.
    Atdist {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: u64,
    },
    /// Checks the minimum distance of a code file.
    Verify {
        #[arg(long)]
        code: PathBuf,
        /// Overrides the distance in the file header.
        #[arg(long)]
        d: Option<u32>,
    },
    /// Greedy coset codes over a set of subgroups.
    Search(SearchArgs),
    /// Rebuilds and checks the published coset codes for n = 7 or 8.
    TablesVerify {
        #[arg(long)]
        n: usize,
        /// Writes each row as a generator file and a code file into DIR.
        #[arg(long, value_name = "DIR")]
        emit_paper_tables: Option<PathBuf>,
    },
    /// Equidistant-code counts on a shell, with the optional S_7 extension check.
    Epc(EpcArgs),
    /// Exact P(n, d) by maximum clique search (n <= 5, or n = 6 with d >= 5).
    Clique {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: u32,
    },
    /// Coset-action matrix of the Young subgroup and its property report.
    Youngmat(YoungArgs),
}

#[derive(Debug, Args)]
struct BallArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: u64,
    /// Union of the balls around the identity and [2,1,3,..,n].
    #[arg(long)]
    double: bool,
    /// Lists the members of the ball around the identity (n <= 9).
    #[arg(long, conflicts_with = "double")]
    enumerate: bool,
}

#[derive(Debug, Args)]
struct BoundsArgs {
    #[arg(long)]
    n: u64,
    #[arg(long)]
    d: u64,
    /// Rounds the P(n,3) radical term down and uses r = floor(n/6).
    #[arg(long)]
    table_mode: bool,
    /// Fixes r for the P(n,3) radical bound.
    #[arg(long)]
    r: Option<u64>,
}

#[derive(Debug, Args)]
struct SearchArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    d: u32,
    #[arg(long, conflicts_with = "cyclic", required_unless_present = "cyclic")]
    groups: Option<PathBuf>,
    /// Uses every cyclic subgroup of S_n (n <= 8).
    #[arg(long)]
    cyclic: bool,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct EpcArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    d: u64,
    /// Largest clique size to count.
    #[arg(long, default_value_t = 7)]
    max_size: usize,
    /// Runs the S_7 scan over all six-element (7,12) equidistant codes.
    #[arg(long)]
    extension_check: bool,
    /// Distance threshold for the extension check.
    #[arg(long, default_value_t = 11)]
    threshold: u32,
}

#[derive(Debug, Args)]
struct YoungArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    /// Solves the LP relaxation exactly.
    #[arg(long)]
    lp: bool,
    /// Writes the matrix as CSV to FILE instead of standard output.
    #[arg(long, value_name = "FILE")]
    csv: Option<PathBuf>,
    /// Allows r >= n/4.
    #[arg(long)]
    unrestricted: bool,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    if let Some(t) = cli.threads {
        if t == 0 {
            eprintln!("error: --threads must be positive");
            return 2;
        }
        // A pool may already exist when run is called twice in one process.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global();
    }
    match execute(&cli) {
        Ok(Outcome { stdout, ok }) => {
            print!("{stdout}");
            if ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Verification(_) => 1,
                _ => 2,
            }
        }
    }
}

struct Outcome {
    stdout: String,
    ok: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, ok: true }
    }
}

fn parse_perm(s: &str) -> Result<Permutation> {
    s.parse()
}

fn json_line(v: serde_json::Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let fmt = cli.format;
    match &cli.command {
        Command::Dist { p, q } => {
            let d = kendall_distance(&parse_perm(p)?, &parse_perm(q)?)?.get();
            Ok(Outcome::ok(match fmt {
                Format::Text => format!("{d}\n"),
                Format::Json => json_line(json!({ "distance": d })),
            }))
        }
        Command::Ball(a) => ball(a, fmt),
        Command::Bounds(a) => bounds(a, fmt),
        Command::Construct4 { n, output } => {
            let c = construct_size4(*n)?;
            let min = c.code.verify(None)?;
            let mut text = c.code.to_code_file(c.target_distance);
            let _ = writeln!(text, "# verified minimum distance {min}");
            if let Some(path) = output {
                write_file(path, &text)?;
            }
            Ok(Outcome::ok(match fmt {
                Format::Text => text,
                Format::Json => json_line(json!({
                    "n": n,
                    "target_distance": c.target_distance,
                    "min_distance": min,
                    "codewords": c.code.members(),
                })),
            }))
        }
        Command::Atdist { n, d } => {
            let p = permutation_at_distance(*n, *d)?;
            Ok(Outcome::ok(match fmt {
                Format::Text => format!("{p}\n"),
                Format::Json => json_line(json!({ "n": n, "d": d, "permutation": p })),
            }))
        }
        Command::Verify { code, d } => {
            let text = fs::read_to_string(code)
                .map_err(|e| Error::Io(format!("{}: {e}", code.display())))?;
            let c = parse_code_file(&text)?;
            let target = d.or(c.claimed_distance()).expect("header carries d");
            let scan = c.min_distance();
            let ok = scan.min_distance.is_none_or(|m| m >= target);
            let mut out = String::new();
            match fmt {
                Format::Text => {
                    let status = if ok { "PASS" } else { "FAIL" };
                    let min = scan.min_distance.map_or("-".to_string(), |m| m.to_string());
                    let _ = writeln!(
                        out,
                        "{status} size={} min_distance={min} target={target}",
                        c.len()
                    );
                    if let (false, Some((i, j))) = (ok, scan.witness) {
                        let _ = writeln!(
                            out,
                            "offending pair: {} | {}",
                            c.members()[i],
                            c.members()[j]
                        );
                    }
                }
                Format::Json => {
                    out = json_line(json!({
                        "pass": ok,
                        "size": c.len(),
                        "min_distance": scan.min_distance,
                        "target": target,
                        "witness": scan.witness.map(|(i, j)| [&c.members()[i], &c.members()[j]]),
                    }))
                }
            }
            Ok(Outcome { stdout: out, ok })
        }
        Command::Search(a) => search_cmd(a, fmt),
        Command::TablesVerify {
            n,
            emit_paper_tables,
        } => tables_verify(*n, emit_paper_tables.as_deref(), fmt),
        Command::Epc(a) => epc(a),
        Command::Clique { n, d } => {
            let p = max_clique_exact(*n, *d)?;
            Ok(Outcome::ok(match fmt {
                Format::Text => format!("{p}\n"),
                Format::Json => json_line(json!({ "n": n, "d": d, "max_code_size": p })),
            }))
        }
        Command::Youngmat(a) => youngmat(a),
    }
}

fn ball(a: &BallArgs, fmt: Format) -> Result<Outcome> {
    if a.enumerate {
        let b = ball_enumerate(&Permutation::identity(a.n), a.r)?;
        let mut out = String::new();
        match fmt {
            Format::Text => {
                for p in b.members() {
                    let _ = writeln!(out, "{p}");
                }
            }
            Format::Json => out = json_line(json!({ "n": a.n, "r": a.r, "members": b.members() })),
        }
        return Ok(Outcome::ok(out));
    }
    let size = if a.double {
        double_ball_size_counted(a.n, a.r)?
    } else {
        ball_size(a.n, a.r)?
    };
    Ok(Outcome::ok(match fmt {
        Format::Text => format!("{size}\n"),
        Format::Json => json_line(json!({
            "n": a.n,
            "r": a.r,
            "double": a.double,
            "size_decimal": size.to_str_radix(10),
        })),
    }))
}

fn bounds(a: &BoundsArgs, fmt: Format) -> Result<Outcome> {
    let mut opts = if a.table_mode {
        BoundOptions::table_mode()
    } else {
        BoundOptions::default()
    };
    if let Some(r) = a.r {
        opts.radius = RadiusChoice::Fixed(r);
    }
    let report = best_bounds_with(a.n, a.d, opts)?;
    if fmt == Format::Json {
        return Ok(Outcome::ok(format!("{}\n", report.to_json())));
    }
    let describe = |e: &BoundEntry| {
        let mut s = format!("{:<17} {}", e.provenance.to_string(), e.value);
        if e.provenance == Provenance::Theorem2 {
            if let Some(short) = describe_near_factorial(&e.value, a.n - 1) {
                let _ = write!(s, " ({short})");
            }
        }
        if e.at_d != a.d {
            let _ = write!(s, " [from d={}]", e.at_d);
        }
        s
    };
    let mut out = format!("P({}, {})\n", a.n, a.d);
    for e in &report.lower {
        let _ = writeln!(out, "lower {}", describe(e));
    }
    for e in &report.upper {
        let _ = writeln!(out, "upper {}", describe(e));
    }
    let _ = writeln!(
        out,
        "best  {} <= P <= {}",
        report.best_lower, report.best_upper
    );
    Ok(Outcome::ok(out))
}

fn search_cmd(a: &SearchArgs, fmt: Format) -> Result<Outcome> {
    let subgroups = if a.cyclic {
        cyclic_subgroup_source(a.n)?
    } else {
        let path = a.groups.as_ref().expect("clap requires one source");
        let text =
            fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        let (n, sets) = parse_generator_file(&text)?;
        if n != a.n {
            return Err(Error::Precondition(format!(
                "generator file is for n = {n}, not {}",
                a.n
            )));
        }
        sets.iter()
            .map(|g| closure(n, g))
            .collect::<Result<Vec<_>>>()?
    };
    let Some(best) = search(&subgroups, a.d)? else {
        return Err(Error::Precondition(format!(
            "no subgroup among {} has minimum weight >= {}",
            subgroups.len(),
            a.d
        )));
    };
    let code_text = best.code.to_code_file(a.d);
    if let Some(path) = &a.output {
        write_file(path, &code_text)?;
    }
    Ok(Outcome::ok(match fmt {
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "# subgroups considered: {}", subgroups.len());
            let _ = writeln!(out, "# subgroup order {}", best.subgroup.order());
            for g in best.subgroup.generators() {
                let _ = writeln!(out, "# generator {g}");
            }
            let _ = writeln!(out, "# representatives {}", best.reps.len());
            let _ = writeln!(out, "# code size {}", best.code.len());
            let _ = writeln!(
                out,
                "# cosets passing the representative-only test but violating d: {}",
                best.shortcut_violations.len()
            );
            out + &code_text
        }
        Format::Json => json_line(json!({
            "n": a.n,
            "d": a.d,
            "subgroups_considered": subgroups.len(),
            "subgroup_order": best.subgroup.order(),
            "generators": best.subgroup.generators(),
            "reps": best.reps,
            "size": best.code.len(),
            "shortcut_violations": best.shortcut_violations,
        })),
    }))
}

fn tables_verify(n: usize, emit: Option<&Path>, fmt: Format) -> Result<Outcome> {
    let rows = table_rows(n)
        .ok_or_else(|| Error::Precondition(format!("no published table for n = {n}")))?;
    let (conv, codes) = verify_table(rows)?;
    if let Some(dir) = emit {
        fs::create_dir_all(dir)?;
        for (row, code) in rows.iter().zip(&codes) {
            let stem = format!("n{}_d{}", row.n, row.d);
            let gens: Vec<Permutation> = code.subgroup.generators().to_vec();
            write_file(
                &dir.join(format!("{stem}.gens")),
                &format_generator_file(n, &gens),
            )?;
            write_file(
                &dir.join(format!("{stem}.code")),
                &code.code.to_code_file(row.d),
            )?;
        }
    }
    let mut out = String::new();
    match fmt {
        Format::Text => {
            let _ = writeln!(out, "convention: {conv:?}");
            for (row, code) in rows.iter().zip(&codes) {
                let min = code.code.min_distance().min_distance.unwrap_or(0);
                let _ = writeln!(
                    out,
                    "PASS n={} d={} |H|={} reps={} size={} min_distance={}",
                    row.n,
                    row.d,
                    code.subgroup.order(),
                    row.reps.len(),
                    code.code.len(),
                    min
                );
            }
        }
        Format::Json => {
            let rows_json: Vec<_> = rows
                .iter()
                .zip(&codes)
                .map(|(row, code)| {
                    json!({
                        "d": row.d,
                        "subgroup_order": code.subgroup.order(),
                        "reps": row.reps.len(),
                        "size": code.code.len(),
                        "min_distance": code.code.min_distance().min_distance,
                        "pass": true,
                    })
                })
                .collect();
            out =
                json_line(json!({ "n": n, "convention": format!("{conv:?}"), "rows": rows_json }));
        }
    }
    Ok(Outcome::ok(out))
}

fn epc(a: &EpcArgs) -> Result<Outcome> {
    let sh = shell(a.n, a.d)?;
    let counts = count_equidistant_cliques(&sh, a.d as u32, a.max_size)?;
    let largest = counts.iter().rposition(|&c| c > 0).map_or(1, |i| i + 2);
    let mut report = json!({
        "n": a.n,
        "d": a.d,
        "shell_size": sh.members.len(),
        "clique_counts": counts
            .iter()
            .enumerate()
            .map(|(i, c)| json!({ "size": i + 2, "count": c }))
            .collect::<Vec<_>>(),
        "largest_equidistant_code_with_identity": largest + 1,
    });
    let mut ok = true;
    if a.extension_check {
        if (a.n, a.d) != (7, 12) {
            return Err(Error::Precondition(
                "the extension check is defined for n = 7, d = 12".into(),
            ));
        }
        let cache = std::env::var_os(CACHE_ENV).map(PathBuf::from);
        let m = DistanceMatrix::load_or_build(7, cache.as_deref())?;
        let ext = epc_extension_check_with(&m, a.threshold)?;
        ok = a.threshold != 11 || ext.confirms_extension_bound();
        report["extension"] = serde_json::to_value(&ext).expect("json");
    }
    Ok(Outcome {
        stdout: json_line(report),
        ok,
    })
}

fn youngmat(a: &YoungArgs) -> Result<Outcome> {
    let m = if a.unrestricted {
        build_coset_matrix_unrestricted(a.n, a.r, DEFAULT_ELL_CAP)?
    } else {
        build_coset_matrix(a.n, a.r)?
    };
    let rep = verify_lemma5(&m);
    let mut out = String::new();
    match &a.csv {
        Some(path) => write_file(path, &m.to_csv())?,
        None => out.push_str(&m.to_csv()),
    }
    let mut report = serde_json::to_value(&rep).expect("json");
    if a.lp {
        let s = ip_relaxation_upper(&m)?;
        report["lp_optimum"] = json!(s.value.to_string());
        report["lp_pivots"] = json!(s.pivots);
    }
    out.push_str(&json_line(report));
    Ok(Outcome {
        stdout: out,
        ok: rep.all_pass(),
    })
}
