//! The `crankshaft` command-line front end.
//!
//! Subcommands: `table` (statistic tables as CSV/JSON), `verify` (identity
//! checks as a JSON report array), `biject` (exhaustive bijection runs,
//! optionally streaming JSON-lines witnesses), and `series` (raw
//! coefficient expansion of any built-in series).
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on usage
//! errors. Output is byte-identical across runs for a fixed invocation;
//! the env var `CRANKSHAFT_THREADS` caps the worker pool.

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bijections::{verify_bijection, BijectionMap, BijectionRun};
use crate::error::Error;
use crate::identities::{run_named, SweepConfig, CHECK_NAMES};
use crate::series::{
    crank_cumulative_gf, gaussian_binomial, mk_gf, nv_gf, partition_gf, pentagonal_sum,
    pentagonal_window, pk_tilde_gf, pochhammer, pochhammer_inf, u_gf, TruncatedSeries,
};
use crate::statistics::{Backend, StatKind, Statistics};

const EXIT_OK: i32 = 0;
const EXIT_CHECK_FAILED: i32 = 1;
const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(
    name = "crankshaft",
    version,
    about = "Exact partition statistics, q-series, and bijection verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate a statistic over a range of n
    Table(TableArgs),
    /// Run identity checks and emit a JSON report array
    Verify(VerifyArgs),
    /// Exhaustively verify a bijection at one size
    Biject(BijectArgs),
    /// Print the coefficients of a built-in series
    Series(SeriesArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BackendArg {
    /// enumeration below the cutoffs (cross-validated), series above
    Auto,
    Enum,
    Series,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct TableArgs {
    /// Statistic: p | u | C | M | Ptilde | NV | crank
    #[arg(long)]
    stat: String,
    /// Crank class m (for u and C)
    #[arg(long)]
    m: Option<i64>,
    /// Index k (for M, Ptilde, NV, crank)
    #[arg(long)]
    k: Option<i64>,
    #[arg(long, default_value_t = 0)]
    from: i64,
    #[arg(long)]
    to: i64,
    #[arg(long, value_enum, default_value_t = BackendArg::Auto)]
    backend: BackendArg,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Series truncation order (default: --to)
    #[arg(long)]
    order: Option<usize>,
    /// Output path (default: stdout)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Check name or "all"
    #[arg(long, default_value = "all")]
    check: String,
    /// Largest n to verify
    #[arg(long)]
    to: i64,
    /// k range, e.g. "2" or "1..4"
    #[arg(long, default_value = "1..4")]
    k: String,
    /// m range, e.g. "0" or "0..2"
    #[arg(long, default_value = "0..2")]
    m: String,
    /// Series truncation order (default: computed from --to and --k)
    #[arg(long)]
    order: Option<usize>,
    /// Force one statistic backend for the thm1 check
    #[arg(long, value_enum, default_value_t = BackendArg::Auto)]
    backend: BackendArg,
    /// Include per-check elapsed milliseconds (non-deterministic output)
    #[arg(long)]
    timings: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BijectArgs {
    /// Map: thm1 | franklin | sec5_psi | sec6_f | sec6_g | k1_split
    #[arg(long)]
    map: String,
    /// Object size n
    #[arg(long)]
    n: u32,
    #[arg(long)]
    m: Option<u8>,
    /// Staircase index j (sec5_psi)
    #[arg(long)]
    j: Option<i64>,
    #[arg(long)]
    k: Option<u32>,
    /// Stream one JSON-lines witness per domain object instead of the
    /// summary report
    #[arg(long)]
    witness: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SeriesArgs {
    /// partition_gf | pentagonal | pochhammer | pochhammer_inf | u_gf |
    /// nv_gf | mk_gf | pk_tilde_gf | crank_gf | gaussian
    #[arg(long)]
    name: String,
    /// Truncation order N; coefficients 0..=N are printed
    #[arg(long)]
    order: usize,
    #[arg(long)]
    m: Option<u8>,
    #[arg(long)]
    k: Option<i64>,
    /// Base exponent s for the Pochhammer symbols
    #[arg(long)]
    s: Option<u32>,
    /// Factor count for the finite Pochhammer symbol
    #[arg(long)]
    n: Option<u32>,
    /// Window for the pentagonal theta sum (default: full effective window)
    #[arg(long)]
    jlo: Option<i64>,
    #[arg(long)]
    jhi: Option<i64>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Entry point used by `main`; parses `std::env::args`.
pub fn run() -> i32 {
    configure_threads();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap exits 0 for --help/--version and 2 for usage errors
            e.exit()
        }
    };
    let mut stdout = io::stdout().lock();
    match dispatch(cli, &mut stdout) {
        Ok(code) => code,
        Err(Error::Usage(msg)) if msg == BROKEN_PIPE => EXIT_OK,
        Err(other) => {
            eprintln!("error: {}", other);
            EXIT_USAGE
        }
    }
}

/// Testable entry point: parses the given argv and writes to `out`.
pub fn run_from<I, S>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(_) => return EXIT_USAGE,
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(Error::Usage(msg)) if msg == BROKEN_PIPE => EXIT_OK,
        Err(e) => {
            eprintln!("error: {}", e);
            EXIT_USAGE
        }
    }
}

fn configure_threads() {
    if let Ok(value) = std::env::var("CRANKSHAFT_THREADS") {
        if let Ok(threads) = value.parse::<usize>() {
            if threads >= 1 {
                // ignore failure when a pool is already installed
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(threads)
                    .build_global();
            }
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> crate::error::Result<i32> {
    match cli.command {
        Command::Table(args) => cmd_table(args, out),
        Command::Verify(args) => cmd_verify(args, out),
        Command::Biject(args) => cmd_biject(args, out),
        Command::Series(args) => cmd_series(args, out),
    }
}

fn open_sink<'a>(
    path: &Option<PathBuf>,
    default: &'a mut dyn Write,
) -> crate::error::Result<Sink<'a>> {
    match path {
        None => Ok(Sink::Default(default)),
        Some(p) => {
            let file = File::create(p)
                .map_err(|e| Error::Usage(format!("cannot create {}: {}", p.display(), e)))?;
            Ok(Sink::File(io::BufWriter::new(file)))
        }
    }
}

// Commands write either to the caller's writer or to --out.
enum Sink<'a> {
    Default(&'a mut dyn Write),
    File(io::BufWriter<File>),
}

impl Write for Sink<'_> {
    fn write(&mut self, buf: &[u8]) -> io::Result<usize> {
        match self {
            Sink::Default(w) => w.write(buf),
            Sink::File(w) => w.write(buf),
        }
    }
    fn flush(&mut self) -> io::Result<()> {
        match self {
            Sink::Default(w) => w.flush(),
            Sink::File(w) => w.flush(),
        }
    }
}

fn parse_range(text: &str, what: &str) -> crate::error::Result<(i64, i64)> {
    if let Some((lo, hi)) = text.split_once("..") {
        let lo = lo
            .trim()
            .parse::<i64>()
            .map_err(|_| Error::Usage(format!("bad {} range {:?}", what, text)))?;
        let hi = hi
            .trim()
            .parse::<i64>()
            .map_err(|_| Error::Usage(format!("bad {} range {:?}", what, text)))?;
        if lo > hi {
            return Err(Error::Usage(format!("empty {} range {:?}", what, text)));
        }
        Ok((lo, hi))
    } else {
        let v = text
            .trim()
            .parse::<i64>()
            .map_err(|_| Error::Usage(format!("bad {} value {:?}", what, text)))?;
        Ok((v, v))
    }
}

fn cmd_table(args: TableArgs, out: &mut dyn Write) -> crate::error::Result<i32> {
    let kind = StatKind::parse(&args.stat)
        .ok_or_else(|| Error::Usage(format!("unknown statistic {:?}", args.stat)))?;
    if args.from > args.to {
        return Err(Error::Usage(format!(
            "empty range {}..{}",
            args.from, args.to
        )));
    }
    let param = match kind {
        StatKind::U | StatKind::C => args.m,
        StatKind::M | StatKind::PTilde | StatKind::Nv | StatKind::CrankCount => args.k,
        StatKind::P => None,
    };
    let order = args.order.unwrap_or(args.to.max(0) as usize);
    if (order as i64) < args.to {
        return Err(Error::Usage(format!(
            "series order {} is below the largest requested n = {}",
            order, args.to
        )));
    }
    let stats = Statistics::new(order);
    let mut sink = open_sink(&args.out, out)?;

    // `crank` has no series backend; fall back to enumeration for it.
    let effective = |b: BackendArg| -> BackendArg {
        if kind == StatKind::CrankCount && matches!(b, BackendArg::Auto | BackendArg::Series) {
            BackendArg::Enum
        } else {
            b
        }
    };
    match effective(args.backend) {
        BackendArg::Both => {
            let enum_table = stats.table(kind, param, args.from, args.to, Backend::Enumeration)?;
            let series_table = stats.table(kind, param, args.from, args.to, Backend::Series)?;
            let agree = enum_table
                .values
                .iter()
                .zip(&series_table.values)
                .all(|(e, s)| e.value == s.value);
            match args.format {
                Format::Csv => {
                    writeln!(&mut sink, "n,enumeration,series,match").map_err(io_err)?;
                    for (e, s) in enum_table.values.iter().zip(&series_table.values) {
                        writeln!(
                            &mut sink,
                            "{},{},{},{}",
                            e.n,
                            e.value,
                            s.value,
                            e.value == s.value
                        )
                        .map_err(io_err)?;
                    }
                }
                Format::Json => {
                    let doc = json!({
                        "enumeration": enum_table,
                        "series": series_table,
                        "match": agree,
                    });
                    writeln!(&mut sink, "{}", serde_json::to_string_pretty(&doc).unwrap())
                        .map_err(io_err)?;
                }
            }
            Ok(if agree { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        b => {
            let backend = match b {
                BackendArg::Enum => Backend::Enumeration,
                BackendArg::Series => Backend::Series,
                // Auto tables defer to the series backend, which covers any
                // n up to the order; scalar accessors handle the policy.
                _ => Backend::Series,
            };
            let table = stats.table(kind, param, args.from, args.to, backend)?;
            match args.format {
                Format::Csv => table.write_csv(&mut sink).map_err(io_err)?,
                Format::Json => {
                    writeln!(
                        &mut sink,
                        "{}",
                        serde_json::to_string_pretty(&table).unwrap()
                    )
                    .map_err(io_err)?;
                }
            }
            Ok(EXIT_OK)
        }
    }
}

// Sentinel for a reader that went away (e.g. piping into `head`); treated
// as success by the entry points.
const BROKEN_PIPE: &str = "output pipe closed";

fn io_err(e: io::Error) -> Error {
    if e.kind() == io::ErrorKind::BrokenPipe {
        Error::Usage(BROKEN_PIPE.to_string())
    } else {
        Error::Usage(format!("write failed: {}", e))
    }
}

fn cmd_verify(args: VerifyArgs, out: &mut dyn Write) -> crate::error::Result<i32> {
    if !CHECK_NAMES.contains(&args.check.as_str()) {
        return Err(Error::Usage(format!(
            "unknown check {:?}; expected one of {}",
            args.check,
            CHECK_NAMES.join(" | ")
        )));
    }
    let (k_lo, k_hi) = parse_range(&args.k, "k")?;
    if k_lo < 1 {
        return Err(Error::Usage("k must be at least 1".into()));
    }
    let (m_lo, m_hi) = parse_range(&args.m, "m")?;
    if !(0..=2).contains(&m_lo) || !(0..=2).contains(&m_hi) {
        return Err(Error::Usage("m must lie in 0..2".into()));
    }
    if args.to < 0 {
        return Err(Error::Usage("--to must be non-negative".into()));
    }
    let cfg = SweepConfig {
        n_max: args.to,
        k_lo: k_lo as u32,
        k_hi: k_hi as u32,
        series_order: 0,
        series_k_max: k_hi as u32,
    };
    let order = args.order.unwrap_or_else(|| cfg.required_order());
    if (order as i64) < args.to {
        return Err(Error::Usage(format!(
            "series order {} is below n_max = {}",
            order, args.to
        )));
    }
    let cfg = SweepConfig {
        series_order: order,
        ..cfg
    };
    eprintln!("using series truncation order {}", order);

    let stats = Statistics::new(order);
    let m_values: Vec<u8> = (m_lo..=m_hi).map(|m| m as u8).collect();
    let backend = match args.backend {
        BackendArg::Auto | BackendArg::Both => None,
        BackendArg::Enum => Some(Backend::Enumeration),
        BackendArg::Series => Some(Backend::Series),
    };
    let reports = run_named(&args.check, &stats, &cfg, &m_values, backend)?;
    let all_pass = reports.iter().all(|r| r.is_pass());
    let doc: Vec<serde_json::Value> = reports.iter().map(|r| r.to_json(args.timings)).collect();
    let mut sink = open_sink(&args.out, out)?;
    writeln!(&mut sink, "{}", serde_json::to_string_pretty(&doc).unwrap()).map_err(io_err)?;
    Ok(if all_pass { EXIT_OK } else { EXIT_CHECK_FAILED })
}

fn cmd_biject(args: BijectArgs, out: &mut dyn Write) -> crate::error::Result<i32> {
    let map = BijectionMap::from_str(&args.map)?;
    let run = BijectionRun {
        map,
        n: args.n,
        m: args.m,
        j: args.j,
        k: args.k,
        collect_witnesses: args.witness,
    };
    let outcome = verify_bijection(&run)?;
    let mut sink = open_sink(&args.out, out)?;
    if args.witness {
        for w in &outcome.witnesses {
            writeln!(&mut sink, "{}", serde_json::to_string(w).unwrap()).map_err(io_err)?;
        }
        eprintln!(
            "{}: {} ({} witnesses)",
            outcome.report.check,
            if outcome.report.is_pass() {
                "pass"
            } else {
                "fail"
            },
            outcome.witnesses.len()
        );
    } else {
        writeln!(
            &mut sink,
            "{}",
            serde_json::to_string_pretty(&outcome.report.to_json(false)).unwrap()
        )
        .map_err(io_err)?;
    }
    Ok(if outcome.report.is_pass() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}

fn cmd_series(args: SeriesArgs, out: &mut dyn Write) -> crate::error::Result<i32> {
    let order = args.order;
    let need_k = || {
        args.k
            .ok_or_else(|| Error::Usage(format!("series {:?} requires --k", args.name)))
    };
    let need_m = || {
        args.m
            .ok_or_else(|| Error::Usage(format!("series {:?} requires --m", args.name)))
    };
    let series: TruncatedSeries = match args.name.as_str() {
        "partition_gf" => partition_gf(order),
        "pentagonal" => {
            let (wlo, whi) = pentagonal_window(order);
            pentagonal_sum(args.jlo.unwrap_or(wlo), args.jhi.unwrap_or(whi), order)
        }
        "pochhammer" => {
            let s = args
                .s
                .ok_or_else(|| Error::Usage("pochhammer requires --s".into()))?;
            let n = args
                .n
                .ok_or_else(|| Error::Usage("pochhammer requires --n (factor count)".into()))?;
            if s < 1 {
                return Err(Error::Usage("pochhammer requires s >= 1".into()));
            }
            pochhammer(s, n, order)
        }
        "pochhammer_inf" => {
            let s = args
                .s
                .ok_or_else(|| Error::Usage("pochhammer_inf requires --s".into()))?;
            if s < 1 {
                return Err(Error::Usage("pochhammer_inf requires s >= 1".into()));
            }
            pochhammer_inf(s, order)
        }
        "u_gf" => {
            let m = need_m()?;
            if m > 2 {
                return Err(Error::Usage("u_gf requires m in {0, 1, 2}".into()));
            }
            u_gf(m, order)
        }
        "nv_gf" => nv_gf(need_k()?, order),
        "mk_gf" => {
            let k = need_k()?;
            if k < 1 {
                return Err(Error::Usage("mk_gf requires k >= 1".into()));
            }
            mk_gf(k as u32, order)
        }
        "pk_tilde_gf" => {
            let k = need_k()?;
            if k < 1 {
                return Err(Error::Usage("pk_tilde_gf requires k >= 1".into()));
            }
            pk_tilde_gf(k as u32, order)
        }
        "crank_gf" => {
            let m = need_m()?;
            if m > 2 {
                return Err(Error::Usage("crank_gf requires m in {0, 1, 2}".into()));
            }
            crank_cumulative_gf(m, order)
        }
        "gaussian" => {
            let n = args
                .n
                .ok_or_else(|| Error::Usage("gaussian requires --n".into()))?;
            gaussian_binomial(n, need_k()?, order)
        }
        other => {
            return Err(Error::Usage(format!(
                "unknown series {:?}; expected partition_gf | pentagonal | pochhammer | \
                 pochhammer_inf | u_gf | nv_gf | mk_gf | pk_tilde_gf | crank_gf | gaussian",
                other
            )))
        }
    };
    let mut sink = open_sink(&args.out, out)?;
    match args.format {
        Format::Csv => {
            let rendered: Vec<String> = series.coeffs().iter().map(|c| c.to_string()).collect();
            writeln!(&mut sink, "{}", rendered.join(",")).map_err(io_err)?;
        }
        Format::Json => {
            writeln!(
                &mut sink,
                "{}",
                serde_json::to_string_pretty(&series).unwrap()
            )
            .map_err(io_err)?;
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String) {
        let mut buf = Vec::new();
        let code = run_from(args.iter().copied(), &mut buf);
        (code, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn table_u_matches_golden_row() {
        let (code, text) = run(&[
            "crankshaft",
            "table",
            "--stat",
            "u",
            "--m",
            "0",
            "--to",
            "10",
        ]);
        assert_eq!(code, 0);
        assert!(text.lines().any(|l| l == "4,8"), "{}", text);
    }

    #[test]
    fn table_c_and_ptilde_rows() {
        let (code, text) = run(&[
            "crankshaft",
            "table",
            "--stat",
            "C",
            "--m",
            "1",
            "--to",
            "5",
        ]);
        assert_eq!(code, 0);
        assert!(text.lines().any(|l| l == "5,4"));
        let (code, text) = run(&[
            "crankshaft",
            "table",
            "--stat",
            "Ptilde",
            "--k",
            "2",
            "--to",
            "17",
        ]);
        assert_eq!(code, 0);
        assert!(text.lines().any(|l| l == "17,9"));
    }

    #[test]
    fn table_both_reports_matches() {
        let (code, text) = run(&[
            "crankshaft",
            "table",
            "--stat",
            "M",
            "--k",
            "1",
            "--to",
            "8",
            "--backend",
            "both",
        ]);
        assert_eq!(code, 0);
        assert!(text.starts_with("n,enumeration,series,match\n"));
        assert!(text.contains("5,2,2,true"));
    }

    #[test]
    fn table_rejects_unknown_stat() {
        let (code, _) = run(&["crankshaft", "table", "--stat", "zeta", "--to", "4"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn series_partition_gf_prints_counts() {
        let (code, text) = run(&[
            "crankshaft",
            "series",
            "--name",
            "partition_gf",
            "--order",
            "5",
        ]);
        assert_eq!(code, 0);
        assert_eq!(text.trim(), "1,1,2,3,5,7");
    }

    #[test]
    fn series_pentagonal_full_window() {
        let (code, text) = run(&[
            "crankshaft",
            "series",
            "--name",
            "pentagonal",
            "--order",
            "7",
        ]);
        assert_eq!(code, 0);
        assert_eq!(text.trim(), "1,-1,-1,0,0,1,0,1");
    }

    #[test]
    fn series_mk_gf_coefficient() {
        let (code, text) = run(&[
            "crankshaft",
            "series",
            "--name",
            "mk_gf",
            "--k",
            "3",
            "--order",
            "18",
        ]);
        assert_eq!(code, 0);
        let last = text.trim().split(',').next_back().unwrap().to_string();
        assert_eq!(last, "3");
    }

    #[test]
    fn series_rejects_unknown_name() {
        let (code, _) = run(&["crankshaft", "series", "--name", "mystery", "--order", "5"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn verify_thm1_passes() {
        let (code, text) = run(&["crankshaft", "verify", "--check", "thm1", "--to", "20"]);
        assert_eq!(code, 0);
        assert!(text.contains("\"status\": \"pass\""));
        assert!(!text.contains("elapsed"));
    }

    #[test]
    fn verify_cor2_with_explicit_params() {
        let (code, text) = run(&[
            "crankshaft",
            "verify",
            "--check",
            "cor2",
            "--m",
            "0",
            "--k",
            "1",
            "--to",
            "40",
        ]);
        assert_eq!(code, 0);
        assert!(text.contains("strict for n >= 2"));
    }

    #[test]
    fn verify_rejects_unknown_check_and_bad_ranges() {
        let (code, _) = run(&["crankshaft", "verify", "--check", "nope", "--to", "5"]);
        assert_eq!(code, 2);
        let (code, _) = run(&[
            "crankshaft",
            "verify",
            "--check",
            "thm1",
            "--to",
            "5",
            "--k",
            "3..1",
        ]);
        assert_eq!(code, 2);
    }

    #[test]
    fn biject_summary_and_witnesses() {
        let (code, text) = run(&["crankshaft", "biject", "--map", "sec6_f", "--n", "12"]);
        assert_eq!(code, 0);
        assert!(text.contains("\"status\": \"pass\""));

        let (code, text) = run(&[
            "crankshaft",
            "biject",
            "--map",
            "thm1",
            "--n",
            "4",
            "--witness",
        ]);
        assert_eq!(code, 0);
        assert_eq!(text.lines().count(), 12);
        assert!(text.lines().all(|l| l.contains("\"round_trip_ok\":true")));
    }

    #[test]
    fn biject_rejects_missing_k() {
        let (code, _) = run(&["crankshaft", "biject", "--map", "sec6_g", "--n", "12"]);
        assert_eq!(code, 2);
    }
}
