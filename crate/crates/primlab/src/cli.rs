//! The `primlab` command-line surface: a thin dispatcher over the library.
//!
//! Every run echoes its effective configuration as comment lines, emits its
//! result in the chosen dialect, and (unless `--no-timing`) appends an
//! elapsed-time trailer. Identical arguments produce byte-identical output
//! apart from that trailer. Exit codes: 0 success, 1 a verification scan
//! found exceptions beyond the documented small-m threshold, 2 usage error.

use std::io::{BufWriter, Write};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::config::{segment_entries_from_bits, Config};
use crate::counting::{quad_rec, ratio_report, sexy_breakdown, CountClass};
use crate::error::{Error, Result};
use crate::goldbach::{verify_range, Flavor, GoldbachWitness, Status, VerificationReport};
use crate::primorial::primorial;
use crate::report::{format_sig6, write_comment, write_header, write_row, OutputFormat};
use crate::sieve::interval_bounds_u64;
use crate::totative::{table_cells, totatives, OffsetTuple};

#[derive(Parser)]
#[command(
    name = "primlab",
    version,
    about = "Primorial sets, totatives, and prime constellations"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Output dialect.
    #[arg(long, value_enum, default_value_t = FormatArg::Csv, global = true)]
    format: FormatArg,
    /// Suppress the elapsed-time trailer (for byte-stable output).
    #[arg(long, global = true)]
    no_timing: bool,
    /// Worker threads; results never depend on this.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// log2 of the sieve segment size.
    #[arg(long, global = true)]
    segment_bits: Option<u32>,
    /// Cap on n for enumeration-scale operations.
    #[arg(long, global = true)]
    enum_cap: Option<u32>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Markdown,
    Plain,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> OutputFormat {
        match f {
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Markdown => OutputFormat::Markdown,
            FormatArg::Plain => OutputFormat::Plain,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Print #(n), the product of the first n primes.
    Primorial { n: u32 },
    /// Stream the n-totatives in ascending order.
    Totatives { n: u32 },
    /// Emit the n-primorial table as cells with their color role.
    Table {
        n: u32,
        /// Restrict to the columns generated by (n-1)-totatives.
        #[arg(long)]
        totative_columns: bool,
    },
    /// Count tables: recurrence values, and for tot/twin/cousin/sexy the
    /// sieve-measured prime counterpart with the ratio.
    Count {
        #[arg(long, value_enum)]
        class: ClassArg,
        /// First table index n.
        #[arg(long)]
        from: u32,
        /// Last table index n.
        #[arg(long)]
        to: u32,
    },
    /// Check an offset tuple for admissibility or n-strength.
    Tuple {
        /// Comma-separated offsets, e.g. 0,2,6.
        #[arg(long)]
        offsets: String,
        #[arg(long, value_enum)]
        check: CheckArg,
        /// Level for the strong check (admissibility is level-independent).
        #[arg(long)]
        n: Option<u32>,
    },
    /// Verify a Goldbach-style conjecture over a range of even numbers.
    Goldbach {
        #[arg(long, value_enum)]
        flavor: FlavorArg,
        /// First even number scanned (default 4; for intervals, the start
        /// of the (n+1)-primorial interval).
        #[arg(long)]
        from: Option<u64>,
        /// Last even number scanned (required except for intervals).
        #[arg(long)]
        to: Option<u64>,
        /// Interval index; required for (and exclusive to) the intervals flavor.
        #[arg(long)]
        n: Option<u32>,
        /// Print one witness row per even number.
        #[arg(long)]
        emit_witnesses: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    Tot,
    Twin,
    Cousin,
    Sexy,
    Quad,
    Triple,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckArg {
    Admissible,
    Strong,
}

#[derive(Clone, Copy, ValueEnum)]
enum FlavorArg {
    Classic,
    Intervals,
    Twin,
    Cousin,
    Sexy,
}

/// Parses argv, dispatches, and maps outcomes to the exit code contract.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = err.print();
            return code;
        }
    };
    let started = Instant::now();
    match execute(&cli, started) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("primlab: {err}");
            eprintln!("run `primlab --help` for the command synopsis");
            2
        }
    }
}

fn resolve_config(cli: &Cli) -> Result<Config> {
    let mut cfg = Config::from_env()?;
    if let Some(bits) = cli.segment_bits {
        cfg.segment_entries = segment_entries_from_bits(bits)?;
    }
    if let Some(threads) = cli.threads {
        if threads == 0 {
            return Err(Error::usage("--threads must be at least 1"));
        }
        cfg.threads = threads;
    }
    if let Some(cap) = cli.enum_cap {
        cfg.enum_cap = cap;
    }
    Ok(cfg)
}

fn command_echo(cmd: &Cmd) -> String {
    match cmd {
        Cmd::Primorial { n } => format!("primorial n={n}"),
        Cmd::Totatives { n } => format!("totatives n={n}"),
        Cmd::Table {
            n,
            totative_columns,
        } => {
            format!("table n={n} totative_columns={totative_columns}")
        }
        Cmd::Count { class, from, to } => {
            format!("count class={} from={from} to={to}", class_name(*class))
        }
        Cmd::Tuple { offsets, check, n } => format!(
            "tuple offsets={offsets} check={} n={}",
            match check {
                CheckArg::Admissible => "admissible",
                CheckArg::Strong => "strong",
            },
            n.map_or_else(|| "-".to_string(), |n| n.to_string())
        ),
        Cmd::Goldbach {
            flavor,
            from,
            to,
            n,
            emit_witnesses,
        } => format!(
            "goldbach flavor={} from={} to={} n={} emit_witnesses={emit_witnesses}",
            flavor_name(*flavor),
            from.map_or_else(|| "-".to_string(), |v| v.to_string()),
            to.map_or_else(|| "-".to_string(), |v| v.to_string()),
            n.map_or_else(|| "-".to_string(), |v| v.to_string()),
        ),
    }
}

fn class_name(class: ClassArg) -> &'static str {
    match class {
        ClassArg::Tot => "tot",
        ClassArg::Twin => "twin",
        ClassArg::Cousin => "cousin",
        ClassArg::Sexy => "sexy",
        ClassArg::Quad => "quad",
        ClassArg::Triple => "triple",
    }
}

fn flavor_name(flavor: FlavorArg) -> &'static str {
    match flavor {
        FlavorArg::Classic => "classic",
        FlavorArg::Intervals => "intervals",
        FlavorArg::Twin => "twin",
        FlavorArg::Cousin => "cousin",
        FlavorArg::Sexy => "sexy",
    }
}

fn execute(cli: &Cli, started: Instant) -> Result<i32> {
    let cfg = resolve_config(cli)?;
    let format = OutputFormat::from(cli.format);
    let stdout = std::io::stdout().lock();
    let mut out = BufWriter::new(stdout);

    write_comment(
        &mut out,
        format,
        &format!("command: {}", command_echo(&cli.cmd)),
    )?;
    write_comment(
        &mut out,
        format,
        &format!(
            "config: format={} segment_entries={} threads={} enum_cap={} timing={}",
            format.name(),
            cfg.segment_entries,
            cfg.threads,
            cfg.enum_cap,
            !cli.no_timing
        ),
    )?;

    let code = match &cli.cmd {
        Cmd::Primorial { n } => {
            write_header(&mut out, format, &["n", "primorial"])?;
            write_row(
                &mut out,
                format,
                &[n.to_string(), primorial(*n).to_string()],
            )?;
            0
        }
        Cmd::Totatives { n } => {
            write_header(&mut out, format, &["t"])?;
            for t in totatives(&cfg, *n)? {
                write_row(&mut out, format, &[t.to_string()])?;
            }
            0
        }
        Cmd::Table {
            n,
            totative_columns,
        } => {
            write_header(&mut out, format, &["row", "col", "value", "role"])?;
            for cell in table_cells(&cfg, *n, *totative_columns)? {
                write_row(
                    &mut out,
                    format,
                    &[
                        cell.row.to_string(),
                        cell.col.to_string(),
                        cell.value.to_string(),
                        cell.role.as_str().to_string(),
                    ],
                )?;
            }
            0
        }
        Cmd::Count { class, from, to } => {
            run_count(&mut out, format, &cfg, *class, *from, *to)?;
            0
        }
        Cmd::Tuple { offsets, check, n } => {
            run_tuple(&mut out, format, offsets, *check, *n)?;
            0
        }
        Cmd::Goldbach {
            flavor,
            from,
            to,
            n,
            emit_witnesses,
        } => run_goldbach(
            &mut out,
            format,
            &cfg,
            *flavor,
            *from,
            *to,
            *n,
            *emit_witnesses,
        )?,
    };

    if !cli.no_timing {
        write_comment(
            &mut out,
            format,
            &format!("elapsed_ms: {}", started.elapsed().as_millis()),
        )?;
    }
    out.flush()?;
    Ok(code)
}

fn run_count(
    out: &mut dyn Write,
    format: OutputFormat,
    cfg: &Config,
    class: ClassArg,
    from: u32,
    to: u32,
) -> Result<()> {
    let ratio_class = match class {
        ClassArg::Tot => Some(CountClass::Tot),
        ClassArg::Twin => Some(CountClass::Twin),
        ClassArg::Cousin => Some(CountClass::Cousin),
        ClassArg::Sexy => Some(CountClass::Sexy),
        ClassArg::Quad | ClassArg::Triple => None,
    };
    if let Some(class) = ratio_class {
        let rows = ratio_report(cfg, class, from, to)?;
        let (rec_label, star_label) = class.labels();
        write_header(
            out,
            format,
            &["n", "primorial", rec_label, star_label, "ratio"],
        )?;
        for row in rows {
            write_row(
                out,
                format,
                &[
                    row.n.to_string(),
                    row.primorial.to_string(),
                    row.recurrence.to_string(),
                    row.prime_class.to_string(),
                    format_sig6(row.ratio),
                ],
            )?;
        }
        return Ok(());
    }
    // quad and triple have no measured prime column; emit recurrence values.
    if from < 1 || from > to {
        return Err(Error::usage(format!(
            "recurrence tables need 1 <= from <= to, got {from}..{to}"
        )));
    }
    let label = class_name(class);
    write_header(out, format, &["n", "primorial", label])?;
    for n in from..=to {
        let value = match class {
            ClassArg::Quad => quad_rec(n),
            ClassArg::Triple => sexy_breakdown(n).triple,
            _ => unreachable!("ratio classes handled above"),
        };
        write_row(
            out,
            format,
            &[n.to_string(), primorial(n).to_string(), value.to_string()],
        )?;
    }
    Ok(())
}

fn run_tuple(
    out: &mut dyn Write,
    format: OutputFormat,
    offsets: &str,
    check: CheckArg,
    n: Option<u32>,
) -> Result<()> {
    let tuple: OffsetTuple = offsets.parse()?;
    let (check_name, level, result) = match check {
        CheckArg::Admissible => ("admissible", "-".to_string(), tuple.is_admissible()),
        CheckArg::Strong => {
            let n = n.ok_or_else(|| Error::usage("--n is required for the strong check"))?;
            if n < 1 {
                return Err(Error::usage("strength levels start at n = 1"));
            }
            ("strong", n.to_string(), tuple.is_strong(n))
        }
    };
    let gap = tuple
        .gap()
        .map_or_else(|_| "-".to_string(), |g| g.to_string());
    write_header(
        out,
        format,
        &["check", "n", "k", "diameter", "gap", "result"],
    )?;
    write_row(
        out,
        format,
        &[
            check_name.to_string(),
            level,
            tuple.k().to_string(),
            tuple.diameter().to_string(),
            gap,
            result.to_string(),
        ],
    )?;
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn run_goldbach(
    out: &mut dyn Write,
    format: OutputFormat,
    cfg: &Config,
    flavor_arg: FlavorArg,
    from: Option<u64>,
    to: Option<u64>,
    n: Option<u32>,
    emit: bool,
) -> Result<i32> {
    let flavor = match flavor_arg {
        FlavorArg::Intervals => {
            let n = n.ok_or_else(|| {
                Error::usage("--n selects the interval and is required for intervals")
            })?;
            Flavor::Intervals(n)
        }
        other => {
            if n.is_some() {
                return Err(Error::usage("--n only applies to the intervals flavor"));
            }
            match other {
                FlavorArg::Classic => Flavor::Classic,
                FlavorArg::Twin => Flavor::Twin,
                FlavorArg::Cousin => Flavor::Cousin,
                FlavorArg::Sexy => Flavor::Sexy,
                FlavorArg::Intervals => unreachable!("handled above"),
            }
        }
    };
    let (lo, hi) = match flavor {
        Flavor::Intervals(n) => {
            if n < 1 {
                return Err(Error::usage("interval scans start at n = 1"));
            }
            let (e_lo, e_hi) = interval_bounds_u64(n + 1)?;
            (from.unwrap_or(e_lo), to.unwrap_or(e_hi))
        }
        _ => {
            let hi = to.ok_or_else(|| Error::usage("--to is required for this flavor"))?;
            (from.unwrap_or(4), hi)
        }
    };

    write_header(out, format, &["flavor", "m", "p", "q"])?;
    let mut writer = |w: &GoldbachWitness| {
        let _ = write_row(
            out,
            format,
            &[
                w.flavor.name().to_string(),
                w.m.to_string(),
                w.p.to_string(),
                w.q.to_string(),
            ],
        );
    };
    let report = verify_range(
        cfg,
        flavor,
        lo,
        hi,
        if emit { Some(&mut writer) } else { None },
    )?;
    write_report_trailer(out, format, &report)?;
    Ok(match report.status {
        Status::Verified => 0,
        Status::Failed => 1,
    })
}

const MAX_LISTED_EXCEPTIONS: usize = 32;

fn write_report_trailer(
    out: &mut dyn Write,
    format: OutputFormat,
    report: &VerificationReport,
) -> Result<()> {
    write_comment(
        out,
        format,
        &format!(
            "range: lo={} hi={} evens_scanned={}",
            report.lo, report.hi, report.evens_scanned
        ),
    )?;
    write_comment(
        out,
        format,
        &format!(
            "witnesses: {}",
            if report.witnesses_emitted {
                "emitted"
            } else {
                "suppressed"
            }
        ),
    )?;
    write_comment(
        out,
        format,
        &format!("exceptions: {}", report.exceptions.len()),
    )?;
    for m in report.exceptions.iter().take(MAX_LISTED_EXCEPTIONS) {
        write_comment(out, format, &format!("exception: {m}"))?;
    }
    if report.exceptions.len() > MAX_LISTED_EXCEPTIONS {
        write_comment(
            out,
            format,
            &format!(
                "exceptions_truncated: {} more",
                report.exceptions.len() - MAX_LISTED_EXCEPTIONS
            ),
        )?;
    }
    write_comment(out, format, &format!("threshold: {}", report.threshold))?;
    write_comment(
        out,
        format,
        &format!(
            "status: {}",
            match report.status {
                Status::Verified => "verified",
                Status::Failed => "failed",
            }
        ),
    )?;
    Ok(())
}
