//! Command-line front end: argument parsing, batch files, bulk enumeration,
//! and the text, JSON and CSV renderings of tunnel invariants.

pub mod record;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rayon::prelude::*;
use torus_tunnels::{
    classify, classify_sequences, lower_sequence, middle_sequence, normalize_params,
    tunnel_sequence, upper_sequence, CablingSequence, TunnelClassification, TunnelKind,
};

pub use record::OutputRecord;

#[derive(Debug, Parser)]
#[command(
    name = "torus-tunnels",
    version,
    about = "Cabling-sequence invariants of torus knot tunnels"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Slopes of the middle tunnel.
    MiddleSlopes(PairArgs),
    /// Slopes of the upper tunnel.
    UpperSlopes(PairArgs),
    /// Slopes of the lower tunnel.
    LowerSlopes(PairArgs),
    /// Intermediate torus knots of the middle tunnel.
    Intermediates(PairArgs),
    /// Binary invariants of the middle tunnel.
    Binaries(PairArgs),
    /// Number of distinct tunnels and which ones coincide.
    Classify(PairArgs),
    /// All coprime pairs 2 <= q < p <= MAX.
    Enumerate(EnumerateArgs),
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct PairArgs {
    #[arg(required_unless_present = "batch")]
    pub p: Option<BigInt>,
    #[arg(required_unless_present = "batch")]
    pub q: Option<BigInt>,
    /// Read whitespace-separated `p q` pairs, one per line.
    #[arg(long, value_name = "FILE", conflicts_with_all = ["p", "q"])]
    pub batch: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
    pub max: u64,
    #[arg(long, value_enum, default_value_t = TunnelFilter::All)]
    pub tunnel: TunnelFilter,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TunnelFilter {
    All,
    Middle,
    Upper,
    Lower,
}

impl TunnelFilter {
    fn kinds(self) -> &'static [TunnelKind] {
        match self {
            TunnelFilter::All => &TunnelKind::ALL,
            TunnelFilter::Middle => &[TunnelKind::Middle],
            TunnelFilter::Upper => &[TunnelKind::Upper],
            TunnelFilter::Lower => &[TunnelKind::Lower],
        }
    }
}

pub const CSV_HEADER: [&str; 8] = [
    "p",
    "q",
    "tunnel",
    "simple_slope",
    "slopes",
    "binaries",
    "case",
    "distinct_count",
];

/// Parses `args` (program name first), runs the command and returns the
/// process exit code: 0 on success, 2 on any error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return e.exit_code();
        }
    };
    match execute(&cli, out) {
        Ok(()) => 0,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), String> {
    let io = |e: std::io::Error| e.to_string();
    match &cli.command {
        Command::Enumerate(args) => enumerate(args.max, args.tunnel, cli.format, out),
        Command::MiddleSlopes(args) => {
            pair_command(Job::Slopes(TunnelKind::Middle), args, cli.format, out)
        }
        Command::UpperSlopes(args) => {
            pair_command(Job::Slopes(TunnelKind::Upper), args, cli.format, out)
        }
        Command::LowerSlopes(args) => {
            pair_command(Job::Slopes(TunnelKind::Lower), args, cli.format, out)
        }
        Command::Intermediates(args) => pair_command(Job::Intermediates, args, cli.format, out),
        Command::Binaries(args) => pair_command(Job::Binaries, args, cli.format, out),
        Command::Classify(args) => pair_command(Job::Classify, args, cli.format, out),
    }?;
    out.flush().map_err(io)
}

#[derive(Debug, Clone, Copy)]
enum Job {
    Slopes(TunnelKind),
    Intermediates,
    Binaries,
    Classify,
}

/// Collected output of a command; nothing is written until every pair has
/// succeeded.
enum Rendered {
    Text(Vec<String>),
    Records(Vec<OutputRecord>),
}

fn pair_command(
    job: Job,
    args: &PairArgs,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), String> {
    let pairs = match (&args.batch, &args.p, &args.q) {
        (Some(path), _, _) => read_batch(path)?,
        (None, Some(p), Some(q)) => vec![(p.clone(), q.clone())],
        _ => return Err("expected two integers or --batch FILE".into()),
    };
    let mut rendered = match format {
        Format::Text => Rendered::Text(Vec::new()),
        _ => Rendered::Records(Vec::new()),
    };
    for (p, q) in pairs {
        match &mut rendered {
            Rendered::Text(lines) => lines.push(text_for(job, &p, &q)?),
            Rendered::Records(records) => records.extend(records_for(job, &p, &q)?),
        }
    }
    match rendered {
        Rendered::Text(lines) => {
            for line in lines {
                writeln!(out, "{line}").map_err(|e| e.to_string())?;
            }
            Ok(())
        }
        Rendered::Records(records) => write_records(&records, format, out, true),
    }
}

fn text_for(job: Job, p: &BigInt, q: &BigInt) -> Result<String, String> {
    let e = |e: torus_tunnels::Error| e.to_string();
    Ok(match job {
        Job::Slopes(kind) => tunnel_sequence(kind, p.clone(), q.clone())
            .map_err(e)?
            .to_string(),
        Job::Intermediates => {
            render_intermediates(&middle_sequence(p.clone(), q.clone()).map_err(e)?)
        }
        Job::Binaries => render_binaries(&middle_sequence(p.clone(), q.clone()).map_err(e)?),
        Job::Classify => classify(p.clone(), q.clone()).map_err(e)?.to_string(),
    })
}

fn records_for(job: Job, p: &BigInt, q: &BigInt) -> Result<Vec<OutputRecord>, String> {
    let e = |e: torus_tunnels::Error| e.to_string();
    let record = |seq: CablingSequence, c: Option<&TunnelClassification>| {
        OutputRecord::new(p.clone(), q.clone(), seq, c)
    };
    Ok(match job {
        Job::Slopes(kind) => vec![record(
            tunnel_sequence(kind, p.clone(), q.clone()).map_err(e)?,
            None,
        )],
        Job::Intermediates | Job::Binaries => {
            vec![record(
                middle_sequence(p.clone(), q.clone()).map_err(e)?,
                None,
            )]
        }
        Job::Classify => {
            let params = normalize_params(p.clone(), q.clone(), TunnelKind::Middle).map_err(e)?;
            let c = oriented(classify(p.clone(), q.clone()).map_err(e)?, params.swapped);
            TunnelKind::ALL
                .iter()
                .map(|&kind| {
                    Ok(record(
                        tunnel_sequence(kind, p.clone(), q.clone()).map_err(e)?,
                        Some(&c),
                    ))
                })
                .collect::<Result<_, String>>()?
        }
    })
}

/// Restates a classification made for `p > q` in the caller's orientation:
/// exchanging `p` and `q` exchanges the upper and lower tunnels.
fn oriented(mut c: TunnelClassification, swapped: bool) -> TunnelClassification {
    if swapped {
        for class in &mut c.coincidences {
            for kind in class.iter_mut() {
                *kind = match *kind {
                    TunnelKind::Upper => TunnelKind::Lower,
                    TunnelKind::Lower => TunnelKind::Upper,
                    TunnelKind::Middle => TunnelKind::Middle,
                };
            }
            class.sort();
        }
        c.coincidences.sort();
    }
    c
}

/// `(a,b), (c,d), ...`
pub fn render_intermediates(seq: &CablingSequence) -> String {
    let mut s = String::new();
    for (i, (a, b)) in seq.intermediates.iter().enumerate() {
        if i > 0 {
            s.push_str(", ");
        }
        let _ = write!(s, "({a},{b})");
    }
    s
}

/// `[1, 0, 1]`
pub fn render_binaries(seq: &CablingSequence) -> String {
    let bits: Vec<&str> = seq
        .binaries
        .iter()
        .map(|&b| if b { "1" } else { "0" })
        .collect();
    format!("[{}]", bits.join(", "))
}

fn push_int(s: &mut String, v: &BigInt) {
    // i64 formatting is much cheaper than the generic BigInt path
    let _ = match i64::try_from(v) {
        Ok(small) => write!(s, "{small}"),
        Err(_) => write!(s, "{v}"),
    };
}

fn join_ints(items: &[BigInt]) -> String {
    let mut s = String::new();
    for (i, v) in items.iter().enumerate() {
        if i > 0 {
            s.push(';');
        }
        push_int(&mut s, v);
    }
    s
}

/// The CSV row of a record, in [`CSV_HEADER`] order.
pub fn csv_row(r: &OutputRecord) -> [String; 8] {
    let (case, count) = match &r.classification {
        Some(c) => (c.case.clone(), c.distinct_count.to_string()),
        None => (String::new(), String::new()),
    };
    [
        r.p.to_string(),
        r.q.to_string(),
        r.tunnel.name().to_string(),
        format!("{}/{}", r.simple_slope.num, r.simple_slope.den),
        join_ints(&r.slopes),
        r.binaries
            .iter()
            .map(u8::to_string)
            .collect::<Vec<_>>()
            .join(";"),
        case,
        count,
    ]
}

/// Writes records as JSON lines or CSV rows.
fn write_records(
    records: &[OutputRecord],
    format: Format,
    out: &mut dyn Write,
    header: bool,
) -> Result<(), String> {
    match format {
        Format::Json => {
            for r in records {
                serde_json::to_writer(&mut *out, r).map_err(|e| e.to_string())?;
                out.write_all(b"\n").map_err(|e| e.to_string())?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            if header {
                w.write_record(CSV_HEADER).map_err(|e| e.to_string())?;
            }
            for r in records {
                w.write_record(csv_row(r)).map_err(|e| e.to_string())?;
            }
            w.flush().map_err(|e| e.to_string())?;
        }
        Format::Text => {
            for r in records {
                let mut line = format!(
                    "{} {} {}: [{}/{}]",
                    r.p,
                    r.q,
                    r.tunnel.name(),
                    r.simple_slope.num,
                    r.simple_slope.den
                );
                for m in &r.slopes {
                    line.push_str(", ");
                    push_int(&mut line, m);
                }
                writeln!(out, "{line}").map_err(|e| e.to_string())?;
            }
        }
    }
    Ok(())
}

fn read_batch(path: &Path) -> Result<Vec<(BigInt, BigInt)>, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_batch(&text).map_err(|e| format!("{}: {e}", path.display()))
}

/// Parses `p q` pairs, one per line; blank lines are skipped.
pub fn parse_batch(text: &str) -> Result<Vec<(BigInt, BigInt)>, String> {
    let mut pairs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.as_slice() {
            [] => continue,
            [p, q] => {
                let parse = |s: &str| {
                    s.parse::<BigInt>()
                        .map_err(|_| format!("line {}: invalid integer '{s}'", i + 1))
                };
                pairs.push((parse(p)?, parse(q)?));
            }
            _ => return Err(format!("line {}: expected two integers", i + 1)),
        }
    }
    Ok(pairs)
}

/// Coprime pairs `2 <= q < p <= max` in lexicographic order.
pub fn coprime_pairs(max: u64) -> impl Iterator<Item = (u64, u64)> {
    (3..=max).flat_map(|p| {
        (2..p)
            .filter(move |&q| num_integer::gcd(p, q) == 1)
            .map(move |q| (p, q))
    })
}

fn enumerate_pair(p: u64, q: u64, filter: TunnelFilter) -> Vec<OutputRecord> {
    let (bp, bq) = (BigInt::from(p), BigInt::from(q));
    let middle = middle_sequence(p, q).expect("coprime pair");
    let upper = upper_sequence(p, q).expect("coprime pair");
    let lower = lower_sequence(p, q).expect("coprime pair");
    let c = classify_sequences(&bp, &bq, &middle, &upper, &lower);
    [middle, upper, lower]
        .into_iter()
        .filter(|seq| filter.kinds().contains(&seq.tunnel_kind))
        .map(|seq| OutputRecord::new(bp.clone(), bq.clone(), seq, Some(&c)))
        .collect()
}

/// Rows per parallel batch; output order does not depend on it.
const ENUMERATE_CHUNK: usize = 4096;

fn enumerate(
    max: u64,
    filter: TunnelFilter,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), String> {
    let pairs: Vec<(u64, u64)> = coprime_pairs(max).collect();
    for (i, chunk) in pairs.chunks(ENUMERATE_CHUNK).enumerate() {
        let records: Vec<OutputRecord> = chunk
            .par_iter()
            .flat_map_iter(|&(p, q)| enumerate_pair(p, q, filter))
            .collect();
        write_records(&records, format, out, i == 0)?;
    }
    if pairs.is_empty() && format == Format::Csv {
        write_records(&[], format, out, true)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("torus-tunnels").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn negative_arguments_parse() {
        let (code, out, _) = run_str(&["middle-slopes", "181", "-48"]);
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "[6/7], -15, -23, -31, -151, -271, -883, -2157, -3431\n"
        );
    }

    #[test]
    fn batch_parsing() {
        let pairs = parse_batch("41 29\n\n  18\t7 \n").unwrap();
        assert_eq!(pairs, vec![(41.into(), 29.into()), (18.into(), 7.into())]);
        assert_eq!(
            parse_batch("1 2 3").unwrap_err(),
            "line 1: expected two integers"
        );
        assert_eq!(
            parse_batch("4 x").unwrap_err(),
            "line 1: invalid integer 'x'"
        );
    }

    #[test]
    fn orientation_swaps_upper_and_lower() {
        let c = oriented(classify(7, 3).unwrap(), true);
        assert_eq!(
            c.coincidences,
            vec![
                vec![TunnelKind::Middle, TunnelKind::Lower],
                vec![TunnelKind::Upper]
            ]
        );
    }

    #[test]
    fn coprime_pair_order() {
        let pairs: Vec<_> = coprime_pairs(5).collect();
        assert_eq!(pairs, vec![(3, 2), (4, 3), (5, 2), (5, 3), (5, 4)]);
        assert_eq!(coprime_pairs(2).count(), 0);
    }

    #[test]
    fn text_renderings() {
        let s = middle_sequence(41, 29).unwrap();
        assert_eq!(
            render_intermediates(&s),
            "(3,2), (4,3), (7,5), (10,7), (17,12), (24,17), (41,29)"
        );
        assert_eq!(render_binaries(&s), "[1, 0, 1, 0, 1]");
        assert_eq!(render_binaries(&middle_sequence(7, 3).unwrap()), "[]");
    }
}
