use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use exradii_core::families::{enumerate_pythagorean, Source};
use exradii_core::tables::paper_tables;
use exradii_core::{
    enumerate_f1_f2, enumerate_heron_isosceles, gen_f1, gen_f2, gen_heron_isosceles,
    gen_heron_isosceles_relaxed, gen_pythagorean, metrics, pyth_exradii, verify_completeness,
    verify_prop1, F1Params, F2Params, IsoFamily, IsoTriangleRecord, IsoVariant, MNPair,
    Orientation, PythParams, Target, TriangleSides,
};

use crate::format::{
    render_iso, render_metrics, render_paper_tables, render_pyth, render_report, Format, IsoRow,
    PythRow,
};
use crate::scan::ParallelScan;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "exradii", version, about = "Exact exradii of integer triangles and Heron isosceles families")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, env = "EXRADII_FORMAT", default_value = "table")]
    pub format: Format,

    /// Worker threads for brute-force scans (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact metrics of one triangle.
    Check { a: u64, b: u64, c: u64 },
    /// Generate members of a parametric family.
    Gen(GenArgs),
    /// Check a family against the brute-force oracle.
    Verify {
        #[arg(value_enum)]
        target: VerifyTarget,
        #[arg(long)]
        max_perimeter: u64,
        /// Report scan progress on stderr every N bases.
        #[arg(long, value_name = "N")]
        progress: Option<u64>,
    },
    /// Both worked tables of F1 and F2 members (scale 1, m ≤ 6).
    PaperTables {
        /// Label F2 rows with K= as originally printed.
        #[arg(long)]
        verbatim_labels: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    Pyth,
    IsoA,
    IsoB,
    F1,
    F2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyTarget {
    Prop1,
    Prop2,
    Theorem1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrientationArg {
    EvenBeta,
    OddBeta,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(value_enum)]
    pub family: FamilyKind,
    #[arg(long)]
    pub m: Option<u64>,
    #[arg(long)]
    pub n: Option<u64>,
    /// Scale for pyth, iso-a and iso-b.
    #[arg(long)]
    pub delta: Option<u64>,
    /// Scale for f1.
    #[arg(long = "K")]
    pub k: Option<u64>,
    /// Scale for f2.
    #[arg(long = "L")]
    pub l: Option<u64>,
    /// Every valid (m, n) with m ≤ this value.
    #[arg(long, value_name = "MAX_M", conflicts_with_all = ["m", "n"])]
    pub range_mn: Option<u64>,
    /// Every member with perimeter ≤ this value.
    #[arg(long, conflicts_with_all = ["m", "n", "range_mn", "delta", "k", "l"])]
    pub max_perimeter: Option<u64>,
    /// Which leg is β for pyth.
    #[arg(long, value_enum, default_value = "even-beta")]
    pub orientation: OrientationArg,
    /// iso-a/iso-b only: accept any m > n ≥ 1.
    #[arg(long)]
    pub relaxed: bool,
}

/// Outcome of a subcommand: text for stdout and an exit code.
struct Outcome {
    text: String,
    code: u8,
}

type CmdResult = Result<Outcome, String>;

fn ok(text: String) -> CmdResult {
    Ok(Outcome { text, code: EXIT_OK })
}

/// Parses `args` (including the program name), runs the command and
/// returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(o) => {
            let _ = out.write_all(o.text.as_bytes());
            o.code
        }
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Check { a, b, c } => {
            let t = TriangleSides::new(*a, *b, *c).map_err(|e| e.to_string())?;
            ok(render_metrics(&metrics(&t), cli.format))
        }
        Command::Gen(args) => gen(args, cli.format),
        Command::Verify { target, max_perimeter, progress } => {
            let scan = ParallelScan { threads: cli.threads, progress_every: *progress };
            let start = Instant::now();
            let report = match target {
                VerifyTarget::Prop1 => verify_prop1(&scan, *max_perimeter),
                VerifyTarget::Prop2 => verify_completeness(&scan, *max_perimeter, Target::Prop2),
                VerifyTarget::Theorem1 => {
                    verify_completeness(&scan, *max_perimeter, Target::Theorem1)
                }
            };
            let mut report = report.map_err(|e| e.to_string())?;
            report.elapsed = start.elapsed();
            Ok(Outcome {
                text: render_report(&report, cli.format),
                code: if report.passed() { EXIT_OK } else { EXIT_FAIL },
            })
        }
        Command::PaperTables { verbatim_labels } => {
            let (f1, f2) = paper_tables().map_err(|e| e.to_string())?;
            ok(render_paper_tables(&f1, &f2, cli.format, *verbatim_labels))
        }
    }
}

fn scale_for(args: &GenArgs) -> Result<u64, String> {
    let flags = [(args.delta, "--delta"), (args.k, "--K"), (args.l, "--L")];
    let own = match args.family {
        FamilyKind::Pyth | FamilyKind::IsoA | FamilyKind::IsoB => 0,
        FamilyKind::F1 => 1,
        FamilyKind::F2 => 2,
    };
    for (i, (value, flag)) in flags.iter().enumerate() {
        if i != own && value.is_some() {
            return Err(format!("{flag} does not apply to this family; use {}", flags[own].1));
        }
    }
    Ok(flags[own].0.unwrap_or(1))
}

fn pairs_for(args: &GenArgs) -> Result<Vec<MNPair>, String> {
    match (args.range_mn, args.m, args.n) {
        (Some(max_m), _, _) => Ok(MNPair::all_up_to(max_m)),
        (None, Some(m), Some(n)) => Ok(vec![MNPair::new(m, n).map_err(|e| e.to_string())?]),
        _ => Err("give --m and --n, --range-mn, or --max-perimeter".into()),
    }
}

fn sort_iso(rows: &mut [(IsoTriangleRecord, Source)]) {
    rows.sort_by_key(|(r, s)| (r.perimeter(), r.alpha, *s));
}

fn gen(args: &GenArgs, format: Format) -> CmdResult {
    let e = |e: exradii_core::Error| e.to_string();
    if args.relaxed && !matches!(args.family, FamilyKind::IsoA | FamilyKind::IsoB) {
        return Err("--relaxed only applies to iso-a and iso-b".into());
    }
    if args.family == FamilyKind::Pyth {
        let params: Vec<PythParams> = match args.max_perimeter {
            Some(bound) => enumerate_pythagorean(bound).map_err(e)?,
            None => {
                let delta = scale_for(args)?;
                let mut ps = pairs_for(args)?
                    .into_iter()
                    .map(|mn| PythParams::new(mn, delta))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(e)?;
                ps.sort_by_key(|p| (p.perimeter(), p.mn.m(), p.mn.n()));
                ps
            }
        };
        let orientation = match args.orientation {
            OrientationArg::EvenBeta => Orientation::EvenLegBeta,
            OrientationArg::OddBeta => Orientation::OddLegBeta,
        };
        let rows = params
            .iter()
            .map(|p| {
                let p = p.with_orientation(orientation);
                let t = gen_pythagorean(&p)?;
                Ok(PythRow::new(&p, (t.a(), t.b(), t.c()), pyth_exradii(&p)?))
            })
            .collect::<Result<Vec<_>, exradii_core::Error>>()
            .map_err(e)?;
        return ok(render_pyth(&rows, format));
    }

    let mut recs: Vec<(IsoTriangleRecord, Source)> = Vec::new();
    if let Some(bound) = args.max_perimeter {
        if args.relaxed {
            return Err("--relaxed needs explicit --m and --n".into());
        }
        let stream = match args.family {
            FamilyKind::F1 | FamilyKind::F2 => enumerate_f1_f2(bound),
            _ => enumerate_heron_isosceles(bound),
        }
        .map_err(e)?;
        let tag = match args.family {
            FamilyKind::IsoA => "iso-a",
            FamilyKind::IsoB => "iso-b",
            FamilyKind::F1 => "F1",
            FamilyKind::F2 => "F2",
            FamilyKind::Pyth => unreachable!(),
        };
        for rec in stream {
            if let Some(src) = rec.sources.iter().find(|s| s.tag() == tag).copied() {
                recs.push((rec, src));
            }
        }
    } else {
        let scale = scale_for(args)?;
        let variant = if args.family == FamilyKind::IsoA { IsoVariant::A } else { IsoVariant::B };
        let pairs: Vec<(u64, u64)> = if args.relaxed {
            match (args.m, args.n, args.range_mn) {
                (Some(m), Some(n), None) => vec![(m, n)],
                _ => return Err("--relaxed needs explicit --m and --n".into()),
            }
        } else {
            pairs_for(args)?.iter().map(|p| (p.m(), p.n())).collect()
        };
        for (m, n) in pairs {
            let rec = if args.relaxed {
                gen_heron_isosceles_relaxed(variant, m, n, scale)
            } else {
                let mn = MNPair::new(m, n).map_err(e)?;
                match args.family {
                    FamilyKind::F1 => F1Params::new(scale, mn).and_then(|p| gen_f1(&p)),
                    FamilyKind::F2 => F2Params::new(scale, mn).and_then(|p| gen_f2(&p)),
                    _ => IsoFamily::new(variant, mn, scale).and_then(|f| gen_heron_isosceles(&f)),
                }
            }
            .map_err(e)?;
            let src = *rec.source();
            recs.push((rec, src));
        }
    }
    sort_iso(&mut recs);
    let rows: Vec<IsoRow> = recs.iter().map(|(r, s)| IsoRow::from_record(r, s)).collect();
    ok(render_iso(&rows, format))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (u8, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["exradii"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn check_ok_and_errors() {
        let (code, out, _) = run_str(&["check", "5", "5", "6"]);
        assert_eq!(code, 0);
        assert!(out.contains("12 (Heron)"), "{out}");
        let (code, _, err) = run_str(&["check", "1", "2", "3"]);
        assert_eq!(code, 2);
        assert!(err.contains("triangle inequality"));
        assert_eq!(run_str(&["check", "0", "4", "4"]).0, 2);
        assert_eq!(run_str(&["check", "-1", "4", "4"]).0, 2);
    }

    #[test]
    fn gen_names_the_violation() {
        let (code, _, err) = run_str(&["gen", "f1", "--m", "3", "--n", "1"]);
        assert_eq!(code, 2);
        assert!(err.contains("same parity"), "{err}");
        let (code, _, err) = run_str(&["gen", "f2", "--m", "6", "--n", "3"]);
        assert_eq!(code, 2);
        assert!(err.contains("not coprime"), "{err}");
        let (code, _, err) = run_str(&["gen", "f1", "--L", "2", "--m", "2", "--n", "1"]);
        assert_eq!(code, 2);
        assert!(err.contains("--L does not apply"), "{err}");
        assert_eq!(run_str(&["gen", "f1", "--K", "0", "--m", "2", "--n", "1"]).0, 2);
    }

    #[test]
    fn gen_relaxed() {
        let (code, out, _) =
            run_str(&["--format", "csv", "gen", "iso-a", "--m", "3", "--n", "1", "--relaxed"]);
        assert_eq!(code, 0);
        assert!(out.contains("iso-a,1,3,1,16,10,"), "{out}");
        assert_eq!(run_str(&["gen", "iso-a", "--m", "3", "--n", "1"]).0, 2);
        assert_eq!(run_str(&["gen", "f1", "--m", "3", "--n", "1", "--relaxed"]).0, 2);
    }

    #[test]
    fn verify_exit_codes() {
        let (code, out, _) = run_str(&["verify", "theorem1", "--max-perimeter", "300"]);
        assert_eq!(code, 0);
        assert!(out.trim_end().ends_with("PASS"));
        assert_eq!(run_str(&["verify", "theorem1", "--max-perimeter", "2"]).0, 2);
        assert_eq!(run_str(&["verify", "nonsense", "--max-perimeter", "20"]).0, 2);
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run_str(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("paper-tables"));
    }
}
