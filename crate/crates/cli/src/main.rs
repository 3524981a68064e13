use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::{Signed, ToPrimitive};
use serde_json::Value;

use heron_core::exactnum::{format_rational, parse_rational};
use heron_core::families::{
    equilateral_certificate, equilateral_median_certificates, FamilyError, FamilyId, FamilyInstance, FamilyTriangle,
};
use heron_core::gen2::gen2_certificate;
use heron_core::json;
use heron_core::{Rational, SurdAngle};

const OK: u8 = 0;
const BAD_INPUT: u8 = 1;
const DEGENERATE: u8 = 2;
const CAP_REACHED: u8 = 3;
const VERIFY_FAILED: u8 = 4;

#[derive(Parser)]
#[command(
    name = "heron",
    version,
    about = "Spherical Heron triangles from elliptic curves, in exact arithmetic"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate proper triangles from a family's Mordell–Weil walk
    Gen(GenArgs),
    /// Re-check triangles stored as JSON lines ("-" reads stdin)
    Verify {
        file: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Print a certificate
    Theorem(TheoremArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Congruent,
    IsoAngle,
    Sides,
    Median,
    IsoMedian,
    AreaBisector,
    Equilateral,
    EquilateralMedian,
}

impl Family {
    fn id(self) -> FamilyId {
        match self {
            Family::Congruent => FamilyId::Congruent,
            Family::IsoAngle => FamilyId::IsoAngle,
            Family::Sides => FamilyId::Sides,
            Family::Median => FamilyId::Median,
            Family::IsoMedian => FamilyId::IsoMedian,
            Family::AreaBisector => FamilyId::AreaBisector,
            Family::Equilateral => FamilyId::Equilateral,
            Family::EquilateralMedian => FamilyId::EquilateralMedian,
        }
    }
}

#[derive(Args)]
struct GenArgs {
    #[arg(value_enum)]
    family: Family,
    /// t-parameter of the area (congruent, iso-angle)
    #[arg(long, alias = "m", allow_hyphen_values = true)]
    area: Option<String>,
    /// t-parameter of the family's defining angle: the area for congruent and
    /// iso-angle, A/2 for area-bisector
    #[arg(long, allow_hyphen_values = true)]
    t: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    v: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    w: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    u: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    n: Option<String>,
    #[arg(long, default_value_t = 1)]
    count: usize,
    /// Largest multiple k tried in the ±kG + S walk
    #[arg(long, default_value_t = 200)]
    cap: u32,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct TheoremArgs {
    #[arg(value_enum)]
    which: Theorem,
    /// Naive search height for the rank-0 certificates
    #[arg(long, default_value_t = 1_000_000)]
    height: u64,
    /// Render the congruence tables as LaTeX (gen2 only)
    #[arg(long)]
    latex: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Theorem {
    Equilateral,
    EquilateralMedian,
    Gen2,
}

struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

fn family_failure(e: FamilyError) -> Failure {
    let code = match &e {
        FamilyError::Degenerate(_) | FamilyError::RankZero(_) => DEGENERATE,
        FamilyError::CapReached { .. } => CAP_REACHED,
        _ => BAD_INPUT,
    };
    fail(code, e.to_string())
}

fn rational_arg(name: &str, s: &str) -> Result<Rational, Failure> {
    parse_rational(s).map_err(|_| fail(BAD_INPUT, format!("--{name}: {s:?} is not a rational p/q")))
}

fn params(a: &GenArgs) -> Result<Vec<(&'static str, Rational)>, Failure> {
    let id = a.family.id();
    let primary = match id {
        FamilyId::Congruent | FamilyId::IsoAngle => Some("m"),
        FamilyId::AreaBisector => Some("n"),
        _ => None,
    };
    let mut out = Vec::new();
    for &name in id.param_names() {
        let given = match name {
            "m" => a.area.as_ref().or(a.t.as_ref()),
            "n" => a.n.as_ref().or(a.t.as_ref()),
            "v" => a.v.as_ref(),
            "w" => a.w.as_ref(),
            "u" => a.u.as_ref(),
            _ => None,
        };
        let flag = match name {
            "m" => "area",
            other => other,
        };
        let s = given.ok_or_else(|| fail(BAD_INPUT, format!("{} needs --{flag}", id.name())))?;
        out.push((name, rational_arg(flag, s)?));
    }
    if a.t.is_some() && primary.is_none() {
        return Err(fail(BAD_INPUT, format!("--t has no meaning for {}", id.name())));
    }
    let extra = [
        ("area", &a.area, "m"),
        ("v", &a.v, "v"),
        ("w", &a.w, "w"),
        ("u", &a.u, "u"),
        ("n", &a.n, "n"),
    ];
    if let Some((flag, ..)) = extra
        .iter()
        .find(|(_, v, p)| v.is_some() && !id.param_names().contains(p))
    {
        return Err(fail(BAD_INPUT, format!("--{flag} has no meaning for {}", id.name())));
    }
    Ok(out)
}

fn approx_degrees(a: &SurdAngle) -> f64 {
    let c = a.cos.to_f64().unwrap_or(f64::NAN);
    let s = a.sin.to_f64().unwrap_or(f64::NAN) * a.radicand.to_f64().unwrap_or(f64::NAN).sqrt();
    s.atan2(c).to_degrees()
}

fn angle_text(a: &SurdAngle) -> String {
    match a.to_circle() {
        Some(p) => format!("t={}", p.t()),
        None => format!(
            "cos={} sin={}*sqrt({})",
            format_rational(&a.cos),
            format_rational(&a.sin),
            format_rational(&a.radicand)
        ),
    }
}

fn emit_triangles(f: &FamilyInstance, ts: &[FamilyTriangle], format: Format, out: &mut dyn Write) -> io::Result<()> {
    match format {
        Format::Json => {
            for t in ts {
                writeln!(out, "{}", json::family_record(f, t))?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record([
                "family", "index", "point", "a", "b", "c", "alpha", "beta", "gamma", "area", "verified",
            ])?;
            for (i, t) in ts.iter().enumerate() {
                let tri = &t.triangle;
                let mut row = vec![
                    f.id.name().to_string(),
                    i.to_string(),
                    json::point(&t.point).to_string(),
                ];
                row.extend(tri.sides.iter().chain(tri.angles.iter()).map(angle_text));
                row.push(tri.area().map(|a| angle_text(&a)).unwrap_or_default());
                row.push(tri.verify().all_passed().to_string());
                w.write_record(&row)?;
            }
            w.flush()?;
        }
        Format::Pretty => {
            for (i, t) in ts.iter().enumerate() {
                let tri = &t.triangle;
                writeln!(out, "#{i} {} from point {}", f.id.name(), json::point(&t.point))?;
                for (n, a) in ["a", "b", "c", "alpha", "beta", "gamma"]
                    .iter()
                    .zip(tri.sides.iter().chain(tri.angles.iter()))
                {
                    writeln!(
                        out,
                        "  {n:<6} {}  (≈{:.4}°, approximate)",
                        angle_text(a),
                        approx_degrees(a)
                    )?;
                }
                if let Ok(area) = tri.area() {
                    writeln!(
                        out,
                        "  area   {}  (≈{:.4}°, approximate)",
                        angle_text(&area),
                        approx_degrees(&area)
                    )?;
                }
                if let Some(c) = &t.cevian {
                    writeln!(out, "  {:<6} {}", c.kind.name(), angle_text(&c.length))?;
                }
                let r = tri.verify();
                writeln!(
                    out,
                    "  verify {}",
                    if r.all_passed() {
                        "ok".to_string()
                    } else {
                        r.failures().join(", ")
                    }
                )?;
            }
        }
    }
    Ok(())
}

fn gen(a: &GenArgs, out: &mut dyn Write) -> Result<u8, Failure> {
    let id = a.family.id();
    if matches!(id, FamilyId::Equilateral | FamilyId::EquilateralMedian) {
        return Err(fail(
            DEGENERATE,
            format!(
                "{} lives on a rank-0 curve; the only triangle is the all-π/2 one (see `heron theorem {}`)",
                id.name(),
                id.name().replace('_', "-")
            ),
        ));
    }
    if a.count == 0 {
        return Err(fail(BAD_INPUT, "--count must be positive"));
    }
    let pairs = params(a)?;
    if id == FamilyId::Congruent {
        let m = &pairs[0].1;
        if m.abs() == Rational::from_integer(1.into()) || m == &Rational::from_integer(0.into()) {
            return Err(fail(
                DEGENERATE,
                format!(
                    "rank-0/degenerate parameter m = {}: the only rational triangle with this area is the one with all sides and angles π/2",
                    format_rational(m)
                ),
            ));
        }
    }
    let f = FamilyInstance::new(id, &pairs).map_err(family_failure)?;
    let ts = f.generate(a.count, a.cap).map_err(family_failure)?;
    let failed = ts.iter().any(|t| !t.triangle.verify().all_passed());
    emit_triangles(&f, &ts, a.format, out).map_err(|e| fail(BAD_INPUT, e.to_string()))?;
    Ok(if failed { VERIFY_FAILED } else { OK })
}

fn verify(file: &str, format: Format, out: &mut dyn Write) -> Result<u8, Failure> {
    let text = if file == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| fail(BAD_INPUT, e.to_string()))?;
        s
    } else {
        fs::read_to_string(file).map_err(|e| fail(BAD_INPUT, format!("{file}: {e}")))?
    };
    let mut all_ok = true;
    let mut any = false;
    let io_err = |e: io::Error| fail(BAD_INPUT, e.to_string());
    for (i, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        any = true;
        let check = json::parse_line(line)
            .and_then(|v| json::check_record(&v))
            .map_err(|e| fail(BAD_INPUT, format!("line {}: {e}", i + 1)))?;
        all_ok &= check.passed();
        let mut failures = check.report.failures();
        failures.extend(check.mismatches.iter().map(|m| format!("mismatch:{m}")));
        match format {
            Format::Json | Format::Csv => writeln!(
                out,
                "{}",
                serde_json::json!({"line": i + 1, "passed": check.passed(), "failures": failures})
            )
            .map_err(io_err)?,
            Format::Pretty => writeln!(
                out,
                "line {}: {}",
                i + 1,
                if check.passed() {
                    "ok".to_string()
                } else {
                    failures.join(", ")
                }
            )
            .map_err(io_err)?,
        }
    }
    if !any {
        return Err(fail(BAD_INPUT, format!("{file}: no records")));
    }
    Ok(if all_ok { OK } else { VERIFY_FAILED })
}

fn print_value(v: &Value, out: &mut dyn Write) -> Result<(), Failure> {
    writeln!(out, "{v}").map_err(|e| fail(BAD_INPUT, e.to_string()))
}

fn theorem(a: &TheoremArgs, out: &mut dyn Write) -> Result<u8, Failure> {
    let verdict = |holds: bool| if holds { OK } else { VERIFY_FAILED };
    match a.which {
        Theorem::Equilateral => {
            let c = equilateral_certificate(a.height).map_err(family_failure)?;
            print_value(&json::equilateral_certificate(&c), out)?;
            Ok(verdict(c.holds()))
        }
        Theorem::EquilateralMedian => {
            let (side, angle) = equilateral_median_certificates(a.height).map_err(family_failure)?;
            print_value(&json::median_certificate(&side), out)?;
            print_value(&json::median_certificate(&angle), out)?;
            Ok(verdict(side.holds() && angle.holds()))
        }
        Theorem::Gen2 => {
            let c = gen2_certificate().map_err(|e| fail(VERIFY_FAILED, e.to_string()))?;
            if a.latex {
                write!(out, "{}", c.to_latex()).map_err(|e| fail(BAD_INPUT, e.to_string()))?;
            } else {
                print_value(&c.to_json(), out)?;
            }
            Ok(verdict(c.holds()))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { BAD_INPUT } else { OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = match &cli.command {
        Command::Gen(a) => gen(a, &mut out),
        Command::Verify { file, format } => verify(file, *format, &mut out),
        Command::Theorem(a) => theorem(a, &mut out),
    };
    let _ = out.flush();
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("heron: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
