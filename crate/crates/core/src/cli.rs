//! `trirule` command-line front end.
//!
//! Exit codes: `0` success, `1` a check failed or a domain error, `2` usage error.

use crate::classifier::{
    self, ClassificationReport, ConstraintRecord, DEFAULT_CERTIFY_RANGE, DEFAULT_PROBES,
};
use crate::exactalg::{parse_rational, Rational};
use crate::seqengine::{derive_d, family_value, residual_numerator, FamilyId, SymbolicTable};
use crate::veritool::verify_family;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "trirule",
    version,
    about = "Exact checks of T(mn) = T(m)T(n) + T(m-1)T(n-1)"
)]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Output format on standard output.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    pub format: OutputFormat,

    /// Also write the JSON document to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Zero,
    Half,
    Ceilhalf,
    Period3,
    Triangular,
    All,
}

impl FamilyArg {
    fn families(self) -> Vec<FamilyId> {
        match self {
            FamilyArg::Zero => vec![FamilyId::Zero],
            FamilyArg::Half => vec![FamilyId::Half],
            FamilyArg::Ceilhalf => vec![FamilyId::CeilHalf],
            FamilyArg::Period3 => vec![FamilyId::Period3],
            FamilyArg::Triangular => vec![FamilyId::Triangular],
            FamilyArg::All => FamilyId::ALL.to_vec(),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Derive T(3) as a rational function of c = T(2).
    DeriveD,
    /// Run the full completeness analysis.
    Classify {
        /// Probe pairs, e.g. `3,3;3,5`.
        #[arg(long, value_parser = parse_pairs)]
        probes: Option<Pairs>,
        /// Brute-force range used to certify the closed branches.
        #[arg(long, default_value_t = DEFAULT_CERTIFY_RANGE, value_parser = clap::value_parser!(u64).range(1..))]
        range: u64,
    },
    /// Exhaustively verify the rule for a family on 1 <= m, n <= max.
    Verify {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max: u64,
    },
    /// Evaluate the symbolic T(n) at a rational c.
    Eval {
        #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
        c: Rational,
        #[arg(long)]
        n: u64,
    },
    /// Print n, T(n) for a family.
    Table {
        #[arg(long, value_parser = parse_family)]
        family: FamilyId,
        #[arg(long)]
        max: u64,
    },
    /// Print constraint numerators with rational roots factored out.
    Constraints {
        #[arg(long, value_parser = parse_pairs)]
        pairs: Pairs,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pairs(pub Vec<(u64, u64)>);

fn parse_pairs(text: &str) -> Result<Pairs, String> {
    let mut out = Vec::new();
    for item in text.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        let (m, n) = item
            .split_once(',')
            .ok_or_else(|| format!("pair `{item}` is not of the form m,n"))?;
        let m: u64 = m
            .trim()
            .parse()
            .map_err(|_| format!("bad index in `{item}`"))?;
        let n: u64 = n
            .trim()
            .parse()
            .map_err(|_| format!("bad index in `{item}`"))?;
        if m < 2 || n < 2 {
            return Err(format!("pair `{item}` needs both components >= 2"));
        }
        out.push((m, n));
    }
    if out.is_empty() {
        return Err("no pairs given".into());
    }
    Ok(Pairs(out))
}

fn parse_rational_arg(text: &str) -> Result<Rational, String> {
    parse_rational(text)
}

fn parse_family(text: &str) -> Result<FamilyId, String> {
    text.parse()
}

/// Result of a command: text for stdout, the JSON document, and success.
struct Outcome {
    text: String,
    json: Value,
    ok: bool,
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(&config) {
        Ok(outcome) => {
            let body = match config.format {
                OutputFormat::Text => outcome.text,
                OutputFormat::Json => render_json(&outcome.json),
            };
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(body.as_bytes());
            if let Some(path) = &config.out {
                if let Err(e) = std::fs::write(path, render_json(&outcome.json)) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return EXIT_FAILED;
                }
            }
            if outcome.ok {
                EXIT_OK
            } else {
                EXIT_FAILED
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            EXIT_FAILED
        }
    }
}

fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn execute(config: &CliConfig) -> Result<Outcome, String> {
    let fail_fast = config.format == OutputFormat::Text && config.out.is_none();
    match &config.command {
        Command::DeriveD => {
            let d = derive_d().map_err(|e| e.to_string())?;
            Ok(Outcome {
                text: format!("{d}\n"),
                json: json!({ "d": d.to_string(), "numerator": d.num().to_string(), "denominator": d.den().to_string() }),
                ok: true,
            })
        }
        Command::Classify { probes, range } => {
            let probes = probes
                .as_ref()
                .map_or(DEFAULT_PROBES.to_vec(), |p| p.0.clone());
            let mut table = SymbolicTable::new();
            let report =
                classifier::classify(&mut table, &probes, *range).map_err(|e| e.to_string())?;
            Ok(Outcome {
                text: classify_text(&report, *range),
                json: serde_json::to_value(&report).map_err(|e| e.to_string())?,
                ok: report.passed(),
            })
        }
        Command::Verify { family, max } => {
            let mut text = String::new();
            let mut reports = Vec::new();
            let mut ok = true;
            for f in family.families() {
                let report = verify_family(f, *max);
                text.push_str(&format!(
                    "{}: range {}, checked {}, failures: {}\n",
                    report.subject,
                    report.range,
                    report.checked,
                    report.failures.len()
                ));
                for fail in report.failures.iter().take(5) {
                    text.push_str(&format!(
                        "  T({}*{}) = {} but T(m)T(n) + T(m-1)T(n-1) = {}\n",
                        fail.m, fail.n, fail.lhs, fail.rhs
                    ));
                }
                ok &= report.passed();
                reports.push(report);
                if !ok && fail_fast {
                    break;
                }
            }
            let json = if reports.len() == 1 {
                serde_json::to_value(&reports[0])
            } else {
                serde_json::to_value(&reports)
            }
            .map_err(|e| e.to_string())?;
            Ok(Outcome { text, json, ok })
        }
        Command::Eval { c, n } => {
            let mut table = SymbolicTable::new();
            let symbolic = table.get(*n).map_err(|e| e.to_string())?;
            let value = symbolic
                .eval(c)
                .ok_or_else(|| format!("c = {c} is a pole of T({n})"))?;
            Ok(Outcome {
                text: format!("{value}\n"),
                json: json!({
                    "c": c.to_string(),
                    "n": n,
                    "value": value.to_string(),
                    "symbolic": symbolic.to_string(),
                }),
                ok: true,
            })
        }
        Command::Table { family, max } => {
            let rows: Vec<(u64, Rational)> =
                (0..=*max).map(|n| (n, family_value(*family, n))).collect();
            let text = rows.iter().map(|(n, v)| format!("{n} {v}\n")).collect();
            let json_rows: Vec<Value> = rows
                .iter()
                .map(|(n, v)| json!({ "n": n, "value": v.to_string() }))
                .collect();
            Ok(Outcome {
                text,
                json: json!({ "family": family.name(), "rows": json_rows }),
                ok: true,
            })
        }
        Command::Constraints { pairs } => {
            let mut table = SymbolicTable::new();
            let mut records = Vec::new();
            for &(m, n) in &pairs.0 {
                let num = residual_numerator(&mut table, m, n).map_err(|e| e.to_string())?;
                records.push(ConstraintRecord::new(m, n, num));
            }
            let text = records.iter().map(constraint_text).collect();
            Ok(Outcome {
                text,
                json: serde_json::to_value(&records).map_err(|e| e.to_string())?,
                ok: true,
            })
        }
    }
}

fn constraint_text(c: &ConstraintRecord) -> String {
    let mut s = format!("pair {},{}\n", c.m, c.n);
    if c.is_trivial() {
        s.push_str("  residual: 0 (holds identically)\n");
        return s;
    }
    s.push_str(&format!("  numerator: {}\n", c.numerator));
    let factors: Vec<String> = c.roots.iter().map(classifier::root_factor).collect();
    s.push_str(&format!("  factors: {}\n", factors.join(", ")));
    s.push_str(&format!("  cofactor: {}\n", c.cofactor));
    s
}

fn classify_text(r: &ClassificationReport, range: u64) -> String {
    let mut s = format!("d = {}\n", r.d_formula);
    for b in &r.branches {
        let cert = match b.certified {
            Some(true) => format!(" [certified to {range}]"),
            Some(false) => format!(" [FAILED certification to {range}]"),
            None => String::new(),
        };
        s.push_str(&format!(
            "branch {}: {}{cert}\n",
            b.branch.label(),
            b.conclusion
        ));
    }
    for c in &r.constraints {
        if c.is_trivial() {
            s.push_str(&format!(
                "constraint ({},{}): 0 (holds identically)\n",
                c.m, c.n
            ));
            continue;
        }
        let roots: Vec<String> = c.roots.iter().map(|x| x.root.to_string()).collect();
        s.push_str(&format!(
            "constraint ({},{}): roots [{}], cofactor {}\n",
            c.m,
            c.n,
            roots.join(", "),
            c.cofactor
        ));
    }
    s.push_str(&format!("probe gcd: {}\n", r.probe_gcd));
    let surviving: Vec<String> = r.surviving_c.iter().map(|c| c.to_string()).collect();
    s.push_str(&format!("surviving c: {{{}}}\n", surviving.join(", ")));
    for (c, f) in &r.family_map {
        let name = f.map_or("unmatched", FamilyId::name);
        s.push_str(&format!("  c = {c} -> {name}\n"));
    }
    s.push_str(&format!(
        "residual cofactor check: {}\n",
        r.residual_cofactor_check
    ));
    let cross = r
        .cofactor_gcd_check
        .map_or("not run".to_string(), |b| b.to_string());
    s.push_str(&format!("cofactor gcd check: {cross}\n"));
    for note in &r.notes {
        s.push_str(&format!("note: {note}\n"));
    }
    s.push_str(if r.passed() {
        "result: complete\n"
    } else {
        "result: INCOMPLETE\n"
    });
    s
}
