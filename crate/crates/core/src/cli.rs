//! Command-line front end. The `uacg` binary is a thin wrapper around
//! [`run`].
//!
//! Exit codes: 0 success, 1 verification or numerical failure, 2 invalid
//! arguments, 3 closed form requested but unavailable.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::analysis::classify::verdict;
use crate::error::Error;
use crate::eval::{self, complete_energy, Method};
use crate::graphs::{Family, GraphSpec};
use crate::linalg::DEFAULT_GROUPING_TOL;
use crate::tables::{self, ComplementFormula, RootRow};
use crate::verify::{self, Scope, ALPHA_GRID};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNAVAILABLE: i32 = 3;

const SIG_DIGITS: usize = 12;

#[derive(Debug, Parser)]
#[command(name = "uacg", version, about = "A_alpha spectra and energies of unitary addition Cayley graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Closed,
    Numeric,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Auto => Method::Auto,
            MethodArg::Closed => Method::Closed,
            MethodArg::Numeric => Method::Numeric,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ScopeArg {
    Closedform,
    Bounds,
    All,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Distinct A_alpha eigenvalues with multiplicities.
    Spectrum {
        /// uacg, unitary-cayley, complete, complement-uacg or complement-unitary-cayley.
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Merge tolerance for numerically computed eigenvalues.
        #[arg(long, default_value_t = DEFAULT_GROUPING_TOL)]
        tol: f64,
    },
    /// A_alpha energy and the shift 2 alpha m / n.
    Energy {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run the invariant suites against the dense eigensolver.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        scope: ScopeArg,
        #[arg(long, default_value_t = 125)]
        nmax: usize,
    },
    /// Regenerate one of the reference tables (1: energies, 2: G_n roots, 3: complement roots).
    Table {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        which: u8,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Use the legacy two-branch complement energy formula.
        #[arg(long)]
        legacy_complement: bool,
    },
    /// Energy against K_n over a uniform alpha grid, as CSV.
    Sweep {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_negative_numbers = true)]
        alpha_start: f64,
        #[arg(long, allow_negative_numbers = true)]
        alpha_end: f64,
        #[arg(long, allow_negative_numbers = true)]
        step: f64,
        #[arg(long, default_value_t = crate::analysis::DEFAULT_CLASSIFY_TOL)]
        tol: f64,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidArgument(_) => EXIT_USAGE,
            Error::ClosedFormUnavailable(_) => EXIT_UNAVAILABLE,
            Error::NoConvergence { .. } | Error::Unsorted(_) => EXIT_FAILURE,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure { code: EXIT_FAILURE, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

/// Parses `args` (program name first) and runs the command against the
/// process's stdout and stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{rendered}") } else { write!(out, "{rendered}") };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Spectrum { family, n, alpha, method, format, tol } => {
            cmd_spectrum(parse_spec(&family, n)?, alpha, method.into(), format, tol, out)
        }
        Command::Energy { family, n, alpha, method, format } => {
            cmd_energy(parse_spec(&family, n)?, alpha, method.into(), format, out)
        }
        Command::Verify { scope, nmax } => cmd_verify(scope, nmax, out),
        Command::Table { which, format, legacy_complement } => {
            let formula = if legacy_complement { ComplementFormula::Legacy } else { ComplementFormula::Exact };
            cmd_table(which, format, formula, out)
        }
        Command::Sweep { family, n, alpha_start, alpha_end, step, tol } => {
            cmd_sweep(parse_spec(&family, n)?, alpha_start, alpha_end, step, tol, out)
        }
    }
}

fn parse_spec(family: &str, n: usize) -> Result<GraphSpec, Failure> {
    let spec = GraphSpec::from_cli(family, n)?;
    if spec.family() == Family::Complete && spec.is_complement() {
        return Err(usage("the complement of a complete graph is edgeless and not supported"));
    }
    Ok(spec)
}

/// Rounds to 12 significant digits and prints the shortest decimal that
/// round-trips, with `-0` normalised to `0`.
pub fn format_sig(x: f64) -> String {
    let r = round_sig(x);
    if r == 0.0 {
        "0".into()
    } else {
        format!("{r}")
    }
}

fn round_sig(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { 0.0 } else { x };
    }
    format!("{:.*e}", SIG_DIGITS - 1, x).parse().unwrap_or(x)
}

/// Fixed-point with `decimals` places, trailing zeros trimmed.
pub fn format_fixed(x: f64, decimals: usize) -> String {
    let s = format!("{x:.decimals$}");
    let s = if s.contains('.') { s.trim_end_matches('0').trim_end_matches('.').to_string() } else { s };
    if s == "-0" {
        "0".into()
    } else {
        s
    }
}

fn round_floats(v: Value) -> Value {
    match v {
        Value::Number(num) if num.is_f64() => {
            let x = round_sig(num.as_f64().unwrap_or(0.0));
            serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number)
        }
        Value::Array(items) => Value::Array(items.into_iter().map(round_floats).collect()),
        Value::Object(map) => Value::Object(map.into_iter().map(|(k, v)| (k, round_floats(v))).collect()),
        other => other,
    }
}

fn write_record(out: &mut dyn Write, command: &str, inputs: Value, results: Value) -> Result<(), Failure> {
    let mut record = Map::new();
    record.insert("command".into(), Value::from(command));
    record.insert("inputs".into(), round_floats(inputs));
    record.insert("results".into(), round_floats(results));
    record.insert("version".into(), Value::from(env!("CARGO_PKG_VERSION")));
    let text = serde_json::to_string_pretty(&Value::Object(record)).map_err(|e| Failure {
        code: EXIT_FAILURE,
        message: e.to_string(),
    })?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn write_csv(out: &mut dyn Write, header: &[&str], rows: &[Vec<String>]) -> Result<(), Failure> {
    let mut s = header.join(",");
    s.push('\n');
    for row in rows {
        s.push_str(&row.join(","));
        s.push('\n');
    }
    out.write_all(s.as_bytes())?;
    Ok(())
}

fn cmd_spectrum(
    spec: GraphSpec,
    alpha: f64,
    method: Method,
    format: Format,
    tol: f64,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let (spectrum, used) = eval::spectrum(spec, alpha, method, tol)?;
    match format {
        Format::Csv => {
            let rows: Vec<Vec<String>> =
                spectrum.pairs().iter().map(|&(v, m)| vec![format_sig(v), m.to_string()]).collect();
            write_csv(out, &["value", "multiplicity"], &rows)?;
        }
        Format::Json => {
            let pairs: Vec<Value> =
                spectrum.pairs().iter().map(|&(v, m)| json!({"value": v, "multiplicity": m})).collect();
            write_record(
                out,
                "spectrum",
                json!({"family": spec.cli_name(), "n": spec.n(), "alpha": alpha, "method": method_name(method), "tol": tol}),
                json!({"method": used.as_str(), "order": spectrum.len(), "m": spec.edge_count(), "pairs": pairs}),
            )?;
        }
    }
    Ok(EXIT_OK)
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Auto => "auto",
        Method::Closed => "closed",
        Method::Numeric => "numeric",
    }
}

fn cmd_energy(spec: GraphSpec, alpha: f64, method: Method, format: Format, out: &mut dyn Write) -> Result<i32, Failure> {
    let r = eval::energy(spec, alpha, method)?;
    match format {
        Format::Csv => write_csv(
            out,
            &["family", "n", "alpha", "m", "shift", "energy", "method"],
            &[vec![
                spec.cli_name(),
                r.n.to_string(),
                format_sig(alpha),
                r.m.to_string(),
                format_sig(r.shift),
                format_sig(r.energy),
                r.method.as_str().into(),
            ]],
        )?,
        Format::Json => write_record(
            out,
            "energy",
            json!({"family": spec.cli_name(), "n": spec.n(), "alpha": alpha, "method": method_name(method)}),
            json!({"energy": r.energy, "shift": r.shift, "m": r.m, "n": r.n, "method": r.method.as_str()}),
        )?,
    }
    Ok(EXIT_OK)
}

fn cmd_verify(scope: ScopeArg, nmax: usize, out: &mut dyn Write) -> Result<i32, Failure> {
    let scope = match scope {
        ScopeArg::Closedform => Scope::Closedform,
        ScopeArg::Bounds => Scope::Bounds,
        ScopeArg::All => Scope::All,
    };
    let report = verify::run(scope, nmax)?;
    for check in &report.checks {
        writeln!(out, "{check}")?;
    }
    for note in &report.notes {
        writeln!(out, "NOTE {note}")?;
    }
    let passed = report.passed();
    writeln!(out, "{}", if passed { "verify: all checks passed" } else { "verify: FAILED" })?;
    Ok(if passed { EXIT_OK } else { EXIT_FAILURE })
}

fn alpha_label(a: f64) -> String {
    format_fixed(a, 4)
}

fn cmd_table(which: u8, format: Format, formula: ComplementFormula, out: &mut dyn Write) -> Result<i32, Failure> {
    match which {
        1 => {
            let rows = tables::energy_table(formula)?;
            let mut header = vec!["family".to_string(), "n".to_string()];
            header.extend(ALPHA_GRID.iter().map(|&a| alpha_label(a)));
            match format {
                Format::Csv => {
                    let body: Vec<Vec<String>> = rows
                        .iter()
                        .map(|r| {
                            let mut cells = vec![r.spec.cli_name(), r.spec.n().to_string()];
                            cells.extend(r.energies.iter().map(|&e| format_fixed(e, 3)));
                            cells
                        })
                        .collect();
                    let header: Vec<&str> = header.iter().map(String::as_str).collect();
                    write_csv(out, &header, &body)?;
                }
                Format::Json => {
                    let body: Vec<Value> = rows
                        .iter()
                        .map(|r| {
                            let energies: Vec<f64> = r.energies.iter().map(|&e| round_fixed(e, 3)).collect();
                            json!({"family": r.spec.cli_name(), "n": r.spec.n(), "energies": energies})
                        })
                        .collect();
                    write_record(
                        out,
                        "table",
                        table_inputs(which, formula),
                        json!({"alphas": ALPHA_GRID, "rows": body}),
                    )?;
                }
            }
        }
        2 | 3 => {
            let rows = if which == 2 { tables::uacg_root_table()? } else { tables::complement_root_table(formula)? };
            write_root_table(which, &rows, format, formula, out)?;
        }
        _ => return Err(usage(format!("unknown table {which}"))),
    }
    Ok(EXIT_OK)
}

fn round_fixed(x: f64, decimals: usize) -> f64 {
    format_fixed(x, decimals).parse().unwrap_or(x)
}

fn table_inputs(which: u8, formula: ComplementFormula) -> Value {
    json!({"which": which, "legacy_complement": formula == ComplementFormula::Legacy})
}

fn write_root_table(
    which: u8,
    rows: &[RootRow],
    format: Format,
    formula: ComplementFormula,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    match format {
        Format::Csv => {
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.n.to_string(),
                        format_fixed(r.alpha, 12),
                        format_fixed(r.energy, 12),
                        format_fixed(r.complete_energy, 12),
                    ]
                })
                .collect();
            write_csv(out, &["n", "alpha", "energy", "complete_energy"], &body)
        }
        Format::Json => {
            let body: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "n": r.n,
                        "alpha": round_fixed(r.alpha, 12),
                        "energy": round_fixed(r.energy, 12),
                        "complete_energy": round_fixed(r.complete_energy, 12),
                    })
                })
                .collect();
            write_record(out, "table", table_inputs(which, formula), json!({"rows": body}))
        }
    }
}

/// `start, start + step, ...` up to `end`. The count is computed up front
/// so accumulated rounding cannot add or drop a point.
pub fn sweep_grid(start: f64, end: f64, step: f64) -> Vec<f64> {
    let count = ((end - start) / step + 1e-9).floor() as usize;
    (0..=count).map(|i| start + i as f64 * step).collect()
}

fn cmd_sweep(spec: GraphSpec, start: f64, end: f64, step: f64, tol: f64, out: &mut dyn Write) -> Result<i32, Failure> {
    if !(0.0 <= start && start < end && end < 1.0) {
        return Err(usage(format!("need 0 <= alpha-start < alpha-end < 1, got [{start}, {end}]")));
    }
    if !(step > 0.0) {
        return Err(usage(format!("step {step} must be > 0")));
    }
    if !(tol > 0.0) {
        return Err(usage(format!("tolerance {tol} must be > 0")));
    }
    let mut rows = Vec::new();
    for alpha in sweep_grid(start, end, step) {
        let e = eval::energy(spec, alpha, Method::Auto)?.energy;
        let k = complete_energy(spec.n(), alpha);
        rows.push(vec![format_sig(alpha), format_sig(e), format_sig(k), verdict(e, k, tol).as_str().into()]);
    }
    write_csv(out, &["alpha", "energy", "complete_energy", "verdict"], &rows)?;
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("uacg").chain(args.iter().copied());
        let code = run_with(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn formatting() {
        assert_eq!(format_sig(14.716_563_314_773_9), "14.7165633148");
        assert_eq!(format_sig(-0.0), "0");
        assert_eq!(format_sig(1e-20), "0.00000000000000000001");
        assert_eq!(format_fixed(10.0, 3), "10");
        assert_eq!(format_fixed(8.6659, 3), "8.666");
        assert_eq!(format_fixed(-0.0001, 3), "0");
        assert_eq!(format_fixed(0.375, 12), "0.375");
    }

    #[test]
    fn sweep_grid_edges() {
        assert_eq!(sweep_grid(0.0, 0.9, 0.1).len(), 10);
        assert_eq!(sweep_grid(0.2, 0.3, 0.5), vec![0.2]);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_capture(&["spectrum", "--family", "uacg", "--n", "15", "--alpha", "0.5", "--method", "closed"]).0, 3);
        assert_eq!(run_capture(&["verify", "--scope", "all", "--nmax", "2"]).0, 2);
        assert_eq!(run_capture(&["energy", "--family", "complement-complete", "--n", "5", "--alpha", "0"]).0, 2);
        assert_eq!(run_capture(&["energy", "--family", "uacg", "--n", "9", "--alpha", "1.5"]).0, 2);
        assert_eq!(run_capture(&["sweep", "--family", "uacg", "--n", "9", "--alpha-start", "0.5", "--alpha-end", "0.2", "--step", "0.1"]).0, 2);
        assert_eq!(run_capture(&["bogus"]).0, 2);
        assert_eq!(run_capture(&["--help"]).0, 0);
    }

    #[test]
    fn spectrum_csv() {
        let (code, out, _) = run_capture(&["spectrum", "--family", "complement-uacg", "--n", "9", "--alpha", "0", "--format", "csv"]);
        assert_eq!(code, 0);
        assert_eq!(out, "value,multiplicity\n3,1\n2,1\n0,4\n-1,2\n-3,1\n");
    }
}
