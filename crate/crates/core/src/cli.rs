//! Command-line front end: argument parsing, command execution and deterministic output.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::classify::{class_pairs, min_multiples, SymmetricSpaceId};
use crate::error::{Error, Result};
use crate::liealg::GroupSpec;
use crate::loopfact::{unitary_part, CMat, LoopAssembler};
use crate::rootdata::{diagram_involution, simple_roots, zeta_duals, Weight};
use crate::verify::{grid_points, is_exceptional, run_suite, CheckKind, SuiteOptions};
use crate::weierstrass::{check_extended_solution, example, example_names, family_constraints, ExtendedSolutionData};

/// Exit code for a failed constraint or check.
pub const EXIT_CHECK_FAILED: i32 = 2;
/// Exit code for I/O, parse and schema errors.
pub const EXIT_SCHEMA: i32 = 3;
/// Exit code for numerical degeneracy.
pub const EXIT_DEGENERATE: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "oh", version, about = "Harmonic two-spheres in outer symmetric spaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Roots, simple roots, H_i, beta_j, zeta_j and m_j of a group.
    Tables {
        #[arg(long)]
        group: GroupSpec,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Class pairs (zeta, tau) of harmonic maps into an outer symmetric space.
    Classify {
        #[arg(long)]
        group: GroupSpec,
        #[arg(long)]
        space: SymmetricSpaceId,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Exact extended-solution check of a Weierstrass datum.
    Check {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Dressed loops evaluated at one lambda over a grid of z.
    Dress {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value = "5x5", value_parser = parse_grid)]
        grid: (usize, usize),
        #[arg(long, default_value = "-1", value_parser = parse_complex, allow_hyphen_values = true)]
        lambda: Complex<f64>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Numerical invariant checks on the dressed family.
    Verify {
        #[command(flatten)]
        source: Source,
        /// Run every check that applies to the datum.
        #[arg(long, conflicts_with = "checks")]
        all: bool,
        /// Comma-separated checks: tsigma, psigma, harmonic, flatness, group, sone.
        #[arg(long, value_delimiter = ',')]
        checks: Vec<CheckKind>,
        #[arg(long, default_value = "9x9", value_parser = parse_grid)]
        grid: (usize, usize),
        #[arg(long)]
        tol: Option<f64>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// A built-in Weierstrass datum as JSON, or the list of names.
    Example {
        name: Option<String>,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args, Debug)]
pub struct Source {
    /// Built-in example name.
    #[arg(long, conflicts_with = "input")]
    pub example: Option<String>,
    /// Weierstrass datum JSON file.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct OutputArgs {
    /// Write output to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// `AxB` with positive sides.
pub fn parse_grid(s: &str) -> std::result::Result<(usize, usize), String> {
    let (a, b) = s.split_once(['x', 'X']).ok_or_else(|| format!("grid '{s}' is not of the form AxB"))?;
    let a: usize = a.trim().parse().map_err(|_| format!("bad grid width in '{s}'"))?;
    let b: usize = b.trim().parse().map_err(|_| format!("bad grid height in '{s}'"))?;
    if a == 0 || b == 0 {
        return Err(format!("grid '{s}' is empty"));
    }
    Ok((a, b))
}

/// Complex literal such as `-1`, `0.5+2i`, `-i` or `3e-1-1.5i`.
pub fn parse_complex(s: &str) -> std::result::Result<Complex<f64>, String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || format!("bad complex number '{s}'");
    let Some(body) = t.strip_suffix(['i', 'j']) else {
        return t.parse::<f64>().map(|x| Complex::new(x, 0.0)).map_err(|_| bad());
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        x => x.parse::<f64>().map_err(|_| bad())?,
    };
    let re = re.parse::<f64>().map_err(|_| bad())?;
    Ok(Complex::new(re, im))
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BasepointSingular | Error::SingularLoop | Error::FiberDimensionMismatch { .. } => EXIT_DEGENERATE,
        _ => EXIT_SCHEMA,
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => EXIT_SCHEMA,
            };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    execute(cli)
}

pub fn execute(cli: Cli) -> Outcome {
    let mut diagnostics = Vec::new();
    let (result, out) = match cli.command {
        Command::Tables { group, out } => (tables(&group).map(|v| (render(&v, out.format), 0)), out),
        Command::Classify { group, space, out } => (classify(&group, space).map(|v| (render(&v, out.format), 0)), out),
        Command::Check { source, out } => (
            load(&source)
                .and_then(|d| check(&d))
                .map(|(v, pass)| (render(&v, out.format), if pass { 0 } else { EXIT_CHECK_FAILED })),
            out,
        ),
        Command::Dress { source, grid, lambda, out } => {
            let r = load(&source).and_then(|d| dress_table(&d, grid, lambda)).map(|t| {
                diagnostics.extend(t.skipped.iter().map(|(z, e)| format!("skipped z = {}: {e}", fmt_c(*z))));
                let text = match out.format {
                    Format::Json => canonical_json(&t.to_json()),
                    Format::Csv => t.to_csv(),
                };
                (text, 0)
            });
            (r, out)
        }
        Command::Verify { source, all, checks, grid, tol, out } => {
            let r = load(&source).and_then(|d| verify(&d, all, &checks, grid, tol)).map(|v| {
                let pass = v.as_array().is_some_and(|a| a.iter().all(|r| r["pass"] == Value::Bool(true)));
                (render(&v, out.format), if pass { 0 } else { EXIT_CHECK_FAILED })
            });
            (r, out)
        }
        Command::Example { name, out } => {
            let r = match name {
                Some(n) => example(&n).map(|d| d.to_json()),
                None => Ok(Value::Array(
                    example_names().into_iter().map(|(n, d)| json!({ "name": n, "description": d })).collect(),
                )),
            };
            (r.map(|v| (render(&v, out.format), 0)), out)
        }
    };
    let (text, code) = match result {
        Ok(x) => x,
        Err(e) => {
            return Outcome { code: exit_code(&e), stdout: String::new(), stderr: format!("error: {e}\n") };
        }
    };
    let mut stderr: String = diagnostics.iter().map(|d| format!("{d}\n")).collect();
    let stdout = match &out.out {
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => String::new(),
            Err(e) => {
                stderr.push_str(&format!("error: cannot write {}: {e}\n", path.display()));
                return Outcome { code: EXIT_SCHEMA, stdout: String::new(), stderr };
            }
        },
        None => text,
    };
    Outcome { code, stdout, stderr }
}

fn load(source: &Source) -> Result<ExtendedSolutionData> {
    match (&source.example, &source.input) {
        (Some(name), None) => example(name),
        (None, Some(path)) => {
            let s = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            ExtendedSolutionData::parse_json(&s)
        }
        _ => Err(Error::Schema("give exactly one of --example or --input".into())),
    }
}

fn frac_text(q: &BigRational) -> String {
    q.to_string()
}

fn weight_text(w: &Weight) -> String {
    let mut s = String::new();
    for (i, c) in w.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let sign = if c.is_positive() {
            if s.is_empty() {
                ""
            } else {
                "+"
            }
        } else {
            "-"
        };
        let mag = c.abs();
        let mag = if mag.is_one() { String::new() } else { format!("{mag}*") };
        let _ = write!(s, "{sign}{mag}L{}", i + 1);
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

/// Root data of `g` as JSON.
pub fn tables(g: &GroupSpec) -> Result<Value> {
    let (alpha, h) = simple_roots(g);
    let sf = zeta_duals(g);
    let roots: Vec<Value> =
        g.positive_roots().iter().map(|r| json!({ "label": g.root_label(r), "root": r.to_string() })).collect();
    let central: Vec<Value> = sf
        .zeta
        .iter()
        .map(|z| {
            let d = g.diagonal(&z.coords);
            Value::String(if d.iter().all(|x| x.is_integer()) { "e".into() } else { "-e".into() })
        })
        .collect();
    let cartan = |v: &crate::liealg::CartanVector| json!({ "text": v.to_string(), "coords": v.coords.iter().map(frac_text).collect::<Vec<_>>() });
    let rho = diagram_involution(g).ok().map(|d| d.perm.iter().map(|i| i + 1).collect::<Vec<_>>());
    Ok(json!({
        "group": g.to_string(),
        "rank": g.rank(),
        "positive_roots": roots,
        "simple_roots": alpha.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        "H": h.iter().map(cartan).collect::<Vec<_>>(),
        "beta": sf.beta.iter().map(weight_text).collect::<Vec<_>>(),
        "zeta": sf.zeta.iter().map(cartan).collect::<Vec<_>>(),
        "m": min_multiples(g),
        "exp_2pi_zeta": central,
        "diagram_involution": rho,
    }))
}

pub fn classify(g: &GroupSpec, space: SymmetricSpaceId) -> Result<Value> {
    if space.group() != *g {
        return Err(Error::UnsupportedSpace(format!("{space} is not a space of {g}")));
    }
    let pairs = class_pairs(g, space)?;
    Ok(Value::Array(
        pairs
            .iter()
            .map(|p| {
                json!({
                    "zeta": p.zeta.zeta_coeffs,
                    "zeta_text": p.zeta.cartan(g).to_string(),
                    "tau": p.tau.to_json(),
                    "tau_name": p.tau.name(),
                    "source": p.source.zeta_coeffs,
                    "space": space.to_string(),
                })
            })
            .collect(),
    ))
}

/// Check report of the datum with the constraint sites of its family; the flag is the pass state.
pub fn check(d: &ExtendedSolutionData) -> Result<(Value, bool)> {
    let r = check_extended_solution(d)?;
    let mut v = serde_json::to_value(&r).map_err(|e| Error::Schema(e.to_string()))?;
    let eqs: Vec<String> = r.constraints.iter().map(|c| format!("{} = 0", c.value)).collect();
    v["equations"] = json!(eqs);
    let sites = family_constraints(d)?;
    v["family_constraints"] = serde_json::to_value(&sites).map_err(|e| Error::Schema(e.to_string()))?;
    v["group"] = json!(d.group.to_string());
    v["xi"] = json!(d.xi.zeta_coeffs);
    Ok((v, r.pass))
}

/// Values of the dressed loops at one λ over a grid.
pub struct DressTable {
    pub lambda: Complex<f64>,
    pub grid: (usize, usize),
    pub rows: Vec<DressRow>,
    pub skipped: Vec<(Complex<f64>, Error)>,
}

pub struct DressRow {
    pub z: Complex<f64>,
    pub value: CMat<f64>,
    /// `‖ΦᴴΦ − I‖` at λ, reported when `|λ| = 1`.
    pub unitarity: Option<f64>,
    /// `‖Φ(1) − I‖`.
    pub basepoint: f64,
}

pub fn dress_table(d: &ExtendedSolutionData, grid: (usize, usize), lambda: Complex<f64>) -> Result<DressTable> {
    let asm = LoopAssembler::new(d)?;
    let points = grid_points(grid.0, grid.1);
    let results: Vec<_> = points.par_iter().map(|&z| (z, asm.at(z).and_then(|l| unitary_part(&l)))).collect();
    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    let on_circle = (lambda.norm() - 1.0).abs() < 1e-12;
    for (z, r) in results {
        match r {
            Ok(phi) => {
                let n = phi.size();
                let value = phi.eval(lambda);
                let unitarity = on_circle.then(|| (value.adjoint() * &value - CMat::identity(n, n)).norm());
                let basepoint = (phi.eval(Complex::new(1.0, 0.0)) - CMat::identity(n, n)).norm();
                rows.push(DressRow { z, value, unitarity, basepoint });
            }
            Err(e) if is_exceptional(&e) => skipped.push((z, e)),
            Err(e) => return Err(e),
        }
    }
    if rows.is_empty() {
        return Err(Error::BasepointSingular);
    }
    Ok(DressTable { lambda, grid, rows, skipped })
}

fn c_json(z: Complex<f64>) -> Value {
    json!([z.re, z.im])
}

impl DressTable {
    pub fn to_json(&self) -> Value {
        let points: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                let m: Vec<Vec<Value>> = (0..r.value.nrows())
                    .map(|i| (0..r.value.ncols()).map(|j| c_json(r.value[(i, j)])).collect())
                    .collect();
                json!({ "z": c_json(r.z), "value": m, "unitarity": r.unitarity, "basepoint": r.basepoint })
            })
            .collect();
        let skipped: Vec<Value> =
            self.skipped.iter().map(|(z, e)| json!({ "z": c_json(*z), "error": e.to_string() })).collect();
        json!({
            "lambda": c_json(self.lambda),
            "grid": [self.grid.0, self.grid.1],
            "points": points,
            "skipped": skipped,
        })
    }

    /// Long format: one line per grid point and matrix entry.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("x,y,row,col,re,im\n");
        for r in &self.rows {
            for i in 0..r.value.nrows() {
                for j in 0..r.value.ncols() {
                    let v = r.value[(i, j)];
                    let _ = writeln!(s, "{},{},{i},{j},{},{}", fmt_f(r.z.re), fmt_f(r.z.im), fmt_f(v.re), fmt_f(v.im));
                }
            }
        }
        s
    }
}

pub fn verify(
    d: &ExtendedSolutionData,
    all: bool,
    checks: &[CheckKind],
    grid: (usize, usize),
    tol: Option<f64>,
) -> Result<Value> {
    let kinds: Vec<CheckKind> = if all {
        CheckKind::ALL.iter().copied().filter(|k| k.applies_to(d)).collect()
    } else if checks.is_empty() {
        return Err(Error::Schema("give --all or --checks".into()));
    } else {
        checks.to_vec()
    };
    let mut opts = SuiteOptions { grid, ..SuiteOptions::default() };
    if let Some(t) = tol {
        opts.tol = t;
    }
    let reports = run_suite(d, &kinds, &opts)?;
    serde_json::to_value(reports).map_err(|e| Error::Schema(e.to_string()))
}

/// Seventeen significant digits in scientific notation.
pub fn fmt_f(x: f64) -> String {
    format!("{x:.16e}")
}

fn fmt_c(z: Complex<f64>) -> String {
    format!("{}{:+}i", z.re, z.im)
}

fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Json => canonical_json(v),
        Format::Csv => csv_of(v),
    }
}

/// Pretty JSON with sorted keys and floats at 17 significant digits.
pub fn canonical_json(v: &Value) -> String {
    let mut s = String::new();
    write_json(v, 0, &mut s);
    s.push('\n');
    s
}

fn write_json(v: &Value, indent: usize, s: &mut String) {
    let pad = |k: usize| "  ".repeat(k);
    match v {
        Value::Number(n) if n.is_f64() => s.push_str(&fmt_f(n.as_f64().unwrap_or(f64::NAN))),
        Value::Array(a) if a.is_empty() => s.push_str("[]"),
        Value::Array(a) if a.iter().all(|x| !x.is_array() && !x.is_object()) => {
            s.push('[');
            for (i, x) in a.iter().enumerate() {
                if i > 0 {
                    s.push_str(", ");
                }
                write_json(x, indent, s);
            }
            s.push(']');
        }
        Value::Array(a) => {
            s.push_str("[\n");
            for (i, x) in a.iter().enumerate() {
                s.push_str(&pad(indent + 1));
                write_json(x, indent + 1, s);
                s.push_str(if i + 1 < a.len() { ",\n" } else { "\n" });
            }
            s.push_str(&pad(indent));
            s.push(']');
        }
        Value::Object(m) if m.is_empty() => s.push_str("{}"),
        Value::Object(m) => {
            let sorted: std::collections::BTreeMap<&String, &Value> = m.iter().collect();
            s.push_str("{\n");
            for (i, (k, x)) in sorted.iter().enumerate() {
                s.push_str(&pad(indent + 1));
                s.push_str(&Value::String((*k).clone()).to_string());
                s.push_str(": ");
                write_json(x, indent + 1, s);
                s.push_str(if i + 1 < sorted.len() { ",\n" } else { "\n" });
            }
            s.push_str(&pad(indent));
            s.push('}');
        }
        other => s.push_str(&other.to_string()),
    }
}

/// CSV of an array of flat objects; nested values are written as compact JSON.
fn csv_of(v: &Value) -> String {
    let rows: Vec<Map<String, Value>> = match v {
        Value::Array(a) => a.iter().filter_map(|x| x.as_object().cloned()).collect(),
        Value::Object(m) => vec![m.clone()],
        _ => Vec::new(),
    };
    let mut keys: Vec<String> = rows.iter().flat_map(|r| r.keys().cloned()).collect();
    keys.sort();
    keys.dedup();
    let cell = |x: Option<&Value>| -> String {
        let raw = match x {
            None | Some(Value::Null) => String::new(),
            Some(Value::String(s)) => s.clone(),
            Some(Value::Number(n)) if n.is_f64() => fmt_f(n.as_f64().unwrap_or(f64::NAN)),
            Some(other) => other.to_string(),
        };
        if raw.contains([',', '"', '\n']) {
            format!("\"{}\"", raw.replace('"', "\"\""))
        } else {
            raw
        }
    };
    let mut s = keys.join(",");
    s.push('\n');
    for r in &rows {
        let line: Vec<String> = keys.iter().map(|k| cell(r.get(k))).collect();
        s.push_str(&line.join(","));
        s.push('\n');
    }
    s
}
