//! `faulhaber` — exact power-sum polynomials from the command line.
//!
//! Exit status: 0 on success, 1 when `verify` finds failures, 2 for
//! usage errors. Data goes to stdout, diagnostics to stderr, and JSON
//! is always emitted whole or not at all.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use faulhaber::bench::{run_bench, sample_k_values, BenchRow};
use faulhaber::{
    center_to_power, center_to_s1, coeffs_by_method, coeffs_by_recurrence, evaluate,
    explicit_center_polynomial, generate, odd_from_even, run_verification, s1_to_center, Basis,
    FaulhaberCoeffs, Method, PolyForm, Rational,
};

#[derive(Parser)]
#[command(name = "faulhaber", version, about = "Exact power-sum polynomials S_p(n) = 1^p + ... + n^p")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Center-form coefficients of S_p by a chosen method
    Coeffs {
        /// Degree p >= 1
        #[arg(long)]
        p: u32,
        #[arg(long, value_enum, default_value_t = MethodArg::Recurrence)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// S_p as a full polynomial in one basis
    Poly {
        /// Degree p (p >= 0 for power, p >= 1 for center, p >= 2 for s1)
        #[arg(long)]
        p: u32,
        #[arg(long, value_enum, default_value_t = BasisArg::Center)]
        basis: BasisArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Generate S_p in one basis and convert it to another
    Convert {
        #[arg(long)]
        p: u32,
        #[arg(long, value_enum)]
        from: BasisArg,
        #[arg(long, value_enum)]
        to: BasisArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Evaluate S_p exactly at a rational point
    Eval {
        #[arg(long)]
        p: u32,
        /// Argument, an integer literal or a fraction "a/b"
        #[arg(long, allow_hyphen_values = true)]
        n: String,
        /// Basis to evaluate in; defaults to center (power for p = 0)
        #[arg(long, value_enum)]
        basis: Option<BasisArg>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Cross-validate all methods and bases against the integer oracle
    Verify {
        #[arg(long, default_value_t = 11)]
        p_max: u32,
        #[arg(long, default_value_t = 50)]
        n_max: u64,
        #[arg(long, default_value_t = 5)]
        k_max: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Measure method cost: wall time and rational-operation counts
    Bench {
        #[arg(long)]
        k_max: u32,
        /// Comma-separated subset of recurrence,determinant,witmer,explicit
        #[arg(long, value_delimiter = ',')]
        methods: Option<Vec<BenchMethodArg>>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Recurrence,
    Determinant,
    Witmer,
    Explicit,
    /// Transfer from the even degree below (odd p >= 3 only)
    Derivative,
    /// The closed Bernoulli-sum formula for the whole polynomial
    ClosedForm,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BenchMethodArg {
    Recurrence,
    Determinant,
    Witmer,
    Explicit,
}

impl From<BenchMethodArg> for Method {
    fn from(m: BenchMethodArg) -> Method {
        match m {
            BenchMethodArg::Recurrence => Method::Recurrence,
            BenchMethodArg::Determinant => Method::Determinant,
            BenchMethodArg::Witmer => Method::Witmer,
            BenchMethodArg::Explicit => Method::Explicit,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BasisArg {
    Power,
    Center,
    S1,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Basis {
        match b {
            BasisArg::Power => Basis::Power,
            BasisArg::Center => Basis::Center,
            BasisArg::S1 => Basis::S1,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Coeffs { p, method, format } => {
            let coeffs = compute_coeffs(p, method)?;
            println!("{}", render_coeffs(&coeffs, format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Poly { p, basis, format } => {
            let form = generate(p, basis.into()).map_err(|e| e.to_string())?;
            println!("{}", render_poly(&form, format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Convert { p, from, to, format } => {
            let source = generate(p, from.into()).map_err(|e| e.to_string())?;
            let converted = convert(&source, to.into())?;
            println!("{}", render_poly(&converted, format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Eval { p, n, basis, format } => {
            let n: Rational = n.parse().map_err(|e: faulhaber::Error| e.to_string())?;
            let basis = basis.map(Basis::from).unwrap_or(if p == 0 {
                Basis::Power
            } else {
                Basis::Center
            });
            let form = generate(p, basis).map_err(|e| e.to_string())?;
            let value = evaluate(&form, &n);
            let rendered = match format {
                Format::Text => value.to_string(),
                Format::Latex => latex_rational(&value),
                Format::Json => format!(
                    r#"{{"p":{p},"basis":{},"n":{},"value":{}}}"#,
                    serde_json::to_string(basis.name()).unwrap(),
                    serde_json::to_string(&n.to_string()).unwrap(),
                    serde_json::to_string(&value.to_string()).unwrap(),
                ),
            };
            println!("{rendered}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { p_max, n_max, k_max, format } => {
            if p_max < 1 || n_max < 1 || k_max < 1 {
                return Err("verify ranges must be at least 1".to_string());
            }
            let report = run_verification(p_max, n_max, k_max);
            match format {
                Format::Text => print!("{}", report.table()),
                Format::Json => println!("{}", report.to_json()),
                Format::Latex => print!("{}", verify_latex(&report)),
            }
            if report.is_success() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Command::Bench { k_max, methods, format } => {
            if k_max < 1 {
                return Err("bench requires --k-max >= 1".to_string());
            }
            let methods: Vec<Method> = match methods {
                Some(list) if list.is_empty() => {
                    return Err("bench requires at least one method".to_string())
                }
                Some(list) => list.into_iter().map(Method::from).collect(),
                None => Method::ALL.to_vec(),
            };
            let rows = run_bench(&sample_k_values(k_max), &methods);
            match format {
                Format::Text => print!("{}", bench_table(&rows)),
                Format::Json => println!("{}", bench_json(&rows)),
                Format::Latex => print!("{}", bench_latex(&rows)),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn compute_coeffs(p: u32, method: MethodArg) -> Result<FaulhaberCoeffs, String> {
    match method {
        MethodArg::Recurrence => coeffs_by_method(p, Method::Recurrence),
        MethodArg::Determinant => coeffs_by_method(p, Method::Determinant),
        MethodArg::Witmer => coeffs_by_method(p, Method::Witmer),
        MethodArg::Explicit => coeffs_by_method(p, Method::Explicit),
        MethodArg::Derivative => {
            if p < 3 || p % 2 == 0 {
                return Err(format!(
                    "method derivative applies only to odd p >= 3, got p = {p}"
                ));
            }
            let even = coeffs_by_recurrence(p - 1).map_err(|e| e.to_string())?;
            return odd_from_even(&even).map_err(|e| e.to_string());
        }
        MethodArg::ClosedForm => {
            return match explicit_center_polynomial(p).map_err(|e| e.to_string())? {
                PolyForm::Center(c) => Ok(c),
                _ => unreachable!("closed form is a center polynomial"),
            };
        }
    }
    .map_err(|e| e.to_string())
}

fn convert(source: &PolyForm, to: Basis) -> Result<PolyForm, String> {
    if source.basis() == to {
        return Ok(source.clone());
    }
    match (source.basis(), to) {
        (Basis::Center, Basis::Power) => center_to_power(source).map_err(|e| e.to_string()),
        (Basis::Center, Basis::S1) => center_to_s1(source).map_err(|e| e.to_string()),
        (Basis::S1, Basis::Center) => s1_to_center(source).map_err(|e| e.to_string()),
        (from, to) => Err(format!("no conversion path from {from} to {to}")),
    }
}

fn latex_rational(r: &Rational) -> String {
    let mag = r.abs();
    let sign = if r.is_negative() { "-" } else { "" };
    if mag.is_integer() {
        format!("{sign}{mag}")
    } else {
        format!("{sign}\\frac{{{}}}{{{}}}", mag.numer(), mag.denom())
    }
}

/// Coefficients listed f_k first, matching the usual presentation;
/// JSON stays in ascending storage order.
fn render_coeffs(c: &FaulhaberCoeffs, format: Format) -> String {
    match format {
        Format::Json => c.to_json(),
        Format::Text => {
            let mut lines = Vec::new();
            lines.push(format!("S_{} center-form coefficients (N = n + 1/2):", c.p));
            for (m, fm) in c.f.iter().enumerate().rev() {
                lines.push(format!("f_{m} = {fm}"));
            }
            if let Some(constant) = &c.constant {
                lines.push(format!("c_{} = {constant}", c.p));
            }
            lines.join("\n")
        }
        Format::Latex => {
            let mut lines = Vec::new();
            for (m, fm) in c.f.iter().enumerate().rev() {
                lines.push(format!("f_{{{m}}}^{{({})}} = {}", c.p, latex_rational(fm)));
            }
            if let Some(constant) = &c.constant {
                lines.push(format!("c_{{{}}} = {}", c.p, latex_rational(constant)));
            }
            lines.join(" \\\\\n")
        }
    }
}

fn render_poly(form: &PolyForm, format: Format) -> String {
    match format {
        Format::Text => form.text(),
        Format::Json => form.to_json(),
        Format::Latex => form.latex(),
    }
}

fn verify_latex(report: &faulhaber::VerifyReport) -> String {
    let mut out = String::new();
    out.push_str("\\begin{tabular}{llrrr}\n");
    out.push_str(&format!(
        "\\multicolumn{{5}}{{l}}{{checks: {}, failures: {}}} \\\\\n",
        report.checks_run,
        report.failures.len()
    ));
    if !report.failures.is_empty() {
        out.push_str("check & $p$ & index & expected & actual \\\\\n\\hline\n");
        for f in &report.failures {
            out.push_str(&format!(
                "{} & {} & {} & {} & {} \\\\\n",
                f.check,
                f.p,
                f.index,
                latex_rational(&f.expected),
                latex_rational(&f.actual)
            ));
        }
    }
    out.push_str("\\end{tabular}\n");
    out
}

fn wall_ms(row: &BenchRow) -> f64 {
    row.wall.as_secs_f64() * 1e3
}

fn bench_table(rows: &[BenchRow]) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{:>5} {:>5} {:<12} {:>12} {:>10} {:>10} {:>10} {:>10} {:>10}  {:<16}\n",
        "k", "p", "method", "wall_ms", "add", "sub", "mul", "div", "total", "checksum"
    ));
    for r in rows {
        out.push_str(&format!(
            "{:>5} {:>5} {:<12} {:>12.3} {:>10} {:>10} {:>10} {:>10} {:>10}  {:016x}\n",
            r.k,
            r.p,
            r.method.name(),
            wall_ms(r),
            r.ops.add,
            r.ops.sub,
            r.ops.mul,
            r.ops.div,
            r.ops.total(),
            r.checksum
        ));
    }
    out
}

fn bench_json(rows: &[BenchRow]) -> String {
    let entries: Vec<String> = rows
        .iter()
        .map(|r| {
            format!(
                r#"{{"k":{},"p":{},"method":"{}","wall_ms":{:.3},"ops":{{"add":{},"sub":{},"mul":{},"div":{},"total":{}}},"checksum":"{:016x}"}}"#,
                r.k,
                r.p,
                r.method.name(),
                wall_ms(r),
                r.ops.add,
                r.ops.sub,
                r.ops.mul,
                r.ops.div,
                r.ops.total(),
                r.checksum
            )
        })
        .collect();
    format!(r#"{{"rows":[{}]}}"#, entries.join(","))
}

fn bench_latex(rows: &[BenchRow]) -> String {
    let mut out = String::new();
    out.push_str("\\begin{tabular}{rrlrrr}\n");
    out.push_str("$k$ & $p$ & method & wall (ms) & rational ops & checksum \\\\\n\\hline\n");
    for r in rows {
        out.push_str(&format!(
            "{} & {} & {} & {:.3} & {} & \\texttt{{{:016x}}} \\\\\n",
            r.k,
            r.p,
            r.method.name(),
            wall_ms(r),
            r.ops.total(),
            r.checksum
        ));
    }
    out.push_str("\\end{tabular}\n");
    out
}
