//! Command-line front end for the `zetabound` crate.

// `!(x > 0.0)` style guards also reject NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod output;

use std::f64::consts::E;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use zetabound::rs_bounds::{self, c0, c1};
use zetabound::{
    affine_c, asymptotic_constants, check_bound, choose_n, eval_zeta_certified,
    optimal_bound_params, rs_constants, scan_interval, tables, Error, ScanConfig,
};

pub use output::{Cell, Format, OutputRecord};

#[derive(Debug, Parser)]
#[command(
    name = "zetabound",
    version,
    about = "Certified |zeta(1+it)| evaluation and explicit bounds"
)]
pub struct Cli {
    /// Output format; defaults to `table`, or `csv` for scan and figures.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Certified zeta(1+it) at one point.
    Eval {
        #[arg(long)]
        t: f64,
        #[arg(long, default_value_t = 1e-8)]
        r: f64,
    },
    /// beta, v, u with |zeta(1+it)| <= v log t for t >= t0.
    Table1(T0List),
    /// Intercept C with |zeta(1+it)| <= (1/2) log t + C for t >= t0.
    Table2(T0List),
    /// v from the exponential-sum route next to v_tilde = 1/2 + 0.6633/log t0.
    Table3(T0List),
    /// Grid scan of |zeta(1+it)|, optionally checking a bound.
    Scan {
        #[command(flatten)]
        grid: GridArgs,
        /// `vlog:<v>` or `affine:<slope>,<intercept>`.
        #[arg(long)]
        bound: Option<BoundSpec>,
    },
    /// Data behind the plotted figures.
    Figures {
        #[arg(value_enum)]
        name: Figure,
        #[command(flatten)]
        grid: OptionalGrid,
    },
    /// Constants of both routes.
    Constants,
}

#[derive(Debug, Args)]
pub struct T0List {
    /// May be repeated; defaults to the built-in grid.
    #[arg(long = "t0")]
    pub t0: Vec<f64>,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    #[arg(long)]
    pub lo: f64,
    #[arg(long)]
    pub hi: f64,
    #[arg(long, default_value_t = 0.01)]
    pub h: f64,
    #[arg(long, default_value_t = 0.005)]
    pub r: f64,
    /// Maximum number of summed terms.
    #[arg(long, default_value_t = zetabound::verifier::DEFAULT_BUDGET)]
    pub budget: u64,
}

#[derive(Debug, Args)]
pub struct OptionalGrid {
    #[arg(long)]
    pub lo: Option<f64>,
    #[arg(long)]
    pub hi: Option<f64>,
    #[arg(long, default_value_t = 0.01)]
    pub h: f64,
    #[arg(long, default_value_t = 0.005)]
    pub r: f64,
    #[arg(long, default_value_t = zetabound::verifier::DEFAULT_BUDGET)]
    pub budget: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Figure {
    C0,
    C1Sigma0,
    C1Sigma1,
    ZetaVsAffine,
    Ratio,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundSpec {
    VLog(f64),
    Affine { slope: f64, intercept: f64 },
}

impl BoundSpec {
    fn coefficients(self) -> (f64, f64) {
        match self {
            BoundSpec::VLog(v) => (v, 0.0),
            BoundSpec::Affine { slope, intercept } => (slope, intercept),
        }
    }
}

impl FromStr for BoundSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |x: &str| {
            x.trim()
                .parse::<f64>()
                .map_err(|e| format!("bad number {x:?}: {e}"))
        };
        if let Some(v) = s.strip_prefix("vlog:") {
            Ok(BoundSpec::VLog(num(v)?))
        } else if let Some(rest) = s.strip_prefix("affine:") {
            let (a, b) = rest
                .split_once(',')
                .ok_or_else(|| format!("expected affine:<slope>,<intercept>, got {s:?}"))?;
            Ok(BoundSpec::Affine {
                slope: num(a)?,
                intercept: num(b)?,
            })
        } else {
            Err(format!(
                "expected vlog:<v> or affine:<slope>,<intercept>, got {s:?}"
            ))
        }
    }
}

impl std::fmt::Display for BoundSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BoundSpec::VLog(v) => write!(f, "vlog:{v}"),
            BoundSpec::Affine { slope, intercept } => write!(f, "affine:{slope},{intercept}"),
        }
    }
}

/// A finished command: the record to print, notes for stderr and whether
/// every requested bound check passed.
#[derive(Debug)]
pub struct Outcome {
    pub record: OutputRecord,
    pub notes: Vec<String>,
    pub bound_holds: bool,
    pub default_format: Format,
}

impl Outcome {
    fn table(record: OutputRecord) -> Self {
        Outcome {
            record,
            notes: Vec::new(),
            bound_holds: true,
            default_format: Format::Table,
        }
    }

    fn csv(record: OutputRecord) -> Self {
        Outcome {
            default_format: Format::Csv,
            ..Outcome::table(record)
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.bound_holds {
            0
        } else {
            1
        }
    }
}

pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::Domain(_) => 2,
        _ => 3,
    }
}

pub fn run(command: &Command) -> Result<Outcome, Error> {
    match command {
        Command::Eval { t, r } => cmd_eval(*t, *r),
        Command::Table1(list) => cmd_table1(&list.t0),
        Command::Table2(list) => cmd_table2(&list.t0),
        Command::Table3(list) => cmd_table3(&list.t0),
        Command::Scan { grid, bound } => cmd_scan(grid, *bound),
        Command::Figures { name, grid } => cmd_figures(*name, grid),
        Command::Constants => cmd_constants(),
    }
}

fn or_default(list: &[f64], default: Vec<f64>) -> Vec<f64> {
    if list.is_empty() {
        default
    } else {
        list.to_vec()
    }
}

fn reject_below(list: &[f64], min: f64, what: &str) -> Result<(), Error> {
    let bad: Vec<String> = list
        .iter()
        .filter(|&&t| !(t >= min))
        .map(|t| t.to_string())
        .collect();
    if bad.is_empty() {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "{what} needs t0 >= {min}; offending: {}",
            bad.join(", ")
        )))
    }
}

fn joined(list: &[f64]) -> String {
    list.iter()
        .map(|t| format!("{t:e}"))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn cmd_eval(t: f64, r: f64) -> Result<Outcome, Error> {
    if !(r > 0.0) {
        return Err(Error::Domain(format!("r must be positive, got {r}")));
    }
    let n = choose_n(t, r)?;
    let z = eval_zeta_certified(t, n)?;
    let m = z.modulus();
    let mut rec = OutputRecord::new("eval", &["t", "re", "im", "modulus", "err", "n", "ratio"])
        .input("t", t)
        .input("r", r);
    let ratio = if t > 1.0 {
        Cell::Num(m.value / t.ln())
    } else {
        Cell::Missing
    };
    rec.push(vec![
        Cell::Num(t),
        Cell::Num(z.value.re),
        Cell::Num(z.value.im),
        Cell::Num(m.value),
        Cell::Num(m.err),
        Cell::Int(n),
        ratio,
    ]);
    Ok(Outcome::table(rec))
}

pub fn cmd_table1(list: &[f64]) -> Result<Outcome, Error> {
    let list = or_default(list, tables::expsum_t0());
    reject_below(&list, zetabound::expsum::MIN_T0, "table1")?;
    let mut rec = OutputRecord::new("table1", &["t0", "beta", "v", "u"]).input("t0", joined(&list));
    for &t0 in &list {
        let p = optimal_bound_params(t0)?;
        rec.push(vec![
            Cell::Key(t0),
            Cell::Num(p.beta),
            Cell::Num(p.v),
            Cell::Num(p.u),
        ]);
    }
    rec.sort_by_key();
    Ok(Outcome::table(rec))
}

pub fn cmd_table2(list: &[f64]) -> Result<Outcome, Error> {
    let list = or_default(list, tables::affine_t0());
    reject_below(&list, 1.0, "table2")?;
    let mut rec = OutputRecord::new("table2", &["t0", "C"]).input("t0", joined(&list));
    for &t0 in &list {
        rec.push(vec![Cell::Key(t0), Cell::Num(affine_c(t0)?.c)]);
    }
    rec.sort_by_key();
    Ok(Outcome::table(rec))
}

pub fn cmd_table3(list: &[f64]) -> Result<Outcome, Error> {
    let list = or_default(list, tables::expsum_t0());
    reject_below(&list, zetabound::expsum::MIN_T0, "table3")?;
    let mut rec = OutputRecord::new("table3", &["t0", "v", "v_tilde"]).input("t0", joined(&list));
    for &t0 in &list {
        let v = optimal_bound_params(t0)?.v;
        let v_tilde = affine_c(t0)?.v_tilde.map_or(Cell::Missing, Cell::Num);
        rec.push(vec![Cell::Key(t0), Cell::Num(v), v_tilde]);
    }
    rec.sort_by_key();
    Ok(Outcome::table(rec))
}

fn scan_config(lo: f64, hi: f64, h: f64, r: f64, budget: u64) -> Result<ScanConfig, Error> {
    Ok(ScanConfig::new(lo, hi, h, r)?.with_budget(budget))
}

pub fn cmd_scan(grid: &GridArgs, bound: Option<BoundSpec>) -> Result<Outcome, Error> {
    let config = scan_config(grid.lo, grid.hi, grid.h, grid.r, grid.budget)?;
    let mut rec = OutputRecord::new("scan", &["t", "modulus", "err", "ratio", "margin"])
        .input("lo", grid.lo)
        .input("hi", grid.hi)
        .input("h", grid.h)
        .input("r", grid.r)
        .input("bound", bound.map_or("none".to_string(), |b| b.to_string()));
    let mut notes = Vec::new();
    let (report, bound_line, holds) = match bound {
        Some(spec) => {
            let (slope, intercept) = spec.coefficients();
            let result = check_bound(&config, slope, intercept)?;
            notes.push(format!(
                "bound {spec} {} on the grid; worst margin {:.6e} at t = {:.6}",
                if result.holds_on_grid {
                    "holds"
                } else {
                    "fails"
                },
                result.worst_margin,
                result.worst_t
            ));
            notes.push(result.grid_note.to_string());
            (
                result.report,
                Some(zetabound::LinearBound { slope, intercept }),
                result.holds_on_grid,
            )
        }
        None => (scan_interval(&config)?, None, true),
    };
    for p in &report.points {
        let margin = bound_line.map_or(Cell::Missing, |b| Cell::Num(p.margin(&b)));
        rec.push(vec![
            Cell::Num(p.t),
            Cell::Num(p.modulus.value),
            Cell::Num(p.modulus.err),
            Cell::Num(p.ratio),
            margin,
        ]);
    }
    notes.insert(
        0,
        format!(
            "max ratio {:.6} at t = {:.4} over {} points",
            report.max_ratio,
            report.argmax_t,
            report.points.len()
        ),
    );
    Ok(Outcome {
        notes,
        bound_holds: holds,
        ..Outcome::csv(rec)
    })
}

const FIGURE_POINTS: usize = 1001;

pub fn cmd_figures(name: Figure, grid: &OptionalGrid) -> Result<Outcome, Error> {
    let label = name
        .to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string();
    let mut notes = Vec::new();
    let rec = match name {
        Figure::C0 | Figure::C1Sigma0 | Figure::C1Sigma1 => {
            let mut rec = OutputRecord::new(&format!("figures {label}"), &["p", "y", "re", "im"])
                .input("points", FIGURE_POINTS);
            for i in 0..FIGURE_POINTS {
                let p = i as f64 / (FIGURE_POINTS - 1) as f64;
                let z = match name {
                    Figure::C0 => c0(p)?,
                    Figure::C1Sigma0 => c1(p, 0.0)?,
                    _ => c1(p, 1.0)?,
                };
                rec.push(vec![
                    Cell::Num(p),
                    Cell::Num(z.norm()),
                    Cell::Num(z.re),
                    Cell::Num(z.im),
                ]);
            }
            rec
        }
        Figure::ZetaVsAffine | Figure::Ratio => {
            let default_hi = if name == Figure::Ratio { 100.0 } else { 500.0 };
            let (lo, hi) = (grid.lo.unwrap_or(E), grid.hi.unwrap_or(default_hi));
            let config = scan_config(lo, hi, grid.h, grid.r, grid.budget)?;
            let report = scan_interval(&config)?;
            let columns: &[&str] = if name == Figure::Ratio {
                &["t", "y", "err"]
            } else {
                &["t", "y", "err", "affine"]
            };
            let mut rec = OutputRecord::new(&format!("figures {label}"), columns)
                .input("lo", lo)
                .input("hi", hi)
                .input("h", grid.h)
                .input("r", grid.r);
            for p in &report.points {
                let mut row = if name == Figure::Ratio {
                    vec![Cell::Num(p.t), Cell::Num(p.ratio), Cell::Num(p.ratio_err())]
                } else {
                    vec![
                        Cell::Num(p.t),
                        Cell::Num(p.modulus.value),
                        Cell::Num(p.modulus.err),
                    ]
                };
                if name == Figure::ZetaVsAffine {
                    row.push(Cell::Num(0.5 * p.t.ln() + rs_bounds::V_TILDE_INTERCEPT));
                }
                rec.push(row);
            }
            notes.push(zetabound::verifier::GRID_NOTE.to_string());
            rec
        }
    };
    Ok(Outcome {
        notes,
        ..Outcome::csv(rec)
    })
}

pub fn cmd_constants() -> Result<Outcome, Error> {
    let a = asymptotic_constants();
    let k = rs_constants()?;
    let mut rec = OutputRecord::new("constants", &["name", "value"]);
    let rows = [
        ("e0sq", a.e0sq),
        ("lambda1", a.lambda1),
        ("lambda2", a.lambda2),
        ("beta_limit", a.beta_limit),
        ("hc_min", a.hc_min),
        ("b0", k.b0),
        ("b1_sigma0", k.b1_sigma0),
        ("b1_sigma1", k.b1_sigma1),
        ("c_sigma0", k.c_sigma0),
        ("c_sigma1", k.c_sigma1),
        (
            "gamma_minus_half_log_2pi",
            rs_bounds::gamma_minus_half_log_2pi(),
        ),
    ];
    for (name, value) in rows {
        rec.push(vec![Cell::Text(name.into()), Cell::Num(value)]);
    }
    Ok(Outcome::table(rec))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bound_spec_parsing() {
        assert_eq!(
            "vlog:0.5".parse::<BoundSpec>().unwrap(),
            BoundSpec::VLog(0.5)
        );
        assert_eq!(
            "affine:0.5,0.6633".parse::<BoundSpec>().unwrap(),
            BoundSpec::Affine {
                slope: 0.5,
                intercept: 0.6633
            }
        );
        assert!("affine:0.5".parse::<BoundSpec>().is_err());
        assert!("linear:1".parse::<BoundSpec>().is_err());
        assert!("vlog:x".parse::<BoundSpec>().is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code_for(&Error::Domain(String::new())), 2);
        assert_eq!(exit_code_for(&Error::Resource(String::new())), 3);
        assert_eq!(exit_code_for(&Error::Convergence(String::new())), 3);
    }

    #[test]
    fn table1_rejects_small_t0() {
        let err = cmd_table1(&[1e6, 1000.0]).unwrap_err();
        assert!(matches!(err, Error::Domain(ref m) if m.contains("1000")));
    }

    #[test]
    fn rows_sorted_by_key() {
        let out = cmd_table2(&[1e3, 1e1, 1e2]).unwrap();
        let keys: Vec<f64> = out
            .record
            .rows
            .iter()
            .map(|r| match r[0] {
                Cell::Key(x) => x,
                _ => f64::NAN,
            })
            .collect();
        assert_eq!(keys, vec![1e1, 1e2, 1e3]);
    }
}
